//! Valence automata: finite automata whose edges carry both a register
//! element of an owner semigroup and a word over a finite alphabet.
//!
//! A word `w` is accepted when some initial-to-terminal path spells `w` on
//! the word track and has register product `x` with `x0 x` in the terminal
//! set for some `x0` in the initial set. The empty path accepts only for
//! monoid owners (it carries the identity register).
//!
//! Every transformation in this module preserves the accepted language; the
//! test suites certify this against `language_dfa` on finite owners.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::backend::{Elem, Semigroup};
use crate::error::{Error, Result};
use crate::rational::{
    extract_component, invert_automaton, zero_in_subset, RationalSubset, SAutomaton,
};
use crate::rees::{rees_decompose, ReesSemigroup};
use crate::regular::{Dfa, Equivalence, Nfa};
use crate::semigroup::{FiniteSemigroup, Subset};

/// An edge of a valence automaton. `register: None` means the edge leaves
/// the register untouched (used for word-splitting in owners without an
/// identity); `word: None` is an epsilon move on the word track.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VEdge {
    pub from: usize,
    pub register: Option<Elem>,
    pub word: Option<usize>,
    pub to: usize,
}

#[derive(Clone, Debug)]
pub struct ValenceAutomaton {
    pub owner: Semigroup,
    pub alphabet: Vec<String>,
    pub vertices: usize,
    pub initial: usize,
    pub terminal: Vec<bool>,
    pub edges: Vec<VEdge>,
    pub x0: RationalSubset,
    pub x1: RationalSubset,
}

/// Outcome of a (possibly bounded) acceptance query.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Acceptance {
    Yes,
    No,
    Inconclusive,
}

/// The language of a valence automaton: exact for finite owners, a bounded
/// but sound acceptance procedure otherwise.
#[derive(Clone, Debug)]
pub enum LanguageHandle {
    Exact(Dfa),
    Bounded {
        machine: ValenceAutomaton,
        budget: usize,
    },
}

impl LanguageHandle {
    pub fn accepts(&self, word: &[usize]) -> Result<Acceptance> {
        match self {
            LanguageHandle::Exact(d) => {
                if word.iter().any(|&s| s >= d.alphabet.len()) {
                    return Err(Error::AlphabetMismatch);
                }
                Ok(if d.accepts(word) {
                    Acceptance::Yes
                } else {
                    Acceptance::No
                })
            }
            LanguageHandle::Bounded { machine, budget } => machine.accepts(word, Some(*budget)),
        }
    }

    /// Words accepted with certainty, up to the given length, in length-lex
    /// order.
    pub fn enumerate(&self, max_len: usize) -> Result<Vec<Vec<usize>>> {
        let k = match self {
            LanguageHandle::Exact(d) => d.alphabet.len(),
            LanguageHandle::Bounded { machine, .. } => machine.alphabet.len(),
        };
        let mut out = Vec::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for len in 0..=max_len {
            for w in &layer {
                if self.accepts(w)? == Acceptance::Yes {
                    out.push(w.clone());
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for w in &layer {
                for sym in 0..k {
                    let mut v = w.clone();
                    v.push(sym);
                    next.push(v);
                }
            }
            layer = next;
        }
        Ok(out)
    }
}

impl ValenceAutomaton {
    /// Builds a valence automaton from edges carrying arbitrary words.
    /// Multi-letter words are split into single letters at load time by
    /// inserting fresh vertices; the register rides on the first split edge
    /// and the continuations carry the owner's identity (or nothing, for
    /// owners without one).
    pub fn new(
        owner: Semigroup,
        alphabet: Vec<String>,
        vertices: usize,
        initial: usize,
        terminal: impl IntoIterator<Item = usize>,
        edges: Vec<(usize, Elem, Vec<usize>, usize)>,
        x0: RationalSubset,
        x1: RationalSubset,
    ) -> Result<Self> {
        if initial >= vertices {
            return Err(Error::IndexOutOfRange);
        }
        if x0.owner() != &owner || x1.owner() != &owner {
            return Err(Error::OwnerMismatch);
        }
        let mut term = vec![false; vertices];
        for t in terminal {
            if t >= vertices {
                return Err(Error::IndexOutOfRange);
            }
            term[t] = true;
        }
        let continuation = owner.identity();
        let mut next_vertex = vertices;
        let mut out = Vec::new();
        for (from, register, word, to) in edges {
            if from >= vertices || to >= vertices {
                return Err(Error::IndexOutOfRange);
            }
            if !owner.contains(&register) {
                return Err(Error::InvalidElement);
            }
            if word.iter().any(|&s| s >= alphabet.len()) {
                return Err(Error::AlphabetMismatch);
            }
            match word.len() {
                0 => out.push(VEdge {
                    from,
                    register: Some(register),
                    word: None,
                    to,
                }),
                1 => out.push(VEdge {
                    from,
                    register: Some(register),
                    word: Some(word[0]),
                    to,
                }),
                _ => {
                    let mut cur = from;
                    for (k, &sym) in word.iter().enumerate() {
                        let last = k + 1 == word.len();
                        let target = if last { to } else { next_vertex };
                        out.push(VEdge {
                            from: cur,
                            register: if k == 0 {
                                Some(register.clone())
                            } else {
                                continuation.clone()
                            },
                            word: Some(sym),
                            to: target,
                        });
                        if !last {
                            next_vertex += 1;
                            cur = target;
                        }
                    }
                }
            }
        }
        term.resize(next_vertex, false);
        Ok(ValenceAutomaton {
            owner,
            alphabet,
            vertices: next_vertex,
            initial,
            terminal: term,
            edges: out,
            x0,
            x1,
        })
    }

    fn out_edges(&self, q: usize) -> impl Iterator<Item = &VEdge> {
        self.edges.iter().filter(move |e| e.from == q)
    }

    /// Acceptance of a single word. Exact for finite owners; for infinite
    /// owners a bounded configuration search with the given epsilon-move
    /// budget per path (default `2 |Q| (|w|+1)`), returning `Inconclusive`
    /// when the bound binds.
    pub fn accepts(&self, word: &[usize], budget: Option<usize>) -> Result<Acceptance> {
        if word.iter().any(|&s| s >= self.alphabet.len()) {
            return Err(Error::AlphabetMismatch);
        }
        let seeds = self.x0.materialize()?.to_vec();
        let monoid = self.owner.is_monoid();
        let exact = self.owner.is_finite();
        let budget = budget.unwrap_or(2 * self.vertices.max(1) * (word.len() + 1));
        // configurations (vertex, register value, letters consumed, moved),
        // mapped to the fewest epsilon moves used to reach them
        let mut best: BTreeMap<(usize, Elem, usize, bool), usize> = BTreeMap::new();
        let mut frontier: Vec<(usize, Elem, usize, bool, usize)> = Vec::new();
        for x0 in seeds {
            best.insert((self.initial, x0.clone(), 0, false), 0);
            frontier.push((self.initial, x0, 0, false, 0));
        }
        let mut truncated = false;
        while let Some((q, val, pos, moved, eps)) = frontier.pop() {
            if pos == word.len()
                && self.terminal[q]
                && (moved || monoid)
                && self.x1.contains(&val)?
            {
                return Ok(Acceptance::Yes);
            }
            for e in self.out_edges(q) {
                let (npos, neps) = match e.word {
                    None => {
                        if exact {
                            (pos, 0)
                        } else if eps + 1 > budget {
                            truncated = true;
                            continue;
                        } else {
                            (pos, eps + 1)
                        }
                    }
                    Some(sym) => {
                        if pos >= word.len() || word[pos] != sym {
                            continue;
                        }
                        (pos + 1, eps)
                    }
                };
                let nval = match &e.register {
                    None => val.clone(),
                    Some(r) => self.owner.mul(&val, r)?,
                };
                let key = (e.to, nval, npos, true);
                let better = best.get(&key).map_or(true, |&prev| neps < prev);
                if better {
                    best.insert(key.clone(), neps);
                    frontier.push((key.0, key.1, key.2, key.3, neps));
                }
            }
        }
        Ok(if truncated {
            Acceptance::Inconclusive
        } else {
            Acceptance::No
        })
    }

    /// The reachable configuration NFA over the word track; finite owners
    /// only. State 0 is a synthetic start with epsilon edges to each
    /// `(initial vertex, x0)` configuration.
    pub fn language_nfa(&self) -> Result<Nfa> {
        if !self.owner.is_finite() {
            return Err(Error::BackendNotFinite);
        }
        let seeds = self.x0.materialize()?.to_vec();
        let monoid = self.owner.is_monoid();
        let mut index: BTreeMap<(usize, Elem, bool), usize> = BTreeMap::new();
        let mut order: Vec<(usize, Elem, bool)> = Vec::new();
        let mut transitions: Vec<(usize, Option<usize>, usize)> = Vec::new();
        for x0 in seeds {
            let key = (self.initial, x0, false);
            if !index.contains_key(&key) {
                index.insert(key.clone(), order.len());
                order.push(key.clone());
            }
            transitions.push((0, None, index[&key] + 1));
        }
        let mut cursor = 0;
        while cursor < order.len() {
            let (q, val, _) = order[cursor].clone();
            let from_id = cursor + 1;
            for e in self.out_edges(q) {
                let nval = match &e.register {
                    None => val.clone(),
                    Some(r) => self.owner.mul(&val, r)?,
                };
                let key = (e.to, nval, true);
                let to_id = match index.get(&key) {
                    Some(&id) => id + 1,
                    None => {
                        let id = order.len();
                        index.insert(key.clone(), id);
                        order.push(key);
                        id + 1
                    }
                };
                transitions.push((from_id, e.word, to_id));
            }
            cursor += 1;
        }
        let mut accepting = vec![false; order.len() + 1];
        for (key, &id) in &index {
            let (q, val, moved) = key;
            if self.terminal[*q] && (*moved || monoid) && self.x1.contains(val)? {
                accepting[id + 1] = true;
            }
        }
        Ok(Nfa {
            alphabet: self.alphabet.clone(),
            states: order.len() + 1,
            initial: 0,
            accepting,
            transitions,
        })
    }

    /// The minimal DFA of the accepted language; finite owners only.
    pub fn language_dfa(&self) -> Result<Dfa> {
        Ok(self.language_nfa()?.determinize().minimize())
    }

    pub fn language(&self) -> Result<LanguageHandle> {
        if self.owner.is_finite() {
            Ok(LanguageHandle::Exact(self.language_dfa()?))
        } else {
            Ok(LanguageHandle::Bounded {
                machine: self.clone(),
                budget: 2 * self.vertices.max(1) * 16,
            })
        }
    }

    fn require_plain(&self) -> Result<Elem> {
        let id = self.owner.identity().ok_or(Error::NotAMonoid)?;
        for x in [&self.x0, &self.x1] {
            if x.materialize()? != core::slice::from_ref(&id) {
                return Err(Error::NotPlainMAutomaton);
            }
        }
        Ok(id)
    }

    /// Quotients a plain M-automaton by a proper ideal: edges labeled inside
    /// the ideal are deleted and the rest are projected to `M/I`. Returns
    /// the converted automaton and the element projection.
    pub fn strip_ideal_quotient(&self, ideal: &Subset) -> Result<(ValenceAutomaton, Vec<usize>)> {
        self.require_plain()?;
        let m = self.owner.as_finite().ok_or(Error::BackendNotFinite)?;
        if !m.is_ideal(ideal) || ideal.len() == m.order() {
            return Err(Error::NotAnIdeal);
        }
        let (quotient, projection, _) = m.rees_quotient(ideal)?;
        let owner = Semigroup::Finite(quotient.clone());
        let mut edges = Vec::new();
        for e in &self.edges {
            let register = match &e.register {
                None => None,
                Some(Elem::Idx(x)) => {
                    if ideal.contains(*x) {
                        continue;
                    }
                    Some(Elem::Idx(projection[*x]))
                }
                Some(_) => return Err(Error::InvalidElement),
            };
            edges.push(VEdge {
                register,
                ..e.clone()
            });
        }
        let id = Elem::Idx(
            quotient
                .identity()
                .ok_or(Error::Internal("quotient of a monoid lost its identity"))?,
        );
        let unit = RationalSubset::singleton(owner.clone(), id)?;
        Ok((
            ValenceAutomaton {
                owner,
                alphabet: self.alphabet.clone(),
                vertices: self.vertices,
                initial: self.initial,
                terminal: self.terminal.clone(),
                edges,
                x0: unit.clone(),
                x1: unit,
            },
            projection,
        ))
    }

    /// The reverse direction: lifts a plain automaton over `M/I` back to
    /// `M`, deleting zero-labeled edges and restoring the unique nonzero
    /// preimages.
    pub fn lift_from_quotient(
        &self,
        original: &FiniteSemigroup,
        ideal: &Subset,
    ) -> Result<ValenceAutomaton> {
        self.require_plain()?;
        if !original.is_ideal(ideal) || ideal.len() == original.order() {
            return Err(Error::NotAnIdeal);
        }
        let (quotient, projection, _) = original.rees_quotient(ideal)?;
        if self.owner.as_finite() != Some(&quotient) {
            return Err(Error::OwnerMismatch);
        }
        let zero = quotient.order() - 1;
        let mut preimage = vec![usize::MAX; quotient.order()];
        for (x, &px) in projection.iter().enumerate() {
            if !ideal.contains(x) {
                preimage[px] = x;
            }
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            let register = match &e.register {
                None => None,
                Some(Elem::Idx(x)) => {
                    if *x == zero {
                        continue;
                    }
                    Some(Elem::Idx(preimage[*x]))
                }
                Some(_) => return Err(Error::InvalidElement),
            };
            edges.push(VEdge {
                register,
                ..e.clone()
            });
        }
        let owner = Semigroup::Finite(original.clone());
        let id = Elem::Idx(original.identity().ok_or(Error::NotAMonoid)?);
        let unit = RationalSubset::singleton(owner.clone(), id)?;
        Ok(ValenceAutomaton {
            owner,
            alphabet: self.alphabet.clone(),
            vertices: self.vertices,
            initial: self.initial,
            terminal: self.terminal.clone(),
            edges,
            x0: unit.clone(),
            x1: unit,
        })
    }

    /// Replaces the owner monoid by a simple or 0-simple quotient: quotient
    /// by the union of all proper ideals (the identity transformation when
    /// the monoid is already simple).
    pub fn zero_simple_reduction(&self) -> Result<ValenceAutomaton> {
        self.require_plain()?;
        let m = self.owner.as_finite().ok_or(Error::BackendNotFinite)?;
        match m.proper_ideal_union()? {
            None => Ok(self.clone()),
            Some(union) => Ok(self.strip_ideal_quotient(&union)?.0),
        }
    }

    /// Normalizes the initial set to `{1}` by prepending an automaton for
    /// `X0` (its edges become register moves that are silent on the word
    /// track).
    pub fn normalize_initial(&self) -> Result<ValenceAutomaton> {
        let id = self.owner.identity().ok_or(Error::NotAMonoid)?;
        let a0 = self.x0.automaton()?;
        let off = a0.vertices;
        let vertices = off + self.vertices;
        let mut terminal = vec![false; vertices];
        for (q, &t) in self.terminal.iter().enumerate() {
            terminal[off + q] = t;
        }
        // an empty continuation in V corresponds to x0 itself being tested
        if self.terminal[self.initial] {
            for (q, &t) in a0.terminal.iter().enumerate() {
                if t {
                    terminal[q] = true;
                }
            }
        }
        let mut edges = Vec::new();
        for e in &a0.edges {
            edges.push(VEdge {
                from: e.from,
                register: Some(e.label.clone()),
                word: None,
                to: e.to,
            });
        }
        for e in &self.edges {
            edges.push(VEdge {
                from: off + e.from,
                register: e.register.clone(),
                word: e.word,
                to: off + e.to,
            });
        }
        let entry_edges: Vec<VEdge> = self
            .out_edges(self.initial)
            .map(|e| VEdge {
                from: 0,
                register: e.register.clone(),
                word: e.word,
                to: off + e.to,
            })
            .collect();
        for (q, &t) in a0.terminal.iter().enumerate() {
            if t {
                for e in &entry_edges {
                    edges.push(VEdge { from: q, ..e.clone() });
                }
            }
        }
        let unit = RationalSubset::singleton(self.owner.clone(), id)?;
        Ok(ValenceAutomaton {
            owner: self.owner.clone(),
            alphabet: self.alphabet.clone(),
            vertices,
            initial: a0.initial,
            terminal,
            edges,
            x0: unit,
            x1: self.x1.clone(),
        })
    }

    /// Over a finite group with `X0 = {1}`: moves the terminal set into the
    /// machine by appending inverse-labeled edges to a fresh unique terminal
    /// vertex, leaving `X1 = {1}`.
    pub fn eliminate_target_set(&self) -> Result<ValenceAutomaton> {
        let g = match &self.owner {
            Semigroup::Finite(g) if g.is_group() => g.clone(),
            _ => return Err(Error::NotAFiniteGroup),
        };
        let id = Elem::Idx(g.identity().ok_or(Error::NotAFiniteGroup)?);
        if self.x0.materialize()? != core::slice::from_ref(&id) {
            return Err(Error::HypothesisFails);
        }
        let sink = self.vertices;
        let mut edges = self.edges.clone();
        for x1 in self.x1.materialize()? {
            let inv = self
                .owner
                .inverse(x1)
                .ok_or(Error::Internal("group element without inverse"))?;
            for (f, &t) in self.terminal.iter().enumerate() {
                if t {
                    edges.push(VEdge {
                        from: f,
                        register: Some(inv.clone()),
                        word: None,
                        to: sink,
                    });
                }
            }
        }
        let mut terminal = vec![false; sink + 1];
        terminal[sink] = true;
        let unit = RationalSubset::singleton(self.owner.clone(), id)?;
        Ok(ValenceAutomaton {
            owner: self.owner.clone(),
            alphabet: self.alphabet.clone(),
            vertices: sink + 1,
            initial: self.initial,
            terminal,
            edges,
            x0: unit.clone(),
            x1: unit,
        })
    }

    /// Removes the zero from the initial and terminal sets of an automaton
    /// over a Rees matrix semigroup with zero, preserving the language.
    pub fn nozero_normalize(&self) -> Result<ValenceAutomaton> {
        let rees = match &self.owner {
            Semigroup::Rees(r) if r.with_zero() => r.clone(),
            _ => return Err(Error::NotReesWithZero),
        };
        let x0m = self.x0.materialize()?.to_vec();
        let x1m = self.x1.materialize()?.to_vec();
        let zero_in_x0 = x0m.contains(&Elem::Zero);
        let zero_in_x1 = x1m.contains(&Elem::Zero);
        if !zero_in_x0 && !zero_in_x1 {
            return Ok(self.clone());
        }
        if zero_in_x0 && zero_in_x1 {
            // 0 x0 is 0 for every x, so the language is the skeleton's
            // regular language; realize it with a never-zero register
            return self.skeleton_machine(&rees);
        }
        let x0v: Vec<Elem> = x0m.iter().filter(|e| **e != Elem::Zero).cloned().collect();
        if zero_in_x0 && !zero_in_x1 {
            // no x has 0 x in X1, so the zero seed is inert
            let mut out = self.clone();
            out.x0 = RationalSubset::from_elements(self.owner.clone(), x0v)?;
            return Ok(out);
        }
        // remaining case: 0 in X1 only. Split L = L0 union L1 where L0 is
        // the (regular) set of words whose register product hits zero and
        // L1 drops the zero from X1.
        self.split_zero_terminal(&rees, &x0v, &x1m)
    }

    fn skeleton_machine(&self, rees: &ReesSemigroup) -> Result<ValenceAutomaton> {
        let h = idempotent_coordinate_element(rees)?;
        let edges = self
            .edges
            .iter()
            .map(|e| VEdge {
                register: Some(h.clone()),
                ..e.clone()
            })
            .collect();
        let x1 = power_closure(self.owner.clone(), &h)?;
        Ok(ValenceAutomaton {
            owner: self.owner.clone(),
            alphabet: self.alphabet.clone(),
            vertices: self.vertices,
            initial: self.initial,
            terminal: self.terminal.clone(),
            edges,
            x0: RationalSubset::singleton(self.owner.clone(), h)?,
            x1,
        })
    }

    fn split_zero_terminal(
        &self,
        rees: &ReesSemigroup,
        x0v: &[Elem],
        x1m: &[Elem],
    ) -> Result<ValenceAutomaton> {
        let x1v: Vec<Elem> = x1m.iter().filter(|e| **e != Elem::Zero).cloned().collect();
        if x0v.is_empty() {
            // no usable seed at all: the language is empty
            let empty = RationalSubset::from_elements(self.owner.clone(), Vec::new())?;
            let mut out = self.clone();
            out.x0 = empty;
            out.x1 = RationalSubset::from_elements(self.owner.clone(), x1v)?;
            return Ok(out);
        }
        let p = rees.sandwich();
        let base = rees.base();
        let jc = rees.j_count();
        // zero statuses for the L0 track: 0 = product already zero,
        // 1 = no register seen yet, 2 + i*jc + j = running with first
        // coordinate i and current last coordinate j
        let dead = 0usize;
        let noreg = 1usize;
        let n_status = 2 + rees.i_count() * jc;
        let running = |i: usize, j: usize| 2 + i * jc + j;
        let step = |st: usize, reg: &Option<Elem>| -> usize {
            match reg {
                None => st,
                Some(Elem::Zero) => dead,
                Some(Elem::Triple(i2, _, j2)) => {
                    if st == dead {
                        dead
                    } else if st == noreg {
                        running(*i2, *j2)
                    } else {
                        let k = st - 2;
                        if p.get(k % jc, *i2).is_some() {
                            running(k / jc, *j2)
                        } else {
                            dead
                        }
                    }
                }
                Some(_) => st,
            }
        };
        let j0set: BTreeSet<usize> = x0v
            .iter()
            .filter_map(|e| match e {
                Elem::Triple(_, _, j) => Some(*j),
                _ => None,
            })
            .collect();
        let accepting_status = |st: usize| {
            st == dead
                || (st >= 2 && {
                    let i = (st - 2) / jc;
                    j0set.iter().any(|&j0| p.get(j0, i).is_none())
                })
        };

        // witness registers for the L0 track: s with x0 s in X1 for some
        // zero-free x0, x1, and e with s e = s
        let mut witness: Option<(Elem, Elem)> = None;
        let mut solvable = false;
        'outer: for x0 in x0v {
            let (i0, g0, j0) = match x0 {
                Elem::Triple(i, g, j) => (*i, g.as_ref(), *j),
                _ => continue,
            };
            for x1 in &x1v {
                let (i1, g1, j1) = match x1 {
                    Elem::Triple(i, g, j) => (*i, g.as_ref(), *j),
                    _ => continue,
                };
                if i0 != i1 {
                    continue;
                }
                for is in 0..rees.i_count() {
                    let pe = match p.get(j0, is) {
                        Some(pe) => pe,
                        None => continue,
                    };
                    let a = base.mul(g0, pe)?;
                    let t = match solve_right(base, &a, g1)? {
                        Some(t) => t,
                        None => continue,
                    };
                    solvable = true;
                    for ie in 0..rees.i_count() {
                        let pe2 = match p.get(j1, ie) {
                            Some(pe2) => pe2,
                            None => continue,
                        };
                        let a2 = base.mul(&t, pe2)?;
                        if let Some(u) = solve_right(base, &a2, &t)? {
                            witness = Some((
                                rees.triple(is, t.clone(), j1)?,
                                rees.triple(ie, u, j1)?,
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }

        match witness {
            Some((s, e)) => {
                // combined machine: the original automaton (with X1 minus
                // zero) plus an L0 track whose synthetic registers always
                // multiply back into X1
                let l0 = |q: usize, st: usize| self.vertices + q * n_status + st;
                let vertices = self.vertices + self.vertices * n_status;
                let mut terminal = self.terminal.clone();
                terminal.resize(vertices, false);
                for q in 0..self.vertices {
                    if self.terminal[q] {
                        for st in 0..n_status {
                            if accepting_status(st) {
                                terminal[l0(q, st)] = true;
                            }
                        }
                    }
                }
                let mut edges = self.edges.clone();
                for ed in &self.edges {
                    for st in 0..n_status {
                        edges.push(VEdge {
                            from: l0(ed.from, st),
                            register: Some(e.clone()),
                            word: ed.word,
                            to: l0(ed.to, step(st, &ed.register)),
                        });
                    }
                    if ed.from == self.initial {
                        edges.push(VEdge {
                            from: self.initial,
                            register: Some(s.clone()),
                            word: ed.word,
                            to: l0(ed.to, step(noreg, &ed.register)),
                        });
                    }
                }
                Ok(ValenceAutomaton {
                    owner: self.owner.clone(),
                    alphabet: self.alphabet.clone(),
                    vertices,
                    initial: self.initial,
                    terminal,
                    edges,
                    x0: RationalSubset::from_elements(self.owner.clone(), x0v.to_vec())?,
                    x1: RationalSubset::from_elements(self.owner.clone(), x1v)?,
                })
            }
            None if solvable => Err(Error::UnsupportedSandwich),
            None => {
                // nothing multiplies into the zero-free part of X1, so the
                // language reduces to L0 alone (plus possibly the empty
                // word); realize it with a never-zero register
                let h = idempotent_coordinate_element(rees)?;
                let l0 = |q: usize, st: usize| 1 + q * n_status + st;
                let vertices = 1 + self.vertices * n_status;
                let mut terminal = vec![false; vertices];
                terminal[0] = self.terminal[self.initial]
                    && x0v.iter().any(|x| x1v.contains(x));
                for q in 0..self.vertices {
                    if self.terminal[q] {
                        for st in 0..n_status {
                            if accepting_status(st) {
                                terminal[l0(q, st)] = true;
                            }
                        }
                    }
                }
                let mut edges = Vec::new();
                for ed in &self.edges {
                    for st in 0..n_status {
                        edges.push(VEdge {
                            from: l0(ed.from, st),
                            register: Some(h.clone()),
                            word: ed.word,
                            to: l0(ed.to, step(st, &ed.register)),
                        });
                    }
                    if ed.from == self.initial {
                        edges.push(VEdge {
                            from: 0,
                            register: Some(h.clone()),
                            word: ed.word,
                            to: l0(ed.to, step(noreg, &ed.register)),
                        });
                    }
                }
                let x1 = power_closure(self.owner.clone(), &h)?;
                Ok(ValenceAutomaton {
                    owner: self.owner.clone(),
                    alphabet: self.alphabet.clone(),
                    vertices,
                    initial: 0,
                    terminal,
                    edges,
                    x0: RationalSubset::singleton(self.owner.clone(), h)?,
                    x1,
                })
            }
        }
    }

    /// Converts an automaton over a completely simple or completely
    /// 0-simple semigroup (given as a regular Rees matrix semigroup over a
    /// group, or as a finite semigroup to be decomposed) into a plain
    /// automaton over the maximal subgroup with `X0 = X1 = {1}`.
    pub fn to_group_automaton(&self) -> Result<ValenceAutomaton> {
        let v = match &self.owner {
            Semigroup::Finite(m) => self.transport_to_rees(m)?,
            Semigroup::Rees(_) => self.clone(),
            _ => return Err(Error::NotCompletelySimpleOrZeroSimple),
        };
        let rees = v.owner.as_rees().unwrap().clone();
        if !rees.base().is_group() || !rees.sandwich().is_regular() {
            return Err(Error::NotCompletelySimpleOrZeroSimple);
        }
        for x in [&v.x0, &v.x1] {
            if subset_contains_zero(x, &rees)? {
                return Err(Error::ZeroInInitialOrTerminalSet);
            }
        }
        let g = rees.base().clone();
        let gid = g.identity().ok_or(Error::Internal("group without identity"))?;
        let c_aut = v.x0.automaton()?;
        let d_aut = v.x1.automaton()?;

        // finite coordinate sets covering every label in sight
        let mut iset: BTreeSet<usize> = BTreeSet::new();
        let mut jset: BTreeSet<usize> = BTreeSet::new();
        for e in &v.edges {
            if let Some(Elem::Triple(i, _, j)) = &e.register {
                iset.insert(*i);
                jset.insert(*j);
            }
        }
        for a in [&c_aut, &d_aut] {
            for e in &a.edges {
                if let Elem::Triple(i, _, j) = &e.label {
                    iset.insert(*i);
                    jset.insert(*j);
                }
            }
        }
        if iset.is_empty() {
            iset.insert(0);
        }
        if jset.is_empty() {
            jset.insert(0);
        }
        let pairs: Vec<(usize, usize)> = iset
            .iter()
            .flat_map(|&i| jset.iter().map(move |&j| (i, j)))
            .collect();
        let pidx: BTreeMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();

        let mut c_parts = Vec::with_capacity(pairs.len());
        let mut d_parts = Vec::with_capacity(pairs.len());
        for &(i, j) in &pairs {
            c_parts.push(extract_component(&c_aut, i, j)?);
            d_parts.push(invert_automaton(&extract_component(&d_aut, i, j)?)?);
        }

        // vertex layout: q0', entry copies (one per pair), the I' x Q x J'
        // grid, then the component automata
        let np = pairs.len();
        let qn = v.vertices;
        let entry_base = 1;
        let a_base = entry_base + np;
        let mut cursor = a_base + np * qn;
        let mut c_off = Vec::with_capacity(np);
        for cp in &c_parts {
            c_off.push(cursor);
            cursor += cp.vertices;
        }
        let mut d_off = Vec::with_capacity(np);
        for dp in &d_parts {
            d_off.push(cursor);
            cursor += dp.vertices;
        }
        let total = cursor;
        let aid = |k: usize, q: usize| a_base + k * qn + q;

        let mut terminal = vec![false; total];
        for (k, dp) in d_parts.iter().enumerate() {
            for (t, &b) in dp.terminal.iter().enumerate() {
                if b {
                    terminal[d_off[k] + t] = true;
                }
            }
        }

        let mut edges: Vec<VEdge> = Vec::new();
        let stitch = |from: usize, to: usize| VEdge {
            from,
            register: Some(gid.clone()),
            word: None,
            to,
        };
        for (k, cp) in c_parts.iter().enumerate() {
            for e in &cp.edges {
                edges.push(VEdge {
                    from: c_off[k] + e.from,
                    register: Some(e.label.clone()),
                    word: None,
                    to: c_off[k] + e.to,
                });
            }
            edges.push(stitch(0, c_off[k] + cp.initial));
            for (t, &b) in cp.terminal.iter().enumerate() {
                if b {
                    edges.push(stitch(c_off[k] + t, entry_base + k));
                }
            }
        }
        for (k, dp) in d_parts.iter().enumerate() {
            for e in &dp.edges {
                edges.push(VEdge {
                    from: d_off[k] + e.from,
                    register: Some(e.label.clone()),
                    word: None,
                    to: d_off[k] + e.to,
                });
            }
            for (pv, &b) in v.terminal.iter().enumerate() {
                if b {
                    edges.push(stitch(aid(k, pv), d_off[k] + dp.initial));
                }
            }
        }
        // the entry copy stands for the initial vertex before any register
        // move; it reaches a terminal test only when the owner's empty path
        // would accept
        if v.owner.is_monoid() && v.terminal[v.initial] {
            for (k, dp) in d_parts.iter().enumerate() {
                edges.push(stitch(entry_base + k, d_off[k] + dp.initial));
            }
        }
        for e in &v.edges {
            match &e.register {
                Some(Elem::Zero) => continue,
                Some(Elem::Triple(i2, g2, j2)) => {
                    for (k, &(_, jp)) in pairs.iter().enumerate() {
                        let pe = match rees.sandwich().get(jp, *i2) {
                            Some(pe) => pe,
                            None => continue,
                        };
                        let label = g.mul(pe, g2)?;
                        let ip = pairs[k].0;
                        let to_pair = pidx[&(ip, *j2)];
                        edges.push(VEdge {
                            from: aid(k, e.from),
                            register: Some(label.clone()),
                            word: e.word,
                            to: aid(to_pair, e.to),
                        });
                        if e.from == v.initial {
                            edges.push(VEdge {
                                from: entry_base + k,
                                register: Some(label),
                                word: e.word,
                                to: aid(to_pair, e.to),
                            });
                        }
                    }
                }
                Some(_) => return Err(Error::InvalidElement),
                None => {
                    for k in 0..np {
                        edges.push(VEdge {
                            from: aid(k, e.from),
                            register: Some(gid.clone()),
                            word: e.word,
                            to: aid(k, e.to),
                        });
                        if e.from == v.initial {
                            edges.push(VEdge {
                                from: entry_base + k,
                                register: Some(gid.clone()),
                                word: e.word,
                                to: aid(k, e.to),
                            });
                        }
                    }
                }
            }
        }

        let unit = RationalSubset::singleton(g.clone(), gid)?;
        Ok(ValenceAutomaton {
            owner: g,
            alphabet: v.alphabet.clone(),
            vertices: total,
            initial: 0,
            terminal,
            edges,
            x0: unit.clone(),
            x1: unit,
        })
    }

    fn transport_to_rees(&self, m: &FiniteSemigroup) -> Result<ValenceAutomaton> {
        let d = rees_decompose(m).map_err(|e| match e {
            Error::NotCompletelyZeroSimple => Error::NotCompletelySimpleOrZeroSimple,
            other => other,
        })?;
        let owner = Semigroup::Rees(d.rees.clone());
        let map = |e: &Elem| -> Result<Elem> {
            match e {
                Elem::Idx(x) => Ok(d.to_rees[*x].clone()),
                _ => Err(Error::InvalidElement),
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let register = match &e.register {
                None => None,
                Some(r) => Some(map(r)?),
            };
            edges.push(VEdge {
                register,
                ..e.clone()
            });
        }
        let map_set = |x: &RationalSubset| -> Result<RationalSubset> {
            let elems: Result<Vec<Elem>> = x.materialize()?.iter().map(map).collect();
            RationalSubset::from_elements(owner.clone(), elems?)
        };
        Ok(ValenceAutomaton {
            owner: owner.clone(),
            alphabet: self.alphabet.clone(),
            vertices: self.vertices,
            initial: self.initial,
            terminal: self.terminal.clone(),
            edges,
            x0: map_set(&self.x0)?,
            x1: map_set(&self.x1)?,
        })
    }
}

/// Language equality of two valence automata over finite owners, via their
/// minimal DFAs.
pub fn equivalent_languages(
    a: &ValenceAutomaton,
    b: &ValenceAutomaton,
) -> Result<Equivalence> {
    crate::regular::equivalent(&a.language_dfa()?, &b.language_dfa()?)
}

/// Solves `a t = b` in the base, when possible: by inversion in a group, or
/// by exhaustive search in a finite semigroup.
fn solve_right(base: &Semigroup, a: &Elem, b: &Elem) -> Result<Option<Elem>> {
    if let Some(inv) = base.inverse(a) {
        return Ok(Some(base.mul(&inv, b)?));
    }
    if base.is_finite() {
        for t in base.elements()? {
            if base.mul(a, &t)? == *b {
                return Ok(Some(t));
            }
        }
        return Ok(None);
    }
    Ok(None)
}

/// A triple `h = (i, t, j)` with `P_ji` nonzero, so that every power of `h`
/// stays nonzero with the same coordinates.
fn idempotent_coordinate_element(rees: &ReesSemigroup) -> Result<Elem> {
    let p = rees.sandwich();
    let mut coords = None;
    'outer: for j in 0..rees.j_count() {
        for i in 0..rees.i_count() {
            if p.get(j, i).is_some() {
                coords = Some((i, j));
                break 'outer;
            }
        }
    }
    let (i, j) = coords.ok_or(Error::UnsupportedSandwich)?;
    let t = match rees.base().elements() {
        Ok(elems) => elems.into_iter().next().ok_or(Error::UnsupportedSandwich)?,
        Err(_) => rees.base().identity().ok_or(Error::UnsupportedSandwich)?,
    };
    rees.triple(i, t, j)
}

/// `{ h^k : k >= 1 }` as a rational subset (a single looping vertex).
fn power_closure(owner: Semigroup, h: &Elem) -> Result<RationalSubset> {
    let a = SAutomaton::new(owner, 1, 0, [0], vec![(0, h.clone(), 0)])?;
    Ok(RationalSubset::from_automaton(a))
}

/// Does the subset contain the zero of the Rees matrix semigroup? Decided
/// from coordinates alone, so it works over infinite bases too.
fn subset_contains_zero(x: &RationalSubset, rees: &ReesSemigroup) -> Result<bool> {
    if !rees.with_zero() {
        return Ok(false);
    }
    if let Some(list) = x.explicit() {
        return Ok(list.contains(&Elem::Zero));
    }
    Ok(zero_in_subset(&x.automaton()?, rees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{r1, r2};
    use crate::regular::enumerate;
    use alloc::boxed::Box;
    use alloc::string::ToString;

    fn ab() -> Vec<String> {
        vec!["a".to_string(), "b".to_string()]
    }

    fn z2() -> Semigroup {
        Semigroup::Finite(FiniteSemigroup::cyclic(2))
    }

    fn triple(i: usize, t: usize, j: usize) -> Elem {
        Elem::Triple(i, Box::new(Elem::Idx(t)), j)
    }

    fn explicit(owner: &Semigroup, elems: Vec<Elem>) -> RationalSubset {
        RationalSubset::from_elements(owner.clone(), elems).unwrap()
    }

    fn assert_equivalent(a: &ValenceAutomaton, b: &ValenceAutomaton) {
        match equivalent_languages(a, b).unwrap() {
            Equivalence::Equivalent => {}
            Equivalence::Counterexample(w) => panic!("languages differ at {w:?}"),
        }
    }

    /// The {a^n b^n : n >= 1} machine over the integers.
    fn anbn() -> ValenceAutomaton {
        let z = Semigroup::Integers;
        let zero = explicit(&z, vec![Elem::Int(0)]);
        ValenceAutomaton::new(
            z,
            ab(),
            2,
            0,
            [1],
            vec![
                (0, Elem::Int(1), vec![0], 0),
                (0, Elem::Int(-1), vec![1], 1),
                (1, Elem::Int(-1), vec![1], 1),
            ],
            zero.clone(),
            zero,
        )
        .unwrap()
    }

    #[test]
    fn integer_machine_accepts_balanced_blocks() {
        let v = anbn();
        assert_eq!(v.accepts(&[0, 0, 1, 1], None).unwrap(), Acceptance::Yes);
        assert_eq!(v.accepts(&[0, 0, 1], None).unwrap(), Acceptance::No);
        // agree with the arithmetic predicate on every word up to length 8
        let handle = v.language().unwrap();
        for w in handle.enumerate(8).unwrap() {
            let n = w.len() / 2;
            assert!(n >= 1 && w[..n].iter().all(|&s| s == 0) && w[n..].iter().all(|&s| s == 1));
        }
        for n in 1..=4 {
            let mut w = vec![0; n];
            w.extend(vec![1; n]);
            assert_eq!(handle.accepts(&w).unwrap(), Acceptance::Yes);
        }
    }

    #[test]
    fn trivial_register_agrees_with_nfa_acceptance() {
        let t = Semigroup::Finite(FiniteSemigroup::trivial());
        let unit = explicit(&t, vec![Elem::Idx(0)]);
        // skeleton: accepts a(ba)*
        let v = ValenceAutomaton::new(
            t,
            ab(),
            2,
            0,
            [1],
            vec![(0, Elem::Idx(0), vec![0], 1), (1, Elem::Idx(0), vec![1], 0)],
            unit.clone(),
            unit,
        )
        .unwrap();
        let d = v.language_dfa().unwrap();
        assert!(d.accepts_symbols(&["a"]).unwrap());
        assert!(d.accepts_symbols(&["a", "b", "a"]).unwrap());
        assert!(!d.accepts_symbols(&["a", "b"]).unwrap());
        assert!(!d.accepts_symbols(&[]).unwrap());
    }

    fn z2_parity_machine(x0: usize, x1: usize) -> ValenceAutomaton {
        let s = z2();
        let x0 = explicit(&s, vec![Elem::Idx(x0)]);
        let x1 = explicit(&s, vec![Elem::Idx(x1)]);
        ValenceAutomaton::new(
            s,
            vec!["b".to_string()],
            1,
            0,
            [0],
            vec![(0, Elem::Idx(1), vec![0], 0)],
            x0,
            x1,
        )
        .unwrap()
    }

    #[test]
    fn language_dfa_even_bs() {
        let v = z2_parity_machine(1, 1);
        let d = v.language_dfa().unwrap();
        // {b^n : n even}, epsilon included via the monoid empty path
        for n in 0..8 {
            assert_eq!(d.accepts(&vec![0; n]), n % 2 == 0, "length {n}");
        }
        assert_eq!(d.states, 2);
    }

    #[test]
    fn empty_terminal_set_gives_empty_language() {
        let s = z2();
        let v = ValenceAutomaton::new(
            s.clone(),
            vec!["b".to_string()],
            1,
            0,
            [0],
            vec![(0, Elem::Idx(1), vec![0], 0)],
            explicit(&s, vec![Elem::Idx(0)]),
            explicit(&s, vec![]),
        )
        .unwrap();
        assert!(enumerate(&v.language_dfa().unwrap(), 4).is_empty());
    }

    #[test]
    fn identity_labels_reduce_to_the_skeleton() {
        let s = z2();
        let unit = explicit(&s, vec![Elem::Idx(0)]);
        let v = ValenceAutomaton::new(
            s,
            ab(),
            2,
            0,
            [1],
            vec![(0, Elem::Idx(0), vec![0], 1), (1, Elem::Idx(0), vec![1], 0)],
            unit.clone(),
            unit,
        )
        .unwrap();
        let d = v.language_dfa().unwrap();
        assert!(d.accepts_symbols(&["a"]).unwrap());
        assert!(d.accepts_symbols(&["a", "b", "a"]).unwrap());
        assert!(!d.accepts_symbols(&["b"]).unwrap());
    }

    #[test]
    fn multi_letter_words_are_split() {
        let s = z2();
        let unit = explicit(&s, vec![Elem::Idx(0)]);
        let v = ValenceAutomaton::new(
            s,
            ab(),
            2,
            0,
            [1],
            vec![(0, Elem::Idx(0), vec![0, 1, 0], 1)],
            unit.clone(),
            unit,
        )
        .unwrap();
        assert_eq!(v.vertices, 4); // two fresh split vertices
        let d = v.language_dfa().unwrap();
        assert!(d.accepts_symbols(&["a", "b", "a"]).unwrap());
        assert!(!d.accepts_symbols(&["a", "b"]).unwrap());
    }

    fn plain_machine(
        m: &FiniteSemigroup,
        edges: Vec<(usize, Elem, Vec<usize>, usize)>,
        vertices: usize,
        terminal: Vec<usize>,
    ) -> ValenceAutomaton {
        let s = Semigroup::Finite(m.clone());
        let unit = explicit(&s, vec![Elem::Idx(m.identity().unwrap())]);
        ValenceAutomaton::new(s, ab(), vertices, 0, terminal, edges, unit.clone(), unit).unwrap()
    }

    #[test]
    fn strip_keeps_identity_only_machines() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let v = plain_machine(&m, vec![(0, Elem::Idx(0), vec![0], 1)], 2, vec![1]);
        let ideal = Subset::from_elements(3, [1, 2]);
        let (stripped, _) = v.strip_ideal_quotient(&ideal).unwrap();
        assert_equivalent(&v, &stripped);
        assert_eq!(stripped.edges.len(), 1);
    }

    #[test]
    fn strip_deletes_ideal_labeled_edges() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let v = plain_machine(
            &m,
            vec![
                (0, Elem::Idx(0), vec![0], 1),
                (0, Elem::Idx(1), vec![1], 1),
            ],
            2,
            vec![1],
        );
        let ideal = Subset::from_elements(3, [1, 2]);
        let (stripped, _) = v.strip_ideal_quotient(&ideal).unwrap();
        assert_eq!(stripped.edges.len(), 1);
        assert_equivalent(&v, &stripped);
    }

    #[test]
    fn strip_zero_ideal_on_group_with_zero() {
        let m = FiniteSemigroup::cyclic(2).adjoin(crate::semigroup::Adjoin::Zero);
        let zero = m.zero().unwrap();
        let v = plain_machine(
            &m,
            vec![
                (0, Elem::Idx(1), vec![0], 1),
                (1, Elem::Idx(1), vec![0], 1),
                (0, Elem::Idx(zero), vec![1], 1),
            ],
            2,
            vec![1],
        );
        let ideal = Subset::singleton(m.order(), zero);
        let (stripped, _) = v.strip_ideal_quotient(&ideal).unwrap();
        assert_equivalent(&v, &stripped);
        // round trip back up to M
        let lifted = stripped.lift_from_quotient(&m, &ideal).unwrap();
        assert_equivalent(&v, &lifted);
    }

    #[test]
    fn strip_rejects_non_plain_machines() {
        let v = z2_parity_machine(1, 1);
        let ideal = Subset::singleton(2, 0);
        assert_eq!(
            v.strip_ideal_quotient(&ideal).unwrap_err(),
            Error::NotPlainMAutomaton
        );
    }

    #[test]
    fn zero_simple_reduction_examples() {
        // a group is simple: identity transformation
        let g = FiniteSemigroup::cyclic(2);
        let v = plain_machine(&g, vec![(0, Elem::Idx(1), vec![0], 0)], 1, vec![0]);
        let r = v.zero_simple_reduction().unwrap();
        assert_eq!(r.owner.as_finite().unwrap().order(), 2);
        assert_equivalent(&v, &r);

        // the nilpotent monoid collapses to the trivial group with zero
        let m = FiniteSemigroup::nilpotent_monoid();
        let v = plain_machine(
            &m,
            vec![(0, Elem::Idx(0), vec![0], 1), (0, Elem::Idx(1), vec![1], 1)],
            2,
            vec![1],
        );
        let r = v.zero_simple_reduction().unwrap();
        assert_eq!(r.owner.as_finite().unwrap().order(), 2);
        assert_equivalent(&v, &r);

        // Z2 with zero adjoined is already 0-simple: the only proper ideal
        // is the zero, and the quotient is isomorphic to the input
        let m = FiniteSemigroup::cyclic(2).adjoin(crate::semigroup::Adjoin::Zero);
        let v = plain_machine(&m, vec![(0, Elem::Idx(1), vec![0], 0)], 1, vec![0]);
        let r = v.zero_simple_reduction().unwrap();
        let n = r.owner.as_finite().unwrap();
        assert_eq!(n.order(), 3);
        assert_eq!(n.classify(), crate::semigroup::Classification::ZeroSimple);
        assert_equivalent(&v, &r);
    }

    #[test]
    fn normalize_initial_examples() {
        // already {1}: language unchanged
        let g = FiniteSemigroup::cyclic(2);
        let v = plain_machine(&g, vec![(0, Elem::Idx(1), vec![0], 0)], 1, vec![0]);
        assert_equivalent(&v, &v.normalize_initial().unwrap());

        // the parity machine with X0 = {a}
        let v = z2_parity_machine(1, 1);
        let n = v.normalize_initial().unwrap();
        assert_eq!(n.x0.materialize().unwrap(), &[Elem::Idx(0)]);
        assert_equivalent(&v, &n);

        // empty X0: empty language
        let s = z2();
        let v = ValenceAutomaton::new(
            s.clone(),
            vec!["b".to_string()],
            1,
            0,
            [0],
            vec![(0, Elem::Idx(1), vec![0], 0)],
            explicit(&s, vec![]),
            explicit(&s, vec![Elem::Idx(0)]),
        )
        .unwrap();
        let n = v.normalize_initial().unwrap();
        assert!(enumerate(&n.language_dfa().unwrap(), 4).is_empty());
    }

    #[test]
    fn eliminate_target_set_examples() {
        // X1 = {1}: language preserved (machine gains the sink)
        let g = FiniteSemigroup::cyclic(2);
        let v = plain_machine(&g, vec![(0, Elem::Idx(1), vec![0], 0)], 1, vec![0]);
        let e = v.eliminate_target_set().unwrap();
        assert_equivalent(&v, &e);

        // X1 = {a}: odd parity
        let v = z2_parity_machine(0, 1);
        let e = v.eliminate_target_set().unwrap();
        assert_eq!(e.x1.materialize().unwrap(), &[Elem::Idx(0)]);
        assert_equivalent(&v, &e);
        let d = e.language_dfa().unwrap();
        assert!(d.accepts(&[0]));
        assert!(!d.accepts(&[]));

        // X1 = G: the full skeleton language
        let s = z2();
        let v = ValenceAutomaton::new(
            s.clone(),
            vec!["b".to_string()],
            1,
            0,
            [0],
            vec![(0, Elem::Idx(1), vec![0], 0)],
            explicit(&s, vec![Elem::Idx(0)]),
            explicit(&s, vec![Elem::Idx(0), Elem::Idx(1)]),
        )
        .unwrap();
        let e = v.eliminate_target_set().unwrap();
        assert_equivalent(&v, &e);
        let d = e.language_dfa().unwrap();
        for n in 0..5 {
            assert!(d.accepts(&vec![0; n]));
        }
    }

    fn r2_machine(
        edges: Vec<(usize, Elem, Vec<usize>, usize)>,
        vertices: usize,
        terminal: Vec<usize>,
        x0: Vec<Elem>,
        x1: Vec<Elem>,
    ) -> ValenceAutomaton {
        let s = Semigroup::Rees(r2());
        ValenceAutomaton::new(
            s.clone(),
            ab(),
            vertices,
            0,
            terminal,
            edges,
            explicit(&s, x0),
            explicit(&s, x1),
        )
        .unwrap()
    }

    #[test]
    fn nozero_zero_in_both_gives_skeleton_language() {
        let v = r2_machine(
            vec![
                (0, triple(0, 0, 1), vec![0], 1),
                (1, triple(1, 1, 1), vec![1], 1),
            ],
            2,
            vec![1],
            vec![Elem::Zero],
            vec![Elem::Zero],
        );
        let n = v.nozero_normalize().unwrap();
        assert!(!n.x0.materialize().unwrap().contains(&Elem::Zero));
        assert!(!n.x1.materialize().unwrap().contains(&Elem::Zero));
        // the language is exactly the skeleton's words a b^k
        let d = n.language_dfa().unwrap();
        assert!(d.accepts_symbols(&["a"]).unwrap());
        assert!(d.accepts_symbols(&["a", "b", "b"]).unwrap());
        assert!(!d.accepts_symbols(&["b"]).unwrap());
        assert!(!d.accepts_symbols(&[]).unwrap());
        assert_equivalent(&v, &n);
    }

    #[test]
    fn nozero_zero_seed_is_dropped_when_terminal_set_is_zero_free() {
        let v = r2_machine(
            vec![(0, triple(0, 1, 0), vec![0], 0)],
            1,
            vec![0],
            vec![Elem::Zero, triple(0, 0, 0)],
            vec![triple(0, 1, 0)],
        );
        let n = v.nozero_normalize().unwrap();
        assert_eq!(n.x0.materialize().unwrap(), &[triple(0, 0, 0)]);
        assert_equivalent(&v, &n);
    }

    #[test]
    fn nozero_zero_terminal_split() {
        // the loop crosses P_11 = 0, so a a hits zero; 0 in X1 makes those
        // words accepted
        let v = r2_machine(
            vec![(0, triple(1, 0, 1), vec![0], 0)],
            1,
            vec![0],
            vec![triple(0, 0, 1)],
            vec![Elem::Zero, triple(0, 0, 1)],
        );
        let n = v.nozero_normalize().unwrap();
        assert!(!n.x0.materialize().unwrap().contains(&Elem::Zero));
        assert!(!n.x1.materialize().unwrap().contains(&Elem::Zero));
        assert_equivalent(&v, &n);
        // sanity: x0 * (one loop) = (0, e P_10 e, 1)... the first loop
        // already crosses P_11 from x0's j = 1, so every a^k (k >= 1) dies
        // to zero and is accepted
        let d = v.language_dfa().unwrap();
        assert!(d.accepts_symbols(&["a"]).unwrap());
        assert!(d.accepts_symbols(&["a", "a"]).unwrap());
    }

    #[test]
    fn nozero_oracle_on_mixed_machines() {
        // several machines mixing zero and nonzero seeds and targets
        let cases = vec![
            (
                vec![
                    (0, triple(0, 1, 0), vec![0], 1),
                    (1, triple(0, 0, 1), vec![1], 0),
                    (0, Elem::Zero, vec![1], 1),
                ],
                2,
                vec![0, 1],
                vec![triple(0, 0, 0)],
                vec![Elem::Zero, triple(0, 1, 0)],
            ),
            (
                vec![
                    (0, triple(1, 0, 1), vec![0], 1),
                    (1, triple(1, 1, 0), vec![1], 1),
                ],
                2,
                vec![1],
                vec![Elem::Zero, triple(1, 0, 0)],
                vec![Elem::Zero],
            ),
        ];
        for (edges, vertices, terminal, x0, x1) in cases {
            let v = r2_machine(edges, vertices, terminal, x0, x1);
            let n = v.nozero_normalize().unwrap();
            assert!(!n.x0.materialize().unwrap().contains(&Elem::Zero));
            assert!(!n.x1.materialize().unwrap().contains(&Elem::Zero));
            assert_equivalent(&v, &n);
        }
    }

    #[test]
    fn to_group_r2_loop() {
        let v = r2_machine(
            vec![(0, triple(0, 1, 0), vec![0], 0)],
            1,
            vec![0],
            vec![triple(0, 0, 0)],
            vec![triple(0, 0, 0)],
        );
        let b = v.to_group_automaton().unwrap();
        assert!(b.owner.is_group());
        let id = b.owner.identity().unwrap();
        assert_eq!(b.x0.materialize().unwrap(), core::slice::from_ref(&id));
        assert_eq!(b.x1.materialize().unwrap(), core::slice::from_ref(&id));
        for e in &b.edges {
            assert!(matches!(e.register, Some(Elem::Idx(_))));
        }
        // {a^2k : k >= 1}
        let d = b.language_dfa().unwrap();
        for n in 0..8 {
            assert_eq!(d.accepts(&vec![0; n]), n >= 1 && n % 2 == 0, "length {n}");
        }
        assert_equivalent(&v, &b);
    }

    #[test]
    fn to_group_completely_simple_r1() {
        let s = Semigroup::Rees(r1());
        let v = ValenceAutomaton::new(
            s.clone(),
            ab(),
            1,
            0,
            [0],
            vec![(0, triple(0, 1, 0), vec![0], 0)],
            explicit(&s, vec![triple(0, 0, 0)]),
            explicit(&s, vec![triple(0, 0, 0)]),
        )
        .unwrap();
        let b = v.to_group_automaton().unwrap();
        assert_equivalent(&v, &b);
    }

    #[test]
    fn to_group_empty_initial_set() {
        let v = r2_machine(
            vec![(0, triple(0, 1, 0), vec![0], 0)],
            1,
            vec![0],
            vec![],
            vec![triple(0, 0, 0)],
        );
        let b = v.to_group_automaton().unwrap();
        assert!(enumerate(&b.language_dfa().unwrap(), 4).is_empty());
        assert_equivalent(&v, &b);
    }

    #[test]
    fn to_group_rejects_zero_in_terminal_set() {
        let v = r2_machine(
            vec![(0, triple(0, 1, 0), vec![0], 0)],
            1,
            vec![0],
            vec![triple(0, 0, 0)],
            vec![Elem::Zero],
        );
        assert_eq!(
            v.to_group_automaton().unwrap_err(),
            Error::ZeroInInitialOrTerminalSet
        );
    }

    #[test]
    fn to_group_from_finite_table() {
        // materialize R1, relabel the machine through the table indices, and
        // let the decomposition find its own coordinates
        let (m, elems) = r1().materialize().unwrap();
        let idx_of = |e: &Elem| elems.iter().position(|x| x == e).unwrap();
        let s = Semigroup::Finite(m.clone());
        let v = ValenceAutomaton::new(
            s.clone(),
            ab(),
            1,
            0,
            [0],
            vec![(0, Elem::Idx(idx_of(&triple(0, 1, 0))), vec![0], 0)],
            explicit(&s, vec![Elem::Idx(idx_of(&triple(0, 0, 0)))]),
            explicit(&s, vec![Elem::Idx(idx_of(&triple(0, 0, 0)))]),
        )
        .unwrap();
        let b = v.to_group_automaton().unwrap();
        assert!(b.owner.is_group());
        assert_equivalent(&v, &b);
    }

    #[test]
    fn to_group_rejects_unsuitable_owners() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let v = plain_machine(&m, vec![(0, Elem::Idx(0), vec![0], 0)], 1, vec![0]);
        assert_eq!(
            v.to_group_automaton().unwrap_err(),
            Error::NotCompletelySimpleOrZeroSimple
        );
    }

    #[test]
    fn accepts_agrees_with_language_dfa_on_short_words() {
        let machines = vec![
            z2_parity_machine(1, 1),
            z2_parity_machine(0, 1),
            r2_machine(
                vec![
                    (0, triple(0, 1, 0), vec![0], 1),
                    (1, triple(0, 0, 1), vec![1], 0),
                ],
                2,
                vec![0, 1],
                vec![triple(0, 0, 0)],
                vec![triple(0, 1, 0), triple(0, 0, 1)],
            ),
        ];
        for v in &machines {
            let d = v.language_dfa().unwrap();
            let k = v.alphabet.len();
            let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 0..=5 {
                for w in &layer {
                    let got = v.accepts(w, None).unwrap();
                    let want = if d.accepts(w) {
                        Acceptance::Yes
                    } else {
                        Acceptance::No
                    };
                    assert_eq!(got, want, "word {w:?}");
                }
                layer = layer
                    .iter()
                    .flat_map(|w| {
                        (0..k).map(move |s| {
                            let mut v = w.clone();
                            v.push(s);
                            v
                        })
                    })
                    .collect();
            }
        }
    }
}
