//! Finite automata over a semigroup and the rational subsets they denote.
//!
//! An automaton over `S` is a finite labeled digraph with a distinguished
//! initial vertex and a set of terminal vertices; the subset accepted is the
//! set of products along initial-to-terminal paths. Monoid owners admit the
//! empty path (contributing the identity); semigroup owners only non-empty
//! paths.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use crate::backend::{Elem, Semigroup};
use crate::error::{Error, Result};
use crate::rees::{MaxSubgroupCoords, ReesSemigroup};

/// An edge labeled with a semigroup element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SEdge {
    pub from: usize,
    pub label: Elem,
    pub to: usize,
}

/// A finite automaton over a semigroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SAutomaton {
    pub owner: Semigroup,
    pub vertices: usize,
    pub initial: usize,
    pub terminal: Vec<bool>,
    pub edges: Vec<SEdge>,
}

impl SAutomaton {
    pub fn new(
        owner: Semigroup,
        vertices: usize,
        initial: usize,
        terminal: impl IntoIterator<Item = usize>,
        edges: Vec<(usize, Elem, usize)>,
    ) -> Result<Self> {
        if initial >= vertices {
            return Err(Error::IndexOutOfRange);
        }
        let mut term = vec![false; vertices];
        for t in terminal {
            if t >= vertices {
                return Err(Error::IndexOutOfRange);
            }
            term[t] = true;
        }
        let mut es = Vec::with_capacity(edges.len());
        for (from, label, to) in edges {
            if from >= vertices || to >= vertices {
                return Err(Error::IndexOutOfRange);
            }
            if !owner.contains(&label) {
                return Err(Error::InvalidElement);
            }
            es.push(SEdge { from, label, to });
        }
        Ok(SAutomaton {
            owner,
            vertices,
            initial,
            terminal: term,
            edges: es,
        })
    }

    /// Automaton accepting exactly the given finite set.
    pub fn from_elements(owner: Semigroup, elems: &[Elem]) -> Result<Self> {
        let edges = elems.iter().map(|e| (0, e.clone(), 1)).collect();
        SAutomaton::new(owner, 2, 0, [1], edges)
    }

    fn out_edges(&self, v: usize) -> impl Iterator<Item = &SEdge> {
        self.edges.iter().filter(move |e| e.from == v)
    }

    /// The exact subset accepted, by saturation of reachable
    /// (vertex, register) pairs. Finite owners only.
    pub fn accepted_subset(&self) -> Result<Vec<Elem>> {
        if !self.owner.is_finite() {
            return Err(Error::BackendNotFinite);
        }
        let mut reached: BTreeSet<(usize, Elem)> = BTreeSet::new();
        let mut frontier: Vec<(usize, Elem)> = Vec::new();
        for e in self.out_edges(self.initial) {
            let pair = (e.to, e.label.clone());
            if reached.insert(pair.clone()) {
                frontier.push(pair);
            }
        }
        while let Some((v, x)) = frontier.pop() {
            for e in self.out_edges(v) {
                let pair = (e.to, self.owner.mul(&x, &e.label)?);
                if reached.insert(pair.clone()) {
                    frontier.push(pair);
                }
            }
        }
        let mut out: BTreeSet<Elem> = reached
            .into_iter()
            .filter(|(v, _)| self.terminal[*v])
            .map(|(_, x)| x)
            .collect();
        // the unique empty path contributes the identity for monoid owners
        if self.terminal[self.initial] {
            if let Some(id) = self.owner.identity() {
                out.insert(id);
            }
        }
        Ok(out.into_iter().collect())
    }
}

/// How two rational subsets may be combined.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Combine {
    Union,
    Product,
    /// Subsemigroup closure; includes the identity only for monoid owners.
    Star,
}

/// A rational subset of a semigroup, represented by an automaton or an
/// explicit finite set, with a memoized exact carrier for finite owners.
#[derive(Debug)]
pub struct RationalSubset {
    owner: Semigroup,
    repr: Repr,
    cache: OnceCell<Vec<Elem>>,
}

#[derive(Clone, Debug)]
enum Repr {
    Explicit(Vec<Elem>),
    Automaton(SAutomaton),
}

impl Clone for RationalSubset {
    fn clone(&self) -> Self {
        RationalSubset {
            owner: self.owner.clone(),
            repr: self.repr.clone(),
            cache: self.cache.clone(),
        }
    }
}

impl RationalSubset {
    pub fn from_elements(owner: Semigroup, elems: Vec<Elem>) -> Result<Self> {
        for e in &elems {
            if !owner.contains(e) {
                return Err(Error::InvalidElement);
            }
        }
        let mut sorted = elems;
        sorted.sort();
        sorted.dedup();
        Ok(RationalSubset {
            owner,
            repr: Repr::Explicit(sorted),
            cache: OnceCell::new(),
        })
    }

    pub fn from_automaton(a: SAutomaton) -> Self {
        RationalSubset {
            owner: a.owner.clone(),
            repr: Repr::Automaton(a),
            cache: OnceCell::new(),
        }
    }

    pub fn singleton(owner: Semigroup, e: Elem) -> Result<Self> {
        Self::from_elements(owner, vec![e])
    }

    pub fn owner(&self) -> &Semigroup {
        &self.owner
    }

    /// Explicit elements without any computation, when the representation is
    /// already a finite list.
    pub fn explicit(&self) -> Option<&[Elem]> {
        match &self.repr {
            Repr::Explicit(v) => Some(v),
            Repr::Automaton(_) => None,
        }
    }

    /// An automaton denoting this subset.
    pub fn automaton(&self) -> Result<SAutomaton> {
        match &self.repr {
            Repr::Automaton(a) => Ok(a.clone()),
            Repr::Explicit(v) => SAutomaton::from_elements(self.owner.clone(), v),
        }
    }

    /// The exact carrier; finite owners (or explicit representations) only.
    pub fn materialize(&self) -> Result<&[Elem]> {
        if let Some(v) = self.cache.get() {
            return Ok(v);
        }
        let v = match &self.repr {
            Repr::Explicit(v) => v.clone(),
            Repr::Automaton(a) => a.accepted_subset()?,
        };
        Ok(self.cache.get_or_init(|| v))
    }

    pub fn contains(&self, e: &Elem) -> Result<bool> {
        if let Repr::Explicit(v) = &self.repr {
            return Ok(v.binary_search(e).is_ok());
        }
        Ok(self.materialize()?.binary_search(e).is_ok())
    }
}

/// Union, product or star of rational subsets over the same owner.
pub fn combine(x: &RationalSubset, y: &RationalSubset, op: Combine) -> Result<RationalSubset> {
    if x.owner != y.owner {
        return Err(Error::OwnerMismatch);
    }
    let a = x.automaton()?;
    let b = y.automaton()?;
    let out = match op {
        Combine::Union => union(&a, &b),
        Combine::Product => product(&a, &b),
        Combine::Star => star(&a),
    };
    Ok(RationalSubset::from_automaton(out))
}

/// Star of a single subset (the binary entry point ignores `y` for star, so
/// this is also exposed directly).
pub fn star_subset(x: &RationalSubset) -> Result<RationalSubset> {
    Ok(RationalSubset::from_automaton(star(&x.automaton()?)))
}

fn union(a: &SAutomaton, b: &SAutomaton) -> SAutomaton {
    // fresh start with copies of both start vertices' out-edges
    let off_a = 1;
    let off_b = 1 + a.vertices;
    let vertices = 1 + a.vertices + b.vertices;
    let mut terminal = vec![false; vertices];
    for (v, &t) in a.terminal.iter().enumerate() {
        terminal[off_a + v] = t;
    }
    for (v, &t) in b.terminal.iter().enumerate() {
        terminal[off_b + v] = t;
    }
    terminal[0] = a.terminal[a.initial] || b.terminal[b.initial];
    let mut edges = Vec::new();
    for e in &a.edges {
        edges.push(SEdge {
            from: off_a + e.from,
            label: e.label.clone(),
            to: off_a + e.to,
        });
        if e.from == a.initial {
            edges.push(SEdge {
                from: 0,
                label: e.label.clone(),
                to: off_a + e.to,
            });
        }
    }
    for e in &b.edges {
        edges.push(SEdge {
            from: off_b + e.from,
            label: e.label.clone(),
            to: off_b + e.to,
        });
        if e.from == b.initial {
            edges.push(SEdge {
                from: 0,
                label: e.label.clone(),
                to: off_b + e.to,
            });
        }
    }
    SAutomaton {
        owner: a.owner.clone(),
        vertices,
        initial: 0,
        terminal,
        edges,
    }
}

fn product(a: &SAutomaton, b: &SAutomaton) -> SAutomaton {
    let off_b = a.vertices;
    let vertices = a.vertices + b.vertices;
    let mut terminal = vec![false; vertices];
    for (v, &t) in b.terminal.iter().enumerate() {
        terminal[off_b + v] = t;
    }
    // if b accepts the identity via its empty path, a's terminals stay
    // terminal
    let b_has_identity = b.terminal[b.initial] && b.owner.is_monoid();
    if b_has_identity {
        for (v, &t) in a.terminal.iter().enumerate() {
            terminal[v] = t;
        }
    }
    let mut edges: Vec<SEdge> = a.edges.clone();
    for e in &b.edges {
        edges.push(SEdge {
            from: off_b + e.from,
            label: e.label.clone(),
            to: off_b + e.to,
        });
    }
    // jump from each a-terminal into b by copying b's initial out-edges
    for (v, &t) in a.terminal.iter().enumerate() {
        if !t {
            continue;
        }
        for e in &b.edges {
            if e.from == b.initial {
                edges.push(SEdge {
                    from: v,
                    label: e.label.clone(),
                    to: off_b + e.to,
                });
            }
        }
    }
    SAutomaton {
        owner: a.owner.clone(),
        vertices,
        initial: a.initial,
        terminal,
        edges,
    }
}

fn star(a: &SAutomaton) -> SAutomaton {
    // fresh start; terminals loop back by copying the start's out-edges
    let off = 1;
    let vertices = 1 + a.vertices;
    let mut terminal = vec![false; vertices];
    for (v, &t) in a.terminal.iter().enumerate() {
        terminal[off + v] = t;
    }
    terminal[0] = a.owner.is_monoid();
    let mut edges = Vec::new();
    for e in &a.edges {
        edges.push(SEdge {
            from: off + e.from,
            label: e.label.clone(),
            to: off + e.to,
        });
    }
    let start_copies: Vec<(Elem, usize)> = a
        .out_edges(a.initial)
        .map(|e| (e.label.clone(), off + e.to))
        .collect();
    for &(ref label, to) in &start_copies {
        edges.push(SEdge {
            from: 0,
            label: label.clone(),
            to,
        });
    }
    for (v, &t) in a.terminal.iter().enumerate() {
        if t {
            for &(ref label, to) in &start_copies {
                edges.push(SEdge {
                    from: off + v,
                    label: label.clone(),
                    to,
                });
            }
        }
    }
    SAutomaton {
        owner: a.owner.clone(),
        vertices,
        initial: 0,
        terminal,
        edges,
    }
}

/// `X^{-1}` for `X` a rational subset of a group: reverse all edges, invert
/// each label, and swap the roles of the initial and terminal vertices.
pub fn invert_group_subset(x: &RationalSubset) -> Result<RationalSubset> {
    let a = x.automaton()?;
    Ok(RationalSubset::from_automaton(invert_automaton(&a)?))
}

pub(crate) fn invert_automaton(a: &SAutomaton) -> Result<SAutomaton> {
    if !a.owner.is_group() {
        return Err(Error::NotAGroup);
    }
    let inv = |e: &Elem| a.owner.inverse(e).ok_or(Error::NotAGroup);
    // fresh start standing for the merged terminal of the reversal
    let off = 1;
    let vertices = 1 + a.vertices;
    let mut terminal = vec![false; vertices];
    terminal[off + a.initial] = true;
    terminal[0] = a.terminal[a.initial]; // identity round-trips
    let mut edges = Vec::new();
    for e in &a.edges {
        let label = inv(&e.label)?;
        edges.push(SEdge {
            from: off + e.to,
            label: label.clone(),
            to: off + e.from,
        });
        if a.terminal[e.to] {
            edges.push(SEdge {
                from: 0,
                label,
                to: off + e.from,
            });
        }
    }
    Ok(SAutomaton {
        owner: a.owner.clone(),
        vertices,
        initial: 0,
        terminal,
        edges,
    })
}

/// The component automaton for `X_ij = { t | (i, t, j) in X }`, built from
/// an automaton over a Rees matrix semigroup. The result is an automaton
/// over the base.
pub fn extract_component(a: &SAutomaton, i: usize, j: usize) -> Result<SAutomaton> {
    let rees = a.owner.as_rees().ok_or(Error::NotReesWithZero)?.clone();
    if i >= rees.i_count() || j >= rees.j_count() {
        return Err(Error::IndexOutOfRange);
    }
    // paths accepting a triple never cross a zero-labeled edge
    let live: Vec<&SEdge> = a.edges.iter().filter(|e| e.label != Elem::Zero).collect();
    let mut j_prime: Vec<usize> = live
        .iter()
        .filter_map(|e| match &e.label {
            Elem::Triple(_, _, j3) => Some(*j3),
            _ => None,
        })
        .collect();
    j_prime.push(j);
    j_prime.sort_unstable();
    j_prime.dedup();
    let jpos = |jj: usize| j_prime.iter().position(|&x| x == jj).unwrap();

    // in the degenerate monoid case the empty path contributes the identity
    let empty_path = match (a.terminal[a.initial], a.owner.identity()) {
        (true, Some(Elem::Triple(i0, e, j0))) if i0 == i && j0 == j => Some(*e),
        _ => None,
    };

    let vertices =
        1 + a.vertices * j_prime.len() + usize::from(empty_path.is_some());
    let vid = |q: usize, jj: usize| 1 + q * j_prime.len() + jpos(jj);
    let mut terminal = vec![false; vertices];
    for (q, &t) in a.terminal.iter().enumerate() {
        if t {
            terminal[vid(q, j)] = true;
        }
    }
    let mut edges = Vec::new();
    if let Some(e) = empty_path {
        terminal[vertices - 1] = true;
        edges.push(SEdge {
            from: 0,
            label: e,
            to: vertices - 1,
        });
    }
    for e in &live {
        let (i2, t2, j2) = match &e.label {
            Elem::Triple(i2, t2, j2) => (*i2, t2.as_ref(), *j2),
            _ => unreachable!(),
        };
        if e.from == a.initial && i2 == i {
            edges.push(SEdge {
                from: 0,
                label: t2.clone(),
                to: vid(e.to, j2),
            });
        }
        for &j1 in &j_prime {
            if let Some(p) = rees.sandwich().get(j1, i2) {
                edges.push(SEdge {
                    from: vid(e.from, j1),
                    label: rees.base().mul(p, t2)?,
                    to: vid(e.to, j2),
                });
            }
        }
    }
    Ok(SAutomaton {
        owner: rees.base().clone(),
        vertices,
        initial: 0,
        terminal,
        edges,
    })
}

/// `X` intersected with the maximal subgroup at `(i, j)`, expressed in base
/// group coordinates as `P_ji X_ij`.
pub struct MaxSubgroupIntersection {
    /// `P_ji X_ij`, a rational subset of the base group `G`.
    pub in_group: RationalSubset,
    pub coords: MaxSubgroupCoords,
}

impl MaxSubgroupIntersection {
    /// `X cap H` itself, via the isomorphism `phi`; finite base only.
    pub fn materialize_in_s(&self, s: &ReesSemigroup) -> Result<Vec<Elem>> {
        let mut out = Vec::new();
        for g in self.in_group.materialize()? {
            out.push(self.coords.phi(s, g)?);
        }
        out.sort();
        Ok(out)
    }
}

pub fn intersect_max_subgroup(
    x: &RationalSubset,
    i: usize,
    j: usize,
) -> Result<MaxSubgroupIntersection> {
    let rees = x.owner().as_rees().ok_or(Error::NotReesWithZero)?.clone();
    let coords = rees.max_subgroup_coords(i, j)?;
    let component = extract_component(&x.automaton()?, i, j)?;
    let sandwich_singleton =
        RationalSubset::singleton(rees.base().clone(), coords.sandwich.clone())?;
    let in_group = combine(
        &sandwich_singleton,
        &RationalSubset::from_automaton(component),
        Combine::Product,
    )?;
    Ok(MaxSubgroupIntersection { in_group, coords })
}

/// Lifts a rational subset `X` of the base into the Rees matrix semigroup as
/// `{ (i, t, j) | t in X }`, under the factorization hypothesis `t = P_{j_t
/// i_t} s_t` for every automaton label.
pub fn lift_subset(
    x: &RationalSubset,
    i: usize,
    j: usize,
    rees: &ReesSemigroup,
) -> Result<RationalSubset> {
    if x.owner() != rees.base() {
        return Err(Error::OwnerMismatch);
    }
    if i >= rees.i_count() || j >= rees.j_count() {
        return Err(Error::IndexOutOfRange);
    }
    let a = x.automaton()?;
    let owner = Semigroup::Rees(rees.clone());

    // one factorization per distinct label, lowest indices first
    let factorize = |t: &Elem| -> Result<(usize, usize, Elem)> {
        for jt in 0..rees.j_count() {
            for it in 0..rees.i_count() {
                if let Some(p) = rees.sandwich().get(jt, it) {
                    if let Some(inv) = rees.base().inverse(p) {
                        // group base: s = P^{-1} t
                        return Ok((jt, it, rees.base().mul(&inv, t)?));
                    }
                    if let Ok(elems) = rees.base().elements() {
                        for s in &elems {
                            if rees.base().mul(p, s)? == *t {
                                return Ok((jt, it, s.clone()));
                            }
                        }
                    }
                }
            }
        }
        Err(Error::HypothesisFails)
    };
    let mut factored: Vec<(usize, usize, Elem)> = Vec::with_capacity(a.edges.len());
    for e in &a.edges {
        factored.push(factorize(&e.label)?);
    }

    let mut j_prime: Vec<usize> = factored.iter().map(|&(jt, _, _)| jt).collect();
    j_prime.push(j);
    j_prime.sort_unstable();
    j_prime.dedup();
    let jpos = |jj: usize| j_prime.iter().position(|&x| x == jj).unwrap();
    let vertices = 1 + a.vertices * j_prime.len();
    let vid = |q: usize, jj: usize| 1 + q * j_prime.len() + jpos(jj);
    let mut terminal = vec![false; vertices];
    for (q, &t) in a.terminal.iter().enumerate() {
        if t {
            terminal[vid(q, j)] = true;
        }
    }
    let mut edges = Vec::new();
    for (e, &(jt, it, ref st)) in a.edges.iter().zip(&factored) {
        for &j2 in &j_prime {
            if e.from == a.initial {
                edges.push(SEdge {
                    from: 0,
                    label: rees.triple(i, e.label.clone(), j2)?,
                    to: vid(e.to, j2),
                });
            }
            edges.push(SEdge {
                from: vid(e.from, jt),
                label: rees.triple(it, st.clone(), j2)?,
                to: vid(e.to, j2),
            });
        }
    }
    let lifted = RationalSubset::from_automaton(SAutomaton {
        owner: owner.clone(),
        vertices,
        initial: 0,
        terminal,
        edges,
    });
    // the empty path of a monoid base contributes (i, 1, j) when 1 in X
    if a.terminal[a.initial] {
        if let Some(id) = rees.base().identity() {
            let extra =
                RationalSubset::singleton(owner, rees.triple(i, id, j)?)?;
            return combine(&lifted, &extra, Combine::Union);
        }
    }
    Ok(lifted)
}

/// The rational set difference
/// `X0^{-1} X1 = { x | x0 x = x1 for some x0 in X0, x1 in X1 }`,
/// by enumeration over a finite owner.
pub fn set_difference(x0: &RationalSubset, x1: &RationalSubset) -> Result<Vec<Elem>> {
    if x0.owner() != x1.owner() {
        return Err(Error::OwnerMismatch);
    }
    let owner = x0.owner();
    let elems = owner.elements()?;
    let seeds = x0.materialize()?.to_vec();
    let mut out = Vec::new();
    for x in &elems {
        let mut hit = false;
        for s in &seeds {
            if x1.contains(&owner.mul(s, x)?)? {
                hit = true;
                break;
            }
        }
        if hit {
            out.push(x.clone());
        }
    }
    Ok(out)
}

fn elem_size(e: &Elem) -> i64 {
    match e {
        Elem::Int(k) => k.abs(),
        Elem::Bicyclic(a, b) => (*a + *b) as i64,
        _ => 0,
    }
}

/// Decides whether a zero-representing element lies in the subset accepted
/// by `a` (an automaton over a Rees matrix semigroup), by simulating
/// coordinates only. Works for any base.
pub(crate) fn zero_in_subset(a: &SAutomaton, rees: &ReesSemigroup) -> bool {
    // status: Some(j) = running with current third coordinate j, None = dead
    let mut reached: BTreeSet<(usize, Option<usize>)> = BTreeSet::new();
    let mut frontier: Vec<(usize, Option<usize>)> = Vec::new();
    let step = |status: Option<usize>, label: &Elem| -> Option<Option<usize>> {
        match label {
            Elem::Zero => Some(None),
            Elem::Triple(i2, _, j2) => match status {
                None => Some(None),
                Some(j1) => {
                    if rees.sandwich().get(j1, *i2).is_some() {
                        Some(Some(*j2))
                    } else {
                        Some(None)
                    }
                }
            },
            _ => None,
        }
    };
    for e in a.out_edges(a.initial) {
        let status = match &e.label {
            Elem::Zero => None,
            Elem::Triple(_, _, j2) => Some(*j2),
            _ => continue,
        };
        if reached.insert((e.to, status)) {
            frontier.push((e.to, status));
        }
    }
    while let Some((v, status)) = frontier.pop() {
        for e in a.out_edges(v) {
            if let Some(next) = step(status, &e.label) {
                if reached.insert((e.to, next)) {
                    frontier.push((e.to, next));
                }
            }
        }
    }
    reached
        .iter()
        .any(|&(v, status)| a.terminal[v] && status.is_none())
}

/// Bounded membership of `t` in the subset accepted by `a` over an infinite
/// built-in base: breadth-first over (vertex, value) pairs with values of
/// bounded size. Sound; returns `UndecidableBase` when the bound binds.
fn bounded_member(a: &SAutomaton, t: &Elem, budget: i64) -> Result<bool> {
    let max_label = a
        .edges
        .iter()
        .map(|e| elem_size(&e.label))
        .max()
        .unwrap_or(0);
    let bound = elem_size(t) + (max_label + 1) * (a.vertices as i64 + 1) * budget.max(1);
    let mut truncated = false;
    let mut reached: BTreeSet<(usize, Elem)> = BTreeSet::new();
    let mut frontier: Vec<(usize, Elem)> = Vec::new();
    for e in a.out_edges(a.initial) {
        let pair = (e.to, e.label.clone());
        if reached.insert(pair.clone()) {
            frontier.push(pair);
        }
    }
    while let Some((v, x)) = frontier.pop() {
        if a.terminal[v] && x == *t {
            return Ok(true);
        }
        for e in a.out_edges(v) {
            let next = a.owner.mul(&x, &e.label)?;
            if elem_size(&next) > bound {
                truncated = true;
                continue;
            }
            let pair = (e.to, next);
            if reached.insert(pair.clone()) {
                frontier.push(pair);
            }
        }
    }
    if reached
        .iter()
        .any(|(v, x)| a.terminal[*v] && x == t)
    {
        return Ok(true);
    }
    if a.terminal[a.initial] && a.owner.identity().as_ref() == Some(t) {
        return Ok(true);
    }
    if truncated {
        Err(Error::UndecidableBase)
    } else {
        Ok(false)
    }
}

/// Decides `w in X` for `w` a word over a generating set of a finitely
/// generated Rees matrix semigroup, by reduction to base membership: zero
/// words are detected from coordinates alone; otherwise the word folds to a
/// triple and the query becomes membership of its middle component in the
/// extracted component automaton.
pub fn member_rees(
    s: &Semigroup,
    generators: &[Elem],
    word: &[usize],
    x: &RationalSubset,
    budget: i64,
) -> Result<bool> {
    let rees = s.as_rees().ok_or(Error::NotReesWithZero)?.clone();
    if x.owner() != s {
        return Err(Error::OwnerMismatch);
    }
    if word.is_empty() {
        return Err(Error::InvalidElement);
    }
    let mut value = generators
        .get(word[0])
        .ok_or(Error::IndexOutOfRange)?
        .clone();
    for &k in &word[1..] {
        let g = generators.get(k).ok_or(Error::IndexOutOfRange)?;
        value = s.mul(&value, g)?;
    }
    match &value {
        Elem::Zero => Ok(zero_in_subset(&x.automaton()?, &rees)),
        Elem::Triple(i, t, j) => {
            let component = extract_component(&x.automaton()?, *i, *j)?;
            if component.owner.is_finite() {
                Ok(component.accepted_subset()?.binary_search(t).is_ok())
            } else {
                bounded_member(&component, t, budget)
            }
        }
        _ => Err(Error::InvalidElement),
    }
}
