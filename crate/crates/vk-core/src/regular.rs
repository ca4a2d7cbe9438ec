//! Classical automata over a finite alphabet: the oracle substrate for every
//! language-equality certificate in this crate.
//!
//! Alphabet symbols are strings, compared bytewise. Counterexamples are
//! found shortest-first by BFS over the product automaton, so failure
//! messages are stable.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A nondeterministic finite automaton with optional epsilon moves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub accepting: Vec<bool>,
    /// `(from, symbol index or None for epsilon, to)`.
    pub transitions: Vec<(usize, Option<usize>, usize)>,
}

/// A total deterministic finite automaton.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: usize,
    pub accepting: Vec<bool>,
    /// Row-major `states x alphabet` transition table.
    pub next: Vec<usize>,
    /// Set only after minimization.
    pub minimal: bool,
}

/// Outcome of a language-equality check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Equivalence {
    Equivalent,
    /// A shortest word accepted by exactly one of the two automata.
    Counterexample(Vec<String>),
}

impl Nfa {
    fn epsilon_closure(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut closed = set.clone();
        let mut frontier: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = frontier.pop() {
            for &(from, sym, to) in &self.transitions {
                if from == q && sym.is_none() && closed.insert(to) {
                    frontier.push(to);
                }
            }
        }
        closed
    }

    /// Subset construction with epsilon closure.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let start = self.epsilon_closure(&BTreeSet::from([self.initial]));
        let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        index.insert(start.clone(), 0);
        let mut order = vec![start];
        let mut next: Vec<usize> = Vec::new();
        let mut cursor = 0;
        while cursor < order.len() {
            let current = order[cursor].clone();
            for sym in 0..k {
                let mut step = BTreeSet::new();
                for &(from, s, to) in &self.transitions {
                    if s == Some(sym) && current.contains(&from) {
                        step.insert(to);
                    }
                }
                let step = self.epsilon_closure(&step);
                let id = match index.get(&step) {
                    Some(&id) => id,
                    None => {
                        let id = order.len();
                        index.insert(step.clone(), id);
                        order.push(step);
                        id
                    }
                };
                next.push(id);
            }
            cursor += 1;
        }
        let accepting = order
            .iter()
            .map(|set| set.iter().any(|&q| self.accepting[q]))
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            states: order.len(),
            initial: 0,
            accepting,
            next,
            minimal: false,
        }
    }
}

impl Dfa {
    pub fn step(&self, state: usize, sym: usize) -> usize {
        self.next[state * self.alphabet.len() + sym]
    }

    pub fn symbol_index(&self, sym: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == sym)
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut q = self.initial;
        for &sym in word {
            q = self.step(q, sym);
        }
        self.accepting[q]
    }

    pub fn accepts_symbols(&self, word: &[&str]) -> Result<bool> {
        let mut idx = Vec::with_capacity(word.len());
        for s in word {
            idx.push(self.symbol_index(s).ok_or(Error::AlphabetMismatch)?);
        }
        Ok(self.accepts(&idx))
    }

    /// A single-state automaton rejecting everything.
    pub fn empty_language(alphabet: Vec<String>) -> Dfa {
        let k = alphabet.len();
        Dfa {
            alphabet,
            states: 1,
            initial: 0,
            accepting: vec![false],
            next: vec![0; k],
            minimal: true,
        }
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.states];
        let mut frontier = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = frontier.pop() {
            for sym in 0..self.alphabet.len() {
                let to = self.step(q, sym);
                if !seen[to] {
                    seen[to] = true;
                    frontier.push(to);
                }
            }
        }
        seen
    }

    /// Moore partition refinement, then renumbering by BFS from the initial
    /// state; the result is the unique minimal DFA up to isomorphism.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        let reachable = self.reachable();
        let states: Vec<usize> = (0..self.states).filter(|&q| reachable[q]).collect();
        // block id per (reachable) state, seeded by acceptance
        let mut block = vec![usize::MAX; self.states];
        for &q in &states {
            block[q] = usize::from(self.accepting[q]);
        }
        // refine until the block count stops growing; each signature embeds
        // the previous block id, so the partition only ever refines
        let mut count = states.iter().map(|&q| block[q]).collect::<BTreeSet<_>>().len();
        loop {
            let mut signature: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let mut fresh = vec![usize::MAX; self.states];
            for &q in &states {
                let sig = (
                    block[q],
                    (0..k).map(|s| block[self.step(q, s)]).collect::<Vec<_>>(),
                );
                let n = signature.len();
                fresh[q] = *signature.entry(sig).or_insert(n);
            }
            let fresh_count = signature.len();
            block = fresh;
            if fresh_count == count {
                break;
            }
            count = fresh_count;
        }
        // renumber blocks in BFS order for a canonical form
        let block_count = states.iter().map(|&q| block[q]).collect::<BTreeSet<_>>().len();
        let mut renumber = vec![usize::MAX; block_count];
        let mut order = Vec::new();
        let mut queue = vec![block[self.initial]];
        renumber[block[self.initial]] = 0;
        order.push(block[self.initial]);
        let mut head = 0;
        // representative state per block
        let mut rep = vec![usize::MAX; block_count];
        for &q in &states {
            if rep[block[q]] == usize::MAX {
                rep[block[q]] = q;
            }
        }
        while head < queue.len() {
            let b = queue[head];
            head += 1;
            for sym in 0..k {
                let tb = block[self.step(rep[b], sym)];
                if renumber[tb] == usize::MAX {
                    renumber[tb] = order.len();
                    order.push(tb);
                    queue.push(tb);
                }
            }
        }
        let m = order.len();
        let mut next = vec![0; m * k];
        let mut accepting = vec![false; m];
        for (new_id, &b) in order.iter().enumerate() {
            accepting[new_id] = self.accepting[rep[b]];
            for sym in 0..k {
                next[new_id * k + sym] = renumber[block[self.step(rep[b], sym)]];
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            states: m,
            initial: 0,
            accepting,
            next,
            minimal: true,
        }
    }
}

/// Language equality via BFS over the product automaton; returns a shortest
/// distinguishing word on failure.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<Equivalence> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    let k = a.alphabet.len();
    let mut seen = BTreeSet::new();
    let mut queue = vec![(a.initial, b.initial)];
    let mut parent: BTreeMap<(usize, usize), ((usize, usize), usize)> = BTreeMap::new();
    seen.insert((a.initial, b.initial));
    let mut head = 0;
    while head < queue.len() {
        let (qa, qb) = queue[head];
        head += 1;
        if a.accepting[qa] != b.accepting[qb] {
            // reconstruct the word
            let mut word = Vec::new();
            let mut cur = (qa, qb);
            while let Some(&(prev, sym)) = parent.get(&cur) {
                word.push(a.alphabet[sym].clone());
                cur = prev;
            }
            word.reverse();
            return Ok(Equivalence::Counterexample(word));
        }
        for sym in 0..k {
            let to = (a.step(qa, sym), b.step(qb, sym));
            if seen.insert(to) {
                parent.insert(to, ((qa, qb), sym));
                queue.push(to);
            }
        }
    }
    Ok(Equivalence::Equivalent)
}

/// All accepted words of length at most `max_len`, in length-lexicographic
/// order (lexicographic by alphabet index within each length).
pub fn enumerate(d: &Dfa, max_len: usize) -> Vec<Vec<String>> {
    let k = d.alphabet.len();
    let mut out = Vec::new();
    let mut layer: Vec<(usize, Vec<usize>)> = vec![(d.initial, Vec::new())];
    for len in 0..=max_len {
        for (q, word) in &layer {
            if d.accepting[*q] {
                out.push(word.iter().map(|&s| d.alphabet[s].clone()).collect());
            }
        }
        if len == max_len {
            break;
        }
        let mut next_layer = Vec::new();
        for (q, word) in &layer {
            for sym in 0..k {
                let mut w = word.clone();
                w.push(sym);
                next_layer.push((d.step(*q, sym), w));
            }
        }
        layer = next_layer;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ab() -> Vec<String> {
        vec!["a".to_string(), "b".to_string()]
    }

    /// NFA for (ab)*: states 0 (start, accepting) and 1.
    fn ab_star_nfa() -> Nfa {
        Nfa {
            alphabet: ab(),
            states: 2,
            initial: 0,
            accepting: vec![true, false],
            transitions: vec![(0, Some(0), 1), (1, Some(1), 0)],
        }
    }

    // word-enumeration oracle: all words of length <= n accepted directly on
    // the NFA by breadth-first simulation
    fn nfa_words(n: &Nfa, max_len: usize) -> Vec<Vec<String>> {
        let mut out = Vec::new();
        let start: BTreeSet<usize> = n.epsilon_closure(&BTreeSet::from([n.initial]));
        let mut layer = vec![(start, Vec::new())];
        for len in 0..=max_len {
            for (set, word) in &layer {
                if set.iter().any(|&q| n.accepting[q]) {
                    out.push(word.clone());
                }
            }
            if len == max_len {
                break;
            }
            let mut next_layer = Vec::new();
            for (set, word) in &layer {
                for sym in 0..n.alphabet.len() {
                    let mut step = BTreeSet::new();
                    for &(from, s, to) in &n.transitions {
                        if s == Some(sym) && set.contains(&from) {
                            step.insert(to);
                        }
                    }
                    let step = n.epsilon_closure(&step);
                    let mut w = word.clone();
                    w.push(n.alphabet[sym].clone());
                    next_layer.push((step, w));
                }
            }
            layer = next_layer;
        }
        out
    }

    #[test]
    fn determinize_ab_star() {
        let d = ab_star_nfa().determinize();
        assert_eq!(d.states, 3); // even-position, odd-position, sink
        assert_eq!(enumerate(&d, 6), nfa_words(&ab_star_nfa(), 6));
    }

    #[test]
    fn determinize_empty_nfa() {
        let n = Nfa {
            alphabet: ab(),
            states: 1,
            initial: 0,
            accepting: vec![false],
            transitions: vec![],
        };
        let d = n.determinize().minimize();
        assert_eq!(d.states, 1);
        assert!(enumerate(&d, 4).is_empty());
    }

    #[test]
    fn minimize_even_bs() {
        // 4-state DFA for {b^n : n even} over {b}, with duplicated states
        let d = Dfa {
            alphabet: vec!["b".to_string()],
            states: 4,
            initial: 0,
            accepting: vec![true, false, true, false],
            next: vec![1, 2, 3, 0],
            minimal: false,
        };
        let m = d.minimize();
        assert_eq!(m.states, 2); // Myhill-Nerode: two classes
        assert!(m.accepts(&[]));
        assert!(!m.accepts(&[0]));
        assert!(m.accepts(&[0, 0]));
    }

    #[test]
    fn minimize_is_idempotent() {
        let d = ab_star_nfa().determinize().minimize();
        let again = d.minimize();
        assert_eq!(d.states, again.states);
        assert_eq!(equivalent(&d, &again).unwrap(), Equivalence::Equivalent);
    }

    #[test]
    fn all_accepting_total_dfa_minimizes_to_one_state() {
        let d = Dfa {
            alphabet: ab(),
            states: 3,
            initial: 0,
            accepting: vec![true, true, true],
            next: vec![1, 2, 0, 1, 2, 0],
            minimal: false,
        };
        assert_eq!(d.minimize().states, 1);
    }

    #[test]
    fn equivalent_finds_shortest_counterexample() {
        let even = Dfa {
            alphabet: vec!["b".to_string()],
            states: 2,
            initial: 0,
            accepting: vec![true, false],
            next: vec![1, 0],
            minimal: true,
        };
        let odd = Dfa {
            accepting: vec![false, true],
            ..even.clone()
        };
        match equivalent(&even, &odd).unwrap() {
            Equivalence::Counterexample(w) => assert!(w.is_empty()), // epsilon distinguishes
            _ => panic!("expected a counterexample"),
        }
        assert_eq!(
            equivalent(&even, &ab_star_nfa().determinize()).unwrap_err(),
            Error::AlphabetMismatch
        );
    }

    #[test]
    fn determinization_preserves_language() {
        let d = ab_star_nfa().determinize();
        assert_eq!(
            equivalent(&d, &d.minimize()).unwrap(),
            Equivalence::Equivalent
        );
    }

    #[test]
    fn enumerate_sigma_star() {
        let d = Dfa {
            alphabet: vec!["a".to_string()],
            states: 1,
            initial: 0,
            accepting: vec![true],
            next: vec![0],
            minimal: true,
        };
        let words = enumerate(&d, 2);
        assert_eq!(words.len(), 3); // epsilon, a, aa
        assert!(words[0].is_empty());
        assert_eq!(words[2].len(), 2);
    }
}
