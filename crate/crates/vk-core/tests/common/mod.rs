//! Shared seeded generators for the integration suites.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use vk_core::{
    Elem, FiniteSemigroup, RationalSubset, ReesSemigroup, SAutomaton, SandwichMatrix, Semigroup,
    ValenceAutomaton,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet2() -> Vec<String> {
    vec!["a".to_string(), "b".to_string()]
}

/// Monoids of order at most 5 with a proper ideal: the hand-picked corpus
/// plus random transformation monoids on 3 points.
pub fn monoids_with_proper_ideals() -> Vec<FiniteSemigroup> {
    let keep = |m: &FiniteSemigroup| {
        m.order() <= 5 && m.proper_ideal_union().ok().flatten().is_some()
    };
    let mut out: Vec<FiniteSemigroup> = vk_core::corpus::small_monoids()
        .into_iter()
        .filter(keep)
        .collect();
    let mut r = rng(0xA11CE);
    let mut tries = 0;
    while out.len() < 8 && tries < 500 {
        tries += 1;
        if let Some(m) = transformation_monoid(&mut r) {
            if keep(&m) && !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out
}

/// The closure of one or two random self-maps of a 3-point set under
/// composition, together with the identity map.
pub fn transformation_monoid(r: &mut ChaCha8Rng) -> Option<FiniteSemigroup> {
    let n = 3usize;
    let k = r.gen_range(1..=2);
    let mut maps: Vec<Vec<usize>> = vec![(0..n).collect()];
    for _ in 0..k {
        let f: Vec<usize> = (0..n).map(|_| r.gen_range(0..n)).collect();
        if !maps.contains(&f) {
            maps.push(f);
        }
    }
    loop {
        let mut added = false;
        let cur = maps.clone();
        for f in &cur {
            for g in &cur {
                let fg: Vec<usize> = (0..n).map(|x| f[g[x]]).collect();
                if !maps.contains(&fg) {
                    maps.push(fg);
                    added = true;
                }
            }
        }
        if maps.len() > 8 {
            return None;
        }
        if !added {
            break;
        }
    }
    let m = maps.len();
    let idx = |f: &Vec<usize>| maps.iter().position(|x| x == f).unwrap();
    let table: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let fg: Vec<usize> = (0..n).map(|x| maps[a][maps[b][x]]).collect();
                    idx(&fg)
                })
                .collect()
        })
        .collect();
    FiniteSemigroup::validate_table(table).ok()
}

/// A random regular sandwich matrix over the group, with zero entries only
/// when the semigroup carries a zero.
pub fn random_rees(
    r: &mut ChaCha8Rng,
    g: &FiniteSemigroup,
    ni: usize,
    nj: usize,
    with_zero: bool,
) -> ReesSemigroup {
    let ord = g.order();
    let mut rows: Vec<Vec<Option<Elem>>> = (0..nj)
        .map(|_| {
            (0..ni)
                .map(|_| {
                    if with_zero && r.gen_bool(0.3) {
                        None
                    } else {
                        Some(Elem::Idx(r.gen_range(0..ord)))
                    }
                })
                .collect()
        })
        .collect();
    for j in 0..nj {
        if rows[j].iter().all(|e| e.is_none()) {
            let i = r.gen_range(0..ni);
            rows[j][i] = Some(Elem::Idx(r.gen_range(0..ord)));
        }
    }
    for i in 0..ni {
        if (0..nj).all(|j| rows[j][i].is_none()) {
            let j = r.gen_range(0..nj);
            rows[j][i] = Some(Elem::Idx(r.gen_range(0..ord)));
        }
    }
    let p = SandwichMatrix::new(nj, ni, rows).unwrap();
    ReesSemigroup::new(Semigroup::Finite(g.clone()), p, with_zero).unwrap()
}

/// A deterministic family of Rees instances over Z2, Z3 and S3, with and
/// without zero, all coordinate sizes up to 3.
pub fn rees_instances(seed: u64) -> Vec<ReesSemigroup> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for g in vk_core::corpus::groups() {
        for with_zero in [false, true] {
            for _ in 0..2 {
                let ni = r.gen_range(1..=3);
                let nj = r.gen_range(1..=3);
                out.push(random_rees(&mut r, &g, ni, nj, with_zero));
            }
        }
    }
    out
}

pub fn random_s_automaton(r: &mut ChaCha8Rng, owner: &Semigroup) -> SAutomaton {
    let elems = owner.elements().unwrap();
    let q = r.gen_range(1..=4);
    let ne = r.gen_range(1..=2 * q + 2);
    let edges: Vec<(usize, Elem, usize)> = (0..ne)
        .map(|_| {
            (
                r.gen_range(0..q),
                elems[r.gen_range(0..elems.len())].clone(),
                r.gen_range(0..q),
            )
        })
        .collect();
    let initial = r.gen_range(0..q);
    let terminal: Vec<usize> = (0..q).filter(|_| r.gen_bool(0.5)).collect();
    SAutomaton::new(owner.clone(), q, initial, terminal, edges).unwrap()
}

pub fn random_subset(r: &mut ChaCha8Rng, owner: &Semigroup, p: f64) -> RationalSubset {
    let elems = owner.elements().unwrap();
    let chosen: Vec<Elem> = elems.into_iter().filter(|_| r.gen_bool(p)).collect();
    RationalSubset::from_elements(owner.clone(), chosen).unwrap()
}

/// A random valence automaton with at most 4 vertices, edge words of length
/// at most 1, and the given initial and terminal subsets.
pub fn random_valence(
    r: &mut ChaCha8Rng,
    owner: Semigroup,
    alphabet: Vec<String>,
    x0: RationalSubset,
    x1: RationalSubset,
) -> ValenceAutomaton {
    let elems = owner.elements().unwrap();
    let q = r.gen_range(1..=4);
    let ne = r.gen_range(1..=3 * q);
    let edges: Vec<(usize, Elem, Vec<usize>, usize)> = (0..ne)
        .map(|_| {
            let word = if r.gen_bool(0.3) {
                Vec::new()
            } else {
                vec![r.gen_range(0..alphabet.len())]
            };
            (
                r.gen_range(0..q),
                elems[r.gen_range(0..elems.len())].clone(),
                word,
                r.gen_range(0..q),
            )
        })
        .collect();
    let terminal: Vec<usize> = (0..q).filter(|_| r.gen_bool(0.5)).collect();
    ValenceAutomaton::new(owner, alphabet, q, 0, terminal, edges, x0, x1).unwrap()
}

/// A random plain M-automaton (initial and terminal sets are `{1}`).
pub fn random_plain_machine(
    r: &mut ChaCha8Rng,
    m: &FiniteSemigroup,
    alphabet: Vec<String>,
) -> ValenceAutomaton {
    let s = Semigroup::Finite(m.clone());
    let unit =
        RationalSubset::singleton(s.clone(), Elem::Idx(m.identity().unwrap())).unwrap();
    random_valence(r, s, alphabet, unit.clone(), unit)
}
