//! Rees matrix semigroups `M(T; I, J; P)` and `M^0(T; I, J; P)`, and the
//! decomposition of finite completely (0-)simple semigroups into Rees
//! coordinates.
//!
//! Elements are triples `(i, t, j)` with `t` in the base semigroup `T`, plus
//! a zero when requested. The sandwich matrix `P` is `J x I` with entries in
//! `T` or zero, and mediates every product:
//! `(i,t,j)(i',t',j') = (i, t P_{ji'} t', j')` when `P_{ji'}` is nonzero.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::backend::{Elem, Semigroup};
use crate::error::{Error, Result};
use crate::semigroup::{Classification, FiniteSemigroup};

/// A `J x I` matrix over the base semigroup with optional zero entries
/// (`None` is the zero symbol).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SandwichMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Option<Elem>>,
}

impl SandwichMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Vec<Option<Elem>>>) -> Result<Self> {
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch);
        }
        Ok(SandwichMatrix {
            rows,
            cols,
            entries: entries.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry `P_{ji}`.
    pub fn get(&self, j: usize, i: usize) -> Option<&Elem> {
        self.entries[j * self.cols + i].as_ref()
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries.iter().any(|e| e.is_none())
    }

    /// True iff every row and every column contains a nonzero entry.
    pub fn is_regular(&self) -> bool {
        (0..self.rows).all(|j| (0..self.cols).any(|i| self.get(j, i).is_some()))
            && (0..self.cols).all(|i| (0..self.rows).any(|j| self.get(j, i).is_some()))
    }
}

/// The Rees matrix semigroup `M(T; I, J; P)` or `M^0(T; I, J; P)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ReesSemigroup {
    base: Box<Semigroup>,
    p: SandwichMatrix,
    with_zero: bool,
}

impl ReesSemigroup {
    pub fn new(base: Semigroup, p: SandwichMatrix, with_zero: bool) -> Result<Self> {
        if !with_zero && p.has_zero_entry() {
            return Err(Error::ZeroEntryInMatrixWithoutZero);
        }
        for j in 0..p.rows() {
            for i in 0..p.cols() {
                if let Some(e) = p.get(j, i) {
                    if !base.contains(e) {
                        return Err(Error::InvalidElement);
                    }
                }
            }
        }
        Ok(ReesSemigroup {
            base: Box::new(base),
            p,
            with_zero,
        })
    }

    pub fn base(&self) -> &Semigroup {
        &self.base
    }

    pub fn sandwich(&self) -> &SandwichMatrix {
        &self.p
    }

    pub fn i_count(&self) -> usize {
        self.p.cols()
    }

    pub fn j_count(&self) -> usize {
        self.p.rows()
    }

    pub fn with_zero(&self) -> bool {
        self.with_zero
    }

    pub fn triple(&self, i: usize, t: Elem, j: usize) -> Result<Elem> {
        if i >= self.i_count() || j >= self.j_count() {
            return Err(Error::IndexOutOfRange);
        }
        if !self.base.contains(&t) {
            return Err(Error::InvalidElement);
        }
        Ok(Elem::Triple(i, Box::new(t), j))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        match (a, b) {
            (Elem::Zero, _) | (_, Elem::Zero) => Ok(Elem::Zero),
            (Elem::Triple(i, t, j), Elem::Triple(i2, t2, j2)) => match self.p.get(*j, *i2) {
                Some(pe) => {
                    let mid = self.base.mul(t, pe)?;
                    let prod = self.base.mul(&mid, t2)?;
                    Ok(Elem::Triple(*i, Box::new(prod), *j2))
                }
                None => Ok(Elem::Zero),
            },
            _ => Err(Error::InvalidElement),
        }
    }

    /// Two-sided identity, when one exists (only in degenerate 1x1 cases).
    pub fn identity(&self) -> Option<Elem> {
        let elems = self.elements().ok()?;
        elems.iter().cloned().find(|e| {
            elems.iter().all(|x| {
                self.mul(e, x).map(|p| p == *x).unwrap_or(false)
                    && self.mul(x, e).map(|p| p == *x).unwrap_or(false)
            })
        })
    }

    /// All elements, when the base is finite. Triples come in `(i, t, j)`
    /// lexicographic order; the zero, if any, comes last.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        let base_elems = self.base.elements()?;
        let mut out = Vec::new();
        for i in 0..self.i_count() {
            for t in &base_elems {
                for j in 0..self.j_count() {
                    out.push(Elem::Triple(i, Box::new(t.clone()), j));
                }
            }
        }
        if self.with_zero {
            out.push(Elem::Zero);
        }
        Ok(out)
    }

    /// Enumerates the multiplication table and validates it. Returns the
    /// finite semigroup and the element list in table order.
    pub fn materialize(&self) -> Result<(FiniteSemigroup, Vec<Elem>)> {
        let elems = self.elements()?;
        let n = elems.len();
        let index_of = |e: &Elem| elems.iter().position(|x| x == e);
        let mut table = vec![vec![0; n]; n];
        for (a, x) in elems.iter().enumerate() {
            for (b, y) in elems.iter().enumerate() {
                let p = self.mul(x, y)?;
                table[a][b] = index_of(&p).ok_or(Error::Internal("product escaped carrier"))?;
            }
        }
        let s = FiniteSemigroup::validate_table(table)?;
        Ok((s, elems))
    }

    /// The maximal subgroup at coordinates `(i, j)`, with the isomorphism
    /// `phi : G -> H, g -> (i, P_ji^{-1} g, j)` from the base group.
    pub fn max_subgroup_coords(&self, i: usize, j: usize) -> Result<MaxSubgroupCoords> {
        if i >= self.i_count() || j >= self.j_count() {
            return Err(Error::IndexOutOfRange);
        }
        if !self.base.is_group() {
            return Err(Error::NotAGroup);
        }
        let sandwich = self.p.get(j, i).cloned().ok_or(Error::ZeroSandwichEntry)?;
        let sandwich_inv = self
            .base
            .inverse(&sandwich)
            .ok_or(Error::Internal("group element without inverse"))?;
        Ok(MaxSubgroupCoords {
            i,
            j,
            sandwich,
            sandwich_inv,
        })
    }
}

/// The maximal subgroup `H = {(i, g, j)}` of a Rees matrix semigroup over a
/// group, together with the sandwich entry that defines the isomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaxSubgroupCoords {
    pub i: usize,
    pub j: usize,
    pub sandwich: Elem,
    sandwich_inv: Elem,
}

impl MaxSubgroupCoords {
    /// `phi(g) = (i, P_ji^{-1} g, j)`.
    pub fn phi(&self, s: &ReesSemigroup, g: &Elem) -> Result<Elem> {
        let t = s.base().mul(&self.sandwich_inv, g)?;
        s.triple(self.i, t, self.j)
    }

    /// `phi^{-1}((i, h, j)) = P_ji h`.
    pub fn phi_inv(&self, s: &ReesSemigroup, h: &Elem) -> Result<Elem> {
        match h {
            Elem::Triple(i, t, j) if *i == self.i && *j == self.j => {
                s.base().mul(&self.sandwich, t)
            }
            _ => Err(Error::InvalidElement),
        }
    }

    /// Materializes `H` as a finite group isomorphic to the base, when the
    /// base is finite.
    pub fn group(&self, s: &ReesSemigroup) -> Result<FiniteSemigroup> {
        match s.base() {
            Semigroup::Finite(g) => Ok(g.clone()),
            _ => Err(Error::BackendNotFinite),
        }
    }
}

/// Rees coordinates for a finite completely (0-)simple semigroup.
#[derive(Clone, Debug)]
pub struct ReesDecomposition {
    pub rees: ReesSemigroup,
    /// `to_rees[x]` is the coordinate form of element `x`.
    pub to_rees: Vec<Elem>,
}

impl ReesDecomposition {
    pub fn from_rees(&self, e: &Elem) -> Option<usize> {
        self.to_rees.iter().position(|x| x == e)
    }
}

/// Decomposes a finite completely simple or completely 0-simple semigroup
/// into a Rees matrix semigroup over its maximal subgroup, with the sandwich
/// matrix normalized so the first row and column are identities where
/// nonzero. The isomorphism is verified exhaustively before returning.
pub fn rees_decompose(s: &FiniteSemigroup) -> Result<ReesDecomposition> {
    let with_zero = match s.classify() {
        Classification::Simple => false,
        Classification::ZeroSimple => true,
        Classification::Neither => return Err(Error::NotCompletelyZeroSimple),
    };
    if !s.has_primitive_idempotent() {
        return Err(Error::NotCompletelyZeroSimple);
    }
    let zero = if with_zero { s.zero() } else { None };
    let nonzero = |x: usize| Some(x) != zero;

    let green = s.green_relations();
    let mut i_ids: Vec<usize> = Vec::new();
    let mut j_ids: Vec<usize> = Vec::new();
    for x in s.elements().filter(|&x| nonzero(x)) {
        if !i_ids.contains(&green.r_class[x]) {
            i_ids.push(green.r_class[x]);
        }
        if !j_ids.contains(&green.l_class[x]) {
            j_ids.push(green.l_class[x]);
        }
    }

    let e = s
        .idempotents()
        .iter()
        .find(|&x| nonzero(x))
        .ok_or(Error::NotCompletelyZeroSimple)?;
    // put the idempotent's classes first
    i_ids.retain(|&c| c != green.r_class[e]);
    i_ids.insert(0, green.r_class[e]);
    j_ids.retain(|&c| c != green.l_class[e]);
    j_ids.insert(0, green.l_class[e]);

    let (g, emb) = s.maximal_subgroup_at(e)?;
    let mut g_index = vec![usize::MAX; s.order()];
    for (k, &x) in emb.iter().enumerate() {
        g_index[x] = k;
    }
    let g_id = g.identity().ok_or(Error::Internal("group without identity"))?;

    let pick = |rc: usize, lc: usize| {
        s.elements()
            .filter(|&x| nonzero(x))
            .find(|&x| green.r_class[x] == rc && green.l_class[x] == lc)
            .ok_or(Error::Internal("empty H-class in completely (0-)simple semigroup"))
    };
    let r_rep: Vec<usize> = i_ids
        .iter()
        .map(|&rc| pick(rc, j_ids[0]))
        .collect::<Result<_>>()?;
    let q_rep: Vec<usize> = j_ids
        .iter()
        .map(|&lc| pick(i_ids[0], lc))
        .collect::<Result<_>>()?;

    // raw sandwich entries q_j * r_i, in G coordinates
    let ni = i_ids.len();
    let nj = j_ids.len();
    let mut raw = vec![vec![None; ni]; nj];
    for (j, &qj) in q_rep.iter().enumerate() {
        for (i, &ri) in r_rep.iter().enumerate() {
            let prod = s.mul(qj, ri);
            if nonzero(prod) {
                let gi = g_index[prod];
                if gi == usize::MAX {
                    return Err(Error::Internal("sandwich product outside maximal subgroup"));
                }
                raw[j][i] = Some(gi);
            }
        }
    }

    // normalize first row and column to the identity where nonzero
    let inv = |x: usize| g.inverse(x).unwrap();
    let u: Vec<usize> = (0..ni).map(|i| raw[0][i].map_or(g_id, inv)).collect();
    let v: Vec<usize> = (0..nj).map(|j| raw[j][0].map_or(g_id, inv)).collect();
    let p_rows: Vec<Vec<Option<Elem>>> = (0..nj)
        .map(|j| {
            (0..ni)
                .map(|i| raw[j][i].map(|x| Elem::Idx(g.mul(g.mul(v[j], x), u[i]))))
                .collect()
        })
        .collect();
    let p = SandwichMatrix::new(nj, ni, p_rows)?;
    let rees = ReesSemigroup::new(Semigroup::Finite(g.clone()), p, with_zero)?;

    // iso: (i, x, j) -> r_i * emb[u_i * x * v_j] * q_j, computed in S
    let psi = |i: usize, x: usize, j: usize| {
        let h = emb[g.mul(g.mul(u[i], x), v[j])];
        s.mul(s.mul(r_rep[i], h), q_rep[j])
    };
    let mut to_rees = vec![Elem::Zero; s.order()];
    let mut seen = vec![false; s.order()];
    for i in 0..ni {
        for x in 0..g.order() {
            for j in 0..nj {
                let target = psi(i, x, j);
                if !nonzero(target) || seen[target] {
                    return Err(Error::Internal("decomposition map is not a bijection"));
                }
                seen[target] = true;
                to_rees[target] = Elem::Triple(i, Box::new(Elem::Idx(x)), j);
            }
        }
    }
    if let Some(z) = zero {
        seen[z] = true;
        to_rees[z] = Elem::Zero;
    }
    if seen.iter().any(|&b| !b) {
        return Err(Error::Internal("decomposition map is not surjective"));
    }
    // verify the homomorphism exhaustively
    for x in s.elements() {
        for y in s.elements() {
            let lhs = to_rees[s.mul(x, y)].clone();
            let rhs = rees.mul(&to_rees[x], &to_rees[y])?;
            if lhs != rhs {
                return Err(Error::Internal("decomposition map is not a homomorphism"));
            }
        }
    }
    Ok(ReesDecomposition { rees, to_rees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{r1, r2};
    use crate::semigroup::Subset;

    fn z2() -> Semigroup {
        Semigroup::Finite(FiniteSemigroup::cyclic(2))
    }

    fn triple(i: usize, t: usize, j: usize) -> Elem {
        Elem::Triple(i, Box::new(Elem::Idx(t)), j)
    }

    #[test]
    fn multiplication_follows_the_sandwich() {
        let s = r2();
        // (0,e,0)(0,a,0) with P_00 = e
        assert_eq!(
            s.mul(&triple(0, 0, 0), &triple(0, 1, 0)).unwrap(),
            triple(0, 1, 0)
        );
        // crossing the zero entry P_11
        assert_eq!(
            s.mul(&triple(0, 0, 1), &triple(1, 0, 0)).unwrap(),
            Elem::Zero
        );
        assert_eq!(s.mul(&Elem::Zero, &triple(0, 0, 0)).unwrap(), Elem::Zero);
        assert_eq!(s.mul(&triple(0, 0, 0), &Elem::Zero).unwrap(), Elem::Zero);
    }

    #[test]
    fn zero_entries_forbidden_without_zero() {
        let p = SandwichMatrix::new(1, 1, vec![vec![None]]).unwrap();
        assert_eq!(
            ReesSemigroup::new(z2(), p, false).unwrap_err(),
            Error::ZeroEntryInMatrixWithoutZero
        );
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert_eq!(
            SandwichMatrix::new(2, 2, vec![vec![Some(Elem::Idx(0))]]).unwrap_err(),
            Error::DimensionMismatch
        );
    }

    #[test]
    fn r1_is_simple() {
        let (s, _) = r1().materialize().unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.classify(), Classification::Simple);
        assert!(s.is_completely_simple_or_zero_simple());
    }

    #[test]
    fn r2_is_zero_simple() {
        let (s, elems) = r2().materialize().unwrap();
        assert_eq!(s.order(), 9);
        assert_eq!(s.classify(), Classification::ZeroSimple);
        assert!(s.is_completely_simple_or_zero_simple());
        assert_eq!(elems.last(), Some(&Elem::Zero));
    }

    #[test]
    fn identity_sandwich_1x1_is_isomorphic_to_base() {
        let p = SandwichMatrix::new(1, 1, vec![vec![Some(Elem::Idx(0))]]).unwrap();
        let s = ReesSemigroup::new(z2(), p, false).unwrap();
        let (m, _) = s.materialize().unwrap();
        assert_eq!(m.order(), 2);
        assert!(m.is_group());
        // the isomorphism phi at (0,0) is the identity map
        let h = s.max_subgroup_coords(0, 0).unwrap();
        for g in 0..2 {
            assert_eq!(h.phi(&s, &Elem::Idx(g)).unwrap(), triple(0, g, 0));
        }
    }

    #[test]
    fn regular_matrix_detection() {
        assert!(r2().sandwich().is_regular());
        let p = SandwichMatrix::new(
            2,
            2,
            vec![vec![None, None], vec![Some(Elem::Idx(0)), Some(Elem::Idx(0))]],
        )
        .unwrap();
        assert!(!p.is_regular());
        let p1 = SandwichMatrix::new(1, 1, vec![vec![Some(Elem::Idx(0))]]).unwrap();
        assert!(p1.is_regular());
    }

    #[test]
    fn max_subgroup_phi_is_a_homomorphism() {
        let s = r1();
        let h = s.max_subgroup_coords(0, 0).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let pa = h.phi(&s, &Elem::Idx(a)).unwrap();
                let pb = h.phi(&s, &Elem::Idx(b)).unwrap();
                let lhs = s.mul(&pa, &pb).unwrap();
                let prod = Elem::Idx((a + b) % 2);
                assert_eq!(lhs, h.phi(&s, &prod).unwrap());
                // phi_inv inverts phi
                assert_eq!(h.phi_inv(&s, &pa).unwrap(), Elem::Idx(a));
            }
        }
    }

    #[test]
    fn max_subgroup_at_zero_sandwich_entry_fails() {
        assert_eq!(
            r2().max_subgroup_coords(1, 1).unwrap_err(),
            Error::ZeroSandwichEntry
        );
    }

    #[test]
    fn decompose_group_is_1x1() {
        let z3 = FiniteSemigroup::cyclic(3);
        let d = rees_decompose(&z3).unwrap();
        assert_eq!(d.rees.i_count(), 1);
        assert_eq!(d.rees.j_count(), 1);
        assert!(!d.rees.with_zero());
        assert_eq!(d.rees.base().as_finite().unwrap().order(), 3);
    }

    #[test]
    fn decompose_rejects_non_simple() {
        assert_eq!(
            rees_decompose(&FiniteSemigroup::nilpotent_monoid()).unwrap_err(),
            Error::NotCompletelyZeroSimple
        );
    }

    #[test]
    fn decompose_recovers_r1_shape_from_shuffled_table() {
        let (s, _) = r1().materialize().unwrap();
        // shuffle the element order
        let perm = [2usize, 0, 3, 1];
        let mut inv = [0usize; 4];
        for (a, &b) in perm.iter().enumerate() {
            inv[b] = a;
        }
        let rows: Vec<Vec<usize>> = (0..4)
            .map(|x| (0..4).map(|y| inv[s.mul(perm[x], perm[y])]).collect())
            .collect();
        let shuffled = FiniteSemigroup::validate_table(rows).unwrap();
        let d = rees_decompose(&shuffled).unwrap();
        assert_eq!(d.rees.base().as_finite().unwrap().order(), 2);
        assert_eq!(d.rees.i_count() * d.rees.j_count(), 2);
        assert!(!d.rees.with_zero());
    }

    #[test]
    fn decompose_normalizes_first_row_and_column() {
        let (s, _) = r2().materialize().unwrap();
        let d = rees_decompose(&s).unwrap();
        let g = d.rees.base().as_finite().unwrap();
        let id = g.identity().unwrap();
        let p = d.rees.sandwich();
        for i in 0..p.cols() {
            if let Some(e) = p.get(0, i) {
                assert_eq!(*e, Elem::Idx(id));
            }
        }
        for j in 0..p.rows() {
            if let Some(e) = p.get(j, 0) {
                assert_eq!(*e, Elem::Idx(id));
            }
        }
    }

    #[test]
    fn left_zero_decomposes_over_trivial_group() {
        let s = FiniteSemigroup::left_zero(3);
        let d = rees_decompose(&s).unwrap();
        assert_eq!(d.rees.base().as_finite().unwrap().order(), 1);
        assert_eq!(d.rees.i_count(), 3);
        assert_eq!(d.rees.j_count(), 1);
    }

    #[test]
    fn materialized_rees_multiplication_is_associative_for_corpus() {
        // materialize() runs validate_table, which is the exhaustive check
        for s in [r1(), r2()] {
            s.materialize().unwrap();
        }
    }

    #[test]
    fn quotient_of_r2_by_zero_ideal_keeps_classification() {
        let (s, _) = r2().materialize().unwrap();
        let z = s.zero().unwrap();
        let (q, _, _) = s.rees_quotient(&Subset::singleton(9, z)).unwrap();
        assert_eq!(q.classify(), Classification::ZeroSimple);
    }
}
