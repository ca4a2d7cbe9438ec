//! Finite semigroups as multiplication tables.
//!
//! Elements are dense indices `0..n`; optional labels are presentation-only.
//! Everything here is exhaustive: ideals, Green's relations, classification
//! and maximal subgroups are computed directly from the table.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A subset of a fixed finite universe, stored as a bitset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subset {
    universe: usize,
    bits: Vec<u64>,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset {
            universe,
            bits: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for x in 0..universe {
            s.insert(x);
        }
        s
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    pub fn from_elements(universe: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for x in elems {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.bits[x / 64] >> (x % 64) & 1 == 1
    }

    /// Returns true if the element was not already present.
    pub fn insert(&mut self, x: usize) -> bool {
        debug_assert!(x < self.universe);
        let fresh = !self.contains(x);
        self.bits[x / 64] |= 1 << (x % 64);
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.universe {
            self.bits[x / 64] &= !(1 << (x % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&x| self.contains(x))
    }

    pub fn union_with(&mut self, other: &Subset) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

/// What `adjoin` should add.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Adjoin {
    Zero,
    Identity,
}

/// Classification by ideal structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    /// No proper ideals.
    Simple,
    /// Has a zero and the only proper ideal is `{0}`.
    ZeroSimple,
    Neither,
}

/// Identity, zero and idempotents of a finite semigroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Distinguished {
    pub identity: Option<usize>,
    pub zero: Option<usize>,
    pub idempotents: Subset,
}

/// Green's relations R, L and H, as class indices per element plus the
/// classes themselves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GreenRelations {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
}

/// Result of reducing a finite monoid to its simple or 0-simple core.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonoidReduction {
    pub reduced: FiniteSemigroup,
    /// Projection from the original elements onto the reduced ones, or the
    /// identity map when the monoid was already simple.
    pub projection: Vec<usize>,
    pub classification: Classification,
    /// True when the reduced monoid is a group or a group with zero; always
    /// holds for finite monoids and certifies the group case of the
    /// trichotomy.
    pub group_case: bool,
}

/// A finite semigroup given by its multiplication table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FiniteSemigroup {
    n: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates a square table for closure and associativity.
    pub fn validate_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::IndexOutOfRange);
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::IndexOutOfRange);
            }
            for &v in row {
                if v >= n {
                    return Err(Error::IndexOutOfRange);
                }
                flat.push(v);
            }
        }
        let s = FiniteSemigroup {
            n,
            table: flat,
            labels: None,
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z)) {
                        return Err(Error::AssociativityViolation(x, y, z));
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch);
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, x: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[x].as_str())
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn zero(&self) -> Option<usize> {
        (0..self.n).find(|&z| (0..self.n).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    pub fn idempotents(&self) -> Subset {
        Subset::from_elements(self.n, (0..self.n).filter(|&e| self.mul(e, e) == e))
    }

    pub fn distinguished_elements(&self) -> Distinguished {
        Distinguished {
            identity: self.identity(),
            zero: self.zero(),
            idempotents: self.idempotents(),
        }
    }

    pub fn is_monoid(&self) -> bool {
        self.identity().is_some()
    }

    /// A finite monoid is a group iff its table is a Latin square.
    pub fn is_group(&self) -> bool {
        if self.identity().is_none() {
            return false;
        }
        for x in 0..self.n {
            let mut row = Subset::empty(self.n);
            let mut col = Subset::empty(self.n);
            for y in 0..self.n {
                row.insert(self.mul(x, y));
                col.insert(self.mul(y, x));
            }
            if row.len() != self.n || col.len() != self.n {
                return false;
            }
        }
        true
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        let e = self.identity()?;
        (0..self.n).find(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
    }

    /// Adjoins a fresh zero or identity as element `n`, unconditionally.
    /// Old indices are unchanged.
    pub fn adjoin(&self, kind: Adjoin) -> FiniteSemigroup {
        let n = self.n + 1;
        let mut table = vec![0; n * n];
        for x in 0..self.n {
            for y in 0..self.n {
                table[x * n + y] = self.mul(x, y);
            }
        }
        let fresh = self.n;
        for x in 0..n {
            let (xf, fx) = match kind {
                Adjoin::Zero => (fresh, fresh),
                Adjoin::Identity => (x, x),
            };
            table[x * n + fresh] = xf;
            table[fresh * n + x] = fx;
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push(match kind {
                Adjoin::Zero => String::from("0"),
                Adjoin::Identity => String::from("1"),
            });
            l
        });
        FiniteSemigroup { n, table, labels }
    }

    pub fn is_ideal(&self, i: &Subset) -> bool {
        if i.universe() != self.n || i.is_empty() {
            return false;
        }
        i.iter().all(|x| {
            (0..self.n).all(|s| i.contains(self.mul(s, x)) && i.contains(self.mul(x, s)))
        })
    }

    /// Least ideal containing `x`: closure of `x` under left and right
    /// multiplication by all of `S`.
    pub fn ideal_generated(&self, x: &Subset) -> Result<Subset> {
        if x.universe() != self.n {
            return Err(Error::IndexOutOfRange);
        }
        if x.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        let mut closed = x.clone();
        let mut frontier: Vec<usize> = x.iter().collect();
        while let Some(v) = frontier.pop() {
            for s in 0..self.n {
                for p in [self.mul(s, v), self.mul(v, s)] {
                    if closed.insert(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        Ok(closed)
    }

    /// Union of all proper ideals of a monoid, or `None` when the monoid is
    /// simple. Equals the union of the proper principal ideals.
    pub fn proper_ideal_union(&self) -> Result<Option<Subset>> {
        if !self.is_monoid() {
            return Err(Error::NotAMonoid);
        }
        let mut union = Subset::empty(self.n);
        let mut found = false;
        for x in 0..self.n {
            let principal = self.ideal_generated(&Subset::singleton(self.n, x))?;
            if principal.len() < self.n {
                union.union_with(&principal);
                found = true;
            }
        }
        Ok(if found { Some(union) } else { None })
    }

    /// Rees quotient by an ideal: `I` collapses to a zero, placed last.
    /// Returns the quotient, the projection map, and a degeneracy flag for
    /// the permitted but unused case `I = S`.
    pub fn rees_quotient(&self, ideal: &Subset) -> Result<(FiniteSemigroup, Vec<usize>, bool)> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let degenerate = ideal.len() == self.n;
        let m = self.n - ideal.len() + 1;
        let zero = m - 1;
        let mut projection = vec![zero; self.n];
        let mut kept = Vec::new();
        for x in 0..self.n {
            if !ideal.contains(x) {
                projection[x] = kept.len();
                kept.push(x);
            }
        }
        let mut table = vec![zero; m * m];
        for (a, &x) in kept.iter().enumerate() {
            for (b, &y) in kept.iter().enumerate() {
                table[a * m + b] = projection[self.mul(x, y)];
            }
        }
        // zero row/column already absorbing by initialization
        let labels = self.labels.as_ref().map(|l| {
            let mut out: Vec<String> = kept.iter().map(|&x| l[x].clone()).collect();
            out.push(String::from("0"));
            out
        });
        let q = FiniteSemigroup { n: m, table, labels };
        Ok((q, projection, degenerate))
    }

    pub fn classify(&self) -> Classification {
        let all_full = |skip: Option<usize>| {
            (0..self.n).filter(|&x| Some(x) != skip).all(|x| {
                self.ideal_generated(&Subset::singleton(self.n, x))
                    .map(|i| i.len() == self.n)
                    .unwrap_or(false)
            })
        };
        if all_full(None) {
            return Classification::Simple;
        }
        match self.zero() {
            Some(z) if self.n > 1 && all_full(Some(z)) => Classification::ZeroSimple,
            _ => Classification::Neither,
        }
    }

    /// True if some nonzero idempotent is primitive: `ef = fe = f` with `f`
    /// a nonzero idempotent forces `e = f`.
    pub fn has_primitive_idempotent(&self) -> bool {
        let zero = self.zero();
        let idem: Vec<usize> = self
            .idempotents()
            .iter()
            .filter(|&e| Some(e) != zero)
            .collect();
        idem.iter().any(|&e| {
            idem.iter().all(|&f| {
                if self.mul(e, f) == f && self.mul(f, e) == f {
                    e == f
                } else {
                    true
                }
            })
        })
    }

    pub fn is_completely_simple_or_zero_simple(&self) -> bool {
        matches!(
            self.classify(),
            Classification::Simple | Classification::ZeroSimple
        ) && self.has_primitive_idempotent()
    }

    /// Reduces a finite monoid by the union of its proper ideals and reports
    /// whether the result is a group or group with zero.
    pub fn monoid_reduction(&self) -> Result<MonoidReduction> {
        let union = self.proper_ideal_union()?;
        let (reduced, projection) = match union {
            None => (self.clone(), (0..self.n).collect()),
            Some(i) => {
                let (q, p, _) = self.rees_quotient(&i)?;
                (q, p)
            }
        };
        let classification = reduced.classify();
        let group_case = if reduced.is_group() {
            true
        } else {
            // group with zero: strip the zero and check the rest
            match reduced.zero() {
                Some(z) => {
                    let rest = Subset::from_elements(
                        reduced.n,
                        (0..reduced.n).filter(|&x| x != z),
                    );
                    !rest.is_empty() && reduced.restrict(&rest).map(|g| g.is_group()).unwrap_or(false)
                }
                None => false,
            }
        };
        Ok(MonoidReduction {
            reduced,
            projection,
            classification,
            group_case,
        })
    }

    /// Restriction of the multiplication to a closed subset; errors if the
    /// subset is not closed under the product.
    pub fn restrict(&self, subset: &Subset) -> Result<FiniteSemigroup> {
        let elems: Vec<usize> = subset.iter().collect();
        let m = elems.len();
        if m == 0 {
            return Err(Error::EmptyGeneratorSet);
        }
        let mut index = vec![usize::MAX; self.n];
        for (k, &x) in elems.iter().enumerate() {
            index[x] = k;
        }
        let mut table = vec![0; m * m];
        for (a, &x) in elems.iter().enumerate() {
            for (b, &y) in elems.iter().enumerate() {
                let p = self.mul(x, y);
                if index[p] == usize::MAX {
                    return Err(Error::Internal("subset not closed under multiplication"));
                }
                table[a * m + b] = index[p];
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| elems.iter().map(|&x| l[x].clone()).collect());
        Ok(FiniteSemigroup { n: m, table, labels })
    }

    pub fn green_relations(&self) -> GreenRelations {
        let right_ideal = |x: usize| {
            let mut s = Subset::singleton(self.n, x);
            for y in 0..self.n {
                s.insert(self.mul(x, y));
            }
            s
        };
        let left_ideal = |x: usize| {
            let mut s = Subset::singleton(self.n, x);
            for y in 0..self.n {
                s.insert(self.mul(y, x));
            }
            s
        };
        let classes_of = |key: &dyn Fn(usize) -> Subset| {
            let mut reps: Vec<Subset> = Vec::new();
            let mut class = vec![0; self.n];
            for x in 0..self.n {
                let k = key(x);
                match reps.iter().position(|r| *r == k) {
                    Some(i) => class[x] = i,
                    None => {
                        class[x] = reps.len();
                        reps.push(k);
                    }
                }
            }
            class
        };
        let r_class = classes_of(&right_ideal);
        let l_class = classes_of(&left_ideal);
        // H = R meet L
        let mut h_reps: Vec<(usize, usize)> = Vec::new();
        let mut h_class = vec![0; self.n];
        for x in 0..self.n {
            let k = (r_class[x], l_class[x]);
            match h_reps.iter().position(|r| *r == k) {
                Some(i) => h_class[x] = i,
                None => {
                    h_class[x] = h_reps.len();
                    h_reps.push(k);
                }
            }
        }
        let collect = |class: &[usize]| {
            let count = class.iter().max().map_or(0, |m| m + 1);
            let mut out = vec![Vec::new(); count];
            for (x, &c) in class.iter().enumerate() {
                out[c].push(x);
            }
            out
        };
        GreenRelations {
            r_classes: collect(&r_class),
            l_classes: collect(&l_class),
            h_classes: collect(&h_class),
            r_class,
            l_class,
            h_class,
        }
    }

    /// The maximal subgroup at an idempotent `e`: its H-class with the
    /// induced multiplication. Returns the group and the embedding into `S`.
    pub fn maximal_subgroup_at(&self, e: usize) -> Result<(FiniteSemigroup, Vec<usize>)> {
        if e >= self.n {
            return Err(Error::IndexOutOfRange);
        }
        if self.mul(e, e) != e {
            return Err(Error::NotIdempotent);
        }
        let green = self.green_relations();
        let class = &green.h_classes[green.h_class[e]];
        let subset = Subset::from_elements(self.n, class.iter().copied());
        let group = self
            .restrict(&subset)
            .map_err(|_| Error::HClassNotGroup)?;
        if !group.is_group() {
            return Err(Error::HClassNotGroup);
        }
        Ok((group, class.clone()))
    }

    // ------------------------------------------------------------------
    // builtins

    pub fn trivial() -> FiniteSemigroup {
        FiniteSemigroup {
            n: 1,
            table: vec![0],
            labels: None,
        }
    }

    /// Cyclic group of order `k`, element `x` acting as `x` mod `k`.
    pub fn cyclic(k: usize) -> FiniteSemigroup {
        assert!(k > 0);
        let mut table = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                table[x * k + y] = (x + y) % k;
            }
        }
        FiniteSemigroup {
            n: k,
            table,
            labels: None,
        }
    }

    /// The symmetric group on three points, elements indexed by the
    /// lexicographic order of their one-line notation.
    pub fn symmetric_3() -> FiniteSemigroup {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = vec![0; 36];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                // (p then q): x -> q[p[x]]
                let comp = [q[p[0]], q[p[1]], q[p[2]]];
                table[a * 6 + b] = idx(comp);
            }
        }
        FiniteSemigroup {
            n: 6,
            table,
            labels: None,
        }
    }

    /// Left-zero semigroup: `x * y = x`.
    pub fn left_zero(k: usize) -> FiniteSemigroup {
        assert!(k > 0);
        let mut table = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                table[x * k + y] = x;
            }
        }
        FiniteSemigroup {
            n: k,
            table,
            labels: None,
        }
    }

    /// The three-element monoid `{1, a, 0}` with `a * a = 0`.
    pub fn nilpotent_monoid() -> FiniteSemigroup {
        // indices: 0 = identity, 1 = a, 2 = zero
        FiniteSemigroup::validate_table(vec![
            vec![0, 1, 2],
            vec![1, 2, 2],
            vec![2, 2, 2],
        ])
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    // Independent oracle: enumerate every ideal of a small semigroup by
    // checking each subset directly against the definition.
    fn all_ideals(s: &FiniteSemigroup) -> Vec<Subset> {
        let n = s.order();
        assert!(n <= 12);
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let sub = Subset::from_elements(n, (0..n).filter(|&x| mask >> x & 1 == 1));
            if s.is_ideal(&sub) {
                out.push(sub);
            }
        }
        out
    }

    #[test]
    fn trivial_table_is_valid() {
        let s = FiniteSemigroup::validate_table(vec![vec![0]]).unwrap();
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn z2_is_a_group_with_identity_zero_none() {
        let s = FiniteSemigroup::validate_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let d = s.distinguished_elements();
        assert_eq!(d.identity, Some(0));
        assert_eq!(d.zero, None);
        assert_eq!(d.idempotents.iter().collect::<Vec<_>>(), vec![0]);
        assert!(s.is_group());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        let err = FiniteSemigroup::validate_table(vec![vec![0, 0], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation(..)));
    }

    #[test]
    fn out_of_range_entry_is_rejected() {
        let err = FiniteSemigroup::validate_table(vec![vec![0, 2], vec![1, 0]]).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange);
    }

    #[test]
    fn nilpotent_monoid_distinguished() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let d = m.distinguished_elements();
        assert_eq!(d.identity, Some(0));
        assert_eq!(d.zero, Some(2));
        assert_eq!(d.idempotents.iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn left_zero_idempotents_are_everything() {
        let s = FiniteSemigroup::left_zero(2);
        let d = s.distinguished_elements();
        assert_eq!(d.identity, None);
        assert_eq!(d.zero, None);
        assert_eq!(d.idempotents.len(), 2);
    }

    #[test]
    fn adjoin_zero_to_trivial() {
        let s = FiniteSemigroup::trivial().adjoin(Adjoin::Zero);
        assert_eq!(s.order(), 2);
        assert_eq!(s.mul(0, 1), 1);
        assert_eq!(s.mul(1, 0), 1);
        assert_eq!(s.zero(), Some(1));
    }

    #[test]
    fn adjoin_zero_to_z2_is_group_with_zero() {
        let s = FiniteSemigroup::cyclic(2).adjoin(Adjoin::Zero);
        assert_eq!(s.order(), 3);
        // oracle: recheck the whole table
        let rebuilt = FiniteSemigroup::validate_table(s.rows()).unwrap();
        assert_eq!(rebuilt.zero(), Some(2));
        assert_eq!(rebuilt.identity(), Some(0));
    }

    #[test]
    fn adjoin_identity_to_left_zero() {
        let s = FiniteSemigroup::left_zero(2).adjoin(Adjoin::Identity);
        assert_eq!(s.order(), 3);
        assert_eq!(s.identity(), Some(2));
        FiniteSemigroup::validate_table(s.rows()).unwrap();
    }

    #[test]
    fn ideal_generated_in_nilpotent_monoid() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let i = m.ideal_generated(&Subset::singleton(3, 1)).unwrap();
        assert_eq!(i.iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn ideal_generated_by_everything_is_everything() {
        let m = FiniteSemigroup::symmetric_3();
        let i = m.ideal_generated(&Subset::full(6)).unwrap();
        assert_eq!(i.len(), 6);
    }

    #[test]
    fn left_zero_singleton_generates_whole() {
        let s = FiniteSemigroup::left_zero(2);
        let i = s.ideal_generated(&Subset::singleton(2, 0)).unwrap();
        assert_eq!(i.len(), 2);
    }

    #[test]
    fn ideal_generated_is_least_ideal() {
        // check against enumeration of all ideals for a few small semigroups
        for s in [
            FiniteSemigroup::nilpotent_monoid(),
            FiniteSemigroup::cyclic(4),
            FiniteSemigroup::left_zero(3),
            FiniteSemigroup::cyclic(2).adjoin(Adjoin::Zero),
        ] {
            let n = s.order();
            for x in 0..n {
                let gen = Subset::singleton(n, x);
                let i = s.ideal_generated(&gen).unwrap();
                assert!(s.is_ideal(&i));
                for other in all_ideals(&s) {
                    if other.contains(x) {
                        assert!(i.is_subset_of(&other));
                    }
                }
            }
        }
    }

    #[test]
    fn proper_ideal_union_of_group_is_none() {
        assert_eq!(FiniteSemigroup::cyclic(2).proper_ideal_union().unwrap(), None);
        assert_eq!(FiniteSemigroup::trivial().proper_ideal_union().unwrap(), None);
    }

    #[test]
    fn proper_ideal_union_of_nilpotent_monoid() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let u = m.proper_ideal_union().unwrap().unwrap();
        assert_eq!(u.iter().collect::<Vec<_>>(), vec![1, 2]);
        // oracle: union of all proper ideals by enumeration
        let mut expect = Subset::empty(3);
        for i in all_ideals(&m) {
            if i.len() < 3 {
                expect.union_with(&i);
            }
        }
        assert_eq!(u, expect);
    }

    #[test]
    fn proper_ideal_union_requires_monoid() {
        assert_eq!(
            FiniteSemigroup::left_zero(2).proper_ideal_union().unwrap_err(),
            Error::NotAMonoid
        );
    }

    #[test]
    fn rees_quotient_of_nilpotent_monoid() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let i = Subset::from_elements(3, [1, 2]);
        let (q, proj, degenerate) = m.rees_quotient(&i).unwrap();
        assert!(!degenerate);
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 1]);
        assert_eq!(q.identity(), Some(0));
        assert_eq!(q.zero(), Some(1));
    }

    #[test]
    fn rees_quotient_by_singleton_zero_is_isomorphic_copy() {
        let s = FiniteSemigroup::cyclic(2).adjoin(Adjoin::Zero);
        let z = s.zero().unwrap();
        let (q, proj, _) = s.rees_quotient(&Subset::singleton(3, z)).unwrap();
        assert_eq!(q.order(), 3);
        // projection is a bijection here; products must commute with it
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(proj[s.mul(x, y)], q.mul(proj[x], proj[y]));
            }
        }
    }

    #[test]
    fn rees_quotient_by_everything_is_degenerate() {
        let s = FiniteSemigroup::cyclic(3);
        let (q, _, degenerate) = s.rees_quotient(&Subset::full(3)).unwrap();
        assert!(degenerate);
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn rees_quotient_rejects_non_ideal() {
        let m = FiniteSemigroup::nilpotent_monoid();
        assert_eq!(
            m.rees_quotient(&Subset::singleton(3, 1)).unwrap_err(),
            Error::NotAnIdeal
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(FiniteSemigroup::cyclic(2).classify(), Classification::Simple);
        assert_eq!(
            FiniteSemigroup::nilpotent_monoid().classify(),
            Classification::Neither
        );
        assert_eq!(
            FiniteSemigroup::cyclic(2).adjoin(Adjoin::Zero).classify(),
            Classification::ZeroSimple
        );
        assert_eq!(FiniteSemigroup::left_zero(3).classify(), Classification::Simple);
    }

    #[test]
    fn monoid_reduction_certifies_group_case() {
        let m = FiniteSemigroup::nilpotent_monoid();
        let r = m.monoid_reduction().unwrap();
        assert_eq!(r.reduced.order(), 2); // trivial group with zero
        assert_eq!(r.classification, Classification::ZeroSimple);
        assert!(r.group_case);

        let g = FiniteSemigroup::cyclic(2).monoid_reduction().unwrap();
        assert_eq!(g.reduced.order(), 2);
        assert_eq!(g.classification, Classification::Simple);
        assert!(g.group_case);
    }

    #[test]
    fn green_relations_of_group_are_single_classes() {
        let g = FiniteSemigroup::symmetric_3().green_relations();
        assert_eq!(g.r_classes.len(), 1);
        assert_eq!(g.l_classes.len(), 1);
        assert_eq!(g.h_classes.len(), 1);
    }

    #[test]
    fn green_relations_of_left_zero() {
        let g = FiniteSemigroup::left_zero(2).green_relations();
        assert_eq!(g.r_classes.len(), 2);
        assert_eq!(g.l_classes.len(), 1);
    }

    #[test]
    fn green_relations_of_nilpotent_monoid_are_singletons() {
        let g = FiniteSemigroup::nilpotent_monoid().green_relations();
        let classes: BTreeSet<Vec<usize>> = g.h_classes.into_iter().collect();
        assert_eq!(
            classes,
            BTreeSet::from([vec![0], vec![1], vec![2]])
        );
    }

    #[test]
    fn maximal_subgroup_of_group_is_itself() {
        let g = FiniteSemigroup::cyclic(2);
        let (h, emb) = g.maximal_subgroup_at(0).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(emb, vec![0, 1]);
    }

    #[test]
    fn maximal_subgroup_at_zero_is_trivial() {
        let s = FiniteSemigroup::cyclic(2).adjoin(Adjoin::Zero);
        let (h, emb) = s.maximal_subgroup_at(2).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(emb, vec![2]);
    }

    #[test]
    fn maximal_subgroup_rejects_non_idempotent() {
        let g = FiniteSemigroup::cyclic(3);
        assert_eq!(g.maximal_subgroup_at(1).unwrap_err(), Error::NotIdempotent);
    }

    #[test]
    fn maximal_subgroup_closure_properties() {
        // closed under multiplication, has identity, has inverses
        for (s, e) in [
            (FiniteSemigroup::symmetric_3(), 0),
            (FiniteSemigroup::left_zero(3).adjoin(Adjoin::Identity), 3),
            (FiniteSemigroup::nilpotent_monoid(), 0),
        ] {
            let (h, emb) = s.maximal_subgroup_at(e).unwrap();
            assert!(h.is_group());
            for a in 0..h.order() {
                for b in 0..h.order() {
                    assert_eq!(s.mul(emb[a], emb[b]), emb[h.mul(a, b)]);
                }
            }
        }
    }
}
