//! Canonical small instances used across the test suites and the CLI
//! corpus generator.

use alloc::vec;
use alloc::vec::Vec;

use crate::backend::{Elem, Semigroup};
use crate::rees::{ReesSemigroup, SandwichMatrix};
use crate::semigroup::{Adjoin, FiniteSemigroup};

/// `R1 = M(Z2; |I|=2, |J|=1; P = [[e, e]])`, 4 elements, completely simple.
pub fn r1() -> ReesSemigroup {
    let p = SandwichMatrix::new(1, 2, vec![vec![Some(Elem::Idx(0)), Some(Elem::Idx(0))]]).unwrap();
    ReesSemigroup::new(Semigroup::Finite(FiniteSemigroup::cyclic(2)), p, false).unwrap()
}

/// `R2 = M^0(Z2; |I|=2, |J|=2; P = [[e, e], [e, 0]])`, 9 elements,
/// completely 0-simple.
pub fn r2() -> ReesSemigroup {
    let p = SandwichMatrix::new(
        2,
        2,
        vec![
            vec![Some(Elem::Idx(0)), Some(Elem::Idx(0))],
            vec![Some(Elem::Idx(0)), None],
        ],
    )
    .unwrap();
    ReesSemigroup::new(Semigroup::Finite(FiniteSemigroup::cyclic(2)), p, true).unwrap()
}

/// The finite groups used by the Rees corpus: Z2, Z3 and S3.
pub fn groups() -> Vec<FiniteSemigroup> {
    vec![
        FiniteSemigroup::cyclic(2),
        FiniteSemigroup::cyclic(3),
        FiniteSemigroup::symmetric_3(),
    ]
}

/// Hand-picked monoids of small order, several with proper ideals.
pub fn small_monoids() -> Vec<FiniteSemigroup> {
    vec![
        FiniteSemigroup::trivial(),
        FiniteSemigroup::cyclic(2),
        FiniteSemigroup::cyclic(3),
        FiniteSemigroup::cyclic(4),
        FiniteSemigroup::nilpotent_monoid(),
        FiniteSemigroup::cyclic(2).adjoin(Adjoin::Zero),
        FiniteSemigroup::cyclic(3).adjoin(Adjoin::Zero),
        FiniteSemigroup::left_zero(2).adjoin(Adjoin::Identity),
        FiniteSemigroup::trivial().adjoin(Adjoin::Zero),
        FiniteSemigroup::trivial()
            .adjoin(Adjoin::Zero)
            .adjoin(Adjoin::Zero),
    ]
}
