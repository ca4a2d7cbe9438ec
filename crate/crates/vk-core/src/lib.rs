//! Finite semigroups, Rees matrix semigroups, rational subsets, and valence
//! automata, with language-preserving transformations down to plain group
//! automata.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `vk` crate.

#![no_std]

extern crate alloc;

pub mod backend;
pub mod corpus;
pub mod error;
pub mod rational;
pub mod rees;
pub mod regular;
pub mod semigroup;
pub mod valence;

pub use backend::{Elem, Semigroup};
pub use error::{Error, Result};
pub use rational::{
    combine, extract_component, intersect_max_subgroup, invert_group_subset, lift_subset,
    member_rees, set_difference, star_subset, Combine, MaxSubgroupIntersection, RationalSubset,
    SAutomaton, SEdge,
};
pub use rees::{
    rees_decompose, MaxSubgroupCoords, ReesDecomposition, ReesSemigroup, SandwichMatrix,
};
pub use regular::{enumerate, equivalent, Dfa, Equivalence, Nfa};
pub use semigroup::{
    Adjoin, Classification, Distinguished, FiniteSemigroup, GreenRelations, MonoidReduction,
    Subset,
};
pub use valence::{
    equivalent_languages, Acceptance, LanguageHandle, VEdge, ValenceAutomaton,
};
