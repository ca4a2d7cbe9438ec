use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `(x * y) * z != x * (y * z)` for the witness triple.
    AssociativityViolation(usize, usize, usize),
    /// A table entry or element index lies outside the carrier.
    IndexOutOfRange,
    EmptyGeneratorSet,
    NotAMonoid,
    NotAnIdeal,
    NotIdempotent,
    /// The H-class of an idempotent failed the group axioms; this indicates
    /// a corrupted multiplication table rather than a user error.
    HClassNotGroup,
    ZeroEntryInMatrixWithoutZero,
    DimensionMismatch,
    /// The sandwich entry at the requested coordinates is zero, so the
    /// corresponding H-class is not a group.
    ZeroSandwichEntry,
    NotCompletelyZeroSimple,
    /// The operation needs an exhaustive scan of the carrier, which the
    /// backend cannot provide.
    BackendNotFinite,
    /// Two values from different owner semigroups were combined.
    OwnerMismatch,
    NotAGroup,
    NotAFiniteGroup,
    /// No factorization `t = P_{ji} s` exists for some automaton label.
    HypothesisFails,
    NotPlainMAutomaton,
    NotReesWithZero,
    ZeroInInitialOrTerminalSet,
    NotCompletelySimpleOrZeroSimple,
    /// A bounded search over an infinite backend hit its budget without
    /// settling the query.
    UndecidableBase,
    /// The sandwich matrix does not admit the element searches some
    /// normalizations rely on (e.g. it has no nonzero entry at all).
    UnsupportedSandwich,
    AlphabetMismatch,
    /// An element value does not belong to the semigroup it was used with.
    InvalidElement,
    /// Internal consistency check failed; indicates a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AssociativityViolation(x, y, z) => {
                write!(f, "associativity violated at ({x}, {y}, {z})")
            }
            Error::IndexOutOfRange => write!(f, "element index out of range"),
            Error::EmptyGeneratorSet => write!(f, "generator set is empty"),
            Error::NotAMonoid => write!(f, "semigroup has no identity element"),
            Error::NotAnIdeal => write!(f, "subset is not an ideal"),
            Error::NotIdempotent => write!(f, "element is not idempotent"),
            Error::HClassNotGroup => write!(f, "H-class of idempotent is not a group"),
            Error::ZeroEntryInMatrixWithoutZero => {
                write!(f, "sandwich matrix has a zero entry but no zero was requested")
            }
            Error::DimensionMismatch => write!(f, "sandwich matrix dimensions do not match I, J"),
            Error::ZeroSandwichEntry => write!(f, "sandwich entry is zero at these coordinates"),
            Error::NotCompletelyZeroSimple => {
                write!(f, "semigroup is not completely simple or completely 0-simple")
            }
            Error::BackendNotFinite => write!(f, "operation requires a finite semigroup"),
            Error::OwnerMismatch => write!(f, "values belong to different semigroups"),
            Error::NotAGroup => write!(f, "semigroup is not a group"),
            Error::NotAFiniteGroup => write!(f, "semigroup is not a finite group"),
            Error::HypothesisFails => {
                write!(f, "no sandwich factorization exists for some automaton label")
            }
            Error::NotPlainMAutomaton => {
                write!(f, "automaton does not have initial and terminal set {{identity}}")
            }
            Error::NotReesWithZero => write!(f, "semigroup is not a Rees matrix semigroup with zero"),
            Error::ZeroInInitialOrTerminalSet => {
                write!(f, "initial or terminal set contains the zero element")
            }
            Error::NotCompletelySimpleOrZeroSimple => {
                write!(f, "register semigroup is not completely simple or completely 0-simple")
            }
            Error::UndecidableBase => write!(f, "bounded search was inconclusive"),
            Error::UnsupportedSandwich => {
                write!(f, "sandwich matrix does not support this normalization")
            }
            Error::AlphabetMismatch => write!(f, "automata have different alphabets"),
            Error::InvalidElement => write!(f, "element does not belong to this semigroup"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
