//! Register semigroups usable by automata: finite tables, the integers under
//! addition, the bicyclic monoid, and Rees matrix semigroups over any of
//! these.
//!
//! Operations that need an exhaustive scan of the carrier reject infinite
//! backends with `BackendNotFinite`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rees::ReesSemigroup;
use crate::semigroup::FiniteSemigroup;

/// An element of some [`Semigroup`]. Which variant is valid depends on the
/// owner; `Semigroup::contains` checks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Elem {
    /// Index into a finite multiplication table.
    Idx(usize),
    /// Integer under addition.
    Int(i64),
    /// Bicyclic monoid element `q^a p^b`, stored as `(a, b)`.
    Bicyclic(u64, u64),
    /// The zero of a Rees matrix semigroup with zero.
    Zero,
    /// A Rees triple `(i, t, j)` with `t` an element of the base.
    Triple(usize, Box<Elem>, usize),
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Idx(x) => write!(f, "{x}"),
            Elem::Int(k) => write!(f, "{k}"),
            Elem::Bicyclic(a, b) => write!(f, "({a},{b})"),
            Elem::Zero => write!(f, "0"),
            Elem::Triple(i, t, j) => write!(f, "({i},{t},{j})"),
        }
    }
}

/// A semigroup with computable multiplication.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Semigroup {
    Finite(FiniteSemigroup),
    /// The integers under addition; a group.
    Integers,
    /// The bicyclic monoid `B`, pairs of naturals.
    Bicyclic,
    Rees(ReesSemigroup),
}

impl Semigroup {
    pub fn contains(&self, e: &Elem) -> bool {
        match (self, e) {
            (Semigroup::Finite(s), Elem::Idx(x)) => *x < s.order(),
            (Semigroup::Integers, Elem::Int(_)) => true,
            (Semigroup::Bicyclic, Elem::Bicyclic(..)) => true,
            (Semigroup::Rees(r), Elem::Zero) => r.with_zero(),
            (Semigroup::Rees(r), Elem::Triple(i, t, j)) => {
                *i < r.i_count() && *j < r.j_count() && r.base().contains(t)
            }
            _ => false,
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::InvalidElement);
        }
        Ok(match (self, a, b) {
            (Semigroup::Finite(s), Elem::Idx(x), Elem::Idx(y)) => Elem::Idx(s.mul(*x, *y)),
            (Semigroup::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Semigroup::Bicyclic, Elem::Bicyclic(a1, b1), Elem::Bicyclic(a2, b2)) => {
                // q^a1 p^b1 q^a2 p^b2 with pq = 1
                let k = (*b1).min(*a2);
                Elem::Bicyclic(a1 + a2 - k, b1 + b2 - k)
            }
            (Semigroup::Rees(r), x, y) => r.mul(x, y)?,
            _ => unreachable!(),
        })
    }

    pub fn identity(&self) -> Option<Elem> {
        match self {
            Semigroup::Finite(s) => s.identity().map(Elem::Idx),
            Semigroup::Integers => Some(Elem::Int(0)),
            Semigroup::Bicyclic => Some(Elem::Bicyclic(0, 0)),
            Semigroup::Rees(r) => r.identity(),
        }
    }

    pub fn is_monoid(&self) -> bool {
        self.identity().is_some()
    }

    /// Inverse with respect to the identity, for group backends.
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match (self, a) {
            (Semigroup::Finite(s), Elem::Idx(x)) => s.inverse(*x).map(Elem::Idx),
            (Semigroup::Integers, Elem::Int(k)) => Some(Elem::Int(-k)),
            _ => None,
        }
    }

    pub fn is_group(&self) -> bool {
        match self {
            Semigroup::Finite(s) => s.is_group(),
            Semigroup::Integers => true,
            _ => false,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Semigroup::Finite(_) => true,
            Semigroup::Integers | Semigroup::Bicyclic => false,
            Semigroup::Rees(r) => r.base().is_finite(),
        }
    }

    /// All elements, for finite backends.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        match self {
            Semigroup::Finite(s) => Ok(s.elements().map(Elem::Idx).collect()),
            Semigroup::Rees(r) => r.elements(),
            _ => Err(Error::BackendNotFinite),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteSemigroup> {
        match self {
            Semigroup::Finite(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_rees(&self) -> Option<&ReesSemigroup> {
        match self {
            Semigroup::Rees(r) => Some(r),
            _ => None,
        }
    }

    pub fn display(&self, e: &Elem) -> String {
        match (self, e) {
            (Semigroup::Finite(s), Elem::Idx(x)) => s
                .label_of(*x)
                .map(|l| l.to_string())
                .unwrap_or_else(|| x.to_string()),
            (Semigroup::Rees(r), Elem::Triple(i, t, j)) => {
                let mut out = String::from("(");
                out.push_str(&i.to_string());
                out.push(',');
                out.push_str(&r.base().display(t));
                out.push(',');
                out.push_str(&j.to_string());
                out.push(')');
                out
            }
            _ => e.to_string(),
        }
    }
}
