//! Ad-nilpotent ideals of minimal dimension in classical Lie algebras.
//!
//! An ad-nilpotent ideal of a Borel subalgebra is an ideal contained in the
//! nilradical, or equivalently an upward-closed set of positive roots. Every
//! such ideal has an associated nilpotent orbit, and the dimensions of the
//! ideals attached to a fixed orbit are bounded below by an integer `m`
//! computable from the orbit's partition. This crate constructs, for every
//! nilpotent orbit of a classical simple Lie algebra (types A, B, C, D), an
//! explicit ideal attaining that bound, and certifies minimality at small
//! rank by exhaustively enumerating all ad-nilpotent ideals and computing
//! each one's associated orbit with exact integer arithmetic.
//!
//! ```
//! use adnil::partitions::{validate, Kind};
//! use adnil::{construct, dynkin};
//!
//! let label = validate(Kind::C, 6, &[4, 2]).unwrap().pop().unwrap();
//! let built = construct::minimal_ideal(&label).unwrap();
//! let m = dynkin::lower_bound_m(&label).unwrap();
//! assert_eq!(built.ideal.dim(), 7);
//! assert_eq!(m, 7);
//! ```
//!
//! Module map:
//!
//! - [`roots`] — root systems, the root poset, ideal closure, antichains,
//!   enumeration of all ideals, the type-A Ferrers encoding
//! - [`partitions`] — orbit labels, dominance order, covering moves
//! - [`dynkin`] — Dynkin elements, gradings, the lower bound `m`
//! - [`construct`] — index maps, generator sets, the minimal ideal itself
//! - [`formula`] — closed-form minimal dimension for type A
//! - [`oracle`] — exact matrix realizations, Jordan types, associated orbits
//! - [`certify`] — per-orbit certification that the bound is attained
//! - [`report`] — stable text/JSON renderings used by the `adnil` binary

pub mod certify;
pub mod construct;
pub mod dynkin;
pub mod exact;
pub mod formula;
pub mod oracle;
pub mod partitions;
pub mod report;
pub mod roots;

use std::fmt;

/// Crate-wide error type.
///
/// `Internal` signals a broken invariant (a bug), never bad user input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: unknown type, bad size, root outside the system, ...
    InvalidInput(String),
    /// A partition that does not label a nilpotent orbit of the requested kind.
    Validation(String),
    /// Refusal to enumerate past the exhaustive-search guard.
    Guard(String),
    /// Internal consistency failure.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Validation(msg) => write!(f, "invalid orbit label: {msg}"),
            Error::Guard(msg) => write!(f, "enumeration guard: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
