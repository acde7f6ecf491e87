//! Exact weight enumeration for decreasing monomial codes.
//!
//! Decreasing monomial codes are binary linear codes spanned by evaluations of
//! a monomial set closed downward under the order `⪯`; the family contains
//! polar and Reed-Muller codes. This crate provides:
//!
//! * monomial algebra over `F_2` in `m` variables (divisibility, the shift
//!   orders, the `λ`/`J` combinatorics behind every counting formula),
//! * code constructors (Reed-Muller, downward closures, generator rows),
//! * the evaluation isomorphism, Hamming weights and a Gray-code full-code
//!   weight-distribution oracle,
//! * explicit lower-triangular-affine orbit enumeration, rank-restricted
//!   orbits and Minkowski-sum weight censuses,
//! * closed-form counts for all codeword weights below twice the minimum
//!   distance (minimum weight plus the three Type I sub-cases), a Type II
//!   census, and a verification harness pitting formulas against oracles,
//! * weight-contribution orders, antichains and design comparison reports.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `dmc-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod code;
pub mod design;
pub mod eval;
pub mod monomial;
pub mod oracle;
pub mod orbit;
pub mod profile;
pub mod type1;

pub use code::DecreasingSet;
pub use eval::{EvalVector, Polynomial};
pub use monomial::{LambdaProfile, Monomial};
pub use orbit::{AffineParams, OrbitKind, OrbitSpec};
pub use profile::{Budgets, Type2Count, WeightProfile};
pub use type1::Type1Case;

use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Variable count outside `1..=32`.
    VarCount { m: u32 },
    /// Two operands built over different variable counts.
    MismatchedVarCount { left: u32, right: u32 },
    /// An operation requiring equal degrees received unequal ones.
    DegreeMismatch { left: u32, right: u32 },
    /// Expected a divisor relation that does not hold.
    NotDivisor,
    /// A variable index outside `[0, m)`.
    IndexOutOfRange { index: u32, m: u32 },
    /// A generator-matrix row index outside `[0, 2^m)`.
    RowOutOfRange { row: u64, m: u32 },
    /// Malformed monomial text.
    Parse { reason: &'static str },
    /// A monomial set is not closed downward; `missing ⪯ present` is a witness.
    NotDecreasing {
        missing: Monomial,
        present: Monomial,
    },
    /// A monomial had the wrong degree for the requested construction.
    WrongDegree { expected: u32, got: u32 },
    /// Classification input was not a maximum-degree member of the set.
    NotMaxDegreeMember { f: Monomial },
    /// Classification input belongs to the set but must not.
    UnexpectedMember { f: Monomial },
    /// `μ` outside the admissible interval for the code.
    MuOutOfRange { mu: u32 },
    /// `r` outside `0..=m`.
    BadRange { r: u32, m: u32 },
    /// Full enumeration would exceed the dimension cap.
    CapExceeded { needed: u32, cap: u32 },
    /// An enumeration or census would exceed its budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// The instance is too large for exact 128-bit arithmetic or in-memory bit
    /// vectors.
    TooLarge { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VarCount { m } => write!(f, "variable count {m} outside 1..=32"),
            Error::MismatchedVarCount { left, right } => {
                write!(f, "mismatched variable counts {left} and {right}")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::NotDivisor => write!(f, "not a divisor"),
            Error::IndexOutOfRange { index, m } => {
                write!(f, "variable index {index} outside [0, {m})")
            }
            Error::RowOutOfRange { row, m } => {
                write!(f, "row index {row} outside [0, 2^{m})")
            }
            Error::Parse { reason } => write!(f, "monomial parse error: {reason}"),
            Error::NotDecreasing { missing, present } => write!(
                f,
                "set is not decreasing: {missing} precedes {present} but is absent"
            ),
            Error::WrongDegree { expected, got } => {
                write!(f, "expected degree {expected}, got {got}")
            }
            Error::NotMaxDegreeMember { f: mon } => {
                write!(f, "{mon} is not a maximum-degree member of the set")
            }
            Error::UnexpectedMember { f: mon } => {
                write!(f, "{mon} belongs to the set but must not")
            }
            Error::MuOutOfRange { mu } => write!(f, "mu = {mu} outside the admissible range"),
            Error::BadRange { r, m } => write!(f, "order r = {r} outside 0..={m}"),
            Error::CapExceeded { needed, cap } => {
                write!(f, "dimension {needed} exceeds enumeration cap {cap}")
            }
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "work estimate {needed} exceeds budget {budget}")
            }
            Error::TooLarge { what } => write!(f, "instance too large: {what}"),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
