//! Exact highest-weight calculus for the super-Yangian of `gl(m|n)`.
//!
//! The crate has three layers:
//!
//! * exact arithmetic: rational scalars, monic polynomials stored as root
//!   multisets, reduced rational functions, truncated series in `u^{-1}`;
//! * the highest-weight calculus: parity sequences, odd reflections between
//!   them, shift-ratio (Drinfeld) polynomials and the finite-dimensionality
//!   decision procedure with re-checkable certificates;
//! * a representation engine: explicit level-p matrix modules over the
//!   rationals (evaluation modules, graded tensor products, cyclic spans,
//!   irreducible quotients) used as a brute-force oracle for the defining
//!   relations and for every identity the calculus relies on.
//!
//! Everything is exact; there is no floating point anywhere.

use std::fmt;

mod dense;
pub mod linalg;
pub mod parity;
pub mod poly;
pub mod rat;
pub mod reflect;
pub mod rep;
pub mod sample;
pub mod series;
pub mod weight;

pub use linalg::{RatMatrix, Subspace};
pub use parity::ParitySeq;
pub use poly::{MonicPoly, RationalFn, RootMultiset};
pub use rat::Rat;
pub use reflect::{odd_reflect, partition_common_roots, Direction, ReflectionStep};
pub use series::{expand_series, TruncatedSeries};
pub use weight::{
    decide_finite_dimensional, decide_finite_dimensional_ordered, is_p_shift_ratio,
    normalize_twist, Certificate, Decision, DrinfeldData, HighestWeight, ReflectOrder, Verdict,
};

/// Errors for the whole crate. Inputs that merely produce a negative answer
/// (a failed verification, an infinite-dimensional verdict) are not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomials of unequal degree where equal degrees are required.
    DegreeMismatch { left: usize, right: usize },
    /// Coefficient input whose leading coefficient is not 1.
    NotMonic,
    /// A polynomial that does not split over the rationals.
    NonRationalRoot,
    /// A series expansion that would not start at 1.
    SeriesNotUnital,
    /// A weight component that is not a ratio of unital polynomials in
    /// `u^{-1}`. The decision procedure maps this to "infinite-dimensional".
    NonRationalComponent(String),
    /// Parity bit counts that do not match the declared (m, n).
    BadParity(String),
    /// Reflection requested at a position with equal parities.
    NotOddPosition { index: usize },
    /// Mismatched shapes (parity length vs component count, etc).
    Shape(String),
    /// Tensor factors over different parity sequences.
    ParityMismatch,
    /// Module dimension above the desk-scale cap.
    DimensionCap { dim: usize, cap: usize },
    /// The distinguished vector is not singular; carries a witness.
    NotSingular { i: usize, j: usize, power: usize },
    /// The distinguished vector is not a joint eigenvector.
    NotEigen { i: usize, power: usize },
    /// A representation without a distinguished vector where one is needed.
    MissingHighestVector,
    /// Desk-scale integer factorization gave up.
    Factorization(String),
    /// An internal exactness invariant failed (reported, never silenced).
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {} vs {}", left, right)
            }
            Error::NotMonic => write!(f, "leading coefficient is not 1"),
            Error::NonRationalRoot => write!(f, "non-rational root"),
            Error::SeriesNotUnital => write!(f, "series does not start at 1"),
            Error::NonRationalComponent(msg) => write!(f, "non-rational component: {}", msg),
            Error::BadParity(msg) => write!(f, "bad parity sequence: {}", msg),
            Error::NotOddPosition { index } => {
                write!(f, "not an odd position: index {}", index)
            }
            Error::Shape(msg) => write!(f, "shape error: {}", msg),
            Error::ParityMismatch => write!(f, "parity sequence mismatch"),
            Error::DimensionCap { dim, cap } => {
                write!(f, "module dimension {} exceeds cap {}", dim, cap)
            }
            Error::NotSingular { i, j, power } => write!(
                f,
                "vector is not singular: T_{{{},{}}} coefficient of u^{} does not vanish",
                i, j, power
            ),
            Error::NotEigen { i, power } => write!(
                f,
                "vector is not an eigenvector of T_{{{},{}}} coefficient of u^{}",
                i, i, power
            ),
            Error::MissingHighestVector => write!(f, "representation has no highest vector"),
            Error::Factorization(msg) => write!(f, "factorization: {}", msg),
            Error::Internal(msg) => write!(f, "internal invariant violated: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
