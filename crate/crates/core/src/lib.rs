//! Discrete Shannon entropies of orthonormal polynomial sequences.
//!
//! For a family of orthonormal polynomials p_0, p_1, … with three-term
//! recurrence λ p_i = b_{i+1} p_{i+1} + a_{i+1} p_i + b_i p_{i−1}, the n×n
//! Jacobi matrix of recurrence coefficients has the zeros of p_n as its
//! eigenvalues, and the matrix Ψ of normalized polynomial-value vectors at
//! those zeros is orthogonal. Each squared column of Ψ is a discrete
//! probability distribution; this crate computes its Shannon entropy
//!
//! * numerically, for any supported family, via Sturm-bisection
//!   eigensolving and overflow-safe recurrence evaluation
//!   ([`spectrum`], [`entropy`]), and
//! * exactly, for the Chebyshev families, via closed forms driven by
//!   GCD arithmetic and a digamma/zeta correction function
//!   ([`numthy`], [`specfun`], [`closedform`]),
//!
//! with the two routes cross-checked against each other.
//!
//! The numeric code is generic over the scalar type through [`Real`];
//! `f64` aliases for the main types are exported at the crate root, and all
//! stated tolerances assume double precision.

pub mod closedform;
pub mod entropy;
pub mod families;
pub mod numthy;
pub mod scalar;
pub mod specfun;
pub mod spectrum;

pub use scalar::Real;

pub use closedform::{ClosedFormEntropy, ClosedFormResult, ComparisonReport, ExtremalSummary};
pub use entropy::{EntropyMethod, EntropyTable, ProbabilityVector};
pub use families::{ChebKind, Family, FamilyError};
pub use numthy::{ImageStructureReport, Rational, TriangleWave};
pub use specfun::{CorrectionFunction, CorrectionMode};
pub use spectrum::{JacobiMatrix, PolynomialVector, SpectralDecomposition};

/// Double-precision aliases for the main types.
pub type Family64 = Family<f64>;
pub type CorrectionFunction64 = CorrectionFunction<f64>;
pub type JacobiMatrix64 = JacobiMatrix<f64>;
pub type SpectralDecomposition64 = SpectralDecomposition<f64>;
pub type EntropyTable64 = EntropyTable<f64>;
pub type ClosedFormEntropy64 = ClosedFormEntropy<f64>;
pub type ComparisonReport64 = ComparisonReport<f64>;
