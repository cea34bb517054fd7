//! Recurrence coefficients for the supported orthonormal polynomial
//! families, plus the explicit trigonometric Chebyshev evaluators used as
//! cross-checks.
//!
//! All coefficients follow the orthonormal convention
//! λ p_i = b_{i+1} p_{i+1} + a_{i+1} p_i + b_i p_{i−1} with p_0 = 1.

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("jacobi parameters require alpha > -1, beta > -1 and alpha + beta > -1")]
    JacobiParameters,
    #[error("pollaczek parameters require theta > 0 and a >= 0")]
    PollaczekParameters,
    #[error("meixner parameters require beta > 0 and c in (0, 1)")]
    MeixnerParameters,
}

/// Chebyshev kind selector for the explicit evaluators and closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChebKind {
    First,
    Second,
}

/// A polynomial family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family<T> {
    Chebyshev1,
    Chebyshev2,
    Jacobi { alpha: T, beta: T },
    Pollaczek { theta: T, a: T },
    Meixner { beta: T, c: T },
}

impl<T: Real> Family<T> {
    pub fn jacobi(alpha: T, beta: T) -> Result<Self, FamilyError> {
        let f = Family::Jacobi { alpha, beta };
        f.validate()?;
        Ok(f)
    }

    pub fn pollaczek(theta: T, a: T) -> Result<Self, FamilyError> {
        let f = Family::Pollaczek { theta, a };
        f.validate()?;
        Ok(f)
    }

    pub fn meixner(beta: T, c: T) -> Result<Self, FamilyError> {
        let f = Family::Meixner { beta, c };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let neg_one = -T::one();
        match *self {
            Family::Chebyshev1 | Family::Chebyshev2 => Ok(()),
            Family::Jacobi { alpha, beta } => {
                if alpha > neg_one && beta > neg_one && alpha + beta > neg_one {
                    Ok(())
                } else {
                    Err(FamilyError::JacobiParameters)
                }
            }
            Family::Pollaczek { theta, a } => {
                if theta > T::zero() && a >= T::zero() {
                    Ok(())
                } else {
                    Err(FamilyError::PollaczekParameters)
                }
            }
            Family::Meixner { beta, c } => {
                if beta > T::zero() && c > T::zero() && c < T::one() {
                    Ok(())
                } else {
                    Err(FamilyError::MeixnerParameters)
                }
            }
        }
    }

    /// The orthonormal recurrence pair (a_i, b_i), i ≥ 1.
    pub fn coefficients(&self, i: usize) -> Result<(T, T), FamilyError> {
        assert!(i >= 1, "recurrence coefficients are 1-indexed");
        self.validate()?;
        let one = T::one();
        let two = T::of(2.0);
        let half = T::of(0.5);
        let fi = T::of_usize(i);
        Ok(match *self {
            Family::Chebyshev1 => {
                let b = if i == 1 { T::FRAC_1_SQRT_2() } else { half };
                (T::zero(), b)
            }
            Family::Chebyshev2 => (T::zero(), half),
            Family::Jacobi { alpha, beta } => {
                let s = alpha + beta;
                let b = two / (two * fi + s)
                    * (fi * (fi + alpha) * (fi + beta) * (fi + s)
                        / ((two * fi + s + one) * (two * fi + s - one)))
                    .sqrt();
                // a_i = (α²−β²)/((2i+s)(2i+s−2)); the shared factor α+β is
                // cancelled at i = 1, where the printed denominator vanishes
                // as s → 0. Symmetric parameters short-circuit to zero.
                let a = if alpha == beta {
                    T::zero()
                } else if i == 1 {
                    (alpha - beta) / (s + two)
                } else {
                    (alpha * alpha - beta * beta) / ((two * fi + s) * (two * fi + s - two))
                };
                (a, b)
            }
            Family::Pollaczek { theta, a } => {
                let b = half
                    * (fi * (fi + two * theta - one)
                        / ((fi + theta + a) * (fi + theta + a - one)))
                    .sqrt();
                (T::zero(), b)
            }
            Family::Meixner { beta, c } => {
                let a_i = ((fi - one) * (one + c) + c * beta) / (one - c);
                let b_i = (fi * c * (fi + beta - one)).sqrt() / (one - c);
                (a_i, b_i)
            }
        })
    }

    /// Families whose diagonal recurrence coefficients vanish identically.
    pub fn is_symmetric(&self) -> bool {
        match *self {
            Family::Chebyshev1 | Family::Chebyshev2 | Family::Pollaczek { .. } => true,
            Family::Jacobi { alpha, beta } => alpha == beta,
            Family::Meixner { .. } => false,
        }
    }

    pub fn cheb_kind(&self) -> Option<ChebKind> {
        match self {
            Family::Chebyshev1 => Some(ChebKind::First),
            Family::Chebyshev2 => Some(ChebKind::Second),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Chebyshev1 => "chebyshev1",
            Family::Chebyshev2 => "chebyshev2",
            Family::Jacobi { .. } => "jacobi",
            Family::Pollaczek { .. } => "pollaczek",
            Family::Meixner { .. } => "meixner",
        }
    }
}

/// Orthonormal Chebyshev polynomial of degree m at λ = cos θ, evaluated
/// trigonometrically: first kind 1 / √2 cos(mθ), second kind
/// sin((m+1)θ)/sin θ with the limit values at sin θ = 0.
pub fn chebyshev_explicit<T: Real>(kind: ChebKind, m: usize, theta: T) -> T {
    match kind {
        ChebKind::First => {
            if m == 0 {
                T::one()
            } else {
                T::of(2.0).sqrt() * (T::of_usize(m) * theta).cos()
            }
        }
        ChebKind::Second => {
            let s = theta.sin();
            if s == T::zero() {
                let v = T::of_usize(m + 1);
                // θ = 0 gives m+1; θ = π gives (m+1)(−1)^m
                if theta.cos() > T::zero() || m % 2 == 0 {
                    v
                } else {
                    -v
                }
            } else {
                (T::of_usize(m + 1) * theta).sin() / s
            }
        }
    }
}
