//! Discrete Shannon entropies of spectral data: column entropies S_{n,j},
//! the generalized S_n(λ), dual (row) entropies, and the modified
//! trigonometric entropies the Chebyshev cases reduce to.
//!
//! All entropies are in nats. Column entropies are summed directly over the
//! squared unit eigenvector — one code path, immune to Christoffel
//! over/underflow — rather than through the −log ℓ split form; the
//! equivalence of the two forms is a test, not a branch.

use serde::Serialize;
use thiserror::Error;

use crate::families::Family;
use crate::scalar::Real;
use crate::spectrum::{evaluate_polynomial_vector, SpectralDecomposition, SpectrumError};

#[derive(Debug, Error)]
pub enum EntropyError {
    #[error("probability entry at index {index} is negative")]
    NegativeEntry { index: usize },
    #[error("probabilities sum to {sum}, not 1")]
    NotNormalized { sum: f64 },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// x log x with the 0 log 0 = 0 convention; components below ~1e-300 are
/// treated as exact zeros (second-kind center zeros genuinely produce them).
fn xlogx<T: Real>(p: T) -> T {
    let tiny = T::of(1e-300).max(T::min_positive_value());
    if p <= tiny {
        T::zero()
    } else {
        p * p.ln()
    }
}

/// A length-n probability vector: nonnegative entries summing to 1.
#[derive(Debug, Clone)]
pub struct ProbabilityVector<T>(Vec<T>);

impl<T: Real> ProbabilityVector<T> {
    pub fn new(p: Vec<T>) -> Result<Self, EntropyError> {
        if let Some(index) = p.iter().position(|&x| x < T::zero()) {
            return Err(EntropyError::NegativeEntry { index });
        }
        let sum = p.iter().fold(T::zero(), |acc, &x| acc + x);
        let tol = T::of(1e-12).max(T::epsilon() * T::of_usize(8 * p.len().max(1)));
        if (sum - T::one()).abs() > tol {
            return Err(EntropyError::NotNormalized {
                sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self(p))
    }

    /// Squares of a unit vector.
    pub fn from_unit_vector(v: &[T]) -> Self {
        Self(v.iter().map(|&x| x * x).collect())
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// −Σ p_i log p_i, in [0, log n].
pub fn shannon_entropy<T: Real>(p: &ProbabilityVector<T>) -> T {
    -p.as_slice().iter().fold(T::zero(), |acc, &x| acc + xlogx(x))
}

/// Entropy of the squared j-th column of Ψ (j 1-based): S_{n,j}.
pub fn entropy_at_zero<T: Real>(
    dec: &SpectralDecomposition<T>,
    j: usize,
) -> Result<T, EntropyError> {
    if !(1..=dec.n()).contains(&j) {
        return Err(EntropyError::IndexOutOfRange { index: j, n: dec.n() });
    }
    let p = ProbabilityVector::from_unit_vector(dec.psi_column(j));
    Ok(shannon_entropy(&p))
}

/// Generalized entropy S_n(λ) at an arbitrary point; coincides with
/// [`entropy_at_zero`] when λ is a zero of p_n.
pub fn entropy_at_lambda<T: Real>(
    family: &Family<T>,
    n: usize,
    lambda: T,
) -> Result<T, SpectrumError> {
    let pv = evaluate_polynomial_vector(family, n, lambda)?;
    let p = ProbabilityVector::from_unit_vector(&pv.unit);
    Ok(shannon_entropy(&p))
}

/// Entropy of the squared i-th row of Ψ (i 1-based): the dual entropy S_n^i.
pub fn dual_entropy<T: Real>(
    dec: &SpectralDecomposition<T>,
    i: usize,
) -> Result<T, EntropyError> {
    if !(1..=dec.n()).contains(&i) {
        return Err(EntropyError::IndexOutOfRange { index: i, n: dec.n() });
    }
    let row: Vec<T> = (1..=dec.n()).map(|j| dec.psi(i, j)).collect();
    let p = ProbabilityVector::from_unit_vector(&row);
    Ok(shannon_entropy(&p))
}

/// Modified entropy for the first kind: the direct trigonometric sum
/// Σ_{i=1}^{n−1} cos²((2j−1)π i / 2n) log cos²(·), 1 ≤ j ≤ n.
pub fn modified_entropy_cheb1<T: Real>(n: usize, j: usize) -> T {
    assert!((1..=n).contains(&j), "index out of range");
    let theta = T::of_usize(2 * j - 1) * T::PI() / T::of_usize(2 * n);
    let mut acc = T::zero();
    for i in 1..n {
        let c = (theta * T::of_usize(i)).cos();
        acc = acc + xlogx(c * c);
    }
    acc
}

/// Modified entropy for the second kind: Σ_{k=1}^{n−1} sin²(kjπ/n)
/// log sin²(kjπ/n), 1 ≤ j ≤ n−1.
pub fn modified_entropy_cheb2<T: Real>(n: usize, j: usize) -> T {
    assert!(n >= 2 && (1..n).contains(&j), "index out of range");
    let theta = T::of_usize(j) * T::PI() / T::of_usize(n);
    let mut acc = T::zero();
    for k in 1..n {
        let s = (theta * T::of_usize(k)).sin();
        acc = acc + xlogx(s * s);
    }
    acc
}

/// Convert an ascending-zero index to the angular (descending-zero) index
/// used by the closed-form expressions: both Chebyshev zero families are
/// cos(angle_j) with the angle increasing in j, so j = n + 1 − k.
pub fn angular_index(n: usize, ascending: usize) -> usize {
    debug_assert!((1..=n).contains(&ascending));
    n + 1 - ascending
}

/// How an entropy table was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntropyMethod {
    Spectral,
    ClosedForm,
}

/// Per-zero entropies for one family and degree, ordered by ascending zero,
/// with optional dual (row) entropies.
#[derive(Debug, Clone)]
pub struct EntropyTable<T> {
    pub n: usize,
    pub family: Family<T>,
    pub values: Vec<T>,
    pub dual_values: Option<Vec<T>>,
    pub method: EntropyMethod,
}

impl<T: Real> EntropyTable<T> {
    /// Spectral route: decompose, then take column (and optionally row)
    /// entropies of Ψ.
    pub fn spectral(
        family: &Family<T>,
        n: usize,
        include_dual: bool,
    ) -> Result<Self, SpectrumError> {
        let dec = crate::spectrum::decompose(family, n)?;
        Ok(Self::from_decomposition(family, &dec, include_dual))
    }

    /// Same, reusing an existing decomposition.
    pub fn from_decomposition(
        family: &Family<T>,
        dec: &SpectralDecomposition<T>,
        include_dual: bool,
    ) -> Self {
        let n = dec.n();
        let values = (1..=n)
            .map(|j| entropy_at_zero(dec, j).expect("index in range"))
            .collect();
        let dual_values = include_dual.then(|| {
            (1..=n)
                .map(|i| dual_entropy(dec, i).expect("index in range"))
                .collect()
        });
        Self {
            n,
            family: *family,
            values,
            dual_values,
            method: EntropyMethod::Spectral,
        }
    }
}
