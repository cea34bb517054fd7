//! Exact closed-form entropies for the Chebyshev families, their extremal
//! structure over the zero index, and the comparison harness that checks
//! the spectral route against them.
//!
//! First kind:  S_{n,j} = log n + log 2 − 1 + log 2 / n + corr(d / 2n),
//! d = GCD(2j−1, n). Second kind: S_{n,j} = log(n+1) + log 2 − 1 +
//! corr(d / (n+1)), d = GCD(j, n+1). The index j here is the angular
//! ordering of zeros (descending in λ); [`crate::entropy::angular_index`]
//! converts from the ascending order used by the spectral route.

use serde::Serialize;
use thiserror::Error;

use crate::entropy::{angular_index, EntropyMethod, EntropyTable};
use crate::families::{ChebKind, Family};
use crate::numthy::gcd;
use crate::scalar::Real;
use crate::specfun::{CorrectionFunction, CorrectionMode};
use crate::spectrum::SpectrumError;

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error("closed forms exist only for the Chebyshev families, got {family}")]
    NotChebyshev { family: &'static str },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// One closed-form entropy value.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClosedFormResult<T> {
    pub n: usize,
    /// Angular zero index, 1-based.
    pub j: usize,
    /// The governing divisor: GCD(2j−1, n) for the first kind,
    /// GCD(j, n+1) for the second.
    pub d: u64,
    pub value: T,
    pub kind: ChebKind,
}

/// Extrema of the closed-form profile over j = 1..n.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalSummary<T> {
    pub max_value: T,
    pub argmax: Vec<usize>,
    pub min_value: T,
    pub argmin: Vec<usize>,
}

/// Spectral-vs-closed-form comparison for one family and degree.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport<T> {
    pub family: Family<T>,
    pub n: usize,
    pub threshold: T,
    pub max_abs_diff: T,
    /// Per-index absolute differences, ascending-zero order.
    pub per_j_diffs: Vec<T>,
    pub pass: bool,
}

/// Closed-form entropy evaluator; owns a correction-function evaluator so
/// the zeta table is built once.
#[derive(Debug, Clone)]
pub struct ClosedFormEntropy<T> {
    correction: CorrectionFunction<T>,
}

impl<T: Real> Default for ClosedFormEntropy<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real> ClosedFormEntropy<T> {
    /// Production configuration: digamma-form correction.
    pub fn new() -> Self {
        Self::with_correction(CorrectionFunction::new(CorrectionMode::Digamma))
    }

    pub fn with_correction(correction: CorrectionFunction<T>) -> Self {
        Self { correction }
    }

    fn corr(&self, x: T) -> T {
        self.correction
            .eval(x)
            .expect("correction argument is within [0, 1/2]")
    }

    /// First-kind closed form at angular index j, 1 ≤ j ≤ n.
    pub fn first_kind(&self, n: usize, j: usize) -> ClosedFormResult<T> {
        assert!((1..=n).contains(&j), "index out of range");
        let d = gcd(2 * j as u64 - 1, n as u64);
        let fn_ = T::of_usize(n);
        let x = T::of_usize(d as usize) / (T::of(2.0) * fn_);
        let value = fn_.ln() + T::LN_2() - T::one() + T::LN_2() / fn_ + self.corr(x);
        ClosedFormResult {
            n,
            j,
            d,
            value,
            kind: ChebKind::First,
        }
    }

    /// Second-kind closed form at angular index j, 1 ≤ j ≤ n.
    pub fn second_kind(&self, n: usize, j: usize) -> ClosedFormResult<T> {
        assert!((1..=n).contains(&j), "index out of range");
        let d = gcd(j as u64, n as u64 + 1);
        let np1 = T::of_usize(n + 1);
        let x = T::of_usize(d as usize) / np1;
        let value = np1.ln() + T::LN_2() - T::one() + self.corr(x);
        ClosedFormResult {
            n,
            j,
            d,
            value,
            kind: ChebKind::Second,
        }
    }

    pub fn value(&self, kind: ChebKind, n: usize, j: usize) -> ClosedFormResult<T> {
        match kind {
            ChebKind::First => self.first_kind(n, j),
            ChebKind::Second => self.second_kind(n, j),
        }
    }

    /// Scan j = 1..n. The profile is a strictly decreasing function of the
    /// divisor d (the correction is strictly decreasing), so the extrema
    /// and their index sets are resolved through d exactly, without float
    /// comparisons.
    pub fn extremal_summary(&self, kind: ChebKind, n: usize) -> ExtremalSummary<T> {
        let divisor = |j: usize| match kind {
            ChebKind::First => gcd(2 * j as u64 - 1, n as u64),
            ChebKind::Second => gcd(j as u64, n as u64 + 1),
        };
        let ds: Vec<u64> = (1..=n).map(divisor).collect();
        let d_min = *ds.iter().min().expect("n >= 1");
        let d_max = *ds.iter().max().expect("n >= 1");
        let holders = |d: u64| -> Vec<usize> {
            ds.iter()
                .enumerate()
                .filter(|(_, &x)| x == d)
                .map(|(i, _)| i + 1)
                .collect()
        };
        ExtremalSummary {
            max_value: self.value(kind, n, holders(d_min)[0]).value,
            argmax: holders(d_min),
            min_value: self.value(kind, n, holders(d_max)[0]).value,
            argmin: holders(d_max),
        }
    }

    /// Closed-form entropy table in ascending-zero order, aligned with the
    /// spectral tables.
    pub fn table(&self, kind: ChebKind, n: usize) -> EntropyTable<T> {
        let family = match kind {
            ChebKind::First => Family::Chebyshev1,
            ChebKind::Second => Family::Chebyshev2,
        };
        let values = (1..=n)
            .map(|k| self.value(kind, n, angular_index(n, k)).value)
            .collect();
        EntropyTable {
            n,
            family,
            values,
            dual_values: None,
            method: EntropyMethod::ClosedForm,
        }
    }

    /// Compute both routes for every zero and report the largest absolute
    /// difference. `pass = false` is data, not an error.
    pub fn compare(
        &self,
        family: &Family<T>,
        n: usize,
        threshold: T,
    ) -> Result<ComparisonReport<T>, ClosedFormError> {
        let kind = family
            .cheb_kind()
            .ok_or(ClosedFormError::NotChebyshev {
                family: family.name(),
            })?;
        let spectral = EntropyTable::spectral(family, n, false)?;
        let closed = self.table(kind, n);
        let per_j_diffs: Vec<T> = spectral
            .values
            .iter()
            .zip(&closed.values)
            .map(|(&a, &b)| (a - b).abs())
            .collect();
        let max_abs_diff = per_j_diffs
            .iter()
            .fold(T::zero(), |m, &d| m.max(d));
        Ok(ComparisonReport {
            family: *family,
            n,
            threshold,
            max_abs_diff,
            per_j_diffs,
            pass: max_abs_diff <= threshold,
        })
    }
}
