//! Jacobi matrices and their spectral decompositions.
//!
//! Eigenvalues (the zeros of p_n) come from Sturm-sequence bisection with a
//! short Newton polish. Eigenvectors are never computed by a generic dense
//! routine: the j-th column of Ψ is by construction proportional to the
//! polynomial values (p_0, …, p_{n−1}) at the j-th zero, and is obtained by
//! a twisted two-sided evaluation of the same three-term relation
//! ([`JacobiMatrix::eigenvector_at`]). The one-sided forward recurrence with
//! periodic rescaling is kept for off-spectrum points
//! ([`JacobiMatrix::polynomial_vector`]), where the Christoffel function is
//! needed in log space.

use thiserror::Error;

use crate::families::{Family, FamilyError};
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("jacobi matrix requires dimension >= 1")]
    EmptyMatrix,
    #[error("off-diagonal length {got} does not match dimension {n}")]
    OffdiagonalLength { n: usize, got: usize },
    #[error("off-diagonal entry b_{index} is not positive")]
    NonpositiveOffdiagonal { index: usize },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Symmetric tridiagonal matrix of recurrence coefficients: diagonal
/// a_1..a_n, off-diagonal b_1..b_{n−1}, all b_i > 0 so the eigenvalues are
/// real and simple.
#[derive(Debug, Clone)]
pub struct JacobiMatrix<T> {
    diag: Vec<T>,
    offdiag: Vec<T>,
}

/// Polynomial values (p_0, …, p_{n−1}) at a point, scaled to unit Euclidean
/// norm, together with the log of the true norm. The Christoffel function
/// at that point is exp(−2 · log_norm).
#[derive(Debug, Clone)]
pub struct PolynomialVector<T> {
    pub unit: Vec<T>,
    pub log_norm: T,
}

impl<T: Real> JacobiMatrix<T> {
    pub fn new(diag: Vec<T>, offdiag: Vec<T>) -> Result<Self, SpectrumError> {
        if diag.is_empty() {
            return Err(SpectrumError::EmptyMatrix);
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(SpectrumError::OffdiagonalLength {
                n: diag.len(),
                got: offdiag.len(),
            });
        }
        if let Some(i) = offdiag.iter().position(|&b| b.is_nan() || b <= T::zero()) {
            return Err(SpectrumError::NonpositiveOffdiagonal { index: i + 1 });
        }
        Ok(Self { diag, offdiag })
    }

    pub fn from_family(family: &Family<T>, n: usize) -> Result<Self, SpectrumError> {
        assert!(n >= 1);
        let mut diag = Vec::with_capacity(n);
        let mut offdiag = Vec::with_capacity(n - 1);
        for i in 1..=n {
            let (a, b) = family.coefficients(i)?;
            diag.push(a);
            if i < n {
                offdiag.push(b);
            }
        }
        Self::new(diag, offdiag)
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[T] {
        &self.offdiag
    }

    /// Gershgorin bounds (lo, hi) on the spectrum.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.n();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { T::zero() };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { T::zero() };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below x, by counting negative pivots
    /// of the LDLᵀ factorization of L_n − xI.
    pub fn eigenvalue_count_below(&self, x: T) -> usize {
        let pivmin = self.pivot_guard();
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q < T::zero() {
            count += 1;
        }
        for i in 1..self.n() {
            if q.abs() < pivmin {
                q = if q < T::zero() { -pivmin } else { pivmin };
            }
            let e = self.offdiag[i - 1];
            q = (self.diag[i] - x) - e * e / q;
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    fn pivot_guard(&self) -> T {
        let max_e2 = self
            .offdiag
            .iter()
            .fold(T::one(), |m, &e| m.max(e * e));
        T::min_positive_value() / T::epsilon() * max_e2
    }

    /// All eigenvalues, strictly ascending. Bisection on the Sturm count
    /// isolates each one to 1e-14 · max(1, spectral bound), then at most
    /// three Newton steps on p_n polish to the last bit, falling back to
    /// the bisection value whenever a step leaves the bracket.
    pub fn eigenvalues(&self) -> Vec<T> {
        let n = self.n();
        if n == 1 {
            return vec![self.diag[0]];
        }
        let (glo, ghi) = self.gershgorin();
        let scale = T::one().max(glo.abs().max(ghi.abs()));
        let margin = T::epsilon() * scale + T::min_positive_value();
        let lo = glo - margin;
        let hi = ghi + margin;
        let tol = T::of(1e-14) * scale;

        let mut eigenvalues = Vec::with_capacity(n);
        for k in 0..n {
            let mut a = lo;
            let mut b = hi;
            for _ in 0..200 {
                if b - a <= tol {
                    break;
                }
                let mid = a + (b - a) * T::of(0.5);
                if self.eigenvalue_count_below(mid) <= k {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            let mut lambda = a + (b - a) * T::of(0.5);

            // Newton polish within the (slightly widened) bracket.
            let slack = T::of(32.0) * T::epsilon() * scale;
            for _ in 0..3 {
                let Some(step) = self.newton_step(lambda) else {
                    break;
                };
                let cand = lambda - step;
                if cand < a - slack || cand > b + slack || cand == lambda {
                    break;
                }
                lambda = cand;
            }
            eigenvalues.push(lambda);
        }
        eigenvalues.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
        eigenvalues
    }

    /// p̃_n / p̃_n′ at x, where p̃_n = (x − a_n) p_{n−1} − b_{n−1} p_{n−2} is
    /// p_n up to a positive factor. Values and derivatives are rescaled
    /// together, which leaves the Newton ratio unchanged.
    fn newton_step(&self, x: T) -> Option<T> {
        let n = self.n();
        let threshold = T::max_value().sqrt();
        let mut p_prev = T::one();
        let mut d_prev = T::zero();
        let mut p_cur = (x - self.diag[0]) / self.offdiag[0];
        let mut d_cur = self.offdiag[0].recip();
        for i in 1..n - 1 {
            let a = self.diag[i];
            let b_prev = self.offdiag[i - 1];
            let b = self.offdiag[i];
            let p_next = ((x - a) * p_cur - b_prev * p_prev) / b;
            let d_next = (p_cur + (x - a) * d_cur - b_prev * d_prev) / b;
            p_prev = p_cur;
            d_prev = d_cur;
            p_cur = p_next;
            d_cur = d_next;
            let m = p_cur.abs().max(d_cur.abs());
            if m > threshold {
                p_prev = p_prev / m;
                d_prev = d_prev / m;
                p_cur = p_cur / m;
                d_cur = d_cur / m;
            }
        }
        let a = self.diag[n - 1];
        let b_prev = self.offdiag[n - 2];
        let f = (x - a) * p_cur - b_prev * p_prev;
        let df = p_cur + (x - a) * d_cur - b_prev * d_prev;
        let step = f / df;
        step.is_finite().then_some(step)
    }

    /// Unit eigenvector at an isolated eigenvalue, by twisted factorization:
    /// top-down and bottom-up LDLᵀ pivots of L_n − λI meet at the twist index
    /// with the smallest residual pivot, and the vector unwinds from there by
    /// pure ratio recurrences of the same three-term relation. In exact
    /// arithmetic the result is proportional to (p_0(λ), …, p_{n−1}(λ)); in
    /// floating point, unlike the one-sided forward recurrence, it is not
    /// contaminated by the dominant recurrence solution when the true vector
    /// decays (discrete-measure families with n far beyond the effective
    /// support). The sign is fixed so the p_0 entry is positive.
    pub fn eigenvector_at(&self, lambda: T) -> Vec<T> {
        let n = self.n();
        if n == 1 {
            return vec![T::one()];
        }
        let guard = self.pivot_guard();
        let gd = |x: T| {
            if x.abs() < guard {
                if x < T::zero() {
                    -guard
                } else {
                    guard
                }
            } else {
                x
            }
        };

        let mut dplus = vec![T::zero(); n];
        dplus[0] = self.diag[0] - lambda;
        for i in 1..n {
            let e = self.offdiag[i - 1];
            dplus[i] = (self.diag[i] - lambda) - e * e / gd(dplus[i - 1]);
        }
        let mut dminus = vec![T::zero(); n];
        dminus[n - 1] = self.diag[n - 1] - lambda;
        for i in (0..n - 1).rev() {
            let e = self.offdiag[i];
            dminus[i] = (self.diag[i] - lambda) - e * e / gd(dminus[i + 1]);
        }

        let mut r = 0;
        let mut best = T::infinity();
        for i in 0..n {
            let gamma = dplus[i] + dminus[i] - (self.diag[i] - lambda);
            if gamma.abs() < best {
                best = gamma.abs();
                r = i;
            }
        }

        let mut v = vec![T::zero(); n];
        v[r] = T::one();
        for i in (0..r).rev() {
            v[i] = -(self.offdiag[i] / gd(dplus[i])) * v[i + 1];
        }
        for i in r + 1..n {
            v[i] = -(self.offdiag[i - 1] / gd(dminus[i])) * v[i - 1];
        }

        let norm = v.iter().fold(T::zero(), |a, &x| a + x * x).sqrt();
        let sign_source = if v[0] != T::zero() {
            v[0]
        } else {
            v.iter().fold(T::zero(), |m, &x| if x.abs() > m.abs() { x } else { m })
        };
        let scale = if sign_source < T::zero() { -norm } else { norm };
        for e in v.iter_mut() {
            *e = *e / scale;
        }
        v
    }

    /// Evaluate (p_0, …, p_{n−1}) at λ through the recurrence, rescaling the
    /// whole vector whenever the newest entry outgrows √(T::MAX) (≈ 2^512
    /// for f64) and accumulating the scale in log space.
    pub fn polynomial_vector(&self, lambda: T) -> PolynomialVector<T> {
        let n = self.n();
        let threshold = T::max_value().sqrt();
        let mut log_scale = T::zero();
        let mut v = Vec::with_capacity(n);
        v.push(T::one());
        if n > 1 {
            v.push((lambda - self.diag[0]) / self.offdiag[0]);
        }
        for i in 1..n - 1 {
            let next = ((lambda - self.diag[i]) * v[i] - self.offdiag[i - 1] * v[i - 1])
                / self.offdiag[i];
            v.push(next);
            let m = next.abs();
            if m > threshold {
                log_scale = log_scale + m.ln();
                for e in v.iter_mut() {
                    *e = *e / m;
                }
            }
        }

        // Normalize by the max first so the squared norm cannot overflow.
        let peak = v.iter().fold(T::zero(), |m, e| m.max(e.abs()));
        if peak > T::zero() {
            log_scale = log_scale + peak.ln();
            for e in v.iter_mut() {
                *e = *e / peak;
            }
        }
        let norm = v
            .iter()
            .fold(T::zero(), |acc, &e| acc + e * e)
            .sqrt();
        for e in v.iter_mut() {
            *e = *e / norm;
        }
        PolynomialVector {
            unit: v,
            log_norm: log_scale + norm.ln(),
        }
    }
}

/// Normalized polynomial-value vector at λ for a family of degree-n context;
/// see [`JacobiMatrix::polynomial_vector`].
pub fn evaluate_polynomial_vector<T: Real>(
    family: &Family<T>,
    n: usize,
    lambda: T,
) -> Result<PolynomialVector<T>, SpectrumError> {
    Ok(JacobiMatrix::from_family(family, n)?.polynomial_vector(lambda))
}

/// Christoffel function ℓ_n(λ) = (Σ_{k<n} p_k²(λ))^{−1} at an arbitrary
/// point, through the log-norm path. Underflows to zero for points far
/// outside the spectrum at large n.
pub fn christoffel_at<T: Real>(
    family: &Family<T>,
    n: usize,
    lambda: T,
) -> Result<T, SpectrumError> {
    let pv = evaluate_polynomial_vector(family, n, lambda)?;
    Ok((-(pv.log_norm + pv.log_norm)).exp())
}

/// Zeros, Christoffel weights and the orthogonal matrix Ψ whose j-th column
/// is the unit polynomial-value vector at the j-th zero. Columns are
/// ordered by ascending zero.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T> {
    n: usize,
    zeros: Vec<T>,
    christoffel: Vec<T>,
    /// Column-major n×n.
    psi: Vec<T>,
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Zeros of p_n in ascending order.
    pub fn zeros(&self) -> &[T] {
        &self.zeros
    }

    /// ℓ_n at each zero; these are also the weights of the normalized
    /// counting measure of zeros.
    pub fn christoffel(&self) -> &[T] {
        &self.christoffel
    }

    pub fn counting_weights(&self) -> &[T] {
        &self.christoffel
    }

    /// Column j (1-based) of Ψ.
    pub fn psi_column(&self, j: usize) -> &[T] {
        assert!((1..=self.n).contains(&j), "column index out of range");
        &self.psi[(j - 1) * self.n..j * self.n]
    }

    /// Entry Ψ_{ij} (1-based).
    pub fn psi(&self, i: usize, j: usize) -> T {
        assert!((1..=self.n).contains(&i), "row index out of range");
        self.psi_column(j)[i - 1]
    }

    /// max_{i,j} |(ΨᵀΨ − I)_{ij}|.
    pub fn orthogonality_defect(&self) -> T {
        let n = self.n;
        let mut worst = T::zero();
        for i in 1..=n {
            let ci = self.psi_column(i);
            for j in i..=n {
                let cj = self.psi_column(j);
                let dot = ci
                    .iter()
                    .zip(cj)
                    .fold(T::zero(), |acc, (&x, &y)| acc + x * y);
                let target = if i == j { T::one() } else { T::zero() };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// Full spectral decomposition of the degree-n Jacobi matrix of a family.
///
/// Columns of Ψ come from [`JacobiMatrix::eigenvector_at`]; the Christoffel
/// weight at each zero is the squared first component of the unit column
/// (the first polynomial is the constant 1, so v_1 = √ℓ).
pub fn decompose<T: Real>(
    family: &Family<T>,
    n: usize,
) -> Result<SpectralDecomposition<T>, SpectrumError> {
    let matrix = JacobiMatrix::from_family(family, n)?;
    let zeros = matrix.eigenvalues();
    let mut christoffel = Vec::with_capacity(n);
    let mut psi = Vec::with_capacity(n * n);
    for &z in &zeros {
        let v = matrix.eigenvector_at(z);
        christoffel.push(v[0] * v[0]);
        psi.extend_from_slice(&v);
    }
    Ok(SpectralDecomposition {
        n,
        zeros,
        christoffel,
        psi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cheb1_zeros(n: usize) -> Vec<f64> {
        let mut z: Vec<f64> = (1..=n)
            .map(|j| ((2 * j - 1) as f64 * PI / (2 * n) as f64).cos())
            .collect();
        z.sort_by(|a, b| a.partial_cmp(b).unwrap());
        z
    }

    fn cheb2_zeros(n: usize) -> Vec<f64> {
        let mut z: Vec<f64> = (1..=n)
            .map(|j| (j as f64 * PI / (n + 1) as f64).cos())
            .collect();
        z.sort_by(|a, b| a.partial_cmp(b).unwrap());
        z
    }

    #[test]
    fn eigenvalues_chebyshev_closed_forms() {
        let m = JacobiMatrix::from_family(&Family::Chebyshev1, 4).unwrap();
        for (got, want) in m.eigenvalues().iter().zip(cheb1_zeros(4)) {
            assert!((got - want).abs() < 1e-14);
        }
        let m = JacobiMatrix::from_family(&Family::Chebyshev2, 3).unwrap();
        let want = [-0.5_f64 * 2.0_f64.sqrt(), 0.0, 0.5 * 2.0_f64.sqrt()];
        for (got, want) in m.eigenvalues().iter().zip(want) {
            assert!((got - want).abs() < 1e-14);
        }
        for n in [25usize, 80] {
            let m1 = JacobiMatrix::from_family(&Family::Chebyshev1, n).unwrap();
            for (got, want) in m1.eigenvalues().iter().zip(cheb1_zeros(n)) {
                assert!((got - want).abs() < 1e-13);
            }
            let m2 = JacobiMatrix::from_family(&Family::Chebyshev2, n).unwrap();
            for (got, want) in m2.eigenvalues().iter().zip(cheb2_zeros(n)) {
                assert!((got - want).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn eigenvalues_single_entry() {
        let m = JacobiMatrix::new(vec![3.25], vec![]).unwrap();
        assert_eq!(m.eigenvalues(), vec![3.25]);
    }

    #[test]
    fn matrix_validation() {
        assert!(matches!(
            JacobiMatrix::<f64>::new(vec![], vec![]),
            Err(SpectrumError::EmptyMatrix)
        ));
        assert!(matches!(
            JacobiMatrix::new(vec![0.0, 0.0], vec![0.0]),
            Err(SpectrumError::NonpositiveOffdiagonal { index: 1 })
        ));
        assert!(matches!(
            JacobiMatrix::new(vec![0.0, 0.0], vec![]),
            Err(SpectrumError::OffdiagonalLength { .. })
        ));
    }

    #[test]
    fn sturm_count_is_monotone_and_complete() {
        let m = JacobiMatrix::from_family(&Family::jacobi(1.2, 3.4).unwrap(), 25).unwrap();
        let (lo, hi) = m.gershgorin();
        assert_eq!(m.eigenvalue_count_below(lo - 0.1), 0);
        assert_eq!(m.eigenvalue_count_below(hi + 0.1), 25);
        let ev = m.eigenvalues();
        for (k, &z) in ev.iter().enumerate() {
            assert!(m.eigenvalue_count_below(z + 1e-10) > k);
        }
    }

    #[test]
    fn polynomial_vector_basics() {
        let pv = evaluate_polynomial_vector(&Family::<f64>::Chebyshev1, 1, 0.3).unwrap();
        assert_eq!(pv.unit, vec![1.0]);
        assert_eq!(pv.log_norm, 0.0);

        // at a zero of T_5 the vector is proportional to (1, √2 cos θ, …)
        let theta = PI / 10.0;
        let pv = evaluate_polynomial_vector(&Family::Chebyshev1, 5, theta.cos()).unwrap();
        let raw: Vec<f64> = (0..5)
            .map(|m| {
                if m == 0 {
                    1.0
                } else {
                    2.0_f64.sqrt() * (m as f64 * theta).cos()
                }
            })
            .collect();
        let norm: f64 = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
        for (got, want) in pv.unit.iter().zip(&raw) {
            assert!((got - want / norm).abs() < 1e-13);
        }
        // squared norm before normalization is n at first-kind zeros
        assert!((pv.log_norm - 5.0_f64.ln() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn christoffel_values() {
        assert_eq!(christoffel_at(&Family::<f64>::Chebyshev1, 1, 0.7).unwrap(), 1.0);
        // ℓ_n = 1/n at every first-kind zero
        for n in [2usize, 7, 40] {
            for &z in &cheb1_zeros(n) {
                let l = christoffel_at(&Family::Chebyshev1, n, z).unwrap();
                assert!((l - 1.0 / n as f64).abs() < 1e-12, "n={n}");
            }
        }
        // general-λ closed form ℓ_n^{-1}(cos θ) = n − 1/2 + sin((2n−1)θ)/(2 sin θ)
        let n = 13;
        for t in 1..20 {
            let theta = PI * t as f64 / 20.0;
            let want = (n as f64 - 0.5
                + ((2 * n - 1) as f64 * theta).sin() / (2.0 * theta.sin()))
            .recip();
            let got = christoffel_at(&Family::Chebyshev1, n, theta.cos()).unwrap();
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn christoffel_second_kind_at_zeros() {
        let n = 17;
        for j in 1..=n {
            let theta = j as f64 * PI / (n + 1) as f64;
            let want = 2.0 * theta.sin().powi(2) / (n + 1) as f64;
            let got = christoffel_at(&Family::Chebyshev2, n, theta.cos()).unwrap();
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn decompose_chebyshev1_n2_by_hand() {
        let dec = decompose(&Family::<f64>::Chebyshev1, 2).unwrap();
        let c = 0.5_f64 * 2.0_f64.sqrt();
        assert!((dec.zeros()[0] + c).abs() < 1e-14);
        assert!((dec.zeros()[1] - c).abs() < 1e-14);
        for &l in dec.christoffel() {
            assert!((l - 0.5).abs() < 1e-13);
        }
        // columns (1/√2, ∓1/√2) at the ∓cos(π/4) zeros
        assert!((dec.psi(1, 1) - c).abs() < 1e-13);
        assert!((dec.psi(2, 1) + c).abs() < 1e-13);
        assert!((dec.psi(1, 2) - c).abs() < 1e-13);
        assert!((dec.psi(2, 2) - c).abs() < 1e-13);
    }

    #[test]
    fn decompose_trivial() {
        let dec = decompose(&Family::meixner(3.4_f64, 0.2).unwrap(), 1).unwrap();
        assert_eq!(dec.psi_column(1), &[1.0]);
        assert_eq!(dec.christoffel(), &[1.0]);
        assert!((dec.zeros()[0] - 0.85).abs() < 1e-15);
    }

    #[test]
    fn weights_sum_to_one_and_columns_unit() {
        let families: Vec<Family<f64>> = vec![
            Family::Chebyshev1,
            Family::jacobi(1.2, 8.9).unwrap(),
            Family::meixner(3.4, 0.8).unwrap(),
        ];
        for f in &families {
            let dec = decompose(f, 60).unwrap();
            let total: f64 = dec.christoffel().iter().sum();
            assert!((total - 1.0).abs() < 1e-10, "{}: Σℓ = {total}", f.name());
            for j in 1..=60 {
                let norm: f64 = dec.psi_column(j).iter().map(|x| x * x).sum();
                assert!((norm - 1.0).abs() < 1e-12);
            }
            assert!(dec.orthogonality_defect() < 1e-8);
        }
    }

    #[test]
    fn row_orthogonality_quadrature() {
        // Σ_k ℓ(λ_k) p_{i−1}(λ_k) p_{j−1}(λ_k) = δ_ij
        let dec = decompose(&Family::pollaczek(1.2_f64, 3.4).unwrap(), 35).unwrap();
        for i in 1..=35 {
            for j in i..=35 {
                let mut acc = 0.0;
                for k in 1..=35 {
                    // rows of Ψ already carry √ℓ · p
                    acc += dec.psi(i, k) * dec.psi(j, k);
                }
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((acc - target).abs() < 1e-8, "i={i}, j={j}: {acc}");
            }
        }
    }

    #[test]
    fn zeros_interlace() {
        let f = Family::meixner(8.9, 0.2).unwrap();
        let outer = decompose(&f, 30).unwrap();
        let inner = decompose(&f, 29).unwrap();
        for k in 0..29 {
            assert!(outer.zeros()[k] < inner.zeros()[k]);
            assert!(inner.zeros()[k] < outer.zeros()[k + 1]);
        }
    }

    #[test]
    fn scaling_matrix_scales_zeros_only() {
        let f = Family::jacobi(1.2_f64, 3.4).unwrap();
        let base = JacobiMatrix::from_family(&f, 20).unwrap();
        let c = 3.7;
        let scaled = JacobiMatrix::new(
            base.diag().iter().map(|&a| c * a).collect(),
            base.offdiag().iter().map(|&b| c * b).collect(),
        )
        .unwrap();
        let z0 = base.eigenvalues();
        let z1 = scaled.eigenvalues();
        for (a, b) in z0.iter().zip(&z1) {
            assert!((c * a - b).abs() < 1e-10);
        }
        for (&z, &w) in z0.iter().zip(&z1) {
            let p0 = base.polynomial_vector(z);
            let p1 = scaled.polynomial_vector(w);
            for (x, y) in p0.unit.iter().zip(&p1.unit) {
                assert!((x - y).abs() < 1e-10);
            }
            assert!((p0.log_norm - p1.log_norm).abs() < 1e-10);
        }
    }

    #[test]
    fn rescaling_handles_huge_polynomial_growth() {
        // U_k(10) = sinh((k+1)s)/sinh(s) with cosh s = 10 overflows f64 by
        // k ≈ 240 without rescaling; the log norm must match the analytic
        // value ln U_{n−1}(10) + ln(correction) ≈ n·s − ln(2 sinh s) + …
        let n = 300;
        let pv = evaluate_polynomial_vector(&Family::<f64>::Chebyshev2, n, 10.0).unwrap();
        assert!(pv.unit.iter().all(|x| x.is_finite()));
        let s = (10.0_f64 + 99.0_f64.sqrt()).ln();
        // ‖v‖² = Σ sinh²((k+1)s)/sinh²(s) ≈ e^{2ns}/(4 sinh² s · (1 − e^{−2s}))
        let expected = n as f64 * s - (2.0 * s.sinh()).ln() - 0.5 * (-(-2.0 * s).exp()).ln_1p();
        assert!(
            (pv.log_norm - expected).abs() < 1e-9 * expected.abs(),
            "log_norm {} vs {expected}",
            pv.log_norm
        );
    }

    #[test]
    fn twisted_and_forward_vectors_agree_when_stable() {
        let m = JacobiMatrix::from_family(&Family::<f64>::Chebyshev1, 30).unwrap();
        for &z in &m.eigenvalues() {
            let twisted = m.eigenvector_at(z);
            let forward = m.polynomial_vector(z).unit;
            for (x, y) in twisted.iter().zip(&forward) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn compact_support_meixner_stays_orthogonal() {
        // The effective support of the c = 0.2 measure is ~30 lattice points,
        // so the zeros sit exponentially close to the mass points; the
        // one-sided forward recurrence cannot produce this decomposition.
        let dec = decompose(&Family::meixner(3.4_f64, 0.2).unwrap(), 120).unwrap();
        assert!(dec.orthogonality_defect() < 1e-8);
        let total: f64 = dec.christoffel().iter().sum();
        assert!((total - 1.0).abs() < 1e-10, "Σℓ = {total}");
        assert!(dec.christoffel().iter().all(|&l| (0.0..=1.0).contains(&l)));
        assert!(dec.zeros().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn meixner_large_n_stays_finite() {
        let dec = decompose(&Family::meixner(3.4, 0.8).unwrap(), 150).unwrap();
        let total: f64 = dec.christoffel().iter().sum();
        assert!((total - 1.0).abs() < 1e-10, "Σℓ = {total}");
        assert!(dec.orthogonality_defect() < 1e-8);
        assert!(dec.zeros().windows(2).all(|w| w[0] < w[1]));
    }
}
