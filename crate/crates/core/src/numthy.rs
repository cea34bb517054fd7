//! Exact integer machinery: GCD, the centered remainder, the piecewise-linear
//! triangle wave that folds the line onto [0, n], and the exhaustive verifier
//! for its image structure on {1, …, n−1}.
//!
//! Everything here is exact — integer arithmetic with 128-bit intermediates,
//! rationals for the off-lattice points — because the image/multiplicity
//! statements are combinatorial and must not be tested through floats.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

/// Exact rational scalar used for off-integer triangle-wave evaluation.
pub type Rational = num_rational::Ratio<i64>;

/// Greatest common divisor (Euclid); gcd(0, b) = b.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The unique r with −q/2 ≤ r < q/2 and p ≡ r (mod q); may be negative.
pub fn shifted_remainder(p: i64, q: i64) -> i64 {
    shifted_remainder_i128(p as i128, q as i128) as i64
}

fn shifted_remainder_i128(p: i128, q: i128) -> i128 {
    debug_assert!(q >= 1);
    let r = p.rem_euclid(q);
    if 2 * r < q {
        r
    } else {
        r - q
    }
}

/// The even, 2n/j-periodic linear spline through the nodes
/// (m·n/j, n·(1−(−1)^m)/2), m ∈ ℤ — a triangle wave ramping between 0 and n.
///
/// On [(2k−1)n/j, (2k+1)n/j] it equals |jx − 2kn|; at integer arguments it
/// reduces to the centered remainder, |D(jk, 2n)|.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriangleWave {
    n: u64,
    j: u64,
}

impl TriangleWave {
    pub fn new(n: u64, j: u64) -> Self {
        assert!(n >= 1 && j >= 1, "triangle wave requires n, j >= 1");
        Self { n, j }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    /// Period 2n/j as an exact rational.
    pub fn period(&self) -> Rational {
        Rational::new(2 * self.n as i64, self.j as i64)
    }

    /// Exact value at an integer: |D(j·|k|, 2n)| ∈ [0, n].
    pub fn at_integer(&self, k: i64) -> u64 {
        let p = self.j as i128 * (k.unsigned_abs() as i128);
        let r = shifted_remainder_i128(p, 2 * self.n as i128);
        let v = r.unsigned_abs() as u64;
        debug_assert!(v <= self.n);
        v
    }

    /// Exact value at a rational point: |jx − 2kn| with k the nearest node
    /// index. All intermediates are 128-bit; overflow panics.
    pub fn at_rational(&self, x: Rational) -> Rational {
        let p = *x.numer() as i128;
        let q = *x.denom() as i128; // > 0, reduced
        let j = self.j as i128;
        let n = self.n as i128;

        let jp = j.checked_mul(p).expect("triangle wave overflow");
        let two_nq = 2 * n.checked_mul(q).expect("triangle wave overflow");
        // nearest integer to jx/(2n) = jp/(2nq); ties are node points where
        // both neighboring pieces give the value n.
        let k = (jp + n * q).div_euclid(two_nq);
        let r = jp - k.checked_mul(two_nq).expect("triangle wave overflow");
        Rational::new(
            i64::try_from(r.abs()).expect("triangle wave overflow"),
            i64::try_from(q).expect("triangle wave overflow"),
        )
    }
}

/// One verified clause of the image-structure statement.
#[derive(Debug, Clone, Serialize)]
pub struct ClauseCheck {
    pub clause: &'static str,
    pub pass: bool,
}

/// Exhaustive enumeration of a triangle wave on {1, …, n−1}: its image, the
/// multiplicity of each interior value, and the verdicts for the shift,
/// scaling, boundary and image/multiplicity clauses.
#[derive(Debug, Clone, Serialize)]
pub struct ImageStructureReport {
    pub n: u64,
    pub j: u64,
    /// GCD(j, n).
    pub d: u64,
    /// GCD(j, 2n).
    pub d2: u64,
    /// Interior image: values of the wave on {1..n−1} excluding 0 and n.
    pub image_values: BTreeSet<u64>,
    /// Interior value → how many k in {1..n−1} attain it.
    pub multiplicity_map: BTreeMap<u64, u64>,
    pub clauses: Vec<ClauseCheck>,
    pub pass: bool,
}

impl ImageStructureReport {
    /// Name of the first failing clause, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        self.clauses.iter().find(|c| !c.pass).map(|c| c.clause)
    }
}

/// Enumerate the wave on {1, …, n−1} and verify:
///
/// * shift: w(k + n/d) = n − w(k) for j/d odd, = w(k) for j/d even;
/// * scaling: w_{j,n}(k) = d · w_{j/d, n/d}(k);
/// * d = n ⇒ every integer value lies in {0, n};
/// * GCD(j, 2n) = d < n ⇒ interior image {d·m : m = 1..n/d−1}, each hit d times;
/// * GCD(j, 2n) = 2d, d < n ⇒ interior image {2d·m : m = 1..(n−d)/(2d)}, each
///   hit 2d times;
///
/// where d = GCD(j, n). This is the oracle the closed-form reductions are
/// tested against, so it is deliberately enumeration, not formula.
pub fn verify_image_structure(n: u64, j: u64) -> ImageStructureReport {
    assert!(n >= 1 && j >= 1);
    let wave = TriangleWave::new(n, j);
    let d = gcd(j, n);
    let d2 = gcd(j, 2 * n);
    debug_assert!(d2 == d || d2 == 2 * d);

    let mut image_values = BTreeSet::new();
    let mut multiplicity_map = BTreeMap::new();
    for k in 1..n {
        let v = wave.at_integer(k as i64);
        if v != 0 && v != n {
            image_values.insert(v);
            *multiplicity_map.entry(v).or_insert(0u64) += 1;
        }
    }

    let mut clauses = Vec::new();

    // Shift identity at every integer in one double period.
    let shift = n / d;
    let j_over_d_odd = (j / d) % 2 == 1;
    let shift_ok = (0..=2 * n as i64).all(|k| {
        let lhs = wave.at_integer(k + shift as i64);
        let rhs = if j_over_d_odd {
            n - wave.at_integer(k)
        } else {
            wave.at_integer(k)
        };
        lhs == rhs
    });
    clauses.push(ClauseCheck {
        clause: "shift_identity",
        pass: shift_ok,
    });

    // Scaling: w_{j,n}(k) = d · w_{j/d, n/d}(k).
    let reduced = TriangleWave::new(n / d, j / d);
    let scaling_ok =
        (0..=2 * n as i64).all(|k| wave.at_integer(k) == d * reduced.at_integer(k));
    clauses.push(ClauseCheck {
        clause: "scaling_identity",
        pass: scaling_ok,
    });

    if d == n {
        clauses.push(ClauseCheck {
            clause: "boundary_only",
            pass: image_values.is_empty(),
        });
    } else if d2 == d {
        let expected: BTreeSet<u64> = (1..n / d).map(|m| d * m).collect();
        let pass = image_values == expected
            && multiplicity_map.values().all(|&c| c == d);
        clauses.push(ClauseCheck {
            clause: "image_multiplicity_odd_case",
            pass,
        });
    } else {
        let expected: BTreeSet<u64> = (1..=(n - d) / (2 * d)).map(|m| 2 * d * m).collect();
        let pass = image_values == expected
            && multiplicity_map.values().all(|&c| c == 2 * d);
        clauses.push(ClauseCheck {
            clause: "image_multiplicity_even_case",
            pass,
        });
    }

    let pass = clauses.iter().all(|c| c.pass);
    ImageStructureReport {
        n,
        j,
        d,
        d2,
        image_values,
        multiplicity_map,
        clauses,
        pass,
    }
}
