//! Closed-form lower and upper bounds on irregular-code lengths and FCIDC
//! redundancy. All values are exact rationals; the one square root involved
//! is bracketed with integer square roots so comparisons stay decidable.

use serde_json::json;

use crate::error::{Error, Result};
use crate::matrices::{message_matrix, representative_vectors, DistanceMatrix, Family, MatrixType};
use crate::metric::insdel_distance;
use crate::rational::{isqrt_ceil, isqrt_floor, Rational};
use crate::word::BinaryWord;

/// A named bound value with the inputs that produced it.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub name: &'static str,
    pub direction: &'static str,
    pub value: Rational,
    pub parameters: serde_json::Value,
}

impl BoundReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "direction": self.direction,
            "value": self.value.to_string(),
            "value_approx": self.value.to_f64(),
            "parameters": self.parameters,
        })
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Checks the supersequence pair-sum inequality:
/// if every codeword (all of length `n`) is a subsequence of `v` (length `N`),
/// then `sum_{i<j} d(c_i, c_j) <= M^2 (N - n) n / N`.
pub fn sum_bound_check(code: &[BinaryWord], v: &BinaryWord) -> Result<bool> {
    let n = code.first().map(BinaryWord::len).unwrap_or(0);
    for c in code {
        if c.len() != n {
            return Err(Error::WrongWordLength {
                word: c.to_string(),
                expected: n,
                actual: c.len(),
            });
        }
        if !c.is_subsequence_of(v) {
            return Err(Error::NotASupersequence {
                word: c.to_string(),
            });
        }
    }
    let m = code.len() as u128;
    let big_n = v.len() as u128;
    let mut pair_sum: u128 = 0;
    for i in 0..code.len() {
        for j in (i + 1)..code.len() {
            pair_sum += insdel_distance(&code[i], &code[j]) as u128;
        }
    }
    if big_n == 0 {
        return Ok(pair_sum == 0);
    }
    // sum <= M^2 (N - n) n / N, compared exactly after clearing N.
    Ok(pair_sum * big_n <= m * m * (big_n - n as u128) * n as u128)
}

/// Smallest `N` (as an exact rational) admissible for the supersequence
/// Plotkin bound: `N = 4S / M^2`.
pub fn minimal_admissible_n(matrix: &DistanceMatrix) -> Rational {
    let s = matrix.pair_sum() as i128;
    let m = matrix.order as i128;
    if m == 0 {
        return Rational::zero();
    }
    Rational::new(4 * s, m * m)
}

/// The supersequence Plotkin bound bracketed to exact rationals:
/// `(N - sqrt(N^2 - 4SN/M^2)) / 2`, valid as a lower bound on the type-1
/// minimum length whenever a length-N common supersequence of an optimal
/// code exists. The square root is irrational in general, so the value is
/// returned as an interval; `lower` is the certified safe bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlotkinInterval {
    pub lower: Rational,
    pub upper: Rational,
}

pub fn plotkin_like_lower(matrix: &DistanceMatrix, n: Rational) -> Result<PlotkinInterval> {
    let min_n = minimal_admissible_n(matrix);
    if n < min_n {
        return Err(Error::Precondition(format!(
            "N = {n} is below the minimal admissible N = {min_n} (radicand would be negative)"
        )));
    }
    let radicand = n.mul(n).sub(n.mul(min_n)); // N^2 - 4SN/M^2
    debug_assert!(radicand >= Rational::zero());
    // sqrt(p/q) = sqrt(pq)/q; bracket with integer square roots.
    let p = radicand.numerator();
    let q = radicand.denominator();
    let sqrt_lo = Rational::new(isqrt_floor(p * q), q);
    let sqrt_hi = Rational::new(isqrt_ceil(p * q), q);
    let half = Rational::new(1, 2);
    Ok(PlotkinInterval {
        lower: n.sub(sqrt_hi).mul(half),
        upper: n.sub(sqrt_lo).mul(half),
    })
}

/// The supersequence Plotkin bound at the minimal admissible `N = 4S/M^2`,
/// where the radicand vanishes and the value is exactly `2S/M^2`.
pub fn plotkin_like_lower_at_minimal_n(matrix: &DistanceMatrix) -> Rational {
    let interval = plotkin_like_lower(matrix, minimal_admissible_n(matrix))
        .expect("minimal N is admissible by construction");
    debug_assert_eq!(interval.lower, interval.upper);
    interval.lower
}

/// The Hamming-derived Plotkin bound: `2S/M^2` for even order,
/// `2S/(M^2 - 1)` for odd order, via `d_H >= d_ID / 2`.
pub fn hamming_plotkin_lower(matrix: &DistanceMatrix) -> Rational {
    let s = matrix.pair_sum() as i128;
    let m = matrix.order as i128;
    if m <= 1 {
        return Rational::zero();
    }
    if m % 2 == 0 {
        Rational::new(2 * s, m * m)
    } else {
        Rational::new(2 * s, m * m - 1)
    }
}

/// Pair sum of the (t+2)-order leading principal submatrix of the runs
/// type-1 requirement matrix, in closed form:
/// `5t(t+1)(t+2)/6 + floor((t+1)^2 / 4)`.
///
/// Derivation from the entries: offset `delta` in 1..=t+1 occurs in
/// `t + 2 - delta` pairs with entry `2t + 2 - delta` (even `delta`) or
/// `2t + 1 - delta` (odd `delta`); summing gives the two terms above.
pub fn runs_submatrix_pair_sum(t: u64) -> u64 {
    5 * t * (t + 1) * (t + 2) / 6 + (t + 1) * (t + 1) / 4
}

/// The runs type-1 requirement matrix restricted to its first t+2 rows,
/// generated from the representative vectors at k = t + 2.
pub fn runs_principal_submatrix(t: usize) -> Result<DistanceMatrix> {
    let k = t + 2;
    let f = crate::functions::runs_function(k);
    let xs = representative_vectors(Family::Runs, k);
    message_matrix(&f, t, &xs, MatrixType::Type1)
}

/// Lower bound on the redundancy of the runs function:
/// `(2/(t+2)^2) * runs_submatrix_pair_sum(t)`.
pub fn runs_redundancy_lower(t: u64) -> Rational {
    let s = runs_submatrix_pair_sum(t) as i128;
    let d = (t + 2) as i128;
    Rational::new(2 * s, d * d)
}

/// Parity-split closed forms of [`runs_redundancy_lower`], re-derived from
/// the pair sum: `(10t^3 + 33t^2 + 26t)/(6(t+2)^2)` for even t and
/// `(10t^3 + 33t^2 + 26t + 3)/(6(t+2)^2)` for odd t.
pub fn runs_redundancy_closed_form(t: u64) -> Rational {
    let ti = t as i128;
    let num = 10 * ti.pow(3) + 33 * ti.pow(2) + 26 * ti + if t % 2 == 1 { 3 } else { 0 };
    let d = ti + 2;
    Rational::new(num, 6 * d * d)
}

/// The previously published closed forms, kept for comparison reporting:
/// `(10t^3 + 39t^2 + 26t)/(3(t+2)^2)` for even t and
/// `(10t^3 + 39t^2 + 38t + 29)/(3(t+2)^2)` for odd t. These do not agree
/// with the pair-sum re-derivation; see `runs_redundancy_closed_form`.
pub fn published_runs_closed_form(t: u64) -> Rational {
    let ti = t as i128;
    let num = if t % 2 == 0 {
        10 * ti.pow(3) + 39 * ti.pow(2) + 26 * ti
    } else {
        10 * ti.pow(3) + 39 * ti.pow(2) + 38 * ti + 29
    };
    let d = ti + 2;
    Rational::new(num, 3 * d * d)
}

/// Sphere-size bounds for a word of length `|x|` and radius `t`:
/// deletion-sphere lower `C(r(x)-t+1, t)`, deletion-sphere upper `C(|x|+t, t)`,
/// insertion-sphere upper `sum_{i<=t} C(|x|+t, i)`.
///
/// The deletion lower bound is the classical run-count form; at t = 1 it is
/// exactly r(x). (The variant with `r(x)+t-1` fails already at x = 0101,
/// t = 2, where it would claim 10 <= 4.)
pub fn sphere_size_bounds(x: &BinaryWord, t: usize) -> Result<(u128, u128, u128)> {
    if t > x.len() {
        return Err(Error::RadiusTooLarge { t, len: x.len() });
    }
    let runs = x.run_count() as u64;
    let n = x.len() as u64;
    let t = t as u64;
    let del_lower = if runs + 1 >= t {
        binomial(runs + 1 - t, t)
    } else {
        0
    };
    let del_upper = binomial(n + t, t);
    let ins_upper = (0..=t).map(|i| binomial(n + t, i)).sum();
    Ok((del_lower, del_upper, ins_upper))
}
