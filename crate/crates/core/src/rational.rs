//! Minimal exact rational arithmetic for bound values. Bounds are reported as
//! exact rationals so comparisons against integer code lengths are decidable.

use std::cmp::Ordering;
use std::fmt;

/// An exact rational with `i128` internals, always kept in lowest terms with
/// a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn zero() -> Self {
        Rational::integer(0)
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn ceil(&self) -> i128 {
        self.num.div_euclid(self.den)
            + if self.num.rem_euclid(self.den) != 0 {
                1
            } else {
                0
            }
    }

    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn add(&self, other: Rational) -> Rational {
        Rational::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
    }

    pub fn sub(&self, other: Rational) -> Rational {
        Rational::new(
            self.num * other.den - other.num * self.den,
            self.den * other.den,
        )
    }

    pub fn mul(&self, other: Rational) -> Rational {
        Rational::new(self.num * other.num, self.den * other.den)
    }

    pub fn div(&self, other: Rational) -> Rational {
        assert!(other.num != 0, "division by zero rational");
        Rational::new(self.num * other.den, self.den * other.num)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Largest integer `s` with `s * s <= n`.
pub fn isqrt_floor(n: i128) -> i128 {
    assert!(n >= 0, "isqrt of negative value");
    if n < 2 {
        return n;
    }
    let mut lo: i128 = 1;
    let mut hi: i128 = 1 << ((128 - n.leading_zeros() as i128) / 2 + 1);
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if mid.checked_mul(mid).map(|sq| sq <= n).unwrap_or(false) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Smallest integer `s` with `s * s >= n`.
pub fn isqrt_ceil(n: i128) -> i128 {
    let f = isqrt_floor(n);
    if f * f == n {
        f
    } else {
        f + 1
    }
}
