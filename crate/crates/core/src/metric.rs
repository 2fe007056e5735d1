//! Exact primitives of the insdel metric: LCS, distance, spheres and balls.
//!
//! Everything here is computed exactly; spheres and balls are materialized as
//! sorted sets so outputs are deterministic and diff-able.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::BinaryWord;

/// Maximum word length accepted by the exhaustive ball scan.
pub const MAX_BALL_LEN: usize = 20;

/// Length of a longest common subsequence, by full dynamic programming.
pub fn lcs_length(x: &BinaryWord, y: &BinaryWord) -> usize {
    lcs_bits(x.bits(), y.bits())
}

pub(crate) fn lcs_bits(x: &[u8], y: &[u8]) -> usize {
    if x.is_empty() || y.is_empty() {
        return 0;
    }
    // Two-row DP; rows indexed by the shorter word to bound scratch space.
    let (short, long) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    let mut prev = vec![0u16; short.len() + 1];
    let mut cur = vec![0u16; short.len() + 1];
    for &lb in long {
        for (j, &sb) in short.iter().enumerate() {
            cur[j + 1] = if lb == sb {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[short.len()] as usize
}

/// Insdel distance `|x| + |y| - 2 LCS(x, y)`: the minimum number of
/// insertions plus deletions transforming `x` into `y`.
pub fn insdel_distance(x: &BinaryWord, y: &BinaryWord) -> usize {
    x.len() + y.len() - 2 * lcs_length(x, y)
}

pub(crate) fn insdel_bits(x: &[u8], y: &[u8]) -> usize {
    x.len() + y.len() - 2 * lcs_bits(x, y)
}

/// Hamming distance between equal-length words.
pub fn hamming_distance(x: &BinaryWord, y: &BinaryWord) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            context: "hamming distance",
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.bits()
        .iter()
        .zip(y.bits())
        .filter(|(a, b)| a != b)
        .count())
}

/// All distinct words obtained from `x` by deleting exactly `t` symbols.
pub fn deletion_sphere(x: &BinaryWord, t: usize) -> Result<BTreeSet<BinaryWord>> {
    if t > x.len() {
        return Err(Error::RadiusTooLarge { t, len: x.len() });
    }
    let mut out = BTreeSet::new();
    let mut scratch = Vec::with_capacity(x.len() - t);
    delete_rec(x.bits(), t, &mut scratch, &mut out);
    Ok(out)
}

fn delete_rec(rest: &[u8], t: usize, acc: &mut Vec<u8>, out: &mut BTreeSet<BinaryWord>) {
    if t == 0 {
        let mut bits = acc.clone();
        bits.extend_from_slice(rest);
        out.insert(BinaryWord::new(bits));
        return;
    }
    if rest.len() < t {
        return;
    }
    // keep the head
    acc.push(rest[0]);
    delete_rec(&rest[1..], t, acc, out);
    acc.pop();
    // delete the head
    delete_rec(&rest[1..], t - 1, acc, out);
}

/// All distinct words of length `|x| + t` containing `x` as a subsequence.
pub fn insertion_sphere(x: &BinaryWord, t: usize) -> BTreeSet<BinaryWord> {
    let mut frontier: BTreeSet<BinaryWord> = BTreeSet::new();
    frontier.insert(x.clone());
    for _ in 0..t {
        let mut next = BTreeSet::new();
        for w in &frontier {
            for pos in 0..=w.len() {
                for bit in 0..=1u8 {
                    next.insert(w.insert(pos, bit));
                }
            }
        }
        frontier = next;
    }
    frontier
}

/// The insdel ball `{ v : |v| = |x|, d_ID(x, v) <= d }`, by exhaustive scan of
/// all words of length `|x|`. `d` must be even (same-length distances are).
pub fn insdel_ball(x: &BinaryWord, d: usize) -> Result<BTreeSet<BinaryWord>> {
    if d % 2 != 0 {
        return Err(Error::OddBallRadius { d });
    }
    if x.len() > MAX_BALL_LEN {
        return Err(Error::SizeCap {
            what: "insdel ball exhaustive scan",
            requested: x.len(),
            limit: MAX_BALL_LEN,
        });
    }
    let mut out = BTreeSet::new();
    for v in BinaryWord::all_of_length(x.len()) {
        if insdel_distance(x, &v) <= d {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Size of the largest insdel ball of radius `d` over all centers of length
/// `len`. Center-dependent, so the maximum is taken explicitly.
pub fn max_ball_size(len: usize, d: usize) -> Result<usize> {
    if len > 14 {
        return Err(Error::SizeCap {
            what: "max ball size double scan",
            requested: len,
            limit: 14,
        });
    }
    // Odd thresholds are equivalent to the next lower even one here.
    let mut best = 0;
    for c in BinaryWord::all_of_length(len) {
        let mut count = 0;
        for v in BinaryWord::all_of_length(len) {
            if insdel_bits(c.bits(), v.bits()) <= d {
                count += 1;
            }
        }
        best = best.max(count);
    }
    Ok(best)
}

/// Checks the concatenation inequality
/// `d(x1,y1) + d(x2,y2) - 2 min(|x1|,|x2|) <= d(x1 x2, y1 y2) <= d(x1,y1) + d(x2,y2)`
/// for parts with `|x1| = |y1|` and `|x2| = |y2|`.
pub fn check_concat_bounds(
    x1: &BinaryWord,
    x2: &BinaryWord,
    y1: &BinaryWord,
    y2: &BinaryWord,
) -> Result<bool> {
    if x1.len() != y1.len() {
        return Err(Error::LengthMismatch {
            context: "concatenation bound, first parts",
            left: x1.len(),
            right: y1.len(),
        });
    }
    if x2.len() != y2.len() {
        return Err(Error::LengthMismatch {
            context: "concatenation bound, second parts",
            left: x2.len(),
            right: y2.len(),
        });
    }
    let d1 = insdel_distance(x1, y1);
    let d2 = insdel_distance(x2, y2);
    let whole = insdel_distance(&x1.concat(x2), &y1.concat(y2));
    let slack = 2 * x1.len().min(x2.len());
    let lower = (d1 + d2).saturating_sub(slack);
    Ok(lower <= whole && whole <= d1 + d2)
}
