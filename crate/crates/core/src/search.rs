//! Exact and greedy searches for irregular insdel-distance codes: deciding
//! whether a codeword set satisfies a requirement matrix, and computing the
//! minimum lengths N1(I) and N2(I; K).

use serde_json::json;

use crate::error::{Error, Result};
use crate::matrices::DistanceMatrix;
use crate::metric::{insdel_bits, insdel_distance, max_ball_size};
use crate::word::BinaryWord;

/// Hard limit on codeword length for exhaustive backtracking search.
pub const MAX_SEARCH_LEN: usize = 20;

/// Hard limit for the greedy constructor, which scans each length once.
pub const MAX_GREEDY_LEN: usize = 24;

/// Search variants: type 1 has no length floor, type 2 requires `r >= K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Type1,
    Type2 { anchor: usize },
}

impl SearchMode {
    fn base_length(&self) -> usize {
        match self {
            SearchMode::Type1 => 0,
            SearchMode::Type2 { anchor } => *anchor,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            SearchMode::Type1 => "type1",
            SearchMode::Type2 { .. } => "type2",
        }
    }

    fn anchor(&self) -> Option<usize> {
        match self {
            SearchMode::Type1 => None,
            SearchMode::Type2 { anchor } => Some(*anchor),
        }
    }
}

/// An ordered codeword list claimed to satisfy a requirement matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrregularCode {
    pub words: Vec<BinaryWord>,
    pub length: usize,
    pub type2_anchor: Option<usize>,
}

impl IrregularCode {
    pub fn new(words: Vec<BinaryWord>, type2_anchor: Option<usize>) -> Result<Self> {
        let length = words.first().map(BinaryWord::len).unwrap_or(0);
        if let Some(w) = words.iter().find(|w| w.len() != length) {
            return Err(Error::WrongWordLength {
                word: w.to_string(),
                expected: length,
                actual: w.len(),
            });
        }
        if let Some(anchor) = type2_anchor {
            if length < anchor {
                return Err(Error::Precondition(format!(
                    "type-2 code length {length} is below the anchor {anchor}"
                )));
            }
        }
        Ok(IrregularCode {
            words,
            length,
            type2_anchor,
        })
    }
}

/// Outcome of checking a codeword assignment against a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Satisfied,
    /// The lexicographically first violating pair and how far it falls short.
    Violated {
        i: usize,
        j: usize,
        required: u64,
        actual: u64,
    },
}

impl VerifyOutcome {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, VerifyOutcome::Satisfied)
    }
}

/// Checks `d(words[i], words[j]) >= I[perm(i)][perm(j)]` for all pairs.
/// `permutation` maps placement positions to matrix rows (identity if absent).
pub fn verify_code(
    words: &[BinaryWord],
    matrix: &DistanceMatrix,
    permutation: Option<&[usize]>,
) -> Result<VerifyOutcome> {
    if words.len() != matrix.order {
        return Err(Error::OrderMismatch {
            words: words.len(),
            order: matrix.order,
        });
    }
    let identity: Vec<usize> = (0..matrix.order).collect();
    let perm = permutation.unwrap_or(&identity);
    if perm.len() != matrix.order {
        return Err(Error::OrderMismatch {
            words: perm.len(),
            order: matrix.order,
        });
    }
    for i in 0..words.len() {
        for j in 0..words.len() {
            if i == j {
                continue;
            }
            let required = matrix.entry(perm[i], perm[j]);
            let actual = insdel_distance(&words[i], &words[j]) as u64;
            if actual < required {
                return Ok(VerifyOutcome::Violated {
                    i,
                    j,
                    required,
                    actual,
                });
            }
        }
    }
    Ok(VerifyOutcome::Satisfied)
}

/// Result of a minimum-length search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinLength {
    Found { length: usize, code: IrregularCode },
    InfeasibleAtCap { cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: MinLength,
    pub explored: u64,
    pub mode_label: &'static str,
    pub anchor: Option<usize>,
    /// Placement-position-to-matrix-row map that realized the minimum.
    pub permutation_used: Vec<usize>,
}

impl SearchResult {
    pub fn min_length(&self) -> Option<usize> {
        match &self.outcome {
            MinLength::Found { length, .. } => Some(*length),
            MinLength::InfeasibleAtCap { .. } => None,
        }
    }

    pub fn code(&self) -> Option<&IrregularCode> {
        match &self.outcome {
            MinLength::Found { code, .. } => Some(code),
            MinLength::InfeasibleAtCap { .. } => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.outcome {
            MinLength::Found { length, code } => json!({
                "min_length": length,
                "words": code.words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "explored": self.explored,
                "mode": self.mode_label,
                "K": self.anchor,
            }),
            MinLength::InfeasibleAtCap { cap } => json!({
                "min_length": "infeasible-at-cap",
                "cap": cap,
                "explored": self.explored,
                "mode": self.mode_label,
                "K": self.anchor,
            }),
        }
    }
}

/// Exact minimum length of an irregular insdel-distance code for `matrix`,
/// by depth-first assignment over all words of each candidate length with
/// forward checking. Lengths are tried in ascending order, so the first
/// feasible length is the minimum and the witness is the lexicographically
/// least (per placement order) code at that length.
///
/// With `try_permutations`, every row ordering is searched and the smallest
/// result returned; reordering a satisfying assignment shows this can never
/// beat the identity ordering, and the flag exists to demonstrate exactly
/// that.
pub fn search_min_length(
    matrix: &DistanceMatrix,
    mode: SearchMode,
    try_permutations: bool,
    length_cap: usize,
) -> Result<SearchResult> {
    if length_cap > MAX_SEARCH_LEN {
        return Err(Error::SizeCap {
            what: "exact search length cap",
            requested: length_cap,
            limit: MAX_SEARCH_LEN,
        });
    }
    if try_permutations && matrix.order > 8 {
        return Err(Error::SizeCap {
            what: "row-permutation search (factorial in the order)",
            requested: matrix.order,
            limit: 8,
        });
    }
    let identity: Vec<usize> = (0..matrix.order).collect();
    let mut explored = 0u64;
    for r in mode.base_length()..=length_cap {
        if try_permutations {
            let mut perms = Vec::new();
            permutations_lex(matrix.order, &mut perms);
            for perm in &perms {
                if let Some(words) = feasible_at_length(matrix, perm, r, &mut explored) {
                    let code = IrregularCode::new(words, mode.anchor())?;
                    return Ok(SearchResult {
                        outcome: MinLength::Found { length: r, code },
                        explored,
                        mode_label: mode.label(),
                        anchor: mode.anchor(),
                        permutation_used: perm.clone(),
                    });
                }
            }
        } else if let Some(words) = feasible_at_length(matrix, &identity, r, &mut explored) {
            let code = IrregularCode::new(words, mode.anchor())?;
            return Ok(SearchResult {
                outcome: MinLength::Found { length: r, code },
                explored,
                mode_label: mode.label(),
                anchor: mode.anchor(),
                permutation_used: identity,
            });
        }
    }
    Ok(SearchResult {
        outcome: MinLength::InfeasibleAtCap { cap: length_cap },
        explored,
        mode_label: mode.label(),
        anchor: mode.anchor(),
        permutation_used: identity,
    })
}

fn permutations_lex(n: usize, out: &mut Vec<Vec<usize>>) {
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| current[j] > current[i])
            .expect("successor exists");
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

fn feasible_at_length(
    matrix: &DistanceMatrix,
    perm: &[usize],
    r: usize,
    explored: &mut u64,
) -> Option<Vec<BinaryWord>> {
    let order = matrix.order;
    if order == 0 {
        return Some(Vec::new());
    }
    // The largest requirement between any pair bounds what length r can do.
    let max_required = matrix.max_entry();
    if (2 * r as u64) < max_required {
        return None;
    }
    let words: Vec<BinaryWord> = BinaryWord::all_of_length(r).collect();
    let mut placed: Vec<usize> = Vec::with_capacity(order);
    if assign_rec(matrix, perm, &words, 0, &mut placed, explored) {
        Some(placed.iter().map(|&w| words[w].clone()).collect())
    } else {
        None
    }
}

fn assign_rec(
    matrix: &DistanceMatrix,
    perm: &[usize],
    words: &[BinaryWord],
    depth: usize,
    placed: &mut Vec<usize>,
    explored: &mut u64,
) -> bool {
    if depth == matrix.order {
        return true;
    }
    'candidates: for (w, word) in words.iter().enumerate() {
        for (i, &p) in placed.iter().enumerate() {
            let required = matrix.entry(perm[i], perm[depth]);
            if required > 0 && (insdel_bits(words[p].bits(), word.bits()) as u64) < required {
                continue 'candidates;
            }
        }
        *explored += 1;
        placed.push(w);
        if assign_rec(matrix, perm, words, depth + 1, placed, explored) {
            return true;
        }
        placed.pop();
    }
    false
}

/// Minimum length for the constant off-diagonal requirement `d` over `m`
/// codewords.
pub fn uniform_min_length(
    m: usize,
    d: u64,
    mode: SearchMode,
    length_cap: usize,
) -> Result<SearchResult> {
    let matrix = DistanceMatrix::uniform(m, d);
    search_min_length(&matrix, mode, false, length_cap)
}

/// Greedy constructive upper bound: for each length, place the first codeword
/// as the zero word and each subsequent one as the lexicographically least
/// word meeting every requirement against the already-placed rows. Returns
/// the code found at the first length where all placements succeed.
pub fn gv_greedy_construct(
    matrix: &DistanceMatrix,
    permutation: Option<&[usize]>,
    mode: SearchMode,
    length_cap: usize,
) -> Result<(IrregularCode, usize)> {
    if length_cap > MAX_GREEDY_LEN {
        return Err(Error::SizeCap {
            what: "greedy construction length cap",
            requested: length_cap,
            limit: MAX_GREEDY_LEN,
        });
    }
    let identity: Vec<usize> = (0..matrix.order).collect();
    let perm = permutation.unwrap_or(&identity);
    if perm.len() != matrix.order {
        return Err(Error::OrderMismatch {
            words: perm.len(),
            order: matrix.order,
        });
    }
    for r in mode.base_length()..=length_cap {
        if let Some(words) = greedy_at_length(matrix, perm, r) {
            // Report codewords in matrix-row order.
            let mut by_row: Vec<BinaryWord> = vec![BinaryWord::empty(); matrix.order];
            for (pos, w) in words.into_iter().enumerate() {
                by_row[perm[pos]] = w;
            }
            let code = IrregularCode::new(by_row, mode.anchor())?;
            return Ok((code, r));
        }
    }
    Err(Error::SizeCap {
        what: "greedy construction (no success within cap)",
        requested: length_cap + 1,
        limit: length_cap,
    })
}

fn greedy_at_length(matrix: &DistanceMatrix, perm: &[usize], r: usize) -> Option<Vec<BinaryWord>> {
    let order = matrix.order;
    if order == 0 {
        return Some(Vec::new());
    }
    let mut placed: Vec<BinaryWord> = vec![BinaryWord::zeros(r)];
    for pos in 1..order {
        let candidate = BinaryWord::all_of_length(r).find(|w| {
            placed.iter().enumerate().all(|(i, p)| {
                let required = matrix.entry(perm[i], perm[pos]);
                required == 0 || insdel_bits(p.bits(), w.bits()) as u64 >= required
            })
        });
        match candidate {
            Some(w) => placed.push(w),
            None => return None,
        }
    }
    Some(placed)
}

/// Numeric Gilbert-Varshamov-style upper bound: the least `r` (at least the
/// type-2 anchor) with `2^r > max_j sum_{i<j} maxBall(r, I[perm(i)][perm(j)] - 1)`,
/// where `maxBall(r, d)` is the largest insdel ball of radius `d` over all
/// centers of length `r`. Ball sizes are center-dependent, so the maximum
/// over centers is used, which keeps the bound valid.
pub fn gv_bound(
    matrix: &DistanceMatrix,
    permutation: Option<&[usize]>,
    mode: SearchMode,
    length_cap: usize,
) -> Result<usize> {
    let identity: Vec<usize> = (0..matrix.order).collect();
    let perm = permutation.unwrap_or(&identity);
    if perm.len() != matrix.order {
        return Err(Error::OrderMismatch {
            words: perm.len(),
            order: matrix.order,
        });
    }
    for r in mode.base_length()..=length_cap {
        if r >= 63 {
            break;
        }
        // Cache ball sizes per distinct radius at this length.
        let mut cache: Vec<Option<u64>> = vec![None; (matrix.max_entry() + 1) as usize];
        let mut worst = 0u64;
        for j in 0..matrix.order {
            let mut sum = 0u64;
            for i in 0..j {
                let required = matrix.entry(perm[i], perm[j]);
                if required == 0 {
                    continue;
                }
                let radius = (required - 1) as usize;
                let size = match cache[required as usize] {
                    Some(s) => s,
                    None => {
                        let s = max_ball_size(r, radius)? as u64;
                        cache[required as usize] = Some(s);
                        s
                    }
                };
                sum += size;
            }
            worst = worst.max(sum);
        }
        if (1u64 << r) > worst {
            return Ok(r);
        }
    }
    Err(Error::SizeCap {
        what: "gv bound (condition not met within cap)",
        requested: length_cap + 1,
        limit: length_cap,
    })
}
