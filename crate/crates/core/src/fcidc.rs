//! Function-correcting encoders: construction from redundancy assignments,
//! the three equivalent verification routes, exact optimal redundancy at tiny
//! scale, and the lower/upper redundancy bracket pipeline.

use std::collections::BTreeSet;

use serde_json::json;

use crate::error::{Error, Result};
use crate::functions::TargetFunction;
use crate::matrices::{function_matrix, message_matrix, EstimateTable, MatrixType};
use crate::metric::{deletion_sphere, insdel_bits};
use crate::rational::Rational;
use crate::search::{
    gv_greedy_construct, search_min_length, verify_code, IrregularCode, SearchMode, VerifyOutcome,
};
use crate::word::BinaryWord;

/// Largest message length for which pairwise verification is attempted.
pub const MAX_VERIFY_K: usize = 12;

/// A systematic encoder `x -> (x, p(x))` with fixed redundancy length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FcidcEncoder {
    function: TargetFunction,
    t: usize,
    redundancy_len: usize,
    table: Vec<BinaryWord>,
}

impl FcidcEncoder {
    /// Builds an encoder from a full redundancy table indexed by message
    /// index. All redundancy words must share one length.
    pub fn new(function: TargetFunction, t: usize, table: Vec<BinaryWord>) -> Result<Self> {
        let expected = 1usize << function.k();
        if table.len() != expected {
            return Err(Error::Precondition(format!(
                "redundancy table has {} entries, expected {expected}",
                table.len()
            )));
        }
        let redundancy_len = table.first().map(BinaryWord::len).unwrap_or(0);
        if let Some(w) = table.iter().find(|w| w.len() != redundancy_len) {
            return Err(Error::WrongWordLength {
                word: w.to_string(),
                expected: redundancy_len,
                actual: w.len(),
            });
        }
        Ok(FcidcEncoder {
            function,
            t,
            redundancy_len,
            table,
        })
    }

    pub fn function(&self) -> &TargetFunction {
        &self.function
    }

    pub fn k(&self) -> usize {
        self.function.k()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn redundancy_len(&self) -> usize {
        self.redundancy_len
    }

    pub fn encoded_len(&self) -> usize {
        self.k() + self.redundancy_len
    }

    pub fn redundancy_of_index(&self, idx: usize) -> &BinaryWord {
        &self.table[idx]
    }

    pub fn encode(&self, x: &BinaryWord) -> Result<BinaryWord> {
        if x.len() != self.k() {
            return Err(Error::WrongWordLength {
                word: x.to_string(),
                expected: self.k(),
                actual: x.len(),
            });
        }
        Ok(x.concat(&self.table[x.to_index() as usize]))
    }

    pub fn encode_index(&self, idx: usize) -> BinaryWord {
        BinaryWord::from_index(idx as u64, self.k()).concat(&self.table[idx])
    }

    /// Encoder table as JSON: `{ "k", "t", "r", "map": [{"x", "p"}, ...] }`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: Vec<serde_json::Value> = (0..self.table.len())
            .map(|i| {
                json!({
                    "x": BinaryWord::from_index(i as u64, self.k()).to_string(),
                    "p": self.table[i].to_string(),
                })
            })
            .collect();
        json!({
            "k": self.k(),
            "t": self.t,
            "r": self.redundancy_len,
            "map": map,
        })
    }

    /// Loads an encoder table back; the target function is supplied by the
    /// caller and must match the table's message length.
    pub fn from_json(value: &serde_json::Value, function: TargetFunction) -> Result<Self> {
        let k = value["k"]
            .as_u64()
            .ok_or_else(|| Error::Json("missing field k".into()))? as usize;
        let t = value["t"]
            .as_u64()
            .ok_or_else(|| Error::Json("missing field t".into()))? as usize;
        let r = value["r"]
            .as_u64()
            .ok_or_else(|| Error::Json("missing field r".into()))? as usize;
        if function.k() != k {
            return Err(Error::Precondition(format!(
                "function has k = {}, encoder table has k = {k}",
                function.k()
            )));
        }
        let map = value["map"]
            .as_array()
            .ok_or_else(|| Error::Json("missing field map".into()))?;
        let mut table: Vec<Option<BinaryWord>> = vec![None; 1usize << k];
        for entry in map {
            let x: BinaryWord = entry["x"]
                .as_str()
                .ok_or_else(|| Error::Json("map entry missing x".into()))?
                .parse()?;
            let p: BinaryWord = entry["p"]
                .as_str()
                .ok_or_else(|| Error::Json("map entry missing p".into()))?
                .parse()?;
            if x.len() != k {
                return Err(Error::WrongWordLength {
                    word: x.to_string(),
                    expected: k,
                    actual: x.len(),
                });
            }
            if p.len() != r {
                return Err(Error::WrongWordLength {
                    word: p.to_string(),
                    expected: r,
                    actual: p.len(),
                });
            }
            if table[x.to_index() as usize].replace(p).is_some() {
                return Err(Error::Json(format!("duplicate map entry for {x}")));
            }
        }
        let table: Vec<BinaryWord> = table
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                p.ok_or_else(|| Error::Json(format!("missing map entry for message index {i}")))
            })
            .collect::<Result<_>>()?;
        FcidcEncoder::new(function, t, table)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMethod {
    Distance,
    DeletionSets,
    InsertionSets,
}

impl VerifyMethod {
    pub fn label(&self) -> &'static str {
        match self {
            VerifyMethod::Distance => "distance",
            VerifyMethod::DeletionSets => "deletion-sets",
            VerifyMethod::InsertionSets => "insertion-sets",
        }
    }
}

/// Evidence attached to a failing pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Encoded distance at most `2t`.
    Distance { actual: usize, budget: usize },
    /// A word reachable from both encodings by at most `t` deletions.
    SharedSubsequence(BinaryWord),
    /// A word reachable from both encodings by at most `t` insertions.
    SharedSupersequence(BinaryWord),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub x: BinaryWord,
    pub y: BinaryWord,
    pub fx: i64,
    pub fy: i64,
    pub evidence: Evidence,
}

impl std::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "messages {} (value {}) and {} (value {}): ",
            self.x, self.fx, self.y, self.fy
        )?;
        match &self.evidence {
            Evidence::Distance { actual, budget } => {
                write!(f, "encoded distance {actual} <= {budget}")
            }
            Evidence::SharedSubsequence(w) => write!(f, "shared subsequence {w}"),
            Evidence::SharedSupersequence(w) => write!(f, "shared supersequence {w}"),
        }
    }
}

/// Outcome of one verification route. A failing report always carries the
/// lexicographically least counterexample pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub method: VerifyMethod,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "verdict": if self.passed() { "pass" } else { "fail" },
            "method": self.method.label(),
            "counterexample": self.counterexample.as_ref().map(|c| c.to_string()),
        })
    }
}

fn guard_k(enc: &FcidcEncoder) -> Result<()> {
    if enc.k() > MAX_VERIFY_K {
        return Err(Error::SizeCap {
            what: "pairwise encoder verification",
            requested: enc.k(),
            limit: MAX_VERIFY_K,
        });
    }
    Ok(())
}

/// Separated message pairs in lexicographic order.
fn separated_pairs(f: &TargetFunction) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = 1usize << f.k();
    (0..n).flat_map(move |i| {
        (i + 1..n)
            .filter_map(move |j| (f.evaluate_index(i) != f.evaluate_index(j)).then_some((i, j)))
    })
}

fn make_counterexample(
    enc: &FcidcEncoder,
    i: usize,
    j: usize,
    evidence: Evidence,
) -> Counterexample {
    Counterexample {
        x: BinaryWord::from_index(i as u64, enc.k()),
        y: BinaryWord::from_index(j as u64, enc.k()),
        fx: enc.function().evaluate_index(i),
        fy: enc.function().evaluate_index(j),
        evidence,
    }
}

/// Checks `d(psi(x), psi(y)) > 2t` for every separated pair.
pub fn verify_by_distance(enc: &FcidcEncoder) -> Result<VerificationReport> {
    guard_k(enc)?;
    let budget = 2 * enc.t();
    let encodings: Vec<BinaryWord> = (0..1usize << enc.k())
        .map(|i| enc.encode_index(i))
        .collect();
    for (i, j) in separated_pairs(enc.function()) {
        let d = insdel_bits(encodings[i].bits(), encodings[j].bits());
        if d <= budget {
            return Ok(VerificationReport {
                verdict: Verdict::Fail,
                method: VerifyMethod::Distance,
                counterexample: Some(make_counterexample(
                    enc,
                    i,
                    j,
                    Evidence::Distance { actual: d, budget },
                )),
            });
        }
    }
    Ok(VerificationReport {
        verdict: Verdict::Pass,
        method: VerifyMethod::Distance,
        counterexample: None,
    })
}

/// Checks `D_t(psi(x)) and D_t(psi(y))` are disjoint for every separated pair.
pub fn verify_by_deletion_sets(enc: &FcidcEncoder, t: usize) -> Result<VerificationReport> {
    guard_k(enc)?;
    if t > enc.encoded_len() {
        return Err(Error::RadiusTooLarge {
            t,
            len: enc.encoded_len(),
        });
    }
    let n = 1usize << enc.k();
    let spheres: Vec<BTreeSet<BinaryWord>> = (0..n)
        .map(|i| deletion_sphere(&enc.encode_index(i), t))
        .collect::<Result<_>>()?;
    for (i, j) in separated_pairs(enc.function()) {
        if let Some(common) = spheres[i].intersection(&spheres[j]).next() {
            return Ok(VerificationReport {
                verdict: Verdict::Fail,
                method: VerifyMethod::DeletionSets,
                counterexample: Some(make_counterexample(
                    enc,
                    i,
                    j,
                    Evidence::SharedSubsequence(common.clone()),
                )),
            });
        }
    }
    Ok(VerificationReport {
        verdict: Verdict::Pass,
        method: VerifyMethod::DeletionSets,
        counterexample: None,
    })
}

/// Checks `I_t(psi(x)) and I_t(psi(y))` are disjoint for every separated
/// pair. Insertion spheres are materialized pair by pair and the scan
/// short-circuits on the first intersection.
pub fn verify_by_insertion_sets(enc: &FcidcEncoder, t: usize) -> Result<VerificationReport> {
    guard_k(enc)?;
    for (i, j) in separated_pairs(enc.function()) {
        let sphere_x = crate::metric::insertion_sphere(&enc.encode_index(i), t);
        if let Some(common) = first_common_supersequence(&enc.encode_index(j), t, &sphere_x) {
            return Ok(VerificationReport {
                verdict: Verdict::Fail,
                method: VerifyMethod::InsertionSets,
                counterexample: Some(make_counterexample(
                    enc,
                    i,
                    j,
                    Evidence::SharedSupersequence(common),
                )),
            });
        }
    }
    Ok(VerificationReport {
        verdict: Verdict::Pass,
        method: VerifyMethod::InsertionSets,
        counterexample: None,
    })
}

/// Streams the insertion sphere of `word` depth-first, returning the first
/// generated member that also lies in `other_sphere`. Words are deduplicated
/// as they appear; the scan stops at the first hit instead of materializing
/// the whole sphere.
fn first_common_supersequence(
    word: &BinaryWord,
    t: usize,
    other_sphere: &BTreeSet<BinaryWord>,
) -> Option<BinaryWord> {
    // Every occurrence of an intermediate word sits at the same depth
    // (depth equals the length delta), so memoizing by word is sound.
    fn walk(
        w: &BinaryWord,
        remaining: usize,
        other: &BTreeSet<BinaryWord>,
        seen: &mut BTreeSet<BinaryWord>,
    ) -> Option<BinaryWord> {
        if remaining == 0 {
            return other.contains(w).then(|| w.clone());
        }
        for pos in 0..=w.len() {
            for bit in 0..=1u8 {
                let next = w.insert(pos, bit);
                if seen.insert(next.clone()) {
                    if let Some(hit) = walk(&next, remaining - 1, other, seen) {
                        return Some(hit);
                    }
                }
            }
        }
        None
    }
    if t == 0 {
        return other_sphere.contains(word).then(|| word.clone());
    }
    let mut seen = BTreeSet::new();
    walk(word, t, other_sphere, &mut seen)
}

/// Result of the exhaustive redundancy oracle.
#[derive(Debug, Clone)]
pub enum OracleOutcome {
    Found { r: usize, encoder: FcidcEncoder },
    ExceededCap { cap: usize },
}

impl OracleOutcome {
    pub fn redundancy(&self) -> Option<usize> {
        match self {
            OracleOutcome::Found { r, .. } => Some(*r),
            OracleOutcome::ExceededCap { .. } => None,
        }
    }
}

/// Ground-truth optimal redundancy by exhaustive search over redundancy maps,
/// ascending in r. Only feasible at tiny scale: k <= 3 and r_cap <= 4.
pub fn optimal_redundancy_exact(
    f: &TargetFunction,
    t: usize,
    r_cap: usize,
) -> Result<OracleOutcome> {
    if f.k() > 3 {
        return Err(Error::SizeCap {
            what: "exact redundancy oracle (k)",
            requested: f.k(),
            limit: 3,
        });
    }
    if r_cap > 4 {
        return Err(Error::SizeCap {
            what: "exact redundancy oracle (r cap)",
            requested: r_cap,
            limit: 4,
        });
    }
    let n = 1usize << f.k();
    let messages: Vec<BinaryWord> = BinaryWord::all_of_length(f.k()).collect();
    let labels: Vec<i64> = (0..n).map(|i| f.evaluate_index(i)).collect();
    for r in 0..=r_cap {
        let candidates: Vec<BinaryWord> = BinaryWord::all_of_length(r).collect();
        let mut assigned: Vec<usize> = Vec::with_capacity(n);
        let mut encodings: Vec<BinaryWord> = Vec::with_capacity(n);
        if assign_redundancy(t, &messages, &labels, &candidates, &mut assigned, &mut encodings) {
            let table: Vec<BinaryWord> = assigned.iter().map(|&c| candidates[c].clone()).collect();
            let encoder = FcidcEncoder::new(f.clone(), t, table)?;
            debug_assert!(verify_by_distance(&encoder)?.passed());
            return Ok(OracleOutcome::Found { r, encoder });
        }
    }
    Ok(OracleOutcome::ExceededCap { cap: r_cap })
}

fn assign_redundancy(
    t: usize,
    messages: &[BinaryWord],
    labels: &[i64],
    candidates: &[BinaryWord],
    assigned: &mut Vec<usize>,
    encodings: &mut Vec<BinaryWord>,
) -> bool {
    let depth = assigned.len();
    if depth == messages.len() {
        return true;
    }
    let budget = 2 * t;
    'cands: for (c, p) in candidates.iter().enumerate() {
        let enc = messages[depth].concat(p);
        for (i, prev) in encodings.iter().enumerate() {
            if labels[i] != labels[depth] && insdel_bits(prev.bits(), enc.bits()) <= budget {
                continue 'cands;
            }
        }
        assigned.push(c);
        encodings.push(enc);
        if assign_redundancy(t, messages, labels, candidates, assigned, encodings) {
            return true;
        }
        assigned.pop();
        encodings.pop();
    }
    false
}

/// A redundancy bracket with the method used on each side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedundancyBracket {
    pub lower: u64,
    pub upper: u64,
    pub lower_method: &'static str,
    pub upper_method: &'static str,
}

impl RedundancyBracket {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "lower": self.lower,
            "upper": self.upper,
            "lower_method": self.lower_method,
            "upper_method": self.upper_method,
        })
    }
}

/// Brackets the optimal redundancy: the lower side is the exact type-1
/// minimum length over the given representatives (all messages when k <= 3
/// and none are given), falling back to the Hamming-derived Plotkin bound
/// for orders beyond exact search; the upper side is the exact type-2
/// minimum over the function-distance matrix with anchor k, falling back to
/// the greedy constructive length for large image sets. Fallbacks preserve
/// the bound directions.
pub fn redundancy_bracket(
    f: &TargetFunction,
    t: usize,
    representatives: Option<&[BinaryWord]>,
    estimates: Option<&EstimateTable>,
    length_cap: usize,
) -> Result<RedundancyBracket> {
    const EXACT_ORDER_LIMIT: usize = 8;

    let owned_messages: Vec<BinaryWord>;
    let xs: &[BinaryWord] = match representatives {
        Some(r) => r,
        None => {
            if f.k() > 3 {
                return Err(Error::Precondition(
                    "representatives are required for k > 3 (the full message set is too large)"
                        .into(),
                ));
            }
            owned_messages = BinaryWord::all_of_length(f.k()).collect();
            &owned_messages
        }
    };

    let type1 = message_matrix(f, t, xs, MatrixType::Type1)?;
    let (lower, lower_method) = if type1.order <= EXACT_ORDER_LIMIT {
        let (_, greedy_len) = gv_greedy_construct(&type1, None, SearchMode::Type1, length_cap)?;
        let exact = search_min_length(&type1, SearchMode::Type1, false, greedy_len)?
            .min_length()
            .expect("greedy length witnesses feasibility");
        (exact as u64, "exact-n1")
    } else {
        let hp = crate::bounds::hamming_plotkin_lower(&type1);
        (hp.ceil().max(0) as u64, "hamming-plotkin-lower")
    };

    let type2 = function_matrix(f, t, MatrixType::Type2, estimates)?;
    let anchor = f.k();
    let (upper, upper_method) = if type2.order <= EXACT_ORDER_LIMIT {
        let (_, greedy_len) =
            gv_greedy_construct(&type2, None, SearchMode::Type2 { anchor }, length_cap)?;
        let exact = search_min_length(&type2, SearchMode::Type2 { anchor }, false, greedy_len)?
            .min_length()
            .expect("greedy length witnesses feasibility");
        (exact as u64, "exact-n2")
    } else {
        let (_, greedy_len) =
            gv_greedy_construct(&type2, None, SearchMode::Type2 { anchor }, length_cap)?;
        (greedy_len as u64, "greedy-gv")
    };

    Ok(RedundancyBracket {
        lower,
        upper,
        lower_method,
        upper_method,
    })
}

/// An encoder bundled with the verification report that certified it.
#[derive(Debug, Clone)]
pub struct VerifiedEncoder {
    pub encoder: FcidcEncoder,
    pub report: VerificationReport,
}

/// Builds the systematic encoder whose redundancy for message `x` is the
/// codeword indexed by the image position of `f(x)`. The code must satisfy
/// the type-2 function-distance matrix with anchor k; the returned encoder
/// has passed the distance verifier.
pub fn build_encoder_from_code(
    f: &TargetFunction,
    t: usize,
    code: &IrregularCode,
) -> Result<VerifiedEncoder> {
    if code.words.len() != f.expressiveness() {
        return Err(Error::OrderMismatch {
            words: code.words.len(),
            order: f.expressiveness(),
        });
    }
    if code.length < f.k() {
        return Err(Error::Precondition(format!(
            "code length {} is below the anchor k = {}",
            code.length,
            f.k()
        )));
    }
    let type2 = function_matrix(f, t, MatrixType::Type2, None)?;
    match verify_code(&code.words, &type2, None)? {
        VerifyOutcome::Satisfied => {}
        VerifyOutcome::Violated {
            i,
            j,
            required,
            actual,
        } => {
            return Err(Error::Precondition(format!(
                "code violates the type-2 function matrix at pair ({i}, {j}): distance {actual} < required {required}"
            )));
        }
    }
    let n = 1usize << f.k();
    let table: Vec<BinaryWord> = (0..n)
        .map(|i| {
            let pos = f.image_position(f.evaluate_index(i)).expect("own label");
            code.words[pos].clone()
        })
        .collect();
    let encoder = FcidcEncoder::new(f.clone(), t, table)?;
    let report = verify_by_distance(&encoder)?;
    if !report.passed() {
        let detail = report
            .counterexample
            .as_ref()
            .map(ToString::to_string)
            .unwrap_or_default();
        return Err(Error::VerificationDefect(detail));
    }
    Ok(VerifiedEncoder { encoder, report })
}

/// Floor on the optimal redundancy of any non-constant function: there is
/// always a separated pair at insdel distance 2, and two redundancy words at
/// distance 2t are then required, so `r >= t`.
pub fn nonconstant_floor(t: usize) -> Rational {
    Rational::integer(t as i128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{max_run_function, runs_function, vt_syndrome, TargetFunction};
    use crate::metric::insdel_distance;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn example_function() -> TargetFunction {
        TargetFunction::from_values("example", 2, vec![1, 0, 0, 1]).unwrap()
    }

    fn encoder_from_strings(f: TargetFunction, t: usize, ps: &[&str]) -> FcidcEncoder {
        let table = ps.iter().map(|s| w(s)).collect();
        FcidcEncoder::new(f, t, table).unwrap()
    }

    #[test]
    fn constant_function_passes_with_zero_redundancy() {
        let f = TargetFunction::from_values("const", 2, vec![9; 4]).unwrap();
        let enc = FcidcEncoder::new(f, 3, vec![BinaryWord::empty(); 4]).unwrap();
        assert!(verify_by_distance(&enc).unwrap().passed());
        assert!(verify_by_deletion_sets(&enc, 2).unwrap().passed());
        assert!(verify_by_insertion_sets(&enc, 2).unwrap().passed());
    }

    #[test]
    fn worked_example_length_one_code_fails_verification() {
        // The type-1 witness code (0, 1, 1, 0) meets the necessary lower
        // bound but is not a valid t = 1 encoder; the first violating pair
        // is (01, 11) with encoded distance 2.
        let enc = encoder_from_strings(example_function(), 1, &["0", "1", "1", "0"]);
        let report = verify_by_distance(&enc).unwrap();
        assert!(!report.passed());
        let ce = report.counterexample.unwrap();
        assert_eq!(ce.x, w("01"));
        assert_eq!(ce.y, w("11"));
        assert_eq!(
            ce.evidence,
            Evidence::Distance {
                actual: 2,
                budget: 2
            }
        );

        // The other two routes agree and carry matching evidence kinds.
        let del = verify_by_deletion_sets(&enc, 1).unwrap();
        assert!(!del.passed());
        let ins = verify_by_insertion_sets(&enc, 1).unwrap();
        assert!(!ins.passed());
    }

    #[test]
    fn identity_redundancy_at_t_zero_passes() {
        let f = TargetFunction::from_values("identity", 2, vec![0, 1, 2, 3]).unwrap();
        let table: Vec<BinaryWord> = BinaryWord::all_of_length(2).collect();
        let enc = FcidcEncoder::new(f, 0, table).unwrap();
        assert!(verify_by_distance(&enc).unwrap().passed());
    }

    #[test]
    fn degenerate_full_deletion_radius_fails() {
        let f = example_function();
        let enc = encoder_from_strings(f, 1, &["00", "11", "11", "00"]);
        let report = verify_by_deletion_sets(&enc, enc.encoded_len()).unwrap();
        assert!(!report.passed());
        match report.counterexample.unwrap().evidence {
            Evidence::SharedSubsequence(word) => assert!(word.is_empty()),
            other => panic!("expected a shared subsequence, got {other:?}"),
        }
        assert!(matches!(
            verify_by_deletion_sets(&enc, enc.encoded_len() + 1),
            Err(Error::RadiusTooLarge { .. })
        ));
    }

    #[test]
    fn three_verifiers_agree_on_small_grid() {
        let functions = vec![example_function(), vt_syndrome(2), runs_function(3)];
        for f in functions {
            for t in [1usize, 2] {
                for r in 0..=2usize {
                    for seed in 0..8u64 {
                        let table: Vec<BinaryWord> = (0..1usize << f.k())
                            .map(|i| {
                                let v = seed
                                    .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                                    .wrapping_add(i as u64 * 0x85eb_ca6b)
                                    >> 7;
                                BinaryWord::from_index(v & ((1 << r) - 1).max(0), r)
                            })
                            .collect();
                        let enc = FcidcEncoder::new(f.clone(), t, table).unwrap();
                        let a = verify_by_distance(&enc).unwrap().passed();
                        let b = verify_by_deletion_sets(&enc, t).unwrap().passed();
                        let c = verify_by_insertion_sets(&enc, t).unwrap().passed();
                        assert_eq!(a, b, "{} t={t} r={r} seed={seed}", f.name());
                        assert_eq!(a, c, "{} t={t} r={r} seed={seed}", f.name());
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_constant_is_zero() {
        let f = TargetFunction::from_values("const", 2, vec![4; 4]).unwrap();
        let outcome = optimal_redundancy_exact(&f, 1, 2).unwrap();
        assert_eq!(outcome.redundancy(), Some(0));
    }

    #[test]
    fn oracle_worked_example_is_two() {
        let f = example_function();
        let outcome = optimal_redundancy_exact(&f, 1, 4).unwrap();
        let r = outcome.redundancy().unwrap();
        assert_eq!(r, 2);
        assert!((1..=3).contains(&r));
        if let OracleOutcome::Found { encoder, .. } = outcome {
            assert!(verify_by_distance(&encoder).unwrap().passed());
        }
    }

    #[test]
    fn oracle_binary_function_needs_at_least_t() {
        // E = 2 with adjacent messages mapped apart: r >= t = 1.
        let f = TargetFunction::from_values("first-bit", 1, vec![0, 1]).unwrap();
        let outcome = optimal_redundancy_exact(&f, 1, 4).unwrap();
        assert_eq!(outcome.redundancy(), Some(1));
    }

    #[test]
    fn oracle_monotone_in_t() {
        let f = TargetFunction::from_values("first-bit", 1, vec![0, 1]).unwrap();
        let r1 = optimal_redundancy_exact(&f, 1, 4)
            .unwrap()
            .redundancy()
            .unwrap();
        let r2 = optimal_redundancy_exact(&f, 2, 4)
            .unwrap()
            .redundancy()
            .unwrap();
        assert!(r2 >= r1);
        assert_eq!((r1, r2), (1, 2));

        // Across the catalog at k <= 2: a larger budget never needs less
        // redundancy. A capped t = 2 search still confirms monotonicity as
        // long as the t = 1 value is within the cap.
        for k in 1..=2usize {
            for f in [vt_syndrome(k), runs_function(k), max_run_function(k)] {
                let r1 = optimal_redundancy_exact(&f, 1, 4)
                    .unwrap()
                    .redundancy()
                    .expect("t = 1 feasible within cap");
                match optimal_redundancy_exact(&f, 2, 4).unwrap() {
                    OracleOutcome::Found { r: r2, .. } => {
                        assert!(r2 >= r1, "{} k={k}: r(2)={r2} < r(1)={r1}", f.name())
                    }
                    OracleOutcome::ExceededCap { cap } => {
                        assert!(r1 <= cap, "{} k={k}", f.name())
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_enforces_size_guards() {
        let f = runs_function(4);
        assert!(matches!(
            optimal_redundancy_exact(&f, 1, 3),
            Err(Error::SizeCap { .. })
        ));
        let g = runs_function(2);
        assert!(matches!(
            optimal_redundancy_exact(&g, 1, 5),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn bracket_worked_example() {
        let f = example_function();
        let bracket = redundancy_bracket(&f, 1, None, None, 12).unwrap();
        assert_eq!(bracket.lower, 1);
        assert_eq!(bracket.upper, 3);
        assert_eq!(bracket.lower_method, "exact-n1");
        assert_eq!(bracket.upper_method, "exact-n2");
    }

    #[test]
    fn bracket_constant_function() {
        let f = TargetFunction::from_values("const", 3, vec![2; 8]).unwrap();
        let bracket = redundancy_bracket(&f, 1, None, None, 12).unwrap();
        assert_eq!(bracket.lower, 0);
        assert_eq!(bracket.upper, 3);
    }

    #[test]
    fn bracket_contains_oracle_value() {
        for f in [example_function(), vt_syndrome(2), runs_function(3)] {
            let bracket = redundancy_bracket(&f, 1, None, None, 12).unwrap();
            let exact = optimal_redundancy_exact(&f, 1, 4)
                .unwrap()
                .redundancy()
                .expect("oracle feasible at cap 4") as u64;
            assert!(
                bracket.lower <= exact && exact <= bracket.upper,
                "{}: {exact} outside [{}, {}]",
                f.name(),
                bracket.lower,
                bracket.upper
            );
        }
    }

    #[test]
    fn vt_pipeline_encoder_from_published_code() {
        let f = vt_syndrome(2);
        let code =
            IrregularCode::new(vec![w("000000"), w("000111"), w("110100")], Some(2)).unwrap();
        for i in 0..code.words.len() {
            for j in (i + 1)..code.words.len() {
                assert_eq!(insdel_distance(&code.words[i], &code.words[j]), 6);
            }
        }
        let verified = build_encoder_from_code(&f, 1, &code).unwrap();
        assert!(verified.report.passed());
        assert_eq!(verified.encoder.redundancy_len(), 6);
        assert!(verify_by_deletion_sets(&verified.encoder, 1)
            .unwrap()
            .passed());
        assert!(verify_by_insertion_sets(&verified.encoder, 1)
            .unwrap()
            .passed());
    }

    #[test]
    fn encoder_from_short_code_is_rejected() {
        let f = vt_syndrome(2);
        let code = IrregularCode::new(vec![w("00"), w("11"), w("01")], None).unwrap();
        assert!(build_encoder_from_code(&f, 1, &code).is_err());
    }

    #[test]
    fn encoder_from_code_constant_function() {
        // A constant function has no requirements beyond the anchor: one
        // shared redundancy word of length k suffices.
        let f = TargetFunction::from_values("const", 3, vec![5; 8]).unwrap();
        let code = IrregularCode::new(vec![w("010")], Some(3)).unwrap();
        let verified = build_encoder_from_code(&f, 2, &code).unwrap();
        assert_eq!(verified.encoder.redundancy_len(), 3);
        assert!(verified.report.passed());
        for i in 0..8usize {
            assert_eq!(verified.encoder.redundancy_of_index(i), &w("010"));
        }
    }

    #[test]
    fn encoder_from_greedy_code_for_runs_function() {
        // Greedy-construct a code over the type-2 function matrix of the
        // runs function, then build and verify the induced encoder.
        let f = runs_function(4);
        let type2 = function_matrix(&f, 1, MatrixType::Type2, None).unwrap();
        let (code, len) =
            gv_greedy_construct(&type2, None, SearchMode::Type2 { anchor: 4 }, 16).unwrap();
        assert!(len >= 4);
        let verified = build_encoder_from_code(&f, 1, &code).unwrap();
        assert!(verified.report.passed());
        assert!(verify_by_deletion_sets(&verified.encoder, 1).unwrap().passed());
    }

    #[test]
    fn encoder_json_round_trip() {
        let f = example_function();
        let enc = encoder_from_strings(f.clone(), 1, &["00", "11", "11", "00"]);
        let json = enc.to_json();
        assert_eq!(json["k"], 2);
        assert_eq!(json["r"], 2);
        let back = FcidcEncoder::from_json(&json, f).unwrap();
        assert_eq!(back, enc);
    }
}
