//! Explicit encoder constructions: the smod-cycled runs encoders, inner-code
//! driven locally-bounded encodings, and the runs function routed through the
//! locally-bounded pipeline.
//!
//! Constructions are treated as candidates: every emitted encoder is passed
//! through the distance verifier and carries the resulting report. A failing
//! construction is a reportable finding, not a panic.

use crate::error::{Error, Result};
use crate::fcidc::{verify_by_distance, FcidcEncoder, VerificationReport};
use crate::functions::{build_coloring, local_bound_profile, runs_function, TargetFunction};
use crate::matrices::DistanceMatrix;
use crate::metric::insdel_distance;
use crate::search::{gv_greedy_construct, uniform_min_length, IrregularCode, SearchMode};
use crate::word::BinaryWord;

/// An encoder candidate with its verification verdict attached.
#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub encoder: FcidcEncoder,
    pub report: VerificationReport,
}

/// Shifted modulo: `((a - 1) mod b) + 1`, ranging over `{1, ..., b}`.
pub fn smod(a: i64, b: i64) -> Result<i64> {
    if a < 1 || b < 1 {
        return Err(Error::SmodDomain { a, b });
    }
    Ok((a - 1).rem_euclid(b) + 1)
}

fn words(strings: &[&str]) -> Vec<BinaryWord> {
    strings
        .iter()
        .map(|s| s.parse().expect("literal words parse"))
        .collect()
}

/// Inner codeword list for the runs construction at the given budget.
/// t = 1 and t = 2 use the fixed word lists; larger budgets search a
/// (2t+1)-word code of pairwise distance at least 2t, exactly for t = 3 and
/// greedily beyond, and the achieved distances are checked rather than
/// trusted.
pub fn runs_inner_code(t: usize) -> Result<Vec<BinaryWord>> {
    let base = match t {
        0 => return Err(Error::Precondition("runs construction needs t >= 1".into())),
        1 => words(&["00", "10", "01"]),
        2 => words(&["00000", "00011", "01010", "01111", "11000"]),
        _ => {
            let m = 2 * t + 1;
            let d = 2 * t as u64;
            let found = if t == 3 {
                uniform_min_length(m, d, SearchMode::Type1, 10)?
                    .code()
                    .map(|c| c.words.clone())
            } else {
                None
            };
            match found {
                Some(ws) => ws,
                None => {
                    let matrix = DistanceMatrix::uniform(m, d);
                    let (code, _) = gv_greedy_construct(&matrix, None, SearchMode::Type1, 16)?;
                    code.words
                }
            }
        }
    };
    let needed = 2 * t;
    for i in 0..base.len() {
        for j in (i + 1)..base.len() {
            let d = insdel_distance(&base[i], &base[j]);
            if d < needed {
                return Err(Error::VerificationDefect(format!(
                    "inner code pair ({}, {}) has distance {d} < {needed}",
                    base[i], base[j]
                )));
            }
        }
    }
    Ok(base)
}

/// The runs construction `Enc(x) = (x, p_{r(x)})` with the inner words cycled
/// by the shifted modulo of their count. The returned encoder always carries
/// its verification report; the verdict is an output, not an assumption.
pub fn runs_construction(k: usize, t: usize) -> Result<ConstructionResult> {
    if k < 2 {
        return Err(Error::Precondition("runs construction needs k >= 2".into()));
    }
    let base = runs_inner_code(t)?;
    let cycle = base.len() as i64;
    let f = runs_function(k);
    let table: Vec<BinaryWord> = (0..1usize << k)
        .map(|i| {
            let runs = BinaryWord::from_index(i as u64, k).run_count() as i64;
            let idx = smod(runs, cycle).expect("runs >= 1, cycle >= 1");
            base[(idx - 1) as usize].clone()
        })
        .collect();
    let encoder = FcidcEncoder::new(f, t, table)?;
    let report = verify_by_distance(&encoder)?;
    Ok(ConstructionResult { encoder, report })
}

/// Builds the locally-bounded encoder: colors the conflict graph of `f` at
/// radius 2t with as many colors as the code has words, then assigns each
/// message the codeword of its color. Requires pairwise code distance at
/// least `2(t + k)` and code length at least k; the emitted encoder must
/// pass verification, otherwise the defect is returned as an error.
pub fn locally_bounded_encoder(
    f: &TargetFunction,
    t: usize,
    code: &IrregularCode,
) -> Result<ConstructionResult> {
    let k = f.k();
    let lambda = code.words.len();
    if code.length < k {
        return Err(Error::Precondition(format!(
            "inner code length {} is below k = {k}",
            code.length
        )));
    }
    let needed = 2 * (t + k);
    for i in 0..lambda {
        for j in (i + 1)..lambda {
            let d = insdel_distance(&code.words[i], &code.words[j]);
            if d < needed {
                return Err(Error::Precondition(format!(
                    "inner code pair ({}, {}) has distance {d} < {needed}",
                    code.words[i], code.words[j]
                )));
            }
        }
    }
    let coloring = build_coloring(f, 2 * t, lambda)?;
    let table: Vec<BinaryWord> = (0..1usize << k)
        .map(|i| code.words[(coloring.color_of_index(i) - 1) as usize].clone())
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
    Ok(ConstructionResult { encoder, report })
}

/// Two-word inner code `{0^(t+k), 1^(t+k)}` for binary-image functions,
/// giving redundancy exactly t + k.
pub fn two_color_code(t: usize, k: usize) -> IrregularCode {
    let m = t + k;
    IrregularCode::new(vec![BinaryWord::zeros(m), BinaryWord::ones(m)], Some(k))
        .expect("equal lengths by construction")
}

/// Three-word inner code `{(00)^(t+k), (01)^(t+k), (11)^(t+k)}`, pairwise
/// distances 2(t+k), 2(t+k) and 4(t+k), giving redundancy 2(t + k).
pub fn three_color_code(t: usize, k: usize) -> IrregularCode {
    let m = t + k;
    let block = |a: u8, b: u8| {
        let mut bits = Vec::with_capacity(2 * m);
        for _ in 0..m {
            bits.push(a);
            bits.push(b);
        }
        BinaryWord::new(bits)
    };
    IrregularCode::new(vec![block(0, 0), block(0, 1), block(1, 1)], Some(k))
        .expect("equal lengths by construction")
}

/// Deterministic five-word code of length `3m` with pairwise distance at
/// least `2m` (m >= 2): the two constant words, the two half-blocks, and a
/// padded alternating word.
pub fn five_word_family(m: usize) -> Vec<BinaryWord> {
    assert!(m >= 2);
    let r = 3 * m;
    let mut half01 = vec![0u8; m];
    half01.extend(std::iter::repeat(1).take(2 * m));
    let mut half10 = vec![1u8; m];
    half10.extend(std::iter::repeat(0).take(2 * m));
    let alternating: Vec<u8> = (0..r).map(|i| (i % 2) as u8).collect();
    vec![
        BinaryWord::zeros(r),
        BinaryWord::ones(r),
        BinaryWord::new(half01),
        BinaryWord::new(half10),
        BinaryWord::new(alternating),
    ]
}

/// Routes the runs function through the locally-bounded pipeline with
/// `lambda = 4t + 1` colors and a greedily constructed inner code of pairwise
/// distance `2(t + k)`. Falls back to the deterministic five-word family
/// when the greedy search exhausts its cap at t = 1.
pub fn runs_as_locally_bounded(
    k: usize,
    t: usize,
    length_cap: Option<usize>,
) -> Result<ConstructionResult> {
    if k > 10 {
        return Err(Error::SizeCap {
            what: "runs locally-bounded pipeline",
            requested: k,
            limit: 10,
        });
    }
    if !(1..=2).contains(&t) {
        return Err(Error::Precondition(
            "runs locally-bounded pipeline supports t in {1, 2}".into(),
        ));
    }
    let f = runs_function(k);
    let lambda = 4 * t + 1;
    let (bound, witness) = local_bound_profile(&f, 2 * t)?;
    if bound > lambda {
        return Err(Error::VerificationDefect(format!(
            "runs function ball at {witness} has {bound} values, above {lambda}"
        )));
    }
    let m = t + k;
    let cap = length_cap.unwrap_or((3 * m + 2).min(24));
    let matrix = DistanceMatrix::uniform(lambda, 2 * m as u64);
    let inner = match gv_greedy_construct(&matrix, None, SearchMode::Type2 { anchor: m }, cap) {
        Ok((code, _len)) => code,
        Err(_) if lambda == 5 => IrregularCode::new(five_word_family(m), Some(k))?,
        Err(e) => return Err(e),
    };
    locally_bounded_encoder(&f, t, &inner)
}
