//! The catalog of target functions on k-bit messages, locally-bounded
//! analysis, and the conflict-graph coloring used by the locally-bounded
//! encoder constructions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{insdel_bits, insdel_distance};
use crate::word::BinaryWord;

/// Largest message length for which evaluation tables are materialized.
pub const MAX_TABLE_K: usize = 20;

/// One value in a function's image: an integer label with an optional name.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ImageValue {
    pub label: i64,
    pub name: Option<String>,
}

impl ImageValue {
    pub fn new(label: i64) -> Self {
        ImageValue { label, name: None }
    }
}

/// A total map from all k-bit words to a finite image, stored as an explicit
/// evaluation table indexed by word index. The image is computed by full
/// enumeration at construction, so it contains exactly the attained values in
/// ascending label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetFunction {
    k: usize,
    name: String,
    values: Vec<i64>,
    image: Vec<ImageValue>,
}

impl TargetFunction {
    /// Builds a function from per-word labels. `values[i]` is the label of
    /// the word with index `i` (see [`BinaryWord::from_index`]).
    pub fn from_values(name: impl Into<String>, k: usize, values: Vec<i64>) -> Result<Self> {
        if k > MAX_TABLE_K {
            return Err(Error::SizeCap {
                what: "function evaluation table",
                requested: k,
                limit: MAX_TABLE_K,
            });
        }
        if values.len() != 1usize << k {
            return Err(Error::BadFunctionTable {
                reason: format!("expected {} entries, got {}", 1usize << k, values.len()),
            });
        }
        let labels: BTreeSet<i64> = values.iter().copied().collect();
        let image = labels.into_iter().map(ImageValue::new).collect();
        Ok(TargetFunction {
            k,
            name: name.into(),
            values,
            image,
        })
    }

    /// Parses the custom table format: one line per word, `bits<TAB>label`,
    /// covering all `2^k` words exactly once.
    pub fn from_table_text(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut entries: Vec<(BinaryWord, i64)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (bits, label) = line
                .split_once('\t')
                .ok_or_else(|| Error::BadFunctionTable {
                    reason: format!("line {}: expected bits<TAB>label", lineno + 1),
                })?;
            let word: BinaryWord = bits.trim().parse()?;
            let label: i64 = label.trim().parse().map_err(|_| Error::BadFunctionTable {
                reason: format!("line {}: label {:?} is not an integer", lineno + 1, label),
            })?;
            entries.push((word, label));
        }
        if entries.is_empty() {
            return Err(Error::BadFunctionTable {
                reason: "empty table".into(),
            });
        }
        let k = entries[0].0.len();
        if entries.iter().any(|(w, _)| w.len() != k) {
            return Err(Error::BadFunctionTable {
                reason: "all words must have the same length".into(),
            });
        }
        let mut values = vec![None; 1usize << k];
        for (w, label) in entries {
            let idx = w.to_index() as usize;
            if values[idx].replace(label).is_some() {
                return Err(Error::BadFunctionTable {
                    reason: format!("duplicate entry for word {w}"),
                });
            }
        }
        let values: Vec<i64> = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::BadFunctionTable {
                    reason: format!(
                        "missing entry for word {}",
                        BinaryWord::from_index(i as u64, k)
                    ),
                })
            })
            .collect::<Result<_>>()?;
        TargetFunction::from_values(name, k, values)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Expressiveness `E = |Im(f)|`.
    pub fn expressiveness(&self) -> usize {
        self.image.len()
    }

    /// Image values in ascending label order.
    pub fn image(&self) -> &[ImageValue] {
        &self.image
    }

    pub fn is_constant(&self) -> bool {
        self.image.len() == 1
    }

    pub fn evaluate(&self, x: &BinaryWord) -> Result<i64> {
        if x.len() != self.k {
            return Err(Error::WrongWordLength {
                word: x.to_string(),
                expected: self.k,
                actual: x.len(),
            });
        }
        Ok(self.values[x.to_index() as usize])
    }

    pub fn evaluate_index(&self, idx: usize) -> i64 {
        self.values[idx]
    }

    /// Position of a label within the ascending image ordering.
    pub fn image_position(&self, label: i64) -> Result<usize> {
        self.image
            .binary_search_by_key(&label, |v| v.label)
            .map_err(|_| Error::UnknownImageValue { label })
    }

    /// Words mapping to `label`, in lexicographic order.
    pub fn preimage(&self, label: i64) -> Vec<BinaryWord> {
        (0..self.values.len())
            .filter(|&i| self.values[i] == label)
            .map(|i| BinaryWord::from_index(i as u64, self.k))
            .collect()
    }
}

/// VT syndrome function: `f(u) = sum(j * u_j) mod (k+1)` over 1-based
/// positions, with image {0, ..., k}.
pub fn vt_syndrome(k: usize) -> TargetFunction {
    assert!(k >= 1);
    let values = (0..1u64 << k)
        .map(|i| {
            let w = BinaryWord::from_index(i, k);
            let s: u64 = w
                .bits()
                .iter()
                .enumerate()
                .map(|(j, &b)| (j as u64 + 1) * b as u64)
                .sum();
            (s % (k as u64 + 1)) as i64
        })
        .collect();
    TargetFunction::from_values(format!("vt:{k}"), k, values).expect("k validated above")
}

/// Number-of-runs function `f(x) = r(x)` with image {1, ..., k}.
pub fn runs_function(k: usize) -> TargetFunction {
    assert!(k >= 1);
    let values = (0..1u64 << k)
        .map(|i| BinaryWord::from_index(i, k).run_count() as i64)
        .collect();
    TargetFunction::from_values(format!("runs:{k}"), k, values).expect("k validated above")
}

/// Maximum-run-length function `f(x) = r_max(x)` with image {1, ..., k}.
pub fn max_run_function(k: usize) -> TargetFunction {
    assert!(k >= 1);
    let values = (0..1u64 << k)
        .map(|i| BinaryWord::from_index(i, k).max_run() as i64)
        .collect();
    TargetFunction::from_values(format!("max-run:{k}"), k, values).expect("k validated above")
}

/// Image of the insdel ball of radius `rho` around `u` under `f`.
pub fn function_ball(f: &TargetFunction, u: &BinaryWord, rho: usize) -> Result<BTreeSet<i64>> {
    if u.len() != f.k() {
        return Err(Error::WrongWordLength {
            word: u.to_string(),
            expected: f.k(),
            actual: u.len(),
        });
    }
    let ball = crate::metric::insdel_ball(u, rho)?;
    Ok(ball
        .iter()
        .map(|v| f.evaluate_index(v.to_index() as usize))
        .collect())
}

/// Maximum function-ball size over all centers, with the lexicographically
/// smallest maximizing witness. `f` is locally `(rho, lambda)` iff the
/// returned maximum is at most `lambda`.
pub fn local_bound_profile(f: &TargetFunction, rho: usize) -> Result<(usize, BinaryWord)> {
    if rho % 2 != 0 {
        return Err(Error::OddBallRadius { d: rho });
    }
    let k = f.k();
    let n = 1usize << k;
    let radius = rho / 2;
    // One pass over ordered pairs; ball membership via LCS threshold.
    let mut ball_values: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); n];
    let words: Vec<BinaryWord> = BinaryWord::all_of_length(k).collect();
    for i in 0..n {
        ball_values[i].insert(f.evaluate_index(i));
        for j in (i + 1)..n {
            if insdel_bits(words[i].bits(), words[j].bits()) <= 2 * radius {
                let (fi, fj) = (f.evaluate_index(i), f.evaluate_index(j));
                ball_values[i].insert(fj);
                ball_values[j].insert(fi);
            }
        }
    }
    let mut best = 0usize;
    let mut witness = 0usize;
    for (i, vals) in ball_values.iter().enumerate() {
        if vals.len() > best {
            best = vals.len();
            witness = i;
        }
    }
    Ok((best, words[witness].clone()))
}

/// A coloring of all k-bit words with colors in {1, ..., lambda} such that
/// conflicting words (different f-value, insdel distance at most rho) get
/// different colors.
#[derive(Debug, Clone)]
pub struct Coloring {
    pub rho: usize,
    pub lambda: usize,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn color_of(&self, x: &BinaryWord) -> u32 {
        self.colors[x.to_index() as usize]
    }

    pub fn color_of_index(&self, idx: usize) -> u32 {
        self.colors[idx]
    }

    pub fn colors_used(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0) as usize
    }
}

/// Checks the coloring predicate for every pair of words.
pub fn verify_coloring(f: &TargetFunction, coloring: &Coloring) -> bool {
    let k = f.k();
    let words: Vec<BinaryWord> = BinaryWord::all_of_length(k).collect();
    for i in 0..words.len() {
        for j in (i + 1)..words.len() {
            if f.evaluate_index(i) != f.evaluate_index(j)
                && insdel_distance(&words[i], &words[j]) <= coloring.rho
                && coloring.colors[i] == coloring.colors[j]
            {
                return false;
            }
        }
    }
    coloring
        .colors
        .iter()
        .all(|&c| c >= 1 && c as usize <= coloring.lambda)
}

/// Builds a conflict-graph coloring with at most `lambda` colors.
///
/// Strategy: greedy in degeneracy order with lexicographic tie-break; if the
/// greedy pass exceeds `lambda`, fall back to exact coloring of the quotient
/// graph on image values, then to backtracking on the word graph. A proven
/// failure is reported as an error rather than silently ignored.
pub fn build_coloring(f: &TargetFunction, rho: usize, lambda: usize) -> Result<Coloring> {
    let (bound, _witness) = local_bound_profile(f, rho)?;
    if bound > lambda {
        return Err(Error::Precondition(format!(
            "function is not locally ({rho}, {lambda}): maximum function-ball size is {bound}"
        )));
    }
    let k = f.k();
    let n = 1usize << k;
    let words: Vec<BinaryWord> = BinaryWord::all_of_length(k).collect();

    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if f.evaluate_index(i) != f.evaluate_index(j)
                && insdel_bits(words[i].bits(), words[j].bits()) <= rho
            {
                adj[i].push(j as u32);
                adj[j].push(i as u32);
            }
        }
    }

    if let Some(colors) = greedy_degeneracy_coloring(&adj, lambda) {
        return Ok(Coloring {
            rho,
            lambda,
            colors,
        });
    }
    if let Some(colors) = quotient_coloring(f, &adj, lambda) {
        return Ok(Coloring {
            rho,
            lambda,
            colors,
        });
    }
    if let Some(colors) = backtracking_coloring(&adj, lambda) {
        return Ok(Coloring {
            rho,
            lambda,
            colors,
        });
    }
    Err(Error::ColoringInfeasible { lambda })
}

/// Greedy coloring in degeneracy order (smallest remaining degree removed
/// first, index tie-break; colored in reverse removal order).
fn greedy_degeneracy_coloring(adj: &[Vec<u32>], lambda: usize) -> Option<Vec<u32>> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !removed[u as usize] {
                degree[u as usize] -= 1;
            }
        }
    }
    let mut colors = vec![0u32; n];
    for &v in order.iter().rev() {
        let forbidden: BTreeSet<u32> = adj[v]
            .iter()
            .map(|&u| colors[u as usize])
            .filter(|&c| c != 0)
            .collect();
        let color = (1..)
            .find(|c| !forbidden.contains(c))
            .expect("colors unbounded");
        if color as usize > lambda {
            return None;
        }
        colors[v] = color;
    }
    Some(colors)
}

/// Colors the quotient graph whose vertices are image values and whose edges
/// join values attained by some conflicting pair. A proper coloring of the
/// quotient induces one on words via f.
fn quotient_coloring(f: &TargetFunction, adj: &[Vec<u32>], lambda: usize) -> Option<Vec<u32>> {
    let e = f.expressiveness();
    let mut qadj = vec![vec![false; e]; e];
    for (i, neighbors) in adj.iter().enumerate() {
        let pi = f.image_position(f.evaluate_index(i)).expect("own label");
        for &j in neighbors {
            let pj = f
                .image_position(f.evaluate_index(j as usize))
                .expect("own label");
            qadj[pi][pj] = true;
            qadj[pj][pi] = true;
        }
    }
    let mut qcolors = vec![0u32; e];
    if !color_quotient_rec(&qadj, lambda, 0, &mut qcolors) {
        return None;
    }
    let colors = (0..adj.len())
        .map(|i| qcolors[f.image_position(f.evaluate_index(i)).expect("own label")])
        .collect();
    Some(colors)
}

fn color_quotient_rec(qadj: &[Vec<bool>], lambda: usize, v: usize, colors: &mut Vec<u32>) -> bool {
    if v == qadj.len() {
        return true;
    }
    for c in 1..=lambda as u32 {
        if (0..v).all(|u| !qadj[v][u] || colors[u] != c) {
            colors[v] = c;
            if color_quotient_rec(qadj, lambda, v + 1, colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

/// Exhaustive backtracking on the word graph, vertices in degeneracy order.
fn backtracking_coloring(adj: &[Vec<u32>], lambda: usize) -> Option<Vec<u32>> {
    let n = adj.len();
    let mut colors = vec![0u32; n];
    if backtrack_rec(adj, lambda, 0, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

fn backtrack_rec(adj: &[Vec<u32>], lambda: usize, v: usize, colors: &mut Vec<u32>) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 1..=lambda as u32 {
        if adj[v].iter().all(|&u| colors[u as usize] != c) {
            colors[v] = c;
            if backtrack_rec(adj, lambda, v + 1, colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn vt_syndrome_small_values() {
        let f = vt_syndrome(2);
        assert_eq!(f.evaluate(&w("00")).unwrap(), 0);
        assert_eq!(f.evaluate(&w("10")).unwrap(), 1);
        assert_eq!(f.evaluate(&w("01")).unwrap(), 2);
        assert_eq!(f.evaluate(&w("11")).unwrap(), 0);
        assert_eq!(f.expressiveness(), 3);
        for k in 1..=8 {
            assert_eq!(vt_syndrome(k).evaluate(&BinaryWord::zeros(k)).unwrap(), 0);
        }
    }

    #[test]
    fn vt_image_is_all_residues() {
        for k in 1..=12 {
            let f = vt_syndrome(k);
            let labels: Vec<i64> = f.image().iter().map(|v| v.label).collect();
            assert_eq!(labels, (0..=k as i64).collect::<Vec<_>>(), "k={k}");
        }
    }

    #[test]
    fn runs_and_max_run_values() {
        let f = runs_function(7);
        assert_eq!(f.evaluate(&w("0100101")).unwrap(), 6);
        let g = max_run_function(7);
        assert_eq!(g.evaluate(&w("0000101")).unwrap(), 4);
        for k in 1..=8usize {
            assert_eq!(runs_function(k).evaluate(&BinaryWord::zeros(k)).unwrap(), 1);
            assert_eq!(
                max_run_function(k).evaluate(&BinaryWord::zeros(k)).unwrap(),
                k as i64
            );
            if k % 2 == 0 {
                let alt = BinaryWord::new((0..k).map(|i| (i % 2) as u8).collect());
                assert_eq!(runs_function(k).evaluate(&alt).unwrap(), k as i64);
                assert_eq!(max_run_function(k).evaluate(&alt).unwrap(), 1);
            }
        }
    }

    #[test]
    fn catalog_agrees_with_run_profile() {
        for k in 1..=8usize {
            let runs = runs_function(k);
            let max_run = max_run_function(k);
            for x in BinaryWord::all_of_length(k) {
                let p = x.run_profile().unwrap();
                assert_eq!(runs.evaluate(&x).unwrap(), p.run_count() as i64);
                assert_eq!(max_run.evaluate(&x).unwrap(), p.max_run() as i64);
            }
        }
    }

    #[test]
    fn table_loader_round_trip_and_validation() {
        let f = runs_function(3);
        let text: String = BinaryWord::all_of_length(3)
            .map(|x| format!("{x}\t{}\n", f.evaluate(&x).unwrap()))
            .collect();
        let g = TargetFunction::from_table_text("runs:3", &text).unwrap();
        assert_eq!(f, g);

        let incomplete = "000\t1\n001\t2\n";
        assert!(matches!(
            TargetFunction::from_table_text("bad", incomplete),
            Err(Error::BadFunctionTable { .. })
        ));
        let duplicated = format!("{text}000\t1\n");
        assert!(matches!(
            TargetFunction::from_table_text("bad", &duplicated),
            Err(Error::BadFunctionTable { .. })
        ));
    }

    #[test]
    fn function_ball_examples() {
        let f = runs_function(4);
        assert_eq!(
            function_ball(&f, &w("0000"), 0).unwrap(),
            [1].into_iter().collect()
        );
        assert_eq!(
            function_ball(&f, &w("0000"), 2).unwrap(),
            [1, 2, 3].into_iter().collect()
        );
        let constant = TargetFunction::from_values("const", 3, vec![7; 8]).unwrap();
        for rho in [0usize, 2, 4, 6] {
            assert_eq!(function_ball(&constant, &w("010"), rho).unwrap().len(), 1);
        }
        // Ball errors propagate: odd radii and wrong-length centers.
        assert!(matches!(
            function_ball(&f, &w("0000"), 3),
            Err(Error::OddBallRadius { d: 3 })
        ));
        assert!(matches!(
            function_ball(&f, &w("00"), 2),
            Err(Error::WrongWordLength { .. })
        ));
    }

    #[test]
    fn local_bound_profile_examples() {
        let constant = TargetFunction::from_values("const", 3, vec![7; 8]).unwrap();
        let (lmax, witness) = local_bound_profile(&constant, 2).unwrap();
        assert_eq!(lmax, 1);
        assert_eq!(witness, w("000"));

        // Runs function is locally (2t, 4t+1) at small k.
        for k in 1..=10usize {
            let f = runs_function(k);
            for t in [1usize, 2] {
                let (lmax, _) = local_bound_profile(&f, 2 * t).unwrap();
                assert!(lmax <= 4 * t + 1, "k={k} t={t}: {lmax}");
            }
        }

        let f = max_run_function(6);
        let (lmax, witness) = local_bound_profile(&f, 2).unwrap();
        // Oracle: recompute by direct enumeration.
        let direct = BinaryWord::all_of_length(6)
            .map(|u| function_ball(&f, &u, 2).unwrap().len())
            .max()
            .unwrap();
        assert_eq!(lmax, direct);
        let direct_witness = BinaryWord::all_of_length(6)
            .find(|u| function_ball(&f, u, 2).unwrap().len() == direct)
            .unwrap();
        assert_eq!(witness, direct_witness);
    }

    #[test]
    fn local_bound_monotone_in_rho() {
        let f = runs_function(6);
        let mut prev = 0;
        for rho in [0usize, 2, 4, 6] {
            let (lmax, _) = local_bound_profile(&f, rho).unwrap();
            assert!(lmax >= prev);
            prev = lmax;
        }
    }

    #[test]
    fn coloring_constant_and_binary() {
        let constant = TargetFunction::from_values("const", 3, vec![7; 8]).unwrap();
        let c = build_coloring(&constant, 2, 1).unwrap();
        assert!(verify_coloring(&constant, &c));
        assert_eq!(c.colors_used(), 1);

        // E = 2: two colors always suffice (color by f-value).
        let parity =
            TargetFunction::from_values("first-bit", 3, (0..8).map(|i| (i >> 2) & 1).collect())
                .unwrap();
        let c = build_coloring(&parity, 4, 2).unwrap();
        assert!(verify_coloring(&parity, &c));
        assert!(c.colors_used() <= 2);
    }

    #[test]
    fn coloring_runs_function() {
        let f = runs_function(4);
        let c = build_coloring(&f, 2, 5).unwrap();
        assert!(verify_coloring(&f, &c));
        assert!(c.colors_used() <= 5);

        for k in [3usize, 5, 6] {
            let f = runs_function(k);
            let c = build_coloring(&f, 2, 5).unwrap();
            assert!(verify_coloring(&f, &c), "k={k}");
        }
    }

    #[test]
    fn coloring_rejects_insufficient_lambda() {
        let f = runs_function(4);
        // lambda = 2 is below the local bound for rho = 2.
        assert!(build_coloring(&f, 2, 2).is_err());
    }
}
