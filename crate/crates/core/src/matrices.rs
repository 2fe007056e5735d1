//! Requirement-matrix generators: type-1/type-2 insdel distance matrices over
//! message vectors, exact function distances, and function-distance matrices
//! over image values.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::TargetFunction;
use crate::metric::insdel_distance;
use crate::word::BinaryWord;

/// Largest k for which exhaustive function-distance scans are attempted.
pub const MAX_FUNCTION_DISTANCE_K: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "type1-messages")]
    Type1Messages,
    #[serde(rename = "type2-messages")]
    Type2Messages,
    #[serde(rename = "type1-function")]
    Type1Function,
    #[serde(rename = "type2-function")]
    Type2Function,
    #[serde(rename = "custom")]
    Custom,
}

/// Which of the two requirement formulas to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixType {
    Type1,
    Type2,
}

/// A square non-negative requirement matrix with row labels and provenance.
/// The `[.]+` clamp is applied at generation, the diagonal is zero, and the
/// paper-style generators always produce symmetric entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceMatrix {
    pub order: usize,
    pub kind: MatrixKind,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<u64>>,
    /// Message length behind type-2 entries; not part of the JSON schema.
    #[serde(skip)]
    pub k_anchor: Option<usize>,
}

impl DistanceMatrix {
    pub fn custom(labels: Vec<String>, entries: Vec<Vec<u64>>) -> Result<Self> {
        let order = entries.len();
        if labels.len() != order || entries.iter().any(|row| row.len() != order) {
            return Err(Error::Precondition(
                "matrix must be square with one label per row".into(),
            ));
        }
        if (0..order).any(|i| entries[i][i] != 0) {
            return Err(Error::Precondition("matrix diagonal must be zero".into()));
        }
        Ok(DistanceMatrix {
            order,
            kind: MatrixKind::Custom,
            labels,
            entries,
            k_anchor: None,
        })
    }

    /// Constant off-diagonal requirement `d`.
    pub fn uniform(order: usize, d: u64) -> Self {
        let entries = (0..order)
            .map(|i| (0..order).map(|j| if i == j { 0 } else { d }).collect())
            .collect();
        DistanceMatrix {
            order,
            kind: MatrixKind::Custom,
            labels: (1..=order).map(|i| format!("p{i}")).collect(),
            entries,
            k_anchor: None,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..self.order).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Sum over unordered pairs, `S = sum_{i<j} [I]_ij`.
    pub fn pair_sum(&self) -> u64 {
        let mut s = 0;
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                s += self.entries[i][j];
            }
        }
        s
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Leading principal submatrix of the given order.
    pub fn principal_submatrix(&self, order: usize) -> Result<DistanceMatrix> {
        if order > self.order {
            return Err(Error::Precondition(format!(
                "submatrix order {order} exceeds matrix order {}",
                self.order
            )));
        }
        Ok(DistanceMatrix {
            order,
            kind: self.kind,
            labels: self.labels[..order].to_vec(),
            entries: self.entries[..order]
                .iter()
                .map(|row| row[..order].to_vec())
                .collect(),
            k_anchor: self.k_anchor,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let m: DistanceMatrix = serde_json::from_str(text)?;
        if m.labels.len() != m.order
            || m.entries.len() != m.order
            || m.entries.iter().any(|row| row.len() != m.order)
        {
            return Err(Error::Precondition(
                "matrix JSON has inconsistent dimensions".into(),
            ));
        }
        Ok(m)
    }

    /// CSV with labels as header row, for human inspection.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(",{}\n", self.labels.join(",")));
        for (label, row) in self.labels.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&format!("{label},{}\n", cells.join(",")));
        }
        out
    }
}

fn clamp(v: i64) -> u64 {
    v.max(0) as u64
}

/// Insdel distance matrix over explicit message vectors:
/// entry `(i, j)` is `[2t + 2 - d(x_i, x_j)]+` (type 1) or
/// `[2t + 2 + 2k - d(x_i, x_j)]+` (type 2) when `f(x_i) != f(x_j)`, else 0.
pub fn message_matrix(
    f: &TargetFunction,
    t: usize,
    xs: &[BinaryWord],
    which: MatrixType,
) -> Result<DistanceMatrix> {
    let k = f.k();
    for (i, x) in xs.iter().enumerate() {
        if x.len() != k {
            return Err(Error::WrongWordLength {
                word: x.to_string(),
                expected: k,
                actual: x.len(),
            });
        }
        if xs[..i].contains(x) {
            return Err(Error::DuplicateWord {
                word: x.to_string(),
            });
        }
    }
    let order = xs.len();
    let values: Vec<i64> = xs.iter().map(|x| f.evaluate(x)).collect::<Result<_>>()?;
    let base = match which {
        MatrixType::Type1 => 2 * t as i64 + 2,
        MatrixType::Type2 => 2 * t as i64 + 2 + 2 * k as i64,
    };
    let mut entries = vec![vec![0u64; order]; order];
    for i in 0..order {
        for j in (i + 1)..order {
            if values[i] != values[j] {
                let d = insdel_distance(&xs[i], &xs[j]) as i64;
                let e = clamp(base - d);
                entries[i][j] = e;
                entries[j][i] = e;
            }
        }
    }
    Ok(DistanceMatrix {
        order,
        kind: match which {
            MatrixType::Type1 => MatrixKind::Type1Messages,
            MatrixType::Type2 => MatrixKind::Type2Messages,
        },
        labels: xs.iter().map(BinaryWord::to_string).collect(),
        entries,
        k_anchor: match which {
            MatrixType::Type1 => None,
            MatrixType::Type2 => Some(k),
        },
    })
}

/// Exact function distance: the minimum insdel distance between preimages of
/// two image values. Zero iff the values coincide.
pub fn function_distance(f: &TargetFunction, a: i64, b: i64) -> Result<u64> {
    f.image_position(a)?;
    f.image_position(b)?;
    if a == b {
        return Ok(0);
    }
    if f.k() > MAX_FUNCTION_DISTANCE_K {
        return Err(Error::SizeCap {
            what: "exhaustive function distance",
            requested: f.k(),
            limit: MAX_FUNCTION_DISTANCE_K,
        });
    }
    let xs = f.preimage(a);
    let ys = f.preimage(b);
    let mut best = u64::MAX;
    'outer: for x in &xs {
        for y in &ys {
            let d = insdel_distance(x, y) as u64;
            if d < best {
                best = d;
                // Distinct same-length words are at distance at least 2.
                if best == 2 {
                    break 'outer;
                }
            }
        }
    }
    Ok(best)
}

/// Lower estimates `a_ij <= d^f(f_i, f_j)` indexed by image position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EstimateTable {
    pub entries: Vec<Vec<u64>>,
}

impl EstimateTable {
    pub fn new(entries: Vec<Vec<u64>>) -> Self {
        EstimateTable { entries }
    }
}

/// Function-distance matrix over image values in ascending label order:
/// entry `(i, j)` is `[2(t + 1) - d^f(f_i, f_j)]+` (type 1) or
/// `[2(t + 1 + k) - d^f(f_i, f_j)]+` (type 2) for `i != j`.
///
/// With `estimates` supplied, the estimate replaces the exact function
/// distance (yielding entrywise-larger requirements); the table is validated
/// against the exact distances whenever k permits the exhaustive scan.
pub fn function_matrix(
    f: &TargetFunction,
    t: usize,
    which: MatrixType,
    estimates: Option<&EstimateTable>,
) -> Result<DistanceMatrix> {
    let e = f.expressiveness();
    let labels: Vec<i64> = f.image().iter().map(|v| v.label).collect();
    let distances: Vec<Vec<u64>> = match estimates {
        Some(table) => {
            if table.entries.len() != e || table.entries.iter().any(|row| row.len() != e) {
                return Err(Error::BadEstimates {
                    reason: format!("estimate table must be {e}x{e}"),
                });
            }
            if f.k() <= MAX_FUNCTION_DISTANCE_K {
                for i in 0..e {
                    for j in 0..e {
                        if i == j {
                            continue;
                        }
                        let exact = function_distance(f, labels[i], labels[j])?;
                        if table.entries[i][j] > exact {
                            return Err(Error::BadEstimates {
                                reason: format!(
                                    "estimate {} for pair ({}, {}) exceeds exact function distance {}",
                                    table.entries[i][j], labels[i], labels[j], exact
                                ),
                            });
                        }
                    }
                }
            }
            table.entries.clone()
        }
        None => {
            let mut d = vec![vec![0u64; e]; e];
            for i in 0..e {
                for j in (i + 1)..e {
                    let v = function_distance(f, labels[i], labels[j])?;
                    d[i][j] = v;
                    d[j][i] = v;
                }
            }
            d
        }
    };
    let base = match which {
        MatrixType::Type1 => 2 * (t as i64 + 1),
        MatrixType::Type2 => 2 * (t as i64 + 1 + f.k() as i64),
    };
    let mut entries = vec![vec![0u64; e]; e];
    for i in 0..e {
        for j in 0..e {
            if i != j {
                entries[i][j] = clamp(base - distances[i][j] as i64);
            }
        }
    }
    Ok(DistanceMatrix {
        order: e,
        kind: match which {
            MatrixType::Type1 => MatrixKind::Type1Function,
            MatrixType::Type2 => MatrixKind::Type2Function,
        },
        labels: labels.iter().map(i64::to_string).collect(),
        entries,
        k_anchor: match which {
            MatrixType::Type1 => None,
            MatrixType::Type2 => Some(f.k()),
        },
    })
}

/// The representative families whose pairwise distances have closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Vt,
    Runs,
    MaxRun,
}

/// Representative message vectors:
/// - vt: the zero word plus the k weight-one words, syndrome values 0..k;
/// - runs: words with run counts 1..k;
/// - max-run: words with maximum run lengths 1..k.
pub fn representative_vectors(family: Family, k: usize) -> Vec<BinaryWord> {
    assert!(k >= 2, "representative families need k >= 2");
    match family {
        Family::Vt => {
            let mut out = vec![BinaryWord::zeros(k)];
            for i in 2..=(k + 1) {
                let mut bits = vec![0u8; k];
                bits[i - 2] = 1;
                out.push(BinaryWord::new(bits));
            }
            out
        }
        Family::Runs => (1..=k)
            .map(|i| {
                let mut bits = vec![0u8; k - i + 1];
                if i % 2 == 1 {
                    for _ in 0..(i - 1) / 2 {
                        bits.push(1);
                        bits.push(0);
                    }
                } else {
                    for _ in 0..(i - 2) / 2 {
                        bits.push(1);
                        bits.push(0);
                    }
                    bits.push(1);
                }
                BinaryWord::new(bits)
            })
            .collect(),
        Family::MaxRun => (1..=k)
            .map(|i| {
                let mut bits = vec![0u8; i];
                if (k - i) % 2 == 0 {
                    for _ in 0..(k - i) / 2 {
                        bits.push(1);
                        bits.push(0);
                    }
                } else {
                    for _ in 0..(k - i - 1) / 2 {
                        bits.push(1);
                        bits.push(0);
                    }
                    bits.push(1);
                }
                BinaryWord::new(bits)
            })
            .collect(),
    }
}

/// `|i - j|` rounded up to the next even integer: the exact pairwise insdel
/// distance of the runs and max-run representative families, and the exact
/// function distance of the runs function.
pub fn even_rounded_difference(i: u64, j: u64) -> u64 {
    let d = i.abs_diff(j);
    if d % 2 == 0 {
        d
    } else {
        d + 1
    }
}

/// Closed-form function-distance floor for the maximum-run-length function:
/// `2 * ceil(|i - j| / (min(i, j) + 1))`.
pub fn max_run_distance_floor(i: u64, j: u64) -> u64 {
    if i == j {
        return 0;
    }
    let num = i.abs_diff(j);
    let den = i.min(j) + 1;
    2 * num.div_ceil(den)
}

/// Estimate tables for the catalog, valid as lower bounds on the exact
/// function distance at any k:
/// vt: 2 off-diagonal; runs: even-rounded difference; max-run: the ceiling
/// floor above. Labels are taken in ascending order.
pub fn catalog_estimates(family: Family, k: usize) -> EstimateTable {
    let labels: Vec<u64> = match family {
        Family::Vt => (0..=k as u64).collect(),
        Family::Runs | Family::MaxRun => (1..=k as u64).collect(),
    };
    let e = labels.len();
    let mut entries = vec![vec![0u64; e]; e];
    for i in 0..e {
        for j in 0..e {
            if i == j {
                continue;
            }
            entries[i][j] = match family {
                Family::Vt => 2,
                Family::Runs => even_rounded_difference(labels[i], labels[j]),
                Family::MaxRun => max_run_distance_floor(labels[i], labels[j]),
            };
        }
    }
    EstimateTable::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{max_run_function, runs_function, vt_syndrome};

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn example_function() -> TargetFunction {
        // f(00) = f(11) = 1, f(01) = f(10) = 0 over k = 2.
        TargetFunction::from_values("example", 2, vec![1, 0, 0, 1]).unwrap()
    }

    #[test]
    fn worked_example_matrices() {
        let f = example_function();
        let xs = vec![w("00"), w("01"), w("10"), w("11")];
        let m1 = message_matrix(&f, 1, &xs, MatrixType::Type1).unwrap();
        assert_eq!(
            m1.entries,
            vec![
                vec![0, 2, 2, 0],
                vec![2, 0, 0, 2],
                vec![2, 0, 0, 2],
                vec![0, 2, 2, 0],
            ]
        );
        let m2 = message_matrix(&f, 1, &xs, MatrixType::Type2).unwrap();
        assert_eq!(
            m2.entries,
            vec![
                vec![0, 6, 6, 0],
                vec![6, 0, 0, 6],
                vec![6, 0, 0, 6],
                vec![0, 6, 6, 0],
            ]
        );
        assert_eq!(m2.k_anchor, Some(2));
    }

    #[test]
    fn constant_function_yields_zero_matrix() {
        let f = TargetFunction::from_values("const", 2, vec![5; 4]).unwrap();
        let xs: Vec<BinaryWord> = BinaryWord::all_of_length(2).collect();
        let m = message_matrix(&f, 3, &xs, MatrixType::Type1).unwrap();
        assert_eq!(m.pair_sum(), 0);
    }

    #[test]
    fn message_matrix_rejects_bad_inputs() {
        let f = example_function();
        assert!(matches!(
            message_matrix(&f, 1, &[w("00"), w("00")], MatrixType::Type1),
            Err(Error::DuplicateWord { .. })
        ));
        assert!(matches!(
            message_matrix(&f, 1, &[w("000")], MatrixType::Type1),
            Err(Error::WrongWordLength { .. })
        ));
    }

    #[test]
    fn type2_exceeds_type1_by_2k_when_unclamped() {
        let f = runs_function(4);
        let xs = representative_vectors(Family::Runs, 4);
        let m1 = message_matrix(&f, 2, &xs, MatrixType::Type1).unwrap();
        let m2 = message_matrix(&f, 2, &xs, MatrixType::Type2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if m1.entries[i][j] > 0 {
                    assert_eq!(m2.entries[i][j], m1.entries[i][j] + 8);
                }
            }
        }
    }

    #[test]
    fn vt_function_distance_is_two() {
        for k in 2..=8usize {
            let f = vt_syndrome(k);
            for a in 0..=k as i64 {
                for b in 0..=k as i64 {
                    let expected = if a == b { 0 } else { 2 };
                    assert_eq!(
                        function_distance(&f, a, b).unwrap(),
                        expected,
                        "k={k} ({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn runs_function_distance_closed_form() {
        for k in 2..=10usize {
            let f = runs_function(k);
            for a in 1..=k as i64 {
                for b in 1..=k as i64 {
                    assert_eq!(
                        function_distance(&f, a, b).unwrap(),
                        even_rounded_difference(a as u64, b as u64),
                        "k={k} ({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn max_run_function_distance_floor() {
        for k in 2..=10usize {
            let f = max_run_function(k);
            for a in 1..=k as i64 {
                for b in 1..=k as i64 {
                    assert!(
                        function_distance(&f, a, b).unwrap()
                            >= max_run_distance_floor(a as u64, b as u64),
                        "k={k} ({a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn max_run_floor_tight_on_witness_set() {
        let witnesses = [w("00000"), w("00001"), w("00010"), w("00100"), w("01010")];
        let f = max_run_function(5);
        for x in &witnesses {
            for y in &witnesses {
                let i = f.evaluate(x).unwrap() as u64;
                let j = f.evaluate(y).unwrap() as u64;
                assert_eq!(
                    insdel_distance(x, y) as u64,
                    max_run_distance_floor(i, j),
                    "{x} vs {y}"
                );
            }
        }
    }

    #[test]
    fn representative_families() {
        assert_eq!(
            representative_vectors(Family::Vt, 2),
            vec![w("00"), w("10"), w("01")]
        );
        let f = vt_syndrome(2);
        for (i, x) in representative_vectors(Family::Vt, 2).iter().enumerate() {
            assert_eq!(f.evaluate(x).unwrap(), i as i64);
        }

        assert_eq!(
            representative_vectors(Family::Runs, 4),
            vec![w("0000"), w("0001"), w("0010"), w("0101")]
        );
        for k in 2..=12usize {
            let runs = runs_function(k);
            for (i, x) in representative_vectors(Family::Runs, k).iter().enumerate() {
                assert_eq!(runs.evaluate(x).unwrap(), i as i64 + 1, "k={k} i={i}");
            }
            let max_run = max_run_function(k);
            for (i, x) in representative_vectors(Family::MaxRun, k).iter().enumerate() {
                assert_eq!(max_run.evaluate(x).unwrap(), i as i64 + 1, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn representative_pairwise_distances_closed_forms() {
        for k in 2..=12usize {
            let vt = representative_vectors(Family::Vt, k);
            for i in 0..vt.len() {
                for j in (i + 1)..vt.len() {
                    assert_eq!(insdel_distance(&vt[i], &vt[j]), 2, "vt k={k}");
                }
            }
            for family in [Family::Runs, Family::MaxRun] {
                let xs = representative_vectors(family, k);
                for i in 0..xs.len() {
                    for j in (i + 1)..xs.len() {
                        let expected = even_rounded_difference(i as u64 + 1, j as u64 + 1);
                        assert_eq!(
                            insdel_distance(&xs[i], &xs[j]) as u64,
                            expected,
                            "{family:?} k={k} ({i},{j})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn function_matrices_closed_forms() {
        // vt type-2: off-diagonal entries all 2(t + k).
        for (k, t) in [(2usize, 1usize), (3, 1), (4, 2), (6, 3)] {
            let f = vt_syndrome(k);
            let m = function_matrix(&f, t, MatrixType::Type2, None).unwrap();
            for i in 0..m.order {
                for j in 0..m.order {
                    let expected = if i == j { 0 } else { 2 * (t + k) as u64 };
                    assert_eq!(m.entries[i][j], expected, "k={k} t={t}");
                }
            }
        }
        // runs type-2: 2(t+k)+1-|i-j| for odd gaps, 2(t+k+1)-|i-j| for even.
        for (k, t) in [(4usize, 1usize), (5, 2), (8, 1)] {
            let f = runs_function(k);
            let m = function_matrix(&f, t, MatrixType::Type2, None).unwrap();
            for i in 0..m.order {
                for j in 0..m.order {
                    let gap = i.abs_diff(j) as u64;
                    let expected = if i == j {
                        0
                    } else if gap % 2 == 1 {
                        (2 * (t + k) + 1) as u64 - gap
                    } else {
                        (2 * (t + k + 1)) as u64 - gap
                    };
                    assert_eq!(m.entries[i][j], expected, "k={k} t={t} ({i},{j})");
                }
            }
        }
        // max-run type-2 with the ceiling estimates.
        for (k, t) in [(5usize, 1usize), (6, 2)] {
            let f = max_run_function(k);
            let est = catalog_estimates(Family::MaxRun, k);
            let m = function_matrix(&f, t, MatrixType::Type2, Some(&est)).unwrap();
            for i in 0..m.order {
                for j in 0..m.order {
                    let expected = if i == j {
                        0
                    } else {
                        2 * ((t + k + 1) as u64
                            - (i as u64 + 1)
                                .abs_diff(j as u64 + 1)
                                .div_ceil((i.min(j) + 2) as u64))
                    };
                    assert_eq!(m.entries[i][j], expected, "k={k} t={t} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn worked_runs_matrices_regenerated() {
        // k = 4, t = 1: the type-2 function matrix and the type-1 message
        // matrix over the runs representatives. Both generated from the
        // definitions; the generated type-1 matrix is symmetric.
        let f = runs_function(4);
        let m2 = function_matrix(&f, 1, MatrixType::Type2, None).unwrap();
        assert_eq!(
            m2.entries,
            vec![
                vec![0, 10, 10, 8],
                vec![10, 0, 10, 10],
                vec![10, 10, 0, 10],
                vec![8, 10, 10, 0],
            ]
        );
        let xs = representative_vectors(Family::Runs, 4);
        let m1 = message_matrix(&f, 1, &xs, MatrixType::Type1).unwrap();
        assert!(m1.is_symmetric());
        assert_eq!(m1.entries[0], vec![0, 2, 2, 0]);
        assert_eq!(m1.entries[3], vec![0, 2, 2, 0]);
    }

    #[test]
    fn estimates_are_validated() {
        let f = runs_function(4);
        // Estimate 4 for adjacent run counts exceeds the exact distance 2.
        let mut entries = catalog_estimates(Family::Runs, 4).entries;
        entries[0][1] = 4;
        entries[1][0] = 4;
        let bad = EstimateTable::new(entries);
        assert!(matches!(
            function_matrix(&f, 1, MatrixType::Type2, Some(&bad)),
            Err(Error::BadEstimates { .. })
        ));
        // The catalog estimates pass validation.
        let good = catalog_estimates(Family::Runs, 4);
        assert!(function_matrix(&f, 1, MatrixType::Type2, Some(&good)).is_ok());
    }

    #[test]
    fn generated_matrices_are_symmetric_zero_diagonal() {
        for k in 2..=6usize {
            for t in 1..=2usize {
                let f = runs_function(k);
                let xs: Vec<BinaryWord> = BinaryWord::all_of_length(k).collect();
                for which in [MatrixType::Type1, MatrixType::Type2] {
                    let m = message_matrix(&f, t, &xs, which).unwrap();
                    assert!(m.is_symmetric());
                    assert!((0..m.order).all(|i| m.entries[i][i] == 0));
                }
                let m = function_matrix(&f, t, MatrixType::Type1, None).unwrap();
                assert!(m.is_symmetric());
            }
        }
    }

    #[test]
    fn json_and_csv_round_trip() {
        let f = example_function();
        let xs: Vec<BinaryWord> = BinaryWord::all_of_length(2).collect();
        let m = message_matrix(&f, 1, &xs, MatrixType::Type2).unwrap();
        let json = m.to_json();
        let back = DistanceMatrix::from_json(&json).unwrap();
        assert_eq!(back.entries, m.entries);
        assert_eq!(back.kind, MatrixKind::Type2Messages);
        let csv = m.to_csv();
        assert!(csv.starts_with(",00,01,10,11\n"));
        assert!(csv.contains("00,0,6,6,0\n"));
    }
}
