use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite binary word. Bits are stored explicitly; the empty word is valid.
///
/// Words serialize as ASCII bit-strings ("010011", "" for the empty word).
/// `Ord` is the lexicographic order on bit sequences, which for equal lengths
/// coincides with the numeric order of [`BinaryWord::from_index`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        BinaryWord(bits)
    }

    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        BinaryWord(vec![0; len])
    }

    pub fn ones(len: usize) -> Self {
        BinaryWord(vec![1; len])
    }

    /// The `index`-th word of the given length, counting with the first bit
    /// as most significant so that numeric order equals lexicographic order.
    pub fn from_index(index: u64, len: usize) -> Self {
        assert!(
            len < 64,
            "word length {len} too large for index enumeration"
        );
        let bits = (0..len)
            .map(|i| ((index >> (len - 1 - i)) & 1) as u8)
            .collect();
        BinaryWord(bits)
    }

    /// Inverse of [`BinaryWord::from_index`].
    pub fn to_index(&self) -> u64 {
        assert!(self.len() < 64);
        self.0.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    /// All `2^len` words of the given length in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = BinaryWord> {
        assert!(len < 26, "refusing to enumerate 2^{len} words");
        (0..1u64 << len).map(move |i| BinaryWord::from_index(i, len))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BinaryWord(bits)
    }

    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|&b| 1 - b).collect())
    }

    pub fn reversed(&self) -> BinaryWord {
        let mut bits = self.0.clone();
        bits.reverse();
        BinaryWord(bits)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    /// Greedy two-pointer subsequence test.
    pub fn is_subsequence_of(&self, other: &BinaryWord) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|b| it.any(|o| o == b))
    }

    /// Word with the bit at `pos` removed.
    pub fn delete(&self, pos: usize) -> BinaryWord {
        let mut bits = self.0.clone();
        bits.remove(pos);
        BinaryWord(bits)
    }

    /// Word with `bit` inserted so that it occupies position `pos`.
    pub fn insert(&self, pos: usize, bit: u8) -> BinaryWord {
        debug_assert!(bit <= 1);
        let mut bits = self.0.clone();
        bits.insert(pos, bit);
        BinaryWord(bits)
    }

    /// Run decomposition of a non-empty word.
    pub fn run_profile(&self) -> Result<RunProfile> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut run_lengths = Vec::new();
        let mut current = self.0[0];
        let mut len = 0usize;
        for &b in &self.0 {
            if b == current {
                len += 1;
            } else {
                run_lengths.push(len);
                current = b;
                len = 1;
            }
        }
        run_lengths.push(len);
        Ok(RunProfile::new(run_lengths))
    }

    /// Number of runs, `r(x)`. Zero for the empty word by convention of the
    /// callers that guard against it.
    pub fn run_count(&self) -> usize {
        match self.run_profile() {
            Ok(p) => p.run_count(),
            Err(_) => 0,
        }
    }

    pub fn max_run(&self) -> usize {
        match self.run_profile() {
            Ok(p) => p.max_run(),
            Err(_) => 0,
        }
    }
}

/// Run-length decomposition of a word: the ordered maximal blocks of equal
/// bits, their count and the longest block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunProfile {
    run_lengths: Vec<usize>,
}

impl RunProfile {
    fn new(run_lengths: Vec<usize>) -> Self {
        debug_assert!(!run_lengths.is_empty());
        debug_assert!(run_lengths.iter().all(|&l| l > 0));
        RunProfile { run_lengths }
    }

    pub fn run_lengths(&self) -> &[usize] {
        &self.run_lengths
    }

    pub fn run_count(&self) -> usize {
        self.run_lengths.len()
    }

    pub fn max_run(&self) -> usize {
        *self
            .run_lengths
            .iter()
            .max()
            .expect("non-empty by construction")
    }

    pub fn total_length(&self) -> usize {
        self.run_lengths.iter().sum()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(Error::InvalidBit(other)),
            }
        }
        Ok(BinaryWord(bits))
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
