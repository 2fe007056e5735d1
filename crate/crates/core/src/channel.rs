//! Insdel channel simulation: adversarial and seeded-random corruption of
//! encoded words, the exhaustive function decoder, and recovery statistics.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::fcidc::FcidcEncoder;
use crate::metric::{deletion_sphere, insdel_distance, insertion_sphere};
use crate::word::BinaryWord;

/// One channel operation. Positions index the word state at application
/// time, zero-based; an insertion at `pos` makes the new bit occupy `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChannelEvent {
    Delete { pos: usize },
    Insert { pos: usize, bit: u8 },
}

/// Applies events in order, validating each position against the current
/// word state.
pub fn apply_channel(word: &BinaryWord, events: &[ChannelEvent]) -> Result<BinaryWord> {
    let mut current = word.clone();
    for (i, event) in events.iter().enumerate() {
        current = match *event {
            ChannelEvent::Delete { pos } => {
                if pos >= current.len() {
                    return Err(Error::BadChannelEvent {
                        reason: format!(
                            "event {i}: delete position {pos} out of range {}",
                            current.len()
                        ),
                    });
                }
                current.delete(pos)
            }
            ChannelEvent::Insert { pos, bit } => {
                if pos > current.len() || bit > 1 {
                    return Err(Error::BadChannelEvent {
                        reason: format!("event {i}: insert position {pos} or bit {bit} invalid"),
                    });
                }
                current.insert(pos, bit)
            }
        };
    }
    Ok(current)
}

/// Decoder verdict for one received word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeOutcome {
    /// All candidate messages share this function value.
    Decoded { value: i64, candidates: usize },
    /// No encoding lies within the budget: over-budget corruption.
    NoCandidates,
    /// Candidates disagree on the function value: an encoder defect.
    Mixed { values: Vec<i64> },
}

impl DecodeOutcome {
    pub fn value(&self) -> Option<i64> {
        match self {
            DecodeOutcome::Decoded { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            DecodeOutcome::Decoded { .. } => "decoded",
            DecodeOutcome::NoCandidates => "no-candidates",
            DecodeOutcome::Mixed { .. } => "mixed",
        }
    }
}

/// Exhaustive candidate-filtering decoder: scans all messages and keeps those
/// whose encoding is within insdel distance `t` of the received word.
pub fn decode_function(
    enc: &FcidcEncoder,
    received: &BinaryWord,
    t: usize,
) -> Result<DecodeOutcome> {
    if enc.k() > 12 {
        return Err(Error::SizeCap {
            what: "exhaustive decode candidate scan",
            requested: enc.k(),
            limit: 12,
        });
    }
    let n = enc.encoded_len();
    let min = n.saturating_sub(t);
    let max = n + t;
    if received.len() < min || received.len() > max {
        return Err(Error::ReceivedLengthOutOfRange {
            len: received.len(),
            min,
            max,
        });
    }
    let mut values = BTreeSet::new();
    let mut candidates = 0usize;
    for i in 0..1usize << enc.k() {
        if insdel_distance(&enc.encode_index(i), received) <= t {
            candidates += 1;
            values.insert(enc.function().evaluate_index(i));
        }
    }
    Ok(match values.len() {
        0 => DecodeOutcome::NoCandidates,
        1 => DecodeOutcome::Decoded {
            value: values.into_iter().next().expect("one value"),
            candidates,
        },
        _ => DecodeOutcome::Mixed {
            values: values.into_iter().collect(),
        },
    })
}

/// Corruption strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adversary {
    /// Every message against every word reachable with at most `budget`
    /// operations (deduplicated by received word).
    Exhaustive,
    /// Seeded trials: message, operation count in `0..=budget`, kinds,
    /// positions and bits drawn uniformly. Bit-reproducible for a fixed
    /// seed; each trial derives its own generator from (seed, index).
    Random { seed: u64, trials: u64 },
}

/// One simulated transmission.
#[derive(Debug, Clone)]
pub struct SimulationRecord {
    pub message: BinaryWord,
    /// Event list for random mode; exhaustive mode enumerates received words
    /// directly.
    pub events: Option<Vec<ChannelEvent>>,
    pub received: BinaryWord,
    pub outcome: DecodeOutcome,
    pub success: bool,
}

impl SimulationRecord {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "message": self.message.to_string(),
            "events": self.events.as_ref().map(|e| serde_json::to_value(e).expect("events serialize")),
            "received": self.received.to_string(),
            "outcome": self.outcome.label(),
            "decoded": self.outcome.value(),
            "success": self.success,
        })
    }
}

/// Aggregate statistics; failure records are kept for reporting.
#[derive(Debug, Clone, Default)]
pub struct SimulationSummary {
    pub trials: u64,
    pub successes: u64,
    pub wrong_value: u64,
    pub no_candidates: u64,
    pub mixed: u64,
    pub failures: Vec<SimulationRecord>,
}

impl SimulationSummary {
    pub fn success_rate(&self) -> Option<f64> {
        (self.trials > 0).then(|| self.successes as f64 / self.trials as f64)
    }

    pub fn all_succeeded(&self) -> bool {
        self.trials > 0 && self.successes == self.trials
    }

    fn record(&mut self, rec: SimulationRecord) {
        self.trials += 1;
        if rec.success {
            self.successes += 1;
        } else {
            match rec.outcome {
                DecodeOutcome::Decoded { .. } => self.wrong_value += 1,
                DecodeOutcome::NoCandidates => self.no_candidates += 1,
                DecodeOutcome::Mixed { .. } => self.mixed += 1,
            }
            self.failures.push(rec);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "trials": self.trials,
            "successes": self.successes,
            "wrong_value": self.wrong_value,
            "no_candidates": self.no_candidates,
            "mixed": self.mixed,
            "success_rate": self.success_rate(),
        })
    }
}

/// Decode, folding received lengths outside the decodable window into the
/// over-budget outcome (they certainly have no candidates within t).
fn decode_or_over_budget(
    enc: &FcidcEncoder,
    received: &BinaryWord,
    t: usize,
) -> Result<DecodeOutcome> {
    match decode_function(enc, received, t) {
        Ok(outcome) => Ok(outcome),
        Err(Error::ReceivedLengthOutOfRange { .. }) => Ok(DecodeOutcome::NoCandidates),
        Err(e) => Err(e),
    }
}

/// Runs the channel against the encoder. `channel_budget` is the corruption
/// budget; decoding always uses the encoder's design budget, so over-budget
/// stress runs surface failures instead of hiding them.
pub fn simulate(
    enc: &FcidcEncoder,
    adversary: Adversary,
    channel_budget: usize,
) -> Result<SimulationSummary> {
    let mut summary = SimulationSummary::default();
    match adversary {
        Adversary::Exhaustive => {
            if enc.k() > 8 || channel_budget > 3 {
                return Err(Error::SizeCap {
                    what: "exhaustive channel enumeration",
                    requested: enc.k().max(channel_budget),
                    limit: 8,
                });
            }
            for i in 0..1usize << enc.k() {
                let message = BinaryWord::from_index(i as u64, enc.k());
                let sent = enc.encode_index(i);
                let expected = enc.function().evaluate_index(i);
                for received in reachable_words(&sent, channel_budget)? {
                    let outcome = decode_or_over_budget(enc, &received, enc.t())?;
                    let success = outcome.value() == Some(expected);
                    summary.record(SimulationRecord {
                        message: message.clone(),
                        events: None,
                        received,
                        outcome,
                        success,
                    });
                }
            }
        }
        Adversary::Random { seed, trials } => {
            for trial in 0..trials {
                let mut rng = SplitMix64::new(seed ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15));
                let idx = (rng.next_u64() % (1u64 << enc.k())) as usize;
                let message = BinaryWord::from_index(idx as u64, enc.k());
                let sent = enc.encode_index(idx);
                let expected = enc.function().evaluate_index(idx);
                let ops = (rng.next_u64() % (channel_budget as u64 + 1)) as usize;
                let mut events = Vec::with_capacity(ops);
                let mut current = sent.clone();
                for _ in 0..ops {
                    let insert = current.is_empty() || rng.next_u64() % 2 == 0;
                    let event = if insert {
                        let pos = (rng.next_u64() % (current.len() as u64 + 1)) as usize;
                        let bit = (rng.next_u64() % 2) as u8;
                        ChannelEvent::Insert { pos, bit }
                    } else {
                        let pos = (rng.next_u64() % current.len() as u64) as usize;
                        ChannelEvent::Delete { pos }
                    };
                    current = apply_channel(&current, &[event])?;
                    events.push(event);
                }
                let outcome = decode_or_over_budget(enc, &current, enc.t())?;
                let success = outcome.value() == Some(expected);
                summary.record(SimulationRecord {
                    message,
                    events: Some(events),
                    received: current,
                    outcome,
                    success,
                });
            }
        }
    }
    Ok(summary)
}

/// All words reachable from `word` by at most `budget` operations: any
/// interleaving of a deletions and b insertions with a + b <= budget reaches
/// the same set as deletions first, then insertions.
pub fn reachable_words(word: &BinaryWord, budget: usize) -> Result<BTreeSet<BinaryWord>> {
    let mut out = BTreeSet::new();
    for dels in 0..=budget.min(word.len()) {
        for shrunk in deletion_sphere(word, dels)? {
            for ins in 0..=(budget - dels) {
                out.extend(insertion_sphere(&shrunk, ins));
            }
        }
    }
    Ok(out)
}

/// SplitMix64: tiny, stable, explicitly seeded generator for reproducible
/// simulations.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}
