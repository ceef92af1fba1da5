//! Round accounting for the synchronous small-message model.
//!
//! No messages are simulated. Each primitive the algorithms use is charged
//! a fixed number of rounds, and every charge rule is realizable with
//! `O(log n)`-bit messages:
//!
//! * BFS to depth `d` costs `d`: one round per layer, each message carries
//!   one distance or source id.
//! * A converge-cast or broadcast over Steiner trees of depth `R` where an
//!   edge is shared by at most `L` trees costs `R * L`: each edge forwards
//!   one `O(log n)`-bit partial aggregate per tree, pipelined.
//! * Leader election, min-id search and tree-order labeling inside a
//!   component of diameter `D` cost `3 * D`: build a BFS tree, converge-cast
//!   subtree counts, broadcast offsets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const LABEL_BFS: &str = "bfs";
pub const LABEL_STEINER: &str = "steiner-aggregate";
pub const LABEL_COORDINATION: &str = "coordination";
pub const LABEL_WEAK_CARVE: &str = "weak-carve";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub label: String,
    pub rounds: u64,
}

/// Accumulated rounds with a labeled breakdown. `total` always equals the
/// sum of the breakdown.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundLedger {
    total: u64,
    breakdown: Vec<LedgerEntry>,
}

impl RoundLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn breakdown(&self) -> &[LedgerEntry] {
        &self.breakdown
    }

    pub fn charge(&mut self, label: &str, rounds: u64) {
        self.total += rounds;
        self.breakdown.push(LedgerEntry { label: label.to_string(), rounds });
    }

    pub fn charge_bfs(&mut self, depth: u64) {
        self.charge(LABEL_BFS, depth);
    }

    /// Converge-cast or broadcast over Steiner trees with the given depth
    /// and congestion.
    pub fn charge_steiner_aggregate(&mut self, depth: u64, congestion: u64) {
        self.charge(LABEL_STEINER, depth * congestion);
    }

    /// Leader election / min-id / tree labeling in a component whose
    /// diameter is bounded by `diameter`.
    pub fn charge_coordination(&mut self, diameter: u64) {
        self.charge(LABEL_COORDINATION, 3 * diameter);
    }

    /// Sequential composition: `other` runs after everything in `self`.
    pub fn append(&mut self, other: RoundLedger) {
        self.total += other.total;
        self.breakdown.extend(other.breakdown);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ledger serializes")
    }
}

/// Parallel composition: independent components run simultaneously, so
/// the cost is the slowest one. The result keeps the breakdown of the
/// first ledger attaining the maximum, followed by a zero-round marker.
pub fn merge_parallel(ledgers: Vec<RoundLedger>) -> Result<RoundLedger> {
    let k = ledgers.len();
    if k == 0 {
        return Err(Error::Empty("merge_parallel needs at least one ledger"));
    }
    if k == 1 {
        return Ok(ledgers.into_iter().next().unwrap());
    }
    let max = ledgers.iter().map(|l| l.total).max().unwrap();
    let mut out = ledgers.into_iter().find(|l| l.total == max).unwrap();
    out.breakdown.push(LedgerEntry { label: format!("parallel-over-{k}-components"), rounds: 0 });
    Ok(out)
}
