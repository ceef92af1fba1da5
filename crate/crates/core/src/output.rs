//! Stable JSON forms of clusterings, written and read by the CLI.
//!
//! Field order is fixed by the struct definitions and every list is sorted,
//! so equal results serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::decompose::{ColoredCluster, NetworkDecomposition};
use crate::error::{Error, Result};
use crate::graph::{induced_diameter, Graph, NodeMask};
use crate::ledger::RoundLedger;
use crate::refine::CutOrCluster;
use crate::strong::{DeadNode, StrongCarving, StrongCluster};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionStats {
    pub rounds: u64,
    pub max_diameter: usize,
    pub n: usize,
    #[serde(default)]
    pub diameter_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub colors: usize,
    pub clusters: Vec<ColoredCluster>,
    pub stats: DecompositionStats,
}

impl DecompositionJson {
    pub fn new(g: &Graph, d: &NetworkDecomposition, ledger: &RoundLedger) -> Self {
        let nodes: Vec<&[usize]> = d.clusters.iter().map(|c| c.nodes.as_slice()).collect();
        Self {
            colors: d.colors,
            clusters: d.clusters.clone(),
            stats: DecompositionStats {
                rounds: ledger.total(),
                max_diameter: max_diameter(g, &nodes),
                n: d.n,
                diameter_bound: d.diameter_bound,
            },
        }
    }

    pub fn into_decomposition(self) -> NetworkDecomposition {
        NetworkDecomposition {
            n: self.stats.n,
            colors: self.colors,
            clusters: self.clusters,
            diameter_bound: self.stats.diameter_bound,
            remaining: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarvedCluster {
    pub id: usize,
    pub center: usize,
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CarvingStats {
    pub rounds: u64,
    pub max_diameter: usize,
    pub n: usize,
    pub alive: usize,
    pub eps: f64,
    pub diameter_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CarvingJson {
    pub clusters: Vec<CarvedCluster>,
    pub dead: Vec<DeadNode>,
    pub stats: CarvingStats,
}

impl CarvingJson {
    pub fn new(g: &Graph, mask: &NodeMask, c: &StrongCarving, eps: f64) -> Self {
        let nodes: Vec<&[usize]> = c.clusters.iter().map(|c| c.nodes.as_slice()).collect();
        Self {
            clusters: c
                .clusters
                .iter()
                .enumerate()
                .map(|(id, c)| CarvedCluster { id, center: c.center, nodes: c.nodes.clone() })
                .collect(),
            dead: c.dead.clone(),
            stats: CarvingStats {
                rounds: c.ledger.total(),
                max_diameter: max_diameter(g, &nodes),
                n: g.n(),
                alive: mask.count(),
                eps,
                diameter_bound: c.diameter_bound,
            },
        }
    }

    /// Rebuilds the carving; radii are recomputed from the graph.
    pub fn into_carving(self, g: &Graph) -> StrongCarving {
        let mut c = StrongCarving::empty();
        c.diameter_bound = self.stats.diameter_bound;
        c.dead = self.dead;
        c.clusters = self
            .clusters
            .into_iter()
            .map(|cl| StrongCluster {
                radius: crate::strong::ball_radius(g, &cl.nodes, cl.center),
                nodes: cl.nodes,
                center: cl.center,
            })
            .collect();
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutOrClusterJson {
    #[serde(flatten)]
    pub outcome: CutOrCluster,
    /// Strong diameter of the extracted component, absent for cuts.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diameter: Option<usize>,
}

impl CutOrClusterJson {
    pub fn new(g: &Graph, outcome: &CutOrCluster) -> Self {
        let diameter = match outcome {
            CutOrCluster::Component { nodes, .. } => induced_diameter(g, nodes),
            CutOrCluster::Cut { .. } => None,
        };
        Self { outcome: outcome.clone(), diameter }
    }
}

/// Largest strong diameter over `clusters`; disconnected clusters count as
/// `usize::MAX`.
pub fn max_diameter(g: &Graph, clusters: &[&[usize]]) -> usize {
    use rayon::prelude::*;
    clusters
        .par_iter()
        .map(|c| induced_diameter(g, c).unwrap_or(usize::MAX))
        .max()
        .unwrap_or(0)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
}
