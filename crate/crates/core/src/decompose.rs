//! Network decomposition by repeated ball carving with `eps = 1/2`: the
//! clusters of the `i`-th carving get color `i`, and the nodes it leaves
//! dead are the input of the next one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeMask};
use crate::ledger::RoundLedger;
use crate::seed;
use crate::strong::StrongCarver;

pub const DECOMPOSITION_EPS: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredCluster {
    /// Globally unique, assigned in (iteration, smallest node) order.
    pub id: usize,
    /// Colors start at 1.
    pub color: usize,
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkDecomposition {
    pub n: usize,
    pub clusters: Vec<ColoredCluster>,
    /// Number of colors used.
    pub colors: usize,
    /// Largest diameter bound guaranteed by any carving iteration.
    pub diameter_bound: usize,
    /// Unclustered node count at the start of every iteration.
    pub remaining: Vec<usize>,
}

impl NetworkDecomposition {
    /// `(cluster index, color)` per node, `None` for unassigned nodes.
    pub fn assignment(&self) -> Vec<Option<(usize, usize)>> {
        let mut out = vec![None; self.n];
        for (i, c) in self.clusters.iter().enumerate() {
            for &v in &c.nodes {
                if v < self.n {
                    out[v] = Some((i, c.color));
                }
            }
        }
        out
    }
}

/// `ceil(log2 n) + 1`, the color budget of the halving argument.
pub fn color_bound(n: usize) -> usize {
    crate::strong::ceil_log2(n) + 1
}

pub fn decompose(g: &Graph, seed: u64, carver: &dyn StrongCarver) -> Result<(NetworkDecomposition, RoundLedger)> {
    let n = g.n();
    let mut remaining = NodeMask::full(n);
    let mut ledger = RoundLedger::new();
    let mut clusters = Vec::new();
    let mut trace = Vec::new();
    let mut diameter_bound = 0;
    let mut color = 0;
    while !remaining.is_empty() {
        color += 1;
        let alive = remaining.count();
        trace.push(alive);
        let carving = carver.carve(g, &remaining, DECOMPOSITION_EPS, seed::derive(seed, &[color as u64]))?;
        if 2 * carving.dead.len() > alive {
            return Err(Error::Invariant(format!(
                "carving {color} left {} of {alive} nodes dead",
                carving.dead.len()
            )));
        }
        ledger.append(carving.ledger);
        diameter_bound = diameter_bound.max(carving.diameter_bound);
        let mut next = NodeMask::none(n);
        for d in &carving.dead {
            next.insert(d.node);
        }
        for c in carving.clusters {
            clusters.push(ColoredCluster { id: clusters.len(), color, nodes: c.nodes });
        }
        remaining = next;
    }
    let decomposition = NetworkDecomposition { n, clusters, colors: color, diameter_bound, remaining: trace };
    Ok((decomposition, ledger))
}
