use super::{Graph, NodeMask};
use crate::error::{Error, Result};

/// Distance label for nodes the last traversal did not reach.
pub const UNREACHED: usize = usize::MAX;

/// Reusable BFS buffers sized for one graph.
///
/// Resetting touches only the nodes visited by the previous run, so many
/// small traversals over a large graph stay proportional to their own size.
#[derive(Debug, Clone)]
pub struct BfsScratch {
    dist: Vec<usize>,
    parent: Vec<usize>,
    order: Vec<usize>,
}

impl BfsScratch {
    pub fn new(n: usize) -> Self {
        Self { dist: vec![UNREACHED; n], parent: vec![UNREACHED; n], order: Vec::new() }
    }

    fn reset(&mut self) {
        for &v in &self.order {
            self.dist[v] = UNREACHED;
            self.parent[v] = UNREACHED;
        }
        self.order.clear();
    }

    /// Multi-source BFS over the alive subgraph, stopping after layer
    /// `limit` (or at exhaustion when `limit` is `None`).
    ///
    /// Returns cumulative layer sizes `|B_0|, |B_1|, ...` up to the last
    /// non-empty layer within the limit.
    pub fn run(
        &mut self,
        g: &Graph,
        mask: &NodeMask,
        sources: &[usize],
        limit: Option<usize>,
    ) -> Result<Vec<usize>> {
        self.reset();
        if sources.is_empty() {
            return Err(Error::NoSources);
        }
        for &s in sources {
            if s >= g.n() {
                return Err(Error::NodeOutOfRange(s));
            }
            if !mask.is_alive(s) {
                return Err(Error::DeadNode(s));
            }
            if self.dist[s] == UNREACHED {
                self.dist[s] = 0;
                self.order.push(s);
            }
        }
        let mut cumulative = vec![self.order.len()];
        let mut head = 0;
        let mut depth = 0;
        while head < self.order.len() && limit.is_none_or(|l| depth < l) {
            let layer_end = self.order.len();
            while head < layer_end {
                let u = self.order[head];
                head += 1;
                for &w in g.neighbors(u) {
                    if mask.is_alive(w) && self.dist[w] == UNREACHED {
                        self.dist[w] = depth + 1;
                        self.parent[w] = u;
                        self.order.push(w);
                    }
                }
            }
            if self.order.len() == layer_end {
                break;
            }
            depth += 1;
            cumulative.push(self.order.len());
        }
        Ok(cumulative)
    }

    /// Distance from the source set in the last run, or `UNREACHED`.
    #[inline]
    pub fn dist(&self, v: usize) -> usize {
        self.dist[v]
    }

    /// BFS-tree parent in the last run (`UNREACHED` for sources).
    #[inline]
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v]
    }

    /// Nodes reached by the last run, in visit order.
    pub fn visited(&self) -> &[usize] {
        &self.order
    }
}

/// Result of [`bfs_layers`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayers {
    /// `cumulative[r]` = number of alive nodes within distance `r`, for
    /// `r` in `0..=r_max`.
    pub cumulative: Vec<usize>,
    /// Exact distance per node (`None` when unreached within `r_max`).
    pub dist: Vec<Option<usize>>,
}

/// Layer sizes and distance labels of a BFS from `sources` in the alive
/// subgraph, truncated at radius `r_max`.
pub fn bfs_layers(g: &Graph, mask: &NodeMask, sources: &[usize], r_max: usize) -> Result<BfsLayers> {
    let mut scratch = BfsScratch::new(g.n());
    let mut cumulative = scratch.run(g, mask, sources, Some(r_max))?;
    let last = *cumulative.last().unwrap();
    cumulative.resize(r_max + 1, last);
    let dist = (0..g.n())
        .map(|v| Some(scratch.dist(v)).filter(|&d| d != UNREACHED))
        .collect();
    Ok(BfsLayers { cumulative, dist })
}
