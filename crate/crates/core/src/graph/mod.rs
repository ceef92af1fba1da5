//! Undirected simple graphs, alive-node masks and the traversal machinery
//! every algorithm in the crate is built on.

mod bfs;
mod components;
mod diameter;
pub mod generate;
mod io;

pub use bfs::{bfs_layers, BfsLayers, BfsScratch, UNREACHED};
pub use components::connected_components;
pub use diameter::{exact_diameter, induced_diameter};
pub use generate::{BarrierSpec, GraphKind};
pub use io::{parse_graph, write_graph};

use crate::error::{Error, Result};

/// Immutable undirected simple graph on nodes `0..n` in CSR form.
///
/// Neighbor lists are sorted ascending; there are no self-loops and no
/// parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Each edge must appear
    /// once, in either orientation.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::NodeOutOfRange(u));
            }
            if v >= n {
                return Err(Error::NodeOutOfRange(v));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at node {u}")));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &deg {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0usize; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for u in 0..n {
            let adj = &mut targets[offsets[u]..offsets[u + 1]];
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge {{{}, {}}}",
                    u.min(w[0]),
                    u.max(w[0])
                )));
            }
        }
        Ok(Self { offsets, targets })
    }

    pub fn empty(n: usize) -> Self {
        Self { offsets: vec![0; n + 1], targets: Vec::new() }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }
}

/// Alive/dead flag per node. Induced-subgraph views are `(graph, mask)`
/// pairs; traversals only follow alive-to-alive edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeMask {
    alive: Vec<bool>,
    count: usize,
}

impl NodeMask {
    pub fn full(n: usize) -> Self {
        Self { alive: vec![true; n], count: n }
    }

    pub fn none(n: usize) -> Self {
        Self { alive: vec![false; n], count: 0 }
    }

    pub fn from_nodes(n: usize, nodes: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = Self::none(n);
        for v in nodes {
            mask.insert(v);
        }
        mask
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.alive.len()
    }

    #[inline]
    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn insert(&mut self, v: usize) {
        if !self.alive[v] {
            self.alive[v] = true;
            self.count += 1;
        }
    }

    pub fn remove(&mut self, v: usize) {
        if self.alive[v] {
            self.alive[v] = false;
            self.count -= 1;
        }
    }

    /// Alive nodes in ascending order.
    pub fn nodes(&self) -> impl Iterator<Item = usize> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }
}
