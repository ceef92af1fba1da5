//! Seeded graph generators.
//!
//! All generators are deterministic for a fixed seed. The barrier family
//! subdivides every edge of a random regular expander into a path, which
//! stretches every large connected piece to large diameter.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Parameters of a subdivided-expander barrier graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrierSpec {
    /// Node count of the base expander.
    pub base_nodes: usize,
    /// Regularity of the base expander.
    pub degree: usize,
    /// Every base edge becomes a path with this many edges.
    pub subdivision_length: usize,
    pub seed: u64,
}

impl BarrierSpec {
    pub fn node_count(&self) -> usize {
        self.base_nodes + self.base_nodes * self.degree / 2 * (self.subdivision_length - 1)
    }
}

/// Generator families understood by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Path { n: usize },
    Grid { width: usize, height: usize },
    Gnp { n: usize, p: f64 },
    RegularExpander { n: usize, degree: usize },
    Barrier { base_nodes: usize, degree: usize, subdivision_length: usize },
    Complete { n: usize },
    Star { leaves: usize },
}

pub fn generate(kind: GraphKind, seed: u64) -> Result<Graph> {
    match kind {
        GraphKind::Path { n } => Ok(path(n)),
        GraphKind::Grid { width, height } => Ok(grid(width, height)),
        GraphKind::Gnp { n, p } => gnp(n, p, seed),
        GraphKind::RegularExpander { n, degree } => random_regular(n, degree, seed),
        GraphKind::Barrier { base_nodes, degree, subdivision_length } => {
            barrier(&BarrierSpec { base_nodes, degree, subdivision_length, seed })
        }
        GraphKind::Complete { n } => Ok(complete(n)),
        GraphKind::Star { leaves } => Ok(star(leaves)),
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path is simple")
}

/// `width x height` grid; node `(x, y)` has id `y * width + x`.
pub fn grid(width: usize, height: usize) -> Graph {
    let mut edges = Vec::new();
    for y in 0..height {
        for x in 0..width {
            let v = y * width + x;
            if x + 1 < width {
                edges.push((v, v + 1));
            }
            if y + 1 < height {
                edges.push((v, v + width));
            }
        }
    }
    Graph::from_edges(width * height, &edges).expect("grid is simple")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star is simple")
}

/// Erdős–Rényi `G(n, p)`, sampled by geometric skipping over the
/// lexicographic pair order so sparse graphs cost `O(n + m)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    if p == 0.0 || n < 2 {
        return Ok(Graph::empty(n));
    }
    if p == 1.0 {
        return Ok(complete(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let log_q = (1.0 - p).ln();
    let mut edges = Vec::new();
    // Pairs (v, w) with w < v, walked row by row.
    let (mut v, mut w): (usize, isize) = (1, -1);
    while v < n {
        let u: f64 = 1.0 - rng.random::<f64>();
        w += 1 + (u.ln() / log_q).floor() as isize;
        while v < n && w >= v as isize {
            w -= v as isize;
            v += 1;
        }
        if v < n {
            edges.push((w as usize, v));
        }
    }
    Graph::from_edges(n, &edges)
}

const REGULAR_ATTEMPTS: usize = 10_000;

/// Uniform random simple `degree`-regular graph via the configuration
/// model, rejecting pairings with self-loops or parallel edges. Dense
/// degrees are sampled as the complement of a sparse regular graph, where
/// rejection rarely fires.
pub fn random_regular(n: usize, degree: usize, seed: u64) -> Result<Graph> {
    if (n * degree) % 2 == 1 {
        return Err(Error::InvalidParameter(format!("n * degree = {n} * {degree} is odd")));
    }
    if degree >= n && !(n == 0 || degree == 0) {
        return Err(Error::InvalidParameter(format!("degree {degree} needs more than {n} nodes")));
    }
    if n > 0 && 2 * degree >= n {
        let sparse = sample_regular(n, n - 1 - degree, seed)?;
        let mut edges = Vec::with_capacity(n * degree / 2);
        for u in 0..n {
            let nb = sparse.neighbors(u);
            edges.extend((u + 1..n).filter(|v| nb.binary_search(v).is_err()).map(|v| (u, v)));
        }
        return Graph::from_edges(n, &edges);
    }
    sample_regular(n, degree, seed)
}

fn sample_regular(n: usize, degree: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, degree)).collect();
    'attempt: for _ in 0..REGULAR_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(stubs.len() / 2);
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::from_edges(n, &edges);
    }
    Err(Error::InvalidParameter(format!(
        "no simple {degree}-regular graph on {n} nodes after {REGULAR_ATTEMPTS} attempts"
    )))
}

/// Replaces every edge of `base` by a path of `length` edges. Internal
/// path nodes are numbered after the base nodes, edge by edge in
/// lexicographic edge order.
pub fn subdivide(base: &Graph, length: usize) -> Result<Graph> {
    if length == 0 {
        return Err(Error::InvalidParameter("subdivision length must be at least 1".into()));
    }
    let internal = length - 1;
    let n = base.n() + base.m() * internal;
    let mut edges = Vec::with_capacity(base.m() * length);
    let mut next = base.n();
    for (u, v) in base.edges() {
        let mut prev = u;
        for _ in 0..internal {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn barrier(spec: &BarrierSpec) -> Result<Graph> {
    if spec.degree < 3 {
        return Err(Error::InvalidParameter(format!("barrier degree {} < 3", spec.degree)));
    }
    let base = random_regular(spec.base_nodes, spec.degree, spec.seed)?;
    subdivide(&base, spec.subdivision_length)
}
