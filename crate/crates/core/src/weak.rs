//! Weak-diameter ball carving: the black-box contract consumed by the
//! strong-diameter transformation, with two instances.
//!
//! A weak carving removes at most an `eps` fraction of the alive nodes and
//! groups the rest into pairwise non-adjacent clusters. Each cluster comes
//! with a Steiner tree whose terminals are the cluster's nodes; the tree may
//! pass through nodes outside the cluster but stays inside the cluster's
//! connected component.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use serde::{Deserialize, Serialize};

use crate::error::{check_eps, Error, Result};
use crate::graph::{connected_components, BfsScratch, Graph, NodeMask, UNREACHED};
use crate::ledger::{RoundLedger, LABEL_WEAK_CARVE};
use crate::seed;

/// Rooted tree given by child-to-parent edges, sorted by child.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinerTree {
    pub root: usize,
    pub parent: Vec<(usize, usize)>,
    pub terminals: Vec<usize>,
}

impl SteinerTree {
    /// Builds the tree spanned by the root paths of `terminals` under a
    /// BFS parent function.
    pub fn from_parents(root: usize, terminals: Vec<usize>, parent_of: impl Fn(usize) -> usize) -> Self {
        let mut parent = HashMap::new();
        for &t in &terminals {
            let mut v = t;
            while v != root && !parent.contains_key(&v) {
                let p = parent_of(v);
                parent.insert(v, p);
                v = p;
            }
        }
        let mut parent: Vec<_> = parent.into_iter().collect();
        parent.sort_unstable();
        Self { root, parent, terminals }
    }

    /// Depth of every tree node, or `None` if the parent edges do not form
    /// a tree hanging from the root.
    pub fn depths(&self) -> Option<HashMap<usize, usize>> {
        let map: HashMap<usize, usize> = self.parent.iter().copied().collect();
        if map.len() != self.parent.len() || map.contains_key(&self.root) {
            return None;
        }
        let mut depth = HashMap::with_capacity(map.len() + 1);
        depth.insert(self.root, 0usize);
        for &(start, _) in &self.parent {
            let mut chain = Vec::new();
            let mut v = start;
            while !depth.contains_key(&v) {
                if chain.len() > map.len() {
                    return None;
                }
                chain.push(v);
                v = *map.get(&v)?;
            }
            let mut d = depth[&v];
            for &u in chain.iter().rev() {
                d += 1;
                depth.insert(u, d);
            }
        }
        Some(depth)
    }

    /// Maximum root-to-terminal distance in the tree.
    pub fn depth(&self) -> Option<usize> {
        let depths = self.depths()?;
        self.terminals.iter().map(|t| depths.get(t).copied()).try_fold(0, |acc, d| Some(acc.max(d?)))
    }

    /// Tree edges as `(min, max)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().map(|&(c, p)| (c.min(p), c.max(p)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakCluster {
    pub nodes: Vec<usize>,
    pub tree: SteinerTree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakCarving {
    pub clusters: Vec<WeakCluster>,
    pub dead: Vec<usize>,
    /// Upper bound on every Steiner tree's depth.
    pub declared_depth: usize,
    /// Upper bound on the number of trees sharing an edge.
    pub declared_congestion: usize,
}

/// A weak-diameter ball carving algorithm.
pub trait WeakCarver: Sync {
    fn carve(&self, g: &Graph, mask: &NodeMask, eps: f64, seed: u64) -> Result<(WeakCarving, RoundLedger)>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeakCarverKind {
    /// One cluster per connected component, nothing removed.
    Trivial,
    /// Randomized geometric-radius ball growing.
    LinialSaks,
}

impl WeakCarver for WeakCarverKind {
    fn carve(&self, g: &Graph, mask: &NodeMask, eps: f64, seed: u64) -> Result<(WeakCarving, RoundLedger)> {
        weak_carve(g, mask, eps, seed, *self)
    }
}

pub fn weak_carve(
    g: &Graph,
    mask: &NodeMask,
    eps: f64,
    seed: u64,
    kind: WeakCarverKind,
) -> Result<(WeakCarving, RoundLedger)> {
    check_eps(eps)?;
    if mask.is_empty() {
        return Err(Error::Empty("weak carving needs alive nodes"));
    }
    match kind {
        WeakCarverKind::Trivial => Ok(trivial(g, mask)),
        WeakCarverKind::LinialSaks => Ok(linial_saks(g, mask, eps, seed)),
    }
}

fn trivial(g: &Graph, mask: &NodeMask) -> (WeakCarving, RoundLedger) {
    let mut scratch = BfsScratch::new(g.n());
    let mut clusters = Vec::new();
    let mut depth = 0;
    for comp in connected_components(g, mask) {
        let root = comp[0];
        let layers = scratch.run(g, mask, &[root], None).expect("alive root");
        depth = depth.max(layers.len() - 1);
        let tree = SteinerTree::from_parents(root, comp.clone(), |v| scratch.parent(v));
        clusters.push(WeakCluster { nodes: comp, tree });
    }
    let mut ledger = RoundLedger::new();
    ledger.charge_coordination(depth as u64);
    let carving = WeakCarving { clusters, dead: Vec::new(), declared_depth: depth, declared_congestion: 1 };
    (carving, ledger)
}

const LS_ATTEMPTS: u64 = 8;

/// Radius cap `ceil(2 ln(alive) / eps)`.
pub fn linial_saks_radius_cap(alive: usize, eps: f64) -> usize {
    (2.0 * (alive as f64).ln() / eps).ceil().max(0.0) as usize
}

/// Every alive node draws a radius from a geometric distribution with
/// success probability `eps / 2`, truncated at the radius cap. A node
/// joins the highest-id node whose ball reaches it and is removed when it
/// sits exactly on that ball's boundary. Attempts that remove more than
/// `eps` of the nodes are redrawn; after `LS_ATTEMPTS` failures the
/// trivial carving is returned.
fn linial_saks(g: &Graph, mask: &NodeMask, eps: f64, seed: u64) -> (WeakCarving, RoundLedger) {
    let alive = mask.count();
    let r_cap = linial_saks_radius_cap(alive, eps);
    let mut ledger = RoundLedger::new();
    for attempt in 0..LS_ATTEMPTS {
        ledger.charge(LABEL_WEAK_CARVE, r_cap as u64);
        let carving = linial_saks_attempt(g, mask, eps, r_cap, seed::derive(seed, &[attempt]));
        if carving.dead.len() as f64 <= eps * alive as f64 {
            return (carving, ledger);
        }
    }
    let (carving, fallback) = trivial(g, mask);
    ledger.append(fallback);
    (carving, ledger)
}

fn linial_saks_attempt(g: &Graph, mask: &NodeMask, eps: f64, r_cap: usize, seed: u64) -> WeakCarving {
    let n = g.n();
    let geo = Geometric::new(eps / 2.0).expect("probability in (0, 1)");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut radius = vec![0usize; n];
    for v in mask.nodes() {
        radius[v] = (geo.sample(&mut rng) as usize).min(r_cap);
    }

    // Largest remaining slack with which any processed broadcaster reached
    // the node; -1 when unreached.
    let mut best: Vec<isize> = vec![-1; n];
    let mut owner = vec![UNREACHED; n];
    let mut stamp = vec![usize::MAX; n];
    let mut parent = vec![UNREACHED; n];
    let mut queue: Vec<(usize, usize)> = Vec::new();

    let mut clusters = Vec::new();
    let mut dead = Vec::new();
    let alive: Vec<usize> = mask.nodes().collect();
    for &v in alive.iter().rev() {
        let r = radius[v];
        queue.clear();
        stamp[v] = v;
        queue.push((v, 0));
        let mut head = 0;
        let mut members = Vec::new();
        while head < queue.len() {
            let (x, d) = queue[head];
            head += 1;
            let slack = (r - d) as isize;
            if slack <= best[x] {
                continue;
            }
            best[x] = slack;
            if owner[x] == UNREACHED {
                owner[x] = v;
                if slack == 0 {
                    dead.push(x);
                } else {
                    members.push(x);
                }
            }
            if slack > 0 {
                for &y in g.neighbors(x) {
                    if mask.is_alive(y) && stamp[y] != v {
                        stamp[y] = v;
                        parent[y] = x;
                        queue.push((y, d + 1));
                    }
                }
            }
        }
        if !members.is_empty() {
            members.sort_unstable();
            let tree = SteinerTree::from_parents(v, members.clone(), |x| parent[x]);
            clusters.push(WeakCluster { nodes: members, tree });
        }
    }
    clusters.sort_by_key(|c| c.nodes[0]);
    dead.sort_unstable();

    let mut load: HashMap<(usize, usize), usize> = HashMap::new();
    let mut depth = 0;
    for c in &clusters {
        depth = depth.max(c.tree.depth().expect("bfs tree"));
        for e in c.tree.edges() {
            *load.entry(e).or_default() += 1;
        }
    }
    let congestion = load.values().copied().max().unwrap_or(1);
    WeakCarving { clusters, dead, declared_depth: depth, declared_congestion: congestion }
}
