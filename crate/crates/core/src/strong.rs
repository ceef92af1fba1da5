//! Weak-to-strong transformation.
//!
//! Each iteration runs the weak black box on every alive component `S`
//! with a tiny boundary budget. If one cluster holds more than `n / 2^i`
//! nodes, a ball is grown from its Steiner root in `G[S]` until the next
//! layer adds at most an `eps / 2` fraction, the ball becomes an output
//! cluster and its outer layer dies. Otherwise the unclustered nodes die
//! and every surviving component already fits in one weak cluster. Either
//! way components halve, so `ceil(log2 n)` iterations suffice.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_eps, Error, Result};
use crate::graph::{connected_components, BfsScratch, Graph, NodeMask};
use crate::ledger::{merge_parallel, RoundLedger};
use crate::seed;
use crate::weak::{WeakCarver, WeakCarving};

/// All constants of one transformation run, derived from `(n, eps)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CarvingParams {
    pub n: usize,
    pub eps: f64,
    /// Boundary budget handed to the black box in every iteration.
    pub eps_prime: f64,
    pub max_iterations: usize,
    /// Maximum number of radius-growth steps past the Steiner depth.
    pub growth_cap: usize,
    /// A layer counts as growth when it multiplies the ball by more than this.
    pub ratio_threshold: f64,
}

impl CarvingParams {
    pub fn new(n: usize, eps: f64) -> Result<Self> {
        check_eps(eps)?;
        let max_iterations = ceil_log2(n).max(1);
        let keep = 1.0 - eps / 2.0;
        let growth_cap = ((n.max(1) as f64).ln() / -keep.ln()).ceil() as usize + 1;
        Ok(Self {
            n,
            eps,
            eps_prime: eps / (2.0 * max_iterations as f64),
            max_iterations,
            growth_cap,
            ratio_threshold: 1.0 / keep,
        })
    }
}

pub(crate) fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeadCause {
    /// Left unclustered by the weak black box.
    BlackBox,
    /// Outer layer of a carved ball.
    Boundary,
    /// Separator layer of a balanced sparse cut.
    Separator,
    /// Neighbors of an extracted small-diameter component.
    Halo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeadNode {
    pub node: usize,
    pub cause: DeadCause,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongCluster {
    pub nodes: Vec<usize>,
    pub center: usize,
    /// Eccentricity of `center` inside the cluster; the strong diameter is
    /// at most twice this.
    pub radius: usize,
}

/// One component visited at the start of an iteration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterationRecord {
    /// Size of the top-level component this one descends from.
    pub entry_size: usize,
    pub iteration: usize,
    pub size: usize,
    /// Radius `r*` of the carved ball, when a giant cluster was found.
    pub ball_radius: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrongCarving {
    pub clusters: Vec<StrongCluster>,
    pub dead: Vec<DeadNode>,
    pub ledger: RoundLedger,
    /// Guaranteed upper bound on every cluster's strong diameter.
    pub diameter_bound: usize,
    /// Largest Steiner depth declared by any black-box call.
    pub black_box_depth: usize,
    pub trace: Vec<IterationRecord>,
    /// Deepest recursion level reached (refinement only).
    pub max_depth: usize,
}

impl StrongCarving {
    pub(crate) fn empty() -> Self {
        Self {
            clusters: Vec::new(),
            dead: Vec::new(),
            ledger: RoundLedger::new(),
            diameter_bound: 0,
            black_box_depth: 0,
            trace: Vec::new(),
            max_depth: 0,
        }
    }

    pub fn dead_count(&self, cause: DeadCause) -> usize {
        self.dead.iter().filter(|d| d.cause == cause).count()
    }

    /// Sorts clusters by smallest node and dead nodes by id.
    pub(crate) fn normalize(&mut self) {
        self.clusters.sort_by_key(|c| c.nodes[0]);
        self.dead.sort_by_key(|d| d.node);
    }
}

/// A strong-diameter ball carving algorithm.
pub trait StrongCarver: Sync {
    fn carve(&self, g: &Graph, mask: &NodeMask, eps: f64, seed: u64) -> Result<StrongCarving>;

    /// Diameter bound this carver guarantees on graphs with `n` alive nodes.
    fn diameter_bound(&self, n: usize, eps: f64) -> Option<usize>;
}

/// The weak-to-strong transformation around a weak black box.
#[derive(Debug, Clone, Copy)]
pub struct Transformation<W> {
    pub black_box: W,
}

impl<W: WeakCarver> StrongCarver for Transformation<W> {
    fn carve(&self, g: &Graph, mask: &NodeMask, eps: f64, seed: u64) -> Result<StrongCarving> {
        carve_strong(g, mask, eps, seed, &self.black_box)
    }

    fn diameter_bound(&self, _n: usize, _eps: f64) -> Option<usize> {
        None
    }
}

/// Ball grown by [`grow_ball`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallGrowth {
    pub radius: usize,
    pub ball: Vec<usize>,
    pub boundary: Vec<usize>,
}

/// Smallest `r` in `[r_start, r_start + growth_cap]` with
/// `|B_r(center)| >= (1 - eps/2) |B_{r+1}(center)|` in the alive subgraph.
pub fn grow_ball(
    g: &Graph,
    mask: &NodeMask,
    center: usize,
    r_start: usize,
    growth_cap: usize,
    eps: f64,
) -> Result<BallGrowth> {
    check_eps(eps)?;
    if growth_cap == 0 {
        return Err(Error::InvalidParameter("growth cap must be at least 1".into()));
    }
    if center >= g.n() {
        return Err(Error::NodeOutOfRange(center));
    }
    if !mask.is_alive(center) {
        return Err(Error::DeadNode(center));
    }
    let mut scratch = BfsScratch::new(g.n());
    let sizes = scratch.run(g, mask, &[center], Some(r_start + growth_cap + 1))?;
    let size = |r: usize| sizes[r.min(sizes.len() - 1)] as f64;
    let keep = 1.0 - eps / 2.0;
    let radius = (r_start..=r_start + growth_cap)
        .find(|&r| size(r) >= keep * size(r + 1))
        .ok_or_else(|| {
            Error::Invariant(format!(
                "no sparse layer within {growth_cap} growth steps from radius {r_start}"
            ))
        })?;
    let mut ball = Vec::new();
    let mut boundary = Vec::new();
    for &v in scratch.visited() {
        let d = scratch.dist(v);
        if d <= radius {
            ball.push(v);
        } else if d == radius + 1 {
            boundary.push(v);
        }
    }
    ball.sort_unstable();
    boundary.sort_unstable();
    Ok(BallGrowth { radius, ball, boundary })
}

/// Index of the unique cluster with more than `size_threshold` nodes.
pub fn detect_giant(carving: &WeakCarving, size_threshold: usize) -> Result<Option<usize>> {
    let mut big = carving.clusters.iter().enumerate().filter(|(_, c)| c.nodes.len() > size_threshold);
    let first = big.next().map(|(i, _)| i);
    if let Some((j, _)) = big.next() {
        return Err(Error::Invariant(format!(
            "clusters {} and {j} both exceed {size_threshold} nodes",
            first.unwrap()
        )));
    }
    Ok(first)
}

/// Strong-diameter ball carving built from a weak black box.
pub fn carve_strong(
    g: &Graph,
    mask: &NodeMask,
    eps: f64,
    seed: u64,
    black_box: &dyn WeakCarver,
) -> Result<StrongCarving> {
    check_eps(eps)?;
    let comps = connected_components(g, mask);
    if comps.is_empty() {
        return Ok(StrongCarving::empty());
    }
    let parts = comps
        .into_par_iter()
        .map(|comp| {
            let params = CarvingParams::new(comp.len(), eps)?;
            let run = Run { g, params, seed, black_box };
            let part = run.component(comp, 1)?;
            Ok((part, params.growth_cap))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut out = StrongCarving::empty();
    let mut ledgers = Vec::with_capacity(parts.len());
    let mut growth_cap = 0;
    for (part, k) in parts {
        out.clusters.extend(part.clusters);
        out.dead.extend(part.dead);
        out.trace.extend(part.trace);
        out.black_box_depth = out.black_box_depth.max(part.black_box_depth);
        growth_cap = growth_cap.max(k);
        ledgers.push(part.ledger);
    }
    out.ledger = merge_parallel(ledgers)?;
    out.diameter_bound = 2 * out.black_box_depth + 2 * growth_cap;
    out.normalize();
    Ok(out)
}

struct Part {
    clusters: Vec<StrongCluster>,
    dead: Vec<DeadNode>,
    ledger: RoundLedger,
    trace: Vec<IterationRecord>,
    black_box_depth: usize,
}

struct Run<'a> {
    g: &'a Graph,
    params: CarvingParams,
    seed: u64,
    black_box: &'a dyn WeakCarver,
}

impl Run<'_> {
    /// Handles connected component `comp` from iteration `iteration` on.
    fn component(&self, comp: Vec<usize>, iteration: usize) -> Result<Part> {
        let g = self.g;
        let n = g.n();
        let mut part = Part {
            clusters: Vec::new(),
            dead: Vec::new(),
            ledger: RoundLedger::new(),
            trace: vec![IterationRecord {
                entry_size: self.params.n,
                iteration,
                size: comp.len(),
                ball_radius: None,
            }],
            black_box_depth: 0,
        };
        if iteration > self.params.max_iterations {
            // At most n / 2^I_max <= 1 node is left.
            let (center, radius) = center_radius(g, &comp);
            part.clusters.push(StrongCluster { nodes: comp, center, radius });
            return Ok(part);
        }

        let mask = NodeMask::from_nodes(n, comp.iter().copied());
        let wseed = seed::derive(self.seed, &[iteration as u64, comp[0] as u64]);
        let (weak, weak_ledger) = self.black_box.carve(g, &mask, self.params.eps_prime, wseed)?;
        part.ledger.append(weak_ledger);
        part.ledger
            .charge_steiner_aggregate(weak.declared_depth as u64, weak.declared_congestion as u64);
        part.black_box_depth = weak.declared_depth;

        let mut rest = mask.clone();
        match detect_giant(&weak, self.params.n >> iteration)? {
            None => {
                for &v in &weak.dead {
                    rest.remove(v);
                    part.dead.push(DeadNode { node: v, cause: DeadCause::BlackBox });
                }
            }
            Some(idx) => {
                let giant = &weak.clusters[idx];
                let r_start = giant.tree.depth().ok_or_else(|| {
                    Error::Invariant("black box returned a malformed Steiner tree".into())
                })?;
                let grown =
                    grow_ball(g, &mask, giant.tree.root, r_start, self.params.growth_cap, self.params.eps)?;
                part.ledger.charge_bfs(grown.radius as u64 + 1);
                part.trace[0].ball_radius = Some(grown.radius);
                for &v in grown.ball.iter().chain(&grown.boundary) {
                    rest.remove(v);
                }
                part.dead.extend(grown.boundary.iter().map(|&v| DeadNode { node: v, cause: DeadCause::Boundary }));
                let (center, radius) = (giant.tree.root, ball_radius(g, &grown.ball, giant.tree.root));
                part.clusters.push(StrongCluster { nodes: grown.ball, center, radius });
            }
        }

        let children = connected_components(g, &rest)
            .into_par_iter()
            .map(|c| self.component(c, iteration + 1))
            .collect::<Result<Vec<_>>>()?;
        if !children.is_empty() {
            let mut ledgers = Vec::with_capacity(children.len());
            for child in children {
                part.clusters.extend(child.clusters);
                part.dead.extend(child.dead);
                part.trace.extend(child.trace);
                part.black_box_depth = part.black_box_depth.max(child.black_box_depth);
                ledgers.push(child.ledger);
            }
            part.ledger.append(merge_parallel(ledgers)?);
        }
        Ok(part)
    }
}

/// Eccentricity of `center` inside `G[nodes]`.
pub(crate) fn ball_radius(g: &Graph, nodes: &[usize], center: usize) -> usize {
    let mask = NodeMask::from_nodes(g.n(), nodes.iter().copied());
    let mut scratch = BfsScratch::new(g.n());
    scratch.run(g, &mask, &[center], None).expect("center alive").len() - 1
}

/// Smallest node of a connected set and its eccentricity inside the set.
pub(crate) fn center_radius(g: &Graph, nodes: &[usize]) -> (usize, usize) {
    let center = *nodes.iter().min().expect("non-empty cluster");
    (center, ball_radius(g, nodes, center))
}
