//! Diameter refinement.
//!
//! [`cut_or_cluster`] either splits a connected graph along a sparse BFS
//! layer into two balanced, non-adjacent sides, or finds a ball of
//! polylogarithmic radius holding a third of the nodes. It keeps a source
//! set `S` and halves it while the radii `a` (reach `n/3`) and `b` (reach
//! `2n/3`) of `S` stay close; once `b - a` is large, some layer between
//! them is sparse.
//!
//! [`refine`] wraps any strong carver: carve with a small budget, run
//! `cut_or_cluster` inside every cluster, keep extracted balls, and recurse
//! on the leftover pieces, each at most two thirds of its parent cluster.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_eps, Error, Result};
use crate::graph::{BfsScratch, Graph, NodeMask};
use crate::ledger::{merge_parallel, RoundLedger};
use crate::seed;
use crate::strong::{ceil_log2, DeadCause, DeadNode, StrongCarver, StrongCarving, StrongCluster};

pub const DEFAULT_LAYER_CONSTANT: f64 = 8.0;

/// Thresholds of one [`cut_or_cluster`] call on an `n`-node graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LayerParams {
    pub n: usize,
    pub eps: f64,
    pub layer_constant: f64,
    /// A layer is sparse when it grows the ball by at most this factor.
    pub sparse_ratio: f64,
    /// `b - a` at or above this forces a cut.
    pub cut_threshold: usize,
    /// Number of layers scanned around the final single source.
    pub final_window: usize,
    /// Bound on the number of halving steps.
    pub max_halvings: usize,
}

impl LayerParams {
    pub fn new(n: usize, eps: f64, layer_constant: f64) -> Result<Self> {
        check_eps(eps)?;
        if !(layer_constant.is_finite() && layer_constant > 0.0) {
            return Err(Error::InvalidParameter(format!("layer constant {layer_constant}")));
        }
        // ln n is clamped at ln 2; one- and two-node graphs never reach the
        // layer arithmetic anyway.
        let ln_n = (n.max(2) as f64).ln();
        let x = eps / (layer_constant * ln_n);
        let sparse_ratio = 1.0 + x;
        let cut_threshold = (std::f64::consts::LN_2 / x).ceil() as usize + 2;
        let final_window = (3f64.ln() / sparse_ratio.ln()).ceil() as usize + 1;
        Ok(Self {
            n,
            eps,
            layer_constant,
            sparse_ratio,
            cut_threshold,
            final_window,
            max_halvings: ceil_log2(n) + 1,
        })
    }

    /// Largest separator or halo the guarantees allow.
    pub fn max_removed(&self) -> f64 {
        (self.sparse_ratio - 1.0) * self.n as f64
    }

    /// Diameter bound for the component outcome: `2 (a_final + K_L)` with
    /// `a_final <= H * cut_threshold`.
    pub fn component_diameter_bound(&self) -> usize {
        2 * (self.max_halvings * self.cut_threshold + self.final_window)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum CutOrCluster {
    /// Two non-adjacent sides of at least `n/3` nodes and the layer between them.
    Cut { side_a: Vec<usize>, side_b: Vec<usize>, separator: Vec<usize> },
    /// Ball `nodes` of radius `radius` around `center`, and its outer layer.
    Component { nodes: Vec<usize>, halo: Vec<usize>, center: usize, radius: usize },
}

/// Source set of the halving search with its two reach radii.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalvingState {
    /// Sources, kept in BFS-tree preorder so halves are prefix/suffix.
    pub sources: Vec<usize>,
    /// Smallest radius whose neighborhood holds at least `n/3` nodes.
    pub a: usize,
    /// Smallest radius whose neighborhood holds at least `2n/3` nodes.
    pub b: usize,
    pub iteration: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutOrClusterReport {
    pub outcome: CutOrCluster,
    pub ledger: RoundLedger,
    pub params: LayerParams,
    /// Every halving state, starting with `S = V`.
    pub history: Vec<HalvingState>,
}

impl CutOrClusterReport {
    pub fn halvings(&self) -> usize {
        self.history.len() - 1
    }

    pub fn final_a(&self) -> usize {
        self.history.last().unwrap().a
    }
}

/// `r*` minimizing `sizes[i+1] / sizes[i]`, where `sizes[i] = |B_{lo+i}|`.
/// Ties go to the smallest radius.
pub fn min_ratio_layer(sizes: &[usize], lo: usize) -> Result<usize> {
    if sizes.len() < 2 {
        return Err(Error::Empty("min_ratio_layer needs at least two layer sizes"));
    }
    if sizes[0] == 0 || sizes.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidParameter("layer sizes must be positive and non-decreasing".into()));
    }
    let mut best = 0;
    for i in 1..sizes.len() - 1 {
        // sizes[i+1]/sizes[i] < sizes[best+1]/sizes[best]
        if (sizes[i + 1] as u128) * (sizes[best] as u128) < (sizes[best + 1] as u128) * (sizes[i] as u128) {
            best = i;
        }
    }
    Ok(lo + best)
}

/// Reach radii `(a, b)` of `sources` in a connected alive subgraph.
pub fn reach_radii(g: &Graph, mask: &NodeMask, sources: &[usize]) -> Result<(usize, usize)> {
    let n = mask.count();
    let mut scratch = BfsScratch::new(g.n());
    let sizes = scratch.run(g, mask, sources, None)?;
    if *sizes.last().unwrap() != n {
        return Err(Error::Disconnected);
    }
    let a = sizes.iter().position(|&s| 3 * s >= n).unwrap();
    let b = sizes.iter().position(|&s| 3 * s >= 2 * n).unwrap();
    Ok((a, b))
}

/// Splits the sources in preorder halves and keeps the half with the
/// smaller `a` (ties keep the second half).
pub fn halve_sources(g: &Graph, mask: &NodeMask, state: &HalvingState) -> Result<HalvingState> {
    let len = state.sources.len();
    if len < 2 {
        return Err(Error::InvalidParameter(format!("cannot halve a source set of size {len}")));
    }
    let (first, second) = state.sources.split_at(len.div_ceil(2));
    let (a1, b1) = reach_radii(g, mask, first)?;
    let (a2, b2) = reach_radii(g, mask, second)?;
    if a1.min(a2) > state.b {
        return Err(Error::Invariant(format!(
            "halving radii {a1}, {a2} both exceed b = {}",
            state.b
        )));
    }
    let (sources, a, b) = if a1 < a2 { (first, a1, b1) } else { (second, a2, b2) };
    Ok(HalvingState { sources: sources.to_vec(), a, b, iteration: state.iteration + 1 })
}

/// Nodes of a connected alive subgraph in preorder of the BFS tree from the
/// smallest node, children in ascending order. Also returns that node's
/// eccentricity.
fn tree_preorder(g: &Graph, mask: &NodeMask) -> (Vec<usize>, usize) {
    let root = mask.nodes().next().unwrap();
    let mut scratch = BfsScratch::new(g.n());
    let ecc = scratch.run(g, mask, &[root], None).unwrap().len() - 1;
    let mut children: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for &v in scratch.visited().iter().skip(1) {
        children.entry(scratch.parent(v)).or_default().push(v);
    }
    let mut order = Vec::with_capacity(mask.count());
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        order.push(v);
        if let Some(ch) = children.get_mut(&v) {
            ch.sort_unstable();
            stack.extend(ch.iter().rev());
        }
    }
    (order, ecc)
}

fn sparse_enough(sizes: &[usize], r: usize, lo: usize, ratio: f64) -> bool {
    let (inner, outer) = (sizes[r - lo] as f64, sizes[r - lo + 1] as f64);
    outer <= ratio * inner * (1.0 + 1e-12)
}

pub fn cut_or_cluster(g: &Graph, mask: &NodeMask, eps: f64) -> Result<CutOrClusterReport> {
    cut_or_cluster_with(g, mask, eps, DEFAULT_LAYER_CONSTANT)
}

pub fn cut_or_cluster_with(g: &Graph, mask: &NodeMask, eps: f64, layer_constant: f64) -> Result<CutOrClusterReport> {
    check_eps(eps)?;
    let n = mask.count();
    if n == 0 {
        return Err(Error::Empty("cut_or_cluster needs alive nodes"));
    }
    let params = LayerParams::new(n, eps, layer_constant)?;
    let (order, ecc) = tree_preorder(g, mask);
    if order.len() != n {
        return Err(Error::Disconnected);
    }
    let mut ledger = RoundLedger::new();
    let (a, b) = reach_radii(g, mask, &order)?;
    let mut history = vec![HalvingState { sources: order, a, b, iteration: 0 }];
    let mut scratch = BfsScratch::new(g.n());

    loop {
        ledger.charge_coordination(ecc as u64);
        let state = history.last().unwrap();
        if state.b - state.a >= params.cut_threshold {
            let sizes = scratch.run(g, mask, &state.sources, Some(state.b - 1))?;
            let window = &sizes[state.a..state.b];
            let r = min_ratio_layer(window, state.a)?;
            if !sparse_enough(window, r, state.a, params.sparse_ratio) {
                return Err(Error::Invariant(format!("no sparse layer between radii {} and {}", state.a, state.b)));
            }
            let (mut side_a, mut separator) = (Vec::new(), Vec::new());
            for &v in scratch.visited() {
                match scratch.dist(v) {
                    d if d <= r => side_a.push(v),
                    d if d == r + 1 => separator.push(v),
                    _ => {}
                }
            }
            let side_b: Vec<usize> = mask.nodes().filter(|&v| scratch.dist(v) > r + 1).collect();
            side_a.sort_unstable();
            separator.sort_unstable();
            let outcome = CutOrCluster::Cut { side_a, side_b, separator };
            return Ok(CutOrClusterReport { outcome, ledger, params, history });
        }
        if state.sources.len() == 1 {
            break;
        }
        let next = halve_sources(g, mask, state)?;
        history.push(next);
    }

    let state = history.last().unwrap();
    let center = state.sources[0];
    let mut sizes = scratch.run(g, mask, &[center], None)?;
    let center_ecc = sizes.len() - 1;
    // Past the eccentricity every ratio is 1; one saturated entry suffices.
    sizes.push(n);
    let hi = (state.a + params.final_window).min(center_ecc + 1);
    let window = &sizes[state.a..=hi];
    let r = min_ratio_layer(window, state.a)?;
    if !sparse_enough(window, r, state.a, params.sparse_ratio) {
        return Err(Error::Invariant(format!("no sparse layer within {} layers of {}", params.final_window, state.a)));
    }
    ledger.charge_bfs((r + 1).min(center_ecc) as u64);
    let (mut nodes, mut halo) = (Vec::new(), Vec::new());
    for &v in scratch.visited() {
        match scratch.dist(v) {
            d if d <= r => nodes.push(v),
            d if d == r + 1 => halo.push(v),
            _ => {}
        }
    }
    nodes.sort_unstable();
    halo.sort_unstable();
    let outcome = CutOrCluster::Component { nodes, halo, center, radius: r.min(center_ecc) };
    Ok(CutOrClusterReport { outcome, ledger, params, history })
}

/// `ceil(ln n / ln(3/2))`, at least 1: parts shrink by 2/3 per level.
pub fn max_levels(n: usize) -> usize {
    ((n.max(1) as f64).ln() / 1.5f64.ln()).ceil().max(1.0) as usize
}

/// Budget handed to the inner carver and to `cut_or_cluster` per level.
pub fn level_eps(n: usize, eps: f64) -> f64 {
    eps / (4.0 * max_levels(n) as f64)
}

/// Diameter bound of [`refine`] on `n` alive nodes.
pub fn refined_diameter_bound(n: usize, eps: f64) -> Result<usize> {
    check_eps(eps)?;
    Ok(LayerParams::new(n, level_eps(n, eps), DEFAULT_LAYER_CONSTANT)?.component_diameter_bound())
}

/// A strong carver followed by diameter refinement.
#[derive(Debug, Clone, Copy)]
pub struct Refined<C> {
    pub inner: C,
}

impl<C: StrongCarver> StrongCarver for Refined<C> {
    fn carve(&self, g: &Graph, mask: &NodeMask, eps: f64, seed: u64) -> Result<StrongCarving> {
        refine(g, mask, eps, seed, &self.inner)
    }

    fn diameter_bound(&self, n: usize, eps: f64) -> Option<usize> {
        refined_diameter_bound(n, eps).ok()
    }
}

pub fn refine(g: &Graph, mask: &NodeMask, eps: f64, seed: u64, carver: &dyn StrongCarver) -> Result<StrongCarving> {
    check_eps(eps)?;
    let n = mask.count();
    if n == 0 {
        return Ok(StrongCarving::empty());
    }
    let run = RefineRun { g, eps_level: level_eps(n, eps), seed, carver };
    let mut out = run.part(mask.nodes().collect(), 0)?;
    out.diameter_bound = refined_diameter_bound(n, eps)?;
    out.normalize();
    Ok(out)
}

struct RefineRun<'a> {
    g: &'a Graph,
    eps_level: f64,
    seed: u64,
    carver: &'a dyn StrongCarver,
}

impl RefineRun<'_> {
    fn part(&self, nodes: Vec<usize>, level: usize) -> Result<StrongCarving> {
        let mut out = StrongCarving::empty();
        if nodes.is_empty() {
            return Ok(out);
        }
        out.max_depth = level;
        let n = self.g.n();
        let mask = NodeMask::from_nodes(n, nodes.iter().copied());
        let pseed = seed::derive(self.seed, &[level as u64, nodes[0] as u64]);
        let carved = self.carver.carve(self.g, &mask, self.eps_level, pseed)?;
        out.dead = carved.dead;
        out.trace = carved.trace;
        out.black_box_depth = carved.black_box_depth;
        out.ledger = carved.ledger;

        let branches = carved
            .clusters
            .into_par_iter()
            .map(|cluster| self.cluster(cluster, level))
            .collect::<Result<Vec<_>>>()?;
        let mut ledgers = Vec::with_capacity(branches.len());
        for b in branches {
            out.clusters.extend(b.clusters);
            out.dead.extend(b.dead);
            out.trace.extend(b.trace);
            out.black_box_depth = out.black_box_depth.max(b.black_box_depth);
            out.max_depth = out.max_depth.max(b.max_depth);
            ledgers.push(b.ledger);
        }
        if !ledgers.is_empty() {
            out.ledger.append(merge_parallel(ledgers)?);
        }
        Ok(out)
    }

    fn cluster(&self, cluster: StrongCluster, level: usize) -> Result<StrongCarving> {
        let n = self.g.n();
        let mask = NodeMask::from_nodes(n, cluster.nodes.iter().copied());
        let report = cut_or_cluster(self.g, &mask, self.eps_level)?;
        let mut out = StrongCarving::empty();
        out.max_depth = level;
        out.ledger = report.ledger;
        let children = match report.outcome {
            CutOrCluster::Cut { side_a, side_b, separator } => {
                out.dead.extend(separator.into_iter().map(|v| DeadNode { node: v, cause: DeadCause::Separator }));
                vec![side_a, side_b]
            }
            CutOrCluster::Component { nodes, halo, center, radius } => {
                let mut rest = mask;
                for &v in nodes.iter().chain(&halo) {
                    rest.remove(v);
                }
                out.dead.extend(halo.into_iter().map(|v| DeadNode { node: v, cause: DeadCause::Halo }));
                out.clusters.push(StrongCluster { nodes, center, radius });
                vec![rest.nodes().collect()]
            }
        };
        let parts = children
            .into_par_iter()
            .map(|c| self.part(c, level + 1))
            .collect::<Result<Vec<_>>>()?;
        let mut ledgers = Vec::with_capacity(parts.len());
        for p in parts {
            out.clusters.extend(p.clusters);
            out.dead.extend(p.dead);
            out.trace.extend(p.trace);
            out.black_box_depth = out.black_box_depth.max(p.black_box_depth);
            out.max_depth = out.max_depth.max(p.max_depth);
            ledgers.push(p.ledger);
        }
        out.ledger.append(merge_parallel(ledgers)?);
        Ok(out)
    }
}
