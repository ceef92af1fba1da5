//! Brute-force checkers for every object the algorithms produce.
//!
//! Verifiers never trust algorithm metadata beyond the declared bounds they
//! are asked to check. Violations are data: each carries the offending
//! nodes or edges so it can be re-checked on its own.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decompose::NetworkDecomposition;
use crate::graph::{induced_diameter, BfsScratch, Graph, NodeMask};
use crate::refine::CutOrCluster;
use crate::strong::StrongCarving;
use crate::weak::WeakCarving;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    NotPartition,
    AdjacentSameColor,
    DiameterExceeded,
    DeadBudgetExceeded,
    SteinerDepth,
    SteinerCongestion,
    SteinerTerminals,
    SteinerStructure,
    DisconnectedCluster,
    ColorBoundExceeded,
    Unbalanced,
    SeparatorTooLarge,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nodes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measured: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
}

impl Violation {
    fn new(kind: ViolationKind) -> Self {
        Self { kind, nodes: Vec::new(), edges: Vec::new(), measured: None, bound: None }
    }

    fn nodes(mut self, nodes: Vec<usize>) -> Self {
        self.nodes = nodes;
        self
    }

    fn edge(mut self, u: usize, v: usize) -> Self {
        self.edges = vec![(u.min(v), u.max(v))];
        self
    }

    fn measured(mut self, measured: f64, bound: f64) -> Self {
        self.measured = Some(measured);
        self.bound = Some(bound);
        self
    }
}

/// Distinct kinds in a violation list.
pub fn kinds(violations: &[Violation]) -> BTreeSet<ViolationKind> {
    violations.iter().map(|v| v.kind).collect()
}

/// Group memberships per node: the first owner, plus any further owners
/// of nodes listed more than once.
struct Owners {
    first: Vec<Option<usize>>,
    extra: HashMap<usize, Vec<usize>>,
}

impl Owners {
    fn of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.first[v].into_iter().chain(self.extra.get(&v).into_iter().flatten().copied())
    }
}

/// Checks that `groups` partition exactly the nodes of `universe`.
fn check_partition(n: usize, universe: &NodeMask, groups: &[&[usize]], out: &mut Vec<Violation>) -> Owners {
    let mut owners = Owners { first: vec![None; n], extra: HashMap::new() };
    let mut foreign = BTreeSet::new();
    for (gi, group) in groups.iter().enumerate() {
        for &v in *group {
            if v >= n || !universe.is_alive(v) {
                foreign.insert(v);
            } else if owners.first[v].is_none() {
                owners.first[v] = Some(gi);
            } else {
                owners.extra.entry(v).or_default().push(gi);
            }
        }
    }
    let bad: BTreeSet<usize> = universe
        .nodes()
        .filter(|&v| owners.first[v].is_none() || owners.extra.contains_key(&v))
        .chain(foreign)
        .collect();
    if !bad.is_empty() {
        out.push(Violation::new(ViolationKind::NotPartition).nodes(bad.into_iter().collect()));
    }
    owners
}

/// Edges between distinct groups that must not touch (`conflict(a, b)`),
/// one violation per group pair.
fn check_separation(g: &Graph, owners: &Owners, conflict: impl Fn(usize, usize) -> bool, out: &mut Vec<Violation>) {
    let mut seen = BTreeSet::new();
    for (u, v) in g.edges() {
        for a in owners.of(u) {
            for b in owners.of(v) {
                if a != b && conflict(a, b) && seen.insert((a.min(b), a.max(b))) {
                    out.push(Violation::new(ViolationKind::AdjacentSameColor).edge(u, v));
                }
            }
        }
    }
}

fn check_diameters(g: &Graph, clusters: &[&[usize]], bound: usize, out: &mut Vec<Violation>) {
    let found: Vec<Option<Violation>> = clusters
        .par_iter()
        .map(|nodes| {
            let mut sorted: Vec<usize> = nodes.iter().copied().filter(|&v| v < g.n()).collect();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.is_empty() {
                return None;
            }
            match induced_diameter(g, &sorted) {
                None => Some(Violation::new(ViolationKind::DisconnectedCluster).nodes(sorted)),
                Some(d) if d > bound => {
                    Some(Violation::new(ViolationKind::DiameterExceeded).nodes(sorted).measured(d as f64, bound as f64))
                }
                Some(_) => None,
            }
        })
        .collect();
    out.extend(found.into_iter().flatten());
}

fn check_dead_budget(dead: usize, alive: usize, eps: f64, out: &mut Vec<Violation>) {
    if dead as f64 > eps * alive as f64 {
        out.push(Violation::new(ViolationKind::DeadBudgetExceeded).measured(dead as f64, eps * alive as f64));
    }
}

/// Violations of a `(c_bound, d_bound)` strong-diameter decomposition of
/// all of `g`.
pub fn verify_decomposition(
    g: &Graph,
    d: &NetworkDecomposition,
    c_bound: usize,
    d_bound: usize,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = g.n();
    let groups: Vec<&[usize]> = d.clusters.iter().map(|c| c.nodes.as_slice()).collect();
    let owner = check_partition(n, &NodeMask::full(n), &groups, &mut out);
    if let Some(empty) = d.clusters.iter().position(|c| c.nodes.is_empty()) {
        out.push(Violation::new(ViolationKind::NotPartition).measured(empty as f64, 0.0));
    }
    for c in &d.clusters {
        if c.color == 0 || c.color > c_bound {
            out.push(
                Violation::new(ViolationKind::ColorBoundExceeded)
                    .nodes(c.nodes.clone())
                    .measured(c.color as f64, c_bound as f64),
            );
        }
    }
    check_separation(g, &owner, |a, b| d.clusters[a].color == d.clusters[b].color, &mut out);
    check_diameters(g, &groups, d_bound, &mut out);
    out
}

/// Violations of a strong-diameter carving of the alive nodes of `mask`.
pub fn verify_strong_carving(
    g: &Graph,
    mask: &NodeMask,
    c: &StrongCarving,
    eps: f64,
    d_bound: usize,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let dead: Vec<usize> = c.dead.iter().map(|d| d.node).collect();
    let mut groups: Vec<&[usize]> = c.clusters.iter().map(|c| c.nodes.as_slice()).collect();
    groups.push(&dead);
    let dead_group = groups.len() - 1;
    let owner = check_partition(g.n(), mask, &groups, &mut out);
    check_dead_budget(dead.len(), mask.count(), eps, &mut out);
    check_separation(g, &owner, |a, b| a != dead_group && b != dead_group, &mut out);
    check_diameters(g, &groups[..dead_group], d_bound, &mut out);
    out
}

/// Violations of a weak carving against its own declared depth and
/// congestion.
pub fn verify_weak_carving(g: &Graph, mask: &NodeMask, w: &WeakCarving, eps: f64) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut groups: Vec<&[usize]> = w.clusters.iter().map(|c| c.nodes.as_slice()).collect();
    groups.push(&w.dead);
    let dead_group = groups.len() - 1;
    let owner = check_partition(g.n(), mask, &groups, &mut out);
    check_dead_budget(w.dead.len(), mask.count(), eps, &mut out);
    check_separation(g, &owner, |a, b| a != dead_group && b != dead_group, &mut out);

    let mut load: HashMap<(usize, usize), usize> = HashMap::new();
    for cluster in &w.clusters {
        let tree = &cluster.tree;
        let terminals: BTreeSet<usize> = tree.terminals.iter().copied().collect();
        let members: BTreeSet<usize> = cluster.nodes.iter().copied().collect();
        if terminals != members {
            let diff = terminals.symmetric_difference(&members).copied().collect();
            out.push(Violation::new(ViolationKind::SteinerTerminals).nodes(diff));
        }
        let alive = |v: usize| v < g.n() && mask.is_alive(v);
        if let Some(&(c, p)) = tree.parent.iter().find(|&&(c, p)| !(alive(c) && alive(p) && g.has_edge(c, p))) {
            out.push(Violation::new(ViolationKind::SteinerStructure).edge(c, p));
            continue;
        }
        if !alive(tree.root) {
            out.push(Violation::new(ViolationKind::SteinerStructure).nodes(vec![tree.root]));
            continue;
        }
        let Some(depths) = tree.depths() else {
            out.push(Violation::new(ViolationKind::SteinerStructure).nodes(vec![tree.root]));
            continue;
        };
        let missing: Vec<usize> = tree.terminals.iter().copied().filter(|t| !depths.contains_key(t)).collect();
        if !missing.is_empty() {
            out.push(Violation::new(ViolationKind::SteinerTerminals).nodes(missing));
        }
        let deepest = tree.terminals.iter().filter_map(|t| depths.get(t).map(|&d| (d, *t))).max();
        if let Some((d, t)) = deepest {
            if d > w.declared_depth {
                out.push(
                    Violation::new(ViolationKind::SteinerDepth)
                        .nodes(vec![tree.root, t])
                        .measured(d as f64, w.declared_depth as f64),
                );
            }
        }
        for e in tree.edges() {
            *load.entry(e).or_default() += 1;
        }
    }
    let mut overloaded: Vec<_> = load.into_iter().filter(|&(_, c)| c > w.declared_congestion).collect();
    overloaded.sort_unstable();
    for ((u, v), c) in overloaded {
        out.push(
            Violation::new(ViolationKind::SteinerCongestion)
                .edge(u, v)
                .measured(c as f64, w.declared_congestion as f64),
        );
    }
    out
}

/// Violations of a cut-or-cluster outcome on the connected alive subgraph
/// of `mask`. `max_removed` bounds the separator or halo size.
pub fn verify_cut_or_cluster(
    g: &Graph,
    mask: &NodeMask,
    outcome: &CutOrCluster,
    max_removed: f64,
    diameter_bound: usize,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = mask.count();
    let balanced = |len: usize| 3 * len >= n;
    match outcome {
        CutOrCluster::Cut { side_a, side_b, separator } => {
            let owner = check_partition(g.n(), mask, &[side_a, side_b, separator], &mut out);
            check_separation(g, &owner, |a, b| a != 2 && b != 2, &mut out);
            for side in [side_a, side_b] {
                if !balanced(side.len()) {
                    out.push(
                        Violation::new(ViolationKind::Unbalanced)
                            .nodes(side.clone())
                            .measured(side.len() as f64, n as f64 / 3.0),
                    );
                }
            }
            if separator.len() as f64 > max_removed {
                out.push(
                    Violation::new(ViolationKind::SeparatorTooLarge)
                        .nodes(separator.clone())
                        .measured(separator.len() as f64, max_removed),
                );
            }
        }
        CutOrCluster::Component { nodes, halo, .. } => {
            let inside = NodeMask::from_nodes(g.n(), nodes.iter().copied().filter(|&v| v < g.n()));
            let expected: BTreeSet<usize> = nodes
                .iter()
                .filter(|&&v| v < g.n())
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|&w| mask.is_alive(w) && !inside.is_alive(w))
                .collect();
            let got: BTreeSet<usize> = halo.iter().copied().collect();
            if expected != got || nodes.iter().any(|&v| v >= g.n() || !mask.is_alive(v)) {
                let diff = expected.symmetric_difference(&got).copied().collect();
                out.push(Violation::new(ViolationKind::NotPartition).nodes(diff));
            }
            if !balanced(nodes.len()) {
                out.push(
                    Violation::new(ViolationKind::Unbalanced)
                        .nodes(nodes.clone())
                        .measured(nodes.len() as f64, n as f64 / 3.0),
                );
            }
            if halo.len() as f64 > max_removed {
                out.push(
                    Violation::new(ViolationKind::SeparatorTooLarge)
                        .nodes(halo.clone())
                        .measured(halo.len() as f64, max_removed),
                );
            }
            check_diameters(g, &[nodes], diameter_bound, &mut out);
        }
    }
    out
}

/// True iff every radius-`r` ball has fewer than `t` nodes, which rules out
/// any connected subgraph of diameter at most `r` with `t` or more nodes
/// (such a subgraph lies inside the radius-`r` ball of each of its nodes).
pub fn no_large_lowdiam_component(g: &Graph, r: usize, t: usize) -> bool {
    let mask = NodeMask::full(g.n());
    (0..g.n()).into_par_iter().map_init(
        || BfsScratch::new(g.n()),
        |scratch, v| *scratch.run(g, &mask, &[v], Some(r)).unwrap().last().unwrap(),
    )
    .all(|size| size < t)
}
