//! Slow, independently written oracles shared by the integration tests.
//! Nothing here calls the library's traversal or verification code.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use netdecomp::graph::generate;
use netdecomp::ledger::RoundLedger;
use netdecomp::verify::ViolationKind;
use netdecomp::weak::{SteinerTree, WeakCluster};
use netdecomp::{Graph, NetworkDecomposition, NodeMask, StrongCarving, WeakCarver, WeakCarving};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: usize = usize::MAX;

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// All-pairs distances inside the alive subgraph; `INF` when unreachable
/// or when either end is dead.
pub fn floyd_warshall(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let adj = adjacency_matrix(g);
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        if !alive[u] {
            continue;
        }
        d[u][u] = 0;
        for v in 0..n {
            if alive[v] && adj[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Diameter of the subgraph induced by `nodes`, `None` if disconnected.
pub fn matrix_diameter(adj: &[Vec<bool>], nodes: &[usize]) -> Option<usize> {
    let k = nodes.len();
    let mut d = vec![vec![INF; k]; k];
    for i in 0..k {
        d[i][i] = 0;
        for j in 0..k {
            if i != j && adj[nodes[i]][nodes[j]] {
                d[i][j] = 1;
            }
        }
    }
    for m in 0..k {
        for i in 0..k {
            for j in 0..k {
                if d[i][m] != INF && d[m][j] != INF {
                    d[i][j] = d[i][j].min(d[i][m] + d[m][j]);
                }
            }
        }
    }
    let mut best = 0;
    for row in &d {
        for &x in row {
            if x == INF {
                return None;
            }
            best = best.max(x);
        }
    }
    Some(best)
}

/// Plain queue BFS distances from `sources` over alive nodes.
pub fn simple_bfs(g: &Graph, alive: &[bool], sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![INF; g.n()];
    let mut q = VecDeque::new();
    for &s in sources {
        if dist[s] == INF {
            dist[s] = 0;
            q.push_back(s);
        }
    }
    while let Some(u) = q.pop_front() {
        for v in 0..g.n() {
            if alive[v] && dist[v] == INF && g.has_edge(u, v) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    dist
}

/// Union-find components, each sorted, ordered by smallest member.
pub fn union_find_components(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (u, v) in g.edges() {
        if alive[u] && alive[v] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (v, &is_alive) in alive.iter().enumerate() {
        if is_alive {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}

pub fn mask_from_bools(alive: &[bool]) -> NodeMask {
    NodeMask::from_nodes(alive.len(), (0..alive.len()).filter(|&v| alive[v]))
}

/// Smallest `r` in `[r_start, r_start + cap]` with
/// `|B_r| >= (1 - eps/2) |B_{r+1}|`, by counting distances directly.
pub fn brute_ball_radius(dist: &[usize], r_start: usize, cap: usize, eps: f64) -> Option<usize> {
    let ball = |r: usize| dist.iter().filter(|&&d| d != INF && d <= r).count() as f64;
    (r_start..=r_start + cap).find(|&r| ball(r) >= (1.0 - eps / 2.0) * ball(r + 1))
}

/// Smallest-ratio layer by pairwise comparison of every candidate against
/// every other one (quadratic, exact).
pub fn brute_min_ratio(sizes: &[usize], lo: usize) -> usize {
    let k = sizes.len() - 1;
    let le = |i: usize, j: usize| sizes[i + 1] * sizes[j] <= sizes[j + 1] * sizes[i];
    lo + (0..k).find(|&i| (0..k).all(|j| le(i, j))).unwrap()
}

// ---------------------------------------------------------------------------
// Verifier twins: adjacency-matrix reimplementations returning only the set
// of violated properties.

fn twin_partition(universe: &[bool], groups: &[&[usize]]) -> bool {
    let mut count = vec![0usize; universe.len()];
    for grp in groups {
        for &v in *grp {
            if v >= universe.len() || !universe[v] {
                return false;
            }
            count[v] += 1;
        }
    }
    (0..universe.len()).all(|v| !universe[v] || count[v] == 1)
}

fn twin_diameters(adj: &[Vec<bool>], groups: &[&[usize]], bound: usize, out: &mut BTreeSet<ViolationKind>) {
    for grp in groups {
        let mut nodes: Vec<usize> = grp.iter().copied().filter(|&v| v < adj.len()).collect();
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.is_empty() {
            continue;
        }
        match matrix_diameter(adj, &nodes) {
            None => {
                out.insert(ViolationKind::DisconnectedCluster);
            }
            Some(d) if d > bound => {
                out.insert(ViolationKind::DiameterExceeded);
            }
            _ => {}
        }
    }
}

/// Some edge joins a node of `a` to a node of `b`; only nodes of the
/// universe count.
fn twin_touching(adj: &[Vec<bool>], universe: &[bool], a: &[usize], b: &[usize]) -> bool {
    let inside = |v: usize| v < adj.len() && universe[v];
    a.iter().any(|&u| b.iter().any(|&v| u != v && inside(u) && inside(v) && adj[u][v]))
}

pub fn twin_decomposition(g: &Graph, d: &NetworkDecomposition, c_bound: usize, d_bound: usize) -> BTreeSet<ViolationKind> {
    let adj = adjacency_matrix(g);
    let mut out = BTreeSet::new();
    let groups: Vec<&[usize]> = d.clusters.iter().map(|c| c.nodes.as_slice()).collect();
    if !twin_partition(&vec![true; g.n()], &groups) || groups.iter().any(|c| c.is_empty()) {
        out.insert(ViolationKind::NotPartition);
    }
    if d.clusters.iter().any(|c| c.color == 0 || c.color > c_bound) {
        out.insert(ViolationKind::ColorBoundExceeded);
    }
    for i in 0..d.clusters.len() {
        for j in i + 1..d.clusters.len() {
            if d.clusters[i].color == d.clusters[j].color && twin_touching(&adj, &vec![true; g.n()], groups[i], groups[j]) {
                out.insert(ViolationKind::AdjacentSameColor);
            }
        }
    }
    twin_diameters(&adj, &groups, d_bound, &mut out);
    out
}

pub fn twin_strong(g: &Graph, alive: &[bool], c: &StrongCarving, eps: f64, d_bound: usize) -> BTreeSet<ViolationKind> {
    let adj = adjacency_matrix(g);
    let mut out = BTreeSet::new();
    let dead: Vec<usize> = c.dead.iter().map(|d| d.node).collect();
    let mut groups: Vec<&[usize]> = c.clusters.iter().map(|c| c.nodes.as_slice()).collect();
    groups.push(&dead);
    if !twin_partition(alive, &groups) {
        out.insert(ViolationKind::NotPartition);
    }
    let alive_count = alive.iter().filter(|&&a| a).count();
    if dead.len() as f64 > eps * alive_count as f64 {
        out.insert(ViolationKind::DeadBudgetExceeded);
    }
    let clusters = &groups[..groups.len() - 1];
    for i in 0..clusters.len() {
        for j in i + 1..clusters.len() {
            if twin_touching(&adj, alive, clusters[i], clusters[j]) {
                out.insert(ViolationKind::AdjacentSameColor);
            }
        }
    }
    twin_diameters(&adj, clusters, d_bound, &mut out);
    out
}

pub fn twin_weak(g: &Graph, alive: &[bool], w: &WeakCarving, eps: f64) -> BTreeSet<ViolationKind> {
    let adj = adjacency_matrix(g);
    let n = g.n();
    let mut out = BTreeSet::new();
    let mut groups: Vec<&[usize]> = w.clusters.iter().map(|c| c.nodes.as_slice()).collect();
    groups.push(&w.dead);
    if !twin_partition(alive, &groups) {
        out.insert(ViolationKind::NotPartition);
    }
    if w.dead.len() as f64 > eps * alive.iter().filter(|&&a| a).count() as f64 {
        out.insert(ViolationKind::DeadBudgetExceeded);
    }
    let clusters = &groups[..groups.len() - 1];
    for i in 0..clusters.len() {
        for j in i + 1..clusters.len() {
            if twin_touching(&adj, alive, clusters[i], clusters[j]) {
                out.insert(ViolationKind::AdjacentSameColor);
            }
        }
    }
    let mut load = vec![vec![0usize; n]; n];
    for c in &w.clusters {
        let t = &c.tree;
        let terms: BTreeSet<usize> = t.terminals.iter().copied().collect();
        let members: BTreeSet<usize> = c.nodes.iter().copied().collect();
        if terms != members {
            out.insert(ViolationKind::SteinerTerminals);
        }
        let ok_node = |v: usize| v < n && alive[v];
        if !ok_node(t.root) || t.parent.iter().any(|&(c, p)| !ok_node(c) || !ok_node(p) || !adj[c][p]) {
            out.insert(ViolationKind::SteinerStructure);
            continue;
        }
        // Depth by repeated parent walks, capped to detect cycles.
        let up = |mut v: usize| -> Option<usize> {
            let mut d = 0;
            while v != t.root {
                v = t.parent.iter().find(|e| e.0 == v)?.1;
                d += 1;
                if d > n {
                    return None;
                }
            }
            Some(d)
        };
        let tree_nodes: Vec<usize> = t.parent.iter().map(|e| e.0).collect();
        let dup = tree_nodes.len() != tree_nodes.iter().collect::<BTreeSet<_>>().len() || tree_nodes.contains(&t.root);
        if dup || tree_nodes.iter().any(|&v| up(v).is_none()) {
            out.insert(ViolationKind::SteinerStructure);
            continue;
        }
        for &term in &t.terminals {
            match up(term) {
                None => {
                    out.insert(ViolationKind::SteinerTerminals);
                }
                Some(d) if d > w.declared_depth => {
                    out.insert(ViolationKind::SteinerDepth);
                }
                _ => {}
            }
        }
        for &(c, p) in &t.parent {
            load[c.min(p)][c.max(p)] += 1;
        }
    }
    if load.iter().flatten().any(|&l| l > w.declared_congestion) {
        out.insert(ViolationKind::SteinerCongestion);
    }
    out
}

// ---------------------------------------------------------------------------
// Test-only weak carver.

/// Kills every `period`-th BFS layer (counted from the smallest node of
/// each component, starting with layer `period`) and returns the remaining
/// pieces as clusters with in-cluster BFS trees. Falls back to one cluster
/// per component when that would exceed the budget, so it always honors
/// the weak-carving contract. Unlike the randomized carvers it produces
/// many small clusters, which exercises the no-giant branch.
#[derive(Debug, Clone, Copy)]
pub struct LayerChunks {
    pub period: usize,
}

impl WeakCarver for LayerChunks {
    fn carve(&self, g: &Graph, mask: &NodeMask, eps: f64, _seed: u64) -> netdecomp::Result<(WeakCarving, RoundLedger)> {
        let alive: Vec<bool> = (0..g.n()).map(|v| mask.is_alive(v)).collect();
        let comps = union_find_components(g, &alive);
        let mut keep = alive.clone();
        let mut dead = Vec::new();
        for comp in &comps {
            let dist = bfs_in(g, &alive, comp[0]);
            for &v in comp {
                if dist[v] > 0 && dist[v].is_multiple_of(self.period) {
                    keep[v] = false;
                    dead.push(v);
                }
            }
        }
        let (pieces, dead) = if dead.len() as f64 <= eps * mask.count() as f64 {
            (union_find_components(g, &keep), dead)
        } else {
            (comps, Vec::new())
        };
        let mut depth = 0;
        let mut clusters = Vec::new();
        for nodes in pieces {
            let in_piece: Vec<bool> = (0..g.n()).map(|v| nodes.binary_search(&v).is_ok()).collect();
            let (dist, parent) = bfs_tree(g, &in_piece, nodes[0]);
            depth = depth.max(nodes.iter().map(|&v| dist[v]).max().unwrap());
            let tree = SteinerTree {
                root: nodes[0],
                parent: nodes.iter().skip(1).map(|&v| (v, parent[v])).collect(),
                terminals: nodes.clone(),
            };
            clusters.push(WeakCluster { nodes, tree });
        }
        let mut dead = dead;
        dead.sort_unstable();
        let mut ledger = RoundLedger::new();
        ledger.charge_bfs(depth as u64);
        Ok((WeakCarving { clusters, dead, declared_depth: depth, declared_congestion: 1 }, ledger))
    }
}

fn bfs_in(g: &Graph, alive: &[bool], s: usize) -> Vec<usize> {
    bfs_tree(g, alive, s).0
}

fn bfs_tree(g: &Graph, alive: &[bool], s: usize) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![INF; g.n()];
    let mut parent = vec![INF; g.n()];
    let mut q = VecDeque::from([s]);
    dist[s] = 0;
    while let Some(u) = q.pop_front() {
        for &v in g.neighbors(u) {
            if alive[v] && dist[v] == INF {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                q.push_back(v);
            }
        }
    }
    (dist, parent)
}

// ---------------------------------------------------------------------------
// Fuzz inputs.

/// Graph families mixed for fuzzing, sized by `n`.
pub fn fuzz_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    match rng.random_range(0..6) {
        0 => generate::path(n),
        1 => {
            let w = rng.random_range(1..=n.max(1));
            generate::grid(w, n.div_ceil(w))
        }
        2 => generate::gnp(n, 0.005, rng.random()).unwrap(),
        3 => generate::gnp(n, 0.02, rng.random()).unwrap(),
        4 => generate::gnp(n, 0.1, rng.random()).unwrap(),
        _ => {
            let n = n.max(6) & !1;
            generate::random_regular(n, 4, rng.random()).unwrap()
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random simple graph on up to `max_n` nodes plus an alive mask.
pub fn arb_graph_and_mask(max_n: usize) -> impl Strategy<Value = (Graph, Vec<bool>)> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..=3 * n);
        let alive = proptest::collection::vec(prop::bool::weighted(0.8), n);
        (Just(n), pairs, alive).prop_map(|(n, pairs, alive)| {
            let edges: BTreeSet<(usize, usize)> =
                pairs.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
            let edges: Vec<_> = edges.into_iter().collect();
            (Graph::from_edges(n, &edges).unwrap(), alive)
        })
    })
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0f64..0.3).prop_map(|(n, seed, extra)| connected_graph(n, seed, extra))
}

pub fn connected_graph(n: usize, seed: u64, extra: f64) -> Graph {
    let mut r = rng(seed);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = r.random_range(0..v);
        edges.insert((u, v));
    }
    let extra_edges = (extra * n as f64) as usize;
    for _ in 0..extra_edges {
        let (u, v) = (r.random_range(0..n), r.random_range(0..n));
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}

// ---------------------------------------------------------------------------
// Verifier fuzz cases: valid outputs with random corruptions applied.

pub fn fuzz_decomposition(seed: u64) -> (Graph, NetworkDecomposition, usize, usize) {
    let mut r = rng(seed);
    let n = r.random_range(1..60);
    let g = fuzz_graph(&mut r, n);
    let carver = netdecomp::Transformation { black_box: LayerChunks { period: r.random_range(2..8) } };
    let (mut d, _) = netdecomp::decompose(&g, r.random(), &carver).unwrap();
    let mut c_bound = netdecomp::color_bound(g.n());
    let mut d_bound = d.diameter_bound;
    for _ in 0..r.random_range(0..3) {
        let k = d.clusters.len();
        let i = r.random_range(0..k);
        match r.random_range(0..7) {
            0 => d.clusters[i].color = r.random_range(0..4),
            1 => {
                let v = r.random_range(0..g.n());
                d.clusters[i].nodes.push(v);
            }
            2 => {
                if d.clusters[i].nodes.len() > 1 {
                    let j = r.random_range(0..d.clusters[i].nodes.len());
                    d.clusters[i].nodes.remove(j);
                }
            }
            3 => {
                let j = r.random_range(0..k);
                if i != j {
                    let moved = std::mem::take(&mut d.clusters[j].nodes);
                    d.clusters[i].nodes.extend(moved);
                    d.clusters.remove(j);
                }
            }
            4 => c_bound = r.random_range(0..3),
            5 => d_bound = r.random_range(0..3),
            _ => {
                let j = r.random_range(0..k);
                d.clusters[j].color = d.clusters[i].color;
            }
        }
    }
    (g, d, c_bound, d_bound)
}

pub fn fuzz_strong(seed: u64) -> (Graph, Vec<bool>, StrongCarving, f64, usize) {
    use netdecomp::strong::{DeadCause, DeadNode};
    let mut r = rng(seed);
    let n = r.random_range(1..60);
    let g = fuzz_graph(&mut r, n);
    let alive: Vec<bool> = (0..g.n()).map(|_| r.random_bool(0.9)).collect();
    let mask = mask_from_bools(&alive);
    let eps = r.random_range(0.1..0.9);
    let mut c = netdecomp::carve_strong(&g, &mask, eps, r.random(), &LayerChunks { period: r.random_range(2..8) }).unwrap();
    let mut d_bound = c.diameter_bound;
    let mut eps_check = eps;
    for _ in 0..r.random_range(0..3) {
        let k = c.clusters.len();
        match r.random_range(0..6) {
            0 if k > 0 => {
                let i = r.random_range(0..k);
                let v = c.clusters[i].nodes.pop().unwrap();
                c.dead.push(DeadNode { node: v, cause: DeadCause::Boundary });
                if c.clusters[i].nodes.is_empty() {
                    c.clusters.remove(i);
                }
            }
            1 if !c.dead.is_empty() => {
                let d = c.dead.remove(r.random_range(0..c.dead.len()));
                if k > 0 {
                    c.clusters[r.random_range(0..k)].nodes.push(d.node);
                }
            }
            2 if k > 1 => {
                let j = r.random_range(1..k);
                let moved = c.clusters.remove(j).nodes;
                c.clusters[0].nodes.extend(moved);
            }
            3 => d_bound = r.random_range(0..3),
            4 => eps_check = r.random_range(0.0..0.2),
            _ => {
                let v = r.random_range(0..g.n());
                c.dead.push(DeadNode { node: v, cause: DeadCause::BlackBox });
            }
        }
    }
    (g, alive, c, eps_check, d_bound)
}

pub fn fuzz_weak(seed: u64) -> (Graph, Vec<bool>, WeakCarving, f64) {
    let mut r = rng(seed);
    let n = r.random_range(1..60);
    let g = fuzz_graph(&mut r, n);
    let alive: Vec<bool> = (0..g.n()).map(|_| r.random_bool(0.9)).collect();
    let mask = mask_from_bools(&alive);
    if mask.count() == 0 {
        let w = WeakCarving { clusters: vec![], dead: vec![], declared_depth: 0, declared_congestion: 1 };
        return (g, alive, w, 0.5);
    }
    let eps = r.random_range(0.1..0.9);
    let kind = if r.random_bool(0.5) { netdecomp::WeakCarverKind::LinialSaks } else { netdecomp::WeakCarverKind::Trivial };
    let (mut w, _) = netdecomp::weak_carve(&g, &mask, eps, r.random(), kind).unwrap();
    let mut eps_check = eps;
    for _ in 0..r.random_range(0..3) {
        let k = w.clusters.len();
        let i = r.random_range(0..k);
        match r.random_range(0..6) {
            0 => w.declared_depth = w.declared_depth.saturating_sub(1),
            1 => w.declared_congestion = 0,
            2 => {
                if !w.clusters[i].tree.parent.is_empty() {
                    let j = r.random_range(0..w.clusters[i].tree.parent.len());
                    w.clusters[i].tree.parent.remove(j);
                }
            }
            3 => {
                let v = r.random_range(0..g.n());
                w.clusters[i].nodes.push(v);
            }
            4 => eps_check = r.random_range(0.0..0.2),
            _ => {
                let (a, b) = (r.random_range(0..g.n()), r.random_range(0..g.n()));
                w.clusters[i].tree.parent.push((a, b));
            }
        }
    }
    (g, alive, w, eps_check)
}

// ---------------------------------------------------------------------------
// Cut-or-cluster checks.

/// Verifies the outcome of a report against `2 (a_final + K_L)` and replays
/// every halving step from scratch: recomputed radii must match, and the
/// kept half must reach a third of the nodes within the old `b`.
pub fn check_cut_report(
    g: &Graph,
    mask: &NodeMask,
    rep: &netdecomp::refine::CutOrClusterReport,
) -> Result<(), String> {
    use netdecomp::refine::{halve_sources, reach_radii};
    let p = &rep.params;
    let bound = 2 * (rep.final_a() + p.final_window);
    let v = netdecomp::verify_cut_or_cluster(g, mask, &rep.outcome, p.max_removed(), bound);
    if !v.is_empty() {
        return Err(format!("outcome violations {v:?}"));
    }
    if bound > p.component_diameter_bound() || rep.halvings() >= p.max_halvings {
        return Err(format!("a_final {} beyond the configured bound", rep.final_a()));
    }
    let n = mask.count();
    for (i, s) in rep.history.iter().enumerate() {
        if s.a > s.b || s.sources.len() > n.div_ceil(1 << i.min(63)) {
            return Err(format!("halving state {i} out of range"));
        }
    }
    for pair in rep.history.windows(2) {
        let (old, new) = (&pair[0], &pair[1]);
        let half = old.sources.len().div_ceil(2);
        let (a1, _) = reach_radii(g, mask, &old.sources[..half]).map_err(|e| e.to_string())?;
        let (a2, _) = reach_radii(g, mask, &old.sources[half..]).map_err(|e| e.to_string())?;
        if a1.min(a2) > old.b {
            return Err(format!("min(a1, a2) = {} > b = {}", a1.min(a2), old.b));
        }
        let (a, b) = reach_radii(g, mask, &new.sources).map_err(|e| e.to_string())?;
        if (a, b) != (new.a, new.b) || a != a1.min(a2) || a >= old.a + p.cut_threshold {
            return Err(format!("halving step {} does not replay", new.iteration));
        }
        if halve_sources(g, mask, old).map_err(|e| e.to_string())? != *new {
            return Err(format!("halving step {} is not reproducible", new.iteration));
        }
    }
    Ok(())
}
