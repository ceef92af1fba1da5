use super::{BfsScratch, Graph, NodeMask};

/// Exact diameter of the alive subgraph, or `None` if it is disconnected
/// (or empty).
///
/// Keeps lower and upper eccentricity bounds per node and only runs BFS
/// from nodes that can still move the diameter bounds, alternating between
/// the largest upper bound and the smallest lower bound. Each BFS settles
/// at least one node, so the worst case is all-pairs BFS.
pub fn exact_diameter(g: &Graph, mask: &NodeMask) -> Option<usize> {
    let nodes: Vec<usize> = mask.nodes().collect();
    if nodes.is_empty() {
        return None;
    }
    let k = nodes.len();
    let mut scratch = BfsScratch::new(g.n());
    let mut lower = vec![0usize; k];
    let mut upper = vec![usize::MAX; k];
    let mut lo = 0usize;
    let mut hi = usize::MAX;
    let mut pick_high = true;
    while lo < hi {
        let candidates = (0..k).filter(|&i| upper[i] > lo && lower[i] < upper[i]);
        let i = if pick_high {
            candidates.max_by_key(|&i| (upper[i], std::cmp::Reverse(i)))
        } else {
            candidates.min_by_key(|&i| (lower[i], i))
        };
        let Some(i) = i else { break };
        pick_high = !pick_high;
        let layers = scratch.run(g, mask, &[nodes[i]], None).expect("alive");
        if *layers.last().unwrap() != k {
            return None;
        }
        let ecc = layers.len() - 1;
        for (j, &v) in nodes.iter().enumerate() {
            let d = scratch.dist(v);
            lower[j] = lower[j].max(d.max(ecc - d));
            upper[j] = upper[j].min(ecc + d);
        }
        lo = lower.iter().copied().max().unwrap();
        hi = upper.iter().copied().max().unwrap();
    }
    Some(lo)
}

/// Exact diameter of `G[nodes]`.
pub fn induced_diameter(g: &Graph, nodes: &[usize]) -> Option<usize> {
    exact_diameter(g, &NodeMask::from_nodes(g.n(), nodes.iter().copied()))
}
