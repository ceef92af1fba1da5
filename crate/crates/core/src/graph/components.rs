use super::{BfsScratch, Graph, NodeMask};

/// Connected components of the alive subgraph.
///
/// Each component is sorted ascending; components are ordered by their
/// smallest node.
pub fn connected_components(g: &Graph, mask: &NodeMask) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut scratch = BfsScratch::new(g.n());
    let mut out = Vec::new();
    for v in mask.nodes() {
        if seen[v] {
            continue;
        }
        scratch.run(g, mask, &[v], None).expect("alive source");
        let mut comp = scratch.visited().to_vec();
        for &u in &comp {
            seen[u] = true;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
