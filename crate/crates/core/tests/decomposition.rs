mod common;

use common::*;
use netdecomp::graph::generate;
use netdecomp::output::{to_json, DecompositionJson};
use netdecomp::{
    color_bound, decompose, refined_diameter_bound, verify_decomposition, Refined, StrongCarver, Transformation,
    WeakCarverKind,
};
use proptest::prelude::*;

fn refined() -> Refined<Transformation<WeakCarverKind>> {
    Refined { inner: Transformation { black_box: WeakCarverKind::LinialSaks } }
}

#[test]
fn gnp_thousand_refined() {
    let g = generate::gnp(1000, 0.01, 5).unwrap();
    let (d, ledger) = decompose(&g, 5, &refined()).unwrap();
    assert_eq!(color_bound(1000), 11);
    assert!(d.colors <= 11);
    let bound = refined_diameter_bound(1000, 0.5).unwrap();
    assert!(verify_decomposition(&g, &d, 11, bound).is_empty());
    assert!(twin_decomposition(&g, &d, 11, bound).is_empty());
    assert!(ledger.total() > 0);
}

#[test]
fn single_node_and_complete_graph() {
    let g = generate::path(1);
    let (d, _) = decompose(&g, 0, &refined()).unwrap();
    assert_eq!(d.clusters.len(), 1);
    assert_eq!(d.clusters[0].color, 1);
    let g = generate::complete(10);
    let (d, _) = decompose(&g, 0, &Transformation { black_box: WeakCarverKind::Trivial }).unwrap();
    assert_eq!((d.colors, d.clusters.len()), (1, 1));
}

/// A black box that leaves dead nodes forces several colors; the
/// remaining-node trace halves and same-color clusters stay apart.
#[test]
fn multi_color_decomposition() {
    let g = generate::path(2000);
    let carver = Transformation { black_box: LayerChunks { period: 50 } };
    let (d, _) = decompose(&g, 0, &carver).unwrap();
    assert!(d.colors > 1);
    assert!(d.remaining.windows(2).all(|w| 2 * w[1] <= w[0]));
    assert!(verify_decomposition(&g, &d, color_bound(2000), d.diameter_bound).is_empty());
    assert!(twin_decomposition(&g, &d, color_bound(2000), d.diameter_bound).is_empty());
    let mut ids: Vec<usize> = d.clusters.iter().map(|c| c.id).collect();
    ids.dedup();
    assert_eq!(ids, (0..d.clusters.len()).collect::<Vec<_>>());
}

#[test]
fn repeated_runs_are_identical() {
    let g = generate::gnp(600, 0.01, 2).unwrap();
    let run = || {
        let (d, l) = decompose(&g, 9, &refined()).unwrap();
        (to_json(&DecompositionJson::new(&g, &d, &l)), l.to_json())
    };
    assert_eq!(run(), run());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decompositions_verify((g, _) in arb_graph_and_mask(90), seed in any::<u64>(), period in 2usize..6) {
        let carvers: [Box<dyn StrongCarver>; 3] = [
            Box::new(refined()),
            Box::new(Transformation { black_box: WeakCarverKind::LinialSaks }),
            Box::new(Transformation { black_box: LayerChunks { period } }),
        ];
        for carver in &carvers {
            let (d, _) = decompose(&g, seed, carver.as_ref()).unwrap();
            let v = verify_decomposition(&g, &d, color_bound(g.n()), d.diameter_bound);
            prop_assert!(v.is_empty(), "{:?}", v);
            prop_assert!(d.remaining.windows(2).all(|w| 2 * w[1] <= w[0]));
            prop_assert_eq!(d.remaining.first().copied(), Some(g.n()));
        }
    }
}
