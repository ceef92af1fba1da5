//! Strong-diameter ball carving and network decomposition.
//!
//! The pipeline turns any weak-diameter carving routine into a carving whose
//! clusters have small diameter in their own induced subgraph, refines it
//! with a cut-or-cluster recursion, and stacks carvings into a network
//! decomposition. Every distributed step is charged to a [`RoundLedger`] so
//! the round cost of a run can be read off the result.
//!
//! ```
//! use netdecomp::{decompose, generate, refined_diameter_bound, verify_decomposition, color_bound};
//! use netdecomp::{Refined, Transformation, WeakCarverKind};
//!
//! let g = generate::grid(8, 8);
//! let carver = Refined { inner: Transformation { black_box: WeakCarverKind::LinialSaks } };
//! let (d, ledger) = decompose(&g, 7, &carver).unwrap();
//! let bound = refined_diameter_bound(g.n(), 0.5).unwrap();
//! assert!(verify_decomposition(&g, &d, color_bound(g.n()), bound).is_empty());
//! assert!(ledger.total() > 0);
//! ```

pub mod bench;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod ledger;
pub mod output;
pub mod refine;
pub mod seed;
pub mod strong;
pub mod verify;
pub mod weak;

pub use decompose::{color_bound, decompose, ColoredCluster, NetworkDecomposition, DECOMPOSITION_EPS};
pub use error::{Error, Result};
pub use graph::{generate, Graph, NodeMask};
pub use ledger::{merge_parallel, RoundLedger};
pub use refine::{cut_or_cluster, refine, refined_diameter_bound, CutOrCluster, LayerParams, Refined};
pub use strong::{carve_strong, CarvingParams, DeadCause, StrongCarver, StrongCarving, Transformation};
pub use verify::{
    no_large_lowdiam_component, verify_cut_or_cluster, verify_decomposition, verify_strong_carving,
    verify_weak_carving, Violation, ViolationKind,
};
pub use weak::{weak_carve, WeakCarver, WeakCarverKind, WeakCarving};
