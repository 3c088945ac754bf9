//! Exact desk-scale toolkit for tree-independence number and its companions:
//! α-treedepth, strong brambles and their duality with α-tw, α-balanced
//! separators and constructive decomposition refinement, dominating paths and
//! cycles through brambles, and induced wheel-minor detection with
//! machine-checkable certificates.
//!
//! Everything here is exact and deterministic: ties break toward the smallest
//! vertex index, witnesses are canonical, and every certificate an operation
//! emits can be re-validated by the corresponding checker.

pub mod alpha;
pub mod bramble;
pub mod decomposition;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod minor;
pub mod patterns;
pub mod separators;
pub mod set;
pub mod treedepth;

pub use alpha::{clique_number, clique_with_witness, independence_number, independence_with_witness};
pub use bramble::{
    alpha_order_exact, bramble_from_linked_set, is_strong_bramble, strong_bramble_of_order,
    StrongBramble,
};
pub use decomposition::{
    alpha_width, alpha_tw_exact, check_tree_decomposition, treewidth_exact, TdViolation,
    TreeDecomposition,
};
pub use domination::{
    dominating_cycle_or_vertex, dominating_path, long_dominating_cycle, DominationOutcome,
};
pub use error::Error;
pub use format::{emit_dimacs, emit_graph6, graph_to_dot, parse_dimacs, parse_graph6};
pub use graph::Graph;
pub use minor::{
    cycle_vicinity_decomposition, detect_wheel, find_induced_minor, find_induced_minor_exhaustive,
    is_model, minimize_model, wheel_from_cycle, wheel_graph, InducedMinorModel, VicinityOutcome,
    WheelOutcome,
};
pub use patterns::{contains_induced, is_chordal, is_k1d_free, is_quasi_threshold};
pub use separators::{
    balanced_separator, find_k_alpha_linked, heavy_component, refine_decomposition, Bounds,
    RefineOutcome,
};
pub use set::VertexSet;
pub use treedepth::{
    alpha_depth, alpha_td_exact, gyarfas_elimination, is_elimination_forest, kdd_elimination,
    path_elimination_tree, EliminationForest, GyarfasOutcome,
};
