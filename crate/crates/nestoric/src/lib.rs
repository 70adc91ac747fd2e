//! Exact combinatorics of real toric manifolds associated with building sets.
//!
//! The library computes rational Betti numbers of the real toric manifold of
//! a connected chordal building set two independent ways — by counting
//! alternating B-permutations, and by exact simplicial homology of induced
//! subcomplexes of the nested set complex — together with the machinery that
//! connects them: restricted building sets, nested set complexes, an integer
//! homology kernel, and an edge-labeled poset whose shellability certifies
//! the count.

pub mod betti;
pub mod building;
pub mod complex;
pub mod graph;
pub mod hochschild;
pub mod homology;
pub mod io;
pub mod perm;
pub mod poset;
pub mod set;

pub use betti::{
    a_number, compare_methods, complex_betti, hochschild_betti, hochschild_stability_check,
    real_betti_alternating, real_betti_graph, real_betti_homology_oracle, sa_number, BettiReport,
    BreakdownRow, ComparisonReport, ComparisonRow, Method, PipelineError,
};
pub use building::{omega_to_subset, BuildingSet, BuildingSetError};
pub use complex::{
    even_complex, induced_parity_subcomplex, is_nested_set, nested_set_complex, odd_complex,
    order_complex, ComplexError, SimplicialComplex,
};
pub use graph::{GraphError, SimpleGraph};
pub use hochschild::count_alt_hoch;
pub use homology::{reduced_betti, reduced_betti_exact, ReducedBetti};
pub use io::{
    emit_building_set, emit_graph, parse_building_set_file, parse_graph_file, FileError,
};
pub use perm::{
    alternating_b_permutations, b_permutations, count_312_avoiding_alternating,
    count_alternating_b_permutations, count_b_permutations,
    descent_histogram_of_b_permutations, PermEngineError, Permutation,
};
pub use poset::{
    alt_histogram, chain_to_permutation, euler_identity_check, label_cmp, omega_cmp,
    permutation_to_chain, verify_el, EdgeLabel, EulerIdentityReport, HatPoset, LabelCmp,
    OmegaLabel, PosetError, ShellabilityReport,
};
pub use set::ElementSet;
