//! Hypergraph Hamiltonicity toolkit: exact degree/threshold computations,
//! extremal constructions, shadow and absorption machinery, and a
//! randomized Hamilton l-cycle pipeline, all over k-uniform hypergraphs.

pub mod absorbers;
pub mod bitset;
pub mod combin;
pub mod constructions;
pub mod hypergraph;
pub mod lp;
pub mod paths;
pub mod pipeline;
pub mod reachability;
pub mod rng;
pub mod shadows;
pub mod solver;
pub mod thresholds;
pub mod tilings;

pub use absorbers::{
    end_matched_order, find_absorbers, for_each_gadget_embedding,
    for_each_gadget_embedding_in_order, pair_spanning_orders, spanning_orders, swap_witness,
    validate_absorber, Absorber, AbsorberError, AbsorberViolation, SwapWitness,
};
pub use bitset::VertexSet;
pub use combin::Rational;
pub use constructions::{
    pattern_y, search_gadget, space_barrier, space_barrier_min_degree, validate_gadget,
    ConstructionError, GadgetCertificate, GadgetError, GadgetViolation, SpaceBarrierSpec,
};
pub use hypergraph::{GraphError, Hypergraph, ParseError};
pub use lp::{LpError, LpSolution};
pub use paths::{connect, ConnectError, EllCycle, EllPath, ShapeError, ValidationReport, Violation};
pub use pipeline::{
    absorb_leftover, build_absorbing_path, path_cover, run_pipeline, AbsorbDescriptor,
    AbsorbingPath, IndexCombo, Outcome, Piece, PipelineError, PipelineParams, PipelineReport,
    Stage, SwapStation,
};
pub use reachability::{
    pigeonhole_pair, reachability_matrix, reachability_partition, reachable_count,
    ClosedPartition, ReachabilityError, ReachabilityProfile,
};
pub use rng::SplitMix64;
pub use shadows::{
    iterated_cleanup, kk_bound, robust_shadow, shadow_intersection_witness, CleanupReport,
    ShadowError, ShadowWitness,
};
pub use solver::{find_hamilton_cycle, HamiltonOutcome, SolverError};
pub use thresholds::{
    barrier_window_check, convergence_table, dirac_upper_bound, divisibility_threshold,
    known_tiling_threshold, space_barrier_limit, BoundTerm, ConvergenceRow, DiracBound,
    ThirdCertificate, ThresholdError, WindowCheck,
};
pub use tilings::{
    dominant_edge_vector, edge_vector_census, max_fractional_y_tiling, max_y_tiling,
    robust_edge_vectors, y_copies, y_tiling_degree_bound, y_tiling_degree_limit,
    FractionalTiling, TilingError, TilingOutcome,
};
