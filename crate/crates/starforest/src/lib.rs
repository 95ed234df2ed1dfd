//! Star-forest (galaxy) edge decompositions of hypercubes: constructions,
//! verification, bounds, and a small exact solver.

pub mod bounds;
pub mod construct;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod partition;
pub mod squarecolor;
pub mod exact;

pub use bounds::{lower_bound, status, upper_bound, BoundsReport};
pub use construct::{
    decompose, decompose_base, decompose_power_minus2, decompose_power_plus1, execute_plan,
    extend_plus_one, lg1_decompose, min_terms_representation, plan, power_plus1_parts,
    product_compose, restrict_minus_one, DecompositionPlan, PlanStep, PowerPlus1Parts,
    TripartiteWitness,
};
pub use decomp::{
    star_components, verify_decomposition, DecompositionDoc, GalaxyDecomposition, StarComponent,
    VerificationReport, Violation,
};
pub use error::{Error, Result};
pub use exact::{exact_sa, sa_decide, SearchConfig};
pub use graph::{Edge, Graph, VertexId, MAX_DIMENSION};
pub use graph6::{parse_graph6, write_graph6};
pub use partition::{
    extend_class, split_two_regular, truszczynski_partition, ClassPartition, ExtendedClass,
};
pub use squarecolor::{
    complete_galaxy_decomposition, hamming_square_coloring, sa_from_square_coloring, square,
    SquareColoring,
};
