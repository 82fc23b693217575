//! Contractions to highly connected minors, clustered list colouring with
//! bounded monochromatic components, and exact clique-minor search.

pub mod connectivity;
pub mod constructions;
pub mod contraction;
pub mod generate;
pub mod graph;
pub mod minors;
pub mod partition;

pub use connectivity::{
    classify_separation, connectivity, find_good_separation, is_k_connected, local_connectivity,
    min_vertex_cut, ConnectivityError, Goodness, GoodnessVerdict, Separation,
};
pub use constructions::{verify_tightness, watkins_graph, ConstructionError, TightnessReport, WatkinsInstance};
pub use contraction::{
    contract_to_k_connected, find_contractible_edge, mader_edge, ContractionError, ContractionPlan,
    PreconditionFailure,
};
pub use graph::{Edge, Graph, GraphError, VertexId, VertexMergeMap, VertexSet};
pub use minors::{
    audit_witness, find_clique_minor, find_clique_minor_with_budget, verify_embedding, EmbeddingViolation,
    MinorEmbedding, MinorSearch, WitnessAudit,
};
pub use partition::{
    clustered_color, color_count, theorem_main, verify_coloring, CapacityParams, CaseIVWitness,
    ClusteredColoring, Color, ColoringViolation, ListAssignment, PartitionError, PartitionOutcome,
};
