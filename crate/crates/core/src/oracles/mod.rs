//! Brute-force and exact decision procedures: ground truth at desk scale
//! for everything the generators build and the extractors emit.

pub mod clean;
pub mod embedding;
pub mod menger;
pub mod pinch;
pub mod subdivision;
pub mod treewidth;

pub use clean::{is_t_clean_bounded, BasicObstruction, CleanVerdict};
pub use embedding::{find_induced_embedding, validate_embedding, EmbeddingWitness, SearchResult};
pub use menger::{internally_disjoint_paths, DisjointPathsOutcome, MengerError};
pub use pinch::{find_pinch_witness, induced_cycles_through};
pub use subdivision::{
    find_induced_line_subdivision, find_induced_subdivision, validate_line_subdivision_embedding,
    validate_subdivision_embedding, BoundedSearch, LineSubdivisionEmbedding, SubdivisionEmbedding,
};
pub use treewidth::{
    treewidth_exact, treewidth_lower_via_minor, treewidth_upper_minfill, TwError, TW_DEFAULT_CAP,
    TW_HARD_CAP,
};
