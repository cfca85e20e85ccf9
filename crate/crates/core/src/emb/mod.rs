//! Embedding dimension: exact search, brute-force oracle, and box maps built
//! from grid embeddings.

mod local;
mod oracle;
mod solver;

pub use local::{local_box_map, Provider, ProviderInfo};
pub use oracle::{embedding_dimension_oracle, ORACLE_MAX_VERTICES};
pub use solver::{
    binary_embedding, embedding_dimension, embeds_in_dim, CertificateStats, EmbedSearch,
    EmbeddingCertificate, SearchLimits, SearchOutcome, SearchStats,
};
