//! Geometric attributes of synonym sets over unit word vectors.
//!
//! A synset is scored by removing each word `v` in turn, splitting the
//! remaining words into every unordered pair of nonempty blocks, and checking
//! whether adding `v` to either block pulls the blocks' normalized means
//! closer together. Summing the per-split verdicts gives the word's *rank*,
//! summing the similarity gains gives its *centrality*, and the words that
//! improve every split form the synset *interior*.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, model loading
//! and the command-line front end live in the `synattr` crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod geometry;
pub mod model;
pub mod partition;
pub mod resolve;
pub mod vector;

pub use error::{GeometryError, ModelError, RawSynsetError, ResolveError};
pub use geometry::{
    analyze_synset, interior_membership, partition_outcome, partition_outcomes,
    rank_and_centrality, AnalysisOptions, PartitionOutcome, ResolvedSynset, SynsetReport,
    SynsetWord, WordAttributes, DEFAULT_EPS, DEFAULT_MAX_SYNSET_SIZE,
};
pub use model::{EmbeddingModel, ModelBuilder, WordVector};
pub use partition::{enumerate_partitions, partition_count, sgn_eps, Partition};
pub use resolve::{
    resolve, DropReason, DroppedWord, OovMode, OovPolicy, RawSynset, ResolutionOutcome,
    ResolutionStatus,
};
pub use vector::{cosine, normalized_mean, set_similarity, DEGENERATE_NORM};
