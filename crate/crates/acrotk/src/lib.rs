//! Recognition, aggregation and clustering of acronym pairs in
//! multilingual news text.
//!
//! The toolkit finds `Long-Form (Short-Form)` definitions such as
//! "International Monetary Fund (IMF)" with a right-to-left character
//! matcher over a bounded word window, filters the raw matches with a
//! small set of acceptance rules, aggregates unique pairs with their
//! metadata into a [`store::PairStore`], computes per-language corpus
//! statistics, and groups long-form variants of the same short form by
//! hierarchical group-average clustering over normalized edit-distance
//! similarity.
//!
//! Works on any language with a Latin-style alphabet that distinguishes
//! case; case is what anchors both candidate detection and filtering.
//!
//! # Pipeline
//!
//! ```text
//! articles (jsonl) -> extract -> occurrences -> aggregate -> PairStore
//!                                                  |-> stats (table TSV)
//!                                                  |-> cluster (jsonl)
//!                                                  '-> categorize (TSV)
//! ```
//!
//! The `acrotk` binary in the companion CLI crate wires these stages to
//! files; everything here is usable as a library.

pub mod cluster;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod extractor;
pub mod filters;
pub mod pipeline;
pub mod store;

pub use cluster::{
    cluster_group, cluster_long_forms, edit_distance, normalized_distance, similarity, Cluster,
    ClusterConfig,
};
pub use corpus::{segment_sentences, tokenize, Article, Diagnostic, Span};
pub use error::{Error, Result};
pub use extractor::{extract_pairs, find_sf_candidates, match_long_form, PairOccurrence};
pub use filters::{check_lf, check_sf, FilterVerdict, RuleId, Stoplist};
pub use store::{CorpusStats, PairRecord, PairStore};
