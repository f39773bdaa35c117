// SPDX-License-Identifier: Apache-2.0

//! Transparency scoring for ML models and data assets described by a
//! bill-of-materials manifest.
//!
//! A manifest lists every contribution to a model (data sources, human
//! contributors, derived assets, basis models) and how they feed into one
//! another. Leaf contributions carry three 1..=4 judgements (quantity,
//! freshness, accuracy) which roll up into per-node visibility indices and a
//! weighted overall index in `[1, 4]`.
//!
//! Module map:
//!
//! - [`pipeline`]: the contribution DAG and its leaf set
//! - [`rubric`]: the judgement scale and triple validation
//! - [`metric`]: visibility indices and chain aggregation
//! - [`manifest`]: the JSON manifest format and full validation
//! - [`freshness`]: timestamp-driven freshness suggestions
//! - [`report`]: rendering, ranking, explanation and gating used by the CLI

#![forbid(unsafe_code)]

pub mod cli;
pub mod diag;
pub mod freshness;
pub mod manifest;
pub mod metric;
pub mod pipeline;
pub mod report;
pub mod rubric;

pub use diag::{Code, Diagnostic, Locus};
pub use freshness::{parse_policy, suggest_freshness, FreshnessPolicy, FreshnessSuggestion};
pub use manifest::{parse_manifest, serialize_manifest, validate_manifest, Manifest, ValidationReport};
pub use metric::{
    chain_visibility, equal_weights, node_visibility, parse_weights, vis_quality, vis_quantity, ChainScore, Mode,
    NodeScore, WeightMap,
};
pub use pipeline::{build_chain, leaf_nodes, Edge, EvidenceRef, Node, NodeId, NodeKind, SupplyChain};
pub use rubric::{scale_text, validate_triple, Criterion, JudgementScore, JudgementTriple};
