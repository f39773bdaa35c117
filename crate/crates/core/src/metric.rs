// SPDX-License-Identifier: Apache-2.0

//! Visibility indices.
//!
//! For one leaf with judgements `q`, `f`, `a`:
//!
//! ```text
//! quantity = q
//! quality  = sqrt(a * f)
//! vis      = sqrt(quantity * quality)      (= q^1/2 * a^1/4 * f^1/4)
//! ```
//!
//! The chain index is the weighted sum of leaf `vis` values, with equal
//! weights `1/M` unless a weight map is supplied. Aggregation runs at full
//! `f64` precision. [`Mode::PaperCompat`] instead sums per-node values that
//! were first rounded to two decimals, which is how published score tables
//! are usually totalled.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::diag::{Code, Diagnostic, Locus};
use crate::pipeline::{NodeId, SupplyChain};
use crate::rubric::JudgementTriple;

/// Tolerance on `Σ W_k = 1`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    FullPrecision,
    PaperCompat,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::FullPrecision => "full-precision",
            Mode::PaperCompat => "paper-compat",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeScore {
    pub node_id: NodeId,
    pub vis_quantity: f64,
    pub vis_quality: f64,
    pub vis: f64,
}

pub fn vis_quantity(triple: &JudgementTriple) -> f64 {
    triple.quantity.as_f64()
}

pub fn vis_quality(triple: &JudgementTriple) -> f64 {
    (triple.accuracy.as_f64() * triple.freshness.as_f64()).sqrt()
}

fn score_triple(node_id: NodeId, triple: &JudgementTriple) -> NodeScore {
    let vis_quantity = vis_quantity(triple);
    let vis_quality = vis_quality(triple);
    NodeScore {
        node_id,
        vis_quantity,
        vis_quality,
        vis: (vis_quantity * vis_quality).sqrt(),
    }
}

/// Scores a bare triple. The returned `node_id` is a placeholder; chain
/// scoring fills in the real id.
pub fn node_visibility(triple: &JudgementTriple) -> NodeScore {
    score_triple(NodeId::new("_").expect("placeholder id is valid"), triple)
}

/// Non-negative leaf weights summing to one.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightMap(IndexMap<NodeId, f64>);

impl WeightMap {
    /// Wraps a mapping without checking it; [`chain_visibility`] checks it
    /// against the chain's leaves.
    pub fn new(weights: IndexMap<NodeId, f64>) -> Self {
        WeightMap(weights)
    }

    pub fn get(&self, id: &str) -> Option<f64> {
        self.0.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NodeId, f64)> {
        self.0.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.values().sum()
    }

    /// Every way this map fails to be a weighting of `leaves`.
    pub fn problems(&self, leaves: &[&NodeId]) -> Vec<Diagnostic> {
        let bad = |locus: Locus, message: String| Diagnostic::new(Code::BadWeights, locus, message);
        let mut found = Vec::new();
        for leaf in leaves {
            if !self.0.contains_key(*leaf) {
                found.push(bad(
                    Locus::Node(leaf.to_string()),
                    format!("no weight given for leaf {leaf}"),
                ));
            }
        }
        for (id, &w) in &self.0 {
            if !leaves.contains(&id) {
                found.push(bad(
                    Locus::Node(id.to_string()),
                    format!("weight given for {id}, which is not a scored leaf"),
                ));
            }
            if !w.is_finite() || w < 0.0 {
                found.push(bad(
                    Locus::Node(id.to_string()),
                    format!("weight {w} for {id} is not a non-negative number"),
                ));
            }
        }
        let sum = self.sum();
        if found.is_empty() && (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            found.push(bad(Locus::Document, format!("weights sum to {sum}, expected 1")));
        }
        found
    }
}

impl FromIterator<(NodeId, f64)> for WeightMap {
    fn from_iter<T: IntoIterator<Item = (NodeId, f64)>>(iter: T) -> Self {
        WeightMap(iter.into_iter().collect())
    }
}

/// Reads a standalone weights file: a JSON object mapping leaf id to weight.
/// Only the shape is checked here; [`WeightMap::problems`] checks the values.
pub fn parse_weights(bytes: &[u8]) -> Result<WeightMap, Diagnostic> {
    let raw: IndexMap<String, f64> = serde_json::from_slice(bytes).map_err(|e| {
        let code = if e.is_data() { Code::Schema } else { Code::Syntax };
        Diagnostic::document(code, format!("weights file must be a JSON map of id to number: {e}"))
    })?;
    raw.into_iter()
        .map(|(k, v)| {
            NodeId::new(k.as_str())
                .map(|id| (id, v))
                .map_err(|e| Diagnostic::new(Code::BadWeights, Locus::Field(k.clone()), e.to_string()))
        })
        .collect()
}

/// `1/M` for each of the chain's `M` leaves.
pub fn equal_weights(chain: &SupplyChain) -> Result<WeightMap, Diagnostic> {
    let leaves = chain.leaf_nodes();
    if leaves.is_empty() {
        return Err(no_leaves(chain));
    }
    let w = 1.0 / leaves.len() as f64;
    Ok(leaves.into_iter().map(|n| (n.id.clone(), w)).collect())
}

fn no_leaves(chain: &SupplyChain) -> Diagnostic {
    Diagnostic::node(
        Code::NoLeaves,
        chain.subject_id().as_str(),
        "the chain has no contributing leaf nodes to score",
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainScore {
    pub subject_id: NodeId,
    /// Leaf scores in declaration order.
    pub node_scores: Vec<NodeScore>,
    pub weights: WeightMap,
    pub vis: f64,
    pub mode: Mode,
    pub node_count: usize,
}

/// Overall visibility of a chain. Uses equal weights when `weights` is `None`.
pub fn chain_visibility(
    chain: &SupplyChain,
    weights: Option<&WeightMap>,
    mode: Mode,
) -> Result<ChainScore, Diagnostic> {
    let leaves = chain.leaf_nodes();
    if leaves.is_empty() {
        return Err(no_leaves(chain));
    }

    let mut node_scores = Vec::with_capacity(leaves.len());
    for leaf in &leaves {
        let triple = leaf.judgements.as_ref().ok_or_else(|| {
            Diagnostic::node(
                Code::MissingJudgement,
                leaf.id.as_str(),
                format!("leaf {} has no judgements", leaf.id),
            )
        })?;
        node_scores.push(score_triple(leaf.id.clone(), triple));
    }

    let weights = match weights {
        Some(w) => {
            let ids: Vec<&NodeId> = leaves.iter().map(|n| &n.id).collect();
            if let Some(problem) = w.problems(&ids).into_iter().next() {
                return Err(problem);
            }
            w.clone()
        }
        None => equal_weights(chain)?,
    };

    let term = |s: &NodeScore| match mode {
        Mode::FullPrecision => s.vis,
        Mode::PaperCompat => round_half_away(s.vis, 2),
    };
    // Sum in id order so the result does not depend on declaration order.
    let mut ordered: Vec<&NodeScore> = node_scores.iter().collect();
    ordered.sort_by(|a, b| a.node_id.cmp(&b.node_id));
    let sum: f64 = ordered
        .iter()
        .map(|s| term(s) * weights.get(s.node_id.as_str()).unwrap_or(0.0))
        .sum();
    // A weighted mean cannot leave the range of its terms; clamp away the
    // last-ulp drift of the summation.
    let (lo, hi) = node_scores
        .iter()
        .map(term)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));

    Ok(ChainScore {
        subject_id: chain.subject_id().clone(),
        node_count: node_scores.len(),
        node_scores,
        weights,
        vis: sum.clamp(lo, hi),
        mode,
    })
}

/// Formats `value` with `places` decimals, rounding half away from zero on
/// the exact binary value (not on its shortest decimal representation).
pub fn format_fixed(value: f64, places: usize) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    // Wide enough to hold the exact expansion of any finite f64.
    let exact = format!("{:.1100}", value.abs());
    let (int_part, frac_part) = exact.split_once('.').expect("fixed format has a point");
    let frac = frac_part.as_bytes();
    let mut digits: Vec<u8> = int_part.bytes().chain(frac[..places].iter().copied()).collect();
    if frac[places] >= b'5' {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, b'1');
                break;
            }
            i -= 1;
            if digits[i] == b'9' {
                digits[i] = b'0';
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let split = digits.len() - places;
    let mut out = String::with_capacity(digits.len() + 2);
    if value.is_sign_negative() && digits.iter().any(|&d| d != b'0') {
        out.push('-');
    }
    out.push_str(std::str::from_utf8(&digits[..split]).expect("ascii digits"));
    if places > 0 {
        out.push('.');
        out.push_str(std::str::from_utf8(&digits[split..]).expect("ascii digits"));
    }
    out
}

/// Half-away-from-zero rounding to `places` decimals.
pub fn round_half_away(value: f64, places: usize) -> f64 {
    format_fixed(value, places).parse().unwrap_or(value)
}
