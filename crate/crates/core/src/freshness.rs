// SPDX-License-Identifier: Apache-2.0

//! Freshness suggestions from evidence timestamps.
//!
//! Suggestions never touch declared judgements; they are reported next to
//! them so an assessor can spot stale ratings. The age windows are local
//! policy, not part of the scoring model.

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::diag::{Code, Diagnostic, Locus};
use crate::pipeline::{Node, NodeId};
use crate::rubric::{scale_text, Criterion, JudgementScore};

pub const DEFAULT_FRESH_WINDOW_DAYS: u32 = 365;
pub const DEFAULT_STALE_WINDOW_DAYS: u32 = 1095;

/// Age thresholds in days. Evidence no older than `fresh_window_days`
/// suggests 3, no older than `stale_window_days` suggests 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPolicy", deny_unknown_fields)]
pub struct FreshnessPolicy {
    fresh_window_days: u32,
    stale_window_days: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolicy {
    #[serde(default = "default_fresh")]
    fresh_window_days: u32,
    #[serde(default = "default_stale")]
    stale_window_days: u32,
}

fn default_fresh() -> u32 {
    DEFAULT_FRESH_WINDOW_DAYS
}

fn default_stale() -> u32 {
    DEFAULT_STALE_WINDOW_DAYS
}

impl TryFrom<RawPolicy> for FreshnessPolicy {
    type Error = String;

    fn try_from(raw: RawPolicy) -> Result<Self, Self::Error> {
        FreshnessPolicy::new(raw.fresh_window_days, raw.stale_window_days)
    }
}

impl Default for FreshnessPolicy {
    fn default() -> Self {
        FreshnessPolicy {
            fresh_window_days: DEFAULT_FRESH_WINDOW_DAYS,
            stale_window_days: DEFAULT_STALE_WINDOW_DAYS,
        }
    }
}

impl FreshnessPolicy {
    pub fn new(fresh_window_days: u32, stale_window_days: u32) -> Result<Self, String> {
        if fresh_window_days == 0 {
            return Err("fresh_window_days must be positive".into());
        }
        if fresh_window_days >= stale_window_days {
            return Err(format!(
                "fresh_window_days ({fresh_window_days}) must be less than stale_window_days ({stale_window_days})"
            ));
        }
        Ok(FreshnessPolicy {
            fresh_window_days,
            stale_window_days,
        })
    }

    pub fn fresh_window_days(&self) -> u32 {
        self.fresh_window_days
    }

    pub fn stale_window_days(&self) -> u32 {
        self.stale_window_days
    }
}

/// Reads a `{"fresh_window_days": N, "stale_window_days": M}` policy file.
pub fn parse_policy(bytes: &[u8]) -> Result<FreshnessPolicy, Diagnostic> {
    let value: serde_json::Value = serde_json::from_slice(bytes)
        .map_err(|e| Diagnostic::document(Code::Syntax, format!("malformed policy JSON: {e}")))?;
    serde_json::from_value(value).map_err(|e| Diagnostic::document(Code::Schema, format!("invalid policy: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreshnessSuggestion {
    pub node_id: NodeId,
    pub suggested: JudgementScore,
    pub declared: Option<JudgementScore>,
    pub rationale: String,
    pub conflicts_with_declared: bool,
}

/// Suggests a freshness judgement for `node` as of `as_of`.
///
/// Live validation wins over any timestamp (4). Otherwise the newest dated
/// evidence decides: within the fresh window 3, within the stale window 2,
/// older 1. A node with no dated evidence gets 1.
pub fn suggest_freshness(
    node: &Node,
    policy: &FreshnessPolicy,
    as_of: NaiveDate,
) -> Result<FreshnessSuggestion, Diagnostic> {
    if let Some(future) = node.evidence.iter().filter_map(|e| e.last_updated).find(|&d| d > as_of) {
        return Err(Diagnostic::new(
            Code::FutureEvidence,
            Locus::Node(node.id.to_string()),
            format!(
                "evidence on {} is dated {future}, after the evaluation date {as_of}",
                node.id
            ),
        ));
    }

    let newest = node.evidence.iter().filter_map(|e| e.last_updated).max();
    let (score, why) = if let Some(live) = node.evidence.iter().find(|e| e.live_validation) {
        (4, format!("live validation declared ({})", live.description))
    } else if let Some(date) = newest {
        let age = (as_of - date).num_days();
        let fresh = i64::from(policy.fresh_window_days);
        let stale = i64::from(policy.stale_window_days);
        if age <= fresh {
            (
                3,
                format!("newest evidence {date} is {age} days old, within the {fresh}-day fresh window"),
            )
        } else if age <= stale {
            (
                2,
                format!("newest evidence {date} is {age} days old, within the {stale}-day stale window"),
            )
        } else {
            (
                1,
                format!("newest evidence {date} is {age} days old, beyond the {stale}-day stale window"),
            )
        }
    } else {
        (1, "no dated evidence".to_string())
    };

    let suggested = JudgementScore::new(score).expect("policy scores are 1..=4");
    let declared = node.judgements.as_ref().map(|j| j.freshness);
    Ok(FreshnessSuggestion {
        node_id: node.id.clone(),
        suggested,
        declared,
        rationale: format!(
            "policy: {why} -> {score} ({})",
            scale_text(Criterion::Freshness, suggested)
        ),
        conflicts_with_declared: declared.is_some_and(|d| d != suggested),
    })
}
