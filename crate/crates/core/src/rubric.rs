// SPDX-License-Identifier: Apache-2.0

//! The four-point documentation scale and judgement validation.

use std::fmt;

use chrono::NaiveDate;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::diag::{Code, Diagnostic, Locus};

/// One of the three documentation criteria each leaf is judged on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Quantity,
    Freshness,
    Accuracy,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [Criterion::Quantity, Criterion::Freshness, Criterion::Accuracy];

    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::Quantity => "quantity",
            Criterion::Freshness => "freshness",
            Criterion::Accuracy => "accuracy",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An integer judgement in `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct JudgementScore(u8);

impl JudgementScore {
    pub const MIN: JudgementScore = JudgementScore(1);
    pub const MAX: JudgementScore = JudgementScore(4);

    pub fn new(value: u8) -> Option<Self> {
        (1..=4).contains(&value).then_some(JudgementScore(value))
    }

    /// Checks a raw numeric judgement. Non-integers are rejected before the
    /// range check, so `5.5` reports `E_NOT_INTEGER` rather than `E_RANGE`.
    pub fn from_raw(value: f64) -> Result<Self, Code> {
        if !value.is_finite() || value.fract() != 0.0 {
            return Err(Code::NotInteger);
        }
        if !(1.0..=4.0).contains(&value) {
            return Err(Code::Range);
        }
        Ok(JudgementScore(value as u8))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.0)
    }

    pub fn all() -> impl Iterator<Item = JudgementScore> {
        (1..=4).map(JudgementScore)
    }
}

impl fmt::Display for JudgementScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The three judgements for one contribution plus assessor metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JudgementTriple {
    pub quantity: JudgementScore,
    pub freshness: JudgementScore,
    pub accuracy: JudgementScore,
    pub rationale: IndexMap<String, String>,
    pub assessed_by: Option<String>,
    pub assessed_on: Option<NaiveDate>,
}

impl JudgementTriple {
    pub fn new(quantity: JudgementScore, freshness: JudgementScore, accuracy: JudgementScore) -> Self {
        JudgementTriple {
            quantity,
            freshness,
            accuracy,
            rationale: IndexMap::new(),
            assessed_by: None,
            assessed_on: None,
        }
    }

    /// Shorthand for tests and fixtures; panics outside `1..=4`.
    pub fn from_values(quantity: u8, freshness: u8, accuracy: u8) -> Self {
        let score = |v| JudgementScore::new(v).expect("judgement outside 1..=4");
        JudgementTriple::new(score(quantity), score(freshness), score(accuracy))
    }

    pub fn score(&self, criterion: Criterion) -> JudgementScore {
        match criterion {
            Criterion::Quantity => self.quantity,
            Criterion::Freshness => self.freshness,
            Criterion::Accuracy => self.accuracy,
        }
    }
}

/// Validates raw judgements, reporting every problem found.
pub(crate) fn check_criteria(
    locus: &Locus,
    quantity: Option<f64>,
    freshness: Option<f64>,
    accuracy: Option<f64>,
) -> Result<JudgementTriple, Vec<Diagnostic>> {
    let mut problems = Vec::new();
    let mut check = |criterion: Criterion, raw: Option<f64>| -> Option<JudgementScore> {
        let Some(value) = raw else {
            problems.push(Diagnostic::new(
                Code::MissingCriterion,
                locus.clone(),
                format!("{criterion} judgement is missing"),
            ));
            return None;
        };
        match JudgementScore::from_raw(value) {
            Ok(score) => Some(score),
            Err(code) => {
                let what = if code == Code::NotInteger {
                    "is not an integer"
                } else {
                    "is outside 1..=4"
                };
                problems.push(Diagnostic::new(
                    code,
                    locus.clone(),
                    format!("{criterion} judgement {value} {what}"),
                ));
                None
            }
        }
    };
    let q = check(Criterion::Quantity, quantity);
    let f = check(Criterion::Freshness, freshness);
    let a = check(Criterion::Accuracy, accuracy);
    match (q, f, a) {
        (Some(q), Some(f), Some(a)) => Ok(JudgementTriple::new(q, f, a)),
        _ => Err(problems),
    }
}

/// Builds a triple from raw assessor input. The first problem found is
/// returned, checking quantity, freshness and accuracy in that order.
pub fn validate_triple(
    quantity: Option<f64>,
    freshness: Option<f64>,
    accuracy: Option<f64>,
) -> Result<JudgementTriple, Diagnostic> {
    check_criteria(&Locus::Document, quantity, freshness, accuracy).map_err(|mut problems| problems.swap_remove(0))
}

/// One cell of the documentation scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScaleDescriptor {
    pub criterion: Criterion,
    pub score: JudgementScore,
    pub text: &'static str,
}

const fn cell(criterion: Criterion, score: u8, text: &'static str) -> ScaleDescriptor {
    ScaleDescriptor {
        criterion,
        score: JudgementScore(score),
        text,
    }
}

pub const SCALE: [ScaleDescriptor; 12] = [
    cell(Criterion::Quantity, 1, "Sparse or insufficient information"),
    cell(Criterion::Quantity, 2, "Some information missing"),
    cell(Criterion::Quantity, 3, "Sufficient to gain confidence"),
    cell(Criterion::Quantity, 4, "Sufficient to validate"),
    cell(Criterion::Freshness, 1, "Never updated"),
    cell(Criterion::Freshness, 2, "Out-of-date"),
    cell(Criterion::Freshness, 3, "Updated when changed"),
    cell(Criterion::Freshness, 4, "Real-time validation"),
    cell(Criterion::Accuracy, 1, "Demonstrably inaccurate"),
    cell(Criterion::Accuracy, 2, "Believed to be inaccurate"),
    cell(Criterion::Accuracy, 3, "Believed to be accurate"),
    cell(Criterion::Accuracy, 4, "Evidenced and verifiable"),
];

/// Anchor description for a criterion at a given score.
pub fn scale_text(criterion: Criterion, score: JudgementScore) -> &'static str {
    let row = match criterion {
        Criterion::Quantity => 0,
        Criterion::Freshness => 4,
        Criterion::Accuracy => 8,
    };
    SCALE[row + usize::from(score.get() - 1)].text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_table_four_ds_row() {
        let t = validate_triple(Some(3.0), Some(2.0), Some(3.0)).unwrap();
        assert_eq!((t.quantity.get(), t.freshness.get(), t.accuracy.get()), (3, 2, 3));
    }

    #[test]
    fn rejects_below_minimum() {
        let err = validate_triple(Some(0.0), Some(1.0), Some(1.0)).unwrap_err();
        assert_eq!(err.code, Code::Range);
    }

    #[test]
    fn rejects_fractional() {
        let err = validate_triple(Some(2.5), Some(3.0), Some(3.0)).unwrap_err();
        assert_eq!(err.code, Code::NotInteger);
        assert_eq!(JudgementScore::from_raw(5.5), Err(Code::NotInteger));
        assert_eq!(JudgementScore::from_raw(f64::NAN), Err(Code::NotInteger));
        assert_eq!(JudgementScore::from_raw(f64::INFINITY), Err(Code::NotInteger));
    }

    #[test]
    fn rejects_missing() {
        let err = validate_triple(Some(3.0), None, Some(3.0)).unwrap_err();
        assert_eq!(err.code, Code::MissingCriterion);
        assert!(err.message.contains("freshness"));
    }

    #[test]
    fn collects_every_problem() {
        let problems = check_criteria(&Locus::Node("DS".into()), Some(5.0), None, Some(1.5)).unwrap_err();
        let codes: Vec<_> = problems.iter().map(|d| d.code).collect();
        assert_eq!(codes, [Code::Range, Code::MissingCriterion, Code::NotInteger]);
    }

    #[test]
    fn accepts_exactly_the_64_integer_triples() {
        let mut accepted = 0;
        for q in -1..=6 {
            for f in -1..=6 {
                for a in -1..=6 {
                    let ok = validate_triple(Some(q as f64), Some(f as f64), Some(a as f64)).is_ok();
                    let expected = [q, f, a].iter().all(|v| (1..=4).contains(v));
                    assert_eq!(ok, expected, "({q},{f},{a})");
                    accepted += ok as usize;
                }
            }
        }
        assert_eq!(accepted, 64);
    }

    #[test]
    fn scale_anchors() {
        let s = |v| JudgementScore::new(v).unwrap();
        assert_eq!(scale_text(Criterion::Quantity, s(3)), "Sufficient to gain confidence");
        assert_eq!(scale_text(Criterion::Freshness, s(1)), "Never updated");
        assert_eq!(scale_text(Criterion::Accuracy, s(4)), "Evidenced and verifiable");
    }

    #[test]
    fn scale_is_total_and_distinct() {
        let mut texts = Vec::new();
        for c in Criterion::ALL {
            for s in JudgementScore::all() {
                let d = SCALE.iter().find(|d| d.criterion == c && d.score == s).unwrap();
                assert_eq!(scale_text(c, s), d.text);
                texts.push(d.text);
            }
        }
        texts.sort();
        texts.dedup();
        assert_eq!(texts.len(), 12);
    }
}
