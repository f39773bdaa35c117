// SPDX-License-Identifier: Apache-2.0

//! The transparency manifest: a JSON bill of materials for one model.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "subject": {"id": "M", "name": "...", "description": "..."},
//!   "nodes": [{"id": "DS", "kind": "data-source", "name": "...",
//!              "evidence": [{"description": "...", "last_updated": "2024-01-31"}],
//!              "judgements": {"quantity": 3, "freshness": 2, "accuracy": 3}}],
//!   "edges": [{"from": "DS", "to": "M"}],
//!   "weights": {"DS": 1.0}
//! }
//! ```
//!
//! Parsing only checks structure. [`validate_manifest`] runs every semantic
//! check and reports all findings at once.

use std::collections::HashSet;
use std::path::Path;

use chrono::NaiveDate;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::diag::{Code, Diagnostic, Locus};
use crate::metric::WeightMap;
use crate::pipeline::{self, build_chain, Edge, EvidenceRef, Node, NodeId, NodeKind, Shape, SupplyChain};
use crate::rubric::{check_criteria, JudgementTriple};

pub const SCHEMA_VERSION: &str = "1";

type Extra = IndexMap<String, Value>;

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema_version: String,
    pub subject: Subject,
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<IndexMap<String, Number>>,
    /// Fields this schema version does not define.
    #[serde(flatten)]
    pub extra: Extra,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Subject {
    pub id: NodeId,
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(flatten)]
    pub extra: Extra,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub id: NodeId,
    pub kind: NodeKind,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub evidence: Vec<EvidenceRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub judgements: Option<JudgementRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sub_manifest: Option<String>,
    #[serde(flatten)]
    pub extra: Extra,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvidenceRecord {
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uri: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub last_updated: Option<NaiveDate>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub live_validation: bool,
    #[serde(flatten)]
    pub extra: Extra,
}

/// Judgements as written. Numbers stay raw so that out-of-range and
/// fractional values survive parsing and are reported by validation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JudgementRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantity: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub freshness: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accuracy: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rationale: Option<IndexMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assessed_by: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assessed_on: Option<NaiveDate>,
    #[serde(flatten)]
    pub extra: Extra,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: NodeId,
    pub to: NodeId,
    #[serde(flatten)]
    pub extra: Extra,
}

impl From<&EvidenceRecord> for EvidenceRef {
    fn from(r: &EvidenceRecord) -> Self {
        EvidenceRef {
            description: r.description.clone(),
            uri: r.uri.clone(),
            last_updated: r.last_updated,
            live_validation: r.live_validation,
        }
    }
}

impl JudgementRecord {
    pub fn from_triple(t: &JudgementTriple) -> Self {
        JudgementRecord {
            quantity: Some(t.quantity.get().into()),
            freshness: Some(t.freshness.get().into()),
            accuracy: Some(t.accuracy.get().into()),
            rationale: (!t.rationale.is_empty()).then(|| t.rationale.clone()),
            assessed_by: t.assessed_by.clone(),
            assessed_on: t.assessed_on,
            extra: Extra::new(),
        }
    }

    fn check(&self, locus: &Locus) -> Result<JudgementTriple, Vec<Diagnostic>> {
        let raw = |n: &Option<Number>| n.as_ref().map(|n| n.as_f64().unwrap_or(f64::NAN));
        let mut triple = check_criteria(locus, raw(&self.quantity), raw(&self.freshness), raw(&self.accuracy))?;
        triple.rationale = self.rationale.clone().unwrap_or_default();
        triple.assessed_by = self.assessed_by.clone();
        triple.assessed_on = self.assessed_on;
        Ok(triple)
    }

    fn has_rationale(&self) -> bool {
        self.rationale
            .as_ref()
            .is_some_and(|r| r.values().any(|text| !text.trim().is_empty()))
    }
}

impl NodeRecord {
    /// Converts to a domain node, validating judgements.
    pub fn to_node(&self) -> Result<Node, Vec<Diagnostic>> {
        let judgements = match &self.judgements {
            Some(j) => Some(j.check(&Locus::Node(self.id.to_string()))?),
            None => None,
        };
        Ok(Node {
            id: self.id.clone(),
            kind: self.kind,
            name: self.name.clone(),
            role: self.role.clone(),
            description: self.description.clone().unwrap_or_default(),
            evidence: self.evidence.iter().map(EvidenceRef::from).collect(),
            judgements,
            sub_manifest: self.sub_manifest.clone(),
        })
    }

    fn shape(&self) -> Shape<'_> {
        Shape {
            id: &self.id,
            kind: self.kind,
            has_sub_manifest: self.sub_manifest.is_some(),
        }
    }
}

fn syntax(err: &serde_json::Error) -> Diagnostic {
    Diagnostic::document(Code::Syntax, format!("malformed JSON: {err}"))
}

/// Structural parse: well-formed JSON, a known schema version and the
/// expected field types. Semantic checks are left to [`validate_manifest`].
pub fn parse_manifest(bytes: &[u8]) -> Result<Manifest, Diagnostic> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| syntax(&e))?;
    let Value::Object(top) = &value else {
        return Err(Diagnostic::document(Code::Schema, "manifest must be a JSON object"));
    };
    match top.get("schema_version") {
        None => {
            return Err(Diagnostic::new(
                Code::Schema,
                Locus::Field("schema_version".into()),
                "missing field `schema_version`",
            ))
        }
        Some(Value::String(v)) if v == SCHEMA_VERSION => {}
        Some(Value::String(v)) => {
            return Err(Diagnostic::new(
                Code::Version,
                Locus::Field("schema_version".into()),
                format!("unsupported schema_version {v:?}; this build reads \"{SCHEMA_VERSION}\""),
            ))
        }
        Some(_) => {
            return Err(Diagnostic::new(
                Code::Schema,
                Locus::Field("schema_version".into()),
                "schema_version must be a string",
            ))
        }
    }
    // Re-read from bytes rather than the value so schema errors carry positions.
    serde_json::from_slice(bytes).map_err(|e| Diagnostic::document(Code::Schema, e.to_string()))
}

pub fn read_manifest(path: &Path) -> Result<Manifest, Diagnostic> {
    let bytes = std::fs::read(path)
        .map_err(|e| Diagnostic::document(Code::Io, format!("cannot read {}: {e}", path.display())))?;
    parse_manifest(&bytes)
}

/// Canonical bytes: schema field order, declaration order for nodes and
/// edges, two-space indentation and a trailing newline.
pub fn serialize_manifest(manifest: &Manifest) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(manifest).expect("manifest is always representable as JSON");
    out.push(b'\n');
    out
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct ValidationReport {
    pub errors: Vec<Diagnostic>,
    pub warnings: Vec<Diagnostic>,
    pub ok: bool,
}

impl ValidationReport {
    pub fn from_findings(findings: impl IntoIterator<Item = Diagnostic>, strict: bool) -> Self {
        let (warnings, errors): (Vec<_>, Vec<_>) = findings
            .into_iter()
            .partition(|d| d.code.is_warning() && !(strict && d.code.promoted_in_strict()));
        ValidationReport {
            ok: errors.is_empty(),
            errors,
            warnings,
        }
    }

    pub fn codes(&self) -> impl Iterator<Item = Code> + '_ {
        self.errors.iter().chain(&self.warnings).map(|d| d.code)
    }

    pub fn has(&self, code: Code) -> bool {
        self.codes().any(|c| c == code)
    }
}

fn unknown_fields(m: &Manifest) -> Vec<Diagnostic> {
    let mut found = Vec::new();
    let mut note = |prefix: &str, extra: &Extra| {
        for key in extra.keys() {
            let path = if prefix.is_empty() {
                key.clone()
            } else {
                format!("{prefix}.{key}")
            };
            found.push(Diagnostic::new(
                Code::UnknownField,
                Locus::Field(path.clone()),
                format!("unknown field `{path}`"),
            ));
        }
    };
    note("", &m.extra);
    note("subject", &m.subject.extra);
    for (i, node) in m.nodes.iter().enumerate() {
        let prefix = format!("nodes[{i}]");
        note(&prefix, &node.extra);
        for (j, ev) in node.evidence.iter().enumerate() {
            note(&format!("{prefix}.evidence[{j}]"), &ev.extra);
        }
        if let Some(j) = &node.judgements {
            note(&format!("{prefix}.judgements"), &j.extra);
        }
    }
    for (i, edge) in m.edges.iter().enumerate() {
        note(&format!("edges[{i}]"), &edge.extra);
    }
    found
}

fn weight_map(raw: &IndexMap<String, Number>) -> Result<WeightMap, Vec<Diagnostic>> {
    let mut bad = Vec::new();
    let mut map = IndexMap::new();
    for (key, value) in raw {
        match NodeId::new(key.as_str()) {
            Ok(id) => {
                map.insert(id, value.as_f64().unwrap_or(f64::NAN));
            }
            Err(e) => bad.push(Diagnostic::new(
                Code::BadWeights,
                Locus::Field(format!("weights.{key}")),
                e.to_string(),
            )),
        }
    }
    if bad.is_empty() {
        Ok(WeightMap::new(map))
    } else {
        Err(bad)
    }
}

impl Manifest {
    /// Non-subject nodes with no incoming edge, in declaration order.
    fn leaf_ids(&self) -> Vec<&NodeId> {
        let targets: HashSet<&NodeId> = self.edges.iter().map(|e| &e.to).collect();
        let mut seen = HashSet::new();
        self.nodes
            .iter()
            .map(|n| &n.id)
            .filter(|id| **id != self.subject.id && !targets.contains(id) && seen.insert(*id))
            .collect()
    }

    fn findings(&self) -> Vec<Diagnostic> {
        let mut found = Vec::new();

        if self.schema_version != SCHEMA_VERSION {
            found.push(Diagnostic::new(
                Code::Version,
                Locus::Field("schema_version".into()),
                format!("unsupported schema_version {:?}", self.schema_version),
            ));
        }
        found.extend(unknown_fields(self));

        let shapes: Vec<Shape<'_>> = self.nodes.iter().map(NodeRecord::shape).collect();
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge::new(e.from.clone(), e.to.clone()))
            .collect();
        found.extend(pipeline::diagnose_shapes(&self.subject.id, &shapes, &edges));

        for node in &self.nodes {
            if let Some(j) = &node.judgements {
                if let Err(problems) = j.check(&Locus::Node(node.id.to_string())) {
                    found.extend(problems);
                }
            }
        }

        let leaves = self.leaf_ids();
        let leaf_set: HashSet<&NodeId> = leaves.iter().copied().collect();
        for node in &self.nodes {
            let id = node.id.as_str();
            if !leaf_set.contains(&node.id) {
                if node.judgements.is_some() {
                    found.push(Diagnostic::node(
                        Code::InternalJudgement,
                        id,
                        format!("{id} is not a leaf; its judgements are ignored for scoring"),
                    ));
                }
                continue;
            }
            match &node.judgements {
                None => found.push(Diagnostic::node(
                    Code::MissingJudgement,
                    id,
                    format!("leaf {id} has no judgements"),
                )),
                Some(j) if !j.has_rationale() => found.push(Diagnostic::node(
                    Code::NoRationale,
                    id,
                    format!("judgements on {id} carry no rationale"),
                )),
                Some(_) => {}
            }
            if node.evidence.is_empty() {
                found.push(Diagnostic::node(
                    Code::NoEvidence,
                    id,
                    format!("leaf {id} lists no evidence"),
                ));
            }
        }
        if leaves.is_empty() {
            found.push(Diagnostic::node(
                Code::NoLeaves,
                self.subject.id.as_str(),
                "the manifest has no contributing leaf nodes to score",
            ));
        }

        if let Some(raw) = &self.weights {
            match weight_map(raw) {
                Ok(w) => found.extend(w.problems(&leaves)),
                Err(problems) => found.extend(problems),
            }
        }
        found
    }

    /// Validates and, when clean, builds the chain and weight map.
    pub fn compile(&self, strict: bool) -> Result<Compiled, ValidationReport> {
        let report = validate_manifest(self, strict);
        if !report.ok {
            return Err(report);
        }
        let nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| n.to_node().expect("judgements validated above"))
            .collect();
        let edges = self.edges.iter().map(|e| Edge::new(e.from.clone(), e.to.clone()));
        let chain = build_chain(&self.subject.id, nodes, edges).expect("structure validated above");
        let weights = self
            .weights
            .as_ref()
            .map(|raw| weight_map(raw).expect("weights validated above"));
        Ok(Compiled { chain, weights, report })
    }
}

/// A manifest that passed validation.
#[derive(Debug, Clone)]
pub struct Compiled {
    pub chain: SupplyChain,
    pub weights: Option<WeightMap>,
    /// Warnings raised along the way.
    pub report: ValidationReport,
}

/// Runs every check. Strict mode turns internal-node judgements, missing
/// rationales and unknown fields into errors.
pub fn validate_manifest(manifest: &Manifest, strict: bool) -> ValidationReport {
    ValidationReport::from_findings(manifest.findings(), strict)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIGURE_ONE: &str = r#"{
        "schema_version": "1",
        "subject": {"id": "M", "name": "model", "description": "trained model"},
        "nodes": [
            {"id": "DS", "kind": "data-source", "name": "raw data",
             "evidence": [{"description": "datasheet"}],
             "judgements": {"quantity": 3, "freshness": 3, "accuracy": 3, "rationale": {"quantity": "ok"}}},
            {"id": "H1", "kind": "human-contributor", "name": "curator", "role": "curator",
             "evidence": [{"description": "bio"}],
             "judgements": {"quantity": 4, "freshness": 4, "accuracy": 4, "rationale": {"quantity": "ok"}}},
            {"id": "LD", "kind": "derived-asset", "name": "labelled data"},
            {"id": "H2", "kind": "human-contributor", "name": "engineer",
             "evidence": [{"description": "repo"}],
             "judgements": {"quantity": 4, "freshness": 4, "accuracy": 4, "rationale": {"quantity": "ok"}}},
            {"id": "M", "kind": "output-model", "name": "model"}
        ],
        "edges": [{"from": "DS", "to": "LD"}, {"from": "H1", "to": "LD"},
                  {"from": "LD", "to": "M"}, {"from": "H2", "to": "M"}]
    }"#;

    fn parse(s: &str) -> Manifest {
        parse_manifest(s.as_bytes()).unwrap()
    }

    fn edit(f: impl FnOnce(&mut Value)) -> Vec<u8> {
        let mut v: Value = serde_json::from_str(FIGURE_ONE).unwrap();
        f(&mut v);
        serde_json::to_vec(&v).unwrap()
    }

    #[test]
    fn parses_figure_one() {
        let m = parse(FIGURE_ONE);
        assert_eq!((m.nodes.len(), m.edges.len()), (5, 4));
        let report = validate_manifest(&m, true);
        assert!(report.ok, "{report:?}");
        assert!(report.warnings.is_empty());
        let compiled = m.compile(false).unwrap();
        assert_eq!(compiled.chain.leaf_nodes().len(), 3);
    }

    #[test]
    fn document_level_errors() {
        assert_eq!(parse_manifest(b"").unwrap_err().code, Code::Syntax);
        assert_eq!(parse_manifest(b"{\"a\":").unwrap_err().code, Code::Syntax);
        assert_eq!(parse_manifest(b"[]").unwrap_err().code, Code::Schema);
        assert_eq!(parse_manifest(b"{}").unwrap_err().code, Code::Schema);
        assert_eq!(parse_manifest(&[0xff, 0xfe]).unwrap_err().code, Code::Syntax);
        let v99 = edit(|v| v["schema_version"] = "99".into());
        assert_eq!(parse_manifest(&v99).unwrap_err().code, Code::Version);
        let numeric = edit(|v| v["schema_version"] = 1.into());
        assert_eq!(parse_manifest(&numeric).unwrap_err().code, Code::Schema);
    }

    #[test]
    fn schema_errors() {
        let cases = [
            edit(|v| v["nodes"][0]["kind"] = "human".into()),
            edit(|v| v["nodes"][0]["id"] = "bad id".into()),
            edit(|v| v["nodes"][0].as_object_mut().unwrap().remove("name").map(drop).unwrap()),
            edit(|v| v["nodes"][0]["judgements"]["quantity"] = "3".into()),
            edit(|v| v["nodes"][0]["evidence"][0]["last_updated"] = "2020-02-30".into()),
            edit(|v| v["edges"] = Value::Null),
        ];
        for bytes in cases {
            let err = parse_manifest(&bytes).unwrap_err();
            assert_eq!(err.code, Code::Schema, "{err}");
        }
    }

    #[test]
    fn judgement_errors_are_all_reported() {
        let bytes = edit(|v| {
            v["nodes"][0]["judgements"]["quantity"] = 5.into();
            v["nodes"][1]["judgements"]["accuracy"] = serde_json::json!(2.5);
            v["nodes"][3]["judgements"].as_object_mut().unwrap().remove("freshness");
        });
        let report = validate_manifest(&parse_manifest(&bytes).unwrap(), false);
        let codes: Vec<_> = report.errors.iter().map(|d| (d.code, d.locus.to_string())).collect();
        assert_eq!(
            codes,
            [
                (Code::Range, "node DS".to_string()),
                (Code::NotInteger, "node H1".to_string()),
                (Code::MissingCriterion, "node H2".to_string()),
            ]
        );
    }

    #[test]
    fn integral_floats_are_integers() {
        let bytes = edit(|v| v["nodes"][0]["judgements"]["quantity"] = serde_json::json!(3.0));
        assert!(validate_manifest(&parse_manifest(&bytes).unwrap(), false).ok);
    }

    #[test]
    fn internal_judgement_promotion() {
        let bytes =
            edit(|v| v["nodes"][2]["judgements"] = serde_json::json!({"quantity": 2, "freshness": 2, "accuracy": 2}));
        let m = parse_manifest(&bytes).unwrap();
        let lax = validate_manifest(&m, false);
        assert!(lax.ok);
        assert_eq!(lax.warnings[0].code, Code::InternalJudgement);
        let strict = validate_manifest(&m, true);
        assert!(!strict.ok);
        assert_eq!(strict.errors[0].code, Code::InternalJudgement);
        // judgements on internal nodes never reach the score
        assert!(m.compile(false).is_ok());
    }

    #[test]
    fn rationale_and_evidence_warnings() {
        let bytes = edit(|v| {
            v["nodes"][0]["judgements"].as_object_mut().unwrap().remove("rationale");
            v["nodes"][1].as_object_mut().unwrap().remove("evidence");
        });
        let m = parse_manifest(&bytes).unwrap();
        let lax = validate_manifest(&m, false);
        assert!(lax.ok);
        let codes: Vec<_> = lax.warnings.iter().map(|d| d.code).collect();
        assert_eq!(codes, [Code::NoRationale, Code::NoEvidence]);
        let strict = validate_manifest(&m, true);
        assert_eq!(
            strict.errors.iter().map(|d| d.code).collect::<Vec<_>>(),
            [Code::NoRationale]
        );
        assert_eq!(
            strict.warnings.iter().map(|d| d.code).collect::<Vec<_>>(),
            [Code::NoEvidence]
        );
    }

    #[test]
    fn unknown_fields_warn_then_fail_strict() {
        let bytes = edit(|v| {
            v["colour"] = "blue".into();
            v["nodes"][0]["judgements"]["confidence"] = 1.into();
        });
        let m = parse_manifest(&bytes).unwrap();
        let lax = validate_manifest(&m, false);
        assert!(lax.ok);
        let paths: Vec<_> = lax.warnings.iter().map(|d| d.locus.to_string()).collect();
        assert_eq!(paths, ["field colour", "field nodes[0].judgements.confidence"]);
        assert!(!validate_manifest(&m, true).ok);
        // unknown fields survive a round trip
        let again = parse_manifest(&serialize_manifest(&m)).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn weights_are_checked_against_leaves() {
        let good = edit(|v| v["weights"] = serde_json::json!({"DS": 0.5, "H1": 0.25, "H2": 0.25}));
        let m = parse_manifest(&good).unwrap();
        assert!(validate_manifest(&m, false).ok);
        assert_eq!(m.compile(false).unwrap().weights.unwrap().get("DS"), Some(0.5));

        for bad in [
            serde_json::json!({"DS": 0.5, "H1": 0.5}),
            serde_json::json!({"DS": 0.5, "H1": 0.25, "H2": 0.25, "LD": 0.0}),
            serde_json::json!({"DS": 0.5, "H1": 0.25, "H2": 0.5}),
            serde_json::json!({"DS": -0.5, "H1": 0.75, "H2": 0.75}),
            serde_json::json!({"DS": 0.5, "H1": 0.25, "H2": 0.25, "no way": 0.0}),
        ] {
            let bytes = edit(|v| v["weights"] = bad.clone());
            let report = validate_manifest(&parse_manifest(&bytes).unwrap(), false);
            assert!(report.has(Code::BadWeights), "{bad}");
        }
    }

    #[test]
    fn subject_only_manifest() {
        let bytes = edit(|v| {
            v["nodes"] = serde_json::json!([{"id": "M", "kind": "output-model", "name": "m"}]);
            v["edges"] = serde_json::json!([]);
        });
        let report = validate_manifest(&parse_manifest(&bytes).unwrap(), false);
        assert_eq!(
            report.errors.iter().map(|d| d.code).collect::<Vec<_>>(),
            [Code::NoLeaves]
        );
    }

    #[test]
    fn subject_must_be_the_output_node() {
        let bytes = edit(|v| v["subject"]["id"] = "LD".into());
        let report = validate_manifest(&parse_manifest(&bytes).unwrap(), false);
        assert!(report.has(Code::NoSubject));
    }

    #[test]
    fn canonical_form() {
        let m = parse(FIGURE_ONE);
        let once = serialize_manifest(&m);
        let text = std::str::from_utf8(&once).unwrap();
        assert!(text.ends_with("}\n"));
        assert!(text.starts_with("{\n  \"schema_version\": \"1\",\n  \"subject\": {"));
        assert!(!text.contains("weights"));
        assert!(!text.contains("live_validation"));
        let again = serialize_manifest(&parse_manifest(&once).unwrap());
        assert_eq!(once, again);
    }

    #[test]
    fn judgement_record_from_triple() {
        let t = JudgementTriple::from_values(4, 2, 3);
        let r = JudgementRecord::from_triple(&t);
        assert_eq!(r.check(&Locus::Document).unwrap(), t);
    }
}
