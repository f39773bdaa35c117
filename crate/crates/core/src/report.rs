// SPDX-License-Identifier: Apache-2.0

//! Report rendering, ranking, node explanations and gating.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diag::{Code, Diagnostic};
use crate::freshness::FreshnessSuggestion;
use crate::metric::{format_fixed, ChainScore, Mode, NodeScore, WeightMap};
use crate::pipeline::SupplyChain;
use crate::rubric::{scale_text, Criterion};

pub const FOOTER: &str = "Overall VIS for model";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Markdown,
}

/// Process exit status. Exactly one applies to any invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Success = 0,
    GateFail = 1,
    Validation = 2,
    Parse = 3,
}

impl Exit {
    pub fn for_code(code: Code) -> Exit {
        if code.is_parse_level() {
            Exit::Parse
        } else {
            Exit::Validation
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub id: String,
    pub quantity: u8,
    pub freshness: u8,
    pub accuracy: u8,
    pub vis_quality: f64,
    pub vis: f64,
}

/// The machine-readable score report; text and markdown render from it too.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreReport {
    pub subject: String,
    pub mode: Mode,
    pub nodes: Vec<ReportRow>,
    pub overall_vis: f64,
    pub weights: WeightMap,
}

impl ScoreReport {
    pub fn new(chain: &SupplyChain, score: &ChainScore) -> Self {
        let nodes = score
            .node_scores
            .iter()
            .map(|s: &NodeScore| {
                let t = chain
                    .node(s.node_id.as_str())
                    .and_then(|n| n.judgements.as_ref())
                    .expect("scored nodes carry judgements");
                ReportRow {
                    id: s.node_id.to_string(),
                    quantity: t.quantity.get(),
                    freshness: t.freshness.get(),
                    accuracy: t.accuracy.get(),
                    vis_quality: s.vis_quality,
                    vis: s.vis,
                }
            })
            .collect();
        ScoreReport {
            subject: score.subject_id.to_string(),
            mode: score.mode,
            nodes,
            overall_vis: score.vis,
            weights: score.weights.clone(),
        }
    }

    fn equal_weights(&self) -> bool {
        let m = self.nodes.len() as f64;
        self.weights.iter().all(|(_, w)| w == 1.0 / m)
    }

    fn table(&self, precision: usize) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let weighted = !self.equal_weights();
        let mut header = vec!["Node", "Quantity", "Freshness", "Accuracy", "VISQual", "VIS"];
        if weighted {
            header.push("Weight");
        }
        let rows = self
            .nodes
            .iter()
            .map(|r| {
                let mut row = vec![
                    r.id.clone(),
                    r.quantity.to_string(),
                    r.freshness.to_string(),
                    r.accuracy.to_string(),
                    format_fixed(r.vis_quality, precision),
                    format_fixed(r.vis, precision),
                ];
                if weighted {
                    row.push(format_fixed(self.weights.get(&r.id).unwrap_or(0.0), precision.max(2)));
                }
                row
            })
            .collect();
        (header, rows)
    }

    pub fn render(&self, format: Format, precision: usize) -> String {
        match format {
            Format::Text => self.render_text(precision),
            Format::Markdown => self.render_markdown(precision),
            Format::Json => to_json(self),
        }
    }

    pub fn render_text(&self, precision: usize) -> String {
        let (header, rows) = self.table(precision);
        let mut out = format!("Subject: {} (mode: {})\n\n", self.subject, self.mode);
        out.push_str(&aligned(&header, &rows));
        let _ = writeln!(out, "{FOOTER} {}", format_fixed(self.overall_vis, precision));
        out
    }

    pub fn render_markdown(&self, precision: usize) -> String {
        let (header, rows) = self.table(precision);
        let mut out = format!("**Subject:** {} (mode: {})\n\n", self.subject, self.mode);
        let _ = writeln!(out, "| {} |", header.join(" | "));
        let align: Vec<&str> = header
            .iter()
            .map(|h| if *h == "Node" { "---" } else { "---:" })
            .collect();
        let _ = writeln!(out, "| {} |", align.join(" | "));
        for row in &rows {
            let _ = writeln!(out, "| {} |", row.join(" | "));
        }
        let blanks = " |".repeat(header.len() - 2);
        let _ = writeln!(
            out,
            "| **{FOOTER}** |{blanks} **{}** |",
            format_fixed(self.overall_vis, precision)
        );
        out
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces, no trailing whitespace.
fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{cell:<width$}", width = widths[i]);
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(&mut header.iter().copied());
    for row in rows {
        out.push_str(&line(&mut row.iter().map(String::as_str)));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankEntry {
    pub path: String,
    pub subject: String,
    pub vis: f64,
    pub rank: usize,
}

/// Orders `(path, subject name, vis)` by descending vis, ties by path.
pub fn rank_entries(scored: impl IntoIterator<Item = (String, String, f64)>) -> Vec<RankEntry> {
    let mut entries: Vec<_> = scored.into_iter().collect();
    entries.sort_by(|a, b| b.2.total_cmp(&a.2).then_with(|| a.0.cmp(&b.0)));
    entries
        .into_iter()
        .enumerate()
        .map(|(i, (path, subject, vis))| RankEntry {
            path,
            subject,
            vis,
            rank: i + 1,
        })
        .collect()
}

pub fn render_ranking(entries: &[RankEntry], format: Format, precision: usize) -> String {
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                e.rank.to_string(),
                format_fixed(e.vis, precision),
                e.subject.clone(),
                e.path.clone(),
            ]
        })
        .collect();
    let header = ["Rank", "VIS", "Subject", "Manifest"];
    match format {
        Format::Json => to_json(&entries),
        Format::Text => aligned(&header, &rows),
        Format::Markdown => {
            let mut out = String::from("| Rank | VIS | Subject | Manifest |\n| ---: | ---: | --- | --- |\n");
            for row in rows {
                let _ = writeln!(out, "| {} |", row.join(" | "));
            }
            out
        }
    }
}

/// Narrative for one scored leaf: each judgement against its scale anchor,
/// the assessor's rationale, the evidence, and the index arithmetic.
pub fn explain_node(chain: &SupplyChain, id: &str, precision: usize) -> Result<String, Diagnostic> {
    let node = chain
        .node(id)
        .ok_or_else(|| Diagnostic::node(Code::UnknownNode, id, format!("no node with id {id}")))?;
    if !chain.is_leaf(id) {
        return Err(Diagnostic::node(
            Code::NotLeaf,
            id,
            format!(
                "{id} is a {}, not a scored leaf; its visibility comes from its contributors",
                node.kind
            ),
        ));
    }
    let t = node
        .judgements
        .as_ref()
        .ok_or_else(|| Diagnostic::node(Code::MissingJudgement, id, format!("leaf {id} has no judgements")))?;
    let score = crate::metric::node_visibility(t);
    let fx = |v: f64| format_fixed(v, precision);

    let mut out = String::new();
    let _ = writeln!(out, "Node {} ({}): {}", node.id, node.kind, node.name);
    if let Some(role) = &node.role {
        let _ = writeln!(out, "Role: {role}");
    }
    if !node.description.is_empty() {
        let _ = writeln!(out, "Description: {}", node.description);
    }
    out.push('\n');
    for c in Criterion::ALL {
        let s = t.score(c);
        let label = format!("{}:", capitalize(c.as_str()));
        let _ = writeln!(out, "{label:<11}{s} - {}", scale_text(c, s));
        if let Some(why) = t.rationale.get(c.as_str()) {
            let _ = writeln!(out, "           rationale: {why}");
        }
    }
    for (key, why) in &t.rationale {
        if !Criterion::ALL.iter().any(|c| c.as_str() == key) {
            let _ = writeln!(out, "Rationale ({key}): {why}");
        }
    }
    if t.assessed_by.is_some() || t.assessed_on.is_some() {
        let by = t.assessed_by.as_deref().unwrap_or("unknown assessor");
        match t.assessed_on {
            Some(on) => {
                let _ = writeln!(out, "Assessed by {by} on {on}");
            }
            None => {
                let _ = writeln!(out, "Assessed by {by}");
            }
        }
    }

    out.push_str("\nEvidence:\n");
    if node.evidence.is_empty() {
        out.push_str("  (none)\n");
    }
    for e in &node.evidence {
        let mut line = format!("  - {}", e.description);
        if let Some(uri) = &e.uri {
            let _ = write!(line, " <{uri}>");
        }
        if let Some(d) = e.last_updated {
            let _ = write!(line, " (updated {d})");
        }
        if e.live_validation {
            line.push_str(" [live validation]");
        }
        let _ = writeln!(out, "{line}");
    }
    if let Some(sub) = &node.sub_manifest {
        let _ = writeln!(out, "\nSub-manifest: {sub} (scored separately, not merged)");
    }

    let _ = writeln!(
        out,
        "\nVISQual = sqrt(accuracy x freshness) = sqrt({} x {}) = {}",
        t.accuracy,
        t.freshness,
        fx(score.vis_quality)
    );
    let _ = writeln!(
        out,
        "VIS     = sqrt(quantity x VISQual)   = sqrt({} x {}) = {}",
        t.quantity,
        fx(score.vis_quality),
        fx(score.vis)
    );
    Ok(out)
}

fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    chars
        .next()
        .map(|c| c.to_ascii_uppercase().to_string() + chars.as_str())
        .unwrap_or_default()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GateVerdict {
    pub vis: f64,
    pub min: f64,
    pub mode: Mode,
    pub pass: bool,
}

pub fn gate(score: &ChainScore, min: f64) -> GateVerdict {
    GateVerdict {
        vis: score.vis,
        min,
        mode: score.mode,
        pass: score.vis >= min,
    }
}

impl GateVerdict {
    pub fn render(&self, precision: usize) -> String {
        let (word, op) = if self.pass { ("PASS", ">=") } else { ("FAIL", "<") };
        format!(
            "{word}: overall VIS {} {op} {} ({})\n",
            format_fixed(self.vis, precision),
            format_fixed(self.min, precision),
            self.mode
        )
    }
}

/// One row per leaf; `Err` rows carry the per-node failure.
pub fn render_suggestions(rows: &[(String, Result<FreshnessSuggestion, Diagnostic>)], format: Format) -> String {
    #[derive(Serialize)]
    struct JsonRow<'a> {
        node_id: &'a str,
        #[serde(skip_serializing_if = "Option::is_none")]
        suggestion: Option<&'a FreshnessSuggestion>,
        #[serde(skip_serializing_if = "Option::is_none")]
        error: Option<&'a Diagnostic>,
    }
    if format == Format::Json {
        let rows: Vec<JsonRow<'_>> = rows
            .iter()
            .map(|(id, r)| JsonRow {
                node_id: id,
                suggestion: r.as_ref().ok(),
                error: r.as_ref().err(),
            })
            .collect();
        return to_json(&rows);
    }
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|(id, r)| match r {
            Ok(s) => vec![
                id.clone(),
                s.declared.map_or("-".into(), |d| d.to_string()),
                s.suggested.to_string(),
                if s.conflicts_with_declared { "yes" } else { "no" }.into(),
                s.rationale.clone(),
            ],
            Err(d) => vec![
                id.clone(),
                "-".into(),
                "-".into(),
                "-".into(),
                format!("{}: {}", d.code, d.message),
            ],
        })
        .collect();
    let header = ["Node", "Declared", "Suggested", "Conflict", "Rationale"];
    match format {
        Format::Markdown => {
            let mut out = format!("| {} |\n| --- | ---: | ---: | --- | --- |\n", header.join(" | "));
            for row in table {
                let _ = writeln!(out, "| {} |", row.join(" | "));
            }
            out
        }
        _ => aligned(&header, &table),
    }
}
