// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. Results go to `out`, diagnostics to `err`.

use std::io::Write;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand};

use crate::diag::{Code, Diagnostic};
use crate::freshness::{parse_policy, suggest_freshness, FreshnessPolicy};
use crate::manifest::{read_manifest, Compiled, Manifest, ValidationReport};
use crate::metric::{chain_visibility, parse_weights, ChainScore, Mode, WeightMap};
use crate::report::{explain_node, gate, rank_entries, render_ranking, render_suggestions, Exit, Format, ScoreReport};

#[derive(Debug, Parser)]
#[command(
    name = "vistrace",
    version,
    about = "Score the transparency of a model's bill of materials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Display {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Decimal places in text and markdown output.
    #[arg(long, default_value_t = 2)]
    pub precision: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the per-node and overall visibility table.
    Score {
        manifest: PathBuf,
        #[command(flatten)]
        display: Display,
        /// Aggregate from per-node values rounded to two decimals.
        #[arg(long)]
        paper_compat: bool,
        /// JSON map of leaf id to weight, overriding the manifest.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Check a manifest and list every finding.
    Validate {
        manifest: PathBuf,
        /// Treat internal-node judgements, missing rationales and unknown fields as errors.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Order manifests from most to least transparent.
    Rank {
        #[arg(required = true)]
        manifests: Vec<PathBuf>,
        #[command(flatten)]
        display: Display,
    },
    /// Walk through the judgements and arithmetic for one leaf.
    Explain {
        manifest: PathBuf,
        #[arg(long)]
        node: String,
        #[arg(long, default_value_t = 2)]
        precision: usize,
    },
    /// Exit 0 when the overall visibility reaches a threshold, 1 otherwise.
    Gate {
        manifest: PathBuf,
        #[arg(long)]
        min: f64,
        #[arg(long)]
        paper_compat: bool,
        #[arg(long, default_value_t = 2)]
        precision: usize,
    },
    /// Suggest freshness judgements from evidence dates.
    SuggestFreshness {
        manifest: PathBuf,
        /// Evaluation date (YYYY-MM-DD); defaults to today (UTC).
        #[arg(long)]
        as_of: Option<NaiveDate>,
        /// JSON policy file with fresh_window_days / stale_window_days.
        #[arg(long)]
        policy: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn mode(paper_compat: bool) -> Mode {
    if paper_compat {
        Mode::PaperCompat
    } else {
        Mode::FullPrecision
    }
}

fn print_findings(w: &mut dyn Write, report: &ValidationReport) {
    for d in &report.errors {
        let _ = writeln!(w, "error[{}] {}: {}", d.code, d.locus, d.message);
    }
    for d in &report.warnings {
        let _ = writeln!(w, "warning[{}] {}: {}", d.code, d.locus, d.message);
    }
}

fn fail(err: &mut dyn Write, path: &Path, d: &Diagnostic) -> Exit {
    let _ = writeln!(err, "{}: error[{}] {}: {}", path.display(), d.code, d.locus, d.message);
    Exit::for_code(d.code)
}

/// Reads and compiles a manifest, printing warnings. On failure the
/// diagnostics are already printed and the exit status is returned.
fn load(path: &Path, err: &mut dyn Write) -> Result<(Manifest, Compiled), Exit> {
    let manifest = read_manifest(path).map_err(|d| fail(err, path, &d))?;
    match manifest.compile(false) {
        Ok(compiled) => {
            print_findings(err, &compiled.report);
            Ok((manifest, compiled))
        }
        Err(report) => {
            print_findings(err, &report);
            let _ = writeln!(err, "{}: {} validation error(s)", path.display(), report.errors.len());
            Err(Exit::Validation)
        }
    }
}

fn read_weights(path: &Path) -> Result<WeightMap, Diagnostic> {
    let bytes = std::fs::read(path)
        .map_err(|e| Diagnostic::document(Code::Io, format!("cannot read {}: {e}", path.display())))?;
    parse_weights(&bytes)
}

fn score_of(compiled: &Compiled, weights: Option<&WeightMap>, mode: Mode) -> Result<ChainScore, Diagnostic> {
    chain_visibility(&compiled.chain, weights.or(compiled.weights.as_ref()), mode)
}

/// Runs one command and returns its exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    match cli.command {
        Command::Score {
            manifest,
            display,
            paper_compat,
            weights,
        } => {
            let (_, compiled) = match load(&manifest, err) {
                Ok(x) => x,
                Err(exit) => return exit,
            };
            let override_weights = match weights.as_deref().map(read_weights).transpose() {
                Ok(w) => w,
                Err(d) => return fail(err, weights.as_deref().unwrap_or(&manifest), &d),
            };
            let score = match score_of(&compiled, override_weights.as_ref(), mode(paper_compat)) {
                Ok(s) => s,
                Err(d) => return fail(err, &manifest, &d),
            };
            let report = ScoreReport::new(&compiled.chain, &score);
            let _ = out.write_all(report.render(display.format, display.precision).as_bytes());
            for node in compiled.chain.leaf_nodes() {
                if let Some(sub) = &node.sub_manifest {
                    let _ = writeln!(
                        err,
                        "note: {} references sub-manifest {sub}; it is scored separately",
                        node.id
                    );
                }
            }
            Exit::Success
        }

        Command::Validate {
            manifest,
            strict,
            format,
        } => {
            let parsed = match read_manifest(&manifest) {
                Ok(m) => m,
                Err(d) => return fail(err, &manifest, &d),
            };
            let report = crate::manifest::validate_manifest(&parsed, strict);
            if format == Format::Json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print_findings(out, &report);
                let verdict = if report.ok { "OK" } else { "FAILED" };
                let _ = writeln!(
                    out,
                    "{verdict} ({} errors, {} warnings)",
                    report.errors.len(),
                    report.warnings.len()
                );
            }
            if report.ok {
                Exit::Success
            } else {
                Exit::Validation
            }
        }

        Command::Rank { manifests, display } => {
            let mut worst = Exit::Success;
            let mut scored = Vec::new();
            for path in &manifests {
                let outcome = load(path, err).and_then(|(m, compiled)| {
                    score_of(&compiled, None, Mode::FullPrecision)
                        .map(|s| (m.subject.name.clone(), s.vis))
                        .map_err(|d| fail(err, path, &d))
                });
                match outcome {
                    Ok((subject, vis)) => scored.push((path.display().to_string(), subject, vis)),
                    Err(exit) => worst = worst.max(exit),
                }
            }
            let entries = rank_entries(scored);
            let _ = out.write_all(render_ranking(&entries, display.format, display.precision).as_bytes());
            worst
        }

        Command::Explain {
            manifest,
            node,
            precision,
        } => {
            let (_, compiled) = match load(&manifest, err) {
                Ok(x) => x,
                Err(exit) => return exit,
            };
            match explain_node(&compiled.chain, &node, precision) {
                Ok(text) => {
                    let _ = out.write_all(text.as_bytes());
                    Exit::Success
                }
                Err(d) => fail(err, &manifest, &d),
            }
        }

        Command::Gate {
            manifest,
            min,
            paper_compat,
            precision,
        } => {
            if !(1.0..=4.0).contains(&min) {
                let _ = writeln!(err, "error: --min must lie in [1, 4], got {min}");
                return Exit::Validation;
            }
            let (_, compiled) = match load(&manifest, err) {
                Ok(x) => x,
                Err(exit) => return exit,
            };
            let score = match score_of(&compiled, None, mode(paper_compat)) {
                Ok(s) => s,
                Err(d) => return fail(err, &manifest, &d),
            };
            let verdict = gate(&score, min);
            let _ = out.write_all(verdict.render(precision).as_bytes());
            if verdict.pass {
                Exit::Success
            } else {
                Exit::GateFail
            }
        }

        Command::SuggestFreshness {
            manifest,
            as_of,
            policy,
            format,
        } => {
            let policy = match policy {
                Some(path) => {
                    let parsed = std::fs::read(&path)
                        .map_err(|e| Diagnostic::document(Code::Io, format!("cannot read policy: {e}")))
                        .and_then(|bytes| parse_policy(&bytes));
                    match parsed {
                        Ok(p) => p,
                        Err(d) => return fail(err, &path, &d),
                    }
                }
                None => FreshnessPolicy::default(),
            };
            let (_, compiled) = match load(&manifest, err) {
                Ok(x) => x,
                Err(exit) => return exit,
            };
            let as_of = as_of.unwrap_or_else(|| chrono::Utc::now().date_naive());
            let rows: Vec<_> = compiled
                .chain
                .leaf_nodes()
                .into_iter()
                .map(|n| (n.id.to_string(), suggest_freshness(n, &policy, as_of)))
                .collect();
            let _ = out.write_all(render_suggestions(&rows, format).as_bytes());
            Exit::Success
        }
    }
}
