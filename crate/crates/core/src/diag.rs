// SPDX-License-Identifier: Apache-2.0

//! Diagnostic codes shared by every validation stage.

use std::fmt;

use serde::{Serialize, Serializer};

/// Every error and warning the toolkit can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Code {
    // document level
    Syntax,
    Schema,
    Version,
    Io,
    // graph structure
    DupId,
    DanglingEdge,
    Cycle,
    NoSubject,
    MultiSubject,
    Orphan,
    // judgements and scoring
    Range,
    NotInteger,
    MissingCriterion,
    MissingJudgement,
    BadWeights,
    NoLeaves,
    // command level
    FutureEvidence,
    UnknownNode,
    NotLeaf,
    // warnings
    InternalJudgement,
    NoRationale,
    NoEvidence,
    UnknownField,
}

impl Code {
    pub const ALL: [Code; 23] = [
        Code::Syntax,
        Code::Schema,
        Code::Version,
        Code::Io,
        Code::DupId,
        Code::DanglingEdge,
        Code::Cycle,
        Code::NoSubject,
        Code::MultiSubject,
        Code::Orphan,
        Code::Range,
        Code::NotInteger,
        Code::MissingCriterion,
        Code::MissingJudgement,
        Code::BadWeights,
        Code::NoLeaves,
        Code::FutureEvidence,
        Code::UnknownNode,
        Code::NotLeaf,
        Code::InternalJudgement,
        Code::NoRationale,
        Code::NoEvidence,
        Code::UnknownField,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Code::Syntax => "E_SYNTAX",
            Code::Schema => "E_SCHEMA",
            Code::Version => "E_VERSION",
            Code::Io => "E_IO",
            Code::DupId => "E_DUP_ID",
            Code::DanglingEdge => "E_DANGLING_EDGE",
            Code::Cycle => "E_CYCLE",
            Code::NoSubject => "E_NO_SUBJECT",
            Code::MultiSubject => "E_MULTI_SUBJECT",
            Code::Orphan => "E_ORPHAN",
            Code::Range => "E_RANGE",
            Code::NotInteger => "E_NOT_INTEGER",
            Code::MissingCriterion => "E_MISSING_CRITERION",
            Code::MissingJudgement => "E_MISSING_JUDGEMENT",
            Code::BadWeights => "E_BAD_WEIGHTS",
            Code::NoLeaves => "E_NO_LEAVES",
            Code::FutureEvidence => "E_FUTURE_EVIDENCE",
            Code::UnknownNode => "E_UNKNOWN_NODE",
            Code::NotLeaf => "E_NOT_LEAF",
            Code::InternalJudgement => "W_INTERNAL_JUDGEMENT",
            Code::NoRationale => "W_NO_RATIONALE",
            Code::NoEvidence => "W_NO_EVIDENCE",
            Code::UnknownField => "W_UNKNOWN_FIELD",
        }
    }

    pub fn is_warning(self) -> bool {
        matches!(
            self,
            Code::InternalJudgement | Code::NoRationale | Code::NoEvidence | Code::UnknownField
        )
    }

    /// Warnings that strict validation treats as errors.
    pub fn promoted_in_strict(self) -> bool {
        matches!(self, Code::InternalJudgement | Code::NoRationale | Code::UnknownField)
    }

    /// Failures that happen before a document has a usable structure.
    pub fn is_parse_level(self) -> bool {
        matches!(self, Code::Syntax | Code::Schema | Code::Version | Code::Io)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Code {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Where in a manifest a finding applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    Document,
    Node(String),
    Edge { from: String, to: String },
    Field(String),
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Document => f.write_str("document"),
            Locus::Node(id) => write!(f, "node {id}"),
            Locus::Edge { from, to } => write!(f, "edge {from} -> {to}"),
            Locus::Field(path) => write!(f, "field {path}"),
        }
    }
}

/// A single coded finding. Also the error type of every fallible operation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("{code} at {locus}: {message}")]
pub struct Diagnostic {
    pub code: Code,
    pub locus: Locus,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: Code, locus: Locus, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            locus,
            message: message.into(),
        }
    }

    pub fn document(code: Code, message: impl Into<String>) -> Self {
        Diagnostic::new(code, Locus::Document, message)
    }

    pub fn node(code: Code, id: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic::new(code, Locus::Node(id.into()), message)
    }
}
