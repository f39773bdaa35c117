// SPDX-License-Identifier: Apache-2.0

//! The contribution graph behind a model.
//!
//! Edges point from a contribution to the thing it contributes to. The graph
//! must be acyclic and drain into a single output-model node (the subject).
//! Only leaves, the non-subject nodes with no incoming edges, are scored;
//! derived assets inherit their visibility from whatever feeds them.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use petgraph::algo::kosaraju_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::{Bfs, Reversed};
use serde::{Deserialize, Serialize};

use crate::diag::{Code, Diagnostic, Locus};
use crate::rubric::JudgementTriple;

/// Node identifier matching `[A-Za-z0-9_.-]+`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct NodeId(String);

impl NodeId {
    pub fn new(id: impl Into<String>) -> Result<Self, InvalidNodeId> {
        let id = id.into();
        let valid = !id.is_empty()
            && id
                .bytes()
                .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'));
        if valid {
            Ok(NodeId(id))
        } else {
            Err(InvalidNodeId(id))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid node id {0:?}: expected one or more of [A-Za-z0-9_.-]")]
pub struct InvalidNodeId(pub String);

impl TryFrom<String> for NodeId {
    type Error = InvalidNodeId;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        NodeId::new(value)
    }
}

impl From<NodeId> for String {
    fn from(id: NodeId) -> String {
        id.0
    }
}

impl FromStr for NodeId {
    type Err = InvalidNodeId;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NodeId::new(s)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for NodeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for NodeId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    DataSource,
    HumanContributor,
    DerivedAsset,
    ExternalModel,
    OutputModel,
}

impl NodeKind {
    pub const ALL: [NodeKind; 5] = [
        NodeKind::DataSource,
        NodeKind::HumanContributor,
        NodeKind::DerivedAsset,
        NodeKind::ExternalModel,
        NodeKind::OutputModel,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::DataSource => "data-source",
            NodeKind::HumanContributor => "human-contributor",
            NodeKind::DerivedAsset => "derived-asset",
            NodeKind::ExternalModel => "external-model",
            NodeKind::OutputModel => "output-model",
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NodeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NodeKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown node kind {s:?}"))
    }
}

/// A pointer to documentation backing a contribution.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EvidenceRef {
    pub description: String,
    pub uri: Option<String>,
    pub last_updated: Option<chrono::NaiveDate>,
    pub live_validation: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: NodeId,
    pub kind: NodeKind,
    pub name: String,
    pub role: Option<String>,
    pub description: String,
    pub evidence: Vec<EvidenceRef>,
    pub judgements: Option<JudgementTriple>,
    /// Only meaningful on external-model nodes.
    pub sub_manifest: Option<String>,
}

impl Node {
    pub fn new(id: NodeId, kind: NodeKind, name: impl Into<String>) -> Self {
        Node {
            id,
            kind,
            name: name.into(),
            role: None,
            description: String::new(),
            evidence: Vec::new(),
            judgements: None,
            sub_manifest: None,
        }
    }

    pub fn with_judgements(mut self, judgements: JudgementTriple) -> Self {
        self.judgements = Some(judgements);
        self
    }
}

/// `from` contributes to `to`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub from: NodeId,
    pub to: NodeId,
}

impl Edge {
    pub fn new(from: NodeId, to: NodeId) -> Self {
        Edge { from, to }
    }

    fn locus(&self) -> Locus {
        Locus::Edge {
            from: self.from.to_string(),
            to: self.to.to_string(),
        }
    }
}

/// The parts of a node the structural checks look at.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Shape<'a> {
    pub id: &'a NodeId,
    pub kind: NodeKind,
    pub has_sub_manifest: bool,
}

impl<'a> From<&'a Node> for Shape<'a> {
    fn from(node: &'a Node) -> Self {
        Shape {
            id: &node.id,
            kind: node.kind,
            has_sub_manifest: node.sub_manifest.is_some(),
        }
    }
}

/// Contribution graph over resolvable edges, node `i` standing for the
/// `i`th shape. Duplicate ids resolve to their first occurrence, dangling
/// edges are dropped and parallel edges collapse.
fn contribution_graph(index: &HashMap<&NodeId, usize>, len: usize, edges: &[Edge]) -> DiGraph<(), ()> {
    let mut graph = DiGraph::with_capacity(len, edges.len());
    for _ in 0..len {
        graph.add_node(());
    }
    let mut seen = HashSet::with_capacity(edges.len());
    for edge in edges {
        if let (Some(&from), Some(&to)) = (index.get(&edge.from), index.get(&edge.to)) {
            if seen.insert((from, to)) {
                graph.add_edge(NodeIndex::new(from), NodeIndex::new(to), ());
            }
        }
    }
    graph
}

/// Strongly connected components that contain a cycle, members sorted.
fn cyclic_components(graph: &DiGraph<(), ()>) -> Vec<Vec<usize>> {
    let mut cyclic: Vec<Vec<usize>> = kosaraju_scc(graph)
        .into_iter()
        .filter(|c| c.len() > 1 || graph.contains_edge(c[0], c[0]))
        .map(|c| {
            let mut members: Vec<usize> = c.into_iter().map(NodeIndex::index).collect();
            members.sort_unstable();
            members
        })
        .collect();
    cyclic.sort_unstable();
    cyclic
}

/// Nodes from which `target` is reachable, `target` included.
fn reaching(graph: &DiGraph<(), ()>, target: usize) -> Vec<bool> {
    let mut seen = vec![false; graph.node_count()];
    let reversed = Reversed(graph);
    let mut bfs = Bfs::new(reversed, NodeIndex::new(target));
    while let Some(v) = bfs.next(reversed) {
        seen[v.index()] = true;
    }
    seen
}

fn first_occurrence_index<'a>(shapes: &[Shape<'a>]) -> HashMap<&'a NodeId, usize> {
    let mut index = HashMap::with_capacity(shapes.len());
    for (i, shape) in shapes.iter().enumerate() {
        index.entry(shape.id).or_insert(i);
    }
    index
}

/// Every structural problem, in priority order: duplicate ids, misplaced
/// sub-manifests, dangling edges, cycles, subject problems, orphans.
pub(crate) fn diagnose_shapes(subject_id: &NodeId, shapes: &[Shape<'_>], edges: &[Edge]) -> Vec<Diagnostic> {
    let mut found = Vec::new();
    let index = first_occurrence_index(shapes);

    let mut reported_dup = HashSet::new();
    for (i, shape) in shapes.iter().enumerate() {
        if index[shape.id] != i && reported_dup.insert(shape.id) {
            found.push(Diagnostic::node(
                Code::DupId,
                shape.id.as_str(),
                format!("node id {} is declared more than once", shape.id),
            ));
        }
    }

    for shape in shapes {
        if shape.has_sub_manifest && shape.kind != NodeKind::ExternalModel {
            found.push(Diagnostic::node(
                Code::Schema,
                shape.id.as_str(),
                format!(
                    "sub_manifest is only allowed on external-model nodes, not {}",
                    shape.kind
                ),
            ));
        }
    }

    for edge in edges {
        for end in [&edge.from, &edge.to] {
            if !index.contains_key(end) {
                found.push(Diagnostic::new(
                    Code::DanglingEdge,
                    edge.locus(),
                    format!("edge references unknown node {end}"),
                ));
            }
        }
    }

    let graph = contribution_graph(&index, shapes.len(), edges);
    for members in cyclic_components(&graph) {
        let names: Vec<_> = members.iter().map(|&i| shapes[i].id.as_str()).collect();
        found.push(Diagnostic::node(
            Code::Cycle,
            names[0],
            format!("contribution cycle through {}", names.join(", ")),
        ));
    }

    let outputs: Vec<usize> = shapes
        .iter()
        .enumerate()
        .filter(|(i, s)| s.kind == NodeKind::OutputModel && index[s.id] == *i)
        .map(|(i, _)| i)
        .collect();
    let subject = match outputs.as_slice() {
        [] => {
            found.push(Diagnostic::document(Code::NoSubject, "no node has kind output-model"));
            None
        }
        [only] if shapes[*only].id == subject_id => Some(*only),
        [only] => {
            found.push(Diagnostic::node(
                Code::NoSubject,
                subject_id.as_str(),
                format!(
                    "subject id {subject_id} does not name the output-model node {}",
                    shapes[*only].id
                ),
            ));
            None
        }
        many => {
            let names: Vec<_> = many.iter().map(|&i| shapes[i].id.as_str()).collect();
            found.push(Diagnostic::document(
                Code::MultiSubject,
                format!("more than one output-model node: {}", names.join(", ")),
            ));
            None
        }
    };

    if let Some(subject) = subject {
        let reaches = reaching(&graph, subject);
        for (i, shape) in shapes.iter().enumerate() {
            if !reaches[i] && index[shape.id] == i {
                found.push(Diagnostic::node(
                    Code::Orphan,
                    shape.id.as_str(),
                    format!("{} does not contribute to subject {subject_id}", shape.id),
                ));
            }
        }
    }

    found
}

/// All structural problems with a prospective chain.
pub fn diagnose(subject_id: &NodeId, nodes: &[Node], edges: &[Edge]) -> Vec<Diagnostic> {
    let shapes: Vec<Shape<'_>> = nodes.iter().map(Shape::from).collect();
    diagnose_shapes(subject_id, &shapes, edges)
}

/// A validated contribution DAG. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct SupplyChain {
    subject: usize,
    nodes: Vec<Node>,
    index: HashMap<NodeId, usize>,
    edges: Vec<Edge>,
    has_incoming: Vec<bool>,
}

/// Validates and assembles a chain. On failure the highest-priority
/// structural problem is returned.
pub fn build_chain(
    subject_id: &NodeId,
    nodes: Vec<Node>,
    edges: impl IntoIterator<Item = Edge>,
) -> Result<SupplyChain, Diagnostic> {
    let edges: Vec<Edge> = edges.into_iter().collect();
    if let Some(first) = diagnose(subject_id, &nodes, &edges).into_iter().next() {
        return Err(first);
    }

    let index: HashMap<NodeId, usize> = nodes.iter().enumerate().map(|(i, n)| (n.id.clone(), i)).collect();
    let mut seen = HashSet::with_capacity(edges.len());
    let mut unique = Vec::with_capacity(edges.len());
    let mut has_incoming = vec![false; nodes.len()];
    for edge in edges {
        if seen.insert(edge.clone()) {
            has_incoming[index[&edge.to]] = true;
            unique.push(edge);
        }
    }
    Ok(SupplyChain {
        subject: index[subject_id],
        nodes,
        index,
        edges: unique,
        has_incoming,
    })
}

impl SupplyChain {
    pub fn subject_id(&self) -> &NodeId {
        &self.nodes[self.subject].id
    }

    pub fn subject(&self) -> &Node {
        &self.nodes[self.subject]
    }

    /// Nodes in declaration order.
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Distinct edges in first-declared order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node(&self, id: &str) -> Option<&Node> {
        self.index.get(id).map(|&i| &self.nodes[i])
    }

    pub fn is_leaf(&self, id: &str) -> bool {
        self.index
            .get(id)
            .is_some_and(|&i| i != self.subject && !self.has_incoming[i])
    }

    pub fn leaf_nodes(&self) -> Vec<&Node> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != self.subject && !self.has_incoming[i])
            .map(|(_, n)| n)
            .collect()
    }

    /// Nodes that are neither leaves nor the subject.
    pub fn internal_nodes(&self) -> Vec<&Node> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != self.subject && self.has_incoming[i])
            .map(|(_, n)| n)
            .collect()
    }

    /// Runs the structural checks again over the built chain.
    pub fn revalidate(&self) -> Result<(), Diagnostic> {
        match diagnose(self.subject_id(), &self.nodes, &self.edges).into_iter().next() {
            Some(d) => Err(d),
            None => Ok(()),
        }
    }
}

/// Scored contributions in declaration order.
pub fn leaf_nodes(chain: &SupplyChain) -> Vec<&Node> {
    chain.leaf_nodes()
}
