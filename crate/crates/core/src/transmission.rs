//! Generalized transmission graphs.
//!
//! Every object of an [`Instance`] has a distinguished point (segment: the
//! stored endpoint `p`; sector: the apex; disk: the center). The graph has an
//! edge `x → y` iff `x` contains the distinguished point of `y`. Self-loops
//! are never reported.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{ArrangementObject, Point, PreparedSector, Rational, Vector};

/// Structured vertex label. Indices are 1-based line indices; `m` indices are
/// the copy numbers 1..=3 of the sector construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    C(usize),
    /// Unordered pair, stored with the smaller index first.
    A(usize, usize),
    B(usize, usize),
    SC(usize, usize),
    SA(usize, usize, usize, usize),
    SB(usize, usize, usize, usize),
    Free(String),
}

impl VertexLabel {
    pub fn a(i: usize, k: usize) -> Self {
        VertexLabel::A(i.min(k), i.max(k))
    }

    /// Canonical form: `A{i,k}` with `i <= k`.
    pub fn normalized(self) -> Self {
        match self {
            VertexLabel::A(i, k) => VertexLabel::a(i, k),
            other => other,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            VertexLabel::C(_) => "C",
            VertexLabel::A(..) => "A",
            VertexLabel::B(..) => "B",
            VertexLabel::SC(..) => "SC",
            VertexLabel::SA(..) => "SA",
            VertexLabel::SB(..) => "SB",
            VertexLabel::Free(_) => "Free",
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::C(i) => write!(f, "C_{i}"),
            VertexLabel::A(i, k) => write!(f, "A_{i}_{k}"),
            VertexLabel::B(i, k) => write!(f, "B_{i}_{k}"),
            VertexLabel::SC(i, m) => write!(f, "SC_{i}_{m}"),
            VertexLabel::SA(i, m, k, mm) => write!(f, "SA_{i}_{m}_{k}_{mm}"),
            VertexLabel::SB(i, m, k, mm) => write!(f, "SB_{i}_{m}_{k}_{mm}"),
            VertexLabel::Free(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {0} is not a vertex")]
    DanglingEndpoint(VertexLabel),
    #[error("self-loop at {0}")]
    SelfLoop(VertexLabel),
    #[error("duplicate label {0}")]
    DuplicateLabel(VertexLabel),
}

pub type Edge = (VertexLabel, VertexLabel);

/// A directed graph on labels. Vertex and edge sets are kept sorted, so
/// iteration order and serialization are canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDigraph")]
pub struct LabelledDigraph {
    vertices: BTreeSet<VertexLabel>,
    edges: BTreeSet<Edge>,
}

#[derive(Deserialize)]
struct RawDigraph {
    vertices: Vec<VertexLabel>,
    edges: Vec<Edge>,
}

impl TryFrom<RawDigraph> for LabelledDigraph {
    type Error = GraphError;

    fn try_from(raw: RawDigraph) -> Result<Self, GraphError> {
        LabelledDigraph::from_parts(raw.vertices, raw.edges)
    }
}

impl LabelledDigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph, checking that every edge joins two distinct vertices.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = VertexLabel>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let mut g = LabelledDigraph {
            vertices: vertices.into_iter().map(VertexLabel::normalized).collect(),
            edges: BTreeSet::new(),
        };
        for (u, v) in edges {
            g.add_edge(u.normalized(), v.normalized())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexLabel) -> bool {
        self.vertices.insert(v)
    }

    pub fn add_edge(&mut self, u: VertexLabel, v: VertexLabel) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for end in [&u, &v] {
            if !self.vertices.contains(end) {
                return Err(GraphError::DanglingEndpoint(end.clone()));
            }
        }
        Ok(self.edges.insert((u, v)))
    }

    pub fn remove_edge(&mut self, u: &VertexLabel, v: &VertexLabel) -> bool {
        self.edges.remove(&(u.clone(), v.clone()))
    }

    pub fn vertices(&self) -> &BTreeSet<VertexLabel> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: &VertexLabel, v: &VertexLabel) -> bool {
        self.edges.contains(&(u.clone(), v.clone()))
    }

    pub fn out_neighbours<'a>(&'a self, u: &'a VertexLabel) -> impl Iterator<Item = &'a VertexLabel> + 'a {
        self.edges
            .range((u.clone(), VertexLabel::C(0))..)
            .take_while(move |(a, _)| a == u)
            .map(|(_, b)| b)
    }

    pub fn out_degree(&self, u: &VertexLabel) -> usize {
        self.out_neighbours(u).count()
    }

    /// Checks the structural invariants; useful after deserialization.
    pub fn check(&self) -> Result<(), GraphError> {
        for (u, v) in &self.edges {
            if u == v {
                return Err(GraphError::SelfLoop(u.clone()));
            }
            for end in [u, v] {
                if !self.vertices.contains(end) {
                    return Err(GraphError::DanglingEndpoint(end.clone()));
                }
            }
        }
        Ok(())
    }
}

/// Labelled geometric objects.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub entries: Vec<InstanceEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEntry {
    pub label: VertexLabel,
    pub object: ArrangementObject,
}

impl Instance {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, label: VertexLabel, object: impl Into<ArrangementObject>) {
        self.entries.push(InstanceEntry {
            label,
            object: object.into(),
        });
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &VertexLabel) -> Option<&ArrangementObject> {
        self.entries.iter().find(|e| &e.label == label).map(|e| &e.object)
    }

    pub fn remove(&mut self, label: &VertexLabel) -> Option<ArrangementObject> {
        let idx = self.entries.iter().position(|e| &e.label == label)?;
        Some(self.entries.remove(idx).object)
    }

    pub fn labels(&self) -> impl Iterator<Item = &VertexLabel> {
        self.entries.iter().map(|e| &e.label)
    }

    /// Label → object map.
    pub fn index(&self) -> BTreeMap<&VertexLabel, &ArrangementObject> {
        self.entries.iter().map(|e| (&e.label, &e.object)).collect()
    }

    pub fn check(&self) -> Result<(), GraphError> {
        let mut seen = BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(&e.label) {
                return Err(GraphError::DuplicateLabel(e.label.clone()));
            }
        }
        Ok(())
    }

    pub fn map_objects(&self, f: impl Fn(&ArrangementObject) -> ArrangementObject) -> Instance {
        Instance {
            entries: self
                .entries
                .iter()
                .map(|e| InstanceEntry {
                    label: e.label.clone(),
                    object: f(&e.object),
                })
                .collect(),
        }
    }
}

pub fn distinguished_point(obj: &ArrangementObject) -> &Point {
    obj.distinguished_point()
}

/// An object with the per-object parts of its membership test precomputed.
pub(crate) enum Prepared<'a> {
    Segment {
        p: &'a Point,
        dir: Vector,
        len_sq: Rational,
    },
    Sector(PreparedSector<'a>),
    Disk {
        center: &'a Point,
        radius_sq: &'a Rational,
    },
}

impl<'a> Prepared<'a> {
    pub(crate) fn new(obj: &'a ArrangementObject) -> Self {
        match obj {
            ArrangementObject::Segment(s) => {
                let dir = s.direction();
                let len_sq = dir.norm_sq();
                Prepared::Segment { p: &s.p, dir, len_sq }
            }
            ArrangementObject::Sector(s) => Prepared::Sector(PreparedSector::new(s)),
            ArrangementObject::Disk(d) => Prepared::Disk {
                center: &d.center,
                radius_sq: &d.radius_sq,
            },
        }
    }

    pub(crate) fn contains(&self, pt: &Point) -> bool {
        use num_traits::{Signed, Zero};
        match self {
            Prepared::Segment { p, dir, len_sq } => {
                let w = pt - *p;
                if !dir.cross(&w).is_zero() {
                    return false;
                }
                let t = dir.dot(&w);
                !t.is_negative() && &t <= len_sq
            }
            Prepared::Sector(s) => s.contains(pt),
            Prepared::Disk { center, radius_sq } => &center.dist_sq(pt) <= *radius_sq,
        }
    }
}

/// Row-major containment matrix: `m[i][j]` iff object `i` contains the
/// distinguished point of object `j`, for `i != j`. Diagonal is false.
pub(crate) fn containment_matrix(inst: &Instance) -> Vec<Vec<bool>> {
    let prepared: Vec<Prepared<'_>> = inst.entries.iter().map(|e| Prepared::new(&e.object)).collect();
    let points: Vec<&Point> = inst.entries.iter().map(|e| e.object.distinguished_point()).collect();
    prepared
        .par_iter()
        .enumerate()
        .map(|(i, obj)| {
            points
                .iter()
                .enumerate()
                .map(|(j, p)| i != j && obj.contains(p))
                .collect()
        })
        .collect()
}

pub(crate) fn graph_from_matrix(inst: &Instance, matrix: &[Vec<bool>]) -> LabelledDigraph {
    let labels: Vec<&VertexLabel> = inst.labels().collect();
    let mut g = LabelledDigraph {
        vertices: labels.iter().map(|l| (*l).clone()).collect(),
        edges: BTreeSet::new(),
    };
    for (i, row) in matrix.iter().enumerate() {
        for (j, &hit) in row.iter().enumerate() {
            if hit {
                g.edges.insert((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    g
}

/// The generalized transmission graph of `inst`. Membership tests run in
/// parallel; the result does not depend on evaluation order.
pub fn transmission_graph(inst: &Instance) -> LabelledDigraph {
    let matrix = containment_matrix(inst);
    graph_from_matrix(inst, &matrix)
}

/// Label-exact difference between two graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DiffReport {
    pub vertices_only_in_left: Vec<VertexLabel>,
    pub vertices_only_in_right: Vec<VertexLabel>,
    pub edges_only_in_left: Vec<Edge>,
    pub edges_only_in_right: Vec<Edge>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.vertices_only_in_left.is_empty()
            && self.vertices_only_in_right.is_empty()
            && self.edges_only_in_left.is_empty()
            && self.edges_only_in_right.is_empty()
    }

    pub fn total(&self) -> usize {
        self.vertices_only_in_left.len()
            + self.vertices_only_in_right.len()
            + self.edges_only_in_left.len()
            + self.edges_only_in_right.len()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "graphs are identical");
        }
        for v in &self.vertices_only_in_left {
            writeln!(f, "- vertex {v}")?;
        }
        for v in &self.vertices_only_in_right {
            writeln!(f, "+ vertex {v}")?;
        }
        for (u, v) in &self.edges_only_in_left {
            writeln!(f, "- edge {u} -> {v}")?;
        }
        for (u, v) in &self.edges_only_in_right {
            writeln!(f, "+ edge {u} -> {v}")?;
        }
        Ok(())
    }
}

/// Lists what `g` has and `h` lacks ("left") and vice versa ("right").
pub fn graph_diff(g: &LabelledDigraph, h: &LabelledDigraph) -> DiffReport {
    DiffReport {
        vertices_only_in_left: g.vertices.difference(&h.vertices).cloned().collect(),
        vertices_only_in_right: h.vertices.difference(&g.vertices).cloned().collect(),
        edges_only_in_left: g.edges.difference(&h.edges).cloned().collect(),
        edges_only_in_right: h.edges.difference(&g.edges).cloned().collect(),
    }
}
