//! Typed payloads. Vertices are always given by their external names.

use std::collections::BTreeMap;

use hadwiger_core::{Color, Graph, MinorSearch, Separation};
use serde::{Deserialize, Serialize};

use crate::document::Names;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphView {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphView {
    pub fn of(g: &Graph, names: &Names) -> Self {
        GraphView { vertices: names.set(&g.vertex_set()), edges: names.edges(g) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringPayload {
    pub t: usize,
    pub capacity: usize,
    /// `(vertex, colour)` in vertex order.
    pub assignment: Vec<(String, Color)>,
    pub colors_used: usize,
    pub max_component_size: usize,
    pub component_bound: usize,
    pub precolored: Vec<(String, Color)>,
    /// Present when lists were supplied; otherwise every vertex had the
    /// uniform palette.
    pub lists: Option<BTreeMap<String, Vec<Color>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchView {
    /// `found`, `absent` or `budget_exceeded`.
    pub result: String,
    pub branch_sets: Option<Vec<Vec<String>>>,
    pub explored: Option<u64>,
}

impl SearchView {
    pub fn of(r: &MinorSearch, names: &Names) -> Self {
        match r {
            MinorSearch::Found(emb) => SearchView {
                result: "found".into(),
                branch_sets: Some(emb.branch_sets.iter().map(|s| names.set(s)).collect()),
                explored: None,
            },
            MinorSearch::Absent => SearchView { result: "absent".into(), branch_sets: None, explored: None },
            MinorSearch::BudgetExceeded { explored } => SearchView {
                result: "budget_exceeded".into(),
                branch_sets: None,
                explored: Some(*explored),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditView {
    pub budget: u64,
    pub connectivity_ok: bool,
    pub order_ok: bool,
    pub clique_minor: SearchView,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPayload {
    pub t: usize,
    pub capacity: usize,
    pub subgraph: GraphView,
    pub z: Vec<String>,
    pub contractions: Vec<[String; 2]>,
    pub deleted: Vec<String>,
    pub minor: GraphView,
    pub minor_order: usize,
    /// The minor is `(t+1)`-connected.
    pub minor_connected: bool,
    pub audit: Option<AuditView>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutView {
    pub pair: [String; 2],
    pub cut: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityPayload {
    pub k: usize,
    pub k_connected: bool,
    pub vertex_count: usize,
    /// A separating set smaller than `k`, when one exists.
    pub cut: Option<CutView>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationView {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub separator: Vec<String>,
    pub order: usize,
}

impl SeparationView {
    pub fn of(s: &Separation, names: &Names) -> Self {
        SeparationView {
            a: names.set(&s.a),
            b: names.set(&s.b),
            separator: names.set(&s.separator()),
            order: s.order(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationPayload {
    pub t: usize,
    pub z: Vec<String>,
    pub separation: Option<SeparationView>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanPayload {
    pub k: usize,
    pub z: Vec<String>,
    /// Contracted in order; the smaller name survives each contraction.
    pub contractions: Vec<[String; 2]>,
    pub deleted: Vec<String>,
    pub result: GraphView,
    pub k_connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorPayload {
    pub t: usize,
    pub budget: u64,
    pub search: SearchView,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessChecks {
    pub connectivity: bool,
    pub separation: bool,
    pub contractions: bool,
    pub degrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WatkinsPayload {
    pub k: usize,
    pub n: usize,
    pub p: usize,
    pub apex: String,
    pub attachments: Vec<String>,
    pub copies: Vec<Vec<String>>,
    pub graph_file: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub checks: TightnessChecks,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratePayload {
    pub family: String,
    pub n: u32,
    pub p: f64,
    pub seed: u64,
    pub graph_file: String,
    pub vertex_count: usize,
    pub edge_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub kind: String,
    pub command: String,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorPayload {
    /// `usage`, `io`, `parse`, `precondition`, `verification` or `internal`.
    pub kind: String,
    pub message: String,
    pub line: Option<usize>,
    pub detail: Option<serde_json::Value>,
}
