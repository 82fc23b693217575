//! Extremal instance showing that the degree requirement of the contraction
//! step cannot be lowered to `3(k-1)/2`.
//!
//! For odd `k >= 5` and `4 <= n <= k-1`, put `p = (k-1)/2` and take the
//! lexicographic product `C_n · K_p` (copies `H_0..H_{n-1}` of `K_p`, each
//! completely joined to its two cyclic neighbours), then add an apex `v`
//! adjacent to one vertex `w_i` of each copy.

use thiserror::Error;

use crate::connectivity::{find_good_separation, is_k_connected, local_connectivity, Separation};
use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WatkinsInstance {
    pub k: usize,
    pub n: usize,
    pub p: usize,
    pub graph: Graph,
    pub apex: VertexId,
    /// `w_i`, the first vertex of block `H_i`.
    pub attachments: Vec<VertexId>,
}

impl WatkinsInstance {
    /// Vertices of `H_i`; `H_i` occupies `i*p .. (i+1)*p`.
    pub fn copy(&self, i: usize) -> VertexSet {
        let i = i % self.n;
        (i * self.p..(i + 1) * self.p).map(|x| VertexId(x as u32)).collect()
    }

    pub fn expected_edge_count(&self) -> usize {
        let p = self.p;
        self.n * (p * (p - 1) / 2 + p * p) + self.n
    }

    pub fn expected_attachment_degree(&self) -> usize {
        (self.p - 1) + 2 * self.p + 1
    }
}

pub fn watkins_graph(k: usize, n: usize) -> Result<WatkinsInstance, ConstructionError> {
    if k < 5 {
        return Err(ConstructionError::InvalidParams(format!("k = {k} must be at least 5")));
    }
    if k.is_multiple_of(2) {
        return Err(ConstructionError::InvalidParams(format!("k = {k} must be odd")));
    }
    if n < 4 {
        return Err(ConstructionError::InvalidParams(format!("n = {n} must be at least 4")));
    }
    if n > k - 1 {
        return Err(ConstructionError::InvalidParams(format!("n = {n} must be at most k - 1 = {}", k - 1)));
    }
    let p = (k - 1) / 2;
    let id = |i: usize, j: usize| VertexId(((i % n) * p + j) as u32);
    let apex = VertexId((n * p) as u32);
    let mut edges = Vec::new();
    for i in 0..n {
        for a in 0..p {
            for b in a + 1..p {
                edges.push((id(i, a), id(i, b)));
            }
            for b in 0..p {
                edges.push((id(i, a), id(i + 1, b)));
            }
        }
        edges.push((apex, id(i, 0)));
    }
    let graph = Graph::new((0..=(n * p) as u32).map(VertexId), edges).expect("valid by construction");
    Ok(WatkinsInstance {
        k,
        n,
        p,
        graph,
        apex,
        attachments: (0..n).map(|i| id(i, 0)).collect(),
    })
}

/// Result of contracting `v w_i` and cutting at `V(H_i) ∪ V(H_{i+2})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedCheck {
    pub attachment: VertexId,
    /// `G/vw_i` is `k`-connected (expected `false`).
    pub k_connected: bool,
    pub separator: VertexSet,
    /// Components of `G/vw_i - separator`.
    pub fragments: Vec<VertexSet>,
}

impl ContractedCheck {
    pub fn passed(&self, k: usize) -> bool {
        !self.k_connected && self.separator.len() == k - 1 && self.fragments.len() >= 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessReport {
    /// First nonadjacent pair in `V - {v}` with fewer than `k` disjoint paths.
    pub weak_pair: Option<(VertexId, VertexId, usize)>,
    /// A `{v}`-good `(k-1)`-separation, if one exists.
    pub good_separation: Option<Separation>,
    /// `N(v)` separates the apex from the rest and has size `k-1` or less.
    pub apex_cut_ok: bool,
    pub contractions: Vec<ContractedCheck>,
    /// Attachments whose degree differs from `3(k-1)/2`, or an apex of the
    /// wrong degree.
    pub degree_mismatches: Vec<(VertexId, usize)>,
    pub edge_count: (usize, usize),
}

impl TightnessReport {
    pub fn connectivity_ok(&self) -> bool {
        self.weak_pair.is_none()
    }

    pub fn separation_ok(&self) -> bool {
        self.good_separation.is_none() && self.apex_cut_ok
    }

    pub fn contractions_ok(&self, k: usize) -> bool {
        self.contractions.iter().all(|c| c.passed(k))
    }

    pub fn degrees_ok(&self) -> bool {
        self.degree_mismatches.is_empty() && self.edge_count.0 == self.edge_count.1
    }

    pub fn all_passed(&self, k: usize) -> bool {
        self.connectivity_ok() && self.separation_ok() && self.contractions_ok(k) && self.degrees_ok()
    }
}

pub fn verify_tightness(inst: &WatkinsInstance) -> TightnessReport {
    let g = &inst.graph;
    let k = inst.k;
    let rest: Vec<VertexId> = g.vertices().filter(|&x| x != inst.apex).collect();
    let weak_pair = rest.iter().enumerate().find_map(|(i, &x)| {
        rest[i + 1..].iter().find_map(|&y| {
            if g.has_edge(x, y) {
                return None;
            }
            let paths = local_connectivity(g, x, y, k).expect("nonadjacent pair");
            (paths < k).then_some((x, y, paths))
        })
    });

    let z = VertexSet::from([inst.apex]);
    let good_separation = find_good_separation(g, &z, k - 1);
    let apex_nbrs = g.neighbors(inst.apex).cloned().unwrap_or_default();
    let apex_cut_ok = apex_nbrs.len() <= k - 1
        && g.remove_vertices(&apex_nbrs).connected_components().len() >= 2;

    let contractions = inst
        .attachments
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            let (h, merge) = g
                .contract_edge(crate::graph::Edge::new(inst.apex, w))
                .expect("apex is adjacent to every attachment");
            let separator: VertexSet = inst
                .copy(i)
                .union(&inst.copy(i + 2))
                .filter_map(|&x| merge.image(x))
                .collect();
            ContractedCheck {
                attachment: w,
                k_connected: is_k_connected(&h, k),
                fragments: h.remove_vertices(&separator).connected_components(),
                separator,
            }
        })
        .collect();

    let mut degree_mismatches: Vec<(VertexId, usize)> = inst
        .attachments
        .iter()
        .map(|&w| (w, g.degree(w).unwrap_or(0)))
        .filter(|&(_, d)| d != inst.expected_attachment_degree())
        .collect();
    let apex_degree = g.degree(inst.apex).unwrap_or(0);
    if apex_degree != inst.n {
        degree_mismatches.push((inst.apex, apex_degree));
    }

    TightnessReport {
        weak_pair,
        good_separation,
        apex_cut_ok,
        contractions,
        degree_mismatches,
        edge_count: (inst.expected_edge_count(), g.edge_count()),
    }
}
