//! Finite simple undirected graphs with stable vertex identities.
//!
//! A [`Graph`] is an immutable value: every operation returns a new graph.
//! Vertex identities survive [`Graph::induced_subgraph`], vertex deletion and
//! [`Graph::contract_edge`], so multi-step contraction plans can be replayed
//! against the original host through a [`VertexMergeMap`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Opaque vertex identity. Parsers assign dense identities starting at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(id: u32) -> Self {
        VertexId(id)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// An undirected edge stored with its endpoints in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// Normalizes the endpoint order. Loops are rejected by [`Graph`], not here.
    pub fn new(u: VertexId, v: VertexId) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn low(self) -> VertexId {
        self.0
    }

    pub fn high(self) -> VertexId {
        self.1
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(self, v: VertexId) -> Option<VertexId> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("self loop at {0}")]
    SelfLoop(VertexId),
}

/// Finite simple undirected graph.
///
/// Adjacency is kept in ordered maps so that every traversal, and therefore
/// every algorithm built on top, visits vertices in ascending identity order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.adj.keys().map(|v| v.0).collect::<Vec<_>>())
            .field(
                "edges",
                &self.edges().map(|e| (e.0 .0, e.1 .0)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl Graph {
    pub fn empty() -> Self {
        Graph::default()
    }

    /// Builds a graph from an explicit vertex set and edge list. Repeated
    /// edges collapse; loops and dangling endpoints are errors.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj: BTreeMap<VertexId, VertexSet> =
            vertices.into_iter().map(|v| (v, VertexSet::new())).collect();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj.contains_key(&u) {
                return Err(GraphError::UnknownVertex(u));
            }
            if !adj.contains_key(&v) {
                return Err(GraphError::UnknownVertex(v));
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Graph { adj })
    }

    /// Graph on the dense vertex set `0..n`.
    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        Graph::new(
            (0..n).map(VertexId),
            edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v))),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Edges in lexicographic order, each reported once.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&u, nbrs)| {
            nbrs.range(u..)
                .filter(move |&&v| v != u)
                .map(move |&v| Edge(u, v))
        })
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&VertexSet, GraphError> {
        self.adj.get(&v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.neighbors(v).map(BTreeSet::len)
    }

    /// Neighbors of `v`; panics on an unknown vertex. For internal loops over
    /// vertices already known to be present.
    pub(crate) fn nbrs(&self, v: VertexId) -> &VertexSet {
        &self.adj[&v]
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.values().map(BTreeSet::len).min()
    }

    /// `G[X]`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(&v) = x.iter().find(|v| !self.adj.contains_key(v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        let adj = x
            .iter()
            .map(|&v| {
                let nbrs = self.adj[&v].intersection(x).copied().collect();
                (v, nbrs)
            })
            .collect();
        Ok(Graph { adj })
    }

    /// `G - X`. Vertices of `x` not in the graph are ignored.
    pub fn remove_vertices(&self, x: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| !x.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.difference(x).copied().collect()))
            .collect();
        Graph { adj }
    }

    pub fn remove_vertex(&self, v: VertexId) -> Graph {
        self.remove_vertices(&VertexSet::from([v]))
    }

    /// A copy without the edge `uv`.
    pub fn remove_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(Edge::new(u, v)));
        }
        let mut g = self.clone();
        g.adj.get_mut(&u).unwrap().remove(&v);
        g.adj.get_mut(&v).unwrap().remove(&u);
        Ok(g)
    }

    /// A copy with the edge `uv` added (no-op if already present).
    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.contains_vertex(w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        let mut g = self.clone();
        g.adj.get_mut(&u).unwrap().insert(v);
        g.adj.get_mut(&v).unwrap().insert(u);
        Ok(g)
    }

    /// `G/uv`: deletes the edge and identifies its endpoints. The smaller
    /// identity survives; parallel edges and loops disappear.
    pub fn contract_edge(&self, e: Edge) -> Result<(Graph, VertexMergeMap), GraphError> {
        let (keep, gone) = e.endpoints();
        if !self.has_edge(keep, gone) {
            return Err(GraphError::NotAnEdge(e));
        }
        let mut adj = self.adj.clone();
        let gone_nbrs = adj.remove(&gone).unwrap();
        for &x in &gone_nbrs {
            let nbrs = adj.get_mut(&x).unwrap();
            nbrs.remove(&gone);
            if x != keep {
                nbrs.insert(keep);
            }
        }
        let keep_nbrs = adj.get_mut(&keep).unwrap();
        keep_nbrs.extend(gone_nbrs.into_iter().filter(|&x| x != keep));
        let mut merge = VertexMergeMap::identity(self.vertices());
        merge.redirect(gone, keep);
        Ok((Graph { adj }, merge))
    }

    /// Partition into maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut components = Vec::new();
        for &start in self.adj.keys() {
            if seen.contains(&start) {
                continue;
            }
            let component = self.reachable_from(start, &VertexSet::new());
            seen.extend(component.iter().copied());
            components.push(component);
        }
        components
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable_from(&self, start: VertexId, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[&u] {
                if !blocked.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.adj.keys().next() {
            None => true,
            Some(&v) => self.reachable_from(v, &VertexSet::new()).len() == self.adj.len(),
        }
    }

    /// Whether `x` induces a connected subgraph (the empty set does not).
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        let Some(&start) = x.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            if let Some(nbrs) = self.adj.get(&u) {
                for &w in nbrs {
                    if x.contains(&w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        seen.len() == x.len()
    }

    /// Open neighborhood of a vertex set: `N(X) - X`.
    pub fn set_neighbors(&self, x: &VertexSet) -> VertexSet {
        x.iter()
            .filter_map(|v| self.adj.get(v))
            .flatten()
            .filter(|w| !x.contains(w))
            .copied()
            .collect()
    }

    /// Largest identity plus one; zero for the empty graph.
    pub fn id_bound(&self) -> u32 {
        self.adj.keys().next_back().map_or(0, |v| v.0 + 1)
    }
}

/// Tracks which surviving vertex each original vertex was merged into.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMergeMap {
    map: BTreeMap<VertexId, VertexId>,
}

impl VertexMergeMap {
    pub fn identity<I: IntoIterator<Item = VertexId>>(vertices: I) -> Self {
        VertexMergeMap {
            map: vertices.into_iter().map(|v| (v, v)).collect(),
        }
    }

    /// Survivor of `v`, or `None` if `v` was never part of the host.
    pub fn image(&self, v: VertexId) -> Option<VertexId> {
        self.map.get(&v).copied()
    }

    /// Sends everything currently mapped to `from` onto `to`.
    fn redirect(&mut self, from: VertexId, to: VertexId) {
        for target in self.map.values_mut() {
            if *target == from {
                *target = to;
            }
        }
    }

    /// Composes with a subsequent contraction step: `self` then `next`.
    pub fn then(&self, next: &VertexMergeMap) -> VertexMergeMap {
        let map = self
            .map
            .iter()
            .map(|(&orig, &mid)| (orig, next.image(mid).unwrap_or(mid)))
            .collect();
        VertexMergeMap { map }
    }

    /// Set of surviving identities.
    pub fn survivors(&self) -> VertexSet {
        self.map.values().copied().collect()
    }

    /// Original vertices merged into `survivor`.
    pub fn preimage(&self, survivor: VertexId) -> VertexSet {
        self.map
            .iter()
            .filter(|(_, &s)| s == survivor)
            .map(|(&o, _)| o)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.map.iter().map(|(&a, &b)| (a, b))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}
