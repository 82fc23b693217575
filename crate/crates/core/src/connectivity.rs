//! Vertex connectivity, minimum vertex cuts and `Z`-good separations.
//!
//! Local connectivity between two vertices is computed by unit-capacity
//! max-flow on the vertex-split digraph (every vertex `u` becomes an arc
//! `u_in -> u_out`). Augmenting paths are found by BFS over arcs inserted in
//! ascending vertex order, so cuts are reproducible.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} and {1} are adjacent; no vertex cut separates them")]
    AdjacentPair(VertexId, VertexId),
    #[error("a vertex cannot be separated from itself ({0})")]
    SamePair(VertexId),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
}

/// A separation `{A, B}` of a host graph: `A ∪ B = V`, both fragments
/// nonempty and no edge between `A - B` and `B - A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    /// Validates the pair against `g`.
    pub fn new(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Self, ConnectivityError> {
        let sep = Separation { a, b };
        sep.validate(g)?;
        Ok(sep)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), ConnectivityError> {
        let invalid = |msg: String| Err(ConnectivityError::InvalidSeparation(msg));
        if let Some(v) = self.a.iter().chain(&self.b).find(|v| !g.contains_vertex(**v)) {
            return invalid(format!("{v} is not a vertex of the host"));
        }
        if let Some(v) = g.vertices().find(|v| !self.a.contains(v) && !self.b.contains(v)) {
            return invalid(format!("{v} is in neither side"));
        }
        let a_only = self.fragment_a();
        let b_only = self.fragment_b();
        if a_only.is_empty() || b_only.is_empty() {
            return invalid("a fragment is empty".into());
        }
        for &u in &a_only {
            if let Some(&w) = g.nbrs(u).iter().find(|w| b_only.contains(w)) {
                return invalid(format!("edge {u}{w} joins the two fragments"));
            }
        }
        Ok(())
    }

    pub fn separator(&self) -> VertexSet {
        self.a.intersection(&self.b).copied().collect()
    }

    /// `A - B`.
    pub fn fragment_a(&self) -> VertexSet {
        self.a.difference(&self.b).copied().collect()
    }

    /// `B - A`.
    pub fn fragment_b(&self) -> VertexSet {
        self.b.difference(&self.a).copied().collect()
    }

    pub fn order(&self) -> usize {
        self.a.intersection(&self.b).count()
    }

    pub fn swapped(&self) -> Separation {
        Separation {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// A separation is `Z`-bad iff one of its fragments lies inside `Z`.
    pub fn is_good_for(&self, z: &VertexSet) -> bool {
        !(self.a.difference(&self.b).all(|v| z.contains(v))
            || self.b.difference(&self.a).all(|v| z.contains(v)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goodness {
    Good,
    Bad,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessVerdict {
    pub separation: Separation,
    pub good_for: VertexSet,
    pub classification: Goodness,
}

/// Classifies `sep` (validated against `g`) as `Z`-good or `Z`-bad.
pub fn classify_separation(
    g: &Graph,
    sep: &Separation,
    z: &VertexSet,
) -> Result<GoodnessVerdict, ConnectivityError> {
    sep.validate(g)?;
    let classification = if sep.is_good_for(z) {
        Goodness::Good
    } else {
        Goodness::Bad
    };
    Ok(GoodnessVerdict {
        separation: sep.clone(),
        good_for: z.clone(),
        classification,
    })
}

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Vertex-split flow network over a fixed graph, reusable across pairs.
pub struct FlowNetwork {
    ids: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    arcs: Vec<Arc>,
    initial: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<_, _> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let big = n as u32 + 1;
        let mut net = FlowNetwork {
            ids,
            index,
            arcs: Vec::new(),
            initial: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for i in 0..n {
            net.push_arc(2 * i, 2 * i + 1, 1);
        }
        for i in 0..n {
            let u = net.ids[i];
            for w in g.nbrs(u) {
                let j = net.index[w];
                net.push_arc(2 * i + 1, 2 * j, big);
            }
        }
        net
    }

    fn push_arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
    }

    fn reset(&mut self) {
        if self.initial.len() != self.arcs.len() {
            self.initial = self.arcs.iter().map(|a| a.cap).collect();
        }
        for (arc, &cap) in self.arcs.iter_mut().zip(&self.initial) {
            arc.cap = cap;
        }
    }

    /// Parent arcs of a BFS in the residual network from `source`.
    fn bfs(&self, source: usize, sink: Option<usize>) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.out[u] {
                let arc = self.arcs[id];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    parent[arc.to] = Some(id);
                    if Some(arc.to) == sink {
                        return parent;
                    }
                    queue.push_back(arc.to);
                }
            }
        }
        parent
    }

    fn residual_reach(&self, source: usize) -> Vec<bool> {
        let parent = self.bfs(source, None);
        parent
            .iter()
            .enumerate()
            .map(|(i, p)| i == source || p.is_some())
            .collect()
    }

    /// Pushes up to `limit` vertex-disjoint paths from `x` to `y`.
    fn run(&mut self, x: VertexId, y: VertexId, limit: usize) -> usize {
        self.reset();
        let source = 2 * self.index[&x] + 1;
        let sink = 2 * self.index[&y];
        let mut flow = 0;
        while flow < limit {
            let parent = self.bfs(source, Some(sink));
            if parent[sink].is_none() {
                break;
            }
            let mut node = sink;
            while node != source {
                let id = parent[node].unwrap();
                self.arcs[id].cap -= 1;
                self.arcs[id ^ 1].cap += 1;
                node = self.arcs[id ^ 1].to;
            }
            flow += 1;
        }
        flow
    }

    fn check_pair(&self, g: &Graph, x: VertexId, y: VertexId) -> Result<(), ConnectivityError> {
        for v in [x, y] {
            if !self.index.contains_key(&v) {
                return Err(GraphError::UnknownVertex(v).into());
            }
        }
        if x == y {
            return Err(ConnectivityError::SamePair(x));
        }
        if g.has_edge(x, y) {
            return Err(ConnectivityError::AdjacentPair(x, y));
        }
        Ok(())
    }

    /// `min(κ(x, y), limit)` for a nonadjacent pair.
    pub fn local_connectivity(
        &mut self,
        g: &Graph,
        x: VertexId,
        y: VertexId,
        limit: usize,
    ) -> Result<usize, ConnectivityError> {
        self.check_pair(g, x, y)?;
        Ok(self.run(x, y, limit))
    }

    /// Minimum vertex set separating a nonadjacent pair.
    pub fn min_vertex_cut(
        &mut self,
        g: &Graph,
        x: VertexId,
        y: VertexId,
    ) -> Result<VertexSet, ConnectivityError> {
        self.check_pair(g, x, y)?;
        self.run(x, y, usize::MAX);
        let reach = self.residual_reach(2 * self.index[&x] + 1);
        Ok((0..self.ids.len())
            .filter(|&i| reach[2 * i] && !reach[2 * i + 1])
            .map(|i| self.ids[i])
            .collect())
    }
}

/// Minimum-cardinality `S ⊆ V - {x, y}` separating `x` from `y`.
pub fn min_vertex_cut(g: &Graph, x: VertexId, y: VertexId) -> Result<VertexSet, ConnectivityError> {
    FlowNetwork::new(g).min_vertex_cut(g, x, y)
}

/// Number of internally disjoint `x`–`y` paths, capped at `limit`.
pub fn local_connectivity(
    g: &Graph,
    x: VertexId,
    y: VertexId,
    limit: usize,
) -> Result<usize, ConnectivityError> {
    FlowNetwork::new(g).local_connectivity(g, x, y, limit)
}

fn nonadjacent_pairs<'a>(
    g: &'a Graph,
    allowed: &'a [VertexId],
) -> impl Iterator<Item = (VertexId, VertexId)> + 'a {
    allowed.iter().enumerate().flat_map(move |(i, &x)| {
        allowed[i + 1..]
            .iter()
            .filter(move |&&y| !g.has_edge(x, y))
            .map(move |&y| (x, y))
    })
}

/// `true` iff `|V| >= k + 1` and no two nonadjacent vertices can be separated
/// by fewer than `k` vertices. `K_n` is exactly `(n-1)`-connected.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if g.vertex_count() < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    if k == 1 {
        return g.is_connected();
    }
    let vertices: Vec<_> = g.vertices().collect();
    let mut net = FlowNetwork::new(g);
    let ok = nonadjacent_pairs(g, &vertices).all(|(x, y)| net.run(x, y, k) >= k);
    ok
}

/// Vertex connectivity `κ(G)`: `|V| - 1` for complete graphs, 0 for the empty graph.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let vertices: Vec<_> = g.vertices().collect();
    let mut net = FlowNetwork::new(g);
    let mut best = n - 1;
    for (x, y) in nonadjacent_pairs(g, &vertices) {
        best = best.min(net.run(x, y, best));
        if best == 0 {
            break;
        }
    }
    best
}

/// First `Z`-good separation of order at most `t`, if any.
///
/// Pairs `x < y` of nonadjacent vertices outside `z` are scanned in
/// lexicographic order; the first pair with a minimum cut `S` of size at most
/// `t` yields `A = C_x ∪ S`, `B = V - C_x`, where `C_x` is the component of
/// `x` in `G - S`.
pub fn find_good_separation(g: &Graph, z: &VertexSet, t: usize) -> Option<Separation> {
    let outside: Vec<_> = g.vertices().filter(|v| !z.contains(v)).collect();
    let mut net = FlowNetwork::new(g);
    for (x, y) in nonadjacent_pairs(g, &outside) {
        if net.run(x, y, t + 1) <= t {
            let cut = net
                .min_vertex_cut(g, x, y)
                .expect("pair already validated");
            return Some(separation_from_cut(g, x, &cut));
        }
    }
    None
}

/// `A = C_x ∪ S`, `B = V - C_x`, for `C_x` the component of `x` in `G - S`.
pub fn separation_from_cut(g: &Graph, x: VertexId, cut: &VertexSet) -> Separation {
    let side = g.reachable_from(x, cut);
    let a: VertexSet = side.union(cut).copied().collect();
    let b: VertexSet = g.vertices().filter(|v| !side.contains(v)).collect();
    Separation { a, b }
}
