//! Contracting at most `|Z|` edges, each incident to `Z`, to reach
//! `k`-connectivity.
//!
//! Hypotheses for a pair `(G, Z)` and target `k`:
//!
//! * every `(k-1)`-separation of `G` is `Z`-bad, and
//! * every vertex of `N(v) - Z`, for `v ∈ Z`, has degree at least
//!   `3k/2 + |Z| - 2`, compared exactly as `2·deg ≥ 3k + 2|Z| - 4`.
//!
//! Under them, some neighbor `w ∉ Z` of any `v ∈ Z` makes every
//! `(k-1)`-separation of `G/vw` `(Z - {v})`-bad; repeating the step with the
//! smaller set ends in a `k`-connected graph. The edge search below looks for
//! that neighbor directly, and every returned plan is re-verified.

use thiserror::Error;

use crate::connectivity::{find_good_separation, is_k_connected, Separation};
use crate::graph::{Edge, Graph, GraphError, VertexId, VertexMergeMap, VertexSet};

/// Doubled degree threshold `3k + 2|Z| - 4`, floored at zero.
pub fn doubled_degree_threshold(k: usize, z_len: usize) -> usize {
    (3 * k + 2 * z_len).saturating_sub(4)
}

/// Which hypothesis failed, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PreconditionFailure {
    /// The target connectivity must be at least one.
    ZeroTarget,
    NotInZ(VertexId),
    /// `N(v) ⊆ Z`, so no edge at `v` leaves `Z`.
    NoOutsideNeighbor(VertexId),
    /// A `Z`-good `(k-1)`-separation of the input.
    GoodSeparation(Separation),
    /// A neighbor of `Z` outside `Z` whose degree is below the threshold.
    LowDegree {
        vertex: VertexId,
        degree: usize,
        doubled_threshold: usize,
    },
    /// Fewer than `k + 1` vertices would remain once `Z` is absorbed.
    TooFewVertices { remaining: usize, needed: usize },
    /// The graph is not `k`-connected to begin with.
    NotKConnected,
}

impl std::fmt::Display for PreconditionFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::ZeroTarget => write!(f, "target connectivity must be positive"),
            Self::NotInZ(v) => write!(f, "{v} is not in Z"),
            Self::NoOutsideNeighbor(v) => write!(f, "every neighbor of {v} lies in Z"),
            Self::GoodSeparation(sep) => write!(
                f,
                "Z-good separation of order {} with separator {:?}",
                sep.order(),
                sep.separator()
            ),
            Self::LowDegree { vertex, degree, doubled_threshold } => write!(
                f,
                "{vertex} has degree {degree}, needs 2·deg >= {doubled_threshold}"
            ),
            Self::TooFewVertices { remaining, needed } => write!(
                f,
                "only {remaining} vertices outside Z, need {needed}"
            ),
            Self::NotKConnected => write!(f, "graph is not k-connected"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(PreconditionFailure),
    /// No neighbor of `v` works. Only reachable outside the degree
    /// hypothesis; `low_degree` lists the offending neighbors.
    #[error("no contractible edge at {v} (low-degree neighbors: {low_degree:?})")]
    NoEdgeFound {
        v: VertexId,
        low_degree: Vec<(VertexId, usize)>,
    },
    #[error("contracted graph is not {k}-connected")]
    ResultNotConnectedEnough { k: usize, result: Graph },
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
}

fn violated(f: PreconditionFailure) -> ContractionError {
    ContractionError::PreconditionViolated(f)
}

/// Edges contracted in order (identities as they are at the time of each
/// contraction) plus the deletion of the `Z` vertices left without outside
/// neighbors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionPlan {
    pub host: Graph,
    pub z: VertexSet,
    pub k: usize,
    pub edges: Vec<Edge>,
    /// Original vertex to survivor after all contractions.
    pub merge: VertexMergeMap,
    /// Remaining `Z` vertices removed at the end rather than contracted.
    pub deleted: VertexSet,
    pub result: Graph,
}

impl ContractionPlan {
    /// Re-derives the result from `host`, `z` and `edges` and checks every
    /// structural invariant plus `k`-connectivity.
    pub fn verify(&self) -> Result<(), ContractionError> {
        let (graph, merge, remaining) = replay(&self.host, &self.z, &self.edges)?;
        if merge != self.merge {
            return Err(ContractionError::InvalidPlan("merge map does not match replay".into()));
        }
        if remaining != self.deleted {
            return Err(ContractionError::InvalidPlan(
                "deleted set differs from the Z vertices left after contraction".into(),
            ));
        }
        let result = graph.remove_vertices(&remaining);
        if result != self.result {
            return Err(ContractionError::InvalidPlan("result does not match replay".into()));
        }
        if !is_k_connected(&result, self.k) {
            return Err(ContractionError::ResultNotConnectedEnough { k: self.k, result });
        }
        Ok(())
    }
}

/// Replays a contraction sequence. Every edge must join a current `Z` vertex
/// to a vertex outside `Z`; the merged vertex leaves `Z`. Returns the
/// contracted graph, the merge map and the `Z` vertices still present.
pub fn replay(
    host: &Graph,
    z: &VertexSet,
    edges: &[Edge],
) -> Result<(Graph, VertexMergeMap, VertexSet), ContractionError> {
    if let Some(&v) = z.iter().find(|v| !host.contains_vertex(**v)) {
        return Err(GraphError::UnknownVertex(v).into());
    }
    if edges.len() > z.len() {
        return Err(ContractionError::InvalidPlan(format!(
            "{} edges for |Z| = {}",
            edges.len(),
            z.len()
        )));
    }
    let mut graph = host.clone();
    let mut merge = VertexMergeMap::identity(host.vertices());
    let mut z_now = z.clone();
    for &e in edges {
        let (a, b) = e.endpoints();
        let v = match (z_now.contains(&a), z_now.contains(&b)) {
            (true, false) => a,
            (false, true) => b,
            _ => {
                return Err(ContractionError::InvalidPlan(format!(
                    "edge {e} does not join Z to its complement"
                )))
            }
        };
        let (next, step) = graph.contract_edge(e)?;
        z_now.remove(&v);
        merge = merge.then(&step);
        graph = next;
    }
    Ok((graph, merge, z_now))
}

fn check_membership(g: &Graph, z: &VertexSet) -> Result<(), ContractionError> {
    match z.iter().find(|v| !g.contains_vertex(**v)) {
        Some(&v) => Err(GraphError::UnknownVertex(v).into()),
        None => Ok(()),
    }
}

/// First vertex in `candidates` below the doubled threshold for `(k, |z|)`.
fn low_degree_witness<'a, I>(g: &Graph, candidates: I, k: usize, z_len: usize) -> Option<PreconditionFailure>
where
    I: IntoIterator<Item = &'a VertexId>,
{
    let doubled_threshold = doubled_degree_threshold(k, z_len);
    candidates.into_iter().find_map(|&w| {
        let degree = g.nbrs(w).len();
        (2 * degree < doubled_threshold).then_some(PreconditionFailure::LowDegree {
            vertex: w,
            degree,
            doubled_threshold,
        })
    })
}

/// `∪ {N(v) - Z : v ∈ Z}`.
pub fn outside_neighbors(g: &Graph, z: &VertexSet) -> VertexSet {
    z.iter()
        .flat_map(|&v| g.nbrs(v).iter())
        .filter(|w| !z.contains(w))
        .copied()
        .collect()
}

/// Smallest `w ∈ N(v) - Z` such that `G/vw` has no `(Z - {v})`-good
/// `(k-1)`-separation.
///
/// The structural hypotheses (`v ∈ Z`, an outside neighbor exists, no
/// `Z`-good `(k-1)`-separation) are checked first. The degree hypothesis is
/// not required for the search itself: when it fails and no neighbor works,
/// [`ContractionError::NoEdgeFound`] names the low-degree neighbors.
pub fn find_contractible_edge(
    g: &Graph,
    z: &VertexSet,
    v: VertexId,
    k: usize,
) -> Result<Edge, ContractionError> {
    check_membership(g, z)?;
    if k == 0 {
        return Err(violated(PreconditionFailure::ZeroTarget));
    }
    if !z.contains(&v) {
        return Err(violated(PreconditionFailure::NotInZ(v)));
    }
    if let Some(sep) = find_good_separation(g, z, k - 1) {
        return Err(violated(PreconditionFailure::GoodSeparation(sep)));
    }
    search_edge(g, z, v, k)
}

fn search_edge(g: &Graph, z: &VertexSet, v: VertexId, k: usize) -> Result<Edge, ContractionError> {
    let candidates: Vec<VertexId> = g.nbrs(v).iter().filter(|w| !z.contains(w)).copied().collect();
    if candidates.is_empty() {
        return Err(violated(PreconditionFailure::NoOutsideNeighbor(v)));
    }
    let mut rest = z.clone();
    rest.remove(&v);
    for &w in &candidates {
        let e = Edge::new(v, w);
        let (h, _) = g.contract_edge(e)?;
        if find_good_separation(&h, &rest, k - 1).is_none() {
            return Ok(e);
        }
    }
    let doubled = doubled_degree_threshold(k, z.len());
    let low_degree = candidates
        .iter()
        .map(|&w| (w, g.nbrs(w).len()))
        .filter(|&(_, d)| 2 * d < doubled)
        .collect();
    Err(ContractionError::NoEdgeFound { v, low_degree })
}

/// Builds a [`ContractionPlan`] by the inductive procedure: while some
/// `v ∈ Z` (smallest first) has a neighbor outside `Z`, contract the edge
/// found by the edge search and drop `v` from `Z`; finally delete what is
/// left of `Z`. The result is always checked for `k`-connectivity.
pub fn contract_to_k_connected(
    g: &Graph,
    z: &VertexSet,
    k: usize,
) -> Result<ContractionPlan, ContractionError> {
    check_membership(g, z)?;
    if k == 0 {
        return Err(violated(PreconditionFailure::ZeroTarget));
    }
    let remaining = g.vertex_count() - z.len();
    if remaining < k + 1 {
        return Err(violated(PreconditionFailure::TooFewVertices {
            remaining,
            needed: k + 1,
        }));
    }
    if let Some(sep) = find_good_separation(g, z, k - 1) {
        return Err(violated(PreconditionFailure::GoodSeparation(sep)));
    }
    if let Some(w) = low_degree_witness(g, &outside_neighbors(g, z), k, z.len()) {
        return Err(violated(w));
    }

    let mut current = g.clone();
    let mut z_now = z.clone();
    let mut merge = VertexMergeMap::identity(g.vertices());
    let mut edges = Vec::new();
    while let Some(v) = z_now
        .iter()
        .copied()
        .find(|&v| !current.nbrs(v).is_subset(&z_now))
    {
        let e = search_edge(&current, &z_now, v, k)?;
        let (next, step) = current.contract_edge(e)?;
        let w = e.other(v).unwrap();
        let survivor = e.low();
        for x in next.vertices().filter(|&x| x != survivor) {
            let before = current.nbrs(x).len();
            let after = next.nbrs(x).len();
            if after < before {
                let common = current.nbrs(v).contains(&x) && current.nbrs(w).contains(&x);
                assert!(common && after + 1 == before, "degree of {x} dropped unexpectedly");
            }
        }
        z_now.remove(&v);
        debug_assert!(
            low_degree_witness(&next, &outside_neighbors(&next, &z_now), k, z_now.len()).is_none()
        );
        merge = merge.then(&step);
        edges.push(e);
        current = next;
    }
    let result = current.remove_vertices(&z_now);
    if !is_k_connected(&result, k) {
        return Err(ContractionError::ResultNotConnectedEnough { k, result });
    }
    Ok(ContractionPlan {
        host: g.clone(),
        z: z.clone(),
        k,
        edges,
        merge,
        deleted: z_now,
        result,
    })
}

/// An edge `vw` with `G/vw` still `k`-connected, for `G` `k`-connected and
/// every neighbor of `v` of degree at least `3k/2 - 1`.
pub fn mader_edge(g: &Graph, v: VertexId, k: usize) -> Result<Edge, ContractionError> {
    g.neighbors(v)?;
    if k == 0 {
        return Err(violated(PreconditionFailure::ZeroTarget));
    }
    if !is_k_connected(g, k) {
        return Err(violated(PreconditionFailure::NotKConnected));
    }
    if let Some(w) = low_degree_witness(g, g.nbrs(v), k, 1) {
        return Err(violated(w));
    }
    let z = VertexSet::from([v]);
    let e = search_edge(g, &z, v, k)?;
    let (h, _) = g.contract_edge(e)?;
    if !is_k_connected(&h, k) {
        return Err(ContractionError::ResultNotConnectedEnough { k, result: h });
    }
    Ok(e)
}
