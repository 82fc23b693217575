//! Clustered list colouring of graphs without a `K_t` minor.
//!
//! Given lists of at least `(7t-3)/2` colours on the free vertices and at most
//! `2t-1` precoloured vertices `Z`, [`clustered_color`] produces a colouring in
//! which every monochromatic component has at most `capacity + 2t - 1`
//! vertices and no precoloured vertex shares its colour with a free neighbour.
//! The recursion tries, in order:
//!
//! 1. small graph: colour directly, avoiding the colours used on `Z`;
//! 2. a free vertex of degree below `(7t-3)/2`: remove it, recurse, then give
//!    it a colour unused by its neighbours;
//! 3. a `Z`-good separation of order at most `t`: colour `G[B ∪ Z]`, then
//!    `G[A]` with `A ∩ (B ∪ Z)` precoloured;
//! 4. otherwise contract to a `(t+1)`-connected minor and return it as a
//!    [`CaseIVWitness`].
//!
//! `capacity` stands in for the size beyond which a `(t+1)`-connected graph
//! is guaranteed a `K_t` minor. That constant is not known explicitly, so a
//! witness is returned instead of a contradiction. Fractional thresholds are
//! compared after doubling.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::connectivity::{find_good_separation, is_k_connected, Separation};
use crate::contraction::{contract_to_k_connected, ContractionError, ContractionPlan};
use crate::graph::{Edge, Graph, VertexId, VertexSet};

pub type Color = u32;

/// `⌈(7t-3)/2⌉`, the number of parts used for `K_t`-minor-free graphs.
pub fn color_count(t: usize) -> usize {
    (7 * t - 2) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid list assignment at {vertex:?}: {reason}")]
    InvalidLists {
        vertex: Option<VertexId>,
        reason: String,
    },
    #[error("invalid separation for the case III split: {0}")]
    InvalidSeparation(String),
    /// The terminal contraction failed; the capacity was too small for the
    /// hypotheses of the contraction step to hold.
    #[error("case IV witness could not be built: {0}")]
    WitnessFailure(ContractionError),
    #[error("post-hoc verification failed: {0}")]
    VerificationFailed(ColoringViolation),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapacityParams {
    pub t: usize,
    pub capacity: usize,
}

impl CapacityParams {
    pub fn new(t: usize, capacity: usize) -> Result<Self, PartitionError> {
        if t == 0 {
            return Err(PartitionError::InvalidParams("t must be at least 1".into()));
        }
        if capacity == 0 {
            return Err(PartitionError::InvalidParams("capacity must be positive".into()));
        }
        Ok(CapacityParams { t, capacity })
    }

    /// Largest monochromatic component the colouring certifies.
    pub fn component_bound(&self) -> usize {
        self.capacity + 2 * self.t - 1
    }

    /// `7t - 3`, twice the minimum list size.
    pub fn doubled_list_size(&self) -> usize {
        7 * self.t - 3
    }
}

/// Per-vertex colour lists. Precoloured vertices carry singleton lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListAssignment {
    pub lists: BTreeMap<VertexId, BTreeSet<Color>>,
    pub precolored: VertexSet,
}

impl ListAssignment {
    /// `{1, ..., ⌈(7t-3)/2⌉}` on every vertex, nothing precoloured.
    pub fn uniform(g: &Graph, t: usize) -> Self {
        let palette: BTreeSet<Color> = (1..=color_count(t) as Color).collect();
        ListAssignment {
            lists: g.vertices().map(|v| (v, palette.clone())).collect(),
            precolored: VertexSet::new(),
        }
    }

    /// Fixes `v` to `color` and marks it precoloured.
    pub fn precolor(&mut self, v: VertexId, color: Color) {
        self.lists.insert(v, BTreeSet::from([color]));
        self.precolored.insert(v);
    }

    pub fn list(&self, v: VertexId) -> Option<&BTreeSet<Color>> {
        self.lists.get(&v)
    }

    /// Checks the hypotheses of the colouring procedure for parameter `t`.
    pub fn validate(&self, g: &Graph, t: usize) -> Result<(), PartitionError> {
        let bad = |vertex: Option<VertexId>, reason: String| {
            Err(PartitionError::InvalidLists { vertex, reason })
        };
        if self.precolored.len() > 2 * t - 1 {
            return bad(
                None,
                format!("{} precoloured vertices exceed 2t-1 = {}", self.precolored.len(), 2 * t - 1),
            );
        }
        if let Some(&v) = self.precolored.iter().find(|v| !g.contains_vertex(**v)) {
            return bad(Some(v), "precoloured vertex is not in the graph".into());
        }
        for v in g.vertices() {
            let Some(list) = self.lists.get(&v) else {
                return bad(Some(v), "missing list".into());
            };
            if self.precolored.contains(&v) {
                if list.len() != 1 {
                    return bad(Some(v), format!("precoloured list has {} colours", list.len()));
                }
            } else if 2 * list.len() < 7 * t - 3 {
                return bad(
                    Some(v),
                    format!("list of {} colours is below (7t-3)/2 for t = {t}", list.len()),
                );
            }
        }
        Ok(())
    }

    fn single(&self, v: VertexId) -> Color {
        *self.lists[&v].first().expect("validated nonempty")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusteredColoring {
    pub assignment: BTreeMap<VertexId, Color>,
    pub component_bound: usize,
}

impl ClusteredColoring {
    pub fn colors_used(&self) -> BTreeSet<Color> {
        self.assignment.values().copied().collect()
    }

    /// Largest monochromatic component, zero for the empty graph.
    pub fn max_component_size(&self, g: &Graph) -> usize {
        monochromatic_components(g, &self.assignment)
            .into_iter()
            .map(|(_, c)| c.len())
            .max()
            .unwrap_or(0)
    }
}

/// The terminal recursion state together with its `(t+1)`-connected minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseIVWitness {
    pub subgraph: Graph,
    pub z: VertexSet,
    pub plan: ContractionPlan,
    pub minor: Graph,
    pub minor_order: usize,
}

impl CaseIVWitness {
    /// `minor` is `(t+1)`-connected and has at least `|V(subgraph)| - |z|` vertices.
    pub fn is_valid(&self, t: usize) -> bool {
        self.minor_order == self.minor.vertex_count()
            && self.minor_order + self.z.len() >= self.subgraph.vertex_count()
            && is_k_connected(&self.minor, t + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionOutcome {
    Coloring(ClusteredColoring),
    Witness(CaseIVWitness),
}

/// A failed condition with its counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ColoringViolation {
    #[error("C1: {0} has no colour")]
    Uncolored(VertexId),
    #[error("C1: colour {color} of {vertex} is not in its list")]
    NotInList { vertex: VertexId, color: Color },
    #[error("C2: colour {color} has a component of {} vertices", component.len())]
    OversizedComponent { color: Color, component: VertexSet },
    #[error("C3: precoloured endpoint of {edge} shares colour {color} with a free neighbour")]
    PrecoloredClash { edge: Edge, color: Color },
}

fn monochromatic_components(
    g: &Graph,
    assignment: &BTreeMap<VertexId, Color>,
) -> Vec<(Color, VertexSet)> {
    let mut classes: BTreeMap<Color, VertexSet> = BTreeMap::new();
    for (&v, &c) in assignment {
        if g.contains_vertex(v) {
            classes.entry(c).or_default().insert(v);
        }
    }
    let mut out = Vec::new();
    for (c, class) in classes {
        let sub = g.induced_subgraph(&class).expect("class vertices are in g");
        out.extend(sub.connected_components().into_iter().map(|comp| (c, comp)));
    }
    out
}

/// Independently checks conditions C1 (list membership), C2 (component
/// bound) and C3 (precoloured vertices differ from free neighbours).
pub fn verify_coloring(
    g: &Graph,
    coloring: &ClusteredColoring,
    lists: &ListAssignment,
    bound: usize,
) -> Result<(), ColoringViolation> {
    for v in g.vertices() {
        let Some(&color) = coloring.assignment.get(&v) else {
            return Err(ColoringViolation::Uncolored(v));
        };
        if !lists.list(v).is_some_and(|l| l.contains(&color)) {
            return Err(ColoringViolation::NotInList { vertex: v, color });
        }
    }
    for (color, component) in monochromatic_components(g, &coloring.assignment) {
        if component.len() > bound {
            return Err(ColoringViolation::OversizedComponent { color, component });
        }
    }
    for &v in &lists.precolored {
        let color = coloring.assignment[&v];
        for &w in g.nbrs(v) {
            if !lists.precolored.contains(&w) && coloring.assignment[&w] == color {
                return Err(ColoringViolation::PrecoloredClash { edge: Edge::new(v, w), color });
            }
        }
    }
    Ok(())
}

/// The sets `P = Z - B`, `Q = Z ∩ A ∩ B`, `R = Z - A`, `X = (A ∩ B) - Z`
/// for a separation oriented so that `|P| <= |R|`, which forces
/// `|A ∩ (B ∪ Z)| = |P| + |Q| + |X| <= 2t - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case3Split {
    pub p: VertexSet,
    pub q: VertexSet,
    pub r: VertexSet,
    pub x: VertexSet,
    pub oriented: Separation,
}

impl Case3Split {
    /// `A ∩ (B ∪ Z)`, the precoloured set of the second recursive call.
    pub fn transferred(&self) -> VertexSet {
        self.p.iter().chain(&self.q).chain(&self.x).copied().collect()
    }
}

pub fn case3_split(sep: &Separation, z: &VertexSet, t: usize) -> Result<Case3Split, PartitionError> {
    let invalid = |m: String| Err(PartitionError::InvalidSeparation(m));
    if t == 0 {
        return invalid("t must be at least 1".into());
    }
    if z.len() > 2 * t - 1 {
        return invalid(format!("|Z| = {} exceeds 2t-1", z.len()));
    }
    if sep.fragment_a().is_empty() || sep.fragment_b().is_empty() {
        return invalid("empty fragment".into());
    }
    if z.iter().any(|v| !sep.a.contains(v) && !sep.b.contains(v)) {
        return invalid("Z is not covered by the separation".into());
    }
    if sep.order() > t {
        return invalid(format!("separator of size {} exceeds t = {t}", sep.order()));
    }
    if !sep.is_good_for(z) {
        return invalid("separation is Z-bad".into());
    }
    let split = |s: &Separation| {
        let minus = |x: &VertexSet, y: &VertexSet| -> VertexSet { x.difference(y).copied().collect() };
        let separator = s.separator();
        Case3Split {
            p: minus(z, &s.b),
            q: z.intersection(&separator).copied().collect(),
            r: minus(z, &s.a),
            x: minus(&separator, z),
            oriented: s.clone(),
        }
    };
    let mut out = split(sep);
    if out.p.len() > out.r.len() {
        out = split(&sep.swapped());
    }
    let (p, q, r, x) = (out.p.len(), out.q.len(), out.r.len(), out.x.len());
    assert!(p + r + 2 * q + 2 * x <= 4 * t - 1, "counting chain violated");
    assert!(p + q + x <= 2 * t - 1, "transferred set too large");
    Ok(out)
}

/// Runs the four-case recursion and re-verifies its output: colourings
/// against C1–C3, witnesses for `(t+1)`-connectivity and order.
pub fn clustered_color(
    g: &Graph,
    params: CapacityParams,
    lists: &ListAssignment,
) -> Result<PartitionOutcome, PartitionError> {
    CapacityParams::new(params.t, params.capacity)?;
    lists.validate(g, params.t)?;
    assert!(
        color_count(params.t) > 2 * params.t - 1,
        "lists must outnumber the precoloured set"
    );
    let outcome = color_rec(g, &params, &lists.lists, &lists.precolored)?;
    match &outcome {
        PartitionOutcome::Coloring(c) => {
            verify_coloring(g, c, lists, params.component_bound())
                .map_err(PartitionError::VerificationFailed)?;
        }
        PartitionOutcome::Witness(w) => {
            assert!(w.is_valid(params.t), "case IV witness failed verification");
        }
    }
    Ok(outcome)
}

/// Uniform lists `{1, ..., ⌈(7t-3)/2⌉}` and nothing precoloured.
pub fn theorem_main(g: &Graph, t: usize, capacity: usize) -> Result<PartitionOutcome, PartitionError> {
    let params = CapacityParams::new(t, capacity)?;
    clustered_color(g, params, &ListAssignment::uniform(g, t))
}

fn smallest_avoiding(list: &BTreeSet<Color>, used: &BTreeSet<Color>) -> Option<Color> {
    list.iter().copied().find(|c| !used.contains(c))
}

fn color_rec(
    g: &Graph,
    params: &CapacityParams,
    lists: &BTreeMap<VertexId, BTreeSet<Color>>,
    z: &VertexSet,
) -> Result<PartitionOutcome, PartitionError> {
    let bound = params.component_bound();
    let doubled = params.doubled_list_size();
    let palette = ListAssignment { lists: lists.clone(), precolored: z.clone() };

    // Case II removals, unrolled; coloured back in reverse order.
    let mut peeled = Vec::new();
    let mut current = g.clone();
    let mut assignment: BTreeMap<VertexId, Color>;
    loop {
        if current.vertex_count() <= bound {
            // Case I
            let z_colors: BTreeSet<Color> = z.iter().map(|&v| palette.single(v)).collect();
            assignment = BTreeMap::new();
            for v in current.vertices() {
                // Prefer a colour unused on earlier neighbours; any colour off
                // the precoloured ones is admissible here.
                let color = if z.contains(&v) {
                    palette.single(v)
                } else {
                    let mut used = z_colors.clone();
                    used.extend(current.nbrs(v).iter().filter_map(|w| assignment.get(w)));
                    smallest_avoiding(&lists[&v], &used)
                        .or_else(|| smallest_avoiding(&lists[&v], &z_colors))
                        .expect("list longer than |Z|")
                };
                assignment.insert(v, color);
            }
            break;
        }
        let low = current
            .vertices()
            .find(|x| !z.contains(x) && 2 * current.nbrs(*x).len() < doubled);
        if let Some(x) = low {
            peeled.push(x);
            current = current.remove_vertex(x);
            continue;
        }
        if let Some(sep) = find_good_separation(&current, z, params.t) {
            // Case III
            let split = case3_split(&sep, z, params.t)?;
            let (a, b) = (&split.oriented.a, &split.oriented.b);
            let b_side: VertexSet = b.union(z).copied().collect();
            let first = color_rec(
                &current.induced_subgraph(&b_side).expect("subset of V"),
                params,
                lists,
                z,
            )?;
            let first = match first {
                PartitionOutcome::Coloring(c) => c.assignment,
                witness => return Ok(witness),
            };
            let transferred = split.transferred();
            let second_lists: BTreeMap<VertexId, BTreeSet<Color>> = a
                .iter()
                .map(|&v| {
                    let list = if transferred.contains(&v) {
                        BTreeSet::from([first[&v]])
                    } else {
                        lists[&v].clone()
                    };
                    (v, list)
                })
                .collect();
            let second = color_rec(
                &current.induced_subgraph(a).expect("subset of V"),
                params,
                &second_lists,
                &transferred,
            )?;
            let second = match second {
                PartitionOutcome::Coloring(c) => c.assignment,
                witness => return Ok(witness),
            };
            assignment = first;
            for (v, c) in second {
                let prior = assignment.insert(v, c);
                debug_assert!(prior.is_none() || prior == Some(c));
            }
            break;
        }
        // Case IV
        let plan = contract_to_k_connected(&current, z, params.t + 1)
            .map_err(PartitionError::WitnessFailure)?;
        let minor = plan.result.clone();
        return Ok(PartitionOutcome::Witness(CaseIVWitness {
            subgraph: current,
            z: z.clone(),
            minor_order: minor.vertex_count(),
            minor,
            plan,
        }));
    }

    for &x in peeled.iter().rev() {
        let used: BTreeSet<Color> = g
            .nbrs(x)
            .iter()
            .filter_map(|w| assignment.get(w))
            .copied()
            .collect();
        let color = smallest_avoiding(&lists[&x], &used).expect("list longer than degree");
        assignment.insert(x, color);
    }
    Ok(PartitionOutcome::Coloring(ClusteredColoring {
        assignment,
        component_bound: bound,
    }))
}
