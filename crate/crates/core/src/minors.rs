//! Exact `K_t`-minor search and branch-set certificates.
//!
//! The search is exhaustive and three-valued: an embedding, a refutation, or
//! an exhausted work budget. Work is counted in search nodes, never wall time.
//!
//! For `t >= 4` the graph is first reduced by operations that preserve the
//! existence of a `K_t` minor, each of which is a sequence of contractions and
//! deletions so that models lift back verbatim:
//!
//! * a vertex of degree at most two is contracted into a neighbour;
//! * the graph is split into connected components;
//! * at a separator `S` with `|S| <= 3`, every side `C` becomes
//!   `G[C ∪ S]` with `S` completed to a clique, provided the missing edges
//!   can be produced by contracting other components of `G - S` into `S`.
//!   A model has at most three branch sets meeting `S`, so all its other
//!   branch sets share one side.
//!
//! What remains is searched as a partition of the vertex set into exactly `t`
//! connected, pairwise adjacent parts (in a connected graph every model can
//! be grown to cover all vertices). The search repeatedly picks the vertex
//! with fewest options: it either forms a part on its own (needs degree at
//! least `t - 1`) or is contracted into a neighbour. Visited states are
//! memoized. For `t >= 5` any state whose current minor is planar is
//! discarded, since planar graphs have no `K_5` minor.

use std::collections::{BTreeSet, HashSet};

use rustworkx_core::petgraph::graph::UnGraph;
use rustworkx_core::planar::is_planar;
use thiserror::Error;

use crate::connectivity::{is_k_connected, FlowNetwork};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::partition::CaseIVWitness;

pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Largest reduced piece the bitset search handles.
const MAX_SEARCH_ORDER: usize = 128;

/// Upper bound on memoized states; past it the search continues unmemoized.
const MEMO_LIMIT: usize = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search nodes and separator probes.
    pub budget: u64,
    /// Discard planar states when `t >= 5`.
    pub planarity_bound: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, planarity_bound: true }
    }
}

/// Branch sets of a `K_t` model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorEmbedding {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorEmbedding {
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorSearch {
    Found(MinorEmbedding),
    Absent,
    BudgetExceeded { explored: u64 },
}

impl MinorSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, MinorSearch::Found(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EmbeddingViolation {
    #[error("expected {expected} branch sets, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("branch set {0} is empty")]
    EmptySet(usize),
    #[error("branch set {set} contains unknown vertex {vertex}")]
    UnknownVertex { set: usize, vertex: VertexId },
    #[error("branch sets {first} and {second} share {vertex}")]
    Overlap { first: usize, second: usize, vertex: VertexId },
    #[error("branch set {0} is not connected")]
    Disconnected(usize),
    #[error("branch sets {0} and {1} are not joined by an edge")]
    NotAdjacent(usize, usize),
}

/// Checks disjointness, connectivity of each set and pairwise adjacency.
pub fn verify_embedding(g: &Graph, emb: &MinorEmbedding, t: usize) -> Result<(), EmbeddingViolation> {
    let sets = &emb.branch_sets;
    if sets.len() != t {
        return Err(EmbeddingViolation::WrongCount { expected: t, found: sets.len() });
    }
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(EmbeddingViolation::EmptySet(i));
        }
        if let Some(&vertex) = set.iter().find(|v| !g.contains_vertex(**v)) {
            return Err(EmbeddingViolation::UnknownVertex { set: i, vertex });
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if let Some(&vertex) = sets[i].intersection(&sets[j]).next() {
                return Err(EmbeddingViolation::Overlap { first: i, second: j, vertex });
            }
        }
    }
    for (i, set) in sets.iter().enumerate() {
        if !g.is_connected_set(set) {
            return Err(EmbeddingViolation::Disconnected(i));
        }
    }
    for i in 0..sets.len() {
        let reach = g.set_neighbors(&sets[i]);
        for (j, other) in sets.iter().enumerate().skip(i + 1) {
            if reach.is_disjoint(other) {
                return Err(EmbeddingViolation::NotAdjacent(i, j));
            }
        }
    }
    Ok(())
}

pub fn find_clique_minor(g: &Graph, t: usize) -> MinorSearch {
    find_clique_minor_with_budget(g, t, DEFAULT_BUDGET)
}

pub fn find_clique_minor_with_budget(g: &Graph, t: usize, budget: u64) -> MinorSearch {
    find_clique_minor_with(g, t, SearchOptions { budget, ..SearchOptions::default() })
}

pub fn find_clique_minor_with(g: &Graph, t: usize, options: SearchOptions) -> MinorSearch {
    let mut search = Search {
        t,
        budget: options.budget,
        planarity_bound: options.planarity_bound && t >= 5,
        explored: 0,
    };
    let found = match t {
        0 => Ok(Some(Vec::new())),
        1 => Ok(g.vertices().next().map(|v| vec![VertexSet::from([v])])),
        2 => Ok(g
            .edges()
            .next()
            .map(|e| vec![VertexSet::from([e.low()]), VertexSet::from([e.high()])])),
        3 => Ok(find_cycle(g).map(|cycle| {
            vec![
                VertexSet::from([cycle[0]]),
                VertexSet::from([cycle[1]]),
                cycle[2..].iter().copied().collect(),
            ]
        })),
        _ => {
            if g.vertex_count() < t || g.edge_count() < t * (t - 1) / 2 {
                Ok(None)
            } else {
                search.solve(Quotient::from_graph(g))
            }
        }
    };
    match found {
        Ok(Some(mut sets)) => {
            sets.sort_by_key(|s| s.first().copied());
            MinorSearch::Found(MinorEmbedding { branch_sets: sets })
        }
        Ok(None) => MinorSearch::Absent,
        Err(OutOfBudget) => MinorSearch::BudgetExceeded { explored: search.explored },
    }
}

/// Vertices of some cycle, in cyclic order.
fn find_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let mut parent: std::collections::BTreeMap<VertexId, Option<VertexId>> = Default::default();
    for root in g.vertices() {
        if parent.contains_key(&root) {
            continue;
        }
        parent.insert(root, None);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in g.nbrs(u) {
                if parent[&u] == Some(w) {
                    continue;
                }
                if parent.contains_key(&w) {
                    // Back edge in a DFS tree: walk both ends to their meeting point.
                    let ancestors = |mut x: VertexId| {
                        let mut chain = vec![x];
                        while let Some(p) = parent[&x] {
                            chain.push(p);
                            x = p;
                        }
                        chain
                    };
                    let (up, wp) = (ancestors(u), ancestors(w));
                    let meet = up.iter().position(|x| wp.contains(x)).unwrap();
                    let join = wp.iter().position(|x| *x == up[meet]).unwrap();
                    let mut cycle: Vec<VertexId> = up[..=meet].to_vec();
                    cycle.extend(wp[..join].iter().rev());
                    return Some(cycle);
                }
                parent.insert(w, Some(u));
                stack.push(w);
            }
        }
    }
    None
}

#[derive(Debug)]
struct OutOfBudget;

/// A minor of the input: every node is a connected set of original vertices,
/// nodes are disjoint and adjacent iff some input edge joins them.
#[derive(Clone, Debug)]
struct Quotient {
    members: Vec<VertexSet>,
    adj: Vec<BTreeSet<usize>>,
}

impl Quotient {
    fn from_graph(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: &VertexId| ids.binary_search(v).unwrap();
        Quotient {
            members: ids.iter().map(|&v| VertexSet::from([v])).collect(),
            adj: ids.iter().map(|&v| g.nbrs(v).iter().map(index).collect()).collect(),
        }
    }

    fn len(&self) -> usize {
        self.members.len()
    }

    /// Merges each group into one node and drops nodes in no group.
    fn group(&self, groups: &[Vec<usize>]) -> Quotient {
        let mut owner = vec![usize::MAX; self.len()];
        for (gi, group) in groups.iter().enumerate() {
            for &x in group {
                owner[x] = gi;
            }
        }
        let members = groups
            .iter()
            .map(|group| group.iter().flat_map(|&x| self.members[x].iter().copied()).collect())
            .collect();
        let adj = groups
            .iter()
            .enumerate()
            .map(|(gi, group)| {
                group
                    .iter()
                    .flat_map(|&x| self.adj[x].iter())
                    .map(|&y| owner[y])
                    .filter(|&o| o != usize::MAX && o != gi)
                    .collect()
            })
            .collect();
        Quotient { members, adj }
    }

    fn components_without(&self, removed: &BTreeSet<usize>) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || removed.contains(&start) {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                for &y in &self.adj[comp[i]] {
                    if !seen[y] && !removed.contains(&y) {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn as_graph(&self) -> Graph {
        Graph::new(
            (0..self.len() as u32).map(VertexId),
            self.adj.iter().enumerate().flat_map(|(x, nbrs)| {
                nbrs.iter()
                    .filter(move |&&y| y > x)
                    .map(move |&y| (VertexId(x as u32), VertexId(y as u32)))
            }),
        )
        .expect("quotient adjacency is simple")
    }
}

struct Search {
    t: usize,
    budget: u64,
    planarity_bound: bool,
    explored: u64,
}

type Model = Vec<VertexSet>;

impl Search {
    fn charge(&mut self, units: u64) -> Result<(), OutOfBudget> {
        self.explored += units;
        if self.explored > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn solve(&mut self, q: Quotient) -> Result<Option<Model>, OutOfBudget> {
        let q = self.reduce_low_degree(q);
        if q.len() < self.t {
            return Ok(None);
        }
        let comps = q.components_without(&BTreeSet::new());
        if comps.len() > 1 {
            for comp in comps {
                if comp.len() < self.t {
                    continue;
                }
                let groups: Vec<Vec<usize>> = comp.iter().map(|&x| vec![x]).collect();
                if let Some(model) = self.solve(q.group(&groups))? {
                    return Ok(Some(model));
                }
            }
            return Ok(None);
        }
        let edges: usize = q.adj.iter().map(BTreeSet::len).sum::<usize>() / 2;
        if edges < self.t * (self.t - 1) / 2 {
            return Ok(None);
        }
        if self.planarity_bound && planar(q.adj.iter().enumerate().flat_map(|(x, nbrs)| nbrs.iter().map(move |&y| (x, y)))) {
            return Ok(None);
        }
        if let Some(pieces) = self.split_at_small_separator(&q)? {
            for piece in pieces {
                if let Some(model) = self.solve(piece)? {
                    return Ok(Some(model));
                }
            }
            return Ok(None);
        }
        self.search_partitions(&q)
    }

    /// Contracts vertices of degree at most two into a neighbour until none
    /// remain; isolated vertices are dropped.
    fn reduce_low_degree(&mut self, mut q: Quotient) -> Quotient {
        loop {
            let Some(u) = (0..q.len()).find(|&u| q.adj[u].len() <= 2) else {
                return q;
            };
            let groups: Vec<Vec<usize>> = match q.adj[u].first() {
                None => (0..q.len()).filter(|&x| x != u).map(|x| vec![x]).collect(),
                Some(&a) => (0..q.len())
                    .filter(|&x| x != u)
                    .map(|x| if x == a { vec![a, u] } else { vec![x] })
                    .collect(),
            };
            q = q.group(&groups);
        }
    }

    /// Finds a separator of at most three nodes whose clique completion is
    /// realizable for every side, and returns the completed sides.
    fn split_at_small_separator(&mut self, q: &Quotient) -> Result<Option<Vec<Quotient>>, OutOfBudget> {
        let g = q.as_graph();
        let mut net = FlowNetwork::new(&g);
        let mut tried: HashSet<Vec<usize>> = HashSet::new();
        for x in 0..q.len() {
            for y in x + 1..q.len() {
                if q.adj[x].contains(&y) {
                    continue;
                }
                self.charge(1)?;
                let (vx, vy) = (VertexId(x as u32), VertexId(y as u32));
                if net.local_connectivity(&g, vx, vy, 4).expect("nonadjacent pair") > 3 {
                    continue;
                }
                let cut: Vec<usize> = net
                    .min_vertex_cut(&g, vx, vy)
                    .expect("nonadjacent pair")
                    .iter()
                    .map(|v| v.index())
                    .collect();
                if !tried.insert(cut.clone()) {
                    continue;
                }
                if let Some(pieces) = completed_sides(q, &cut) {
                    return Ok(Some(pieces));
                }
            }
        }
        Ok(None)
    }

    fn search_partitions(&mut self, q: &Quotient) -> Result<Option<Model>, OutOfBudget> {
        if q.len() > MAX_SEARCH_ORDER {
            self.explored = self.explored.max(self.budget + 1);
            return Err(OutOfBudget);
        }
        let n = q.len();
        let mut adj = vec![0u128; n];
        for (x, nbrs) in q.adj.iter().enumerate() {
            for &y in nbrs {
                adj[x] |= 1u128 << y;
            }
        }
        let alive = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let state = State {
            alive,
            frozen: 0,
            adj,
            rep: (0..n as u8).collect(),
        };
        let mut memo = HashSet::new();
        let found = self.dfs(state, &mut memo)?;
        Ok(found.map(|parts| {
            parts
                .into_iter()
                .map(|mask| {
                    bits(mask)
                        .flat_map(|x| q.members[x].iter().copied())
                        .collect()
                })
                .collect()
        }))
    }

    /// Returns the parts (as node masks) of a covering model, if any.
    fn dfs(&mut self, s: State, memo: &mut HashSet<(Vec<u8>, u128)>) -> Result<Option<Vec<u128>>, OutOfBudget> {
        self.charge(1)?;
        let t = self.t;
        let alive_count = s.alive.count_ones() as usize;
        if alive_count < t {
            return Ok(None);
        }
        let degree = |x: usize| s.adj[x].count_ones() as usize;
        let edges: usize = bits(s.alive).map(degree).sum::<usize>() / 2;
        if edges < t * (t - 1) / 2 {
            return Ok(None);
        }
        if alive_count == t {
            return Ok(if edges == t * (t - 1) / 2 { Some(s.parts()) } else { None });
        }
        if self.planarity_bound && planar(bits(s.alive).flat_map(|x| bits(s.adj[x]).map(move |y| (x, y)))) {
            return Ok(None);
        }
        let frozen_count = s.frozen.count_ones() as usize;
        if frozen_count >= t {
            return Ok(None);
        }
        let free = s.alive & !s.frozen;
        let remaining = t - frozen_count;
        for f in bits(s.frozen) {
            if s.adj[f] & s.frozen != s.frozen & !(1u128 << f) {
                return Ok(None);
            }
            if degree(f) < t - 1 || ((s.adj[f] & free).count_ones() as usize) < remaining {
                return Ok(None);
            }
        }
        // Parts off the frozen vertices are pairwise adjacent and connected, so
        // the free vertices must form one connected piece.
        if !connected_mask(&s.adj, free) {
            return Ok(None);
        }
        if remaining == 1 {
            let mut parts: Vec<u128> = bits(s.frozen).map(|f| s.members(f)).collect();
            parts.push(bits(free).fold(0, |acc, x| acc | s.members(x)));
            return Ok(Some(parts));
        }
        let key = (s.rep.clone(), s.frozen);
        if memo.contains(&key) {
            return Ok(None);
        }

        let can_stand_alone = |x: usize| {
            degree(x) >= t - 1
                && s.adj[x] & s.frozen == s.frozen
                && (s.adj[x] & free).count_ones() as usize >= remaining - 1
        };
        let cost = |x: usize| (s.adj[x] & free).count_ones() as usize + usize::from(can_stand_alone(x));
        let u = bits(free).min_by_key(|&x| (cost(x), x)).expect("free is nonempty");
        let mut options: Vec<usize> = bits(s.adj[u] & free).collect();
        if degree(u) <= 2 {
            options.truncate(1);
        }
        if can_stand_alone(u) {
            let mut next = s.clone();
            next.frozen |= 1u128 << u;
            if let Some(parts) = self.dfs(next, memo)? {
                return Ok(Some(parts));
            }
        }
        for w in options {
            if let Some(parts) = self.dfs(s.contract(u, w), memo)? {
                return Ok(Some(parts));
            }
        }
        if memo.len() < MEMO_LIMIT {
            memo.insert(key);
        }
        Ok(None)
    }
}

#[derive(Clone)]
struct State {
    alive: u128,
    frozen: u128,
    adj: Vec<u128>,
    /// Surviving node each original node has been merged into.
    rep: Vec<u8>,
}

impl State {
    fn members(&self, x: usize) -> u128 {
        self.rep
            .iter()
            .enumerate()
            .filter(|(_, &r)| r as usize == x)
            .fold(0, |acc, (i, _)| acc | (1u128 << i))
    }

    fn parts(&self) -> Vec<u128> {
        bits(self.alive).map(|x| self.members(x)).collect()
    }

    /// Merges two adjacent live nodes; the smaller index survives.
    fn contract(&self, a: usize, b: usize) -> State {
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        let mut s = self.clone();
        let gone_bit = 1u128 << gone;
        let keep_bit = 1u128 << keep;
        let merged = (s.adj[keep] | s.adj[gone]) & !(gone_bit | keep_bit);
        for x in bits(s.adj[gone]) {
            s.adj[x] = (s.adj[x] & !gone_bit) | if x == keep { 0 } else { keep_bit };
        }
        s.adj[keep] = merged;
        s.adj[gone] = 0;
        s.alive &= !gone_bit;
        for r in s.rep.iter_mut() {
            if *r as usize == gone {
                *r = keep as u8;
            }
        }
        s
    }
}

/// Planarity of the graph with the given arcs (each edge may appear twice).
fn planar(arcs: impl Iterator<Item = (usize, usize)>) -> bool {
    let edges: Vec<(u32, u32)> = arcs.filter(|(x, y)| x < y).map(|(x, y)| (x as u32, y as u32)).collect();
    is_planar(&UnGraph::<(), ()>::from_edges(&edges))
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

fn connected_mask(adj: &[u128], mask: u128) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = 1u128 << mask.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for x in bits(frontier) {
            next |= adj[x] & mask;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == mask
}

/// For a separator `cut` of `q`, the completed side of every component, or
/// `None` if some side's completion cannot be realized by contractions.
fn completed_sides(q: &Quotient, cut: &[usize]) -> Option<Vec<Quotient>> {
    let removed: BTreeSet<usize> = cut.iter().copied().collect();
    let comps = q.components_without(&removed);
    if comps.len() < 2 {
        return None;
    }
    let attachments: Vec<Vec<usize>> = comps
        .iter()
        .map(|comp| {
            cut.iter()
                .copied()
                .filter(|s| comp.iter().any(|x| q.adj[*x].contains(s)))
                .collect()
        })
        .collect();
    let missing: Vec<(usize, usize)> = cut
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| cut[i + 1..].iter().map(move |&b| (a, b)))
        .filter(|(a, b)| !q.adj[*a].contains(b))
        .collect();
    let mut pieces = Vec::with_capacity(comps.len());
    for (ci, comp) in comps.iter().enumerate() {
        let others: Vec<usize> = (0..comps.len()).filter(|&d| d != ci).collect();
        let mut chosen = Vec::new();
        if !realize(&missing, &others, &attachments, &mut chosen) {
            return None;
        }
        let mut groups: Vec<Vec<usize>> = comp.iter().map(|&x| vec![x]).collect();
        for &s in cut {
            let mut group = vec![s];
            for &(d, target) in &chosen {
                if target == s {
                    group.extend(comps[d].iter().copied());
                }
            }
            groups.push(group);
        }
        pieces.push(q.group(&groups));
    }
    Some(pieces)
}

/// Chooses other components and contraction targets in the separator so
/// that every missing separator edge appears.
fn realize(
    missing: &[(usize, usize)],
    others: &[usize],
    attachments: &[Vec<usize>],
    chosen: &mut Vec<(usize, usize)>,
) -> bool {
    let covered = |a: usize, b: usize, chosen: &[(usize, usize)]| {
        chosen.iter().any(|&(d, s)| {
            let att = &attachments[d];
            (s == a && att.contains(&b)) || (s == b && att.contains(&a))
        })
    };
    let Some(&(a, b)) = missing.iter().find(|&&(a, b)| !covered(a, b, chosen)) else {
        return true;
    };
    for &d in others {
        if chosen.iter().any(|&(c, _)| c == d) {
            continue;
        }
        let att = &attachments[d];
        if !(att.contains(&a) && att.contains(&b)) {
            continue;
        }
        for target in [a, b] {
            chosen.push((d, target));
            if realize(missing, others, attachments, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Outcome of re-checking a [`CaseIVWitness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessAudit {
    /// The minor is `(t+1)`-connected.
    pub connectivity_ok: bool,
    /// The minor keeps at least `|V(subgraph)| - |z|` vertices.
    pub order_ok: bool,
    /// `K_t`-minor search in the minor itself.
    pub clique_minor: MinorSearch,
}

impl WitnessAudit {
    pub fn is_sound(&self) -> bool {
        self.connectivity_ok && self.order_ok
    }
}

/// Re-verifies a witness and searches its minor for `K_t` within `budget`.
pub fn audit_witness(w: &CaseIVWitness, t: usize, budget: u64) -> WitnessAudit {
    let connectivity_ok = is_k_connected(&w.minor, t + 1);
    let order_ok = w.minor_order == w.minor.vertex_count()
        && w.minor_order + w.z.len() >= w.subgraph.vertex_count();
    let clique_minor = find_clique_minor_with_budget(&w.minor, t, budget);
    if let MinorSearch::Found(emb) = &clique_minor {
        debug_assert!(verify_embedding(&w.minor, emb, t).is_ok());
    }
    WitnessAudit {
        connectivity_ok,
        order_ok,
        clique_minor,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn set(ids: &[u32]) -> VertexSet {
        ids.iter().map(|&i| VertexId(i)).collect()
    }

    fn found(g: &Graph, t: usize) -> MinorEmbedding {
        match find_clique_minor(g, t) {
            MinorSearch::Found(emb) => {
                verify_embedding(g, &emb, t).unwrap();
                emb
            }
            other => panic!("expected K_{t} minor, got {other:?}"),
        }
    }

    #[test]
    fn clique_contains_itself() {
        let emb = found(&generate::complete(5), 5);
        assert!(emb.branch_sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn small_orders() {
        let g = generate::cycle(5);
        assert_eq!(found(&g, 0).order(), 0);
        found(&g, 1);
        found(&g, 2);
        found(&g, 3);
        assert_eq!(find_clique_minor(&g, 4), MinorSearch::Absent);
        assert_eq!(find_clique_minor(&generate::path(6), 3), MinorSearch::Absent);
        assert_eq!(find_clique_minor(&Graph::empty(), 1), MinorSearch::Absent);
    }

    #[test]
    fn petersen_matching_contraction_is_a_k5_model() {
        let p = generate::petersen();
        let matching = MinorEmbedding {
            branch_sets: (0..5).map(|i| set(&[i, i + 5])).collect(),
        };
        verify_embedding(&p, &matching, 5).unwrap();
        found(&p, 5);
    }

    #[test]
    fn petersen_has_no_k6_minor() {
        assert_eq!(find_clique_minor(&generate::petersen(), 6), MinorSearch::Absent);
    }

    #[test]
    fn k6_has_k5() {
        found(&generate::complete(6), 5);
    }

    #[test]
    fn budget_is_distinct_from_refutation() {
        let p = generate::petersen();
        assert!(matches!(
            find_clique_minor_with_budget(&p, 6, 0),
            MinorSearch::BudgetExceeded { .. }
        ));
        let octahedron = generate::complete_multipartite(3, 2);
        let unbounded = SearchOptions { budget: 0, planarity_bound: false };
        assert!(matches!(
            find_clique_minor_with(&octahedron, 5, unbounded),
            MinorSearch::BudgetExceeded { .. }
        ));
        assert_eq!(find_clique_minor_with_budget(&octahedron, 5, 0), MinorSearch::Absent);
        assert_eq!(find_clique_minor(&octahedron, 5), MinorSearch::Absent);
        found(&octahedron, 4);
    }

    #[test]
    fn petersen_refutation_without_planarity_bound() {
        let options = SearchOptions { planarity_bound: false, ..SearchOptions::default() };
        assert_eq!(find_clique_minor_with(&generate::petersen(), 6, options), MinorSearch::Absent);
        assert!(find_clique_minor_with(&generate::petersen(), 5, options).is_found());
    }

    #[test]
    fn cocktail_party_hadwiger_numbers() {
        // K_{2×k} has Hadwiger number ⌊3k/2⌋.
        for k in 3..=7u32 {
            let g = generate::complete_multipartite(k, 2);
            let h = (3 * k / 2) as usize;
            found(&g, h);
            assert_eq!(find_clique_minor(&g, h + 1), MinorSearch::Absent, "k = {k}");
        }
    }

    fn witness_for(minor: Graph) -> CaseIVWitness {
        use crate::contraction::contract_to_k_connected;
        let plan = contract_to_k_connected(&minor, &VertexSet::new(), 1).unwrap();
        CaseIVWitness {
            subgraph: minor.clone(),
            z: VertexSet::new(),
            minor_order: minor.vertex_count(),
            minor,
            plan,
        }
    }

    #[test]
    fn audit_of_clique_minor() {
        // K_7 is the smallest 6-connected clique.
        let audit = audit_witness(&witness_for(generate::complete(7)), 5, DEFAULT_BUDGET);
        assert!(audit.is_sound());
        assert!(audit.clique_minor.is_found());
    }

    #[test]
    fn audit_flags_low_connectivity() {
        let tampered = generate::complete(6).remove_edge(VertexId(0), VertexId(1)).unwrap();
        let audit = audit_witness(&witness_for(tampered), 5, DEFAULT_BUDGET);
        assert!(!audit.connectivity_ok);
        assert!(!audit.is_sound());
    }

    #[test]
    fn audit_of_connected_minor_without_clique() {
        // 12-connected on 14 vertices, Hadwiger number 10.
        let g = generate::complete_multipartite(7, 2);
        let audit = audit_witness(&witness_for(g), 11, DEFAULT_BUDGET);
        assert!(audit.is_sound());
        assert_eq!(audit.clique_minor, MinorSearch::Absent);
    }

    #[test]
    fn embedding_violations() {
        let k4 = generate::complete(4);
        let overlap = MinorEmbedding { branch_sets: vec![set(&[0, 1]), set(&[1]), set(&[2]), set(&[3])] };
        assert_eq!(
            verify_embedding(&k4, &overlap, 4),
            Err(EmbeddingViolation::Overlap { first: 0, second: 1, vertex: VertexId(1) })
        );
        let p = generate::path(4);
        let split = MinorEmbedding { branch_sets: vec![set(&[0, 2]), set(&[1])] };
        assert_eq!(verify_embedding(&p, &split, 2), Err(EmbeddingViolation::Disconnected(0)));
        let far = MinorEmbedding { branch_sets: vec![set(&[0]), set(&[3])] };
        assert_eq!(verify_embedding(&p, &far, 2), Err(EmbeddingViolation::NotAdjacent(0, 1)));
        assert_eq!(
            verify_embedding(&p, &far, 3),
            Err(EmbeddingViolation::WrongCount { expected: 3, found: 2 })
        );
    }

    #[test]
    fn separator_split_keeps_models_across_the_cut() {
        // Two K_5's glued on a triangle: the K_5 lives on one side.
        let mut edges = Vec::new();
        for side in [[0u32, 1, 2, 3, 4], [0, 1, 2, 5, 6]] {
            for i in 0..5 {
                for j in i + 1..5 {
                    edges.push((side[i], side[j]));
                }
            }
        }
        let g = Graph::from_edges(7, &edges).unwrap();
        found(&g, 5);
        assert_eq!(find_clique_minor(&g, 6), MinorSearch::Absent);
    }
}
