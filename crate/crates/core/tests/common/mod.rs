//! Brute-force oracles and instance generators shared by the integration
//! tests. Nothing here calls the algorithms under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hadwiger_core::{generate, Graph, VertexId, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn vset(ids: &[u32]) -> VertexSet {
    ids.iter().map(|&i| VertexId(i)).collect()
}

/// Plain DFS connectivity of `g - removed`.
pub fn connected_after_removal(g: &Graph, removed: &VertexSet) -> bool {
    let rest: Vec<VertexId> = g.vertices().filter(|v| !removed.contains(v)).collect();
    let Some(&start) = rest.first() else { return true };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u).unwrap() {
            if !removed.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == rest.len()
}

fn reaches(g: &Graph, x: VertexId, y: VertexId, removed: &VertexSet) -> bool {
    let mut seen = BTreeSet::from([x]);
    let mut stack = vec![x];
    while let Some(u) = stack.pop() {
        if u == y {
            return true;
        }
        for &w in g.neighbors(u).unwrap() {
            if !removed.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    false
}

/// All subsets of `items` in order of increasing size.
pub fn subsets_by_size<T: Clone>(items: &[T], max: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(Vec<T>, usize)> = vec![(Vec::new(), 0)];
    for _ in 0..max.min(items.len()) {
        let mut next = Vec::new();
        for (set, from) in &frontier {
            for i in *from..items.len() {
                let mut s = set.clone();
                s.push(items[i].clone());
                out.push(s.clone());
                next.push((s, i + 1));
            }
        }
        frontier = next;
    }
    out
}

/// Size of a smallest vertex set avoiding `x, y` whose removal separates them.
pub fn brute_min_cut(g: &Graph, x: VertexId, y: VertexId) -> usize {
    let others: Vec<VertexId> = g.vertices().filter(|&v| v != x && v != y).collect();
    subsets_by_size(&others, others.len())
        .into_iter()
        .find(|s| !reaches(g, x, y, &s.iter().copied().collect()))
        .map(|s| s.len())
        .expect("removing every other vertex separates a nonadjacent pair")
}

/// Maximum number of internally disjoint `x`-`y` paths, by exhaustive
/// packing of simple paths.
pub fn brute_path_packing(g: &Graph, x: VertexId, y: VertexId) -> usize {
    fn paths(g: &Graph, u: VertexId, y: VertexId, on: &mut Vec<VertexId>, out: &mut Vec<VertexSet>) {
        for &w in g.neighbors(u).unwrap() {
            if w == y {
                out.push(on[1..].iter().copied().collect());
            } else if !on.contains(&w) {
                on.push(w);
                paths(g, w, y, on, out);
                on.pop();
            }
        }
    }
    fn pack(paths: &[VertexSet], from: usize, used: &mut VertexSet, direct_used: &mut bool) -> usize {
        let mut best = 0;
        for i in from..paths.len() {
            let p = &paths[i];
            if p.is_empty() {
                if *direct_used {
                    continue;
                }
                *direct_used = true;
                best = best.max(1 + pack(paths, i + 1, used, direct_used));
                *direct_used = false;
            } else if p.is_disjoint(used) {
                used.extend(p.iter().copied());
                best = best.max(1 + pack(paths, i + 1, used, direct_used));
                for v in p {
                    used.remove(v);
                }
            }
        }
        best
    }
    let mut all = Vec::new();
    paths(g, x, y, &mut vec![x], &mut all);
    all.sort_by_key(|p| p.len());
    all.dedup();
    pack(&all, 0, &mut VertexSet::new(), &mut false)
}

/// `|V| >= k + 1` and no set of fewer than `k` vertices disconnects `g`.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    if g.vertex_count() < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    subsets_by_size(&vs, k - 1)
        .into_iter()
        .all(|s| connected_after_removal(g, &s.into_iter().collect()))
}

/// Every separation `(A, B)` of `g`, by labelling each vertex A-only,
/// B-only or both.
pub fn brute_separations(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let n = vs.len();
    let total = 3usize.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut a = VertexSet::new();
        let mut b = VertexSet::new();
        for &v in &vs {
            match c % 3 {
                0 => {
                    a.insert(v);
                }
                1 => {
                    b.insert(v);
                }
                _ => {
                    a.insert(v);
                    b.insert(v);
                }
            }
            c /= 3;
        }
        let a_only: VertexSet = a.difference(&b).copied().collect();
        let b_only: VertexSet = b.difference(&a).copied().collect();
        if a_only.is_empty() || b_only.is_empty() {
            continue;
        }
        if g.edges().any(|e| {
            (a_only.contains(&e.low()) && b_only.contains(&e.high()))
                || (b_only.contains(&e.low()) && a_only.contains(&e.high()))
        }) {
            continue;
        }
        out.push((a, b));
    }
    out
}

pub fn is_good(a: &VertexSet, b: &VertexSet, z: &VertexSet) -> bool {
    let a_only: VertexSet = a.difference(b).copied().collect();
    let b_only: VertexSet = b.difference(a).copied().collect();
    !a_only.is_subset(z) && !b_only.is_subset(z)
}

pub fn brute_has_good_separation(seps: &[(VertexSet, VertexSet)], z: &VertexSet, t: usize) -> bool {
    seps.iter()
        .any(|(a, b)| a.intersection(b).count() <= t && is_good(a, b, z))
}

/// Does some labelling `V -> {unused, 1..t}` give a `K_t` model?
pub fn brute_has_clique_minor(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    let n = vs.len();
    if n < t {
        return false;
    }
    let mut labels = vec![0usize; n];
    loop {
        // Only labellings whose labels first appear in order 1, 2, ..., t.
        let mut next = 1;
        let canonical = labels.iter().all(|&l| {
            if l == next {
                next += 1;
                true
            } else {
                l < next
            }
        });
        if canonical && next == t + 1 {
            let mut sets = vec![VertexSet::new(); t];
            for (i, &l) in labels.iter().enumerate() {
                if l > 0 {
                    sets[l - 1].insert(vs[i]);
                }
            }
            if is_model(g, &sets) {
                return true;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            labels[i] += 1;
            if labels[i] <= t {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}

pub fn is_model(g: &Graph, sets: &[VertexSet]) -> bool {
    if sets.iter().any(|s| s.is_empty()) {
        return false;
    }
    for s in sets {
        let sub = g.induced_subgraph(s).unwrap();
        if !connected_after_removal(&sub, &VertexSet::new()) {
            return false;
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let joined = sets[i]
                .iter()
                .any(|&u| g.neighbors(u).unwrap().iter().any(|w| sets[j].contains(w)));
            if !joined {
                return false;
            }
        }
    }
    true
}

/// Randomized search for a `K_t` model: contract random edges (tracking
/// merged sets) and delete random vertices until a `t`-clique appears.
pub fn hill_climb_clique_minor<R: Rng>(g: &Graph, t: usize, tries: usize, rng: &mut R) -> Option<Vec<VertexSet>> {
    if t == 0 {
        return Some(Vec::new());
    }
    for _ in 0..tries {
        let mut parts: Vec<VertexSet> = g.vertices().map(|v| VertexSet::from([v])).collect();
        loop {
            let m = parts.len();
            let adjacent = |i: usize, j: usize, parts: &[VertexSet]| {
                parts[i]
                    .iter()
                    .any(|&u| g.neighbors(u).unwrap().iter().any(|w| parts[j].contains(w)))
            };
            // Look for t pairwise adjacent parts greedily from a random start.
            let mut order: Vec<usize> = (0..m).collect();
            order.shuffle(rng);
            let mut clique: Vec<usize> = Vec::new();
            for &i in &order {
                if clique.iter().all(|&j| adjacent(i, j, &parts)) {
                    clique.push(i);
                }
            }
            if clique.len() >= t {
                return Some(clique[..t].iter().map(|&i| parts[i].clone()).collect());
            }
            if m <= t {
                break;
            }
            if rng.gen_bool(0.15) {
                parts.swap_remove(rng.gen_range(0..m));
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .filter(|&(i, j)| adjacent(i, j, &parts))
                .collect();
            let Some(&(i, j)) = pairs.choose(rng) else { break };
            let merged: VertexSet = parts[i].union(&parts[j]).copied().collect();
            parts.swap_remove(j);
            parts[i] = merged;
        }
    }
    None
}

/// Random connected labelled graph on `n` vertices: a random spanning tree
/// plus independent extra edges.
pub fn random_connected<R: Rng>(n: u32, extra: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new((0..n).map(VertexId), edges.into_iter().map(|(a, b)| (VertexId(a), VertexId(b))));
    generate::shuffled(&g.expect("simple"), rng)
}

/// A dense core on `core` vertices (each pair kept with probability `p`)
/// plus `z` extra vertices attached to random core vertices and possibly to
/// each other. Hypotheses are not checked here.
pub fn core_with_attachments<R: Rng>(core: u32, z: u32, p: f64, rng: &mut R) -> (Graph, VertexSet) {
    let n = core + z;
    let mut edges = Vec::new();
    for u in 0..core {
        for v in u + 1..core {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    for x in core..n {
        // Later Z vertices may hang off Z alone.
        let want = rng.gen_range(u32::from(x == core)..=core.min(4));
        let mut targets: Vec<u32> = (0..core).collect();
        targets.shuffle(rng);
        for &y in targets.iter().take(want as usize) {
            edges.push((y, x));
        }
        for y in core..x {
            if rng.gen_bool(0.3) {
                edges.push((y, x));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).expect("simple");
    (g, (core..n).map(VertexId).collect())
}

/// Hypotheses of `contract_to_k_connected`, checked with the connectivity
/// module and direct degree arithmetic.
pub fn satisfies_contraction_hypotheses(g: &Graph, z: &VertexSet, k: usize) -> bool {
    if k == 0 || g.vertex_count() < z.len() + k + 1 {
        return false;
    }
    let doubled = (3 * k + 2 * z.len()).saturating_sub(4);
    let outside_neighbors_ok = g
        .vertices()
        .filter(|v| !z.contains(v))
        .filter(|v| g.neighbors(*v).unwrap().iter().any(|w| z.contains(w)))
        .all(|v| 2 * g.degree(v).unwrap() >= doubled);
    outside_neighbors_ok && hadwiger_core::find_good_separation(g, z, k - 1).is_none()
}

/// A random instance satisfying the hypotheses with `|Z| = z_len` and at
/// most `max_n` vertices, with vertex labels shuffled.
pub fn contraction_instance<R: Rng>(k: usize, z_len: u32, max_n: u32, rng: &mut R) -> (Graph, VertexSet) {
    loop {
        let core = rng.gen_range((k as u32 + 1).max(3)..=max_n - z_len);
        let p = rng.gen_range(0.5..1.0);
        let (g, z) = core_with_attachments(core, z_len, p, rng);
        let mut perm: Vec<u32> = (0..g.vertex_count() as u32).collect();
        perm.shuffle(rng);
        let relabel = |v: VertexId| VertexId(perm[v.index()]);
        let g = Graph::new(
            g.vertices().map(relabel),
            g.edges().map(|e| (relabel(e.low()), relabel(e.high()))),
        )
        .expect("relabelling keeps the graph simple");
        let z: VertexSet = z.into_iter().map(relabel).collect();
        if satisfies_contraction_hypotheses(&g, &z, k) {
            return (g, z);
        }
    }
}
