//! Named graphs and seeded random instance generators.
//!
//! The random generators take an explicit RNG so that every instance family
//! is reproducible from a seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexId};

pub fn complete(n: u32) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).expect("valid by construction")
}

pub fn path(n: u32) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid by construction")
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: u32) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid by construction")
}

/// Outer rim `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("valid by construction")
}

/// Complete multipartite graph with `parts` classes of `size` vertices each.
pub fn complete_multipartite(parts: u32, size: u32) -> Graph {
    let n = parts * size;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u / size != v / size)
        .collect();
    Graph::from_edges(n, &edges).expect("valid by construction")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: u32, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid by construction")
}

/// Random planar graph: a random triangulation of the sphere on `n` vertices
/// (stacked insertions followed by random diagonal flips), after which every
/// edge is deleted independently with probability `delete_prob`.
pub fn random_planar<R: Rng + ?Sized>(n: u32, delete_prob: f64, rng: &mut R) -> Graph {
    let edges = random_triangulation(n, rng);
    let kept: Vec<_> = edges
        .into_iter()
        .filter(|_| !rng.gen_bool(delete_prob))
        .collect();
    Graph::from_edges(n, &kept).expect("valid by construction")
}

/// Edge list of a random sphere triangulation. For `n < 3` the result is a
/// path (every planar graph on at most two vertices).
pub fn random_triangulation<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Vec<(u32, u32)> {
    if n < 3 {
        return (1..n).map(|i| (i - 1, i)).collect();
    }
    // Faces as vertex triples; the initial triangle has two faces.
    let mut faces: Vec<[u32; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for x in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        faces.extend([[a, b, x], [b, c, x], [c, a, x]]);
    }
    let mut adj = vec![std::collections::BTreeSet::new(); n as usize];
    for &[a, b, c] in &faces {
        for (u, v) in [(a, b), (b, c), (c, a)] {
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
    }
    let flips = 4 * n as usize;
    for _ in 0..flips {
        let f = rng.gen_range(0..faces.len());
        let side = rng.gen_range(0..3);
        let fa = faces[f];
        let (a, b) = (fa[side], fa[(side + 1) % 3]);
        let c = fa[(side + 2) % 3];
        // The face across ab traverses it as (b, a).
        let Some(g) = faces.iter().position(|h| {
            (0..3).any(|s| h[s] == b && h[(s + 1) % 3] == a)
        }) else {
            continue;
        };
        let gb = faces[g];
        let s = (0..3).find(|&s| gb[s] == b).unwrap();
        let d = gb[(s + 2) % 3];
        if c == d || adj[c as usize].contains(&d) || adj[a as usize].len() <= 3 || adj[b as usize].len() <= 3 {
            continue;
        }
        adj[a as usize].remove(&b);
        adj[b as usize].remove(&a);
        adj[c as usize].insert(d);
        adj[d as usize].insert(c);
        faces[f] = [c, a, d];
        faces[g] = [d, b, c];
    }
    let mut edges = Vec::new();
    for (u, nbrs) in adj.iter().enumerate() {
        for &v in nbrs.range(u as u32 + 1..) {
            edges.push((u as u32, v));
        }
    }
    edges
}

/// Uniformly shuffled vertex relabeling of `g` onto `0..n`.
pub fn shuffled<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let vertices: Vec<_> = g.vertices().collect();
    let mut labels: Vec<u32> = (0..vertices.len() as u32).collect();
    labels.shuffle(rng);
    let relabel = |v: VertexId| {
        let i = vertices.binary_search(&v).unwrap();
        VertexId(labels[i])
    };
    Graph::new(
        (0..vertices.len() as u32).map(VertexId),
        g.edges().map(|e| (relabel(e.low()), relabel(e.high()))),
    )
    .expect("relabeling preserves simplicity")
}
