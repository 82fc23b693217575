//! Seeded inputs shared by the criterion benches.

use hadwiger_core::{generate, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn planar(n: u32, delete_prob: f64, seed: u64) -> Graph {
    generate::random_planar(n, delete_prob, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn triangulation(n: u32, seed: u64) -> Graph {
    let edges = generate::random_triangulation(n, &mut ChaCha8Rng::seed_from_u64(seed));
    Graph::from_edges(n, &edges).expect("triangulations are simple")
}

pub fn gnp(n: u32, p: f64, seed: u64) -> Graph {
    generate::gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_reproducible() {
        assert_eq!(planar(30, 0.1, 4), planar(30, 0.1, 4));
        assert_eq!(triangulation(20, 1).edge_count(), 3 * 20 - 6);
        assert_eq!(gnp(10, 1.0, 0).edge_count(), 45);
    }
}
