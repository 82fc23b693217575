//! Seeded instance families for the `generate` subcommand.

use std::str::FromStr;

use hadwiger_core::{generate, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// `G(n, p)`.
    Gnp,
    /// Random triangulation with each edge deleted with probability `p`.
    Planar,
    Complete,
    Cycle,
    Path,
    Petersen,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gnp => "gnp",
            Family::Planar => "planar",
            Family::Complete => "complete",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Petersen => "petersen",
        }
    }

    pub fn build(self, n: u32, p: f64, seed: u64) -> Result<Graph, String> {
        if !(0.0..=1.0).contains(&p) {
            return Err(format!("probability {p} is outside [0, 1]"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(match self {
            Family::Gnp => generate::gnp(n, p, &mut rng),
            Family::Planar => generate::random_planar(n, p, &mut rng),
            Family::Complete => generate::complete(n),
            Family::Cycle if n < 3 => return Err("cycles need at least three vertices".into()),
            Family::Cycle => generate::cycle(n),
            Family::Path => generate::path(n),
            Family::Petersen => generate::petersen(),
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Family as clap::ValueEnum>::from_str(s, false)
    }
}
