use serde::Serialize;

use crate::graph::{sample_rfold, ProbabilityProfile, RFoldGraph, SampleError};
use crate::rng::{tag, Seed};

/// Three independent r-fold samples at per-colour probability `p_i / 3`.
#[derive(Clone, Debug)]
pub struct ExposureTriple {
    pub profile: ProbabilityProfile,
    pub exposure_profile: ProbabilityProfile,
    pub g1: RFoldGraph,
    pub g2: RFoldGraph,
    pub g3: RFoldGraph,
    pub seeds: ExposureSeeds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExposureSeeds {
    pub master: Seed,
    pub rounds: [Seed; 3],
}

impl ExposureSeeds {
    pub fn new(master: Seed) -> Self {
        ExposureSeeds {
            master,
            rounds: [0, 1, 2].map(|j| master.derive(tag::EXPOSURE + j)),
        }
    }
}

impl ExposureTriple {
    pub fn n(&self) -> usize {
        self.g1.n()
    }

    pub fn r(&self) -> usize {
        self.g1.r()
    }

    /// `g1 ∪ g2 ∪ g3`.
    pub fn union(&self) -> RFoldGraph {
        RFoldGraph::union_graphs(&[&self.g1, &self.g2, &self.g3]).expect("exposure graphs share a shape")
    }

    /// `g1 ∪ g2`.
    pub fn union12(&self) -> RFoldGraph {
        RFoldGraph::union_graphs(&[&self.g1, &self.g2]).expect("exposure graphs share a shape")
    }
}

/// Splits `G(n, p_1, ..., p_r)` into three independent exposure rounds.
pub fn exposure_split(n: usize, profile: &ProbabilityProfile, seed: Seed) -> Result<ExposureTriple, SampleError> {
    let exposure_profile = ProbabilityProfile::new(profile.p().iter().map(|x| x / 3.0).collect())
        .expect("p / 3 stays in [0, 1] and sorted");
    let seeds = ExposureSeeds::new(seed);
    let [s1, s2, s3] = seeds.rounds;
    Ok(ExposureTriple {
        profile: profile.clone(),
        g1: sample_rfold(n, &exposure_profile, s1)?,
        g2: sample_rfold(n, &exposure_profile, s2)?,
        g3: sample_rfold(n, &exposure_profile, s3)?,
        exposure_profile,
        seeds,
    })
}

/// Probability that a fixed pair lies in a given colour of the union of the
/// three rounds: `1 - (1 - p/3)^3 = p - p^2/3 + p^3/27`.
pub fn union_inclusion_probability(p: f64) -> f64 {
    1.0 - (1.0 - p / 3.0).powi(3)
}
