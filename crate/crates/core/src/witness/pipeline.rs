use serde::Serialize;

use super::{
    absorb_check, default_doubling_target, doubling, exposure_split, one_by_one, Choice, ExposureSeeds, ExposureTriple,
    OneByOneConfig, OneByOneOutcome,
};
use crate::engine::{percolate_sync, percolates_subset};
use crate::graph::{ProbabilityProfile, SampleError};
use crate::rng::{tag, Seed};

/// Last stage entered; `Done` once all three succeeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Stage {
    I,
    II,
    III,
    #[serde(rename = "done")]
    Done,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StageFlags {
    pub stage1: bool,
    pub stage2: bool,
    pub stage3: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StageSizes {
    pub v1: Option<usize>,
    pub v2: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessReport {
    pub n: usize,
    pub r: usize,
    pub p: Vec<f64>,
    pub stage: Stage,
    pub sizes: StageSizes,
    pub success: StageFlags,
    /// Stage 1: `V1` percolates in `g1`. Stage 2: `V2` percolates in
    /// `g1 ∪ g2`. Stage 3: `g1 ∪ g2 ∪ g3` percolates.
    pub verified: StageFlags,
    pub t1: usize,
    pub target: usize,
    pub one_by_one_outcome: OneByOneOutcome,
    pub one_by_one_rounds: usize,
    /// `x_t` of the doubling run, when stage II ran.
    pub doubling_sizes: Vec<usize>,
    pub attempts: usize,
    pub seeds: ExposureSeeds,
}

impl WitnessReport {
    pub fn done(&self) -> bool {
        self.stage == Stage::Done
    }

    /// Later successes imply earlier ones, and every success was verified.
    pub fn is_consistent(&self) -> bool {
        let s = self.success;
        let v = self.verified;
        (!s.stage2 || s.stage1)
            && (!s.stage3 || s.stage2)
            && (!s.stage1 || v.stage1)
            && (!s.stage2 || v.stage2)
            && (!s.stage3 || v.stage3)
            && (self.stage != Stage::Done || s.stage3)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PipelineConfig {
    /// Overrides the default `t1`.
    pub t1: Option<usize>,
    pub max_rounds: Option<usize>,
    /// Overrides the default doubling target `n / 2^(r+2)`.
    pub target: Option<usize>,
    /// Resolve the 1-by-1 choices uniformly at random instead of lowest-first.
    pub seeded_choice: bool,
    /// Fresh exposure triples to try after a failed attempt.
    pub retries: usize,
}

/// Samples an exposure triple and runs the three stages on it, retrying
/// with fresh triples up to `config.retries` times.
pub fn staged_pipeline(
    n: usize,
    profile: &ProbabilityProfile,
    seed: Seed,
    config: &PipelineConfig,
) -> Result<WitnessReport, SampleError> {
    let mut attempt = 0;
    loop {
        let attempt_seed = if attempt == 0 { seed } else { seed.derive(tag::RETRY + attempt as u64) };
        let triple = exposure_split(n, profile, attempt_seed)?;
        let mut report = staged_pipeline_on(&triple, config);
        report.attempts = attempt + 1;
        if report.done() || attempt >= config.retries {
            return Ok(report);
        }
        attempt += 1;
    }
}

/// The three stages on a given exposure triple.
pub fn staged_pipeline_on(triple: &ExposureTriple, config: &PipelineConfig) -> WitnessReport {
    let (n, r) = (triple.n(), triple.r());
    let mut obo = OneByOneConfig::defaults(n, r);
    if let Some(t1) = config.t1 {
        obo.t1 = t1;
    }
    if let Some(m) = config.max_rounds {
        obo.max_rounds = m;
    }
    if config.seeded_choice {
        obo.choice = Choice::Seeded(triple.seeds.master);
    }
    let target = config.target.unwrap_or_else(|| default_doubling_target(n, r));

    let stage1 = one_by_one(&triple.g1, obo);
    let mut report = WitnessReport {
        n,
        r,
        p: triple.profile.p().to_vec(),
        stage: Stage::I,
        sizes: StageSizes::default(),
        success: StageFlags::default(),
        verified: StageFlags::default(),
        t1: obo.t1,
        target,
        one_by_one_outcome: stage1.outcome().expect("run to completion"),
        one_by_one_rounds: stage1.round(),
        doubling_sizes: Vec::new(),
        attempts: 1,
        seeds: triple.seeds,
    };
    let Some(v1) = stage1.witness() else {
        return report;
    };
    report.sizes.v1 = Some(v1.len());
    report.success.stage1 = true;
    report.verified.stage1 = percolates_subset(&triple.g1, v1) == Ok(true);
    if !report.verified.stage1 {
        return report;
    }

    report.stage = Stage::II;
    let grown = doubling(&triple.g2, v1, target).expect("V1 is a non-empty set of graph vertices");
    report.doubling_sizes = grown.sizes.clone();
    if !grown.success {
        return report;
    }
    let v2 = grown.set;
    report.sizes.v2 = Some(v2.len());
    report.success.stage2 = true;
    report.verified.stage2 = percolates_subset(&triple.union12(), &v2) == Ok(true);
    if !report.verified.stage2 {
        return report;
    }

    report.stage = Stage::III;
    if !absorb_check(&triple.g3, &v2).expect("V2 is non-empty") {
        return report;
    }
    report.success.stage3 = true;
    report.verified.stage3 = percolate_sync(&triple.union()).percolated;
    if report.verified.stage3 {
        report.stage = Stage::Done;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_profile_fails_in_stage_one() {
        let prof = ProbabilityProfile::new(vec![0.0, 0.0]).unwrap();
        let report = staged_pipeline(200, &prof, Seed(3), &PipelineConfig::default()).unwrap();
        assert_eq!(report.stage, Stage::I);
        assert_eq!(report.success, StageFlags::default());
        assert!(report.is_consistent());
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"stage\":\"I\""));
    }

    #[test]
    fn dense_profile_completes() {
        let prof = ProbabilityProfile::new(vec![1.0 / 3.0, 1.0 / 3.0]).unwrap();
        let report = staged_pipeline(2000, &prof, Seed(1), &PipelineConfig::default()).unwrap();
        assert_eq!(report.stage, Stage::Done, "{report:?}");
        assert!(report.is_consistent());
        assert_eq!(report.sizes.v1, Some(report.t1));
        assert!(report.sizes.v2.unwrap() >= report.target);
    }

    #[test]
    fn retries_use_fresh_triples() {
        let prof = ProbabilityProfile::new(vec![0.0]).unwrap();
        let config = PipelineConfig { retries: 2, ..Default::default() };
        let report = staged_pipeline(50, &prof, Seed(3), &config).unwrap();
        assert_eq!(report.attempts, 3);
        assert_eq!(report.seeds.master, Seed(3).derive(tag::RETRY + 2));
    }
}
