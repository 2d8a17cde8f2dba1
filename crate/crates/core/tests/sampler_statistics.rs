//! Distributional checks of the samplers against binomial moments and the
//! per-pair reference sampler.

use jigsaw::graph::{sample_gnp, sample_gnp_bernoulli, sample_rfold, ProbabilityProfile};
use jigsaw::rng::{tag, Seed};

fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var)
}

#[test]
fn mean_edge_count_matches_binomial_mean() {
    let (n, p, seeds) = (1000usize, 0.01, 10_000u64);
    let pairs = 499_500.0;
    let counts: Vec<f64> = (0..seeds).map(|s| sample_gnp(n, p, Seed(s)).unwrap().len() as f64).collect();
    let (mean, var) = mean_var(&counts);
    let se = (pairs * p * (1.0 - p) / seeds as f64).sqrt();
    assert!((mean - 4995.0).abs() <= 5.0 * se, "mean {mean}");
    // Variance of a binomial count, with a loose relative tolerance.
    assert!((var / (pairs * p * (1.0 - p)) - 1.0).abs() < 0.1, "variance {var}");
}

#[test]
fn pair_marginals_match_p() {
    let seeds = 10_000u64;
    for (n, p) in [(20usize, 0.2), (12, 0.03), (15, 0.7)] {
        let mut freq = vec![vec![0u32; n]; n];
        for s in 0..seeds {
            for (u, v) in sample_gnp(n, p, Seed(s)).unwrap() {
                freq[u as usize][v as usize] += 1;
            }
        }
        let tol = 5.0 * (p * (1.0 - p) / seeds as f64).sqrt();
        for u in 0..n {
            for v in u + 1..n {
                let f = freq[u][v] as f64 / seeds as f64;
                assert!((f - p).abs() <= tol, "n={n} p={p} pair ({u},{v}) freq {f}");
            }
        }
    }
}

#[test]
fn skipping_and_per_pair_samplers_agree_in_distribution() {
    let seeds = 10_000u64;
    for (n, p) in [(50usize, 0.05), (40, 0.3), (30, 0.01)] {
        let a: Vec<f64> = (0..seeds).map(|s| sample_gnp(n, p, Seed(s)).unwrap().len() as f64).collect();
        let b: Vec<f64> = (0..seeds)
            .map(|s| sample_gnp_bernoulli(n, p, Seed(s).derive(tag::FUZZ)).unwrap().len() as f64)
            .collect();
        let ((ma, va), (mb, vb)) = (mean_var(&a), mean_var(&b));
        let se = ((va + vb) / seeds as f64).sqrt();
        assert!((ma - mb).abs() <= 5.0 * se, "n={n} p={p}: {ma} vs {mb}");
        // Standard error of a sample variance is about var * sqrt(2 / N).
        let se_var = (va + vb) / 2.0 * (2.0 / seeds as f64).sqrt() * 2f64.sqrt();
        assert!((va - vb).abs() <= 5.0 * se_var, "n={n} p={p}: var {va} vs {vb}");
    }
}

#[test]
fn dense_probabilities_share_the_per_pair_stream() {
    for (n, p) in [(30usize, 0.5), (25, 0.8), (10, 0.999)] {
        for s in 0..50 {
            assert_eq!(sample_gnp(n, p, Seed(s)).unwrap(), sample_gnp_bernoulli(n, p, Seed(s)).unwrap());
        }
    }
}

#[test]
fn colours_follow_the_documented_streams() {
    let prof = ProbabilityProfile::new(vec![0.02, 0.1, 0.6]).unwrap();
    let seed = Seed(12);
    let g = sample_rfold(80, &prof, seed).unwrap();
    for (i, &p) in prof.p().iter().enumerate() {
        let want = sample_gnp(80, p, seed.derive(tag::COLOUR + i as u64)).unwrap();
        assert_eq!(g.edges(i).to_vec(), want);
    }
}
