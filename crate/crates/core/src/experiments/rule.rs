//! Profiles generated from the critical constant `c`.
//!
//! The target product is `P_r = c / (n (ln n)^(r-1))` for `r >= 2` and
//! `P_1 = c ln n / n` for a single colour, so that `c = 1` sits at the
//! connectivity threshold when `r = 1`.

use serde::Serialize;

use super::ExperimentError;
use crate::graph::{ProbabilityProfile, ProfileKind, ProfileParams};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileRule {
    pub kind: ProfileKind,
    /// Multiplier of `p_1 = a ln n / n` under the balanced kind.
    pub a: f64,
    pub c: f64,
    /// The probabilities of the explicit kind.
    pub explicit: Option<Vec<f64>>,
}

impl ProfileRule {
    pub fn balanced(c: f64, a: f64) -> Self {
        ProfileRule {
            kind: ProfileKind::Balanced,
            a,
            c,
            explicit: None,
        }
    }

    pub fn equal(c: f64) -> Self {
        ProfileRule {
            kind: ProfileKind::Equal,
            a: f64::NAN,
            c,
            explicit: None,
        }
    }

    pub fn explicit(p: Vec<f64>) -> Self {
        ProfileRule {
            kind: ProfileKind::Explicit,
            a: f64::NAN,
            c: f64::NAN,
            explicit: Some(p),
        }
    }

    /// The same rule with a different critical constant.
    pub fn with_c(&self, c: f64) -> Self {
        ProfileRule { c, ..self.clone() }
    }

    /// The profile for `n` vertices and `r` colours.
    pub fn profile(&self, n: usize, r: usize) -> Result<ProbabilityProfile, ExperimentError> {
        let infeasible = |reason: String| ExperimentError::Infeasible(reason);
        if let Some(p) = &self.explicit {
            if p.len() != r {
                return Err(infeasible(format!("{} probabilities given for r = {r}", p.len())));
            }
            return ProbabilityProfile::new(p.clone()).map_err(|e| infeasible(e.to_string()));
        }
        if r == 0 {
            return Err(infeasible("no colours".into()));
        }
        if n < 2 {
            return Err(infeasible(format!("ln n vanishes at n = {n}")));
        }
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(infeasible(format!("c = {} is not a positive number", self.c)));
        }
        let target = target_product(n, r, self.c);
        let p = match self.kind {
            ProfileKind::Balanced if r >= 2 => {
                if !(self.a > 0.0 && self.a.is_finite()) {
                    return Err(infeasible(format!("a = {} is not a positive number", self.a)));
                }
                let ln = (n as f64).ln();
                let p1 = self.a * ln / n as f64;
                let rest = libm::pow(target / p1, 1.0 / (r - 1) as f64);
                if p1 > rest {
                    return Err(infeasible(format!("p_1 = {p1} exceeds p_2 = {rest}")));
                }
                let mut p = vec![p1];
                p.extend(std::iter::repeat_n(rest, r - 1));
                p
            }
            ProfileKind::Balanced | ProfileKind::Equal => vec![libm::pow(target, 1.0 / r as f64); r],
            ProfileKind::Explicit => return Err(infeasible("explicit rule without probabilities".into())),
        };
        if let Some((i, x)) = p.iter().enumerate().find(|(_, &x)| x > 1.0) {
            return Err(infeasible(format!("p_{} = {x} exceeds 1", i + 1)));
        }
        let prof = ProbabilityProfile::new(p).map_err(|e| infeasible(e.to_string()))?;
        Ok(prof.with_params(ProfileParams {
            n,
            c: self.c,
            kind: self.kind,
        }))
    }
}

/// `P_r` for the given `c`.
pub fn target_product(n: usize, r: usize, c: f64) -> f64 {
    let ln = (n as f64).ln();
    if r == 1 {
        c * ln / n as f64
    } else {
        c / (n as f64 * libm::pow(ln, (r - 1) as f64))
    }
}

/// The `c` whose target product equals `product`.
pub fn implied_c(n: usize, r: usize, product: f64) -> f64 {
    product / target_product(n, r, 1.0)
}
