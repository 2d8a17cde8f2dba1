use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::MAX_COLOURS;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProfileError {
    #[error("a probability profile needs at least one colour")]
    Empty,
    #[error("{0} colours requested, at most {MAX_COLOURS} are supported")]
    TooManyColours(usize),
    #[error("p[{index}] = {value} is not in [0, 1]")]
    OutOfRange { index: usize, value: f64 },
    #[error("profile is not sorted ascending: p[{index}] = {value} < p[{prev_index}] = {prev}", prev_index = .index - 1)]
    Unsorted { index: usize, value: f64, prev: f64 },
}

/// How a profile was generated from a critical constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Balanced,
    Equal,
    Explicit,
}

impl ProfileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProfileKind::Balanced => "balanced",
            ProfileKind::Equal => "equal",
            ProfileKind::Explicit => "explicit",
        }
    }
}

impl std::fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ProfileKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "balanced" => Ok(ProfileKind::Balanced),
            "equal" => Ok(ProfileKind::Equal),
            "explicit" => Ok(ProfileKind::Explicit),
            other => Err(format!("unknown profile kind `{other}`")),
        }
    }
}

/// Record of the parameters a generated profile came from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileParams {
    pub n: usize,
    pub c: f64,
    pub kind: ProfileKind,
}

/// `C_r = 2^(8 r^2)`, the constant of the proven threshold bounds.
///
/// Overflows to infinity for `r >= 12`.
pub fn critical_constant(r: usize) -> f64 {
    2f64.powf(8.0 * (r * r) as f64)
}

/// `c_r = C_r^(1/(r-1))`; undefined for a single colour.
pub fn critical_constant_root(r: usize) -> Option<f64> {
    (r >= 2).then(|| 2f64.powf(8.0 * (r * r) as f64 / (r - 1) as f64))
}

/// Sorted edge probabilities `p_1 <= ... <= p_r` with prefix products
/// `P_i = p_1 ... p_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityProfile {
    p: Vec<f64>,
    prefix_products: Vec<f64>,
    params: Option<ProfileParams>,
}

impl ProbabilityProfile {
    /// Validates and wraps `p`; unsorted input is rejected.
    pub fn new(p: Vec<f64>) -> Result<Self, ProfileError> {
        if p.is_empty() {
            return Err(ProfileError::Empty);
        }
        if p.len() > MAX_COLOURS {
            return Err(ProfileError::TooManyColours(p.len()));
        }
        for (index, &value) in p.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(ProfileError::OutOfRange { index, value });
            }
        }
        for index in 1..p.len() {
            if p[index] < p[index - 1] {
                return Err(ProfileError::Unsorted {
                    index,
                    value: p[index],
                    prev: p[index - 1],
                });
            }
        }
        let prefix_products = p
            .iter()
            .scan(1.0, |acc, &x| {
                *acc *= x;
                Some(*acc)
            })
            .collect();
        Ok(ProbabilityProfile {
            p,
            prefix_products,
            params: None,
        })
    }

    /// Sorts `p` ascending, then validates.
    pub fn sorted(mut p: Vec<f64>) -> Result<Self, ProfileError> {
        if let Some((index, &value)) = p.iter().enumerate().find(|(_, x)| x.is_nan()) {
            return Err(ProfileError::OutOfRange { index, value });
        }
        p.sort_by(f64::total_cmp);
        Self::new(p)
    }

    /// Same probability in every colour.
    pub fn uniform(r: usize, p: f64) -> Result<Self, ProfileError> {
        Self::new(vec![p; r])
    }

    pub fn with_params(mut self, params: ProfileParams) -> Self {
        self.params = Some(params);
        self
    }

    pub fn r(&self) -> usize {
        self.p.len()
    }

    pub fn p(&self) -> &[f64] {
        &self.p
    }

    pub fn prefix_products(&self) -> &[f64] {
        &self.prefix_products
    }

    /// `P_r`, the product of all probabilities.
    pub fn product(&self) -> f64 {
        *self.prefix_products.last().expect("non-empty profile")
    }

    pub fn params(&self) -> Option<&ProfileParams> {
        self.params.as_ref()
    }

    /// Every probability multiplied by `factor` (used for exposure rounds).
    pub fn scaled(&self, factor: f64) -> Result<Self, ProfileError> {
        Self::new(self.p.iter().map(|x| x * factor).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_products_are_running_products() {
        let prof = ProbabilityProfile::new(vec![0.1, 0.5, 0.8]).unwrap();
        let want = [0.1, 0.1 * 0.5, 0.1 * 0.5 * 0.8];
        for (a, b) in prof.prefix_products().iter().zip(want) {
            assert!((a - b).abs() <= f64::EPSILON * b);
        }
        assert_eq!(prof.product(), prof.prefix_products()[2]);
    }

    #[test]
    fn rejects_invalid_profiles() {
        assert_eq!(ProbabilityProfile::new(vec![]), Err(ProfileError::Empty));
        assert!(matches!(
            ProbabilityProfile::new(vec![0.2, 1.5]),
            Err(ProfileError::OutOfRange { index: 1, .. })
        ));
        assert!(matches!(
            ProbabilityProfile::new(vec![-0.1]),
            Err(ProfileError::OutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            ProbabilityProfile::new(vec![f64::NAN]),
            Err(ProfileError::OutOfRange { .. })
        ));
        assert!(matches!(
            ProbabilityProfile::new(vec![0.5, 0.2]),
            Err(ProfileError::Unsorted { index: 1, .. })
        ));
        assert!(matches!(
            ProbabilityProfile::new(vec![0.1; 65]),
            Err(ProfileError::TooManyColours(65))
        ));
    }

    #[test]
    fn sorted_constructor_sorts() {
        let prof = ProbabilityProfile::sorted(vec![0.5, 0.2, 0.3]).unwrap();
        assert_eq!(prof.p(), &[0.2, 0.3, 0.5]);
        assert!(ProbabilityProfile::sorted(vec![0.5, f64::NAN]).is_err());
    }

    #[test]
    fn constants() {
        assert_eq!(critical_constant(2), 2f64.powi(32));
        assert_eq!(critical_constant_root(2), Some(2f64.powi(32)));
        assert_eq!(critical_constant_root(3), Some(2f64.powi(36)));
        assert_eq!(critical_constant_root(1), None);
    }
}
