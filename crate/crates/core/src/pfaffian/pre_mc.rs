//! Monte Carlo evaluation of the `β = 4` Jacobi integrals that represent the
//! real-ensemble hypergeometric factor `₂F₁^{(2)}(−m/2, −(m−1)/2; n/2 | γ²R)`.
//!
//! With `z_k = (1+x_k)/(1−x_k)` the factor is
//! `∏(1−x_k)^p ⟨∏_{k,j}(z_k − λ_j)⟩ / ⟨∏_j (1−λ_j)^n⟩` over
//! `|Δ(λ)|⁴ ∏(1+λ_j)^A dλ` on `[−1,1]^p`, where `m` even gives `p = m/2, A = 0`
//! and `m` odd gives `p = (m−1)/2, A = 2`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution};
use serde::{Deserialize, Serialize};

use crate::ensembles::{EnsembleKind, EnsembleSpec};
use crate::error::{Error, Result};
use crate::hypergeom::IntegralValue;

pub const MIN_BUDGET: usize = 10_000;
const BATCH: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct McBudget {
    /// Largest number of samples to draw.
    pub samples: usize,
    /// Stop once the standard error drops below this; `None` spends the whole budget.
    pub target_stderr: Option<f64>,
    pub seed: u64,
}

impl Default for McBudget {
    fn default() -> Self {
        McBudget { samples: 200_000, target_stderr: None, seed: 0xbe7a4 }
    }
}

/// Size `p` and `(1+λ)` exponent of the integral for `m` open channels.
pub fn pre_form(m: usize) -> (usize, i32) {
    if m % 2 == 0 {
        (m / 2, 0)
    } else {
        ((m - 1) / 2, 2)
    }
}

pub fn pre_integral_mc(spec: &EnsembleSpec, r: &[f64], budget: &McBudget) -> Result<IntegralValue> {
    spec.validate()?;
    if spec.kind != EnsembleKind::PRE {
        return Err(Error::InvalidArgument(format!("β = 4 integral form is for PRE, got {}", spec.kind)));
    }
    let gamma = spec
        .uniform_gamma()
        .ok_or_else(|| Error::InvalidArgument("integral form needs a scalar coupling".into()))?;
    if r.len() != spec.n {
        return Err(Error::Dimension(format!("spectrum needs {} eigenvalues, got {}", spec.n, r.len())));
    }
    if budget.samples < MIN_BUDGET {
        return Err(Error::InvalidArgument(format!("Monte Carlo budget must be ≥ {MIN_BUDGET}, got {}", budget.samples)));
    }
    let (p, upper) = pre_form(spec.m);
    if p == 0 {
        return Ok(IntegralValue { value: 1.0, stderr: 0.0 });
    }
    let x: Vec<f64> = r.iter().map(|ri| gamma * gamma * ri).collect();
    let z: Vec<f64> = x.iter().map(|xk| (1.0 + xk) / (1.0 - xk)).collect();
    let prefactor: f64 = x.iter().map(|xk| (1.0 - xk).powi(p as i32)).product();
    let n = spec.n as i32;

    // proposal: (1+λ)/2 ~ Beta(A+1, 1) independently, which absorbs the (1+λ)^A weight
    let proposal = Beta::new(upper as f64 + 1.0, 1.0).map_err(|e| Error::Domain(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut lam = vec![0.0; p];
    let (mut sum, mut sum0) = (0.0, 0.0);
    let (mut s_aa, mut s_ab, mut s_bb) = (0.0, 0.0, 0.0);
    let mut drawn = 0usize;
    loop {
        for _ in 0..BATCH.min(budget.samples - drawn) {
            for l in lam.iter_mut() {
                *l = 2.0 * proposal.sample(&mut rng) - 1.0;
            }
            let mut w = 1.0;
            for i in 0..p {
                for j in i + 1..p {
                    w *= (lam[j] - lam[i]).powi(4);
                }
            }
            let f: f64 = lam.iter().map(|l| z.iter().map(|zk| zk - l).product::<f64>()).product();
            let f0: f64 = lam.iter().map(|l| (1.0 - l).powi(n)).product();
            let (a, b) = (w * f, w * f0);
            sum += a;
            sum0 += b;
            s_aa += a * a;
            s_ab += a * b;
            s_bb += b * b;
        }
        drawn += BATCH.min(budget.samples - drawn);
        let k = drawn as f64;
        let ratio = sum / sum0;
        // delta-method variance of the ratio estimator
        let resid = (s_aa - 2.0 * ratio * s_ab + ratio * ratio * s_bb) / k;
        let stderr = prefactor * (resid.max(0.0) / (k - 1.0)).sqrt() / (sum0 / k);
        let value = prefactor * ratio;
        let done = budget.target_stderr.is_some_and(|t| stderr <= t);
        if done || drawn >= budget.samples {
            if let Some(t) = budget.target_stderr {
                if stderr > t {
                    return Err(Error::BudgetExhausted { achieved: stderr, requested: t });
                }
            }
            return Ok(IntegralValue { value, stderr });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::{hfma1, TruncationPolicy};
    use crate::scalar::JackIndex;

    fn series(spec: &EnsembleSpec, r: &[f64]) -> f64 {
        let g = spec.uniform_gamma().unwrap();
        let x: Vec<f64> = r.iter().map(|ri| g * g * ri).collect();
        let m = spec.m as f64;
        hfma1(-m / 2.0, -(m - 1.0) / 2.0, spec.n as f64 / 2.0, JackIndex::TWO, &x, &TruncationPolicy::default())
            .unwrap()
            .value
    }

    #[test]
    fn zero_spectrum_is_one() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 1, 4, 0.6).unwrap();
        let v = pre_integral_mc(&spec, &[0.0], &McBudget::default()).unwrap();
        assert!((v.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn one_dimensional_forms_match_series() {
        for m in [2, 3] {
            let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 1, m, 0.7).unwrap();
            let v = pre_integral_mc(&spec, &[0.6], &McBudget::default()).unwrap();
            let s = series(&spec, &[0.6]);
            assert!((v.value - s).abs() < 3.0 * v.stderr, "m={m}: {} ± {} vs {s}", v.value, v.stderr);
        }
    }

    #[test]
    fn budget_errors() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 2, 4, 0.7).unwrap();
        let small = McBudget { samples: 100, ..McBudget::default() };
        assert!(pre_integral_mc(&spec, &[0.2, 0.5], &small).is_err());
        let strict = McBudget { samples: 10_000, target_stderr: Some(1e-12), seed: 1 };
        assert!(matches!(pre_integral_mc(&spec, &[0.2, 0.5], &strict), Err(Error::BudgetExhausted { .. })));
    }
}
