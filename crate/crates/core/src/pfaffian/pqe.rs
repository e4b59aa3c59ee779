//! Pfaffian form of the quaternion semi-non-ideal density.
//!
//! After the Kummer transform the hypergeometric factor becomes
//! `∏(1−x_k)^{2m} ⟨∏_k det(v_k − Y)⟩ / ⟨det(1 − Y)^n⟩` over `2m × 2m` real
//! Jacobi matrices with flat weight, `v_k = (1+x_k)/(1−x_k)`, `x_k = γ²R_k`.

use super::charpoly::CharPolyAverage;
use super::skew::SkewOrthoSystem;
use crate::ensembles::{check_spectrum, hfma_parameters, ideal_weight, normalization_constant, EnsembleKind, EnsembleSpec};
use crate::error::{Error, Result};
use crate::hypergeom::selberg::selberg_base;
use crate::scalar::JackIndex;

/// Density evaluator for one PQE spec with a scalar coupling and even `n`.
#[derive(Clone, Debug)]
pub struct PqePfaffian {
    spec: EnsembleSpec,
    gamma: f64,
    average: CharPolyAverage,
    /// `⟨det(1 − Y)^n⟩`.
    at_one: f64,
    /// exponent of `∏(1 − γ²R_k)`
    power: f64,
    norm: f64,
}

impl PqePfaffian {
    pub fn new(spec: &EnsembleSpec) -> Result<Self> {
        spec.validate()?;
        if spec.kind != EnsembleKind::PQE {
            return Err(Error::InvalidArgument(format!("Pfaffian form is for PQE, got {}", spec.kind)));
        }
        let gamma = spec
            .uniform_gamma()
            .ok_or_else(|| Error::InvalidArgument("Pfaffian form needs a scalar coupling".into()))?;
        if spec.n % 2 == 1 {
            return Err(Error::Unsupported(format!("Pfaffian form is stated for even n, got n={}", spec.n)));
        }
        let p = 2 * spec.m;
        let n = spec.n;
        let sys = SkewOrthoSystem::build(p + n, 0.0, 0.0)?;
        let average = CharPolyAverage::new(p, n, &sys)?;
        // λ = 1 − 2t: ⟨∏(1−λ)^n⟩ = 2^{pn} S_p(n, 0) / S_p(0, 0) with |Δ|^1
        let at_one = 2f64.powi((p * n) as i32) * selberg_base(n as f64, 0.0, JackIndex::TWO, p as u32)?
            / selberg_base(0.0, 0.0, JackIndex::TWO, p as u32)?;
        let (a, b, c) = hfma_parameters(spec);
        Ok(PqePfaffian {
            spec: spec.clone(),
            gamma,
            average,
            at_one,
            power: c - a - b + p as f64,
            norm: normalization_constant(spec)?,
        })
    }

    /// The hypergeometric factor at `R` through the Pfaffian.
    pub fn hfma_factor(&self, r: &[f64]) -> Result<f64> {
        let g2 = self.gamma * self.gamma;
        let v: Vec<f64> = r.iter().map(|&ri| (1.0 + g2 * ri) / (1.0 - g2 * ri)).collect();
        let pre: f64 = r.iter().map(|&ri| (1.0 - g2 * ri).powf(self.power)).product();
        Ok(pre * self.average.eval(&v)? / self.at_one)
    }

    pub fn eval(&self, r: &[f64]) -> Result<f64> {
        check_spectrum(&self.spec, r)?;
        for i in 0..r.len() {
            for j in i + 1..r.len() {
                if (r[i] - r[j]).abs() < 1e-10 {
                    return Err(Error::CoincidentEigenvalues(i, j));
                }
            }
        }
        Ok(ideal_weight(&self.spec, r) * self.hfma_factor(r)? / self.norm)
    }
}

/// PQE density through the Pfaffian representation.
pub fn jpdf_pqe_pfaffian(spec: &EnsembleSpec, r: &[f64]) -> Result<f64> {
    PqePfaffian::new(spec)?.eval(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{jpdf_ideal, jpdf_semi_ideal};
    use crate::hypergeom::TruncationPolicy;

    #[test]
    fn agrees_with_series() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 2, 2, 0.4).unwrap();
        let r = [0.3, 0.7];
        let a = jpdf_pqe_pfaffian(&spec, &r).unwrap();
        let b = jpdf_semi_ideal(&spec, &r, &TruncationPolicy::default()).unwrap();
        assert!((a - b).abs() < 1e-6 * b, "{a} vs {b}");
        let swapped = jpdf_pqe_pfaffian(&spec, &[0.7, 0.3]).unwrap();
        assert!((swapped - a).abs() < 1e-12 * a);
    }

    #[test]
    fn zero_coupling_is_ideal() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 2, 3, 0.0).unwrap();
        let ideal = EnsembleSpec::ideal(EnsembleKind::CQE, 2, 3).unwrap();
        for k in 0..10 {
            let r = [0.05 + 0.09 * k as f64, 0.5 + 0.045 * k as f64];
            let ratio = jpdf_pqe_pfaffian(&spec, &r).unwrap() / jpdf_ideal(&ideal, &r).unwrap();
            assert!((ratio - 1.0).abs() < 1e-10, "{ratio}");
        }
    }

    #[test]
    fn odd_n_unsupported() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 1, 2, 0.4).unwrap();
        assert!(matches!(PqePfaffian::new(&spec), Err(Error::Unsupported(_))));
    }
}
