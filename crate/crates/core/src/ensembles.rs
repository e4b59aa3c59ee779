//! Joint densities of reflection eigenvalues for ideal (CRE/CQE) and
//! semi-non-ideal (PRE/PQE) Andreev dots, and their normalization.

use std::cell::RefCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::series::nonpositive_integer;
use crate::hypergeom::{hfma1, hfma2, kummer_transform, selberg_base, SeriesValue, TruncationPolicy};
use crate::quadrature::tanh_sinh_split;
use crate::scalar::JackIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnsembleKind {
    CRE,
    CQE,
    PRE,
    PQE,
}

impl EnsembleKind {
    pub fn is_quaternion(self) -> bool {
        matches!(self, EnsembleKind::CQE | EnsembleKind::PQE)
    }

    pub fn is_ideal(self) -> bool {
        matches!(self, EnsembleKind::CRE | EnsembleKind::CQE)
    }

    /// The circular ensemble with the same symmetry.
    pub fn ideal(self) -> EnsembleKind {
        if self.is_quaternion() {
            EnsembleKind::CQE
        } else {
            EnsembleKind::CRE
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "CRE" => Ok(EnsembleKind::CRE),
            "CQE" => Ok(EnsembleKind::CQE),
            "PRE" => Ok(EnsembleKind::PRE),
            "PQE" => Ok(EnsembleKind::PQE),
            _ => Err(Error::InvalidArgument(format!("unknown ensemble {s:?}"))),
        }
    }
}

/// Ensemble kind, channel numbers and the diagonal of the left-lead coupling.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub n: usize,
    pub m: usize,
    #[serde(default)]
    pub gamma: Vec<f64>,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, n: usize, m: usize, gamma: Vec<f64>) -> Result<Self> {
        let spec = EnsembleSpec { kind, n, m, gamma };
        spec.validate()?;
        Ok(spec)
    }

    /// All `n` couplings equal to `gamma`.
    pub fn uniform(kind: EnsembleKind, n: usize, m: usize, gamma: f64) -> Result<Self> {
        Self::new(kind, n, m, vec![gamma; n])
    }

    pub fn ideal(kind: EnsembleKind, n: usize, m: usize) -> Result<Self> {
        Self::new(kind, n, m, Vec::new())
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > self.m {
            return Err(Error::InvalidArgument(format!("need 1 ≤ n ≤ m, got n={}, m={}", self.n, self.m)));
        }
        if !self.gamma.is_empty() && self.gamma.len() != self.n {
            return Err(Error::Dimension(format!("gamma needs {} entries, got {}", self.n, self.gamma.len())));
        }
        if let Some(g) = self.gamma.iter().find(|g| !(0.0..1.0).contains(*g)) {
            return Err(Error::InvalidArgument(format!("coupling {g} outside [0, 1)")));
        }
        if self.kind.is_ideal() && self.gamma.iter().any(|&g| g != 0.0) {
            return Err(Error::InvalidArgument(format!("{} has ideal leads; gamma must be zero", self.kind)));
        }
        Ok(())
    }

    /// Couplings padded to length `n`.
    pub fn gammas(&self) -> Vec<f64> {
        if self.gamma.is_empty() {
            vec![0.0; self.n]
        } else {
            self.gamma.clone()
        }
    }

    /// The common coupling when all are equal.
    pub fn uniform_gamma(&self) -> Option<f64> {
        let g = self.gammas();
        g.iter().all(|&v| v == g[0]).then_some(g[0])
    }

    pub fn constants(&self) -> EnsembleConstants {
        ensemble_constants(self)
    }
}

/// Symmetry-class constants of an ensemble.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EnsembleConstants {
    pub alpha: JackIndex,
    pub beta: f64,
    pub eta: f64,
    pub d: f64,
    pub sigma: i32,
    /// Dimension of the scattering matrix.
    pub big_n: usize,
    /// Exponent of the Poisson kernel, `N + σ`.
    pub n_sigma: f64,
}

pub fn ensemble_constants(spec: &EnsembleSpec) -> EnsembleConstants {
    if spec.kind.is_quaternion() {
        let big_n = 2 * (spec.n + spec.m);
        EnsembleConstants { alpha: JackIndex::HALF, beta: 4.0, eta: 2.0, d: 4.0, sigma: 1, big_n, n_sigma: big_n as f64 + 1.0 }
    } else {
        let big_n = spec.n + spec.m;
        EnsembleConstants { alpha: JackIndex::TWO, beta: 1.0, eta: -1.0, d: 1.0, sigma: -1, big_n, n_sigma: big_n as f64 - 1.0 }
    }
}

/// Exponents of `∏ R^x (1−R)^y |Δ|^{2/α}`.
fn weight_exponents(spec: &EnsembleSpec) -> (f64, f64, f64) {
    let c = spec.constants();
    let inv = 1.0 / c.alpha.value();
    (c.eta / 2.0, inv * (spec.m - spec.n + 1) as f64 - 1.0, 2.0 * inv)
}

/// Parameters `(a, b; c)` of the hypergeometric factor.
pub fn hfma_parameters(spec: &EnsembleSpec) -> (f64, f64, f64) {
    let c = spec.constants();
    let inv = 1.0 / c.alpha.value();
    let a = (spec.m + spec.n) as f64 * inv;
    (a, a + c.eta / 2.0, spec.n as f64 * inv)
}

/// `C_n`, the normalization of the ideal density.
pub fn ideal_normalization(spec: &EnsembleSpec) -> Result<f64> {
    let (x, y, _) = weight_exponents(spec);
    selberg_base(x, y, spec.constants().alpha, spec.n as u32)
}

/// `𝒞(γ̂) = C_n · ∏(1−γ_j²)^{−((m+n)/α + η/2)}`.
pub fn normalization_constant(spec: &EnsembleSpec) -> Result<f64> {
    spec.validate()?;
    let (_, b, _) = hfma_parameters(spec);
    let det: f64 = spec.gammas().iter().map(|g| 1.0 - g * g).product();
    Ok(ideal_normalization(spec)? * det.powf(-b))
}

pub(crate) fn check_spectrum(spec: &EnsembleSpec, r: &[f64]) -> Result<()> {
    if r.len() != spec.n {
        return Err(Error::Dimension(format!("spectrum needs {} eigenvalues, got {}", spec.n, r.len())));
    }
    if let Some(v) = r.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        return Err(Error::Domain(format!("reflection eigenvalue {v} outside [0, 1]")));
    }
    Ok(())
}

pub(crate) fn ideal_weight(spec: &EnsembleSpec, r: &[f64]) -> f64 {
    let (x, y, power) = weight_exponents(spec);
    let mut v: f64 = r.iter().map(|&ri| ri.powf(x) * (1.0 - ri).powf(y)).product();
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            v *= (r[j] - r[i]).abs().powf(power);
        }
    }
    v
}

/// The hypergeometric factor of the semi-non-ideal density at `R`.
pub fn hfma_factor(spec: &EnsembleSpec, r: &[f64], policy: &TruncationPolicy) -> Result<SeriesValue> {
    let alpha = spec.constants().alpha;
    let (a, b, c) = hfma_parameters(spec);
    let g = spec.gammas();
    if g.iter().all(|&v| v == 0.0) {
        return Ok(SeriesValue::exact(1.0, 1));
    }
    match spec.uniform_gamma() {
        Some(gamma) => {
            let x: Vec<f64> = r.iter().map(|ri| gamma * gamma * ri).collect();
            // c − a and c − b are non-positive integers for both symmetry classes,
            // so the transformed series is a polynomial
            if nonpositive_integer(c - a).is_some() || nonpositive_integer(c - b).is_some() {
                kummer_transform(a, b, c, alpha, &x, policy)
            } else {
                hfma1(a, b, c, alpha, &x, policy)
            }
        }
        None => {
            let g2: Vec<f64> = g.iter().map(|v| v * v).collect();
            hfma2(a, b, c, alpha, &g2, r, spec.n, policy)
        }
    }
}

/// Density of an ideal-lead ensemble.
pub fn jpdf_ideal(spec: &EnsembleSpec, r: &[f64]) -> Result<f64> {
    spec.validate()?;
    if !spec.kind.is_ideal() {
        return Err(Error::InvalidArgument(format!("{} is not an ideal-lead ensemble", spec.kind)));
    }
    check_spectrum(spec, r)?;
    Ok(ideal_weight(spec, r) / ideal_normalization(spec)?)
}

/// Density of a semi-non-ideal ensemble, normalized by the closed-form `𝒞(γ̂)`.
pub fn jpdf_semi_ideal(spec: &EnsembleSpec, r: &[f64], policy: &TruncationPolicy) -> Result<f64> {
    spec.validate()?;
    if spec.kind.is_ideal() {
        return Err(Error::InvalidArgument(format!("{} has ideal leads; use jpdf_ideal", spec.kind)));
    }
    check_spectrum(spec, r)?;
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            if (r[i] - r[j]).abs() < 1e-10 {
                return Err(Error::CoincidentEigenvalues(i, j));
            }
        }
    }
    Ok(jpdf_unnormalized(spec, r, policy)? / normalization_constant(spec)?)
}

/// Density without its normalization constant; any kind, no distinctness check.
pub fn jpdf_unnormalized(spec: &EnsembleSpec, r: &[f64], policy: &TruncationPolicy) -> Result<f64> {
    Ok(ideal_weight(spec, r) * hfma_factor(spec, r, policy)?.value)
}

/// Normalized density for any kind.
pub fn jpdf(spec: &EnsembleSpec, r: &[f64], policy: &TruncationPolicy) -> Result<f64> {
    if spec.kind.is_ideal() {
        jpdf_ideal(spec, r)
    } else {
        jpdf_semi_ideal(spec, r, policy)
    }
}

/// Carries the first error out of a closure handed to the quadrature routines.
struct Guard(RefCell<Option<Error>>);

impl Guard {
    fn new() -> Self {
        Guard(RefCell::new(None))
    }

    fn eval(&self, r: Result<f64>) -> f64 {
        match r {
            Ok(v) => v,
            Err(e) => {
                self.0.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    }

    fn finish(self, v: f64) -> Result<f64> {
        match self.0.into_inner() {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }
}

const QUAD_TOL: f64 = 1e-10;

/// `∫ jpdf_unnormalized dR` over `[0,1]^n` by adaptive quadrature (`n ≤ 2`).
pub fn integrate_unnormalized(spec: &EnsembleSpec, policy: &TruncationPolicy) -> Result<f64> {
    spec.validate()?;
    let guard = Guard::new();
    let v = match spec.n {
        1 => tanh_sinh_split(|r, _, _| guard.eval(jpdf_unnormalized(spec, &[r], policy)), 0.0, 1.0, QUAD_TOL).value,
        2 => {
            let outer = |r2: f64| {
                tanh_sinh_split(|r1, _, _| guard.eval(jpdf_unnormalized(spec, &[r1, r2], policy)), 0.0, r2, QUAD_TOL).value
            };
            2.0 * tanh_sinh_split(|r2, _, _| outer(r2), 0.0, 1.0, QUAD_TOL).value
        }
        n => return Err(Error::Unsupported(format!("direct quadrature is implemented for n ≤ 2, got n={n}"))),
    };
    guard.finish(v)
}

/// Single-eigenvalue marginal density (`n ≤ 2`); integrates to 1 over `[0,1]`.
pub fn marginal_density(spec: &EnsembleSpec, r: f64, policy: &TruncationPolicy) -> Result<f64> {
    marginal_density_tol(spec, r, policy, QUAD_TOL)
}

fn marginal_density_tol(spec: &EnsembleSpec, r: f64, policy: &TruncationPolicy, tol: f64) -> Result<f64> {
    let norm = normalization_constant(spec)?;
    let guard = Guard::new();
    let v = match spec.n {
        1 => guard.eval(jpdf_unnormalized(spec, &[r], policy)),
        2 => {
            let mut f = |r2: f64, _: f64, _: f64| guard.eval(jpdf_unnormalized(spec, &[r, r2], policy));
            tanh_sinh_split(&mut f, 0.0, r, tol).value + tanh_sinh_split(&mut f, r, 1.0, tol).value
        }
        n => return Err(Error::Unsupported(format!("marginals are implemented for n ≤ 2, got n={n}"))),
    };
    guard.finish(v / norm)
}

/// Probability that a single eigenvalue (drawn from the pooled marginal) lies in `[lo, hi]`.
pub fn bin_probability(spec: &EnsembleSpec, lo: f64, hi: f64, policy: &TruncationPolicy) -> Result<f64> {
    bin_probability_tol(spec, lo, hi, policy, 1e-9)
}

/// [`bin_probability`] with a caller-chosen relative quadrature tolerance,
/// for histogram comparisons that need far less than full precision.
pub fn bin_probability_tol(spec: &EnsembleSpec, lo: f64, hi: f64, policy: &TruncationPolicy, rel_tol: f64) -> Result<f64> {
    let guard = Guard::new();
    let inner = rel_tol.max(QUAD_TOL);
    let v = tanh_sinh_split(|r, _, _| guard.eval(marginal_density_tol(spec, r, policy, inner)), lo, hi, rel_tol).value;
    guard.finish(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pol() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    #[test]
    fn constants_table() {
        let c = ensemble_constants(&EnsembleSpec::uniform(EnsembleKind::PRE, 1, 1, 0.2).unwrap());
        assert_eq!((c.alpha, c.beta, c.eta, c.sigma), (JackIndex::TWO, 1.0, -1.0, -1));
        let c = ensemble_constants(&EnsembleSpec::uniform(EnsembleKind::PQE, 1, 1, 0.2).unwrap());
        assert_eq!((c.alpha, c.beta, c.eta, c.sigma), (JackIndex::HALF, 4.0, 2.0, 1));
        let c = ensemble_constants(&EnsembleSpec::ideal(EnsembleKind::CRE, 2, 3).unwrap());
        assert_eq!(c.n_sigma, 4.0);
    }

    #[test]
    fn json_shape() {
        let s: EnsembleSpec = serde_json::from_str(r#"{"kind": "PQE", "n": 2, "m": 3, "gamma": [0.4, 0.4]}"#).unwrap();
        assert_eq!(s, EnsembleSpec::uniform(EnsembleKind::PQE, 2, 3, 0.4).unwrap());
        let back: EnsembleSpec = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn one_channel_ideal_laws() {
        let cre = EnsembleSpec::ideal(EnsembleKind::CRE, 1, 1).unwrap();
        let r = 0.3f64;
        let arcsine = 1.0 / (PI * (r * (1.0 - r)).sqrt());
        assert!((jpdf_ideal(&cre, &[r]).unwrap() - arcsine).abs() < 1e-13);
        let cqe = EnsembleSpec::ideal(EnsembleKind::CQE, 1, 1).unwrap();
        assert!((jpdf_ideal(&cqe, &[r]).unwrap() - 6.0 * r * (1.0 - r)).abs() < 1e-13);
    }

    #[test]
    fn pre_one_channel_closed_form() {
        let g: f64 = 0.5;
        let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 1, 1, g).unwrap();
        let r: f64 = 0.37;
        let want = (1.0 - g * g).sqrt() / (PI * (r * (1.0 - r)).sqrt() * (1.0 - g * g * r));
        assert!((jpdf_semi_ideal(&spec, &[r], &pol()).unwrap() - want).abs() < 1e-12);
        let mass = integrate_unnormalized(&spec, &pol()).unwrap();
        assert!((mass / normalization_constant(&spec).unwrap() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn zero_coupling_is_ideal() {
        for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
            let spec = EnsembleSpec::uniform(kind, 2, 3, 0.0).unwrap();
            let ideal = EnsembleSpec::ideal(kind.ideal(), 2, 3).unwrap();
            let r = [0.2, 0.65];
            assert_eq!(jpdf_semi_ideal(&spec, &r, &pol()).unwrap(), jpdf_ideal(&ideal, &r).unwrap());
        }
    }

    #[test]
    fn symmetric_and_checked() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 2, 2, 0.4).unwrap();
        let a = jpdf_semi_ideal(&spec, &[0.3, 0.7], &pol()).unwrap();
        let b = jpdf_semi_ideal(&spec, &[0.7, 0.3], &pol()).unwrap();
        assert!((a - b).abs() < 1e-14 * a);
        assert!(matches!(jpdf_semi_ideal(&spec, &[0.3, 0.3], &pol()), Err(Error::CoincidentEigenvalues(0, 1))));
        assert!(jpdf_semi_ideal(&spec, &[0.3, 1.3], &pol()).is_err());
        assert!(EnsembleSpec::uniform(EnsembleKind::PRE, 3, 2, 0.1).is_err());
    }

    #[test]
    fn kummer_and_direct_series_agree() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 2, 3, 0.3).unwrap();
        let r = [0.25, 0.8];
        let (a, b, c) = hfma_parameters(&spec);
        let x: Vec<f64> = r.iter().map(|v| 0.09 * v).collect();
        let direct = hfma1(a, b, c, JackIndex::TWO, &x, &pol()).unwrap();
        let via = hfma_factor(&spec, &r, &pol()).unwrap();
        assert!((direct.value - via.value).abs() < 1e-11 * via.value);
    }

    #[test]
    fn marginal_integrates_to_one() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 2, 2, 0.3).unwrap();
        let p = bin_probability(&spec, 0.0, 1.0, &pol()).unwrap();
        assert!((p - 1.0).abs() < 1e-7, "{p}");
    }
}
