//! Jacobi-type integral representation of `₂F₁^{(α′)}(−p, −q; c | X)`:
//!
//! `∏(1−x_k)^p / Z̃_p · ∫_{[−1,1]^p} |Δ(λ)|^{2α′} ∏_j (1+λ_j)^A (1−λ_j)^{α′c−n} ∏_{j,k} (z_k − λ_j) dλ`
//!
//! with `z_k = (1+x_k)/(1−x_k)` and `A = α′(q−p+1) − 1`. `Z̃_p` is the same
//! integral at `X = 0`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{gauss_jacobi, gauss_jacobi_unit, tanh_sinh_split, Rule};
use crate::scalar::JackIndex;

use super::selberg::selberg_base;

/// How to evaluate the `p`-dimensional integral. Dimensions up to 3 use
/// product quadrature; beyond that, importance-sampled Monte Carlo.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadSpec {
    /// Nodes per dimension; 0 picks enough for exactness on polynomial integrands.
    pub nodes: usize,
    pub mc_samples: usize,
    pub seed: u64,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec { nodes: 0, mc_samples: 200_000, seed: 0x5eed }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegralValue {
    pub value: f64,
    pub stderr: f64,
}

struct Exponents {
    upper: f64,
    lower: f64,
}

fn exponents(p: u32, q: f64, c: f64, alpha_p: JackIndex, n: usize) -> Result<Exponents> {
    let ap = alpha_p.value();
    if (n as f64 - 1.0) / ap >= c {
        return Err(Error::ConditionViolated(format!("integral representation needs (n−1)/α′ < c, got n={n}, c={c}")));
    }
    let upper = ap * (q - p as f64 + 1.0) - 1.0;
    let lower = ap * c - n as f64;
    if upper <= -1.0 || lower <= -1.0 {
        return Err(Error::ConditionViolated(format!(
            "weight exponents must exceed −1, got (1+λ)^{upper} (1−λ)^{lower}"
        )));
    }
    Ok(Exponents { upper, lower })
}

/// `Z̃_p`: the `X = 0` integral, as a Selberg closed form.
pub fn ztilde(p: u32, q: f64, c: f64, alpha_p: JackIndex) -> Result<f64> {
    let ap = alpha_p.value();
    let upper = ap * (q - p as f64 + 1.0) - 1.0;
    let pf = p as f64;
    let scale = (pf * (1.0 + upper + ap * c) + ap * pf * (pf - 1.0)) * std::f64::consts::LN_2;
    Ok(scale.exp() * selberg_base(upper, ap * c, alpha_p.recip(), p)?)
}

fn integrand(lam: &[f64], x: &[f64], power: f64) -> f64 {
    let mut v = 1.0;
    for i in 0..lam.len() {
        for j in i + 1..lam.len() {
            v *= (lam[j] - lam[i]).abs().powf(power);
        }
    }
    for &l in lam {
        for &xk in x {
            v *= (1.0 + xk) - l * (1.0 - xk);
        }
    }
    v
}

/// Evaluates `₂F₁^{(α′)}(−p, −q; c | X)` through the integral representation.
pub fn hfma1_integral_rep(p: u32, q: f64, c: f64, alpha_p: JackIndex, x: &[f64], quad: &QuadSpec) -> Result<IntegralValue> {
    let n = x.len();
    let ex = exponents(p, q, c, alpha_p, n)?;
    if x.iter().any(|v| !v.is_finite() || *v >= 1.0) {
        return Err(Error::Domain(format!("matrix argument must be below 1, got {x:?}")));
    }
    if p == 0 {
        return Ok(IntegralValue { value: 1.0, stderr: 0.0 });
    }
    if p > 3 {
        return monte_carlo(p, &ex, alpha_p, x, quad);
    }
    let ap = alpha_p.value();
    let power = 2.0 * ap;
    let pu = p as usize;
    let mut deg = ap * (p * (p - 1)) as f64 + (n * pu) as f64;
    if ex.upper.fract() == 0.0 {
        deg += (pu - 1) as f64 * ex.upper;
    } else {
        deg += 20.0;
    }
    let nodes = quad.nodes.max((deg / 2.0).ceil() as usize + 3);
    let integral = if power.fract() == 0.0 && (power as u64) % 2 == 0 {
        tensor(pu, nodes, &ex, |lam| integrand(lam, x, power))
    } else if ex.upper.fract() != 0.0 && ex.lower.fract() == 0.0 {
        // keep the non-polynomial endpoint factor on the outer variable
        let flipped = Exponents { upper: ex.lower, lower: ex.upper };
        ordered(pu, nodes, &flipped, |lam| {
            let neg: Vec<f64> = lam.iter().map(|l| -l).collect();
            integrand(&neg, x, power)
        })
    } else if ex.upper.fract() == 0.0 {
        ordered(pu, nodes, &ex, |lam| integrand(lam, x, power))
    } else {
        // both endpoint factors are non-polynomial: corner singularities defeat
        // the product rules, so integrate the ordered region adaptively
        ordered_adaptive(pu, &ex, |lam| integrand(lam, x, power))
    };
    Ok(IntegralValue { value: integral / ztilde(p, q, c, alpha_p)?, stderr: 0.0 })
}

/// Product Gauss–Jacobi rule on `[−1,1]^p`.
fn tensor(p: usize, nodes: usize, ex: &Exponents, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
    let rule = gauss_jacobi(nodes, ex.lower, ex.upper);
    let mut idx = vec![0usize; p];
    let mut lam = vec![0.0; p];
    let mut total = 0.0;
    loop {
        let mut w = 1.0;
        for k in 0..p {
            lam[k] = rule.nodes[idx[k]];
            w *= rule.weights[idx[k]];
        }
        total += w * f(&lam);
        let mut k = 0;
        loop {
            if k == p {
                return total;
            }
            idx[k] += 1;
            if idx[k] < nodes {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Integral over `λ_1 < … < λ_p` times `p!`, for non-smooth `|Δ|` powers.
/// With `u_k = 1 − λ_k = u_1 t_2 ⋯ t_k` the `(1−λ)` weight factors into Jacobi weights.
fn ordered(p: usize, nodes: usize, ex: &Exponents, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
    let b = ex.lower;
    let outer = gauss_jacobi(nodes, p as f64 * b + p as f64 - 1.0, ex.upper);
    let inner: Vec<Rule> =
        (2..=p).map(|k| gauss_jacobi_unit(nodes, (p - k + 1) as f64 * (b + 1.0) - 1.0, 0.0)).collect();
    let mut lam = vec![0.0; p];
    let mut total = 0.0;
    let mut idx = vec![0usize; p - 1];
    for (&l1, &w1) in outer.nodes.iter().zip(&outer.weights) {
        let u1 = 1.0 - l1;
        loop {
            let mut u = u1;
            let mut w = w1;
            lam[0] = l1;
            for k in 1..p {
                let r = &inner[k - 1];
                u *= r.nodes[idx[k - 1]];
                w *= r.weights[idx[k - 1]];
                lam[k] = 1.0 - u;
                w *= (2.0 - u).powf(ex.upper);
            }
            total += w * f(&lam);
            let mut k = 0;
            loop {
                if k == p - 1 {
                    break;
                }
                idx[k] += 1;
                if idx[k] < nodes {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == p - 1 {
                break;
            }
        }
    }
    let factorial: f64 = (1..=p).map(|k| k as f64).product();
    total * factorial
}

fn ordered_adaptive(p: usize, ex: &Exponents, mut f: impl FnMut(&[f64]) -> f64) -> f64 {
    fn level(k: usize, lo: f64, lam: &mut Vec<f64>, ex: &Exponents, f: &mut dyn FnMut(&[f64]) -> f64) -> f64 {
        let tol = if lam.len() == 1 { 1e-11 } else { 1e-9 };
        tanh_sinh_split(
            |v, d_lo, d_hi| {
                lam[k] = v;
                let one_plus = if k == 0 { d_lo } else { 1.0 + lo + d_lo };
                let w = one_plus.powf(ex.upper) * d_hi.powf(ex.lower);
                if w == 0.0 {
                    return 0.0;
                }
                let inner = if k + 1 == lam.len() { f(lam) } else { level(k + 1, v, lam, ex, f) };
                w * inner
            },
            lo,
            1.0,
            tol,
        )
        .value
    }
    let mut lam = vec![0.0; p];
    let factorial: f64 = (1..=p).map(|k| k as f64).product();
    factorial * level(0, -1.0, &mut lam, ex, &mut f)
}

/// Ratio estimator with `(1−λ)/2 ~ Beta(b+1, A+1)` proposals; exact at `X = 0`.
fn monte_carlo(p: u32, ex: &Exponents, alpha_p: JackIndex, x: &[f64], quad: &QuadSpec) -> Result<IntegralValue> {
    let power = 2.0 * alpha_p.value();
    let dist = Beta::new(ex.lower + 1.0, ex.upper + 1.0).map_err(|e| Error::Domain(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(quad.seed);
    let zero = vec![0.0; x.len()];
    let m = quad.mc_samples.max(2);
    let mut lam = vec![0.0; p as usize];
    let (mut g, mut g0) = (Vec::with_capacity(m), Vec::with_capacity(m));
    for _ in 0..m {
        for l in lam.iter_mut() {
            *l = 1.0 - 2.0 * dist.sample(&mut rng);
        }
        g.push(integrand(&lam, x, power));
        g0.push(integrand(&lam, &zero, power));
    }
    let mf = m as f64;
    let mean = g.iter().sum::<f64>() / mf;
    let mean0 = g0.iter().sum::<f64>() / mf;
    let ratio = mean / mean0;
    let resid = g.iter().zip(&g0).map(|(a, b)| (a - ratio * b).powi(2)).sum::<f64>() / (mf - 1.0);
    Ok(IntegralValue { value: ratio, stderr: (resid / mf).sqrt() / mean0.abs() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergeom::{hfma1, TruncationPolicy};

    #[test]
    fn zero_argument_is_one() {
        for (p, q, c, a) in [(2, 3.0, 4.0, JackIndex::HALF), (2, 1.5, 1.0, JackIndex::TWO), (3, 3.0, 4.0, JackIndex::HALF), (2, 2.0, 3.0, JackIndex::HALF)] {
            let v = hfma1_integral_rep(p, q, c, a, &[0.0], &QuadSpec::default()).unwrap();
            assert!((v.value - 1.0).abs() < 1e-10, "p={p} α′={a}: {}", v.value);
        }
    }

    #[test]
    fn scalar_polynomial() {
        let v = hfma1_integral_rep(1, 1.0, 1.0, JackIndex::TWO, &[0.3], &QuadSpec::default()).unwrap();
        assert!((v.value - 1.3).abs() < 1e-12);
    }

    #[test]
    fn matches_series() {
        let x = [0.2, 0.1];
        let v = hfma1_integral_rep(2, 3.0, 4.0, JackIndex::HALF, &x, &QuadSpec::default()).unwrap();
        let s = hfma1(-2.0, -3.0, 4.0, JackIndex::HALF, &x, &TruncationPolicy::default()).unwrap();
        assert!((v.value - s.value).abs() < 1e-9 * s.value.abs(), "{} vs {}", v.value, s.value);
    }

    #[test]
    fn monte_carlo_route() {
        let x = [0.2];
        let v = hfma1_integral_rep(4, 4.0, 2.0, JackIndex::TWO, &x, &QuadSpec::default()).unwrap();
        let s = hfma1(-4.0, -4.0, 2.0, JackIndex::TWO, &x, &TruncationPolicy::default()).unwrap();
        assert!((v.value - s.value).abs() < 4.0 * v.stderr + 1e-12, "{} ± {} vs {}", v.value, v.stderr, s.value);
        let one = hfma1_integral_rep(4, 4.0, 2.0, JackIndex::TWO, &[0.0], &QuadSpec::default()).unwrap();
        assert_eq!(one.value, 1.0);
    }

    #[test]
    fn condition_checked() {
        let e = hfma1_integral_rep(1, 1.0, 0.4, JackIndex::HALF, &[0.1, 0.2], &QuadSpec::default()).unwrap_err();
        assert!(matches!(e, Error::ConditionViolated(_)));
    }
}
