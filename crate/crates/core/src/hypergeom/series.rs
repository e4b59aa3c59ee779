//! `₂F₁` of one and two matrix arguments, summed layer by layer in weight.

use crate::error::{Error, Result};
use crate::hypergeom::{SeriesValue, TruncationPolicy};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::JackIndex;
use crate::symfunc::hooks::upper_hook;
use crate::symfunc::jack::{jack_at_identity, JackEvaluator};
use crate::symfunc::pochhammer::gen_pochhammer;

/// `α^{|λ|}/d'_λ(α) · [a]_λ[b]_λ/[c]_λ`, or `None` when the numerator vanishes.
fn coefficient(lambda: &Partition, a: f64, b: f64, c: f64, alpha: JackIndex) -> Result<Option<f64>> {
    let num = gen_pochhammer(a, lambda, alpha) * gen_pochhammer(b, lambda, alpha);
    if num == 0.0 {
        return Ok(None);
    }
    let den = gen_pochhammer(c, lambda, alpha);
    if den == 0.0 {
        return Err(Error::PochhammerPole(lambda.clone()));
    }
    let al = alpha.value();
    Ok(Some(al.powi(lambda.weight() as i32) / upper_hook(lambda, al) * num / den))
}

/// `Some(p)` when `v = −p` for a non-negative integer `p`.
pub(crate) fn nonpositive_integer(v: f64) -> Option<u32> {
    let r = v.round();
    (r <= 0.0 && (v - r).abs() < 1e-12).then_some((-r) as u32)
}

/// Highest weight with a nonzero term when `a` or `b` is a non-positive integer.
fn terminating_weight(a: f64, b: f64, n: usize) -> Option<u32> {
    let p = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => return None,
    };
    Some(p * n as u32)
}

fn sum_layers(
    a: f64,
    b: f64,
    c: f64,
    n: usize,
    policy: &TruncationPolicy,
    mut term: impl FnMut(&Partition, f64) -> f64,
    alpha: JackIndex,
) -> Result<SeriesValue> {
    let last = terminating_weight(a, b, n);
    let mut sum = 0.0;
    let mut layers: Vec<f64> = Vec::new();
    let mut quiet = 0;
    let mut tail = f64::INFINITY;
    for w in 0..=policy.max_weight {
        if last.is_some_and(|p| w > p) {
            return Ok(SeriesValue::exact(sum, w));
        }
        let mut layer = 0.0;
        for lambda in partitions_of(w, n, w) {
            if let Some(coef) = coefficient(&lambda, a, b, c, alpha)? {
                layer += term(&lambda, coef);
            }
        }
        sum += layer;
        layers.push(layer.abs());
        if w == 0 {
            continue;
        }
        if layer.abs() <= policy.rel_tol * sum.abs() {
            quiet += 1;
        } else {
            quiet = 0;
        }
        let k = layers.len() - 1;
        let smooth = |i: usize| layers[i] + if i > 0 { layers[i - 1] } else { 0.0 };
        let now = smooth(k);
        let before = smooth(k - 1);
        let ratio = if before > 0.0 { now / before } else { 0.0 };
        tail = if now == 0.0 {
            0.0
        } else if ratio < 1.0 {
            now / (1.0 - ratio)
        } else {
            f64::INFINITY
        };
        if quiet >= policy.consecutive_layers && tail <= policy.rel_tol * sum.abs() {
            return Ok(SeriesValue { value: sum, tail_estimate: tail, layers_used: w + 1, converged: true });
        }
    }
    if last.is_some_and(|p| p <= policy.max_weight) {
        return Ok(SeriesValue::exact(sum, policy.max_weight + 1));
    }
    Err(Error::NonConvergence { value: sum, tail_estimate: tail, layers: policy.max_weight as usize + 1 })
}

fn check_args(x: &[f64]) -> Result<()> {
    if x.iter().any(|v| !v.is_finite() || v.abs() >= 1.0) {
        return Err(Error::Domain(format!("matrix argument must lie in (−1,1), got {x:?}")));
    }
    Ok(())
}

/// `₂F₁^{(α)}(a, b; c | X) = Σ_λ α^{|λ|}/d'_λ · [a]_λ[b]_λ/[c]_λ · P_λ^{(α)}(X)`.
pub fn hfma1(a: f64, b: f64, c: f64, alpha: JackIndex, x: &[f64], policy: &TruncationPolicy) -> Result<SeriesValue> {
    check_args(x)?;
    if x.iter().all(|&v| v == 0.0) {
        return Ok(SeriesValue::exact(1.0, 1));
    }
    let mut ev = JackEvaluator::new(alpha, x.to_vec());
    sum_layers(a, b, c, x.len(), policy, |lambda, coef| coef * ev.eval(lambda), alpha)
}

/// `₂𝓕₁^{(α)}(a, b; c | X, Y)` with `P_λ(X)P_λ(Y)/P_λ(1^n)`.
#[allow(clippy::too_many_arguments)]
pub fn hfma2(
    a: f64,
    b: f64,
    c: f64,
    alpha: JackIndex,
    x: &[f64],
    y: &[f64],
    n: usize,
    policy: &TruncationPolicy,
) -> Result<SeriesValue> {
    if x.len() != n || y.len() != n {
        return Err(Error::Dimension(format!("both arguments need {n} entries, got {} and {}", x.len(), y.len())));
    }
    if x.iter().all(|&v| v == 0.0) || y.iter().all(|&v| v == 0.0) {
        return Ok(SeriesValue::exact(1.0, 1));
    }
    let mut ex = JackEvaluator::new(alpha, x.to_vec());
    let mut ey = JackEvaluator::new(alpha, y.to_vec());
    sum_layers(
        a,
        b,
        c,
        n,
        policy,
        |lambda, coef| coef * ex.eval(lambda) * ey.eval(lambda) / jack_at_identity::<f64>(lambda, alpha, n as u32),
        alpha,
    )
}

/// `₂F₁(a, b; c | X) = det[1−X]^{c−a−b} ₂F₁(c−a, c−b; c | X)`, evaluated through the right side.
pub fn kummer_transform(a: f64, b: f64, c: f64, alpha: JackIndex, x: &[f64], policy: &TruncationPolicy) -> Result<SeriesValue> {
    let inner = hfma1(c - a, c - b, c, alpha, x, policy)?;
    let factor: f64 = x.iter().map(|v| (1.0 - v).powf(c - a - b)).product();
    Ok(SeriesValue { value: inner.value * factor, tail_estimate: inner.tail_estimate * factor.abs(), ..inner })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gauss(a: f64, b: f64, c: f64, x: f64) -> f64 {
        let (mut term, mut sum) = (1.0, 1.0);
        for k in 0..400 {
            let k = k as f64;
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
            sum += term;
        }
        sum
    }

    #[test]
    fn zero_argument() {
        let p = TruncationPolicy::default();
        let v = hfma1(2.0, 3.0, 4.0, JackIndex::TWO, &[0.0, 0.0], &p).unwrap();
        assert_eq!((v.value, v.tail_estimate, v.converged), (1.0, 0.0, true));
        let v = hfma2(2.0, 3.0, 4.0, JackIndex::TWO, &[0.0, 0.0], &[0.2, 0.1], 2, &p).unwrap();
        assert_eq!(v.value, 1.0);
    }

    #[test]
    fn negative_integer_terminates() {
        let p = TruncationPolicy::default();
        let v = hfma1(-1.0, 1.5, 2.5, JackIndex::ONE, &[0.4], &p).unwrap();
        assert!((v.value - (1.0 - 1.5 / 2.5 * 0.4)).abs() < 1e-15);
        assert_eq!(v.tail_estimate, 0.0);
    }

    #[test]
    fn scalar_case_is_gauss_series() {
        let p = TruncationPolicy::default();
        for alpha in [JackIndex::HALF, JackIndex::ONE, JackIndex::TWO] {
            let v = hfma1(0.5, 1.5, 2.5, alpha, &[0.3], &p).unwrap();
            let want = gauss(0.5, 1.5, 2.5, 0.3);
            assert!((v.value - want).abs() < 1e-10 * want);
            assert!(v.converged);
        }
    }

    #[test]
    fn euler_transformation_scalar() {
        let p = TruncationPolicy::default();
        let k = kummer_transform(1.2, 0.7, 2.4, JackIndex::TWO, &[0.3], &p).unwrap();
        let want = gauss(1.2, 0.7, 2.4, 0.3);
        assert!((k.value - want).abs() < 1e-10 * want);
    }

    #[test]
    fn identity_second_argument() {
        let p = TruncationPolicy::default();
        let x = [0.2, -0.1, 0.15];
        let one = hfma1(1.3, 0.6, 2.2, JackIndex::HALF, &x, &p).unwrap();
        let two = hfma2(1.3, 0.6, 2.2, JackIndex::HALF, &x, &[1.0; 3], 3, &p).unwrap();
        assert!((one.value - two.value).abs() < 1e-12);
    }

    #[test]
    fn pole_is_reported() {
        let p = TruncationPolicy::default();
        let err = hfma1(1.0, 1.0, -1.0, JackIndex::ONE, &[0.2], &p).unwrap_err();
        assert!(matches!(err, Error::PochhammerPole(_)));
    }

    #[test]
    fn budget_exhaustion() {
        let p = TruncationPolicy { max_weight: 3, ..Default::default() };
        let err = hfma1(3.0, 4.0, 2.0, JackIndex::TWO, &[0.9, 0.8], &p).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }
}
