//! Jack polynomials in the `P` normalization.
//!
//! `P_λ = Σ_{μ ≤ λ} c_{λμ} m_μ` with the coefficients generated by the
//! dominance-order recursion of the Laplace–Beltrami eigenproblem. Tables are
//! cached per `(λ, α, max length)` for each scalar type.

use std::collections::HashMap;
use std::sync::Arc;

use crate::partitions::{partitions_of, Partition};
use crate::scalar::{JackIndex, Scalar};
use crate::symfunc::hooks::hook_coefficients;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JackKey {
    lambda: Partition,
    alpha: JackIndex,
    max_len: usize,
}

/// Monomial expansion `P_λ = Σ coeff·m_μ`, ordered by decreasing lex order of `μ`.
#[derive(Clone, Debug)]
pub struct JackExpansion<S> {
    pub terms: Vec<(Partition, S)>,
}

impl<S: Scalar> JackExpansion<S> {
    pub fn coefficient(&self, mu: &Partition) -> S {
        self.terms.iter().find(|(m, _)| m == mu).map(|(_, c)| c.clone()).unwrap_or_else(S::zero)
    }
}

/// Coefficients of `P_λ^{(α)}` on monomials with at most `max_len` parts.
pub fn jack_coefficients<S: Scalar>(lambda: &Partition, alpha: JackIndex, max_len: usize) -> Arc<JackExpansion<S>> {
    let max_len = max_len.min(lambda.weight() as usize);
    let key = JackKey { lambda: lambda.clone(), alpha, max_len };
    if let Some(hit) = S::jack_cache().read().expect("jack cache poisoned").get(&key) {
        return hit.clone();
    }
    let table = Arc::new(compute_expansion::<S>(lambda, alpha, max_len));
    S::jack_cache().write().expect("jack cache poisoned").insert(key, table.clone());
    table
}

fn compute_expansion<S: Scalar>(lambda: &Partition, alpha: JackIndex, max_len: usize) -> JackExpansion<S> {
    if lambda.len() > max_len {
        return JackExpansion { terms: Vec::new() };
    }
    let al: S = alpha.as_scalar();
    let sq = |p: &Partition| p.parts().iter().map(|&v| (v as i64) * (v as i64)).sum::<i64>();
    let lin = |p: &Partition| p.parts().iter().enumerate().map(|(i, &v)| (i as i64 + 1) * v as i64).sum::<i64>();
    let (lam_sq, lam_lin) = (sq(lambda), lin(lambda));

    let mut known: HashMap<Partition, S> = HashMap::new();
    let mut terms = Vec::new();
    for mu in partitions_of(lambda.weight(), max_len, lambda.first()) {
        if !lambda.dominates(&mu) {
            continue;
        }
        let coeff = if &mu == lambda {
            S::one()
        } else {
            let mut acc = S::zero();
            let mult = mu.multiplicities();
            for (i, &(big, mi)) in mult.iter().enumerate() {
                for &(small, mj) in &mult[i..] {
                    let pairs = if big == small { mi * (mi - 1) / 2 } else { mi * mj };
                    if pairs == 0 {
                        continue;
                    }
                    for t in 1..=small {
                        let nu = raise(&mu, big, small, t);
                        if let Some(c) = known.get(&nu) {
                            let w = (big - small + 2 * t) as i64 * pairs as i64;
                            acc = acc + c.clone() * S::from_i64(w);
                        }
                    }
                }
            }
            let denom = al.clone() * S::from_i64(lam_sq - sq(&mu)) - S::from_i64(2 * (lam_lin - lin(&mu)));
            S::from_i64(2) * acc / denom
        };
        known.insert(mu.clone(), coeff.clone());
        terms.push((mu, coeff));
    }
    JackExpansion { terms }
}

/// Replaces one part `big` by `big + t` and another part `small` by `small − t`.
fn raise(mu: &Partition, big: u32, small: u32, t: u32) -> Partition {
    let mut parts = mu.parts().to_vec();
    let i = parts.iter().position(|&p| p == big).expect("part present");
    parts[i] = big + t;
    let j = parts.iter().enumerate().position(|(k, &p)| k != i && p == small).expect("part present");
    parts[j] = small - t;
    Partition::from_unsorted(parts)
}

/// Evaluates Jack polynomials at a fixed point, sharing monomial values between calls.
pub struct JackEvaluator<S: Scalar> {
    alpha: JackIndex,
    x: Vec<S>,
    memo: HashMap<(Vec<u32>, usize), S>,
}

impl<S: Scalar> JackEvaluator<S> {
    pub fn new(alpha: JackIndex, x: Vec<S>) -> Self {
        JackEvaluator { alpha, x, memo: HashMap::new() }
    }

    pub fn point(&self) -> &[S] {
        &self.x
    }

    pub fn eval(&mut self, lambda: &Partition) -> S {
        let n = self.x.len();
        if lambda.len() > n {
            return S::zero();
        }
        let table = jack_coefficients::<S>(lambda, self.alpha, n);
        let mut out = S::zero();
        for (mu, c) in &table.terms {
            out = out + c.clone() * self.monomial(mu.parts(), n);
        }
        out
    }

    /// `m_μ(x_1, …, x_k)` by peeling off the last variable.
    pub fn monomial(&mut self, parts: &[u32], k: usize) -> S {
        if parts.len() > k {
            return S::zero();
        }
        if parts.is_empty() {
            return S::one();
        }
        let key = (parts.to_vec(), k);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let xk = self.x[k - 1].clone();
        let mut out = self.monomial(parts, k - 1);
        let mut last = None;
        for (idx, &e) in parts.iter().enumerate() {
            if last == Some(e) {
                continue;
            }
            last = Some(e);
            let mut rest = parts.to_vec();
            rest.remove(idx);
            out = out + xk.powi(e) * self.monomial(&rest, k - 1);
        }
        self.memo.insert(key, out.clone());
        out
    }
}

pub fn jack_eval(lambda: &Partition, alpha: JackIndex, x: &[f64]) -> f64 {
    JackEvaluator::new(alpha, x.to_vec()).eval(lambda)
}

/// `P_λ^{(α)}(1^n) = b_λ(α,n)/h_λ(α)`.
pub fn jack_at_identity<S: Scalar>(lambda: &Partition, alpha: JackIndex, n: u32) -> S {
    if lambda.len() > n as usize {
        return S::zero();
    }
    let c = hook_coefficients::<S>(lambda, alpha, n);
    c.b / c.h
}

/// Independent evaluation through the branching rule
/// `P_λ(x_1..x_n) = Σ_μ ψ_{λ/μ} x_n^{|λ/μ|} P_μ(x_1..x_{n−1})` over horizontal strips.
/// Slow; kept as a cross-check for the monomial route.
pub fn jack_eval_branching<S: Scalar>(lambda: &Partition, alpha: JackIndex, x: &[S]) -> S {
    let n = x.len();
    if lambda.is_empty() {
        return S::one();
    }
    if lambda.len() > n {
        return S::zero();
    }
    let xn = x[n - 1].clone();
    let mut out = S::zero();
    for mu in horizontal_strips(lambda) {
        if mu.len() > n - 1 {
            continue;
        }
        let psi = branching_psi::<S>(lambda, &mu, alpha);
        let inner = jack_eval_branching(&mu, alpha, &x[..n - 1]);
        out = out + psi * xn.powi(lambda.weight() - mu.weight()) * inner;
    }
    out
}

fn horizontal_strips(lambda: &Partition) -> Vec<Partition> {
    let mut out = vec![Vec::new()];
    for i in 1..=lambda.len() {
        let (lo, hi) = (lambda.part(i + 1), lambda.part(i));
        out = out.into_iter().flat_map(|p: Vec<u32>| (lo..=hi).map(move |v| [p.clone(), vec![v]].concat())).collect();
    }
    out.into_iter().map(Partition::from_unsorted).collect()
}

fn branching_psi<S: Scalar>(lambda: &Partition, mu: &Partition, alpha: JackIndex) -> S {
    let al: S = alpha.as_scalar();
    let b = |p: &Partition, row: usize, col: usize| -> S {
        let arm = S::from_i64((p.part(row) as usize - col) as i64);
        let leg = S::from_i64((p.conjugate().part(col) as usize - row) as i64);
        (al.clone() * arm.clone() + leg.clone() + S::one()) / (al.clone() * arm + al.clone() + leg)
    };
    let rows: Vec<usize> = (1..=lambda.len()).filter(|&i| mu.part(i) < lambda.part(i)).collect();
    let col_in_strip = |j: usize| (1..=lambda.len()).any(|i| mu.part(i) < j as u32 && j as u32 <= lambda.part(i));
    let mut out = S::one();
    for &i in &rows {
        for j in 1..=mu.part(i) as usize {
            if !col_in_strip(j) {
                out = out * b(mu, i, j) / b(lambda, i, j);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partitions::enumerate;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        <BigRational as Scalar>::from_ratio(n, d)
    }

    #[test]
    fn two_box_row() {
        for alpha in [JackIndex::HALF, JackIndex::ONE, JackIndex::TWO, JackIndex::new(3, 7).unwrap()] {
            let t = jack_coefficients::<BigRational>(&partition![2], alpha, 2);
            let a: BigRational = alpha.as_scalar();
            assert_eq!(t.coefficient(&partition![2]), q(1, 1));
            assert_eq!(t.coefficient(&partition![1, 1]), q(2, 1) / (q(1, 1) + a));
        }
        let v = jack_eval(&partition![2], JackIndex::TWO, &[0.3, -0.7]);
        assert!((v - (0.09 + 0.49 + 2.0 / 3.0 * 0.3 * -0.7)).abs() < 1e-14);
    }

    #[test]
    fn first_power_sum() {
        let x = [0.1, 0.4, -0.25];
        let v = jack_eval(&partition![1], JackIndex::HALF, &x);
        assert!((v - 0.25).abs() < 1e-15);
    }

    #[test]
    fn matches_branching_rule_exactly() {
        let x = vec![q(1, 3), q(-2, 5), q(7, 4)];
        for alpha in [JackIndex::HALF, JackIndex::TWO, JackIndex::new(2, 3).unwrap()] {
            let mut ev = JackEvaluator::new(alpha, x.clone());
            for lambda in enumerate(5, 3) {
                assert_eq!(ev.eval(&lambda), jack_eval_branching(&lambda, alpha, &x), "{lambda} α={alpha}");
            }
        }
    }

    #[test]
    fn identity_value() {
        for alpha in [JackIndex::HALF, JackIndex::ONE, JackIndex::TWO] {
            for lambda in enumerate(5, 4) {
                let ones = vec![q(1, 1); 4];
                let direct = JackEvaluator::new(alpha, ones).eval(&lambda);
                assert_eq!(direct, jack_at_identity::<BigRational>(&lambda, alpha, 4), "{lambda}");
            }
        }
        assert_eq!(jack_at_identity::<f64>(&partition![1], JackIndex::TWO, 3), 3.0);
        assert_eq!(jack_at_identity::<f64>(&Partition::empty(), JackIndex::TWO, 3), 1.0);
    }

    #[test]
    fn too_long_partition_vanishes() {
        assert_eq!(jack_eval(&partition![1, 1, 1], JackIndex::TWO, &[0.5, 0.5]), 0.0);
    }
}
