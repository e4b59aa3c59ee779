//! Skew-orthogonal polynomials for `⟨f, g⟩ = ∬ f(u) g(v) w(u) w(v) sign(v−u) du dv`
//! on `[−1, 1]²` with `w(u) = (1+u)^a (1−u)^b`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quadrature::gauss_jacobi;
use crate::scalar::Scalar;

const MOMENT_NODES: usize = 60;

/// `∫_{−1}^{1} v^k dv`.
fn power_integral(k: usize) -> BigRational {
    if k % 2 == 1 {
        BigRational::zero()
    } else {
        BigRational::from_ratio(2, k as i64 + 1)
    }
}

/// `M_ij` for `w = 1`, exactly.
pub fn skew_moment_exact(i: usize, j: usize) -> BigRational {
    // inner integral: ∫_{−1}^{v} u^i − ∫_{v}^{1} u^i = (2v^{i+1} − (−1)^{i+1} − 1)/(i+1)
    let odd_shift = if i % 2 == 0 { 0 } else { 2 };
    let lead = BigRational::from_i64(2) * power_integral(i + j + 1);
    let tail = BigRational::from_i64(odd_shift) * power_integral(j);
    (lead - tail) / BigRational::from_i64(i as i64 + 1)
}

/// `∫∫_{u<v} u^i v^j w(u) w(v)` by nested Gauss–Jacobi on the triangle.
fn lower_triangle(i: usize, j: usize, a: f64, b: f64) -> f64 {
    let outer = gauss_jacobi(MOMENT_NODES, b, 2.0 * a + 1.0);
    let inner = gauss_jacobi(MOMENT_NODES, 0.0, a);
    let mut total = 0.0;
    for (&v, &wv) in outer.nodes.iter().zip(&outer.weights) {
        let s: f64 = inner
            .nodes
            .iter()
            .zip(&inner.weights)
            .map(|(&t, &wt)| {
                let u = -1.0 + 0.5 * (1.0 + v) * (1.0 + t);
                wt * (1.0 - u).powf(b) * u.powi(i as i32)
            })
            .sum();
        total += wv * v.powi(j as i32) * s;
    }
    total * 0.5f64.powf(a + 1.0)
}

/// `M_ij = ⟨x^i, x^j⟩`. Closed form for `a = b = 0`, quadrature otherwise.
pub fn skew_moment(i: usize, j: usize, a: f64, b: f64) -> f64 {
    if a == 0.0 && b == 0.0 {
        return skew_moment_exact(i, j).to_f64();
    }
    if i == j {
        return 0.0;
    }
    lower_triangle(i, j, a, b) - lower_triangle(j, i, a, b)
}

#[derive(Clone, Debug)]
struct ExactSystem {
    coefficients: Vec<Vec<BigRational>>,
    r: Vec<BigRational>,
}

/// Monic `q_0, …, q_D` (coefficients in ascending powers) with
/// `⟨q_{2l}, q_{2k+1}⟩ = r_l δ_lk` and all other pairings zero.
#[derive(Clone, Debug)]
pub struct SkewOrthoSystem {
    pub coefficients: Vec<Vec<f64>>,
    pub r: Vec<f64>,
    pub weight_exponents: (f64, f64),
    exact: Option<ExactSystem>,
}

fn product<S: Scalar>(f: &[S], g: &[S], m: &[Vec<S>]) -> S {
    let mut s = S::zero();
    for (i, fi) in f.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate() {
            s = s + fi.clone() * gj.clone() * m[i][j].clone();
        }
    }
    s
}

fn axpy<S: Scalar>(f: &mut [S], c: S, g: &[S]) {
    for (fi, gi) in f.iter_mut().zip(g) {
        *fi = fi.clone() + c.clone() * gi.clone();
    }
}

fn gram_schmidt<S: Scalar>(max_degree: usize, m: &[Vec<S>], degenerate: impl Fn(&S) -> bool) -> Result<(Vec<Vec<S>>, Vec<S>)> {
    let mut qs: Vec<Vec<S>> = Vec::with_capacity(max_degree + 1);
    let mut r: Vec<S> = Vec::new();
    for deg in 0..=max_degree {
        let mut f = vec![S::zero(); max_degree + 1];
        f[deg] = S::one();
        for (k, rk) in r.iter().enumerate() {
            let even = &qs[2 * k];
            let odd = &qs[2 * k + 1];
            let c_even = product(&f, odd, m) / rk.clone();
            let c_odd = product(&f, even, m) / rk.clone();
            axpy(&mut f, -c_even, even);
            axpy(&mut f, c_odd, odd);
        }
        if deg % 2 == 1 {
            // fix the residual freedom q_{2l+1} → q_{2l+1} + c q_{2l}
            let c = f[deg - 1].clone();
            let even = qs[deg - 1].clone();
            axpy(&mut f, -c, &even);
            let rl = product(&qs[deg - 1], &f, m);
            if degenerate(&rl) {
                return Err(Error::DegenerateSkewSystem(deg / 2, rl.to_f64()));
            }
            r.push(rl);
        }
        f.truncate(deg + 1);
        qs.push(f);
    }
    Ok((qs, r))
}

impl SkewOrthoSystem {
    /// Skew Gram–Schmidt on the monomials `1, x, …, x^max_degree`; exact for `w = 1`.
    pub fn build(max_degree: usize, a: f64, b: f64) -> Result<Self> {
        if max_degree < 1 {
            return Err(Error::InvalidArgument("skew-orthogonal system needs max_degree ≥ 1".into()));
        }
        if a <= -1.0 || b <= -1.0 {
            return Err(Error::Domain(format!("weight exponents must exceed −1, got a={a}, b={b}")));
        }
        let d = max_degree;
        if a == 0.0 && b == 0.0 {
            let m: Vec<Vec<BigRational>> = (0..=d).map(|i| (0..=d).map(|j| skew_moment_exact(i, j)).collect()).collect();
            let (qs, r) = gram_schmidt(d, &m, |v: &BigRational| v.is_zero())?;
            let to_f = |v: &BigRational| v.to_f64();
            return Ok(SkewOrthoSystem {
                coefficients: qs.iter().map(|q| q.iter().map(to_f).collect()).collect(),
                r: r.iter().map(to_f).collect(),
                weight_exponents: (a, b),
                exact: Some(ExactSystem { coefficients: qs, r }),
            });
        }
        let m: Vec<Vec<f64>> = (0..=d).map(|i| (0..=d).map(|j| skew_moment(i, j, a, b)).collect()).collect();
        let scale = m.iter().flatten().fold(0.0f64, |s, v| s.max(v.abs()));
        let (coefficients, r) = gram_schmidt(d, &m, |v: &f64| v.abs() < 1e-13 * scale)?;
        Ok(SkewOrthoSystem { coefficients, r, weight_exponents: (a, b), exact: None })
    }

    pub fn max_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Number of complete `(q_{2l}, q_{2l+1})` pairs.
    pub fn pairs(&self) -> usize {
        self.r.len()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn eval(&self, l: usize, x: f64) -> f64 {
        horner(&self.coefficients[l], x)
    }

    pub(crate) fn exact_coefficients(&self) -> Option<(&[Vec<BigRational>], &[BigRational])> {
        self.exact.as_ref().map(|e| (e.coefficients.as_slice(), e.r.as_slice()))
    }

    /// `⟨f, g⟩` for polynomials given by ascending coefficients.
    pub fn skew_product(&self, f: &[f64], g: &[f64]) -> f64 {
        let (a, b) = self.weight_exponents;
        let mut s = 0.0;
        for (i, fi) in f.iter().enumerate() {
            for (j, gj) in g.iter().enumerate() {
                if *fi != 0.0 && *gj != 0.0 {
                    s += fi * gj * skew_moment(i, j, a, b);
                }
            }
        }
        s
    }
}

pub(crate) fn horner<S: Scalar>(c: &[S], x: S) -> S {
    c.iter().rev().fold(S::zero(), |acc, ci| acc * x.clone() + ci.clone())
}

/// `(P(v) − P(u)) / (v − u)`, evaluated without cancellation.
pub(crate) fn divided_difference(c: &[f64], u: f64, v: f64) -> f64 {
    // Horner in the pair (u, v): h_k = Σ_{i<k} u^i v^{k−1−i}
    let mut total = 0.0;
    let mut h = 0.0;
    let mut upow = 1.0;
    for ck in c.iter().skip(1) {
        h = h * v + upow;
        upow *= u;
        total += ck * h;
    }
    total
}

/// `F(u, v) = Σ_{l=1}^{terms} (q_{2l−2}(u) q_{2l−1}(v) − q_{2l−2}(v) q_{2l−1}(u)) / (2 r_{l−1})`.
pub fn kernel_f(u: f64, v: f64, sys: &SkewOrthoSystem, terms: usize) -> Result<f64> {
    check_terms(sys, terms)?;
    Ok((1..=terms)
        .map(|l| {
            let (e, o) = (2 * l - 2, 2 * l - 1);
            (sys.eval(e, u) * sys.eval(o, v) - sys.eval(e, v) * sys.eval(o, u)) / (2.0 * sys.r[l - 1])
        })
        .sum())
}

/// `F(u, v) / (v − u)`, a symmetric polynomial that stays accurate as `v → u`.
pub fn kernel_divided(u: f64, v: f64, sys: &SkewOrthoSystem, terms: usize) -> Result<f64> {
    check_terms(sys, terms)?;
    Ok((1..=terms)
        .map(|l| {
            let (qe, qo) = (&sys.coefficients[2 * l - 2], &sys.coefficients[2 * l - 1]);
            // a(u)b(v) − a(v)b(u) = a(u)(b(v) − b(u)) − b(u)(a(v) − a(u))
            (horner(qe, u) * divided_difference(qo, u, v) - horner(qo, u) * divided_difference(qe, u, v))
                / (2.0 * sys.r[l - 1])
        })
        .sum())
}

pub(crate) fn kernel_exact(u: &BigRational, v: &BigRational, qs: &[Vec<BigRational>], r: &[BigRational], terms: usize) -> BigRational {
    let mut s = BigRational::zero();
    for l in 1..=terms {
        let (qe, qo) = (&qs[2 * l - 2], &qs[2 * l - 1]);
        let t = horner(qe, u.clone()) * horner(qo, v.clone()) - horner(qe, v.clone()) * horner(qo, u.clone());
        s += t / (BigRational::from_i64(2) * r[l - 1].clone());
    }
    s
}

fn check_terms(sys: &SkewOrthoSystem, terms: usize) -> Result<()> {
    if terms > sys.pairs() {
        return Err(Error::InvalidArgument(format!(
            "kernel needs {terms} skew pairs, system has {} (degree {})",
            sys.pairs(),
            sys.max_degree()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_legendre;

    /// `⟨f, g⟩` by product Gauss–Legendre on the two triangles `u < v` and `u > v`.
    fn skew_quadrature(f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64) -> f64 {
        let rule = gauss_legendre(24);
        let mut s = 0.0;
        for (&x, &wx) in rule.nodes.iter().zip(&rule.weights) {
            let v = x;
            // u ∈ (−1, v)
            let (h_lo, m_lo) = (0.5 * (v + 1.0), 0.5 * (v - 1.0));
            // u ∈ (v, 1)
            let (h_hi, m_hi) = (0.5 * (1.0 - v), 0.5 * (1.0 + v));
            for (&t, &wt) in rule.nodes.iter().zip(&rule.weights) {
                let u_lo = h_lo * t + m_lo;
                let u_hi = h_hi * t + m_hi;
                s += wx * wt * g(v) * (h_lo * f(u_lo) - h_hi * f(u_hi));
            }
        }
        s
    }

    #[test]
    fn moment_cases() {
        assert!(skew_moment_exact(0, 0).is_zero());
        for i in 0..6 {
            assert!(skew_moment_exact(i, i).is_zero());
            for j in 0..6 {
                assert_eq!(skew_moment_exact(i, j), -skew_moment_exact(j, i));
            }
        }
        assert_eq!(skew_moment_exact(0, 1), BigRational::from_ratio(4, 3));
        let q = skew_quadrature(|_| 1.0, |v| v);
        assert!((q - 4.0 / 3.0).abs() < 1e-12);
        // polynomial weight: the general path is exact up to rounding
        let exact: f64 = {
            // (1+u)(1+v) w: expand into w = 1 moments
            let m = |i, j| skew_moment(i, j, 0.0, 0.0);
            m(2, 3) + m(1, 3) + m(2, 2) + m(1, 2)
        };
        assert!((skew_moment(1, 2, 1.0, 0.0) - exact).abs() < 1e-12);
    }

    #[test]
    fn orthogonality_table_by_quadrature() {
        let sys = SkewOrthoSystem::build(8, 0.0, 0.0).unwrap();
        assert_eq!(sys.coefficients[0], vec![1.0]);
        for i in 0..=8 {
            for j in 0..=8 {
                let got = skew_quadrature(|u| sys.eval(i, u), |v| sys.eval(j, v));
                let want = match (i % 2, j % 2) {
                    (0, 1) if j == i + 1 => sys.r[i / 2],
                    (1, 0) if i == j + 1 => -sys.r[j / 2],
                    _ => 0.0,
                };
                assert!((got - want).abs() < 1e-9, "⟨q{i}, q{j}⟩ = {got}, want {want}");
            }
        }
        for l in 0..4 {
            assert_eq!(sys.coefficients[2 * l + 1][2 * l], 0.0);
        }
    }

    #[test]
    fn weighted_system() {
        let sys = SkewOrthoSystem::build(5, 1.0, 2.0).unwrap();
        assert!(!sys.is_exact());
        for i in 0..=5 {
            for j in 0..=5 {
                let v = sys.skew_product(&sys.coefficients[i], &sys.coefficients[j]);
                let skewed = (i % 2 == 0 && j == i + 1) || (j % 2 == 0 && i == j + 1);
                if !skewed {
                    assert!(v.abs() < 1e-10, "⟨q{i}, q{j}⟩ = {v}");
                }
            }
        }
    }

    #[test]
    fn kernel_properties() {
        let sys = SkewOrthoSystem::build(6, 0.0, 0.0).unwrap();
        assert_eq!(kernel_f(0.3, 0.3, &sys, 3).unwrap(), 0.0);
        for (u, v) in [(0.1, 0.7), (-0.4, 2.5), (1.3, -0.9)] {
            let f = kernel_f(u, v, &sys, 3).unwrap();
            assert!((f + kernel_f(v, u, &sys, 3).unwrap()).abs() < 1e-14);
            let g = kernel_divided(u, v, &sys, 3).unwrap();
            assert!((g * (v - u) - f).abs() < 1e-12 * f.abs().max(1.0));
            let one = kernel_f(u, v, &sys, 1).unwrap();
            assert!((one - (sys.eval(1, v) - sys.eval(1, u)) / (2.0 * sys.r[0])).abs() < 1e-15);
        }
        assert!(kernel_f(0.1, 0.2, &sys, 4).is_err());
    }
}
