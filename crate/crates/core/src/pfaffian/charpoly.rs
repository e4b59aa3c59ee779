//! Averages of products of characteristic polynomials over the `β = 1`
//! Jacobi ensemble, `⟨∏_k det(v_k − Y)⟩` for `p × p` matrices `Y`, as a
//! Pfaffian of the skew kernel divided by a Vandermonde.

use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::pf::{pfaffian, pfaffian_generic};
use super::skew::{horner, kernel_divided, kernel_exact, kernel_f, SkewOrthoSystem};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Evaluator for fixed `(p, n)` over one skew system. The constant `c_{n,p}`
/// is fixed once, from the fact that the average is monic in every `v_k`.
#[derive(Clone, Debug)]
pub struct CharPolyAverage {
    p: usize,
    n: usize,
    sys: SkewOrthoSystem,
    constant: f64,
}

impl CharPolyAverage {
    pub fn new(p: usize, n: usize, sys: &SkewOrthoSystem) -> Result<Self> {
        if p % 2 == 1 {
            return Err(Error::InvalidArgument(format!("Pfaffian form needs an even matrix size p, got {p}")));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("need at least one characteristic polynomial".into()));
        }
        if sys.max_degree() + 1 < p + n || sys.pairs() < (p + n) / 2 {
            return Err(Error::InvalidArgument(format!(
                "skew system of degree {} is too shallow for p={p}, n={n}",
                sys.max_degree()
            )));
        }
        let mut avg = CharPolyAverage { p, n, sys: sys.clone(), constant: 1.0 };
        avg.constant = 1.0 / avg.leading_coefficient()?;
        Ok(avg)
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    fn terms(&self) -> usize {
        (self.p + self.n) / 2
    }

    /// `Pf[f_jk] / Δ(v)` without the constant.
    pub fn raw(&self, v: &[f64]) -> Result<f64> {
        let n = self.n;
        if v.len() != n {
            return Err(Error::Dimension(format!("expected {n} arguments, got {}", v.len())));
        }
        let terms = self.terms();
        match n {
            1 => Ok(self.sys.eval(self.p, v[0])),
            2 => kernel_divided(v[0], v[1], &self.sys, terms),
            _ => {
                let mut vand = 1.0;
                for j in 0..n {
                    for k in j + 1..n {
                        let d = v[k] - v[j];
                        if d.abs() < 1e-10 * (1.0 + v[k].abs()) {
                            return Err(Error::CoincidentEigenvalues(j, k));
                        }
                        vand *= d;
                    }
                }
                let off = n % 2;
                let dim = n + off;
                let mut f = DMatrix::zeros(dim, dim);
                for j in 0..n {
                    if off == 1 {
                        let b = self.sys.eval(n + self.p - 1, v[j]);
                        f[(0, j + 1)] = b;
                        f[(j + 1, 0)] = -b;
                    }
                    for k in j + 1..n {
                        let val = kernel_f(v[j], v[k], &self.sys, terms)?;
                        f[(j + off, k + off)] = val;
                        f[(k + off, j + off)] = -val;
                    }
                }
                Ok(pfaffian(&f)? / vand)
            }
        }
    }

    fn raw_exact(&self, v: &[BigRational], qs: &[Vec<BigRational>], r: &[BigRational]) -> Result<BigRational> {
        let n = self.n;
        let off = n % 2;
        let dim = n + off;
        let terms = self.terms();
        let mut f = vec![vec![BigRational::zero(); dim]; dim];
        let mut vand = BigRational::one();
        for j in 0..n {
            if off == 1 {
                let b = horner(&qs[n + self.p - 1], v[j].clone());
                f[0][j + 1] = b.clone();
                f[j + 1][0] = -b;
            }
            for k in j + 1..n {
                vand *= v[k].clone() - v[j].clone();
                let val = kernel_exact(&v[j], &v[k], qs, r, terms);
                f[j + off][k + off] = val.clone();
                f[k + off][j + off] = -val;
            }
        }
        Ok(pfaffian_generic(f, |x: &BigRational, y| !x.is_zero() && y.is_zero())? / vand)
    }

    /// Coefficient of `∏ v_k^p` in [`raw`](Self::raw): a `p`-th divided
    /// difference in each variable on disjoint integer grids.
    fn leading_coefficient(&self) -> Result<f64> {
        let (p, n) = (self.p, self.n);
        let nodes = p + 1;
        // weight of node i in the leading divided difference on 0..=p
        let weight = |i: usize| -> BigRational {
            let mut d = BigRational::one();
            for j in 0..nodes {
                if j != i {
                    d *= BigRational::from_i64(i as i64 - j as i64);
                }
            }
            d.recip()
        };
        let weights: Vec<BigRational> = (0..nodes).map(weight).collect();
        let mut idx = vec![0usize; n];
        let mut total = BigRational::zero();
        let mut total_f = 0.0;
        loop {
            let w = idx.iter().fold(BigRational::one(), |acc, &i| acc * weights[i].clone());
            let v: Vec<i64> = idx.iter().enumerate().map(|(k, &i)| (k * nodes + i) as i64).collect();
            match self.sys.exact_coefficients() {
                Some((qs, r)) => {
                    let vq: Vec<BigRational> = v.iter().map(|&x| BigRational::from_i64(x)).collect();
                    total += w * self.raw_exact(&vq, qs, r)?;
                }
                None => {
                    let vf: Vec<f64> = v.iter().map(|&x| x as f64).collect();
                    total_f += w.to_f64() * self.raw(&vf)?;
                }
            }
            let mut k = 0;
            loop {
                if k == n {
                    let lead = if self.sys.is_exact() { total.to_f64() } else { total_f };
                    if lead == 0.0 || !lead.is_finite() {
                        return Err(Error::DegenerateSkewSystem(p / 2, lead));
                    }
                    return Ok(lead);
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

    /// `⟨∏_k det(v_k − Y)⟩` under the normalized `β = 1` Jacobi measure with the system's weight.
    pub fn eval(&self, v: &[f64]) -> Result<f64> {
        Ok(self.constant * self.raw(v)?)
    }
}

/// One-shot form of [`CharPolyAverage::eval`].
pub fn char_poly_average(p: usize, n: usize, sys: &SkewOrthoSystem, v: &[f64]) -> Result<f64> {
    CharPolyAverage::new(p, n, sys)?.eval(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_legendre;

    /// `⟨∏ det(v_k − Y)⟩` for `p = 2`, `w = 1` by Gauss–Legendre on each half of the square.
    fn direct_p2(v: &[f64]) -> f64 {
        let rule = gauss_legendre(20);
        let (mut num, mut den) = (0.0, 0.0);
        for (&x, &wx) in rule.nodes.iter().zip(&rule.weights) {
            // λ2 ∈ (−1, 1), λ1 ∈ (−1, λ2): |Δ| = λ2 − λ1 is polynomial on the triangle
            let l2 = x;
            let h = 0.5 * (l2 + 1.0);
            for (&t, &wt) in rule.nodes.iter().zip(&rule.weights) {
                let l1 = h * t + 0.5 * (l2 - 1.0);
                let w = wx * wt * h * (l2 - l1);
                let f: f64 = v.iter().map(|&vk| (vk - l1) * (vk - l2)).product();
                num += w * f;
                den += w;
            }
        }
        num / den
    }

    #[test]
    fn one_point_is_even_skew_polynomial() {
        let sys = SkewOrthoSystem::build(4, 0.0, 0.0).unwrap();
        let avg = CharPolyAverage::new(2, 1, &sys).unwrap();
        assert!((avg.constant() - 1.0).abs() < 1e-15);
        for v in [-0.4, 0.3, 1.7] {
            assert!((avg.eval(&[v]).unwrap() - direct_p2(&[v])).abs() < 1e-8);
        }
    }

    #[test]
    fn two_points_match_quadrature() {
        let sys = SkewOrthoSystem::build(6, 0.0, 0.0).unwrap();
        let avg = CharPolyAverage::new(2, 2, &sys).unwrap();
        let v = [0.3, -0.2];
        assert!((avg.eval(&v).unwrap() - direct_p2(&v)).abs() < 1e-6);
        let swapped = avg.eval(&[v[1], v[0]]).unwrap();
        assert!((swapped - avg.eval(&v).unwrap()).abs() < 1e-14);
        // n = 3 via the bordered matrix
        let avg3 = CharPolyAverage::new(2, 3, &sys).unwrap();
        let v = [0.3, -0.2, 1.4];
        assert!((avg3.eval(&v).unwrap() - direct_p2(&v)).abs() < 1e-8);
        let avg4 = CharPolyAverage::new(2, 4, &sys).unwrap();
        let v = [0.3, -0.2, 1.4, 0.8];
        assert!((avg4.eval(&v).unwrap() - direct_p2(&v)).abs() < 1e-8);
    }

    #[test]
    fn shallow_system_rejected() {
        let sys = SkewOrthoSystem::build(3, 0.0, 0.0).unwrap();
        assert!(CharPolyAverage::new(4, 2, &sys).is_err());
        assert!(CharPolyAverage::new(3, 1, &sys).is_err());
    }
}
