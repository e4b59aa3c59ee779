//! One-dimensional quadrature: Gauss–Jacobi rules and double-exponential
//! (tanh-sinh) integration for endpoint singularities.

use nalgebra::{DMatrix, SymmetricEigen};
use statrs::function::gamma::ln_gamma;

/// Nodes and weights of an `n`-point rule.
#[derive(Clone, Debug)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Gauss–Jacobi rule for `∫_{−1}^{1} (1−x)^a (1+x)^b f(x) dx` (Golub–Welsch).
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Rule {
    assert!(n >= 1 && a > -1.0 && b > -1.0, "invalid Gauss–Jacobi parameters");
    let ab = a + b;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n.saturating_sub(1)];
    for (k, d) in diag.iter_mut().enumerate() {
        let kf = k as f64;
        *d = if k == 0 {
            (b - a) / (ab + 2.0)
        } else {
            (b * b - a * a) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
    }
    for (i, o) in off.iter_mut().enumerate() {
        let k = (i + 1) as f64;
        let sq = if i == 0 {
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            let s = 2.0 * k + ab;
            4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        *o = sq.sqrt();
    }
    let jacobi = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            diag[i]
        } else if i + 1 == j {
            off[i]
        } else if j + 1 == i {
            off[j]
        } else {
            0.0
        }
    });
    let eig = SymmetricEigen::new(jacobi);
    let mu0 = ((ab + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0) - ln_gamma(ab + 2.0)).exp();
    let mut pairs: Vec<(f64, f64)> =
        (0..n).map(|k| (eig.eigenvalues[k], mu0 * eig.eigenvectors[(0, k)].powi(2))).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Rule { nodes: pairs.iter().map(|p| p.0).collect(), weights: pairs.iter().map(|p| p.1).collect() }
}

pub fn gauss_legendre(n: usize) -> Rule {
    gauss_jacobi(n, 0.0, 0.0)
}

/// Rule for `∫_0^1 t^a (1−t)^b f(t) dt`.
pub fn gauss_jacobi_unit(n: usize, a: f64, b: f64) -> Rule {
    let r = gauss_jacobi(n, b, a);
    let scale = 0.5f64.powf(a + b + 1.0);
    Rule {
        nodes: r.nodes.iter().map(|x| 0.5 * (1.0 + x)).collect(),
        weights: r.weights.iter().map(|w| w * scale).collect(),
    }
}

/// Result of an adaptive integration.
#[derive(Clone, Copy, Debug)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Tanh-sinh integration of `f` over `(lo, hi)`, refining the step until two
/// successive levels agree to `rel_tol`. `f` is never evaluated at the endpoints.
pub fn tanh_sinh(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, rel_tol: f64) -> Estimate {
    tanh_sinh_split(|x, _, _| f(x), lo, hi, rel_tol)
}

/// Like [`tanh_sinh`], but `f(x, x − lo, hi − x)` also receives both endpoint
/// distances at full precision, for integrands singular at `hi`.
pub fn tanh_sinh_split(mut f: impl FnMut(f64, f64, f64) -> f64, lo: f64, hi: f64, rel_tol: f64) -> Estimate {
    use std::f64::consts::FRAC_PI_2;
    let half = 0.5 * (hi - lo);
    if half == 0.0 {
        return Estimate { value: 0.0, error: 0.0 };
    }
    const T_MAX: f64 = 6.5;
    // contribution at abscissa t; zero once the node collapses onto an endpoint
    let mut term = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let dist = 2.0 * half / (1.0 + (2.0 * u.abs()).exp());
        if dist <= 0.0 {
            return 0.0;
        }
        let (x, d_lo, d_hi) = if t > 0.0 { (hi - dist, 2.0 * half - dist, dist) } else { (lo + dist, dist, 2.0 * half - dist) };
        let w = half * FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        if w == 0.0 {
            return 0.0;
        }
        let v = f(x, d_lo, d_hi);
        if v.is_finite() {
            w * v
        } else {
            0.0
        }
    };

    let mut h = 1.0;
    let mut sum = term(0.0);
    let mut k = 1;
    while (k as f64) * h <= T_MAX {
        let t = k as f64 * h;
        sum += term(t) + term(-t);
        k += 1;
    }
    let mut value = h * sum;
    let mut error = f64::INFINITY;
    for _level in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= T_MAX {
            let t = k as f64 * h;
            sum += term(t) + term(-t);
            k += 2;
        }
        let next = h * sum;
        error = (next - value).abs();
        value = next;
        if error <= rel_tol * value.abs() {
            break;
        }
    }
    Estimate { value, error }
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::function::beta::beta;

    #[test]
    fn legendre_integrates_polynomials() {
        let r = gauss_legendre(5);
        let v = r.integrate(|x| x.powi(8) + 3.0 * x * x);
        assert!((v - (2.0 / 9.0 + 2.0)).abs() < 1e-13);
    }

    #[test]
    fn jacobi_moments() {
        let (a, b) = (-0.5, 1.5);
        let r = gauss_jacobi(8, a, b);
        // ∫(1−x)^a(1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
        let want = 2f64.powf(a + b + 1.0) * beta(a + 1.0, b + 1.0);
        assert!((r.integrate(|_| 1.0) - want).abs() < 1e-12 * want);
        let r = gauss_jacobi_unit(10, 0.5, 2.0);
        let want = beta(4.5, 3.0);
        assert!((r.integrate(|t| t.powi(3)) - want).abs() < 1e-13);
    }

    #[test]
    fn tanh_sinh_endpoint_singularity() {
        let e = tanh_sinh_split(|_, a, b| 1.0 / (a * b).sqrt(), 0.0, 1.0, 1e-12);
        assert!((e.value - std::f64::consts::PI).abs() < 1e-10, "{}", e.value);
        let e = tanh_sinh(|x| x.ln(), 0.0, 1.0, 1e-12);
        assert!((e.value + 1.0).abs() < 1e-11);
    }
}
