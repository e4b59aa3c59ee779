use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::partitions::Partition;
use crate::scalar::{JackIndex, Scalar};
use crate::symfunc::hooks::hook_coefficients;
use crate::symfunc::jack::jack_eval;
use crate::symfunc::pochhammer::pochhammer;

const COINCIDENT: f64 = 1e-8;

/// Schur polynomial by the bialternant `det[x_i^{λ_j+n−j}] / det[x_i^{n−j}]`.
/// Nearly coincident points go through the monomial expansion instead.
pub fn schur_eval(lambda: &Partition, x: &[f64]) -> f64 {
    let n = x.len();
    if lambda.len() > n {
        return 0.0;
    }
    if lambda.is_empty() {
        return 1.0;
    }
    let close = (0..n).any(|i| (i + 1..n).any(|j| (x[i] - x[j]).abs() < COINCIDENT));
    if close {
        return jack_eval(lambda, JackIndex::ONE, x);
    }
    let num = DMatrix::from_fn(n, n, |i, j| x[i].powi((lambda.part(j + 1) as usize + n - j - 1) as i32));
    let den = DMatrix::from_fn(n, n, |i, j| x[i].powi((n - j - 1) as i32));
    num.determinant() / den.determinant()
}

/// `S_λ(1^N) = [N]_λ^{(1)} / d'_λ(1)`.
pub fn schur_at_identity<S: Scalar>(lambda: &Partition, n: u32) -> S {
    let top = pochhammer(&S::from_i64(n as i64), lambda, JackIndex::ONE);
    top / hook_coefficients::<S>(lambda, JackIndex::ONE, n).d_prime
}

/// Complete homogeneous symmetric functions `h_0..=h_k` from power sums `p_1..=p_k`.
fn complete_from_power_sums(p: &[Complex64], k: usize) -> Vec<Complex64> {
    let mut h = vec![Complex64::new(1.0, 0.0)];
    for m in 1..=k {
        let s: Complex64 = (1..=m).map(|i| p[i - 1] * h[m - i]).sum();
        h.push(s / m as f64);
    }
    h
}

/// Schur function from the power sums `p_1, p_2, …` of its arguments (Jacobi–Trudi).
/// Needs `p_k` for `k < λ_1 + l(λ)`.
pub fn schur_from_power_sums(lambda: &Partition, p: &[Complex64]) -> Complex64 {
    let l = lambda.len();
    if l == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let h = complete_from_power_sums(p, lambda.first() as usize + l - 1);
    let m = DMatrix::from_fn(l, l, |i, j| {
        let k = lambda.part(i + 1) as i64 - i as i64 + j as i64;
        if k < 0 {
            Complex64::new(0.0, 0.0)
        } else {
            h[k as usize]
        }
    });
    m.determinant()
}

/// `S_λ` evaluated at the eigenvalues of a square matrix, without diagonalizing it.
pub fn schur_of_matrix(lambda: &Partition, m: &DMatrix<Complex64>) -> Complex64 {
    if lambda.len() > m.nrows() {
        return Complex64::new(0.0, 0.0);
    }
    let k = lambda.first() as usize + lambda.len();
    let mut p = Vec::with_capacity(k);
    let mut power = m.clone();
    for _ in 0..k {
        p.push(power.trace());
        power = &power * m;
    }
    schur_from_power_sums(lambda, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn small_cases() {
        assert!((schur_eval(&partition![1], &[0.2, 0.5, -0.1]) - 0.6).abs() < 1e-14);
        assert!((schur_eval(&partition![1, 1], &[0.3, 0.7]) - 0.21).abs() < 1e-14);
        assert!((schur_eval(&partition![2], &[2.0, 3.0]) - 19.0).abs() < 1e-12);
        assert_eq!(schur_at_identity::<f64>(&partition![1], 7), 7.0);
        assert_eq!(schur_at_identity::<f64>(&partition![1, 1], 2), 1.0);
        let direct = schur_eval(&partition![2, 1], &[1.0, 1.0, 1.0]);
        assert!((schur_at_identity::<f64>(&partition![2, 1], 3) - direct).abs() < 1e-12);
        assert_eq!(direct, 8.0);
    }

    #[test]
    fn matrix_route_matches_bialternant() {
        let x = [0.4, -0.3, 0.9];
        let m = DMatrix::from_fn(3, 3, |i, j| if i == j { Complex64::new(x[i], 0.0) } else { Complex64::new(0.0, 0.0) });
        for lambda in [partition![2], partition![2, 2], partition![3, 1, 1], partition![1, 1, 1]] {
            let a = schur_of_matrix(&lambda, &m);
            let b = schur_eval(&lambda, &x);
            assert!((a.re - b).abs() < 1e-12 && a.im.abs() < 1e-12, "{lambda}");
        }
    }
}
