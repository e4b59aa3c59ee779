//! Pfaffians of antisymmetric matrices by skew Gaussian elimination.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Pfaffian of an even-dimensional antisymmetric matrix (Parlett–Reid style
/// elimination with partial pivoting).
pub fn pfaffian(a: &DMatrix<f64>) -> Result<f64> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::Dimension(format!("pfaffian needs a square matrix, got {}×{}", n, a.ncols())));
    }
    let defect = (a + a.transpose()).amax();
    if defect > 1e-10 * a.amax().max(1.0) {
        return Err(Error::NotAntisymmetric(defect));
    }
    let rows = (0..n).map(|i| (0..n).map(|j| a[(i, j)]).collect()).collect();
    pfaffian_generic(rows, |x: &f64, y: &f64| x.abs() > y.abs())
}

/// Exact or floating-point Pfaffian of a square antisymmetric array; `better`
/// decides whether one pivot candidate beats another.
pub fn pfaffian_generic<S: Scalar>(mut a: Vec<Vec<S>>, better: impl Fn(&S, &S) -> bool) -> Result<S> {
    let n = a.len();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let mut pf = S::one();
    for k in (0..n).step_by(2) {
        // pivot: largest entry in row k to the right of the diagonal
        let mut piv = k + 1;
        for j in k + 2..n {
            if better(&a[k][j], &a[k][piv]) {
                piv = j;
            }
        }
        if a[k][piv].is_zero() {
            return Ok(S::zero());
        }
        if piv != k + 1 {
            a.swap(k + 1, piv);
            for row in a.iter_mut() {
                row.swap(k + 1, piv);
            }
            pf = -pf;
        }
        let p = a[k][k + 1].clone();
        pf = pf * p.clone();
        // Schur complement of the leading 2×2 block
        for i in k + 2..n {
            for j in i + 1..n {
                let d = (a[i][k + 1].clone() * a[j][k].clone() - a[i][k].clone() * a[j][k + 1].clone()) / p.clone();
                let v = a[i][j].clone() + d;
                a[j][i] = -v.clone();
                a[i][j] = v;
            }
        }
    }
    Ok(pf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_skew(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v: f64 = rng.random_range(-1.0..1.0);
                a[(i, j)] = v;
                a[(j, i)] = -v;
            }
        }
        a
    }

    #[test]
    fn small_cases() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 3.5, -3.5, 0.0]);
        assert_eq!(pfaffian(&a).unwrap(), 3.5);
        let (a12, a13, a14, a23, a24, a34) = (1.0, 2.0, -3.0, 0.5, 4.0, 1.5);
        let m = DMatrix::from_row_slice(
            4,
            4,
            &[0.0, a12, a13, a14, -a12, 0.0, a23, a24, -a13, -a23, 0.0, a34, -a14, -a24, -a34, 0.0],
        );
        let want = a12 * a34 - a13 * a24 + a14 * a23;
        assert!((pfaffian(&m).unwrap() - want).abs() < 1e-12);
    }

    #[test]
    fn square_is_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in (2..=12).step_by(2) {
            let a = random_skew(n, &mut rng);
            let pf = pfaffian(&a).unwrap();
            let det = a.determinant();
            assert!((pf * pf - det).abs() < 1e-8 * det.abs(), "n={n}");
        }
    }

    #[test]
    fn exact_arithmetic() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let m = vec![
            vec![q(0, 1), q(1, 2), q(1, 3), q(0, 1)],
            vec![q(-1, 2), q(0, 1), q(0, 1), q(2, 1)],
            vec![q(-1, 3), q(0, 1), q(0, 1), q(5, 7)],
            vec![q(0, 1), q(-2, 1), q(-5, 7), q(0, 1)],
        ];
        let pf = pfaffian_generic(m, |x, y| !x.is_zero() && y.is_zero()).unwrap();
        assert_eq!(pf, q(1, 2) * q(5, 7) - q(1, 3) * q(2, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(pfaffian(&DMatrix::zeros(3, 3)), Err(Error::OddDimension(3))));
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert!(matches!(pfaffian(&a), Err(Error::NotAntisymmetric(_))));
    }
}
