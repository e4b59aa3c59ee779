use serde::Serialize;

use crate::partitions::Partition;
use crate::scalar::{JackIndex, Scalar};

/// The six hook-type products over the cells of a partition.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HookCoefficients<S> {
    pub d: S,
    pub d_prime: S,
    pub e: S,
    pub e_prime: S,
    pub h: S,
    pub b: S,
}

pub fn hook_coefficients<S: Scalar>(lambda: &Partition, alpha: JackIndex, n: u32) -> HookCoefficients<S> {
    let al: S = alpha.as_scalar();
    let nn = S::from_i64(n as i64);
    let one = S::one();
    let mut c = HookCoefficients { d: one.clone(), d_prime: one.clone(), e: one.clone(), e_prime: one.clone(), h: one.clone(), b: one };
    for (_, s) in lambda.cells_with_data() {
        let a = al.clone() * S::from_i64(s.arm as i64);
        let l = S::from_i64(s.leg as i64);
        let ap = al.clone() * S::from_i64(s.coarm as i64);
        let lp = S::from_i64(s.coleg as i64);
        c.d = c.d * (a.clone() + al.clone() + l.clone() + S::one());
        c.d_prime = c.d_prime * (a.clone() + al.clone() + l.clone());
        c.h = c.h * (a + l + S::one());
        c.e = c.e * (ap.clone() + al.clone() + nn.clone() - lp.clone());
        c.e_prime = c.e_prime * (ap.clone() + al.clone() + nn.clone() - lp.clone() - S::one());
        c.b = c.b * (ap + nn.clone() - lp);
    }
    c
}

/// `d'_λ(α) = ∏ (α a(s) + α + l(s))`.
pub fn upper_hook(lambda: &Partition, alpha: f64) -> f64 {
    lambda.cells_with_data().iter().map(|(_, s)| alpha * (s.arm as f64 + 1.0) + s.leg as f64).product()
}

/// `h_λ(α) = ∏ (α a(s) + l(s) + 1)`.
pub fn lower_hook(lambda: &Partition, alpha: f64) -> f64 {
    lambda.cells_with_data().iter().map(|(_, s)| alpha * s.arm as f64 + s.leg as f64 + 1.0).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::pochhammer::pochhammer;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        <BigRational as Scalar>::from_ratio(n, d)
    }

    #[test]
    fn single_cell() {
        for alpha in [JackIndex::HALF, JackIndex::ONE, JackIndex::TWO] {
            let c = hook_coefficients::<BigRational>(&partition![1], alpha, 5);
            assert_eq!(c.d_prime, alpha.as_scalar());
            assert_eq!(c.h, q(1, 1));
            assert_eq!(c.b, q(5, 1));
        }
    }

    #[test]
    fn two_cell_row() {
        let c = hook_coefficients::<BigRational>(&partition![2], JackIndex::TWO, 3);
        assert_eq!(c.d_prime, q(8, 1));
        assert_eq!(c.h, q(3, 1));
        let rhs = q(4, 1) * pochhammer(&q(2, 1), &partition![2], JackIndex::TWO);
        assert_eq!(c.e_prime, rhs);
        assert_eq!(c.e_prime, q(24, 1));
    }

    #[test]
    fn float_helpers_agree() {
        let l = partition![3, 2, 2, 1];
        let c = hook_coefficients::<f64>(&l, JackIndex::HALF, 4);
        assert!((upper_hook(&l, 0.5) - c.d_prime).abs() < 1e-12 * c.d_prime);
        assert!((lower_hook(&l, 0.5) - c.h).abs() < 1e-12 * c.h);
    }
}
