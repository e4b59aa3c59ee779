use crate::partitions::Partition;
use crate::scalar::{JackIndex, Scalar};

/// Generalized Pochhammer symbol `[u]_λ^{(α)} = ∏_j ∏_{k<λ_j} (u − (j−1)/α + k)`,
/// always as a product of linear factors.
pub fn pochhammer<S: Scalar>(u: &S, lambda: &Partition, alpha: JackIndex) -> S {
    let inv_alpha: S = alpha.recip().as_scalar();
    let mut out = S::one();
    for (j, &part) in lambda.parts().iter().enumerate() {
        let row = u.clone() - inv_alpha.clone() * S::from_i64(j as i64);
        for k in 0..part {
            out = out * (row.clone() + S::from_i64(k as i64));
        }
    }
    out
}

pub fn gen_pochhammer(u: f64, lambda: &Partition, alpha: JackIndex) -> f64 {
    pochhammer(&u, lambda, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn small_cases() {
        let a = JackIndex::TWO;
        assert_eq!(gen_pochhammer(0.7, &Partition::empty(), a), 1.0);
        assert!((gen_pochhammer(0.7, &partition![2], a) - 0.7 * 1.7).abs() < 1e-15);
        assert!((gen_pochhammer(0.7, &partition![1, 1], a) - 0.7 * 0.2).abs() < 1e-15);
        // vanishing factor gives an exact zero
        assert_eq!(gen_pochhammer(-1.0, &partition![2], a), 0.0);
        assert_eq!(gen_pochhammer(0.5, &partition![1, 1], a), 0.0);
    }
}
