//! Selberg-type closed forms.
//!
//! `S_n(x, y, α) = ∫_{[0,1]^n} ∏ R_j^x (1−R_j)^y |Δ(R)|^{2/α} dR` and its
//! relatives: the Jack-weighted version, the `[0,∞)` form `Z_p` and its
//! dual Jack-weighted version.

use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalar::JackIndex;
use crate::symfunc::jack::jack_at_identity;
use crate::symfunc::pochhammer::gen_pochhammer;

fn positive(arg: f64, what: &str) -> Result<f64> {
    if arg > 0.0 && arg.is_finite() {
        Ok(arg)
    } else {
        Err(Error::Domain(format!("{what}: Γ argument {arg} is not positive")))
    }
}

/// Closed form of `S_n(x, y, α)`.
pub fn selberg_base(x: f64, y: f64, alpha: JackIndex, n: u32) -> Result<f64> {
    if x <= -1.0 || y <= -1.0 {
        return Err(Error::Domain(format!("Selberg integral needs x, y > −1, got x={x}, y={y}")));
    }
    let g = 1.0 / alpha.value();
    let mut log = 0.0;
    for j in 0..n {
        let j = j as f64;
        log += ln_gamma(positive(x + 1.0 + j * g, "selberg")?) + ln_gamma(positive(y + 1.0 + j * g, "selberg")?)
            + ln_gamma(1.0 + (j + 1.0) * g)
            - ln_gamma(positive(x + y + 2.0 + (n as f64 + j - 1.0) * g, "selberg")?)
            - ln_gamma(1.0 + g);
    }
    Ok(log.exp())
}

/// `∫ P_λ^{(α)}(R) ∏ R^x (1−R)^y |Δ|^{2/α} dR` over `[0,1]^n`.
pub fn selberg_jack(x: f64, y: f64, alpha: JackIndex, n: u32, lambda: &Partition) -> Result<f64> {
    if lambda.len() > n as usize {
        return Ok(0.0);
    }
    let g = 1.0 / alpha.value();
    let nf = n as f64 - 1.0;
    let base = selberg_base(x, y, alpha, n)?;
    let num = gen_pochhammer(x + 1.0 + nf * g, lambda, alpha);
    let den = gen_pochhammer(x + y + 2.0 + 2.0 * nf * g, lambda, alpha);
    Ok(jack_at_identity::<f64>(lambda, alpha, n) * num / den * base)
}

/// `Z_p(a, b) = ∫_{[0,∞)^p} ∏ y^a (1+y)^{−b} |Δ(y)|^{2/α} dy`.
pub fn zp_constant(a: f64, b: f64, p: u32, alpha: JackIndex) -> Result<f64> {
    let spread = 2.0 / alpha.value() * (p as f64 - 1.0);
    if b - a - 1.0 - spread <= 0.0 {
        return Err(Error::Domain(format!("Z_p needs b − a − 1 − 2(p−1)/α > 0, got a={a}, b={b}, p={p}")));
    }
    // y = t/(1−t) maps the integral onto [0,1]^p
    selberg_base(a, b - a - 2.0 - spread, alpha, p)
}

/// `∫_{[0,∞)^p} P_λ^{(α)}(y) ∏ y^a (1+y)^{−b} |Δ(y)|^{2/α} dy`.
pub fn dual_selberg_jack(lambda: &Partition, a: f64, b: f64, p: u32, alpha: JackIndex) -> Result<f64> {
    let g = 1.0 / alpha.value();
    let bound = b - a - 1.0 - 2.0 * (p as f64 - 1.0) * g;
    if lambda.first() as f64 >= bound {
        return Err(Error::ConditionViolated(format!(
            "dual Selberg integral for {lambda} needs λ_1 < b − a − 1 − 2(p−1)/α = {bound}"
        )));
    }
    if lambda.len() > p as usize {
        return Ok(0.0);
    }
    let z = zp_constant(a, b, p, alpha)?;
    let pf = p as f64 - 1.0;
    let num = gen_pochhammer(a + 1.0 + pf * g, lambda, alpha);
    let den = gen_pochhammer(a + 2.0 + 2.0 * pf * g - b, lambda, alpha);
    let sign = if lambda.weight() % 2 == 0 { 1.0 } else { -1.0 };
    Ok(z * jack_at_identity::<f64>(lambda, alpha, p) * num / (sign * den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use statrs::function::beta::beta;

    #[test]
    fn one_dimensional_cases_are_beta() {
        for alpha in [JackIndex::HALF, JackIndex::TWO] {
            let v = selberg_base(0.3, 1.7, alpha, 1).unwrap();
            assert!((v - beta(1.3, 2.7)).abs() < 1e-14);
            assert!((selberg_base(0.0, 0.0, alpha, 1).unwrap() - 1.0).abs() < 1e-15);
            let v = selberg_jack(0.3, 1.7, alpha, 1, &partition![1]).unwrap();
            assert!((v - beta(2.3, 2.7)).abs() < 1e-14);
            assert!((zp_constant(0.0, 3.0, 1, alpha).unwrap() - 0.5).abs() < 1e-14);
            let v = dual_selberg_jack(&partition![1], 0.5, 6.0, 1, alpha).unwrap();
            assert!((v - beta(2.5, 3.5)).abs() < 1e-13);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(selberg_base(-1.0, 0.0, JackIndex::TWO, 1).is_err());
        assert!(zp_constant(1.0, 2.0, 1, JackIndex::TWO).is_err());
        let e = dual_selberg_jack(&partition![3], 0.0, 4.0, 1, JackIndex::TWO).unwrap_err();
        assert!(matches!(e, Error::ConditionViolated(_)));
    }
}
