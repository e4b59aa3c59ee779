//! Joint densities of reflection eigenvalues for ideal and non-ideal leads.

use andreev::ensembles::{
    integrate_unnormalized, jpdf, marginal_density, normalization_constant, EnsembleKind, EnsembleSpec,
};
use andreev::hypergeom::TruncationPolicy;

fn main() -> andreev::Result<()> {
    let pol = TruncationPolicy::default();
    for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
        for gamma in [0.0, 0.3, 0.6] {
            let spec = EnsembleSpec::uniform(kind, 2, 2, gamma)?;
            let c = normalization_constant(&spec)?;
            let q = integrate_unnormalized(&spec, &pol)?;
            println!(
                "{kind}(2,2) γ={gamma}: 𝒞 = {c:.8e}, quadrature {q:.8e}, P(0.3, 0.7) = {:.6}",
                jpdf(&spec, &[0.3, 0.7], &pol)?
            );
        }
    }
    let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 1, 2, 0.5)?;
    for r in [0.1, 0.5, 0.9] {
        println!("PRE(1,2) γ=0.5 marginal at {r}: {:.6}", marginal_density(&spec, r, &pol)?);
    }
    Ok(())
}
