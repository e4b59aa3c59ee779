//! The quaternion density as a Pfaffian of skew-orthogonal polynomials,
//! compared with the hypergeometric series.

use andreev::ensembles::{jpdf_semi_ideal, EnsembleKind, EnsembleSpec};
use andreev::hypergeom::TruncationPolicy;
use andreev::pfaffian::{pfaffian, PqePfaffian, SkewOrthoSystem};
use nalgebra::DMatrix;

fn main() -> andreev::Result<()> {
    let a = DMatrix::from_row_slice(4, 4, &[0., 1., 2., 3., -1., 0., 4., 5., -2., -4., 0., 6., -3., -5., -6., 0.]);
    println!("Pf = {}, det = {}", pfaffian(&a)?, a.determinant());

    let sys = SkewOrthoSystem::build(6, 0.0, 0.0)?;
    println!("skew norms r_k = {:?}", sys.r);

    let pol = TruncationPolicy::default();
    for gamma in [0.2, 0.5, 0.8] {
        let spec = EnsembleSpec::uniform(EnsembleKind::PQE, 2, 3, gamma)?;
        let pf = PqePfaffian::new(&spec)?;
        let r = [0.25, 0.6];
        println!("γ={gamma}: Pfaffian {:.10}, series {:.10}", pf.eval(&r)?, jpdf_semi_ideal(&spec, &r, &pol)?);
    }
    Ok(())
}
