//! Haar samples from O(n), SO(n) and the compact symplectic group, and the
//! reflection eigenvalues of the resulting scattering matrices.

use andreev::ensembles::{EnsembleKind, EnsembleSpec};
use andreev::sampling::haar::{orthogonality_defect, quaternion_defect, unitarity_defect};
use andreev::sampling::{haar_special_orthogonal, haar_symplectic, reflection_eigenvalues, ScatteringSample};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> andreev::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let o = haar_special_orthogonal(4, &mut rng);
    println!("SO(4): det {:.3}, defect {:.1e}", o.determinant(), orthogonality_defect(&o));
    let sp = haar_symplectic(3, &mut rng);
    println!("Sp(3): unitarity {:.1e}, quaternion structure {:.1e}", unitarity_defect(&sp), quaternion_defect(&sp));

    // CRE with n = 1, m = 1 gives the arcsine law, mean 1/2
    let spec = EnsembleSpec::ideal(EnsembleKind::CRE, 1, 1)?;
    let k = 20_000;
    let mut mean = 0.0;
    for _ in 0..k {
        mean += reflection_eigenvalues(&ScatteringSample::haar(&spec, &mut rng), &spec)?[0];
    }
    println!("CRE(1,1): E[R] ≈ {:.4}", mean / k as f64);

    let spec = EnsembleSpec::ideal(EnsembleKind::CQE, 2, 3)?;
    let r = reflection_eigenvalues(&ScatteringSample::haar(&spec, &mut rng), &spec)?;
    println!("CQE(2,3) sample: R = {r:.4?} (Kramers pairs merged)");
    Ok(())
}
