//! Scattering matrices: Haar sampling, the Poisson kernel, a Metropolis chain
//! targeting it, reflection eigenvalues and empirical densities.

pub mod chain;
pub mod density;
pub mod haar;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use crate::ensembles::{ensemble_constants, EnsembleKind, EnsembleSpec};
use crate::error::{Error, Result};

pub use chain::{run_chains, ChainConfig, ChainOutput, MetropolisChain};
pub use density::{empirical_density, Histogram};
pub use haar::{haar_orthogonal, haar_sample, haar_special_orthogonal, haar_symplectic, Group, GroupElement};

/// Real samples live in `SO(n+m)`; quaternion samples in the compact symplectic
/// group, embedded as `2(n+m) × 2(n+m)` complex matrices.
#[derive(Clone, Debug, PartialEq)]
pub enum SampleMatrix {
    Real(DMatrix<f64>),
    Quaternion(DMatrix<Complex64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScatteringSample {
    pub kind: EnsembleKind,
    pub matrix: SampleMatrix,
}

impl ScatteringSample {
    /// A Haar-random scattering matrix of the ensemble's symmetry class.
    pub fn haar<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Self {
        let dim = spec.n + spec.m;
        let matrix = if spec.kind.is_quaternion() {
            SampleMatrix::Quaternion(haar_symplectic(dim, rng))
        } else {
            SampleMatrix::Real(haar_special_orthogonal(dim, rng))
        };
        ScatteringSample { kind: spec.kind, matrix }
    }

    /// The complex matrix (real entries promoted).
    pub fn complex(&self) -> DMatrix<Complex64> {
        match &self.matrix {
            SampleMatrix::Real(m) => m.map(|v| Complex64::new(v, 0.0)),
            SampleMatrix::Quaternion(m) => m.clone(),
        }
    }

    /// Rows/columns per channel: 1 for real, 2 for quaternion.
    fn block(&self) -> usize {
        match self.matrix {
            SampleMatrix::Real(_) => 1,
            SampleMatrix::Quaternion(_) => 2,
        }
    }
}

fn check_kind(s: &ScatteringSample, spec: &EnsembleSpec) -> Result<()> {
    if s.kind.is_quaternion() != spec.kind.is_quaternion() {
        return Err(Error::InvalidArgument(format!("sample of kind {} does not match ensemble {}", s.kind, spec.kind)));
    }
    let dim = s.block() * (spec.n + spec.m);
    let rows = match &s.matrix {
        SampleMatrix::Real(m) => m.nrows(),
        SampleMatrix::Quaternion(m) => m.nrows(),
    };
    if rows != dim {
        return Err(Error::Dimension(format!("scattering matrix has {rows} rows, ensemble needs {dim}")));
    }
    Ok(())
}

/// `ln |det(1 − γ_L r)|` with the coupling Kramers-doubled for quaternion samples.
fn log_abs_det_reduced(s: &ScatteringSample, gamma: &[f64]) -> f64 {
    match &s.matrix {
        SampleMatrix::Real(m) => {
            let n = gamma.len();
            let a = DMatrix::from_fn(n, n, |i, j| f64::from(i == j) - gamma[i] * m[(i, j)]);
            a.determinant().abs().ln()
        }
        SampleMatrix::Quaternion(m) => {
            let n = 2 * gamma.len();
            let a = DMatrix::from_fn(n, n, |i, j| {
                Complex64::new(f64::from(i == j), 0.0) - gamma[i / 2] * m[(i, j)]
            });
            a.determinant().norm().ln()
        }
    }
}

/// Unnormalized Poisson kernel `|det(1 − γ̂ S)|^{−N_σ}` from the reflection block.
pub fn poisson_density(s: &ScatteringSample, spec: &EnsembleSpec) -> Result<f64> {
    Ok(log_poisson_density(s, spec)?.exp())
}

pub fn log_poisson_density(s: &ScatteringSample, spec: &EnsembleSpec) -> Result<f64> {
    check_kind(s, spec)?;
    let n_sigma = ensemble_constants(spec).n_sigma;
    Ok(-n_sigma * log_abs_det_reduced(s, &spec.gammas()))
}

/// The same kernel from the full `N × N` determinant with `γ̂ = diag(γ_L, 0)`.
pub fn poisson_density_full(s: &ScatteringSample, spec: &EnsembleSpec) -> Result<f64> {
    check_kind(s, spec)?;
    let k = s.block();
    let gamma = spec.gammas();
    let full = s.complex();
    let dim = full.nrows();
    let g = |i: usize| if i / k < gamma.len() { gamma[i / k] } else { 0.0 };
    let a = DMatrix::from_fn(dim, dim, |i, j| Complex64::new(f64::from(i == j), 0.0) - g(i) * full[(i, j)]);
    let n_sigma = ensemble_constants(spec).n_sigma;
    Ok(a.determinant().norm().powf(-n_sigma))
}

/// Squared singular values of the reflection block, ascending. Quaternion
/// samples have Kramers-degenerate singular values; each pair is reported once.
pub fn reflection_eigenvalues(s: &ScatteringSample, spec: &EnsembleSpec) -> Result<Vec<f64>> {
    check_kind(s, spec)?;
    block_singular_values(s, spec, true)
}

/// Squared singular values of the `n × m` transmission block, ascending.
pub fn transmission_eigenvalues(s: &ScatteringSample, spec: &EnsembleSpec) -> Result<Vec<f64>> {
    check_kind(s, spec)?;
    block_singular_values(s, spec, false)
}

fn block_singular_values(s: &ScatteringSample, spec: &EnsembleSpec, reflection: bool) -> Result<Vec<f64>> {
    let k = s.block();
    let rows = k * spec.n;
    let (c0, cols) = if reflection { (0, k * spec.n) } else { (k * spec.n, k * spec.m) };
    let mut sv: Vec<f64> = match &s.matrix {
        SampleMatrix::Real(m) => m.view((0, c0), (rows, cols)).into_owned().singular_values().iter().copied().collect(),
        SampleMatrix::Quaternion(m) => {
            m.view((0, c0), (rows, cols)).into_owned().singular_values().iter().copied().collect()
        }
    };
    sv.sort_by(f64::total_cmp);
    if k == 2 {
        let mut out = Vec::with_capacity(spec.n);
        for pair in sv.chunks(2) {
            if (pair[0] - pair[1]).abs() > 1e-8 {
                return Err(Error::KramersMismatch(pair[0], pair[1]));
            }
            out.push((0.5 * (pair[0] + pair[1])).powi(2));
        }
        return Ok(out);
    }
    Ok(sv.into_iter().map(|v| v * v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_and_block_cases() {
        let spec = EnsembleSpec::uniform(EnsembleKind::PRE, 2, 2, 0.3).unwrap();
        let s = ScatteringSample { kind: EnsembleKind::PRE, matrix: SampleMatrix::Real(DMatrix::identity(4, 4)) };
        assert_eq!(reflection_eigenvalues(&s, &spec).unwrap(), vec![1.0, 1.0]);
        let want = (1.0f64 - 0.3).powf(-2.0 * 3.0);
        assert!((poisson_density(&s, &spec).unwrap() - want).abs() < 1e-12 * want);
        // swap the leads: zero reflection block
        let mut p = DMatrix::zeros(4, 4);
        p[(0, 2)] = 1.0;
        p[(1, 3)] = 1.0;
        p[(2, 0)] = 1.0;
        p[(3, 1)] = 1.0;
        let s = ScatteringSample { kind: EnsembleKind::PRE, matrix: SampleMatrix::Real(p) };
        assert_eq!(reflection_eigenvalues(&s, &spec).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn zero_coupling_is_flat() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
            let spec = EnsembleSpec::uniform(kind, 2, 3, 0.0).unwrap();
            let s = ScatteringSample::haar(&spec, &mut rng);
            assert_eq!(poisson_density(&s, &spec).unwrap(), 1.0);
        }
    }

    #[test]
    fn reduced_matches_full_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for kind in [EnsembleKind::PRE, EnsembleKind::PQE] {
            let spec = EnsembleSpec::new(kind, 2, 3, vec![0.4, 0.7]).unwrap();
            for _ in 0..100 {
                let s = ScatteringSample::haar(&spec, &mut rng);
                let a = poisson_density(&s, &spec).unwrap();
                let b = poisson_density_full(&s, &spec).unwrap();
                assert!((a - b).abs() < 1e-10 * a);
                let r = reflection_eigenvalues(&s, &spec).unwrap();
                let mut t = transmission_eigenvalues(&s, &spec).unwrap();
                t.reverse();
                for (ri, ti) in r.iter().zip(&t) {
                    assert!((ri + ti - 1.0).abs() < 1e-10);
                }
            }
        }
    }
}
