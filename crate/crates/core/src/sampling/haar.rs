//! Haar-distributed elements of `O(n)`, `SO(n)` and the compact symplectic group.
//!
//! Quaternions are embedded as 2×2 complex blocks
//! `a + bi + cj + dk ↦ [[a+bi, c+di], [−c+di, a−bi]]`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Compact groups we sample from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Orthogonal(usize),
    SpecialOrthogonal(usize),
    /// Quaternion dimension `n`; matrices are `2n × 2n` complex.
    Symplectic(usize),
}

/// A group element in its natural matrix representation.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupElement {
    Real(DMatrix<f64>),
    Complex(DMatrix<Complex64>),
}

pub fn haar_sample<R: Rng + ?Sized>(group: Group, rng: &mut R) -> GroupElement {
    match group {
        Group::Orthogonal(n) => GroupElement::Real(haar_orthogonal(n, rng)),
        Group::SpecialOrthogonal(n) => GroupElement::Real(haar_special_orthogonal(n, rng)),
        Group::Symplectic(n) => GroupElement::Complex(haar_symplectic(n, rng)),
    }
}

/// QR of a Gaussian matrix with the signs of `R`'s diagonal moved into `Q`.
pub fn haar_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// Haar `O(n)` with the first column negated whenever the determinant is −1.
pub fn haar_special_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let mut q = haar_orthogonal(n, rng);
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    q
}

/// Quaternion Gram–Schmidt on a Gaussian quaternion matrix, done in the complex embedding.
/// Each even column is orthonormalized; its partner is then fixed by quaternion structure.
pub fn haar_symplectic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let dim = 2 * n;
    let mut q = DMatrix::<Complex64>::zeros(dim, dim);
    for k in 0..n {
        let mut col: Vec<Complex64> = (0..n)
            .flat_map(|_| {
                let a: f64 = rng.sample(StandardNormal);
                let b: f64 = rng.sample(StandardNormal);
                let c: f64 = rng.sample(StandardNormal);
                let d: f64 = rng.sample(StandardNormal);
                [Complex64::new(a, b), Complex64::new(-c, d)]
            })
            .collect();
        // two passes of modified Gram–Schmidt for numerical orthogonality
        for _ in 0..2 {
            for j in 0..2 * k {
                let proj: Complex64 = (0..dim).map(|i| q[(i, j)].conj() * col[i]).sum();
                for (i, c) in col.iter_mut().enumerate() {
                    *c -= q[(i, j)] * proj;
                }
            }
        }
        let norm = col.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        for i in 0..n {
            let (u, v) = (col[2 * i] / norm, col[2 * i + 1] / norm);
            q[(2 * i, 2 * k)] = u;
            q[(2 * i + 1, 2 * k)] = v;
            q[(2 * i, 2 * k + 1)] = -v.conj();
            q[(2 * i + 1, 2 * k + 1)] = u.conj();
        }
    }
    q
}

/// `Z = I_n ⊗ [[0, 1], [−1, 0]]`.
pub fn symplectic_form(n: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if i / 2 != j / 2 {
            Complex64::new(0.0, 0.0)
        } else if i % 2 == 0 && j % 2 == 1 {
            Complex64::new(1.0, 0.0)
        } else if i % 2 == 1 && j % 2 == 0 {
            Complex64::new(-1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `‖Z U* Z⁻¹ − U‖_max`: zero for matrices of quaternions.
pub fn quaternion_defect(u: &DMatrix<Complex64>) -> f64 {
    let z = symplectic_form(u.nrows() / 2);
    let zinv = -&z;
    let back = &z * u.map(|c| c.conj()) * zinv;
    (back - u).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// `‖U†U − I‖_max` for a complex matrix.
pub fn unitarity_defect(u: &DMatrix<Complex64>) -> f64 {
    let d = u.adjoint() * u - DMatrix::identity(u.nrows(), u.ncols());
    d.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// `‖QᵀQ − I‖_max` for a real matrix.
pub fn orthogonality_defect(q: &DMatrix<f64>) -> f64 {
    let d = q.transpose() * q - DMatrix::identity(q.nrows(), q.ncols());
    d.amax()
}
