use nalgebra::{Complex, DVector, SymmetricEigen};
use num_traits::Float;

use super::{cabs, cis, CMatrix, CVector, HilbertError, HERMITICITY_TOL};

/// Eigendecomposition `H = V diag(λ) V†` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: DVector<f64>,
    pub vectors: CMatrix,
}

impl HermitianEigen {
    pub fn new(h: &CMatrix) -> Result<Self, HilbertError> {
        let dev = hermiticity_deviation(h);
        if dev > HERMITICITY_TOL * h.nrows().max(1) as f64 {
            return Err(HilbertError::NotHermitian(dev));
        }
        // Symmetrize so round-off in the input cannot leak into the solver.
        let sym = (h + h.adjoint()) * Complex::new(0.5, 0.0);
        let eig = SymmetricEigen::new(sym);
        Ok(Self {
            values: eig.eigenvalues,
            vectors: eig.eigenvectors,
        })
    }

    /// `exp(-i H t)` as a dense matrix.
    pub fn propagator(&self, t: f64) -> CMatrix {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for k in 0..n {
            let phase = cis(-self.values[k] * t);
            let mut col = scaled.column_mut(k);
            col *= phase;
        }
        scaled * self.vectors.adjoint()
    }

    /// `exp(-i H t) |ψ⟩` without forming the propagator.
    pub fn evolve(&self, t: f64, psi: &CVector) -> CVector {
        let mut coeffs = self.vectors.adjoint() * psi;
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c *= cis(-self.values[k] * t);
        }
        &self.vectors * coeffs
    }

    pub fn max_abs_eigenvalue(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Largest elementwise `|H - H†|`.
pub fn hermiticity_deviation(h: &CMatrix) -> f64 {
    let n = h.nrows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            dev = dev.max(cabs(h[(i, j)] - h[(j, i)].conj()));
        }
    }
    dev
}

/// Largest elementwise `|U†U - I|`.
pub fn unitarity_deviation(u: &CMatrix) -> f64 {
    let prod = u.adjoint() * u;
    let n = prod.nrows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            dev = dev.max(cabs(prod[(i, j)] - Complex::new(target, 0.0)));
        }
    }
    dev
}

pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

/// Largest singular value.
pub fn spectral_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    // M†M is Hermitian positive semidefinite; its top eigenvalue is σ_max².
    let gram = m.adjoint() * m;
    let gram = (&gram + gram.adjoint()) * Complex::new(0.5, 0.0);
    let eig = SymmetricEigen::new(gram);
    Float::sqrt(eig.eigenvalues.iter().fold(0.0f64, |acc, v| acc.max(*v)))
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m, (x, y)| m.max(cabs(x - y)))
}

/// Max-norm distance between two matrices after removing a global phase.
///
/// The phase is fixed by the largest-magnitude element of `a`: `b` is
/// rotated so its entry at that position has the same argument as `a`'s.
pub fn phase_aligned_distance(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    let (idx, _) = a.iter().enumerate().fold((0, -1.0), |(bi, bm), (i, z)| {
        if z.norm_sqr() > bm {
            (i, z.norm_sqr())
        } else {
            (bi, bm)
        }
    });
    let za = a.as_slice()[idx];
    let zb = b.as_slice()[idx];
    let phase = if cabs(za) == 0.0 || cabs(zb) == 0.0 {
        Complex::new(1.0, 0.0)
    } else {
        (za / cabs(za)) / (zb / cabs(zb))
    };
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m, (x, y)| m.max(cabs(x - y * phase)))
}
