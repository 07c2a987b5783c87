use alloc::vec::Vec;

use nalgebra::Complex;

use super::linalg::unitarity_deviation;
use super::{
    CMatrix, CVector, DenseOperator, HilbertError, HybridRegister, C64, EXPECTATION_RESIDUE_TOL,
    NORM_TOL, UNITARITY_TOL,
};

/// Normalized amplitude vector over a hybrid register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    register: HybridRegister,
    amplitudes: CVector,
}

impl StateVector {
    /// Basis state with flat index `index`.
    pub fn basis(register: HybridRegister, index: usize) -> Result<Self, HilbertError> {
        let dim = register.dim();
        if index >= dim {
            return Err(HilbertError::BasisIndex { index, dim });
        }
        let mut amplitudes = CVector::zeros(dim);
        amplitudes[index] = Complex::new(1.0, 0.0);
        Ok(Self {
            register,
            amplitudes,
        })
    }

    /// Product basis state from qubit values and Fock occupations.
    pub fn product(
        register: HybridRegister,
        bits: &[u8],
        fock: &[usize],
    ) -> Result<Self, HilbertError> {
        let index = register.index_of(bits, fock)?;
        Self::basis(register, index)
    }

    /// Wraps `amplitudes`, which must already have unit norm.
    pub fn from_amplitudes(
        register: HybridRegister,
        amplitudes: CVector,
    ) -> Result<Self, HilbertError> {
        if amplitudes.len() != register.dim() {
            return Err(HilbertError::DimensionMismatch {
                expected: register.dim(),
                found: amplitudes.len(),
            });
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORM_TOL * 1e2 {
            return Err(HilbertError::NotNormalized(norm));
        }
        Ok(Self {
            register,
            amplitudes,
        })
    }

    /// Wraps and rescales `amplitudes` to unit norm.
    pub fn normalized(register: HybridRegister, amplitudes: CVector) -> Result<Self, HilbertError> {
        if amplitudes.len() != register.dim() {
            return Err(HilbertError::DimensionMismatch {
                expected: register.dim(),
                found: amplitudes.len(),
            });
        }
        let norm = amplitudes.norm();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(HilbertError::NotNormalized(norm));
        }
        Ok(Self {
            register,
            amplitudes: amplitudes / Complex::new(norm, 0.0),
        })
    }

    pub fn register(&self) -> &HybridRegister {
        &self.register
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn inner(&self, other: &StateVector) -> Result<C64, HilbertError> {
        if self.register != other.register {
            return Err(HilbertError::RegisterMismatch);
        }
        Ok(self.amplitudes.dotc(&other.amplitudes))
    }

    /// Multiplies every amplitude by `phase`, which must have unit modulus.
    pub fn with_global_phase(&self, phase: C64) -> Self {
        Self {
            register: self.register.clone(),
            amplitudes: &self.amplitudes * phase,
        }
    }

    /// Applies a full-register matrix.
    pub fn apply_matrix(&self, u: &CMatrix) -> Result<Self, HilbertError> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(HilbertError::DimensionMismatch {
                expected: self.dim(),
                found: u.nrows(),
            });
        }
        Ok(Self {
            register: self.register.clone(),
            amplitudes: u * &self.amplitudes,
        })
    }

    /// Applies `u` to the listed qubits, identity elsewhere.
    ///
    /// `targets[0]` is the most significant qubit of `u`'s own basis.
    pub fn apply_gate(&self, targets: &[usize], u: &CMatrix) -> Result<Self, HilbertError> {
        check_gate(&self.register, targets, u)?;
        let dev = unitarity_deviation(u);
        if dev > UNITARITY_TOL {
            return Err(HilbertError::NotUnitary(dev));
        }
        let mut amplitudes = self.amplitudes.clone();
        apply_local(&self.register, amplitudes.as_mut_slice(), targets, u);
        Ok(Self {
            register: self.register.clone(),
            amplitudes,
        })
    }
}

pub(crate) fn check_gate(
    register: &HybridRegister,
    targets: &[usize],
    u: &CMatrix,
) -> Result<(), HilbertError> {
    for (k, &t) in targets.iter().enumerate() {
        register.check_qubit(t)?;
        if targets[..k].contains(&t) {
            return Err(HilbertError::DuplicateTarget(t));
        }
    }
    let expected = 1usize << targets.len();
    if u.nrows() != expected || u.ncols() != expected {
        return Err(HilbertError::GateShape {
            targets: targets.len(),
            found: u.nrows(),
        });
    }
    Ok(())
}

/// In-place application of a small matrix to target qubits. No validation.
pub(crate) fn apply_local(
    register: &HybridRegister,
    amps: &mut [C64],
    targets: &[usize],
    u: &CMatrix,
) {
    let k = targets.len();
    let block = 1usize << k;
    let strides: Vec<usize> = targets.iter().map(|&t| register.qubit_stride(t)).collect();
    let offsets: Vec<usize> = (0..block)
        .map(|s| {
            (0..k)
                .filter(|&b| (s >> (k - 1 - b)) & 1 == 1)
                .map(|b| strides[b])
                .sum()
        })
        .collect();
    let mut buf = alloc::vec![Complex::new(0.0, 0.0); block];
    for base in 0..amps.len() {
        if strides.iter().any(|&st| (base / st) % 2 == 1) {
            continue;
        }
        for (s, &off) in offsets.iter().enumerate() {
            buf[s] = amps[base + off];
        }
        for (r, &off) in offsets.iter().enumerate() {
            let mut acc = Complex::new(0.0, 0.0);
            for c in 0..block {
                acc += u[(r, c)] * buf[c];
            }
            amps[base + off] = acc;
        }
    }
}

/// `exp(-i H t) |ψ⟩` via Hermitian eigendecomposition.
pub fn exact_evolve(
    h: &DenseOperator,
    t: f64,
    state: &StateVector,
) -> Result<StateVector, HilbertError> {
    if !t.is_finite() {
        return Err(HilbertError::NonFiniteTime);
    }
    if h.register() != state.register() {
        return Err(HilbertError::RegisterMismatch);
    }
    let eig = h.eigen()?;
    Ok(StateVector {
        register: state.register.clone(),
        amplitudes: eig.evolve(t, &state.amplitudes),
    })
}

/// `⟨ψ|O|ψ⟩` for Hermitian `O`.
pub fn expectation(state: &StateVector, op: &DenseOperator) -> Result<f64, HilbertError> {
    if op.dim() != state.dim() {
        return Err(HilbertError::DimensionMismatch {
            expected: state.dim(),
            found: op.dim(),
        });
    }
    let v = state.amplitudes.dotc(&(op.matrix() * &state.amplitudes));
    if v.im.abs() > EXPECTATION_RESIDUE_TOL {
        return Err(HilbertError::ImaginaryResidue(v.im.abs()));
    }
    Ok(v.re)
}

/// `|⟨a|b⟩|²`, clamped to [0, 1].
pub fn fidelity(a: &StateVector, b: &StateVector) -> Result<f64, HilbertError> {
    if a.dim() != b.dim() {
        return Err(HilbertError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let overlap = a.amplitudes.dotc(&b.amplitudes);
    Ok(overlap.norm_sqr().clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{cis, HermitianEigen, Pauli, PauliString, PauliTerm};
    use alloc::vec;
    use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

    fn qubits(n: usize) -> HybridRegister {
        HybridRegister::qubits(n)
    }

    #[test]
    fn identity_gate_is_noop() {
        let psi = StateVector::product(qubits(3), &[1, 0, 1], &[]).unwrap();
        let out = psi.apply_gate(&[1, 2], &CMatrix::identity(4, 4)).unwrap();
        assert_eq!(out, psi);
    }

    #[test]
    fn sigma_x_flips_first_qubit() {
        let psi = StateVector::product(qubits(4), &[0, 0, 0, 0], &[]).unwrap();
        let out = psi.apply_gate(&[0], &Pauli::X.matrix()).unwrap();
        let expected = StateVector::product(qubits(4), &[1, 0, 0, 0], &[]).unwrap();
        assert_eq!(out, expected);
    }

    #[test]
    fn xx_quarter_turn_makes_bell_pair() {
        // Oracle: exp(-i π/4 XX) = cos(π/4) I - i sin(π/4) XX, so
        // |00⟩ → (|00⟩ - i|11⟩)/√2.
        let xx = PauliString::parse("XX").unwrap().matrix();
        let u = HermitianEigen::new(&xx).unwrap().propagator(FRAC_PI_4);
        let psi = StateVector::product(qubits(2), &[0, 0], &[]).unwrap();
        let out = psi.apply_gate(&[0, 1], &u).unwrap();
        let a = out.amplitudes();
        assert!((a[0] - Complex::new(FRAC_1_SQRT_2, 0.0)).norm_sqr() < 1e-28);
        assert!((a[3] - Complex::new(0.0, -FRAC_1_SQRT_2)).norm_sqr() < 1e-28);
        assert!(a[1].norm_sqr() + a[2].norm_sqr() < 1e-28);
    }

    #[test]
    fn gate_target_order_matters() {
        // CNOT-like permutation: control is targets[0]
        let mut p = CMatrix::identity(4, 4);
        p.swap_rows(2, 3);
        let psi = StateVector::product(qubits(2), &[0, 1], &[]).unwrap();
        let flipped = psi.apply_gate(&[1, 0], &p).unwrap();
        let expected = StateVector::product(qubits(2), &[1, 1], &[]).unwrap();
        assert_eq!(flipped, expected);
    }

    #[test]
    fn gate_errors() {
        let psi = StateVector::basis(qubits(2), 0).unwrap();
        let mut bad = CMatrix::identity(2, 2);
        bad[(0, 0)] = Complex::new(2.0, 0.0);
        assert!(matches!(
            psi.apply_gate(&[0], &bad),
            Err(HilbertError::NotUnitary(_))
        ));
        assert!(matches!(
            psi.apply_gate(&[2], &Pauli::X.matrix()),
            Err(HilbertError::QubitOutOfRange { .. })
        ));
        assert!(matches!(
            psi.apply_gate(&[1, 1], &CMatrix::identity(4, 4)),
            Err(HilbertError::DuplicateTarget(1))
        ));
        assert!(matches!(
            psi.apply_gate(&[0, 1], &Pauli::X.matrix()),
            Err(HilbertError::GateShape { .. })
        ));
    }

    #[test]
    fn gate_acts_on_qubits_of_hybrid_register() {
        let r = HybridRegister::new(2, vec![3]).unwrap();
        let psi = StateVector::product(r.clone(), &[0, 1], &[2]).unwrap();
        let out = psi.apply_gate(&[0], &Pauli::X.matrix()).unwrap();
        assert_eq!(out, StateVector::product(r, &[1, 1], &[2]).unwrap());
    }

    #[test]
    fn zero_time_evolution_is_identity() {
        let h = DenseOperator::from_pauli_terms(
            qubits(2),
            &[PauliTerm::new(0.9, PauliString::parse("XY").unwrap())],
        )
        .unwrap();
        let psi = StateVector::product(qubits(2), &[1, 0], &[]).unwrap();
        let out = exact_evolve(&h, 0.0, &psi).unwrap();
        assert!((out.amplitudes() - psi.amplitudes()).norm() < 1e-14);
    }

    #[test]
    fn half_sigma_z_rotation_phases() {
        let h = DenseOperator::from_pauli_terms(
            qubits(1),
            &[PauliTerm::new(0.5, PauliString::parse("Z").unwrap())],
        )
        .unwrap();
        let zero = exact_evolve(&h, PI, &StateVector::basis(qubits(1), 0).unwrap()).unwrap();
        let one = exact_evolve(&h, PI, &StateVector::basis(qubits(1), 1).unwrap()).unwrap();
        // σz|0⟩ = -|0⟩ → e^{+iπ/2}; σz|1⟩ = +|1⟩ → e^{-iπ/2}
        assert!((zero.amplitudes()[0] - cis(PI / 2.0)).norm_sqr() < 1e-28);
        assert!((one.amplitudes()[1] - cis(-PI / 2.0)).norm_sqr() < 1e-28);
    }

    #[test]
    fn expectation_examples() {
        let r = qubits(4);
        let psi = StateVector::product(r.clone(), &[1, 1, 0, 0], &[]).unwrap();
        let z1 = DenseOperator::from_pauli_terms(
            r.clone(),
            &[PauliTerm::new(1.0, PauliString::with(4, Pauli::Z, &[0]))],
        )
        .unwrap();
        assert!((expectation(&psi, &z1).unwrap() - 1.0).abs() < 1e-15);
        let vac = StateVector::basis(r.clone(), 0).unwrap();
        let x1 = DenseOperator::from_pauli_terms(
            r,
            &[PauliTerm::new(1.0, PauliString::with(4, Pauli::X, &[0]))],
        )
        .unwrap();
        assert_eq!(expectation(&vac, &x1).unwrap(), 0.0);
        let wrong = DenseOperator::zeros(qubits(2));
        assert!(matches!(
            expectation(&vac, &wrong),
            Err(HilbertError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn expectation_rejects_imaginary_residue() {
        let psi = StateVector::normalized(
            qubits(1),
            CVector::from_vec(vec![Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)]),
        )
        .unwrap();
        // σ⁺ is not Hermitian: ⟨+|σ⁺|+⟩ = 1/2 is real, so use iσ⁺.
        let mut m = CMatrix::zeros(2, 2);
        m[(1, 0)] = Complex::new(0.0, 1.0);
        let op = DenseOperator::new(qubits(1), m).unwrap();
        assert!(matches!(
            expectation(&psi, &op),
            Err(HilbertError::ImaginaryResidue(_))
        ));
    }

    #[test]
    fn fidelity_examples() {
        let a = StateVector::basis(qubits(1), 0).unwrap();
        let b = StateVector::basis(qubits(1), 1).unwrap();
        assert_eq!(fidelity(&a, &a).unwrap(), 1.0);
        assert_eq!(fidelity(&a, &b).unwrap(), 0.0);
        assert!(matches!(
            fidelity(&a, &StateVector::basis(qubits(2), 0).unwrap()),
            Err(HilbertError::DimensionMismatch { .. })
        ));
    }
}
