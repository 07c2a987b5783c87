use alloc::vec::Vec;

use super::FermionError;
use crate::hilbert::{DenseOperator, HybridRegister, PauliTerm};

/// Ordered sum of real-weighted Pauli strings plus a scalar offset.
///
/// Term order is significant: it fixes the sequence in which product
/// formulas and circuits exponentiate the terms.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinHamiltonian {
    n_qubits: usize,
    terms: Vec<PauliTerm>,
    scalar_offset: f64,
}

impl SpinHamiltonian {
    pub fn new(
        n_qubits: usize,
        terms: Vec<PauliTerm>,
        scalar_offset: f64,
    ) -> Result<Self, FermionError> {
        for (k, t) in terms.iter().enumerate() {
            if t.string.len() != n_qubits {
                return Err(FermionError::TermLength(k));
            }
            if t.string.is_identity() {
                return Err(FermionError::IdentityTerm(k));
            }
        }
        Ok(Self {
            n_qubits,
            terms,
            scalar_offset,
        })
    }

    pub fn empty(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            terms: Vec::new(),
            scalar_offset: 0.0,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[PauliTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scalar_offset(&self) -> f64 {
        self.scalar_offset
    }

    pub fn register(&self) -> HybridRegister {
        HybridRegister::qubits(self.n_qubits)
    }

    /// Sub-Hamiltonian made of the listed terms, in the listed order, no offset.
    pub fn select(&self, indices: &[usize]) -> SpinHamiltonian {
        SpinHamiltonian {
            n_qubits: self.n_qubits,
            terms: indices.iter().map(|&k| self.terms[k].clone()).collect(),
            scalar_offset: 0.0,
        }
    }

    /// Dense matrix of the Pauli terms; the scalar offset is left out.
    pub fn to_dense(&self) -> DenseOperator {
        DenseOperator::from_pauli_terms(self.register(), &self.terms)
            .expect("term lengths checked at construction")
    }

    pub fn to_dense_with_offset(&self) -> DenseOperator {
        let mut m = self.to_dense().into_matrix();
        for k in 0..m.nrows() {
            m[(k, k)].re += self.scalar_offset;
        }
        DenseOperator::new(self.register(), m).expect("square matrix of register dimension")
    }
}
