use alloc::vec::Vec;

use super::HilbertError;

/// Layout of a register of qubits followed by truncated bosonic modes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HybridRegister {
    n_qubits: usize,
    mode_dims: Vec<usize>,
}

impl HybridRegister {
    pub fn new(n_qubits: usize, mode_dims: Vec<usize>) -> Result<Self, HilbertError> {
        if let Some((mode, &dim)) = mode_dims.iter().enumerate().find(|(_, &d)| d == 0) {
            return Err(HilbertError::EmptyMode { mode, dim });
        }
        Ok(Self {
            n_qubits,
            mode_dims,
        })
    }

    pub fn qubits(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            mode_dims: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_modes(&self) -> usize {
        self.mode_dims.len()
    }

    pub fn mode_dims(&self) -> &[usize] {
        &self.mode_dims
    }

    pub fn mode_dim(&self, mode: usize) -> usize {
        self.mode_dims[mode]
    }

    pub fn bath_dim(&self) -> usize {
        self.mode_dims.iter().product()
    }

    pub fn dim(&self) -> usize {
        (1usize << self.n_qubits) * self.bath_dim()
    }

    /// Distance in the flat index between consecutive values of qubit `q`.
    pub fn qubit_stride(&self, q: usize) -> usize {
        (1usize << (self.n_qubits - 1 - q)) * self.bath_dim()
    }

    pub fn mode_stride(&self, mode: usize) -> usize {
        self.mode_dims[mode + 1..].iter().product()
    }

    pub fn check_qubit(&self, q: usize) -> Result<(), HilbertError> {
        if q < self.n_qubits {
            Ok(())
        } else {
            Err(HilbertError::QubitOutOfRange {
                qubit: q,
                n_qubits: self.n_qubits,
            })
        }
    }

    pub fn check_mode(&self, mode: usize) -> Result<(), HilbertError> {
        if mode < self.mode_dims.len() {
            Ok(())
        } else {
            Err(HilbertError::ModeOutOfRange {
                mode,
                n_modes: self.mode_dims.len(),
            })
        }
    }

    /// Flat index of a product basis state.
    ///
    /// `bits[q]` is the value of qubit `q`, `fock[m]` the occupation of mode `m`.
    pub fn index_of(&self, bits: &[u8], fock: &[usize]) -> Result<usize, HilbertError> {
        if bits.len() != self.n_qubits {
            return Err(HilbertError::DimensionMismatch {
                expected: self.n_qubits,
                found: bits.len(),
            });
        }
        if fock.len() != self.mode_dims.len() {
            return Err(HilbertError::DimensionMismatch {
                expected: self.mode_dims.len(),
                found: fock.len(),
            });
        }
        let mut index = 0;
        for &b in bits {
            index = index * 2 + usize::from(b != 0);
        }
        for (m, (&n, &d)) in fock.iter().zip(&self.mode_dims).enumerate() {
            if n >= d {
                return Err(HilbertError::BasisIndex {
                    index: n,
                    dim: self.mode_dims[m],
                });
            }
            index = index * d + n;
        }
        Ok(index)
    }

    /// Value of qubit `q` in basis state `index`.
    pub fn qubit_value(&self, index: usize, q: usize) -> usize {
        (index / self.qubit_stride(q)) % 2
    }

    pub fn fock_value(&self, index: usize, mode: usize) -> usize {
        (index / self.mode_stride(mode)) % self.mode_dims[mode]
    }
}
