use alloc::vec;
use alloc::vec::Vec;

use nalgebra::Complex;
use num_traits::Float;

use super::linalg::{hermiticity_deviation, unitarity_deviation};
use super::{
    commutator, spectral_norm, CMatrix, HermitianEigen, HilbertError, HybridRegister, Pauli,
    PauliTerm, HERMITICITY_TOL, UNITARITY_TOL,
};

/// Operator on one bosonic mode, truncated to its register dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BosonOp {
    /// `b`, with ⟨n|b|n+1⟩ = √(n+1).
    Lower,
    /// `b†`
    Raise,
    /// `b†b`
    Number,
    /// `b + b†`
    Quadrature,
}

impl BosonOp {
    pub fn matrix(self, dim: usize) -> CMatrix {
        let mut b = CMatrix::zeros(dim, dim);
        for n in 0..dim.saturating_sub(1) {
            b[(n, n + 1)] = Complex::new(Float::sqrt((n + 1) as f64), 0.0);
        }
        match self {
            BosonOp::Lower => b,
            BosonOp::Raise => b.adjoint(),
            BosonOp::Number => CMatrix::from_diagonal(&nalgebra::DVector::from_fn(dim, |n, _| {
                Complex::new(n as f64, 0.0)
            })),
            BosonOp::Quadrature => &b + b.adjoint(),
        }
    }
}

/// One local factor of a product operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Pauli { qubit: usize, pauli: Pauli },
    Boson { mode: usize, op: BosonOp },
}

/// `coefficient · Π factors`, factors multiplied left to right.
#[derive(Debug, Clone, PartialEq)]
pub struct OpTerm {
    pub coefficient: f64,
    pub factors: Vec<Factor>,
}

impl OpTerm {
    pub fn new(coefficient: f64, factors: Vec<Factor>) -> Self {
        Self {
            coefficient,
            factors,
        }
    }

    pub fn identity(coefficient: f64) -> Self {
        Self {
            coefficient,
            factors: Vec::new(),
        }
    }

    /// Lifts a Pauli term onto the qubit part of a register.
    pub fn from_pauli(term: &PauliTerm) -> Self {
        let factors = term
            .string
            .axes()
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != Pauli::I)
            .map(|(qubit, &pauli)| Factor::Pauli { qubit, pauli })
            .collect();
        Self {
            coefficient: term.coefficient,
            factors,
        }
    }
}

/// Dense matrix acting on a whole register.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    register: HybridRegister,
    matrix: CMatrix,
}

impl DenseOperator {
    pub fn new(register: HybridRegister, matrix: CMatrix) -> Result<Self, HilbertError> {
        let dim = register.dim();
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(HilbertError::DimensionMismatch {
                expected: dim,
                found: matrix.nrows(),
            });
        }
        Ok(Self { register, matrix })
    }

    pub fn zeros(register: HybridRegister) -> Self {
        let dim = register.dim();
        Self {
            register,
            matrix: CMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(register: HybridRegister) -> Self {
        let dim = register.dim();
        Self {
            register,
            matrix: CMatrix::identity(dim, dim),
        }
    }

    pub fn from_pauli_terms(
        register: HybridRegister,
        terms: &[PauliTerm],
    ) -> Result<Self, HilbertError> {
        let terms: Vec<OpTerm> = terms.iter().map(OpTerm::from_pauli).collect();
        build_dense(&terms, &register)
    }

    pub fn register(&self) -> &HybridRegister {
        &self.register
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn hermiticity_deviation(&self) -> f64 {
        hermiticity_deviation(&self.matrix)
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_deviation() <= HERMITICITY_TOL
    }

    pub fn is_unitary(&self) -> bool {
        unitarity_deviation(&self.matrix) <= UNITARITY_TOL
    }

    pub fn eigen(&self) -> Result<HermitianEigen, HilbertError> {
        HermitianEigen::new(&self.matrix)
    }

    /// `exp(-i H t)`.
    pub fn propagator(&self, t: f64) -> Result<DenseOperator, HilbertError> {
        if !t.is_finite() {
            return Err(HilbertError::NonFiniteTime);
        }
        let u = self.eigen()?.propagator(t);
        Ok(Self {
            register: self.register.clone(),
            matrix: u,
        })
    }

    pub fn commutator(&self, other: &DenseOperator) -> Result<DenseOperator, HilbertError> {
        self.check_same(other)?;
        Ok(Self {
            register: self.register.clone(),
            matrix: commutator(&self.matrix, &other.matrix),
        })
    }

    pub fn spectral_norm(&self) -> f64 {
        spectral_norm(&self.matrix)
    }

    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator, HilbertError> {
        self.check_same(other)?;
        Ok(Self {
            register: self.register.clone(),
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn scale(&self, s: f64) -> DenseOperator {
        Self {
            register: self.register.clone(),
            matrix: &self.matrix * Complex::new(s, 0.0),
        }
    }

    /// Removes `Tr(H)/dim · I`.
    pub fn traceless(&self) -> DenseOperator {
        let dim = self.dim().max(1);
        let shift = self.matrix.trace() / Complex::new(dim as f64, 0.0);
        let mut m = self.matrix.clone();
        for k in 0..self.dim() {
            m[(k, k)] -= shift;
        }
        Self {
            register: self.register.clone(),
            matrix: m,
        }
    }

    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        super::linalg::max_abs_diff(&self.matrix, &other.matrix)
    }

    fn check_same(&self, other: &DenseOperator) -> Result<(), HilbertError> {
        if self.register != other.register {
            return Err(HilbertError::RegisterMismatch);
        }
        Ok(())
    }
}

/// Realizes a list of product terms as one dense matrix on `register`.
pub fn build_dense(
    terms: &[OpTerm],
    register: &HybridRegister,
) -> Result<DenseOperator, HilbertError> {
    let dim = register.dim();
    let n_sites = register.n_qubits() + register.n_modes();
    let mut h = CMatrix::zeros(dim, dim);
    for (t, term) in terms.iter().enumerate() {
        if !term.coefficient.is_finite() {
            return Err(HilbertError::NonFinite(t));
        }
        // Per-site local matrices; None means identity.
        let mut locals: Vec<Option<CMatrix>> = vec![None; n_sites];
        for factor in &term.factors {
            let (site, m) = match *factor {
                Factor::Pauli { qubit, pauli } => {
                    register.check_qubit(qubit)?;
                    (qubit, pauli.matrix())
                }
                Factor::Boson { mode, op } => {
                    register.check_mode(mode)?;
                    (
                        register.n_qubits() + mode,
                        op.matrix(register.mode_dim(mode)),
                    )
                }
            };
            locals[site] = Some(match locals[site].take() {
                Some(prev) => prev * m,
                None => m,
            });
        }
        let sites: Vec<(usize, usize, CMatrix)> = locals
            .into_iter()
            .enumerate()
            .filter_map(|(s, m)| {
                m.map(|m| {
                    if s < register.n_qubits() {
                        (register.qubit_stride(s), 2, m)
                    } else {
                        let mode = s - register.n_qubits();
                        (register.mode_stride(mode), register.mode_dim(mode), m)
                    }
                })
            })
            .collect();
        let coeff = Complex::new(term.coefficient, 0.0);
        let mut frontier: Vec<(usize, Complex<f64>)> = Vec::new();
        let mut next: Vec<(usize, Complex<f64>)> = Vec::new();
        for col in 0..dim {
            frontier.clear();
            frontier.push((col, coeff));
            for (stride, d, m) in &sites {
                next.clear();
                for &(idx, amp) in &frontier {
                    let v = (idx / stride) % d;
                    let base = idx - v * stride;
                    for u in 0..*d {
                        let e = m[(u, v)];
                        if e.re != 0.0 || e.im != 0.0 {
                            next.push((base + u * stride, amp * e));
                        }
                    }
                }
                core::mem::swap(&mut frontier, &mut next);
            }
            for &(row, amp) in &frontier {
                h[(row, col)] += amp;
            }
        }
    }
    Ok(DenseOperator {
        register: register.clone(),
        matrix: h,
    })
}
