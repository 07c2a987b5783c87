use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_4;
use core::fmt;

use nalgebra::Complex;

use super::CircuitError;
use crate::hilbert::{
    CMatrix, DenseOperator, HermitianEigen, HybridRegister, Pauli, PauliString, PauliTerm,
};

/// Gate families. Unless noted, a gate with angle `θ` is `exp(-iθG)` for the
/// listed generator `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    /// `σ^z`; the ±π/4 basis-change rotations.
    Rz,
    /// `σ^y`; the ±π/4 rotations that move ZZ interactions into the XX basis.
    Ry,
    /// `σ^z`; single-qubit terms of the Hamiltonian.
    R,
    /// `σ^zσ^z`.
    Zz,
    /// `σ^xσ^x` with a Hamiltonian-dependent angle.
    Xx,
    /// `σ^xσ^x` with angle ±π/4, produced by expanding MS gates.
    XxFixed,
    /// Mølmer-Sørensen gate `exp(+iθ S_x²)`, `S_x = Σ σ^x`, on all its targets.
    Ms,
    Swap,
    /// `σ^z`; the rotation sandwiched between MS gates.
    Ud,
}

impl GateKind {
    pub const ALL: [GateKind; 9] = [
        GateKind::Rz,
        GateKind::Ry,
        GateKind::R,
        GateKind::Zz,
        GateKind::Xx,
        GateKind::XxFixed,
        GateKind::Ms,
        GateKind::Swap,
        GateKind::Ud,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::Rz => "RZ",
            GateKind::Ry => "RY",
            GateKind::R => "R",
            GateKind::Zz => "ZZ",
            GateKind::Xx => "XX",
            GateKind::XxFixed => "XXF",
            GateKind::Ms => "MS",
            GateKind::Swap => "SWAP",
            GateKind::Ud => "UD",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
    }

    /// Required number of targets, `None` for MS which takes any number ≥ 2.
    pub fn arity(self) -> Option<usize> {
        match self {
            GateKind::Rz | GateKind::Ry | GateKind::R | GateKind::Ud => Some(1),
            GateKind::Zz | GateKind::Xx | GateKind::XxFixed | GateKind::Swap => Some(2),
            GateKind::Ms => None,
        }
    }

    /// Pauli axis the generator is built from; gates sharing an axis commute.
    pub(crate) fn axis(self) -> Option<Pauli> {
        match self {
            GateKind::Rz | GateKind::R | GateKind::Ud | GateKind::Zz => Some(Pauli::Z),
            GateKind::Xx | GateKind::XxFixed | GateKind::Ms => Some(Pauli::X),
            GateKind::Ry => Some(Pauli::Y),
            GateKind::Swap => None,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub angle: f64,
}

impl Gate {
    pub fn new(kind: GateKind, targets: Vec<usize>, angle: f64) -> Result<Self, CircuitError> {
        let ok = match kind.arity() {
            Some(n) => targets.len() == n,
            None => targets.len() >= 2,
        };
        if !ok {
            return Err(CircuitError::TargetCount {
                kind,
                expected: kind.arity().unwrap_or(2),
                found: targets.len(),
            });
        }
        for (k, t) in targets.iter().enumerate() {
            if targets[..k].contains(t) {
                return Err(CircuitError::DuplicateTarget(*t));
            }
        }
        if !angle.is_finite() {
            return Err(CircuitError::NonFiniteAngle);
        }
        let angle = if kind == GateKind::Swap { 0.0 } else { angle };
        Ok(Self {
            kind,
            targets,
            angle,
        })
    }

    pub(crate) fn raw(kind: GateKind, targets: &[usize], angle: f64) -> Self {
        Self {
            kind,
            targets: targets.to_vec(),
            angle,
        }
    }

    pub fn rz(q: usize, angle: f64) -> Self {
        Self::raw(GateKind::Rz, &[q], angle)
    }

    pub fn ry(q: usize, angle: f64) -> Self {
        Self::raw(GateKind::Ry, &[q], angle)
    }

    pub fn r(q: usize, angle: f64) -> Self {
        Self::raw(GateKind::R, &[q], angle)
    }

    pub fn ud(q: usize, angle: f64) -> Self {
        Self::raw(GateKind::Ud, &[q], angle)
    }

    pub fn zz(a: usize, b: usize, angle: f64) -> Self {
        Self::raw(GateKind::Zz, &[a, b], angle)
    }

    pub fn xx(a: usize, b: usize, angle: f64) -> Self {
        Self::raw(GateKind::Xx, &[a, b], angle)
    }

    pub fn xx_fixed(a: usize, b: usize, inverse: bool) -> Self {
        Self::raw(
            GateKind::XxFixed,
            &[a, b],
            if inverse { FRAC_PI_4 } else { -FRAC_PI_4 },
        )
    }

    /// `MS = exp(iπ/8 S_x²)`, or its inverse.
    pub fn ms(targets: &[usize], inverse: bool) -> Self {
        let a = core::f64::consts::FRAC_PI_8;
        Self::raw(GateKind::Ms, targets, if inverse { -a } else { a })
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self::raw(GateKind::Swap, &[a, b], 0.0)
    }

    pub fn arity(&self) -> usize {
        self.targets.len()
    }

    pub fn is_single_qubit(&self) -> bool {
        self.targets.len() == 1
    }

    pub fn is_two_qubit(&self) -> bool {
        self.targets.len() == 2
    }

    /// Same kind on the same qubits with exactly opposite angle.
    pub fn is_inverse_of(&self, other: &Gate) -> bool {
        if self.kind != other.kind || !same_support(&self.targets, &other.targets) {
            return false;
        }
        match self.kind {
            GateKind::Swap => true,
            _ => self.angle == -other.angle,
        }
    }

    /// Conservative commutation test: disjoint supports, or generators on the same Pauli axis.
    pub fn commutes_with(&self, other: &Gate) -> bool {
        if self.targets.iter().all(|t| !other.targets.contains(t)) {
            return true;
        }
        match (self.kind.axis(), other.kind.axis()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    pub fn inverse(&self) -> Gate {
        Gate {
            kind: self.kind,
            targets: self.targets.clone(),
            angle: -self.angle,
        }
    }

    /// Dense unitary on the gate's own targets, `targets[0]` most significant.
    pub fn matrix(&self) -> CMatrix {
        let (c, s) = (
            num_traits::Float::cos(self.angle),
            num_traits::Float::sin(self.angle),
        );
        let rotation = |g: CMatrix| {
            let n = g.nrows();
            CMatrix::identity(n, n) * Complex::new(c, 0.0) - g * Complex::new(0.0, s)
        };
        match self.kind {
            GateKind::Rz | GateKind::R | GateKind::Ud => rotation(Pauli::Z.matrix()),
            GateKind::Ry => rotation(Pauli::Y.matrix()),
            GateKind::Zz => rotation(PauliString::with(2, Pauli::Z, &[0, 1]).matrix()),
            GateKind::Xx | GateKind::XxFixed => {
                rotation(PauliString::with(2, Pauli::X, &[0, 1]).matrix())
            }
            GateKind::Swap => {
                let mut m = CMatrix::zeros(4, 4);
                for (r, col) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
                    m[(r, col)] = Complex::new(1.0, 0.0);
                }
                m
            }
            GateKind::Ms => ms_matrix(self.targets.len(), self.angle),
        }
    }
}

fn same_support(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().all(|t| b.contains(t))
}

/// `exp(iθ S_x²)` on `n` qubits.
fn ms_matrix(n: usize, theta: f64) -> CMatrix {
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let string = if i == j {
                PauliString::identity(n)
            } else {
                PauliString::with(n, Pauli::X, &[i, j])
            };
            terms.push(PauliTerm::new(1.0, string));
        }
    }
    let s2 =
        DenseOperator::from_pauli_terms(HybridRegister::qubits(n), &terms).expect("valid strings");
    HermitianEigen::new(s2.matrix())
        .expect("S_x² is Hermitian")
        .propagator(-theta)
}
