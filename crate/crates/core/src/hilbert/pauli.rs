use alloc::vec::Vec;
use core::fmt;

use nalgebra::Complex;

use super::{CMatrix, C64};

/// Single-qubit Pauli label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    /// Product `self · other = i^k · p`.
    pub fn product(self, other: Pauli) -> (Phase, Pauli) {
        use Pauli::*;
        match (self, other) {
            (I, p) | (p, I) => (Phase::ONE, p),
            (a, b) if a == b => (Phase::ONE, I),
            (X, Y) => (Phase::I, Z),
            (Y, Z) => (Phase::I, X),
            (Z, X) => (Phase::I, Y),
            (Y, X) => (Phase::MINUS_I, Z),
            (Z, Y) => (Phase::MINUS_I, X),
            (X, Z) => (Phase::MINUS_I, Y),
            _ => unreachable!(),
        }
    }

    /// 2×2 matrix in the `(|0⟩, |1⟩)` basis with σ^z|1⟩ = +|1⟩.
    pub fn matrix(self) -> CMatrix {
        let z = Complex::new(0.0, 0.0);
        let one = Complex::new(1.0, 0.0);
        let i = Complex::new(0.0, 1.0);
        match self {
            Pauli::I => CMatrix::identity(2, 2),
            Pauli::X => CMatrix::from_row_slice(2, 2, &[z, one, one, z]),
            Pauli::Y => CMatrix::from_row_slice(2, 2, &[z, i, -i, z]),
            Pauli::Z => CMatrix::from_row_slice(2, 2, &[-one, z, z, one]),
        }
    }
}

/// A power of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn value(self) -> C64 {
        match self.0 {
            0 => Complex::new(1.0, 0.0),
            1 => Complex::new(0.0, 1.0),
            2 => Complex::new(-1.0, 0.0),
            _ => Complex::new(0.0, -1.0),
        }
    }
}

impl core::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

/// Tensor product of Pauli labels, one per qubit (qubit 0 first).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString {
    axes: Vec<Pauli>,
}

impl PauliString {
    pub fn new(axes: Vec<Pauli>) -> Self {
        Self { axes }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            axes: alloc::vec![Pauli::I; n],
        }
    }

    /// Parses labels like `"XYYX"`; returns `None` on any other character.
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(Pauli::from_char)
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Identity string with `p` placed on the listed qubits.
    pub fn with(n: usize, p: Pauli, qubits: &[usize]) -> Self {
        let mut s = Self::identity(n);
        for &q in qubits {
            s.axes[q] = p;
        }
        s
    }

    pub fn len(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty()
    }

    pub fn axes(&self) -> &[Pauli] {
        &self.axes
    }

    pub fn axis(&self, q: usize) -> Pauli {
        self.axes[q]
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        self.axes[q] = p;
    }

    pub fn is_identity(&self) -> bool {
        self.axes.iter().all(|&p| p == Pauli::I)
    }

    /// True when every factor is I or Z.
    pub fn is_diagonal(&self) -> bool {
        self.axes.iter().all(|&p| matches!(p, Pauli::I | Pauli::Z))
    }

    pub fn weight(&self) -> usize {
        self.axes.iter().filter(|&&p| p != Pauli::I).count()
    }

    pub fn support(&self) -> Vec<usize> {
        self.axes
            .iter()
            .enumerate()
            .filter(|(_, &p)| p != Pauli::I)
            .map(|(q, _)| q)
            .collect()
    }

    /// Product `self · other = phase · string`. Panics on length mismatch.
    pub fn mul(&self, other: &PauliString) -> (Phase, PauliString) {
        assert_eq!(self.len(), other.len(), "Pauli strings of different length");
        let mut phase = Phase::ONE;
        let axes = self
            .axes
            .iter()
            .zip(&other.axes)
            .map(|(&a, &b)| {
                let (k, p) = a.product(b);
                phase = phase * k;
                p
            })
            .collect();
        (phase, PauliString { axes })
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        let anti = self
            .axes
            .iter()
            .zip(&other.axes)
            .filter(|(&a, &b)| a != Pauli::I && b != Pauli::I && a != b)
            .count();
        anti % 2 == 0
    }

    /// Dense `2^n × 2^n` matrix, qubit 0 most significant.
    pub fn matrix(&self) -> CMatrix {
        self.axes
            .iter()
            .fold(CMatrix::identity(1, 1), |acc, p| acc.kronecker(&p.matrix()))
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.axes {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

/// Pauli string with a complex weight.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPauli {
    pub weight: C64,
    pub string: PauliString,
}

impl WeightedPauli {
    pub fn new(weight: C64, string: PauliString) -> Self {
        Self { weight, string }
    }

    pub fn matrix(&self) -> CMatrix {
        self.string.matrix() * self.weight
    }
}

/// Symbolic product of two weighted Pauli strings.
pub fn pauli_multiply(a: &WeightedPauli, b: &WeightedPauli) -> WeightedPauli {
    let (phase, string) = a.string.mul(&b.string);
    WeightedPauli {
        weight: a.weight * b.weight * phase.value(),
        string,
    }
}

/// Real-weighted Pauli string, the building block of spin Hamiltonians.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTerm {
    pub coefficient: f64,
    pub string: PauliString,
}

impl PauliTerm {
    pub fn new(coefficient: f64, string: PauliString) -> Self {
        Self {
            coefficient,
            string,
        }
    }

    pub fn matrix(&self) -> CMatrix {
        self.string.matrix() * Complex::new(self.coefficient, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn close(a: &CMatrix, b: &CMatrix) -> bool {
        (a - b).iter().all(|z| z.norm_sqr() < 1e-24)
    }

    #[test]
    fn x_times_y_is_i_z() {
        let x = WeightedPauli::new(Complex::new(1.0, 0.0), PauliString::parse("X").unwrap());
        let y = WeightedPauli::new(Complex::new(1.0, 0.0), PauliString::parse("Y").unwrap());
        let p = pauli_multiply(&x, &y);
        assert_eq!(p.string, PauliString::parse("Z").unwrap());
        assert_eq!(p.weight, Complex::new(0.0, 1.0));
    }

    #[test]
    fn z_squared_is_identity() {
        let z = WeightedPauli::new(Complex::new(1.0, 0.0), PauliString::parse("Z").unwrap());
        let p = pauli_multiply(&z, &z);
        assert!(p.string.is_identity());
        assert_eq!(p.weight, Complex::new(1.0, 0.0));
    }

    #[test]
    fn matrices_follow_occupied_plus_one_convention() {
        let x = Pauli::X.matrix();
        let y = Pauli::Y.matrix();
        let z = Pauli::Z.matrix();
        assert!(close(&(&x * &y), &(&z * Complex::new(0.0, 1.0))));
        assert_eq!(z[(1, 1)], Complex::new(1.0, 0.0));
        // σ⁺ = (X + iY)/2 = |1⟩⟨0|
        let sp = (&x + &y * Complex::new(0.0, 1.0)) * Complex::new(0.5, 0.0);
        assert_eq!(sp[(1, 0)], Complex::new(1.0, 0.0));
        assert!(sp[(0, 1)].norm_sqr() < 1e-30);
    }

    #[test]
    fn commutation_parity() {
        let a = PauliString::parse("XYYX").unwrap();
        let b = PauliString::parse("XXYY").unwrap();
        let c = PauliString::parse("ZIII").unwrap();
        assert!(a.commutes_with(&b));
        assert!(!a.commutes_with(&c));
        assert_eq!(a.support(), vec![0, 1, 2, 3]);
        assert_eq!(PauliString::with(4, Pauli::Z, &[1, 3]).to_string(), "IZIZ");
    }
}
