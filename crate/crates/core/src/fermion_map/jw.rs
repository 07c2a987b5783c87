use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use nalgebra::Complex;

use super::{ElectronicIntegrals, FermionError, SpinHamiltonian, COMPLEX_RESIDUE_TOL, DROP_TOL};
use crate::hilbert::{pauli_multiply, Pauli, PauliString, PauliTerm, WeightedPauli, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    Creation,
    Annihilation,
}

/// Jordan-Wigner image of `c†_i` or `c_i` on `n` orbitals (`i` is 1-based).
///
/// `c†_i = σ^z_1 ⋯ σ^z_{i-1} σ⁺_i` with `σ± = (σ^x ± iσ^y)/2`; the result is
/// the X part and the Y part of that expansion.
pub fn jw_ladder(i: usize, n: usize, kind: LadderKind) -> Result<[WeightedPauli; 2], FermionError> {
    if !(1..=n).contains(&i) {
        return Err(FermionError::IndexOutOfRange { index: i, n });
    }
    let q = i - 1;
    let mut x = PauliString::with(n, Pauli::Z, &(0..q).collect::<Vec<_>>());
    let mut y = x.clone();
    x.set(q, Pauli::X);
    y.set(q, Pauli::Y);
    let y_weight = match kind {
        LadderKind::Creation => Complex::new(0.0, 0.5),
        LadderKind::Annihilation => Complex::new(0.0, -0.5),
    };
    Ok([
        WeightedPauli::new(Complex::new(0.5, 0.0), x),
        WeightedPauli::new(y_weight, y),
    ])
}

/// Ordered accumulator of Pauli strings, keyed by first appearance.
struct Collector {
    order: Vec<PauliString>,
    weights: BTreeMap<PauliString, C64>,
}

impl Collector {
    fn new() -> Self {
        Self {
            order: Vec::new(),
            weights: BTreeMap::new(),
        }
    }

    fn add(&mut self, p: WeightedPauli) {
        match self.weights.get_mut(&p.string) {
            Some(w) => *w += p.weight,
            None => {
                self.order.push(p.string.clone());
                self.weights.insert(p.string, p.weight);
            }
        }
    }

    /// Adds `scale · Π ops`, expanding each ladder operator into its two strings.
    fn add_product(&mut self, scale: f64, ops: &[[WeightedPauli; 2]]) {
        let n = ops.len();
        for choice in 0..(1usize << n) {
            let mut acc = ops[0][choice & 1].clone();
            for (k, op) in ops.iter().enumerate().skip(1) {
                acc = pauli_multiply(&acc, &op[(choice >> k) & 1]);
            }
            acc.weight *= Complex::new(scale, 0.0);
            self.add(acc);
        }
    }
}

/// Maps `Σ h_ij c†_i c_j + ½ Σ h_ijkl c†_i c†_j c_k c_l` onto qubits.
///
/// Like strings are collected in order of first appearance; the identity
/// component becomes the scalar offset.
pub fn map_electronic_to_spin(ints: &ElectronicIntegrals) -> Result<SpinHamiltonian, FermionError> {
    ints.check_hermiticity()?;
    let n = ints.n_orbitals();
    let cre = |i| jw_ladder(i, n, LadderKind::Creation);
    let ann = |i| jw_ladder(i, n, LadderKind::Annihilation);
    let mut col = Collector::new();
    for ((i, j), h) in ints.one_body_entries() {
        col.add_product(h, &[cre(i)?, ann(j)?]);
    }
    for ([i, j, k, l], h) in ints.two_body_entries() {
        col.add_product(0.5 * h, &[cre(i)?, cre(j)?, ann(k)?, ann(l)?]);
    }

    let mut offset = 0.0;
    let mut terms = Vec::new();
    for string in col.order {
        let w = col.weights[&string];
        if w.im.abs() > COMPLEX_RESIDUE_TOL {
            return Err(FermionError::ComplexResidue {
                string: string.to_string(),
                residue: w.im.abs(),
            });
        }
        if string.is_identity() {
            offset += w.re;
        } else if w.re.abs() >= DROP_TOL {
            terms.push(PauliTerm::new(w.re, string));
        }
    }
    SpinHamiltonian::new(n, terms, offset)
}
