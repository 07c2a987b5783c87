use alloc::vec::Vec;

use super::{FermionError, ReducedCoefficients, SpinHamiltonian};
use crate::hilbert::{commutator, max_abs_diff, CMatrix, Pauli, PauliString, PauliTerm};

/// Largest commutator entry tolerated between members of one group.
const GROUP_COMMUTATOR_TOL: f64 = 1e-12;

/// The fourteen-term qubit Hamiltonian of H₂ in a minimal basis.
///
/// Terms are, in order: `Z_i` (i = 1..4), `Z_iZ_j` (pairs in lexicographic
/// order), then `XYYX`, `YXXY`, `XXYY`, `YYXX`. Constant parts are omitted.
pub fn build_h2_spin_hamiltonian(c: &ReducedCoefficients) -> SpinHamiltonian {
    let [h11, h22, h33, h44] = c.diagonal();
    let (ha, hb, hc, hd) = (c.ha, c.hb, c.hc, c.hd);
    let z = [
        4.0 * h11 + 2.0 * ha + 4.0 * hc - hd,
        4.0 * h22 + 2.0 * ha + 4.0 * hc - hd,
        4.0 * h33 + 2.0 * hb + 4.0 * hc - hd,
        4.0 * h44 + 2.0 * hb + 4.0 * hc - hd,
    ];
    let zz = [
        ((0, 1), 2.0 * ha),
        ((0, 2), 2.0 * hc - hd),
        ((0, 3), 2.0 * hc),
        ((1, 2), 2.0 * hc),
        ((1, 3), 2.0 * hc - hd),
        ((2, 3), 2.0 * hb),
    ];
    let four = [
        ("XYYX", 2.0 * hd),
        ("YXXY", 2.0 * hd),
        ("XXYY", -2.0 * hd),
        ("YYXX", -2.0 * hd),
    ];

    let mut terms = Vec::with_capacity(14);
    for (q, w) in z.into_iter().enumerate() {
        terms.push(PauliTerm::new(
            w / 8.0,
            PauliString::with(4, Pauli::Z, &[q]),
        ));
    }
    for ((a, b), w) in zz {
        terms.push(PauliTerm::new(
            w / 8.0,
            PauliString::with(4, Pauli::Z, &[a, b]),
        ));
    }
    for (s, w) in four {
        terms.push(PauliTerm::new(
            w / 8.0,
            PauliString::parse(s).expect("valid literal"),
        ));
    }
    SpinHamiltonian::new(4, terms, 0.0).expect("well-formed terms")
}

/// Splits the H₂ Hamiltonian into its diagonal and four-body groups.
///
/// Terms with an exactly zero weight are dropped; each group is checked to
/// be mutually commuting.
pub fn partition_h2_terms(
    h: &SpinHamiltonian,
) -> Result<(SpinHamiltonian, SpinHamiltonian), FermionError> {
    let mut diag = Vec::new();
    let mut off = Vec::new();
    for (k, t) in h.terms().iter().enumerate() {
        if t.coefficient == 0.0 {
            continue;
        }
        if t.string.is_diagonal() {
            diag.push(k);
        } else {
            off.push(k);
        }
    }
    let h1 = h.select(&diag);
    let h2 = h.select(&off);
    check_commuting(&h1, &diag)?;
    check_commuting(&h2, &off)?;
    Ok((h1, h2))
}

fn check_commuting(group: &SpinHamiltonian, original: &[usize]) -> Result<(), FermionError> {
    let mats: Vec<CMatrix> = group.terms().iter().map(|t| t.matrix()).collect();
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            let c = commutator(&mats[a], &mats[b]);
            let zero = CMatrix::zeros(c.nrows(), c.ncols());
            if max_abs_diff(&c, &zero) > GROUP_COMMUTATOR_TOL {
                return Err(FermionError::NonCommutingGroup(original[a], original[b]));
            }
        }
    }
    Ok(())
}
