use alloc::collections::BTreeMap;
use alloc::format;
use core::fmt;

use super::{FermionError, CLASS_AGREEMENT_TOL, INTEGRAL_HERMITICITY_TOL};

type Pair = (usize, usize);

/// One- and two-electron integrals `h_ij`, `h_ijkl` over spin orbitals.
///
/// The two-body entry `[i, j, k, l]` multiplies `c†_i c†_j c_k c_l`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ElectronicIntegrals {
    n_orbitals: usize,
    one_body: BTreeMap<(usize, usize), f64>,
    two_body: BTreeMap<[usize; 4], f64>,
}

impl ElectronicIntegrals {
    pub fn new(n_orbitals: usize) -> Self {
        Self {
            n_orbitals,
            ..Default::default()
        }
    }

    pub fn n_orbitals(&self) -> usize {
        self.n_orbitals
    }

    fn check_index(&self, i: usize) -> Result<(), FermionError> {
        if (1..=self.n_orbitals).contains(&i) {
            Ok(())
        } else {
            Err(FermionError::IndexOutOfRange {
                index: i,
                n: self.n_orbitals,
            })
        }
    }

    pub fn set_one_body(&mut self, i: usize, j: usize, value: f64) -> Result<(), FermionError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if !value.is_finite() {
            return Err(FermionError::NonFinite(format!("h_{i}{j}")));
        }
        self.one_body.insert((i, j), value);
        Ok(())
    }

    pub fn set_two_body(&mut self, idx: [usize; 4], value: f64) -> Result<(), FermionError> {
        for &i in &idx {
            self.check_index(i)?;
        }
        if !value.is_finite() {
            return Err(FermionError::NonFinite(format!("h_{}", label(idx))));
        }
        self.two_body.insert(idx, value);
        Ok(())
    }

    pub fn one_body(&self, i: usize, j: usize) -> Option<f64> {
        self.one_body.get(&(i, j)).copied()
    }

    pub fn two_body(&self, idx: [usize; 4]) -> Option<f64> {
        self.two_body.get(&idx).copied()
    }

    pub fn one_body_entries(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.one_body.iter().map(|(&k, &v)| (k, v))
    }

    pub fn two_body_entries(&self) -> impl Iterator<Item = ([usize; 4], f64)> + '_ {
        self.two_body.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.one_body.is_empty() && self.two_body.is_empty()
    }

    /// Checks that the encoded operator is Hermitian.
    ///
    /// One-body entries must satisfy `h_ij = h_ji`. Two-body entries are
    /// compared after normal-ordering each `c†_i c†_j c_k c_l` to a canonical
    /// key (ascending creation pair, ascending annihilation pair, sign from
    /// the reordering), so a term listed once in a self-adjoint form such as
    /// `h_1313` does not need a separately listed partner.
    pub fn check_hermiticity(&self) -> Result<(), FermionError> {
        for (&(i, j), &v) in &self.one_body {
            let w = self.one_body.get(&(j, i)).copied().unwrap_or(0.0);
            if !agree(v, w) {
                return Err(FermionError::NotHermitian(format!(
                    "h_{i}{j} = {v} but h_{j}{i} = {w}"
                )));
            }
        }
        let mut canonical: BTreeMap<(Pair, Pair), f64> = BTreeMap::new();
        for (&[i, j, k, l], &v) in &self.two_body {
            if i == j || k == l {
                continue;
            }
            let mut sign = 1.0;
            let cre = if i < j {
                (i, j)
            } else {
                sign = -sign;
                (j, i)
            };
            let ann = if k < l {
                (k, l)
            } else {
                sign = -sign;
                (l, k)
            };
            *canonical.entry((cre, ann)).or_insert(0.0) += sign * v;
        }
        for (&(cre, ann), &v) in &canonical {
            let w = canonical.get(&(ann, cre)).copied().unwrap_or(0.0);
            if !agree(v, w) {
                return Err(FermionError::NotHermitian(format!(
                    "c†{}c†{}c{}c{} has weight {v} but its adjoint has {w}",
                    cre.0, cre.1, ann.0, ann.1
                )));
            }
        }
        Ok(())
    }

    /// Integral table holding exactly the diagonal one-body terms and the
    /// members of the four H₂ symmetry classes.
    pub fn from_reduced(c: &ReducedCoefficients) -> Self {
        let mut ints = Self::new(4);
        for (i, v) in [c.h11, c.h22, c.h33, c.h44].into_iter().enumerate() {
            ints.one_body.insert((i + 1, i + 1), v);
        }
        for class in SymmetryClass::ALL {
            let v = c.class_value(class);
            for &idx in class.members() {
                ints.two_body.insert(idx, v);
            }
        }
        ints
    }
}

fn agree(a: f64, b: f64) -> bool {
    (a - b).abs() <= INTEGRAL_HERMITICITY_TOL * a.abs().max(b.abs()).max(1.0)
}

fn label(idx: [usize; 4]) -> alloc::string::String {
    format!("{}{}{}{}", idx[0], idx[1], idx[2], idx[3])
}

/// The four two-electron coefficient classes of the H₂ Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryClass {
    A,
    B,
    C,
    D,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 4] = [
        SymmetryClass::A,
        SymmetryClass::B,
        SymmetryClass::C,
        SymmetryClass::D,
    ];

    pub fn members(self) -> &'static [[usize; 4]] {
        match self {
            SymmetryClass::A => &[[1, 2, 2, 1], [2, 1, 1, 2]],
            SymmetryClass::B => &[[3, 4, 4, 3], [4, 3, 3, 4]],
            SymmetryClass::C => &[
                [1, 3, 3, 1],
                [3, 1, 1, 3],
                [1, 4, 4, 1],
                [4, 1, 1, 4],
                [2, 3, 3, 2],
                [3, 2, 2, 3],
                [2, 4, 4, 2],
                [4, 2, 2, 4],
            ],
            SymmetryClass::D => &[
                [1, 2, 4, 3],
                [2, 1, 3, 4],
                [1, 4, 2, 3],
                [4, 1, 3, 2],
                [2, 3, 1, 4],
                [3, 2, 4, 1],
                [3, 4, 2, 1],
                [4, 3, 1, 2],
                [1, 3, 1, 3],
                [2, 4, 2, 4],
            ],
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            SymmetryClass::A => 'A',
            SymmetryClass::B => 'B',
            SymmetryClass::C => 'C',
            SymmetryClass::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// Diagonal one-body terms and the class values `h_A … h_D`, atomic units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ReducedCoefficients {
    pub h11: f64,
    pub h22: f64,
    pub h33: f64,
    pub h44: f64,
    pub ha: f64,
    pub hb: f64,
    pub hc: f64,
    pub hd: f64,
}

impl ReducedCoefficients {
    pub fn class_value(&self, class: SymmetryClass) -> f64 {
        match class {
            SymmetryClass::A => self.ha,
            SymmetryClass::B => self.hb,
            SymmetryClass::C => self.hc,
            SymmetryClass::D => self.hd,
        }
    }

    pub fn diagonal(&self) -> [f64; 4] {
        [self.h11, self.h22, self.h33, self.h44]
    }

    pub fn is_finite(&self) -> bool {
        [
            self.h11, self.h22, self.h33, self.h44, self.ha, self.hb, self.hc, self.hd,
        ]
        .iter()
        .all(|v| v.is_finite())
    }
}

/// Reads `h_ii` and the four class values, checking each class is consistent.
pub fn derive_reduced_coeffs(
    ints: &ElectronicIntegrals,
) -> Result<ReducedCoefficients, FermionError> {
    if ints.n_orbitals() != 4 {
        return Err(FermionError::WrongOrbitalCount(ints.n_orbitals()));
    }
    let mut diag = [0.0; 4];
    for (i, d) in diag.iter_mut().enumerate() {
        *d = ints
            .one_body(i + 1, i + 1)
            .ok_or_else(|| FermionError::MissingEntry(format!("h_{0}{0}", i + 1)))?;
    }
    let mut class_values = [0.0; 4];
    for (slot, class) in class_values.iter_mut().zip(SymmetryClass::ALL) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &idx in class.members() {
            let v = ints
                .two_body(idx)
                .ok_or_else(|| FermionError::MissingEntry(format!("h_{}", label(idx))))?;
            lo = lo.min(v);
            hi = hi.max(v);
        }
        let spread = hi - lo;
        let scale = lo.abs().max(hi.abs()).max(1.0);
        if spread > CLASS_AGREEMENT_TOL * scale {
            return Err(FermionError::ClassDisagreement { class, spread });
        }
        *slot = ints.two_body(class.members()[0]).unwrap_or_default();
    }
    Ok(ReducedCoefficients {
        h11: diag[0],
        h22: diag[1],
        h33: diag[2],
        h44: diag[3],
        ha: class_values[0],
        hb: class_values[1],
        hc: class_values[2],
        hd: class_values[3],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReducedCoefficients {
        ReducedCoefficients {
            h11: -1.2,
            h22: -1.2,
            h33: -0.4,
            h44: -0.4,
            ha: 0.674,
            hb: 0.69,
            hc: 0.66,
            hd: 0.18,
        }
    }

    #[test]
    fn class_read_off() {
        let ints = ElectronicIntegrals::from_reduced(&sample());
        let c = derive_reduced_coeffs(&ints).unwrap();
        assert_eq!(c.ha, 0.674);
        assert_eq!(c, sample());
    }

    #[test]
    fn class_disagreement_names_class() {
        let mut ints = ElectronicIntegrals::from_reduced(&sample());
        ints.set_two_body([1, 3, 3, 1], 0.66).unwrap();
        ints.set_two_body([3, 1, 1, 3], 0.60).unwrap();
        match derive_reduced_coeffs(&ints) {
            Err(FermionError::ClassDisagreement {
                class: SymmetryClass::C,
                spread,
            }) => {
                assert!((spread - 0.06).abs() < 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_entry_is_reported() {
        let mut ints = ElectronicIntegrals::new(4);
        for i in 1..=4 {
            ints.set_one_body(i, i, -1.0).unwrap();
        }
        assert!(matches!(
            derive_reduced_coeffs(&ints),
            Err(FermionError::MissingEntry(_))
        ));
        assert!(matches!(
            derive_reduced_coeffs(&ElectronicIntegrals::new(3)),
            Err(FermionError::WrongOrbitalCount(3))
        ));
    }

    #[test]
    fn index_validation() {
        let mut ints = ElectronicIntegrals::new(4);
        assert!(matches!(
            ints.set_one_body(0, 1, 1.0),
            Err(FermionError::IndexOutOfRange { index: 0, .. })
        ));
        assert!(matches!(
            ints.set_two_body([1, 2, 3, 5], 1.0),
            Err(FermionError::IndexOutOfRange { index: 5, .. })
        ));
        assert!(matches!(
            ints.set_one_body(1, 1, f64::NAN),
            Err(FermionError::NonFinite(_))
        ));
    }

    #[test]
    fn hermiticity_of_class_tables() {
        ElectronicIntegrals::from_reduced(&sample())
            .check_hermiticity()
            .unwrap();
    }

    #[test]
    fn hermiticity_violations() {
        let mut ints = ElectronicIntegrals::new(2);
        ints.set_one_body(1, 2, 0.3).unwrap();
        assert!(matches!(
            ints.check_hermiticity(),
            Err(FermionError::NotHermitian(_))
        ));
        ints.set_one_body(2, 1, 0.3).unwrap();
        ints.check_hermiticity().unwrap();

        let mut ints = ElectronicIntegrals::from_reduced(&sample());
        ints.set_two_body([1, 2, 4, 3], 0.5).unwrap();
        assert!(matches!(
            ints.check_hermiticity(),
            Err(FermionError::NotHermitian(_))
        ));
    }
}
