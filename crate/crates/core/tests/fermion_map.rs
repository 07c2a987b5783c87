use nalgebra::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trotterchem_core::fermion_map::{
    build_h2_spin_hamiltonian, derive_reduced_coeffs, h2_sto3g_integrals, jw_ladder,
    map_electronic_to_spin, ElectronicIntegrals, LadderKind, ReducedCoefficients, H2_STO3G,
};
use trotterchem_core::hilbert::{max_abs_diff, pauli_multiply, Pauli, PauliString, WeightedPauli};
use trotterchem_core::{CMatrix, C64};

const N: usize = 4;
const DIM: usize = 1 << N;

fn occupied(state: usize, orbital: usize) -> bool {
    state >> (N - 1 - orbital) & 1 == 1
}

/// Creation operator built directly on occupation-number states.
///
/// `phase_of_empty` selects the parity string: `true` counts empty orbitals
/// to the left (what a σ^z string yields when |1⟩ is the +1 eigenstate),
/// `false` counts occupied ones.
fn creation_direct(orbital: usize, phase_of_empty: bool) -> CMatrix {
    let mut m = CMatrix::zeros(DIM, DIM);
    for s in 0..DIM {
        if occupied(s, orbital) {
            continue;
        }
        let passed = (0..orbital)
            .filter(|&k| occupied(s, k) != phase_of_empty)
            .count();
        let sign = if passed % 2 == 0 { 1.0 } else { -1.0 };
        m[(s | 1 << (N - 1 - orbital), s)] = Complex::new(sign, 0.0);
    }
    m
}

fn ladder_dense(i: usize, kind: LadderKind) -> CMatrix {
    let [a, b] = jw_ladder(i, N, kind).unwrap();
    a.matrix() + b.matrix()
}

fn fermionic_dense(ints: &ElectronicIntegrals, phase_of_empty: bool) -> CMatrix {
    let cre: Vec<CMatrix> = (0..N).map(|i| creation_direct(i, phase_of_empty)).collect();
    let ann: Vec<CMatrix> = cre.iter().map(|c| c.adjoint()).collect();
    let mut h = CMatrix::zeros(DIM, DIM);
    for ((i, j), v) in ints.one_body_entries() {
        h += (&cre[i - 1] * &ann[j - 1]) * Complex::new(v, 0.0);
    }
    for ([i, j, k, l], v) in ints.two_body_entries() {
        h += (&cre[i - 1] * &cre[j - 1] * &ann[k - 1] * &ann[l - 1]) * Complex::new(0.5 * v, 0.0);
    }
    h
}

fn with_offset(h: &trotterchem_core::fermion_map::SpinHamiltonian) -> CMatrix {
    h.to_dense_with_offset().into_matrix()
}

fn sorted_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = trotterchem_core::hilbert::HermitianEigen::new(m)
        .unwrap()
        .values
        .iter()
        .copied()
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

fn random_reduced(rng: &mut ChaCha8Rng) -> ReducedCoefficients {
    let mut r = || rng.gen_range(-1.5..1.5);
    ReducedCoefficients {
        h11: r(),
        h22: r(),
        h33: r(),
        h44: r(),
        ha: r(),
        hb: r(),
        hc: r(),
        hd: r(),
    }
}

#[test]
fn ladder_matrices_match_direct_construction() {
    for i in 1..=N {
        let direct = creation_direct(i - 1, true);
        assert!(max_abs_diff(&ladder_dense(i, LadderKind::Creation), &direct) < 1e-12);
        assert!(
            max_abs_diff(
                &ladder_dense(i, LadderKind::Annihilation),
                &direct.adjoint()
            ) < 1e-12
        );
    }
}

#[test]
fn canonical_anticommutation() {
    let id = CMatrix::identity(DIM, DIM);
    let zero = CMatrix::zeros(DIM, DIM);
    for i in 1..=N {
        let ci = ladder_dense(i, LadderKind::Annihilation);
        for j in 1..=N {
            let cj = ladder_dense(j, LadderKind::Annihilation);
            let cdj = ladder_dense(j, LadderKind::Creation);
            let mixed = &ci * &cdj + &cdj * &ci;
            let expect = if i == j { &id } else { &zero };
            assert!(max_abs_diff(&mixed, expect) < 1e-12, "{{c{i}, c†{j}}}");
            assert!(
                max_abs_diff(&(&ci * &cj + &cj * &ci), &zero) < 1e-12,
                "{{c{i}, c{j}}}"
            );
        }
    }
}

#[test]
fn fixture_mapping_matches_direct_fermionic_build() {
    let ints = h2_sto3g_integrals();
    let h = map_electronic_to_spin(&ints).unwrap();
    assert!(max_abs_diff(&with_offset(&h), &fermionic_dense(&ints, true)) < 1e-10);
    assert!(h.to_dense().hermiticity_deviation() < 1e-12);
}

#[test]
fn spectrum_independent_of_parity_string_choice() {
    let ints = h2_sto3g_integrals();
    let a = sorted_eigenvalues(&fermionic_dense(&ints, true));
    let b = sorted_eigenvalues(&fermionic_dense(&ints, false));
    let h = sorted_eigenvalues(&with_offset(&map_electronic_to_spin(&ints).unwrap()));
    for k in 0..DIM {
        assert!((a[k] - b[k]).abs() < 1e-10);
        assert!((a[k] - h[k]).abs() < 1e-10);
    }
}

#[test]
fn fixture_term_sets_agree_per_coefficient() {
    let ints = h2_sto3g_integrals();
    let mapped = map_electronic_to_spin(&ints).unwrap();
    let built = build_h2_spin_hamiltonian(&derive_reduced_coeffs(&ints).unwrap());
    assert_eq!(mapped.len(), built.len());
    for t in built.terms() {
        let m = mapped
            .terms()
            .iter()
            .find(|u| u.string == t.string)
            .expect("string present in both");
        assert!(
            (m.coefficient - t.coefficient).abs() < 1e-12,
            "{}",
            t.string
        );
    }
}

#[test]
fn fixture_reduced_coefficients_round_trip() {
    assert_eq!(
        derive_reduced_coeffs(&h2_sto3g_integrals()).unwrap(),
        H2_STO3G
    );
}

#[test]
fn dual_path_on_fixture_and_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = vec![H2_STO3G];
    cases.extend((0..20).map(|_| random_reduced(&mut rng)));
    for c in cases {
        let ints = ElectronicIntegrals::from_reduced(&c);
        let built = build_h2_spin_hamiltonian(&derive_reduced_coeffs(&ints).unwrap());
        let mapped = map_electronic_to_spin(&ints).unwrap();
        assert!(max_abs_diff(built.to_dense().matrix(), mapped.to_dense().matrix()) < 1e-10);
        assert!(built.to_dense().hermiticity_deviation() < 1e-12);
        assert!(mapped.to_dense().hermiticity_deviation() < 1e-12);
    }
}

fn pauli_strategy() -> impl Strategy<Value = WeightedPauli> {
    let axis = prop_oneof![
        Just(Pauli::I),
        Just(Pauli::X),
        Just(Pauli::Y),
        Just(Pauli::Z)
    ];
    (prop::collection::vec(axis, N), -2.0f64..2.0, -2.0f64..2.0)
        .prop_map(|(axes, re, im)| WeightedPauli::new(C64::new(re, im), PauliString::new(axes)))
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in pauli_strategy(), b in pauli_strategy(), c in pauli_strategy()) {
        let left = pauli_multiply(&pauli_multiply(&a, &b), &c);
        let right = pauli_multiply(&a, &pauli_multiply(&b, &c));
        prop_assert_eq!(&left.string, &right.string);
        prop_assert!(abs(left.weight - right.weight) < 1e-12);
        let dense = a.matrix() * b.matrix() * c.matrix();
        prop_assert!(max_abs_diff(&left.matrix(), &dense) < 1e-12);
    }

    #[test]
    fn product_matches_dense_product(a in pauli_strategy(), b in pauli_strategy()) {
        let p = pauli_multiply(&a, &b);
        prop_assert!(max_abs_diff(&p.matrix(), &(a.matrix() * b.matrix())) < 1e-12);
        prop_assert!((abs(p.weight) - abs(a.weight) * abs(b.weight)).abs() < 1e-12);
    }
}

fn abs(z: C64) -> f64 {
    z.re.hypot(z.im)
}
