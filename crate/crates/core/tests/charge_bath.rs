use nalgebra::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trotterchem_core::charge_bath::{
    bath_register, build_da_schedule, cavity_couplings, da_evolve, donor_state, exact_bath_evolve,
    fixture_cavity, fixture_model, map_charge_bath_to_spin, site_populations, top_fock_population,
    BathError, BathOracle, BlockKind, CavitySpec, ChargeBathModel, FIXTURE_TIME, MAX_EXACT_DIM,
};
use trotterchem_core::fermion_map::{jw_ladder, LadderKind};
use trotterchem_core::hilbert::{
    build_dense, fidelity, max_abs_diff, BosonOp, CMatrix, DenseOperator, HybridRegister,
    PauliTerm, StateVector,
};

const D: usize = 6;

fn model(eps: [f64; 3], v: f64, omega: Vec<f64>, lambda: Vec<Vec<f64>>) -> ChargeBathModel {
    ChargeBathModel::new(&eps, v, omega, lambda).unwrap()
}

fn random_model(rng: &mut ChaCha8Rng, n_modes: usize) -> ChargeBathModel {
    let eps = [
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    ];
    let omega = (0..n_modes).map(|_| rng.gen_range(0.2..1.5)).collect();
    let lambda = (0..n_modes)
        .map(|_| (0..3).map(|_| rng.gen_range(-0.3..0.3)).collect())
        .collect();
    model(eps, rng.gen_range(-0.5..0.5), omega, lambda)
}

fn amp_diff(a: &StateVector, b: &StateVector) -> f64 {
    (a.amplitudes() - b.amplitudes())
        .iter()
        .map(|z| z.re.hypot(z.im))
        .fold(0.0, f64::max)
}

fn max_pop_diff(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|j| (a[j] - b[j]).abs()).fold(0.0, f64::max)
}

#[test]
fn cavity_couplings_follow_mode_index() {
    let spec = CavitySpec::new(0.05, 4, 3, [1.0, 0.5, 0.0]).unwrap();
    let lambda = cavity_couplings(&spec);
    assert_eq!(lambda.len(), 4);
    assert!((lambda[0][0] - 0.05).abs() < 1e-15);
    assert!((lambda[3][0] - 0.1).abs() < 1e-15);
    assert!((lambda[3][1] - 0.05).abs() < 1e-15);
    assert!(lambda.iter().all(|row| row[2] == 0.0));
}

#[test]
fn invalid_models_are_rejected() {
    let ok = |eps: &[f64], omega: Vec<f64>, lambda: Vec<Vec<f64>>| {
        ChargeBathModel::new(eps, 0.1, omega, lambda)
    };
    assert_eq!(
        ok(&[0.0; 2], vec![1.0], vec![vec![0.0; 3]]),
        Err(BathError::SiteCount {
            expected: 3,
            found: 2
        })
    );
    assert_eq!(ok(&[0.0; 3], vec![], vec![]), Err(BathError::NoModes));
    assert_eq!(
        ok(&[0.0; 3], vec![1.0, 0.0], vec![vec![0.0; 3]; 2]),
        Err(BathError::NonPositiveFrequency(1))
    );
    assert_eq!(
        ok(&[0.0; 3], vec![1.0], vec![vec![0.0; 3]; 2]),
        Err(BathError::CouplingRows { modes: 1, found: 2 })
    );
    assert!(matches!(
        ok(&[0.0; 3], vec![1.0], vec![vec![0.0; 2]]),
        Err(BathError::CouplingShape { row: 0, .. })
    ));
    assert!(matches!(
        ok(&[f64::NAN, 0.0, 0.0], vec![1.0], vec![vec![0.0; 3]]),
        Err(BathError::NonFinite(_))
    ));
    assert_eq!(
        CavitySpec::new(0.1, 1, 1, [1.0; 3]),
        Err(BathError::Truncation(1))
    );
    assert_eq!(
        CavitySpec::new(0.1, 0, 4, [1.0; 3]),
        Err(BathError::NoModes)
    );
    assert_eq!(
        CavitySpec::new(0.1, 1, 4, [1.0, 1.5, 0.0]),
        Err(BathError::BetaRange(1))
    );
    let spec = CavitySpec::new(0.1, 2, 4, [1.0; 3]).unwrap();
    assert!(ChargeBathModel::with_cavity(&[0.0; 3], 0.1, vec![1.0], &spec).is_err());
}

#[test]
fn spin_form_is_hermitian() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n_modes in [1, 2] {
        let m = random_model(&mut rng, n_modes);
        let reg = bath_register(&m, 3).unwrap();
        let h = build_dense(&map_charge_bath_to_spin(&m), &reg).unwrap();
        assert!(h.is_hermitian());
    }
}

#[test]
fn decoupled_limit_separates_qubits_and_cavity() {
    let m = model([0.3, -0.2, 0.1], 0.0, vec![0.7], vec![vec![0.0; 3]]);
    let reg = bath_register(&m, D).unwrap();
    let h = build_dense(&map_charge_bath_to_spin(&m), &reg).unwrap();
    let n = BosonOp::Number.matrix(D);
    for row in 0..reg.dim() {
        for col in 0..reg.dim() {
            let expect = if row == col {
                let z: f64 = (0..3)
                    .map(|j| {
                        0.5 * m.site_energies()[j] * (2.0 * reg.qubit_value(row, j) as f64 - 1.0)
                    })
                    .sum();
                z + 0.7 * n[(reg.fock_value(row, 0), reg.fock_value(row, 0))].re
            } else {
                0.0
            };
            let z = h.matrix()[(row, col)];
            assert!((z.re - expect).abs() < 1e-14 && z.im.abs() < 1e-14);
        }
    }
}

/// Fermionic Hamiltonian with JW ladder operators, lifted onto the register.
fn fermionic_dense(m: &ChargeBathModel, reg: &HybridRegister) -> CMatrix {
    let qubits = HybridRegister::qubits(3);
    let ladder = |i: usize, kind| -> CMatrix {
        jw_ladder(i + 1, 3, kind)
            .unwrap()
            .iter()
            .map(|w| {
                let term = PauliTerm::new(1.0, w.string.clone());
                DenseOperator::from_pauli_terms(qubits.clone(), &[term])
                    .unwrap()
                    .into_matrix()
                    * w.weight
            })
            .fold(CMatrix::zeros(8, 8), |a, b| a + b)
    };
    let bath_dim = reg.bath_dim();
    let lift_q = |q: &CMatrix| q.kronecker(&CMatrix::identity(bath_dim, bath_dim));
    let lift_b = |mode: usize, op: BosonOp| {
        let before = D.pow(mode as u32);
        let after = bath_dim / (before * D);
        let b = CMatrix::identity(before, before)
            .kronecker(&op.matrix(D))
            .kronecker(&CMatrix::identity(after, after));
        CMatrix::identity(8, 8).kronecker(&b)
    };
    let create: Vec<CMatrix> = (0..3).map(|i| ladder(i, LadderKind::Creation)).collect();
    let annihilate: Vec<CMatrix> = (0..3)
        .map(|i| ladder(i, LadderKind::Annihilation))
        .collect();
    let number: Vec<CMatrix> = (0..3).map(|i| &create[i] * &annihilate[i]).collect();
    let re = |x: f64| Complex::new(x, 0.0);
    let mut h = CMatrix::zeros(8, 8);
    for (n, &e) in number.iter().zip(m.site_energies()) {
        h += n * re(e);
    }
    for j in 0..2 {
        h += (&create[j] * &annihilate[j + 1] + &create[j + 1] * &annihilate[j]) * re(m.hopping());
    }
    let mut full = lift_q(&h);
    for i in 0..m.n_modes() {
        full += lift_b(i, BosonOp::Number) * re(m.mode_freqs()[i]);
        for (j, n) in number.iter().enumerate() {
            full += lift_q(n) * lift_b(i, BosonOp::Quadrature) * re(m.coupling(i, j));
        }
    }
    full
}

#[test]
fn spin_form_matches_fermionic_construction() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut models = vec![fixture_model()];
    models.extend((0..6).map(|k| random_model(&mut rng, 1 + k % 2)));
    for m in &models {
        let d = if m.n_modes() == 1 { D } else { 3 };
        let reg = bath_register(m, d).unwrap();
        let spin = build_dense(&map_charge_bath_to_spin(m), &reg)
            .unwrap()
            .into_matrix();
        let fermionic = fermionic_dense_with(m, &reg, d);
        let offset: f64 = 0.5 * m.site_energies().iter().sum::<f64>();
        let shifted = spin + CMatrix::identity(reg.dim(), reg.dim()) * Complex::new(offset, 0.0);
        assert!(max_abs_diff(&shifted, &fermionic) < 1e-10);
    }
}

fn fermionic_dense_with(m: &ChargeBathModel, reg: &HybridRegister, d: usize) -> CMatrix {
    if d == D {
        return fermionic_dense(m, reg);
    }
    let wide = bath_register(m, D).unwrap();
    let full = fermionic_dense(m, &wide);
    // Restrict to the lowest `d` Fock levels of every mode.
    let keep: Vec<usize> = (0..wide.dim())
        .filter(|&k| (0..m.n_modes()).all(|i| wide.fock_value(k, i) < d))
        .collect();
    assert_eq!(keep.len(), reg.dim());
    CMatrix::from_fn(keep.len(), keep.len(), |r, c| full[(keep[r], keep[c])])
}

#[test]
fn independent_boson_populations_are_frozen() {
    let m = model([0.0; 3], 0.0, vec![1.0], vec![vec![0.2, 0.0, 0.0]]);
    let reg = bath_register(&m, 8).unwrap();
    let oracle = BathOracle::new(&m, 8).unwrap();
    let psi = donor_state(&reg).unwrap();
    for t in [0.5, 2.0, 7.0] {
        let p = site_populations(&oracle.evolve(t, &psi).unwrap()).unwrap();
        assert!(max_pop_diff(p, [1.0, 0.0, 0.0]) < 1e-12);
    }
}

#[test]
fn schedule_blocks_cover_the_hamiltonian_once() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut models = vec![fixture_model()];
    models.extend((0..4).map(|_| random_model(&mut rng, 2)));
    for m in &models {
        let s = build_da_schedule(m, 3, 4, 2.5).unwrap();
        let kinds: Vec<BlockKind> = s.blocks().iter().map(|b| b.kind()).collect();
        assert_eq!(
            kinds,
            [
                BlockKind::Digital,
                BlockKind::Analog { qubit: 0 },
                BlockKind::Analog { qubit: 1 },
                BlockKind::Analog { qubit: 2 },
                BlockKind::Drive
            ]
        );
        let total_terms: usize = s.blocks().iter().map(|b| b.terms().len()).sum();
        assert_eq!(
            total_terms,
            map_charge_bath_to_spin(m).len() + 2 * m.n_modes()
        );
        assert!(s.audit_deviation(m).unwrap() < 1e-12);
    }
}

#[test]
fn zero_time_is_identity() {
    let m = fixture_model();
    let s = build_da_schedule(&m, D, 3, 0.0).unwrap();
    let psi = donor_state(s.register()).unwrap();
    assert!(amp_diff(&da_evolve(&s, &psi).unwrap(), &psi) < 1e-12);
}

#[test]
fn uncoupled_bath_is_exact_for_any_step_count() {
    let m = model(
        [0.3, -0.1, 0.05],
        0.2,
        vec![0.8, 1.3],
        vec![vec![0.0; 3]; 2],
    );
    let reg = bath_register(&m, 3).unwrap();
    let mut amps = nalgebra::DVector::from_element(reg.dim(), Complex::new(0.0, 0.0));
    amps[reg.index_of(&[1, 0, 0], &[1, 0]).unwrap()] = Complex::new(0.6, 0.0);
    amps[reg.index_of(&[0, 1, 1], &[2, 1]).unwrap()] = Complex::new(0.0, 0.8);
    let psi = StateVector::from_amplitudes(reg, amps).unwrap();
    let exact = exact_bath_evolve(&m, 3, 6.0, &psi).unwrap();
    for l in [1, 3, 7] {
        let s = build_da_schedule(&m, 3, l, 6.0).unwrap();
        assert!(amp_diff(&da_evolve(&s, &psi).unwrap(), &exact) < 1e-10);
    }
}

#[test]
fn electron_number_is_conserved() {
    let m = fixture_model();
    let reg = bath_register(&m, D).unwrap();
    let oracle = BathOracle::new(&m, D).unwrap();
    let psi = donor_state(&reg).unwrap();
    for t in [1.0, 5.0, FIXTURE_TIME] {
        let exact = site_populations(&oracle.evolve(t, &psi).unwrap()).unwrap();
        assert!((exact.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        for l in [1, 4, 16] {
            let s = build_da_schedule(&m, D, l, t).unwrap();
            let da = site_populations(&da_evolve(&s, &psi).unwrap()).unwrap();
            assert!((da.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn populations_of_simple_states() {
    let reg = HybridRegister::new(3, vec![4]).unwrap();
    let donor = StateVector::product(reg.clone(), &[1, 0, 0], &[2]).unwrap();
    assert_eq!(site_populations(&donor).unwrap(), [1.0, 0.0, 0.0]);
    let mut amps = nalgebra::DVector::from_element(reg.dim(), Complex::new(0.0, 0.0));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    amps[reg.index_of(&[1, 0, 0], &[0]).unwrap()] = Complex::new(h, 0.0);
    amps[reg.index_of(&[0, 0, 1], &[0]).unwrap()] = Complex::new(h, 0.0);
    let p = site_populations(&StateVector::from_amplitudes(reg, amps).unwrap()).unwrap();
    assert!(max_pop_diff(p, [0.5, 0.0, 0.5]) < 1e-15);
    let two = StateVector::product(HybridRegister::qubits(2), &[1, 0], &[]).unwrap();
    assert_eq!(site_populations(&two), Err(BathError::WrongRegister(2)));
}

#[test]
fn electron_moves_from_donor() {
    let m = fixture_model();
    let reg = bath_register(&m, D).unwrap();
    let oracle = BathOracle::new(&m, D).unwrap();
    let psi = donor_state(&reg).unwrap();
    let p = site_populations(&oracle.evolve(FIXTURE_TIME, &psi).unwrap()).unwrap();
    assert!(p[0] < 0.5 && p[2] > 0.1, "{p:?}");
}

#[test]
fn fock_truncation_is_converged() {
    let m = fixture_model();
    let d = fixture_cavity().truncation();
    let run = |d: usize| {
        let reg = bath_register(&m, d).unwrap();
        exact_bath_evolve(&m, d, FIXTURE_TIME, &donor_state(&reg).unwrap()).unwrap()
    };
    let (small, large) = (run(d), run(d + 2));
    assert!(top_fock_population(&small) < 1e-6);
    let diff = max_pop_diff(
        site_populations(&small).unwrap(),
        site_populations(&large).unwrap(),
    );
    assert!(diff < 1e-4, "{diff:e}");
}

fn da_infidelity(m: &ChargeBathModel, t: f64, l: usize) -> f64 {
    let reg = bath_register(m, D).unwrap();
    let psi = donor_state(&reg).unwrap();
    let exact = exact_bath_evolve(m, D, t, &psi).unwrap();
    let s = build_da_schedule(m, D, l, t).unwrap();
    1.0 - fidelity(&exact, &da_evolve(&s, &psi).unwrap()).unwrap()
}

#[test]
fn digital_analog_infidelity_falls_as_inverse_square() {
    let m = fixture_model();
    let scaled: Vec<f64> = [8, 16, 32]
        .iter()
        .map(|&l| da_infidelity(&m, 5.0, l) * (l * l) as f64)
        .collect();
    let (lo, hi) = scaled
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(a, b), &x| (a.min(x), b.max(x)));
    assert!(hi / lo < 1.2, "{scaled:?}");
}

#[test]
fn digital_analog_converges_to_exact() {
    let m = fixture_model();
    let inf: Vec<f64> = [4, 8, 16, 32]
        .iter()
        .map(|&l| da_infidelity(&m, FIXTURE_TIME, l))
        .collect();
    assert!(inf.windows(2).all(|w| w[1] < w[0]), "{inf:?}");
    assert!(inf[3] < 1e-3);
}

#[test]
fn register_checks() {
    let m = fixture_model();
    let s = build_da_schedule(&m, D, 2, 1.0).unwrap();
    let other = donor_state(&bath_register(&m, D + 1).unwrap()).unwrap();
    assert_eq!(da_evolve(&s, &other), Err(BathError::RegisterMismatch));
    let big = model([0.0; 3], 0.1, vec![1.0; 3], vec![vec![0.1; 3]; 3]);
    let err = build_da_schedule(&big, 8, 1, 1.0).unwrap_err();
    assert_eq!(
        err,
        BathError::TooLarge {
            dim: 4096,
            limit: MAX_EXACT_DIM
        }
    );
    assert!(matches!(
        BathOracle::new(&big, 8),
        Err(BathError::TooLarge { .. })
    ));
    assert_eq!(
        build_da_schedule(&m, D, 0, 1.0).unwrap_err(),
        BathError::ZeroSteps
    );
    assert_eq!(
        build_da_schedule(&m, D, 1, f64::NAN).unwrap_err(),
        BathError::NonFiniteTime
    );
}
