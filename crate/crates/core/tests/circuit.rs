use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use trotterchem_core::circuit::{
    adjacency_violations, cancel_inverse_pairs, compile_step, compile_symmetric_step,
    compile_trotter_step, decompose_ms, h2_crossing, h2_error_budget, h2_step_counts, optimize,
    rebase_and_cancel, rebase_zz_to_xx, route_linear, Circuit, DigitalModel, GateCounts, GateKind,
};
use trotterchem_core::fermion_map::{ReducedCoefficients, H2_STO3G};
use trotterchem_core::hilbert::phase_aligned_distance;
use trotterchem_core::trotter::{time_from_theta, Scheme, TrotterPlan};

const TOL: f64 = 1e-8;

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

fn dense_step(c: &ReducedCoefficients, scheme: Scheme, tau: f64) -> trotterchem_core::CMatrix {
    TrotterPlan::h2(c, scheme, 1, 1.0)
        .unwrap()
        .with_time(tau)
        .unwrap()
        .step_unitary()
        .into_matrix()
}

fn stages(c: &ReducedCoefficients, scheme: Scheme, tau: f64) -> Vec<Circuit> {
    let a = compile_step(c, tau, scheme);
    let b = decompose_ms(&a);
    let c2 = rebase_zz_to_xx(&b);
    let d = cancel_inverse_pairs(&c2);
    let routed = route_linear(&d).unwrap();
    vec![a, b, c2, d, routed]
}

#[test]
fn step_matches_dense_product_formula() {
    let t = time_from_theta(0.1, H2_STO3G.h11).unwrap();
    for scheme in Scheme::ALL {
        let circ = compile_step(&H2_STO3G, t, scheme);
        assert!(phase_aligned_distance(&dense_step(&H2_STO3G, scheme, t), &circ.unitary()) < TOL);
    }
}

#[test]
fn every_pass_preserves_the_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut cases = vec![H2_STO3G];
    cases.extend((0..20).map(|_| random_reduced(&mut rng)));
    for (k, c) in cases.iter().enumerate() {
        let tau = 0.05 + 0.1 * k as f64;
        for scheme in Scheme::ALL {
            let reference = dense_step(c, scheme, tau);
            for (s, circ) in stages(c, scheme, tau).iter().enumerate() {
                let d = phase_aligned_distance(&reference, &circ.logical_unitary());
                assert!(d < TOL, "case {k} {scheme:?} stage {s}: {d:e}");
            }
        }
    }
}

#[test]
fn regular_step_counts() {
    let t = time_from_theta(2.0, H2_STO3G.h11).unwrap() / 2.0;
    let counts = h2_step_counts(&H2_STO3G, Scheme::Regular, t).unwrap();
    assert_eq!(
        (
            counts.xx_two_qubit,
            counts.swap,
            counts.single_qubit,
            counts.ms_multiqubit
        ),
        (24, 24, 20, 0),
        "{counts:?}"
    );
    assert_eq!(counts.zz_two_qubit, 0);
    let b = counts.breakdown;
    assert_eq!((b.r, b.ry, b.ud, b.rz), (4, 8, 4, 4));
}

#[test]
fn symmetric_step_counts() {
    let counts = h2_step_counts(&H2_STO3G, Scheme::Symmetric, 0.3).unwrap();
    assert_eq!(
        (counts.xx_two_qubit, counts.swap, counts.single_qubit),
        (30, 32, 32),
        "{counts:?}"
    );
}

#[test]
fn optimization_strictly_reduces_two_qubit_gates() {
    let a = compile_trotter_step(&H2_STO3G, 0.2);
    let decomposed = GateCounts::of(&decompose_ms(&a));
    let optimized = GateCounts::of(&rebase_and_cancel(&decompose_ms(&a)));
    assert_eq!(decomposed.xx_two_qubit, 48);
    assert!(optimized.xx_two_qubit < decomposed.xx_two_qubit + decomposed.zz_two_qubit);
}

#[test]
fn cancellation_is_idempotent() {
    for scheme in Scheme::ALL {
        let once = rebase_and_cancel(&decompose_ms(&compile_step(&H2_STO3G, 0.2, scheme)));
        assert_eq!(cancel_inverse_pairs(&once), once);
    }
}

#[test]
fn routed_step_is_nearest_neighbour() {
    for scheme in Scheme::ALL {
        let routed = optimize(&compile_step(&H2_STO3G, 0.2, scheme)).unwrap();
        assert_eq!(adjacency_violations(&routed), 0);
        assert!(routed.gates().iter().all(|g| g.kind != GateKind::Ms));
    }
}

#[test]
fn symmetric_compile_reuses_half_steps() {
    let s = compile_symmetric_step(&H2_STO3G, 0.2);
    assert_eq!(
        s.gates().iter().filter(|g| g.kind == GateKind::Zz).count(),
        12
    );
}

#[test]
fn crossings_on_fixture() {
    for l in 2..=4 {
        let eps = h2_crossing(&H2_STO3G, l, 2.0, DigitalModel::Bound).unwrap();
        let reg =
            h2_error_budget(&H2_STO3G, Scheme::Regular, l, 2.0, 0.0, DigitalModel::Bound).unwrap();
        let sym = h2_error_budget(
            &H2_STO3G,
            Scheme::Symmetric,
            l,
            2.0,
            0.0,
            DigitalModel::Bound,
        )
        .unwrap();
        let e = eps.expect("positive crossing");
        let below = e * 0.5;
        assert!(sym.with_eps(below).unwrap().total() < reg.with_eps(below).unwrap().total());
    }
}
