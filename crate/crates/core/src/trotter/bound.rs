use super::{trotter_evolve, Scheme, TrotterError, TrotterPlan};
use crate::hilbert::{commutator, exact_evolve, fidelity, spectral_norm, CMatrix, StateVector};

/// What [`empirical_digital_error`] measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Observable {
    /// `1 - |⟨ψ_exact|ψ_trotter⟩|²`.
    ExactFidelity,
    /// The commutator estimate of [`digital_error_bound`].
    Bound,
}

/// Leading-order splitting error of the plan.
///
/// Regular: `‖Σ_{i>j} [H_i, H_j]‖ t² / 2l`. Symmetric: `C t³ / l²` with
/// `C = ‖[B,[B,A]]‖/12 + ‖[A,[A,B]]‖/24` for outer group `A` and inner
/// remainder `B`, applied recursively when there are more than two groups.
pub fn digital_error_bound(plan: &TrotterPlan) -> f64 {
    let mats: alloc::vec::Vec<&CMatrix> = plan.groups().iter().map(|g| g.matrix()).collect();
    let t = plan.total_time();
    let l = plan.steps() as f64;
    match plan.scheme() {
        Scheme::Regular => {
            let n = mats[0].nrows();
            let mut sum = CMatrix::zeros(n, n);
            for i in 0..mats.len() {
                for j in 0..i {
                    sum += commutator(mats[i], mats[j]);
                }
            }
            spectral_norm(&sum) * t * t / (2.0 * l)
        }
        Scheme::Symmetric => symmetric_constant(&mats) * (t * t * t).abs() / (l * l),
    }
}

fn symmetric_constant(groups: &[&CMatrix]) -> f64 {
    if groups.len() < 2 {
        return 0.0;
    }
    let a = groups[0];
    let mut b = groups[1].clone();
    for g in &groups[2..] {
        b += *g;
    }
    let ab = commutator(a, &b);
    let bba = commutator(&b, &(-&ab));
    let aab = commutator(a, &ab);
    spectral_norm(&bba) / 12.0 + spectral_norm(&aab) / 24.0 + symmetric_constant(&groups[1..])
}

/// Digital error of the plan starting from `state`.
pub fn empirical_digital_error(
    plan: &TrotterPlan,
    state: &StateVector,
    observable: Observable,
) -> Result<f64, TrotterError> {
    match observable {
        Observable::Bound => Ok(digital_error_bound(plan)),
        Observable::ExactFidelity => {
            let exact = exact_evolve(&plan.hamiltonian(), plan.total_time(), state)?;
            let approx = trotter_evolve(plan, state)?;
            Ok(1.0 - fidelity(&exact, &approx)?)
        }
    }
}
