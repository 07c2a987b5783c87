use alloc::vec;

use super::{CavitySpec, ChargeBathModel};

/// Evolution time of the reference donor-acceptor run.
pub const FIXTURE_TIME: f64 = 20.0;

/// Single-mode cavity, `g0 = 0.05`, six Fock levels, all qubits coupled.
pub fn fixture_cavity() -> CavitySpec {
    CavitySpec::new(0.05, 1, 6, [1.0; 3]).expect("fixture cavity is valid")
}

/// Downhill donor-bridge-acceptor chain on the fixture cavity.
pub fn fixture_model() -> ChargeBathModel {
    ChargeBathModel::with_cavity(&[0.2, 0.1, 0.0], 0.1, vec![1.0], &fixture_cavity())
        .expect("fixture model is valid")
}
