use super::{ElectronicIntegrals, ReducedCoefficients};

/// H₂ at R = 0.7414 Å, RHF/STO-3G, spin orbitals ordered (1σg↑, 1σg↓, 1σu↑, 1σu↓).
///
/// Integrals in Hartree from a PySCF 2.14 run.
pub const H2_STO3G: ReducedCoefficients = ReducedCoefficients {
    h11: -1.2524635735648981,
    h22: -1.2524635735648981,
    h33: -0.4759487152209642,
    h44: -0.4759487152209642,
    ha: 0.6744887663568377,
    hb: 0.6973937674230266,
    hc: 0.6634680964235676,
    hd: 0.18128880821149584,
};

pub fn h2_sto3g_reduced() -> ReducedCoefficients {
    H2_STO3G
}

pub fn h2_sto3g_integrals() -> ElectronicIntegrals {
    ElectronicIntegrals::from_reduced(&H2_STO3G)
}
