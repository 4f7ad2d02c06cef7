//! Canonical demonstration scenarios used by the command-line tool's
//! `--reproduce` option and by the test suite.

use crate::constants::BOHR_RADIUS;
use crate::coupled::{CoupledState, KickSchedule};
use crate::scaling::{CloudParams, Regime, SequenceConfig};
use crate::species::SpeciesPair;

/// Trap frequency shared by all scenarios: 2 pi x 100 Hz.
pub fn trap_omega() -> f64 {
    std::f64::consts::TAU * 100.0
}

/// The default species pair: 41K / 87Rb molecules at polarizability
/// ratio 1.10.
pub fn default_pair() -> SpeciesPair {
    SpeciesPair::k41_rb87(1.10).expect("default pair parameters are valid")
}

/// A coupled-dynamics scenario: species, flash, initial state, report step.
#[derive(Debug, Clone, Copy)]
pub struct CoupledScenario {
    pub pair: SpeciesPair,
    pub schedule: KickSchedule,
    pub initial_state: CoupledState,
    pub report_dt: f64,
}

/// Demonstration flash on a displaced, moving molecule: 150 us trapezoid
/// with 1 us ramps, center of mass released 4.06 um off axis at 2.55 mm/s,
/// internuclear separation 1000 Bohr radii at rest.
pub fn coupled_flash_demo() -> CoupledScenario {
    CoupledScenario {
        pair: default_pair(),
        schedule: KickSchedule::new(trap_omega(), 1e-6, 150e-6)
            .expect("demo schedule is valid"),
        initial_state: CoupledState {
            t: 0.0,
            r_com: 4.06e-6,
            v_com: 2.55e-3,
            r_rel: 1000.0 * BOHR_RADIUS,
            v_rel: 0.0,
        },
        report_dt: 1e-6,
    }
}

/// Reference collimation sequence: 14.9 ms of pre-expansion, a 150 us flash
/// with 1 us ramps, no extra time of flight, and the standard cloud
/// (5e4 molecules, a_dd = 500 a0, 50 nK).
pub fn base_sequence(regime: Regime) -> SequenceConfig {
    SequenceConfig {
        omega_trap: trap_omega(),
        t_pre_tof: 14.9e-3,
        t_ramp: 1e-6,
        t_dkc: 150e-6,
        t_tof: 0.0,
        regime,
        cloud: CloudParams {
            n_molecules: 5.0e4,
            a_dd: 500.0 * BOHR_RADIUS,
            temperature: 50e-9,
        },
        sigma0_override: None,
    }
}

/// Flash lengths for gain scans: 0 to 250 us in 1 us steps.
pub fn scan_grid() -> Vec<f64> {
    (0..=250).map(|k| k as f64 * 1e-6).collect()
}

/// Condensed-cloud gain curves: the Thomas-Fermi limit and the variational
/// correction at intermolecular scattering lengths of 500, 250 and 50 Bohr
/// radii (5e4 molecules).
pub fn condensed_gain_curves() -> Vec<(String, SequenceConfig)> {
    let n = 5.0e4;
    let mut curves = vec![("tf".to_string(), base_sequence(Regime::ThomasFermi))];
    for a_au in [500.0, 250.0, 50.0] {
        curves.push((
            format!("var_{}a0", a_au as u32),
            base_sequence(Regime::Variational {
                n_molecules: n,
                a_dd: a_au * BOHR_RADIUS,
            }),
        ));
    }
    curves
}

/// Hydrodynamic-crossover gain curves at mean-field fractions 0.9999,
/// 0.8958 and 0.7056 (temperatures 2, 30 and 50 nK) plus the ideal thermal
/// gas at 50 nK.
pub fn crossover_gain_curves() -> Vec<(String, SequenceConfig)> {
    let mut curves = Vec::new();
    for (xi, label, temp) in [
        (0.9999, "xi_0p9999", 2e-9),
        (0.8958, "xi_0p8958", 30e-9),
        (0.7056, "xi_0p7056", 50e-9),
    ] {
        let mut cfg = base_sequence(Regime::Hydrodynamic { xi });
        cfg.cloud.temperature = temp;
        curves.push((label.to_string(), cfg));
    }
    curves.push(("thermal".to_string(), base_sequence(Regime::Thermal)));
    curves
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenarios_are_well_formed() {
        let demo = coupled_flash_demo();
        assert_eq!(demo.schedule.t_dkc(), 150e-6);
        assert_eq!(scan_grid().len(), 251);
        assert_eq!(condensed_gain_curves().len(), 4);
        assert_eq!(crossover_gain_curves().len(), 4);
        for (label, cfg) in condensed_gain_curves().into_iter().chain(crossover_gain_curves()) {
            assert!(!label.is_empty());
            assert!(cfg.omega_trap > 0.0);
        }
    }
}
