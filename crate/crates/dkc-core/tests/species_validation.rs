//! Frozen-value oracles and structural identities for the species and trap
//! frequency relations. Expected numbers were computed independently with
//! 40-digit arithmetic and are hard-coded here.

use dkc_core::constants::{ATOMIC_MASS, BOHR_RADIUS, K_B};
use dkc_core::coupled::mode_stiffness;
use dkc_core::species::{
    binding_energy, derived_frequencies, magic_polarizability_ratio, oscillator_length,
    thin_lens_duration, SpeciesPair,
};
use dkc_core::{convert_units, Unit};

const TAU: f64 = std::f64::consts::TAU;

fn kr() -> SpeciesPair {
    SpeciesPair::k41_rb87(1.10).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn frozen_mass_values() {
    let pair = kr();
    assert!(rel(pair.total_mass(), 2.123348006013903e-25) < 1e-14);
    assert!(rel(pair.reduced_mass(), 4.622979544480542e-26) < 1e-14);
    assert!(rel(pair.gamma(), 2.121711617569651) < 1e-14);
}

#[test]
fn frozen_frequency_ratios() {
    let w = TAU * 100.0;
    let f = derived_frequencies(&kr(), w).unwrap();
    assert!(rel(f.omega_light / w, 1.486529341699834_f64.sqrt()) < 1e-12);
    assert!(rel(f.omega_heavy / w, 0.770690164643046_f64.sqrt()) < 1e-12);
    assert!(rel(f.omega_r / w, 1.121258001685107) < 1e-12);
    assert!(rel(f.omega_c_sq / (w * w), 0.715839177056788) < 1e-12);
}

#[test]
fn mode_stiffness_matches_constituent_frequencies() {
    // The normal modes are the individual atom coordinates, so the mode
    // frequencies must equal the constituent trap frequencies exactly.
    for p in [0.6, 0.9, 1.10, 1.7, 2.5] {
        let pair = SpeciesPair::k41_rb87(p).unwrap();
        let w = TAU * 87.3;
        let f = derived_frequencies(&pair, w).unwrap();
        let (ap, am) = mode_stiffness(&pair);
        assert!(rel(f.omega_light, ap.sqrt() * w) < 1e-12, "p = {p}");
        assert!(rel(f.omega_heavy, am.sqrt() * w) < 1e-12, "p = {p}");
    }
}

#[test]
fn frequency_composition_identities() {
    // The molecular, relative and coupling frequencies must reassemble from
    // the constituent ones:
    //   omega^2   = (m_l omega_l^2 + m_h omega_h^2) / M
    //   omega_r^2 = (m_h omega_l^2 + m_l omega_h^2) / M
    //   omega_c^2 = omega_l^2 - omega_h^2
    for p in [0.7, 1.10, 1.8, 2.121711617569651, 2.6] {
        let pair = SpeciesPair::k41_rb87(p).unwrap();
        let w = TAU * 100.0;
        let f = derived_frequencies(&pair, w).unwrap();
        let (ml, mh, m) = (pair.m_light, pair.m_heavy, pair.total_mass());
        let wl2 = f.omega_light * f.omega_light;
        let wh2 = f.omega_heavy * f.omega_heavy;
        assert!(rel(w * w, (ml * wl2 + mh * wh2) / m) < 1e-12, "p = {p}");
        assert!(
            rel(f.omega_r * f.omega_r, (mh * wl2 + ml * wh2) / m) < 1e-12,
            "p = {p}"
        );
        let wc2 = wl2 - wh2;
        let scale = wl2.max(wh2);
        assert!((f.omega_c_sq - wc2).abs() < 1e-12 * scale, "p = {p}");
        // Shared-beam trap depth relation: m_l omega_l^2 = m_h omega_h^2 / p.
        assert!(rel(ml * wl2, mh * wh2 / p) < 1e-12, "p = {p}");
    }
}

#[test]
fn coupling_sign_flips_at_magic_ratio() {
    let base = kr();
    let magic = magic_polarizability_ratio(&base);
    let w = TAU * 100.0;
    for p in [0.5, 1.0, 2.0, 2.12] {
        let f = derived_frequencies(&SpeciesPair::k41_rb87(p).unwrap(), w).unwrap();
        assert!(f.omega_c_sq > 0.0, "p = {p} below magic should couple positively");
    }
    for p in [2.13, 2.5, 3.0] {
        let f = derived_frequencies(&SpeciesPair::k41_rb87(p).unwrap(), w).unwrap();
        assert!(f.omega_c_sq < 0.0, "p = {p} above magic should couple negatively");
    }
    let f = derived_frequencies(&SpeciesPair::k41_rb87(magic).unwrap(), w).unwrap();
    assert_eq!(f.omega_c_sq, 0.0, "coupling must vanish exactly at the magic ratio");
}

#[test]
fn frozen_oscillator_length() {
    let a = oscillator_length(2.123348006013903e-25, TAU * 100.0).unwrap();
    assert!(rel(a, 8.890732771998398e-7) < 1e-12);
    // Scaling law: a ~ 1/sqrt(omega).
    let a4 = oscillator_length(2.123348006013903e-25, TAU * 400.0).unwrap();
    assert!(rel(a / a4, 2.0) < 1e-14);
}

#[test]
fn frozen_binding_energy() {
    let mu = kr().reduced_mass();
    let a = 1000.0 * BOHR_RADIUS;
    let e = binding_energy(mu, a).unwrap();
    assert!(rel(e, 4.295345359473798e-29) < 1e-12);
    assert!(rel(e / K_B, 3.111105979487761e-6) < 1e-12);
    // Quadratic scaling in 1/a.
    let e2 = binding_energy(mu, 2.0 * a).unwrap();
    assert!(rel(e / e2, 4.0) < 1e-14);
}

#[test]
fn frozen_thin_lens_duration() {
    let t = thin_lens_duration(TAU * 100.0, 14.9e-3).unwrap();
    assert!(rel(t, 6.782097995846741e-5) < 1e-12);
}

#[test]
fn unit_conversion_values() {
    assert!(rel(convert_units(1000.0, Unit::BohrRadius, Unit::Meter).unwrap(), 5.29177210903e-8) < 1e-14);
    assert!(rel(convert_units(40.96182526, Unit::AtomicMass, Unit::Kilogram).unwrap(), 40.96182526 * ATOMIC_MASS) < 1e-15);
    assert!(rel(convert_units(1e-9, Unit::Kelvin, Unit::Joule).unwrap(), 1.380649e-32) < 1e-15);
    assert!(rel(convert_units(100.0, Unit::Hertz, Unit::RadianPerSecond).unwrap(), TAU * 100.0) < 1e-15);
}
