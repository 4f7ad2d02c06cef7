//! Species pair data and trap-frequency relations.
//!
//! Two atoms of unequal mass bound into a weakly bound dimer sit in a common
//! optical trap. The trap depth each atom sees scales with its dynamic
//! polarizability, so the light and heavy constituents generally oscillate at
//! different frequencies. This module converts a molecular (center-of-mass)
//! trap frequency into the constituent, relative-motion and coupling
//! frequencies, all parameterized by the polarizability ratio `p` of the two
//! atoms.

use crate::constants::{ATOMIC_MASS, HBAR, MASS_K41_U, MASS_RB87_U};
use crate::error::{Error, Result};

/// A heteronuclear atom pair in a common optical trap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeciesPair {
    /// Mass of the light atom, kg.
    pub m_light: f64,
    /// Mass of the heavy atom, kg.
    pub m_heavy: f64,
    /// Polarizability ratio of heavy to light atom at the trap wavelength.
    pub p: f64,
}

impl SpeciesPair {
    /// Creates a pair, checking that masses and polarizability ratio are
    /// positive and that `m_light <= m_heavy`.
    pub fn new(m_light: f64, m_heavy: f64, p: f64) -> Result<Self> {
        if !(m_light > 0.0 && m_light.is_finite()) || !(m_heavy > 0.0 && m_heavy.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "masses must be positive and finite, got {m_light} and {m_heavy}"
            )));
        }
        if m_light > m_heavy {
            return Err(Error::InvalidInput(
                "m_light must not exceed m_heavy".into(),
            ));
        }
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "polarizability ratio must be positive and finite, got {p}"
            )));
        }
        Ok(Self { m_light, m_heavy, p })
    }

    /// The 41K / 87Rb pair with a given polarizability ratio.
    pub fn k41_rb87(p: f64) -> Result<Self> {
        Self::new(MASS_K41_U * ATOMIC_MASS, MASS_RB87_U * ATOMIC_MASS, p)
    }

    /// Mass ratio gamma = m_heavy / m_light.
    pub fn gamma(&self) -> f64 {
        self.m_heavy / self.m_light
    }

    /// Total mass M = m_light + m_heavy, kg.
    pub fn total_mass(&self) -> f64 {
        self.m_light + self.m_heavy
    }

    /// Reduced mass mu = m_light * m_heavy / M, kg.
    pub fn reduced_mass(&self) -> f64 {
        self.m_light * self.m_heavy / (self.m_light + self.m_heavy)
    }
}

/// Trap frequencies derived from the molecular frequency for a species pair.
///
/// All frequencies are angular (rad/s); `omega_c_sq` is a signed squared
/// frequency (rad^2/s^2) and may be negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapFrequencies {
    /// Center-of-mass (molecular) trap frequency.
    pub omega_mol: f64,
    /// Trap frequency the light atom alone would see.
    pub omega_light: f64,
    /// Trap frequency the heavy atom alone would see.
    pub omega_heavy: f64,
    /// Relative-motion frequency.
    pub omega_r: f64,
    /// Squared coupling frequency between center-of-mass and relative motion.
    /// Vanishes exactly when p equals the mass ratio.
    pub omega_c_sq: f64,
}

/// Computes the constituent, relative and coupling frequencies from the
/// molecular trap frequency.
///
/// With gamma = m_h / m_l the individual trap frequencies follow from the
/// shared optical potential:
///
/// ```text
/// omega_l^2 = omega^2 (1 + gamma) / (1 + p)
/// omega_h^2 = omega^2 p (1 + gamma) / (gamma (1 + p))
/// ```
///
/// and the relative/coupling frequencies are
///
/// ```text
/// omega_r^2 = omega^2 (m_h^2 + p m_l^2) / ((p + 1) m_l m_h)
/// omega_c^2 = omega^2 m_l (gamma - p) / ((p + 1) mu)
/// ```
///
/// The coupling form is written so that `p == gamma` gives an exact zero.
pub fn derived_frequencies(pair: &SpeciesPair, omega_mol: f64) -> Result<TrapFrequencies> {
    if !(omega_mol > 0.0 && omega_mol.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "trap frequency must be positive and finite, got {omega_mol}"
        )));
    }
    let (ml, mh, p) = (pair.m_light, pair.m_heavy, pair.p);
    let gamma = pair.gamma();
    let mu = pair.reduced_mass();
    let w2 = omega_mol * omega_mol;

    let omega_light = omega_mol * ((1.0 + gamma) / (1.0 + p)).sqrt();
    let omega_heavy = omega_mol * (p * (1.0 + gamma) / (gamma * (1.0 + p))).sqrt();
    let omega_r = omega_mol * ((mh * mh + p * ml * ml) / ((p + 1.0) * ml * mh)).sqrt();
    let omega_c_sq = w2 * ml * (gamma - p) / ((p + 1.0) * mu);

    Ok(TrapFrequencies {
        omega_mol,
        omega_light,
        omega_heavy,
        omega_r,
        omega_c_sq,
    })
}

/// The polarizability ratio at which center-of-mass and relative motion
/// decouple: p = m_heavy / m_light.
pub fn magic_polarizability_ratio(pair: &SpeciesPair) -> f64 {
    pair.gamma()
}

/// Harmonic oscillator length sqrt(hbar / (m omega)), m.
pub fn oscillator_length(mass: f64, omega: f64) -> Result<f64> {
    if !(mass > 0.0) || !(omega > 0.0) {
        return Err(Error::InvalidInput(format!(
            "oscillator length needs positive mass and frequency, got {mass}, {omega}"
        )));
    }
    Ok((HBAR / (mass * omega)).sqrt())
}

/// Universal halo-dimer binding energy E_b = hbar^2 / (2 mu a^2), J,
/// for scattering length `a` in meters.
pub fn binding_energy(reduced_mass: f64, scattering_length: f64) -> Result<f64> {
    if !(reduced_mass > 0.0) || !(scattering_length > 0.0) {
        return Err(Error::InvalidInput(format!(
            "binding energy needs positive reduced mass and scattering length, \
             got {reduced_mass}, {scattering_length}"
        )));
    }
    let e = HBAR * HBAR / (2.0 * reduced_mass * scattering_length * scattering_length);
    if !e.is_finite() {
        return Err(Error::Overflow(
            "binding energy not representable for these inputs".into(),
        ));
    }
    Ok(e)
}

/// Impulse-approximation estimate of the kick duration that cancels the
/// velocity spread accumulated over a free expansion of length `t_pre_tof`:
/// `t = 1 / (sqrt(2 pi) omega^2 t_pre_tof)`.
///
/// The sqrt(2 pi) factor comes from treating the flash as a Gaussian pulse of
/// equivalent area; trapezoidal flashes optimize at a longer duration.
pub fn thin_lens_duration(omega_mol: f64, t_pre_tof: f64) -> Result<f64> {
    if !(omega_mol > 0.0) || !(t_pre_tof > 0.0) {
        return Err(Error::InvalidInput(format!(
            "thin-lens estimate needs positive frequency and expansion time, \
             got {omega_mol}, {t_pre_tof}"
        )));
    }
    Ok(1.0 / ((std::f64::consts::TAU).sqrt() * omega_mol * omega_mol * t_pre_tof))
}
