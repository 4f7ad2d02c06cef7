//! Simulation of delta-kick collimation for heteronuclear trapped molecules.
//!
//! A weakly bound two-species dimer is released from an optical trap, expands
//! freely, and is then exposed to a short flash of the trapping potential
//! that removes most of its center-of-mass expansion energy. Because the two
//! constituent atoms generally see different trap depths, the flash also
//! couples the center of mass to the internuclear coordinate; this crate
//! models both aspects:
//!
//! * [`species`]: masses, polarizability ratio and all derived trap
//!   frequencies of the pair, including the magic ratio at which the
//!   coupling vanishes;
//! * [`coupled`]: exact (piecewise Airy/trigonometric) and numerical
//!   propagation of the coupled equations of motion through a trapezoidal
//!   flash, with an energy breakdown per channel;
//! * [`scaling`]: cloud-width scaling dynamics across interaction regimes
//!   (Thomas-Fermi, variational, hydrodynamic crossover, thermal), gain
//!   scans over the flash length and kick optimization;
//! * [`numerics`]: the self-contained kernels behind the above (Airy
//!   functions, adaptive Runge-Kutta with dense output, Gauss-Kronrod
//!   quadrature, golden-section minimization, bisection);
//! * [`presets`]: ready-made demonstration scenarios used by the CLI.

// Validation guards are written `!(x > 0.0)` instead of `x <= 0.0` on
// purpose: the negated form also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod coupled;
pub mod error;
pub mod numerics;
pub mod presets;
pub mod scaling;
pub mod species;

pub use constants::{convert_units, Unit};
pub use coupled::{
    classical_period, energies, from_normal_modes, mode_stiffness, propagate_analytic,
    propagate_numeric, propagate_uncoupled, temperature_equivalent, to_normal_modes,
    CoupledState, EnergyTrace, KickSchedule, KickTrajectory, ModeState,
};
pub use error::{Error, Result};
pub use scaling::{
    asymptotic_expansion_energy, gain_scan, gain_scan_parallel, initial_size, mean_field_xi,
    optimize_kick, run_sequence, scaling_rhs, variational_correction, CloudParams, GainPoint,
    KickOptimum, Regime, ScalingState, ScanPoint, SequenceConfig, SequenceResult,
};
pub use species::{
    binding_energy, derived_frequencies, magic_polarizability_ratio, oscillator_length,
    thin_lens_duration, SpeciesPair, TrapFrequencies,
};
