//! Coupled center-of-mass / internuclear dynamics through a trap flash.
//!
//! When the polarizability ratio `p` differs from the mass ratio, the
//! center-of-mass coordinate R and the internuclear separation r of a trapped
//! dimer couple linearly:
//!
//! ```text
//! R'' = -omega_mol^2(t) R + (mu/M) omega_c^2(t) r
//! r'' = -omega_r^2(t)   r +        omega_c^2(t) R
//! ```
//!
//! All three squared frequencies share the flash's trapezoidal time profile.
//! The normal-mode transform diagonalizes the system exactly, and on each
//! trapezoid section the mode equations have closed-form solutions: Airy
//! functions on the linear ramps, trigonometric functions on the plateau.
//! [`propagate_analytic`] chains those solutions; [`propagate_numeric`]
//! integrates the same equations with an adaptive Runge-Kutta scheme and
//! exists as an independent cross-check of the analytic route.

use crate::error::{Error, Result};
use crate::numerics::airy::airy;
use crate::numerics::ode::{integrate_ode, OdeOptions};
use crate::numerics::quad::quad;
use crate::numerics::optimize::find_root;
use crate::species::SpeciesPair;

/// Trapezoidal flash of a harmonic trap: linear switch-on over `t_r`, a
/// plateau, and a linear switch-off over `t_r`, for a total length `t_dkc`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KickSchedule {
    omega0: f64,
    t_r: f64,
    t_dkc: f64,
}

impl KickSchedule {
    /// Creates a schedule, enforcing `omega0 > 0`, `t_r >= 0` and
    /// `2 t_r <= t_dkc`. `t_r = 0` gives a rectangular flash; `t_dkc = 0`
    /// (with `t_r = 0`) is a valid no-op flash.
    pub fn new(omega0: f64, t_r: f64, t_dkc: f64) -> Result<Self> {
        if !(omega0 > 0.0 && omega0.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "flash frequency must be positive and finite, got {omega0}"
            )));
        }
        if !t_r.is_finite() || !t_dkc.is_finite() || t_r < 0.0 || 2.0 * t_r > t_dkc {
            return Err(Error::InvalidInput(format!(
                "ramp times must satisfy 0 <= 2 t_r <= t_dkc, got t_r = {t_r}, t_dkc = {t_dkc}"
            )));
        }
        Ok(Self { omega0, t_r, t_dkc })
    }

    /// Peak angular trap frequency, rad/s.
    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// Ramp duration, s.
    pub fn t_r(&self) -> f64 {
        self.t_r
    }

    /// Total flash duration, s.
    pub fn t_dkc(&self) -> f64 {
        self.t_dkc
    }

    /// Squared trap frequency at time `t` into the flash. Errors outside
    /// `[0, t_dkc]`.
    pub fn omega_sq_at(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 || t > self.t_dkc {
            return Err(Error::OutOfRange(format!(
                "flash profile queried at t = {t} outside [0, {}]",
                self.t_dkc
            )));
        }
        Ok(self.shape(t) * self.omega0 * self.omega0)
    }

    /// Dimensionless trapezoid profile in [0, 1]; assumes t inside the flash.
    fn shape(&self, t: f64) -> f64 {
        if t < self.t_r {
            t / self.t_r
        } else if t <= self.t_dkc - self.t_r {
            1.0
        } else {
            (self.t_dkc - t) / self.t_r
        }
    }
}

/// Phase-space state of the dimer in lab coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoupledState {
    /// Time, s.
    pub t: f64,
    /// Center-of-mass position, m.
    pub r_com: f64,
    /// Center-of-mass velocity, m/s.
    pub v_com: f64,
    /// Internuclear separation (relative coordinate), m.
    pub r_rel: f64,
    /// Relative velocity, m/s.
    pub v_rel: f64,
}

/// State expressed in the decoupling normal modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeState {
    pub z_plus: f64,
    pub v_plus: f64,
    pub z_minus: f64,
    pub v_minus: f64,
}

/// Maps lab coordinates to normal modes:
/// `z+ = R - r gamma/(1+gamma)`, `z- = R + r/(1+gamma)`.
pub fn to_normal_modes(state: &CoupledState, pair: &SpeciesPair) -> ModeState {
    let gamma = pair.gamma();
    let w = gamma / (1.0 + gamma);
    ModeState {
        z_plus: state.r_com - w * state.r_rel,
        v_plus: state.v_com - w * state.v_rel,
        z_minus: state.r_com + state.r_rel / (1.0 + gamma),
        v_minus: state.v_com + state.v_rel / (1.0 + gamma),
    }
}

/// Inverse of [`to_normal_modes`]; `t` is attached to the returned state.
pub fn from_normal_modes(modes: &ModeState, pair: &SpeciesPair, t: f64) -> CoupledState {
    let gamma = pair.gamma();
    CoupledState {
        t,
        r_com: (modes.z_plus + gamma * modes.z_minus) / (1.0 + gamma),
        v_com: (modes.v_plus + gamma * modes.v_minus) / (1.0 + gamma),
        r_rel: modes.z_minus - modes.z_plus,
        v_rel: modes.v_minus - modes.v_plus,
    }
}

/// Squared normal-mode frequencies in units of the molecular trap frequency:
/// `(alpha_plus, alpha_minus)` with `omega_+/-^2 = alpha_+/- omega_mol^2`.
///
/// These coincide with the squared single-atom frequencies of the light and
/// heavy constituents respectively.
pub fn mode_stiffness(pair: &SpeciesPair) -> (f64, f64) {
    let gamma = pair.gamma();
    let alpha_plus = (1.0 + gamma) / (1.0 + pair.p);
    let alpha_minus = pair.p * alpha_plus / gamma;
    (alpha_plus, alpha_minus)
}

/// Squared relative and coupling frequencies in units of the molecular trap
/// frequency: `(omega_r^2, omega_c^2) / omega_mol^2`.
fn frequency_ratios(pair: &SpeciesPair) -> (f64, f64) {
    let (ml, mh, p) = (pair.m_light, pair.m_heavy, pair.p);
    let gamma = pair.gamma();
    let mu = pair.reduced_mass();
    let ratio_r = (mh * mh + p * ml * ml) / ((p + 1.0) * ml * mh);
    let ratio_c = ml * (gamma - p) / ((p + 1.0) * mu);
    (ratio_r, ratio_c)
}

/// Center-of-mass, relative and coupling energies (J) of a state in a trap
/// with the given squared frequencies (pass zeros for free flight):
///
/// ```text
/// E_R = M/2 (V^2 + omega_mol^2 R^2)
/// E_r = mu/2 (v^2 + omega_r^2 r^2)
/// E_c = -mu omega_c^2 R r
/// ```
pub fn energies(
    state: &CoupledState,
    pair: &SpeciesPair,
    omega_mol_sq: f64,
    omega_r_sq: f64,
    omega_c_sq: f64,
) -> (f64, f64, f64) {
    let m = pair.total_mass();
    let mu = pair.reduced_mass();
    let e_com = 0.5 * m * (state.v_com * state.v_com + omega_mol_sq * state.r_com * state.r_com);
    let e_rel = 0.5 * mu * (state.v_rel * state.v_rel + omega_r_sq * state.r_rel * state.r_rel);
    let e_cross = -mu * omega_c_sq * state.r_com * state.r_rel;
    (e_com, e_rel, e_cross)
}

/// Energy breakdown along a trajectory, J. Divide by k_B/2 for the
/// conventional temperature equivalents.
#[derive(Debug, Clone, Default)]
pub struct EnergyTrace {
    pub times: Vec<f64>,
    pub e_com: Vec<f64>,
    pub e_rel: Vec<f64>,
    pub e_cross: Vec<f64>,
}

/// A flash trajectory sampled on a report grid.
#[derive(Debug, Clone)]
pub struct KickTrajectory {
    pub states: Vec<CoupledState>,
    pub energy: EnergyTrace,
}

/// Temperature equivalent of a single-coordinate energy: `2 E / k_B`, K.
pub fn temperature_equivalent(energy_j: f64) -> f64 {
    2.0 * energy_j / crate::constants::K_B
}

/// Closed-form evolution of one normal mode through the trapezoid.
///
/// On the ramps the mode equation `z'' = -k t z` (k constant) is solved by
/// Airy functions of `-eta t` (switch-on) and `eta (t - t_dkc)` (switch-off)
/// with `eta = (alpha omega0^2 / t_r)^(1/3)`; on the plateau by sines and
/// cosines at `sqrt(alpha) omega0`. Sections are joined by matching value
/// and velocity, using the Airy Wronskian `1/pi` for the 2x2 solves.
struct ModeTrack {
    t_r: f64,
    t_hold_end: f64,
    t_dkc: f64,
    eta: f64,
    omega: f64,
    ramp_on: Option<(f64, f64)>,
    hold: (f64, f64),
    ramp_off: Option<(f64, f64)>,
}

impl ModeTrack {
    fn solve(z0: f64, v0: f64, alpha: f64, sched: &KickSchedule) -> Result<Self> {
        let t_r = sched.t_r;
        let t_dkc = sched.t_dkc;
        let t_hold_end = t_dkc - t_r;
        let omega = alpha.sqrt() * sched.omega0;
        let pi = std::f64::consts::PI;

        if t_r == 0.0 {
            // Rectangular flash: single trigonometric section.
            return Ok(Self {
                t_r,
                t_hold_end,
                t_dkc,
                eta: 0.0,
                omega,
                ramp_on: None,
                hold: (z0, v0 / omega),
                ramp_off: None,
            });
        }

        let eta = (alpha * sched.omega0 * sched.omega0 / t_r).cbrt();

        // Switch-on: match (z0, v0) at t = 0, argument u = -eta t.
        let a0 = airy(0.0)?;
        let w0 = v0 / (-eta);
        let a_on = pi * (z0 * a0.bi_prime - w0 * a0.bi);
        let b_on = pi * (w0 * a0.ai - z0 * a0.ai_prime);

        // State at the end of the ramp.
        let ar = airy(-eta * t_r)?;
        let z_r = a_on * ar.ai + b_on * ar.bi;
        let v_r = -eta * (a_on * ar.ai_prime + b_on * ar.bi_prime);

        // Plateau with absolute-time phase.
        let (sin_r, cos_r) = (omega * t_r).sin_cos();
        let hold_c = z_r * cos_r - (v_r / omega) * sin_r;
        let hold_s = z_r * sin_r + (v_r / omega) * cos_r;

        // State at the start of the switch-off.
        let (sin_h, cos_h) = (omega * t_hold_end).sin_cos();
        let z_h = hold_c * cos_h + hold_s * sin_h;
        let v_h = omega * (hold_s * cos_h - hold_c * sin_h);

        // Switch-off: match at t_hold_end, argument u = eta (t - t_dkc).
        let ah = airy(eta * (t_hold_end - t_dkc))?;
        let w_h = v_h / eta;
        let a_off = pi * (z_h * ah.bi_prime - w_h * ah.bi);
        let b_off = pi * (w_h * ah.ai - z_h * ah.ai_prime);

        Ok(Self {
            t_r,
            t_hold_end,
            t_dkc,
            eta,
            omega,
            ramp_on: Some((a_on, b_on)),
            hold: (hold_c, hold_s),
            ramp_off: Some((a_off, b_off)),
        })
    }

    fn eval(&self, t: f64) -> Result<(f64, f64)> {
        if let Some((a, b)) = self.ramp_on {
            if t < self.t_r {
                let v = airy(-self.eta * t)?;
                let z = a * v.ai + b * v.bi;
                let zd = -self.eta * (a * v.ai_prime + b * v.bi_prime);
                return Ok((z, zd));
            }
        }
        if t <= self.t_hold_end || self.ramp_off.is_none() {
            let (c, s) = self.hold;
            let (sin_t, cos_t) = (self.omega * t).sin_cos();
            return Ok((
                c * cos_t + s * sin_t,
                self.omega * (s * cos_t - c * sin_t),
            ));
        }
        let (a, b) = self.ramp_off.unwrap();
        let v = airy(self.eta * (t - self.t_dkc))?;
        let z = a * v.ai + b * v.bi;
        let zd = self.eta * (a * v.ai_prime + b * v.bi_prime);
        Ok((z, zd))
    }
}

fn check_initial_state(state: &CoupledState) -> Result<()> {
    let vals = [state.t, state.r_com, state.v_com, state.r_rel, state.v_rel];
    if vals.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("initial state must be finite".into()));
    }
    if state.t != 0.0 {
        return Err(Error::InvalidInput(format!(
            "propagation starts at the flash onset; initial state has t = {}",
            state.t
        )));
    }
    Ok(())
}

fn report_grid(t_dkc: f64, report_dt: f64) -> Result<Vec<f64>> {
    if !(report_dt > 0.0 && report_dt.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "report interval must be positive, got {report_dt}"
        )));
    }
    let mut grid = vec![0.0];
    let mut k = 1usize;
    loop {
        let t = k as f64 * report_dt;
        if t >= t_dkc * (1.0 - 1e-12) {
            break;
        }
        grid.push(t);
        k += 1;
    }
    if t_dkc > 0.0 {
        grid.push(t_dkc);
    }
    Ok(grid)
}

fn assemble_trajectory(
    grid: &[f64],
    states: Vec<CoupledState>,
    sched: &KickSchedule,
    pair: &SpeciesPair,
    ratio_r: f64,
    ratio_c: f64,
) -> KickTrajectory {
    let mut energy = EnergyTrace::default();
    for (t, s) in grid.iter().zip(&states) {
        let w2 = sched.shape(*t) * sched.omega0 * sched.omega0;
        let (e_com, e_rel, e_cross) = energies(s, pair, w2, ratio_r * w2, ratio_c * w2);
        energy.times.push(*t);
        energy.e_com.push(e_com);
        energy.e_rel.push(e_rel);
        energy.e_cross.push(e_cross);
    }
    KickTrajectory { states, energy }
}

/// Propagates the coupled system through the flash with the piecewise
/// closed-form normal-mode solution, sampled every `report_dt`.
pub fn propagate_analytic(
    state0: &CoupledState,
    sched: &KickSchedule,
    pair: &SpeciesPair,
    report_dt: f64,
) -> Result<KickTrajectory> {
    check_initial_state(state0)?;
    let grid = report_grid(sched.t_dkc, report_dt)?;
    let (ratio_r, ratio_c) = frequency_ratios(pair);

    if sched.t_dkc == 0.0 {
        return Ok(assemble_trajectory(
            &grid,
            vec![*state0],
            sched,
            pair,
            ratio_r,
            ratio_c,
        ));
    }

    let modes0 = to_normal_modes(state0, pair);
    let (alpha_plus, alpha_minus) = mode_stiffness(pair);
    let plus = ModeTrack::solve(modes0.z_plus, modes0.v_plus, alpha_plus, sched)?;
    let minus = ModeTrack::solve(modes0.z_minus, modes0.v_minus, alpha_minus, sched)?;

    let mut states = Vec::with_capacity(grid.len());
    for &t in &grid {
        let (z_plus, v_plus) = plus.eval(t)?;
        let (z_minus, v_minus) = minus.eval(t)?;
        let modes = ModeState { z_plus, v_plus, z_minus, v_minus };
        states.push(from_normal_modes(&modes, pair, t));
    }
    Ok(assemble_trajectory(&grid, states, sched, pair, ratio_r, ratio_c))
}

/// Propagates the coupled system by direct numerical integration of the
/// equations of motion. Independent of the Airy route; used to cross-check
/// it. `rtol` controls the integrator's relative tolerance.
pub fn propagate_numeric(
    state0: &CoupledState,
    sched: &KickSchedule,
    pair: &SpeciesPair,
    report_dt: f64,
    rtol: f64,
) -> Result<KickTrajectory> {
    check_initial_state(state0)?;
    let grid = report_grid(sched.t_dkc, report_dt)?;
    let (ratio_r, ratio_c) = frequency_ratios(pair);

    if sched.t_dkc == 0.0 {
        return Ok(assemble_trajectory(
            &grid,
            vec![*state0],
            sched,
            pair,
            ratio_r,
            ratio_c,
        ));
    }

    // Dimensionless variables: tau = omega0 t, lengths in units of the
    // largest initial amplitude, velocities in units of scale * omega0.
    let w0 = sched.omega0;
    let scale = state0
        .r_com
        .abs()
        .max(state0.r_rel.abs())
        .max(state0.v_com.abs() / w0)
        .max(state0.v_rel.abs() / w0);
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let mu_over_m = pair.reduced_mass() / pair.total_mass();

    let sched_tau = *sched;
    let rhs = move |tau: f64, y: &[f64; 4]| {
        let t = (tau / w0).clamp(0.0, sched_tau.t_dkc);
        let s = sched_tau.shape(t);
        [
            y[1],
            s * (-y[0] + mu_over_m * ratio_c * y[2]),
            y[3],
            s * (-ratio_r * y[2] + ratio_c * y[0]),
        ]
    };

    let y0 = [
        state0.r_com / scale,
        state0.v_com / (scale * w0),
        state0.r_rel / scale,
        state0.v_rel / (scale * w0),
    ];
    let opts = OdeOptions { rtol, ..Default::default() };
    let sol = integrate_ode(rhs, (0.0, w0 * sched.t_dkc), y0, &opts)?;

    let mut states = Vec::with_capacity(grid.len());
    for &t in &grid {
        let y = sol.eval((w0 * t).min(sol.final_time()))?;
        states.push(CoupledState {
            t,
            r_com: y[0] * scale,
            v_com: y[1] * scale * w0,
            r_rel: y[2] * scale,
            v_rel: y[3] * scale * w0,
        });
    }
    Ok(assemble_trajectory(&grid, states, sched, pair, ratio_r, ratio_c))
}

/// Propagates the idealized uncoupled model: the same flash acting on the
/// center of mass and the relative coordinate independently, with the
/// coupling term dropped. The cross-energy channel is identically zero.
pub fn propagate_uncoupled(
    state0: &CoupledState,
    sched: &KickSchedule,
    pair: &SpeciesPair,
    report_dt: f64,
) -> Result<KickTrajectory> {
    check_initial_state(state0)?;
    let grid = report_grid(sched.t_dkc, report_dt)?;
    let (ratio_r, _) = frequency_ratios(pair);

    let com_track;
    let rel_track;
    if sched.t_dkc > 0.0 {
        com_track = Some(ModeTrack::solve(state0.r_com, state0.v_com, 1.0, sched)?);
        rel_track = Some(ModeTrack::solve(state0.r_rel, state0.v_rel, ratio_r, sched)?);
    } else {
        com_track = None;
        rel_track = None;
    }

    let mut states = Vec::with_capacity(grid.len());
    let mut energy = EnergyTrace::default();
    for &t in &grid {
        let (r_com, v_com) = match &com_track {
            Some(track) => track.eval(t)?,
            None => (state0.r_com, state0.v_com),
        };
        let (r_rel, v_rel) = match &rel_track {
            Some(track) => track.eval(t)?,
            None => (state0.r_rel, state0.v_rel),
        };
        let state = CoupledState { t, r_com, v_com, r_rel, v_rel };
        let w2 = sched.shape(t) * sched.omega0 * sched.omega0;
        let (e_com, e_rel, _) = energies(&state, pair, w2, ratio_r * w2, 0.0);
        energy.times.push(t);
        energy.e_com.push(e_com);
        energy.e_rel.push(e_rel);
        energy.e_cross.push(0.0);
        states.push(state);
    }
    Ok(KickTrajectory { states, energy })
}

/// Classical oscillation period of a particle of mass `mu` with total energy
/// `energy` in the one-dimensional potential `v`, J and m units.
///
/// The turning points are located by scanning `search_window` and bisecting
/// the sign changes of `energy - v(r)`; the period integral
/// `T = sqrt(2 mu) * integral dr / sqrt(energy - v(r))` is then evaluated
/// with a quadrature that absorbs the inverse-square-root endpoint
/// singularities. For a state bound by E_b below threshold pass
/// `energy = -E_b`.
pub fn classical_period(
    v: impl Fn(f64) -> f64,
    energy: f64,
    mu: f64,
    search_window: (f64, f64),
) -> Result<f64> {
    let (lo, hi) = search_window;
    if !(mu > 0.0) || !energy.is_finite() || !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::InvalidInput(format!(
            "period search needs mu > 0 and a finite window lo < hi, \
             got mu = {mu}, window [{lo}, {hi}]"
        )));
    }
    let g = |r: f64| energy - v(r);

    const SCAN: usize = 512;
    let dr = (hi - lo) / SCAN as f64;
    let mut rising: Option<(f64, f64)> = None;
    let mut falling: Option<(f64, f64)> = None;
    let mut g_prev = g(lo);
    let mut any_positive = false;
    for i in 1..=SCAN {
        let r = lo + i as f64 * dr;
        let g_here = g(r);
        if g_here > 0.0 {
            any_positive = true;
        }
        if g_prev <= 0.0 && g_here > 0.0 && rising.is_none() {
            rising = Some((r - dr, r));
        }
        if g_prev > 0.0 && g_here <= 0.0 {
            falling = Some((r - dr, r));
        }
        g_prev = g_here;
    }
    let (Some(rise), Some(fall)) = (rising, falling) else {
        return Err(Error::Bracket(format!(
            "window [{lo}, {hi}] does not bracket both turning points \
             (classically allowed region found: {any_positive})"
        )));
    };

    let xtol = (hi - lo) * 1e-13;
    let r_min = find_root(g, rise, xtol)?;
    let r_max = find_root(g, fall, xtol)?;
    if r_max <= r_min {
        return Err(Error::Inconsistent(
            "turning points collapsed during refinement".into(),
        ));
    }

    let integrand = |r: f64| {
        let k = g(r);
        if k > 0.0 {
            1.0 / k.sqrt()
        } else {
            0.0
        }
    };
    let integral = quad(integrand, r_min, r_max, 1e-10, true)?;
    Ok((2.0 * mu).sqrt() * integral)
}
