//! Expansion scaling laws and kick optimization for a released cloud.
//!
//! After release from a harmonic trap, the cloud's width evolves as
//! `sigma(t) = sigma0 lambda(t)` with a single scaling factor obeying
//!
//! ```text
//! lambda'' = -omega^2(t) lambda + omega0^2 (c4 / lambda^4 + c3 / lambda^3)
//! ```
//!
//! where `omega(t)` is the (flashed) trap frequency and the pair `(c4, c3)`
//! encodes the interaction regime: Thomas-Fermi `(1, 0)`, variational
//! `(1, alpha)` with a kinetic-pressure correction `alpha`, hydrodynamic
//! crossover `(xi, 1 - xi)`, and ideal thermal `(0, 1)`. A full sequence is
//! free pre-expansion, a trapezoidal flash, and time of flight; the figure of
//! merit is the ratio of asymptotic expansion energies without and with the
//! flash.

use crate::constants::K_B;
use crate::coupled::KickSchedule;
use crate::error::{Error, Result};
use crate::numerics::ode::{integrate_ode, OdeOptions, OdeSolution};
use crate::numerics::optimize::{find_root, minimize_scalar};
use crate::species::{oscillator_length, SpeciesPair};

/// Interaction regime of the expanding cloud.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// Interaction-dominated condensate, Thomas-Fermi limit.
    ThomasFermi,
    /// Condensate with a variational kinetic-pressure correction computed
    /// from the molecule number and the intermolecular scattering length.
    Variational { n_molecules: f64, a_dd: f64 },
    /// Hydrodynamic crossover with mean-field fraction `xi` in [0, 1].
    Hydrodynamic { xi: f64 },
    /// Ideal (collisionless) thermal gas.
    Thermal,
}

impl Regime {
    /// The `(c4, c3)` coefficients of the scaling equation. `a_mol` is the
    /// molecular oscillator length, needed only by the variational regime.
    pub fn coefficients(&self, a_mol: f64) -> Result<(f64, f64)> {
        match *self {
            Regime::ThomasFermi => Ok((1.0, 0.0)),
            Regime::Variational { n_molecules, a_dd } => {
                Ok((1.0, variational_correction(a_mol, n_molecules, a_dd)?))
            }
            Regime::Hydrodynamic { xi } => {
                if !(0.0..=1.0).contains(&xi) {
                    return Err(Error::InvalidInput(format!(
                        "mean-field fraction must lie in [0, 1], got {xi}"
                    )));
                }
                Ok((xi, 1.0 - xi))
            }
            Regime::Thermal => Ok((0.0, 1.0)),
        }
    }
}

/// Kinetic-pressure correction of the variational condensate ansatz:
/// `alpha = (pi/2)^(2/5) (a_mol / (N a_dd))^(4/5)`.
pub fn variational_correction(a_mol: f64, n_molecules: f64, a_dd: f64) -> Result<f64> {
    if !(a_mol > 0.0) || !(n_molecules > 0.0) || !(a_dd > 0.0) {
        return Err(Error::InvalidInput(format!(
            "variational correction needs positive a_mol, N, a_dd; \
             got {a_mol}, {n_molecules}, {a_dd}"
        )));
    }
    Ok((std::f64::consts::FRAC_PI_2).powf(0.4) * (a_mol / (n_molecules * a_dd)).powf(0.8))
}

/// Right-hand side of the scaling equation for given regime coefficients.
/// `omega_sq_t` is the instantaneous squared trap frequency, `omega_sq_0`
/// the squared frequency of the trap the cloud equilibrated in.
pub fn scaling_rhs(
    coeffs: (f64, f64),
    lambda: f64,
    omega_sq_t: f64,
    omega_sq_0: f64,
) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::OutOfRange(format!(
            "scaling factor must be positive, got {lambda}"
        )));
    }
    let (c4, c3) = coeffs;
    let l2 = lambda * lambda;
    Ok(-omega_sq_t * lambda + omega_sq_0 * (c4 / (l2 * l2) + c3 / (l2 * lambda)))
}

/// Mean-field fraction `xi = E_mf / (E_mf + k_B T)` with
/// `E_mf = 4 pi hbar^2 a_dd n0 / (sqrt(2) m)`.
pub fn mean_field_xi(temperature: f64, peak_density: f64, a_dd: f64, mass: f64) -> Result<f64> {
    if !(a_dd > 0.0) || !(mass > 0.0) || temperature < 0.0 || peak_density < 0.0 {
        return Err(Error::InvalidInput(format!(
            "mean-field fraction needs a_dd, m > 0 and T, n0 >= 0; \
             got T = {temperature}, n0 = {peak_density}, a_dd = {a_dd}, m = {mass}"
        )));
    }
    if temperature == 0.0 && peak_density == 0.0 {
        return Err(Error::InvalidInput(
            "mean-field fraction undefined for T = 0 and n0 = 0".into(),
        ));
    }
    let e_mf = 4.0 * std::f64::consts::PI * crate::constants::HBAR * crate::constants::HBAR
        * a_dd * peak_density
        / (std::f64::consts::SQRT_2 * mass);
    Ok(e_mf / (e_mf + K_B * temperature))
}

/// Cloud properties that close the regime definitions: molecule number and
/// intermolecular scattering length for condensed regimes, temperature for
/// hydrodynamic and thermal ones. All SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CloudParams {
    pub n_molecules: f64,
    pub a_dd: f64,
    pub temperature: f64,
}

/// In-trap cloud size for a regime, m.
///
/// Condensed regimes return the Thomas-Fermi radius
/// `R_TF = a_mol (15 N a_dd / a_mol)^(1/5)`; the variational regime takes
/// `N` and `a_dd` from its own parameters, the Thomas-Fermi regime from
/// `cloud`. Hydrodynamic and thermal regimes return the Gaussian width
/// `sqrt(k_B T / m) / (omega sqrt(1 - xi))`, which diverges as `xi -> 1`
/// (use a width override in that limit).
pub fn initial_size(
    regime: &Regime,
    pair: &SpeciesPair,
    omega_trap: f64,
    cloud: &CloudParams,
) -> Result<f64> {
    let m = pair.total_mass();
    let a_mol = oscillator_length(m, omega_trap)?;
    let tf_radius = |n: f64, a_dd: f64| -> Result<f64> {
        if !(n > 0.0) || !(a_dd > 0.0) {
            return Err(Error::InvalidInput(format!(
                "condensed in-trap size needs N, a_dd > 0, got {n}, {a_dd}"
            )));
        }
        Ok(a_mol * (15.0 * n * a_dd / a_mol).powf(0.2))
    };
    let thermal_width = |xi: f64| -> Result<f64> {
        if !(cloud.temperature > 0.0) {
            return Err(Error::InvalidInput(format!(
                "thermal in-trap size needs T > 0, got {}",
                cloud.temperature
            )));
        }
        if !(0.0..1.0).contains(&xi) {
            return Err(Error::InvalidInput(format!(
                "in-trap size diverges for mean-field fraction {xi}; \
                 it must lie in [0, 1)"
            )));
        }
        Ok((K_B * cloud.temperature / m).sqrt() / (omega_trap * (1.0 - xi).sqrt()))
    };
    match *regime {
        Regime::ThomasFermi => tf_radius(cloud.n_molecules, cloud.a_dd),
        Regime::Variational { n_molecules, a_dd } => tf_radius(n_molecules, a_dd),
        Regime::Hydrodynamic { xi } => thermal_width(xi),
        Regime::Thermal => thermal_width(0.0),
    }
}

/// A full collimation sequence: hold in the trap, release, free expansion
/// for `t_pre_tof`, trapezoidal flash of the same trap, time of flight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequenceConfig {
    /// Trap (and flash peak) angular frequency, rad/s.
    pub omega_trap: f64,
    /// Free expansion before the flash, s.
    pub t_pre_tof: f64,
    /// Flash ramp time, s; clipped to half the flash length.
    pub t_ramp: f64,
    /// Total flash length, s; zero disables the flash.
    pub t_dkc: f64,
    /// Time of flight after the flash, s (affects only the width trace).
    pub t_tof: f64,
    pub regime: Regime,
    pub cloud: CloudParams,
    /// Replaces the computed standard-deviation width at release, m.
    pub sigma0_override: Option<f64>,
}

impl SequenceConfig {
    fn validate(&self) -> Result<()> {
        if !(self.omega_trap > 0.0 && self.omega_trap.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "trap frequency must be positive, got {}",
                self.omega_trap
            )));
        }
        for (name, v) in [
            ("t_pre_tof", self.t_pre_tof),
            ("t_ramp", self.t_ramp),
            ("t_dkc", self.t_dkc),
            ("t_tof", self.t_tof),
        ] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "{name} must be nonnegative and finite, got {v}"
                )));
            }
        }
        if let Some(s) = self.sigma0_override {
            if !(s > 0.0 && s.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "width override must be positive, got {s}"
                )));
            }
        }
        Ok(())
    }

    /// Flash schedule for a given total length, with the ramp clipped so
    /// short flashes degrade to triangles.
    fn schedule(&self, t_dkc: f64) -> Result<KickSchedule> {
        KickSchedule::new(self.omega_trap, self.t_ramp.min(0.5 * t_dkc), t_dkc)
    }

    /// Standard-deviation width of the cloud at release, m. Condensed
    /// regimes convert the Thomas-Fermi radius to the equivalent standard
    /// deviation (radius / sqrt(7)).
    pub fn sigma0_std(&self, pair: &SpeciesPair) -> Result<f64> {
        if let Some(s) = self.sigma0_override {
            return Ok(s);
        }
        let size = initial_size(&self.regime, pair, self.omega_trap, &self.cloud)?;
        Ok(match self.regime {
            Regime::ThomasFermi | Regime::Variational { .. } => size / 7.0f64.sqrt(),
            Regime::Hydrodynamic { .. } | Regime::Thermal => size,
        })
    }
}

/// Scaling factor and its dimensionless rate (d lambda / d(omega t)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingState {
    pub lambda: f64,
    pub lambda_dot: f64,
}

/// Temperature-equivalent asymptotic expansion energy (K) of a freely
/// expanding cloud currently at `state`: the conserved quantity
///
/// ```text
/// lambda_dot_inf^2 = lambda_dot^2 + 2 c4 / (3 lambda^3) + c3 / lambda^2
/// E = m (sigma0_std omega0 lambda_dot_inf)^2 / k_B
/// ```
pub fn asymptotic_expansion_energy(
    state: &ScalingState,
    coeffs: (f64, f64),
    sigma0_std: f64,
    omega0: f64,
    total_mass: f64,
) -> Result<f64> {
    if !(state.lambda > 0.0) {
        return Err(Error::OutOfRange(format!(
            "scaling factor must be positive, got {}",
            state.lambda
        )));
    }
    let (c4, c3) = coeffs;
    let l = state.lambda;
    let rate_sq = state.lambda_dot * state.lambda_dot
        + 2.0 * c4 / (3.0 * l * l * l)
        + c3 / (l * l);
    if rate_sq < 0.0 {
        return Err(Error::Inconsistent(format!(
            "negative asymptotic rate squared: {rate_sq}"
        )));
    }
    let v = sigma0_std * omega0;
    Ok(total_mass * v * v * rate_sq / K_B)
}

/// Outcome of one collimation sequence.
#[derive(Debug, Clone)]
pub struct SequenceResult {
    /// Cloud standard deviation over the whole sequence, (t, sigma) in s, m.
    pub sigma_trace: Vec<(f64, f64)>,
    /// Width when the flash switches on, m.
    pub sigma_at_kick: f64,
    /// Scaling state when the flash ends.
    pub kick_exit: ScalingState,
    /// Asymptotic expansion energy without any flash, K.
    pub e_initial: f64,
    /// Asymptotic expansion energy after the flash, K.
    pub e_final: f64,
    /// Collimation gain `e_initial / e_final`; exactly 1 for `t_dkc = 0`.
    pub gain: f64,
}

fn ode_defaults() -> OdeOptions {
    OdeOptions {
        rtol: 1e-10,
        atol: 1e-12,
        ..Default::default()
    }
}

const LAMBDA_FLOOR: f64 = 1e-2;

fn check_focus(sol: &OdeSolution<2>, omega: f64, t_offset: f64) -> Result<()> {
    for (t, y) in sol.times().iter().zip(sol.states()) {
        if y[0] < LAMBDA_FLOOR {
            return Err(Error::FocusCrossing {
                t: t_offset + t / omega,
            });
        }
    }
    Ok(())
}

/// Free-expansion phase over `tau_span` dimensionless time units.
fn integrate_free(
    state: ScalingState,
    coeffs: (f64, f64),
    tau_span: f64,
) -> Result<OdeSolution<2>> {
    let (c4, c3) = coeffs;
    integrate_ode(
        move |_tau, y: &[f64; 2]| {
            let l = y[0].max(1e-6);
            let l2 = l * l;
            [y[1], c4 / (l2 * l2) + c3 / (l2 * l)]
        },
        (0.0, tau_span),
        [state.lambda, state.lambda_dot],
        &ode_defaults(),
    )
}

/// Flash phase in dimensionless time.
fn integrate_kick(
    state: ScalingState,
    coeffs: (f64, f64),
    sched: &KickSchedule,
) -> Result<OdeSolution<2>> {
    let (c4, c3) = coeffs;
    let omega = sched.omega0();
    let sched = *sched;
    integrate_ode(
        move |tau, y: &[f64; 2]| {
            let t = (tau / omega).clamp(0.0, sched.t_dkc());
            let shape = sched.omega_sq_at(t).unwrap_or(0.0) / (omega * omega);
            let l = y[0].max(1e-6);
            let l2 = l * l;
            [y[1], -shape * l + c4 / (l2 * l2) + c3 / (l2 * l)]
        },
        (0.0, omega * sched.t_dkc()),
        [state.lambda, state.lambda_dot],
        &ode_defaults(),
    )
}

fn end_state(sol: &OdeSolution<2>) -> ScalingState {
    let [lambda, lambda_dot] = sol.final_state();
    ScalingState { lambda, lambda_dot }
}

/// Runs a full sequence and samples the width trace every `report_dt`.
pub fn run_sequence(
    cfg: &SequenceConfig,
    pair: &SpeciesPair,
    report_dt: f64,
) -> Result<SequenceResult> {
    if !(report_dt > 0.0 && report_dt.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "report interval must be positive, got {report_dt}"
        )));
    }
    cfg.validate()?;
    let omega = cfg.omega_trap;
    let a_mol = oscillator_length(pair.total_mass(), omega)?;
    let coeffs = cfg.regime.coefficients(a_mol)?;
    let sigma0 = cfg.sigma0_std(pair)?;
    let e_initial = closed_form_initial_energy(coeffs, sigma0, omega, pair.total_mass());

    let released = ScalingState { lambda: 1.0, lambda_dot: 0.0 };
    let sol_pre = if cfg.t_pre_tof > 0.0 {
        let sol = integrate_free(released, coeffs, omega * cfg.t_pre_tof)?;
        check_focus(&sol, omega, 0.0)?;
        Some(sol)
    } else {
        None
    };
    let at_kick = sol_pre.as_ref().map_or(released, end_state);

    let sched = cfg.schedule(cfg.t_dkc)?;
    let sol_kick = if cfg.t_dkc > 0.0 {
        let sol = integrate_kick(at_kick, coeffs, &sched)?;
        check_focus(&sol, omega, cfg.t_pre_tof)?;
        Some(sol)
    } else {
        None
    };
    let kick_exit = sol_kick.as_ref().map_or(at_kick, end_state);

    let e_final = if cfg.t_dkc > 0.0 {
        asymptotic_expansion_energy(&kick_exit, coeffs, sigma0, omega, pair.total_mass())?
    } else {
        e_initial
    };
    if !(e_final > 0.0) {
        return Err(Error::Inconsistent(format!(
            "nonpositive final expansion energy {e_final}"
        )));
    }

    let sol_tof = if cfg.t_tof > 0.0 {
        let sol = integrate_free(kick_exit, coeffs, omega * cfg.t_tof)?;
        check_focus(&sol, omega, cfg.t_pre_tof + cfg.t_dkc)?;
        Some(sol)
    } else {
        None
    };

    let t_total = cfg.t_pre_tof + cfg.t_dkc + cfg.t_tof;
    let eval_lambda = |t: f64| -> Result<f64> {
        let y = if t <= cfg.t_pre_tof {
            match &sol_pre {
                Some(sol) => sol.eval(omega * t)?,
                None => [1.0, 0.0],
            }
        } else if t <= cfg.t_pre_tof + cfg.t_dkc {
            match &sol_kick {
                Some(sol) => sol.eval(omega * (t - cfg.t_pre_tof))?,
                None => [at_kick.lambda, at_kick.lambda_dot],
            }
        } else {
            match &sol_tof {
                Some(sol) => sol.eval(omega * (t - cfg.t_pre_tof - cfg.t_dkc))?,
                None => [kick_exit.lambda, kick_exit.lambda_dot],
            }
        };
        Ok(y[0])
    };

    let mut sigma_trace = Vec::new();
    let mut t = 0.0;
    let mut k = 0usize;
    while t < t_total * (1.0 - 1e-12) {
        sigma_trace.push((t, sigma0 * eval_lambda(t)?));
        k += 1;
        t = k as f64 * report_dt;
    }
    sigma_trace.push((t_total, sigma0 * eval_lambda(t_total)?));

    Ok(SequenceResult {
        sigma_trace,
        sigma_at_kick: sigma0 * at_kick.lambda,
        kick_exit,
        e_initial,
        e_final,
        gain: e_initial / e_final,
    })
}

/// Asymptotic expansion energy of the unkicked cloud, K. Follows from the
/// conserved first integral evaluated at release (lambda = 1, rate 0).
fn closed_form_initial_energy(
    coeffs: (f64, f64),
    sigma0_std: f64,
    omega: f64,
    total_mass: f64,
) -> f64 {
    let (c4, c3) = coeffs;
    let v = sigma0_std * omega;
    total_mass * v * v * (2.0 * c4 / 3.0 + c3) / K_B
}

/// One scan sample: flash length and either the result or the per-point
/// failure.
#[derive(Debug, Clone)]
pub struct ScanPoint {
    pub t_dkc: f64,
    pub outcome: Result<GainPoint>,
}

/// Gain and final expansion energy for one flash length.
#[derive(Debug, Clone, Copy)]
pub struct GainPoint {
    pub gain: f64,
    pub e_final: f64,
}

/// Shared per-sequence quantities, computed once per scan.
struct ScanContext {
    coeffs: (f64, f64),
    sigma0: f64,
    omega: f64,
    total_mass: f64,
    e_initial: f64,
    at_kick: ScalingState,
}

impl ScanContext {
    fn prepare(cfg: &SequenceConfig, pair: &SpeciesPair) -> Result<Self> {
        cfg.validate()?;
        let omega = cfg.omega_trap;
        let a_mol = oscillator_length(pair.total_mass(), omega)?;
        let coeffs = cfg.regime.coefficients(a_mol)?;
        let sigma0 = cfg.sigma0_std(pair)?;
        let e_initial = closed_form_initial_energy(coeffs, sigma0, omega, pair.total_mass());
        let released = ScalingState { lambda: 1.0, lambda_dot: 0.0 };
        let at_kick = if cfg.t_pre_tof > 0.0 {
            let sol = integrate_free(released, coeffs, omega * cfg.t_pre_tof)?;
            check_focus(&sol, omega, 0.0)?;
            end_state(&sol)
        } else {
            released
        };
        Ok(Self {
            coeffs,
            sigma0,
            omega,
            total_mass: pair.total_mass(),
            e_initial,
            at_kick,
        })
    }

    fn gain_at(&self, cfg: &SequenceConfig, t_dkc: f64) -> Result<GainPoint> {
        if !(t_dkc >= 0.0 && t_dkc.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "flash length must be nonnegative, got {t_dkc}"
            )));
        }
        if t_dkc == 0.0 {
            return Ok(GainPoint { gain: 1.0, e_final: self.e_initial });
        }
        let sched = cfg.schedule(t_dkc)?;
        let sol = integrate_kick(self.at_kick, self.coeffs, &sched)?;
        check_focus(&sol, self.omega, cfg.t_pre_tof)?;
        let exit = end_state(&sol);
        let e_final = asymptotic_expansion_energy(
            &exit,
            self.coeffs,
            self.sigma0,
            self.omega,
            self.total_mass,
        )?;
        if !(e_final > 0.0) {
            return Err(Error::Inconsistent(format!(
                "nonpositive final expansion energy {e_final}"
            )));
        }
        Ok(GainPoint { gain: self.e_initial / e_final, e_final })
    }
}

/// Evaluates the collimation gain for each flash length in `grid`,
/// sequentially. The pre-flash expansion and the reference energy are
/// computed once and shared. Per-point failures land in the corresponding
/// [`ScanPoint`] instead of aborting the scan.
pub fn gain_scan(cfg: &SequenceConfig, pair: &SpeciesPair, grid: &[f64]) -> Vec<ScanPoint> {
    match ScanContext::prepare(cfg, pair) {
        Ok(ctx) => grid
            .iter()
            .map(|&t| ScanPoint { t_dkc: t, outcome: ctx.gain_at(cfg, t) })
            .collect(),
        Err(e) => grid
            .iter()
            .map(|&t| ScanPoint { t_dkc: t, outcome: Err(e.clone()) })
            .collect(),
    }
}

/// Like [`gain_scan`] but splits the grid across `threads` worker threads.
/// Results are reassembled in grid order and are bit-identical to the
/// sequential scan for any thread count.
pub fn gain_scan_parallel(
    cfg: &SequenceConfig,
    pair: &SpeciesPair,
    grid: &[f64],
    threads: usize,
) -> Vec<ScanPoint> {
    if threads <= 1 || grid.len() <= 1 {
        return gain_scan(cfg, pair, grid);
    }
    let ctx = match ScanContext::prepare(cfg, pair) {
        Ok(ctx) => ctx,
        Err(e) => {
            return grid
                .iter()
                .map(|&t| ScanPoint { t_dkc: t, outcome: Err(e.clone()) })
                .collect()
        }
    };
    let workers = threads.min(grid.len());
    let chunk = grid.len().div_ceil(workers);
    let mut points = Vec::with_capacity(grid.len());
    std::thread::scope(|scope| {
        let ctx = &ctx;
        let handles: Vec<_> = grid
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&t| ScanPoint { t_dkc: t, outcome: ctx.gain_at(cfg, t) })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for handle in handles {
            points.extend(handle.join().expect("scan worker panicked"));
        }
    });
    points
}

/// Optimal flash length and the threshold window around it.
#[derive(Debug, Clone, Copy)]
pub struct KickOptimum {
    /// Flash length maximizing the gain, s.
    pub t_opt: f64,
    /// Gain at the optimum.
    pub gain_max: f64,
    /// Final expansion energy at the optimum, K.
    pub e_final: f64,
    /// Contiguous interval around `t_opt` where the gain stays at or above
    /// the requested threshold; `None` when the threshold exceeds the peak.
    pub window: Option<(f64, f64)>,
}

const T_XTOL: f64 = 1e-9;

/// Finds the flash length in `bracket` that maximizes the collimation gain,
/// then brackets the `gain = threshold` crossings on both sides.
///
/// A threshold above the achieved maximum yields an empty window rather
/// than an error. Assumes the gain is unimodal on the bracket.
pub fn optimize_kick(
    cfg: &SequenceConfig,
    pair: &SpeciesPair,
    bracket: (f64, f64),
    threshold: f64,
) -> Result<KickOptimum> {
    if !threshold.is_finite() {
        return Err(Error::InvalidInput("threshold must be finite".into()));
    }
    let ctx = ScanContext::prepare(cfg, pair)?;
    let first_error: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);
    let gain_or_penalty = |t: f64| match ctx.gain_at(cfg, t) {
        Ok(point) => point.gain,
        Err(e) => {
            first_error.borrow_mut().get_or_insert(e);
            -1e300
        }
    };

    let (t_opt, neg_gain) = minimize_scalar(|t| -gain_or_penalty(t), bracket, T_XTOL)?;
    let gain_max = -neg_gain;
    if gain_max <= -1e299 {
        return Err(first_error
            .borrow_mut()
            .take()
            .unwrap_or_else(|| Error::Inconsistent("gain evaluation failed".into())));
    }
    let e_final = ctx.gain_at(cfg, t_opt)?.e_final;

    let window = if threshold > gain_max {
        None
    } else {
        let cross = |a: f64, b: f64| -> Result<f64> {
            find_root(|t| gain_or_penalty(t) - threshold, (a, b), T_XTOL)
        };
        // Walk outward until the gain drops below threshold, then bisect.
        let side = |dir: f64, edge: f64| -> Result<f64> {
            let span = (edge - t_opt).abs();
            let steps = 64;
            let mut prev = t_opt;
            for k in 1..=steps {
                let t = t_opt + dir * span * k as f64 / steps as f64;
                if gain_or_penalty(t) < threshold {
                    return if dir > 0.0 { cross(prev, t) } else { cross(t, prev) };
                }
                prev = t;
            }
            Ok(edge)
        };
        let lo = side(-1.0, bracket.0)?;
        let hi = side(1.0, bracket.1)?;
        Some((lo, hi))
    };

    Ok(KickOptimum { t_opt, gain_max, e_final, window })
}
