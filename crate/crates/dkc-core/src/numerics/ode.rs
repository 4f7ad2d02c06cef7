//! Adaptive Dormand-Prince 5(4) integrator with 5th-order dense output.
//!
//! The state dimension is a const generic so trajectories stay on the stack
//! during stepping. Dense-output coefficients are stored for every accepted
//! step, which lets callers sample trajectories on arbitrary report grids
//! without constraining the step controller.

use crate::error::{Error, Result};

/// Tolerances and limits for [`integrate_ode`].
#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    /// Relative tolerance per component.
    pub rtol: f64,
    /// Absolute tolerance per component.
    pub atol: f64,
    /// Initial step size; estimated automatically when `None`.
    pub initial_step: Option<f64>,
    /// Maximum number of accepted plus rejected steps.
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-14,
            initial_step: None,
            max_steps: 1_000_000,
        }
    }
}

/// One accepted step's interpolation polynomial.
#[derive(Debug, Clone)]
struct DenseSegment<const N: usize> {
    t0: f64,
    h: f64,
    r: [[f64; N]; 5],
}

impl<const N: usize> DenseSegment<N> {
    /// Quartic Hermite-type interpolant in theta = (t - t0) / h.
    fn eval(&self, theta: f64) -> [f64; N] {
        let th1 = 1.0 - theta;
        let mut y = [0.0; N];
        for (i, yi) in y.iter_mut().enumerate() {
            let [r1, r2, r3, r4, r5] = [
                self.r[0][i],
                self.r[1][i],
                self.r[2][i],
                self.r[3][i],
                self.r[4][i],
            ];
            *yi = r1 + theta * (r2 + th1 * (r3 + theta * (r4 + th1 * r5)));
        }
        y
    }
}

/// Result of an adaptive integration: the accepted grid, states on it, and a
/// dense interpolant covering the whole span.
#[derive(Debug, Clone)]
pub struct OdeSolution<const N: usize> {
    times: Vec<f64>,
    states: Vec<[f64; N]>,
    segments: Vec<DenseSegment<N>>,
    /// Accepted step count.
    pub n_accepted: usize,
    /// Rejected (re-tried) step count.
    pub n_rejected: usize,
}

impl<const N: usize> OdeSolution<N> {
    /// Accepted time nodes, strictly increasing from t0 to t1.
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// States at the accepted nodes.
    pub fn states(&self) -> &[[f64; N]] {
        &self.states
    }

    pub fn final_time(&self) -> f64 {
        *self.times.last().unwrap()
    }

    pub fn final_state(&self) -> [f64; N] {
        *self.states.last().unwrap()
    }

    /// Interpolates the solution at `t`, which must lie within the
    /// integration span (up to a small rounding slack).
    pub fn eval(&self, t: f64) -> Result<[f64; N]> {
        let (t0, t1) = (self.times[0], *self.times.last().unwrap());
        let slack = 1e-12 * (t1 - t0).abs().max(t0.abs()).max(t1.abs()).max(1e-300);
        if t < t0 - slack || t > t1 + slack {
            return Err(Error::OutOfRange(format!(
                "dense evaluation at t = {t} outside [{t0}, {t1}]"
            )));
        }
        if self.segments.is_empty() {
            return Ok(self.states[0]);
        }
        let t = t.clamp(t0, t1);
        // Find the segment containing t.
        let idx = match self
            .times
            .binary_search_by(|probe| probe.partial_cmp(&t).unwrap())
        {
            Ok(i) => i.min(self.segments.len() - 1),
            Err(i) => i.saturating_sub(1).min(self.segments.len() - 1),
        };
        let seg = &self.segments[idx];
        let theta = ((t - seg.t0) / seg.h).clamp(0.0, 1.0);
        Ok(seg.eval(theta))
    }
}

// Dormand-Prince coefficients.
const A21: f64 = 0.2;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const SAFETY: f64 = 0.9;
const FAC_MIN: f64 = 0.2;
const FAC_MAX: f64 = 5.0;

fn rms_norm<const N: usize>(v: &[f64; N], sc: &[f64; N]) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        let q = v[i] / sc[i];
        s += q * q;
    }
    (s / N as f64).sqrt()
}

fn initial_step<const N: usize>(
    f: &mut impl FnMut(f64, &[f64; N]) -> [f64; N],
    t0: f64,
    y0: &[f64; N],
    k1: &[f64; N],
    span: f64,
    rtol: f64,
    atol: f64,
) -> f64 {
    let mut sc = [0.0; N];
    for i in 0..N {
        sc[i] = atol + rtol * y0[i].abs();
    }
    let d0 = rms_norm(y0, &sc);
    let d1 = rms_norm(k1, &sc);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    let h0 = h0.min(span);
    let mut y1 = [0.0; N];
    for i in 0..N {
        y1[i] = y0[i] + h0 * k1[i];
    }
    let k2 = f(t0 + h0, &y1);
    let mut diff = [0.0; N];
    for i in 0..N {
        diff[i] = k2[i] - k1[i];
    }
    let d2 = rms_norm(&diff, &sc) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1).min(span)
}

/// Integrates `y' = f(t, y)` from `t_span.0` to `t_span.1` with adaptive
/// Dormand-Prince 5(4) steps and returns the trajectory with dense output.
///
/// Requires `t_span.1 >= t_span.0`; an empty span returns the initial state.
pub fn integrate_ode<const N: usize>(
    mut f: impl FnMut(f64, &[f64; N]) -> [f64; N],
    t_span: (f64, f64),
    y0: [f64; N],
    opts: &OdeOptions,
) -> Result<OdeSolution<N>> {
    let (t0, t1) = t_span;
    if !t0.is_finite() || !t1.is_finite() || t1 < t0 {
        return Err(Error::InvalidInput(format!(
            "integration span must be finite with t1 >= t0, got [{t0}, {t1}]"
        )));
    }
    if y0.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("initial state must be finite".into()));
    }
    if !(opts.rtol > 0.0) || !(opts.atol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tolerances must be positive, got rtol {}, atol {}",
            opts.rtol, opts.atol
        )));
    }

    let mut sol = OdeSolution {
        times: vec![t0],
        states: vec![y0],
        segments: Vec::new(),
        n_accepted: 0,
        n_rejected: 0,
    };
    if t1 == t0 {
        return Ok(sol);
    }

    let span = t1 - t0;
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut h = match opts.initial_step {
        Some(h0) if h0 > 0.0 => h0.min(span),
        Some(h0) => {
            return Err(Error::InvalidInput(format!(
                "initial step must be positive, got {h0}"
            )))
        }
        None => initial_step(&mut f, t0, &y0, &k1, span, opts.rtol, opts.atol),
    };

    let mut steps = 0usize;
    while t < t1 {
        steps += 1;
        if steps > opts.max_steps {
            return Err(Error::IntegrationFailure {
                t_last: t,
                reason: format!("step budget of {} exhausted", opts.max_steps),
            });
        }
        let h_min = 16.0 * f64::EPSILON * t.abs().max(t1.abs()).max(1.0e-300);
        if h < h_min {
            return Err(Error::IntegrationFailure {
                t_last: t,
                reason: "step size underflow".into(),
            });
        }
        let last = t + h >= t1;
        if last {
            h = t1 - t;
        }

        let mut yt = [0.0; N];
        for i in 0..N {
            yt[i] = y[i] + h * A21 * k1[i];
        }
        let k2 = f(t + 0.2 * h, &yt);
        for i in 0..N {
            yt[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
        }
        let k3 = f(t + 0.3 * h, &yt);
        for i in 0..N {
            yt[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        }
        let k4 = f(t + 0.8 * h, &yt);
        for i in 0..N {
            yt[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
        }
        let k5 = f(t + (8.0 / 9.0) * h, &yt);
        for i in 0..N {
            yt[i] = y[i]
                + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
        }
        let k6 = f(t + h, &yt);
        let mut y1 = [0.0; N];
        for i in 0..N {
            y1[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
        }
        let k7 = f(t + h, &y1);

        if y1.iter().any(|v| !v.is_finite()) || k7.iter().any(|v| !v.is_finite()) {
            return Err(Error::IntegrationFailure {
                t_last: t,
                reason: "non-finite state encountered".into(),
            });
        }

        let mut err_vec = [0.0; N];
        let mut sc = [0.0; N];
        for i in 0..N {
            err_vec[i] = h
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            sc[i] = opts.atol + opts.rtol * y[i].abs().max(y1[i].abs());
        }
        let err = rms_norm(&err_vec, &sc);

        if err <= 1.0 {
            // Accept: store dense coefficients, advance, reuse k7 (FSAL).
            let mut r = [[0.0; N]; 5];
            for i in 0..N {
                let ydiff = y1[i] - y[i];
                let bspl = h * k1[i] - ydiff;
                r[0][i] = y[i];
                r[1][i] = ydiff;
                r[2][i] = bspl;
                r[3][i] = ydiff - h * k7[i] - bspl;
                r[4][i] = h
                    * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i]
                        + D7 * k7[i]);
            }
            sol.segments.push(DenseSegment { t0: t, h, r });
            t = if last { t1 } else { t + h };
            y = y1;
            k1 = k7;
            sol.times.push(t);
            sol.states.push(y);
            sol.n_accepted += 1;
            let fac = (SAFETY * err.powf(-0.2)).clamp(FAC_MIN, FAC_MAX);
            h *= fac;
        } else {
            sol.n_rejected += 1;
            let fac = (SAFETY * err.powf(-0.2)).clamp(FAC_MIN, 1.0);
            h *= fac;
        }
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay() {
        let sol = integrate_ode(
            |_t, y: &[f64; 1]| [-y[0]],
            (0.0, 5.0),
            [1.0],
            &OdeOptions::default(),
        )
        .unwrap();
        let exact = (-5.0f64).exp();
        assert!((sol.final_state()[0] - exact).abs() < 1e-10);
        // Dense output agrees with the closed form between nodes.
        for k in 0..50 {
            let t = 0.1 * k as f64;
            let y = sol.eval(t).unwrap()[0];
            assert!((y - (-t).exp()).abs() < 1e-9, "dense err at t = {t}");
        }
    }

    #[test]
    fn harmonic_oscillator_energy() {
        let sol = integrate_ode(
            |_t, y: &[f64; 2]| [y[1], -y[0]],
            (0.0, 20.0 * std::f64::consts::PI),
            [1.0, 0.0],
            &OdeOptions::default(),
        )
        .unwrap();
        let [x, v] = sol.final_state();
        let energy = 0.5 * (x * x + v * v);
        assert!((energy - 0.5).abs() < 1e-9);
        assert!((x - 1.0).abs() < 1e-7);
    }

    #[test]
    fn tightening_rtol_reduces_error() {
        let run = |rtol: f64| {
            let opts = OdeOptions { rtol, atol: 1e-16, ..Default::default() };
            let sol =
                integrate_ode(|t, y: &[f64; 1]| [t * y[0]], (0.0, 2.0), [1.0], &opts).unwrap();
            (sol.final_state()[0] - (2.0f64).exp()).abs()
        };
        let coarse = run(1e-6);
        let fine = run(1e-9);
        assert!(fine < coarse / 1.5, "coarse {coarse}, fine {fine}");
    }

    #[test]
    fn grid_is_strictly_increasing_and_spans() {
        let sol = integrate_ode(
            |_t, y: &[f64; 2]| [y[1], -4.0 * y[0]],
            (0.5, 3.5),
            [0.3, -0.1],
            &OdeOptions::default(),
        )
        .unwrap();
        let ts = sol.times();
        assert_eq!(ts[0], 0.5);
        assert_eq!(*ts.last().unwrap(), 3.5);
        assert!(ts.windows(2).all(|w| w[1] > w[0]));
        // Dense eval reproduces the stored nodes.
        for (i, &t) in ts.iter().enumerate() {
            let y = sol.eval(t).unwrap();
            for (a, b) in y.iter().zip(&sol.states()[i]) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn empty_span_returns_initial_state() {
        let sol = integrate_ode(
            |_t, y: &[f64; 1]| [y[0]],
            (1.0, 1.0),
            [2.0],
            &OdeOptions::default(),
        )
        .unwrap();
        assert_eq!(sol.final_state(), [2.0]);
        assert_eq!(sol.eval(1.0).unwrap(), [2.0]);
    }

    #[test]
    fn rejects_bad_spans_and_tolerances() {
        let f = |_t: f64, y: &[f64; 1]| [y[0]];
        assert!(integrate_ode(f, (1.0, 0.0), [1.0], &OdeOptions::default()).is_err());
        let bad = OdeOptions { rtol: 0.0, ..Default::default() };
        assert!(integrate_ode(f, (0.0, 1.0), [1.0], &bad).is_err());
        assert!(integrate_ode(f, (0.0, 1.0), [f64::NAN], &OdeOptions::default()).is_err());
    }

    #[test]
    fn eval_outside_span_is_an_error() {
        let sol = integrate_ode(
            |_t, y: &[f64; 1]| [-y[0]],
            (0.0, 1.0),
            [1.0],
            &OdeOptions::default(),
        )
        .unwrap();
        assert!(sol.eval(-0.5).is_err());
        assert!(sol.eval(1.5).is_err());
    }

    #[test]
    fn step_budget_violation_reports_failure() {
        let opts = OdeOptions { max_steps: 3, ..Default::default() };
        let res = integrate_ode(|_t, y: &[f64; 2]| [y[1], -y[0]], (0.0, 100.0), [1.0, 0.0], &opts);
        assert!(matches!(res, Err(Error::IntegrationFailure { .. })));
    }
}
