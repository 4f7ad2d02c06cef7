//! Scalar minimization and root bracketing.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a minimum of `f` on `[lo, hi]`.
///
/// Shrinks the bracket until its width is below `xtol` and returns the
/// midpoint together with the function value there. The function must be
/// finite on the bracket; unimodality is assumed, not checked.
pub fn minimize_scalar(
    mut f: impl FnMut(f64) -> f64,
    bracket: (f64, f64),
    xtol: f64,
) -> Result<(f64, f64)> {
    let (mut lo, mut hi) = bracket;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Bracket(format!(
            "minimization bracket must satisfy lo < hi, got [{lo}, {hi}]"
        )));
    }
    if !(xtol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "xtol must be positive, got {xtol}"
        )));
    }
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..1000 {
        if !f1.is_finite() || !f2.is_finite() {
            return Err(Error::Inconsistent(
                "objective returned a non-finite value during minimization".into(),
            ));
        }
        if hi - lo <= xtol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if hi - lo > xtol {
        return Err(Error::NoConvergence(format!(
            "bracket width {} still above xtol {xtol}",
            hi - lo
        )));
    }
    let xm = 0.5 * (lo + hi);
    Ok((xm, f(xm)))
}

/// Bisection root finder on `[lo, hi]`.
///
/// Requires `f(lo)` and `f(hi)` to have opposite signs (a zero at either
/// endpoint counts). Returns the bracket midpoint once its width drops
/// below `xtol`.
pub fn find_root(mut f: impl FnMut(f64) -> f64, bracket: (f64, f64), xtol: f64) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Bracket(format!(
            "root bracket must satisfy lo < hi, got [{lo}, {hi}]"
        )));
    }
    if !(xtol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "xtol must be positive, got {xtol}"
        )));
    }
    let mut flo = f(lo);
    let fhi = f(hi);
    if !flo.is_finite() || !fhi.is_finite() {
        return Err(Error::Inconsistent(
            "function returned a non-finite value at the bracket ends".into(),
        ));
    }
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracket(format!(
            "no sign change on [{lo}, {hi}]: f(lo) = {flo}, f(hi) = {fhi}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= xtol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
