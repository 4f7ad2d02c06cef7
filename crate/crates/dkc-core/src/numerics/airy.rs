//! Airy functions Ai, Bi and their derivatives on the real line.
//!
//! The evaluation is split into five branches:
//!
//! * `x < -9`: oscillatory asymptotic expansions with optimal truncation,
//! * `-9 <= x < -4.5`: Chebyshev fits of the four functions,
//! * `-4.5 <= x <= 3`: Maclaurin series built from the two independent
//!   power-series solutions of `y'' = x y`,
//! * `3 < x <= 9`: Chebyshev fits of exponentially scaled Ai, Ai' together
//!   with the (fast-converging, monotone) series for Bi, Bi',
//! * `x > 9`: exponential asymptotic expansions.
//!
//! Accuracy is limited by f64 cancellation in the oscillatory region and is
//! about 1e-11 relative (1e-13 typical); the Wronskian identity
//! `Ai Bi' - Ai' Bi = 1/pi` holds to ~1e-13 everywhere. For large positive
//! `x` the unscaled Bi overflows; this is reported as an error rather than
//! returning infinities.

use std::sync::OnceLock;

use super::airy_tables::{
    CHEB_NEG_AI, CHEB_NEG_AIP, CHEB_NEG_BI, CHEB_NEG_BIP, CHEB_POS_SAI, CHEB_POS_SAIP,
};
use crate::error::{Error, Result};

/// Ai(x), Bi(x) and first derivatives at a common point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryValues {
    pub ai: f64,
    pub ai_prime: f64,
    pub bi: f64,
    pub bi_prime: f64,
}

const SQRT_PI: f64 = 1.772_453_850_905_516;
/// Ai(0) = 3^(-2/3) / Gamma(2/3).
const C1: f64 = 0.355_028_053_887_817_2;
/// -Ai'(0) = 3^(-1/3) / Gamma(1/3).
const C2: f64 = 0.258_819_403_792_806_8;
const SQRT_3: f64 = 1.732_050_807_568_877_2;

const NEG_A: f64 = -9.0;
const NEG_B: f64 = -4.5;
const POS_A: f64 = 3.0;
const POS_B: f64 = 9.0;
/// Largest exponent for which e^zeta times the series prefactors stays finite.
const ZETA_MAX: f64 = 708.0;

const ASYM_N: usize = 44;

/// Coefficients u_k, v_k of the standard large-argument expansions.
fn asym_coeffs() -> &'static ([f64; ASYM_N], [f64; ASYM_N]) {
    static TABLES: OnceLock<([f64; ASYM_N], [f64; ASYM_N])> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut u = [0.0; ASYM_N];
        let mut v = [0.0; ASYM_N];
        u[0] = 1.0;
        v[0] = 1.0;
        for k in 1..ASYM_N {
            let kf = k as f64;
            u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
                / (216.0 * kf * (2.0 * kf - 1.0));
            v[k] = -u[k] * (6.0 * kf + 1.0) / (6.0 * kf - 1.0);
        }
        (u, v)
    })
}

/// Clenshaw evaluation on [a, b]; c[0] is stored pre-halved.
fn clenshaw(c: &[f64], a: f64, b: f64, x: f64) -> f64 {
    let t = (2.0 * x - (a + b)) / (b - a);
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for j in (1..c.len()).rev() {
        let next = c[j] + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = next;
    }
    c[0] + t * b1 - b2
}

/// sum_k (-1)^k c[k] zeta^-k with optimal truncation.
fn sum_alternating(c: &[f64], zeta: f64) -> f64 {
    let mut s = 0.0;
    let mut prev = f64::INFINITY;
    let mut t = 1.0;
    let mut sign = 1.0;
    for ck in c {
        let term = ck * t;
        if term.abs() > prev {
            break;
        }
        s += sign * term;
        prev = term.abs();
        sign = -sign;
        t /= zeta;
    }
    s
}

/// sum_k c[k] zeta^-k with optimal truncation.
fn sum_plain(c: &[f64], zeta: f64) -> f64 {
    let mut s = 0.0;
    let mut prev = f64::INFINITY;
    let mut t = 1.0;
    for ck in c {
        let term = ck * t;
        if term.abs() > prev {
            break;
        }
        s += term;
        prev = term.abs();
        t /= zeta;
    }
    s
}

/// sum_j (-1)^j c[start + 2j] zeta^-(start+2j) with optimal truncation.
fn sum_stride2(c: &[f64], zeta: f64, start: usize) -> f64 {
    let mut s = 0.0;
    let mut prev = f64::INFINITY;
    let mut sign = 1.0;
    let mut t = zeta.powi(-(start as i32));
    let inv2 = 1.0 / (zeta * zeta);
    let mut k = start;
    while k < c.len() {
        let term = c[k] * t;
        if term.abs() > prev {
            break;
        }
        s += sign * term;
        prev = term.abs();
        sign = -sign;
        t *= inv2;
        k += 2;
    }
    s
}

/// Oscillatory expansions for x = -z, z > 0 large.
fn negative_asymptotic(z: f64) -> AiryValues {
    let (u, v) = asym_coeffs();
    let zeta = (2.0 / 3.0) * z.powf(1.5);
    let chi = zeta - std::f64::consts::FRAC_PI_4;
    let pu = sum_stride2(u, zeta, 0);
    let qu = sum_stride2(u, zeta, 1);
    let pv = sum_stride2(v, zeta, 0);
    let qv = sum_stride2(v, zeta, 1);
    let (s, c) = chi.sin_cos();
    let q4 = z.powf(0.25);
    AiryValues {
        ai: (c * pu + s * qu) / (SQRT_PI * q4),
        ai_prime: q4 / SQRT_PI * (s * pv - c * qv),
        bi: (-s * pu + c * qu) / (SQRT_PI * q4),
        bi_prime: q4 / SQRT_PI * (c * pv + s * qv),
    }
}

/// Exponential expansions for large positive x.
fn positive_asymptotic(x: f64) -> Result<AiryValues> {
    let (u, v) = asym_coeffs();
    let zeta = (2.0 / 3.0) * x.powf(1.5);
    if zeta > ZETA_MAX {
        return Err(Error::Overflow(format!(
            "Bi({x}) exceeds the f64 range; largest supported argument is \
             about {:.1}",
            (1.5 * ZETA_MAX).powf(2.0 / 3.0)
        )));
    }
    let q4 = x.powf(0.25);
    let em = (-zeta).exp();
    let ep = zeta.exp();
    Ok(AiryValues {
        ai: em * sum_alternating(u, zeta) / (2.0 * SQRT_PI * q4),
        ai_prime: -em * q4 * sum_alternating(v, zeta) / (2.0 * SQRT_PI),
        bi: ep * sum_plain(u, zeta) / (SQRT_PI * q4),
        bi_prime: ep * q4 * sum_plain(v, zeta) / SQRT_PI,
    })
}

/// Maclaurin series around 0, accurate on [-4.5, 3] (and used for Bi on
/// (3, 9] where its terms are all positive).
fn maclaurin(x: f64) -> AiryValues {
    let z3 = x * x * x;
    let mut f = 1.0;
    let mut fk = 1.0;
    let mut g = x;
    let mut gk = x;
    let mut tk = 0.5 * x * x;
    let mut fp = tk;
    let mut gp = 1.0;
    let mut gpk = 1.0;
    for k in 1..220u32 {
        let kf = f64::from(k);
        fk *= z3 / ((3.0 * kf) * (3.0 * kf - 1.0));
        f += fk;
        gk *= z3 / ((3.0 * kf + 1.0) * (3.0 * kf));
        g += gk;
        gpk *= z3 / ((3.0 * kf) * (3.0 * kf - 2.0));
        gp += gpk;
        tk *= ((kf + 1.0) / kf) * z3 / ((3.0 * (kf + 1.0)) * (3.0 * (kf + 1.0) - 1.0));
        fp += tk;
        if fk.abs() <= 1e-20 * f.abs() && gk.abs() <= 1e-20 * g.abs().max(1e-280) {
            break;
        }
    }
    AiryValues {
        ai: C1 * f - C2 * g,
        ai_prime: C1 * fp - C2 * gp,
        bi: SQRT_3 * (C1 * f + C2 * g),
        bi_prime: SQRT_3 * (C1 * fp + C2 * gp),
    }
}

/// Evaluates Ai, Bi, Ai', Bi' at `x`.
///
/// Errors on non-finite input and when Bi(x) would overflow (x above ~104).
pub fn airy(x: f64) -> Result<AiryValues> {
    if !x.is_finite() {
        return Err(Error::InvalidInput(format!("airy argument must be finite, got {x}")));
    }
    if x < NEG_A {
        return Ok(negative_asymptotic(-x));
    }
    if x < NEG_B {
        return Ok(AiryValues {
            ai: clenshaw(&CHEB_NEG_AI, NEG_A, NEG_B, x),
            ai_prime: clenshaw(&CHEB_NEG_AIP, NEG_A, NEG_B, x),
            bi: clenshaw(&CHEB_NEG_BI, NEG_A, NEG_B, x),
            bi_prime: clenshaw(&CHEB_NEG_BIP, NEG_A, NEG_B, x),
        });
    }
    if x <= POS_A {
        return Ok(maclaurin(x));
    }
    if x <= POS_B {
        let series = maclaurin(x);
        let zeta = (2.0 / 3.0) * x.powf(1.5);
        let em = (-zeta).exp();
        let q4 = x.powf(0.25);
        let sai = clenshaw(&CHEB_POS_SAI, POS_A, POS_B, x);
        let saip = clenshaw(&CHEB_POS_SAIP, POS_A, POS_B, x);
        return Ok(AiryValues {
            ai: sai * em / (2.0 * SQRT_PI * q4),
            ai_prime: -saip * em * q4 / (2.0 * SQRT_PI),
            bi: series.bi,
            bi_prime: series.bi_prime,
        });
    }
    positive_asymptotic(x)
}
