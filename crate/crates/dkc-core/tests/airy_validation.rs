//! Validation of the Airy implementation against an independently computed
//! high-precision reference table, the Wronskian identity, and the defining
//! differential equation.

use dkc_core::numerics::airy::airy;
use dkc_core::numerics::ode::{integrate_ode, OdeOptions};

include!("data/airy_reference.rs");

#[test]
fn matches_reference_table() {
    for &(x, ai, aip, bi, bip) in AIRY_REFERENCE.iter() {
        let got = airy(x).unwrap();
        let amp = ai.abs().max(aip.abs()).max(bi.abs()).max(bip.abs());
        for (name, g, r) in [
            ("Ai", got.ai, ai),
            ("Ai'", got.ai_prime, aip),
            ("Bi", got.bi, bi),
            ("Bi'", got.bi_prime, bip),
        ] {
            let err = (g - r).abs();
            let ok = err <= 2e-10 * r.abs() || err <= 1e-12 * amp;
            assert!(ok, "{name}({x}): got {g:e}, want {r:e}, err {err:e}");
        }
    }
}

#[test]
fn wronskian_identity_on_fine_grid() {
    let inv_pi = 1.0 / std::f64::consts::PI;
    let mut worst: (f64, f64) = (0.0, 0.0);
    for k in 0..=5000 {
        let x = -20.0 + 25.0 * k as f64 / 5000.0;
        let v = airy(x).unwrap();
        let w = v.ai * v.bi_prime - v.ai_prime * v.bi;
        let err = (w - inv_pi).abs();
        if err > worst.1 {
            worst = (x, err);
        }
    }
    assert!(
        worst.1 <= 1e-12,
        "worst Wronskian deviation {:.3e} at x = {}",
        worst.1,
        worst.0
    );
}

#[test]
fn values_at_zero_match_closed_forms() {
    // Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3),
    // Bi(0) = sqrt(3) Ai(0), Bi'(0) = sqrt(3) |Ai'(0)|.
    let c1 = 0.3550280538878172_f64;
    let c2 = 0.2588194037928068_f64;
    let s3 = 3.0_f64.sqrt();
    let v = airy(0.0).unwrap();
    assert!((v.ai - c1).abs() <= 1e-12);
    assert!((v.ai_prime + c2).abs() <= 1e-12);
    assert!((v.bi - s3 * c1).abs() <= 1e-12);
    assert!((v.bi_prime - s3 * c2).abs() <= 1e-12);
}

/// Integrate y'' = x y from 0 with the exact initial values of Ai and
/// compare at a point far into the oscillatory region. This checks the
/// Airy code against nothing but the differential equation itself.
#[test]
fn agrees_with_direct_ode_integration() {
    let v0 = airy(0.0).unwrap();
    let opts = OdeOptions {
        rtol: 1e-12,
        atol: 1e-16,
        ..Default::default()
    };
    // Integrate toward negative x via s = -x.
    let sol = integrate_ode(
        |s, y: &[f64; 2]| [y[1], -s * y[0]],
        (0.0, 8.0),
        [v0.ai, -v0.ai_prime],
        &opts,
    )
    .unwrap();
    for &s in &[1.0, 2.5, 5.0, 8.0] {
        let y = sol.eval(s).unwrap();
        let v = airy(-s).unwrap();
        assert!(
            (y[0] - v.ai).abs() <= 1e-9,
            "Ai({}) ode {} vs impl {}",
            -s,
            y[0],
            v.ai
        );
    }
}

/// Same cross-check on the positive side, where the equation is stiffly
/// growing for Bi.
#[test]
fn bi_growth_agrees_with_ode() {
    let v0 = airy(0.0).unwrap();
    let opts = OdeOptions {
        rtol: 1e-12,
        atol: 1e-16,
        ..Default::default()
    };
    let sol = integrate_ode(
        |x, y: &[f64; 2]| [y[1], x * y[0]],
        (0.0, 6.0),
        [v0.bi, v0.bi_prime],
        &opts,
    )
    .unwrap();
    let v = airy(6.0).unwrap();
    let y = sol.final_state();
    assert!((y[0] / v.bi - 1.0).abs() <= 1e-9, "Bi(6) {} vs {}", y[0], v.bi);
}

/// Finite-difference residual of y'' - x y. The 3-point stencil at h = 1e-4
/// has an f64 rounding floor of 4 eps |y| / h^2, about 1e-7 for |y| up to
/// 1.2 here, so the bound checks faithfulness to the equation down to that
/// floor, not beyond.
#[test]
fn differential_equation_residual_at_fd_floor() {
    let h = 1e-4;
    let mut worst = 0.0_f64;
    for k in 0..=200 {
        let x = -1.0 + 2.0 * k as f64 / 200.0;
        let m = airy(x - h).unwrap();
        let c = airy(x).unwrap();
        let p = airy(x + h).unwrap();
        for (fm, fc, fp) in [(m.ai, c.ai, p.ai), (m.bi, c.bi, p.bi)] {
            let second = (fp - 2.0 * fc + fm) / (h * h);
            worst = worst.max((second - x * fc).abs());
        }
    }
    assert!(worst <= 2e-7, "FD residual {worst:.3e} above the rounding floor");
}

#[test]
fn overflow_and_domain_errors() {
    assert!(airy(f64::NAN).is_err());
    assert!(airy(f64::INFINITY).is_err());
    assert!(airy(120.0).is_err());
    // Large negative arguments stay representable.
    assert!(airy(-1e4).is_ok());
}
