//! Cross-checks between the closed-form flash propagator and the direct
//! numerical integration of the coupled equations of motion, plus structural
//! properties of the analytic route (linearity, hold-phase conservation,
//! residual of the mode equation on plateau samples).

use dkc_core::coupled::{
    mode_stiffness, propagate_analytic, propagate_numeric, to_normal_modes, CoupledState,
    KickSchedule,
};
use dkc_core::species::SpeciesPair;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const TAU: f64 = std::f64::consts::TAU;

struct Scenario {
    pair: SpeciesPair,
    sched: KickSchedule,
    state0: CoupledState,
}

fn random_scenarios(n: usize) -> Vec<Scenario> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    (0..n)
        .map(|i| {
            let p = rng.gen_range(0.5..3.0);
            let omega0 = TAU * rng.gen_range(20.0..400.0);
            let t_dkc = rng.gen_range(20e-6..300e-6);
            let t_r = if i % 10 == 0 {
                0.0
            } else {
                rng.gen_range(0.2e-6..5e-6)
            };
            Scenario {
                pair: SpeciesPair::k41_rb87(p).unwrap(),
                sched: KickSchedule::new(omega0, t_r, t_dkc).unwrap(),
                state0: CoupledState {
                    t: 0.0,
                    r_com: rng.gen_range(-5e-6..5e-6),
                    v_com: rng.gen_range(-5e-3..5e-3),
                    r_rel: rng.gen_range(-1e-7..1e-7),
                    v_rel: rng.gen_range(-2e-4..2e-4),
                },
            }
        })
        .collect()
}

fn components(s: &CoupledState) -> [f64; 4] {
    [s.r_com, s.v_com, s.r_rel, s.v_rel]
}

#[test]
fn analytic_matches_numeric_across_random_scenarios() {
    for (i, sc) in random_scenarios(50).iter().enumerate() {
        let ana = propagate_analytic(&sc.state0, &sc.sched, &sc.pair, 1e-6).unwrap();
        let num = propagate_numeric(&sc.state0, &sc.sched, &sc.pair, 1e-6, 1e-12).unwrap();
        assert_eq!(ana.states.len(), num.states.len());

        // Per-component scale: the largest excursion along the trajectory.
        let mut scale = [1e-12f64, 1e-9, 1e-12, 1e-9];
        for s in &ana.states {
            for (k, v) in components(s).iter().enumerate() {
                scale[k] = scale[k].max(v.abs());
            }
        }

        let a = components(ana.states.last().unwrap());
        let b = components(num.states.last().unwrap());
        for k in 0..4 {
            let err = (a[k] - b[k]).abs() / scale[k];
            assert!(
                err < 1e-7,
                "scenario {i} component {k}: analytic {} vs numeric {} (rel {err:.3e})",
                a[k],
                b[k]
            );
        }
    }
}

#[test]
fn total_energy_constant_while_trap_is_on_full() {
    for (i, sc) in random_scenarios(50).iter().enumerate() {
        let traj = propagate_analytic(&sc.state0, &sc.sched, &sc.pair, 1e-6).unwrap();
        let hold_end = sc.sched.t_dkc() - sc.sched.t_r();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        let mut count = 0;
        for (k, &t) in traj.energy.times.iter().enumerate() {
            if t >= sc.sched.t_r() && t <= hold_end {
                let e = traj.energy.e_com[k] + traj.energy.e_rel[k] + traj.energy.e_cross[k];
                lo = lo.min(e);
                hi = hi.max(e);
                count += 1;
            }
        }
        assert!(count >= 2, "scenario {i}: too few hold samples");
        let spread = (hi - lo) / hi.abs().max(lo.abs());
        assert!(
            spread < 1e-10,
            "scenario {i}: hold-phase energy drifts by {spread:.3e}"
        );
    }
}

#[test]
fn analytic_route_is_linear_in_initial_conditions() {
    let pair = SpeciesPair::k41_rb87(1.3).unwrap();
    let sched = KickSchedule::new(TAU * 140.0, 1.5e-6, 180e-6).unwrap();
    let s1 = CoupledState { t: 0.0, r_com: 2.0e-6, v_com: -1.0e-3, r_rel: 6.0e-8, v_rel: 4.0e-5 };
    let s2 = CoupledState { t: 0.0, r_com: -0.7e-6, v_com: 2.2e-3, r_rel: -3.0e-8, v_rel: 9.0e-5 };
    let s3 = CoupledState {
        t: 0.0,
        r_com: s1.r_com + 2.0 * s2.r_com,
        v_com: s1.v_com + 2.0 * s2.v_com,
        r_rel: s1.r_rel + 2.0 * s2.r_rel,
        v_rel: s1.v_rel + 2.0 * s2.v_rel,
    };
    let f1 = components(propagate_analytic(&s1, &sched, &pair, 1e-6).unwrap().states.last().unwrap());
    let f2 = components(propagate_analytic(&s2, &sched, &pair, 1e-6).unwrap().states.last().unwrap());
    let f3 = components(propagate_analytic(&s3, &sched, &pair, 1e-6).unwrap().states.last().unwrap());
    for k in 0..4 {
        let want = f1[k] + 2.0 * f2[k];
        let scale = f1[k].abs().max(f2[k].abs()).max(f3[k].abs());
        assert!(
            (f3[k] - want).abs() <= 1e-12 * scale,
            "component {k}: superposition violated"
        );
    }
}

/// On the flat top of the trapezoid each normal mode obeys
/// `z'' = -alpha omega0^2 z` exactly. Finite differencing the reported
/// samples of the closed-form route must reproduce that to high accuracy
/// (the closed forms are evaluated directly at the sample times, so no
/// interpolation noise enters the stencil).
#[test]
fn plateau_samples_satisfy_mode_equation() {
    let cases = [
        (1.10, 100.0, 1e-6, 200e-6),
        (2.5, 250.0, 2e-6, 150e-6),
        (0.8, 60.0, 0.0, 250e-6),
    ];
    for &(p, f0, t_r, t_dkc) in &cases {
        let pair = SpeciesPair::k41_rb87(p).unwrap();
        let omega0 = TAU * f0;
        let sched = KickSchedule::new(omega0, t_r, t_dkc).unwrap();
        let state0 = CoupledState { t: 0.0, r_com: 3e-6, v_com: -2e-3, r_rel: 8e-8, v_rel: 1e-4 };
        let h = t_dkc / 64.0;
        let traj = propagate_analytic(&state0, &sched, &pair, h).unwrap();
        let times = &traj.energy.times;
        let modes: Vec<_> = traj.states.iter().map(|s| to_normal_modes(s, &pair)).collect();
        let (alpha_plus, alpha_minus) = mode_stiffness(&pair);

        for (alpha, z) in [
            (alpha_plus, modes.iter().map(|m| m.z_plus).collect::<Vec<_>>()),
            (alpha_minus, modes.iter().map(|m| m.z_minus).collect::<Vec<_>>()),
        ] {
            let zmax = z.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
            let denom = alpha * omega0 * omega0 * zmax;
            let mut checked = 0;
            for i in 2..times.len() - 2 {
                if times[i - 2] < t_r || times[i + 2] > t_dkc - t_r {
                    continue;
                }
                let d2 = (-z[i - 2] + 16.0 * z[i - 1] - 30.0 * z[i] + 16.0 * z[i + 1]
                    - z[i + 2])
                    / (12.0 * h * h);
                let resid = (d2 + alpha * omega0 * omega0 * z[i]).abs();
                assert!(
                    resid <= 1e-8 * denom,
                    "p = {p}, f0 = {f0}: residual {:.3e} at t = {}",
                    resid / denom,
                    times[i]
                );
                checked += 1;
            }
            assert!(checked >= 20, "p = {p}, f0 = {f0}: only {checked} stencil points");
        }
    }
}

#[test]
fn zero_state_stays_zero() {
    let pair = SpeciesPair::k41_rb87(1.10).unwrap();
    let sched = KickSchedule::new(TAU * 100.0, 1e-6, 150e-6).unwrap();
    let origin = CoupledState { t: 0.0, r_com: 0.0, v_com: 0.0, r_rel: 0.0, v_rel: 0.0 };
    for traj in [
        propagate_analytic(&origin, &sched, &pair, 1e-6).unwrap(),
        propagate_numeric(&origin, &sched, &pair, 1e-6, 1e-10).unwrap(),
    ] {
        for s in &traj.states {
            assert_eq!(components(s), [0.0; 4]);
        }
        for k in 0..traj.energy.times.len() {
            assert_eq!(traj.energy.e_com[k], 0.0);
            assert_eq!(traj.energy.e_rel[k], 0.0);
            assert_eq!(traj.energy.e_cross[k], 0.0);
        }
    }
}

#[test]
fn zero_length_flash_reports_the_initial_state_once() {
    let pair = SpeciesPair::k41_rb87(1.10).unwrap();
    let sched = KickSchedule::new(TAU * 100.0, 0.0, 0.0).unwrap();
    let state0 = CoupledState { t: 0.0, r_com: 1e-6, v_com: 2e-3, r_rel: 5e-8, v_rel: 3e-5 };
    for traj in [
        propagate_analytic(&state0, &sched, &pair, 1e-6).unwrap(),
        propagate_numeric(&state0, &sched, &pair, 1e-6, 1e-10).unwrap(),
    ] {
        assert_eq!(traj.states.len(), 1);
        assert_eq!(components(&traj.states[0]), components(&state0));
        assert_eq!(traj.energy.times.len(), 1);
    }
}
