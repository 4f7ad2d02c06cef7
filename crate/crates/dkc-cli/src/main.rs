//! `dkc`: command-line front end for the delta-kick collimation simulator.
//!
//! Subcommands: `coupled` (flash trajectory and energy trace), `gain-scan`
//! (collimation gain vs flash length), `optimize` (gain-optimal flash
//! length), `species-info` (derived trap and species quantities). Exit
//! codes: 0 on success, 2 on configuration errors, 3 on numerical failures.

mod config;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dkc_core::constants::BOHR_RADIUS;
use dkc_core::coupled::{
    propagate_analytic, propagate_uncoupled, temperature_equivalent, KickSchedule,
    KickTrajectory,
};
use dkc_core::presets;
use dkc_core::scaling::{gain_scan_parallel, optimize_kick, run_sequence, SequenceConfig};
use dkc_core::species::{
    binding_energy, derived_frequencies, oscillator_length, thin_lens_duration,
};

use config::RunConfig;
use output::{fmt12, json_array, json_object, json_opt_num, json_string, write_file, Cell, Format, Table};

#[derive(Parser)]
#[command(
    name = "dkc",
    version,
    about = "Delta-kick collimation simulator for heteronuclear molecules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Propagate one flash of the coupled dynamics and write the trace
    Coupled {
        #[command(flatten)]
        common: CommonArgs,
        /// Fill the state columns from the uncoupled propagator
        #[arg(long)]
        uncoupled_only: bool,
    },
    /// Scan the collimation gain over flash lengths
    GainScan {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Find the flash length that maximizes the gain
    Optimize {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print derived species and trap quantities as JSON
    SpeciesInfo {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// JSON run configuration file
    #[arg(long, value_name = "FILE", conflicts_with = "reproduce")]
    config: Option<PathBuf>,
    /// Built-in scenario: fig1 (coupled), fig2 or fig3 (gain-scan)
    #[arg(long, value_enum, value_name = "SCENARIO")]
    reproduce: Option<Preset>,
    /// Output directory
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Table format for emitted files
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Worker threads for gain scans
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    Fig1,
    Fig2,
    Fig3,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

enum CliError {
    Config(String),
    Numeric(String),
}

fn config_err<T>(r: Result<T, String>) -> Result<T, CliError> {
    r.map_err(CliError::Config)
}

fn numeric<T>(r: dkc_core::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Numeric(e.to_string()))
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Coupled { common, uncoupled_only } => cmd_coupled(&common, uncoupled_only),
        Command::GainScan { common } => cmd_gain_scan(&common),
        Command::Optimize { common } => cmd_optimize(&common),
        Command::SpeciesInfo { common } => cmd_species_info(&common),
    };
    match result {
        Ok(()) => {}
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(3);
        }
    }
}

struct Context {
    cfg: RunConfig,
    preset: Option<Preset>,
    out_dir: PathBuf,
    format: Format,
    threads: usize,
}

fn resolve(common: &CommonArgs, allowed: &[Preset]) -> Result<Context, CliError> {
    if let Some(p) = common.reproduce {
        if !allowed.contains(&p) {
            return Err(CliError::Config(format!(
                "--reproduce {} does not apply to this subcommand",
                match p {
                    Preset::Fig1 => "fig1",
                    Preset::Fig2 => "fig2",
                    Preset::Fig3 => "fig3",
                }
            )));
        }
    }
    if common.threads == 0 {
        return Err(CliError::Config("--threads must be at least 1".into()));
    }
    let cfg = match &common.config {
        Some(path) => config_err(RunConfig::from_file(path))?,
        None => RunConfig::default(),
    };
    let out_dir = common
        .out
        .clone()
        .or_else(|| cfg.output.path.clone().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    let format = match common.format {
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Json) => Format::Json,
        None => match &cfg.output.format {
            Some(s) => config_err(s.parse().map_err(|e: String| format!("output block: {e}")))?,
            None => Format::Csv,
        },
    };
    Ok(Context { cfg, preset: common.reproduce, out_dir, format, threads: common.threads })
}

fn cmd_coupled(common: &CommonArgs, uncoupled_only: bool) -> Result<(), CliError> {
    let ctx = resolve(common, &[Preset::Fig1])?;
    let (pair, sched, state0, report_dt) = if ctx.preset == Some(Preset::Fig1) {
        let sc = presets::coupled_flash_demo();
        (sc.pair, sc.schedule, sc.initial_state, sc.report_dt)
    } else {
        let pair = config_err(ctx.cfg.species_pair())?;
        let sched = KickSchedule::new(
            ctx.cfg.omega_trap(),
            ctx.cfg.sequence.t_r_s,
            ctx.cfg.sequence.t_dkc_s,
        )
        .map_err(|e| CliError::Config(format!("sequence block: {e}")))?;
        (pair, sched, ctx.cfg.initial_state(), ctx.cfg.output.report_dt_s)
    };

    let coupled = numeric(propagate_analytic(&state0, &sched, &pair, report_dt))?;
    let uncoupled = numeric(propagate_uncoupled(&state0, &sched, &pair, report_dt))?;
    let shown = if uncoupled_only { &uncoupled } else { &coupled };

    let mut table = Table::new(&[
        "t_s",
        "R_m",
        "Rdot_m_per_s",
        "r_m",
        "rdot_m_per_s",
        "ER_K",
        "Er_K",
        "Ec_K",
        "ER_uncoupled_K",
    ]);
    for (k, s) in shown.states.iter().enumerate() {
        table.push(vec![
            Cell::Num(s.t),
            Cell::Num(s.r_com),
            Cell::Num(s.v_com),
            Cell::Num(s.r_rel),
            Cell::Num(s.v_rel),
            Cell::Num(temperature_equivalent(shown.energy.e_com[k])),
            Cell::Num(temperature_equivalent(shown.energy.e_rel[k])),
            Cell::Num(temperature_equivalent(shown.energy.e_cross[k])),
            Cell::Num(temperature_equivalent(uncoupled.energy.e_com[k])),
        ]);
    }

    let trace_name = format!("trace.{}", ctx.format.extension());
    let trace_path = config_err(write_file(&ctx.out_dir, &trace_name, &table.render(ctx.format)))?;
    println!("wrote {}", trace_path.display());

    let summary = coupled_summary(&coupled, &uncoupled, &sched);
    let summary_path = config_err(write_file(&ctx.out_dir, "summary.json", &summary))?;
    println!("wrote {}", summary_path.display());
    Ok(())
}

fn coupled_summary(
    coupled: &KickTrajectory,
    uncoupled: &KickTrajectory,
    sched: &KickSchedule,
) -> String {
    let ec = temperature_equivalent(*coupled.energy.e_com.last().unwrap());
    let eu = temperature_equivalent(*uncoupled.energy.e_com.last().unwrap());
    let rel_diff = if ec != 0.0 { (ec - eu).abs() / ec.abs() } else { 0.0 };
    let er_first = temperature_equivalent(*coupled.energy.e_rel.first().unwrap());
    let er_last = temperature_equivalent(*coupled.energy.e_rel.last().unwrap());

    let hold = (sched.t_r(), sched.t_dkc() - sched.t_r());
    let mut cross_min = None;
    let mut cross_max = None;
    for (k, &t) in coupled.energy.times.iter().enumerate() {
        if t >= hold.0 && t <= hold.1 {
            let e = temperature_equivalent(coupled.energy.e_cross[k]);
            cross_min = Some(cross_min.map_or(e, |m: f64| m.min(e)));
            cross_max = Some(cross_max.map_or(e, |m: f64| m.max(e)));
        }
    }

    json_object(&[
        ("t_dkc_s", fmt12(sched.t_dkc())),
        ("t_r_s", fmt12(sched.t_r())),
        ("e_com_final_K", fmt12(ec)),
        ("e_com_final_uncoupled_K", fmt12(eu)),
        ("coupled_uncoupled_rel_diff", fmt12(rel_diff)),
        ("e_rel_initial_K", fmt12(er_first)),
        ("e_rel_final_K", fmt12(er_last)),
        ("e_rel_gain_K", fmt12(er_last - er_first)),
        ("e_cross_hold_min_K", json_opt_num(cross_min)),
        ("e_cross_hold_max_K", json_opt_num(cross_max)),
    ])
}

fn cmd_gain_scan(common: &CommonArgs) -> Result<(), CliError> {
    let ctx = resolve(common, &[Preset::Fig2, Preset::Fig3])?;
    let pair = config_err(ctx.cfg.species_pair())?;
    let (curves, grid) = match ctx.preset {
        Some(Preset::Fig2) => (presets::condensed_gain_curves(), presets::scan_grid()),
        Some(Preset::Fig3) => (presets::crossover_gain_curves(), presets::scan_grid()),
        _ => {
            let seq = config_err(ctx.cfg.sequence())?;
            (vec![("scan".to_string(), seq)], config_err(ctx.cfg.scan_grid())?)
        }
    };
    let threshold = ctx.cfg.optimize.threshold;

    let mut curve_summaries = Vec::new();
    for (label, seq) in &curves {
        let points = gain_scan_parallel(seq, &pair, &grid, ctx.threads);

        let mut table = Table::new(&["t_dkc_s", "gain", "E_f_K"]);
        let mut failures = 0usize;
        for p in &points {
            match &p.outcome {
                Ok(g) => table.push(vec![
                    Cell::Num(p.t_dkc),
                    Cell::Num(g.gain),
                    Cell::Num(g.e_final),
                ]),
                Err(e) => {
                    failures += 1;
                    table.push(vec![
                        Cell::Num(p.t_dkc),
                        Cell::Text("ERROR".into()),
                        Cell::Text(e.to_string()),
                    ]);
                }
            }
        }
        if failures == points.len() {
            let first = points
                .iter()
                .find_map(|p| p.outcome.as_ref().err())
                .expect("at least one failure");
            return Err(CliError::Numeric(format!("curve {label}: {first}")));
        }

        let name = format!("gain_{label}.{}", ctx.format.extension());
        let path = config_err(write_file(&ctx.out_dir, &name, &table.render(ctx.format)))?;
        println!("wrote {}", path.display());

        curve_summaries.push(curve_summary(label, seq, &pair, &grid, threshold, failures)?);
    }

    let summary = json_object(&[
        ("threshold", fmt12(threshold)),
        ("curves", json_array(&curve_summaries)),
    ]);
    let summary_path = config_err(write_file(&ctx.out_dir, "summary.json", &summary))?;
    println!("wrote {}", summary_path.display());
    Ok(())
}

fn curve_summary(
    label: &str,
    seq: &SequenceConfig,
    pair: &dkc_core::species::SpeciesPair,
    grid: &[f64],
    threshold: f64,
    failures: usize,
) -> Result<String, CliError> {
    let lo = grid.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = grid.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut fields: Vec<(&str, String)> = vec![
        ("label", json_string(label)),
        ("failed_points", format!("{failures}")),
    ];
    if hi > lo {
        let bracket = (lo.max(1e-6), hi);
        let opt = numeric(optimize_kick(seq, pair, bracket, threshold))?;
        fields.push(("t_opt_s", fmt12(opt.t_opt)));
        fields.push(("gain_max", fmt12(opt.gain_max)));
        fields.push(("e_final_K", fmt12(opt.e_final)));
        fields.push(("window_lo_s", json_opt_num(opt.window.map(|w| w.0))));
        fields.push(("window_hi_s", json_opt_num(opt.window.map(|w| w.1))));
    } else {
        let mut single = *seq;
        single.t_dkc = lo;
        let res = numeric(run_sequence(&single, pair, 1e-4))?;
        fields.push(("t_opt_s", fmt12(lo)));
        fields.push(("gain_max", fmt12(res.gain)));
        fields.push(("e_final_K", fmt12(res.e_final)));
        fields.push(("window_lo_s", "null".into()));
        fields.push(("window_hi_s", "null".into()));
    }
    Ok(json_object(&fields))
}

fn cmd_optimize(common: &CommonArgs) -> Result<(), CliError> {
    let ctx = resolve(common, &[])?;
    let pair = config_err(ctx.cfg.species_pair())?;
    let seq = config_err(ctx.cfg.sequence())?;
    let bracket = config_err(ctx.cfg.optimize_bracket())?;
    let threshold = ctx.cfg.optimize.threshold;

    let opt = numeric(optimize_kick(&seq, &pair, bracket, threshold))?;
    let summary = json_object(&[
        ("bracket_lo_s", fmt12(bracket.0)),
        ("bracket_hi_s", fmt12(bracket.1)),
        ("threshold", fmt12(threshold)),
        ("t_opt_s", fmt12(opt.t_opt)),
        ("gain_max", fmt12(opt.gain_max)),
        ("e_final_K", fmt12(opt.e_final)),
        ("window_lo_s", json_opt_num(opt.window.map(|w| w.0))),
        ("window_hi_s", json_opt_num(opt.window.map(|w| w.1))),
    ]);
    print!("{summary}");
    config_err(write_file(&ctx.out_dir, "optimize.json", &summary))?;
    Ok(())
}

fn cmd_species_info(common: &CommonArgs) -> Result<(), CliError> {
    let ctx = resolve(common, &[])?;
    let pair = config_err(ctx.cfg.species_pair())?;
    let omega = ctx.cfg.omega_trap();
    let freqs = derived_frequencies(&pair, omega)
        .map_err(|e| CliError::Config(format!("trap block: {e}")))?;
    let a_mol = numeric(oscillator_length(pair.total_mass(), omega))?;
    let thin_lens = numeric(thin_lens_duration(omega, ctx.cfg.sequence.t_pre_tof_s))?;
    let (alpha_plus, alpha_minus) = dkc_core::coupled::mode_stiffness(&pair);

    let mut fields: Vec<(&str, String)> = vec![
        ("m_light_kg", fmt12(pair.m_light)),
        ("m_heavy_kg", fmt12(pair.m_heavy)),
        ("total_mass_kg", fmt12(pair.total_mass())),
        ("reduced_mass_kg", fmt12(pair.reduced_mass())),
        ("p", fmt12(pair.p)),
        ("p_opt", fmt12(pair.gamma())),
        ("omega_mol_rad_per_s", fmt12(omega)),
        ("omega_light_rad_per_s", fmt12(freqs.omega_light)),
        ("omega_heavy_rad_per_s", fmt12(freqs.omega_heavy)),
        ("omega_r_rad_per_s", fmt12(freqs.omega_r)),
        ("omega_c_sq_rad2_per_s2", fmt12(freqs.omega_c_sq)),
        ("alpha_plus", fmt12(alpha_plus)),
        ("alpha_minus", fmt12(alpha_minus)),
        ("a_mol_m", fmt12(a_mol)),
        ("thin_lens_s", fmt12(thin_lens)),
    ];
    if let Some(a_au) = ctx.cfg.species.scattering_length_au {
        let e_b = numeric(binding_energy(pair.reduced_mass(), a_au * BOHR_RADIUS))?;
        fields.push(("scattering_length_m", fmt12(a_au * BOHR_RADIUS)));
        fields.push(("binding_energy_J", fmt12(e_b)));
        fields.push(("binding_energy_K", fmt12(e_b / dkc_core::constants::K_B)));
    }
    print!("{}", json_object(&fields));
    Ok(())
}
