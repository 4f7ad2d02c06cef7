//! JSON run configuration. Every physics key carries its unit as a suffix
//! (`_hz`, `_s`, `_au`, `_u`, `_m`, `_k`); unknown keys are rejected so a
//! typo fails loudly instead of silently using a default.

use dkc_core::constants::{ATOMIC_MASS, BOHR_RADIUS, MASS_K41_U, MASS_RB87_U};
use dkc_core::coupled::CoupledState;
use dkc_core::scaling::{CloudParams, Regime, SequenceConfig};
use dkc_core::species::SpeciesPair;
use serde::Deserialize;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub species: SpeciesBlock,
    #[serde(default)]
    pub trap: TrapBlock,
    #[serde(default)]
    pub sequence: SequenceBlock,
    #[serde(default)]
    pub regime: RegimeBlock,
    #[serde(default)]
    pub output: OutputBlock,
    #[serde(default)]
    pub initial_state: InitialStateBlock,
    #[serde(default)]
    pub optimize: OptimizeBlock,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpeciesBlock {
    #[serde(default = "default_m_light_u")]
    pub m_light_u: f64,
    #[serde(default = "default_m_heavy_u")]
    pub m_heavy_u: f64,
    #[serde(default = "default_p")]
    pub p: f64,
    #[serde(default)]
    pub scattering_length_au: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrapBlock {
    #[serde(default = "default_frequency_hz")]
    pub frequency_hz: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceBlock {
    #[serde(default = "default_t_pre_tof_s")]
    pub t_pre_tof_s: f64,
    #[serde(default = "default_t_r_s")]
    pub t_r_s: f64,
    #[serde(default = "default_t_dkc_s")]
    pub t_dkc_s: f64,
    #[serde(default)]
    pub t_tof_s: f64,
    #[serde(default)]
    pub scan: Option<ScanBlock>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanBlock {
    pub t_dkc_min_s: f64,
    pub t_dkc_max_s: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegimeBlock {
    #[serde(default = "default_kind")]
    pub kind: String,
    #[serde(default = "default_n_molecules")]
    pub n_molecules: f64,
    #[serde(default = "default_a_dd_au")]
    pub a_dd_au: f64,
    #[serde(default)]
    pub xi: Option<f64>,
    #[serde(default = "default_temperature_k")]
    pub temperature_k: f64,
    #[serde(default)]
    pub sigma0_m: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default)]
    pub format: Option<String>,
    #[serde(default)]
    pub path: Option<String>,
    #[serde(default = "default_report_dt_s")]
    pub report_dt_s: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialStateBlock {
    #[serde(default = "default_r_com_m")]
    pub r_com_m: f64,
    #[serde(default = "default_v_com_m_per_s")]
    pub v_com_m_per_s: f64,
    #[serde(default = "default_r_rel_au")]
    pub r_rel_au: f64,
    #[serde(default)]
    pub v_rel_m_per_s: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptimizeBlock {
    #[serde(default = "default_bracket_lo_s")]
    pub bracket_lo_s: f64,
    #[serde(default = "default_bracket_hi_s")]
    pub bracket_hi_s: f64,
    #[serde(default = "default_threshold")]
    pub threshold: f64,
}

fn default_m_light_u() -> f64 {
    MASS_K41_U
}
fn default_m_heavy_u() -> f64 {
    MASS_RB87_U
}
fn default_p() -> f64 {
    1.10
}
fn default_frequency_hz() -> f64 {
    100.0
}
fn default_t_pre_tof_s() -> f64 {
    14.9e-3
}
fn default_t_r_s() -> f64 {
    1e-6
}
fn default_t_dkc_s() -> f64 {
    150e-6
}
fn default_kind() -> String {
    "thomas_fermi".into()
}
fn default_n_molecules() -> f64 {
    5e4
}
fn default_a_dd_au() -> f64 {
    500.0
}
fn default_temperature_k() -> f64 {
    50e-9
}
fn default_report_dt_s() -> f64 {
    1e-6
}
fn default_r_com_m() -> f64 {
    4.06e-6
}
fn default_v_com_m_per_s() -> f64 {
    2.55e-3
}
fn default_r_rel_au() -> f64 {
    1000.0
}
fn default_bracket_lo_s() -> f64 {
    50e-6
}
fn default_bracket_hi_s() -> f64 {
    300e-6
}
fn default_threshold() -> f64 {
    100.0
}

impl Default for SpeciesBlock {
    fn default() -> Self {
        Self {
            m_light_u: default_m_light_u(),
            m_heavy_u: default_m_heavy_u(),
            p: default_p(),
            scattering_length_au: None,
        }
    }
}
impl Default for TrapBlock {
    fn default() -> Self {
        Self { frequency_hz: default_frequency_hz() }
    }
}
impl Default for SequenceBlock {
    fn default() -> Self {
        Self {
            t_pre_tof_s: default_t_pre_tof_s(),
            t_r_s: default_t_r_s(),
            t_dkc_s: default_t_dkc_s(),
            t_tof_s: 0.0,
            scan: None,
        }
    }
}
impl Default for RegimeBlock {
    fn default() -> Self {
        Self {
            kind: default_kind(),
            n_molecules: default_n_molecules(),
            a_dd_au: default_a_dd_au(),
            xi: None,
            temperature_k: default_temperature_k(),
            sigma0_m: None,
        }
    }
}
impl Default for OutputBlock {
    fn default() -> Self {
        Self { format: None, path: None, report_dt_s: default_report_dt_s() }
    }
}
impl Default for InitialStateBlock {
    fn default() -> Self {
        Self {
            r_com_m: default_r_com_m(),
            v_com_m_per_s: default_v_com_m_per_s(),
            r_rel_au: default_r_rel_au(),
            v_rel_m_per_s: 0.0,
        }
    }
}
impl Default for OptimizeBlock {
    fn default() -> Self {
        Self {
            bracket_lo_s: default_bracket_lo_s(),
            bracket_hi_s: default_bracket_hi_s(),
            threshold: default_threshold(),
        }
    }
}

impl RunConfig {
    pub fn from_file(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text)
            .map_err(|e| format!("invalid config {}: {e}", path.display()))
    }

    pub fn species_pair(&self) -> Result<SpeciesPair, String> {
        let s = &self.species;
        SpeciesPair::new(
            s.m_light_u * ATOMIC_MASS,
            s.m_heavy_u * ATOMIC_MASS,
            s.p,
        )
        .map_err(|e| format!("species block: {e}"))
    }

    pub fn omega_trap(&self) -> f64 {
        std::f64::consts::TAU * self.trap.frequency_hz
    }

    pub fn regime(&self) -> Result<Regime, String> {
        let r = &self.regime;
        match r.kind.as_str() {
            "thomas_fermi" => Ok(Regime::ThomasFermi),
            "variational" => Ok(Regime::Variational {
                n_molecules: r.n_molecules,
                a_dd: r.a_dd_au * BOHR_RADIUS,
            }),
            "hydrodynamic" => {
                let xi = r
                    .xi
                    .ok_or("regime block: hydrodynamic requires xi".to_string())?;
                Ok(Regime::Hydrodynamic { xi })
            }
            "thermal" => Ok(Regime::Thermal),
            other => Err(format!(
                "regime block: unknown kind {other:?} (expected thomas_fermi, \
                 variational, hydrodynamic or thermal)"
            )),
        }
    }

    pub fn sequence(&self) -> Result<SequenceConfig, String> {
        let cfg = SequenceConfig {
            omega_trap: self.omega_trap(),
            t_pre_tof: self.sequence.t_pre_tof_s,
            t_ramp: self.sequence.t_r_s,
            t_dkc: self.sequence.t_dkc_s,
            t_tof: self.sequence.t_tof_s,
            regime: self.regime()?,
            cloud: CloudParams {
                n_molecules: self.regime.n_molecules,
                a_dd: self.regime.a_dd_au * BOHR_RADIUS,
                temperature: self.regime.temperature_k,
            },
            sigma0_override: self.regime.sigma0_m,
        };
        Ok(cfg)
    }

    pub fn initial_state(&self) -> CoupledState {
        let s = &self.initial_state;
        CoupledState {
            t: 0.0,
            r_com: s.r_com_m,
            v_com: s.v_com_m_per_s,
            r_rel: s.r_rel_au * BOHR_RADIUS,
            v_rel: s.v_rel_m_per_s,
        }
    }

    /// Scan grid from the sequence block: the explicit grid when present,
    /// otherwise the single configured flash length.
    pub fn scan_grid(&self) -> Result<Vec<f64>, String> {
        match &self.sequence.scan {
            None => Ok(vec![self.sequence.t_dkc_s]),
            Some(s) => {
                if s.steps == 0 {
                    return Err("sequence.scan: steps must be at least 1".into());
                }
                if !(s.t_dkc_min_s.is_finite() && s.t_dkc_max_s.is_finite())
                    || s.t_dkc_min_s < 0.0
                    || s.t_dkc_max_s < s.t_dkc_min_s
                {
                    return Err(format!(
                        "sequence.scan: need 0 <= t_dkc_min_s <= t_dkc_max_s, got \
                         [{}, {}]",
                        s.t_dkc_min_s, s.t_dkc_max_s
                    ));
                }
                if s.steps == 1 {
                    return Ok(vec![s.t_dkc_min_s]);
                }
                let span = s.t_dkc_max_s - s.t_dkc_min_s;
                Ok((0..s.steps)
                    .map(|k| s.t_dkc_min_s + span * k as f64 / (s.steps - 1) as f64)
                    .collect())
            }
        }
    }

    pub fn optimize_bracket(&self) -> Result<(f64, f64), String> {
        let o = &self.optimize;
        if !(o.bracket_lo_s.is_finite() && o.bracket_hi_s.is_finite())
            || o.bracket_lo_s < 0.0
            || o.bracket_hi_s <= o.bracket_lo_s
        {
            return Err(format!(
                "optimize block: need 0 <= bracket_lo_s < bracket_hi_s, got \
                 [{}, {}]",
                o.bracket_lo_s, o.bracket_hi_s
            ));
        }
        Ok((o.bracket_lo_s, o.bracket_hi_s))
    }
}
