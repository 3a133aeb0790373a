//! Mass and phase sweeps, the Model I/II crossover and entanglement
//! thresholds.

use std::fmt::Write as _;

use crate::config::{KernelChoice, ScanKind, SweepConfig};
use crate::entanglement::log_negativity;
use crate::error::{Error, Result};
use crate::evolution::coupling::{coupling_natural, coupling_strength, CouplingModel, ModelKind};
use crate::evolution::integrate::propagate;
use crate::evolution::kernel::{Kernel, WavePacketWidths};
use crate::evolution::phases::phase_pair_with_kernel;
use crate::evolution::rates::{component_weight, rate_matrix};
use crate::geometry::Geometry;
use crate::state::PairState4;
use crate::units::{Dimension, UnitSystem};

/// Paper's quoted crossover for B3 = 1 T.
pub const PAPER_CROSSOVER_KG: f64 = 1e-27;
/// Paper's quoted onsets of appreciable entanglement.
pub const PAPER_THRESHOLD_I_KG: f64 = 1e-23;
pub const PAPER_THRESHOLD_II_KG: f64 = 1e-31;
/// E_N defining "appreciable" entanglement.
pub const THRESHOLD_EN: f64 = 0.01;

pub const CSV_HEADER: &str =
    "model,mass_kg,coupling_natural,dphi_LR,dphi_RL,phase_sum,log_negativity,kernel,d_m,dx_m,tau_s,B3_T";

/// One evaluated (model, mass, τ) point. Physical columns are SI.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub model: ModelKind,
    pub mass_kg: f64,
    pub coupling_natural: f64,
    pub dphi_lr: f64,
    pub dphi_rl: f64,
    pub phase_sum: f64,
    pub log_negativity: f64,
    pub kernel: &'static str,
    pub d_m: f64,
    pub dx_m: f64,
    pub tau_s: f64,
    pub b3_t: f64,
}

/// Inputs of a sweep converted into the configured unit system.
struct Prepared {
    u: UnitSystem,
    geometry: Geometry,
    kernel: Kernel,
    b3: f64,
}

fn prepare(cfg: &SweepConfig) -> Result<Prepared> {
    cfg.validate()?;
    let u = UnitSystem::for_mode(cfg.units);
    let len = |x: f64| u.from_si(x, Dimension::Length);
    let geometry = Geometry::new(len(cfg.d), len(cfg.dx))?;
    let kernel = match cfg.kernel {
        KernelChoice::Point => Kernel::Point,
        KernelChoice::Erf => Kernel::Erf {
            sigma: len(WavePacketWidths::new(cfg.sigma0, cfg.sigma0p)?.sigma_eff()),
        },
    };
    Ok(Prepared {
        u,
        geometry,
        kernel,
        b3: u.from_si(cfg.b3, Dimension::MagneticField),
    })
}

fn model_for(kind: ModelKind, m: f64, b3: f64) -> Result<CouplingModel> {
    match kind {
        ModelKind::ModelI => CouplingModel::model_i(m, m),
        ModelKind::ModelII => CouplingModel::model_ii(m, m, b3),
        ModelKind::StaticLimit => CouplingModel::static_limit(m, m),
    }
}

fn evaluate(
    cfg: &SweepConfig,
    p: &Prepared,
    kind: ModelKind,
    mass_kg: f64,
    tau_s: f64,
) -> Result<SweepRow> {
    Ok(evaluate_state(cfg, p, kind, mass_kg, tau_s)?.0)
}

fn evaluate_state(
    cfg: &SweepConfig,
    p: &Prepared,
    kind: ModelKind,
    mass_kg: f64,
    tau_s: f64,
) -> Result<(SweepRow, PairState4)> {
    let m = p.u.from_si(mass_kg, Dimension::Mass);
    let tau = p.u.from_si(tau_s, Dimension::Time);
    let model = model_for(kind, m, p.b3)?;
    let w = component_weight(cfg.component);
    let phases = phase_pair_with_kernel(&model, &p.geometry, tau, &p.u, &p.kernel)?;
    // + 0.0 folds the −0 of the static weight
    let (dphi_lr, dphi_rl) = (phases.dphi_lr * w + 0.0, phases.dphi_rl * w + 0.0);
    let rm = rate_matrix(&model, &p.geometry, &p.u, &p.kernel, cfg.component)?;
    let (rho, _) = propagate(&PairState4::uniform_superposition(), &rm, tau, cfg.steps)?;
    let row = SweepRow {
        model: kind,
        mass_kg,
        coupling_natural: coupling_natural(&model, &p.u)?,
        dphi_lr,
        dphi_rl,
        phase_sum: dphi_lr + dphi_rl,
        log_negativity: log_negativity(&rho)?,
        kernel: p.kernel.name(),
        d_m: cfg.d,
        dx_m: cfg.dx,
        tau_s,
        b3_t: cfg.b3,
    };
    Ok((row, rho))
}

#[cfg(feature = "parallel")]
fn map_points<T, R, F>(points: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    use rayon::prelude::*;
    points.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_points<T, R, F>(points: &[T], f: F) -> Result<Vec<R>>
where
    F: Fn(&T) -> Result<R>,
{
    points.iter().map(f).collect()
}

/// Mass scan: one row per (model, mass), sorted by mass then model.
/// Phase scan: see [`run_phase_scan`].
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    Ok(run_sweep_with_states(cfg)?
        .into_iter()
        .map(|(r, _)| r)
        .collect())
}

/// [`run_sweep`] keeping the evolved state of every row.
pub fn run_sweep_with_states(cfg: &SweepConfig) -> Result<Vec<(SweepRow, PairState4)>> {
    if cfg.scan == ScanKind::Phase {
        return run_phase_scan(cfg);
    }
    let p = prepare(cfg)?;
    let points: Vec<(ModelKind, f64)> = cfg
        .masses()
        .into_iter()
        .flat_map(|m| cfg.models.iter().map(move |&k| (k, m)))
        .collect();
    let mut rows = map_points(&points, |&(k, m)| evaluate_state(cfg, &p, k, m, cfg.tau))?;
    rows.sort_by(|(a, _), (b, _)| a.mass_kg.total_cmp(&b.mass_kg).then(a.model.cmp(&b.model)));
    Ok(rows)
}

/// Fixed mass `mass_min`; τ_k chosen so the phase sum runs linearly over
/// [0, phase_max] in `points` steps, for each model.
pub fn run_phase_scan(cfg: &SweepConfig) -> Result<Vec<(SweepRow, PairState4)>> {
    let p = prepare(cfg)?;
    let n = cfg.points;
    let mut points = Vec::with_capacity(n * cfg.models.len());
    for &kind in &cfg.models {
        let probe = evaluate(cfg, &p, kind, cfg.mass_min, 1.0)?;
        let per_second = probe.phase_sum;
        if per_second == 0.0 || !per_second.is_finite() {
            return Err(Error::Config(format!(
                "--scan phase: model {kind} has no entangling phase in this setup"
            )));
        }
        for k in 0..n {
            let target = cfg.phase_max * k as f64 / (n - 1) as f64;
            points.push((kind, target / per_second.abs()));
        }
    }
    map_points(&points, |&(k, tau)| {
        evaluate_state(cfg, &p, k, cfg.mass_min, tau)
    })
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv_line(r: &SweepRow) -> String {
    [
        r.model.label().to_string(),
        num(r.mass_kg),
        num(r.coupling_natural),
        num(r.dphi_lr),
        num(r.dphi_rl),
        num(r.phase_sum),
        num(r.log_negativity),
        r.kernel.to_string(),
        num(r.d_m),
        num(r.dx_m),
        num(r.tau_s),
        num(r.b3_t),
    ]
    .join(",")
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 + rows.len() * 256);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&csv_line(r));
        out.push('\n');
    }
    out
}

/// Mass where g_I(m) = g_II(m), located by bisection on ln m over
/// [lo, hi] (masses and field in the units of `u`).
pub fn find_crossover_in(u: &UnitSystem, b3: f64, lo: f64, hi: f64) -> Result<f64> {
    if !(b3 > 0.0) {
        return Err(Error::NoCrossover(format!(
            "Model II coupling vanishes for B3 = {b3}"
        )));
    }
    if !(lo > 0.0 && hi > lo) {
        return Err(Error::NoCrossover(format!(
            "invalid bracket [{lo:e}, {hi:e}]"
        )));
    }
    let f = |ln_m: f64| -> Result<f64> {
        let m = ln_m.exp();
        let a = coupling_strength(&CouplingModel::model_i(m, m)?, u)?;
        let b = coupling_strength(&CouplingModel::model_ii(m, m, b3)?, u)?;
        Ok(a.ln() - b.ln())
    };
    let (mut a, mut b) = (lo.ln(), hi.ln());
    let (fa, fb) = (f(a)?, f(b)?);
    if fa == 0.0 {
        return Ok(lo);
    }
    if fb == 0.0 {
        return Ok(hi);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoCrossover(format!(
            "couplings do not cross on [{lo:e}, {hi:e}]"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b || b - a <= 1e-15 {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid.exp());
        }
        if fm.signum() == fa.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((0.5 * (a + b)).exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossover {
    pub mass_kg: f64,
    /// The same mass in eV.
    pub mass_natural: f64,
    pub b3_natural: f64,
    /// g_I / g_II at the returned mass.
    pub coupling_ratio: f64,
    pub ratio_to_paper: f64,
}

/// Crossover inside the configured mass range, with both couplings
/// evaluated in natural units.
pub fn find_crossover(cfg: &SweepConfig) -> Result<Crossover> {
    let nat = UnitSystem::natural();
    let b3 = nat.from_si(cfg.b3, Dimension::MagneticField);
    let lo = nat.from_si(cfg.mass_min, Dimension::Mass);
    let hi = nat.from_si(cfg.mass_max, Dimension::Mass);
    let m = find_crossover_in(&nat, b3, lo, hi)?;
    let a = coupling_strength(&CouplingModel::model_i(m, m)?, &nat)?;
    let b = coupling_strength(&CouplingModel::model_ii(m, m, b3)?, &nat)?;
    let mass_kg = nat.to_si(m, Dimension::Mass);
    Ok(Crossover {
        mass_kg,
        mass_natural: m,
        b3_natural: b3,
        coupling_ratio: a / b,
        ratio_to_paper: mass_kg / PAPER_CROSSOVER_KG,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub model: ModelKind,
    /// Mass at which E_N first reaches [`THRESHOLD_EN`] when coming from
    /// the weak-coupling side.
    pub mass_kg: f64,
    pub paper_kg: f64,
    pub ratio_to_paper: f64,
}

/// Phase sum needed for E_N = [`THRESHOLD_EN`]: log₂(1 + |sin(s/2)|) = E.
pub fn threshold_phase_sum() -> f64 {
    2.0 * (2f64.powf(THRESHOLD_EN) - 1.0).asin()
}

/// Onset of appreciable entanglement for Models I and II. The phase sum
/// scales as m² (I) and m⁻² (II), so one evaluation fixes the mass.
pub fn find_thresholds(cfg: &SweepConfig) -> Result<Vec<Threshold>> {
    let p = prepare(cfg)?;
    let target = threshold_phase_sum();
    let m_ref = 1e-27;
    let mut out = Vec::new();
    for &kind in &cfg.models {
        let (exponent, paper) = match kind {
            ModelKind::ModelI => (0.5, PAPER_THRESHOLD_I_KG),
            ModelKind::ModelII => (-0.5, PAPER_THRESHOLD_II_KG),
            ModelKind::StaticLimit => continue,
        };
        let s = evaluate(cfg, &p, kind, m_ref, cfg.tau)?.phase_sum.abs();
        if s == 0.0 {
            continue;
        }
        let mass_kg = m_ref * (target / s).powf(exponent);
        out.push(Threshold {
            model: kind,
            mass_kg,
            paper_kg: paper,
            ratio_to_paper: mass_kg / paper,
        });
    }
    Ok(out)
}

/// Human-readable summary for the CLI.
pub fn summary(cfg: &SweepConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "preset={} d={:e} m dx={:e} m tau={:e} s B3={} T units={} kernel={:?}",
        cfg.preset, cfg.d, cfg.dx, cfg.tau, cfg.b3, cfg.units, cfg.kernel
    );
    match find_crossover(cfg) {
        Ok(c) => {
            let _ = writeln!(
                out,
                "crossover m* = {:.6e} kg = {:.6e} eV (g_I/g_II = {:.15}); paper ~{:e} kg, ratio {:.4e}",
                c.mass_kg, c.mass_natural, c.coupling_ratio, PAPER_CROSSOVER_KG, c.ratio_to_paper
            );
        }
        Err(e) => {
            let _ = writeln!(out, "crossover: {e}");
        }
    }
    match find_thresholds(cfg) {
        Ok(ts) => {
            for t in ts {
                let _ = writeln!(
                    out,
                    "threshold E_N >= {THRESHOLD_EN} model {}: m = {:.6e} kg; paper ~{:e} kg, ratio {:.4e}",
                    t.model, t.mass_kg, t.paper_kg, t.ratio_to_paper
                );
            }
        }
        Err(e) => {
            let _ = writeln!(out, "thresholds: {e}");
        }
    }
    out
}
