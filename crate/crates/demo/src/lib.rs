//! WebAssembly bindings for the browser demo. Every export returns a flat
//! `Float64Array` so the page can plot without parsing.

use gravent::config::{Preset, SweepConfig};
use gravent::entanglement::{log_negativity, reduced_coherence};
use gravent::evolution::coupling::ModelKind;
use gravent::evolution::{closed_form_state, Kernel, PhasePair};
use gravent::sweep::{find_crossover, run_sweep};
use wasm_bindgen::prelude::*;

/// Rows of (phase sum, E_N, reduced coherence) for phase sums on [0, max].
#[wasm_bindgen]
pub fn negativity_curve(phase_max: f64, points: usize) -> Result<Vec<f64>, String> {
    if points < 2 || !(phase_max > 0.0) {
        return Err("need points >= 2 and phase_max > 0".into());
    }
    let mut out = Vec::with_capacity(3 * points);
    for k in 0..points {
        let s = phase_max * k as f64 / (points - 1) as f64;
        // split unevenly on purpose: only the sum matters
        let rho = closed_form_state(&PhasePair::new(-0.25 * s, 1.25 * s));
        out.push(s);
        out.push(log_negativity(&rho).map_err(|e| e.to_string())?);
        out.push(reduced_coherence(&rho));
    }
    Ok(out)
}

/// Rows of (mass kg, phase sum I, phase sum II, E_N I, E_N II) on a log
/// mass grid for one of the presets.
#[wasm_bindgen]
pub fn mass_sweep(
    preset: &str,
    mass_min: f64,
    mass_max: f64,
    points: usize,
    b3_tesla: f64,
) -> Result<Vec<f64>, String> {
    let preset: Preset = preset.parse().map_err(|e: gravent::Error| e.to_string())?;
    let cfg = SweepConfig {
        mass_min,
        mass_max,
        points,
        b3: b3_tesla,
        models: vec![ModelKind::ModelI, ModelKind::ModelII],
        ..SweepConfig::preset(preset)
    };
    let rows = run_sweep(&cfg).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(5 * points);
    for pair in rows.chunks(2) {
        let (i, ii) = (&pair[0], &pair[1]);
        out.extend([
            i.mass_kg,
            i.phase_sum,
            ii.phase_sum,
            i.log_negativity,
            ii.log_negativity,
        ]);
    }
    Ok(out)
}

/// Model I/II crossover mass in kg for a field in tesla.
#[wasm_bindgen]
pub fn crossover_kg(b3_tesla: f64) -> Result<f64, String> {
    let cfg = SweepConfig {
        b3: b3_tesla,
        ..SweepConfig::default()
    };
    find_crossover(&cfg)
        .map(|c| c.mass_kg)
        .map_err(|e| e.to_string())
}

/// Rows of (R/σ, σ·K_erf(R), σ/R) on a linear grid up to `r_max` widths.
#[wasm_bindgen]
pub fn kernel_curve(r_max: f64, points: usize) -> Result<Vec<f64>, String> {
    if points < 2 || !(r_max > 0.0) {
        return Err("need points >= 2 and r_max > 0".into());
    }
    let k = Kernel::Erf { sigma: 1.0 };
    let mut out = Vec::with_capacity(3 * points);
    for i in 0..points {
        let r = r_max * i as f64 / (points - 1) as f64;
        out.extend([r, k.eval(r), if r > 0.0 { 1.0 / r } else { f64::INFINITY }]);
    }
    Ok(out)
}
