//! Minimal self-contained SVG line charts of sweep rows.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::evolution::coupling::ModelKind;
use crate::sweep::SweepRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    PhaseVsMass,
    NegativityVsMass,
    NegativityVsPhaseSum,
}

impl std::str::FromStr for PlotKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "phase-mass" | "phase" => Ok(PlotKind::PhaseVsMass),
            "negativity-mass" | "negativity" => Ok(PlotKind::NegativityVsMass),
            "negativity-phase" => Ok(PlotKind::NegativityVsPhaseSum),
            other => Err(Error::Config(format!(
                "unknown plot `{other}` (phase-mass|negativity-mass|negativity-phase)"
            ))),
        }
    }
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

fn color(m: ModelKind) -> &'static str {
    match m {
        ModelKind::ModelI => "#c0392b",
        ModelKind::ModelII => "#2457a6",
        ModelKind::StaticLimit => "#555555",
    }
}

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn fit(values: impl Iterator<Item = f64>, log: bool) -> Axis {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            let t = if log { v.log10() } else { v };
            lo = lo.min(t);
            hi = hi.max(t);
        }
        if log {
            lo = lo.floor();
            hi = hi.ceil();
        }
        if hi - lo < 1e-300 {
            lo -= 0.5;
            hi += 0.5;
        }
        Axis { lo, hi, log }
    }

    fn frac(&self, v: f64) -> f64 {
        let t = if self.log { v.log10() } else { v };
        (t - self.lo) / (self.hi - self.lo)
    }

    /// (position fraction, label) pairs.
    fn ticks(&self) -> Vec<(f64, String)> {
        if self.log {
            let span = (self.hi - self.lo).round() as i64;
            let step = (span / 8).max(1);
            (self.lo as i64..=self.hi as i64)
                .filter(|e| (e - self.lo as i64) % step == 0)
                .map(|e| ((e as f64 - self.lo) / (self.hi - self.lo), format!("1e{e}")))
                .collect()
        } else {
            (0..=5)
                .map(|k| {
                    let v = self.lo + (self.hi - self.lo) * k as f64 / 5.0;
                    (k as f64 / 5.0, format!("{v:.3}"))
                })
                .collect()
        }
    }
}

fn labels(kind: PlotKind) -> (&'static str, &'static str) {
    match kind {
        PlotKind::PhaseVsMass => ("particle mass m [kg]", "phase sum dphi_LR + dphi_RL [rad]"),
        PlotKind::NegativityVsMass => ("particle mass m [kg]", "log negativity E_N [bits]"),
        PlotKind::NegativityVsPhaseSum => (
            "phase sum dphi_LR + dphi_RL [rad]",
            "log negativity E_N [bits]",
        ),
    }
}

fn xy(kind: PlotKind, r: &SweepRow) -> (f64, f64) {
    match kind {
        PlotKind::PhaseVsMass => (r.mass_kg, r.phase_sum.abs()),
        PlotKind::NegativityVsMass => (r.mass_kg, r.log_negativity),
        PlotKind::NegativityVsPhaseSum => (r.phase_sum, r.log_negativity),
    }
}

/// Log-log axes for the mass plots (non-positive values are skipped), linear
/// axes for negativity against phase sum. One polyline per model.
pub fn emit_svg(rows: &[SweepRow], kind: PlotKind) -> Result<String> {
    if rows.len() < 2 {
        return Err(Error::EmptyInput(format!(
            "a plot needs at least 2 rows (got {})",
            rows.len()
        )));
    }
    let log = kind != PlotKind::NegativityVsPhaseSum;
    let mut series: BTreeMap<ModelKind, Vec<(f64, f64)>> = BTreeMap::new();
    for r in rows {
        let (x, y) = xy(kind, r);
        if !(x.is_finite() && y.is_finite()) || (log && (x <= 0.0 || y <= 0.0)) {
            series.entry(r.model).or_default();
            continue;
        }
        series.entry(r.model).or_default().push((x, y));
    }
    let pts = || series.values().flatten();
    if pts().next().is_none() {
        return Err(Error::EmptyInput("no plottable points".into()));
    }
    let xa = Axis::fit(pts().map(|p| p.0), log);
    let ya = Axis::fit(pts().map(|p| p.1), log);
    let pw = WIDTH - LEFT - RIGHT;
    let ph = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + xa.frac(x) * pw;
    let py = |y: f64| TOP + (1.0 - ya.frac(y)) * ph;
    let (xl, yl) = labels(kind);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
    for (f, label) in xa.ticks() {
        let x = LEFT + f * pw;
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{TOP}" x2="{x:.2}" y2="{:.2}" stroke="#dddddd"/>"##,
            TOP + ph
        );
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{label}</text>"#,
            TOP + ph + 18.0
        );
    }
    for (f, label) in ya.ticks() {
        let y = TOP + (1.0 - f) * ph;
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#dddddd"/>"##,
            LEFT + pw
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{label}</text>"#,
            LEFT - 6.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{xl}</text>"#,
        LEFT + pw / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{yl}</text>"#,
        TOP + ph / 2.0,
        TOP + ph / 2.0
    );
    for (i, (model, points)) in series.iter().enumerate() {
        let coords: Vec<String> = points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline data-model="{model}" fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
            color(*model),
            coords.join(" ")
        );
        let ly = TOP + 20.0 + 18.0 * i as f64;
        let lx = LEFT + pw + 15.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="2"/>"#,
            lx + 20.0,
            color(*model)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">Model {model}</text>"#,
            lx + 26.0,
            ly + 4.0
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
