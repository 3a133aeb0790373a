//! Sweep configuration: presets, INI-style key=value files and flag
//! overrides. Precedence is preset < file < flags.

use std::fmt;
use std::path::{Path as FsPath, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::evolution::coupling::ModelKind;
use crate::evolution::integrate::DEFAULT_STEPS;
use crate::spinor::PropagatorComponent;
use crate::units::UnitMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelChoice {
    Point,
    Erf,
}

impl FromStr for KernelChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "point" => Ok(KernelChoice::Point),
            "erf" => Ok(KernelChoice::Erf),
            other => Err(Error::Config(format!(
                "unknown kernel `{other}` (point|erf)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// d = 10 nm, τ = 10³ s.
    SetA,
    /// d = 0.1 nm, τ = 10⁶ s.
    SetB,
}

impl Preset {
    pub fn d_and_tau(self) -> (f64, f64) {
        match self {
            Preset::SetA => (10e-9, 1e3),
            Preset::SetB => (0.1e-9, 1e6),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::SetA => f.write_str("setA"),
            Preset::SetB => f.write_str("setB"),
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "seta" | "a" => Ok(Preset::SetA),
            "setb" | "b" => Ok(Preset::SetB),
            other => Err(Error::Config(format!(
                "unknown preset `{other}` (setA|setB)"
            ))),
        }
    }
}

pub fn parse_component(s: &str) -> Result<PropagatorComponent> {
    match s.trim().to_ascii_lowercase().as_str() {
        "transverse" | "0303" => Ok(PropagatorComponent::Transverse0303),
        "static" | "0000" => Ok(PropagatorComponent::Static0000),
        other => Err(Error::Config(format!(
            "unknown propagator component `{other}` (transverse|static)"
        ))),
    }
}

pub fn parse_models(s: &str) -> Result<Vec<ModelKind>> {
    let mut out: Vec<ModelKind> = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let kind = part.parse::<ModelKind>()?;
        if !out.contains(&kind) {
            out.push(kind);
        }
    }
    if out.is_empty() {
        return Err(Error::Config("no model selected".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanKind {
    /// Masses on a grid at fixed τ.
    Mass,
    /// τ chosen so the phase sum covers [0, phase_max] at fixed mass.
    Phase,
}

impl FromStr for ScanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mass" => Ok(ScanKind::Mass),
            "phase" => Ok(ScanKind::Phase),
            other => Err(Error::Config(format!(
                "unknown scan `{other}` (mass|phase)"
            ))),
        }
    }
}

/// All physical inputs are SI: metres, seconds, kilograms, tesla.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub models: Vec<ModelKind>,
    pub preset: Preset,
    pub d: f64,
    pub dx: f64,
    pub tau: f64,
    pub b3: f64,
    pub sigma0: f64,
    pub sigma0p: f64,
    pub mass_min: f64,
    pub mass_max: f64,
    pub points: usize,
    pub log_grid: bool,
    pub kernel: KernelChoice,
    pub units: UnitMode,
    pub steps: usize,
    pub component: PropagatorComponent,
    pub scan: ScanKind,
    pub phase_max: f64,
    pub out_csv: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
}

impl SweepConfig {
    pub fn preset(preset: Preset) -> Self {
        let (d, tau) = preset.d_and_tau();
        Self {
            models: vec![ModelKind::ModelI, ModelKind::ModelII],
            preset,
            d,
            dx: d / 2.0,
            tau,
            b3: 1.0,
            sigma0: 0.0,
            sigma0p: 0.0,
            mass_min: 1e-40,
            mass_max: 1e-15,
            points: 201,
            log_grid: true,
            kernel: KernelChoice::Point,
            units: UnitMode::Si,
            steps: DEFAULT_STEPS,
            component: PropagatorComponent::Transverse0303,
            scan: ScanKind::Mass,
            phase_max: 2.0 * std::f64::consts::PI,
            out_csv: None,
            out_svg: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |flag: &str, msg: String| Err(Error::Config(format!("--{flag}: {msg}")));
        if self.models.is_empty() {
            return bad("model", "no model selected".into());
        }
        if !(self.d > 0.0 && self.d.is_finite()) {
            return bad("d", format!("must be > 0 (got {})", self.d));
        }
        if !(self.dx >= 0.0 && self.dx < self.d) {
            return bad(
                "dx",
                format!("need 0 <= dx < d (dx = {}, d = {})", self.dx, self.d),
            );
        }
        if !(self.tau >= 0.0 && self.tau.is_finite()) {
            return bad("tau", format!("must be >= 0 (got {})", self.tau));
        }
        if !(self.b3 >= 0.0 && self.b3.is_finite()) {
            return bad("b3", format!("must be >= 0 (got {})", self.b3));
        }
        if !(self.sigma0 >= 0.0 && self.sigma0p >= 0.0) {
            return bad("sigma0", "widths must be >= 0".into());
        }
        if !(self.mass_min > 0.0 && self.mass_min.is_finite()) {
            return bad("mass-min", format!("must be > 0 (got {})", self.mass_min));
        }
        if !(self.mass_min < self.mass_max && self.mass_max.is_finite()) {
            return bad(
                "mass-max",
                format!(
                    "need mass-min < mass-max ({} vs {})",
                    self.mass_min, self.mass_max
                ),
            );
        }
        if self.points < 2 {
            return bad("points", format!("need at least 2 (got {})", self.points));
        }
        if self.steps == 0 {
            return bad("steps", "must be >= 1".into());
        }
        if !(self.phase_max > 0.0 && self.phase_max.is_finite()) {
            return bad("phase-max", format!("must be > 0 (got {})", self.phase_max));
        }
        Ok(())
    }

    /// The mass grid, ascending.
    pub fn masses(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                if i == 0 {
                    self.mass_min
                } else if i == n - 1 {
                    self.mass_max
                } else if self.log_grid {
                    let (a, b) = (self.mass_min.ln(), self.mass_max.ln());
                    (a + t * (b - a)).exp()
                } else {
                    self.mass_min + t * (self.mass_max - self.mass_min)
                }
            })
            .collect()
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self::preset(Preset::SetA)
    }
}

/// Optional settings from one source (a file or the command line).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub models: Option<Vec<ModelKind>>,
    pub preset: Option<Preset>,
    pub d: Option<f64>,
    pub dx: Option<f64>,
    pub tau: Option<f64>,
    pub b3: Option<f64>,
    pub sigma0: Option<f64>,
    pub sigma0p: Option<f64>,
    pub mass_min: Option<f64>,
    pub mass_max: Option<f64>,
    pub points: Option<usize>,
    pub log_grid: Option<bool>,
    pub kernel: Option<KernelChoice>,
    pub units: Option<UnitMode>,
    pub steps: Option<usize>,
    pub component: Option<PropagatorComponent>,
    pub scan: Option<ScanKind>,
    pub phase_max: Option<f64>,
    pub out_csv: Option<PathBuf>,
    pub out_svg: Option<PathBuf>,
}

macro_rules! take {
    ($dst:expr, $src:expr) => {
        if let Some(v) = $src {
            $dst = Some(v);
        }
    };
}

impl Overrides {
    /// Values of `top` replace values of `self`.
    pub fn layered(mut self, top: Overrides) -> Overrides {
        take!(self.models, top.models);
        take!(self.preset, top.preset);
        take!(self.d, top.d);
        take!(self.dx, top.dx);
        take!(self.tau, top.tau);
        take!(self.b3, top.b3);
        take!(self.sigma0, top.sigma0);
        take!(self.sigma0p, top.sigma0p);
        take!(self.mass_min, top.mass_min);
        take!(self.mass_max, top.mass_max);
        take!(self.points, top.points);
        take!(self.log_grid, top.log_grid);
        take!(self.kernel, top.kernel);
        take!(self.units, top.units);
        take!(self.steps, top.steps);
        take!(self.component, top.component);
        take!(self.scan, top.scan);
        take!(self.phase_max, top.phase_max);
        take!(self.out_csv, top.out_csv);
        take!(self.out_svg, top.out_svg);
        self
    }

    /// Resolve against the selected preset. Without an explicit dx the
    /// superposition extent follows d as dx = d/2.
    pub fn resolve(&self) -> Result<SweepConfig> {
        let mut cfg = SweepConfig::preset(self.preset.unwrap_or(Preset::SetA));
        if let Some(v) = &self.models {
            cfg.models = v.clone();
        }
        if let Some(v) = self.d {
            cfg.d = v;
        }
        cfg.dx = self.dx.unwrap_or(cfg.d / 2.0);
        macro_rules! set {
            ($($f:ident),*) => { $( if let Some(v) = self.$f { cfg.$f = v; } )* };
        }
        set!(
            tau, b3, sigma0, sigma0p, mass_min, mass_max, points, log_grid, kernel, units, steps,
            component, scan, phase_max
        );
        if let Some(p) = &self.out_csv {
            cfg.out_csv = Some(p.clone());
        }
        if let Some(p) = &self.out_svg {
            cfg.out_svg = Some(p.clone());
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Parse `key = value` lines. `#`/`;` start comments, `[section]`
    /// headers are ignored. Errors name the offending line.
    pub fn from_ini_str(text: &str, origin: &str) -> Result<Overrides> {
        let mut o = Overrides::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split(['#', ';']).next().unwrap_or("").trim();
            if line.is_empty() || (line.starts_with('[') && line.ends_with(']')) {
                continue;
            }
            let at = |msg: String| Error::Config(format!("{origin} line {}: {msg}", n + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| at(format!("expected key = value, found `{line}`")))?;
            let key = key.trim().to_ascii_lowercase().replace('-', "_");
            let value = value.trim();
            o.set(&key, value).map_err(|e| at(e.to_string()))?;
        }
        Ok(o)
    }

    pub fn from_ini_file(path: &FsPath) -> Result<Overrides> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_ini_str(&text, &path.display().to_string())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
            v.parse::<T>()
                .map_err(|_| Error::Config(format!("`{key}`: cannot parse `{v}`")))
        }
        fn flag(key: &str, v: &str) -> Result<bool> {
            match v.to_ascii_lowercase().as_str() {
                "1" | "true" | "yes" | "on" => Ok(true),
                "0" | "false" | "no" | "off" => Ok(false),
                _ => Err(Error::Config(format!(
                    "`{key}`: expected a boolean, found `{v}`"
                ))),
            }
        }
        match key {
            "model" | "models" => self.models = Some(parse_models(value)?),
            "preset" => self.preset = Some(value.parse()?),
            "d" => self.d = Some(num(key, value)?),
            "dx" => self.dx = Some(num(key, value)?),
            "tau" => self.tau = Some(num(key, value)?),
            "b3" => self.b3 = Some(num(key, value)?),
            "sigma0" => self.sigma0 = Some(num(key, value)?),
            "sigma0p" => self.sigma0p = Some(num(key, value)?),
            "mass_min" => self.mass_min = Some(num(key, value)?),
            "mass_max" => self.mass_max = Some(num(key, value)?),
            "points" => self.points = Some(num(key, value)?),
            "log_grid" => self.log_grid = Some(flag(key, value)?),
            "kernel" => self.kernel = Some(value.parse()?),
            "units" => self.units = Some(value.parse()?),
            "steps" => self.steps = Some(num(key, value)?),
            "propagator" => self.component = Some(parse_component(value)?),
            "scan" => self.scan = Some(value.parse()?),
            "phase_max" => self.phase_max = Some(num(key, value)?),
            "out" => self.out_csv = Some(PathBuf::from(value)),
            "svg" => self.out_svg = Some(PathBuf::from(value)),
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        let a = SweepConfig::preset(Preset::SetA);
        assert_eq!((a.d, a.dx, a.tau, a.b3), (10e-9, 5e-9, 1e3, 1.0));
        let b = SweepConfig::preset(Preset::SetB);
        assert_eq!((b.d, b.dx, b.tau), (0.1e-9, 0.05e-9, 1e6));
        a.validate().unwrap();
        b.validate().unwrap();
    }

    #[test]
    fn ini_parsing_and_precedence() {
        let file = Overrides::from_ini_str(
            "# experiment\n[sweep]\npreset = setB\npoints = 11 ; inline\nmodel = I,II\nkernel=erf\nsigma0 = 1e-10\n",
            "cfg.ini",
        )
        .unwrap();
        let flags = Overrides {
            points: Some(5),
            ..Default::default()
        };
        let cfg = file.layered(flags).resolve().unwrap();
        assert_eq!(cfg.points, 5);
        assert_eq!(cfg.preset, Preset::SetB);
        assert_eq!(cfg.kernel, KernelChoice::Erf);
        assert_eq!(cfg.dx, cfg.d / 2.0);
        assert_eq!(cfg.models, vec![ModelKind::ModelI, ModelKind::ModelII]);
    }

    #[test]
    fn ini_errors_carry_line_numbers() {
        let err = Overrides::from_ini_str("d = 1e-8\npoints = many\n", "x.ini").unwrap_err();
        assert!(err.to_string().contains("x.ini line 2"), "{err}");
        let err = Overrides::from_ini_str("bogus = 1\n", "x.ini").unwrap_err();
        assert!(err.to_string().contains("line 1"));
        assert!(Overrides::from_ini_str("no equals sign\n", "x.ini").is_err());
    }

    #[test]
    fn validation_names_the_flag() {
        let o = Overrides {
            points: Some(1),
            ..Default::default()
        };
        assert!(o.resolve().unwrap_err().to_string().contains("--points"));
        let o = Overrides {
            mass_min: Some(1.0),
            mass_max: Some(0.5),
            ..Default::default()
        };
        assert!(o.resolve().unwrap_err().to_string().contains("--mass-max"));
        let o = Overrides {
            d: Some(1e-9),
            dx: Some(2e-9),
            ..Default::default()
        };
        assert!(o.resolve().unwrap_err().to_string().contains("--dx"));
    }

    #[test]
    fn log_grid_endpoints() {
        let cfg = SweepConfig {
            mass_min: 1e-30,
            mass_max: 1e-20,
            points: 11,
            ..SweepConfig::default()
        };
        let m = cfg.masses();
        assert_eq!(m[0], 1e-30);
        assert_eq!(m[10], 1e-20);
        assert!((m[5] / 1e-25 - 1.0).abs() < 1e-12);
        assert!(m.windows(2).all(|w| w[0] < w[1]));
    }
}
