//! Microscopic coupling models and their effective strength.
//!
//! Model I couples through G m1 m2. Model II replaces m1 m2 by
//! ω1 ω2 / 4 with Larmor frequencies ωi = B3/mi, giving G B3² / (4 m1 m2).
//! Both are returned in "G·mass²" units of the chosen system: J·m in SI,
//! dimensionless in natural units.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::units::{Dimension, UnitMode, UnitSystem, G_SI};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelKind {
    ModelI,
    ModelII,
    StaticLimit,
}

impl ModelKind {
    pub fn label(&self) -> &'static str {
        match self {
            ModelKind::ModelI => "I",
            ModelKind::ModelII => "II",
            ModelKind::StaticLimit => "static",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" | "model1" | "modeli" => Ok(ModelKind::ModelI),
            "ii" | "2" | "model2" | "modelii" => Ok(ModelKind::ModelII),
            "static" | "staticlimit" => Ok(ModelKind::StaticLimit),
            other => Err(Error::Config(format!("unknown model `{other}`"))),
        }
    }
}

/// Masses and field are expressed in the unit system the model is used with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingModel {
    pub kind: ModelKind,
    pub m1: f64,
    pub m2: f64,
    pub b3: Option<f64>,
}

impl CouplingModel {
    pub fn new(kind: ModelKind, m1: f64, m2: f64, b3: Option<f64>) -> Result<Self> {
        let model = Self { kind, m1, m2, b3 };
        model.validate()?;
        Ok(model)
    }

    pub fn model_i(m1: f64, m2: f64) -> Result<Self> {
        Self::new(ModelKind::ModelI, m1, m2, None)
    }

    pub fn model_ii(m1: f64, m2: f64, b3: f64) -> Result<Self> {
        Self::new(ModelKind::ModelII, m1, m2, Some(b3))
    }

    pub fn static_limit(m1: f64, m2: f64) -> Result<Self> {
        Self::new(ModelKind::StaticLimit, m1, m2, None)
    }

    fn validate(&self) -> Result<()> {
        if !(self.m1 > 0.0 && self.m2 > 0.0 && self.m1.is_finite() && self.m2.is_finite()) {
            return Err(Error::InvalidModel(format!(
                "masses must be positive (m1 = {}, m2 = {})",
                self.m1, self.m2
            )));
        }
        if let Some(b) = self.b3 {
            if !(b >= 0.0 && b.is_finite()) {
                return Err(Error::InvalidModel(format!("B3 must be >= 0 (got {b})")));
            }
        }
        Ok(())
    }

    /// Larmor frequencies (B3/m1, B3/m2), meaningful in natural units.
    pub fn larmor(&self) -> Option<(f64, f64)> {
        self.b3.map(|b| (b / self.m1, b / self.m2))
    }
}

/// Effective coupling g_c multiplying the kernel in the phase rates.
pub fn coupling_strength(c: &CouplingModel, u: &UnitSystem) -> Result<f64> {
    c.validate()?;
    match c.kind {
        ModelKind::StaticLimit => Ok(0.0),
        ModelKind::ModelI => Ok(u.g * c.m1 * c.m2),
        ModelKind::ModelII => {
            let b3 =
                c.b3.ok_or_else(|| Error::InvalidModel("Model II needs B3".into()))?;
            match u.mode {
                UnitMode::Natural => Ok(u.g * b3 * b3 / (4.0 * c.m1 * c.m2)),
                UnitMode::Si => {
                    // The Larmor replacement is only dimensionally sound with
                    // ħ = c = 1, so evaluate there and come back as J·m.
                    let nat = UnitSystem::natural();
                    let g_nat = nat.g * (u.g / G_SI);
                    let b = nat.from_si(b3, Dimension::MagneticField);
                    let m1 = nat.from_si(c.m1, Dimension::Mass);
                    let m2 = nat.from_si(c.m2, Dimension::Mass);
                    Ok(g_nat * b * b / (4.0 * m1 * m2) * u.hbar * u.c)
                }
            }
        }
    }
}

/// The same coupling as a pure number, g_c / (ħ c).
pub fn coupling_natural(c: &CouplingModel, u: &UnitSystem) -> Result<f64> {
    Ok(coupling_strength(c, u)? / (u.hbar * u.c))
}
