//! Physical constants and SI <-> natural-unit conversion.
//!
//! Natural units here mean ħ = c = 1 with energy as the base dimension,
//! measured in electronvolts. Magnetic fields use the Heaviside–Lorentz
//! convention (field energy density B²/2 in both systems), so
//! `B[eV²] = B[T] · sqrt((ħc)³ / (e μ0))` with ħc in eV·m.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};

/// CODATA 2018 gravitational constant, m³ kg⁻¹ s⁻².
pub const G_SI: f64 = 6.674_30e-11;
/// CODATA 2018 reduced Planck constant, J s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Speed of light, m/s (exact).
pub const C_SI: f64 = 299_792_458.0;
/// Elementary charge, C (exact); fixes the J <-> eV conversion.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// CODATA 2018 vacuum permeability, N A⁻².
pub const MU0_SI: f64 = 1.256_637_062_12e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitMode {
    Si,
    Natural,
}

impl fmt::Display for UnitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitMode::Si => f.write_str("si"),
            UnitMode::Natural => f.write_str("natural"),
        }
    }
}

impl FromStr for UnitMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "si" => Ok(UnitMode::Si),
            "natural" | "nat" => Ok(UnitMode::Natural),
            other => Err(Error::Config(format!("unknown unit system `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Mass,
    Length,
    Time,
    MagneticField,
    Frequency,
    Dimensionless,
}

impl Dimension {
    /// Multiplicative factor taking a value of this dimension from SI to
    /// natural (eV-power) units.
    fn si_to_natural(self) -> f64 {
        let hbar_c_ev_m = HBAR_SI * C_SI / ELEMENTARY_CHARGE;
        match self {
            // E = m c², J -> eV
            Dimension::Mass => C_SI * C_SI / ELEMENTARY_CHARGE,
            Dimension::Length => 1.0 / hbar_c_ev_m,
            Dimension::Time => ELEMENTARY_CHARGE / HBAR_SI,
            Dimension::Frequency => HBAR_SI / ELEMENTARY_CHARGE,
            Dimension::MagneticField => (hbar_c_ev_m.powi(3) / (ELEMENTARY_CHARGE * MU0_SI)).sqrt(),
            Dimension::Dimensionless => 1.0,
        }
    }

    fn natural_unit_label(self) -> &'static str {
        match self {
            Dimension::Mass => "eV",
            Dimension::Length => "1/eV",
            Dimension::Time => "1/eV",
            Dimension::Frequency => "eV",
            Dimension::MagneticField => "eV^2",
            Dimension::Dimensionless => "1",
        }
    }

    fn si_unit_label(self) -> &'static str {
        match self {
            Dimension::Mass => "kg",
            Dimension::Length => "m",
            Dimension::Time => "s",
            Dimension::Frequency => "1/s",
            Dimension::MagneticField => "T",
            Dimension::Dimensionless => "1",
        }
    }
}

impl FromStr for Dimension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mass" => Ok(Dimension::Mass),
            "length" => Ok(Dimension::Length),
            "time" => Ok(Dimension::Time),
            "magnetic_field" | "magneticfield" | "field" => Ok(Dimension::MagneticField),
            "frequency" => Ok(Dimension::Frequency),
            "dimensionless" | "none" => Ok(Dimension::Dimensionless),
            other => Err(Error::UnsupportedDimension(other.to_string())),
        }
    }
}

/// A value tagged with its dimension. Arithmetic between different
/// dimensions is rejected.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalQuantity {
    pub value: f64,
    pub dimension: Dimension,
}

impl PhysicalQuantity {
    pub fn new(value: f64, dimension: Dimension) -> Self {
        Self { value, dimension }
    }

    pub fn mass(value: f64) -> Self {
        Self::new(value, Dimension::Mass)
    }

    pub fn length(value: f64) -> Self {
        Self::new(value, Dimension::Length)
    }

    pub fn time(value: f64) -> Self {
        Self::new(value, Dimension::Time)
    }

    pub fn magnetic_field(value: f64) -> Self {
        Self::new(value, Dimension::MagneticField)
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        self.check_same(rhs)?;
        Ok(Self::new(self.value + rhs.value, self.dimension))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        self.check_same(rhs)?;
        Ok(Self::new(self.value - rhs.value, self.dimension))
    }

    pub fn scale(self, factor: f64) -> Self {
        Self::new(self.value * factor, self.dimension)
    }

    fn check_same(self, rhs: Self) -> Result<()> {
        if self.dimension == rhs.dimension {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                lhs: self.dimension,
                rhs: rhs.dimension,
            })
        }
    }
}

/// Constants of one unit system. `kappa_sq` is always `16π G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    pub mode: UnitMode,
    pub hbar: f64,
    pub c: f64,
    pub g: f64,
    pub kappa_sq: f64,
}

impl UnitSystem {
    pub fn si() -> Self {
        Self::with_constants(UnitMode::Si, HBAR_SI, C_SI, G_SI)
    }

    /// ħ = c = 1, energies in eV, G in eV⁻².
    pub fn natural() -> Self {
        let g = G_SI * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE / (HBAR_SI * C_SI.powi(5));
        Self::with_constants(UnitMode::Natural, 1.0, 1.0, g)
    }

    pub fn for_mode(mode: UnitMode) -> Self {
        match mode {
            UnitMode::Si => Self::si(),
            UnitMode::Natural => Self::natural(),
        }
    }

    /// Same system with a different gravitational constant, e.g. `G = 1`
    /// for normalized test problems.
    pub fn with_gravitational_constant(self, g: f64) -> Self {
        Self::with_constants(self.mode, self.hbar, self.c, g)
    }

    fn with_constants(mode: UnitMode, hbar: f64, c: f64, g: f64) -> Self {
        Self {
            mode,
            hbar,
            c,
            g,
            kappa_sq: 16.0 * PI * g,
        }
    }

    /// κ²/16π, the prefactor of the forward-scattering rate.
    pub fn coupling_prefactor(&self) -> f64 {
        self.kappa_sq / (16.0 * PI)
    }

    /// Express a quantity given in SI in this system.
    pub fn from_si(&self, value: f64, dimension: Dimension) -> f64 {
        convert(
            PhysicalQuantity::new(value, dimension),
            UnitMode::Si,
            self.mode,
        )
        .value
    }

    /// Express a quantity given in this system in SI.
    pub fn to_si(&self, value: f64, dimension: Dimension) -> f64 {
        convert(
            PhysicalQuantity::new(value, dimension),
            self.mode,
            UnitMode::Si,
        )
        .value
    }

    /// `key=value` dump of constants and conventions.
    pub fn audit_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mode={}", self.mode);
        let _ = writeln!(out, "hbar={:.16e}", self.hbar);
        let _ = writeln!(out, "c={:.16e}", self.c);
        let _ = writeln!(out, "G={:.16e}", self.g);
        let _ = writeln!(out, "kappa_sq={:.16e}", self.kappa_sq);
        let _ = writeln!(out, "coupling_prefactor={:.16e}", self.coupling_prefactor());
        let _ = writeln!(out, "G_si={:.16e}", G_SI);
        let _ = writeln!(out, "hbar_si={:.16e}", HBAR_SI);
        let _ = writeln!(out, "c_si={:.16e}", C_SI);
        let _ = writeln!(out, "elementary_charge={:.16e}", ELEMENTARY_CHARGE);
        let _ = writeln!(out, "mu0_si={:.16e}", MU0_SI);
        let _ = writeln!(out, "G_natural_eV^-2={:.16e}", UnitSystem::natural().g);
        let _ = writeln!(out, "natural_base=energy[eV]");
        let _ = writeln!(out, "magnetic_field_convention=heaviside-lorentz");
        for dim in [
            Dimension::Mass,
            Dimension::Length,
            Dimension::Time,
            Dimension::Frequency,
            Dimension::MagneticField,
        ] {
            let _ = writeln!(
                out,
                "1_{}={:.16e} {}",
                dim.si_unit_label(),
                dim.si_to_natural(),
                dim.natural_unit_label()
            );
        }
        out
    }
}

/// Rescale `q` from one unit system to another. Only the mode matters: the
/// conversion chain uses ħ, c, e and μ0, never G.
pub fn convert(q: PhysicalQuantity, from: UnitMode, to: UnitMode) -> PhysicalQuantity {
    let factor = match (from, to) {
        (UnitMode::Si, UnitMode::Natural) => q.dimension.si_to_natural(),
        (UnitMode::Natural, UnitMode::Si) => 1.0 / q.dimension.si_to_natural(),
        _ => 1.0,
    };
    q.scale(factor)
}
