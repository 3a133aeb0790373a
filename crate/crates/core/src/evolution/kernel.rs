//! Error function and the wave-packet regularized 1/R kernel.

use std::f64::consts::{FRAC_2_SQRT_PI, PI, SQRT_2};

use crate::error::{Error, Result};

const SERIES_LIMIT: f64 = 3.0;
// erfc(6) < 2.2e-17: beyond this 1 - erfc rounds to 1
const TAIL_LIMIT: f64 = 6.0;

/// erf(x), accurate to ~1e-15 absolute.
///
/// |x| < 3 uses the positive-term series
/// erf x = (2x/√π) e^{-x²} Σ (2x²)ⁿ / (1·3···(2n+1));
/// larger |x| uses the continued fraction of erfc (modified Lentz).
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let v = if ax > TAIL_LIMIT {
        1.0
    } else if ax < SERIES_LIMIT {
        erf_series(ax)
    } else {
        1.0 - erfc_continued_fraction(ax)
    };
    v.copysign(x)
}

fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 0.0;
    loop {
        term *= 2.0 * x2 / (2.0 * n + 3.0);
        sum += term;
        n += 1.0;
        if term < sum * 1e-17 {
            break;
        }
    }
    FRAC_2_SQRT_PI * x * (-x2).exp() * sum
}

/// erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), x ≥ 3.
fn erfc_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for n in 1..500 {
        let a = 0.5 * n as f64;
        d = x + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = x + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() / (f * PI.sqrt())
}

/// Gaussian localization widths of the two particles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePacketWidths {
    pub sigma0: f64,
    pub sigma0p: f64,
}

impl WavePacketWidths {
    pub fn new(sigma0: f64, sigma0p: f64) -> Result<Self> {
        if !(sigma0 >= 0.0 && sigma0p >= 0.0 && sigma0.is_finite() && sigma0p.is_finite()) {
            return Err(Error::InvalidModel(format!(
                "wave-packet widths must be finite and >= 0 (got {sigma0}, {sigma0p})"
            )));
        }
        Ok(Self { sigma0, sigma0p })
    }

    /// Width σ with exp(-σ²K²/2) = exp(-(σ0² + σ0'²)K²).
    pub fn sigma_eff(&self) -> f64 {
        (2.0 * (self.sigma0 * self.sigma0 + self.sigma0p * self.sigma0p)).sqrt()
    }
}

/// Distance kernel replacing 1/R in the rate equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Kernel {
    Point,
    Erf { sigma: f64 },
}

impl Kernel {
    /// K(R). The erf kernel stays finite at R = 0 with limit √(2/π)/σ.
    pub fn eval(&self, r: f64) -> f64 {
        match *self {
            Kernel::Point => 1.0 / r,
            Kernel::Erf { sigma: 0.0 } => 1.0 / r,
            Kernel::Erf { sigma } => {
                if r == 0.0 {
                    FRAC_2_SQRT_PI / (SQRT_2 * sigma)
                } else {
                    erf(r / (SQRT_2 * sigma)) / r
                }
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kernel::Point => "point",
            Kernel::Erf { .. } => "erf",
        }
    }

    /// Lengths scale with the unit system, so σ must follow.
    pub fn scaled(&self, factor: f64) -> Kernel {
        match *self {
            Kernel::Point => Kernel::Point,
            Kernel::Erf { sigma } => Kernel::Erf {
                sigma: sigma * factor,
            },
        }
    }
}

pub fn wavepacket_kernel(w: &WavePacketWidths) -> Kernel {
    Kernel::Erf {
        sigma: w.sigma_eff(),
    }
}
