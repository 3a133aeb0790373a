//! Fixed-step RK4 for the entrywise-linear rate equations, plus the exact
//! exponential used when a step count cannot resolve the phase.

use crate::error::{Error, Result};
use crate::evolution::rates::RateMatrix;
use crate::state::PairState4;
use crate::{CMatrix4, C64};

pub const DEFAULT_STEPS: usize = 4096;

/// Largest tolerated estimate of the RK4 global phase error,
/// N (θ/N)⁵ / 120 with θ = max|λ| τ.
pub const RK4_ERROR_BUDGET: f64 = 1e-11;

/// Classical fourth-order Runge–Kutta on ρ̇ = λ ∘ ρ, trace renormalized at the end.
pub fn evolve_rk4(
    rho0: &PairState4,
    rm: &RateMatrix,
    tau: f64,
    steps: usize,
) -> Result<PairState4> {
    if steps == 0 {
        return Err(Error::Config("steps must be >= 1".into()));
    }
    if !(tau.is_finite() && tau >= 0.0) {
        return Err(Error::Config(format!(
            "evolution time must be >= 0 (got {tau})"
        )));
    }
    let lambda = rm.lambda();
    let rhs = |y: &CMatrix4| lambda.component_mul(y);
    let h = tau / steps as f64;
    let half = C64::new(0.5 * h, 0.0);
    let full = C64::new(h, 0.0);
    let sixth = C64::new(h / 6.0, 0.0);
    let two = C64::new(2.0, 0.0);

    let mut y = *rho0.matrix();
    if rm.max_rate() == 0.0 || tau == 0.0 {
        return Ok(*rho0);
    }
    for _ in 0..steps {
        let k1 = rhs(&y);
        let k2 = rhs(&(y + k1 * half));
        let k3 = rhs(&(y + k2 * half));
        let k4 = rhs(&(y + k3 * full));
        y += (k1 + k2 * two + k3 * two + k4) * sixth;
    }
    let tr = y.trace().re;
    Ok(PairState4::from_matrix_unchecked(y / C64::new(tr, 0.0)))
}

/// ρ_IJ(τ) = e^{λ_IJ τ} ρ_IJ(0).
pub fn evolve_exact(rho0: &PairState4, rm: &RateMatrix, tau: f64) -> PairState4 {
    let m = rho0
        .matrix()
        .zip_map(rm.lambda(), |r, l| r * (l * C64::new(tau, 0.0)).exp());
    PairState4::from_matrix_unchecked(m)
}

/// Estimated global RK4 error for the fastest entry.
pub fn rk4_error_estimate(rm: &RateMatrix, tau: f64, steps: usize) -> f64 {
    let n = steps.max(1) as f64;
    let theta = rm.max_rate() * tau;
    n * (theta / n).powi(5) / 120.0
}

/// Which route [`propagate`] took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Rk4,
    Exact,
}

/// RK4 when `steps` resolves the fastest phase within [`RK4_ERROR_BUDGET`],
/// otherwise the exact exponential.
pub fn propagate(
    rho0: &PairState4,
    rm: &RateMatrix,
    tau: f64,
    steps: usize,
) -> Result<(PairState4, Route)> {
    if rk4_error_estimate(rm, tau, steps) <= RK4_ERROR_BUDGET {
        Ok((evolve_rk4(rho0, rm, tau, steps)?, Route::Rk4))
    } else {
        Ok((evolve_exact(rho0, rm, tau), Route::Exact))
    }
}
