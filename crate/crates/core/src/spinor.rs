//! Dirac-representation gamma matrices, rest-frame spinors and the
//! (I ⊗ σ³) bilinears that carry the spin structure of the transverse
//! graviton vertex.

use nalgebra::{Matrix4, Vector4};

use crate::error::{Error, Result};
use crate::{CMatrix4, C64};

/// Minkowski metric, signature (+, -, -, -).
pub const ETA: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
];

const CLIFFORD_TOL: f64 = 1e-14;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Pauli matrices σ¹, σ², σ³ as 2×2 arrays.
fn pauli(k: usize) -> [[C64; 2]; 2] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match k {
        1 => [[z, one], [one, z]],
        2 => [[z, -i], [i, z]],
        _ => [[one, z], [z, -one]],
    }
}

/// γ^μ in the Dirac representation: γ⁰ = diag(I, -I), γ^k = [[0, σ^k], [-σ^k, 0]].
pub fn gamma(mu: usize) -> Result<CMatrix4> {
    let mut m = CMatrix4::zeros();
    match mu {
        0 => {
            for i in 0..4 {
                m[(i, i)] = c(if i < 2 { 1.0 } else { -1.0 }, 0.0);
            }
        }
        1..=3 => {
            let s = pauli(mu);
            for i in 0..2 {
                for j in 0..2 {
                    m[(i, j + 2)] = s[i][j];
                    m[(i + 2, j)] = -s[i][j];
                }
            }
        }
        _ => return Err(Error::IndexOutOfRange(mu)),
    }
    Ok(m)
}

/// γ_μ = η_μν γ^ν (the metric is diagonal).
pub fn gamma_lower(mu: usize) -> Result<CMatrix4> {
    Ok(gamma(mu)? * c(ETA[mu][mu], 0.0))
}

/// σ_μν = (i/2)[γ_μ, γ_ν].
pub fn sigma_tensor(mu: usize, nu: usize) -> Result<CMatrix4> {
    let a = gamma_lower(mu)?;
    let b = gamma_lower(nu)?;
    Ok((a * b - b * a) * c(0.0, 0.5))
}

/// I ⊗ σ³ = diag(1, -1, 1, -1).
pub fn identity_kron_sigma3() -> CMatrix4 {
    CMatrix4::from_diagonal(&Vector4::new(
        c(1.0, 0.0),
        c(-1.0, 0.0),
        c(1.0, 0.0),
        c(-1.0, 0.0),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    /// r = 1, drives path L.
    Up,
    /// r = 2, drives path R.
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];

    pub fn index(self) -> usize {
        match self {
            Spin::Up => 0,
            Spin::Down => 1,
        }
    }

    pub fn from_index(i: usize) -> Spin {
        if i == 0 {
            Spin::Up
        } else {
            Spin::Down
        }
    }
}

/// Rest-frame Dirac spinor, unit-normalized upper components.
pub fn rest_spinor(r: Spin) -> Vector4<C64> {
    let mut u = Vector4::zeros();
    u[r.index()] = c(1.0, 0.0);
    u
}

/// ū_{r'} (I ⊗ σ³) u_r, evaluated by explicit contraction.
pub fn bilinear_sigma3(rprime: Spin, r: Spin) -> f64 {
    let ubar = rest_spinor(rprime).adjoint() * gamma(0).expect("γ⁰");
    let val = (ubar * identity_kron_sigma3() * rest_spinor(r))[(0, 0)];
    debug_assert!(val.im.abs() < 1e-15);
    val.re
}

/// The 2×2 bilinear table over (r', r).
pub fn bilinear_table() -> [[f64; 2]; 2] {
    let mut t = [[0.0; 2]; 2];
    for rp in Spin::BOTH {
        for r in Spin::BOTH {
            t[rp.index()][r.index()] = bilinear_sigma3(rp, r);
        }
    }
    t
}

/// Spin-summed vertex Σ_r ū_r (I ⊗ σ³) u_r. Vanishes, which is what removes
/// the static (00,00) contribution.
pub fn spin_summed_vertex() -> f64 {
    Spin::BOTH.iter().map(|&r| bilinear_sigma3(r, r)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropagatorComponent {
    Static0000,
    Transverse0303,
}

impl PropagatorComponent {
    fn indices(self) -> (usize, usize, usize, usize) {
        match self {
            PropagatorComponent::Static0000 => (0, 0, 0, 0),
            PropagatorComponent::Transverse0303 => (0, 3, 0, 3),
        }
    }

    /// Stored numerators, checked against the metric by [`check_algebra`].
    pub const fn tensor_factor(self) -> f64 {
        match self {
            PropagatorComponent::Static0000 => -1.0,
            PropagatorComponent::Transverse0303 => 1.0,
        }
    }
}

/// Numerator of the de Donder propagator for the selected indices,
/// −(η^{μμ'}η^{νν'} + η^{μν'}η^{νμ'} − η^{μν}η^{μ'ν'}), multiplying 1/|K|².
pub fn propagator_factor(component: PropagatorComponent) -> f64 {
    let (mu, nu, mup, nup) = component.indices();
    -(ETA[mu][mup] * ETA[nu][nup] + ETA[mu][nup] * ETA[nu][mup] - ETA[mu][nu] * ETA[mup][nup])
}

fn max_abs(m: &CMatrix4) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Clifford algebra, bilinear table and propagator constants. Run once at
/// startup by the CLI.
pub fn check_algebra() -> Result<()> {
    for mu in 0..4 {
        for nu in 0..4 {
            let a = gamma(mu)?;
            let b = gamma(nu)?;
            let expected = Matrix4::identity() * c(2.0 * ETA[mu][nu], 0.0);
            let dev = max_abs(&(a * b + b * a - expected));
            if dev > CLIFFORD_TOL {
                return Err(Error::Calibration(format!(
                    "anticommutator {{γ^{mu}, γ^{nu}}} off by {dev:e}"
                )));
            }
        }
    }
    if bilinear_table() != [[1.0, 0.0], [0.0, -1.0]] {
        return Err(Error::Calibration(format!(
            "bilinear table {:?} is not diag(+1, -1)",
            bilinear_table()
        )));
    }
    for comp in [
        PropagatorComponent::Static0000,
        PropagatorComponent::Transverse0303,
    ] {
        if propagator_factor(comp) != comp.tensor_factor() {
            return Err(Error::Calibration(format!(
                "{comp:?} propagator factor mismatch"
            )));
        }
    }
    Ok(())
}
