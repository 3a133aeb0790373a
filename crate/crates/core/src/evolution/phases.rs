//! Path-dependent gravitational phases and the closed-form evolved state.

use crate::error::Result;
use crate::evolution::coupling::{coupling_strength, CouplingModel};
use crate::evolution::kernel::Kernel;
use crate::geometry::{Geometry, Path, PathPair};
use crate::state::PairState4;
use crate::units::UnitSystem;
use crate::{CMatrix4, C64};

/// Accumulated phases relative to the common phase φ = φ_LL = φ_RR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePair {
    pub dphi_lr: f64,
    pub dphi_rl: f64,
    pub phi_common: f64,
}

impl PhasePair {
    pub fn new(dphi_lr: f64, dphi_rl: f64) -> Self {
        Self {
            dphi_lr,
            dphi_rl,
            phi_common: 0.0,
        }
    }

    pub fn phase_sum(&self) -> f64 {
        self.dphi_lr + self.dphi_rl
    }
}

/// φ_ab = g_c τ K(R_ab) / ħ for each path pair, in basis order.
pub fn path_phases(
    coupling: f64,
    geometry: &Geometry,
    tau: f64,
    hbar: f64,
    kernel: &Kernel,
) -> [f64; 4] {
    PathPair::all().map(|p| coupling * tau / hbar * kernel.eval(geometry.separation(p)))
}

/// Phases with the point kernel 1/R.
pub fn phase_pair(c: &CouplingModel, g: &Geometry, tau: f64, u: &UnitSystem) -> Result<PhasePair> {
    phase_pair_with_kernel(c, g, tau, u, &Kernel::Point)
}

pub fn phase_pair_with_kernel(
    c: &CouplingModel,
    g: &Geometry,
    tau: f64,
    u: &UnitSystem,
    kernel: &Kernel,
) -> Result<PhasePair> {
    crate::geometry::validate(g)?;
    let gc = coupling_strength(c, u)?;
    let phi = path_phases(gc, g, tau, u.hbar, kernel);
    let idx = |a, b| PathPair::new(a, b).basis_index();
    let common = phi[idx(Path::L, Path::L)];
    Ok(PhasePair {
        dphi_lr: phi[idx(Path::L, Path::R)] - common,
        dphi_rl: phi[idx(Path::R, Path::L)] - common,
        phi_common: common,
    })
}

/// ρ(τ) = ¼ M with M_IJ = e^{i(θ_I − θ_J)}, θ = (0, Δφ_LR, Δφ_RL, 0), i.e.
/// ρ = |ψ><ψ| for amplitudes e^{iθ_I}/2.
/// Upper triangle:
/// (1,2) = e^{−iΔφ_LR}, (1,3) = e^{−iΔφ_RL}, (1,4) = 1,
/// (2,3) = e^{−i(Δφ_RL − Δφ_LR)}, (2,4) = e^{iΔφ_LR}, (3,4) = e^{iΔφ_RL}.
pub fn closed_form_state(p: &PhasePair) -> PairState4 {
    let theta = [0.0, p.dphi_lr, p.dphi_rl, 0.0];
    let m = CMatrix4::from_fn(|i, j| C64::from_polar(0.25, theta[i] - theta[j]));
    PairState4::from_matrix_unchecked(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> UnitSystem {
        UnitSystem::natural().with_gravitational_constant(1.0)
    }

    #[test]
    fn reference_phases() {
        let c = CouplingModel::model_i(1.0, 1.0).unwrap();
        let g = Geometry::new(2.0, 1.0).unwrap();
        let p = phase_pair(&c, &g, 1.0, &unit()).unwrap();
        assert!((p.phi_common - 0.5).abs() < 1e-15);
        assert!((p.dphi_rl - 0.5).abs() < 1e-15);
        assert!((p.dphi_lr + 1.0 / 6.0).abs() < 1e-15);
        assert!((p.phase_sum() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn zero_time() {
        let c = CouplingModel::model_i(1.0, 1.0).unwrap();
        let g = Geometry::new(2.0, 1.0).unwrap();
        let p = phase_pair(&c, &g, 0.0, &unit()).unwrap();
        assert_eq!((p.dphi_lr, p.dphi_rl, p.phi_common), (0.0, 0.0, 0.0));
    }

    #[test]
    fn null_geometry_has_no_entangling_phase() {
        let c = CouplingModel::model_i(1.0, 1.0).unwrap();
        let g = Geometry::new(2.0, 0.0).unwrap();
        let p = phase_pair(&c, &g, 3.0, &unit()).unwrap();
        assert_eq!(p.phase_sum(), 0.0);
    }

    #[test]
    fn closed_form_entries() {
        let s = closed_form_state(&PhasePair::new(0.0, 0.0));
        assert_eq!(*s.matrix(), CMatrix4::from_element(C64::new(0.25, 0.0)));

        let p = PhasePair::new(-1.0 / 6.0, 0.5);
        let m = *closed_form_state(&p).matrix();
        let want = C64::from_polar(0.25, 1.0 / 6.0);
        assert!((m[(0, 1)] - want).norm() < 1e-16);
        assert!((m[(0, 2)] - C64::from_polar(0.25, -0.5)).norm() < 1e-16);
        assert!((m[(1, 2)] - C64::from_polar(0.25, -(0.5 + 1.0 / 6.0))).norm() < 1e-16);
        assert!((m[(1, 3)] - C64::from_polar(0.25, -1.0 / 6.0)).norm() < 1e-16);
        assert!((m[(2, 3)] - C64::from_polar(0.25, 0.5)).norm() < 1e-16);
        assert_eq!(m[(0, 3)], C64::new(0.25, 0.0));
    }
}
