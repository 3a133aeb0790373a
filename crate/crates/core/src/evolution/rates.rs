//! Entrywise rate matrix of the forward-scattering equations,
//! dρ_IJ/dt = λ_IJ ρ_IJ.

use crate::error::{Error, Result};
use crate::evolution::coupling::{coupling_strength, CouplingModel};
use crate::evolution::ftensor::{assemble_f, calibrated_convention, rates_from_f};
use crate::evolution::kernel::Kernel;
use crate::geometry::Geometry;
use crate::spinor::{spin_summed_vertex, PropagatorComponent};
use crate::state::QubitState2;
use crate::units::UnitSystem;
use crate::{CMatrix4, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateMatrix {
    lambda: CMatrix4,
}

impl RateMatrix {
    /// Checks zero diagonal, zero (1,4)/(4,1) and λ_JI = conj(λ_IJ), the
    /// condition for ρ to stay Hermitian.
    pub fn new(lambda: CMatrix4) -> Result<Self> {
        let scale = lambda
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
            .max(1e-300);
        let tol = 1e-12 * scale;
        for i in 0..4 {
            if lambda[(i, i)].norm() > tol {
                return Err(Error::InvalidModel(format!("rate ({i},{i}) is not zero")));
            }
            for j in 0..4 {
                if (lambda[(j, i)] - lambda[(i, j)].conj()).norm() > tol {
                    return Err(Error::InvalidModel(format!(
                        "rates ({i},{j}) and ({j},{i}) are not conjugate"
                    )));
                }
            }
        }
        if lambda[(0, 3)].norm() > tol {
            return Err(Error::InvalidModel("rate (1,4) is not zero".into()));
        }
        Ok(Self { lambda })
    }

    pub fn zero() -> Self {
        Self {
            lambda: CMatrix4::zeros(),
        }
    }

    pub fn lambda(&self) -> &CMatrix4 {
        &self.lambda
    }

    pub fn max_rate(&self) -> f64 {
        self.lambda.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Propagator numerator times the vertex factors: 1 for the transverse
/// component, 0 for the static one.
pub fn component_weight(component: PropagatorComponent) -> f64 {
    let vertex = match component {
        PropagatorComponent::Transverse0303 => 1.0,
        PropagatorComponent::Static0000 => spin_summed_vertex() * spin_summed_vertex(),
    };
    component.tensor_factor() * vertex
}

/// λ = −i (g_c/ħ) · (propagator numerator) · F/ρ, with F assembled from
/// the calibrated spin sum. The static component carries the spin-summed
/// vertex on each particle, which vanishes.
pub fn rate_matrix(
    c: &CouplingModel,
    g: &Geometry,
    u: &UnitSystem,
    kernel: &Kernel,
    component: PropagatorComponent,
) -> Result<RateMatrix> {
    crate::geometry::validate(g)?;
    let gc = coupling_strength(c, u)?;
    let plus = QubitState2::plus();
    let f = assemble_f(
        &plus,
        &plus,
        g,
        |r| kernel.eval(r),
        &calibrated_convention(),
    );
    let scale = gc / u.hbar * component_weight(component);
    let lambda = rates_from_f(&f) * C64::new(scale, 0.0);
    RateMatrix::new(lambda.map(|z| {
        if z.norm() == 0.0 {
            C64::new(0.0, 0.0)
        } else {
            z
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::ftensor::reference_rates;

    fn unit() -> UnitSystem {
        UnitSystem::natural().with_gravitational_constant(1.0)
    }

    #[test]
    fn reference_layout_rates() {
        let c = CouplingModel::model_i(1.0, 1.0).unwrap();
        let g = Geometry::new(2.0, 1.0).unwrap();
        let rm = rate_matrix(
            &c,
            &g,
            &unit(),
            &Kernel::Point,
            PropagatorComponent::Transverse0303,
        )
        .unwrap();
        let l = rm.lambda();
        assert!((l[(0, 1)] - C64::new(0.0, 1.0 / 6.0)).norm() < 1e-15);
        assert!((l[(1, 2)] - C64::new(0.0, -2.0 / 3.0)).norm() < 1e-15);
        assert!((l[(0, 2)] - C64::new(0.0, -0.5)).norm() < 1e-15);
        assert_eq!(l[(0, 3)], C64::new(0.0, 0.0));
        let want = reference_rates(2.0, 1.0);
        for r in 0..4 {
            for col in (r + 1)..4 {
                assert!((l[(r, col)] - want[(r, col)]).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn static_component_and_static_model_vanish() {
        let g = Geometry::new(2.0, 1.0).unwrap();
        let c = CouplingModel::model_i(1.0, 1.0).unwrap();
        let rm = rate_matrix(
            &c,
            &g,
            &unit(),
            &Kernel::Point,
            PropagatorComponent::Static0000,
        )
        .unwrap();
        assert_eq!(rm, RateMatrix::zero());
        let s = CouplingModel::static_limit(1.0, 1.0).unwrap();
        let rm = rate_matrix(
            &s,
            &g,
            &unit(),
            &Kernel::Point,
            PropagatorComponent::Transverse0303,
        )
        .unwrap();
        assert_eq!(rm, RateMatrix::zero());
    }

    #[test]
    fn rejects_bad_structure() {
        let mut l = CMatrix4::zeros();
        l[(0, 1)] = C64::new(0.0, 1.0);
        assert!(RateMatrix::new(l).is_err());
        l[(1, 0)] = C64::new(0.0, -1.0);
        assert!(RateMatrix::new(l).is_ok());
        l[(0, 0)] = C64::new(0.0, 1.0);
        assert!(RateMatrix::new(l).is_err());
    }
}
