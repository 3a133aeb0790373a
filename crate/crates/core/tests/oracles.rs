mod oracle;

use std::f64::consts::PI;

use gravent::entanglement::hermitian_eigen;
use gravent::{CMatrix4, C64};
use nalgebra::Vector4;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oracle::*;

#[test]
fn quadrature_rule_sanity() {
    let v = integrate(|x| x.powi(5), 0.0, 1.0, 1e-14).unwrap();
    assert!((v - 1.0 / 6.0).abs() < 1e-15);
    let v = integrate(f64::sin, 0.0, PI, 1e-14).unwrap();
    assert!((v - 2.0).abs() < 1e-14);
    let v = integrate(|x| (-x * x).exp(), 0.0, 8.0, 1e-14).unwrap();
    assert!((v - PI.sqrt() / 2.0).abs() < 1e-14);
}

#[test]
fn kernel_quadrature_coulomb_limit() {
    let want = 1.0 / (4.0 * PI * 5.0);
    let got = kernel_by_quadrature(5.0, 0.1).unwrap();
    assert!(((got - want) / want).abs() < 1e-6, "{got} vs {want}");
}

#[test]
fn kernel_quadrature_erf_value() {
    // erf(1/√2)/(4π)
    let want = 0.054_326_703_635_256_42;
    let got = kernel_by_quadrature(1.0, 1.0).unwrap();
    assert!((got - want).abs() < 1e-6, "{got} vs {want}");
}

#[test]
fn kernel_quadrature_point_limit() {
    let want = 1.0 / (4.0 * PI);
    let got = kernel_by_quadrature(1.0, 1e-4).unwrap();
    assert!((got - want).abs() < 1e-6, "{got} vs {want}");
}

#[test]
fn kernel_quadrature_rejects_bad_input() {
    assert!(kernel_by_quadrature(0.0, 1.0).is_err());
    assert!(kernel_by_quadrature(1.0, 0.0).is_err());
}

#[test]
fn statevector_initial_state() {
    let rho = statevector_evolution(2.0, 1.0, 1.0, 0.0, 1.0);
    assert_eq!(rho, CMatrix4::from_element(C64::new(0.25, 0.0)));
}

#[test]
fn statevector_reference_entry() {
    let rho = statevector_evolution(2.0, 1.0, 1.0, 1.0, 1.0);
    let want = C64::from_polar(0.25, -0.5);
    assert!((rho[(0, 2)] - want).norm() < 1e-15);
    let purity = (rho * rho).trace();
    assert!((purity.re - 1.0).abs() < 1e-14 && purity.im.abs() < 1e-14);
}

fn diag(d: [f64; 4]) -> CMatrix4 {
    CMatrix4::from_diagonal(&Vector4::from(d.map(|x| C64::new(x, 0.0))))
}

#[test]
fn charpoly_identity_and_diagonal() {
    assert_eq!(eigs_by_charpoly(&CMatrix4::identity()).unwrap(), [1.0; 4]);
    let e = eigs_by_charpoly(&diag([0.3, -1.2, 2.5, 0.7])).unwrap();
    for (a, b) in e.iter().zip([2.5, 0.7, 0.3, -1.2]) {
        assert!((a - b).abs() < 1e-12, "{e:?}");
    }
}

pub fn random_hermitian(rng: &mut ChaCha8Rng) -> CMatrix4 {
    let a = CMatrix4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    (a + a.adjoint()) * C64::new(0.5, 0.0)
}

#[test]
fn charpoly_matches_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let m = random_hermitian(&mut rng);
        let a = eigs_by_charpoly(&m).unwrap();
        let b = hermitian_eigen(&m).unwrap().eigenvalues;
        for k in 0..4 {
            assert!((a[k] - b[k]).abs() < 1e-8, "{a:?} vs {b:?}");
        }
    }
}
