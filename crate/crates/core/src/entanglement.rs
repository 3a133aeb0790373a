//! Hermitian eigensolver, trace norm and logarithmic negativity.

use crate::error::{Error, Result};
use crate::state::{partial_trace_b, partial_transpose_b, PairState4};
use crate::{CMatrix4, C64};

const HERMITIAN_TOL: f64 = 1e-10;
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;
const CLAMP_TOL: f64 = 1e-10;

/// Eigenvalues in descending order; column k of `eigenvectors` belongs to
/// `eigenvalues[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum4 {
    pub eigenvalues: [f64; 4],
    pub eigenvectors: CMatrix4,
}

impl Spectrum4 {
    /// Q Λ Q†.
    pub fn reconstruct(&self) -> CMatrix4 {
        let mut lambda = CMatrix4::zeros();
        for k in 0..4 {
            lambda[(k, k)] = C64::new(self.eigenvalues[k], 0.0);
        }
        self.eigenvectors * lambda * self.eigenvectors.adjoint()
    }
}

pub fn hermiticity_defect(m: &CMatrix4) -> f64 {
    (m - m.adjoint())
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

fn off_diagonal_norm(a: &CMatrix4) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic complex Jacobi. Each rotation first removes the phase of a_pq
/// and then applies the real Rutishauser rotation.
pub fn hermitian_eigen(m: &CMatrix4) -> Result<Spectrum4> {
    let defect = hermiticity_defect(m);
    if defect > HERMITIAN_TOL || !defect.is_finite() {
        return Err(Error::NotHermitian(defect));
    }
    // symmetrize so round-off in the input does not leak into the rotations
    let mut a = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let mut v = CMatrix4::identity();
    let scale = a.norm().max(f64::MIN_POSITIVE);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > OFF_DIAGONAL_TOL * scale {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let zeta = (aqq - app) / (2.0 * mag);
                let t = if zeta.is_infinite() {
                    0.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * cs;

                let mut j = CMatrix4::identity();
                j[(p, p)] = C64::new(cs, 0.0);
                j[(p, q)] = C64::new(sn, 0.0);
                j[(q, p)] = -phase.conj() * sn;
                j[(q, q)] = phase.conj() * cs;
                a = j.adjoint() * a * j;
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                v *= j;
            }
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &k| a[(k, k)].re.total_cmp(&a[(i, i)].re));
    let mut eigenvalues = [0.0; 4];
    let mut eigenvectors = CMatrix4::zeros();
    for (dst, &src) in order.iter().enumerate() {
        eigenvalues[dst] = a[(src, src)].re;
        eigenvectors.set_column(dst, &v.column(src));
    }
    Ok(Spectrum4 {
        eigenvalues,
        eigenvectors,
    })
}

/// ‖M‖₁ = Σ|λ| for Hermitian M.
pub fn trace_norm(m: &CMatrix4) -> Result<f64> {
    Ok(hermitian_eigen(m)?
        .eigenvalues
        .iter()
        .map(|l| l.abs())
        .sum())
}

fn log2_clamped(norm: f64) -> f64 {
    if (norm - 1.0).abs() <= CLAMP_TOL {
        0.0
    } else {
        norm.log2()
    }
}

/// E_N = log₂ ‖ρ^Γ‖₁ in bits, with ρ^Γ transposed on subsystem B.
pub fn log_negativity(rho: &PairState4) -> Result<f64> {
    Ok(log2_clamped(trace_norm(&partial_transpose_b(
        rho.matrix(),
    ))?))
}

/// Same measure with the transpose taken on subsystem A.
pub fn log_negativity_transpose_a(rho: &PairState4) -> Result<f64> {
    Ok(log2_clamped(trace_norm(
        &crate::state::partial_transpose_a(rho.matrix()),
    )?))
}

/// 2 |(Tr_B ρ)₁₂|, the coherence left in the reduced state of A.
pub fn reduced_coherence(rho: &PairState4) -> f64 {
    2.0 * partial_trace_b(rho).matrix()[(0, 1)].norm()
}
