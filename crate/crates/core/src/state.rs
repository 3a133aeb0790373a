//! Single-qubit and two-qubit density matrices.
//!
//! Pair matrices use the basis {LL, LR, RL, RR} with the fold
//! `I = 2 i + k`, `J = 2 j + l` (zero-based) for ρ_IJ = ρ^A_ij ρ^B_kl.

use std::fmt::Write as _;

use crate::entanglement::{hermitian_eigen, hermiticity_defect};
use crate::error::{Error, Result};
use crate::{CMatrix2, CMatrix4, C64};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const POSITIVITY_TOL: f64 = -1e-10;

#[inline]
pub fn fold(i: usize, k: usize) -> usize {
    2 * i + k
}

#[inline]
pub fn unfold(big: usize) -> (usize, usize) {
    (big / 2, big % 2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState2 {
    m: CMatrix2,
}

impl QubitState2 {
    pub fn new(m: CMatrix2) -> Result<Self> {
        let herm = (m - m.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if herm > HERMITIAN_TOL {
            return Err(Error::InvalidState(format!("not Hermitian ({herm:e})")));
        }
        let tr = m.trace();
        if (tr - C64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace {tr} != 1")));
        }
        let a = m[(0, 0)].re;
        let d = m[(1, 1)].re;
        let min_eig = 0.5 * (a + d) - (0.25 * (a - d) * (a - d) + m[(0, 1)].norm_sqr()).sqrt();
        if min_eig < POSITIVITY_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {min_eig:e}"
            )));
        }
        Ok(Self { m })
    }

    /// (|L> + |R>)/√2, the prepared superposition.
    pub fn plus() -> Self {
        let h = C64::new(0.5, 0.0);
        Self {
            m: CMatrix2::new(h, h, h, h),
        }
    }

    pub fn maximally_mixed() -> Self {
        Self {
            m: CMatrix2::identity() * C64::new(0.5, 0.0),
        }
    }

    pub fn basis(index: usize) -> Self {
        let mut m = CMatrix2::zeros();
        m[(index.min(1), index.min(1))] = C64::new(1.0, 0.0);
        Self { m }
    }

    pub fn matrix(&self) -> &CMatrix2 {
        &self.m
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairState4 {
    m: CMatrix4,
}

impl PairState4 {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(m: CMatrix4) -> Result<Self> {
        let herm = hermiticity_defect(&m);
        if herm > HERMITIAN_TOL || !herm.is_finite() {
            return Err(Error::InvalidState(format!("not Hermitian ({herm:e})")));
        }
        let tr = m.trace();
        if (tr - C64::new(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(Error::InvalidState(format!("trace {tr} != 1")));
        }
        let min = hermitian_eigen(&m)?.eigenvalues[3];
        if min < POSITIVITY_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { m })
    }

    /// Skips validation; for matrices that are states by construction.
    pub(crate) fn from_matrix_unchecked(m: CMatrix4) -> Self {
        Self { m }
    }

    /// All entries ¼: both particles in (|L> + |R>)/√2.
    pub fn uniform_superposition() -> Self {
        tensor(&QubitState2::plus(), &QubitState2::plus())
    }

    pub fn matrix(&self) -> &CMatrix4 {
        &self.m
    }

    pub fn purity(&self) -> f64 {
        (self.m * self.m).trace().re
    }

    /// Row-major CSV block, one line per row, each cell as `re,im`.
    pub fn to_csv_block(&self) -> String {
        matrix_to_csv_block(&self.m)
    }

    pub fn from_csv_block(text: &str) -> Result<Self> {
        Self::new(matrix_from_csv_block(text)?)
    }
}

pub fn matrix_to_csv_block(m: &CMatrix4) -> String {
    let mut out = String::new();
    for i in 0..4 {
        let cells: Vec<String> = (0..4)
            .map(|j| format!("{:.16e},{:.16e}", m[(i, j)].re, m[(i, j)].im))
            .collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

pub fn matrix_from_csv_block(text: &str) -> Result<CMatrix4> {
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if rows.len() != 4 {
        return Err(Error::Parse(format!(
            "expected 4 rows, found {}",
            rows.len()
        )));
    }
    let mut m = CMatrix4::zeros();
    for (i, row) in rows.iter().enumerate() {
        let vals = row
            .split(',')
            .map(|s| s.trim().parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("row {}: {e}", i + 1)))?;
        if vals.len() != 8 {
            return Err(Error::Parse(format!(
                "row {}: expected 8 numbers, found {}",
                i + 1,
                vals.len()
            )));
        }
        for j in 0..4 {
            m[(i, j)] = C64::new(vals[2 * j], vals[2 * j + 1]);
        }
    }
    Ok(m)
}

/// ρ^A ⊗ ρ^B under the fold.
pub fn tensor(a: &QubitState2, b: &QubitState2) -> PairState4 {
    let mut m = CMatrix4::zeros();
    for big_i in 0..4 {
        let (i, k) = unfold(big_i);
        for big_j in 0..4 {
            let (j, l) = unfold(big_j);
            m[(big_i, big_j)] = a.m[(i, j)] * b.m[(k, l)];
        }
    }
    PairState4 { m }
}

/// (ρ_A)_ij = Σ_k ρ_(i,k),(j,k).
pub fn partial_trace_b(p: &PairState4) -> QubitState2 {
    let mut m = CMatrix2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = (0..2).map(|k| p.m[(fold(i, k), fold(j, k))]).sum();
        }
    }
    QubitState2 { m }
}

/// (ρ^Γ)_(i,k),(j,l) = ρ_(i,l),(j,k). Hermitian but not necessarily positive.
pub fn partial_transpose_b(m: &CMatrix4) -> CMatrix4 {
    let mut out = CMatrix4::zeros();
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    out[(fold(i, k), fold(j, l))] = m[(fold(i, l), fold(j, k))];
                }
            }
        }
    }
    out
}

/// Transpose on subsystem A: ρ_(j,k),(i,l).
pub fn partial_transpose_a(m: &CMatrix4) -> CMatrix4 {
    let mut out = CMatrix4::zeros();
    for i in 0..2 {
        for k in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    out[(fold(i, k), fold(j, l))] = m[(fold(j, k), fold(i, l))];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_dev(a: &CMatrix4, b: &CMatrix4) -> f64 {
        (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn all_quarter() -> CMatrix4 {
        CMatrix4::from_element(C64::new(0.25, 0.0))
    }

    #[test]
    fn tensor_examples() {
        let p = tensor(&QubitState2::plus(), &QubitState2::plus());
        assert_eq!(*p.matrix(), all_quarter());

        let p = tensor(&QubitState2::basis(0), &QubitState2::basis(0));
        let mut e = CMatrix4::zeros();
        e[(0, 0)] = C64::new(1.0, 0.0);
        assert_eq!(*p.matrix(), e);

        let p = tensor(
            &QubitState2::maximally_mixed(),
            &QubitState2::maximally_mixed(),
        );
        assert_eq!(*p.matrix(), CMatrix4::identity() * C64::new(0.25, 0.0));
    }

    #[test]
    fn partial_trace_examples() {
        let mixed = tensor(
            &QubitState2::maximally_mixed(),
            &QubitState2::maximally_mixed(),
        );
        assert_eq!(partial_trace_b(&mixed), QubitState2::maximally_mixed());
        let plus = PairState4::uniform_superposition();
        assert_eq!(partial_trace_b(&plus), QubitState2::plus());
    }

    #[test]
    fn bell_state_partial_transpose() {
        let mut m = CMatrix4::zeros();
        for &(i, j) in &[(0, 0), (0, 3), (3, 0), (3, 3)] {
            m[(i, j)] = C64::new(0.5, 0.0);
        }
        let pt = partial_transpose_b(&m);
        let spec = hermitian_eigen(&pt).unwrap();
        assert!((spec.eigenvalues[3] + 0.5).abs() < 1e-14);
        assert_eq!(partial_transpose_b(&pt), m);
    }

    #[test]
    fn invalid_states_rejected() {
        let mut m = all_quarter();
        m[(0, 0)] = C64::new(0.5, 0.0);
        assert!(PairState4::new(m).is_err());
        let mut m = all_quarter();
        m[(0, 1)] = C64::new(0.25, 0.1);
        assert!(PairState4::new(m).is_err());
        // trace one, Hermitian, but indefinite
        let m = CMatrix4::from_diagonal(&nalgebra::Vector4::new(
            C64::new(1.5, 0.0),
            C64::new(-0.5, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ));
        assert!(PairState4::new(m).is_err());
        assert!(QubitState2::new(CMatrix2::identity()).is_err());
    }

    #[test]
    fn csv_block_round_trip() {
        let p = PairState4::uniform_superposition();
        let text = p.to_csv_block();
        assert_eq!(text.lines().count(), 4);
        let back = PairState4::from_csv_block(&text).unwrap();
        assert!(max_dev(back.matrix(), p.matrix()) == 0.0);
        assert!(matches!(
            PairState4::from_csv_block("1,2\n"),
            Err(Error::Parse(_))
        ));
    }
}
