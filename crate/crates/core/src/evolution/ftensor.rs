//! The F-tensor: quadruple spin sum over (r, r', s, s') of kernel-weighted
//! bilinears acting on the single-particle density matrices, folded to 4×4.
//!
//! The spin bilinears alone do not fix the relative sign of the gain and
//! loss terms, so the convention is chosen by [`calibrate_signs`]: every
//! candidate is evaluated on reference layouts and the unique one that
//! reproduces the known coherence rates of the transverse limit is kept.

use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::geometry::{Geometry, Path, PathPair};
use crate::spinor::{bilinear_sigma3, Spin};
use crate::state::{fold, unfold, PairState4, QubitState2};
use crate::{CMatrix4, C64};

/// How the bilinears ū(I⊗σ³)u enter the sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinWeight {
    /// The signed values s³ = ±1.
    Signed,
    /// Only the spin-diagonal selector |ū(I⊗σ³)u| = δ.
    Magnitude,
}

/// F = Σ K(R_sr) w w [gain · (δ_ri δ_sk ρ^A_r'j ρ^B_s'l) + loss · (δ_jr' δ_ls' ρ^A_ir ρ^B_ks)].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignConvention {
    pub weight: SpinWeight,
    pub gain: f64,
    pub loss: f64,
}

impl SignConvention {
    /// The bracket exactly as written, gain minus loss with signed weights.
    pub const AS_WRITTEN: SignConvention = SignConvention {
        weight: SpinWeight::Signed,
        gain: 1.0,
        loss: -1.0,
    };

    pub fn candidates() -> Vec<SignConvention> {
        let mut out = Vec::with_capacity(8);
        for weight in [SpinWeight::Signed, SpinWeight::Magnitude] {
            for gain in [1.0, -1.0] {
                for loss in [1.0, -1.0] {
                    out.push(SignConvention { weight, gain, loss });
                }
            }
        }
        out
    }

    fn weight(&self, rprime: Spin, r: Spin) -> f64 {
        let b = bilinear_sigma3(rprime, r);
        match self.weight {
            SpinWeight::Signed => b,
            SpinWeight::Magnitude => b.abs(),
        }
    }
}

fn path_of(s: Spin) -> Path {
    Path::from_index(s.index())
}

/// Assemble F(i, j, k, l) and fold it with I = 2i + k, J = 2j + l.
pub fn assemble_f<K: Fn(f64) -> f64>(
    rho_a: &QubitState2,
    rho_b: &QubitState2,
    geometry: &Geometry,
    kernel: K,
    conv: &SignConvention,
) -> CMatrix4 {
    let a = rho_a.matrix();
    let b = rho_b.matrix();
    let mut f = CMatrix4::zeros();
    for big_i in 0..4 {
        let (i, k) = unfold(big_i);
        for big_j in 0..4 {
            let (j, l) = unfold(big_j);
            let mut acc = C64::new(0.0, 0.0);
            for r in Spin::BOTH {
                for rp in Spin::BOTH {
                    for s in Spin::BOTH {
                        for sp in Spin::BOTH {
                            let w = conv.weight(sp, s) * conv.weight(rp, r);
                            if w == 0.0 {
                                continue;
                            }
                            let sep = geometry.separation(PathPair::new(path_of(r), path_of(s)));
                            let kr = kernel(sep);
                            let (ri, si, rpi, spi) = (r.index(), s.index(), rp.index(), sp.index());
                            if ri == i && si == k {
                                acc += a[(rpi, j)] * b[(spi, l)] * (conv.gain * w * kr);
                            }
                            if j == rpi && l == spi {
                                acc += a[(i, ri)] * b[(k, si)] * (conv.loss * w * kr);
                            }
                        }
                    }
                }
            }
            f[(fold(i, k), fold(j, l))] = acc;
        }
    }
    f
}

/// Coherence rates λ_IJ/(g_c/ħ) listed for the transverse limit with the
/// 1/R kernel, in terms of d and Δx. Upper triangle, zero elsewhere.
pub fn reference_rates(d: f64, dx: f64) -> CMatrix4 {
    let i = C64::new(0.0, 1.0);
    let near = dx / (d * (d + dx));
    let far = dx / (d * (d - dx));
    let cross = 2.0 * dx / (d * d - dx * dx);
    let mut m = CMatrix4::zeros();
    m[(0, 1)] = i * near;
    m[(0, 2)] = -i * far;
    m[(1, 2)] = -i * cross;
    m[(1, 3)] = -i * near;
    m[(2, 3)] = i * far;
    m
}

/// Rates λ_IJ/(g_c/ħ) = −i F_IJ / ρ_IJ on the uniform superposition, where
/// every ρ_IJ equals ¼.
pub fn rates_from_f(f: &CMatrix4) -> CMatrix4 {
    let uniform = PairState4::uniform_superposition();
    let rho = uniform.matrix();
    CMatrix4::from_fn(|r, c| C64::new(0.0, -1.0) * f[(r, c)] / rho[(r, c)])
}

const CALIBRATION_LAYOUTS: [(f64, f64); 3] = [(2.0, 1.0), (5.0, 2.0), (3.0, 0.25)];
const CALIBRATION_TOL: f64 = 1e-14;

fn matches_reference(conv: &SignConvention) -> bool {
    let plus = QubitState2::plus();
    CALIBRATION_LAYOUTS.iter().all(|&(d, dx)| {
        let g = Geometry::new(d, dx).expect("calibration layout");
        let f = assemble_f(&plus, &plus, &g, |r| 1.0 / r, conv);
        let rates = rates_from_f(&f);
        let want = reference_rates(d, dx);
        (0..4).all(|r| {
            (0..4).all(|c| {
                let target = if r <= c {
                    want[(r, c)]
                } else {
                    want[(c, r)].conj()
                };
                (rates[(r, c)] - target).norm() <= CALIBRATION_TOL
            })
        })
    })
}

/// Search every convention; exactly one must reproduce the reference rates.
pub fn calibrate_signs() -> Result<SignConvention> {
    let hits: Vec<_> = SignConvention::candidates()
        .into_iter()
        .filter(matches_reference)
        .collect();
    match hits.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::Calibration(
            "no sign convention reproduces the reference rates".into(),
        )),
        many => Err(Error::Calibration(format!(
            "{} conventions reproduce the reference rates",
            many.len()
        ))),
    }
}

/// Calibrated convention, computed once per process.
pub fn calibrated_convention() -> SignConvention {
    static CONV: OnceLock<SignConvention> = OnceLock::new();
    *CONV.get_or_init(|| calibrate_signs().expect("F-tensor sign calibration"))
}

/// Human-readable account of the calibration, for `--explain-signs`.
pub fn explain_signs() -> String {
    let mut out = String::new();
    let _ = writeln!(out, "F-tensor sign calibration");
    let _ = writeln!(
        out,
        "  F(i,j,k,l) = sum_{{r,r',s,s'}} K(R_sr) w(s',s) w(r',r) [gain * d_ri d_sk rhoA_r'j rhoB_s'l + loss * d_jr' d_ls' rhoA_ir rhoB_ks]"
    );
    let _ = writeln!(
        out,
        "  bilinears ubar_r'(I x sigma3) u_r = {:?}",
        crate::spinor::bilinear_table()
    );
    let _ = writeln!(
        out,
        "  target: rates -i F_IJ / rho_IJ on the uniform superposition equal the transverse-limit list"
    );
    let _ = writeln!(
        out,
        "  layouts (d, dx): {CALIBRATION_LAYOUTS:?}, tolerance {CALIBRATION_TOL:e}"
    );
    for conv in SignConvention::candidates() {
        let _ = writeln!(
            out,
            "  weight={:<9} gain={:+} loss={:+} -> {}",
            format!("{:?}", conv.weight),
            conv.gain,
            conv.loss,
            if matches_reference(&conv) {
                "MATCH"
            } else {
                "no"
            }
        );
    }
    match calibrate_signs() {
        Ok(c) => {
            let _ = writeln!(
                out,
                "selected: weight={:?} gain={:+} loss={:+} (written bracket: weight=Signed gain=+1 loss=-1)",
                c.weight, c.gain, c.loss
            );
        }
        Err(e) => {
            let _ = writeln!(out, "calibration failed: {e}");
        }
    }
    out
}
