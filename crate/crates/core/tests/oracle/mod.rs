//! Slow, independent reference implementations used only by the tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use gravent::{CMatrix4, C64};

// 15-point Gauss–Kronrod nodes and weights on [-1, 1], plus the embedded
// 7-point Gauss weights (nodes XGK[1], XGK[3], XGK[5], XGK[7]).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// (Kronrod estimate, |Kronrod − Gauss|) on [a, b].
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<f64, String> {
    let (k, err) = gk15(f, a, b);
    if err <= tol || (err <= 1e-15 * k.abs()) {
        return Ok(k);
    }
    if depth == 0 {
        return Err(format!(
            "quadrature did not converge on [{a}, {b}] (err {err:e})"
        ));
    }
    let m = 0.5 * (a + b);
    Ok(adaptive(f, a, m, 0.5 * tol, depth - 1)? + adaptive(f, m, b, 0.5 * tol, depth - 1)?)
}

/// ∫_a^b f by adaptive Gauss–Kronrod to `tol` absolute.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64, String> {
    adaptive(&f, a, b, tol, 40)
}

/// I(R) = ∫ d³K e^{iK·R} e^{−σ²K²/2} / ((2π)³ K²)
///      = (1/(2π² R)) ∫₀^∞ sin(KR)/K · e^{−σ²K²/2} dK,
/// integrated half-period by half-period up to where the Gaussian is below
/// e^{−60}.
pub fn kernel_by_quadrature(r: f64, sigma: f64) -> Result<f64, String> {
    if !(r > 0.0 && sigma > 0.0) {
        return Err(format!("need R > 0 and sigma > 0 (got {r}, {sigma})"));
    }
    let k_max = (120.0f64).sqrt() / sigma;
    let f = |k: f64| {
        if k == 0.0 {
            r
        } else {
            (k * r).sin() / k * (-0.5 * sigma * sigma * k * k).exp()
        }
    };
    let step = PI / r;
    let pieces = (k_max / step).ceil() as usize;
    let mut total = 0.0;
    let mut a = 0.0;
    // per-piece tolerance chosen so the sum stays well inside 1e-8 absolute
    // on I(R), i.e. 2π² R · 1e-8 on the bare integral
    let budget = 2.0 * PI * PI * r * 1e-9;
    let tol = budget / pieces.max(1) as f64;
    for _ in 0..pieces {
        let b = (a + step).min(k_max);
        total += integrate(f, a, b, tol)?;
        a = b;
        if a >= k_max {
            break;
        }
    }
    Ok(total / (2.0 * PI * PI * r))
}

/// ψ_ab = e^{+iφ_ab}/2 with φ_ab = g_c τ / (ħ |x_a − x'_b|), positions
/// {0, Δx} and {d, d + Δx}, and ρ = |ψ⟩⟨ψ| in the order LL, LR, RL, RR.
pub fn statevector_evolution(d: f64, dx: f64, coupling: f64, tau: f64, hbar: f64) -> CMatrix4 {
    let xa = [0.0, dx];
    let xb = [d, d + dx];
    let mut psi = [C64::new(0.0, 0.0); 4];
    for a in 0..2 {
        for b in 0..2 {
            let phi = coupling * tau / (hbar * (xa[a] - xb[b]).abs());
            psi[2 * a + b] = C64::from_polar(0.5, phi);
        }
    }
    CMatrix4::from_fn(|i, j| psi[i] * psi[j].conj())
}

/// Characteristic polynomial coefficients c[0..=4] (c[4] = 1) by
/// Faddeev–LeVerrier; real parts only, the input being Hermitian.
pub fn charpoly(m: &CMatrix4) -> [f64; 5] {
    let n = 4;
    let mut c = [0.0; 5];
    c[n] = 1.0;
    let id = CMatrix4::identity();
    let mut mk = CMatrix4::zeros();
    for k in 1..=n {
        mk = m * mk + id * C64::new(c[n - k + 1], 0.0);
        let amk = m * mk;
        c[n - k] = -amk.trace().re / k as f64;
    }
    c
}

fn eval(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(p: &[f64]) -> Vec<f64> {
    (1..p.len()).map(|k| p[k] * k as f64).collect()
}

/// All roots of a real-rooted polynomial (coefficients low to high),
/// ascending and with multiplicity. Roots of p' interlace those of p, so
/// each gap between consecutive critical points holds exactly one root.
fn real_roots(p: &[f64], bound: f64) -> Result<Vec<f64>, String> {
    let n = p.len() - 1;
    if n == 1 {
        return Ok(vec![-p[0] / p[1]]);
    }
    let crit = real_roots(&derivative(p), bound)?;
    let mut edges = vec![-bound];
    edges.extend(crit);
    edges.push(bound);
    let mut out = Vec::with_capacity(n);
    for w in edges.windows(2) {
        let (mut a, mut b) = (w[0], w[1].max(w[0]));
        let (mut fa, fb) = (eval(p, a), eval(p, b));
        if fa == 0.0 {
            out.push(a);
            continue;
        }
        if fb == 0.0 {
            out.push(b);
            continue;
        }
        if fa.signum() == fb.signum() {
            // touching root at a critical point
            out.push(if fa.abs() <= fb.abs() { a } else { b });
            continue;
        }
        let mut iters = 0;
        while b - a > 1e-15 * bound {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            let fm = eval(p, mid);
            if fm == 0.0 {
                a = mid;
                b = mid;
                break;
            }
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
            iters += 1;
            if iters > 400 {
                return Err("bisection did not converge".into());
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

/// Eigenvalues of a 4×4 Hermitian matrix, descending, from the roots of
/// its characteristic polynomial.
pub fn eigs_by_charpoly(m: &CMatrix4) -> Result<[f64; 4], String> {
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok([0.0; 4]);
    }
    let unit = m / C64::new(scale, 0.0);
    let p = charpoly(&unit);
    // eigenvalues of the scaled matrix lie in [−4, 4]
    let roots = real_roots(&p, 4.5)?;
    let mut out = [0.0; 4];
    for (k, r) in roots.iter().rev().enumerate() {
        out[k] = r * scale;
    }
    Ok(out)
}
