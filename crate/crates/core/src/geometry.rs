//! Collinear two-interferometer layout.
//!
//! Particle A sits at {L: 0, R: dx}, particle B at {L: d, R: d + dx}, all on
//! one axis. Spin index 1 selects path L and spin index 2 path R.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    L,
    R,
}

impl Path {
    pub const BOTH: [Path; 2] = [Path::L, Path::R];

    /// 0 for L, 1 for R; the per-qubit basis index.
    pub fn index(self) -> usize {
        match self {
            Path::L => 0,
            Path::R => 1,
        }
    }

    pub fn from_index(i: usize) -> Path {
        if i == 0 {
            Path::L
        } else {
            Path::R
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Path::L => f.write_str("L"),
            Path::R => f.write_str("R"),
        }
    }
}

/// Joint path label: `a` for particle A, `b` for particle B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathPair {
    pub a: Path,
    pub b: Path,
}

impl PathPair {
    pub const fn new(a: Path, b: Path) -> Self {
        Self { a, b }
    }

    /// Folded two-qubit index in the basis {LL, LR, RL, RR}.
    pub fn basis_index(self) -> usize {
        2 * self.a.index() + self.b.index()
    }

    pub fn from_basis_index(i: usize) -> Self {
        Self::new(Path::from_index(i / 2), Path::from_index(i % 2))
    }

    pub fn all() -> [PathPair; 4] {
        [0, 1, 2, 3].map(PathPair::from_basis_index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    d: f64,
    dx: f64,
}

impl Geometry {
    pub fn new(d: f64, dx: f64) -> Result<Self> {
        let g = Self { d, dx };
        validate(&g)?;
        Ok(g)
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn position_a(&self, p: Path) -> f64 {
        match p {
            Path::L => 0.0,
            Path::R => self.dx,
        }
    }

    pub fn position_b(&self, p: Path) -> f64 {
        match p {
            Path::L => self.d,
            Path::R => self.d + self.dx,
        }
    }

    /// |x_a - x'_b| for the given path pair.
    pub fn separation(&self, p: PathPair) -> f64 {
        (self.position_a(p.a) - self.position_b(p.b)).abs()
    }

    pub fn closest_approach(&self) -> f64 {
        self.d - self.dx
    }

    /// Converts every length by the same factor (unit changes).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.d * factor, self.dx * factor)
    }
}

/// `dx = 0` is accepted as the null layout (all four separations equal).
pub fn validate(g: &Geometry) -> Result<()> {
    let ok = g.d.is_finite() && g.dx.is_finite() && g.dx >= 0.0 && g.d > g.dx;
    if ok {
        Ok(())
    } else {
        Err(Error::DegenerateGeometry { d: g.d, dx: g.dx })
    }
}
