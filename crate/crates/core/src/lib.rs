//! Gravitationally mediated entanglement of two spin-1/2 qubits held in
//! spatial superposition.
//!
//! The joint 4×4 density matrix evolves under the forward-scattering term
//! of a graviton-exchange interaction, for a mass-coupled model (Model I)
//! and a magnetically activated model (Model II). Entanglement is measured
//! by the logarithmic negativity.

pub mod config;
pub mod entanglement;
pub mod error;
pub mod evolution;
pub mod geometry;
pub mod spinor;
pub mod state;
pub mod svg;
pub mod sweep;
pub mod units;

pub use error::{Error, Result};

pub type C64 = num_complex::Complex64;
pub type CMatrix2 = nalgebra::Matrix2<C64>;
pub type CMatrix4 = nalgebra::Matrix4<C64>;
