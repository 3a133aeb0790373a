//! Forward-scattering dynamics of the two-qubit density matrix.

pub mod coupling;
pub mod ftensor;
pub mod integrate;
pub mod kernel;
pub mod phases;
pub mod rates;

pub use coupling::{coupling_natural, coupling_strength, CouplingModel, ModelKind};
pub use ftensor::{assemble_f, calibrate_signs, explain_signs, SignConvention, SpinWeight};
pub use integrate::{evolve_exact, evolve_rk4, propagate, Route, DEFAULT_STEPS};
pub use kernel::{erf, wavepacket_kernel, Kernel, WavePacketWidths};
pub use phases::{closed_form_state, phase_pair, phase_pair_with_kernel, PhasePair};
pub use rates::{component_weight, rate_matrix, RateMatrix};
