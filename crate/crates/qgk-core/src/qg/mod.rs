//! Pseudo-spectral two-layer quasi-geostrophic solver and dataset generation.

mod dataset;
mod params;
mod solver;
mod state;

pub use dataset::{generate_dataset, spectral_truncate, Dataset, GenerateSpec};
pub use params::QGParams;
pub use solver::{compute_velocity, forward_pv, invert_pv, random_initial_q, Solver};
pub use state::{QGState, VelocityField};
