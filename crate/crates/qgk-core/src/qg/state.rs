//! Prognostic state of the two-layer model.

use ndarray::Array3;
use num_complex::Complex64;

/// Two-layer fields on the periodic grid with their spectral mirrors.
///
/// `q_hat` is the source of truth while stepping; `q` is its inverse
/// transform and `psi`/`psi_hat` are always re-derived from `q_hat` via the
/// Eq-of-state inversion (never mutated independently).
#[derive(Debug, Clone)]
pub struct QGState {
    /// Potential vorticity (s⁻¹), shape (2, ny, nx).
    pub q: Array3<f64>,
    /// Streamfunction (m² s⁻¹), shape (2, ny, nx).
    pub psi: Array3<f64>,
    /// Spectral potential vorticity.
    pub q_hat: Array3<Complex64>,
    /// Spectral streamfunction.
    pub psi_hat: Array3<Complex64>,
    /// Model time (s).
    pub t: f64,
}

impl QGState {
    pub fn ny(&self) -> usize {
        self.q.dim().1
    }

    pub fn nx(&self) -> usize {
        self.q.dim().2
    }
}

/// Horizontal velocity (m s⁻¹) per layer, u = -∂ψ/∂y, v = ∂ψ/∂x.
#[derive(Debug, Clone)]
pub struct VelocityField {
    pub u: Array3<f64>,
    pub v: Array3<f64>,
}
