//! Physical and numerical constants of the two-layer model.

use serde::{Deserialize, Serialize};

use crate::error::{QgkError, Result};

/// All constants of the two-layer system on a doubly periodic square grid.
///
/// The layer-coupling coefficients satisfy `f1 = kd2 / (1 + delta)` and
/// `f2 = delta · f1`; both are recomputed from `kd2` and `delta` by
/// [`QGParams::validate`], which every consumer calls on construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QGParams {
    /// Grid points along x (power of two).
    pub nx: usize,
    /// Grid points along y (power of two).
    pub ny: usize,
    /// Domain side length (m).
    pub l: f64,
    /// Solver time step (s).
    pub dt: f64,
    /// Planetary vorticity gradient (m⁻¹ s⁻¹).
    pub beta: f64,
    /// Linear bottom drag on the lower layer (s⁻¹).
    pub r_ek: f64,
    /// Background zonal flow, upper layer (m s⁻¹).
    pub u1: f64,
    /// Background zonal flow, lower layer (m s⁻¹).
    pub u2: f64,
    /// Layer depths (m).
    pub h1: f64,
    pub h2: f64,
    /// Depth ratio h1/h2.
    pub delta: f64,
    /// Squared deformation wavenumber (m⁻²).
    pub kd2: f64,
    /// Upper-layer coupling kd2/(1+delta) (m⁻²); derived.
    #[serde(skip)]
    pub f1: f64,
    /// Lower-layer coupling delta·f1 (m⁻²); derived.
    #[serde(skip)]
    pub f2: f64,
    /// Fraction of the Nyquist wavenumber above which the small-scale
    /// filter acts.
    pub ssd_cutoff_frac: f64,
    /// Filter amplitude constant.
    pub ssd_strength: f64,
    /// Filter exponent.
    pub ssd_order: f64,
}

impl Default for QGParams {
    /// Standard eddying benchmark configuration: 15 km deformation radius,
    /// δ = 0.25, β = 1.5e-11, r_ek = 5.787e-7, U1 = 0.025 m/s, Δt = 3600 s.
    fn default() -> Self {
        let rd: f64 = 15_000.0;
        QGParams {
            nx: 64,
            ny: 64,
            l: 1.0e6,
            dt: 3600.0,
            beta: 1.5e-11,
            r_ek: 5.787e-7,
            u1: 0.025,
            u2: 0.0,
            h1: 500.0,
            h2: 2000.0,
            delta: 0.25,
            kd2: rd.powi(-2),
            f1: 0.0,
            f2: 0.0,
            ssd_cutoff_frac: 0.65,
            ssd_strength: 23.6,
            ssd_order: 4.0,
        }
        .validate()
        .expect("default parameters are valid")
    }
}

impl QGParams {
    /// Default parameters on an `n × n` grid.
    pub fn with_grid(n: usize) -> Result<Self> {
        QGParams {
            nx: n,
            ny: n,
            ..QGParams::default()
        }
        .validate()
    }

    /// Check invariants and derive the coupling coefficients.
    pub fn validate(mut self) -> Result<Self> {
        if !self.nx.is_power_of_two() || !self.ny.is_power_of_two() {
            return Err(QgkError::InvalidArgument(format!(
                "grid must be a power of two, got {}x{}",
                self.ny, self.nx
            )));
        }
        if !(self.dt > 0.0) {
            return Err(QgkError::InvalidArgument(format!(
                "dt must be positive, got {}",
                self.dt
            )));
        }
        if self.r_ek < 0.0 {
            return Err(QgkError::InvalidArgument(format!(
                "r_ek must be nonnegative, got {}",
                self.r_ek
            )));
        }
        if !(self.l > 0.0) {
            return Err(QgkError::InvalidArgument("domain size must be positive".into()));
        }
        if self.kd2 < 0.0 || self.delta <= 0.0 {
            return Err(QgkError::InvalidArgument(
                "kd2 must be nonnegative and delta positive".into(),
            ));
        }
        if self.h1 <= 0.0 || self.h2 <= 0.0 {
            return Err(QgkError::InvalidArgument("layer depths must be positive".into()));
        }
        self.f1 = self.kd2 / (1.0 + self.delta);
        self.f2 = self.delta * self.f1;
        Ok(self)
    }

    /// Mean potential-vorticity gradient from the imposed shear, by layer
    /// (the planetary β is accounted for separately).
    pub fn shear_pv_gradient(&self) -> [f64; 2] {
        let du = self.u1 - self.u2;
        [self.f1 * du, -self.f2 * du]
    }

    /// Depth weights h_m / (h1 + h2).
    pub fn depth_weights(&self) -> [f64; 2] {
        let h = self.h1 + self.h2;
        [self.h1 / h, self.h2 / h]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coupling_coefficients_are_derived_exactly() {
        let p = QGParams::default();
        assert_eq!(p.f1, p.kd2 / (1.0 + p.delta));
        assert_eq!(p.f2, p.delta * p.f1);
    }

    #[test]
    fn default_matches_benchmark_values() {
        let p = QGParams::default();
        assert_eq!(p.beta, 1.5e-11);
        assert_eq!(p.r_ek, 5.787e-7);
        assert_eq!(p.u1, 0.025);
        assert_eq!(p.u2, 0.0);
        assert_eq!(p.dt, 3600.0);
    }

    #[test]
    fn rejects_non_power_of_two_grid() {
        let p = QGParams {
            nx: 48,
            ..QGParams::default()
        };
        assert!(p.validate().is_err());
    }

    #[test]
    fn rejects_negative_drag_and_zero_dt() {
        assert!(QGParams {
            r_ek: -1.0,
            ..QGParams::default()
        }
        .validate()
        .is_err());
        assert!(QGParams {
            dt: 0.0,
            ..QGParams::default()
        }
        .validate()
        .is_err());
    }
}
