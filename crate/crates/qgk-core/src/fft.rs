//! Thin 2D FFT layer over rustfft with reusable plans and scratch buffers.
//!
//! Conventions: forward transforms are unnormalized (`x̂_k = Σ_j x_j e^{-ik·j}`),
//! inverse transforms divide by `nx·ny`. Buffers live behind a `RefCell`, so a
//! `Fft2` is cheap to use from one thread and `Clone` gives an independent
//! workspace for another.

use std::cell::RefCell;
use std::sync::Arc;

use ndarray::{Array2, ArrayView2};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

pub struct Fft2 {
    ny: usize,
    nx: usize,
    fwd_x: Arc<dyn Fft<f64>>,
    inv_x: Arc<dyn Fft<f64>>,
    fwd_y: Arc<dyn Fft<f64>>,
    inv_y: Arc<dyn Fft<f64>>,
    // (ny*nx) work area plus the transposed copy used for the column pass
    work: RefCell<(Vec<Complex64>, Vec<Complex64>)>,
}

impl Clone for Fft2 {
    fn clone(&self) -> Self {
        Fft2::new(self.ny, self.nx)
    }
}

impl std::fmt::Debug for Fft2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Fft2({}x{})", self.ny, self.nx)
    }
}

impl Fft2 {
    pub fn new(ny: usize, nx: usize) -> Self {
        let mut planner = FftPlanner::new();
        Fft2 {
            ny,
            nx,
            fwd_x: planner.plan_fft_forward(nx),
            inv_x: planner.plan_fft_inverse(nx),
            fwd_y: planner.plan_fft_forward(ny),
            inv_y: planner.plan_fft_inverse(ny),
            work: RefCell::new((
                vec![Complex64::default(); ny * nx],
                vec![Complex64::default(); ny * nx],
            )),
        }
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    fn run(&self, buf: &mut [Complex64], forward: bool) {
        let (ny, nx) = (self.ny, self.nx);
        let mut work = self.work.borrow_mut();
        let t = &mut work.1;
        // row pass: rows are contiguous, rustfft handles the whole buffer
        // as ny back-to-back transforms of length nx
        if forward {
            self.fwd_x.process(buf);
        } else {
            self.inv_x.process(buf);
        }
        // column pass via explicit transpose
        for i in 0..ny {
            for j in 0..nx {
                t[j * ny + i] = buf[i * nx + j];
            }
        }
        if forward {
            self.fwd_y.process(t);
        } else {
            self.inv_y.process(t);
        }
        for j in 0..nx {
            for i in 0..ny {
                buf[i * nx + j] = t[j * ny + i];
            }
        }
    }

    /// Unnormalized forward transform of a real field.
    pub fn forward(&self, field: ArrayView2<'_, f64>) -> Array2<Complex64> {
        assert_eq!(field.dim(), (self.ny, self.nx), "field shape");
        let mut buf: Vec<Complex64> = field.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        self.run(&mut buf, true);
        Array2::from_shape_vec((self.ny, self.nx), buf).unwrap()
    }

    /// Inverse transform, normalized by `nx·ny`; imaginary residue is dropped.
    pub fn inverse(&self, spec: ArrayView2<'_, Complex64>) -> Array2<f64> {
        assert_eq!(spec.dim(), (self.ny, self.nx), "spectrum shape");
        let mut buf: Vec<Complex64> = spec.iter().copied().collect();
        self.run(&mut buf, false);
        let scale = 1.0 / (self.ny * self.nx) as f64;
        Array2::from_shape_vec((self.ny, self.nx), buf.iter().map(|c| c.re * scale).collect())
            .unwrap()
    }

    /// Inverse transform keeping the complex result (normalized by `nx·ny`).
    pub fn inverse_complex(&self, spec: ArrayView2<'_, Complex64>) -> Array2<Complex64> {
        assert_eq!(spec.dim(), (self.ny, self.nx), "spectrum shape");
        let mut buf: Vec<Complex64> = spec.iter().copied().collect();
        self.run(&mut buf, false);
        let scale = 1.0 / (self.ny * self.nx) as f64;
        Array2::from_shape_vec(
            (self.ny, self.nx),
            buf.iter().map(|c| c * scale).collect(),
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;
    use std::f64::consts::PI;

    #[test]
    fn round_trip_recovers_field() {
        let (ny, nx) = (16, 32);
        let fft = Fft2::new(ny, nx);
        let field = Array2::from_shape_fn((ny, nx), |(i, j)| {
            ((i * 31 + j * 7) as f64 * 0.61803).sin()
        });
        let back = fft.inverse(fft.forward(field.view()).view());
        for (a, b) in field.iter().zip(back.iter()) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn single_mode_lands_on_expected_coefficient() {
        let (ny, nx) = (8, 8);
        let fft = Fft2::new(ny, nx);
        // cos(2π·2x/nx): coefficients at (0, ±2) with value N/2
        let field = Array2::from_shape_fn((ny, nx), |(_, j)| {
            (2.0 * PI * 2.0 * j as f64 / nx as f64).cos()
        });
        let spec = fft.forward(field.view());
        let n = (ny * nx) as f64;
        assert!((spec[[0, 2]].re - n / 2.0).abs() < 1e-9);
        assert!((spec[[0, nx - 2]].re - n / 2.0).abs() < 1e-9);
        assert!(spec[[1, 3]].norm() < 1e-9);
    }
}
