//! Spectral grid bookkeeping: wavenumbers, dealiasing mask, isotropic bins.

use ndarray::{Array1, Array2};

/// Signed frequency index in FFT ordering (0, 1, ..., n/2-1, -n/2, ..., -1).
pub fn freq_index(i: usize, n: usize) -> i64 {
    if i < n.div_ceil(2) {
        i as i64
    } else {
        i as i64 - n as i64
    }
}

#[derive(Debug, Clone)]
pub struct SpectralGrid {
    pub ny: usize,
    pub nx: usize,
    /// Square domain side length (m).
    pub l: f64,
    /// Wavenumber along x per column (rad/m).
    pub kx: Array1<f64>,
    /// Wavenumber along y per row (rad/m).
    pub ky: Array1<f64>,
    /// |k|² per mode.
    pub k2: Array2<f64>,
    /// 2/3-rule mask: 1 for retained modes, 0 above the cutoff.
    pub dealias: Array2<f64>,
    /// Per-axis Nyquist wavenumber (n/2 · 2π/L), x axis.
    pub k_nyquist: f64,
}

impl SpectralGrid {
    pub fn new(ny: usize, nx: usize, l: f64) -> Self {
        let dk = 2.0 * std::f64::consts::PI / l;
        let kx = Array1::from_shape_fn(nx, |j| freq_index(j, nx) as f64 * dk);
        let ky = Array1::from_shape_fn(ny, |i| freq_index(i, ny) as f64 * dk);
        let k2 = Array2::from_shape_fn((ny, nx), |(i, j)| kx[j] * kx[j] + ky[i] * ky[i]);
        // 2/3 rule, inclusive on the retained side
        let cut_x = (2.0 / 3.0) * (nx as f64 / 2.0) * dk;
        let cut_y = (2.0 / 3.0) * (ny as f64 / 2.0) * dk;
        let eps = 1e-9 * dk;
        let dealias = Array2::from_shape_fn((ny, nx), |(i, j)| {
            if kx[j].abs() <= cut_x + eps && ky[i].abs() <= cut_y + eps {
                1.0
            } else {
                0.0
            }
        });
        SpectralGrid {
            ny,
            nx,
            l,
            kx,
            ky,
            k2,
            dealias,
            k_nyquist: (nx as f64 / 2.0) * dk,
        }
    }

    /// Fundamental wavenumber 2π/L.
    pub fn dk(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.l
    }

    /// Isotropic bin index of mode (i, j): round(|k| / dk).
    pub fn bin_of(&self, i: usize, j: usize) -> usize {
        (self.k2[[i, j]].sqrt() / self.dk()).round() as usize
    }

    /// Number of isotropic bins (0 ..= ceil(√2·n/2)).
    pub fn n_bins(&self) -> usize {
        let corner = ((self.nx as f64 / 2.0).powi(2) + (self.ny as f64 / 2.0).powi(2)).sqrt();
        corner.ceil() as usize + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn freq_indices_follow_fft_ordering() {
        let n = 8;
        let idx: Vec<i64> = (0..n).map(|i| freq_index(i, n)).collect();
        assert_eq!(idx, vec![0, 1, 2, 3, -4, -3, -2, -1]);
        let idx9: Vec<i64> = (0..9).map(|i| freq_index(i, 9)).collect();
        assert_eq!(idx9, vec![0, 1, 2, 3, 4, -4, -3, -2, -1]);
    }

    #[test]
    fn dealias_mask_keeps_two_thirds() {
        let g = SpectralGrid::new(12, 12, 1.0);
        // cutoff index = 2/3 · 6 = 4
        assert_eq!(g.dealias[[0, 4]], 1.0);
        assert_eq!(g.dealias[[0, 5]], 0.0);
        assert_eq!(g.dealias[[5, 0]], 0.0);
        assert_eq!(g.dealias[[4, 4]], 1.0);
    }

    #[test]
    fn zero_mode_bin_and_nyquist() {
        let g = SpectralGrid::new(16, 16, 2.0 * std::f64::consts::PI);
        assert_eq!(g.bin_of(0, 0), 0);
        assert_eq!(g.bin_of(0, 1), 1);
        assert!((g.k_nyquist - 8.0).abs() < 1e-12);
    }
}
