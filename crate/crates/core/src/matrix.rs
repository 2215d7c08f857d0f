//! Fixed 2×2 real matrices.

use std::ops::{Mul, Neg};

use crate::vector::TwoVector;

/// Row-major 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[f64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1.0, 0.0], [0.0, 1.0]]);

    /// Exchanges the first and second coordinates.
    pub const SWAP: Mat2 = Mat2([[0.0, 1.0], [1.0, 0.0]]);

    /// Spatial reflection `diag(1, −1)`.
    pub const PARITY: Mat2 = Mat2([[1.0, 0.0], [0.0, -1.0]]);

    pub const fn new(m00: f64, m01: f64, m10: f64, m11: f64) -> Self {
        Mat2([[m00, m01], [m10, m11]])
    }

    pub const fn diag(d0: f64, d1: f64) -> Self {
        Mat2([[d0, 0.0], [0.0, d1]])
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[row][col]
    }

    pub fn det(&self) -> f64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.0;
        Mat2::new(a, c, b, d)
    }

    pub fn scale(&self, s: f64) -> Self {
        let [[a, b], [c, d]] = self.0;
        Mat2::new(a * s, b * s, c * s, d * s)
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0_f64, |acc, x| acc.max(x.abs()))
    }

    /// Largest elementwise absolute difference.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }

    /// Closed-form inverse, or `None` when the determinant is zero relative to
    /// the entry scale.
    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        let scale = self.max_abs_entry();
        if det == 0.0 || !det.is_finite() || det.abs() <= 1e-14 * scale * scale {
            return None;
        }
        let [[a, b], [c, d]] = self.0;
        let r = 1.0 / det;
        Some(Mat2::new(d * r, -b * r, -c * r, a * r))
    }

    pub fn mul_vec(&self, v: TwoVector) -> TwoVector {
        let [[a, b], [c, d]] = self.0;
        TwoVector::new(a * v.c1 + b * v.c2, c * v.c1 + d * v.c2)
    }

    /// `vᵀ·M·v`.
    pub fn quadratic_form(&self, v: TwoVector) -> f64 {
        let mv = self.mul_vec(v);
        v.c1 * mv.c1 + v.c2 * mv.c2
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = rhs.0;
        Mat2::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }
}

impl Mul<TwoVector> for Mat2 {
    type Output = TwoVector;

    fn mul(self, v: TwoVector) -> TwoVector {
        self.mul_vec(v)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        self.scale(-1.0)
    }
}
