//! Interval quadratic forms and how they change under a coordinate map.

use crate::error::{Error, Result};
use crate::matrix::Mat2;
use crate::transform::Transform;
use crate::vector::TwoVector;

/// Symmetric, non-degenerate 2×2 matrix defining `Δs² = dᵀ·g·d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metric {
    g: Mat2,
}

impl Metric {
    /// `diag(1, −1)`: the form in rod-and-clock coordinates `(ct, x)`.
    pub const STANDARD: Metric = Metric {
        g: Mat2::diag(1.0, -1.0),
    };

    /// `diag(−1, 1)`: the form `L(−1, 1, W)` carries the standard one to.
    pub const SWAPPED: Metric = Metric {
        g: Mat2::diag(-1.0, 1.0),
    };

    pub fn new(g: Mat2) -> Result<Metric> {
        if !g.is_finite() {
            return Err(Error::InvalidMetric("non-finite entry".into()));
        }
        let scale = g.max_abs_entry();
        if (g.get(0, 1) - g.get(1, 0)).abs() > 1e-12 * scale.max(1.0) {
            return Err(Error::InvalidMetric("matrix is not symmetric".into()));
        }
        if g.det() == 0.0 || g.det().abs() <= 1e-14 * scale * scale {
            return Err(Error::InvalidMetric("matrix is degenerate".into()));
        }
        Ok(Metric { g })
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.g
    }
}

pub fn interval_squared(d: TwoVector, g: &Metric) -> f64 {
    g.g.quadratic_form(d)
}

/// The metric in the target coordinates of `t`: `(M⁻¹)ᵀ·g·M⁻¹`, so that
/// `interval_squared(t.apply(d), transform_metric(t, g)) == interval_squared(d, g)`.
pub fn transform_metric(t: &Transform, g: &Metric) -> Result<Metric> {
    let inv = *t.inverse()?.matrix();
    let raw = inv.transpose() * g.g * inv;
    let off = 0.5 * (raw.get(0, 1) + raw.get(1, 0));
    Metric::new(Mat2::new(raw.get(0, 0), off, off, raw.get(1, 1)))
}
