//! Coordinate speed versus interval sign.
//!
//! A displacement can look faster than light in one coordinate system
//! (`|Δc₂/Δc₁| > 1`) while its interval stays positive. Only the interval
//! sign is shared by every coordinate system.

use std::fmt;

use crate::error::{Error, Result};
use crate::metric::{interval_squared, Metric};
use crate::vector::TwoVector;

/// Default absolute tolerance separating lightlike from time/spacelike.
pub const CAUSAL_TOLERANCE: f64 = 1e-12;

/// `|Δc₂/Δc₁|` in units of `c`; `+∞` for `Δc₁ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CoordinateSpeed(f64);

impl CoordinateSpeed {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_superluminal(self) -> bool {
        self.0 > 1.0
    }
}

impl fmt::Display for CoordinateSpeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    Timelike,
    Lightlike,
    Spacelike,
}

impl CausalClass {
    pub fn from_interval(interval_sq: f64, tolerance: f64) -> CausalClass {
        if interval_sq > tolerance {
            CausalClass::Timelike
        } else if interval_sq < -tolerance {
            CausalClass::Spacelike
        } else {
            CausalClass::Lightlike
        }
    }
}

impl fmt::Display for CausalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CausalReport {
    pub coord_speed: CoordinateSpeed,
    pub coord_superluminal: bool,
    pub interval_sq: f64,
    pub causal_class: CausalClass,
}

impl CausalReport {
    /// Spacelike separation; independent of coordinates.
    pub fn geometric_superluminal(&self) -> bool {
        self.causal_class == CausalClass::Spacelike
    }
}

pub fn classify_coordinate(d: TwoVector) -> Result<CoordinateSpeed> {
    if d.is_zero() {
        return Err(Error::DegenerateDisplacement);
    }
    if d.c1 == 0.0 {
        return Ok(CoordinateSpeed(f64::INFINITY));
    }
    Ok(CoordinateSpeed((d.c2 / d.c1).abs()))
}

pub fn classify_geometric(d: TwoVector, g: &Metric) -> Result<CausalReport> {
    classify_geometric_with_tolerance(d, g, CAUSAL_TOLERANCE)
}

pub fn classify_geometric_with_tolerance(
    d: TwoVector,
    g: &Metric,
    tolerance: f64,
) -> Result<CausalReport> {
    let coord_speed = classify_coordinate(d)?;
    let interval_sq = interval_squared(d, g);
    Ok(CausalReport {
        coord_speed,
        coord_superluminal: coord_speed.is_superluminal(),
        interval_sq,
        causal_class: CausalClass::from_interval(interval_sq, tolerance),
    })
}

/// Reads raw `(η₁, η₂)` differences as measured `(cΔt′, Δx′)` with the
/// roles exchanged: `cΔt′ = Δη₂`, `Δx′ = Δη₁`.
pub fn measured_displacement(d_eta: TwoVector) -> TwoVector {
    d_eta.swapped()
}
