use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An event or displacement `(c1, c2)` in some 1+1 dimensional coordinate
/// system. Both components carry units of length.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct TwoVector {
    pub c1: f64,
    pub c2: f64,
}

impl TwoVector {
    pub const ZERO: TwoVector = TwoVector { c1: 0.0, c2: 0.0 };

    pub const fn new(c1: f64, c2: f64) -> Self {
        Self { c1, c2 }
    }

    pub fn is_finite(&self) -> bool {
        self.c1.is_finite() && self.c2.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.c1 == 0.0 && self.c2 == 0.0
    }

    /// Euclidean `c1² + c2²`; the natural scale for relative interval errors.
    pub fn norm_squared(&self) -> f64 {
        self.c1 * self.c1 + self.c2 * self.c2
    }

    /// Exchanges the two components.
    pub fn swapped(&self) -> Self {
        Self::new(self.c2, self.c1)
    }

    pub fn max_abs_diff(&self, other: &TwoVector) -> f64 {
        (self.c1 - other.c1).abs().max((self.c2 - other.c2).abs())
    }
}

impl From<[f64; 2]> for TwoVector {
    fn from([c1, c2]: [f64; 2]) -> Self {
        Self::new(c1, c2)
    }
}

impl From<TwoVector> for [f64; 2] {
    fn from(v: TwoVector) -> Self {
        [v.c1, v.c2]
    }
}

impl Add for TwoVector {
    type Output = TwoVector;
    fn add(self, rhs: TwoVector) -> TwoVector {
        TwoVector::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl Sub for TwoVector {
    type Output = TwoVector;
    fn sub(self, rhs: TwoVector) -> TwoVector {
        TwoVector::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl Mul<f64> for TwoVector {
    type Output = TwoVector;
    fn mul(self, s: f64) -> TwoVector {
        TwoVector::new(self.c1 * s, self.c2 * s)
    }
}

impl Neg for TwoVector {
    type Output = TwoVector;
    fn neg(self) -> TwoVector {
        TwoVector::new(-self.c1, -self.c2)
    }
}

impl fmt::Display for TwoVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}
