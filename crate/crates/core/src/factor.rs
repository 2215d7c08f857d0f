//! The `γ` prefactor of both transformation branches and the constant `K`
//! shared by every member of a family.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sign `±1`, used for the `τ` prefactor and the `±` root of `γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Sign of a nonzero real; `+` for `+0.0`.
    pub fn of(x: f64) -> Sign {
        if x.is_sign_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl From<Sign> for i64 {
    fn from(s: Sign) -> i64 {
        s.as_i64()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i64())
    }
}

fn require_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {x}")))
    }
}

/// Even root `sign / sqrt(1 − k·v²)`, defined only for `k·v² < 1`.
pub fn gamma_symmetric(k: f64, v: f64, sign: Sign) -> Result<f64> {
    require_finite("k", k)?;
    require_finite("v", v)?;
    let gap = (-k * v).mul_add(v, 1.0);
    if !(gap > 0.0) {
        return Err(Error::Domain(format!(
            "symmetric branch requires k*v^2 < 1 (k = {k}, v = {v})"
        )));
    }
    Ok(sign.value() / gap.sqrt())
}

/// Odd root `sign · (w/|w|) / sqrt(k·w² − 1)`, defined only for `k·w² > 1`.
pub fn gamma_antisymmetric(k: f64, w: f64, sign: Sign) -> Result<f64> {
    require_finite("k", k)?;
    require_finite("w", w)?;
    if w == 0.0 {
        return Err(Error::Domain("antisymmetric branch requires w != 0".into()));
    }
    let gap = (k * w).mul_add(w, -1.0);
    if !(gap > 0.0) {
        return Err(Error::Domain(format!(
            "antisymmetric branch requires k*w^2 > 1 (k = {k}, w = {w})"
        )));
    }
    Ok(sign.value() * w.signum() / gap.sqrt())
}

/// `(γ₊γ₋ − 1) / (v²·γ₊γ₋)`, the constant that every `γ` of one family shares.
pub fn k_constant(gamma_plus: f64, gamma_minus: f64, v: f64) -> Result<f64> {
    let product = gamma_plus * gamma_minus;
    if v == 0.0 {
        return Err(Error::Domain("k_constant requires v != 0".into()));
    }
    if product == 0.0 {
        return Err(Error::Domain("k_constant requires nonzero gammas".into()));
    }
    Ok((product - 1.0) / (v * v * product))
}
