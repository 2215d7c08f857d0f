//! Straight worldlines and light rays.

use serde::{Deserialize, Serialize};

use crate::causal::{classify_coordinate, CoordinateSpeed};
use crate::error::{Error, Result};
use crate::factor::Sign;
use crate::transform::Transform;
use crate::vector::TwoVector;
use crate::ENTRY_TOLERANCE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WorldlineKind {
    Particle,
    #[serde(rename = "lightray")]
    LightRay,
}

/// The infinite line `anchor + s·direction`.
#[derive(Debug, Clone, PartialEq)]
pub struct Worldline {
    anchor: TwoVector,
    direction: TwoVector,
    label: String,
    kind: WorldlineKind,
}

fn light_cone_residual(d: TwoVector) -> f64 {
    (d.c1.abs() - d.c2.abs()).abs()
}

impl Worldline {
    pub fn new(
        anchor: TwoVector,
        direction: TwoVector,
        label: impl Into<String>,
        kind: WorldlineKind,
    ) -> Result<Worldline> {
        let label = label.into();
        if !anchor.is_finite() || !direction.is_finite() {
            return Err(Error::InvalidWorldline(format!(
                "`{label}` has non-finite coordinates"
            )));
        }
        if direction.is_zero() {
            return Err(Error::InvalidWorldline(format!(
                "`{label}` has zero direction"
            )));
        }
        if kind == WorldlineKind::LightRay {
            let scale = direction.c1.abs().max(direction.c2.abs());
            if light_cone_residual(direction) > ENTRY_TOLERANCE * scale {
                return Err(Error::InvalidWorldline(format!(
                    "light ray `{label}` requires |c1| = |c2|, got {direction}"
                )));
            }
        }
        Ok(Worldline {
            anchor,
            direction,
            label,
            kind,
        })
    }

    /// A particle through `anchor` with coordinate velocity `v = Δc₂/Δc₁`.
    pub fn particle(anchor: TwoVector, v: f64, label: impl Into<String>) -> Result<Worldline> {
        Worldline::new(
            anchor,
            TwoVector::new(1.0, v),
            label,
            WorldlineKind::Particle,
        )
    }

    /// A light ray through `anchor` moving towards `+c₂` or `−c₂`.
    pub fn light_ray(anchor: TwoVector, heading: Sign, label: impl Into<String>) -> Worldline {
        Worldline {
            anchor,
            direction: TwoVector::new(1.0, heading.value()),
            label: label.into(),
            kind: WorldlineKind::LightRay,
        }
    }

    pub fn anchor(&self) -> TwoVector {
        self.anchor
    }

    pub fn direction(&self) -> TwoVector {
        self.direction
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> WorldlineKind {
        self.kind
    }

    pub fn point_at(&self, s: f64) -> TwoVector {
        self.anchor + self.direction * s
    }
}

/// Maps anchor and direction through `t`. Light rays must stay on the cone.
pub fn transform_worldline(t: &Transform, w: &Worldline) -> Result<Worldline> {
    let anchor = t.apply(w.anchor);
    let direction = t.apply(w.direction);
    if w.kind == WorldlineKind::LightRay {
        let scale = direction.c1.abs().max(direction.c2.abs()).max(1.0);
        let residual = light_cone_residual(direction);
        if residual > ENTRY_TOLERANCE * scale {
            return Err(Error::LightRayViolation {
                label: w.label.clone(),
                residual,
            });
        }
    }
    Ok(Worldline {
        anchor,
        direction,
        label: w.label.clone(),
        kind: w.kind,
    })
}

pub fn coordinate_velocity(w: &Worldline) -> CoordinateSpeed {
    classify_coordinate(w.direction).expect("worldline direction is nonzero")
}

/// The path `x = W·ct` of the spatial origin `η₂ = 0` of the coordinates
/// produced by `L(−1, 1, W)`.
pub fn rest_point_worldline(w: f64) -> Result<Worldline> {
    if !w.is_finite() || !(w * w > 1.0) {
        return Err(Error::Domain(format!(
            "rest-point worldline requires w^2 > 1, got w = {w}"
        )));
    }
    let line = Worldline::particle(TwoVector::ZERO, w, format!("eta2 = 0 (W = {w})"))?;
    debug_assert!({
        let l = Transform::l(Sign::Minus, 1.0, w)?;
        l.apply(line.direction).c2.abs() <= ENTRY_TOLERANCE
    });
    Ok(line)
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: f64 = 1.732_050_807_568_877_3;

    fn l2() -> Transform {
        Transform::l(Sign::Minus, 1.0, 2.0).unwrap()
    }

    #[test]
    fn light_ray_stays_on_cone() {
        let ray = Worldline::light_ray(TwoVector::ZERO, Sign::Plus, "ray");
        let out = transform_worldline(&l2(), &ray).unwrap();
        assert_eq!(out.kind(), WorldlineKind::LightRay);
        let d = out.direction();
        assert!(d.max_abs_diff(&TwoVector::new(1.0 / S3, 1.0 / S3)) < 1e-15);
    }

    #[test]
    fn identity_keeps_particle() {
        let p = Worldline::new(
            TwoVector::ZERO,
            TwoVector::new(1.0, 0.0),
            "rest",
            WorldlineKind::Particle,
        )
        .unwrap();
        assert_eq!(transform_worldline(&Transform::IDENTITY, &p).unwrap(), p);
    }

    #[test]
    fn particle_becomes_vertical_in_raw_eta() {
        let p = Worldline::new(
            TwoVector::ZERO,
            TwoVector::new(2.0, 1.0),
            "p",
            WorldlineKind::Particle,
        )
        .unwrap();
        let d = transform_worldline(&l2(), &p).unwrap().direction();
        assert_eq!(d.c1, 0.0);
        assert!((d.c2 - S3).abs() < 1e-15);
    }

    #[test]
    fn broken_transform_trips_light_ray_check() {
        let skew = Transform::from_matrix(crate::Mat2::new(1.0, 0.0, 0.5, 1.0)).unwrap();
        let ray = Worldline::light_ray(TwoVector::ZERO, Sign::Plus, "ray");
        assert!(matches!(
            transform_worldline(&skew, &ray),
            Err(Error::LightRayViolation { .. })
        ));
    }

    #[test]
    fn coordinate_velocity_examples() {
        let mk = |c1, c2| {
            Worldline::new(
                TwoVector::ZERO,
                TwoVector::new(c1, c2),
                "w",
                WorldlineKind::Particle,
            )
            .unwrap()
        };
        assert_eq!(coordinate_velocity(&mk(1.0, 0.5)).value(), 0.5);
        assert!(coordinate_velocity(&mk(0.0, 1.0)).value().is_infinite());
        assert_eq!(coordinate_velocity(&mk(2.0, 1.0)).value(), 0.5);
    }

    #[test]
    fn worldline_validation() {
        assert!(Worldline::new(
            TwoVector::ZERO,
            TwoVector::ZERO,
            "z",
            WorldlineKind::Particle
        )
        .is_err());
        assert!(Worldline::new(
            TwoVector::ZERO,
            TwoVector::new(1.0, 0.5),
            "r",
            WorldlineKind::LightRay
        )
        .is_err());
        assert!(Worldline::new(
            TwoVector::ZERO,
            TwoVector::new(-2.0, 2.0),
            "r",
            WorldlineKind::LightRay
        )
        .is_ok());
    }

    #[test]
    fn rest_point_examples() {
        let line = rest_point_worldline(2.0).unwrap();
        assert_eq!(line.anchor(), TwoVector::ZERO);
        assert_eq!(line.direction(), TwoVector::new(1.0, 2.0));
        let eta = l2().apply(line.direction());
        assert!((eta.c1 - S3).abs() < 1e-15);
        assert_eq!(eta.c2, 0.0);
        assert_eq!(l2().apply(line.point_at(0.0)), TwoVector::ZERO);

        let line = rest_point_worldline(-2.0).unwrap();
        assert_eq!(line.direction(), TwoVector::new(1.0, -2.0));
        let l = Transform::l(Sign::Minus, 1.0, -2.0).unwrap();
        assert!(l.apply(line.point_at(3.7)).c2.abs() < 1e-12);

        assert!(matches!(rest_point_worldline(1.0), Err(Error::Domain(_))));
        assert!(matches!(rest_point_worldline(0.3), Err(Error::Domain(_))));
    }
}
