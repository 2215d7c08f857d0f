//! JSON schema for scenarios.
//!
//! ```json
//! {
//!   "name": "fig4",
//!   "transform": { "branch": "l", "tau": -1, "k": 1, "vel": 2 },
//!   "worldlines": [
//!     { "anchor": [0, 0], "direction": [2, 1], "kind": "particle", "label": "p" }
//!   ],
//!   "window": { "min": [-3, -3], "max": [3, 3] },
//!   "events": [ { "at": [2, 1], "label": "Y" } ]
//! }
//! ```
//!
//! Unknown keys are rejected. `vel` may be the string `"infinity"` only for
//! the `lambda` branch with `k < 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::Sign;
use crate::scenario::{Event, Scenario, Window};
use crate::transform::{BranchKind, Transform, Velocity};
use crate::worldline::{Worldline, WorldlineKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BranchName {
    #[serde(rename = "lambda")]
    Lambda,
    #[serde(rename = "l")]
    L,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InfinityWord {
    #[serde(rename = "infinity")]
    Infinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VelSpec {
    Number(f64),
    Word(InfinityWord),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformSpec {
    pub branch: BranchName,
    pub tau: i64,
    pub k: f64,
    pub vel: VelSpec,
}

impl TransformSpec {
    pub fn build(&self) -> Result<Transform> {
        let tau = Sign::try_from(self.tau)?;
        match (self.branch, self.vel) {
            (BranchName::Lambda, VelSpec::Number(v)) => Transform::lambda(tau, self.k, v),
            (BranchName::Lambda, VelSpec::Word(_)) => Transform::lambda_infinite_limit(tau, self.k),
            (BranchName::L, VelSpec::Number(w)) => Transform::l(tau, self.k, w),
            (BranchName::L, VelSpec::Word(_)) => Err(Error::Domain(
                "vel = \"infinity\" is only valid for the lambda branch".into(),
            )),
        }
    }

    pub fn from_transform(t: &Transform) -> Result<TransformSpec> {
        let params = t.params().ok_or(Error::NotSerializable)?;
        let branch = match t.branch() {
            BranchKind::SymmetricLambda => BranchName::Lambda,
            BranchKind::AntisymmetricL => BranchName::L,
            BranchKind::Derived => return Err(Error::NotSerializable),
        };
        let vel = match params.vel {
            Velocity::Finite(v) => VelSpec::Number(v),
            Velocity::AtInfinity => VelSpec::Word(InfinityWord::Infinity),
        };
        Ok(TransformSpec {
            branch,
            tau: params.tau.as_i64(),
            k: params.k,
            vel,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorldlineSpec {
    pub anchor: [f64; 2],
    pub direction: [f64; 2],
    pub kind: WorldlineKind,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowSpec {
    pub min: [f64; 2],
    pub max: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventSpec {
    pub at: [f64; 2],
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub name: String,
    pub transform: TransformSpec,
    pub worldlines: Vec<WorldlineSpec>,
    pub window: WindowSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub events: Vec<EventSpec>,
}

impl ScenarioFile {
    pub fn from_json(text: &str) -> Result<ScenarioFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario file serializes")
    }

    pub fn to_scenario(&self) -> Result<Scenario> {
        let worldlines = self
            .worldlines
            .iter()
            .map(|w| Worldline::new(w.anchor.into(), w.direction.into(), w.label.clone(), w.kind))
            .collect::<Result<Vec<_>>>()?;
        let window = Window::new(self.window.min.into(), self.window.max.into())?;
        let events = self
            .events
            .iter()
            .map(|e| Event::new(e.at.into(), e.label.clone()))
            .collect();
        Scenario::new(
            self.name.clone(),
            worldlines,
            self.transform.build()?,
            window,
            events,
        )
    }

    pub fn from_scenario(s: &Scenario) -> Result<ScenarioFile> {
        Ok(ScenarioFile {
            name: s.name().to_owned(),
            transform: TransformSpec::from_transform(s.transform())?,
            worldlines: s
                .worldlines()
                .iter()
                .map(|w| WorldlineSpec {
                    anchor: w.anchor().into(),
                    direction: w.direction().into(),
                    kind: w.kind(),
                    label: w.label().to_owned(),
                })
                .collect(),
            window: WindowSpec {
                min: s.window().min.into(),
                max: s.window().max.into(),
            },
            events: s
                .events()
                .iter()
                .map(|e| EventSpec {
                    at: e.at.into(),
                    label: e.label.clone(),
                })
                .collect(),
        })
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario> {
        ScenarioFile::from_json(text)?.to_scenario()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(ScenarioFile::from_scenario(self)?.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{build_fig2_scenario, build_fig4_scenario};

    const FIG4_JSON: &str = r#"{
        "name": "fig4",
        "transform": { "branch": "l", "tau": -1, "k": 1, "vel": 2 },
        "worldlines": [
            { "anchor": [0, 0], "direction": [1, 1], "kind": "lightray", "label": "light ray" },
            { "anchor": [0, 0], "direction": [2, 1], "kind": "particle", "label": "particle X-Y" }
        ],
        "window": { "min": [-3, -3], "max": [3, 3] },
        "events": [ { "at": [0, 0], "label": "X" }, { "at": [2, 1], "label": "Y" } ]
    }"#;

    #[test]
    fn parses_fig4() {
        assert_eq!(
            Scenario::from_json(FIG4_JSON).unwrap(),
            build_fig4_scenario()
        );
    }

    #[test]
    fn round_trip_builtin() {
        let s = build_fig2_scenario();
        assert_eq!(Scenario::from_json(&s.to_json().unwrap()).unwrap(), s);
    }

    #[test]
    fn unknown_keys_rejected() {
        let bad = FIG4_JSON.replace("\"name\"", "\"colour\": 1, \"name\"");
        assert!(matches!(Scenario::from_json(&bad), Err(Error::Json(_))));
        let bad = FIG4_JSON.replace("\"tau\": -1", "\"tau\": -1, \"sign\": 1");
        assert!(matches!(Scenario::from_json(&bad), Err(Error::Json(_))));
    }

    #[test]
    fn infinity_only_for_negative_k_lambda() {
        let ok = TransformSpec {
            branch: BranchName::Lambda,
            tau: 1,
            k: -1.0,
            vel: VelSpec::Word(InfinityWord::Infinity),
        };
        let t = ok.build().unwrap();
        assert_eq!(TransformSpec::from_transform(&t).unwrap(), ok);
        assert!(TransformSpec { k: 1.0, ..ok }.build().is_err());
        assert!(TransformSpec {
            branch: BranchName::L,
            ..ok
        }
        .build()
        .is_err());

        let json = r#"{"branch": "lambda", "tau": 1, "k": -1, "vel": "infinity"}"#;
        let spec: TransformSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec, ok);
        let json = r#"{"branch": "lambda", "tau": 1, "k": -1, "vel": "fast"}"#;
        assert!(serde_json::from_str::<TransformSpec>(json).is_err());
    }

    #[test]
    fn bad_tau_rejected() {
        let bad = FIG4_JSON.replace("\"tau\": -1", "\"tau\": 2");
        assert!(matches!(
            Scenario::from_json(&bad),
            Err(Error::InvalidSign(2))
        ));
    }

    #[test]
    fn derived_transform_not_serializable() {
        let s = Scenario::new(
            "d",
            vec![],
            crate::Transform::IDENTITY,
            Window::centered(1.0).unwrap(),
            vec![],
        )
        .unwrap();
        assert!(matches!(s.to_json(), Err(Error::NotSerializable)));
    }
}
