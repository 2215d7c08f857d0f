//! Named diagram scenarios: a set of worldlines, the transform between the
//! two coordinate systems, and the region to draw.

use crate::error::{Error, Result};
use crate::factor::Sign;
use crate::transform::Transform;
use crate::vector::TwoVector;
use crate::worldline::Worldline;

/// Axis-aligned rectangle `min ≤ p ≤ max` (componentwise, inclusive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub min: TwoVector,
    pub max: TwoVector,
}

impl Window {
    pub fn new(min: TwoVector, max: TwoVector) -> Result<Window> {
        if !min.is_finite() || !max.is_finite() || !(max.c1 > min.c1) || !(max.c2 > min.c2) {
            return Err(Error::InvalidScenario(format!(
                "window must have positive width and height, got min {min}, max {max}"
            )));
        }
        Ok(Window { min, max })
    }

    /// Square window `[−half, half]²`.
    pub fn centered(half: f64) -> Result<Window> {
        Window::new(TwoVector::new(-half, -half), TwoVector::new(half, half))
    }

    pub fn contains(&self, p: TwoVector) -> bool {
        (self.min.c1..=self.max.c1).contains(&p.c1) && (self.min.c2..=self.max.c2).contains(&p.c2)
    }

    /// The part of the infinite line inside the window, as its two endpoints.
    pub fn clip(&self, line: &Worldline) -> Option<(TwoVector, TwoVector)> {
        let a = line.anchor();
        let d = line.direction();
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for (start, step, min, max) in [
            (a.c1, d.c1, self.min.c1, self.max.c1),
            (a.c2, d.c2, self.min.c2, self.max.c2),
        ] {
            if step == 0.0 {
                if start < min || start > max {
                    return None;
                }
                continue;
            }
            let (s0, s1) = ((min - start) / step, (max - start) / step);
            lo = lo.max(s0.min(s1));
            hi = hi.min(s0.max(s1));
        }
        (lo <= hi).then(|| (line.point_at(lo), line.point_at(hi)))
    }
}

/// A labeled marker at a spacetime event.
#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub at: TwoVector,
    pub label: String,
}

impl Event {
    pub fn new(at: TwoVector, label: impl Into<String>) -> Event {
        Event {
            at,
            label: label.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    name: String,
    worldlines: Vec<Worldline>,
    transform: Transform,
    window: Window,
    events: Vec<Event>,
}

impl Scenario {
    /// Every worldline must cross the window and every event must lie in it.
    pub fn new(
        name: impl Into<String>,
        worldlines: Vec<Worldline>,
        transform: Transform,
        window: Window,
        events: Vec<Event>,
    ) -> Result<Scenario> {
        let name = name.into();
        if let Some(w) = worldlines.iter().find(|w| window.clip(w).is_none()) {
            return Err(Error::InvalidScenario(format!(
                "worldline `{}` does not intersect the window",
                w.label()
            )));
        }
        if let Some(e) = events.iter().find(|e| !window.contains(e.at)) {
            return Err(Error::OutOfWindow {
                label: e.label.clone(),
            });
        }
        Ok(Scenario {
            name,
            worldlines,
            transform,
            window,
            events,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn worldlines(&self) -> &[Worldline] {
        &self.worldlines
    }

    pub fn transform(&self) -> &Transform {
        &self.transform
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Looks up `fig2`, `fig3` or `fig4`.
    pub fn builtin(name: &str) -> Option<Scenario> {
        match name {
            "fig2" => Some(build_fig2_scenario()),
            "fig3" => Some(build_fig3_scenario()),
            "fig4" => Some(build_fig4_scenario()),
            _ => None,
        }
    }
}

pub const BUILTIN_NAMES: [&str; 3] = ["fig2", "fig3", "fig4"];

/// ξ-speeds of the four particles in the fig2 scenario.
pub const FIG2_PARTICLE_SPEEDS: [f64; 4] = [0.0, 0.25, 0.5, 0.75];

const FIG2_ANCHORS: [f64; 4] = [-1.5, -0.5, 0.5, 1.5];

/// The swap-branch transform `L(−1, 1, 2)` used by all built-in scenarios.
pub fn fig_transform() -> Transform {
    Transform::l(Sign::Minus, 1.0, 2.0).expect("L(-1,1,2) is in the antisymmetric domain")
}

fn origin_rays() -> [Worldline; 2] {
    [
        Worldline::light_ray(TwoVector::ZERO, Sign::Plus, "light ray +"),
        Worldline::light_ray(TwoVector::ZERO, Sign::Minus, "light ray -"),
    ]
}

/// Four subluminal particles and two light rays under `L(−1, 1, 2)`.
pub fn build_fig2_scenario() -> Scenario {
    let mut worldlines: Vec<Worldline> = FIG2_PARTICLE_SPEEDS
        .iter()
        .zip(FIG2_ANCHORS)
        .map(|(&v, x)| {
            Worldline::particle(TwoVector::new(0.0, x), v, format!("particle v={v}"))
                .expect("finite particle")
        })
        .collect();
    worldlines.extend(origin_rays());
    Scenario::new(
        "fig2",
        worldlines,
        fig_transform(),
        Window::centered(4.0).unwrap(),
        vec![],
    )
    .expect("fig2 scenario is valid")
}

/// Two light rays leaving the common origin.
pub fn build_fig3_scenario() -> Scenario {
    Scenario::new(
        "fig3",
        origin_rays().to_vec(),
        fig_transform(),
        Window::centered(3.0).unwrap(),
        vec![],
    )
    .expect("fig3 scenario is valid")
}

/// Event X at the origin, event Y at `(2, 1)`, the particle through both
/// and one light ray.
pub fn build_fig4_scenario() -> Scenario {
    let x = TwoVector::ZERO;
    let y = TwoVector::new(2.0, 1.0);
    let particle = Worldline::new(x, y - x, "particle X-Y", crate::WorldlineKind::Particle)
        .expect("nonzero displacement");
    let ray = Worldline::light_ray(TwoVector::ZERO, Sign::Plus, "light ray");
    Scenario::new(
        "fig4",
        vec![ray, particle],
        fig_transform(),
        Window::centered(3.0).unwrap(),
        vec![Event::new(x, "X"), Event::new(y, "Y")],
    )
    .expect("fig4 scenario is valid")
}
