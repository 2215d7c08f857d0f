//! Generalized 1+1 dimensional Lorentz transformations.
//!
//! Two families of linear coordinate maps share the form
//! `γ(V)·[[1, −V], [−V, 1]]`, differing only in the parity of `γ`:
//!
//!   * the symmetric family `Λ(τ, K, V)`, defined for `K·V² < 1`, which at
//!     `τ = 1, K = 1` is the ordinary boost with velocity `V`;
//!   * the antisymmetric family `L(τ, K, W)`, defined for `K·W² > 1`, which at
//!     `τ = −1, K = 1` factors as a time/space swap after `Λ(1, 1, 1/W)`.
//!
//! The crate constructs, composes and inverts both families, evaluates the
//! interval quadratic form in any coordinate system, and separates the
//! coordinate notion of superluminal motion (`|Δc₂/Δc₁| > 1`) from the
//! geometric one (`Δs² < 0`). Worldlines, the built-in diagram scenarios and
//! a deterministic SVG renderer sit on top.

#![forbid(unsafe_code)]
// `!(x > y)` rejects NaN along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod causal;
pub mod diagram;
mod error;
pub mod factor;
pub mod identities;
pub mod matrix;
pub mod metric;
pub mod scenario;
pub mod scenario_file;
pub mod transform;
pub mod vector;
pub mod worldline;

pub use causal::{
    classify_coordinate, classify_geometric, classify_geometric_with_tolerance,
    measured_displacement, CausalClass, CausalReport, CoordinateSpeed,
};
pub use diagram::{render_pair, render_pair_with_events, DiagramStyle, SvgDocument};
pub use error::{Error, Result};
pub use factor::{gamma_antisymmetric, gamma_symmetric, k_constant, Sign};
pub use matrix::Mat2;
pub use metric::{interval_squared, transform_metric, Metric};
pub use scenario::{Event, Scenario, Window};
pub use scenario_file::ScenarioFile;
pub use transform::{BranchKind, FamilyParams, SwapDecomposition, Transform, Velocity};
pub use vector::TwoVector;
pub use worldline::{
    coordinate_velocity, rest_point_worldline, transform_worldline, Worldline, WorldlineKind,
};

/// Absolute tolerance for comparisons of O(1) matrix entries.
pub const ENTRY_TOLERANCE: f64 = 1e-12;

/// Relative tolerance for fuzzed interval comparisons.
pub const INTERVAL_REL_TOLERANCE: f64 = 1e-9;
