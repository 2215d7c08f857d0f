use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A family parameter lies outside the region where the family is defined.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),

    #[error("singular matrix (det = {det:e})")]
    SingularMatrix { det: f64 },

    #[error("transform is not decomposable as swap * lambda(1,1,1/W): {0}")]
    NotDecomposable(String),

    #[error("degenerate displacement (0, 0)")]
    DegenerateDisplacement,

    #[error("light ray `{label}` left the light cone: |c1| - |c2| = {residual:e}")]
    LightRayViolation { label: String, residual: f64 },

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid worldline: {0}")]
    InvalidWorldline(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("invalid diagram style: {0}")]
    InvalidStyle(String),

    #[error("no worldline intersects the window")]
    EmptyWindow,

    #[error("event `{label}` lies outside the window")]
    OutOfWindow { label: String },

    #[error("derived transform has no family parameters and cannot be serialized")]
    NotSerializable,

    #[error("scenario file: {0}")]
    Json(#[from] serde_json::Error),
}
