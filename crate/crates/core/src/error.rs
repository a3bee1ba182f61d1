use std::fmt;

use thiserror::Error;

/// Which coordinate of a `(p, q)` chart value failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PqComponent {
    P,
    Q,
}

impl fmt::Display for PqComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PqComponent::P => f.write_str("p"),
            PqComponent::Q => f.write_str("q"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("two vertices of the triangle coincide")]
    CoincidentVertices,
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("triangle is degenerate (collinear vertices)")]
    DegenerateTriangle,
    #[error("operator image is degenerate")]
    DegenerateOutput,
    #[error("indeterminate value 0/0")]
    IndeterminateValue,
    #[error("invalid operator parameters: {0}")]
    InvalidParameters(String),
    #[error("{0} leaves the (p, q) chart (value is infinite)")]
    ChartEscape(PqComponent),
    #[error("{0} is indeterminate (0/0)")]
    IndeterminateComponent(PqComponent),
    #[error("derived parameter undefined: {0}")]
    DerivedParameterUndefined(&'static str),
    #[error("t = ρ or ρ⁻¹ is excluded from the torus")]
    ExcludedPoint,
    #[error("point lies outside the conic chart")]
    ConicChartFailure,
    #[error("point is not on the conic u² + uv + v² = 1")]
    NotOnConic,
    #[error("input is a pole of {0}")]
    PoleAtInput(&'static str),
    #[error("point is not on the unit torus")]
    NotOnTorus,
    #[error("angle constraint θx = θy − θy' (mod 1) violated")]
    AngleConstraintViolated,
    #[error("invalid rational angle: {0}")]
    InvalidAngle(String),
    #[error("malformed record: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
