use alloc::string::String;
use core::fmt;

/// Errors raised by body construction, the Minkowski solver, and the metrics.
#[derive(Debug, Clone, PartialEq)]
pub enum GeomError {
    /// Inputs live in different ambient dimensions.
    DimensionMismatch { expected: usize, got: usize },
    /// An operation that needs a full-dimensional body got a degenerate one.
    NotFullDimensional,
    /// Facet extraction / halfspace intersection only exists for n = 2, 3.
    UnsupportedDimension(usize),
    /// A vector that must be nonzero (direction, generator) was zero.
    ZeroVector,
    /// The linear map is singular.
    SingularMap,
    /// A measure weight was not strictly positive.
    NonPositiveWeight(f64),
    /// The measure centroid is not at the origin.
    MeasureCentroidNonzero(f64),
    /// The measure is concentrated on a great subsphere.
    MeasureDegenerate,
    /// The solver did not reach the area tolerance.
    SolverStalled { iterations: usize, residual: f64 },
    /// A support value was negative where the body must contain the origin.
    OriginNotContained(f64),
    /// The planar body M is not 1-unconditional.
    NotUnconditional(f64),
    /// Scaling a body by zero.
    ZeroScale,
    /// Anything else, with a message.
    Invalid(String),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            GeomError::NotFullDimensional => write!(f, "not full-dimensional"),
            GeomError::UnsupportedDimension(n) => write!(f, "unsupported dimension {n}"),
            GeomError::ZeroVector => write!(f, "zero vector"),
            GeomError::SingularMap => write!(f, "singular linear map"),
            GeomError::NonPositiveWeight(w) => write!(f, "non-positive atom weight {w}"),
            GeomError::MeasureCentroidNonzero(c) => {
                write!(f, "measure centroid nonzero (norm {c:e})")
            }
            GeomError::MeasureDegenerate => write!(f, "measure degenerate"),
            GeomError::SolverStalled { iterations, residual } => {
                write!(f, "solver stalled after {iterations} iterations, residual {residual:e}")
            }
            GeomError::OriginNotContained(h) => {
                write!(f, "body does not contain origin (support {h})")
            }
            GeomError::NotUnconditional(r) => {
                write!(f, "M fails the 1-unconditional sample test (residual {r:e})")
            }
            GeomError::ZeroScale => write!(f, "scale factor must be positive"),
            GeomError::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for GeomError {}

pub type Result<T> = core::result::Result<T, GeomError>;
