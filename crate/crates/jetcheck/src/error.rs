use thiserror::Error;

use crate::charts::Space;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("pole under substitution")]
    PoleUnderSubstitution,

    #[error("degenerate sampling domain")]
    DegenerateSampling,

    #[error("unsupported base dimension {0} (supported: 2..=4)")]
    UnsupportedDimension(u8),

    #[error("dimension {n} not supported for {what} (supported: 2..=3)")]
    DimensionTooLarge { n: u8, what: &'static str },

    #[error("invalid signature ({0}, {1})")]
    InvalidSignature(u8, u8),

    #[error("chart mismatch: expected {expected:?}, got {got:?}")]
    ChartMismatch { expected: Space, got: Space },

    #[error("chart {0:?} has no jet layer of order {1}")]
    NoJetLayer(Space, u8),

    #[error("no generator family implemented for chart {0:?}")]
    NoGeneratorFamily(Space),

    #[error("vector field does not project to the base: component of {0} depends on fibre coordinates")]
    NotProjectable(String),

    #[error("expression uses coordinate {0} outside chart {1:?}")]
    CoordinateOutsideChart(String, Space),

    #[error("metric compatibility condition violated at γ_({0}{1}){2}")]
    MetricConditionViolated(u8, u8, u8),

    #[error("connection coefficients depend on metric coordinates")]
    ConnectionNotMetricFree,

    #[error("inconsistent constraint system: {0}")]
    InconsistentConstraints(String),

    #[error("unknown named expression `{0}`")]
    UnknownExpr(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}
