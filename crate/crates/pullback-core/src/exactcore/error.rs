use thiserror::Error;

/// Failures of the series kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series that vanishes through order {known_to}")]
    DivisionByZeroSeries { known_to: i64 },
    #[error("inner series of a composition has valuation {valuation}, need at least 1")]
    InvalidInnerValuation { valuation: i64 },
    #[error("series with valuation {valuation} cannot be reverted")]
    NotReversible { valuation: i64 },
    #[error("{available} known coefficients, need {needed}")]
    InsufficientPrecision { needed: i64, available: i64 },
    #[error("valuation {valuation} is below the supported floor {floor}")]
    ValuationBelowFloor { valuation: i64, floor: i64 },
    #[error("parameter value is a pole of the coefficient at order {order}")]
    ParameterPole { order: i64 },
}

/// Failures of polynomial elimination.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("resultant of an empty polynomial")]
    EmptyInput,
    #[error("polynomial does not divide exactly")]
    InexactDivision,
}
