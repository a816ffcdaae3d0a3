//! Modular-equation and pullback curves: the curve registry, branches at the
//! origin, the resultant construction of M4 and the parametrization checks.

pub mod branches;
pub mod checks;
pub mod m4;
pub mod registry;

use thiserror::Error;

use crate::conditions::ConditionError;
use crate::exactcore::{PolyError, SeriesError};

pub use branches::{analytic_branches, branches_of, newton_slopes, BranchSet, SkippedBranch};
pub use checks::{
    cal_a_series, genus2_identity_check, genus2_pullbacks, landen_hauptmoduls, verify_cal_a, verify_parametrization,
    Genus2Report, ParametrizationKind, ParametrizationReport, ParametrizationResidual,
};
pub use m4::{build_m4, M4Construction};
pub use registry::{curve_names, load_curve, parse_curve_registry, render_curve_registry, CurveRecord, CurveSymmetry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error("curve has no integer-exponent branch at the origin")]
    NoIntegerBranch,
    #[error("(x-y)^2 does not divide the resultant")]
    FactorizationFailure,
    #[error("curve `{name}` does not have the declared symmetry `{symmetry}`")]
    SymmetryMismatch { name: String, symmetry: &'static str },
    #[error("curve `{0}` has non-integer coefficients")]
    NonIntegral(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Condition(#[from] ConditionError),
}
