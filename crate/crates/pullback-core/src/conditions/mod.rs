//! Rank-two and Schwarzian conditions on pullbacks: residuals, order-by-order
//! solvers, and the differentially algebraic side relations.

pub mod diffalg;
pub mod identity;
pub mod residuals;
pub mod solver;

use crate::exactcore::{Field, LaurentSeries, RatFunc, SeriesError};
use thiserror::Error;

pub use diffalg::{diffalg_suite, e_factors, NamedReport};
pub use identity::{solve_identity_family, HigherFamily, IdentityOutcome};
pub use residuals::{
    check_commutation, composition_closure_check, factorization_defect, rank2_residual, rank2_residual_rational,
    rank2_subcase_check, schwarzian_qn_residual, schwarzian_residual, verify_covariance,
};
pub use solver::{
    leading_obstruction, lift_ratfunc, one_parameter_remainder, solve_rank2_family, solve_rank2_family_symbolic,
    solve_schwarzian_family, solve_schwarzian_family_symbolic,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("pullback meets a pole of the coefficient function")]
    PoleCollision,
    #[error("no coefficient of x^{order} solves the linear equation at that order")]
    OrderObstruction { order: i64 },
    #[error("no solution: {reason}")]
    NoSolution { reason: String },
    #[error("missing `{0}` for this condition kind")]
    MissingField(&'static str),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionKind {
    RankTwo,
    Schwarzian,
    SchwarzianQN,
}

/// One condition with exactly the data its kind needs.
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionSpec<F> {
    pub kind: ConditionKind,
    pub a_r: Option<RatFunc<F>>,
    pub w: Option<RatFunc<F>>,
    pub n: Option<u32>,
}

impl<F: Field> ConditionSpec<F> {
    pub fn rank_two(a_r: RatFunc<F>) -> Self {
        ConditionSpec { kind: ConditionKind::RankTwo, a_r: Some(a_r), w: None, n: None }
    }

    pub fn schwarzian(w: RatFunc<F>) -> Self {
        ConditionSpec { kind: ConditionKind::Schwarzian, a_r: None, w: Some(w), n: None }
    }

    pub fn schwarzian_qn(w: RatFunc<F>, n: u32) -> Self {
        ConditionSpec { kind: ConditionKind::SchwarzianQN, a_r: None, w: Some(w), n: Some(n) }
    }

    /// Residual of the condition at `y` (for `SchwarzianQN`, `y` is `Q`).
    pub fn residual(&self, y: &LaurentSeries<F>, order: i64) -> Result<ResidualReport<F>, ConditionError> {
        match self.kind {
            ConditionKind::RankTwo => {
                rank2_residual(self.a_r.as_ref().ok_or(ConditionError::MissingField("A_R"))?, y, order)
            }
            ConditionKind::Schwarzian => {
                schwarzian_residual(self.w.as_ref().ok_or(ConditionError::MissingField("W"))?, y, order)
            }
            ConditionKind::SchwarzianQN => schwarzian_qn_residual(
                self.w.as_ref().ok_or(ConditionError::MissingField("W"))?,
                self.n.ok_or(ConditionError::MissingField("N"))?,
                y,
                order,
            ),
        }
    }
}

/// A residual series together with how far it is known.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport<F> {
    pub residual: LaurentSeries<F>,
    /// Every coefficient of `x^k` with `k < verified_order` is known.
    pub verified_order: i64,
    pub is_zero: bool,
}

impl<F: Field> ResidualReport<F> {
    /// Truncates to `order` when the residual is known further.
    pub fn new(residual: LaurentSeries<F>, order: i64) -> Self {
        let residual = if residual.trunc_order() > order { residual.truncate(order) } else { residual };
        ResidualReport { verified_order: residual.trunc_order(), is_zero: residual.is_zero(), residual }
    }

    pub fn first_failure(&self) -> Option<(i64, F)> {
        self.residual.leading().map(|c| (self.residual.valuation(), c.clone()))
    }

    /// Zero and known at least through `x^(min_order-1)`.
    pub fn passes(&self, min_order: i64) -> bool {
        self.is_zero && self.verified_order >= min_order
    }
}
