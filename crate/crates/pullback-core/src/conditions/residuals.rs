use super::{ConditionError, ResidualReport};
use crate::exactcore::{rat, Field, LaurentSeries, RatFunc, SeriesError};
use crate::specialfun::w_rank2;

pub(crate) fn eval_at<F: Field>(r: &RatFunc<F>, y: &LaurentSeries<F>) -> Result<LaurentSeries<F>, ConditionError> {
    LaurentSeries::eval_ratfunc(r, y).map_err(|e| match e {
        SeriesError::DivisionByZeroSeries { .. } => ConditionError::PoleCollision,
        other => ConditionError::Series(other),
    })
}

pub(crate) fn expand<F: Field>(r: &RatFunc<F>, order: i64) -> Result<LaurentSeries<F>, ConditionError> {
    LaurentSeries::from_ratfunc(r, order).map_err(|e| match e {
        SeriesError::DivisionByZeroSeries { .. } => ConditionError::PoleCollision,
        other => ConditionError::Series(other),
    })
}

/// `A_R(y) y'^2 - A_R y' - y''`.
pub fn rank2_residual<F: Field>(
    a_r: &RatFunc<F>,
    y: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    let d1 = y.derivative();
    let d2 = d1.derivative();
    let lhs = eval_at(a_r, y)?.mul(&d1.square());
    let a_x = expand(a_r, y.trunc_order() + 2)?;
    let residual = lhs.sub(&a_x.mul(&d1)).sub(&d2);
    Ok(ResidualReport::new(residual, order))
}

/// Rank-two residual for a rational pullback, expanded far enough to reach `order`.
pub fn rank2_residual_rational<F: Field>(
    a_r: &RatFunc<F>,
    y: &RatFunc<F>,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    let ys = expand(y, order + 4)?;
    rank2_residual(a_r, &ys, order)
}

/// `W(x) - W(y) y'^2 + {y, x}`.
pub fn schwarzian_residual<F: Field>(
    w: &RatFunc<F>,
    y: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    let d1 = y.derivative();
    let pulled = eval_at(w, y)?.mul(&d1.square());
    let partial = y.schwarzian()?.sub(&pulled);
    let w_x = expand(w, partial.trunc_order())?;
    Ok(ResidualReport::new(w_x.add(&partial), order))
}

/// `{Q, x} + (N^2 - 1)/(2N^2) (Q'/Q)^2 + W`.
pub fn schwarzian_qn_residual<F: Field>(
    w: &RatFunc<F>,
    n: u32,
    q: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    let n = n as i64;
    let factor = F::from_rat(&rat(n * n - 1, 2 * n * n));
    let log_d = q.derivative().div(q)?;
    let partial = q.schwarzian()?.add(&log_d.square().scale(&factor));
    let w_x = expand(w, partial.trunc_order())?;
    Ok(ResidualReport::new(partial.add(&w_x), order))
}

/// `y1(y2(x)) - y2(y1(x))`.
pub fn check_commutation<F: Field>(
    y1: &LaurentSeries<F>,
    y2: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    let residual = y1.compose(y2)?.sub(&y2.compose(y1)?);
    Ok(ResidualReport::new(residual, order))
}

/// `Q(R(x)) - scale · Q(x)`.
pub fn verify_covariance<F: Field>(
    q: &LaurentSeries<F>,
    pullback: &LaurentSeries<F>,
    scale: &F,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    let residual = q.compose(pullback)?.sub(&q.scale(scale));
    Ok(ResidualReport::new(residual, order))
}

/// Schwarzian residual of `z(y(x))`.
pub fn composition_closure_check<F: Field>(
    w: &RatFunc<F>,
    y: &LaurentSeries<F>,
    z: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    schwarzian_residual(w, &z.compose(y)?, order)
}

/// Schwarzian residual of `y` with `W = A_R' + A_R^2/2`.
pub fn rank2_subcase_check<F: Field>(
    a_r: &RatFunc<F>,
    y: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, ConditionError> {
    schwarzian_residual(&w_rank2(a_r), y, order)
}

/// `B - (C/4 (2A - C) + C'/2)`; zero exactly when
/// `D^2 + A D + B = (D + A - C/2)(D + C/2)`.
pub fn factorization_defect<F: Field>(a: &RatFunc<F>, b: &RatFunc<F>, c: &RatFunc<F>) -> RatFunc<F> {
    let quarter = F::from_rat(&rat(1, 4));
    let half = F::from_rat(&rat(1, 2));
    let expected = c.mul(&a.scale(&F::from_int(2)).sub(c)).scale(&quarter).add(&c.derivative().scale(&half));
    b.sub(&expected)
}
