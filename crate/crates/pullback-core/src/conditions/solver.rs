//! Undetermined-coefficient solvers: one linear equation per order.

use super::residuals::{expand, rank2_residual, schwarzian_residual};
use super::ConditionError;
use crate::exactcore::{rat, Field, LaurentSeries, ParamSeries, RatFunc};

/// Extra known terms given to trial series; the target coefficient never
/// depends on them.
const PAD: i64 = 4;

pub fn lift_ratfunc<F: Field>(r: &RatFunc<F>) -> RatFunc<RatFunc<F>> {
    r.map_coeffs(|c| RatFunc::constant(c.clone()))
}

/// Solves `residual(y) = 0` for `y = lead x^exponent + Σ c_n x^n` up to
/// `x^order` exclusive. The coefficient `c_n` first enters the residual,
/// linearly, at `x^(n + shift)`.
pub(crate) fn solve_by_orders<F, R>(
    lead: &F,
    exponent: i64,
    shift: i64,
    order: i64,
    residual: R,
) -> Result<LaurentSeries<F>, ConditionError>
where
    F: Field,
    R: Fn(&LaurentSeries<F>) -> Result<LaurentSeries<F>, ConditionError>,
{
    let target_coeff = |coeffs: &[F], n: i64| -> Result<F, ConditionError> {
        let y = LaurentSeries::new(exponent, coeffs.to_vec(), n + 1 + PAD)?;
        let r = residual(&y)?;
        let k = n + shift;
        r.try_coeff(k).ok_or(ConditionError::Series(crate::exactcore::SeriesError::InsufficientPrecision {
            needed: k + 1,
            available: r.trunc_order(),
        }))
    };
    let mut coeffs = vec![lead.clone()];
    let leading = target_coeff(&coeffs, exponent)?;
    if !leading.is_zero() {
        return Err(ConditionError::NoSolution {
            reason: format!("leading coefficient of the residual at x^{} is nonzero", exponent + shift),
        });
    }
    for n in exponent + 1..order {
        coeffs.push(F::zero());
        let r0 = target_coeff(&coeffs, n)?;
        *coeffs.last_mut().expect("pushed") = F::one();
        let r1 = target_coeff(&coeffs, n)?;
        let pivot = r1.minus(&r0);
        let Some(inv) = pivot.inverse() else {
            return Err(ConditionError::OrderObstruction { order: n });
        };
        *coeffs.last_mut().expect("pushed") = r0.times(&inv).negated();
    }
    Ok(LaurentSeries::new(exponent, coeffs, order)?)
}

/// The rank-two family `y = lead·x + ...` with `A_R(y) y'^2 = A_R y' + y''`.
pub fn solve_rank2_family<F: Field>(
    a_r: &RatFunc<F>,
    lead: &F,
    order: i64,
) -> Result<LaurentSeries<F>, ConditionError> {
    solve_by_orders(lead, 1, -2, order, |y| Ok(rank2_residual(a_r, y, i64::MAX)?.residual))
}

/// The rank-two family with a formal parameter `a` as leading coefficient.
pub fn solve_rank2_family_symbolic<F: Field>(a_r: &RatFunc<F>, order: i64) -> Result<ParamSeries<F>, ConditionError> {
    solve_rank2_family(&lift_ratfunc(a_r), &RatFunc::x(), order)
}

/// `(1 - N^2)(w_{-2} + 1/2)`, the residual coefficient of `x^-2` at
/// `y = a x^N`.
pub fn leading_obstruction<F: Field>(w: &RatFunc<F>, exponent: u32) -> Result<F, ConditionError> {
    let n = exponent as i64;
    let w_series = expand(w, -1)?;
    let w_m2 = w_series.try_coeff(-2).unwrap_or_else(F::zero);
    Ok(F::from_int(1 - n * n).times(&w_m2.plus(&F::from_rat(&rat(1, 2)))))
}

/// Solutions `lead·x^N + ...` of `W(x) - W(y) y'^2 + {y, x} = 0`.
pub fn solve_schwarzian_family<F: Field>(
    w: &RatFunc<F>,
    exponent: u32,
    lead: &F,
    order: i64,
) -> Result<LaurentSeries<F>, ConditionError> {
    if exponent == 0 {
        return Err(ConditionError::NoSolution { reason: "leading exponent must be positive".into() });
    }
    let obstruction = leading_obstruction(w, exponent)?;
    if !obstruction.is_zero() {
        return Err(ConditionError::NoSolution {
            reason: format!("leading obstruction (1-N^2)(w_-2 + 1/2) = {}", obstruction.render(&["a"])),
        });
    }
    let n = exponent as i64;
    solve_by_orders(lead, n, -n - 2, order, |y| Ok(schwarzian_residual(w, y, i64::MAX)?.residual))
}

pub fn solve_schwarzian_family_symbolic<F: Field>(
    w: &RatFunc<F>,
    exponent: u32,
    order: i64,
) -> Result<ParamSeries<F>, ConditionError> {
    solve_schwarzian_family(&lift_ratfunc(w), exponent, &RatFunc::x(), order)
}

/// `S` in `y = a x + a(a-1) S(x)` for a family in the formal parameter `a`.
pub fn one_parameter_remainder<F: Field>(y: &ParamSeries<F>) -> ParamSeries<F> {
    let a = RatFunc::<F>::x();
    let linear = LaurentSeries::monomial(a.clone(), 1, y.trunc_order());
    let scale = a.mul(&a.sub(&RatFunc::constant(F::one()))).inv().expect("a(a-1) nonzero");
    y.sub(&linear).scale(&scale)
}
