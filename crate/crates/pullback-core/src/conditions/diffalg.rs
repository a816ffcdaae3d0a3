//! Differentially algebraic relations satisfied by `Q = Y^N`, its inverse `P`,
//! the log-derivative `G = Q'/Q` and `F = Q/Q'`, for a rank-two case.

use super::residuals::{eval_at, expand, rank2_residual};
use super::{ConditionError, ResidualReport};
use crate::exactcore::{Field, LaurentSeries};
use crate::specialfun::{binomial_series, Rank2Case};

#[derive(Clone, Debug, PartialEq)]
pub struct NamedReport<F> {
    pub name: String,
    pub report: ResidualReport<F>,
}

fn named<F: Field>(name: impl Into<String>, residual: LaurentSeries<F>, order: i64) -> NamedReport<F> {
    NamedReport { name: name.into(), report: ResidualReport::new(residual, order) }
}

/// `F = u·Y = x · Π(1 - x/root)^e · G(x)`.
pub fn f_series<F: Field>(case: &Rank2Case<F>, order: i64) -> LaurentSeries<F> {
    let mut v = LaurentSeries::constant(F::one(), order);
    for (root, e) in &case.operator.u_exponents {
        if !root.is_zero() {
            v = v.mul(&binomial_series(root, e, order));
        }
    }
    v.mul(&case.g_series(order)).shift(1).truncate(order)
}

/// `(E_+, E_-)` with `E_± = F' - A_R F ± 1/N` and `F = Q/Q'`.
pub fn e_factors<F: Field>(
    case: &Rank2Case<F>,
    order: i64,
) -> Result<(LaurentSeries<F>, LaurentSeries<F>), ConditionError> {
    let q = case.q_series(order + 3);
    let f = q.div(&q.derivative())?;
    let a_r = expand(case.a_r(), order + 3)?;
    let base = f.derivative().sub(&a_r.mul(&f));
    let inv_n = F::from_int(case.n as i64).inverse().expect("N > 0");
    Ok((base.add_scalar(&inv_n).truncate(order), base.add_scalar(&inv_n.negated()).truncate(order)))
}

/// Every side relation of a rank-two case, each expected to vanish.
pub fn diffalg_suite<F: Field>(case: &Rank2Case<F>, order: i64) -> Result<Vec<NamedReport<F>>, ConditionError> {
    let work = order + 6;
    let a_r_fn = case.a_r();
    let a_r = expand(a_r_fn, work)?;
    let a_r_d = expand(&a_r_fn.derivative(), work)?;
    let q = case.q_series(work);
    let (q1, q2, q3) = {
        let q1 = q.derivative();
        let q2 = q1.derivative();
        let q3 = q2.derivative();
        (q1, q2, q3)
    };
    let f = f_series(case, work);
    let mut out = Vec::new();

    out.push(named("Q'F - Q", q1.mul(&f).sub(&q), order));

    let g = q1.div(&q)?;
    let g1 = g.derivative();
    let g2 = g1.derivative();
    let two = F::from_int(2);
    let log_relation = a_r.mul(&g).mul(&g1).sub(&a_r_d.mul(&g.square())).add(&g1.square().scale(&two)).sub(&g.mul(&g2));
    out.push(named("log-derivative relation", log_relation, order));

    let cubic = a_r
        .mul(&q1.square().sub(&q.mul(&q2)))
        .mul(&q1)
        .add(&a_r_d.mul(&q).mul(&q1.square()))
        .add(&q2.mul(&q1.square()))
        .add(&q.mul(&q3).mul(&q1))
        .sub(&q.mul(&q2.square()).scale(&two));
    out.push(named("cubic relation on Q", cubic, order));

    let p = q.reverse()?;
    let (p1, p2, p3) = {
        let p1 = p.derivative();
        let p2 = p1.derivative();
        let p3 = p2.derivative();
        (p1, p2, p3)
    };
    let x = LaurentSeries::x(work);
    let p_relation = eval_at(a_r_fn, &p)?
        .mul(&p1.square())
        .mul(&x.mul(&p2).add(&p1))
        .add(&x.mul(&eval_at(&a_r_fn.derivative(), &p)?).mul(&p1.pow(4)?))
        .add(&x.mul(&p2.square()))
        .sub(&x.mul(&p1).mul(&p3))
        .sub(&p1.mul(&p2));
    out.push(named("relation on P", p_relation, order));

    let inv_n = F::from_int(case.n as i64).inverse().expect("N > 0");
    let integrated = f.derivative().sub(&a_r.mul(&f)).add_scalar(&inv_n.negated());
    out.push(named("F' - A_R F - 1/N", integrated, order));

    let (e_plus, e_minus) = e_factors(case, work)?;
    out.push(named("E+ E-", e_plus.mul(&e_minus), order));

    for (i, pb) in case.pullbacks.iter().enumerate() {
        let r = expand(&pb.map, work)?;
        let transport = r.derivative().mul(&f).sub(&f.compose(&r)?);
        out.push(named(format!("R'F - F(R) [pullback {i}]"), transport, order));
        let rank2 = rank2_residual(a_r_fn, &r, order)?;
        out.push(NamedReport { name: format!("rank-two condition [pullback {i}]"), report: rank2 });
        let cov = q.compose(&r)?.sub(&q.scale(&pb.scale));
        out.push(named(format!("Q(R) - scale Q [pullback {i}]"), cov, order));
    }
    Ok(out)
}
