use super::maps::{multiplication_map, MultiplicationMap};
use super::{EllipticParam, HeunEllipticError};
use crate::conditions::{rank2_residual_rational, solve_rank2_family, NamedReport, ResidualReport};
use crate::exactcore::{int, rat, Field, LaurentSeries, Poly, Rat, RatFunc};
use crate::specialfun::{heun_case, heun_series, hyp_series, HeunSpec, HypergeometricSpec};

/// `s(x) = sn(√x, k)²`, solved order by order from `x s'² = s(1-s)(1-k²s)`,
/// which is `(ds/dθ)² = 4s(1-s)(1-k²s)` with `x = θ²`.
pub fn sn2_series<F: Field>(k_squared: &F, order: i64) -> LaurentSeries<F> {
    let mut coeffs = vec![F::zero(), F::one()];
    let residual_at = |coeffs: &[F], n: i64| -> F {
        let s = LaurentSeries::new(0, coeffs.to_vec(), n + 1).expect("valuation 0");
        let lhs = s.derivative().square().shift(1);
        let one_minus = s.neg().add_scalar(&F::one());
        let third = s.scale(k_squared).neg().add_scalar(&F::one());
        lhs.sub(&s.mul(&one_minus).mul(&third)).coeff(n)
    };
    for n in 2..order {
        let mut trial = coeffs.clone();
        trial.push(F::zero());
        let r0 = residual_at(&trial, n);
        *trial.last_mut().expect("pushed") = F::one();
        let pivot = residual_at(&trial, n).minus(&r0);
        coeffs.push(r0.negated().divided(&pivot).expect("pivot 2n - 1"));
    }
    coeffs.truncate(order.max(0) as usize);
    LaurentSeries::new(0, coeffs, order).expect("valuation 1")
}

/// `p² x - p²(p²-1)(M+1)/(3M) x²`, the first two terms of every `R_p`.
pub fn rp_series_law<F: Field>(p: u32, param: &EllipticParam<F>) -> LaurentSeries<F> {
    let m = param.m();
    let p2 = F::from_int((p * p) as i64);
    let second = p2
        .times(&F::from_int((p * p) as i64 - 1))
        .times(&m.plus(&F::one()))
        .divided(&m.times(&F::from_int(3)))
        .expect("M nonzero")
        .negated();
    LaurentSeries::new(1, vec![p2, second], 3).expect("valuation 1")
}

/// `R_p` minus the rank-two family member with leading coefficient `p²`,
/// both for `A_R = u'/u`, `u = (x(1-x)(1-x/M))^{1/2}`.
pub fn rp_series_check<F: Field>(
    map: &MultiplicationMap<F>,
    param: &EllipticParam<F>,
    order: i64,
) -> Result<ResidualReport<F>, HeunEllipticError> {
    let case = heun_case(param.m().clone());
    let lead = F::from_int((map.p * map.p) as i64);
    let family = solve_rank2_family(case.a_r(), &lead, order)?;
    Ok(ResidualReport::new(map.series(order)?.sub(&family), order))
}

/// `R_p H(R_p)² - p² x H(x)²` with `H = HeunG(M, (M+1)/4; 1/2, 1, 3/2, 1/2)`.
pub fn heun_covariance<F: Field>(
    map: &MultiplicationMap<F>,
    param: &EllipticParam<F>,
    order: i64,
) -> Result<ResidualReport<F>, HeunEllipticError> {
    let h = heun_series(&HeunSpec::elliptic(param.m().clone()), order)?;
    let r = map.series(order)?;
    let lhs = r.mul(&h.compose(&r)?.square());
    let rhs = h.square().shift(1).scale(&F::from_int((map.p * map.p) as i64));
    Ok(ResidualReport::new(lhs.sub(&rhs), order))
}

/// `G̃ = 2x G' + G` with `G(x) = H(4Mx)`.
pub fn globally_bounded_g<F: Field>(
    param: &EllipticParam<F>,
    order: i64,
) -> Result<LaurentSeries<F>, HeunEllipticError> {
    let h = heun_series(&HeunSpec::elliptic(param.m().clone()), order)?;
    let g = h.compose(&LaurentSeries::monomial(param.m().times(&F::from_int(4)), 1, order))?;
    Ok(g.derivative().shift(1).scale(&F::from_int(2)).add(&g))
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc<Rat> {
    RatFunc::frac(Poly::from_ints(num), Poly::from_ints(den))
}

fn exact(name: &str, value: RatFunc<Rat>, order: i64) -> Result<NamedReport<Rat>, HeunEllipticError> {
    let residual = LaurentSeries::from_ratfunc(&value, order)?;
    Ok(NamedReport { name: name.into(), report: ResidualReport::new(residual, order) })
}

/// The three `M` with `j = 1728` (`k` = 1, 2, 3 for `M` = 2, -1, 1/2), where
/// the Heun function is `b(x)^{-1/4} 2F1([1/4,3/4],[5/4], p_k(x))`.
pub fn specialization_suite(k: u32, order: i64) -> Result<Vec<NamedReport<Rat>>, HeunEllipticError> {
    let (m, base, p_k, big_p_k) = match k {
        // 8x(1-x)(2-x)/(x²-2)², 4x(1-x²)/(1+x²)², 4x(1-x)(1-2x)/(1-2x²)²
        1 => (int(2), rf(&[1, -1], &[1]), rf(&[0, 0, -1], &[4, -4]), rf(&[0, 16, -24, 8], &[4, 0, -4, 0, 1])),
        2 => (int(-1), rf(&[1, 0, -1], &[1]), rf(&[0, 0, -1], &[1, 0, -1]), rf(&[0, 4, 0, -4], &[1, 0, 2, 0, 1])),
        3 => (rat(1, 2), rf(&[1, -2], &[1]), rf(&[0, 0, -1], &[1, -2]), rf(&[0, 4, -12, 8], &[1, 0, -4, 0, 4])),
        _ => return Err(HeunEllipticError::InvalidSpecialization(k)),
    };
    let param = EllipticParam::new(m.clone())?;
    let f = hyp_series(&HypergeometricSpec::gauss(rat(1, 4), rat(3, 4), rat(5, 4)), order)?;
    let h = heun_series(&HeunSpec::elliptic(m), order)?;

    // H⁴ b = F(p_k)⁴.
    let p_series = LaurentSeries::from_ratfunc(&p_k, order)?;
    let lhs = h.pow(4)?.mul(&LaurentSeries::from_ratfunc(&base, order)?);
    let reduction = lhs.sub(&f.compose(&p_series)?.pow(4)?);

    // 𝒫 = 16x(1-x)/(1+4x-4x²)².
    let cal_p = rf(&[0, 16, -16], &[1, 8, 8, -32, 16]);
    let transmutation = cal_p.compose(&p_k).expect("no pole").sub(&p_k.compose(&big_p_k).expect("no pole"));
    let doubling = big_p_k.sub(&multiplication_map(2, &param)?.map);

    // Q = x F⁴ and R = -4x(1-x)/(1-2x)², with Q(R) = -4Q.
    let q = f.pow(4)?.shift(1);
    let r = LaurentSeries::from_ratfunc(&rf(&[0, -4, 4], &[1, -4, 4]), order)?;
    let covariance = q.compose(&r)?.add(&q.scale(&int(4)));

    // 𝒫 solves the rank-two condition with A_R = (3/4)(1-2x)/(x(1-x)).
    let a_r = rf(&[3, -6], &[0, 4, -4]);
    let rank_two = rank2_residual_rational(&a_r, &cal_p, order)?;

    Ok(vec![
        NamedReport { name: "heun_reduction".into(), report: ResidualReport::new(reduction, order) },
        exact("transmutation", transmutation, order)?,
        exact("doubling_match", doubling, order)?,
        NamedReport { name: "quartic_covariance".into(), report: ResidualReport::new(covariance, order) },
        NamedReport { name: "rank_two".into(), report: rank_two },
    ])
}
