use super::surface::surface_quadratic;
use super::{EllipticParam, HeunEllipticError};
use crate::exactcore::{Field, LaurentSeries, Poly, Rat, RatFunc};

/// `R_p` with `R_p(sn(θ)²) = sn(pθ)²`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicationMap<F> {
    pub p: u32,
    pub map: RatFunc<F>,
}

impl<F: Field> MultiplicationMap<F> {
    /// Monic `P_p` with `R_p = x (P_p / Q_p)²`, when the numerator has that shape.
    pub fn numerator_polynomial(&self) -> Option<Poly<F>> {
        let reduced = self.map.num().exact_div(&Poly::x())?;
        poly_sqrt(&reduced.monic())
    }

    pub fn series(&self, order: i64) -> Result<LaurentSeries<F>, HeunEllipticError> {
        Ok(LaurentSeries::from_ratfunc(&self.map, order)?)
    }
}

/// Monic square root of a monic polynomial, if it is a square.
fn poly_sqrt<F: Field>(p: &Poly<F>) -> Option<Poly<F>> {
    let deg = p.degree()?;
    if deg % 2 == 1 || !p.lead().is_one() {
        return None;
    }
    let d = deg / 2;
    let two = F::from_int(2);
    // Top-down: s_d = 1, then s_{d-k} from the coefficient of x^{2d-k}.
    let mut s = vec![F::zero(); d + 1];
    s[d] = F::one();
    for k in 1..=d {
        let target = 2 * d - k;
        let mut known = F::zero();
        for i in (d - k + 1)..=d {
            let j = target - i;
            if j > d - k && j <= d {
                known = known.plus(&s[i].times(&s[j]));
            }
        }
        s[d - k] = p.coeff(target).minus(&known).divided(&two)?;
    }
    let root = Poly::new(s);
    (root.mul(&root) == *p).then_some(root)
}

/// `R_p` from the addition surface. With `x`-slot `R_{p-1}` and `y`-slot `x`
/// the two `z`-roots are `R_p` and `R_{p-2}`. `R_2` comes from the sum of the
/// roots since `R_0 = 0`. Later maps use the product of the roots, written on
/// `R_k = N_k/D_k` as
/// `N_p = M²(N_{p-1} - x D_{p-1})² / N_{p-2}` and
/// `D_p = (M D_{p-1} - x N_{p-1})² / D_{p-2}`,
/// both exact divisions whose quotients are coprime.
pub fn multiplication_map<F: Field>(
    p: u32,
    param: &EllipticParam<F>,
) -> Result<MultiplicationMap<F>, HeunEllipticError> {
    if p < 2 {
        return Err(HeunEllipticError::InvalidIndex(p));
    }
    let m = Poly::constant(param.m().clone());
    let x = Poly::x();
    let (a, b, _) = surface_quadratic(param, &RatFunc::x(), &RatFunc::x());
    let r2 = b.neg().div(&a).ok_or(HeunEllipticError::DegenerateRecurrence { p: 2 })?;
    let mut prev = (x.clone(), Poly::one());
    let mut cur = (r2.num().clone(), r2.den().clone());
    check_lead(2, &cur)?;
    for k in 3..=p {
        let degenerate = HeunEllipticError::DegenerateRecurrence { p: k };
        let top = cur.0.sub(&x.mul(&cur.1));
        let bottom = m.mul(&cur.1).sub(&x.mul(&cur.0));
        let num = m.mul(&m).mul(&top).mul(&top).exact_div(&prev.0).ok_or(degenerate.clone())?;
        let den = bottom.mul(&bottom).exact_div(&prev.1).ok_or(degenerate.clone())?;
        if num.is_zero() || den.is_zero() {
            return Err(degenerate);
        }
        let next = (num, den);
        check_lead(k, &next)?;
        prev = std::mem::replace(&mut cur, next);
    }
    let map = RatFunc::from_coprime(cur.0, cur.1).ok_or(HeunEllipticError::DegenerateRecurrence { p })?;
    Ok(MultiplicationMap { p, map })
}

/// The root that continues the recurrence starts with `k² x`.
fn check_lead<F: Field>(k: u32, (num, den): &(Poly<F>, Poly<F>)) -> Result<(), HeunEllipticError> {
    let (n0, n1, d0) = (num.coeff(0), num.coeff(1), den.coeff(0));
    let lead = n1.divided(&d0);
    if !n0.is_zero() || lead != Some(F::from_int((k * k) as i64)) {
        return Err(HeunEllipticError::BranchMismatch { p: k });
    }
    Ok(())
}

/// `Q_p(x, M) = x^{(p²-1)/2} M^{(p²-1)/4} P_p(1/x, 1/M)` for odd `p`, with
/// `P_p` polynomial in `M`.
pub fn reciprocal_partner(p_poly: &Poly<RatFunc<Rat>>, p: u32) -> Option<Poly<RatFunc<Rat>>> {
    let dx = ((p * p - 1) / 2) as usize;
    let dm = ((p * p - 1) / 4) as usize;
    if p.is_multiple_of(2) || p_poly.degree()? != dx {
        return None;
    }
    let mut out = vec![RatFunc::constant(Rat::from_integer(0.into())); dx + 1];
    for (i, c) in p_poly.coeffs().iter().enumerate() {
        if !c.is_polynomial() || c.num().degree().unwrap_or(0) > dm {
            return None;
        }
        // M^dm c(1/M) reverses the coefficient list padded to length dm + 1.
        let mut padded = c.num().coeffs().to_vec();
        padded.resize(dm + 1, Rat::from_integer(0.into()));
        padded.reverse();
        out[dx - i] = RatFunc::from_poly(Poly::new(padded));
    }
    Some(Poly::new(out))
}
