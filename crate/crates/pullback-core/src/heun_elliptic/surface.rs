use super::{EllipticParam, HeunEllipticError};
use crate::exactcore::{format_rat, int, Field, MultiPoly, Rat, RatFunc};

/// The symmetric surface in `(x, y, z) = (sn(u)^2, sn(v)^2, sn(u+v)^2)`:
/// `x²y²z² - 2M(x+y+z)xyz + 4M(M+1)xyz + M²((x+y+z)² - 4(xy+xz+yz))`.
pub fn master_surface<F: Field>(param: &EllipticParam<F>) -> MultiPoly<F> {
    let m = param.m();
    let c = |v: F| MultiPoly::constant(v);
    let (x, y, z) = (MultiPoly::var(0), MultiPoly::var(1), MultiPoly::var(2));
    let xyz = x.mul(&y).mul(&z);
    let sum = x.add(&y).add(&z);
    let pairs = x.mul(&y).add(&x.mul(&z)).add(&y.mul(&z));
    let m2 = m.times(m);
    xyz.mul(&xyz)
        .sub(&c(m.times(&F::from_int(2))).mul(&sum).mul(&xyz))
        .add(&c(m.times(&m.plus(&F::one())).times(&F::from_int(4))).mul(&xyz))
        .add(&c(m2).mul(&sum.mul(&sum).sub(&pairs.scale(&F::from_int(4)))))
}

/// `(A, B, C)` with the surface equal to `A z² + B z + C` once `x = a`, `y = b`:
/// `A = (M - ab)²`, `B = 2M(2ab(M+1) - (a+b)(ab+M))`, `C = M²(a-b)²`.
pub fn surface_quadratic<F: Field>(
    param: &EllipticParam<F>,
    a: &RatFunc<F>,
    b: &RatFunc<F>,
) -> (RatFunc<F>, RatFunc<F>, RatFunc<F>) {
    let m = RatFunc::constant(param.m().clone());
    let ab = a.mul(b);
    let lead = m.sub(&ab);
    let mid = ab
        .mul(&m.add(&RatFunc::constant(F::one())))
        .scale(&F::from_int(2))
        .sub(&a.add(b).mul(&ab.add(&m)))
        .mul(&m)
        .scale(&F::from_int(2));
    let diff = a.sub(b);
    (lead.mul(&lead), mid, m.mul(&m).mul(&diff).mul(&diff))
}

/// `256 (M² - M + 1)³ / (M² (M - 1)²)`.
pub fn j_invariant(m: &Rat) -> Result<Rat, HeunEllipticError> {
    let one = int(1);
    let den = m * m * (m - &one) * (m - &one);
    if den == int(0) {
        return Err(HeunEllipticError::PoleAtExcludedM(format_rat(m)));
    }
    let base = m * m - m + &one;
    Ok(int(256) * &base * &base * &base / den)
}
