//! Generalized hypergeometric series from the term-ratio recurrence.

use super::SpecialFunError;
use crate::exactcore::{Field, LaurentSeries, Rat};

/// Parameters of `pFq(upper; lower; x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricSpec<F> {
    pub upper: Vec<F>,
    pub lower: Vec<F>,
}

impl<F: Field> HypergeometricSpec<F> {
    pub fn new(upper: Vec<F>, lower: Vec<F>) -> Self {
        HypergeometricSpec { upper, lower }
    }
}

impl HypergeometricSpec<Rat> {
    /// `2F1([a, b], [c])`.
    pub fn gauss(a: Rat, b: Rat, c: Rat) -> Self {
        HypergeometricSpec { upper: vec![a, b], lower: vec![c] }
    }
}

/// `Σ c_n x^n + O(x^order)` with `c_0 = 1` and
/// `c_{n+1}/c_n = Π(upper_i + n) / (Π(lower_j + n) (n + 1))`.
pub fn hyp_series<F: Field>(spec: &HypergeometricSpec<F>, order: i64) -> Result<LaurentSeries<F>, SpecialFunError> {
    if order < 1 {
        return Err(SpecialFunError::InvalidOrder(order));
    }
    let mut coeffs = Vec::with_capacity(order as usize);
    let mut c = F::one();
    coeffs.push(c.clone());
    for n in 0..order - 1 {
        let nf = F::from_int(n);
        let mut num = F::one();
        for a in &spec.upper {
            num = num.times(&a.plus(&nf));
        }
        let mut den = F::from_int(n + 1);
        for (index, b) in spec.lower.iter().enumerate() {
            let shifted = b.plus(&nf);
            if shifted.is_zero() {
                return Err(SpecialFunError::InvalidLowerParameter { index, order: n + 1 });
            }
            den = den.times(&shifted);
        }
        c = c.times(&num).divided(&den).expect("nonzero denominator");
        coeffs.push(c.clone());
    }
    Ok(LaurentSeries::new(0, coeffs, order).expect("valuation 0"))
}

/// `(1 - x/root)^exponent` expanded at 0.
pub fn binomial_series<F: Field>(root: &F, exponent: &Rat, order: i64) -> LaurentSeries<F> {
    let step = root.inverse().expect("root must be nonzero");
    let e = F::from_rat(exponent);
    let mut coeffs = Vec::with_capacity(order.max(0) as usize);
    let mut c = F::one();
    for n in 0..order {
        coeffs.push(c.clone());
        // c_{n+1} = c_n (n - e) / (n + 1) / root
        let factor = F::from_int(n).minus(&e).divided(&F::from_int(n + 1)).expect("n+1 > 0");
        c = c.times(&factor).times(&step);
    }
    LaurentSeries::new(0, coeffs, order).expect("valuation 0")
}
