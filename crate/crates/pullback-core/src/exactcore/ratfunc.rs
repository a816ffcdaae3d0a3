//! Rational functions in one variable over a field.

use super::field::{Field, Rat, Ring};
use super::poly::Poly;

/// Reduced fraction `num/den` with a monic denominator, so equality is
/// structural.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// Rational function over the rationals, the coefficient field of the
/// one-parameter families.
pub type RationalFunction = RatFunc<Rat>;

impl<F: Field> RatFunc<F> {
    /// Reduces `num/den`. Returns `None` when `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc { num, den: Poly::one() });
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let inv = den.lead().inverse().expect("nonzero lead");
        Some(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    /// Like [`RatFunc::new`] for denominators known to be nonzero.
    pub fn frac(num: Poly<F>, den: Poly<F>) -> Self {
        Self::new(num, den).expect("zero denominator")
    }

    /// `num/den` for a pair the caller knows to be coprime; only the
    /// denominator is made monic.
    pub fn from_coprime(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        let inv = den.lead().inverse()?;
        if num.is_zero() {
            return Some(Self::zero());
        }
        Some(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The constant value when the function does not depend on its variable.
    pub fn as_constant(&self) -> Option<F> {
        (self.is_polynomial() && self.num.degree().unwrap_or(0) == 0).then(|| self.num.coeff(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::frac(self.num.add(&other.num), self.den.clone());
        }
        Self::frac(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::frac(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::frac(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, n: i32) -> Option<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs();
        Some(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn derivative(&self) -> Self {
        Self::frac(
            self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, at: &F) -> Option<F> {
        self.num.eval(at).divided(&self.den.eval(at))
    }

    /// Substitutes the rational function `inner` for the variable.
    pub fn compose(&self, inner: &Self) -> Option<Self> {
        let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let homogenize = |p: &Poly<F>| -> Poly<F> {
            let mut acc = Poly::zero();
            for (k, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = inner.num.pow(k as u32).mul(&inner.den.pow((d - k) as u32)).scale(c);
                acc = acc.add(&term);
            }
            acc
        };
        Self::new(homogenize(&self.num), homogenize(&self.den))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::frac(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }

    /// Renders with `var` for the variable and `inner` for the coefficient
    /// field's variables.
    pub fn render_with(&self, var: &str, inner: &[&str]) -> String {
        let num = self.num.render_with(var, inner);
        if self.is_polynomial() {
            return num;
        }
        let den = self.den.render_with(var, inner);
        let wrap = |t: String| {
            if t.contains(' ') || t.contains('*') || t.contains('/') || t.starts_with('-') {
                format!("({t})")
            } else {
                t
            }
        };
        format!("{}/{}", wrap(num), wrap(den))
    }
}

impl<F: Field> Ring for RatFunc<F> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn from_rat(r: &Rat) -> Self {
        Self::constant(F::from_rat(r))
    }
    fn render(&self, vars: &[&str]) -> String {
        let (var, inner) = vars.split_first().map(|(v, rest)| (*v, rest)).unwrap_or(("t", &[]));
        self.render_with(var, inner)
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

impl RationalFunction {
    /// Builds from integer coefficient lists, lowest degree first.
    pub fn from_int_lists(num: &[i64], den: &[i64]) -> Self {
        Self::frac(Poly::from_ints(num), Poly::from_ints(den))
    }
}
