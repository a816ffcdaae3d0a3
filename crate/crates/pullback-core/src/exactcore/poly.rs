//! Dense univariate polynomials.

use super::field::{Field, Rat, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial with coefficients stored lowest degree first. The vector never
/// ends in a zero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// Builds from small integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).plus(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).minus(&other.coeff(k))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.negated()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.times(&R::from_int(k as i64))).collect())
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| acc.times(at).plus(c))
    }

    /// Substitutes `inner` for the indeterminate.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| acc.mul(inner).add(&Self::constant(c.clone())))
    }

    /// Reflects the coefficient list: `x^d p(1/x)` with `d` the degree.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders with `var` as the indeterminate and `inner` naming the
    /// coefficient ring's variables.
    pub fn render_with(&self, var: &str, inner: &[&str]) -> String {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            (c.clone(), mono)
        });
        render_terms(terms, inner)
    }
}

/// Joins `coefficient * monomial` terms into a signed sum. An empty
/// monomial stands for the constant term.
pub fn render_terms<R: Ring>(terms: impl Iterator<Item = (R, String)>, inner: &[&str]) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let (negative, body) = split_sign(&c, inner);
        let factor = if is_compound(&body) { format!("({body})") } else { body };
        let term = if mono.is_empty() {
            factor
        } else if factor == "1" {
            mono
        } else {
            format!("{factor}*{mono}")
        };
        match (out.is_empty(), negative) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Splits a rendered coefficient into a sign and a magnitude when the
/// negation is a single product; sums keep their own signs.
fn split_sign<R: Ring>(c: &R, inner: &[&str]) -> (bool, String) {
    let text = c.render(inner);
    if text.starts_with('-') {
        let negated = c.negated().render(inner);
        if !is_compound(&negated) {
            return (true, negated);
        }
    }
    (false, text)
}

fn is_compound(text: &str) -> bool {
    text.contains(" + ") || text.contains(" - ") || (text.starts_with('-') && text.len() > 1)
}

impl<F: Field> Poly<F> {
    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.lead().inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].times(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&c.times(dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient when `d` divides `self`, otherwise `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.lead().inverse() {
            Some(inv) => self.scale(&inv),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl Poly<Rat> {
    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> Poly<BigInt> {
        if self.is_zero() {
            return Poly::zero();
        }
        let lcm = self.coeffs.iter().fold(<BigInt as One>::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(<BigInt as Zero>::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
        Poly::new(ints.into_iter().map(|c| c / &g * BigInt::from(sign)).collect())
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rat(r: &Rat) -> Self {
        assert!(r.is_integer(), "non-integer rational in integer ring");
        r.to_integer()
    }
    fn render(&self, _vars: &[&str]) -> String {
        self.to_string()
    }
}

impl Poly<BigInt> {
    pub fn to_rat(&self) -> Poly<Rat> {
        self.map_coeffs(|c| Rat::from_integer(c.clone()))
    }
}
