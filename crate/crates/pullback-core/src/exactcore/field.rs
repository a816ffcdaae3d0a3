//! Coefficient rings used throughout the kernel.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Rat = BigRational;

/// Builds the rational `n/d`. Panics when `d` is zero.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Builds `n/d` from decimal strings, for constants that overflow `i64`.
pub fn rat_str(n: &str, d: &str) -> Rat {
    let n: BigInt = n.parse().expect("numerator literal");
    let d: BigInt = d.parse().expect("denominator literal");
    Rat::new(n, d)
}

/// Parses `p`, `-p`, `p/q` into a rational. Returns `None` on malformed
/// text or a zero denominator.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if Zero::is_zero(&d) {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Canonical text form: `-31/36`, `5`, `0`.
pub fn format_rat(r: &Rat) -> String {
    if One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    /// Renders the element. `vars` names the formal variables this ring is
    /// built from, outermost first.
    fn render(&self, vars: &[&str]) -> String;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(&int(n))
    }

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.times(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

/// Field: a ring where nonzero elements invert.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;

    fn divided(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }
}

impl Ring for Rat {
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
        r.clone()
    }
    fn render(&self, _vars: &[&str]) -> String {
        format_rat(self)
    }
}

impl Field for Rat {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rat) -> i32 {
    if Zero::is_zero(r) {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}
