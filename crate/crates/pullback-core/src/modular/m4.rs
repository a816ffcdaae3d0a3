//! `M4` from the resultant of `M2(x, z)` and `M2(z, y)` in `z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::registry::{load_curve, CurveRecord, CurveSymmetry};
use super::ModularError;
use crate::exactcore::{BivariatePolynomial, MultiPoly, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct M4Construction {
    pub curve: CurveRecord,
    /// Power of `(x - y)` removed from the resultant.
    pub diagonal_multiplicity: u32,
    /// `resultant = content · (x - y)^multiplicity · M4`.
    pub content: Rat,
}

pub fn build_m4() -> Result<M4Construction, ModularError> {
    let m2 = load_curve("M2")?.poly.0;
    let (x, y, z) = (MultiPoly::<Rat>::var(0), MultiPoly::var(1), MultiPoly::var(2));
    let left = m2.substitute(&[x.clone(), z.clone()]);
    let right = m2.substitute(&[z, y.clone()]);
    let mut quotient = MultiPoly::resultant(&left, &right, 2)?;
    let diagonal = x.sub(&y);
    let mut multiplicity = 0;
    while let Ok(q) = quotient.exact_div(&diagonal) {
        quotient = q;
        multiplicity += 1;
    }
    if multiplicity < 2 {
        return Err(ModularError::FactorizationFailure);
    }
    let mut content = BigInt::zero();
    for (c, _) in quotient.terms() {
        content = content.gcd(&c.to_integer());
    }
    if quotient.terms().last().is_some_and(|(c, _)| c.is_negative()) {
        content = -content;
    }
    let content = Rat::from_integer(content);
    let normalized = quotient.scale(&(Rat::from_integer(1.into()) / &content));
    let curve = CurveRecord::new("M4", BivariatePolynomial(normalized), CurveSymmetry::SWAP)?;
    Ok(M4Construction { curve, diagonal_multiplicity: multiplicity, content })
}
