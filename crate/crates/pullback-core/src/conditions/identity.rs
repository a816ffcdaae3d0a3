//! The prefactor identities `A(x)·F(x) = F(y(x))` of the Calabi-Yau ₄F₃ and
//! the confluent ₂F₂. Both `W` have `w_-2 = -1/2`, so the Schwarzian condition
//! alone admits formal `a·x^N` families; the prefactor identity removes them.

use super::solver::solve_schwarzian_family_symbolic;
use super::ConditionError;
use crate::exactcore::{int, lift_series, rat, rational_roots, Field, LaurentSeries, Poly, Rat, RatFunc, Ring};
use crate::specialfun::{hyp_series, w_2f2, w_4f3, HypergeometricSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HigherFamily {
    /// `4F3([1/2,1/2,1/2,1/2], [1,1,1])`.
    FourFThree,
    /// `2F2([1/2,1/2], [1,1])`.
    TwoFTwo,
}

/// What the identity leaves of a one-parameter Schwarzian family.
#[derive(Clone, Debug, PartialEq)]
pub enum IdentityOutcome {
    /// Only these nonzero parameter values survive.
    Admissible(Vec<Rat>),
    /// The identity imposes nothing through the working order.
    Unconstrained,
}

impl HigherFamily {
    pub fn w(&self) -> RatFunc<Rat> {
        match self {
            HigherFamily::FourFThree => w_4f3(),
            HigherFamily::TwoFTwo => w_2f2(),
        }
    }

    pub fn hypergeometric(&self) -> HypergeometricSpec<Rat> {
        let half = rat(1, 2);
        match self {
            HigherFamily::FourFThree => HypergeometricSpec::new(vec![half; 4], vec![int(1); 3]),
            HigherFamily::TwoFTwo => HypergeometricSpec::new(vec![half; 2], vec![int(1); 2]),
        }
    }

    /// ₄F₃: `(1-y) y^3 F(x)^2 - (1-x) x^3 y'^3 F(y)^2`;
    /// ₂F₂: `exp((x-y)/3) y F(x) - x y' F(y)`.
    pub fn identity_residual<F: Field>(
        &self,
        y: &LaurentSeries<F>,
        f: &LaurentSeries<F>,
    ) -> Result<LaurentSeries<F>, ConditionError> {
        let t = y.trunc_order();
        let x = LaurentSeries::x(t + 4);
        let d1 = y.derivative();
        let f_y = f.compose(y)?;
        let one = F::one();
        Ok(match self {
            HigherFamily::FourFThree => {
                let lhs = y.neg().add_scalar(&one).mul(&y.pow(3)?).mul(&f.square());
                let rhs = x.neg().add_scalar(&one).mul(&x.pow(3)?).mul(&d1.pow(3)?).mul(&f_y.square());
                lhs.sub(&rhs)
            }
            HigherFamily::TwoFTwo => {
                let third = F::from_rat(&rat(1, 3));
                let prefactor = x.sub(y).scale(&third).exp()?;
                prefactor.mul(y).mul(f).sub(&x.mul(&d1).mul(&f_y))
            }
        })
    }
}

/// Solves the Schwarzian family `a·x^N + ...` for the family's `W`, then asks
/// which nonzero `a` also satisfy the prefactor identity through `order`.
pub fn solve_identity_family(
    family: HigherFamily,
    exponent: u32,
    order: i64,
) -> Result<IdentityOutcome, ConditionError> {
    let y = solve_schwarzian_family_symbolic(&family.w(), exponent, order)?;
    let f = lift_series(&hyp_series(&family.hypergeometric(), order + 4).expect("valid parameters"));
    let residual = family.identity_residual(&y, &f)?;
    let mut common: Option<Poly<Rat>> = None;
    for c in residual.coeffs() {
        if Ring::is_zero(c) {
            continue;
        }
        let num = c.num();
        let skip = num.coeffs().iter().take_while(|k| Ring::is_zero(*k)).count();
        let stripped = Poly::new(num.coeffs()[skip..].to_vec());
        common = Some(match common {
            None => stripped.monic(),
            Some(g) => g.gcd(&stripped),
        });
    }
    let Some(common) = common else {
        return Ok(IdentityOutcome::Unconstrained);
    };
    let roots: Vec<Rat> = rational_roots(&common).into_iter().map(|(r, _)| r).collect();
    if roots.is_empty() {
        return Err(ConditionError::NoSolution {
            reason: format!("prefactor identity admits no nonzero parameter for N = {exponent}"),
        });
    }
    Ok(IdentityOutcome::Admissible(roots))
}
