//! Branches `y(x)` of `P(x, y) = 0` at `x = 0` with integer leading exponent,
//! from the Newton polygon and one linear equation per order.

use num_traits::{One, Zero};

use super::registry::CurveRecord;
use super::ModularError;
use crate::exactcore::{rational_roots, BivariatePolynomial, LaurentSeries, Poly, Rat, SeriesError};

/// Extra known terms given to trial series.
const PAD: i64 = 4;

#[derive(Clone, Debug, PartialEq)]
pub enum SkippedBranch {
    /// Edge with non-integer slope: Puiseux branches.
    Puiseux { slope: Rat },
    /// Leading coefficients that are roots of an irreducible factor of this degree.
    IrrationalLeading { valuation: i64, degree: usize },
    /// Repeated leading coefficient whose continuation is not unique.
    Singular { valuation: i64, leading: Rat },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchSet {
    /// Sorted by valuation, then coefficient by coefficient.
    pub branches: Vec<LaurentSeries<Rat>>,
    pub skipped: Vec<SkippedBranch>,
}

impl BranchSet {
    pub fn with_valuation(&self, valuation: i64) -> Vec<&LaurentSeries<Rat>> {
        self.branches.iter().filter(|b| b.valuation() == valuation).collect()
    }

    /// The branch keyed by `(valuation, leading coefficient)`.
    pub fn find(&self, valuation: i64, leading: &Rat) -> Option<&LaurentSeries<Rat>> {
        self.branches.iter().find(|b| b.valuation() == valuation && b.leading() == Some(leading))
    }
}

/// `(x-degree, y-degree, coefficient)` of every term.
fn points(poly: &BivariatePolynomial) -> Vec<(i64, i64, Rat)> {
    poly.triples().into_iter().map(|(c, i, j)| (i as i64, j as i64, c)).collect()
}

/// `min (i + j v)` over the terms.
fn weight(pts: &[(i64, i64, Rat)], v: &Rat) -> Rat {
    pts.iter()
        .map(|(i, j, _)| Rat::from_integer((*i).into()) + v * Rat::from_integer((*j).into()))
        .min()
        .expect("nonzero polynomial")
}

/// Exponents `v` with `y ~ c x^v` balancing at least two terms, ascending.
pub fn newton_slopes(poly: &BivariatePolynomial) -> Vec<Rat> {
    let pts = points(poly);
    let mut slopes: Vec<Rat> = Vec::new();
    for (a, (i1, j1, _)) in pts.iter().enumerate() {
        for (i2, j2, _) in &pts[a + 1..] {
            if j1 == j2 {
                continue;
            }
            let v = Rat::new((i1 - i2).into(), (j2 - j1).into());
            let m = weight(&pts, &v);
            let on_edge = |i: i64, j: i64| Rat::from_integer(i.into()) + &v * Rat::from_integer(j.into()) == m;
            if on_edge(*i1, *j1) && on_edge(*i2, *j2) && !slopes.contains(&v) {
                slopes.push(v);
            }
        }
    }
    slopes.sort();
    slopes
}

pub fn analytic_branches(curve: &CurveRecord, max_order: i64) -> Result<BranchSet, ModularError> {
    branches_of(&curve.poly, max_order)
}

/// Every branch with integer valuation and rational leading coefficient,
/// known through `x^max_order` exclusive.
pub fn branches_of(poly: &BivariatePolynomial, max_order: i64) -> Result<BranchSet, ModularError> {
    let pts = points(poly);
    let mut branches = Vec::new();
    let mut skipped = Vec::new();
    for v in newton_slopes(poly) {
        if !v.is_integer() {
            skipped.push(SkippedBranch::Puiseux { slope: v });
            continue;
        }
        let m = weight(&pts, &v);
        let valuation: i64 = v.to_integer().try_into().expect("small slope");
        let edge_order: i64 = m.to_integer().try_into().expect("small weight");
        let jmax = pts.iter().map(|p| p.1).max().unwrap_or(0) as usize;
        let mut char_coeffs = vec![Rat::zero(); jmax + 1];
        for (i, j, c) in &pts {
            if i + j * valuation == edge_order {
                char_coeffs[*j as usize] = c.clone();
            }
        }
        let low = char_coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let char_poly = Poly::new(char_coeffs[low..].to_vec());
        let roots = rational_roots(&char_poly);
        let rational_degree: usize = roots.iter().map(|(_, k)| k).sum();
        let rest = char_poly.degree().unwrap_or(0) - rational_degree;
        if rest > 0 {
            skipped.push(SkippedBranch::IrrationalLeading { valuation, degree: rest });
        }
        for (leading, _) in roots {
            match lift(poly, valuation, edge_order, &leading, max_order)? {
                Some(branch) => branches.push(branch),
                None => skipped.push(SkippedBranch::Singular { valuation, leading }),
            }
        }
    }
    if branches.is_empty() {
        return Err(ModularError::NoIntegerBranch);
    }
    branches.sort_by(|a, b| a.valuation().cmp(&b.valuation()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(BranchSet { branches, skipped })
}

/// Continues `leading · x^valuation`; `None` when some order has a zero pivot.
fn lift(
    poly: &BivariatePolynomial,
    valuation: i64,
    edge_order: i64,
    leading: &Rat,
    max_order: i64,
) -> Result<Option<LaurentSeries<Rat>>, ModularError> {
    // The coefficient of x^k first enters P(x, y) at x^(k + shift).
    let shift = edge_order - valuation;
    let target = |coeffs: &[Rat], k: i64| -> Result<Rat, ModularError> {
        let y = LaurentSeries::new(valuation, coeffs.to_vec(), k + 1 + PAD)?;
        let value = poly.eval_on_branch(&y)?;
        value.try_coeff(k + shift).ok_or_else(|| {
            SeriesError::InsufficientPrecision { needed: k + shift + 1, available: value.trunc_order() }.into()
        })
    };
    let mut coeffs = vec![leading.clone()];
    for k in valuation + 1..max_order {
        coeffs.push(Rat::zero());
        let r0 = target(&coeffs, k)?;
        *coeffs.last_mut().expect("pushed") = Rat::one();
        let r1 = target(&coeffs, k)?;
        let pivot = &r1 - &r0;
        if pivot.is_zero() {
            return Ok(None);
        }
        *coeffs.last_mut().expect("pushed") = -r0 / pivot;
    }
    Ok(Some(LaurentSeries::new(valuation, coeffs, max_order)?))
}
