//! Rational parametrizations of the curves and the hypergeometric identities
//! attached to them.

use super::branches::branches_of;
use super::registry::load_curve;
use super::ModularError;
use crate::conditions::ResidualReport;
use crate::exactcore::{int, rat, BivariatePolynomial, LaurentSeries, MultiPoly, Poly, Rat, RatFunc, Ring};
use crate::specialfun::{hyp_series, HypergeometricSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParametrizationKind {
    /// `x = 1728/j(k)`, `y = 1728/j(k_L)` on `M2`.
    LandenM2,
    /// Legendre's quartic in `(k, λ)` pushed to `M3`.
    LegendreM3,
    /// `x(v)`, `y(v)` on the genus-zero sextic.
    Genus2Sextic,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParametrizationResidual {
    Rational(RatFunc<Rat>),
    Series(ResidualReport<Rat>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParametrizationReport {
    pub kind: ParametrizationKind,
    pub residual: ParametrizationResidual,
}

impl ParametrizationReport {
    pub fn is_zero(&self) -> bool {
        match &self.residual {
            ParametrizationResidual::Rational(r) => Ring::is_zero(r),
            ParametrizationResidual::Series(report) => report.is_zero,
        }
    }
}

fn poly(coeffs: &[i64]) -> Poly<Rat> {
    Poly::from_ints(coeffs)
}

/// `27 k^4 (1-k^2)^2 / (4 (k^4-k^2+1)^3)`, which is `1728/j(k)`.
fn hauptmodul() -> RatFunc<Rat> {
    let num = poly(&[0, 0, 0, 0, 27]).mul(&poly(&[1, 0, -1]).pow(2));
    let den = poly(&[1, 0, -1, 0, 1]).pow(3).scale(&int(4));
    RatFunc::frac(num, den)
}

/// `(1728/j(k), 1728/j(k_L))` with `1728/j(k_L) = 108 k^2 (1-k^2)^4 / (1+14k^2+k^4)^3`.
pub fn landen_hauptmoduls() -> (RatFunc<Rat>, RatFunc<Rat>) {
    let num = poly(&[0, 0, 108]).mul(&poly(&[1, 0, -1]).pow(4));
    let den = poly(&[1, 0, 14, 0, 1]).pow(3);
    (hauptmodul(), RatFunc::frac(num, den))
}

/// `x = v(1+3v)/(1-v)` and `y = -27 v (1-v)(1+v)^4 / ((1+3v)(1-3v)^4)`.
pub fn genus2_pullbacks() -> (RatFunc<Rat>, RatFunc<Rat>) {
    let px = RatFunc::frac(poly(&[0, 1, 3]), poly(&[1, -1]));
    let num = poly(&[0, -27, 27]).mul(&poly(&[1, 1]).pow(4));
    let den = poly(&[1, 3]).mul(&poly(&[1, -3]).pow(4));
    (px, RatFunc::frac(num, den))
}

fn substitute_rational(curve: &BivariatePolynomial, x: &RatFunc<Rat>, y: &RatFunc<Rat>) -> RatFunc<Rat> {
    curve.0.map_coeffs(|c| RatFunc::constant(c.clone())).eval(&[x.clone(), y.clone()])
}

/// `P(X(t), Y(t))` for two series.
fn substitute_series(
    curve: &BivariatePolynomial,
    x: &LaurentSeries<Rat>,
    y: &LaurentSeries<Rat>,
) -> Result<LaurentSeries<Rat>, ModularError> {
    let lifted: MultiPoly<Rat> = curve.0.clone();
    let mut acc: Option<LaurentSeries<Rat>> = None;
    for (c, m) in lifted.terms() {
        let i = m.first().copied().unwrap_or(0) as i64;
        let j = m.get(1).copied().unwrap_or(0) as i64;
        let term = x.pow(i)?.mul(&y.pow(j)?).scale(c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    Ok(acc.unwrap_or_else(|| LaurentSeries::zero(x.trunc_order())))
}

/// Legendre's modular equation of order three in `(k, λ)`.
fn legendre_quartic() -> BivariatePolynomial {
    let t = |c: i64, i: u32, j: u32| (c.into(), i, j);
    BivariatePolynomial::from_triples(&[
        t(1, 4, 0),
        t(12, 3, 1),
        t(6, 2, 2),
        t(12, 1, 3),
        t(1, 0, 4),
        t(-16, 3, 3),
        t(-16, 1, 1),
    ])
}

/// Substitutes a rational parametrization into its curve. The Legendre case
/// is a series check in `t = k` through `t^order` exclusive.
pub fn verify_parametrization(kind: ParametrizationKind, order: i64) -> Result<ParametrizationReport, ModularError> {
    let residual = match kind {
        ParametrizationKind::LandenM2 => {
            let (x, y) = landen_hauptmoduls();
            ParametrizationResidual::Rational(substitute_rational(&load_curve("M2")?.poly, &x, &y))
        }
        ParametrizationKind::Genus2Sextic => {
            let (x, y) = genus2_pullbacks();
            ParametrizationResidual::Rational(substitute_rational(&load_curve("genus2_sextic")?.poly, &x, &y))
        }
        ParametrizationKind::LegendreM3 => {
            let work = order + 8;
            let lambda = branches_of(&legendre_quartic(), work)?
                .find(3, &rat(1, 16))
                .cloned()
                .ok_or(ModularError::NoIntegerBranch)?;
            let h = hauptmodul();
            let x = LaurentSeries::from_ratfunc(&h, work)?;
            let y = LaurentSeries::eval_ratfunc(&h, &lambda)?;
            let value = substitute_series(&load_curve("M3")?.poly, &x, &y)?;
            ParametrizationResidual::Series(ResidualReport::new(value, order))
        }
    };
    Ok(ParametrizationReport { kind, residual })
}

fn gauss(a: Rat, b: Rat, c: Rat, order: i64) -> LaurentSeries<Rat> {
    hyp_series(&HypergeometricSpec::gauss(a, b, c), order).expect("positive lower parameter")
}

/// `𝒜 = 2F1([1/12,5/12],[1], y) / 2F1([1/12,5/12],[1], x)` along the
/// analytic `M2` branch.
pub fn cal_a_series(order: i64) -> Result<LaurentSeries<Rat>, ModularError> {
    let branch = branches_of(&load_curve("M2")?.poly, order + 2)?
        .find(2, &rat(1, 1728))
        .cloned()
        .ok_or(ModularError::NoIntegerBranch)?;
    let f = gauss(rat(1, 12), rat(5, 12), int(1), order);
    Ok(f.compose(&branch)?.div(&f)?)
}

/// `1024 𝒜^12 - 1152 𝒜^8 + 132 𝒜^4 + 125 x - 4`.
pub fn verify_cal_a(order: i64) -> Result<ResidualReport<Rat>, ModularError> {
    let a = cal_a_series(order)?;
    let a4 = a.pow(4)?;
    let a8 = a4.square();
    let residual = a8
        .mul(&a4)
        .scale(&int(1024))
        .sub(&a8.scale(&int(1152)))
        .add(&a4.scale(&int(132)))
        .add(&LaurentSeries::monomial(int(125), 1, order))
        .add_scalar(&int(-4));
    Ok(ResidualReport::new(residual, order))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Genus2Report {
    /// `H(p_y)^6 (1-v)^2 (1+v)^4 - (1+3v)^2 (1-3v)^4 H(p_x)^6` in `v`.
    pub identity: ResidualReport<Rat>,
    /// `(1-x)^2 (H + 6xH')^6 - 1`, i.e. `u^6 = (1-x)^2 x^5` for `u = 1/(6Y')`.
    pub curve_relation: ResidualReport<Rat>,
    /// `y_1 · y_2 - 1` for the analytic and Laurent branches of the sextic.
    pub reciprocal_branches: ResidualReport<Rat>,
}

impl Genus2Report {
    pub fn is_zero(&self) -> bool {
        self.identity.is_zero && self.curve_relation.is_zero && self.reciprocal_branches.is_zero
    }
}

/// Checks with `H = 2F1([1/6,1/3],[7/6])`.
pub fn genus2_identity_check(order: i64) -> Result<Genus2Report, ModularError> {
    let h = gauss(rat(1, 6), rat(1, 3), rat(7, 6), order);
    let (px, py) = genus2_pullbacks();
    let px = LaurentSeries::from_ratfunc(&px, order)?;
    let py = LaurentSeries::from_ratfunc(&py, order)?;
    let series = |p: Poly<Rat>| LaurentSeries::from_poly(&p, order);
    let lhs = h.compose(&py)?.pow(6)?.mul(&series(poly(&[1, -1]).pow(2).mul(&poly(&[1, 1]).pow(4))));
    let rhs = h.compose(&px)?.pow(6)?.mul(&series(poly(&[1, 3]).pow(2).mul(&poly(&[1, -3]).pow(4))));
    let identity = ResidualReport::new(lhs.sub(&rhs), order);

    let x = LaurentSeries::x(order);
    let six_y_prime = h.add(&x.mul(&h.derivative()).scale(&int(6)));
    let relation = six_y_prime.pow(6)?.mul(&series(poly(&[1, -1]).pow(2))).add_scalar(&int(-1));
    let curve_relation = ResidualReport::new(relation, order);

    let branches = branches_of(&load_curve("genus2_sextic")?.poly, order + 1)?;
    let y1 = branches.find(1, &int(-27)).ok_or(ModularError::NoIntegerBranch)?;
    let y2 = branches.find(-1, &rat(-1, 27)).ok_or(ModularError::NoIntegerBranch)?;
    let reciprocal_branches = ResidualReport::new(y1.mul(y2).add_scalar(&int(-1)), order);

    Ok(Genus2Report { identity, curve_relation, reciprocal_branches })
}
