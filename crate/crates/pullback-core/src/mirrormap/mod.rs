//! Mirror maps between the Hauptmodul `x = 1728/j` and the nome `q`, their
//! use as linearizing coordinates for the Schwarzian families, and the
//! Eisenstein identities they carry.

use thiserror::Error;

use crate::conditions::solver::solve_by_orders;
use crate::conditions::{ConditionError, NamedReport, ResidualReport};
use crate::exactcore::{int, rat, Field, LaurentSeries, Poly, Rat, RatFunc, SeriesError};
use crate::specialfun::{eisenstein, gauss_operator, hyp_series, EisensteinKind, HypergeometricSpec, SpecialFunError};

/// Leading coefficient of `Q(x)`: the nome is `x/1728 + ...` once `x` is
/// the Hauptmodul `1728/j` rather than `1/j`.
pub const NOME_LEADING: i64 = 1728;

/// Terms beyond the requested order used while solving, absorbing the
/// precision lost by the Schwarzian derivative.
const PAD: i64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MirrorError {
    #[error("mirror maps need order at least 4, got {0}")]
    InvalidOrder(i64),
    #[error("isogeny degree must be positive")]
    InvalidDegree,
    #[error(transparent)]
    Condition(#[from] ConditionError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    SpecialFun(#[from] SpecialFunError),
}

/// `W(x) = -(32x² - 41x + 36) / (72 x² (x-1)²)` of `2F1([1/12, 5/12], [1])`.
pub fn hauptmodul_w() -> RatFunc<Rat> {
    gauss_operator(&rat(1, 12), &rat(5, 12), &int(1)).w
}

/// `{Q, x} + (Q'/Q)²/2 + W(x)`.
pub fn nome_residual<F: Field>(
    w: &RatFunc<F>,
    q: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, MirrorError> {
    let log_d = q.derivative().div(q)?;
    let partial = q.schwarzian()?.add(&log_d.square().scale(&F::from_rat(&rat(1, 2))));
    let w_x = LaurentSeries::from_ratfunc(w, partial.trunc_order())?;
    Ok(ResidualReport::new(partial.add(&w_x), order))
}

/// `{X, q} - 1/(2q²) - W(X) X'²`.
pub fn hauptmodul_residual<F: Field>(
    w: &RatFunc<F>,
    x: &LaurentSeries<F>,
    order: i64,
) -> Result<ResidualReport<F>, MirrorError> {
    let d1 = x.derivative();
    let pulled = LaurentSeries::eval_ratfunc(w, x)?.mul(&d1.square());
    let partial = x.schwarzian()?.sub(&pulled);
    let half = LaurentSeries::monomial(F::from_rat(&rat(1, 2)), -2, partial.trunc_order());
    Ok(ResidualReport::new(partial.sub(&half), order))
}

/// The Hauptmodul-to-nome series `Q(x)` and its inverse `X(q)`, both known
/// through `order` exclusive.
#[derive(Clone, Debug, PartialEq)]
pub struct MirrorPair {
    pub nome: LaurentSeries<Rat>,
    pub hauptmodul: LaurentSeries<Rat>,
    pub order: i64,
}

impl MirrorPair {
    /// `Q̃(x) = Q(1728 x)`, the integer series in `1/j`.
    pub fn nome_integer_form(&self) -> LaurentSeries<Rat> {
        rescale(&self.nome, &int(NOME_LEADING))
    }

    /// `X̃(q) = X(q)/1728`.
    pub fn hauptmodul_integer_form(&self) -> LaurentSeries<Rat> {
        self.hauptmodul.scale(&rat(1, NOME_LEADING))
    }
}

/// `s(c x)`.
fn rescale(s: &LaurentSeries<Rat>, c: &Rat) -> LaurentSeries<Rat> {
    let mut power = int(1);
    for _ in 0..s.valuation() {
        power *= c;
    }
    let coeffs = s
        .coeffs()
        .iter()
        .map(|a| {
            let out = a * &power;
            power *= c;
            out
        })
        .collect();
    LaurentSeries::new(s.valuation(), coeffs, s.trunc_order()).expect("same support")
}

/// Solves the nome equation order by order from `Q = x/1728 + ...`, then
/// reverts. `c_n` first enters the residual at `x^(n-3)` with pivot
/// `1728 (n-1)³`.
pub fn solve_nome(order: i64) -> Result<MirrorPair, MirrorError> {
    if order < 4 {
        return Err(MirrorError::InvalidOrder(order));
    }
    let w = hauptmodul_w();
    let nome = solve_by_orders(&rat(1, NOME_LEADING), 1, -3, order + PAD, |q| {
        Ok(nome_residual(&w, q, i64::MAX)
            .map_err(|e| match e {
                MirrorError::Condition(c) => c,
                MirrorError::Series(s) => ConditionError::Series(s),
                other => ConditionError::NoSolution { reason: other.to_string() },
            })?
            .residual)
    })?;
    let hauptmodul = nome.reverse()?;
    Ok(MirrorPair { nome: nome.truncate(order), hauptmodul: hauptmodul.truncate(order), order })
}

/// `X(e · Q(x)^N)`, the Schwarzian family member obtained from `q → e q^N`.
pub fn isogeny_decompose<F: Field>(
    pair: &MirrorPair,
    degree: u32,
    e: &F,
    order: i64,
) -> Result<LaurentSeries<F>, MirrorError> {
    if degree == 0 {
        return Err(MirrorError::InvalidDegree);
    }
    let lift = |s: &LaurentSeries<Rat>| s.map_coeffs(F::from_rat);
    let inner = lift(&pair.nome).pow(degree as i64)?.scale(e);
    Ok(lift(&pair.hauptmodul).compose(&inner)?.truncate(order))
}

fn named(name: &str, residual: LaurentSeries<Rat>, order: i64) -> NamedReport<Rat> {
    NamedReport { name: name.into(), report: ResidualReport::new(residual, order) }
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc<Rat> {
    RatFunc::frac(Poly::from_ints(num), Poly::from_ints(den))
}

/// Eisenstein identities, in the nome `q` and in `t = k²`:
/// `E4 = F(X(q))⁴`, `E6² = E4³ (1 - X(q))`,
/// `F(H(t))⁴ = (1-t+t²) K(t)⁴`, `F(H(t))¹² = (1-t+t²)³ K(t)¹²`, and
/// `(E4³ - E6²)/E4³ = H(t)` for `E4 = (1-t+t²)K⁴`, `E6 = (1+t)(1-2t)(1-t/2)K⁶`,
/// with `F = 2F1([1/12,5/12],[1])`, `K = 2F1([1/2,1/2],[1])` and
/// `H(t) = 27t²(1-t)²/(4(t²-t+1)³)`.
pub fn eisenstein_identity_suite(pair: &MirrorPair, order: i64) -> Result<Vec<NamedReport<Rat>>, MirrorError> {
    let f = hyp_series(&HypergeometricSpec::gauss(rat(1, 12), rat(5, 12), int(1)), order)?;
    let k = hyp_series(&HypergeometricSpec::gauss(rat(1, 2), rat(1, 2), int(1)), order)?;
    let e4 = eisenstein(EisensteinKind::E4, order);
    let e6 = eisenstein(EisensteinKind::E6, order);
    let x = pair.hauptmodul.truncate(order);

    let e4_nome = f.compose(&x)?.pow(4)?.sub(&e4);
    let e6_nome = e6.square().sub(&e4.pow(3)?.mul(&x.neg().add_scalar(&int(1))));

    let cubic = rf(&[1, -1, 1], &[1]);
    let h = rf(&[0, 0, 27, -54, 27], &[4, -12, 24, -28, 24, -12, 4]);
    let h_series = LaurentSeries::from_ratfunc(&h, order)?;
    let cubic_series = LaurentSeries::from_ratfunc(&cubic, order)?;
    let f_h = f.compose(&h_series)?;
    let k4 = k.pow(4)?;
    let e4_modulus = f_h.pow(4)?.sub(&cubic_series.mul(&k4));
    let e6_modulus = f_h.pow(12)?.sub(&cubic_series.pow(3)?.mul(&k4.pow(3)?));

    // (1+t)(1-2t)(1-t/2) = (1+t)(1-2t)(2-t)/2
    let b = rf(&[2, -3, -3, 2], &[2]);
    let from_e4_e6 = RatFunc::constant(int(1)).sub(&b.mul(&b).div(&cubic.mul(&cubic).mul(&cubic)).expect("nonzero"));
    let hauptmodul = LaurentSeries::from_ratfunc(&from_e4_e6.sub(&h), order)?;

    Ok(vec![
        named("e4_nome", e4_nome, order),
        named("e6_nome", e6_nome, order),
        named("e4_modulus", e4_modulus, order),
        named("e6_modulus", e6_modulus, order),
        named("hauptmodul_from_e4_e6", hauptmodul, order),
    ])
}
