//! Truncated Laurent series with explicit precision.

use super::error::SeriesError;
use super::field::{Field, Rat};
use super::poly::{render_terms, Poly};
use super::ratfunc::RatFunc;

/// Lowest valuation any constructed or derived series may carry.
pub const MIN_VALUATION: i64 = -64;

/// `Σ coeffs[i] x^(valuation+i) + O(x^trunc_order)`.
///
/// A nonzero series has a nonzero first coefficient. The zero series has no
/// stored coefficients and reports `valuation == trunc_order`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<F> {
    valuation: i64,
    coeffs: Vec<F>,
    trunc_order: i64,
}

/// Series whose coefficients are rational functions of one parameter.
pub type ParamSeries<F = Rat> = LaurentSeries<RatFunc<F>>;

/// Outcome of comparing two series up to their common precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Agreement {
    /// Exponent of the first term not known for both series.
    pub order: i64,
    /// First exponent below `order` where the coefficients differ.
    pub first_difference: Option<i64>,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.first_difference.is_none()
    }
}

fn check_floor(valuation: i64) -> Result<(), SeriesError> {
    if valuation < MIN_VALUATION {
        Err(SeriesError::ValuationBelowFloor { valuation, floor: MIN_VALUATION })
    } else {
        Ok(())
    }
}

impl<F: Field> LaurentSeries<F> {
    /// Builds a series, dropping leading zeros and coefficients at or beyond
    /// `trunc_order`.
    pub fn new(valuation: i64, coeffs: Vec<F>, trunc_order: i64) -> Result<Self, SeriesError> {
        let s = Self::raw(valuation, coeffs, trunc_order);
        if !s.is_zero() {
            check_floor(s.valuation)?;
        }
        Ok(s)
    }

    fn raw(valuation: i64, mut coeffs: Vec<F>, trunc_order: i64) -> Self {
        let keep = (trunc_order - valuation).max(0) as usize;
        coeffs.truncate(keep);
        match coeffs.iter().position(|c| !c.is_zero()) {
            None => Self::zero(trunc_order),
            Some(skip) => {
                coeffs.drain(..skip);
                while coeffs.last().is_some_and(|c| c.is_zero()) {
                    coeffs.pop();
                }
                LaurentSeries { valuation: valuation + skip as i64, coeffs, trunc_order }
            }
        }
    }

    pub fn zero(trunc_order: i64) -> Self {
        LaurentSeries { valuation: trunc_order, coeffs: Vec::new(), trunc_order }
    }

    pub fn constant(c: F, trunc_order: i64) -> Self {
        Self::raw(0, vec![c], trunc_order)
    }

    pub fn monomial(c: F, exponent: i64, trunc_order: i64) -> Self {
        Self::raw(exponent, vec![c], trunc_order)
    }

    /// The series `x`.
    pub fn x(trunc_order: i64) -> Self {
        Self::monomial(F::one(), 1, trunc_order)
    }

    pub fn from_poly(p: &Poly<F>, trunc_order: i64) -> Self {
        Self::raw(0, p.coeffs().to_vec(), trunc_order)
    }

    /// Laurent expansion at 0 of a rational function.
    pub fn from_ratfunc(r: &RatFunc<F>, trunc_order: i64) -> Result<Self, SeriesError> {
        let low = r.den().low_degree().unwrap_or(0) as i64;
        let den = Self::from_poly(r.den(), (trunc_order + 2 * low).max(low + 1));
        let num = Self::from_poly(r.num(), trunc_order + low);
        Ok(num.div(&den)?.truncate(trunc_order))
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    /// Stored coefficients starting at the valuation.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of known coefficients from the valuation up to the truncation.
    pub fn known_terms(&self) -> i64 {
        self.trunc_order - self.valuation
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.first()
    }

    /// Coefficient of `x^k`. Panics when `k` is at or beyond the truncation
    /// order, since that coefficient is unknown.
    pub fn coeff(&self, k: i64) -> F {
        assert!(k < self.trunc_order, "coefficient x^{k} unknown (O(x^{}))", self.trunc_order);
        self.get(k)
    }

    /// Coefficient of `x^k`, or `None` when it is beyond the truncation.
    pub fn try_coeff(&self, k: i64) -> Option<F> {
        (k < self.trunc_order).then(|| self.get(k))
    }

    fn get(&self, k: i64) -> F {
        if k < self.valuation {
            return F::zero();
        }
        self.coeffs.get((k - self.valuation) as usize).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficients of `x^from .. x^to` (exclusive), zeros included.
    pub fn window(&self, from: i64, to: i64) -> Vec<F> {
        (from..to).map(|k| self.coeff(k)).collect()
    }

    /// Drops all information at or beyond `order`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.trunc_order {
            return self.clone();
        }
        Self::raw(self.valuation, self.coeffs.clone(), order)
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| c.negated()).collect(),
            trunc_order: self.trunc_order,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.trunc_order.min(other.trunc_order);
        let v = self.valuation.min(other.valuation);
        if t <= v {
            return Self::zero(t);
        }
        let coeffs = (v..t).map(|k| self.get(k).plus(&other.get(k))).collect();
        Self::raw(v, coeffs, t)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::raw(self.valuation, self.coeffs.iter().map(|a| a.times(c)).collect(), self.trunc_order)
    }

    /// Adds a constant without changing the precision.
    pub fn add_scalar(&self, c: &F) -> Self {
        self.add(&Self::constant(c.clone(), self.trunc_order))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { valuation: self.valuation + k, coeffs: self.coeffs.clone(), trunc_order: self.trunc_order + k }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = (self.trunc_order + other.valuation).min(other.trunc_order + self.valuation);
        if self.is_zero() || other.is_zero() {
            return Self::zero(t);
        }
        let v = self.valuation + other.valuation;
        let n = (t - v).max(0) as usize;
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::raw(v, out, t)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Multiplicative inverse; the result has valuation `-valuation`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries { known_to: self.trunc_order });
        }
        let n = self.known_terms() as usize;
        let inv0 = self.coeffs[0].inverse().expect("nonzero leading coefficient");
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                acc = acc.plus(&self.coeffs[j].times(&out[k - j]));
            }
            out.push(acc.times(&inv0).negated());
        }
        let v = -self.valuation;
        check_floor(v)?;
        Ok(Self::raw(v, out, v + n as i64))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let q = self.mul(&other.inverse()?);
        if !q.is_zero() {
            check_floor(q.valuation)?;
        }
        Ok(q)
    }

    pub fn pow(&self, n: i64) -> Result<Self, SeriesError> {
        if n == 0 {
            return Ok(Self::constant(F::one(), self.trunc_order.max(1)));
        }
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc: Option<Self> = None;
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq),
                });
            }
            k >>= 1;
            if k > 0 {
                sq = sq.square();
            }
        }
        let acc = acc.expect("n != 0");
        if !acc.is_zero() {
            check_floor(acc.valuation)?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let coeffs =
            self.coeffs.iter().enumerate().map(|(i, c)| c.times(&F::from_int(self.valuation + i as i64))).collect();
        Self::raw(self.valuation - 1, coeffs, self.trunc_order - 1)
    }

    /// Substitutes `inner` (valuation at least 1) for the variable.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let vg = inner.valuation;
        if vg < 1 {
            return Err(SeriesError::InvalidInnerValuation { valuation: vg });
        }
        let target = self.trunc_order.saturating_mul(vg);
        let mut acc = Self::zero(target);
        if self.is_zero() {
            return Ok(acc);
        }
        let top = self.valuation + self.coeffs.len() as i64;
        let mut power = Self::constant(F::one(), target);
        for k in self.valuation..top {
            if k * vg >= target {
                break;
            }
            power = match k {
                0 => Self::constant(F::one(), target),
                _ if k == self.valuation => inner.pow(k)?.truncate(target),
                _ => power.mul(inner).truncate(target),
            };
            let c = self.get(k);
            if !c.is_zero() {
                acc = acc.add(&power.scale(&c));
            }
        }
        if !acc.is_zero() {
            check_floor(acc.valuation)?;
        }
        Ok(acc)
    }

    /// `exp` of a series with positive valuation, from `E' = f' E`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.is_zero() && self.valuation < 1 {
            return Err(SeriesError::InvalidInnerValuation { valuation: self.valuation });
        }
        let t = self.trunc_order.max(1);
        let n = t as usize;
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(F::one());
        for m in 1..n {
            let mut acc = F::zero();
            for k in 1..=m {
                let fk = self.get(k as i64);
                if !fk.is_zero() {
                    acc = acc.plus(&fk.times(&F::from_int(k as i64)).times(&out[m - k]));
                }
            }
            out.push(acc.divided(&F::from_int(m as i64)).expect("m > 0"));
        }
        Ok(Self::raw(0, out, t))
    }

    /// Composition inverse of a valuation-one series, by Lagrange inversion.
    pub fn reverse(&self) -> Result<Self, SeriesError> {
        if self.is_zero() || self.valuation != 1 {
            return Err(SeriesError::NotReversible { valuation: self.valuation });
        }
        let t = self.trunc_order;
        let phi = self.shift(-1).inverse()?;
        let rel = (t - 1) as usize;
        let mut coeffs = vec![F::zero(); rel];
        let mut power = Self::constant(F::one(), rel as i64);
        for n in 1..t {
            power = power.mul(&phi).truncate(rel as i64);
            let c = power.get(n - 1).times(&F::from_int(n).inverse().expect("n > 0"));
            coeffs[(n - 1) as usize] = c;
        }
        Ok(Self::raw(1, coeffs, t))
    }

    /// `y'''/y' - (3/2)(y''/y')^2`.
    pub fn schwarzian(&self) -> Result<Self, SeriesError> {
        let available = if self.is_zero() { 0 } else { self.known_terms() };
        if available < 4 {
            return Err(SeriesError::InsufficientPrecision { needed: 4, available });
        }
        let d1 = self.derivative();
        let d2 = d1.derivative();
        let d3 = d2.derivative();
        let r2 = d2.div(&d1)?;
        let r3 = d3.div(&d1)?;
        Ok(r3.sub(&r2.square().scale(&F::from_rat(&Rat::new(3.into(), 2.into())))))
    }

    /// Value of the polynomial `p` at this series.
    pub fn eval_poly(p: &Poly<F>, at: &Self) -> Self {
        let Some(d) = p.degree() else {
            return Self::zero(at.trunc_order.max(1));
        };
        let cs = p.coeffs();
        if d == 0 {
            return Self::constant(cs[0].clone(), at.trunc_order.max(1));
        }
        let mut acc = at.scale(&cs[d]);
        for k in (0..d).rev() {
            acc = acc.add_scalar(&cs[k]);
            if k > 0 {
                acc = acc.mul(at);
            }
        }
        acc
    }

    /// Value of the rational function `r` at this series.
    pub fn eval_ratfunc(r: &RatFunc<F>, at: &Self) -> Result<Self, SeriesError> {
        Self::eval_poly(r.num(), at).div(&Self::eval_poly(r.den(), at))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentSeries<G> {
        LaurentSeries::raw(self.valuation, self.coeffs.iter().map(f).collect(), self.trunc_order)
    }

    /// Fallible coefficient map, reporting the exponent of the first failure.
    pub fn try_map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Result<LaurentSeries<G>, i64> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(f(c).ok_or(self.valuation + i as i64)?);
        }
        Ok(LaurentSeries::raw(self.valuation, out, self.trunc_order))
    }

    /// Compares coefficients up to the common truncation order.
    pub fn agreement(&self, other: &Self) -> Agreement {
        let order = self.trunc_order.min(other.trunc_order);
        let start = self.valuation.min(other.valuation);
        let first_difference = (start..order).find(|&k| self.get(k) != other.get(k));
        Agreement { order, first_difference }
    }

    /// True when all known coefficients below `order` vanish and the series
    /// is known at least that far.
    pub fn vanishes_through(&self, order: i64) -> bool {
        self.trunc_order >= order && (self.is_zero() || self.valuation >= order)
    }

    /// Renders as `c*x^k + ... + O(x^t)`.
    pub fn render_with(&self, var: &str, inner: &[&str]) -> String {
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
            let k = self.valuation + i as i64;
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            (c.clone(), mono)
        });
        let body = render_terms(terms, inner);
        let tail = format!("O({var}^{})", self.trunc_order);
        if self.is_zero() {
            tail
        } else {
            format!("{body} + {tail}")
        }
    }
}

/// Evaluates every coefficient of a parameter series at `value`.
pub fn param_specialize<F: Field>(series: &ParamSeries<F>, value: &F) -> Result<LaurentSeries<F>, SeriesError> {
    series.try_map_coeffs(|c| c.eval(value)).map_err(|order| SeriesError::ParameterPole { order })
}

/// Lifts a series into the parameter field as constant coefficients.
pub fn lift_series<F: Field>(s: &LaurentSeries<F>) -> ParamSeries<F> {
    s.map_coeffs(|c| RatFunc::constant(c.clone()))
}
