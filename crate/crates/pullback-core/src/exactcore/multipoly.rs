//! Sparse multivariate polynomials, bivariate curves and resultants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use super::error::{PolyError, SeriesError};
use super::field::{Field, Rat, Ring};
use super::poly::{render_terms, Poly};
use super::series::LaurentSeries;

/// Exponent vector with trailing zeros removed, so the derived ordering is
/// the lexicographic monomial order with variable 0 most significant.
type Monomial = Vec<u32>;

fn trimmed(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn exp(m: &Monomial, var: usize) -> u32 {
    m.get(var).copied().unwrap_or(0)
}

/// Polynomial in any number of variables; no zero coefficients stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<R> {
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::term(c, &[])
    }

    /// The variable with index `var`.
    pub fn var(var: usize) -> Self {
        let mut e = vec![0; var + 1];
        e[var] = 1;
        Self::term(R::one(), &e)
    }

    pub fn term(c: R, exponents: &[u32]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trimmed(exponents.to_vec()), c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(list: impl IntoIterator<Item = (R, Vec<u32>)>) -> Self {
        let mut p = Self::zero();
        for (c, e) in list {
            p.add_term(trimmed(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as (coefficient, exponent vector) in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&R, &[u32])> {
        self.terms.iter().map(|(m, c)| (c, m.as_slice()))
    }

    pub fn coeff(&self, exponents: &[u32]) -> R {
        self.terms.get(&trimmed(exponents.to_vec())).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| exp(m, var)).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negated())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (c.times(k), m.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let n = ma.len().max(mb.len());
                let m: Monomial = (0..n).map(|i| exp(ma, i) + exp(mb, i)).collect();
                out.add_term(m, ca.times(cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(R::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes the polynomial `values[i]` for variable `i`.
    pub fn substitute(&self, values: &[MultiPoly<R>]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&values[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Value at a point.
    pub fn eval(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                t = t.times(&point[i].pow(e));
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// Exchanges the roles of two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let n = m.len().max(a + 1).max(b + 1);
            let mut e: Vec<u32> = (0..n).map(|i| exp(m, i)).collect();
            e.swap(a, b);
            (c.clone(), e)
        }))
    }

    /// Coefficients with respect to `var`, lowest power first; each
    /// coefficient no longer involves `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(); d + 1];
        for (m, c) in &self.terms {
            let k = exp(m, var) as usize;
            let mut e = m.clone();
            if var < e.len() {
                e[var] = 0;
            }
            out[k].add_term(trimmed(e), c.clone());
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (f(c), m.clone())))
    }

    /// Univariate view when only variable `var` occurs.
    pub fn to_univariate(&self, var: usize) -> Option<Poly<R>> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![R::zero(); d + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            coeffs[exp(m, var) as usize] = c.clone();
        }
        Some(Poly::new(coeffs))
    }

    pub fn render(&self, vars: &[&str], inner: &[&str]) -> String {
        let terms = self.terms.iter().rev().map(|(m, c)| {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { vars[i].to_string() } else { format!("{}^{e}", vars[i]) })
                .collect();
            (c.clone(), mono.join("*"))
        });
        render_terms(terms, inner)
    }
}

impl<F: Field> MultiPoly<F> {
    /// Exact quotient by `d` in lexicographic order, or `InexactDivision`.
    pub fn exact_div(&self, d: &Self) -> Result<Self, PolyError> {
        let (dm, dc) = d.terms.iter().next_back().ok_or(PolyError::InexactDivision)?;
        let dinv = dc.inverse().expect("nonzero coefficient");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let n = m.len().max(dm.len());
            if (0..n).any(|i| exp(m, i) < exp(dm, i)) {
                return Err(PolyError::InexactDivision);
            }
            let qm: Monomial = trimmed((0..n).map(|i| exp(m, i) - exp(dm, i)).collect());
            let qc = c.times(&dinv);
            let t = Self::term(qc, &qm);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Resultant of `p` and `q` with respect to variable `var`, computed as
    /// the Sylvester determinant by fraction-free elimination.
    pub fn resultant(p: &Self, q: &Self, var: usize) -> Result<Self, PolyError> {
        if p.is_zero() || q.is_zero() {
            return Err(PolyError::EmptyInput);
        }
        let a = p.coefficients_in(var);
        let b = q.coefficients_in(var);
        let (m, n) = (a.len() - 1, b.len() - 1);
        let size = m + n;
        if size == 0 {
            return Ok(Self::constant(F::one()));
        }
        let mut rows: Vec<Vec<Self>> = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![Self::zero(); size];
            for (j, c) in a.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![Self::zero(); size];
            for (j, c) in b.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        bareiss_determinant(rows)
    }
}

/// Determinant by Bareiss fraction-free elimination.
pub fn bareiss_determinant<F: Field>(mut rows: Vec<Vec<MultiPoly<F>>>) -> Result<MultiPoly<F>, PolyError> {
    let n = rows.len();
    let mut sign = false;
    let mut prev = MultiPoly::constant(F::one());
    for k in 0..n {
        if rows[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !rows[r][k].is_zero()) else {
                return Ok(MultiPoly::zero());
            };
            rows.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = rows[i][j].mul(&rows[k][k]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = num.exact_div(&prev)?;
            }
            rows[i][k] = MultiPoly::zero();
        }
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        MultiPoly::constant(R::from_rat(r))
    }
    fn render(&self, vars: &[&str]) -> String {
        let names: Vec<String> =
            (0..8).map(|i| vars.get(i).map(|s| s.to_string()).unwrap_or(format!("v{i}"))).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        MultiPoly::render(self, &refs, &[])
    }
}

/// Polynomial in `(x, y)` with rational coefficients; curve polynomials in
/// the registry are integral.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariatePolynomial(pub MultiPoly<Rat>);

impl BivariatePolynomial {
    /// From `(coefficient, deg_x, deg_y)` triples.
    pub fn from_triples(triples: &[(BigInt, u32, u32)]) -> Self {
        BivariatePolynomial(MultiPoly::from_terms(
            triples.iter().map(|(c, dx, dy)| (Rat::from_integer(c.clone()), vec![*dx, *dy])),
        ))
    }

    /// `(coefficient, deg_x, deg_y)` in increasing `(deg_x, deg_y)` order.
    pub fn triples(&self) -> Vec<(Rat, u32, u32)> {
        self.0.terms().map(|(c, m)| (c.clone(), exp_of(m, 0), exp_of(m, 1))).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.0.terms().all(|(c, _)| c.is_integer())
    }

    pub fn swap_xy(&self) -> Self {
        BivariatePolynomial(self.0.swap_vars(0, 1))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_xy()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> Rat {
        self.0.coeff(&[dx, dy])
    }

    pub fn degree_x(&self) -> u32 {
        self.0.degree_in(0).unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.0.degree_in(1).unwrap_or(0)
    }

    /// `P(x, y(x))` as a series in `x`.
    pub fn eval_on_branch<F: Field>(&self, y: &LaurentSeries<F>) -> Result<LaurentSeries<F>, SeriesError> {
        let by_y = self.0.coefficients_in(1);
        let trunc = y.trunc_order() + y.valuation().min(0).abs() * by_y.len() as i64 + 1;
        let mut acc: Option<LaurentSeries<F>> = None;
        for c in by_y.iter().rev() {
            let cx = c.to_univariate(0).expect("bivariate coefficient").map_coeffs(F::from_rat);
            let cs = LaurentSeries::from_poly(&cx, trunc.max(1) + cx.degree().unwrap_or(0) as i64);
            acc = Some(match acc {
                None => cs,
                Some(a) => a.mul(y).add(&cs),
            });
        }
        Ok(acc.unwrap_or_else(|| LaurentSeries::zero(y.trunc_order())))
    }

    pub fn leading_sign_normalized(&self) -> Self {
        match self.0.terms().last() {
            Some((c, _)) if c.is_negative() => BivariatePolynomial(self.0.neg()),
            _ => self.clone(),
        }
    }
}

fn exp_of(m: &[u32], i: usize) -> u32 {
    m.get(i).copied().unwrap_or(0)
}
