use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;

use super::suites;
use super::{
    CaseSpec, CheckReport, CheckStatus, ExactValue, FirstFailure, OperatorRef, ParamValue, RegistryError, RunReport,
    VerifiedOrder,
};
use crate::conditions::{
    one_parameter_remainder, solve_rank2_family, solve_rank2_family_symbolic, solve_schwarzian_family,
    solve_schwarzian_family_symbolic, ResidualReport,
};
use crate::exactcore::{lift_series, Field, LaurentSeries, Poly, Rat, RatFunc, Ring};
use crate::mirrormap::hauptmodul_w;
use crate::specialfun::{gauss_operator, heun_case, rank2_catalog, w_3f2, w_rank2};

/// Coefficients in one formal parameter.
pub(crate) type K1 = RatFunc<Rat>;

/// Checks, named objects and exercised operations collected for one case.
pub(crate) struct Run<'a> {
    pub case: &'a CaseSpec,
    pub order: i64,
    /// Name of the formal parameter in rendered values.
    pub symbol: &'static str,
    pub checks: Vec<CheckReport>,
    pub ops: BTreeSet<&'static str>,
    pub objects: BTreeMap<String, LaurentSeries<K1>>,
}

impl<'a> Run<'a> {
    pub fn touch(&mut self, ops: &[&'static str]) {
        self.ops.extend(ops.iter().copied());
    }

    fn push(
        &mut self,
        name: String,
        status: CheckStatus,
        verified_order: VerifiedOrder,
        is_zero: bool,
    ) -> &mut CheckReport {
        self.checks.push(CheckReport { name, status, verified_order, is_zero, first_failure: None, detail: None });
        self.checks.last_mut().expect("pushed")
    }

    pub fn report<F: Field, E: Display>(&mut self, name: impl Into<String>, result: Result<ResidualReport<F>, E>) {
        let name = name.into();
        match result {
            Ok(report) => self.residual(name, &report),
            Err(e) => self.obstructed(name, e),
        }
    }

    pub fn residual<F: Field>(&mut self, name: String, report: &ResidualReport<F>) {
        self.residual_to(name, report, self.order);
    }

    /// Like `residual`, but only `required` terms must be known.
    pub fn residual_to<F: Field>(&mut self, name: String, report: &ResidualReport<F>, order: i64) {
        let symbol = self.symbol;
        let status = if report.passes(order) {
            CheckStatus::Pass
        } else if report.is_zero {
            CheckStatus::Obstructed
        } else {
            CheckStatus::Fail
        };
        let failure =
            report.first_failure().map(|(k, c)| FirstFailure { exponent: Some(k), value: c.render(&[symbol, "M"]) });
        let check = self.push(name, status, VerifiedOrder::Order(report.verified_order), report.is_zero);
        check.first_failure = failure;
        if status == CheckStatus::Obstructed {
            check.detail = Some(format!("residual known only below x^{}", report.verified_order));
        }
    }

    /// `lhs - rhs` as a residual.
    pub fn agree<F: Field>(&mut self, name: impl Into<String>, lhs: &LaurentSeries<F>, rhs: &LaurentSeries<F>) {
        let order = self.order;
        self.residual(name.into(), &ResidualReport::new(lhs.sub(rhs), order));
    }

    /// `lhs - rhs` through a fixed order, for objects of bounded depth.
    pub fn agree_to<F: Field>(
        &mut self,
        name: impl Into<String>,
        lhs: &LaurentSeries<F>,
        rhs: &LaurentSeries<F>,
        order: i64,
    ) {
        self.residual_to(name.into(), &ResidualReport::new(lhs.sub(rhs), order), order);
    }

    /// An exact verdict; `got` describes the value when it does not hold.
    pub fn exact(&mut self, name: impl Into<String>, holds: bool, got: impl FnOnce() -> String) {
        let status = if holds { CheckStatus::Pass } else { CheckStatus::Fail };
        let check = self.push(name.into(), status, VerifiedOrder::EXACT, holds);
        if !holds {
            check.first_failure = Some(FirstFailure { exponent: None, value: got() });
        }
    }

    /// A rational-function identity, given as `lhs - rhs`.
    pub fn identity<F: Field>(&mut self, name: impl Into<String>, difference: &RatFunc<F>) {
        let symbol = self.symbol;
        self.exact(name, difference.is_zero(), || difference.render_with("x", &[symbol]));
    }

    pub fn obstructed(&mut self, name: impl Into<String>, error: impl Display) {
        let check = self.push(name.into(), CheckStatus::Obstructed, VerifiedOrder::Order(0), false);
        check.detail = Some(error.to_string());
    }

    pub fn object<F: Field>(&mut self, name: impl Into<String>, series: &LaurentSeries<F>, lift: impl Fn(&F) -> K1) {
        self.objects.insert(name.into(), series.map_coeffs(lift));
    }

    fn resolve_expectations(&mut self) {
        let case = self.case;
        for e in &case.expected {
            let name = format!("expect {}[{}]", e.object, e.exponent);
            let Some(series) = self.objects.get(&e.object) else {
                self.obstructed(name, format!("no object `{}` in this case", e.object));
                continue;
            };
            let Some(got) = series.try_coeff(e.exponent) else {
                let known = series.trunc_order();
                self.obstructed(name, format!("`{}` known only below x^{known}", e.object));
                continue;
            };
            let want = match &e.value {
                ExactValue::Rational(r) => K1::constant(r.clone()),
                ExactValue::Function { num, den } => RatFunc::frac(Poly::new(num.clone()), Poly::new(den.clone())),
            };
            let symbol = self.symbol;
            let holds = got == want;
            let check = self.push(
                name,
                if holds { CheckStatus::Pass } else { CheckStatus::Fail },
                VerifiedOrder::Order(e.exponent + 1),
                holds,
            );
            if !holds {
                check.first_failure = Some(FirstFailure { exponent: Some(e.exponent), value: got.render(&[symbol]) });
            }
        }
    }
}

/// Lifts a rational into the parameter field.
pub(crate) fn k1(r: &Rat) -> K1 {
    K1::constant(r.clone())
}

pub(crate) fn k1_id(c: &K1) -> K1 {
    c.clone()
}

fn case_error(case: &CaseSpec, message: impl Display) -> RegistryError {
    RegistryError::Case { case: case.name.clone(), message: message.to_string() }
}

/// Working order for a case: the requested order, raised to the case's
/// declared minimum.
pub fn effective_order(case: &CaseSpec, order: i64) -> i64 {
    order.max(case.min_order.unwrap_or(0))
}

/// Runs every check of a case. Individual check failures are reported in
/// the returned report; malformed references are errors.
pub fn run_case(case: &CaseSpec, order: i64) -> Result<RunReport, RegistryError> {
    if order < 1 {
        return Err(case_error(case, format!("order must be positive, got {order}")));
    }
    let start = Instant::now();
    let symbol = if matches!(case.operator, OperatorRef::Heun(_)) { "M" } else { "a" };
    let mut run = Run {
        case,
        order: effective_order(case, order),
        symbol,
        checks: Vec::new(),
        ops: BTreeSet::new(),
        objects: BTreeMap::new(),
    };
    run.touch(&["registry::run_case"]);
    suites::dispatch(&mut run).map_err(|m| case_error(case, m))?;
    run.resolve_expectations();
    Ok(RunReport {
        case: case.name.clone(),
        checks: run.checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
        operations: run.ops,
    })
}

/// Runs cases on `jobs` threads; reports come back sorted by case name.
pub fn run_all(cases: &[CaseSpec], order: i64, jobs: usize) -> Result<Vec<RunReport>, RegistryError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| RegistryError::Case { case: "*".into(), message: e.to_string() })?;
    let mut reports = pool.install(|| cases.par_iter().map(|c| run_case(c, order)).collect::<Result<Vec<_>, _>>())?;
    reports.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(reports)
}

/// Cases named `selector`, or, for `case.<suffix>`, the unique case whose
/// name ends in `.<suffix>`.
pub fn select_cases<'c>(cases: &'c [CaseSpec], selector: &str) -> Result<&'c CaseSpec, RegistryError> {
    if let Some(c) = cases.iter().find(|c| c.name == selector) {
        return Ok(c);
    }
    let unknown = || RegistryError::UnknownCase(selector.to_string());
    let suffix = selector.strip_prefix("case.").ok_or_else(unknown)?;
    let mut matches = cases.iter().filter(|c| c.name.rsplit_once('.').map(|(_, s)| s) == Some(suffix));
    match (matches.next(), matches.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(unknown()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Rank2,
    Schwarzian,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamChoice {
    Symbolic,
    Value(Rat),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveRequest {
    pub family: FamilyKind,
    /// Leading exponent `N`.
    pub leading: u32,
    pub param: ParamChoice,
    pub order: i64,
}

/// A solved family: the series, and for linear symbolic families the
/// remainder `S` in `y = a x + a(a-1) S`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolvedFamily {
    pub series: LaurentSeries<K1>,
    pub remainder: Option<LaurentSeries<K1>>,
}

impl SolvedFamily {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let lines = |s: &LaurentSeries<K1>, out: &mut String| {
            for k in s.valuation()..s.trunc_order() {
                let c = s.coeff(k);
                if !c.is_zero() {
                    out.push_str(&format!("  x^{k}: {}\n", c.render(&["a"])));
                }
            }
        };
        out.push_str("y:\n");
        lines(&self.series, &mut out);
        if let Some(s) = &self.remainder {
            out.push_str("S:\n");
            lines(s, &mut out);
        }
        out
    }
}

/// The rank-two coefficient `A_R` and the Schwarzian `W` of a case, when its
/// operator has rational coefficients.
fn case_conditions(case: &CaseSpec) -> Result<(Option<RatFunc<Rat>>, RatFunc<Rat>), RegistryError> {
    Ok(match &case.operator {
        OperatorRef::Rank2(name) => {
            let r = rank2_catalog(name).map_err(|e| case_error(case, e))?;
            let a_r = r.a_r().clone();
            let w = w_rank2(&a_r);
            (Some(a_r), w)
        }
        OperatorRef::Heun(ParamValue::Value(m)) => {
            let a_r = heun_case(m.clone()).a_r().clone();
            let w = w_rank2(&a_r);
            (Some(a_r), w)
        }
        OperatorRef::Gauss([a, b, c]) => (None, gauss_operator(a, b, c).w),
        OperatorRef::ThreeFTwo([a, b, c, d, e]) => (None, w_3f2(a, b, c, d, e)),
        OperatorRef::Higher(f) => (None, f.w()),
        OperatorRef::Hauptmodul => (None, hauptmodul_w()),
        other => {
            return Err(case_error(case, format!("no family can be solved for operator {other:?}")));
        }
    })
}

/// Solves the requested one-parameter family for a case's operator.
pub fn solve_family(case: &CaseSpec, request: &SolveRequest) -> Result<SolvedFamily, RegistryError> {
    let (a_r, w) = case_conditions(case)?;
    let err = |e: crate::conditions::ConditionError| case_error(case, e);
    let series = match (request.family, &request.param) {
        (FamilyKind::Rank2, param) => {
            let a_r = a_r.ok_or_else(|| case_error(case, "the case has no rank-two operator"))?;
            if request.leading != 1 {
                return Err(case_error(case, "rank-two families have leading exponent 1"));
            }
            match param {
                ParamChoice::Symbolic => solve_rank2_family_symbolic(&a_r, request.order).map_err(err)?,
                ParamChoice::Value(v) => lift_series(&solve_rank2_family(&a_r, v, request.order).map_err(err)?),
            }
        }
        (FamilyKind::Schwarzian, ParamChoice::Symbolic) => {
            solve_schwarzian_family_symbolic(&w, request.leading, request.order).map_err(err)?
        }
        (FamilyKind::Schwarzian, ParamChoice::Value(v)) => {
            lift_series(&solve_schwarzian_family(&w, request.leading, v, request.order).map_err(err)?)
        }
    };
    let remainder =
        (request.leading == 1 && request.param == ParamChoice::Symbolic).then(|| one_parameter_remainder(&series));
    Ok(SolvedFamily { series, remainder })
}
