//! Machine-readable case catalog, the verification runner that dispatches
//! each case to the residual and solver suites, and JSON run reports.

mod catalog;
mod runner;
mod suites;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::conditions::HigherFamily;
use crate::exactcore::Rat;

pub use catalog::{builtin_catalog, load_catalog, parse_catalog, render_catalog, BUILTIN_CATALOG, SCHEMA_VERSION};
pub use runner::{run_all, run_case, select_cases, solve_family, FamilyKind, ParamChoice, SolveRequest, SolvedFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("catalog schema `{found}` does not match version {expected}")]
    SchemaMismatch { found: String, expected: u32 },
    #[error("duplicate case `{0}`")]
    DuplicateCase(String),
    #[error("cannot read catalog {path}: {message}")]
    Io { path: String, message: String },
    #[error("no case matches `{0}`")]
    UnknownCase(String),
    #[error("case `{case}`: {message}")]
    Case { case: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseKind {
    Rank2,
    Schwarzian,
    Heun,
    Modular,
    Mirror,
    Negative,
}

impl CaseKind {
    pub const ALL: [CaseKind; 6] = [
        CaseKind::Rank2,
        CaseKind::Schwarzian,
        CaseKind::Heun,
        CaseKind::Modular,
        CaseKind::Mirror,
        CaseKind::Negative,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseKind::Rank2 => "rank2",
            CaseKind::Schwarzian => "schwarzian",
            CaseKind::Heun => "heun",
            CaseKind::Modular => "modular",
            CaseKind::Mirror => "mirror",
            CaseKind::Negative => "negative",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == text)
    }
}

/// A parameter that is either a fixed rational or a formal symbol.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Symbolic,
    Value(Rat),
}

/// The differential operator, or `W`, a case is checked against.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorRef {
    /// A named rank-two operator from the special-function catalog.
    Rank2(String),
    /// The Gauss operator with parameters `α, β, γ`.
    Gauss([Rat; 3]),
    /// `3F2([a, b, c], [d, e])`.
    ThreeFTwo([Rat; 5]),
    /// The Heun operator of the elliptic family at modulus parameter `M`.
    Heun(ParamValue),
    /// `W` of the Hauptmodul `1728/j`, with the nome as its mirror map.
    Hauptmodul,
    /// A higher hypergeometric family with prefactor identity.
    Higher(HigherFamily),
    /// Rational parametrizations of the modular and genus-two curves.
    Parametrizations,
    /// The algebraic series `𝒜`.
    CalA,
}

/// Where a pullback comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum PullbackSource {
    /// A rational function, ascending coefficients of numerator and denominator.
    Map { num: Vec<Rat>, den: Vec<Rat> },
    /// The analytic branch `leading · x^valuation + ...` of a registered curve.
    Branch { curve: String, valuation: i64, leading: Rat },
    /// The multiplication map `R_p` of the elliptic family.
    Multiplication(u32),
    /// `X(e · Q^N)` from the mirror pair, with `e` the pullback scale.
    Isogeny(u32),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PullbackSpec {
    pub source: PullbackSource,
    /// `Q(y) = scale · Q`, or the parameter `e` of an isogeny.
    pub scale: Rat,
    /// Leading exponent `N` of the pullback.
    pub exponent: u32,
}

/// Where an expected constant comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Transcribed from the printed reference value.
    Reference,
    /// Computed independently of the code under test.
    Derived,
    /// Follows from the definitions alone.
    Contract,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Reference => "ref",
            Provenance::Derived => "derived",
            Provenance::Contract => "contract",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        [Provenance::Reference, Provenance::Derived, Provenance::Contract].into_iter().find(|p| p.as_str() == text)
    }
}

/// An exact expected value: a rational, or a rational function of the case's
/// formal parameter given by ascending coefficients.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactValue {
    Rational(Rat),
    Function { num: Vec<Rat>, den: Vec<Rat> },
}

/// `object[exponent] = value`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedValue {
    pub object: String,
    pub exponent: i64,
    pub value: ExactValue,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseSpec {
    pub name: String,
    pub kind: CaseKind,
    pub operator: OperatorRef,
    /// Working order used when the requested order is lower.
    pub min_order: Option<i64>,
    /// Leading exponents of the one-parameter families solved for this case.
    pub families: Vec<u32>,
    pub pullbacks: Vec<PullbackSpec>,
    pub expected: Vec<ExpectedValue>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The computation stopped before reaching a verdict.
    Obstructed,
}

/// How far a check is known to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum VerifiedOrder {
    /// Every coefficient below this exponent was compared.
    Order(i64),
    /// An identity of rational functions or polynomials, or an exact verdict.
    Exact(ExactMarker),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactMarker {
    Exact,
}

impl VerifiedOrder {
    pub const EXACT: VerifiedOrder = VerifiedOrder::Exact(ExactMarker::Exact);
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstFailure {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent: Option<i64>,
    /// The offending value, exact, as text.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub verified_order: VerifiedOrder,
    pub is_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<FirstFailure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub case: String,
    pub checks: Vec<CheckReport>,
    pub elapsed_ms: u64,
    /// Operations exercised while running the case.
    #[serde(skip)]
    pub operations: BTreeSet<&'static str>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| c.status != CheckStatus::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} ({} ms)\n", self.case, self.elapsed_ms);
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Obstructed => "OBSTRUCTED",
            };
            let order = match c.verified_order {
                VerifiedOrder::Order(n) => format!("order {n}"),
                VerifiedOrder::Exact(_) => "exact".to_string(),
            };
            out.push_str(&format!("  {status:<10} {:<40} {order}", c.name));
            if let Some(f) = &c.first_failure {
                match f.exponent {
                    Some(k) => out.push_str(&format!("  first failure x^{k}: {}", f.value)),
                    None => out.push_str(&format!("  got {}", f.value)),
                }
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!("  ({d})"));
            }
            out.push('\n');
        }
        out
    }
}

/// Every operation the runner can exercise, by module.
pub const OPERATIONS: &[&str] = &[
    "exactcore::series_arith",
    "exactcore::series_compose",
    "exactcore::series_reverse",
    "exactcore::schwarzian",
    "exactcore::poly_resultant",
    "exactcore::param_specialize",
    "specialfun::hyp_series",
    "specialfun::heun_series",
    "specialfun::gauss_operator",
    "specialfun::rank2_catalog",
    "specialfun::w_rank2",
    "specialfun::w_3f2",
    "specialfun::w_higher",
    "specialfun::eisenstein",
    "conditions::rank2_residual",
    "conditions::schwarzian_residual",
    "conditions::schwarzian_qn_residual",
    "conditions::solve_rank2_family",
    "conditions::solve_schwarzian_family",
    "conditions::check_commutation",
    "conditions::verify_covariance",
    "conditions::diffalg_suite",
    "conditions::rank2_subcase_check",
    "conditions::composition_closure_check",
    "modular::load_curve",
    "modular::analytic_branches",
    "modular::build_m4",
    "modular::verify_parametrization",
    "modular::verify_cal_a",
    "modular::genus2_identity_check",
    "heun_elliptic::master_surface",
    "heun_elliptic::multiplication_map",
    "heun_elliptic::rp_series_check",
    "heun_elliptic::heun_covariance",
    "heun_elliptic::j_invariant",
    "heun_elliptic::specialization_suite",
    "heun_elliptic::sn2_series",
    "mirrormap::solve_nome",
    "mirrormap::isogeny_decompose",
    "mirrormap::eisenstein_identity_suite",
    "registry::load_catalog",
    "registry::run_case",
];
