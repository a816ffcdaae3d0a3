//! Curve records and their one-line text form
//! `name [flags] : c dx dy, c dx dy, ...`.

use num_bigint::BigInt;

use super::ModularError;
use crate::exactcore::BivariatePolynomial;

const BUILTIN: &str = include_str!("curves.txt");

/// Declared symmetries, each checked by coefficient comparison.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CurveSymmetry {
    /// `P(x, y) = P(y, x)`.
    pub swap: bool,
    /// `x^dx P(1/x, y) = P(x, y)` with `dx` the degree in `x`.
    pub x_reciprocal: bool,
    /// `y^dy P(x, 1/y) = P(x, y)` with `dy` the degree in `y`.
    pub y_reciprocal: bool,
}

impl CurveSymmetry {
    pub const SWAP: Self = CurveSymmetry { swap: true, x_reciprocal: false, y_reciprocal: false };

    fn flags(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.swap {
            out.push("swap");
        }
        if self.x_reciprocal {
            out.push("x_recip");
        }
        if self.y_reciprocal {
            out.push("y_recip");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveRecord {
    pub name: String,
    pub poly: BivariatePolynomial,
    pub symmetry: CurveSymmetry,
}

fn reciprocal(poly: &BivariatePolynomial, in_x: bool) -> BivariatePolynomial {
    let (dx, dy) = (poly.degree_x(), poly.degree_y());
    let triples: Vec<(BigInt, u32, u32)> = poly
        .triples()
        .into_iter()
        .map(|(c, i, j)| {
            let c = c.to_integer();
            if in_x {
                (c, dx - i, j)
            } else {
                (c, i, dy - j)
            }
        })
        .collect();
    BivariatePolynomial::from_triples(&triples)
}

impl CurveRecord {
    /// Checks integrality and every declared symmetry.
    pub fn new(
        name: impl Into<String>,
        poly: BivariatePolynomial,
        symmetry: CurveSymmetry,
    ) -> Result<Self, ModularError> {
        let name = name.into();
        if !poly.is_integral() {
            return Err(ModularError::NonIntegral(name));
        }
        let checks = [
            (symmetry.swap, "swap", poly.is_symmetric()),
            (symmetry.x_reciprocal, "x_recip", symmetry.x_reciprocal && reciprocal(&poly, true) == poly),
            (symmetry.y_reciprocal, "y_recip", symmetry.y_reciprocal && reciprocal(&poly, false) == poly),
        ];
        for (declared, flag, holds) in checks {
            if declared && !holds {
                return Err(ModularError::SymmetryMismatch { name, symmetry: flag });
            }
        }
        Ok(CurveRecord { name, poly, symmetry })
    }

    pub fn render_line(&self) -> String {
        let body: Vec<String> =
            self.poly.triples().into_iter().map(|(c, i, j)| format!("{} {i} {j}", c.numer())).collect();
        format!("{} [{}] : {}", self.name, self.symmetry.flags().join(","), body.join(", "))
    }

    pub fn parse_line(line: &str, line_no: usize) -> Result<Self, ModularError> {
        let err = |message: String| ModularError::Parse { line: line_no, message };
        let (head, body) = line.split_once(" : ").ok_or_else(|| err("expected `name [flags] : terms`".into()))?;
        let (name, flags) = head
            .split_once(" [")
            .and_then(|(n, rest)| rest.strip_suffix(']').map(|f| (n, f)))
            .ok_or_else(|| err("expected `name [flags]`".into()))?;
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(err(format!("invalid curve name `{name}`")));
        }
        let mut symmetry = CurveSymmetry::default();
        for flag in flags.split(',').filter(|f| !f.is_empty()) {
            match flag {
                "swap" => symmetry.swap = true,
                "x_recip" => symmetry.x_reciprocal = true,
                "y_recip" => symmetry.y_reciprocal = true,
                other => return Err(err(format!("unknown symmetry flag `{other}`"))),
            }
        }
        let mut triples = Vec::new();
        for term in body.split(", ") {
            let parts: Vec<&str> = term.split(' ').collect();
            let [c, dx, dy] = parts.as_slice() else {
                return Err(err(format!("expected `c dx dy`, got `{term}`")));
            };
            let c: BigInt = c.parse().map_err(|_| err(format!("bad coefficient `{c}`")))?;
            let dx: u32 = dx.parse().map_err(|_| err(format!("bad x exponent `{dx}`")))?;
            let dy: u32 = dy.parse().map_err(|_| err(format!("bad y exponent `{dy}`")))?;
            triples.push((c, dx, dy));
        }
        let poly = BivariatePolynomial::from_triples(&triples);
        let record = CurveRecord::new(name, poly, symmetry)?;
        if record.render_line() != line {
            return Err(err("terms must be nonzero, distinct and sorted by (dx, dy)".into()));
        }
        Ok(record)
    }
}

/// One record per line; the text round-trips exactly through
/// [`render_curve_registry`].
pub fn parse_curve_registry(text: &str) -> Result<Vec<CurveRecord>, ModularError> {
    text.lines().enumerate().map(|(i, line)| CurveRecord::parse_line(line, i + 1)).collect()
}

pub fn render_curve_registry(records: &[CurveRecord]) -> String {
    records.iter().map(|r| r.render_line() + "\n").collect()
}

/// Registered names; `M4` is built on demand from `M2`.
pub fn curve_names() -> Vec<String> {
    let mut names: Vec<String> =
        BUILTIN.lines().filter_map(|l| l.split_once(' ').map(|(n, _)| n.to_string())).collect();
    names.push("M4".to_string());
    names
}

pub fn load_curve(name: &str) -> Result<CurveRecord, ModularError> {
    if name == "M4" {
        return Ok(super::m4::build_m4()?.curve);
    }
    parse_curve_registry(BUILTIN)?
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| ModularError::UnknownCurve(name.to_string()))
}
