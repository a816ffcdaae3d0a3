//! The line-oriented catalog format.
//!
//! ```text
//! pullback-catalog 1
//!
//! case rank2.zero
//! kind rank2
//! operator rank2 zero
//! pullback map [0, 4]/[1, 2, 1] scale 4 exponent 1
//! expect family.s[2] = -1/2 ref
//! ```
//!
//! Cases are separated by one blank line. Inside a case the lines come in
//! the order `case`, `kind`, `operator`, `order`, `families`, `pullback`,
//! `expect`; the last four are optional. Every line must already be in
//! canonical form, so parsing and rendering round-trip byte for byte.

use std::collections::HashSet;

use super::{
    CaseKind, CaseSpec, ExactValue, ExpectedValue, OperatorRef, ParamValue, Provenance, PullbackSource, PullbackSpec,
    RegistryError,
};
use crate::conditions::HigherFamily;
use crate::exactcore::{format_rat, parse_rat, Rat};

pub const SCHEMA_VERSION: u32 = 1;
const HEADER: &str = "pullback-catalog";

/// The catalog shipped with the crate.
pub const BUILTIN_CATALOG: &str = include_str!("cases.txt");

pub fn builtin_catalog() -> Vec<CaseSpec> {
    parse_catalog(BUILTIN_CATALOG).expect("builtin catalog is canonical")
}

pub fn load_catalog(path: impl AsRef<std::path::Path>) -> Result<Vec<CaseSpec>, RegistryError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| RegistryError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_catalog(&text)
}

pub fn render_catalog(cases: &[CaseSpec]) -> String {
    let mut out = format!("{HEADER} {SCHEMA_VERSION}\n");
    for case in cases {
        out.push('\n');
        for line in case_lines(case) {
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

/// Section of a case a line belongs to; sections only move forward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Case,
    Kind,
    Operator,
    Order,
    Families,
    Pullback,
    Expect,
}

enum Line {
    Case(String),
    Kind(CaseKind),
    Operator(OperatorRef),
    Order(i64),
    Families(Vec<u32>),
    Pullback(PullbackSpec),
    Expect(ExpectedValue),
}

impl Line {
    fn section(&self) -> Section {
        match self {
            Line::Case(_) => Section::Case,
            Line::Kind(_) => Section::Kind,
            Line::Operator(_) => Section::Operator,
            Line::Order(_) => Section::Order,
            Line::Families(_) => Section::Families,
            Line::Pullback(_) => Section::Pullback,
            Line::Expect(_) => Section::Expect,
        }
    }

    fn render(&self) -> String {
        match self {
            Line::Case(name) => format!("case {name}"),
            Line::Kind(kind) => format!("kind {}", kind.as_str()),
            Line::Operator(op) => format!("operator {}", render_operator(op)),
            Line::Order(n) => format!("order {n}"),
            Line::Families(ns) => {
                let list: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                format!("families {}", list.join(" "))
            }
            Line::Pullback(p) => {
                format!("pullback {} scale {} exponent {}", render_source(&p.source), format_rat(&p.scale), p.exponent)
            }
            Line::Expect(e) => {
                format!("expect {}[{}] = {} {}", e.object, e.exponent, render_value(&e.value), e.provenance.as_str())
            }
        }
    }
}

fn case_lines(case: &CaseSpec) -> Vec<String> {
    let mut lines = vec![Line::Case(case.name.clone()), Line::Kind(case.kind), Line::Operator(case.operator.clone())];
    if let Some(n) = case.min_order {
        lines.push(Line::Order(n));
    }
    if !case.families.is_empty() {
        lines.push(Line::Families(case.families.clone()));
    }
    lines.extend(case.pullbacks.iter().cloned().map(Line::Pullback));
    lines.extend(case.expected.iter().cloned().map(Line::Expect));
    lines.iter().map(Line::render).collect()
}

fn render_list(values: &[Rat]) -> String {
    let items: Vec<String> = values.iter().map(format_rat).collect();
    format!("[{}]", items.join(", "))
}

fn render_operator(op: &OperatorRef) -> String {
    let rats = |v: &[Rat]| v.iter().map(format_rat).collect::<Vec<_>>().join(" ");
    match op {
        OperatorRef::Rank2(name) => format!("rank2 {name}"),
        OperatorRef::Gauss(p) => format!("gauss {}", rats(p)),
        OperatorRef::ThreeFTwo(p) => format!("3f2 {}", rats(p)),
        OperatorRef::Heun(ParamValue::Symbolic) => "heun symbolic".into(),
        OperatorRef::Heun(ParamValue::Value(m)) => format!("heun {}", format_rat(m)),
        OperatorRef::Hauptmodul => "hauptmodul".into(),
        OperatorRef::Higher(HigherFamily::FourFThree) => "higher 4F3".into(),
        OperatorRef::Higher(HigherFamily::TwoFTwo) => "higher 2F2".into(),
        OperatorRef::Parametrizations => "parametrizations".into(),
        OperatorRef::CalA => "cal-a".into(),
    }
}

fn render_source(source: &PullbackSource) -> String {
    match source {
        PullbackSource::Map { num, den } => format!("map {}/{}", render_list(num), render_list(den)),
        PullbackSource::Branch { curve, valuation, leading } => {
            format!("branch {curve} {valuation} {}", format_rat(leading))
        }
        PullbackSource::Multiplication(p) => format!("mult {p}"),
        PullbackSource::Isogeny(n) => format!("isogeny {n}"),
    }
}

fn render_value(value: &ExactValue) -> String {
    match value {
        ExactValue::Rational(r) => format_rat(r),
        ExactValue::Function { num, den } if den.len() == 1 && den[0] == Rat::from_integer(1.into()) => {
            render_list(num)
        }
        ExactValue::Function { num, den } => format!("{}/{}", render_list(num), render_list(den)),
    }
}

/// Byte cursor over one line, tracking the column for error reports.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, at: usize, message: impl Into<String>) -> RegistryError {
        RegistryError::Parse { line: self.line, column: at + 1, message: message.into() }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn literal(&mut self, lit: &str) -> Result<(), RegistryError> {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(self.error(self.pos, format!("expected `{lit}`")))
        }
    }

    /// Text up to the next space, or `stop` character, or end of line.
    fn word_until(&mut self, stop: &[char]) -> Result<(usize, &'a str), RegistryError> {
        let start = self.pos;
        let len = self.rest().find(|c: char| c == ' ' || stop.contains(&c)).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error(start, "expected a token"));
        }
        self.pos += len;
        Ok((start, &self.text[start..start + len]))
    }

    fn word(&mut self) -> Result<(usize, &'a str), RegistryError> {
        self.word_until(&[])
    }

    fn rat_until(&mut self, stop: &[char]) -> Result<Rat, RegistryError> {
        let (at, token) = self.word_until(stop)?;
        parse_rat(token).ok_or_else(|| self.error(at, format!("malformed rational `{token}`")))
    }

    fn rat(&mut self) -> Result<Rat, RegistryError> {
        self.rat_until(&[])
    }

    fn integer<T: std::str::FromStr>(&mut self) -> Result<T, RegistryError> {
        let (at, token) = self.word()?;
        token.parse().map_err(|_| self.error(at, format!("malformed integer `{token}`")))
    }

    fn list(&mut self) -> Result<Vec<Rat>, RegistryError> {
        self.literal("[")?;
        let mut out = Vec::new();
        if self.rest().starts_with(']') {
            return Err(self.error(self.pos, "empty coefficient list"));
        }
        loop {
            out.push(self.rat_until(&[',', ']'])?);
            if self.rest().starts_with(']') {
                self.pos += 1;
                return Ok(out);
            }
            self.literal(", ")?;
        }
    }

    fn space(&mut self) -> Result<(), RegistryError> {
        self.literal(" ")
    }

    fn finish(&self) -> Result<(), RegistryError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(self.pos, "unexpected trailing text"))
        }
    }
}

fn parse_operator(c: &mut Cursor) -> Result<OperatorRef, RegistryError> {
    let (at, head) = c.word()?;
    let rats = |c: &mut Cursor, n: usize| -> Result<Vec<Rat>, RegistryError> {
        (0..n)
            .map(|_| {
                c.space()?;
                c.rat()
            })
            .collect()
    };
    Ok(match head {
        "rank2" => {
            c.space()?;
            OperatorRef::Rank2(c.word()?.1.to_string())
        }
        "gauss" => OperatorRef::Gauss(rats(c, 3)?.try_into().expect("three")),
        "3f2" => OperatorRef::ThreeFTwo(rats(c, 5)?.try_into().expect("five")),
        "heun" => {
            c.space()?;
            if c.rest() == "symbolic" {
                c.pos = c.text.len();
                OperatorRef::Heun(ParamValue::Symbolic)
            } else {
                OperatorRef::Heun(ParamValue::Value(c.rat()?))
            }
        }
        "hauptmodul" => OperatorRef::Hauptmodul,
        "higher" => {
            c.space()?;
            let (at, name) = c.word()?;
            match name {
                "4F3" => OperatorRef::Higher(HigherFamily::FourFThree),
                "2F2" => OperatorRef::Higher(HigherFamily::TwoFTwo),
                _ => return Err(c.error(at, format!("unknown higher family `{name}`"))),
            }
        }
        "parametrizations" => OperatorRef::Parametrizations,
        "cal-a" => OperatorRef::CalA,
        _ => return Err(c.error(at, format!("unknown operator `{head}`"))),
    })
}

fn parse_source(c: &mut Cursor) -> Result<PullbackSource, RegistryError> {
    let (at, head) = c.word()?;
    c.space()?;
    Ok(match head {
        "map" => {
            let num = c.list()?;
            c.literal("/")?;
            let den = c.list()?;
            if den.iter().all(|d| *d == Rat::from_integer(0.into())) {
                return Err(c.error(c.pos - 1, "zero denominator"));
            }
            PullbackSource::Map { num, den }
        }
        "branch" => {
            let curve = c.word()?.1.to_string();
            c.space()?;
            let valuation = c.integer()?;
            c.space()?;
            let leading = c.rat()?;
            PullbackSource::Branch { curve, valuation, leading }
        }
        "mult" => PullbackSource::Multiplication(c.integer()?),
        "isogeny" => PullbackSource::Isogeny(c.integer()?),
        _ => return Err(c.error(at, format!("unknown pullback source `{head}`"))),
    })
}

fn parse_value(c: &mut Cursor) -> Result<ExactValue, RegistryError> {
    if !c.rest().starts_with('[') {
        return Ok(ExactValue::Rational(c.rat()?));
    }
    let num = c.list()?;
    let den = if c.rest().starts_with('/') {
        c.pos += 1;
        let at = c.pos;
        let den = c.list()?;
        if den.iter().all(|d| *d == Rat::from_integer(0.into())) {
            return Err(c.error(at, "zero denominator"));
        }
        den
    } else {
        vec![Rat::from_integer(1.into())]
    };
    Ok(ExactValue::Function { num, den })
}

fn parse_line(text: &str, line: usize) -> Result<Line, RegistryError> {
    let mut c = Cursor { text, pos: 0, line };
    let (at, head) = c.word()?;
    let parsed = match head {
        "case" => {
            c.space()?;
            let (at, name) = c.word()?;
            if !name.chars().all(|ch| ch.is_ascii_alphanumeric() || "._-()".contains(ch)) {
                return Err(c.error(at, format!("invalid case name `{name}`")));
            }
            Line::Case(name.to_string())
        }
        "kind" => {
            c.space()?;
            let (at, kind) = c.word()?;
            Line::Kind(CaseKind::parse(kind).ok_or_else(|| c.error(at, format!("unknown kind `{kind}`")))?)
        }
        "operator" => {
            c.space()?;
            Line::Operator(parse_operator(&mut c)?)
        }
        "order" => {
            c.space()?;
            Line::Order(c.integer()?)
        }
        "families" => {
            let mut ns = Vec::new();
            while !c.at_end() {
                c.space()?;
                ns.push(c.integer()?);
            }
            if ns.is_empty() {
                return Err(c.error(c.pos, "expected at least one exponent"));
            }
            Line::Families(ns)
        }
        "pullback" => {
            c.space()?;
            let source = parse_source(&mut c)?;
            c.literal(" scale ")?;
            let scale = c.rat()?;
            c.literal(" exponent ")?;
            let exponent = c.integer()?;
            Line::Pullback(PullbackSpec { source, scale, exponent })
        }
        "expect" => {
            c.space()?;
            let (at, object) = c.word_until(&['['])?;
            if object.is_empty() {
                return Err(c.error(at, "missing object path"));
            }
            c.literal("[")?;
            let (k_at, k) = c.word_until(&[']'])?;
            let exponent = k.parse().map_err(|_| c.error(k_at, format!("malformed exponent `{k}`")))?;
            c.literal("] = ")?;
            let value = parse_value(&mut c)?;
            c.space()?;
            let (p_at, p) = c.word()?;
            let provenance = Provenance::parse(p).ok_or_else(|| c.error(p_at, format!("unknown provenance `{p}`")))?;
            Line::Expect(ExpectedValue { object: object.to_string(), exponent, value, provenance })
        }
        _ => return Err(c.error(at, format!("unknown directive `{head}`"))),
    };
    c.finish()?;
    let canonical = parsed.render();
    if canonical != text {
        let column = canonical.bytes().zip(text.bytes()).take_while(|(a, b)| a == b).count();
        return Err(c.error(column, format!("not in canonical form, expected `{canonical}`")));
    }
    Ok(parsed)
}

fn check_kind(case: &CaseSpec, line: usize) -> Result<(), RegistryError> {
    use OperatorRef as O;
    let ok = match case.kind {
        CaseKind::Rank2 => matches!(case.operator, O::Rank2(_)),
        CaseKind::Schwarzian => matches!(case.operator, O::Gauss(_) | O::ThreeFTwo(_)),
        CaseKind::Heun => matches!(case.operator, O::Heun(_)),
        CaseKind::Modular => {
            matches!(case.operator, O::Gauss(_) | O::Rank2(_) | O::Parametrizations | O::CalA)
        }
        CaseKind::Mirror => matches!(case.operator, O::Hauptmodul),
        CaseKind::Negative => matches!(case.operator, O::Gauss(_) | O::Higher(_) | O::ThreeFTwo(_)),
    };
    if ok {
        Ok(())
    } else {
        Err(RegistryError::Parse {
            line,
            column: 1,
            message: format!(
                "operator `{}` does not fit kind `{}`",
                render_operator(&case.operator),
                case.kind.as_str()
            ),
        })
    }
}

struct Builder {
    name: String,
    kind: Option<CaseKind>,
    operator: Option<OperatorRef>,
    min_order: Option<i64>,
    families: Vec<u32>,
    pullbacks: Vec<PullbackSpec>,
    expected: Vec<ExpectedValue>,
    start_line: usize,
}

impl Builder {
    fn finish(self, end_line: usize) -> Result<CaseSpec, RegistryError> {
        let missing = |what: &str| RegistryError::Parse {
            line: end_line,
            column: 1,
            message: format!("case `{}` has no `{what}` line", self.name),
        };
        let case = CaseSpec {
            kind: self.kind.ok_or_else(|| missing("kind"))?,
            operator: self.operator.clone().ok_or_else(|| missing("operator"))?,
            name: self.name,
            min_order: self.min_order,
            families: self.families,
            pullbacks: self.pullbacks,
            expected: self.expected,
        };
        check_kind(&case, self.start_line)?;
        Ok(case)
    }
}

/// Parses catalog text. Empty text is an empty catalog.
pub fn parse_catalog(text: &str) -> Result<Vec<CaseSpec>, RegistryError> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let parse_err =
        |line: usize, column: usize, message: &str| RegistryError::Parse { line, column, message: message.to_string() };
    let Some(body) = text.strip_suffix('\n') else {
        let lines = text.split('\n').count();
        return Err(parse_err(lines, 1, "missing final newline"));
    };
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));

    let (_, header) = lines.next().expect("nonempty");
    let version = header
        .strip_prefix(HEADER)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| parse_err(1, 1, &format!("expected `{HEADER} <version>`")))?;
    if version != SCHEMA_VERSION.to_string() {
        return Err(RegistryError::SchemaMismatch { found: version.to_string(), expected: SCHEMA_VERSION });
    }

    let mut cases = Vec::new();
    let mut names = HashSet::new();
    let mut current: Option<(Builder, Section)> = None;
    let mut expect_blank = true;
    let mut last_line = 1;
    for (n, text) in lines {
        last_line = n;
        if text.is_empty() {
            if expect_blank {
                if let Some((builder, _)) = current.take() {
                    cases.push(builder.finish(n)?);
                }
                expect_blank = false;
                continue;
            }
            return Err(parse_err(n, 1, "cases are separated by exactly one blank line"));
        }
        let line = parse_line(text, n)?;
        match (&mut current, line) {
            (None, Line::Case(_)) if expect_blank => return Err(parse_err(n, 1, "missing blank line before `case`")),
            (None, Line::Case(name)) => {
                if !names.insert(name.clone()) {
                    return Err(RegistryError::DuplicateCase(name));
                }
                current = Some((
                    Builder {
                        name,
                        kind: None,
                        operator: None,
                        min_order: None,
                        families: Vec::new(),
                        pullbacks: Vec::new(),
                        expected: Vec::new(),
                        start_line: n,
                    },
                    Section::Case,
                ));
                expect_blank = true;
            }
            (None, _) => return Err(parse_err(n, 1, "expected `case <name>` after a blank line")),
            (Some(_), Line::Case(_)) => return Err(parse_err(n, 1, "missing blank line before `case`")),
            (Some((builder, section)), line) => {
                let s = line.section();
                let repeatable = matches!(s, Section::Pullback | Section::Expect);
                if s < *section || (s == *section && !repeatable) {
                    return Err(parse_err(n, 1, "line out of order"));
                }
                *section = s;
                match line {
                    Line::Kind(k) => builder.kind = Some(k),
                    Line::Operator(o) => builder.operator = Some(o),
                    Line::Order(o) => builder.min_order = Some(o),
                    Line::Families(f) => builder.families = f,
                    Line::Pullback(p) => builder.pullbacks.push(p),
                    Line::Expect(e) => builder.expected.push(e),
                    Line::Case(_) => unreachable!("handled above"),
                }
            }
        }
    }
    if let Some((builder, _)) = current.take() {
        cases.push(builder.finish(last_line)?);
    } else if !cases.is_empty() || last_line > 1 {
        return Err(parse_err(last_line, 1, "trailing blank line"));
    }
    Ok(cases)
}
