//! Rank-two cases: `u(x)` exponents, the power `N` with `Q = Y^N`, and the
//! rational pullbacks `R` with `Q(R(x)) = scale · Q(x)`.

use super::hypergeometric::{binomial_series, HypergeometricSpec};
use super::operators::{log_derivative, OperatorData};
use super::SpecialFunError;
use crate::exactcore::{int, parse_rat, rat, Field, LaurentSeries, Poly, Rat, RatFunc};

#[derive(Clone, Debug, PartialEq)]
pub struct Pullback<F> {
    pub map: RatFunc<F>,
    pub scale: F,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rank2Case<F> {
    pub name: String,
    pub operator: OperatorData<F>,
    pub n: u32,
    /// `A_R` as printed, kept separately from the value derived from `u`.
    pub a_r_printed: RatFunc<F>,
    /// `Y = x^{1/N} · 2F1(...)` when the case has a hypergeometric form.
    pub hypergeometric: Option<HypergeometricSpec<Rat>>,
    pub pullbacks: Vec<Pullback<F>>,
}

impl<F: Field> Rank2Case<F> {
    pub fn a_r(&self) -> &RatFunc<F> {
        self.operator.a_r.as_ref().expect("rank-two case")
    }

    /// `G` with `Y = x^{1/N} G(x)`, from `N Y' = 1/u` and
    /// `u = x^{1-1/N} Π (1 - x/root)^e`.
    pub fn g_series(&self, order: i64) -> LaurentSeries<F> {
        let n = self.n as i64;
        let mut inv_v = LaurentSeries::constant(F::one(), order);
        for (root, e) in &self.operator.u_exponents {
            if root.is_zero() {
                assert_eq!(*e, Rat::new((n - 1).into(), n.into()), "exponent at 0 must be 1 - 1/N");
                continue;
            }
            inv_v = inv_v.mul(&binomial_series(root, &-e.clone(), order));
        }
        let coeffs = (0..order)
            .map(|k| {
                let c = inv_v.coeff(k);
                c.divided(&F::from_int(n * k + 1)).expect("positive")
            })
            .collect();
        LaurentSeries::new(0, coeffs, order).expect("valuation 0")
    }

    /// `Q = Y^N = x · G^N`, known through `x^order` exclusive.
    pub fn q_series(&self, order: i64) -> LaurentSeries<F> {
        let g = self.g_series(order - 1);
        g.pow(self.n as i64).expect("unit series").shift(1)
    }
}

fn rf(num: &[i64], den: &[i64]) -> RatFunc<Rat> {
    RatFunc::frac(Poly::from_ints(num), Poly::from_ints(den))
}

fn rational_case(
    name: &str,
    p: Rat,
    q: Rat,
    n: u32,
    a_r_printed: RatFunc<Rat>,
    pullbacks: Vec<(RatFunc<Rat>, i64)>,
) -> Rank2Case<Rat> {
    // u = x^p (1-x)^q, so Y = x^{1/N} 2F1([q, 1-p], [2-p], x).
    let one = int(1);
    let hyp = HypergeometricSpec::gauss(q.clone(), &one - &p, int(2) - &p);
    Rank2Case {
        name: name.to_string(),
        operator: OperatorData::rank_two(vec![(int(0), p), (int(1), q)], n),
        n,
        a_r_printed,
        hypergeometric: Some(hyp),
        pullbacks: pullbacks.into_iter().map(|(map, s)| Pullback { map, scale: int(s) }).collect(),
    }
}

/// Names accepted by [`rank2_catalog`], besides `heun(<rational>)`.
pub fn rank2_case_names() -> &'static [&'static str] {
    &["vid", "YM3first", "YM6first", "zero", "more1", "QQQ8first", "genus2"]
}

/// Operator data for a named rank-two case with rational coefficients.
pub fn rank2_catalog(name: &str) -> Result<Rank2Case<Rat>, SpecialFunError> {
    let case = match name {
        "vid" => rational_case(
            name,
            rat(3, 4),
            rat(1, 2),
            4,
            rf(&[3, -5], &[0, 4, -4]),
            vec![(rf(&[0, -4], &[1, -2, 1]), -4)],
        ),
        "YM3first" => rational_case(
            name,
            rat(2, 3),
            rat(2, 3),
            3,
            rf(&[2, -4], &[0, 3, -3]),
            // x(x-2)^3 / (1-2x)^3
            vec![(rf(&[0, -8, 12, -6, 1], &[1, -6, 12, -8]), -8)],
        ),
        "YM6first" => rational_case(
            name,
            rat(5, 6),
            rat(1, 2),
            6,
            rf(&[5, -8], &[0, 6, -6]),
            // -27x / (1-4x)^3
            vec![(rf(&[0, -27], &[1, -12, 48, -64]), -27)],
        ),
        "zero" => {
            rational_case(name, rat(1, 2), int(1), 2, rf(&[1, -3], &[0, 2, -2]), vec![(rf(&[0, 4], &[1, 2, 1]), 4)])
        }
        "more1" => rational_case(
            name,
            rat(3, 4),
            rat(3, 4),
            4,
            rf(&[3, -6], &[0, 4, -4]),
            vec![
                (rf(&[0, -4, 4], &[1, -4, 4]), -4),
                // 16x(1-x) / (1+4x-4x^2)^2
                (rf(&[0, 16, -16], &[1, 8, 8, -32, 16]), 16),
            ],
        ),
        "QQQ8first" => rational_case(
            name,
            rat(5, 6),
            rat(2, 3),
            6,
            rf(&[5, -9], &[0, 6, -6]),
            // 64x / (1+18x-27x^2)^2
            vec![(rf(&[0, 64], &[1, 36, 270, -972, 729]), 64)],
        ),
        "genus2" => rational_case(name, rat(5, 6), rat(1, 3), 6, rf(&[-5, 7], &[0, -6, 6]), vec![]),
        _ => {
            let inner = name
                .strip_prefix("heun(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(parse_rat)
                .filter(|m| *m != int(0) && *m != int(1))
                .ok_or_else(|| SpecialFunError::UnknownCase(name.to_string()))?;
            heun_case(inner)
        }
    };
    Ok(case)
}

/// The Heun case `u = (x(1-x)(1-x/M))^{1/2}`, `N = 2`, with the doubling map
/// `R_2 = 4x(1-x)(1-x/M)/(1-x^2/M)^2` as pullback of scale 4.
pub fn heun_case<F: Field>(m: F) -> Rank2Case<F> {
    let half = rat(1, 2);
    let u = vec![(F::zero(), half.clone()), (F::one(), half.clone()), (m.clone(), half)];
    let operator = OperatorData::rank_two(u, 2);
    // (3x^2 - 2(M+1)x + M) / (2x(1-x)(M-x))
    let one = F::one();
    let two = F::from_int(2);
    let num = Poly::new(vec![m.clone(), two.times(&m.plus(&one)).negated(), F::from_int(3)]);
    let den = Poly::new(vec![F::zero(), m.clone(), m.plus(&one).negated(), one.clone()]).scale(&two);
    let a_r_printed = RatFunc::frac(num, den);
    Rank2Case {
        name: "heun".to_string(),
        operator,
        n: 2,
        a_r_printed,
        hypergeometric: None,
        pullbacks: vec![Pullback { map: doubling_map(&m), scale: F::from_int(4) }],
    }
}

/// `R_2 = 4x(1-x)(1-x/M) / (1-x^2/M)^2`.
pub fn doubling_map<F: Field>(m: &F) -> RatFunc<F> {
    let inv_m = m.inverse().expect("M nonzero");
    let one = F::one();
    let four = F::from_int(4);
    let num = Poly::new(vec![F::zero(), four.clone(), four.times(&one.plus(&inv_m)).negated(), four.times(&inv_m)]);
    let den = Poly::new(vec![one, F::zero(), inv_m.negated()]).pow(2);
    RatFunc::frac(num, den)
}

/// `A_R` recomputed from the `u` exponents.
pub fn a_r_from_u<F: Field>(case: &Rank2Case<F>) -> RatFunc<F> {
    log_derivative(&case.operator.u_exponents)
}
