//! Operator data `A`, `B`, `A_R`, `u`, `W` and the closed-form `W` of the
//! higher hypergeometric families.

use crate::exactcore::{rat, Field, Poly, Rat, RatFunc, Ring};

/// Coefficients of `D^2 + A D + B` with the derived invariant
/// `W = A' + A^2/2 - 2B`, plus the rank-two data when the operator factors.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorData<F> {
    pub a: RatFunc<F>,
    pub b: RatFunc<F>,
    pub a_r: Option<RatFunc<F>>,
    pub w: RatFunc<F>,
    /// `u(x) = Π (x - root)^exponent`.
    pub u_exponents: Vec<(F, Rat)>,
    /// Power with `Q = Y^N`.
    pub n: Option<u32>,
}

/// `A' + A^2/2 - 2B`.
pub fn schwarzian_invariant<F: Field>(a: &RatFunc<F>, b: &RatFunc<F>) -> RatFunc<F> {
    let half = F::from_rat(&rat(1, 2));
    a.derivative().add(&a.mul(a).scale(&half)).sub(&b.scale(&F::from_int(2)))
}

/// `A_R' + A_R^2/2`, the invariant of the factorized operator.
pub fn w_rank2<F: Field>(a_r: &RatFunc<F>) -> RatFunc<F> {
    schwarzian_invariant(a_r, &RatFunc::zero())
}

/// `d/dx log u` for `u = Π (x - root)^exponent`.
pub fn log_derivative<F: Field>(u_exponents: &[(F, Rat)]) -> RatFunc<F> {
    u_exponents.iter().fold(RatFunc::zero(), |acc, (root, e)| {
        let lin = Poly::new(vec![root.negated(), F::one()]);
        acc.add(&RatFunc::frac(Poly::constant(F::from_rat(e)), lin))
    })
}

impl<F: Field> OperatorData<F> {
    /// Operator `D^2 + A_R D` of a rank-two case, with `A_R` from `u`.
    pub fn rank_two(u_exponents: Vec<(F, Rat)>, n: u32) -> Self {
        let a_r = log_derivative(&u_exponents);
        OperatorData { a: a_r.clone(), b: RatFunc::zero(), w: w_rank2(&a_r), a_r: Some(a_r), u_exponents, n: Some(n) }
    }
}

/// Gauss operator of `2F1([α, β], [γ], x)`:
/// `A = ((α+β+1)x - γ)/(x(x-1))`, `B = αβ/(x(x-1))`.
pub fn gauss_operator<F: Field>(alpha: &F, beta: &F, gamma: &F) -> OperatorData<F> {
    let xx1 = Poly::new(vec![F::zero(), F::one().negated(), F::one()]);
    let a_num = Poly::new(vec![gamma.negated(), alpha.plus(beta).plus(&F::one())]);
    let a = RatFunc::frac(a_num, xx1.clone());
    let b = RatFunc::frac(Poly::constant(alpha.times(beta)), xx1);
    OperatorData { w: schwarzian_invariant(&a, &b), a, b, a_r: None, u_exponents: Vec::new(), n: None }
}

fn monomial_sum<R: Ring>(vars: &[R; 5], terms: &[(i64, &str)]) -> R {
    terms.iter().fold(R::zero(), |acc, (c, mono)| {
        let t = mono.bytes().fold(R::from_int(*c), |t, v| t.times(&vars[(v - b'a') as usize]));
        acc.plus(&t)
    })
}

/// Numerator `P_W` of the ₃F₂ invariant `W = P_W / (6 x^2 (1-x)^2)` for
/// `3F2([a, b, c], [d, e], x)`.
pub fn p_w_3f2<R: Ring>(a: &R, b: &R, c: &R, d: &R, e: &R) -> Poly<R> {
    let v = [a.clone(), b.clone(), c.clone(), d.clone(), e.clone()];
    let c2 = monomial_sum(&v, &[(1, "aa"), (1, "bb"), (1, "cc"), (-1, "ab"), (-1, "ac"), (-1, "bc"), (-3, "")]);
    let c1 = monomial_sum(
        &v,
        &[
            (3, "ab"),
            (3, "ac"),
            (3, "bc"),
            (3, "de"),
            (3, ""),
            (-2, "ad"),
            (-2, "ae"),
            (-2, "bd"),
            (-2, "be"),
            (-2, "cd"),
            (-2, "ce"),
            (1, "a"),
            (1, "b"),
            (1, "c"),
        ],
    );
    let c0 = monomial_sum(&v, &[(1, "dd"), (1, "ee"), (-1, "de"), (-1, "d"), (-1, "e"), (-2, "")]);
    Poly::new(vec![c0, c1, c2])
}

pub fn w_3f2<F: Field>(a: &F, b: &F, c: &F, d: &F, e: &F) -> RatFunc<F> {
    let den = Poly::from_ints(&[0, 0, 6, -12, 6]);
    RatFunc::frac(p_w_3f2(a, b, c, d, e), den)
}

const Q2_TERMS: &[(i64, &str)] = &[
    (6, "aab"),
    (6, "aac"),
    (-4, "aad"),
    (-4, "aae"),
    (6, "abb"),
    (-18, "abc"),
    (-2, "abd"),
    (-2, "abe"),
    (6, "acc"),
    (-2, "acd"),
    (-2, "ace"),
    (6, "ade"),
    (6, "bbc"),
    (-4, "bbd"),
    (-4, "bbe"),
    (6, "bcc"),
    (-2, "bcd"),
    (-2, "bce"),
    (6, "bde"),
    (-4, "ccd"),
    (-4, "cce"),
    (6, "cde"),
    (2, "aa"),
    (1, "ab"),
    (1, "ac"),
    (2, "bb"),
    (1, "bc"),
    (2, "cc"),
    (-9, "de"),
    (-3, "a"),
    (-3, "b"),
    (-3, "c"),
    (6, "d"),
    (6, "e"),
    (-3, ""),
];

const Q1_TERMS: &[(i64, &str)] = &[
    (18, "abc"),
    (-6, "abd"),
    (-6, "abe"),
    (-6, "acd"),
    (-6, "ace"),
    (4, "add"),
    (2, "ade"),
    (4, "aee"),
    (-6, "bcd"),
    (-6, "bce"),
    (4, "bdd"),
    (2, "bde"),
    (4, "bee"),
    (4, "cdd"),
    (2, "cde"),
    (4, "cee"),
    (-6, "dde"),
    (-6, "dee"),
    (3, "ab"),
    (3, "ac"),
    (-4, "ad"),
    (-4, "ae"),
    (3, "bc"),
    (-4, "bd"),
    (-4, "be"),
    (-4, "cd"),
    (-4, "ce"),
    (21, "de"),
    (1, "a"),
    (1, "b"),
    (1, "c"),
    (-6, "d"),
    (-6, "e"),
    (3, ""),
];

/// The cubic compatibility polynomial `Q(x)` of the ₃F₂ family.
pub fn q_3f2<R: Ring>(a: &R, b: &R, c: &R, d: &R, e: &R) -> Poly<R> {
    let v = [a.clone(), b.clone(), c.clone(), d.clone(), e.clone()];
    let two = R::from_int(2);
    let three = R::from_int(3);
    let lin = |x: &R, y: &R, z: &R| x.plus(y).minus(&z.times(&two));
    let c3 = two.negated().times(&lin(b, c, a)).times(&lin(a, c, b)).times(&lin(a, b, c));
    let one = R::one();
    let c0 = two
        .negated()
        .times(&one.plus(d).minus(&e.times(&two)))
        .times(&d.plus(e).minus(&two))
        .times(&d.times(&two).minus(e).minus(&one));
    let q2 = monomial_sum(&v, Q2_TERMS);
    let q1 = monomial_sum(&v, Q1_TERMS);
    Poly::new(vec![c0, three.times(&q1), three.times(&q2), c3])
}

/// `W` of the Calabi-Yau ₄F₃: `-(5x^2 - 7x + 5) / (10 x^2 (1-x)^2)`.
pub fn w_4f3() -> RatFunc<Rat> {
    RatFunc::frac(Poly::from_ints(&[-5, 7, -5]), Poly::from_ints(&[0, 0, 10, -20, 10]))
}

/// `W` of the confluent ₂F₂: `(x^2 - 3) / (6 x^2)`.
pub fn w_2f2() -> RatFunc<Rat> {
    RatFunc::frac(Poly::from_ints(&[-3, 0, 1]), Poly::from_ints(&[0, 0, 6]))
}

/// `p_8` of the ₃F₂([1/9,4/9,5/9],[1/3,1]) invariant, lowest degree first.
pub const P8_INVARIANT_3F2: [i64; 9] =
    [26873856, -290993472, -244855791, 1082145339, -62800191, -533339127, 223006266, 7247520, 254800];

/// Denominator cubic of the same invariant, raised to the 8th power there.
pub const INVARIANT_3F2_CUBIC: [i64; 4] = [-864, 2403, 81, 140];

/// `I(x) = p_8^3 / (140x^3 + 81x^2 + 2403x - 864)^8`.
pub fn invariant_3f2() -> RatFunc<Rat> {
    let p8 = Poly::<Rat>::from_ints(&P8_INVARIANT_3F2);
    let cubic = Poly::<Rat>::from_ints(&INVARIANT_3F2_CUBIC);
    RatFunc::frac(p8.pow(3), cubic.pow(8))
}
