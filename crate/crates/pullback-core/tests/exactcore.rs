use proptest::prelude::*;
use pullback_core::exactcore::roots::rational_roots;
use pullback_core::exactcore::*;

type S = LaurentSeries<Rat>;

fn series(v: i64, cs: &[i64], t: i64) -> S {
    S::new(v, cs.iter().map(|&c| int(c)).collect(), t).unwrap()
}

fn poly(cs: &[i64]) -> Poly<Rat> {
    Poly::from_ints(cs)
}

#[test]
fn product_of_binomials() {
    let p = series(0, &[1, 1], 10).mul(&series(0, &[1, -1], 10));
    assert_eq!(p, series(0, &[1, 0, -1], 10));
}

#[test]
fn geometric_series() {
    let g = S::constant(int(1), 8).div(&series(0, &[1, -1], 8)).unwrap();
    assert_eq!(g, series(0, &[1; 8], 8));
}

#[test]
fn division_lowers_valuation() {
    let q = S::monomial(int(1), 2, 10).div(&S::x(10)).unwrap();
    assert_eq!(q.valuation(), 1);
    assert_eq!(q.coeffs(), &[int(1)]);
    // x^2 known to x^10 over x known to x^10: relative precision 8 and 9.
    assert_eq!(q.trunc_order(), 9);
}

#[test]
fn division_by_zero_series() {
    let err = S::x(5).div(&S::zero(5)).unwrap_err();
    assert_eq!(err, SeriesError::DivisionByZeroSeries { known_to: 5 });
}

#[test]
fn compose_geometric_with_square() {
    let f = S::constant(int(1), 10).div(&series(0, &[1, -1], 10)).unwrap();
    let g = S::monomial(int(1), 2, 20);
    let h = f.compose(&g).unwrap();
    assert_eq!(h.trunc_order(), 20);
    let expected: Vec<Rat> = (0..20).map(|k| int(if k % 2 == 0 { 1 } else { 0 })).collect();
    assert_eq!(h, S::new(0, expected, 20).unwrap());
}

#[test]
fn compose_mutually_inverse_maps() {
    let t = 12;
    let f = S::from_ratfunc(&RationalFunction::from_int_lists(&[0, 1], &[1, -1]), t).unwrap();
    let g = S::from_ratfunc(&RationalFunction::from_int_lists(&[0, 1], &[1, 1]), t).unwrap();
    assert_eq!(f.compose(&g).unwrap(), S::x(t));
}

#[test]
fn compose_rejects_constant_inner() {
    let err = S::x(5).compose(&series(0, &[1, 1], 5)).unwrap_err();
    assert_eq!(err, SeriesError::InvalidInnerValuation { valuation: 0 });
}

#[test]
fn compose_laurent_outer() {
    // 1/x composed with x/(1-x) is (1-x)/x = 1/x - 1.
    let f = S::monomial(int(1), -1, 6);
    let g = S::from_ratfunc(&RationalFunction::from_int_lists(&[0, 1], &[1, -1]), 8).unwrap();
    let h = f.compose(&g).unwrap();
    assert_eq!(h.agreement(&series(-1, &[1, -1], 6)).first_difference, None);
}

#[test]
fn reverse_of_x_over_one_minus_x() {
    let f = S::from_ratfunc(&RationalFunction::from_int_lists(&[0, 1], &[1, -1]), 10).unwrap();
    let g = f.reverse().unwrap();
    let expected = S::from_ratfunc(&RationalFunction::from_int_lists(&[0, 1], &[1, 1]), 10).unwrap();
    assert_eq!(g, expected);
}

#[test]
fn reverse_requires_valuation_one() {
    assert_eq!(S::monomial(int(1), 2, 8).reverse().unwrap_err(), SeriesError::NotReversible { valuation: 2 });
}

#[test]
fn schwarzian_of_linear_map_vanishes() {
    let y = S::monomial(rat(7, 3), 1, 10);
    assert!(y.schwarzian().unwrap().is_zero());
}

#[test]
fn schwarzian_of_monomial() {
    for n in 2..6i64 {
        let s = S::monomial(rat(5, 2), n, 12).schwarzian().unwrap();
        assert_eq!(s.valuation(), -2);
        assert_eq!(s.coeff(-2), rat(1 - n * n, 2));
    }
}

/// Oracle: for y = x + x^2, y' = 1 + 2x, y'' = 2, y''' = 0, so the
/// Schwarzian is -6/(1+2x)^2 = -6 Σ (n+1)(-2x)^n.
#[test]
fn schwarzian_of_x_plus_x_squared() {
    let s = series(1, &[1, 1], 12).schwarzian().unwrap();
    let oracle: Vec<Rat> = (0..9).map(|n| int(-6 * (n + 1) * (-2i64).pow(n as u32))).collect();
    assert_eq!(s.window(0, 9), oracle);
    assert_eq!(s.window(0, 3), vec![int(-6), int(24), int(-72)]);
}

#[test]
fn schwarzian_needs_four_terms() {
    let err = series(1, &[1, 1], 4).schwarzian().unwrap_err();
    assert_eq!(err, SeriesError::InsufficientPrecision { needed: 4, available: 3 });
}

#[test]
fn resultant_of_linear_forms() {
    // Variables: 0 = x, 1 = y, 2 = z.
    let x = MultiPoly::<Rat>::var(0);
    let y = MultiPoly::<Rat>::var(1);
    let z = MultiPoly::<Rat>::var(2);
    // Sylvester determinant | -1  x ; 1  -y | = y - x.
    let r = MultiPoly::resultant(&x.sub(&z), &z.sub(&y), 2).unwrap();
    assert_eq!(r, y.sub(&x));
    let r = MultiPoly::resultant(&z.sub(&x), &z.sub(&y), 2).unwrap();
    assert_eq!(r, x.sub(&y));
}

#[test]
fn resultant_of_square_roots() {
    let x = MultiPoly::<Rat>::var(0);
    let y = MultiPoly::<Rat>::var(1);
    let z = MultiPoly::<Rat>::var(2);
    let r = MultiPoly::resultant(&z.mul(&z).sub(&x), &z.mul(&z).sub(&y), 2).unwrap();
    let d = x.sub(&y);
    assert_eq!(r, d.mul(&d));
}

#[test]
fn exact_division_detects_remainder() {
    let x = MultiPoly::<Rat>::var(0);
    let y = MultiPoly::<Rat>::var(1);
    let p = x.mul(&x).sub(&y.mul(&y));
    assert_eq!(p.exact_div(&x.sub(&y)).unwrap(), x.add(&y));
    assert_eq!(p.exact_div(&x.sub(&y.scale(&int(2)))), Err(PolyError::InexactDivision));
}

#[test]
fn specialize_parameter() {
    // a x + a(a-1) x^2 / (a - 2)
    let a = RationalFunction::x();
    let one = RationalFunction::constant(int(1));
    let two = RationalFunction::constant(int(2));
    let c2 = a.mul(&a.sub(&one)).div(&a.sub(&two)).unwrap();
    let s: ParamSeries = LaurentSeries::new(1, vec![a.clone(), c2], 3).unwrap();
    assert_eq!(param_specialize(&s, &int(1)).unwrap(), S::x(3));
    assert_eq!(param_specialize(&s, &int(2)).unwrap_err(), SeriesError::ParameterPole { order: 2 });
}

#[test]
fn rational_function_normal_form() {
    let r = RationalFunction::from_int_lists(&[-2, 2], &[-4, 0, 4]);
    assert_eq!(r, RationalFunction::from_int_lists(&[1], &[2, 2]));
    assert_eq!(r.den().lead(), int(1));
}

#[test]
fn rational_roots_with_multiplicity() {
    // (x + 1)^2 (3x - 2)(x^2 + 1)
    let p = poly(&[1, 1]).pow(2).mul(&poly(&[-2, 3])).mul(&poly(&[1, 0, 1]));
    assert_eq!(rational_roots(&p), vec![(int(-1), 2), (rat(2, 3), 1)]);
    let q = poly(&[-1, 1728]);
    assert_eq!(rational_roots(&q), vec![(rat(1, 1728), 1)]);
    assert!(rational_roots(&poly(&[-2, 0, 1])).is_empty());
}

#[test]
fn rendering() {
    assert_eq!(series(1, &[1, -3, 0, 2], 6).render_with("x", &[]), "x - 3*x^2 + 2*x^4 + O(x^6)");
    let r = RationalFunction::from_int_lists(&[-9, 5], &[28]);
    assert_eq!(r.render(&["a"]), "5/28*a - 9/28");
    assert_eq!(format_rat(&rat(-31, 36)), "-31/36");
    assert_eq!(parse_rat("1/0"), None);
    assert_eq!(parse_rat("-31/36"), Some(rat(-31, 36)));
}

fn arb_series(val: std::ops::Range<i64>) -> impl Strategy<Value = S> {
    (val, prop::collection::vec(-20i64..20, 1..7), 6i64..10).prop_map(|(v, cs, len)| {
        let t = v + len;
        S::new(v, cs.into_iter().map(|c| rat(c, 3)).collect(), t).unwrap()
    })
}

fn arb_reversible() -> impl Strategy<Value = S> {
    (1i64..6, prop::collection::vec(-9i64..9, 0..6), 6i64..11).prop_map(|(lead, rest, t)| {
        let mut cs = vec![int(lead)];
        cs.extend(rest.into_iter().map(|c| rat(c, 2)));
        S::new(1, cs, t).unwrap()
    })
}

fn same_to_common_order(a: &S, b: &S) -> bool {
    a.agreement(b).agrees()
}

proptest! {
    #[test]
    fn ring_laws(a in arb_series(-2..3), b in arb_series(-2..3), c in arb_series(-2..3)) {
        prop_assert!(same_to_common_order(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))));
        prop_assert!(same_to_common_order(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c))));
        prop_assert!(same_to_common_order(&a.add(&b), &b.add(&a)));
        prop_assert!(same_to_common_order(&a.mul(&b), &b.mul(&a)));
    }

    #[test]
    fn division_inverts_multiplication(a in arb_series(-2..3), b in arb_series(-2..3)) {
        prop_assume!(!b.is_zero());
        let q = a.mul(&b).div(&b).unwrap();
        prop_assert!(same_to_common_order(&q, &a));
    }

    #[test]
    fn reversion_is_compositional_inverse(f in arb_reversible()) {
        let g = f.reverse().unwrap();
        let id = g.compose(&f).unwrap();
        prop_assert_eq!(id.trunc_order(), f.trunc_order());
        prop_assert!(same_to_common_order(&id, &S::x(f.trunc_order())));
        prop_assert!(same_to_common_order(&f.compose(&g).unwrap(), &S::x(f.trunc_order())));
    }

    #[test]
    fn schwarzian_chain_rule(z in arb_reversible(), y in arb_reversible()) {
        let lhs = z.compose(&y).unwrap().schwarzian().unwrap();
        let dy = y.derivative();
        let rhs = z.schwarzian().unwrap().compose(&y).unwrap().mul(&dy.square()).add(&y.schwarzian().unwrap());
        prop_assert!(lhs.trunc_order() >= 3);
        prop_assert!(same_to_common_order(&lhs, &rhs));
    }

    #[test]
    fn schwarzian_antisymmetry(y in arb_reversible()) {
        // {y,x} = -y'^2 {x,y}, with {x,y} evaluated at y(x).
        let x_of_y = y.reverse().unwrap();
        let inverse_side = x_of_y.schwarzian().unwrap().compose(&y).unwrap();
        let rhs = inverse_side.mul(&y.derivative().square()).neg();
        prop_assert!(same_to_common_order(&y.schwarzian().unwrap(), &rhs));
    }

    #[test]
    fn resultant_vanishes_on_common_root(r in -6i64..6, s in -6i64..6, u in -6i64..6) {
        // p = (z - r)(z - s) and q = (z - u)(z + 1) share a root iff u ∈ {r, s} or -1 ∈ {r, s}.
        let z = MultiPoly::<Rat>::var(0);
        let lin = |c: i64| z.sub(&MultiPoly::constant(int(c)));
        let p = lin(r).mul(&lin(s));
        let q = lin(u).mul(&lin(-1));
        let res = MultiPoly::resultant(&p, &q, 0).unwrap();
        let common = [u, -1].iter().any(|c| *c == r || *c == s);
        prop_assert_eq!(res.is_zero(), common);
    }
}
