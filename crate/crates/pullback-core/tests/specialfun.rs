use proptest::prelude::*;
use pullback_core::exactcore::{int, rat, LaurentSeries, MultiPoly, Poly, Rat, RatFunc, RationalFunction, Ring};
use pullback_core::specialfun::*;

fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
    RatFunc::frac(Poly::from_ints(num), Poly::from_ints(den))
}

fn series(r: &RationalFunction, order: i64) -> LaurentSeries<Rat> {
    LaurentSeries::from_ratfunc(r, order).unwrap()
}

fn gauss(a: Rat, b: Rat, c: Rat, order: i64) -> LaurentSeries<Rat> {
    hyp_series(&HypergeometricSpec::gauss(a, b, c), order).unwrap()
}

#[test]
fn gauss_series_coefficients() {
    let f = gauss(rat(1, 12), rat(5, 12), int(1), 5);
    assert_eq!(f.coeff(0), int(1));
    assert_eq!(f.coeff(1), rat(5, 144));
    assert_eq!(f.coeff(2), rat(1105, 82944));
    let g = gauss(rat(1, 2), rat(1, 2), int(1), 3);
    assert_eq!(g.coeff(1), rat(1, 4));
}

#[test]
fn invalid_lower_parameter() {
    let spec = HypergeometricSpec::gauss(int(1), int(1), int(-2));
    assert_eq!(hyp_series(&spec, 6), Err(SpecialFunError::InvalidLowerParameter { index: 0, order: 3 }));
}

#[test]
fn three_f_two_integrality_after_rescaling() {
    let spec = HypergeometricSpec::new(vec![rat(1, 9), rat(4, 9), rat(5, 9)], vec![rat(1, 3), int(1)]);
    let f = hyp_series(&spec, 13).unwrap();
    let first_non_integral = |base: i64| {
        (0..13).find(|&n| !(f.coeff(n) * Rat::from(num_bigint::BigInt::from(base).pow(n as u32))).is_integer())
    };
    assert_eq!(first_non_integral(729), None);
    assert_eq!(first_non_integral(243), Some(3));
    assert_eq!(f.coeff(3) * int(243).pow(3), rat(3124550, 9));
}

fn symbolic_m() -> RationalFunction {
    RationalFunction::x()
}

#[test]
fn heun_first_coefficient() {
    let m = symbolic_m();
    let h = heun_series(&HeunSpec::elliptic(m.clone()), 4).unwrap();
    let expected = RatFunc::frac(Poly::from_ints(&[1, 1]), Poly::from_ints(&[0, 6]));
    assert_eq!(h.coeff(1), expected);
}

#[test]
fn heun_doubling_companion_series() {
    // G(x) = H(4Mx); 2xG' + G = (1-4x)^{-1/2} (1-4Mx)^{-1/2}
    let order = 10;
    let m = symbolic_m();
    let h = heun_series(&HeunSpec::elliptic(m.clone()), order).unwrap();
    let four_m = m.scale(&int(4));
    let g_coeffs: Vec<_> = (0..order).map(|n| h.coeff(n).mul(&four_m.pow(n as i32).unwrap())).collect();
    let g = LaurentSeries::new(0, g_coeffs, order).unwrap();
    let g_tilde = LaurentSeries::x(order).mul(&g.derivative()).scale(&RationalFunction::from_int(2)).add(&g);
    let quarter = RationalFunction::constant(rat(1, 4));
    let rhs =
        binomial_series(&quarter, &rat(-1, 2), order).mul(&binomial_series(&four_m.inv().unwrap(), &rat(-1, 2), order));
    assert!(g_tilde.agreement(&rhs).agrees());
    let c = |v: &[i64]| RatFunc::from_poly(Poly::from_ints(v));
    assert_eq!(g_tilde.coeff(0), c(&[1]));
    assert_eq!(g_tilde.coeff(1), c(&[2, 2]));
    assert_eq!(g_tilde.coeff(2), c(&[6, 4, 6]));
    // 4(M+1)(5M^2-2M+5)
    assert_eq!(g_tilde.coeff(3), c(&[20, 12, 12, 20]));
}

#[test]
fn heun_reduces_to_gauss_at_minus_one() {
    let order = 14;
    let h = heun_series(&HeunSpec::elliptic(int(-1)), order).unwrap();
    let x2 = LaurentSeries::monomial(int(1), 2, order);
    let prefactor = binomial_series(&int(1), &rat(-1, 4), order).compose(&x2).unwrap();
    let arg = series(&rf(&[0, 0, -1], &[1, 0, -1]), order);
    let f = gauss(rat(1, 4), rat(3, 4), rat(5, 4), order).compose(&arg).unwrap();
    assert!(h.agreement(&prefactor.mul(&f)).agrees());
}

#[test]
fn heun_reduces_to_gauss_at_two_and_one_half() {
    let order = 12;
    for (m, prefactor_root, arg) in
        [(int(2), int(1), rf(&[0, 0, -1], &[4, -4])), (rat(1, 2), rat(1, 2), rf(&[0, 0, -1], &[1, -2]))]
    {
        let h = heun_series(&HeunSpec::elliptic(m), order).unwrap();
        let pre = binomial_series(&prefactor_root, &rat(-1, 4), order);
        let f = gauss(rat(1, 4), rat(3, 4), rat(5, 4), order).compose(&series(&arg, order)).unwrap();
        assert!(h.agreement(&pre.mul(&f)).agrees());
    }
}

#[test]
fn gauss_operator_of_the_reference_family() {
    let op = gauss_operator(&rat(1, 12), &rat(5, 12), &int(1));
    assert_eq!(op.a, rf(&[-2, 3], &[0, -2, 2]));
    assert_eq!(op.b, rf(&[5], &[0, -144, 144]));
    assert_eq!(op.w, rf(&[-36, 41, -32], &[0, 0, 72, -144, 72]));
    let zero_beta = gauss_operator(&int(0), &rat(1, 3), &int(1));
    assert!(Ring::is_zero(&zero_beta.b));
}

#[test]
fn rank_two_catalog_entries() {
    let vid = rank2_catalog("vid").unwrap();
    assert_eq!(vid.n, 4);
    assert_eq!(vid.a_r(), &rf(&[3, -5], &[0, 4, -4]));
    let genus2 = rank2_catalog("genus2").unwrap();
    assert_eq!(genus2.n, 6);
    assert_eq!(genus2.a_r(), &rf(&[-5, 7], &[0, -6, 6]));
    assert_eq!(genus2.operator.u_exponents, vec![(int(0), rat(5, 6)), (int(1), rat(1, 3))]);
    let heun = heun_case(symbolic_m());
    assert_eq!(heun.n, 2);
    assert_eq!(heun.a_r(), &heun.a_r_printed);
    assert!(matches!(rank2_catalog("nope"), Err(SpecialFunError::UnknownCase(_))));
    assert!(rank2_catalog("heun(1)").is_err());
    assert_eq!(rank2_catalog("heun(5)").unwrap().n, 2);
}

#[test]
fn log_derivative_of_u_matches_printed_a_r() {
    for name in rank2_case_names() {
        let case = rank2_catalog(name).unwrap();
        assert_eq!(case.a_r(), &case.a_r_printed, "{name}");
        assert_eq!(a_r_from_u(&case), case.a_r_printed, "{name}");
    }
}

#[test]
fn g_series_matches_hypergeometric_form() {
    for name in rank2_case_names() {
        let case = rank2_catalog(name).unwrap();
        let spec = case.hypergeometric.clone().unwrap();
        let f = hyp_series(&spec, 12).unwrap();
        assert!(case.g_series(12).agreement(&f).agrees(), "{name}");
    }
}

#[test]
fn catalog_pullbacks_scale_q() {
    let order = 12;
    for name in rank2_case_names() {
        let case = rank2_catalog(name).unwrap();
        let q = case.q_series(order);
        for pb in &case.pullbacks {
            let r = series(&pb.map, order);
            let lhs = q.compose(&r).unwrap();
            let rhs = q.scale(&pb.scale);
            let agreement = lhs.agreement(&rhs);
            assert!(agreement.agrees() && agreement.order >= order, "{name}: {agreement:?}");
        }
    }
}

#[test]
fn heun_doubling_scales_q_symbolically() {
    let order = 8;
    let case = heun_case(symbolic_m());
    let q = case.q_series(order);
    let pb = &case.pullbacks[0];
    let lhs = q.compose(&LaurentSeries::from_ratfunc(&pb.map, order).unwrap()).unwrap();
    assert!(lhs.agreement(&q.scale(&pb.scale)).agrees());
    // Q = x H(x)^2 with the Heun function itself.
    let h = heun_series(&HeunSpec::elliptic(symbolic_m()), order).unwrap();
    assert!(q.agreement(&h.square().shift(1)).agrees());
}

#[test]
fn w_rank2_examples() {
    let heun = heun_case(int(5));
    let m = int(5);
    // -3/(8(x-M)^2) - (2x-1)/(4(M-x)x(x-1)) - (4x^2-4x+3)/(8x^2(x-1)^2)
    let x_minus_m = Poly::new(vec![-m.clone(), int(1)]);
    let t1 = RatFunc::frac(Poly::from_ints(&[-3]), x_minus_m.pow(2).scale(&int(8)));
    let m_minus_x = Poly::new(vec![m.clone(), int(-1)]);
    let t2 = RatFunc::frac(Poly::from_ints(&[-1, 2]), m_minus_x.mul(&Poly::from_ints(&[0, -4, 4])));
    let t3 = rf(&[3, -4, 4], &[0, 0, 8, -16, 8]);
    let expected = t1.sub(&t2).sub(&t3);
    assert_eq!(w_rank2(heun.a_r()), expected);
    assert!(Ring::is_zero(&w_rank2::<Rat>(&RatFunc::zero())));
    let c = rat(3, 7);
    let a_r = RatFunc::frac(Poly::constant(c.clone()), Poly::from_ints(&[0, 1]));
    let w = RatFunc::frac(Poly::constant(&c * &c / int(2) - &c), Poly::from_ints(&[0, 0, 1]));
    assert_eq!(w_rank2(&a_r), w);
}

#[test]
fn three_f_two_invariant_and_q() {
    let p = [rat(1, 9), rat(4, 9), rat(5, 9), rat(1, 3), int(1)];
    let w = w_3f2(&p[0], &p[1], &p[2], &p[3], &p[4]);
    assert_eq!(w, rf(&[-207, 261, -230], &[0, 0, 486, -972, 486]));
    let q = q_3f2(&p[0], &p[1], &p[2], &p[3], &p[4]);
    let cubic = Poly::<Rat>::from_ints(&INVARIANT_3F2_CUBIC);
    let ratio = q.monic().div_rem(&cubic.monic());
    assert!(ratio.1.is_zero() && ratio.0.degree() == Some(0));
}

#[test]
fn clausen_parameters_annihilate_q() {
    let a = MultiPoly::<Rat>::var(0);
    let b = MultiPoly::<Rat>::var(1);
    let half = MultiPoly::constant(rat(1, 2));
    let two = MultiPoly::constant(int(2));
    let q = q_3f2(&two.mul(&a), &a.add(&b), &two.mul(&b), &a.add(&b).add(&half), &two.mul(&a.add(&b)));
    assert!(q.coeffs().iter().all(|c| c.is_zero()));
}

#[test]
fn higher_family_invariants() {
    let w4 = w_4f3();
    let s4 = series(&w4, 3);
    assert_eq!(s4.valuation(), -2);
    assert_eq!(s4.coeff(-2), rat(-1, 2));
    let w2 = w_2f2();
    assert_eq!(w2, rf(&[-3, 0, 1], &[0, 0, 6]));
    assert_eq!(series(&w2, 1).coeff(-2), rat(-1, 2));
    assert_eq!(w4.num().coeffs().len(), 3);
}

#[test]
fn eisenstein_series() {
    let e4 = eisenstein(EisensteinKind::E4, 4);
    assert_eq!(e4.coeffs(), &[int(1), int(240), int(2160), int(6720)]);
    let e6 = eisenstein(EisensteinKind::E6, 3);
    assert_eq!(e6.coeffs(), &[int(1), int(-504), int(-16632)]);
    for kind in [EisensteinKind::E4, EisensteinKind::E6] {
        assert_eq!(eisenstein(kind, 30), eisenstein_lambert(kind, 30));
    }
}

#[test]
fn quarter_gauss_fourth_power_identity() {
    // x F(x)^4 = P F(P)^4 / 16 with P = 16x(1-x)/(1+4x-4x^2)^2
    let order = 14;
    let f = gauss(rat(1, 4), rat(3, 4), rat(5, 4), order);
    let p = series(&rf(&[0, 16, -16], &[1, 8, 8, -32, 16]), order);
    let lhs = f.pow(4).unwrap().shift(1);
    let rhs = p.mul(&f.compose(&p).unwrap().pow(4).unwrap()).scale(&rat(1, 16));
    assert!(lhs.agreement(&rhs).agrees());
}

#[test]
fn two_gauss_representations_coincide() {
    // (1-x) F([1/2,1],[5/4])^4 = F([1/4,3/4],[5/4])^4
    let order = 14;
    let f1 = gauss(rat(1, 2), int(1), rat(5, 4), order);
    let f2 = gauss(rat(1, 4), rat(3, 4), rat(5, 4), order);
    let one_minus_x = LaurentSeries::from_poly(&Poly::from_ints(&[1, -1]), order);
    let lhs = one_minus_x.mul(&f1.pow(4).unwrap());
    assert!(lhs.agreement(&f2.pow(4).unwrap()).agrees());
}

#[test]
fn transmutation_triples() {
    let triples = [
        (rf(&[0, -4, 4], &[1, -4, 4]), rf(&[0, -4], &[1, -2, 1]), rf(&[0, 4, -4], &[1])),
        (
            rf(&[0, -8, 12, -6, 1], &[1, -6, 12, -8]),
            rf(&[0, 64], &[1, 36, 270, -972, 729]),
            rf(&[0, 0, 1], &[4, -4, 1]),
        ),
    ];
    for (r1, r2, r3) in triples {
        assert_eq!(r3.compose(&r1).unwrap(), r2.compose(&r3).unwrap());
    }
}

#[test]
fn heun_transmutation_relations() {
    let p = rf(&[0, 16, -16], &[1, 8, 8, -32, 16]);
    let cases = [
        (rf(&[0, 0, -1], &[4, -4]), rf(&[0, 16, -24, 8], &[4, 0, -4, 0, 1])),
        (rf(&[0, 0, -1], &[1, 0, -1]), rf(&[0, 4, 0, -4], &[1, 0, 2, 0, 1])),
        (rf(&[0, 0, -1], &[1, -2]), rf(&[0, 4, -12, 8], &[1, 0, -4, 0, 4])),
    ];
    for (pk, big_pk) in cases {
        assert_eq!(p.compose(&pk).unwrap(), pk.compose(&big_pk).unwrap());
    }
}

#[test]
fn invariant_3f2_shape() {
    let inv = invariant_3f2();
    assert_eq!(inv.num().degree(), Some(24));
    assert_eq!(inv.den().degree(), Some(24));
    assert_eq!(P8_INVARIANT_3F2.len(), 9);
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..20, 1i64..8).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn gauss_w_matches_definition(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assume!(c != int(0));
        let op = gauss_operator(&a, &b, &c);
        let half = rat(1, 2);
        let w = op.a.derivative().add(&op.a.mul(&op.a).scale(&half)).sub(&op.b.scale(&int(2)));
        prop_assert_eq!(op.w, w);
    }

    #[test]
    fn equal_upper_parameters_kill_cubic_term(a in small_rat(), d in small_rat(), e in small_rat()) {
        let q = q_3f2(&a, &a, &a, &d, &e);
        prop_assert!(Ring::is_zero(&q.coeff(3)));
    }
}
