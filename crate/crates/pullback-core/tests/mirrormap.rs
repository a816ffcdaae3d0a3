use pullback_core::conditions::*;
use pullback_core::exactcore::{int, lift_series, parse_rat, rat, LaurentSeries, Rat, RatFunc};
use pullback_core::mirrormap::*;
use pullback_core::modular::{analytic_branches, load_curve};

fn assert_zero(report: &ResidualReport<Rat>, min_order: i64) {
    assert!(
        report.passes(min_order),
        "residual fails at {:?}, known through x^{}",
        report.first_failure().map(|(k, _)| k),
        report.verified_order
    );
}

fn ints(values: &[&str]) -> Vec<Rat> {
    values.iter().map(|s| parse_rat(s).unwrap()).collect()
}

fn branch(curve: &str, valuation: i64, leading: Rat, order: i64) -> LaurentSeries<Rat> {
    analytic_branches(&load_curve(curve).unwrap(), order).unwrap().find(valuation, &leading).unwrap().clone()
}

#[test]
fn nome_and_hauptmodul_integer_series() {
    let pair = solve_nome(12).unwrap();
    assert_eq!(pair.nome.valuation(), 1);
    assert_eq!(pair.nome.coeff(1), rat(1, 1728));
    assert_eq!(pair.hauptmodul.coeff(1), int(1728));
    let q_tilde = pair.nome_integer_form();
    let expected = ints(&[
        "1",
        "744",
        "750420",
        "872769632",
        "1102652742882",
        "1470561136292880",
        "2037518752496883080",
        "2904264865530359889600",
        "4231393254051181981976079",
    ]);
    assert_eq!(q_tilde.window(1, 10), expected);
    let x_tilde = pair.hauptmodul_integer_form();
    let expected = ints(&[
        "1",
        "-744",
        "356652",
        "-140361152",
        "49336682190",
        "-16114625669088",
        "4999042477430456",
        "-1492669384085015040",
        "432762759484818142437",
    ]);
    assert_eq!(x_tilde.window(1, 10), expected);
}

#[test]
fn mirror_pair_residuals() {
    let pair = solve_nome(16).unwrap();
    let w = hauptmodul_w();
    assert_zero(&nome_residual(&w, &pair.nome, 10).unwrap(), 10);
    assert_zero(&hauptmodul_residual(&w, &pair.hauptmodul, 10).unwrap(), 10);
    let round = pair.hauptmodul.compose(&pair.nome).unwrap();
    assert!(round.agreement(&LaurentSeries::x(16)).agrees());
    let round = pair.nome.compose(&pair.hauptmodul).unwrap();
    assert!(round.agreement(&LaurentSeries::x(16)).agrees());
    assert_eq!(solve_nome(3), Err(MirrorError::InvalidOrder(3)));
}

#[test]
fn nome_residual_is_scale_invariant() {
    let pair = solve_nome(14).unwrap();
    let lifted = lift_series(&pair.nome).scale(&RatFunc::x());
    let w = hauptmodul_w().map_coeffs(|c| RatFunc::constant(c.clone()));
    let report = nome_residual(&w, &lifted, 10).unwrap();
    assert!(report.passes(10));
}

#[test]
fn isogenies_give_the_schwarzian_families() {
    let order = 10;
    let pair = solve_nome(order + 2).unwrap();
    let w = hauptmodul_w();

    let symbolic = isogeny_decompose(&pair, 1, &RatFunc::<Rat>::x(), order).unwrap();
    let family = solve_schwarzian_family_symbolic(&w, 1, order).unwrap();
    assert!(symbolic.agreement(&family).agrees());

    let m2 = isogeny_decompose(&pair, 2, &int(1), order).unwrap();
    let ag = m2.agreement(&branch("M2", 2, rat(1, 1728), order));
    assert!(ag.agrees() && ag.order >= 8, "{ag:?}");
    let m3 = isogeny_decompose(&pair, 3, &int(1), order).unwrap();
    let ag = m3.agreement(&branch("M3", 3, rat(1, 1728 * 1728), order));
    assert!(ag.agrees() && ag.order >= 8, "{ag:?}");
    assert_eq!(isogeny_decompose(&pair, 0, &int(1), order), Err(MirrorError::InvalidDegree));
}

#[test]
fn isogenies_satisfy_the_schwarzian_condition() {
    let pair = solve_nome(16).unwrap();
    let w = hauptmodul_w();
    for (n, e) in [(1, int(5)), (2, int(1)), (2, int(3)), (3, int(1))] {
        let y = isogeny_decompose(&pair, n, &e, 16).unwrap();
        assert_zero(&schwarzian_residual(&w, &y, 8).unwrap(), 8);
    }
}

#[test]
fn isogenies_compose() {
    let order = 16;
    let pair = solve_nome(order).unwrap();
    let two = isogeny_decompose(&pair, 2, &int(1), order).unwrap();
    let three = isogeny_decompose(&pair, 3, &int(1), order).unwrap();
    let six = isogeny_decompose(&pair, 6, &int(1), order).unwrap();
    let ab = two.compose(&three).unwrap();
    let ba = three.compose(&two).unwrap();
    assert!(ab.agreement(&six).agrees() && ba.agreement(&six).agrees());
    assert!(ab.agreement(&six).order >= 12);
}

#[test]
fn eisenstein_identities() {
    let pair = solve_nome(12).unwrap();
    let reports = eisenstein_identity_suite(&pair, 10).unwrap();
    assert_eq!(reports.len(), 5);
    for named in &reports {
        assert_zero(&named.report, 10);
    }
}
