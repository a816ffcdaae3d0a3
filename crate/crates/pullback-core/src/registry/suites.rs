//! Per-kind check suites. Every check lands in the run as a named report;
//! only malformed references abort a case.

use std::cell::RefCell;
use std::collections::BTreeMap;

use super::runner::{k1, k1_id, Run, K1};
use super::{CaseKind, OperatorRef, ParamValue, PullbackSource, PullbackSpec};
use crate::conditions::{
    check_commutation, composition_closure_check, diffalg_suite, e_factors, leading_obstruction,
    one_parameter_remainder, rank2_residual, rank2_residual_rational, rank2_subcase_check, schwarzian_qn_residual,
    schwarzian_residual, solve_identity_family, solve_rank2_family, solve_rank2_family_symbolic,
    solve_schwarzian_family, solve_schwarzian_family_symbolic, verify_covariance, ConditionError, HigherFamily,
    IdentityOutcome,
};
use crate::exactcore::{
    int, param_specialize, rat, Field, LaurentSeries, MultiPoly, ParamSeries, Poly, Rat, RatFunc, Ring,
};
use crate::heun_elliptic::{
    globally_bounded_g, heun_covariance, j_invariant, master_surface, multiplication_map, rp_series_check,
    rp_series_law, sn2_series, specialization_suite, EllipticParam,
};
use crate::mirrormap::{
    eisenstein_identity_suite, hauptmodul_residual, hauptmodul_w, isogeny_decompose, nome_residual, solve_nome,
};
use crate::modular::{
    analytic_branches, build_m4, cal_a_series, genus2_identity_check, load_curve, verify_cal_a, verify_parametrization,
    ParametrizationKind, ParametrizationResidual,
};
use crate::specialfun::{
    a_r_from_u, doubling_map, gauss_operator, heun_case, heun_series, hyp_series, invariant_3f2, p_w_3f2, q_3f2,
    rank2_catalog, w_3f2, w_rank2, HeunSpec, HypergeometricSpec, INVARIANT_3F2_CUBIC, P8_INVARIANT_3F2,
};

type Outcome = Result<(), String>;

/// Depth of symbolic family objects. Symbolic solves grow fast with the
/// order, and the numeric members carry the order-dependent checks.
const SYMBOLIC_TERMS: i64 = 6;

pub(crate) fn dispatch(run: &mut Run) -> Outcome {
    let case = run.case;
    match &case.operator {
        OperatorRef::Rank2(name) => rank2(run, name),
        OperatorRef::Gauss(p) if case.kind == CaseKind::Negative => negative_gauss(run, p),
        OperatorRef::Gauss(p) => schwarzian_gauss(run, p),
        OperatorRef::ThreeFTwo(p) => three_f_two(run, p),
        OperatorRef::Heun(ParamValue::Symbolic) => {
            let param = EllipticParam::new(K1::x()).map_err(|e| e.to_string())?;
            heun(run, &param, k1_id)
        }
        OperatorRef::Heun(ParamValue::Value(m)) => {
            let param = EllipticParam::new(m.clone()).map_err(|e| e.to_string())?;
            heun(run, &param, k1)
        }
        OperatorRef::Hauptmodul => mirror(run),
        OperatorRef::Higher(family) => higher(run, *family),
        OperatorRef::Parametrizations => parametrizations(run),
        OperatorRef::CalA => cal_a(run),
    }
}

fn map_of(num: &[Rat], den: &[Rat]) -> RatFunc<Rat> {
    RatFunc::frac(Poly::new(num.to_vec()), Poly::new(den.to_vec()))
}

fn series_of(map: &RatFunc<Rat>, order: i64) -> Result<LaurentSeries<Rat>, String> {
    LaurentSeries::from_ratfunc(map, order).map_err(|e| e.to_string())
}

/// The analytic branch `leading · x^valuation + ...` of a curve, if present.
fn branch(
    run: &mut Run,
    curve: &str,
    valuation: i64,
    leading: &Rat,
    order: i64,
) -> Result<Option<LaurentSeries<Rat>>, String> {
    run.touch(&["modular::load_curve", "modular::analytic_branches"]);
    let record = load_curve(curve).map_err(|e| e.to_string())?;
    let set = analytic_branches(&record, order).map_err(|e| e.to_string())?;
    Ok(set.find(valuation, leading).cloned())
}

fn hauptmodul_branch(run: &mut Run, n: i64, order: i64) -> Result<Option<LaurentSeries<Rat>>, String> {
    let leading = int(1728).pow(1 - n as i32);
    branch(run, &format!("M{n}"), n, &leading, order)
}

/// Compares a fallible `lhs ∘ rhs` with `expected`.
fn agree_composed(
    run: &mut Run,
    name: &str,
    composed: Result<LaurentSeries<Rat>, impl std::fmt::Display>,
    expected: &LaurentSeries<Rat>,
) {
    run.touch(&["exactcore::series_compose"]);
    match composed {
        Ok(c) => run.agree(name, &c, expected),
        Err(e) => run.obstructed(name, e),
    }
}

fn rank2(run: &mut Run, name: &str) -> Outcome {
    run.touch(&["specialfun::rank2_catalog"]);
    let case = rank2_catalog(name).map_err(|e| e.to_string())?;
    let order = run.order;
    let a_r = case.a_r().clone();
    run.identity("operator.a_r", &a_r_from_u(&case).sub(&case.a_r_printed));
    if let Some(h) = &case.hypergeometric {
        run.touch(&["specialfun::hyp_series"]);
        match hyp_series(h, order) {
            Ok(f) => run.agree("operator.hypergeometric_form", &case.g_series(order), &f),
            Err(e) => run.obstructed("operator.hypergeometric_form", e),
        }
    }

    run.touch(&["exactcore::series_arith", "specialfun::w_rank2", "conditions::schwarzian_qn_residual"]);
    let q = case.q_series(order + 4);
    run.object("q", &q, k1);
    run.report("q.schwarzian_qn", schwarzian_qn_residual(&w_rank2(&a_r), case.n, &q, order));

    for (i, pb) in run.case.pullbacks.iter().enumerate() {
        let label = format!("pullback{i}");
        let y = match &pb.source {
            PullbackSource::Map { num, den } => {
                let map = map_of(num, den);
                run.touch(&["conditions::rank2_residual"]);
                run.report(format!("{label}.rank2"), rank2_residual_rational(&a_r, &map, order));
                series_of(&map, order + 4)?
            }
            PullbackSource::Branch { curve, valuation, leading } => {
                let Some(y) = branch(run, curve, *valuation, leading, order + 6)? else {
                    run.obstructed(label, format!("{curve} has no analytic branch {leading}·x^{valuation}"));
                    continue;
                };
                if y.valuation() >= 1 {
                    run.touch(&["conditions::rank2_residual"]);
                    run.report(format!("{label}.rank2"), rank2_residual(&a_r, &y, order));
                }
                y
            }
            other => return Err(format!("pullback {other:?} does not apply to a rank-two operator")),
        };
        run.object(label.clone(), &y, k1);
        if y.valuation() < 1 {
            continue;
        }
        run.touch(&["conditions::verify_covariance", "exactcore::series_compose"]);
        run.report(format!("{label}.covariance"), verify_covariance(&q, &y, &pb.scale, order));
        run.touch(&["conditions::rank2_subcase_check", "exactcore::schwarzian"]);
        run.report(format!("{label}.subcase"), rank2_subcase_check(&a_r, &y, order));
    }
    run.report("identity.subcase", rank2_subcase_check(&a_r, &LaurentSeries::x(order + 4), order));

    run.touch(&["conditions::diffalg_suite"]);
    match diffalg_suite(&case, order) {
        Ok(list) => {
            for named in list {
                run.residual(format!("diffalg.{}", named.name), &named.report);
            }
        }
        Err(e) => run.obstructed("diffalg", e),
    }
    match e_factors(&case, order) {
        Ok((plus, minus)) => {
            let (p, m) = (plus.vanishes_through(order), minus.vanishes_through(order));
            run.exact("diffalg.one_e_factor_vanishes", p != m, || format!("E+ vanishes: {p}, E- vanishes: {m}"));
        }
        Err(e) => run.obstructed("diffalg.one_e_factor_vanishes", e),
    }

    run.touch(&["conditions::solve_rank2_family", "exactcore::param_specialize", "conditions::check_commutation"]);
    match solve_rank2_family_symbolic(&a_r, order + 2) {
        Ok(family) => {
            run.object("family", &family, k1_id);
            run.object("family.s", &one_parameter_remainder(&family), k1_id);
            let at = |v: Rat| param_specialize(&family, &v);
            match (at(int(2)), at(rat(-1, 3))) {
                (Ok(two), Ok(third)) => {
                    run.report("family.rank2", rank2_residual(&a_r, &two, order));
                    run.report("family.commute", check_commutation(&two, &third, order));
                }
                (Err(e), _) | (_, Err(e)) => run.obstructed("family.specialize", e),
            }
        }
        Err(e) => run.obstructed("family", e),
    }

    if name == "genus2" {
        run.touch(&["modular::genus2_identity_check"]);
        match genus2_identity_check(order) {
            Ok(report) => {
                run.residual("genus2.identity".into(), &report.identity);
                run.residual("genus2.curve_relation".into(), &report.curve_relation);
                run.residual("genus2.reciprocal_branches".into(), &report.reciprocal_branches);
            }
            Err(e) => run.obstructed("genus2.identity", e),
        }
    }
    Ok(())
}

/// Numeric family members `lead · x^N + ...` through `order`.
fn numeric_family(w: &RatFunc<Rat>, n: u32, lead: &Rat, order: i64) -> Result<LaurentSeries<Rat>, ConditionError> {
    solve_schwarzian_family(w, n, lead, order)
}

fn schwarzian_gauss(run: &mut Run, [al, be, ga]: &[Rat; 3]) -> Outcome {
    run.touch(&["specialfun::gauss_operator", "conditions::schwarzian_residual", "exactcore::schwarzian"]);
    let w = gauss_operator(al, be, ga).w;
    let order = run.order;
    run.report("identity.schwarzian", schwarzian_residual(&w, &LaurentSeries::x(order + 4), order));

    run.touch(&["conditions::solve_schwarzian_family", "exactcore::param_specialize"]);
    let mut symbolic: BTreeMap<u32, ParamSeries> = BTreeMap::new();
    for &n in &run.case.families {
        let label = format!("family{n}");
        match solve_schwarzian_family_symbolic(&w, n, n as i64 + SYMBOLIC_TERMS) {
            Ok(y) => {
                run.object(label.clone(), &y, k1_id);
                if n == 1 {
                    run.object("family1.s", &one_parameter_remainder(&y), k1_id);
                }
                symbolic.insert(n, y);
            }
            Err(e) => {
                run.obstructed(label, e);
                continue;
            }
        }
        let lead = int(2);
        match numeric_family(&w, n, &lead, order + 2 * n as i64 + 4) {
            Ok(y) => {
                run.report(format!("{label}.schwarzian"), schwarzian_residual(&w, &y, order));
                match param_specialize(&symbolic[&n], &lead) {
                    Ok(s) => {
                        let depth = s.trunc_order();
                        run.agree_to(format!("{label}.specializes"), &s, &y, depth)
                    }
                    Err(e) => run.obstructed(format!("{label}.specializes"), e),
                }
            }
            Err(e) => run.obstructed(format!("{label}.schwarzian"), e),
        }
    }

    interaction_laws(run, &w);

    for (i, pb) in run.case.pullbacks.iter().enumerate() {
        schwarzian_pullback(run, &w, i, pb)?;
    }
    if run.case.pullbacks.iter().any(|p| matches!(&p.source, PullbackSource::Branch { curve, .. } if curve == "M4")) {
        m4_pattern(run)?;
    }
    Ok(())
}

/// Composition laws among the families `y_N(a)` with `N` in the case's list.
fn interaction_laws(run: &mut Run, w: &RatFunc<Rat>) {
    let has = |n: u32| run.case.families.contains(&n);
    if !has(1) || !has(2) {
        return;
    }
    let order = run.order;
    let work = order + 10;
    let (e, f, a) = (rat(3, 2), int(-2), rat(2, 5));
    let cache = RefCell::new(BTreeMap::new());
    let fam = |n: u32, lead: &Rat| {
        cache.borrow_mut().entry((n, lead.clone())).or_insert_with(|| numeric_family(w, n, lead, work)).clone()
    };
    let mut laws: Vec<(String, u32, Rat, u32, Rat, u32, Rat)> = vec![
        ("laws.y1_after_y1".into(), 1, e.clone(), 1, f.clone(), 1, &e * &f),
        ("laws.y1_after_y2".into(), 1, e.clone(), 2, a.clone(), 2, &a * &e),
        ("laws.y2_after_y1".into(), 2, a.clone(), 1, e.clone(), 2, &a * &e * &e),
    ];
    if has(3) {
        let b = rat(-3, 4);
        laws.push(("laws.y1_after_y3".into(), 1, e.clone(), 3, b.clone(), 3, &b * &e));
        laws.push(("laws.y3_after_y1".into(), 3, b.clone(), 1, e.clone(), 3, &b * &e * &e * &e));
        laws.push(("laws.y2_after_y3".into(), 2, a.clone(), 3, b.clone(), 6, &a * &b * &b));
        laws.push(("laws.y3_after_y2".into(), 3, b.clone(), 2, a.clone(), 6, &b * &a * &a * &a));
    }
    run.touch(&["exactcore::series_compose"]);
    for (name, n_out, v_out, n_in, v_in, n_res, v_res) in laws {
        match (fam(n_out, &v_out), fam(n_in, &v_in), fam(n_res, &v_res)) {
            (Ok(outer), Ok(inner), Ok(expected)) => agree_composed(run, &name, outer.compose(&inner), &expected),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => run.obstructed(name, e),
        }
    }

    run.touch(&["conditions::composition_closure_check", "conditions::check_commutation"]);
    match (fam(2, &a), fam(1, &e)) {
        (Ok(y2), Ok(y1)) => run.report("laws.closure", composition_closure_check(w, &y2, &y1, order)),
        (Err(err), _) | (_, Err(err)) => run.obstructed("laws.closure", err),
    }
    if has(3) {
        match (fam(2, &a), fam(3, &(&a * &a)), fam(3, &(&a * &int(3)))) {
            (Ok(y2), Ok(y3_sq), Ok(y3_other)) => {
                run.report("laws.commute_when_b_is_a_squared", check_commutation(&y2, &y3_sq, order));
                // The commutator first shows up well past the leading terms.
                match check_commutation(&y2, &y3_other, order + 8) {
                    Ok(r) => run.exact("laws.no_commuting_otherwise", !r.is_zero, || "commutator vanishes".into()),
                    Err(err) => run.obstructed("laws.no_commuting_otherwise", err),
                }
            }
            (Err(err), _, _) | (_, Err(err), _) | (_, _, Err(err)) => run.obstructed("laws.commute", err),
        }
    }
}

fn schwarzian_pullback(run: &mut Run, w: &RatFunc<Rat>, i: usize, pb: &PullbackSpec) -> Outcome {
    let order = run.order;
    let label = format!("pullback{i}");
    let work = order + 2 * pb.exponent as i64 + 6;
    let y = match &pb.source {
        PullbackSource::Map { num, den } => series_of(&map_of(num, den), work)?,
        PullbackSource::Branch { curve, valuation, leading } => {
            let Some(y) = branch(run, curve, *valuation, leading, work)? else {
                run.obstructed(label, format!("{curve} has no analytic branch {leading}·x^{valuation}"));
                return Ok(());
            };
            y
        }
        other => return Err(format!("pullback {other:?} does not apply to a Gauss operator")),
    };
    run.object(label.clone(), &y, k1);
    run.report(format!("{label}.schwarzian"), schwarzian_residual(w, &y, order));
    let lead = y.leading().cloned().unwrap_or_else(Rat::zero);
    let n = y.valuation();
    if n >= 1 {
        match numeric_family(w, n as u32, &lead, work) {
            Ok(solved) => run.agree(format!("{label}.family"), &y, &solved),
            Err(e) => run.obstructed(format!("{label}.family"), e),
        }
    }
    if n == 1 && lead == int(-1) {
        agree_composed(run, &format!("{label}.involution"), y.compose(&y), &LaurentSeries::x(work));
    }
    Ok(())
}

/// The degree-four modular curve from the resultant, and how its branches
/// relate to those of degree two and three.
fn m4_pattern(run: &mut Run) -> Outcome {
    let order = run.order;
    run.touch(&["modular::build_m4", "exactcore::poly_resultant"]);
    match build_m4() {
        Ok(built) => {
            let stored = load_curve("M4").map_err(|e| e.to_string())?;
            let ok = built.diagonal_multiplicity == 3 && built.curve == stored;
            run.exact("m4.resultant_construction", ok, || {
                format!("diagonal multiplicity {}", built.diagonal_multiplicity)
            });
        }
        Err(e) => run.obstructed("m4.resultant_construction", e),
    }
    let work = order + 8;
    let (Some(m2), Some(m3), Some(m4)) =
        (hauptmodul_branch(run, 2, work)?, hauptmodul_branch(run, 3, work)?, hauptmodul_branch(run, 4, work)?)
    else {
        run.obstructed("m4.pattern", "missing modular branch");
        return Ok(());
    };
    agree_composed(run, "m4.m2_after_m2", m2.compose(&m2), &m4);
    run.touch(&["conditions::check_commutation"]);
    run.report("m4.m2_m3_commute", check_commutation(&m2, &m3, order));
    let Some(involutive) = branch(run, "M4", 1, &int(-1), work)? else {
        run.obstructed("m4.involutive_branch", "missing");
        return Ok(());
    };
    match check_commutation(&m4, &involutive, order + 6) {
        Ok(r) => run.exact("m4.involution_does_not_commute", !r.is_zero, || "commutator vanishes".into()),
        Err(e) => run.obstructed("m4.involution_does_not_commute", e),
    }
    Ok(())
}

fn expect_no_solution<T>(run: &mut Run, name: String, result: Result<T, ConditionError>) {
    match result {
        Err(ConditionError::NoSolution { .. }) => run.exact(name, true, String::new),
        Ok(_) => run.exact(name, false, || "a solution was found".into()),
        Err(e) => run.obstructed(name, e),
    }
}

fn negative_gauss(run: &mut Run, [al, be, ga]: &[Rat; 3]) -> Outcome {
    run.touch(&["specialfun::gauss_operator", "conditions::solve_schwarzian_family"]);
    let w = gauss_operator(al, be, ga).w;
    let order = run.order;
    match leading_obstruction(&w, 2) {
        Ok(c) => run.exact("leading_obstruction_nonzero", !c.is_zero(), || "zero".into()),
        Err(e) => run.obstructed("leading_obstruction_nonzero", e),
    }
    for &n in &run.case.families {
        if n >= 2 {
            expect_no_solution(run, format!("family{n}.no_solution"), solve_schwarzian_family(&w, n, &int(1), order));
            continue;
        }
        match solve_schwarzian_family_symbolic(&w, n, order) {
            Ok(y) => run.object(format!("family{n}"), &y, k1_id),
            Err(e) => run.obstructed(format!("family{n}"), e),
        }
        match numeric_family(&w, n, &int(3), order + 6) {
            Ok(y) => run.report(format!("family{n}.schwarzian"), schwarzian_residual(&w, &y, order)),
            Err(e) => run.obstructed(format!("family{n}.schwarzian"), e),
        }
    }
    Ok(())
}

fn higher(run: &mut Run, family: HigherFamily) -> Outcome {
    run.touch(&["specialfun::w_higher", "conditions::solve_schwarzian_family", "specialfun::hyp_series"]);
    let order = run.order;
    let w = family.w();
    run.object("w", &series_of(&w, 1)?, k1);
    for &n in &run.case.families {
        let name = format!("identity{n}");
        let outcome = solve_identity_family(family, n, order);
        if n >= 2 {
            expect_no_solution(run, format!("{name}.no_solution"), outcome);
            continue;
        }
        match outcome {
            Ok(IdentityOutcome::Admissible(values)) => {
                let only_one = values == vec![int(1)];
                run.exact(format!("{name}.only_identity"), only_one, || format!("{values:?}"));
            }
            Ok(IdentityOutcome::Unconstrained) => {
                run.exact(format!("{name}.only_identity"), false, || "unconstrained".into())
            }
            Err(e) => run.obstructed(format!("{name}.only_identity"), e),
        }
    }
    Ok(())
}

fn three_f_two(run: &mut Run, [a, b, c, d, e]: &[Rat; 5]) -> Outcome {
    run.touch(&["specialfun::w_3f2", "specialfun::hyp_series", "conditions::schwarzian_residual"]);
    let order = run.order;
    let w = w_3f2(a, b, c, d, e);
    let p_w = p_w_3f2(a, b, c, d, e);
    run.object("p_w", &LaurentSeries::from_poly(&p_w, 3), k1);

    let q = q_3f2(a, b, c, d, e);
    let cubic = Poly::<Rat>::from_ints(&INVARIANT_3F2_CUBIC);
    let (quot, rem) = q.monic().div_rem(&cubic.monic());
    run.exact("q.invariant_cubic", rem.is_zero() && quot.degree() == Some(0), || q.render_with("x", &[]));

    // Clausen parameters 2a, a+b, 2b; a+b+1/2, 2(a+b) in two formal variables.
    let (x, y) = (MultiPoly::<Rat>::var(0), MultiPoly::var(1));
    let two = MultiPoly::constant(int(2));
    let clausen = q_3f2(
        &two.mul(&x),
        &x.add(&y),
        &two.mul(&y),
        &x.add(&y).add(&MultiPoly::constant(rat(1, 2))),
        &two.mul(&x.add(&y)),
    );
    run.exact("q.vanishes_for_clausen", clausen.coeffs().iter().all(|c| c.is_zero()), || "nonzero".into());

    let p8 = Poly::<Rat>::from_ints(&P8_INVARIANT_3F2);
    run.object("p8", &LaurentSeries::from_poly(&p8, 9), k1);
    let inv = invariant_3f2();
    run.exact("invariant.degrees", inv.num().degree() == Some(24) && inv.den().degree() == Some(24), || {
        format!("{:?}/{:?}", inv.num().degree(), inv.den().degree())
    });

    let spec = HypergeometricSpec::new(vec![a.clone(), b.clone(), c.clone()], vec![d.clone(), e.clone()]);
    match hyp_series(&spec, order) {
        Ok(f) => {
            let scaled: Vec<Rat> = (0..order).map(|k| f.coeff(k) * int(729).pow(k as i32)).collect();
            let first_fraction = scaled.iter().position(|c| !c.is_integer());
            run.exact("integrality_at_729x", first_fraction.is_none(), || {
                format!("x^{} coefficient {}", first_fraction.unwrap_or(0), scaled[first_fraction.unwrap_or(0)])
            });
        }
        Err(err) => run.obstructed("integrality_at_729x", err),
    }

    run.report("identity.schwarzian", schwarzian_residual(&w, &LaurentSeries::x(order + 4), order));
    run.touch(&["conditions::solve_schwarzian_family"]);
    for &n in &run.case.families {
        if n >= 2 {
            expect_no_solution(run, format!("family{n}.no_solution"), solve_schwarzian_family(&w, n, &int(1), order));
        }
    }
    Ok(())
}

fn heun<F: Field>(run: &mut Run, param: &EllipticParam<F>, lift: fn(&F) -> K1) -> Outcome {
    let order = run.order;
    let m = param.m().clone();
    let case = heun_case(m.clone());
    let a_r = case.a_r().clone();
    run.identity("operator.a_r", &a_r_from_u(&case).sub(&case.a_r_printed));

    run.touch(&["specialfun::heun_series", "exactcore::series_arith"]);
    let q = case.q_series(order + 2);
    match heun_series(&HeunSpec::elliptic(m.clone()), order + 1) {
        Ok(h) => run.agree("operator.heun_form", &q.truncate(order), &h.square().shift(1).truncate(order)),
        Err(e) => run.obstructed("operator.heun_form", e),
    }

    run.touch(&["heun_elliptic::master_surface", "heun_elliptic::multiplication_map"]);
    let s = master_surface(param);
    let symmetric = s.swap_vars(0, 1) == s && s.swap_vars(1, 2) == s;
    run.exact("surface.symmetric", symmetric, || "not symmetric".into());
    match multiplication_map(2, param) {
        Ok(r2) => run.identity("surface.doubling_map", &r2.map.sub(&doubling_map(&m))),
        Err(e) => run.obstructed("surface.doubling_map", e),
    }

    run.touch(&["heun_elliptic::j_invariant"]);
    let j: Vec<_> = [int(2), int(-1), rat(1, 2)].iter().map(j_invariant).collect();
    let all_1728 = j.iter().all(|v| v.as_ref().ok() == Some(&int(1728)));
    run.exact("j.equals_1728", all_1728, || format!("{j:?}"));

    run.touch(&["heun_elliptic::specialization_suite"]);
    for k in 1..=3 {
        match specialization_suite(k, order) {
            Ok(list) => {
                for named in list {
                    run.residual(format!("specialization{k}.{}", named.name), &named.report);
                }
            }
            Err(e) => run.obstructed(format!("specialization{k}"), e),
        }
    }

    run.touch(&["heun_elliptic::sn2_series", "exactcore::series_reverse"]);
    let inv_m = m.inverse().ok_or("M must be nonzero")?;
    let sn2 = sn2_series(&inv_m, order);
    run.object("sn2", &sn2, lift);
    match q.reverse() {
        Ok(p) => run.agree("sn2.inverts_q", &p.truncate(order), &sn2),
        Err(e) => run.obstructed("sn2.inverts_q", e),
    }

    match globally_bounded_g(param, order) {
        Ok(g) => run.object("g_tilde", &g, lift),
        Err(e) => run.obstructed("g_tilde", e),
    }

    run.touch(&["conditions::solve_rank2_family", "exactcore::series_compose"]);
    // A square leading coefficient keeps the coefficients small in M.
    let lead = F::from_int(4);
    match solve_rank2_family(&a_r, &lead, order + 2) {
        Ok(y) => {
            run.report("family.rank2", rank2_residual(&a_r, &y, order));
            // y = P(4 Q) with P = sn²(√x).
            match sn2.compose(&q.truncate(order).scale(&lead)) {
                Ok(via) => run.agree("family.linearized", &y.truncate(order), &via),
                Err(e) => run.obstructed("family.linearized", e),
            }
        }
        Err(e) => run.obstructed("family.rank2", e),
    }

    let mut maps = BTreeMap::new();
    for pb in &run.case.pullbacks {
        let PullbackSource::Multiplication(p) = pb.source else {
            return Err(format!("pullback {:?} does not apply to the Heun case", pb.source));
        };
        let label = format!("mult{p}");
        let map = match multiplication_map(p, param) {
            Ok(map) => map,
            Err(e) => {
                run.obstructed(label, e);
                continue;
            }
        };
        let law = rp_series_law(p, param);
        run.object(format!("law{p}"), &law, lift);
        match map.series(3) {
            Ok(s) => run.exact(format!("{label}.series_law"), s.sub(&law).is_zero(), || s.render_with("x", &["M"])),
            Err(e) => run.obstructed(format!("{label}.series_law"), e),
        }
        if let Some(num) = map.numerator_polynomial() {
            run.object(format!("p{p}"), &LaurentSeries::from_poly(&num, num.coeffs().len() as i64), lift);
        }
        run.touch(&["heun_elliptic::rp_series_check", "heun_elliptic::heun_covariance", "conditions::rank2_residual"]);
        run.report(format!("{label}.rank2_family"), rp_series_check(&map, param, order));
        run.report(format!("{label}.covariance"), heun_covariance(&map, param, order));
        run.report(format!("{label}.rank2"), rank2_residual_rational(&a_r, &map.map, order));
        let scale = F::from_int((p * p) as i64);
        match map.series(order + 2) {
            Ok(y) => run.report(format!("{label}.scales_q"), verify_covariance(&q, &y, &scale, order)),
            Err(e) => run.obstructed(format!("{label}.scales_q"), e),
        }
        maps.insert(p, map);
    }
    if let (Some(r2), Some(r3)) = (maps.get(&2), maps.get(&3)) {
        run.touch(&["conditions::check_commutation"]);
        match (r2.series(order + 2), r3.series(order + 2)) {
            (Ok(a), Ok(b)) => run.report("commute.r2_r3", check_commutation(&a, &b, order)),
            (Err(e), _) | (_, Err(e)) => run.obstructed("commute.r2_r3", e),
        }
    }
    Ok(())
}

fn mirror(run: &mut Run) -> Outcome {
    let order = run.order;
    let work = order + 6;
    run.touch(&["mirrormap::solve_nome", "exactcore::series_reverse"]);
    let pair = solve_nome(work).map_err(|e| e.to_string())?;
    run.object("nome", &pair.nome, k1);
    run.object("hauptmodul", &pair.hauptmodul, k1);
    run.object("nome_integer", &pair.nome_integer_form(), k1);
    run.object("hauptmodul_integer", &pair.hauptmodul_integer_form(), k1);

    let w = hauptmodul_w();
    run.touch(&["exactcore::schwarzian"]);
    run.report("nome.residual", nome_residual(&w, &pair.nome, order));
    run.report("hauptmodul.residual", hauptmodul_residual(&w, &pair.hauptmodul, order));
    agree_composed(run, "round_trip", pair.hauptmodul.compose(&pair.nome), &LaurentSeries::x(work));

    run.touch(&["mirrormap::eisenstein_identity_suite", "specialfun::eisenstein", "specialfun::hyp_series"]);
    match eisenstein_identity_suite(&pair, order) {
        Ok(list) => {
            for named in list {
                run.residual(format!("eisenstein.{}", named.name), &named.report);
            }
        }
        Err(e) => run.obstructed("eisenstein", e),
    }

    run.touch(&[
        "mirrormap::isogeny_decompose",
        "conditions::schwarzian_residual",
        "conditions::solve_schwarzian_family",
    ]);
    let mut isogenies = BTreeMap::new();
    for (i, pb) in run.case.pullbacks.iter().enumerate() {
        let PullbackSource::Isogeny(n) = pb.source else {
            return Err(format!("pullback {:?} does not apply to the mirror map", pb.source));
        };
        let label = format!("pullback{i}");
        let y = match isogeny_decompose(&pair, n, &pb.scale, work) {
            Ok(y) => y,
            Err(e) => {
                run.obstructed(label, e);
                continue;
            }
        };
        run.object(label.clone(), &y, k1);
        run.report(format!("{label}.schwarzian"), schwarzian_residual(&w, &y, order));
        match numeric_family(&w, n, &y.coeff(n as i64), work) {
            Ok(solved) => run.agree(format!("{label}.family"), &y, &solved),
            Err(e) => run.obstructed(format!("{label}.family"), e),
        }
        if pb.scale == int(1) && (2..=4).contains(&n) {
            match hauptmodul_branch(run, n as i64, work)? {
                Some(b) => run.agree(format!("{label}.curve_branch"), &y, &b),
                None => run.obstructed(format!("{label}.curve_branch"), "missing branch"),
            }
        }
        if pb.scale == int(1) {
            isogenies.insert(n, y);
        }
    }
    if let (Some(two), Some(three)) = (isogenies.get(&2), isogenies.get(&3)) {
        match isogeny_decompose(&pair, 6, &int(1), work) {
            Ok(six) => {
                agree_composed(run, "isogeny.two_after_three", two.compose(three), &six);
                agree_composed(run, "isogeny.three_after_two", three.compose(two), &six);
            }
            Err(e) => run.obstructed("isogeny.six", e),
        }
    }
    Ok(())
}

fn parametrizations(run: &mut Run) -> Outcome {
    run.touch(&["modular::verify_parametrization"]);
    let order = run.order;
    for (name, kind) in [
        ("landen_m2", ParametrizationKind::LandenM2),
        ("legendre_m3", ParametrizationKind::LegendreM3),
        ("genus2_sextic", ParametrizationKind::Genus2Sextic),
    ] {
        match verify_parametrization(kind, order) {
            Ok(report) => match &report.residual {
                ParametrizationResidual::Rational(r) => run.identity(name, r),
                ParametrizationResidual::Series(s) => run.residual(name.into(), s),
            },
            Err(e) => run.obstructed(name, e),
        }
    }
    Ok(())
}

fn cal_a(run: &mut Run) -> Outcome {
    run.touch(&["modular::verify_cal_a"]);
    let order = run.order;
    run.report("cal_a.relation", verify_cal_a(order));
    match cal_a_series(order) {
        Ok(s) => run.object("cal_a", &s, k1),
        Err(e) => run.obstructed("cal_a.series", e),
    }
    Ok(())
}
