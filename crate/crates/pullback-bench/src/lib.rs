//! Shared inputs for the kernel benchmarks.

use pullback_core::exactcore::{int, rat, LaurentSeries, Rat, RatFunc};
use pullback_core::modular::{analytic_branches, load_curve};
use pullback_core::specialfun::gauss_operator;

/// `W` of the 1/12, 5/12 Gauss operator.
pub fn modular_w() -> RatFunc<Rat> {
    gauss_operator(&rat(1, 12), &rat(5, 12), &int(1)).w
}

/// The analytic `M2` branch `x^2/1728 + ...`, truncated at `order`.
pub fn m2_branch(order: i64) -> LaurentSeries<Rat> {
    let curve = load_curve("M2").expect("builtin curve");
    let set = analytic_branches(&curve, order).expect("branches");
    set.find(2, &rat(1, 1728)).cloned().expect("M2 branch")
}
