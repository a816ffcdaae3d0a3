//! Rational roots of univariate polynomials over the rationals.
//!
//! Roots are isolated with a Sturm sequence; a rational root of a primitive
//! integer polynomial with leading coefficient `L` is a multiple of `1/L`,
//! so isolating intervals narrower than `1/L` pin down the candidate.

use num_bigint::BigInt;
use num_traits::Signed;

use super::field::{sign, Rat, Ring};
use super::poly::Poly;

/// Distinct rational roots with multiplicities, in increasing order.
pub fn rational_roots(p: &Poly<Rat>) -> Vec<(Rat, usize)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let square_free = p.div_rem(&p.gcd(&p.derivative())).0;
    let prim = square_free.primitive_integer();
    let lead = prim.lead().abs();
    let s = prim.to_rat();
    let chain = sturm_chain(&s);
    let bound = cauchy_bound(&s);
    let grid = Rat::new(1.into(), lead.clone());

    let mut found = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations(&chain, &lo) - variations(&chain, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 && &hi - &lo < grid {
            let k = (&hi * Rat::from_integer(lead.clone())).floor();
            let candidate = k / Rat::from_integer(lead.clone());
            if candidate > lo && Ring::is_zero(&s.eval(&candidate)) {
                found.push(candidate);
            }
            continue;
        }
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    found.sort();
    found
        .into_iter()
        .map(|r| {
            let factor = Poly::new(vec![-r.clone(), <Rat as Ring>::one()]);
            let mut m = 0;
            let mut q = p.clone();
            while let Some(next) = q.exact_div(&factor) {
                q = next;
                m += 1;
            }
            (r, m)
        })
        .collect()
}

fn sturm_chain(p: &Poly<Rat>) -> Vec<Poly<Rat>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].degree().unwrap_or(0) == 0 {
            break;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1.neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

/// Sign changes of the chain at `at`; a root at `at` itself counts as lying
/// to the left, giving counts on half-open intervals `(lo, hi]`.
fn variations(chain: &[Poly<Rat>], at: &Rat) -> i64 {
    let signs: Vec<i32> = chain.iter().map(|p| sign(&p.eval(at))).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
}

fn cauchy_bound(p: &Poly<Rat>) -> Rat {
    let lead = p.lead().abs();
    let max = p.coeffs().iter().map(|c| c.abs() / &lead).max().unwrap_or_else(<Rat as Ring>::zero);
    max + Rat::from_integer(BigInt::from(1))
}
