//! Jacobi elliptic sine as a Maclaurin series.

use crate::exactcore::{Field, LaurentSeries};

/// `sn(t, k)` through `t^order` exclusive, from
/// `sn'' = -(1 + k^2) sn + 2 k^2 sn^3`, `sn(0) = 0`, `sn'(0) = 1`.
pub fn jacobi_sn_series<F: Field>(k_squared: &F, order: i64) -> LaurentSeries<F> {
    let n_terms = order.max(0) as usize;
    let mut s = vec![F::zero(); n_terms.max(2)];
    s[1] = F::one();
    let lin = F::one().plus(k_squared).negated();
    let cub = k_squared.times(&F::from_int(2));
    for n in 0..n_terms.saturating_sub(2) {
        // [sn^3]_n only involves s_j with j <= n - 2.
        let mut cube = F::zero();
        for i in 1..=n {
            for j in 1..=n - i {
                let k = n - i - j;
                if k >= 1 && !s[i].is_zero() && !s[j].is_zero() && !s[k].is_zero() {
                    cube = cube.plus(&s[i].times(&s[j]).times(&s[k]));
                }
            }
        }
        let rhs = lin.times(&s[n]).plus(&cub.times(&cube));
        s[n + 2] = rhs.divided(&F::from_int(((n + 2) * (n + 1)) as i64)).expect("positive");
    }
    s.truncate(n_terms);
    LaurentSeries::new(0, s, order).expect("valuation 1")
}

/// `Σ c_{step·k} x^k` for a series whose support lies in `step·Z`.
pub fn decimate<F: Field>(series: &LaurentSeries<F>, step: i64) -> Option<LaurentSeries<F>> {
    let mut out = Vec::new();
    let v = series.valuation();
    if series.is_zero() {
        return Some(LaurentSeries::zero(series.trunc_order().div_euclid(step)));
    }
    for (i, c) in series.coeffs().iter().enumerate() {
        let k = v + i as i64;
        if k.rem_euclid(step) != 0 {
            if !c.is_zero() {
                return None;
            }
            continue;
        }
        out.push((k / step, c.clone()));
    }
    let t = (series.trunc_order() + step - 1).div_euclid(step);
    let first = out.first().map(|(k, _)| *k).unwrap_or(t);
    let mut coeffs = vec![F::zero(); (t - first).max(0) as usize];
    for (k, c) in out {
        if k < t {
            coeffs[(k - first) as usize] = c;
        }
    }
    LaurentSeries::new(first, coeffs, t).ok()
}
