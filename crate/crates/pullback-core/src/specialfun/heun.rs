//! Heun general function from its three-term recurrence.

use super::SpecialFunError;
use crate::exactcore::{rat, Field, LaurentSeries};

/// Parameters of `HeunG(M, q; α, β, γ, δ; x)`; `ε = α + β + 1 - γ - δ`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeunSpec<F> {
    pub singular_point: F,
    pub accessory: F,
    pub alpha: F,
    pub beta: F,
    pub gamma: F,
    pub delta: F,
}

impl<F: Field> HeunSpec<F> {
    /// The instance tied to the inverse Jacobi sine:
    /// `HeunG(M, (M+1)/4; 1/2, 1, 3/2, 1/2; x)`.
    pub fn elliptic(m: F) -> Self {
        let quarter = F::from_rat(&rat(1, 4));
        HeunSpec {
            accessory: m.plus(&F::one()).times(&quarter),
            singular_point: m,
            alpha: F::from_rat(&rat(1, 2)),
            beta: F::one(),
            gamma: F::from_rat(&rat(3, 2)),
            delta: F::from_rat(&rat(1, 2)),
        }
    }

    fn epsilon(&self) -> F {
        self.alpha.plus(&self.beta).plus(&F::one()).minus(&self.gamma).minus(&self.delta)
    }
}

/// The analytic solution with `H(0) = 1`, from
/// `M(n+1)(n+γ) c_{n+1} = [n((n-1+γ)(1+M) + Mδ + ε) + q] c_n - (n-1+α)(n-1+β) c_{n-1}`.
pub fn heun_series<F: Field>(spec: &HeunSpec<F>, order: i64) -> Result<LaurentSeries<F>, SpecialFunError> {
    if order < 1 {
        return Err(SpecialFunError::InvalidOrder(order));
    }
    let m = &spec.singular_point;
    let eps = spec.epsilon();
    let one = F::one();
    let mut coeffs: Vec<F> = vec![F::one()];
    for n in 0..order - 1 {
        let nf = F::from_int(n);
        let lead = m.times(&F::from_int(n + 1)).times(&nf.plus(&spec.gamma));
        let Some(lead_inv) = lead.inverse() else {
            return Err(SpecialFunError::RecurrenceBreakdown { order: n + 1 });
        };
        let mid = nf
            .times(&nf.minus(&one).plus(&spec.gamma).times(&one.plus(m)).plus(&m.times(&spec.delta)).plus(&eps))
            .plus(&spec.accessory);
        let mut rhs = mid.times(&coeffs[n as usize]);
        if n >= 1 {
            let back = nf.minus(&one).plus(&spec.alpha).times(&nf.minus(&one).plus(&spec.beta));
            rhs = rhs.minus(&back.times(&coeffs[(n - 1) as usize]));
        }
        coeffs.push(rhs.times(&lead_inv));
    }
    Ok(LaurentSeries::new(0, coeffs, order).expect("valuation 0"))
}
