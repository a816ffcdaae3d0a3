//! Eisenstein series `E4`, `E6` as q-expansions.

use crate::exactcore::{int, LaurentSeries, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EisensteinKind {
    E4,
    E6,
}

impl EisensteinKind {
    fn weight_data(self) -> (u32, i64) {
        match self {
            EisensteinKind::E4 => (3, 240),
            EisensteinKind::E6 => (5, -504),
        }
    }
}

fn sigma(n: u64, k: u32) -> u128 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| (d as u128).pow(k)).sum()
}

/// `1 + c Σ σ_k(n) q^n + O(q^order)` with `(k, c) = (3, 240)` or `(5, -504)`.
pub fn eisenstein(kind: EisensteinKind, order: i64) -> LaurentSeries<Rat> {
    let (k, c) = kind.weight_data();
    let coeffs = (0..order.max(0) as u64)
        .map(|n| if n == 0 { int(1) } else { Rat::from_integer(num_bigint::BigInt::from(sigma(n, k))) * int(c) })
        .collect();
    LaurentSeries::new(0, coeffs, order).expect("valuation 0")
}

/// Lambert form `1 + c Σ n^k q^n / (1 - q^n)`, expanded term by term.
pub fn eisenstein_lambert(kind: EisensteinKind, order: i64) -> LaurentSeries<Rat> {
    let (k, c) = kind.weight_data();
    let mut coeffs = vec![int(0); order.max(0) as usize];
    if order > 0 {
        coeffs[0] = int(1);
    }
    for n in 1..order.max(0) as usize {
        let weight = Rat::from_integer(num_bigint::BigInt::from((n as u128).pow(k))) * int(c);
        let mut m = n;
        while m < order as usize {
            coeffs[m] += &weight;
            m += n;
        }
    }
    LaurentSeries::new(0, coeffs, order).expect("valuation 0")
}
