//! Special-function series and the operator data of every case family.

pub mod catalog;
pub mod eisenstein;
pub mod elliptic;
pub mod heun;
pub mod hypergeometric;
pub mod operators;

use thiserror::Error;

pub use catalog::{a_r_from_u, doubling_map, heun_case, rank2_case_names, rank2_catalog, Pullback, Rank2Case};
pub use eisenstein::{eisenstein, eisenstein_lambert, EisensteinKind};
pub use elliptic::{decimate, jacobi_sn_series};
pub use heun::{heun_series, HeunSpec};
pub use hypergeometric::{binomial_series, hyp_series, HypergeometricSpec};
pub use operators::{
    gauss_operator, invariant_3f2, log_derivative, p_w_3f2, q_3f2, schwarzian_invariant, w_2f2, w_3f2, w_4f3, w_rank2,
    OperatorData, INVARIANT_3F2_CUBIC, P8_INVARIANT_3F2,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialFunError {
    #[error("lower parameter {index} makes a term-ratio denominator vanish at order {order}")]
    InvalidLowerParameter { index: usize, order: i64 },
    #[error("Heun recurrence denominator vanishes at order {order}")]
    RecurrenceBreakdown { order: i64 },
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("series order must be at least 1, got {0}")]
    InvalidOrder(i64),
}
