//! Squared elliptic sine: the addition surface, the multiplication maps
//! `R_p` for `θ → pθ`, and the Heun and `2F1` identities they carry.

pub mod checks;
pub mod maps;
pub mod surface;

use thiserror::Error;

use crate::conditions::ConditionError;
use crate::exactcore::{Field, SeriesError};
use crate::specialfun::SpecialFunError;

pub use checks::{
    globally_bounded_g, heun_covariance, rp_series_check, rp_series_law, sn2_series, specialization_suite,
};
pub use maps::{multiplication_map, reciprocal_partner, MultiplicationMap};
pub use surface::{j_invariant, master_surface, surface_quadratic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeunEllipticError {
    #[error("M must differ from 0 and 1")]
    ExcludedParameter,
    #[error("j has a pole at M = {0}")]
    PoleAtExcludedM(String),
    #[error("multiplication map recurrence degenerates at p = {p}")]
    DegenerateRecurrence { p: u32 },
    #[error("recurrence root for p = {p} does not start with p^2 x")]
    BranchMismatch { p: u32 },
    #[error("multiplication index must be at least 2, got {0}")]
    InvalidIndex(u32),
    #[error("specialization index must be 1, 2 or 3, got {0}")]
    InvalidSpecialization(u32),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    SpecialFun(#[from] SpecialFunError),
    #[error(transparent)]
    Condition(#[from] ConditionError),
}

/// `M = 1/k^2`, kept away from the degenerate values 0 and 1.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticParam<F>(F);

impl<F: Field> EllipticParam<F> {
    pub fn new(m: F) -> Result<Self, HeunEllipticError> {
        if m.is_zero() || m.is_one() {
            return Err(HeunEllipticError::ExcludedParameter);
        }
        Ok(EllipticParam(m))
    }

    pub fn m(&self) -> &F {
        &self.0
    }
}
