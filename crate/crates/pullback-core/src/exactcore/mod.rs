//! Exact-arithmetic kernel: rationals, polynomials, rational functions,
//! truncated Laurent series, multivariate polynomials and resultants.

pub mod error;
pub mod field;
pub mod multipoly;
pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod series;

pub use error::{PolyError, SeriesError};
pub use field::{format_rat, int, parse_rat, rat, rat_str, Field, Rat, Ring};
pub use multipoly::{BivariatePolynomial, MultiPoly};
pub use poly::Poly;
pub use ratfunc::{RatFunc, RationalFunction};
pub use roots::rational_roots;
pub use series::{lift_series, param_specialize, Agreement, LaurentSeries, ParamSeries, MIN_VALUATION};
