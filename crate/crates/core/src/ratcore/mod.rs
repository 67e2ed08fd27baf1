//! Exact arithmetic: rationals, univariate polynomials, truncated power
//! series and Sturm sequences.

mod poly;
mod scalar;
mod series;
mod sturm;

pub use poly::Poly;
pub use scalar::{binom, factorial, int, poch, rat, to_f64, Rational};
pub use series::{series_reciprocal_power, series_sqrt_reciprocal, Series};
pub use sturm::{sturm_count, RootCount};
