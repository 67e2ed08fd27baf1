//! Exact polynomial coefficients for higher derivatives of the Airy
//! functions and of their pairwise products.
//!
//! Every derivative of a solution `y` of `y'' = x y` reduces to
//! `y^(n) = P_n(x) y + Q_n(x) y'`, and every derivative of a product of two
//! solutions to `R_n y1 y2 + S_n (y1 y2' + y1' y2) + T_n y1' y2'`. The crate
//! computes these polynomials in exact rational arithmetic by several
//! independent routes and checks them against each other.
//!
//! ```
//! use airy_deriv::airy_pq::pq_recurrence;
//!
//! let pq = pq_recurrence(5);
//! assert_eq!(pq[5].p.to_string(), "4x");
//! assert_eq!(pq[5].q.to_string(), "x^2");
//! ```
//!
//! Modules:
//!
//! - [`ratcore`]: rationals, polynomials, truncated series, Sturm chains.
//! - [`airy_pq`] and [`airy_rst`]: the two polynomial families and their
//!   closed forms and expansions.
//! - [`hyper`]: `pFq` evaluation and the hypergeometric identities.
//! - [`certs`]: telescoping certificates and special sequences.
//! - [`airy_numeric`]: double-precision evaluation and oracles.
//! - [`cli`]: the `airy-deriv` command and its verification suite.

pub mod airy_numeric;
pub mod airy_pq;
pub mod airy_rst;
pub mod certs;
pub mod cli;
pub mod error;
pub mod family;
pub mod golden;
pub mod hyper;
pub mod ratcore;
mod ser;
