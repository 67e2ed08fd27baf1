//! Hypergeometric series (exact and floating), the gamma function, and the
//! closed-form identities for `2F1` at `-1/3` and `3F2` at `3/4`.

mod gamma;
mod identities;
mod pfq;

pub use gamma::{cos_pi, gamma, rgamma, sin_pi, POLE_RADIUS};
pub use identities::*;
pub use pfq::{pfq_exact, pfq_numeric, HyperSpec, TERM_CAP};
