//! The polynomials `R_n`, `S_n`, `T_n` describing derivatives of products
//! of Airy functions, with their closed forms and expansions.

mod closed;
mod expansions;
mod recurrence;

pub use closed::{h_coeff, h_via_3f2, h_via_sum, r_closed, s_closed, t_closed, tilde_h};
pub use expansions::rst_small_x_leading;
pub use recurrence::{rst_convolution, rst_general_solution, rst_recurrence, satisfies_rst_recurrence, RSTTriple};
