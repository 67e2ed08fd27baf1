//! The polynomials `P_n`, `Q_n` in `Ai^(n) = P_n Ai + Q_n Ai'`, the third
//! recurrence solution `Z_n`, and every independent route to them.

mod closed;
mod expansions;
mod laplace;
mod recurrence;
mod reduced;

pub use closed::{gtilde, gtilde_via_2f1, p_closed, pq_maurone_phares, q_closed, GTildeTable};
pub use expansions::{
    pq_large_x_terms, pq_small_x_leading, z_lambda_check, z_large_x_terms, z_small_x_leading, End, Expansion,
};
pub use laplace::{laplace_fourth_order_check, laplace_seqs, pq_parity_reconstruct, LaplaceSeqs};
pub use recurrence::{pq_recurrence, three_term, z_recurrence, PQPair};
pub use reduced::{family_table, reduce, reduced_poly};
