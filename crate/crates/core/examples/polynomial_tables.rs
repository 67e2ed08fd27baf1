//! Prints the first few `P_n, Q_n` and `R_n, S_n, T_n` and checks the
//! defining identities at a rational point.

use airy_deriv::airy_pq::pq_recurrence;
use airy_deriv::airy_rst::rst_recurrence;
use airy_deriv::ratcore::{rat, Poly};

fn main() {
    let pq = pq_recurrence(10);
    for e in &pq {
        println!("P_{:<2} = {:<20} Q_{:<2} = {}", e.n, e.p.to_string(), e.n, e.q);
    }

    // Each step is (P, Q) -> (P' + xQ, P + Q').
    let x = Poly::x();
    for w in pq.windows(2) {
        assert_eq!(w[1].p, &w[0].p.derivative() + &(&x * &w[0].q));
        assert_eq!(w[1].q, &w[0].p + &w[0].q.derivative());
    }

    let rst = rst_recurrence(8);
    println!();
    for e in &rst {
        println!("R_{} = {}, S_{} = {}, T_{} = {}", e.n, e.r, e.n, e.s, e.n, e.t);
    }

    let half = rat(1, 2);
    println!("\nP_10(1/2) = {}", pq[10].p.eval(&half));
}
