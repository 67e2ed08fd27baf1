//! Closed-form coefficient routes agree with the recurrences.

use airy_deriv::airy_pq::{gtilde, gtilde_via_2f1, p_closed, pq_maurone_phares, pq_recurrence, q_closed};
use airy_deriv::airy_rst::{h_coeff, h_via_3f2, h_via_sum, r_closed, rst_recurrence, s_closed, t_closed};

fn main() -> airy_deriv::error::Result<()> {
    let n_max = 30;
    let pq = pq_recurrence(n_max + 1);
    for n in 0..=n_max {
        assert_eq!(p_closed(n), pq[n].p);
        assert_eq!(q_closed(n), pq[n + 1].q);
        let mp = pq_maurone_phares(n);
        assert_eq!((&mp.p, &mp.q), (&pq[n].p, &pq[n].q));
    }
    println!("P/Q closed forms match the recurrence for n <= {n_max}");

    for (m, n) in [(0, 3), (2, 5), (4, 9)] {
        println!("gtilde({m},{n}) = {} (2F1 route: {})", gtilde(m, n), gtilde_via_2f1(m, n)?);
    }

    let rst = rst_recurrence(20);
    for n in 0..=20 {
        assert_eq!(r_closed(n)?, rst[n].r);
        assert_eq!(s_closed(n)?, rst[n].s);
        assert_eq!(t_closed(n)?, rst[n].t);
    }
    println!("R/S/T closed forms match the recurrence for n <= 20");

    for (m, n) in [(1, 4), (3, 7)] {
        println!("h({m},{n}) = {} = {} = {}", h_coeff(m, n), h_via_sum(m, n), h_via_3f2(m, n)?);
    }
    Ok(())
}
