use serde::Serialize;

use crate::ratcore::{int, Poly};

/// `P_n`, `Q_n` with `Ai^(n) = P_n Ai + Q_n Ai'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PQPair {
    pub n: usize,
    pub p: Poly,
    pub q: Poly,
}

/// `P_0..=P_N`, `Q_0..=Q_N` from `P' + xQ`, `P + Q'`.
pub fn pq_recurrence(n_max: usize) -> Vec<PQPair> {
    let x = Poly::x();
    let mut out = Vec::with_capacity(n_max + 1);
    let (mut p, mut q) = (Poly::one(), Poly::zero());
    for n in 0..=n_max {
        out.push(PQPair { n, p: p.clone(), q: q.clone() });
        let np = &p.derivative() + &(&x * &q);
        let nq = &p + &q.derivative();
        p = np;
        q = nq;
    }
    out
}

/// Third solution of `Y_{n+3} = x Y_{n+1} + (n+1) Y_n` with
/// `Z_0 = Z_1 = 0`, `Z_2 = 1`.
pub fn z_recurrence(n_max: usize) -> Vec<Poly> {
    three_term(n_max, [Poly::zero(), Poly::zero(), Poly::one()])
}

/// Runs `Y_{n+3} = x Y_{n+1} + (n+1) Y_n` from three starting values.
pub fn three_term(n_max: usize, init: [Poly; 3]) -> Vec<Poly> {
    let x = Poly::x();
    let mut out: Vec<Poly> = init.into_iter().take(n_max + 1).collect();
    while out.len() <= n_max {
        let n = out.len() - 3;
        let next = &(&x * &out[n + 1]) + &out[n].scale(&int(n as i64 + 1));
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_entries() {
        let t = pq_recurrence(7);
        assert_eq!(t[6].p.to_string(), "x^3+4");
        assert_eq!(t[6].q.to_string(), "6x");
        assert_eq!(t[7].q.to_string(), "x^3+10");
        let z = z_recurrence(8);
        assert_eq!(z[7].to_string(), "8x");
        assert_eq!(z[8].to_string(), "x^3+18");
        assert!(z[3].is_zero());
    }

    #[test]
    fn p_and_q_obey_three_term() {
        let t = pq_recurrence(20);
        let p = three_term(20, [t[0].p.clone(), t[1].p.clone(), t[2].p.clone()]);
        let q = three_term(20, [t[0].q.clone(), t[1].q.clone(), t[2].q.clone()]);
        for n in 0..=20 {
            assert_eq!(p[n], t[n].p);
            assert_eq!(q[n], t[n].q);
        }
    }
}
