use num_traits::Zero;
use serde::Serialize;

use super::recurrence::PQPair;
use crate::ratcore::{binom, int, Poly, Rational};

/// Coefficient sequences `mu`, `nu`, `mu~`, `nu~` indexed by `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaplaceSeqs {
    pub mu: Vec<Poly>,
    pub nu: Vec<Poly>,
    pub mu_t: Vec<Poly>,
    pub nu_t: Vec<Poly>,
}

fn coupled(k_max: usize, mu0: Poly, nu0: Poly, mu1: Poly, nu1: Poly) -> (Vec<Poly>, Vec<Poly>) {
    let x = Poly::x();
    let mut mu = vec![mu0, mu1];
    let mut nu = vec![nu0, nu1];
    for k in 0..k_max.saturating_sub(1) {
        let m = nu[k].scale(&int(2 * k as i64 + 2));
        let n = &mu[k + 1].scale(&int(2 * k as i64 + 3)) + &(&x * &mu[k]).scale(&int(2 * k as i64 + 2));
        mu.push(m);
        nu.push(n);
    }
    mu.truncate(k_max + 1);
    nu.truncate(k_max + 1);
    (mu, nu)
}

/// `mu_{k+2} = (2k+2) nu_k`, `nu_{k+2} = (2k+3) mu_{k+1} + (2k+2) x mu_k`,
/// for both starting pairs, through index `k_max`.
pub fn laplace_seqs(k_max: usize) -> LaplaceSeqs {
    let (mu, nu) = coupled(k_max, Poly::one(), Poly::zero(), Poly::zero(), Poly::one());
    let (mu_t, nu_t) = coupled(k_max, Poly::zero(), Poly::one(), Poly::zero(), Poly::zero());
    LaplaceSeqs { mu, nu, mu_t, nu_t }
}

/// Checks the decoupled fourth-order recurrences on every sequence.
pub fn laplace_fourth_order_check(k_max: usize) -> bool {
    let s = laplace_seqs(k_max);
    let x = Poly::x();
    let check = |y: &[Poly], a: i64, b: i64| {
        (0..y.len().saturating_sub(4)).all(|k| {
            let kk = k as i64;
            let rhs = &y[k + 1].scale(&int((2 * kk + a) * (2 * kk + b)))
                + &(&x * &y[k]).scale(&int((2 * kk + 2) * (2 * kk + 6)));
            y[k + 4] == rhs
        })
    };
    check(&s.mu, 3, 6) && check(&s.mu_t, 3, 6) && check(&s.nu, 4, 7) && check(&s.nu_t, 4, 7)
}

fn binomial_sum(n: usize, y: &[Poly]) -> Poly {
    let mut acc = Poly::zero();
    for (k, yk) in y.iter().enumerate().take(n + 1) {
        let c = Rational::from_integer(binom(n as i64, k as i64));
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(yk.shift(n - k)).scale(&c);
    }
    acc
}

/// `P_n`, `Q_n` rebuilt from the sequences according to the parity of `n`.
pub fn pq_parity_reconstruct(n: usize) -> PQPair {
    let h = n / 2;
    let s = laplace_seqs(h.max(1));
    let (p, q) = if n.is_multiple_of(2) {
        (binomial_sum(h, &s.mu), binomial_sum(h, &s.mu_t))
    } else {
        (binomial_sum(h, &s.nu), binomial_sum(h, &s.nu_t))
    };
    PQPair { n, p, q }
}
