use serde::Serialize;

use crate::airy_pq::PQPair;
use crate::error::{Error, Result};
use crate::ratcore::{binom, int, rat, Poly, Rational};

/// `R_n`, `S_n`, `T_n` with `[Ai^2]^(n) = R_n Ai^2 + 2 S_n Ai Ai' + T_n Ai'^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RSTTriple {
    pub n: usize,
    pub r: Poly,
    pub s: Poly,
    pub t: Poly,
}

/// `R' + 2xS`, `R + S' + xT`, `2S + T'` from `(1, 0, 0)`.
pub fn rst_recurrence(n_max: usize) -> Vec<RSTTriple> {
    let x = Poly::x();
    let two = int(2);
    let (mut r, mut s, mut t) = (Poly::one(), Poly::zero(), Poly::zero());
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        out.push(RSTTriple { n, r: r.clone(), s: s.clone(), t: t.clone() });
        let nr = &r.derivative() + &(&x * &s).scale(&two);
        let ns = &(&r + &s.derivative()) + &(&x * &t);
        let nt = &s.scale(&two) + &t.derivative();
        r = nr;
        s = ns;
        t = nt;
    }
    out
}

/// `R_n`, `S_n`, `T_n` as binomial convolutions of `P` and `Q`.
///
/// Needs `pq[0..=n]`.
pub fn rst_convolution(n: usize, pq: &[PQPair]) -> Result<RSTTriple> {
    if pq.len() <= n {
        return Err(Error::InsufficientTable { have: pq.len(), need: n });
    }
    let (mut r, mut s2, mut t) = (Poly::zero(), Poly::zero(), Poly::zero());
    for k in 0..=n {
        let c = Rational::from_integer(binom(n as i64, k as i64));
        let (a, b) = (&pq[k], &pq[n - k]);
        r = &r + &(&a.p * &b.p).scale(&c);
        s2 = &s2 + &(&(&a.p * &b.q) + &(&a.q * &b.p)).scale(&c);
        t = &t + &(&a.q * &b.q).scale(&c);
    }
    Ok(RSTTriple { n, r, s: s2.scale(&rat(1, 2)), t })
}

/// Checks `Y_{n+3} = 4x Y_{n+1} + (4n+2) Y_n` along a sequence.
pub fn satisfies_rst_recurrence(y: &[Poly]) -> Option<usize> {
    let x4 = Poly::monomial(int(4), 1);
    (0..y.len().saturating_sub(3)).find(|&n| y[n + 3] != &(&x4 * &y[n + 1]) + &y[n].scale(&int(4 * n as i64 + 2)))
}

/// `Y_n = y0 R_n + y1 S_n + (y2/2 - x y0) T_n` for `n <= n_max`, checked
/// against the initial values and the third-order recurrence.
pub fn rst_general_solution(y0: &Poly, y1: &Poly, y2: &Poly, n_max: usize) -> Result<Vec<Poly>> {
    let rst = rst_recurrence(n_max.max(2));
    let c_t = &y2.scale(&rat(1, 2)) - &(&Poly::x() * y0);
    let ys: Vec<Poly> = rst.iter().map(|e| &(&(y0 * &e.r) + &(y1 * &e.s)) + &(&c_t * &e.t)).collect();
    for (i, want) in [y0, y1, y2].into_iter().enumerate() {
        if &ys[i] != want {
            return Err(Error::RecurrenceViolation(i));
        }
    }
    if let Some(n) = satisfies_rst_recurrence(&ys) {
        return Err(Error::RecurrenceViolation(n + 3));
    }
    Ok(ys.into_iter().take(n_max + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::airy_pq::pq_recurrence;

    #[test]
    fn first_rows() {
        let t = rst_recurrence(12);
        assert_eq!(t[5].r.to_string(), "28x");
        assert_eq!(t[5].s.to_string(), "16x^2");
        assert_eq!(t[5].t.to_string(), "20");
        assert_eq!(t[12].r.to_string(), "2048x^6+112896x^3+27664");
    }

    #[test]
    fn convolution_agrees() {
        let pq = pq_recurrence(30);
        let rst = rst_recurrence(30);
        for n in 0..=30 {
            assert_eq!(rst_convolution(n, &pq).unwrap(), rst[n]);
        }
        assert!(rst_convolution(31, &pq).is_err());
    }

    #[test]
    fn families_satisfy_third_order() {
        let rst = rst_recurrence(30);
        for pick in [|e: &RSTTriple| e.r.clone(), |e: &RSTTriple| e.s.clone(), |e: &RSTTriple| e.t.clone()] {
            let y: Vec<Poly> = rst.iter().map(pick).collect();
            assert_eq!(satisfies_rst_recurrence(&y), None);
        }
    }

    #[test]
    fn general_solution() {
        let y0: Poly = "x^2+1".parse().unwrap();
        let y1: Poly = "-3x".parse().unwrap();
        let y2: Poly = "(1/2)x^3+7".parse().unwrap();
        let ys = rst_general_solution(&y0, &y1, &y2, 15).unwrap();
        assert_eq!(ys.len(), 16);
        assert_eq!(ys[2], y2);
    }
}
