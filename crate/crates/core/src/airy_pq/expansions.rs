use num_traits::Zero;
use serde::Serialize;

use super::recurrence::z_recurrence;
use crate::family::Family;
use crate::ratcore::{binom, factorial, int, poch, rat, Poly, Rational};

/// Which end of the polynomial an expansion describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum End {
    /// Lowest powers (behaviour near `x = 0`).
    Small,
    /// Highest powers (behaviour for large `x`).
    Large,
}

/// A few explicit terms of `family_index`, as `(power, coefficient)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expansion {
    pub family: Family,
    pub index: usize,
    pub end: End,
    #[serde(serialize_with = "crate::ser::terms")]
    pub terms: Vec<(usize, Rational)>,
}

impl Expansion {
    /// True when every listed coefficient matches `p` and nothing in `p`
    /// lies beyond the listed terms at the relevant end.
    pub fn matches(&self, p: &Poly) -> bool {
        if !self.terms.iter().all(|(k, c)| &p.coeff(*k) == c) {
            return false;
        }
        let Some(lo) = self.terms.iter().map(|t| t.0).min() else {
            return p.is_zero();
        };
        let hi = self.terms.iter().map(|t| t.0).max().unwrap();
        match self.end {
            End::Small => p.support().all(|k| k >= lo),
            End::Large => p.support().all(|k| k <= hi),
        }
    }
}

fn pow_int(base: i64, e: usize) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(base).pow(e as u32))
}

fn bi(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

/// Terms with negative power are dropped.
fn terms(list: Vec<(i64, Rational)>) -> Vec<(usize, Rational)> {
    list.into_iter().filter(|(k, _)| *k >= 0).map(|(k, c)| (k as usize, c)).collect()
}

/// The first one or two terms of `P_n` and `Q_n` near the origin.
pub fn pq_small_x_leading(n: usize) -> [Expansion; 2] {
    let k = n / 3;
    let kk = int(k as i64);
    let th = pow_int(3, k);
    let p = |a: i64, b: i64| poch(&rat(a, b), k);
    let (pt, qt) = match n % 3 {
        0 => (
            vec![(0, &th * p(1, 3)), (3, &th * rat(1, 2) * ((&kk + int(1)) * p(1, 3) - p(2, 3)))],
            vec![
                (1, &th * (p(2, 3) - p(1, 3))),
                (4, &th * rat(1, 8) * ((&kk + int(2)) * p(2, 3) - (int(4) * &kk + int(2)) * p(1, 3))),
            ],
        ),
        1 => (
            vec![
                (2, &th * rat(1, 2) * (p(4, 3) - p(2, 3))),
                (5, &th * rat(1, 40) * ((&kk + int(8)) * p(4, 3) - (int(10) * &kk + int(8)) * p(2, 3))),
            ],
            vec![(0, &th * p(2, 3)), (3, &th * rat(1, 2) * ((&kk + int(1)) * p(2, 3) - p(4, 3)))],
        ),
        _ => (
            vec![(1, &th * p(4, 3)), (4, &th * rat(1, 8) * ((&kk + int(4)) * p(4, 3) - int(4) * p(5, 3)))],
            vec![
                (2, &th * (p(5, 3) - p(4, 3))),
                (5, &th * rat(1, 40) * ((int(2) * &kk + int(10)) * p(5, 3) - (int(5) * &kk + int(10)) * p(4, 3))),
            ],
        ),
    };
    [
        Expansion { family: Family::P, index: n, end: End::Small, terms: pt },
        Expansion { family: Family::Q, index: n, end: End::Small, terms: qt },
    ]
}

/// Leading terms of `P_{2n}`, `P_{2n+1}`, `Q_{2n}`, `Q_{2n+1}` for large `x`.
pub fn pq_large_x_terms(n: usize) -> [Expansion; 4] {
    let ni = n as i64;
    let nn = int(ni);
    let one = int(1);
    let sq = &nn * &nn;
    let p_even = terms(vec![
        (ni, one.clone()),
        (ni - 3, bi(ni, 3) * (int(3) * &nn - int(5))),
        (ni - 6, int(10) * bi(ni, 6) * (int(3) * &sq - int(15) * &nn + int(10))),
    ]);
    let p_odd = terms(vec![
        (ni - 1, sq.clone()),
        (ni - 4, int(4) * bi(ni, 4) * (&sq - int(2) * &nn - int(1))),
        (ni - 7, int(14) * bi(ni, 7) * (int(3) * &sq * &nn - int(17) * &sq + int(8) * &nn + int(8))),
    ]);
    let q_even = terms(vec![
        (ni - 2, int(2) * bi(ni, 2)),
        (ni - 5, int(20) * bi(ni, 5) * (&nn - int(1))),
        (ni - 8, int(112) * bi(ni, 8) * (int(3) * &nn - int(2)) * (&nn - int(3))),
    ]);
    let q_odd = terms(vec![
        (ni, one),
        (ni - 3, bi(ni, 3) * (int(3) * &nn + int(1))),
        (ni - 6, int(10) * bi(ni, 6) * (int(3) * &sq - int(3) * &nn - int(2))),
    ]);
    let e = |family, index, terms| Expansion { family, index, end: End::Large, terms };
    [
        e(Family::P, 2 * n, p_even),
        e(Family::P, 2 * n + 1, p_odd),
        e(Family::Q, 2 * n, q_even),
        e(Family::Q, 2 * n + 1, q_odd),
    ]
}

/// The lowest term of `Z_n` near the origin.
pub fn z_small_x_leading(n: usize) -> Expansion {
    let k = n / 3;
    let th = pow_int(3, k);
    let fk = Rational::from_integer(factorial(k as u64));
    let p = |a: i64, b: i64| poch(&rat(a, b), k);
    let term = match n % 3 {
        0 => (2, th * rat(1, 2) * (&fk - int(2) * p(2, 3) + p(1, 3))),
        1 => (1, th * (&fk - p(2, 3))),
        _ => (0, th * fk),
    };
    Expansion { family: Family::Z, index: n, end: End::Small, terms: vec![term] }
}

/// Leading terms of `Z_{2n+2}` and `Z_{2n+3}` for large `x`.
pub fn z_large_x_terms(n: usize) -> [Expansion; 2] {
    let ni = n as i64;
    let nn = int(ni);
    let even = terms(vec![
        (ni, int(1)),
        (ni - 3, (&nn - int(1)) * (&nn - int(2)) * (int(3) * &nn * &nn + int(7) * &nn + int(6)) * rat(1, 6)),
    ]);
    let mut odd = vec![(ni - 1, &nn * (&nn + int(2)))];
    if n >= 4 {
        odd.push((ni - 4, bi(ni - 1, 3) * (&nn + int(2)) * (&nn * &nn + int(2) * &nn + int(3))));
    }
    [
        Expansion { family: Family::Z, index: 2 * n + 2, end: End::Large, terms: even },
        Expansion { family: Family::Z, index: 2 * n + 3, end: End::Large, terms: terms(odd) },
    ]
}

/// Checks `m l_{m,n} = (3m-n) l_{m-1,n-2} + n l_{m-1,n-3}` for the
/// coefficients `l_{m,n}` read off `Z_{n+2}`, for every `n + 2 <= n_max`.
///
/// Also fails if some `Z_{n+2}` has a power outside `3m - n`,
/// `n/3 <= m <= n/2`.
pub fn z_lambda_check(n_max: usize) -> bool {
    let z = z_recurrence(n_max.max(2));
    let lambda = |m: i64, n: i64| -> Rational {
        if n < 0 || m < 0 || 3 * m < n || 2 * m > n {
            return Rational::zero();
        }
        let p = (3 * m - n) as usize;
        let c = z[(n + 2) as usize].coeff(p);
        c * Rational::from_integer(factorial(p as u64)) / Rational::from_integer(factorial(m as u64))
    };
    for n in 0..=(n_max as i64 - 2) {
        let zp = &z[(n + 2) as usize];
        let in_shape = zp.support().all(|p| {
            let p = p as i64;
            (p + n) % 3 == 0 && {
                let m = (p + n) / 3;
                3 * m >= n && 2 * m <= n
            }
        });
        if !in_shape {
            return false;
        }
        for m in 1..=n / 2 {
            if 3 * m < n {
                continue;
            }
            let lhs = int(m) * lambda(m, n);
            let rhs = int(3 * m - n) * lambda(m - 1, n - 2) + int(n) * lambda(m - 1, n - 3);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
