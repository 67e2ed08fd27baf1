use num_integer::Integer;
use num_traits::Zero;

use super::recurrence::PQPair;
use crate::error::Result;
use crate::hyper::{pfq_exact, HyperSpec};
use crate::ratcore::{binom, factorial, int, poch, rat, series_reciprocal_power, Poly, Rational, Series};

fn g_base() -> Poly {
    Poly::new(vec![int(1), int(-1), rat(1, 3)])
}

/// `[t^n] (1 - t + t^2/3)^{-(m+1)}`.
pub fn gtilde(m: usize, n: usize) -> Rational {
    series_reciprocal_power(&g_base(), m, n).expect("constant term is 1").coeff(n)
}

/// The same coefficient through its terminating `2F1` at `-1/3`.
pub fn gtilde_via_2f1(m: usize, n: usize) -> Result<Rational> {
    let nn = n as i64;
    let spec = HyperSpec::new(vec![rat(-nn, 2), rat(1 - nn, 2)], vec![int(m as i64) + rat(3, 2)], rat(-1, 3));
    let f = pfq_exact(&spec)?;
    let pre = Rational::new(binom(nn + 2 * m as i64 + 1, nn), num_bigint::BigInt::from(1) << n);
    Ok(pre * f)
}

/// Memoised `g~_{m,n}`: one series per `m`.
pub struct GTildeTable {
    rows: Vec<Series>,
}

impl GTildeTable {
    pub fn new(max_m: usize, max_n: usize) -> Self {
        let base = g_base();
        let rows = (0..=max_m).map(|m| series_reciprocal_power(&base, m, max_n).expect("constant term is 1")).collect();
        GTildeTable { rows }
    }

    /// `g~_{m,n}`, with `g~_{m,-1} = 0`.
    pub fn get(&self, m: usize, n: i64) -> Rational {
        if n < 0 {
            return Rational::zero();
        }
        self.rows[m].coeff(n as usize)
    }
}

/// `m! / j!` for `j <= m`, as an exact integer.
fn fact_ratio(m: usize, j: usize) -> Rational {
    Rational::from_integer((j + 1..=m).fold(num_bigint::BigInt::from(1), |acc, v| acc * v))
}

/// Range `ceil(n/3) ..= floor(n/2)`.
fn m_range(n: usize) -> std::ops::RangeInclusive<usize> {
    n.div_ceil(3)..=n / 2
}

/// `Q_{n+1}` as a sum of `g~` coefficients.
pub fn q_closed(n: usize) -> Poly {
    let table = GTildeTable::new(n / 2, n);
    let mut acc = Poly::zero();
    for m in m_range(n) {
        let c = table.get(m, (n - 2 * m) as i64) * fact_ratio(m, 3 * m - n);
        acc = &acc + &Poly::monomial(c, 3 * m - n);
    }
    acc
}

/// `P_n` as a sum of differences of `g~` coefficients.
pub fn p_closed(n: usize) -> Poly {
    let table = GTildeTable::new(n / 2, n);
    let mut acc = Poly::zero();
    for m in m_range(n) {
        let j = (n - 2 * m) as i64;
        let c = (table.get(m, j) - table.get(m, j - 1)) * fact_ratio(m, 3 * m - n);
        acc = &acc + &Poly::monomial(c, 3 * m - n);
    }
    acc
}

/// One half of the Maurone-Phares double sum.
fn mp_sum(m: i64, k0: i64, l0: i64, m0: i64, shift: i64) -> Poly {
    let top = Integer::div_floor(&(m - k0), &2);
    let mut acc = Poly::zero();
    for k in 0..=top {
        let deg = 3 * k + l0;
        let idx = (m + m0 + k) as usize;
        let mut inner = Rational::zero();
        for l in 0..=deg {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let b = Rational::from_integer(binom(deg, l) * sign);
            inner += b * poch(&rat(shift - l, 3), idx);
        }
        let scale = Rational::from_integer(num_bigint::BigInt::from(3).pow(idx as u32))
            / Rational::from_integer(factorial(deg as u64));
        acc = &acc + &Poly::monomial(inner * scale, deg as usize);
    }
    acc
}

/// `P_n`, `Q_n` through the Maurone-Phares representation, `n = 3m + delta`.
pub fn pq_maurone_phares(n: usize) -> PQPair {
    let m = (n / 3) as i64;
    let ((k1, l1, m1), (k2, l2, m2)) = match n % 3 {
        0 => ((0, 0, 0), (1, 1, 0)),
        1 => ((1, 2, 1), (0, 0, 0)),
        _ => ((0, 1, 1), (1, 2, 1)),
    };
    PQPair { n, p: mp_sum(m, k1, l1, m1, 1), q: mp_sum(m, k2, l2, m2, 2) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gtilde_values() {
        assert_eq!(gtilde(1, 1), int(2));
        assert_eq!(gtilde(3, 2), rat(26, 3));
        assert_eq!(gtilde_via_2f1(1, 1).unwrap(), int(2));
        for m in 0..8 {
            for n in 0..12 {
                assert_eq!(gtilde(m, n), gtilde_via_2f1(m, n).unwrap(), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn closed_forms_small() {
        assert_eq!(q_closed(6).to_string(), "x^3+10");
        assert_eq!(p_closed(8).to_string(), "x^4+28x");
        assert!(p_closed(1).is_zero());
        assert_eq!(p_closed(0), Poly::one());
        let mp = pq_maurone_phares(6);
        assert_eq!(mp.p.to_string(), "x^3+4");
        assert_eq!(mp.q.to_string(), "6x");
        assert!(pq_maurone_phares(1).p.is_zero());
    }
}
