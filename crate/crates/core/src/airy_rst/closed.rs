use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hyper::{pfq_exact, HyperSpec};
use crate::ratcore::{
    binom, factorial, int, poch, rat, series_reciprocal_power, series_sqrt_reciprocal, Poly, Rational,
};

fn h_base() -> Poly {
    Poly::from_ints(&[3, -3, 1])
}

/// `[s^n] (1/2) (1-s)^{-1/2} (3 - 3s + s^2)^{-(m+1)}`.
pub fn h_coeff(m: usize, n: usize) -> Rational {
    let a = series_sqrt_reciprocal(n);
    let b = series_reciprocal_power(&h_base(), m, n).expect("constant term is 3");
    a.mul(&b).coeff(n) * rat(1, 2)
}

fn pow3(e: usize) -> Rational {
    Rational::from_integer(BigInt::from(3).pow(e as u32))
}

/// `h_{m,n}` through its reversed terminating `3F2` at `3/4`.
pub fn h_via_3f2(m: usize, n: usize) -> Result<Rational> {
    let (q, d) = (n / 2, n % 2);
    let (mi, qi, di) = (m as i64, q as i64, d as i64);
    let spec = HyperSpec::new(
        vec![int(-qi), int(-mi - qi) - rat(1, 2), int(mi + qi + di) + rat(3, 2)],
        vec![int(-mi - qi), int(di) + rat(1, 2)],
        rat(3, 4),
    );
    let sign = if q % 2 == 0 { int(1) } else { int(-1) };
    let pre = sign / (int(2) * pow3(m + q + 1))
        * Rational::from_integer(binom(mi + qi, mi))
        * poch(&(int(mi + qi) + rat(3, 2)), d);
    Ok(pre * pfq_exact(&spec)?)
}

/// `h_{m,n}` as a finite sum of Pochhammer ratios.
pub fn h_via_sum(m: usize, n: usize) -> Rational {
    let mut acc = Rational::zero();
    let mut third = Rational::one();
    for k in 0..=n / 2 {
        let term = Rational::from_integer(binom((m + k) as i64, m as i64))
            * poch(&(int((k + m) as i64) + rat(3, 2)), n - 2 * k)
            / Rational::from_integer(factorial((n - 2 * k) as u64));
        acc += term * &third;
        third *= rat(-1, 3);
    }
    acc / (int(2) * pow3(m + 1))
}

/// `(n+a)_delta 3F2(m-n, 1-a-n, n+delta+a; b-n, delta+1/2 | 3/4)` for `m <= n`.
pub fn tilde_h(m: usize, n: usize, delta: usize, a: &Rational, b: &Rational) -> Result<Rational> {
    if m > n {
        return Err(Error::InvalidArgument(format!("tilde_h needs m <= n, got m={m} n={n}")));
    }
    let (mi, ni, di) = (int(m as i64), int(n as i64), int(delta as i64));
    let spec =
        HyperSpec::new(vec![&mi - &ni, int(1) - a - &ni, &ni + &di + a], vec![b - &ni, di + rat(1, 2)], rat(3, 4));
    Ok(poch(&(&ni + a), delta) * pfq_exact(&spec)?)
}

/// Shared factor `q! (-1/3)^{q-m} 4^m / ((q-m)! p!)` of the closed forms.
fn weight(q: usize, m: usize, p: usize) -> Rational {
    let sign = if (q - m).is_multiple_of(2) { int(1) } else { int(-1) };
    let num = Rational::from_integer(factorial(q as u64) * (BigInt::one() << (2 * m)));
    let den = Rational::from_integer(factorial((q - m) as u64) * factorial(p as u64)) * pow3(q - m);
    sign * num / den
}

/// Sum over `(2q+delta)/3 <= m <= q` for index `2q + delta`.
fn closed_sum(idx: usize, coef: impl Fn(usize, usize, usize, usize) -> Result<Rational>) -> Result<Poly> {
    let (q, d) = (idx / 2, idx % 2);
    let mut acc = Poly::zero();
    for m in (2 * q + d).div_ceil(3)..=q {
        let p = 3 * m - 2 * q - d;
        let c = coef(q, d, m, p)? * weight(q, m, p);
        acc = &acc + &Poly::monomial(c, p);
    }
    Ok(acc)
}

/// `T_n` from `h~(3/2, 0)`.
pub fn t_closed(n: usize) -> Result<Poly> {
    if n < 2 {
        return Ok(Poly::zero());
    }
    closed_sum(n - 2, |q, d, m, _| Ok(int(2) * tilde_h(m, q, d, &rat(3, 2), &int(0))?))
}

/// `S_n` from `h~(1/2, 0)`.
pub fn s_closed(n: usize) -> Result<Poly> {
    if n < 1 {
        return Ok(Poly::zero());
    }
    closed_sum(n - 1, |q, d, m, _| tilde_h(m, q, d, &rat(1, 2), &int(0)))
}

/// `R_n` from `h~(-1/2, 0)` and `h~(1/2, 1)`.
pub fn r_closed(n: usize) -> Result<Poly> {
    closed_sum(n, |q, d, m, p| {
        let mut c = tilde_h(m, q, d, &rat(-1, 2), &int(0))?;
        if q > 0 && p > 0 {
            c -= rat(p as i64, 2 * q as i64) * tilde_h(m, q, d, &rat(1, 2), &int(1))?;
        }
        Ok(c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::airy_rst::rst_recurrence;

    #[test]
    fn h_values() {
        assert_eq!(h_coeff(0, 0), rat(1, 6));
        assert_eq!(h_coeff(1, 1), rat(5, 36));
        for m in 0..8 {
            for n in 0..14 {
                let h = h_coeff(m, n);
                assert_eq!(h_via_3f2(m, n).unwrap(), h, "m={m} n={n}");
                assert_eq!(h_via_sum(m, n), h, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn tilde_h_example() {
        // h~_{1,1,0}(-1/2, 0) is the 3F2 with a vanishing upper parameter.
        assert_eq!(tilde_h(1, 1, 0, &rat(-1, 2), &int(0)).unwrap(), int(1));
        assert!(tilde_h(2, 1, 0, &rat(1, 2), &int(0)).is_err());
    }

    #[test]
    fn closed_forms_match_recurrence() {
        let t = rst_recurrence(30);
        for n in 0..=30 {
            assert_eq!(t_closed(n).unwrap(), t[n].t, "T{n}");
            assert_eq!(s_closed(n).unwrap(), t[n].s, "S{n}");
            assert_eq!(r_closed(n).unwrap(), t[n].r, "R{n}");
        }
    }
}
