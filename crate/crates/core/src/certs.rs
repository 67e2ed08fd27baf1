//! Exact verification of the creative-telescoping certificate for the
//! terminating values of `F(a) = 3F2(a, 3a-1/2, 3/2-3a; 3a, 1/2 | 3/4)`.
//!
//! Everything is parametrised by a rational `nu`. The sequence
//! `a = n + 5/6` is `nu = n`; the other two sequences `a = n + 1/2` and
//! `a = n + 1/6` are `nu = n - 1/3` and `nu = n - 2/3`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::airy_rst::tilde_h;
use crate::error::{Error, Result};
use crate::hyper::{pfq_exact, HyperSpec};
use crate::ratcore::{factorial, int, poch, rat, Rational};

/// The three terminating sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sequence {
    /// `a = n + 1/6`
    Z,
    /// `a = n + 1/2`
    ZTilde,
    /// `a = n + 5/6`
    ZDblTilde,
}

impl Sequence {
    pub const ALL: [Sequence; 3] = [Sequence::Z, Sequence::ZTilde, Sequence::ZDblTilde];

    /// `nu - n`.
    pub fn shift(self) -> Rational {
        match self {
            Sequence::Z => rat(-2, 3),
            Sequence::ZTilde => rat(-1, 3),
            Sequence::ZDblTilde => Rational::zero(),
        }
    }

    pub fn nu(self, n: usize) -> Rational {
        int(n as i64) + self.shift()
    }

    /// The point `a` where `F` terminates.
    pub fn point(self, n: usize) -> Rational {
        self.nu(n) + rat(5, 6)
    }

    /// Operator coefficients `(c1, c0)` written out for this sequence.
    pub fn operator(self, n: usize) -> (Rational, Rational) {
        let nn = int(n as i64);
        let lin = |a: i64, b: i64| int(a) * &nn + int(b);
        match self {
            Sequence::ZDblTilde => (lin(12, 11) * lin(12, 17), lin(6, 7) * lin(6, 9)),
            Sequence::ZTilde => (lin(12, 7) * lin(12, 13), lin(6, 5) * lin(6, 7)),
            Sequence::Z => (lin(12, 3) * lin(12, 9), lin(6, 3) * lin(6, 5)),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sequence::Z => "z",
            Sequence::ZTilde => "z_tilde",
            Sequence::ZDblTilde => "z_dbltilde",
        })
    }
}

/// `M = 3 nu + 1`, the last index of the summand support when it is a
/// nonnegative integer.
fn top(nu: &Rational) -> Result<i64> {
    let m = int(3) * nu + int(1);
    if !m.is_integer() {
        return Err(Error::InvalidArgument(format!("3*{nu}+1 is not an integer")));
    }
    i64::try_from(m.to_integer()).map_err(|_| Error::InvalidArgument(format!("nu={nu} too large")))
}

/// `binom(c, 2k)` for rational `c`, as a falling factorial.
fn binom_rat(c: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..2 * k {
        acc *= c - int(j as i64);
    }
    acc / Rational::from_integer(factorial(2 * k as u64))
}

/// `binom(3nu+1+k, 2k) (nu+5/6)_k / (3nu+5/2)_k (-3)^k`.
pub fn summand(nu: &Rational, k: usize) -> Rational {
    let kk = int(k as i64);
    let three_nu = int(3) * nu;
    binom_rat(&(&three_nu + int(1) + &kk), k) * poch(&(nu + rat(5, 6)), k) / poch(&(&three_nu + rat(5, 2)), k)
        * int(-3).pow(k as i32)
}

/// The summand at integer `n`, defined for `0 <= k <= 3n+1`.
pub fn summand_f(n: usize, k: usize) -> Result<Rational> {
    if k > 3 * n + 1 {
        return Err(Error::InvalidArgument(format!("k={k} outside 0..={}", 3 * n + 1)));
    }
    Ok(summand(&int(n as i64), k))
}

/// Summand with support bookkeeping: zero for `k > max(M, 0)`.
fn f_supported(nu: &Rational, k: i64) -> Result<Rational> {
    if k < 0 || k > top(nu)?.max(0) {
        return Ok(Rational::zero());
    }
    Ok(summand(nu, k as usize))
}

/// `f(nu, k)` for `0 <= k < len`, zero beyond `max(M, 0)`, built from the
/// term ratio.
pub fn summand_table(nu: &Rational, len: usize) -> Result<Vec<Rational>> {
    let m = top(nu)?.max(0) as usize;
    let c = int(3) * nu + int(1);
    let a = nu + rat(5, 6);
    let b = int(3) * nu + rat(5, 2);
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::one();
    for k in 0..len {
        if k > m {
            out.push(Rational::zero());
            continue;
        }
        out.push(term.clone());
        let kk = int(k as i64);
        let (k1, k2) = (int(2 * k as i64 + 1), int(2 * k as i64 + 2));
        term = term * (&c + &kk + int(1)) * (&c - &kk) * (&a + &kk) * int(-3) / (k1 * k2 * (&b + &kk));
    }
    Ok(out)
}

/// Operator coefficients `(c1, c0)` of `c1 N + c0` at `nu`.
pub fn operator(nu: &Rational) -> (Rational, Rational) {
    let c1 = (int(12) * nu + int(11)) * (int(12) * nu + int(17));
    let c0 = (int(6) * nu + int(7)) * (int(6) * nu + int(9));
    (c1, c0)
}

/// Numerator polynomial of the certificate without the `12k(2k-1)` factor.
fn cert_numerator(nu: &Rational, k: &Rational) -> Rational {
    let n1 = nu + int(1);
    let cubic = int(2) * k * k * k
        - int(18) * k * k * &n1
        - int(2) * k * (int(81) * nu * nu + int(153) * nu + int(73))
        - int(3) * &n1 * (int(90) * nu * nu + int(162) * nu + int(71));
    (int(12) * nu * nu + int(32) * nu + int(21)) * cubic
}

/// The rational certificate `R(nu, k)`, as transcribed.
pub fn certificate_r(nu: &Rational, k: i64) -> Result<Rational> {
    let kk = int(k);
    let three_nu = int(3) * nu;
    let den = (int(6) * nu + int(7) + int(2) * &kk)
        * (int(6) * nu + int(5) + int(2) * &kk)
        * (&three_nu + int(2) - &kk)
        * (&three_nu + int(3) - &kk)
        * (&three_nu + int(4) - &kk);
    if den.is_zero() {
        return Err(Error::CertificateDenominator { n: nu.to_string(), k });
    }
    Ok(int(12) * &kk * (int(2) * &kk - int(1)) * cert_numerator(nu, &kk) / den)
}

/// `G = R f` on `0..=M+3`, zero elsewhere.
///
/// Beyond `M` the summand vanishes while `R` has a pole; there `G` takes
/// the value of `R f` with the factorials cancelled.
pub fn certificate_g(nu: &Rational, k: i64) -> Result<Rational> {
    let m = top(nu)?;
    if k < 0 || k > m + 3 {
        return Ok(Rational::zero());
    }
    if k <= m {
        return Ok(certificate_r(nu, k)? * f_supported(nu, k)?);
    }
    Ok(g_cancelled(nu, m, k as usize))
}

/// `R f` after cancelling `(M+1-k)(M+2-k)(M+3-k)` against `(M-k)!`.
fn g_cancelled(nu: &Rational, m: i64, k: usize) -> Rational {
    if k == 0 {
        return Rational::zero();
    }
    let kk = int(k as i64);
    let mut fact_ratio = Rational::one();
    // (M+k)! / (M+3-k)!
    let (hi, lo) = (m + k as i64, m + 3 - k as i64);
    if hi >= lo {
        for j in (lo + 1)..=hi {
            fact_ratio *= int(j);
        }
    } else {
        for j in (hi + 1)..=lo {
            fact_ratio /= int(j);
        }
    }
    let den = (int(6) * nu + int(7) + int(2) * &kk) * (int(6) * nu + int(5) + int(2) * &kk);
    int(6) * cert_numerator(nu, &kk) / den * fact_ratio / Rational::from_integer(factorial(2 * k as u64 - 2))
        * poch(&(nu + rat(5, 6)), k)
        / poch(&(int(3) * nu + rat(5, 2)), k)
        * int(-3).pow(k as i32)
}

/// `c1 f(nu+1, k) + c0 f(nu, k) = G(nu, k+1) - G(nu, k)` over the whole support.
pub fn telescoping_check_at(nu: &Rational) -> Result<bool> {
    let m = top(nu)?;
    let (c1, c0) = operator(nu);
    let len = (m + 6).max(1) as usize;
    let f = summand_table(nu, len)?;
    let f_next = summand_table(&(nu + int(1)), len)?;
    let g = (0..len as i64)
        .map(|k| {
            if k < 0 || k > m + 3 {
                Ok(Rational::zero())
            } else if k <= m {
                Ok(certificate_r(nu, k)? * &f[k as usize])
            } else {
                Ok(g_cancelled(nu, m, k as usize))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    for k in 0..=(m + 4).max(0) as usize {
        if &c1 * &f_next[k] + &c0 * &f[k] != &g[k + 1] - &g[k] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`telescoping_check_at`] for the sequence `a = n + 5/6`.
pub fn telescoping_check(n: usize) -> Result<bool> {
    telescoping_check_at(&int(n as i64))
}

/// Checks that the cancelled form of `G` equals `R f` wherever `R f` is
/// defined.
pub fn continued_g_agrees(nu: &Rational) -> Result<bool> {
    let m = top(nu)?;
    for k in 0..=m {
        if certificate_r(nu, k)? * f_supported(nu, k)? != g_cancelled(nu, m, k as usize) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F` at the `n`-th point of `seq`, as an exact finite sum.
pub fn sequence_sum(seq: Sequence, n: usize) -> Result<Rational> {
    match seq {
        Sequence::ZDblTilde => Ok(summand_table(&int(n as i64), 3 * n + 2)?.into_iter().sum()),
        _ => {
            let a = seq.point(n);
            let three_a = int(3) * &a;
            let spec = HyperSpec::new(
                vec![a, &three_a - rat(1, 2), rat(3, 2) - &three_a],
                vec![three_a, rat(1, 2)],
                rat(3, 4),
            );
            pfq_exact(&spec)
        }
    }
}

/// The closed value of `F0` at the `n`-th point of `seq`.
pub fn sequence_closed(seq: Sequence, n: usize) -> Rational {
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let p = |a: i64, b: i64, k: usize| poch(&rat(a, b), k);
    match seq {
        Sequence::ZDblTilde => Rational::zero(),
        Sequence::ZTilde => sign * p(5, 6, n) * p(7, 6, n) / p(7, 6, 2 * n),
        Sequence::Z => sign * p(1, 2, n) * p(5, 6, n) / p(1, 2, 2 * n),
    }
}

/// The explicit operator of `seq` equals the base operator at `nu = n + shift`.
pub fn shifted_operator_check(seq: Sequence, n: usize) -> bool {
    operator(&seq.nu(n)) == seq.operator(n)
}

/// `c1 S_{n+1} + c0 S_n = 0` for both the sums and the closed values.
pub fn annihilation_check(seq: Sequence, n: usize) -> Result<bool> {
    let (c1, c0) = seq.operator(n);
    let sums = &c1 * sequence_sum(seq, n + 1)? + &c0 * sequence_sum(seq, n)?;
    let closed = &c1 * sequence_closed(seq, n + 1) + &c0 * sequence_closed(seq, n);
    Ok(sums.is_zero() && closed.is_zero())
}

/// `2 12^{2n+d} (5/6)_{2n+d} = h~(2n+d, 3n+d, d, 3/2, 0) 2^{4n+2d+1} (3n+d)! / ((-3)^n n!)`.
pub fn t_reduction_check(n: usize, delta: usize) -> Result<bool> {
    let m = 2 * n + delta;
    let lhs = int(2) * int(12).pow(m as i32) * poch(&rat(5, 6), m);
    let h = tilde_h(m, 3 * n + delta, delta, &rat(3, 2), &Rational::zero())?;
    let rhs =
        h * int(2).pow((4 * n + 2 * delta + 1) as i32) * Rational::from_integer(factorial((3 * n + delta) as u64))
            / (int(-3).pow(n as i32) * Rational::from_integer(factorial(n as u64)));
    Ok(lhs == rhs)
}
