use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rising factorial `(a)_k = a(a+1)...(a+k-1)`, with `(a)_0 = 1`.
pub fn poch(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = a.clone();
    for _ in 0..k {
        acc *= &t;
        t += Rational::one();
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

/// Binomial coefficient. Zero when `k < 0` or `k > n >= 0`; negative `n`
/// uses the falling-factorial extension.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - j;
        den *= j + 1;
    }
    num / den
}

/// Nearest double to an exact rational.
///
/// Large numerators and denominators are scaled down before division so
/// the conversion does not overflow to infinity or NaN.
pub fn to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let nb = q.numer().abs().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 60).max(0) as usize;
    let shift_d = (db - 60).max(0) as usize;
    let n = (q.numer().abs() >> shift_n).to_f64().unwrap_or(f64::INFINITY);
    let d = (q.denom() >> shift_d).to_f64().unwrap_or(f64::INFINITY);
    let mag = n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32);
    if q.is_negative() {
        -mag
    } else {
        mag
    }
}
