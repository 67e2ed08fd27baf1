use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::scalar::{int, Rational};
use crate::error::{Error, Result};

/// Power series truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series::new(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[t^k]`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

/// Coefficients of `p(t)^{-(m+1)}` through `t^order`.
///
/// Uses the power-series ODE `p y' = -(m+1) p' y`, which gives each new
/// coefficient from the previous `deg p` ones.
pub fn series_reciprocal_power(p: &Poly, m: usize, order: usize) -> Result<Series> {
    let p0 = p.coeff(0);
    if p0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let alpha = int(m as i64 + 1);
    let d = p.degree().unwrap_or(0);
    let mut y = Vec::with_capacity(order + 1);
    let mut y0 = Rational::one();
    for _ in 0..=m {
        y0 /= &p0;
    }
    y.push(y0);
    for k in 1..=order {
        let mut acc = Rational::zero();
        for j in 1..=d.min(k) {
            let pj = p.coeff(j);
            if pj.is_zero() {
                continue;
            }
            let w = int((k - j) as i64) + &alpha * int(j as i64);
            acc += pj * w * &y[k - j];
        }
        y.push(-acc / (&p0 * int(k as i64)));
    }
    Ok(Series { coeffs: y })
}

/// Coefficients of `(1-t)^{-1/2}`, i.e. `binom(2k,k)/4^k`.
pub fn series_sqrt_reciprocal(order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rational::one();
    for k in 0..=order {
        coeffs.push(c.clone());
        c *= Rational::new(BigInt::from(2 * k + 1), BigInt::from(2 * k + 2));
    }
    Series { coeffs }
}
