use num_traits::{Signed, Zero};
use serde::Serialize;

use super::poly::Poly;
use super::scalar::Rational;
use crate::error::{Error, Result};

/// Real-root census of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootCount {
    /// Distinct real roots.
    pub real: usize,
    /// Distinct roots in `(-inf, 0)`.
    pub negative: usize,
    /// True when `gcd(p, p')` is constant.
    pub all_simple: bool,
}

/// Counts real and negative roots with an exact Sturm chain.
///
/// The chain is built on the square-free part `p / gcd(p, p')`, so repeated
/// roots are counted once.
pub fn sturm_count(p: &Poly) -> Result<RootCount> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dp = p.derivative();
    let g = p.gcd(&dp);
    let all_simple = g.degree() == Some(0);
    let sqf = p.div_rem(&g)?.0;

    let mut chain = vec![sqf.clone(), sqf.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1])?.1;
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }

    let at_pos_inf: Vec<i32> = chain.iter().map(|q| sign(q.leading().unwrap())).collect();
    let at_neg_inf: Vec<i32> = chain
        .iter()
        .map(|q| {
            let s = sign(q.leading().unwrap());
            if q.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        })
        .collect();
    let at_zero: Vec<i32> = chain.iter().map(|q| sign(&q.coeff(0))).collect();

    let v_neg = variations(&at_neg_inf);
    let v_pos = variations(&at_pos_inf);
    let v_zero = variations(&at_zero);
    let root_at_zero = usize::from(sqf.coeff(0).is_zero());
    Ok(RootCount { real: v_neg - v_pos, negative: v_neg - v_zero - root_at_zero, all_simple })
}

fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: &[i32]) -> usize {
    let nz: Vec<i32> = signs.iter().copied().filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}
