use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratcore::{int, Rational};

/// A generalized hypergeometric series `pFq(upper; lower | arg)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperSpec<T> {
    pub upper: Vec<T>,
    pub lower: Vec<T>,
    pub arg: T,
}

impl<T> HyperSpec<T> {
    pub fn new(upper: Vec<T>, lower: Vec<T>, arg: T) -> Self {
        HyperSpec { upper, lower, arg }
    }
}

/// Hard cap on the number of terms summed in floating mode.
pub const TERM_CAP: usize = 1_000_000;

fn nonpositive_integer(q: &Rational) -> Option<usize> {
    if q.is_integer() && !q.is_positive() {
        (-q.to_integer()).to_usize()
    } else {
        None
    }
}

/// Exact value of a terminating series.
///
/// The series stops at the first upper parameter equal to `-M`. A lower
/// parameter `-N` is allowed when `M <= N`: the denominator never reaches
/// zero before the numerator does, which is the same as reading
/// `(-M)_k / (-N)_k` as `M! (N-k)! / ((M-k)! N!)`.
pub fn pfq_exact(spec: &HyperSpec<Rational>) -> Result<Rational> {
    let stop = spec.upper.iter().filter_map(nonpositive_integer).min().ok_or(Error::NonTerminating)?;
    for (index, b) in spec.lower.iter().enumerate() {
        if let Some(nb) = nonpositive_integer(b) {
            if nb < stop {
                return Err(Error::LowerParameterPole { index, k: nb });
            }
        }
    }
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for k in 0..stop {
        let kk = int(k as i64);
        for a in &spec.upper {
            term *= a + &kk;
        }
        for b in &spec.lower {
            term /= b + &kk;
        }
        term *= &spec.arg;
        term /= int(k as i64 + 1);
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    Ok(sum)
}

fn near_nonpositive_integer(x: f64) -> Option<usize> {
    if x <= 0.0 && x == x.round() {
        Some((-x) as usize)
    } else {
        None
    }
}

/// Floating-point value of `pFq`.
///
/// Lower parameters follow the same pairing rule as [`pfq_exact`].
///
/// Terms are accumulated with Kahan summation. A terminating series stops
/// at its last term; otherwise summation stops once the geometric tail
/// bound drops below `tol` relative to the running sum.
pub fn pfq_numeric(spec: &HyperSpec<f64>, tol: f64) -> Result<f64> {
    let stop = spec.upper.iter().filter_map(|&a| near_nonpositive_integer(a)).min();
    for (index, &b) in spec.lower.iter().enumerate() {
        if let Some(nb) = near_nonpositive_integer(b) {
            if stop.is_none_or(|m| nb < m) {
                return Err(Error::LowerParameterPole { index, k: nb });
            }
        }
    }
    let z = spec.arg;
    if stop.is_none() && z.abs() >= 1.0 {
        return Err(Error::NonTerminating);
    }
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut term = 1.0f64;
    for k in 0..TERM_CAP {
        if stop == Some(k) {
            return Ok(sum);
        }
        let kf = k as f64;
        let mut ratio = z / (kf + 1.0);
        for &a in &spec.upper {
            ratio *= a + kf;
        }
        for &b in &spec.lower {
            ratio /= b + kf;
        }
        term *= ratio;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if stop.is_none() && term != 0.0 {
            let r = ratio.abs().max(z.abs());
            let settled = ratio.abs() < 1.0 && kf > 2.0 * spec.upper.iter().map(|a| a.abs()).sum::<f64>();
            if settled && term.abs() * r / (1.0 - r) <= tol * sum.abs() {
                return Ok(sum);
            }
        }
        if term == 0.0 && stop.is_none() {
            return Ok(sum);
        }
    }
    Err(Error::TermCapReached(TERM_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::rat;

    #[test]
    fn terminating_2f1() {
        let s = HyperSpec::new(vec![int(-1), rat(-1, 2)], vec![rat(7, 2)], rat(-1, 3));
        assert_eq!(pfq_exact(&s).unwrap(), rat(20, 21));
    }

    #[test]
    fn paired_lower_parameter() {
        let s = HyperSpec::new(vec![int(-1), rat(-7, 2), rat(9, 2)], vec![int(-3), rat(1, 2)], rat(3, 4));
        assert_eq!(pfq_exact(&s).unwrap(), rat(-55, 8));
    }

    #[test]
    fn lower_pole_before_termination() {
        let s = HyperSpec::new(vec![int(-3), int(1)], vec![int(-1)], rat(1, 2));
        assert!(matches!(pfq_exact(&s), Err(Error::LowerParameterPole { .. })));
    }

    #[test]
    fn exact_needs_termination() {
        let s = HyperSpec::new(vec![rat(1, 2)], vec![], rat(1, 2));
        assert_eq!(pfq_exact(&s), Err(Error::NonTerminating));
    }

    #[test]
    fn numeric_binomial_series() {
        let s = HyperSpec::new(vec![0.5], vec![], 0.5);
        let v = pfq_numeric(&s, 1e-16).unwrap();
        assert!((v - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn numeric_guards() {
        assert_eq!(pfq_numeric(&HyperSpec::new(vec![1.0, 1.0], vec![2.0], 1.5), 1e-15), Err(Error::NonTerminating));
        assert!(matches!(
            pfq_numeric(&HyperSpec::new(vec![1.0], vec![-2.0], 0.5), 1e-15),
            Err(Error::LowerParameterPole { .. })
        ));
    }

    #[test]
    fn numeric_log_series() {
        // 2F1(1,1;2|z) = -ln(1-z)/z
        let v = pfq_numeric(&HyperSpec::new(vec![1.0, 1.0], vec![2.0], 0.75), 1e-16).unwrap();
        assert!((v - (4.0f64).ln() / 0.75).abs() < 1e-13);
    }
}
