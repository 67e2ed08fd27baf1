use super::recurrence::{pq_recurrence, z_recurrence};
use crate::airy_rst::rst_recurrence;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::ratcore::Poly;

/// `family_0 ..= family_{n_max}` from the defining recurrences.
pub fn family_table(family: Family, n_max: usize) -> Vec<Poly> {
    match family {
        Family::P => pq_recurrence(n_max).into_iter().map(|e| e.p).collect(),
        Family::Q => pq_recurrence(n_max).into_iter().map(|e| e.q).collect(),
        Family::Z => z_recurrence(n_max),
        Family::R => rst_recurrence(n_max).into_iter().map(|e| e.r).collect(),
        Family::S => rst_recurrence(n_max).into_iter().map(|e| e.s).collect(),
        Family::T => rst_recurrence(n_max).into_iter().map(|e| e.t).collect(),
    }
}

/// Strips the family's power of `x` and substitutes `x^3 -> x`.
pub fn reduce(family: Family, n: usize, p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let shift = family.reduction_shift(n);
    let bad = || Error::NotReducible { family: family.to_string(), n };
    if !p.support().all(|k| k >= shift && (k - shift).is_multiple_of(3)) {
        return Err(bad());
    }
    let deg = p.degree().unwrap();
    Ok(Poly::new((shift..=deg).step_by(3).map(|k| p.coeff(k)).collect()))
}

/// Reduced polynomial of `family_n`, e.g. `Q~_15 = x^2+770x+8680`.
pub fn reduced_poly(family: Family, n: usize) -> Result<Poly> {
    let table = family_table(family, n);
    reduce(family, n, &table[n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_reductions() {
        assert_eq!(reduced_poly(Family::Q, 15).unwrap().to_string(), "x^2+770x+8680");
        assert_eq!(reduced_poly(Family::R, 12).unwrap().to_string(), "2048x^2+112896x+27664");
        assert_eq!(reduced_poly(Family::P, 1), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn every_family_reduces() {
        for f in Family::ALL {
            let t = family_table(f, 40);
            for (n, p) in t.iter().enumerate() {
                if !p.is_zero() {
                    reduce(f, n, p).unwrap_or_else(|e| panic!("{f}{n}: {e}"));
                }
            }
        }
    }
}
