use num_bigint::BigInt;

use crate::airy_pq::{End, Expansion};
use crate::family::Family;
use crate::ratcore::{int, poch, rat, Rational};

/// The first one or two terms of `R_n`, `S_n`, `T_n` near the origin.
pub fn rst_small_x_leading(n: usize) -> [Expansion; 3] {
    let k = n / 3;
    let kk = int(k as i64);
    let tw = Rational::from_integer(BigInt::from(12).pow(k as u32));
    let p = |a: i64| poch(&rat(a, 6), k);
    let (sixth, half, five6, seven6, three2) = (p(1), p(3), p(5), p(7), p(9));
    let (r, s, t) = match n % 3 {
        0 => (
            vec![(0, &tw * &sixth), (3, &tw * ((int(2) * &kk + int(1)) * &sixth - &half))],
            vec![(1, &tw * (&half - &sixth))],
            vec![(2, &tw * (&five6 - int(2) * &half + &sixth))],
        ),
        1 => (
            vec![(2, &tw * (&seven6 - &half))],
            vec![(0, &tw * &half), (3, &tw * ((int(2) * &kk + int(2)) * &half - &five6 - &seven6))],
            vec![
                (1, int(2) * &tw * (&five6 - &half)),
                (
                    4,
                    &tw * rat(1, 2)
                        * ((int(2) * &kk + int(3)) * &five6 - (int(8) * &kk + int(5)) * &half + int(2) * &seven6),
                ),
            ],
        ),
        _ => (
            vec![
                (1, &tw * int(12) * poch(&rat(1, 6), k + 1)),
                (4, &tw * rat(1, 2) * ((int(2) * &kk + int(5)) * &seven6 + &five6 - int(6) * &three2)),
            ],
            vec![(2, &tw * (int(3) * &three2 - &five6 - int(2) * &seven6))],
            vec![
                (0, int(2) * &tw * &five6),
                (3, int(2) * &tw * ((int(2) * &kk + int(2)) * &five6 - int(3) * &three2 + &seven6)),
            ],
        ),
    };
    let e = |family, terms| Expansion { family, index: n, end: End::Small, terms };
    [e(Family::R, r), e(Family::S, s), e(Family::T, t)]
}
