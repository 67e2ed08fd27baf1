use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// The six polynomial families.
///
/// `P`, `Q` give `Ai^(n) = P_n Ai + Q_n Ai'`, `Z` is the third solution of
/// the shared three-term recurrence, and `R`, `S`, `T` give
/// `[Ai^2]^(n) = R_n Ai^2 + 2 S_n Ai Ai' + T_n Ai'^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    P,
    Q,
    Z,
    R,
    S,
    T,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::P, Family::Q, Family::Z, Family::R, Family::S, Family::T];

    /// Power of `x` factored out before substituting `x^3 -> x`, by `n mod 3`.
    pub fn reduction_shift(self, n: usize) -> usize {
        let table = match self {
            Family::P | Family::R => [0, 2, 1],
            Family::Q | Family::S => [1, 0, 2],
            Family::Z | Family::T => [2, 1, 0],
        };
        table[n % 3]
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::P => "P",
            Family::Q => "Q",
            Family::Z => "Z",
            Family::R => "R",
            Family::S => "S",
            Family::T => "T",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "P" => Ok(Family::P),
            "Q" => Ok(Family::Q),
            "Z" => Ok(Family::Z),
            "R" => Ok(Family::R),
            "S" => Ok(Family::S),
            "T" => Ok(Family::T),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}`"))),
        }
    }
}
