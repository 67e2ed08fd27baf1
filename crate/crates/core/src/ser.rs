use serde::ser::{SerializeSeq, Serializer};

use crate::ratcore::Rational;

/// `(power, coefficient)` pairs with the coefficient as a string.
pub(crate) fn terms<S: Serializer>(t: &[(usize, Rational)], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for (k, c) in t {
        seq.serialize_element(&(k, c.to_string()))?;
    }
    seq.end()
}
