//! Lossless `"num/den"` string encoding for [`Rational`] fields.
//!
//! Integers are written without a denominator; both forms are accepted on
//! input. A zero denominator is rejected.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::geometry::Rational;

pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("bad numerator in rational {s:?}"))?;
    let den = BigInt::from_str(den).map_err(|_| format!("bad denominator in rational {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational {s:?}"));
    }
    Ok(Rational::new(num, den))
}

pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&to_string(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(de)?;
    parse(&s).map_err(de::Error::custom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    #[test]
    fn canonical_forms() {
        assert_eq!(to_string(&rat(6, 4)), "3/2");
        assert_eq!(to_string(&rat(-6, 3)), "-2");
        assert_eq!(parse("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse("4/-2").unwrap(), int(-2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("1/0").unwrap_err().contains("zero denominator"));
        assert!(parse("x/2").is_err());
        assert!(parse("1.5").is_err());
    }
}
