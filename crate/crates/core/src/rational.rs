//! Exact rational numbers and their `p/q` text form.
//!
//! Only integer literals and `p/q` fractions are accepted; decimal and
//! exponent notation are rejected so that no value ever passes through a
//! floating-point representation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

fn parse_integer(s: &str, whole: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!(
            "`{whole}` is not an integer or p/q rational"
        )));
    }
    s.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("`{whole}`: {e}")))
}

/// Parses `n`, `-n`, `p/q` or `-p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => {
            if q.starts_with('-') {
                return Err(Error::Parse(format!("`{s}`: denominator must be unsigned")));
            }
            (parse_integer(p, s)?, parse_integer(q, s)?)
        }
        None => (parse_integer(s, s)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("`{s}`: zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `p/q`, or as a bare integer when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn is_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

pub fn ceil_to_usize(r: &Rational) -> Option<usize> {
    num_traits::ToPrimitive::to_usize(&r.ceil().to_integer())
}

pub fn floor_to_usize(r: &Rational) -> Option<usize> {
    num_traits::ToPrimitive::to_usize(&r.floor().to_integer())
}

/// `serde(with = ...)` adaptor writing a rational as its `p/q` string.
pub mod serde_str {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }
}

pub mod serde_str_vec {
    use super::{format_rational, Rational};
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }
}

pub mod serde_str_opt {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(
        r: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_rational(r)),
            None => s.serialize_none(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("7/12").unwrap(), ratio(7, 12));
        assert_eq!(parse_rational("6/27").unwrap(), ratio(2, 9));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("0").unwrap(), zero());
    }

    #[test]
    fn rejects_decimals_and_junk() {
        for bad in [
            "0.5", "1e3", "", "/", "1/", "/2", "1/0", "1/-2", "+1", " 1", "1 ", "--1", "1/2/3",
            "a/b",
        ] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn formats_integers_bare() {
        assert_eq!(format_rational(&ratio(4, 2)), "2");
        assert_eq!(format_rational(&ratio(-2, 6)), "-1/3");
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = ratio(p, q);
            prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
