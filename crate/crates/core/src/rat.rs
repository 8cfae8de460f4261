//! Exact rationals.
//!
//! `Rat` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Text form is `"p/q"`, or `"p"` when `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`. Non-reduced input is accepted and normalized.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical text form; `num_rational` already prints `p` for integers.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Least common multiple of the denominators of `v` (1 for an empty slice).
pub fn denominator_lcm(v: &[Rat]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Converts an integral rational to `i64`, if it is one and it fits.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer()).ok()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

pub mod serde_rat {
    //! Serde adapters for rationals stored as strings.
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = RatText::deserialize(d)?;
        s.into_rat().map_err(serde::de::Error::custom)
    }

    /// Accepts `"p/q"` strings and bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RatText {
        Str(String),
        Int(i64),
    }

    impl RatText {
        pub(crate) fn into_rat(self) -> Result<Rat> {
            match self {
                RatText::Str(s) => parse_rat(&s),
                RatText::Int(i) => Ok(rat(i)),
            }
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rat(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Rat>, D::Error> {
            Vec::<RatText>::deserialize(d)?
                .into_iter()
                .map(|t| t.into_rat().map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod matrix {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(
            rows: &[Vec<Rat>],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(rows.len()))?;
            for row in rows {
                let text: Vec<String> = row.iter().map(format_rat).collect();
                seq.serialize_element(&text)?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Vec<Rat>>, D::Error> {
            Vec::<Vec<RatText>>::deserialize(d)?
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|t| t.into_rat().map_err(serde::de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_is_canonical() {
        assert_eq!(format_rat(&ratio(2, 4)), "1/2");
        assert_eq!(format_rat(&ratio(3, -6)), "-1/2");
        assert_eq!(format_rat(&rat(-7)), "-7");
        assert_eq!(format_rat(&ratio(0, 5)), "0");
    }

    #[test]
    fn parse_accepts_both_forms() {
        assert_eq!(parse_rat("5").unwrap(), rat(5));
        assert_eq!(parse_rat(" -4/6 ").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rat("1/-2").unwrap(), ratio(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn lcm_of_denominators() {
        let v = [ratio(1, 4), ratio(5, 6), rat(3)];
        assert_eq!(denominator_lcm(&v), BigInt::from(12));
    }
}
