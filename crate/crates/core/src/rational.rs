//! Exact rationals used for certified comparisons.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Parses `"139"`, `"684/5"` or `"136.8"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad())?;
        let d: i128 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let w: i128 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let den = 10i128.pow(frac.len() as u32);
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let num = w.abs() * den + f;
        return Ok(Rational::new(if negative { -num } else { num }, den));
    }
    s.parse::<i128>().map(int).map_err(|_| bad())
}

pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn floor(r: &Rational) -> i128 {
    r.numer().div_floor(r.denom())
}

pub fn ceil(r: &Rational) -> i128 {
    r.numer().div_ceil(r.denom())
}

/// Rational upper bound on a non-negative float, with the given denominator.
pub fn upper_from_f64(v: f64, den: i128) -> Rational {
    Rational::new((v * den as f64).ceil() as i128 + 1, den)
}

/// Rational lower bound on a non-negative float, with the given denominator.
pub fn lower_from_f64(v: f64, den: i128) -> Rational {
    let n = (v * den as f64).floor() as i128 - 1;
    Rational::new(n.max(0), den)
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive() && !r.is_zero()
}

/// Serde adapter: rationals travel as `"num/den"` strings.
pub mod serde_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_string_opt {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        r: &Option<Rational>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&to_string(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_and_fraction() {
        assert_eq!(parse("136.8").unwrap(), ratio(684, 5));
        assert_eq!(parse("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse("139").unwrap(), int(139));
        assert_eq!(parse("-0.5").unwrap(), ratio(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn floor_ceil() {
        assert_eq!(floor(&ratio(684, 5)), 136);
        assert_eq!(ceil(&ratio(684, 5)), 137);
        assert_eq!(ceil(&int(7)), 7);
        assert_eq!(floor(&ratio(-1, 2)), -1);
    }

    #[test]
    fn float_brackets() {
        let v = std::f64::consts::PI;
        assert!(to_f64(&lower_from_f64(v, 1_000_000)) < v);
        assert!(to_f64(&upper_from_f64(v, 1_000_000)) > v);
    }
}
