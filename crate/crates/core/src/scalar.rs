//! Scalar abstraction for evaluating count polynomials and observables.

use crate::{Count, Rational};
use num_bigint::BigInt;
use num_traits::{Num, ToPrimitive};
use std::fmt::Debug;

/// Field-like scalar in which polynomials with [`Count`] coefficients can be
/// evaluated. Exact for [`Rational`], approximate for the float types.
pub trait Scalar: Num + Clone + PartialOrd + Debug {
    fn from_count(c: &Count) -> Self;

    fn from_u64(k: u64) -> Self {
        Self::from_count(&Count::from(k))
    }

    fn pow_u(&self, e: u64) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for Rational {
    fn from_count(c: &Count) -> Self {
        Rational::from_integer(BigInt::from(c.clone()))
    }

    fn pow_u(&self, e: u64) -> Self {
        num_traits::Pow::pow(self, e)
    }
}

impl Scalar for f64 {
    fn from_count(c: &Count) -> Self {
        c.to_f64().unwrap_or(f64::INFINITY)
    }

    fn pow_u(&self, e: u64) -> Self {
        self.powf(e as f64)
    }
}

impl Scalar for f32 {
    fn from_count(c: &Count) -> Self {
        c.to_f32().unwrap_or(f32::INFINITY)
    }

    fn pow_u(&self, e: u64) -> Self {
        self.powf(e as f32)
    }
}

/// Parse `"a/b"` or `"a"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str_radix(num, 10).ok()?;
    let den = BigInt::from_str_radix(den, 10).ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Render as `"num/den"` (always with a denominator).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact `n/d` with small integers.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Serde adapter storing a [`Rational`] as a `"num/den"` string.
pub mod rational_string {
    use super::{format_rational, parse_rational};
    use crate::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("bad rational `{text}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("2/4"), Some(ratio(1, 2)));
        assert_eq!(parse_rational(" 3 "), Some(ratio(3, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&ratio(5, 1)), "5/1");
    }

    #[test]
    fn scalar_powers() {
        assert_eq!(ratio(2, 3).pow_u(3), ratio(8, 27));
        assert_eq!(Scalar::pow_u(&1.5f64, 2), 2.25);
        assert_eq!(<f32 as Scalar>::from_u64(7), 7.0);
    }
}
