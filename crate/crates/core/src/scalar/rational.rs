use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Builds `num / den`, reducing to lowest terms. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_parts(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_parts(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $Trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $Trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Serializes a big integer as a JSON number when it fits in `i64`, otherwise
/// as a decimal string.
pub(crate) fn bigint_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(small) => serde_json::Value::from(small),
        None => serde_json::Value::String(n.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Result<BigInt, String> {
    match v {
        serde_json::Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("expected an integer, found {num}")),
        serde_json::Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| format!("invalid integer string {s:?}: {e}")),
        other => Err(format!("expected an integer, found {other}")),
    }
}

/// JSON form: `[numerator, denominator]`.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&bigint_to_json(self.numer()))?;
        tup.serialize_element(&bigint_to_json(self.denom()))?;
        tup.end()
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: (serde_json::Value, serde_json::Value) = Deserialize::deserialize(deserializer)?;
        let num = bigint_from_json(&raw.0).map_err(de::Error::custom)?;
        let den = bigint_from_json(&raw.1).map_err(de::Error::custom)?;
        if den.is_zero() {
            return Err(de::Error::custom("zero denominator"));
        }
        Ok(Rational::from_parts(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        let q = Rational::new(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(Rational::new(0, -7), Rational::zero());
        assert_eq!(Rational::zero().denom(), &BigInt::from(1));
    }

    #[test]
    fn json_uses_pairs() {
        let q = Rational::new(-3, 6);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[-1,2]");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<Rational>("[1,0]").is_err());
    }

    #[test]
    fn huge_values_round_trip_as_strings() {
        let big = BigInt::from(i64::MAX) * BigInt::from(1000);
        let q = Rational::from_bigint(big.clone());
        let s = serde_json::to_string(&q).unwrap();
        assert!(s.contains('"'));
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back.numer(), &big);
    }
}
