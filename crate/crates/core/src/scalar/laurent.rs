use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::rational::{bigint_from_json, bigint_to_json, Rational};
use super::ScalarError;

/// A Laurent polynomial in `v` with rational coefficients.
///
/// Stored densely from the lowest nonzero exponent; both ends are always
/// nonzero, so structural equality is equality of polynomials. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_int(c))
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    pub fn monomial(exp: i64, coeff: Rational) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { low: exp, coeffs: vec![coeff] }
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let terms: Vec<(i64, Rational)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += &c;
        }
        Self::from_dense(low, coeffs)
    }

    /// Normalizes a dense coefficient vector starting at `v^low`.
    pub(crate) fn from_dense(mut low: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i64;
        }
        if coeffs.is_empty() {
            low = 0;
        }
        LaurentPoly { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Whether every coefficient is an integer, i.e. the value lies in `Z[v, v^-1]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Both sides are shifted to ordinary polynomials with nonzero constant
    /// term and divided by long division; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, ScalarError> {
        if divisor.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d = &divisor.coeffs;
        let d_lead = d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return Err(ScalarError::InexactDivision);
        }
        let q_len = rem.len() - d.len() + 1;
        let mut quot = vec![Rational::zero(); q_len];
        for qi in (0..q_len).rev() {
            let top = &rem[qi + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let factor = top / d_lead;
            for (j, dc) in d.iter().enumerate() {
                if !dc.is_zero() {
                    let delta = &factor * dc;
                    rem[qi + j] -= &delta;
                }
            }
            quot[qi] = factor;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ScalarError::InexactDivision);
        }
        Ok(Self::from_dense(self.low - divisor.low, quot))
    }

    fn add_impl(&self, rhs: &LaurentPoly, negate_rhs: bool) -> LaurentPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_rhs { -rhs } else { rhs.clone() };
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.low - low) as usize + i];
            if negate_rhs {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_dense(low, coeffs)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "v")?,
                _ => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: a list of `[exponent, numerator, denominator]` triples sorted by exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, bigint_to_json(c.numer()), bigint_to_json(c.denom())))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(i64, serde_json::Value, serde_json::Value)> =
            Deserialize::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, num, den) in raw {
            let num = bigint_from_json(&num).map_err(de::Error::custom)?;
            let den = bigint_from_json(&den).map_err(de::Error::custom)?;
            if num_traits::Zero::is_zero(&den) {
                return Err(de::Error::custom("zero denominator"));
            }
            terms.push((e, Rational::from_parts(num, den)));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_int(c))))
    }

    #[test]
    fn cancellation_strips_ends() {
        let p = lp(&[(-2, 1), (0, 3), (4, 1)]);
        let q = lp(&[(-2, -1), (4, -1)]);
        let s = &p + &q;
        assert_eq!(s, LaurentPoly::from_int(3));
        assert_eq!(s.min_exp(), Some(0));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = lp(&[(-1, 1), (1, 1)]);
        let b = lp(&[(-3, 2), (0, -1), (5, 7)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn inexact_division_is_an_error() {
        let num = lp(&[(3, 1), (-3, -1)]);
        let den = lp(&[(2, 1), (-2, -1)]);
        assert_eq!(num.exact_div(&den), Err(ScalarError::InexactDivision));
        assert_eq!(num.exact_div(&LaurentPoly::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(lp(&[(-2, 1), (0, 1), (2, 1)]).to_string(), "v^2 + 1 + v^-2");
        assert_eq!(lp(&[(1, -1), (-1, -1)]).to_string(), "-v - v^-1");
    }

    #[test]
    fn json_triples() {
        let p = LaurentPoly::from_terms([(-1, Rational::new(1, 2)), (2, Rational::from_int(-3))]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[[-1,1,2],[2,-3,1]]");
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
        assert_eq!(serde_json::to_string(&LaurentPoly::zero()).unwrap(), "[]");
    }
}
