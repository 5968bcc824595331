//! Exact coefficient arithmetic: rationals, Laurent polynomials in `v`, and
//! cyclotomic fields `Q(eps)` together with the specialization `v -> eps`.

mod cyclotomic;
mod laurent;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, totient, CyclotomicField, CyclotomicNumber};
pub use laurent::LaurentPoly;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
    #[error("expected {expected} cyclotomic coordinates, found {found}")]
    CoordinateLength { expected: usize, found: usize },
    #[error("mixed scalar variants: {left} and {right}")]
    MixedVariants { left: ScalarKind, right: ScalarKind },
}

/// `l` from `l'`: `l'` itself when odd, `l'/2` when even.
pub fn l_of(lprime: u32) -> u32 {
    assert!(lprime >= 1, "l' must be at least 1");
    if lprime.is_multiple_of(2) {
        lprime / 2
    } else {
        lprime
    }
}

/// Ring homomorphism `Q[v, v^-1] -> Q(eps)` sending `v` to a primitive
/// `lprime`-th root of unity.
pub fn specialize(p: &LaurentPoly, lprime: u32) -> CyclotomicNumber {
    assert!(lprime >= 1, "l' must be at least 1");
    let field = CyclotomicField::get(lprime);
    let mut folded = vec![Rational::zero(); lprime as usize];
    for (e, c) in p.terms() {
        folded[e.rem_euclid(lprime as i64) as usize] += c;
    }
    CyclotomicNumber::from_poly(field.order(), folded)
}

/// Inverse of a nonzero cyclotomic number.
pub fn cyc_invert(z: &CyclotomicNumber) -> Result<CyclotomicNumber, ScalarError> {
    z.invert()
}

/// Which ring a [`Scalar`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarKind {
    Generic,
    Specialized(u32),
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Generic => write!(f, "generic"),
            ScalarKind::Specialized(l) => write!(f, "specialized(l'={l})"),
        }
    }
}

impl ScalarKind {
    pub fn from_lprime(lprime: Option<u32>) -> Self {
        match lprime {
            None => ScalarKind::Generic,
            Some(l) => ScalarKind::Specialized(l),
        }
    }

    pub fn lprime(self) -> Option<u32> {
        match self {
            ScalarKind::Generic => None,
            ScalarKind::Specialized(l) => Some(l),
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            ScalarKind::Generic => Scalar::Generic(LaurentPoly::zero()),
            ScalarKind::Specialized(l) => Scalar::Specialized(CyclotomicNumber::zero(l)),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_laurent(&LaurentPoly::one())
    }

    pub fn from_int(self, c: i64) -> Scalar {
        self.from_laurent(&LaurentPoly::from_int(c))
    }

    /// `v^k`, or `eps^k` when specialized.
    pub fn v_pow(self, k: i64) -> Scalar {
        match self {
            ScalarKind::Generic => Scalar::Generic(LaurentPoly::v_pow(k)),
            ScalarKind::Specialized(l) => Scalar::Specialized(CyclotomicNumber::epsilon_pow(l, k)),
        }
    }

    /// Embeds a generic value, specializing it when this kind is specialized.
    pub fn from_laurent(self, p: &LaurentPoly) -> Scalar {
        match self {
            ScalarKind::Generic => Scalar::Generic(p.clone()),
            ScalarKind::Specialized(l) => Scalar::Specialized(specialize(p, l)),
        }
    }
}

/// A coefficient: generic (`Q[v, v^-1]`) or specialized (`Q(eps)`).
///
/// Arithmetic operators panic on mixed variants; values entering from outside
/// are checked with [`Scalar::kind`] before they reach arithmetic.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Generic(LaurentPoly),
    Specialized(CyclotomicNumber),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Generic(_) => ScalarKind::Generic,
            Scalar::Specialized(z) => ScalarKind::Specialized(z.order()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Generic(p) => p.is_zero(),
            Scalar::Specialized(z) => z.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Generic(p) => p.is_one(),
            Scalar::Specialized(z) => z.is_one(),
        }
    }

    /// Applies `v -> eps`. Already-specialized values must have the same order.
    pub fn specialize(&self, lprime: u32) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Generic(p) => Ok(Scalar::Specialized(specialize(p, lprime))),
            Scalar::Specialized(z) if z.order() == lprime => Ok(self.clone()),
            Scalar::Specialized(_) => Err(ScalarError::MixedVariants {
                left: self.kind(),
                right: ScalarKind::Specialized(lprime),
            }),
        }
    }

    fn check(&self, rhs: &Scalar) -> Result<(), ScalarError> {
        if self.kind() == rhs.kind() {
            Ok(())
        } else {
            Err(ScalarError::MixedVariants { left: self.kind(), right: rhs.kind() })
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a + b),
            (Scalar::Specialized(a), Scalar::Specialized(b)) => Scalar::Specialized(a + b),
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a * b),
            (Scalar::Specialized(a), Scalar::Specialized(b)) => Scalar::Specialized(a * b),
            _ => unreachable!(),
        })
    }

    pub fn scale_int(&self, c: i64) -> Scalar {
        let c = Rational::from_int(c);
        match self {
            Scalar::Generic(p) => Scalar::Generic(p.scale(&c)),
            Scalar::Specialized(z) => Scalar::Specialized(z.scale(&c)),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_add(&-rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Generic(p) => Scalar::Generic(-p),
            Scalar::Specialized(z) => Scalar::Specialized(-z),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(p) => write!(f, "{p}"),
            Scalar::Specialized(z) => write!(f, "{z:?}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(p) => write!(f, "{p}"),
            Scalar::Specialized(z) => write!(f, "{z}"),
        }
    }
}
