use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::ScalarError;

/// The `lprime`-th cyclotomic polynomial, coefficients from the constant term up.
///
/// Computed as `x^lprime - 1` divided exactly by `Phi_d` for every proper
/// divisor `d` of `lprime`. Panics when `lprime == 0`.
pub fn cyclotomic_polynomial(lprime: u32) -> Vec<BigInt> {
    assert!(lprime >= 1, "cyclotomic order must be at least 1");
    let mut cache: HashMap<u32, Vec<BigInt>> = HashMap::new();
    cyclotomic_rec(lprime, &mut cache)
}

fn cyclotomic_rec(n: u32, cache: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut quotient = vec![BigInt::zero(); n as usize + 1];
    quotient[0] = BigInt::from(-1);
    quotient[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_rec(d, cache);
        quotient = int_poly_div_monic(&quotient, &phi_d);
    }
    cache.insert(n, quotient.clone());
    quotient
}

/// Exact division by a monic integer polynomial; panics on a remainder.
fn int_poly_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem = num.to_vec();
    let q_len = num.len() - dd;
    let mut quot = vec![BigInt::zero(); q_len];
    for qi in (0..q_len).rev() {
        let c = rem[qi + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[qi + j] -= &c * dc;
        }
        quot[qi] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The field `Q[x]/Phi_l'(x)` with cached reductions of `x^k`, `0 <= k < l'`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Monic modulus, constant term first; length `degree + 1`.
    modulus: Vec<Rational>,
    powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    /// Shared field of the given order.
    pub fn get(order: u32) -> Arc<CyclotomicField> {
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let fields = FIELDS.get_or_init(Default::default);
        let mut guard = fields.lock().expect("cyclotomic field cache poisoned");
        guard
            .entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField::build(order)))
            .clone()
    }

    fn build(order: u32) -> Self {
        let modulus: Vec<Rational> =
            cyclotomic_polynomial(order).into_iter().map(Rational::from_bigint).collect();
        let degree = modulus.len() - 1;
        let mut field = CyclotomicField { order, modulus, powers: Vec::new() };
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        let mut powers = Vec::with_capacity(order as usize);
        for _ in 0..order {
            let reduced = field.reduce(cur.clone());
            powers.push(reduced.clone());
            let mut next = vec![Rational::zero()];
            next.extend(reduced);
            cur = next;
        }
        field.powers = powers;
        field
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `phi(l')`, the length of every coordinate vector.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduces an arbitrary polynomial (constant term first) modulo `Phi`.
    pub fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        for i in (d..poly.len()).rev() {
            if poly[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[i]);
            for j in 0..d {
                if !self.modulus[j].is_zero() {
                    let delta = &c * &self.modulus[j];
                    poly[i - d + j] -= &delta;
                }
            }
        }
        poly.resize(d, Rational::zero());
        poly
    }

    /// Coordinates of `eps^k`.
    pub fn power_coords(&self, k: i64) -> &[Rational] {
        &self.powers[k.rem_euclid(self.order as i64) as usize]
    }
}

/// An element of `Q(eps)` for a primitive `l'`-th root of unity `eps`, in the
/// power basis `1, eps, ..., eps^(phi(l')-1)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coords: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn zero(order: u32) -> Self {
        let field = CyclotomicField::get(order);
        let coords = vec![Rational::zero(); field.degree()];
        CyclotomicNumber { field, coords }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coords[0] = q;
        z
    }

    pub fn from_int(order: u32, c: i64) -> Self {
        Self::from_rational(order, Rational::from_int(c))
    }

    /// `eps^k` for any integer `k`.
    pub fn epsilon_pow(order: u32, k: i64) -> Self {
        let field = CyclotomicField::get(order);
        let coords = field.power_coords(k).to_vec();
        CyclotomicNumber { field, coords }
    }

    /// Builds from explicit power-basis coordinates.
    pub fn from_coords(order: u32, coords: Vec<Rational>) -> Result<Self, ScalarError> {
        let field = CyclotomicField::get(order);
        if coords.len() != field.degree() {
            return Err(ScalarError::CoordinateLength { expected: field.degree(), found: coords.len() });
        }
        Ok(CyclotomicNumber { field, coords })
    }

    /// Reduces a polynomial in `eps` (constant term first).
    pub fn from_poly(order: u32, poly: Vec<Rational>) -> Self {
        let field = CyclotomicField::get(order);
        let coords = field.reduce(poly);
        CyclotomicNumber { field, coords }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational number when it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(Rational::is_zero).then(|| self.coords[0].clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CyclotomicNumber { field: self.field.clone(), coords: self.coords.iter().map(|x| x * c).collect() }
    }

    fn check_same(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "arithmetic between cyclotomic numbers of different orders"
        );
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Phi`.
    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut r0 = trim(self.field.modulus.clone());
        let mut r1 = trim(self.coords.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s_next = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        // r0 is a nonzero constant since Phi is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let inv_g = r0[0].recip().expect("gcd is nonzero");
        let poly = s0.iter().map(|c| c * &inv_g).collect();
        Ok(CyclotomicNumber::from_poly(self.order(), poly))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CyclotomicNumber::one(self.order());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Division with remainder in `Q[x]`; `den` must be trimmed and nonempty.
fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead = den.last().unwrap();
    let q_len = rem.len() - den.len() + 1;
    let mut quot = vec![Rational::zero(); q_len];
    for qi in (0..q_len).rev() {
        let top = &rem[qi + den.len() - 1];
        if top.is_zero() {
            continue;
        }
        let c = top / lead;
        for (j, d) in den.iter().enumerate() {
            let delta = &c * d;
            rem[qi + j] -= &delta;
        }
        quot[qi] = c;
    }
    (trim(quot), trim(rem))
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coords == other.coords
    }
}

impl Eq for CyclotomicNumber {}

impl Hash for CyclotomicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coords.hash(state);
    }
}

impl Add<&CyclotomicNumber> for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        CyclotomicNumber { field: self.field.clone(), coords }
    }
}

impl Sub<&CyclotomicNumber> for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        CyclotomicNumber { field: self.field.clone(), coords }
    }
}

impl Mul<&CyclotomicNumber> for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check_same(rhs);
        let d = self.coords.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        let coords = self.field.reduce(prod);
        CyclotomicNumber { field: self.field.clone(), coords }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (l'={})", self.order())
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Rational)> =
            self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "eps")?,
                _ => write!(f, "eps^{k}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: `{"lprime": k, "coords": [[num, den], ...]}`.
impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CyclotomicNumber", 2)?;
        st.serialize_field("lprime", &self.order())?;
        st.serialize_field("coords", &self.coords)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            lprime: u32,
            coords: Vec<Rational>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.lprime == 0 {
            return Err(de::Error::custom("lprime must be at least 1"));
        }
        CyclotomicNumber::from_coords(raw.lprime, raw.coords).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[i64]) -> Vec<BigInt> {
        p.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi6_matches_division_oracle() {
        // (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1)), by hand: x^2 - x + 1.
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=30 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n) as usize, "n = {n}");
        }
    }

    #[test]
    fn inverse_of_i_is_minus_i() {
        let i = CyclotomicNumber::epsilon_pow(4, 1);
        let inv = i.invert().unwrap();
        assert_eq!(inv, -&i);
        assert!((&i * &inv).is_one());
    }

    #[test]
    fn inverse_edge_cases() {
        assert!(CyclotomicNumber::one(7).invert().unwrap().is_one());
        let two = CyclotomicNumber::from_int(5, 2);
        assert_eq!(two.invert().unwrap(), CyclotomicNumber::from_rational(5, Rational::new(1, 2)));
        assert_eq!(CyclotomicNumber::zero(3).invert(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn primitive_root_orders() {
        for order in 1..=12u32 {
            let eps = CyclotomicNumber::epsilon_pow(order, 1);
            assert!(eps.pow(order as i64).unwrap().is_one());
            for k in 1..order as i64 {
                assert!(!eps.pow(k).unwrap().is_one(), "eps^{k} = 1 for l' = {order}");
            }
            if order % 2 == 0 {
                let half = eps.pow(order as i64 / 2).unwrap();
                assert_eq!(half, CyclotomicNumber::from_int(order, -1));
            }
        }
    }

    #[test]
    fn json_shape() {
        let z = CyclotomicNumber::epsilon_pow(3, 2);
        let s = serde_json::to_string(&z).unwrap();
        assert_eq!(s, r#"{"lprime":3,"coords":[[-1,1],[-1,1]]}"#);
        assert_eq!(serde_json::from_str::<CyclotomicNumber>(&s).unwrap(), z);
        assert!(serde_json::from_str::<CyclotomicNumber>(r#"{"lprime":3,"coords":[[1,1]]}"#).is_err());
    }
}
