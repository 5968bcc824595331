use std::collections::BTreeMap;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::index::IndexTuple;
use super::ActionError;
use crate::scalar::{Scalar, ScalarKind};

/// A finitely supported vector of the tensor space: basis tuples of length
/// `r` with nonzero coefficients of a single scalar kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorVector {
    r: usize,
    terms: BTreeMap<IndexTuple, Scalar>,
}

impl TensorVector {
    pub fn zero(r: usize) -> Self {
        TensorVector { r, terms: BTreeMap::new() }
    }

    /// The basis vector `omega_idx` with coefficient one.
    pub fn basis(idx: impl Into<IndexTuple>, kind: ScalarKind) -> Self {
        let idx = idx.into();
        let r = idx.len();
        let mut terms = BTreeMap::new();
        terms.insert(idx, kind.one());
        TensorVector { r, terms }
    }

    /// Sums the given terms, checking tuple lengths and scalar kinds.
    pub fn from_terms<I>(r: usize, terms: I) -> Result<Self, ActionError>
    where
        I: IntoIterator<Item = (IndexTuple, Scalar)>,
    {
        let mut out = TensorVector::zero(r);
        let mut kind: Option<ScalarKind> = None;
        for (idx, c) in terms {
            if idx.len() != r {
                return Err(ActionError::LengthMismatch { expected: r, found: idx.len() });
            }
            match kind {
                None => kind = Some(c.kind()),
                Some(k) if k != c.kind() => {
                    return Err(ActionError::KindMismatch { expected: k, found: c.kind() })
                }
                _ => {}
            }
            out.add_term(idx, &c);
        }
        Ok(out)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &IndexTuple) -> Option<&Scalar> {
        self.terms.get(idx)
    }

    /// Scalar kind of the coefficients, `None` for the zero vector.
    pub fn kind(&self) -> Option<ScalarKind> {
        self.terms.values().next().map(Scalar::kind)
    }

    pub(crate) fn add_term(&mut self, idx: IndexTuple, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&idx);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(idx, c.clone());
            }
        }
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_term(idx.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_term(idx.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TensorVector {
        let mut out = TensorVector::zero(self.r);
        for (idx, c) in self.terms() {
            let prod = c * s;
            if !prod.is_zero() {
                out.terms.insert(idx.clone(), prod);
            }
        }
        out
    }

    /// Linear extension of a basis map `idx -> sum of (idx', coeff)`.
    pub(crate) fn linear_map<F>(&self, mut f: F) -> TensorVector
    where
        F: FnMut(&IndexTuple, &mut dyn FnMut(IndexTuple, Scalar)),
    {
        let mut out = TensorVector::zero(self.r);
        for (idx, c) in self.terms() {
            f(idx, &mut |image, coeff| {
                let prod = c * &coeff;
                out.add_term(image, &prod);
            });
        }
        out
    }

    /// Scales each basis vector by its own eigenvalue.
    pub(crate) fn diagonal_map<F>(&self, mut eigen: F) -> TensorVector
    where
        F: FnMut(&IndexTuple) -> Scalar,
    {
        let mut out = TensorVector::zero(self.r);
        for (idx, c) in self.terms() {
            let prod = c * &eigen(idx);
            if !prod.is_zero() {
                out.terms.insert(idx.clone(), prod);
            }
        }
        out
    }

    /// Keeps the terms whose tuple satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&IndexTuple) -> bool) -> TensorVector {
        TensorVector {
            r: self.r,
            terms: self.terms.iter().filter(|(i, _)| keep(i)).map(|(i, c)| (i.clone(), c.clone())).collect(),
        }
    }

    /// Relabels basis tuples bijectively, keeping coefficients.
    pub fn relabel(&self, mut f: impl FnMut(&IndexTuple) -> IndexTuple) -> TensorVector {
        let mut out = TensorVector::zero(self.r);
        for (idx, c) in self.terms() {
            out.add_term(f(idx), c);
        }
        out
    }

    /// Applies `v -> eps` to every coefficient.
    pub fn specialize(&self, lprime: u32) -> Result<TensorVector, ActionError> {
        let mut out = TensorVector::zero(self.r);
        for (idx, c) in self.terms() {
            out.add_term(idx.clone(), &c.specialize(lprime)?);
        }
        Ok(out)
    }

    /// Copy without the term at `idx`.
    pub fn without(&self, idx: &IndexTuple) -> TensorVector {
        let mut out = self.clone();
        out.terms.remove(idx);
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    idx: IndexTuple,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorJson {
    r: usize,
    terms: Vec<TermJson>,
}

/// JSON form: `{"r": 2, "terms": [{"idx": [2, 1], "coeff": <scalar>}, ...]}`.
impl Serialize for TensorVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VectorJson {
            r: self.r,
            terms: self.terms().map(|(i, c)| TermJson { idx: i.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TensorVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = VectorJson::deserialize(deserializer)?;
        TensorVector::from_terms(raw.r, raw.terms.into_iter().map(|t| (t.idx, t.coeff)))
            .map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancelling_terms_vanish() {
        let k = ScalarKind::Generic;
        let a = TensorVector::basis([1, 2], k);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a), a.scale(&k.from_int(2)));
    }

    #[test]
    fn from_terms_validates() {
        let k = ScalarKind::Generic;
        let bad_len = TensorVector::from_terms(2, [(IndexTuple::from([1]), k.one())]);
        assert!(matches!(bad_len, Err(ActionError::LengthMismatch { .. })));
        let mixed = TensorVector::from_terms(
            1,
            [(IndexTuple::from([1]), k.one()), (IndexTuple::from([2]), ScalarKind::Specialized(3).one())],
        );
        assert!(matches!(mixed, Err(ActionError::KindMismatch { .. })));
    }

    #[test]
    fn json_shape() {
        let v = TensorVector::basis([2, 1], ScalarKind::Generic);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"r":2,"terms":[{"idx":[2,1],"coeff":[[0,1,1]]}]}"#);
    }

    proptest! {
        #[test]
        fn json_round_trip(
            entries in prop::collection::vec((prop::collection::vec(-9i64..9, 3), -3i64..=3, -2i64..=2), 0..6),
            lprime in prop::option::of(1u32..=8),
        ) {
            let kind = ScalarKind::from_lprime(lprime);
            let v = TensorVector::from_terms(
                3,
                entries.into_iter().map(|(idx, c, e)| (IndexTuple::new(idx), kind.v_pow(e).scale_int(c))),
            ).unwrap();
            let s = serde_json::to_string(&v).unwrap();
            let back: TensorVector = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, v);
        }
    }
}
