use std::fmt;

use serde::{Deserialize, Serialize};

/// Residue of `j` modulo `n`, taken in `1..=n`.
pub fn residue(j: i64, n: usize) -> usize {
    ((j - 1).rem_euclid(n as i64) + 1) as usize
}

/// A basis label `(j_1, ..., j_r)` of the tensor space, entries unbounded in `Z`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexTuple(Vec<i64>);

impl IndexTuple {
    pub fn new(entries: Vec<i64>) -> Self {
        IndexTuple(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry at 1-based slot `t`.
    pub fn slot(&self, t: usize) -> i64 {
        self.0[t - 1]
    }

    /// Copy with the 1-based slot `t` replaced.
    pub fn with_slot(&self, t: usize, value: i64) -> Self {
        let mut e = self.0.clone();
        e[t - 1] = value;
        IndexTuple(e)
    }

    pub fn map_entries(&self, f: impl Fn(i64) -> i64) -> Self {
        IndexTuple(self.0.iter().map(|&j| f(j)).collect())
    }
}

impl From<Vec<i64>> for IndexTuple {
    fn from(v: Vec<i64>) -> Self {
        IndexTuple(v)
    }
}

impl<const R: usize> From<[i64; R]> for IndexTuple {
    fn from(v: [i64; R]) -> Self {
        IndexTuple(v.to_vec())
    }
}

impl fmt::Debug for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, ")")
    }
}

/// A weight: `n` nonnegative parts summing to `r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn r(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Dominance order: every partial sum of `self` is at most that of `other`.
    pub fn dominated_by(&self, other: &Composition) -> bool {
        if self.n() != other.n() || self.r() != other.r() {
            return false;
        }
        let mut a = 0;
        let mut b = 0;
        for (x, y) in self.0.iter().zip(&other.0) {
            a += x;
            b += y;
            if a > b {
                return false;
            }
        }
        true
    }

    /// Pads with zeros to `big_n` parts.
    pub fn extend_to(&self, big_n: usize) -> Composition {
        let mut parts = self.0.clone();
        parts.resize(big_n.max(parts.len()), 0);
        Composition(parts)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All of `Lambda(n, r)`, first part descending.
pub fn compositions(n: usize, r: usize) -> Vec<Composition> {
    fn rec(n: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(r);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            rec(n - 1, r - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        rec(n, r, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Weight of a basis tuple: `lambda_i` counts the slots whose residue mod `n` is `i`.
pub fn weight_of(idx: &IndexTuple, n: usize) -> Composition {
    let mut parts = vec![0; n];
    for &j in idx.entries() {
        parts[residue(j, n) - 1] += 1;
    }
    Composition(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_wrap_into_one_to_n() {
        assert_eq!(residue(0, 2), 2);
        assert_eq!(residue(-1, 2), 1);
        assert_eq!(residue(5, 5), 5);
        assert_eq!(residue(6, 5), 1);
        assert_eq!(residue(-7, 1), 1);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_of(&[1, 4, 2].into(), 2).parts(), &[1, 2]);
        assert_eq!(weight_of(&[5].into(), 5).parts(), &[0, 0, 0, 0, 1]);
        assert_eq!(weight_of(&[0, -1].into(), 2).parts(), &[1, 1]);
    }

    #[test]
    fn composition_count_is_stars_and_bars() {
        for n in 1..=4usize {
            for r in 0..=5usize {
                let expected = crate::qcomb::binomial((r + n - 1) as i64, (n - 1) as u32);
                assert_eq!(num_bigint::BigInt::from(compositions(n, r).len()), expected);
                assert!(compositions(n, r).iter().all(|c| c.r() == r && c.n() == n));
            }
        }
    }

    #[test]
    fn dominance() {
        let a = Composition::new(vec![1, 1, 1]);
        let b = Composition::new(vec![2, 1, 0]);
        assert!(a.dominated_by(&b));
        assert!(!b.dominated_by(&a));
        assert!(a.dominated_by(&a));
    }
}
