//! Seeded inputs, the extensional check runner and counterexample shrinking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::{Counterexample, IdentityResult, Status, SuiteConfig};
use crate::scalar::{LaurentPoly, Rational, ScalarKind};
use crate::tensor::{ActionError, IndexTuple, Session, TensorVector};

/// Above this many tuples a window is sampled rather than enumerated.
pub(crate) const EXHAUSTIVE_LIMIT: usize = 5000;

/// Why an identity failed on one input.
#[derive(Debug, Clone)]
pub(crate) struct Mismatch {
    lhs: Value,
    rhs: Value,
    detail: Option<String>,
}

impl Mismatch {
    pub(crate) fn new(lhs: impl Serialize, rhs: impl Serialize) -> Self {
        Mismatch { lhs: to_json(&lhs), rhs: to_json(&rhs), detail: None }
    }

    pub(crate) fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

impl From<ActionError> for Mismatch {
    fn from(e: ActionError) -> Self {
        Mismatch { lhs: serde_json::json!({ "error": e.to_string() }), rhs: Value::Null, detail: None }
    }
}

pub(crate) type Outcome = Result<(), Mismatch>;

fn to_json(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

pub(crate) fn expect_eq<T: PartialEq + Serialize>(lhs: T, rhs: T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch::new(lhs, rhs))
    }
}

fn result(id: String, anchor: &str, trials: usize, cx: Option<Counterexample>) -> IdentityResult {
    IdentityResult {
        id,
        anchor: anchor.to_string(),
        status: if cx.is_some() { Status::Fail } else { Status::Pass },
        trials,
        counterexample: cx,
        observation: None,
    }
}

/// Checks `f` on every input vector. The first failing input (in input
/// order) is shrunk by greedy term removal before it is reported.
pub(crate) fn check_vectors<F>(id: impl Into<String>, anchor: &str, inputs: &[TensorVector], f: F) -> IdentityResult
where
    F: Fn(&TensorVector) -> Outcome + Sync,
{
    let first = inputs.par_iter().find_map_first(|x| f(x).err().map(|_| x.clone()));
    let cx = first.map(|x| {
        let x = shrink(x, &f);
        let m = f(&x).expect_err("shrinking preserves failure");
        Counterexample { input: to_json(&x), lhs: m.lhs, rhs: m.rhs, detail: m.detail }
    });
    result(id.into(), anchor, inputs.len(), cx)
}

fn shrink<F>(mut x: TensorVector, f: &F) -> TensorVector
where
    F: Fn(&TensorVector) -> Outcome,
{
    'outer: loop {
        if x.support_len() <= 1 {
            return x;
        }
        let keys: Vec<IndexTuple> = x.terms().map(|(i, _)| i.clone()).collect();
        for idx in keys {
            let smaller = x.without(&idx);
            if f(&smaller).is_err() {
                x = smaller;
                continue 'outer;
            }
        }
        return x;
    }
}

/// Checks `f` on every case; the first failing case is reported as is.
pub(crate) fn check_cases<C, F>(id: impl Into<String>, anchor: &str, cases: &[C], f: F) -> IdentityResult
where
    C: Serialize + Sync,
    F: Fn(&C) -> Outcome + Sync,
{
    let first = cases.par_iter().find_map_first(|c| f(c).err().map(|m| (c, m)));
    let cx = first.map(|(c, m)| Counterexample { input: to_json(c), lhs: m.lhs, rhs: m.rhs, detail: m.detail });
    result(id.into(), anchor, cases.len(), cx)
}

/// Seeded generator of random finitely supported vectors.
pub(crate) struct Sampler {
    rng: ChaCha8Rng,
    window: (i64, i64),
    support: usize,
    coeff: i64,
}

impl Sampler {
    /// Independent streams for the same seed are selected by `stream`.
    pub(crate) fn new(cfg: &SuiteConfig, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(stream);
        Sampler { rng, window: cfg.window, support: cfg.support_bound, coeff: cfg.coeff_bound }
    }

    pub(crate) fn with_window(mut self, window: (i64, i64)) -> Self {
        self.window = window;
        self
    }

    fn nonzero_int(&mut self) -> i64 {
        loop {
            let c = self.rng.random_range(-self.coeff..=self.coeff);
            if c != 0 {
                return c;
            }
        }
    }

    fn tuple(&mut self, r: usize) -> IndexTuple {
        IndexTuple::new((0..r).map(|_| self.rng.random_range(self.window.0..=self.window.1)).collect())
    }

    /// Integer coefficients in `[-coeff_bound, coeff_bound]`.
    pub(crate) fn vector(&mut self, s: &Session) -> TensorVector {
        self.draw(s.r(), |me| s.kind().from_int(me.nonzero_int()))
    }

    /// Generic vector whose coefficients are short Laurent polynomials.
    pub(crate) fn laurent_vector(&mut self, r: usize) -> TensorVector {
        self.draw(r, |me| {
            let terms: Vec<(i64, Rational)> = (0..me.rng.random_range(1..=2))
                .map(|_| (me.rng.random_range(-3..=3), Rational::from_int(me.nonzero_int())))
                .collect();
            ScalarKind::Generic.from_laurent(&LaurentPoly::from_terms(terms))
        })
    }

    fn draw(&mut self, r: usize, mut coeff: impl FnMut(&mut Self) -> crate::scalar::Scalar) -> TensorVector {
        loop {
            let k = self.rng.random_range(1..=self.support);
            let mut terms = Vec::with_capacity(k);
            for _ in 0..k {
                let idx = self.tuple(r);
                let c = coeff(self);
                terms.push((idx, c));
            }
            let v = TensorVector::from_terms(r, terms).expect("sampled tuples have length r");
            if !v.is_zero() {
                return v;
            }
        }
    }

    pub(crate) fn pool(&mut self, s: &Session, count: usize) -> Vec<TensorVector> {
        (0..count).map(|_| self.vector(s)).collect()
    }
}

/// All tuples in `[lo, hi]^r` satisfying `keep`, or `None` when there are
/// more than [`EXHAUSTIVE_LIMIT`].
pub(crate) fn window_tuples(r: usize, lo: i64, hi: i64, keep: impl Fn(&[i64]) -> bool) -> Option<Vec<IndexTuple>> {
    let width = (hi - lo + 1).max(0) as usize;
    let total = width.checked_pow(r as u32)?;
    // Filtering can shrink the set a lot; refuse only hopeless enumerations.
    if total > 64 * EXHAUSTIVE_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut cur = vec![lo; r];
    if width == 0 {
        return Some(out);
    }
    loop {
        if keep(&cur) {
            out.push(IndexTuple::new(cur.clone()));
            if out.len() > EXHAUSTIVE_LIMIT {
                return None;
            }
        }
        let mut pos = r;
        loop {
            if pos == 0 {
                return Some(out);
            }
            pos -= 1;
            if cur[pos] < hi {
                cur[pos] += 1;
                break;
            }
            cur[pos] = lo;
        }
    }
}

/// The exhaustive window `[1-2n, 2n]` for a session with `n` rows.
pub(crate) fn exhaustive_window(n: usize) -> (i64, i64) {
    let n = n as i64;
    (1 - 2 * n, 2 * n)
}

/// Basis vectors of the exhaustive window, when small enough.
pub(crate) fn window_basis(s: &Session) -> Vec<TensorVector> {
    let (lo, hi) = exhaustive_window(s.n());
    window_tuples(s.r(), lo, hi, |_| true)
        .map(|ts| ts.into_iter().map(|t| s.basis(t)).collect())
        .unwrap_or_default()
}

/// `trials` random vectors followed by the exhaustive window basis.
pub(crate) fn standard_inputs(s: &Session, cfg: &SuiteConfig, stream: u64) -> Vec<TensorVector> {
    let mut inputs = Sampler::new(cfg, stream).pool(s, cfg.trials);
    inputs.extend(window_basis(s));
    inputs
}
