//! The simplex category: nondecreasing maps `[m] -> [n]`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A nondecreasing map `[source] -> [target]`, stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    target: usize,
    images: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(target: usize, images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidInput("a monotone map needs a nonempty source".into()));
        }
        if images.windows(2).any(|w| w[0] > w[1]) || images.iter().any(|&v| v > target) {
            return Err(Error::InvalidInput(format!("{images:?} is not a monotone map into [{target}]")));
        }
        Ok(MonotoneMap { target, images })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap { target: n, images: (0..=n).collect() }
    }

    /// `δ_i: [n-1] -> [n]`, skipping `i`.
    pub fn face(i: usize, n: usize) -> Self {
        assert!(n >= 1 && i <= n, "δ_{i} is not defined into [{n}]");
        MonotoneMap { target: n, images: (0..n).map(|x| if x < i { x } else { x + 1 }).collect() }
    }

    /// `σ_j: [n+1] -> [n]`, hitting `j` twice.
    pub fn degeneracy(j: usize, n: usize) -> Self {
        assert!(j <= n, "σ_{j} is not defined onto [{n}]");
        MonotoneMap { target: n, images: (0..=n + 1).map(|x| if x <= j { x } else { x - 1 }).collect() }
    }

    pub fn source(&self) -> usize {
        self.images.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source() && self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.images[0] == 0 && *self.images.last().unwrap() == self.target && self.images.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Every monotone map `[m] -> [n]`, in lexicographic order of images.
    pub fn all(m: usize, n: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m + 1);
        fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
            if cur.len() == m + 1 {
                out.push(MonotoneMap { target: n, images: cur.clone() });
                return;
            }
            for v in lo..=n {
                cur.push(v);
                rec(m, n, v, cur, out);
                cur.pop();
            }
        }
        rec(m, n, 0, &mut cur, &mut out);
        out
    }

    /// Canonical epi-mono factorization as generator words in application
    /// order: first the degeneracies (merged values, strictly decreasing),
    /// then the faces (omitted values, strictly increasing).
    pub fn factorize(&self) -> (Vec<usize>, Vec<usize>) {
        let sigma = (0..self.source()).rev().filter(|&j| self.images[j] == self.images[j + 1]).collect();
        let mut delta = Vec::new();
        let mut k = 0;
        for v in 0..=self.target {
            while k < self.images.len() && self.images[k] < v {
                k += 1;
            }
            if k == self.images.len() || self.images[k] != v {
                delta.push(v);
            }
        }
        (sigma, delta)
    }

    /// Rebuild a map from words in application order, starting at `[source]`.
    pub fn from_words(source: usize, sigma: &[usize], delta: &[usize]) -> Result<Self> {
        let mut f = MonotoneMap::identity(source);
        for (pos, &j) in sigma.iter().enumerate() {
            let n = f.target.checked_sub(1).filter(|&n| j <= n).ok_or(Error::NonComposableWord(pos))?;
            f = compose(&MonotoneMap::degeneracy(j, n), &f)?;
        }
        for (pos, &i) in delta.iter().enumerate() {
            let n = f.target + 1;
            if i > n {
                return Err(Error::NonComposableWord(sigma.len() + pos));
            }
            f = compose(&MonotoneMap::face(i, n), &f)?;
        }
        Ok(f)
    }
}

/// `f ∘ g`
pub fn compose(f: &MonotoneMap, g: &MonotoneMap) -> Result<MonotoneMap> {
    if g.target != f.source() {
        return Err(Error::ObjectMismatch(format!("[{}] -> [{}] after [{}] -> [{}]", f.source(), f.target, g.source(), g.target)));
    }
    Ok(MonotoneMap { target: f.target, images: g.images.iter().map(|&x| f.images[x]).collect() })
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}] {:?}", self.source(), self.target, self.images)
    }
}
