//! Bicomplexes and their total complexes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::complex::ChainComplex;
use crate::linalg::{Matrix, ScalarDomain, SparseVec};
use crate::{Error, Result};

/// Direction of the vertical differential.
///
/// `Homological`: both lower their index, total degree `p + q`, `d = dh + dv`.
/// `Mixed`: `dv` raises `q`, total degree `p - q`, `d = dh - dv`.
/// Either way `dh dv + dv dh = 0` is required, otherwise `d² ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Homological,
    Mixed,
}

pub type Position = (i64, i64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomplex {
    domain: ScalarDomain,
    variance: Variance,
    ranks: BTreeMap<Position, usize>,
    horizontal: BTreeMap<Position, Matrix>,
    vertical: BTreeMap<Position, Matrix>,
}

impl Bicomplex {
    pub fn new(domain: ScalarDomain, variance: Variance) -> Self {
        Bicomplex { domain, variance, ranks: BTreeMap::new(), horizontal: BTreeMap::new(), vertical: BTreeMap::new() }
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn set_rank(&mut self, at: Position, rank: usize) {
        self.ranks.insert(at, rank);
    }

    pub fn rank(&self, at: Position) -> usize {
        self.ranks.get(&at).copied().unwrap_or(0)
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.ranks.keys().copied()
    }

    /// `dh` with source `at`, landing in `(p - 1, q)`.
    pub fn set_horizontal(&mut self, at: Position, m: Matrix) {
        self.horizontal.insert(at, m);
    }

    /// `dv` with source `at`, landing in `(p, q ∓ 1)` according to the variance.
    pub fn set_vertical(&mut self, at: Position, m: Matrix) {
        self.vertical.insert(at, m);
    }

    pub fn vertical_target(&self, (p, q): Position) -> Position {
        match self.variance {
            Variance::Homological => (p, q - 1),
            Variance::Mixed => (p, q + 1),
        }
    }

    pub fn total_degree(&self, (p, q): Position) -> i64 {
        match self.variance {
            Variance::Homological => p + q,
            Variance::Mixed => p - q,
        }
    }

    pub fn horizontal(&self, at: Position) -> Matrix {
        let (p, q) = at;
        self.horizontal.get(&at).cloned().unwrap_or_else(|| Matrix::zeros(self.rank((p - 1, q)), self.rank(at)))
    }

    pub fn vertical(&self, at: Position) -> Matrix {
        self.vertical.get(&at).cloned().unwrap_or_else(|| Matrix::zeros(self.rank(self.vertical_target(at)), self.rank(at)))
    }

    /// Shapes, `dh² = 0`, `dv² = 0` and the sign rule.
    pub fn validate(&self) -> Result<()> {
        let dom = &self.domain;
        for (&(p, q), m) in &self.horizontal {
            if m.shape() != (self.rank((p - 1, q)), self.rank((p, q))) {
                return Err(Error::DimensionMismatch(format!("horizontal map at ({p}, {q})")));
            }
        }
        for (&at, m) in &self.vertical {
            if m.shape() != (self.rank(self.vertical_target(at)), self.rank(at)) {
                return Err(Error::DimensionMismatch(format!("vertical map at {at:?}")));
            }
        }
        for &(p, q) in self.ranks.keys() {
            let at = (p, q);
            if !(&self.horizontal((p - 1, q)) * &self.horizontal(at)).is_zero_in(dom) {
                return Err(Error::NotAComplex(self.total_degree(at)));
            }
            let vt = self.vertical_target(at);
            if !(&self.vertical(vt) * &self.vertical(at)).is_zero_in(dom) {
                return Err(Error::NotAComplex(self.total_degree(at)));
            }
            let hv = &self.vertical((p - 1, q)) * &self.horizontal(at);
            let vh = &self.horizontal(vt) * &self.vertical(at);
            if !(&hv + &vh).is_zero_in(dom) {
                return Err(Error::SignCheckFailed(p, q));
            }
        }
        Ok(())
    }
}

/// Block of a total complex: position, offset and size in its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub at: Position,
    pub offset: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalComplex {
    pub complex: ChainComplex,
    blocks: BTreeMap<i64, Vec<Block>>,
}

impl TotalComplex {
    /// Blocks of degree `n`, ordered by increasing `p`.
    pub fn blocks(&self, n: i64) -> &[Block] {
        self.blocks.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn block(&self, n: i64, at: Position) -> Option<Block> {
        self.blocks(n).iter().copied().find(|b| b.at == at)
    }

    /// The `at` component of a vector in degree `n`.
    pub fn component(&self, n: i64, at: Position, v: &[(usize, crate::Rational)]) -> SparseVec {
        match self.block(n, at) {
            Some(b) => v.iter().filter(|(i, _)| *i >= b.offset && *i < b.offset + b.size).map(|(i, x)| (i - b.offset, x.clone())).collect(),
            None => Vec::new(),
        }
    }

    /// Inclusion of the `at` summand into degree `n`.
    pub fn inclusion(&self, n: i64, at: Position) -> Matrix {
        let total = self.complex.rank(n);
        match self.block(n, at) {
            Some(b) => Matrix::from_columns(total, (0..b.size).map(|k| alloc::vec![(b.offset + k, crate::Rational::ONE)]).collect()),
            None => Matrix::zeros(total, 0),
        }
    }

    /// Projection of degree `n` onto the `at` summand.
    pub fn projection(&self, n: i64, at: Position) -> Matrix {
        self.inclusion(n, at).transpose()
    }
}

/// `Tot` with the sign conventions of the variance.
pub fn total_complex(b: &Bicomplex) -> Result<TotalComplex> {
    b.validate()?;
    let mut blocks: BTreeMap<i64, Vec<Block>> = BTreeMap::new();
    for at in b.positions() {
        blocks.entry(b.total_degree(at)).or_default().push(Block { at, offset: 0, size: b.rank(at) });
    }
    let Some((&lo, _)) = blocks.first_key_value() else {
        return Err(Error::InvalidInput("empty bicomplex".into()));
    };
    let hi = *blocks.last_key_value().unwrap().0;
    for n in lo..=hi {
        let list = blocks.entry(n).or_default();
        list.sort_by_key(|blk| blk.at.0);
        let mut off = 0;
        for blk in list.iter_mut() {
            blk.offset = off;
            off += blk.size;
        }
    }
    let rank_of = |n: i64| blocks.get(&n).map_or(0, |l| l.iter().map(|blk| blk.size).sum());
    let ranks: Vec<usize> = (lo..=hi).map(rank_of).collect();
    let mut ds = Vec::new();
    for n in lo + 1..=hi {
        let mut trip = Vec::new();
        let find = |at: Position| blocks[&(n - 1)].iter().find(|blk| blk.at == at).copied();
        for src in &blocks[&n] {
            let (p, q) = src.at;
            let h = b.horizontal(src.at);
            if let Some(t) = find((p - 1, q)) {
                trip.extend(h.triplets().map(|(r, c, v)| (t.offset + r, src.offset + c, v.clone())));
            }
            let v = b.vertical(src.at);
            if let Some(t) = find(b.vertical_target(src.at)) {
                let neg = b.variance == Variance::Mixed;
                trip.extend(v.triplets().map(|(r, c, x)| (t.offset + r, src.offset + c, if neg { -x } else { x.clone() })));
            }
        }
        ds.push(Matrix::from_triplets(rank_of(n - 1), rank_of(n), trip));
    }
    let complex = ChainComplex::from_boundaries(b.domain, lo, ranks, ds)?;
    Ok(TotalComplex { complex, blocks })
}
