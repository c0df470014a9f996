//! Degreewise and graded tensor products, Alexander–Whitney and
//! Eilenberg–Zilber.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::complex::{homology, induced_map, ChainComplex, ChainMap};
use super::module::{chain_complex, normalized, Normalization, SimplicialModule};
use crate::linalg::{Matrix, ScalarDomain};
use crate::{Error, Result};

/// `(A ⊗ B)_n = A_n ⊗ B_n` with diagonal operators; basis `(a, b)` is `a * dim B_n + b`.
pub struct TensorModule<A, B> {
    a: A,
    b: B,
}

impl<A: SimplicialModule, B: SimplicialModule> TensorModule<A, B> {
    pub fn new(a: A, b: B) -> Result<Self> {
        if a.truncation() != b.truncation() {
            return Err(Error::TruncationMismatch(a.truncation(), b.truncation()));
        }
        if a.domain() != b.domain() {
            return Err(Error::DimensionMismatch(format!("domains {} and {}", a.domain(), b.domain())));
        }
        Ok(TensorModule { a, b })
    }

    pub fn left(&self) -> &A {
        &self.a
    }

    pub fn right(&self) -> &B {
        &self.b
    }
}

impl<A: SimplicialModule, B: SimplicialModule> SimplicialModule for TensorModule<A, B> {
    fn domain(&self) -> ScalarDomain {
        self.a.domain()
    }
    fn truncation(&self) -> usize {
        self.a.truncation()
    }
    fn rank(&self, n: usize) -> usize {
        self.a.rank(n) * self.b.rank(n)
    }
    fn face(&self, n: usize, i: usize) -> Matrix {
        self.a.face(n, i).kron(&self.b.face(n, i))
    }
    fn degeneracy(&self, n: usize, j: usize) -> Matrix {
        self.a.degeneracy(n, j).kron(&self.b.degeneracy(n, j))
    }
    fn cyclic(&self, n: usize) -> Option<Matrix> {
        Some(self.a.cyclic(n)?.kron(&self.b.cyclic(n)?))
    }
    fn is_cyclic(&self) -> bool {
        self.a.is_cyclic() && self.b.is_cyclic()
    }
}

/// `⊕_(p+q=n) C_p ⊗ D_q` with `d = d ⊗ 1 + (-1)^p 1 ⊗ d`, up to the smaller
/// top degree. Blocks are ordered by increasing `p`.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    pub complex: ChainComplex,
    /// `(p, offset)` for every block of degree `n`, with `q = n - p`.
    pub blocks: Vec<Vec<(usize, usize)>>,
}

impl TensorComplex {
    pub fn new(c: &ChainComplex, d: &ChainComplex) -> Result<Self> {
        if c.lo() != 0 || d.lo() != 0 {
            return Err(Error::InvalidInput("tensor product needs complexes starting in degree 0".into()));
        }
        if c.domain() != d.domain() {
            return Err(Error::DimensionMismatch(format!("domains {} and {}", c.domain(), d.domain())));
        }
        let top = c.hi().min(d.hi()) as usize;
        let sizes = |n: usize| -> Vec<usize> { (0..=n).map(|p| c.rank(p as i64) * d.rank((n - p) as i64)).collect() };
        let mut blocks = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let mut off = 0;
            blocks.push(
                sizes(n)
                    .into_iter()
                    .enumerate()
                    .map(|(p, s)| {
                        let o = off;
                        off += s;
                        (p, o)
                    })
                    .collect(),
            );
        }
        let ranks: Vec<usize> = (0..=top).map(|n| sizes(n).iter().sum()).collect();
        let mut ds = Vec::new();
        for n in 1..=top {
            let mut pieces = Vec::new();
            for p in 0..=n {
                let q = n - p;
                let (cp, dq) = (c.rank(p as i64), d.rank(q as i64));
                if p >= 1 {
                    pieces.push((p - 1, p, c.boundary(p as i64).kron(&Matrix::identity(dq))));
                }
                if q >= 1 {
                    let m = Matrix::identity(cp).kron(&d.boundary(q as i64));
                    pieces.push((p, p, if p % 2 == 0 { m } else { -&m }));
                }
            }
            let (rs, cs) = (sizes(n - 1), sizes(n));
            ds.push(Matrix::from_blocks(&rs, &cs, pieces.iter().map(|(i, j, m)| (*i, *j, m))));
        }
        let complex = ChainComplex::from_boundaries(c.domain(), 0, ranks, ds)?;
        Ok(TensorComplex { complex, blocks })
    }

    fn block_sizes(&self, n: usize) -> Vec<usize> {
        let b = &self.blocks[n];
        let total = self.complex.rank(n as i64);
        (0..b.len()).map(|k| if k + 1 < b.len() { b[k + 1].1 - b[k].1 } else { total - b[k].1 }).collect()
    }
}

fn product(ms: impl IntoIterator<Item = Matrix>, n: usize) -> Matrix {
    ms.into_iter().fold(Matrix::identity(n), |acc, m| &m * &acc)
}

/// Front face `A_n -> A_p`: the last face applied `n - p` times.
fn front<A: SimplicialModule>(a: &A, n: usize, p: usize) -> Matrix {
    product((p + 1..=n).rev().map(|k| a.face(k, k)), a.rank(n))
}

/// Back face `B_n -> B_q`: `d_0` applied `n - q` times.
fn back<B: SimplicialModule>(b: &B, n: usize, q: usize) -> Matrix {
    product((q + 1..=n).rev().map(|k| b.face(k, 0)), b.rank(n))
}

/// Shuffles of `{0..p+q-1}` into increasing `μ` (size `p`) and `ν` (size `q`), with signs.
fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    let n = p + q;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let mu: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        let nu: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 0).collect();
        let inversions: usize = mu.iter().map(|m| nu.iter().filter(|v| *v < m).count()).sum();
        out.push((mu, nu, inversions % 2 == 1));
    }
    out
}

/// `s_(ν_k) .. s_(ν_1)` starting in degree `from`.
fn degeneracies<A: SimplicialModule>(a: &A, from: usize, word: &[usize]) -> Matrix {
    product(word.iter().enumerate().map(|(k, &j)| a.degeneracy(from + k, j)), a.rank(from))
}

/// `AW: C(A ⊗ B) -> C(A) ⊗ C(B)`, `a ⊗ b ↦ Σ front_p a ⊗ back_q b`.
pub fn alexander_whitney<A: SimplicialModule, B: SimplicialModule>(
    t: &TensorModule<A, B>,
    diag: &ChainComplex,
    tc: &TensorComplex,
) -> Result<ChainMap> {
    let (a, b) = (&t.a, &t.b);
    let mut maps = BTreeMap::new();
    for n in 0..tc.blocks.len() {
        let pieces: Vec<(usize, usize, Matrix)> = (0..=n).map(|p| (p, 0, front(a, n, p).kron(&back(b, n, n - p)))).collect();
        let m = Matrix::from_blocks(&tc.block_sizes(n), &[t.rank(n)], pieces.iter().map(|(i, j, m)| (*i, *j, m)));
        maps.insert(n as i64, m);
    }
    ChainMap::new(diag, &tc.complex, 0, maps, false)
}

/// `EZ: C(A) ⊗ C(B) -> C(A ⊗ B)`, the signed shuffle sum
/// `a ⊗ b ↦ Σ ± s_ν a ⊗ s_μ b`.
pub fn eilenberg_zilber<A: SimplicialModule, B: SimplicialModule>(
    t: &TensorModule<A, B>,
    tc: &TensorComplex,
    diag: &ChainComplex,
) -> Result<ChainMap> {
    let (a, b) = (&t.a, &t.b);
    let mut maps = BTreeMap::new();
    for n in 0..tc.blocks.len() {
        let mut pieces = Vec::new();
        for p in 0..=n {
            let q = n - p;
            let mut acc = Matrix::zeros(t.rank(n), a.rank(p) * b.rank(q));
            for (mu, nu, odd) in shuffles(p, q) {
                let term = degeneracies(a, p, &nu).kron(&degeneracies(b, q, &mu));
                acc = if odd { &acc - &term } else { &acc + &term };
            }
            pieces.push((0, p, acc));
        }
        let m = Matrix::from_blocks(&[t.rank(n)], &tc.block_sizes(n), pieces.iter().map(|(i, j, m)| (*i, *j, m)));
        maps.insert(n as i64, m);
    }
    ChainMap::new(&tc.complex, diag, 0, maps, false)
}

/// Results of comparing the two sides of the Eilenberg–Zilber theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwEzReport {
    pub top: usize,
    /// `AW ∘ EZ = 1` on normalized chains, per degree.
    pub aw_ez_identity: Vec<bool>,
    /// `EZ ∘ AW` induces the identity on homology, per degree below the top.
    pub ez_aw_homology_identity: Vec<bool>,
}

impl AwEzReport {
    pub fn passed(&self) -> bool {
        self.aw_ez_identity.iter().chain(&self.ez_aw_homology_identity).all(|&b| b)
    }
}

/// Unnormalized AW and EZ are checked to be chain maps; their normalized
/// versions are compared with the identity.
pub fn aw_ez_report<A: SimplicialModule, B: SimplicialModule>(a: A, b: B) -> Result<AwEzReport> {
    let dom = a.domain();
    let t = TensorModule::new(a, b)?;
    let diag = chain_complex(&t)?;
    let tc = TensorComplex::new(&chain_complex(&t.a)?, &chain_complex(&t.b)?)?;
    let aw = alexander_whitney(&t, &diag, &tc)?;
    let ez = eilenberg_zilber(&t, &tc, &diag)?;

    let na = normalized(&t.a)?;
    let nb = normalized(&t.b)?;
    let nd = normalized(&t)?;
    let ntc = TensorComplex::new(&na.complex, &nb.complex)?;
    let top = t.truncation();
    let tensor_of = |n: usize, pick: fn(&Normalization) -> &Vec<Matrix>, inverse: bool| -> Matrix {
        let pieces: Vec<(usize, usize, Matrix)> =
            (0..=n).map(|p| (p, p, pick(&na)[p].kron(&pick(&nb)[n - p]))).collect();
        let (rs, cs) = if inverse { (tc.block_sizes(n), ntc.block_sizes(n)) } else { (ntc.block_sizes(n), tc.block_sizes(n)) };
        Matrix::from_blocks(&rs, &cs, pieces.iter().map(|(i, j, m)| (*i, *j, m)))
    };
    let mut aw_n = BTreeMap::new();
    let mut ez_n = BTreeMap::new();
    let mut aw_ez_identity = Vec::new();
    for n in 0..=top {
        let pp = tensor_of(n, |x| &x.projection, false);
        let ss = tensor_of(n, |x| &x.section, true);
        let awn = &(&pp * aw.component(n as i64).unwrap()) * &nd.section[n];
        let ezn = &(&nd.projection[n] * ez.component(n as i64).unwrap()) * &ss;
        aw_ez_identity.push((&awn * &ezn).is_identity_in(&dom));
        aw_n.insert(n as i64, awn);
        ez_n.insert(n as i64, ezn);
    }
    let aw_n = ChainMap::new(&nd.complex, &ntc.complex, 0, aw_n, false)?;
    let ez_n = ChainMap::new(&ntc.complex, &nd.complex, 0, ez_n, false)?;
    let round = ez_n.compose(&aw_n);
    let mut ez_aw_homology_identity = Vec::new();
    if dom.is_field() {
        let h = homology(&nd.complex, 0..=top as i64 - 1)?;
        for n in 0..top as i64 {
            ez_aw_homology_identity.push(induced_map(&round, &nd.complex, &h, &nd.complex, &h, n)?.is_identity_in(&dom));
        }
    }
    Ok(AwEzReport { top, aw_ez_identity, ez_aw_homology_identity })
}
