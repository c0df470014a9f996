//! Dense reference implementations for cross-checking the library.
//!
//! Nothing here calls into `cychom_core` except the conversion helpers at
//! the bottom. Elimination is textbook Gaussian elimination on dense rows,
//! the Smith form is the classic gcd-pivot loop, and every complex is
//! written straight from its defining formulas on explicit tuples.

#![allow(dead_code)]

pub mod cyclic_model;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-major integer matrix.
pub type Dense = Vec<Vec<i64>>;

pub fn zeros(rows: usize, cols: usize) -> Dense {
    vec![vec![0; cols]; rows]
}

pub fn cols(m: &Dense) -> usize {
    m.first().map_or(0, Vec::len)
}

pub fn transpose(m: &Dense) -> Dense {
    let (r, c) = (m.len(), cols(m));
    (0..c).map(|j| (0..r).map(|i| m[i][j]).collect()).collect()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let (r, k, c) = (a.len(), b.len(), cols(b));
    let mut out = zeros(r, c);
    for i in 0..r {
        for t in 0..k {
            if a[i][t] != 0 {
                for j in 0..c {
                    out[i][j] += a[i][t] * b[t][j];
                }
            }
        }
    }
    out
}

pub fn hstack(a: &Dense, b: &Dense) -> Dense {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.iter().chain(y).copied().collect()).collect()
}

pub fn rank_q(m: &Dense) -> usize {
    let mut rows: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let ncols = cols(m);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip();
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in c..ncols {
                    let s = &rows[rank][k] * &f;
                    rows[r][k] -= s;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn rank_mod_p(m: &Dense, p: u64) -> usize {
    let pi = p as i64;
    let mut rows: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(pi) as u64).collect()).collect();
    let ncols = cols(m);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in c..ncols {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nonzero invariant factors, each dividing the next.
pub fn invariant_factors(m: &Dense) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let (nr, nc) = (a.len(), cols(m));
    let mut out = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..nr {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                for j in t..nc {
                    let s = &a[t][j] * &q;
                    a[i][j] -= s;
                }
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..nc {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                for i in t..nr {
                    let s = &a[i][t] * &q;
                    a[i][j] -= s;
                }
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            continue;
        }
        // the pivot has to divide the rest of the block
        let bad = (t + 1..nr).flat_map(|i| (t + 1..nc).map(move |j| (i, j))).find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
        if let Some((i, _)) = bad {
            for j in t..nc {
                let s = a[i][j].clone();
                a[t][j] += s;
            }
            continue;
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// A chain complex as dense integer boundaries, `d[n]: C_n -> C_(n-1)`.
#[derive(Clone, Debug)]
pub struct DenseComplex {
    pub ranks: Vec<usize>,
    /// `d[0]` is the zero map out of degree 0.
    pub d: Vec<Dense>,
}

impl DenseComplex {
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    fn rank_d(&self, n: usize, rank: &dyn Fn(&Dense) -> usize) -> usize {
        if n == 0 || n > self.top() || self.ranks[n] == 0 || self.ranks[n - 1] == 0 {
            0
        } else {
            rank(&self.d[n])
        }
    }

    /// Betti numbers in degrees `0..top` (the top degree has no incoming map).
    pub fn betti_with(&self, rank: &dyn Fn(&Dense) -> usize) -> Vec<usize> {
        (0..self.top()).map(|n| self.ranks[n] - self.rank_d(n, rank) - self.rank_d(n + 1, rank)).collect()
    }

    pub fn betti_q(&self) -> Vec<usize> {
        self.betti_with(&rank_q)
    }

    pub fn betti_mod(&self, p: u64) -> Vec<usize> {
        self.betti_with(&move |m| rank_mod_p(m, p))
    }

    /// `(free rank, torsion)` of `H_n(C; Z)` for `n < top`.
    pub fn integral(&self) -> Vec<(usize, Vec<BigInt>)> {
        let betti = self.betti_q();
        (0..self.top())
            .map(|n| {
                let torsion = if self.ranks[n] == 0 || self.ranks[n + 1] == 0 {
                    vec![]
                } else {
                    invariant_factors(&self.d[n + 1]).into_iter().filter(|x| !x.is_one()).collect()
                };
                (betti[n], torsion)
            })
            .collect()
    }

    pub fn squares_to_zero(&self) -> bool {
        (2..=self.top()).all(|n| mul(&self.d[n - 1], &self.d[n]).iter().flatten().all(|&x| x == 0))
    }
}

/// Boundaries `Σ (-1)^i d_i` of a simplicial set given by enumerated
/// elements and a face function.
pub fn simplicial_chains<T: Ord + Clone>(
    elements: &[Vec<T>],
    face: impl Fn(usize, usize, &T) -> T,
) -> DenseComplex {
    let ranks: Vec<usize> = elements.iter().map(Vec::len).collect();
    let mut d = vec![zeros(0, ranks[0])];
    for n in 1..elements.len() {
        let mut m = zeros(ranks[n - 1], ranks[n]);
        for (c, x) in elements[n].iter().enumerate() {
            for i in 0..=n {
                let y = face(n, i, x);
                let r = elements[n - 1].binary_search(&y).expect("face lands in the set");
                m[r][c] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        d.push(m);
    }
    DenseComplex { ranks, d }
}

/// `S¹ = Δ[1]/∂Δ[1]`: nondecreasing 0/1 words of length `n+1`, with the
/// all-ones word identified with the all-zeros word.
pub fn circle_words(top: usize) -> Vec<Vec<Vec<u8>>> {
    (0..=top)
        .map(|n| {
            let mut v: Vec<Vec<u8>> = (1..=n + 1).map(|zeros| (0..=n).map(|k| u8::from(k >= zeros)).collect()).collect();
            v.sort();
            v
        })
        .collect()
}

pub fn circle_canon(mut w: Vec<u8>) -> Vec<u8> {
    if w.iter().all(|&b| b == 1) {
        w.iter_mut().for_each(|b| *b = 0);
    }
    w
}

pub fn circle_face(i: usize, w: &[u8]) -> Vec<u8> {
    let mut v = w.to_vec();
    v.remove(i);
    circle_canon(v)
}

pub fn circle_degeneracy(j: usize, w: &[u8]) -> Vec<u8> {
    let mut v = w.to_vec();
    v.insert(j, w[j]);
    v
}

pub fn circle_complex(top: usize) -> DenseComplex {
    simplicial_chains(&circle_words(top), |_, i, w| circle_face(i, w))
}

/// `B·(Z/m)` straight from the bar formulas.
pub fn bar_complex(m: usize, top: usize) -> DenseComplex {
    let elements: Vec<Vec<Vec<usize>>> = (0..=top).map(|n| tuples(m, n)).collect();
    simplicial_chains(&elements, |n, i, g| {
        let mut h = g.clone();
        if i == 0 {
            h.remove(0);
        } else if i == n {
            h.pop();
        } else {
            h[i - 1] = (g[i - 1] + g[i]) % m;
            h.remove(i);
        }
        h
    })
}

/// All tuples of length `len` over `0..base`, lexicographically.
pub fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|t| (0..base).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

/// A unital algebra by integer structure constants: `mul[i][j][k]` is the
/// coefficient of `e_k` in `e_i e_j`; `e_0` is the unit.
#[derive(Clone, Debug)]
pub struct Alg {
    pub dim: usize,
    pub mul: Vec<Vec<Vec<i64>>>,
    pub commutative: bool,
}

impl Alg {
    fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Vec<i64>) -> Self {
        let mul: Vec<Vec<Vec<i64>>> = (0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect();
        let commutative = (0..dim).all(|i| (0..dim).all(|j| mul[i][j] == mul[j][i]));
        Alg { dim, mul, commutative }
    }

    fn basis(dim: usize, k: usize) -> Vec<i64> {
        (0..dim).map(|t| i64::from(t == k)).collect()
    }

    pub fn unit() -> Self {
        Alg::from_fn(1, |_, _| vec![1])
    }

    /// `Q[x]/(x^k)` on `1, x, .., x^(k-1)`.
    pub fn truncated(k: usize) -> Self {
        Alg::from_fn(k, |i, j| if i + j < k { Alg::basis(k, i + j) } else { vec![0; k] })
    }

    /// `Q^k` with `e_0 = 1` and `e_i` (`i ≥ 1`) the idempotents of the
    /// last `k - 1` factors, so the first factor's idempotent is
    /// `e_0 - e_1 - .. - e_(k-1)`.
    pub fn product_field(k: usize) -> Self {
        Alg::from_fn(k, |i, j| match (i, j) {
            (0, _) => Alg::basis(k, j),
            (_, 0) => Alg::basis(k, i),
            (i, j) if i == j => Alg::basis(k, i),
            _ => vec![0; k],
        })
    }

    /// `Q[Z/m]` on the group elements.
    pub fn cyclic_group(m: usize) -> Self {
        Alg::from_fn(m, |i, j| Alg::basis(m, (i + j) % m))
    }

    /// Group algebra of an arbitrary multiplication table with identity 0.
    pub fn group(table: &[Vec<usize>]) -> Self {
        let m = table.len();
        Alg::from_fn(m, |i, j| Alg::basis(m, table[i][j]))
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        let prod = |x: &[i64], y: &[i64]| -> Vec<i64> {
            let mut out = vec![0; d];
            for i in 0..d {
                for j in 0..d {
                    if x[i] != 0 && y[j] != 0 {
                        for k in 0..d {
                            out[k] += x[i] * y[j] * self.mul[i][j][k];
                        }
                    }
                }
            }
            out
        };
        (0..d).all(|a| {
            (0..d).all(|b| {
                (0..d).all(|c| {
                    let ea = Alg::basis(d, a);
                    let eb = Alg::basis(d, b);
                    let ec = Alg::basis(d, c);
                    prod(&prod(&ea, &eb), &ec) == prod(&ea, &prod(&eb, &ec))
                })
            })
        })
    }

    pub fn index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.dim + x)
    }

    pub fn tensor_rank(&self, n: usize) -> usize {
        self.dim.pow(n as u32 + 1)
    }

    /// `d_i: A^(n+1) -> A^n`.
    pub fn face(&self, n: usize, i: usize) -> Dense {
        let mut out = zeros(self.tensor_rank(n - 1), self.tensor_rank(n));
        for (c, t) in tuples(self.dim, n + 1).iter().enumerate() {
            let (a, b, rest): (usize, usize, Vec<usize>) = if i < n {
                (t[i], t[i + 1], t.clone())
            } else {
                (t[n], t[0], t.clone())
            };
            for (k, &coef) in self.mul[a][b].iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                let mut s = rest.clone();
                if i < n {
                    s[i] = k;
                    s.remove(i + 1);
                } else {
                    s[0] = k;
                    s.pop();
                }
                out[self.index(&s)][c] += coef;
            }
        }
        out
    }

    pub fn hochschild_boundary(&self, n: usize) -> Dense {
        let mut b = zeros(self.tensor_rank(n - 1), self.tensor_rank(n));
        for i in 0..=n {
            let f = self.face(n, i);
            let s = if i % 2 == 0 { 1 } else { -1 };
            for (r, row) in f.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    b[r][c] += s * x;
                }
            }
        }
        b
    }

    /// Unnormalized Hochschild complex in degrees `0..=top`.
    pub fn hochschild(&self, top: usize) -> DenseComplex {
        let ranks: Vec<usize> = (0..=top).map(|n| self.tensor_rank(n)).collect();
        let mut d = vec![zeros(0, ranks[0])];
        d.extend((1..=top).map(|n| self.hochschild_boundary(n)));
        DenseComplex { ranks, d }
    }

    /// `t_n(a_0 ⊗ .. ⊗ a_n) = (-1)^n a_n ⊗ a_0 ⊗ .. ⊗ a_(n-1)`.
    pub fn signed_rotation(&self, n: usize) -> Dense {
        let r = self.tensor_rank(n);
        let mut out = zeros(r, r);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for (c, t) in tuples(self.dim, n + 1).iter().enumerate() {
            let mut s = vec![t[n]];
            s.extend_from_slice(&t[..n]);
            out[self.index(&s)][c] = sign;
        }
        out
    }

    /// `HC_n` for `n < top` over `Q` from Connes' quotient complex
    /// `C_n / (1 - t)`, using only ranks: the image of `b` in the quotient
    /// has rank `rank[b | 1-t] - rank[1-t]`.
    pub fn connes_hc(&self, top: usize) -> Vec<usize> {
        let one_minus_t = |n: usize| -> Dense {
            let mut m = self.signed_rotation(n);
            for (r, row) in m.iter_mut().enumerate() {
                for (c, x) in row.iter_mut().enumerate() {
                    *x = i64::from(r == c) - *x;
                }
            }
            m
        };
        let rk_d: Vec<usize> = (0..=top).map(|n| rank_q(&one_minus_t(n))).collect();
        let quotient_dim = |n: usize| self.tensor_rank(n) - rk_d[n];
        let rank_bbar = |n: usize| -> usize {
            if n == 0 || n > top {
                0
            } else {
                rank_q(&hstack(&self.hochschild_boundary(n), &one_minus_t(n - 1))) - rk_d[n - 1]
            }
        };
        (0..top).map(|n| quotient_dim(n) - rank_bbar(n) - rank_bbar(n + 1)).collect()
    }

    /// `dim Ωⁿ` for commutative `A`, by presenting `Ωⁿ` as the quotient of
    /// `A ⊗ A^(⊗n)` (the symbols `a_0 da_1 .. da_n`) by the Leibniz rule in
    /// every slot and antisymmetry of adjacent slots.
    pub fn omega_dim(&self, n: usize) -> usize {
        assert!(self.commutative);
        let d = self.dim;
        let total = self.tensor_rank(n);
        let mut relations: Vec<Vec<i64>> = Vec::new();
        for t in tuples(d, n + 1) {
            for k in 1..=n {
                // a_0 ..d(b c).. = a_0 b ..dc.. + a_0 c ..db..  for b = e_(t[k]), c = e_j
                for j in 0..d {
                    let mut rel = vec![0i64; total];
                    let b = t[k];
                    for (bc, &coef) in self.mul[b][j].iter().enumerate() {
                        if coef != 0 {
                            let mut s = t.clone();
                            s[k] = bc;
                            rel[self.index(&s)] += coef;
                        }
                    }
                    for (x, y) in [(b, j), (j, b)] {
                        // coefficient a_0 * x, differential slot gets y
                        for (a0x, &coef) in self.mul[t[0]][x].iter().enumerate() {
                            if coef != 0 {
                                let mut s = t.clone();
                                s[0] = a0x;
                                s[k] = y;
                                rel[self.index(&s)] -= coef;
                            }
                        }
                    }
                    relations.push(rel);
                }
                if k < n {
                    let mut rel = vec![0i64; total];
                    rel[self.index(&t)] += 1;
                    let mut s = t.clone();
                    s.swap(k, k + 1);
                    rel[self.index(&s)] += 1;
                    relations.push(rel);
                }
            }
        }
        if relations.is_empty() {
            return total;
        }
        total - rank_q(&relations)
    }
}

/// Integer matrix of a library matrix; panics on non-integer entries.
pub fn dense_of(m: &cychom_core::Matrix) -> Dense {
    m.to_dense().iter().map(|r| r.iter().map(|x| x.to_i64().expect("integral entry")).collect()).collect()
}

pub fn matrix_of(m: &Dense, cols: usize) -> cychom_core::Matrix {
    if m.is_empty() {
        return cychom_core::Matrix::zeros(0, cols);
    }
    cychom_core::Matrix::from_rows(m)
}

/// The same structure constants as a library algebra, basis order kept.
pub fn core_algebra(a: &Alg, dom: cychom_core::ScalarDomain) -> cychom_core::hochschild::FiniteAlgebra {
    use cychom_core::Rational;
    let table = a
        .mul
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, Rational::from_int(c))).collect())
                .collect()
        })
        .collect();
    let labels = (0..a.dim).map(|k| format!("e{k}")).collect();
    cychom_core::hochschild::FiniteAlgebra::new("oracle", labels, table, vec![(0, Rational::ONE)], dom).expect("valid algebra")
}
