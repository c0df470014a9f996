//! Smith normal form over the integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::Matrix;
use super::rational::Rational;
use crate::{Error, Result};

/// `left * a * right = diag(d)` with `left`, `right` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Length `min(rows, cols)`, nonnegative, each entry dividing the next.
    pub d: Vec<BigInt>,
    pub rank: usize,
    pub left: Matrix,
    pub right: Matrix,
}

impl SmithForm {
    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.d.iter().filter(|x| **x > BigInt::from(1)).cloned().collect()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    left: Vec<Vec<BigInt>>,
    right: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.left.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.right.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.left] {
            let (src, dst) = if i < j {
                let (lo, hi) = m.split_at_mut(j);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = m.split_at_mut(i);
                (&lo[j], &mut hi[0])
            };
            for (d, s) in dst.iter_mut().zip(src) {
                if !s.is_zero() {
                    *d -= q * s;
                }
            }
        }
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        for row in self.a.iter_mut().chain(self.right.iter_mut()) {
            if !row[j].is_zero() {
                let t = q * &row[j];
                row[i] -= t;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.left] {
            for x in m[i].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

fn to_matrix(m: &[Vec<BigInt>], rows: usize, cols: usize) -> Matrix {
    Matrix::from_triplets(
        rows,
        cols,
        m.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(j, x)| (i, j, Rational::from_bigint(x.clone())))
        }),
    )
}

pub fn smith_normal_form(m: &Matrix) -> Result<SmithForm> {
    let (rows, cols) = m.shape();
    let mut a = vec![vec![BigInt::zero(); cols]; rows];
    for (r, c, v) in m.triplets() {
        if !v.is_integer() {
            return Err(Error::NotIntegral);
        }
        a[r][c] = v.numer();
    }
    let mut w = Work { a, left: identity(rows), right: identity(cols) };
    let k = rows.min(cols);

    for t in 0..k {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &w.a[i][j];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_sub(i, t, &q);
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_sub(j, t, &q);
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block; otherwise fold the
            // offending row in and reduce again
            let p = w.a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => w.row_sub(t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }

    let d: Vec<BigInt> = (0..k).map(|i| w.a[i][i].clone()).collect();
    let rank = d.iter().filter(|x| !x.is_zero()).count();
    Ok(SmithForm { d, rank, left: to_matrix(&w.left, rows, rows), right: to_matrix(&w.right, cols, cols) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &Matrix) -> SmithForm {
        let s = smith_normal_form(m).unwrap();
        let prod = &(&s.left * m) * &s.right;
        let mut diag = Matrix::zeros(m.rows(), m.cols());
        for (i, x) in s.d.iter().enumerate() {
            diag = &diag + &Matrix::from_triplets(m.rows(), m.cols(), [(i, i, Rational::from_bigint(x.clone()))]);
        }
        assert_eq!(prod, diag);
        s
    }

    #[test]
    fn small_cases() {
        assert_eq!(check(&Matrix::identity(2)).d, ints(&[1, 1]));
        assert_eq!(check(&Matrix::from_rows(&[[2, 4], [6, 8]])).d, ints(&[2, 4]));
        assert_eq!(check(&Matrix::from_rows(&[[0]])).d, ints(&[0]));
        assert!(check(&Matrix::zeros(0, 3)).d.is_empty());
    }

    #[test]
    fn divisibility_forced() {
        // diag(2, 3) is not in normal form; the chain is (1, 6)
        let s = check(&Matrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(s.d, ints(&[1, 6]));
        assert_eq!(s.torsion(), ints(&[6]));
    }

    #[test]
    fn rejects_fractions() {
        let m = Matrix::from_dense(1, 1, &[vec![Rational::new(1, 2)]]);
        assert_eq!(smith_normal_form(&m), Err(Error::NotIntegral));
    }
}
