//! Sparse matrices with exact rational entries.
//!
//! Storage is compressed by column; every column is sorted by row and holds no
//! explicit zeros, so derived equality is entrywise equality. Interpretation
//! over `F_p` or `Z` happens through [`Matrix::reduce`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::field::ScalarDomain;
use super::rational::Rational;
use crate::Result;

/// A sparse vector: `(index, value)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

/// Sort a column, merge duplicate rows and drop zeros.
fn normalize_column(mut col: SparseVec) -> SparseVec {
    if col.windows(2).all(|w| w[0].0 < w[1].0) && col.iter().all(|(_, v)| !v.is_zero()) {
        return col;
    }
    col.sort_by_key(|(r, _)| *r);
    let mut out: SparseVec = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv += &v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Dense accumulator reused across columns of a product.
struct Scratch {
    values: Vec<Rational>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { values: vec![Rational::ZERO; n], touched: Vec::new(), mark: vec![false; n] }
    }

    fn add(&mut self, r: usize, v: &Rational) {
        if !self.mark[r] {
            self.mark[r] = true;
            self.touched.push(r);
            self.values[r] = v.clone();
        } else {
            self.values[r] += v;
        }
    }

    fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &r in &self.touched {
            self.mark[r] = false;
            let v = core::mem::take(&mut self.values[r]);
            if !v.is_zero() {
                out.push((r, v));
            }
        }
        self.touched.clear();
        out
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, Rational::ONE)]).collect() }
    }

    /// Build from columns; entries are sorted, merged and zero-pruned.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        let cols = columns.len();
        let data: Vec<SparseVec> = columns.into_iter().map(normalize_column).collect();
        for col in &data {
            if let Some((r, _)) = col.last() {
                assert!(*r < rows, "row index {r} out of range for {rows} rows");
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut columns = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(c < cols, "column index {c} out of range for {cols} columns");
            columns[c].push((r, v));
        }
        Self::from_columns(rows, columns)
    }

    /// Dense row-major integer input, mostly for tests and small fixtures.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut columns = vec![Vec::new(); ncols];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    columns[j].push((i, Rational::from_int(v)));
                }
            }
        }
        Matrix { rows: rows.len(), cols: ncols, data: columns }
    }

    pub fn from_dense(rows: usize, cols: usize, entries: &[Vec<Rational>]) -> Self {
        Self::from_triplets(
            rows,
            cols,
            entries.iter().enumerate().flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    /// Column vector from sparse entries.
    pub fn column_vector(rows: usize, v: SparseVec) -> Self {
        Self::from_columns(rows, vec![v])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.data[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.data[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => self.data[c][k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }

    pub fn is_identity_in(&self, dom: &ScalarDomain) -> bool {
        self.rows == self.cols && self.eq_in(&Matrix::identity(self.rows), dom)
    }

    /// Iterate `(row, col, value)` over stored entries in column order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triplets() {
            columns[r].push((c, v.clone()));
        }
        // entries arrive in increasing column order, so each new column is sorted
        Matrix { rows: self.cols, cols: self.rows, data: columns }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|col| col.iter().map(|(r, v)| (*r, v * s)).collect()).collect(),
        }
    }

    /// `self * v` for a sparse vector `v` indexed by columns.
    pub fn apply(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut acc = Scratch::new(self.rows);
        for (k, x) in v {
            for (r, a) in &self.data[*k] {
                acc.add(*r, &(a * x));
            }
        }
        acc.drain()
    }

    /// Map every entry into canonical form for `dom`, dropping new zeros.
    pub fn reduce(&self, dom: &ScalarDomain) -> Result<Matrix> {
        if matches!(dom, ScalarDomain::Rationals) {
            return Ok(self.clone());
        }
        let mut data = Vec::with_capacity(self.cols);
        for col in &self.data {
            let mut out = Vec::with_capacity(col.len());
            for (r, v) in col {
                let w = dom.reduce(v)?;
                if !w.is_zero() {
                    out.push((*r, w));
                }
            }
            data.push(out);
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero_in(&self, dom: &ScalarDomain) -> bool {
        self.data.iter().all(|col| col.iter().all(|(_, v)| dom.is_zero(v)))
    }

    /// Entrywise equality after reduction into `dom`.
    pub fn eq_in(&self, other: &Matrix, dom: &ScalarDomain) -> bool {
        self.shape() == other.shape() && (self - other).is_zero_in(dom)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut pos = vec![usize::MAX; self.rows];
        for (k, &r) in rows.iter().enumerate() {
            pos[r] = k;
        }
        let data = self
            .data
            .iter()
            .map(|col| {
                let mut out: SparseVec =
                    col.iter().filter(|(r, _)| pos[*r] != usize::MAX).map(|(r, v)| (pos[*r], v.clone())).collect();
                out.sort_by_key(|(r, _)| *r);
                out
            })
            .collect();
        Matrix { rows: rows.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        Matrix { rows: self.rows, cols: cols.len(), data: cols.iter().map(|&c| self.data[c].clone()).collect() }
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut col = a.clone();
                col.extend(b.iter().map(|(r, v)| (r + self.rows, v.clone())));
                col
            })
            .collect();
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Assemble a block matrix from `(block_row, block_col, block)` pieces.
    /// Missing blocks are zero; repeated blocks are summed.
    pub fn from_blocks<'a>(
        row_sizes: &[usize],
        col_sizes: &[usize],
        blocks: impl IntoIterator<Item = (usize, usize, &'a Matrix)>,
    ) -> Matrix {
        let offsets = |sizes: &[usize]| {
            let mut acc = 0;
            sizes
                .iter()
                .map(|s| {
                    let o = acc;
                    acc += s;
                    o
                })
                .collect::<Vec<_>>()
        };
        let (ro, co) = (offsets(row_sizes), offsets(col_sizes));
        let rows = row_sizes.iter().sum();
        let cols = col_sizes.iter().sum();
        let mut columns: Vec<SparseVec> = vec![Vec::new(); cols];
        for (bi, bj, m) in blocks {
            assert_eq!(m.shape(), (row_sizes[bi], col_sizes[bj]), "block ({bi}, {bj}) has wrong shape");
            for (c, col) in m.data.iter().enumerate() {
                columns[co[bj] + c].extend(col.iter().map(|(r, v)| (ro[bi] + r, v.clone())));
            }
        }
        Matrix::from_columns(rows, columns)
    }

    /// Kronecker product; basis `(a, b)` of the result is indexed `a * dim_b + b`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(cols);
        for ca in &self.data {
            for cb in &other.data {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (ra, va) in ca {
                    for (rb, vb) in cb {
                        col.push((ra * other.rows + rb, va * vb));
                    }
                }
                data.push(col);
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::ZERO; self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v.clone();
        }
        out
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut acc = Scratch::new(self.rows);
        let mut data = Vec::with_capacity(rhs.cols);
        for bcol in &rhs.data {
            for (k, b) in bcol {
                for (r, a) in &self.data[*k] {
                    acc.add(*r, &(a * b));
                }
            }
            data.push(acc.drain());
        }
        Matrix { rows: self.rows, cols: rhs.cols, data }
    }
}

fn merge(a: &[(usize, Rational)], b: &[(usize, Rational)], negate_b: bool) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else {
            let bv = if negate_b { -&b[j].1 } else { b[j].1.clone() };
            if i < a.len() && a[i].0 == b[j].0 {
                let s = &a[i].1 + &bv;
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
            } else {
                out.push((b[j].0, bv));
            }
            j += 1;
        }
    }
    out
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix add shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| merge(a, b, false)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sub shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| merge(a, b, true)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Rational::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: Matrix) -> Matrix {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: &'a Matrix) -> Matrix {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        if self.rows <= 16 && self.cols <= 16 {
            for row in self.to_dense() {
                write!(f, "  [")?;
                for (k, v) in row.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                writeln!(f, "]")?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_identity() {
        let a = Matrix::from_rows(&[[1, 2], [3, 4]]);
        let i = Matrix::identity(2);
        assert_eq!(&a * &i, a);
        assert_eq!(&a * &a, Matrix::from_rows(&[[7, 10], [15, 22]]));
        assert!(i.is_identity());
    }

    #[test]
    fn add_cancels_to_canonical_zero() {
        let a = Matrix::from_rows(&[[1, -2], [0, 4]]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z, Matrix::zeros(2, 2));
    }

    #[test]
    fn transpose_and_kron() {
        let a = Matrix::from_rows(&[[1, 2, 0], [0, 0, 3]]);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(2, 1), Rational::from_int(3));
        let k = Matrix::from_rows(&[[0, 1], [1, 0]]).kron(&Matrix::from_rows(&[[2]]));
        assert_eq!(k, Matrix::from_rows(&[[0, 2], [2, 0]]));
    }

    #[test]
    fn blocks_and_stacks() {
        let a = Matrix::from_rows(&[[1]]);
        let b = Matrix::from_rows(&[[2, 3]]);
        let m = Matrix::from_blocks(&[1, 1], &[1, 2], [(0, 0, &a), (1, 1, &b)]);
        assert_eq!(m, Matrix::from_rows(&[[1, 0, 0], [0, 2, 3]]));
        assert_eq!(a.hstack(&a).vstack(&b), Matrix::from_rows(&[[1, 1], [2, 3]]));
    }

    #[test]
    fn reduce_mod_p() {
        let a = Matrix::from_rows(&[[2, 3], [4, 5]]);
        let r = a.reduce(&ScalarDomain::PrimeField(2)).unwrap();
        assert_eq!(r, Matrix::from_rows(&[[0, 1], [0, 1]]));
        assert!(Matrix::from_rows(&[[2]]).is_zero_in(&ScalarDomain::PrimeField(2)));
    }
}
