//! Reduced column echelon forms, kernels, images and solving.
//!
//! A subspace is stored by its reduced column echelon basis: every basis
//! vector has a leading entry 1 (its pivot), pivots are strictly increasing,
//! and every basis vector vanishes on the pivots of the others. This basis is
//! unique, so subspace equality is plain equality of the stored data.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::field::{with_field, Field, FpField, QField, ScalarDomain};
use super::matrix::{Matrix, SparseVec};
use super::rational::Rational;
use crate::{Error, Result};

type FVec<E> = Vec<(usize, E)>;

/// Accepts unsorted input with repeated indices; repeats are summed.
fn lift_vec<F: Field>(f: &F, v: &[(usize, Rational)]) -> Result<FVec<F::E>> {
    if !v.windows(2).all(|w| w[0].0 < w[1].0) {
        let mut acc: BTreeMap<usize, F::E> = BTreeMap::new();
        for (i, x) in v {
            let e = f.lift(x)?;
            match acc.get_mut(i) {
                Some(cur) => *cur = f.add(cur, &e),
                None => {
                    acc.insert(*i, e);
                }
            }
        }
        return Ok(acc.into_iter().filter(|(_, e)| !f.is_zero(e)).collect());
    }
    let mut out = Vec::with_capacity(v.len());
    for (i, x) in v {
        let e = f.lift(x)?;
        if !f.is_zero(&e) {
            out.push((*i, e));
        }
    }
    Ok(out)
}

fn lower_vec<F: Field>(f: &F, v: &[(usize, F::E)]) -> SparseVec {
    v.iter().map(|(i, e)| (*i, f.lower(e))).collect()
}

/// `y + a * x`
fn axpy<F: Field>(f: &F, y: &[(usize, F::E)], a: &F::E, x: &[(usize, F::E)]) -> FVec<F::E> {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        if j == x.len() || (i < y.len() && y[i].0 < x[j].0) {
            out.push(y[i].clone());
            i += 1;
        } else if i == y.len() || x[j].0 < y[i].0 {
            out.push((x[j].0, f.mul(a, &x[j].1)));
            j += 1;
        } else {
            let s = f.add(&y[i].1, &f.mul(a, &x[j].1));
            if !f.is_zero(&s) {
                out.push((y[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn scale_vec<F: Field>(f: &F, a: &F::E, v: &mut FVec<F::E>) {
    for (_, e) in v.iter_mut() {
        *e = f.mul(a, e);
    }
}

fn entry<E: Clone>(v: &[(usize, E)], i: usize) -> Option<E> {
    v.binary_search_by_key(&i, |(k, _)| *k).ok().map(|k| v[k].1.clone())
}

/// Incremental fully reduced echelon basis, optionally remembering how each
/// basis vector was built from the inserted "source" vectors.
pub(crate) struct Echelon<F: Field> {
    f: F,
    vecs: Vec<FVec<F::E>>,
    pivots: Vec<usize>,
    slot_of_row: BTreeMap<usize, usize>,
    combos: Option<Vec<FVec<F::E>>>,
}

impl<F: Field> Echelon<F> {
    pub(crate) fn new(f: F, track: bool) -> Self {
        Echelon { f, vecs: Vec::new(), pivots: Vec::new(), slot_of_row: BTreeMap::new(), combos: track.then(Vec::new) }
    }

    pub(crate) fn rank(&self) -> usize {
        self.vecs.len()
    }

    /// Residual of `v` after removing its pivot components, plus the
    /// coefficients used. Because the basis is fully reduced, the coefficient
    /// of each basis vector is just the entry of `v` at its pivot.
    fn reduce(&self, v: &[(usize, F::E)]) -> (FVec<F::E>, Vec<(usize, F::E)>) {
        let coefs: Vec<(usize, F::E)> =
            v.iter().filter_map(|(r, e)| self.slot_of_row.get(r).map(|&s| (s, e.clone()))).collect();
        let mut res = v.to_vec();
        for (s, c) in &coefs {
            res = axpy(&self.f, &res, &self.f.neg(c), &self.vecs[*s]);
        }
        (res, coefs)
    }

    /// Insert `v`; if it is dependent, return the relation among sources
    /// (the tracked combination of `v` minus its expression in the basis).
    pub(crate) fn insert(&mut self, v: FVec<F::E>, combo: FVec<F::E>) -> Option<FVec<F::E>> {
        let (mut res, coefs) = self.reduce(&v);
        let f = &self.f;
        let mut cres = combo;
        if let Some(combos) = &self.combos {
            for (s, c) in &coefs {
                cres = axpy(f, &cres, &f.neg(c), &combos[*s]);
            }
        }
        if res.is_empty() {
            return Some(cres);
        }
        let q = res[0].0;
        let inv = f.inv(&res[0].1);
        scale_vec(f, &inv, &mut res);
        scale_vec(f, &inv, &mut cres);
        for k in 0..self.vecs.len() {
            if let Some(c) = entry(&self.vecs[k], q) {
                let nc = f.neg(&c);
                self.vecs[k] = axpy(f, &self.vecs[k], &nc, &res);
                if let Some(combos) = &mut self.combos {
                    combos[k] = axpy(f, &combos[k], &nc, &cres);
                }
            }
        }
        self.slot_of_row.insert(q, self.vecs.len());
        self.vecs.push(res);
        self.pivots.push(q);
        if let Some(combos) = &mut self.combos {
            combos.push(cres);
        }
        None
    }

    /// Express `v` in the tracked sources, or `None` if `v` is not in the span.
    pub(crate) fn solve(&self, v: &[(usize, F::E)]) -> Option<FVec<F::E>> {
        let (res, coefs) = self.reduce(v);
        if !res.is_empty() {
            return None;
        }
        let combos = self.combos.as_ref().expect("solve needs a tracked echelon");
        let mut out = Vec::new();
        for (s, c) in &coefs {
            out = axpy(&self.f, &out, c, &combos[*s]);
        }
        Some(out)
    }

    /// Basis vectors sorted by pivot: the canonical form.
    fn canonical(&self) -> (Vec<usize>, Vec<SparseVec>) {
        let mut order: Vec<usize> = (0..self.vecs.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        (
            order.iter().map(|&k| self.pivots[k]).collect(),
            order.iter().map(|&k| lower_vec(&self.f, &self.vecs[k])).collect(),
        )
    }
}

/// A subspace of `K^ambient` stored by its canonical reduced column echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient: usize,
    domain: ScalarDomain,
    pivots: Vec<usize>,
    vectors: Vec<SparseVec>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize, domain: ScalarDomain) -> Self {
        SubspaceBasis { ambient, domain, pivots: Vec::new(), vectors: Vec::new() }
    }

    pub fn full(ambient: usize, domain: ScalarDomain) -> Self {
        SubspaceBasis {
            ambient,
            domain,
            pivots: (0..ambient).collect(),
            vectors: (0..ambient).map(|i| vec![(i, Rational::ONE)]).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(ambient: usize, domain: ScalarDomain, vectors: &[SparseVec]) -> Result<Self> {
        with_field!(domain, f => {
            let mut ech = Echelon::new(f, false);
            for v in vectors {
                if let Some(r) = v.iter().map(|(i, _)| *i).max() {
                    if r >= ambient {
                        return Err(Error::AmbientMismatch(r + 1, ambient));
                    }
                }
                ech.insert(lift_vec(&f, v)?, Vec::new());
            }
            let (pivots, vectors) = ech.canonical();
            Ok(SubspaceBasis { ambient, domain, pivots, vectors })
        })
    }

    /// Column space of `m`.
    pub fn column_span(m: &Matrix, domain: ScalarDomain) -> Result<Self> {
        Self::span(m.rows(), domain, m.columns())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, self.vectors.clone())
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> Result<bool> {
        Ok(self.residual(v)?.is_empty())
    }

    /// Residual of `v` modulo the subspace, reduced into the domain.
    pub fn residual(&self, v: &[(usize, Rational)]) -> Result<SparseVec> {
        with_field!(self.domain, f => {
            let mut res = lift_vec(&f, v)?;
            for (k, &p) in self.pivots.iter().enumerate() {
                if let Some(c) = entry(&res, p) {
                    let b = lift_vec(&f, &self.vectors[k])?;
                    res = axpy(&f, &res, &f.neg(&c), &b);
                }
            }
            Ok(lower_vec(&f, &res))
        })
    }

    /// Vectors of `sup`, in order, that extend a basis of `self` to one of
    /// `sup`. Errors if `self` is not contained in `sup`.
    pub fn complement_in(&self, sup: &SubspaceBasis) -> Result<Vec<SparseVec>> {
        if self.ambient != sup.ambient {
            return Err(Error::AmbientMismatch(self.ambient, sup.ambient));
        }
        with_field!(self.domain, f => {
            let mut ech = Echelon::new(f, false);
            for v in &self.vectors {
                ech.insert(lift_vec(&f, v)?, Vec::new());
            }
            let mut out = Vec::new();
            for v in &sup.vectors {
                if ech.rank() == sup.dim() {
                    break;
                }
                if ech.insert(lift_vec(&f, v)?, Vec::new()).is_none() {
                    out.push(v.clone());
                }
            }
            if ech.rank() != sup.dim() {
                return Err(Error::InvalidInput("subspace is not contained in the larger one".into()));
            }
            Ok(out)
        })
    }

    /// Rows that carry no pivot; they index the canonical complement.
    pub fn free_rows(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut p = self.pivots.iter().peekable();
        for r in 0..self.ambient {
            if p.peek() == Some(&&r) {
                p.next();
            } else {
                out.push(r);
            }
        }
        out
    }

    /// Projection `K^ambient -> K^ambient / U` in the coordinates of
    /// [`free_rows`](Self::free_rows), and the section sending each
    /// coordinate back to its unit vector. `projection * section = id`.
    pub fn quotient_maps(&self) -> (Matrix, Matrix) {
        let free = self.free_rows();
        let mut pos = vec![usize::MAX; self.ambient];
        for (k, &r) in free.iter().enumerate() {
            pos[r] = k;
        }
        let mut pivot_slot = vec![usize::MAX; self.ambient];
        for (k, &p) in self.pivots.iter().enumerate() {
            pivot_slot[p] = k;
        }
        // e_r maps to e_r minus its pivot component; for a pivot row that
        // leaves minus the non-pivot part of the basis vector
        let columns = (0..self.ambient)
            .map(|r| {
                if pos[r] != usize::MAX {
                    vec![(pos[r], Rational::ONE)]
                } else {
                    self.vectors[pivot_slot[r]]
                        .iter()
                        .filter(|(i, _)| pos[*i] != usize::MAX)
                        .map(|(i, v)| (pos[*i], -v))
                        .collect()
                }
            })
            .collect();
        let mut projection = Matrix::from_columns(free.len(), columns);
        if let ScalarDomain::PrimeField(_) = self.domain {
            projection = projection.reduce(&self.domain).expect("entries are already residues");
        }
        let section =
            Matrix::from_columns(self.ambient, free.iter().map(|&r| vec![(r, Rational::ONE)]).collect());
        (projection, section)
    }
}

/// Rank, kernel and image of `m` over a field.
pub fn rank_kernel_image(m: &Matrix, dom: ScalarDomain) -> Result<(usize, SubspaceBasis, SubspaceBasis)> {
    with_field!(dom, f => {
        let mut ech = Echelon::new(f, true);
        let mut relations = Vec::new();
        for (j, col) in m.columns().iter().enumerate() {
            if let Some(rel) = ech.insert(lift_vec(&f, col)?, vec![(j, f.one())]) {
                relations.push(lower_vec(&f, &rel));
            }
        }
        let (pivots, vectors) = ech.canonical();
        let image = SubspaceBasis { ambient: m.rows(), domain: dom, pivots, vectors };
        let kernel = SubspaceBasis::span(m.cols(), dom, &relations)?;
        Ok((image.dim(), kernel, image))
    })
}

/// Rank over a field; over `Z` this is the rank over `Q`.
pub fn rank(m: &Matrix, dom: ScalarDomain) -> Result<usize> {
    let dom = if dom == ScalarDomain::Integers { ScalarDomain::Rationals } else { dom };
    with_field!(dom, f => {
        let mut ech = Echelon::new(f, false);
        for col in m.columns() {
            ech.insert(lift_vec(&f, col)?, Vec::new());
        }
        Ok(ech.rank())
    })
}

pub fn subspace_equal(a: &SubspaceBasis, b: &SubspaceBasis) -> Result<bool> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch(a.ambient, b.ambient));
    }
    if a.domain != b.domain {
        return Err(Error::DimensionMismatch(alloc::format!("domains {} and {}", a.domain, b.domain)));
    }
    Ok(a == b)
}

enum SolverState {
    Q(Echelon<QField>),
    Fp(Echelon<FpField>),
}

/// Expresses vectors as combinations of the columns of a fixed matrix.
pub struct ColumnSolver {
    rows: usize,
    cols: usize,
    state: SolverState,
}

fn tracked<F: Field>(f: F, m: &Matrix) -> Result<Echelon<F>> {
    let one = f.one();
    let mut ech = Echelon::new(f, true);
    for (j, col) in m.columns().iter().enumerate() {
        let v = lift_vec(&ech.f, col)?;
        ech.insert(v, vec![(j, one.clone())]);
    }
    Ok(ech)
}

fn tracked_solve<F: Field>(ech: &Echelon<F>, v: &[(usize, Rational)]) -> Result<Option<SparseVec>> {
    Ok(ech.solve(&lift_vec(&ech.f, v)?).map(|x| lower_vec(&ech.f, &x)))
}

impl ColumnSolver {
    pub fn new(m: &Matrix, dom: ScalarDomain) -> Result<Self> {
        let state = match dom {
            ScalarDomain::Rationals => SolverState::Q(tracked(QField, m)?),
            ScalarDomain::PrimeField(p) => SolverState::Fp(tracked(FpField(p), m)?),
            ScalarDomain::Integers => return Err(Error::DomainNotField),
        };
        Ok(ColumnSolver { rows: m.rows(), cols: m.cols(), state })
    }

    pub fn rank(&self) -> usize {
        match &self.state {
            SolverState::Q(e) => e.rank(),
            SolverState::Fp(e) => e.rank(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Some `x` with `m * x = v`, or `None` if `v` is outside the column space.
    pub fn solve(&self, v: &[(usize, Rational)]) -> Result<Option<SparseVec>> {
        match &self.state {
            SolverState::Q(e) => tracked_solve(e, v),
            SolverState::Fp(e) => tracked_solve(e, v),
        }
    }

    /// Solve column by column; `None` if some column is outside the span.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        assert_eq!(rhs.rows(), self.rows, "right-hand side has the wrong height");
        let mut out = Vec::with_capacity(rhs.cols());
        for col in rhs.columns() {
            match self.solve(col)? {
                Some(x) => out.push(x),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_columns(self.cols, out)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarDomain = ScalarDomain::Rationals;

    #[test]
    fn rank_one_kernel() {
        let m = Matrix::from_rows(&[[1, 2], [2, 4]]);
        let (r, k, im) = rank_kernel_image(&m, Q).unwrap();
        assert_eq!(r, 1);
        assert_eq!(k.dim(), 1);
        // canonical kernel vector is (1, -1/2), a multiple of (-2, 1)
        let expected = SubspaceBasis::span(2, Q, &[vec![(0, Rational::from_int(-2)), (1, Rational::ONE)]]).unwrap();
        assert!(subspace_equal(&k, &expected).unwrap());
        assert_eq!(im.vectors()[0], vec![(0, Rational::ONE), (1, Rational::from_int(2))]);
    }

    #[test]
    fn identity_and_zero() {
        let (r, k, _) = rank_kernel_image(&Matrix::identity(3), Q).unwrap();
        assert_eq!((r, k.dim()), (3, 0));
        let (r, k, _) = rank_kernel_image(&Matrix::zeros(2, 5), ScalarDomain::PrimeField(2)).unwrap();
        assert_eq!((r, k.dim()), (0, 5));
        assert_eq!(rank_kernel_image(&Matrix::zeros(1, 1), ScalarDomain::Integers).unwrap_err(), Error::DomainNotField);
    }

    #[test]
    fn subspaces() {
        let e = |i: usize, v: i64| vec![(i, Rational::from_int(v))];
        let a = SubspaceBasis::span(2, Q, &[e(0, 1)]).unwrap();
        let b = SubspaceBasis::span(2, Q, &[e(0, 2)]).unwrap();
        let c = SubspaceBasis::span(2, Q, &[e(1, 1)]).unwrap();
        assert!(subspace_equal(&a, &b).unwrap());
        assert!(!subspace_equal(&a, &c).unwrap());
        let diag = SubspaceBasis::span(
            2,
            Q,
            &[
                vec![(0, Rational::ONE), (1, Rational::ONE)],
                vec![(0, Rational::ONE), (1, Rational::from_int(-1))],
            ],
        )
        .unwrap();
        assert!(subspace_equal(&diag, &SubspaceBasis::full(2, Q)).unwrap());
        let wide = SubspaceBasis::zero(3, Q);
        assert_eq!(subspace_equal(&a, &wide), Err(Error::AmbientMismatch(2, 3)));
    }

    #[test]
    fn mod_two_rank_drops() {
        let m = Matrix::from_rows(&[[1, 1], [1, -1]]);
        assert_eq!(rank(&m, Q).unwrap(), 2);
        assert_eq!(rank(&m, ScalarDomain::PrimeField(2)).unwrap(), 1);
    }

    #[test]
    fn solver_roundtrip() {
        let m = Matrix::from_rows(&[[1, 0, 1], [0, 1, 1], [0, 0, 0]]);
        let s = ColumnSolver::new(&m, Q).unwrap();
        let v = vec![(0, Rational::from_int(3)), (1, Rational::from_int(5))];
        let x = s.solve(&v).unwrap().unwrap();
        assert_eq!(m.apply(&x), v);
        assert!(s.solve(&[(2, Rational::ONE)]).unwrap().is_none());
    }

    #[test]
    fn quotient_maps_split() {
        let u = SubspaceBasis::span(3, Q, &[vec![(0, Rational::ONE), (2, Rational::from_int(2))]]).unwrap();
        let (p, s) = u.quotient_maps();
        assert!((&p * &s).is_identity());
        assert!((&p * &u.to_matrix()).is_zero());
    }
}
