//! Simplicial modules given by face and degeneracy matrices, and their
//! unnormalized and normalized chain complexes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::complex::ChainComplex;
use crate::linalg::{Matrix, Rational, ScalarDomain, SparseVec, SubspaceBasis};
use crate::simplicial::{Code, SimplicialSet};
use crate::{Error, Result};

/// A truncated simplicial module with a chosen basis in every degree.
///
/// Faces are defined for `1 ≤ n ≤ N`, degeneracies for `n < N`.
pub trait SimplicialModule {
    fn domain(&self) -> ScalarDomain;
    fn truncation(&self) -> usize;
    fn rank(&self, n: usize) -> usize;
    /// `d_i: M_n -> M_(n-1)`
    fn face(&self, n: usize, i: usize) -> Matrix;
    /// `s_j: M_n -> M_(n+1)`
    fn degeneracy(&self, n: usize, j: usize) -> Matrix;
    /// The cyclic operator `t_n` satisfying `t^(n+1) = 1` (unsigned).
    fn cyclic(&self, _n: usize) -> Option<Matrix> {
        None
    }
    fn is_cyclic(&self) -> bool {
        false
    }
}

impl<M: SimplicialModule + ?Sized> SimplicialModule for &M {
    fn domain(&self) -> ScalarDomain {
        (**self).domain()
    }
    fn truncation(&self) -> usize {
        (**self).truncation()
    }
    fn rank(&self, n: usize) -> usize {
        (**self).rank(n)
    }
    fn face(&self, n: usize, i: usize) -> Matrix {
        (**self).face(n, i)
    }
    fn degeneracy(&self, n: usize, j: usize) -> Matrix {
        (**self).degeneracy(n, j)
    }
    fn cyclic(&self, n: usize) -> Option<Matrix> {
        (**self).cyclic(n)
    }
    fn is_cyclic(&self) -> bool {
        (**self).is_cyclic()
    }
}

/// `Σ (-1)^i d_i` over `i ≤ n` (or `i < n` for `b'`).
pub fn alternating_face_sum<M: SimplicialModule + ?Sized>(m: &M, n: usize, include_last: bool) -> Matrix {
    let top = if include_last { n + 1 } else { n };
    let mut acc = Matrix::zeros(m.rank(n - 1), m.rank(n));
    for i in 0..top {
        let f = m.face(n, i);
        acc = if i % 2 == 0 { &acc + &f } else { &acc - &f };
    }
    acc
}

/// `(-1)^n t_n`
pub fn signed_cyclic<M: SimplicialModule + ?Sized>(m: &M, n: usize) -> Option<Matrix> {
    m.cyclic(n).map(|t| if n % 2 == 0 { t } else { -&t })
}

/// The free module on a truncated simplicial set.
pub struct LinearizedSet<S> {
    set: S,
    domain: ScalarDomain,
    basis: Vec<Vec<Code>>,
    index: Vec<BTreeMap<Code, usize>>,
}

impl<S: SimplicialSet> LinearizedSet<S> {
    pub fn new(set: S, domain: ScalarDomain) -> Self {
        let basis: Vec<Vec<Code>> = (0..=set.truncation()).map(|n| set.elements(n)).collect();
        let index = basis.iter().map(|b| b.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect()).collect();
        LinearizedSet { set, domain, basis, index }
    }

    pub fn set(&self) -> &S {
        &self.set
    }

    pub fn basis(&self, n: usize) -> &[Code] {
        &self.basis[n]
    }

    pub fn index_of(&self, n: usize, x: &Code) -> Option<usize> {
        self.index[n].get(x).copied()
    }

    fn operator(&self, from: usize, to: usize, f: impl Fn(&Code) -> Code) -> Matrix {
        let cols = self.basis[from]
            .iter()
            .map(|x| {
                let y = f(x);
                let k = self.index[to].get(&y).unwrap_or_else(|| panic!("{} is not closed: {y:?}", self.set.name()));
                alloc::vec![(*k, Rational::ONE)]
            })
            .collect();
        Matrix::from_columns(self.basis[to].len(), cols)
    }
}

impl<S: SimplicialSet> SimplicialModule for LinearizedSet<S> {
    fn domain(&self) -> ScalarDomain {
        self.domain
    }
    fn truncation(&self) -> usize {
        self.set.truncation()
    }
    fn rank(&self, n: usize) -> usize {
        self.basis.get(n).map_or(0, Vec::len)
    }
    fn face(&self, n: usize, i: usize) -> Matrix {
        self.operator(n, n - 1, |x| self.set.face(n, i, x))
    }
    fn degeneracy(&self, n: usize, j: usize) -> Matrix {
        self.operator(n, n + 1, |x| self.set.degeneracy(n, j, x))
    }
    fn cyclic(&self, n: usize) -> Option<Matrix> {
        if !self.set.is_cyclic() {
            return None;
        }
        Some(self.operator(n, n, |x| self.set.cyclic(n, x).expect("cyclic set")))
    }
    fn is_cyclic(&self) -> bool {
        self.set.is_cyclic()
    }
}

/// Unnormalized complex `C_0 <- .. <- C_N` with `b = Σ (-1)^i d_i`.
pub fn chain_complex<M: SimplicialModule + ?Sized>(m: &M) -> Result<ChainComplex> {
    let top = m.truncation();
    if top == 0 {
        return Err(Error::TruncationTooSmall(top));
    }
    let ranks = (0..=top).map(|n| m.rank(n)).collect();
    let ds = (1..=top).map(|n| alternating_face_sum(m, n, true).reduce(&m.domain())).collect::<Result<Vec<_>>>()?;
    ChainComplex::from_boundaries(m.domain(), 0, ranks, ds)
}

/// The normalized complex `C / D` with `D` spanned by degenerate elements,
/// together with the projection `C_n -> N_n` and a section `N_n -> C_n`.
#[derive(Clone, Debug)]
pub struct Normalization {
    pub complex: ChainComplex,
    pub projection: Vec<Matrix>,
    pub section: Vec<Matrix>,
}

pub fn normalized<M: SimplicialModule + ?Sized>(m: &M) -> Result<Normalization> {
    let top = m.truncation();
    if top == 0 {
        return Err(Error::TruncationTooSmall(top));
    }
    let dom = m.domain();
    let span_dom = if dom == ScalarDomain::Integers { ScalarDomain::Rationals } else { dom };
    let mut projection = Vec::with_capacity(top + 1);
    let mut section = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut gens: Vec<SparseVec> = Vec::new();
        if n > 0 {
            for j in 0..n {
                gens.extend(m.degeneracy(n - 1, j).into_columns());
            }
        }
        let (p, s) = match coordinate_span(&gens, &dom) {
            // degeneracies hit basis vectors: the quotient keeps the other coordinates
            Some(hit) => {
                let keep: Vec<usize> = (0..m.rank(n)).filter(|k| !hit.contains(k)).collect();
                let s = Matrix::from_columns(m.rank(n), keep.iter().map(|&k| alloc::vec![(k, Rational::ONE)]).collect());
                (s.transpose(), s)
            }
            None => SubspaceBasis::span(m.rank(n), span_dom, &gens)?.quotient_maps(),
        };
        if dom == ScalarDomain::Integers && !p.triplets().all(|(_, _, v)| v.is_integer()) {
            return Err(Error::NotIntegral);
        }
        projection.push(p);
        section.push(s);
    }
    let ranks = projection.iter().map(Matrix::rows).collect();
    let ds = (1..=top)
        .map(|n| (&(&projection[n - 1] * &alternating_face_sum(m, n, true)) * &section[n]).reduce(&dom))
        .collect::<Result<Vec<_>>>()?;
    let complex = ChainComplex::from_boundaries(dom, 0, ranks, ds)?;
    Ok(Normalization { complex, projection, section })
}

/// The coordinates spanned by `gens` when each one is a unit multiple of a
/// basis vector.
fn coordinate_span(gens: &[SparseVec], dom: &ScalarDomain) -> Option<alloc::collections::BTreeSet<usize>> {
    let mut hit = alloc::collections::BTreeSet::new();
    for g in gens {
        let nonzero: Vec<&(usize, Rational)> = g.iter().filter(|(_, x)| !dom.is_zero(x)).collect();
        match nonzero.as_slice() {
            [] => {}
            [(k, x)] if *dom != ScalarDomain::Integers || x.abs().is_one() => {
                hit.insert(*k);
            }
            _ => return None,
        }
    }
    Some(hit)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalize {
    Unnormalized,
    Normalized,
}

/// Chains on a simplicial set.
pub fn linearize<S: SimplicialSet>(set: S, domain: ScalarDomain, mode: Normalize) -> Result<ChainComplex> {
    let m = LinearizedSet::new(set, domain);
    match mode {
        Normalize::Unnormalized => chain_complex(&m),
        Normalize::Normalized => Ok(normalized(&m)?.complex),
    }
}

/// Outcome of checking matrix identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: BTreeMap<&'static str, usize>,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn instances(&self) -> usize {
        self.checked.values().sum()
    }

    pub fn record(&mut self, ok: bool, relation: &'static str, what: impl FnOnce() -> String) {
        *self.checked.entry(relation).or_default() += 1;
        if !ok {
            self.failures.push(format!("{relation}: {}", what()));
        }
    }

    pub fn merge(&mut self, other: RelationReport) {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
    }
}

/// Simplicial identities (and the cyclic ones if `cyclic`) as matrix equations.
pub fn check_module_identities<M: SimplicialModule + ?Sized>(m: &M, cyclic: bool) -> Result<RelationReport> {
    if cyclic && !m.is_cyclic() {
        return Err(Error::CyclicModeOnNonCyclic);
    }
    let dom = m.domain();
    let top = m.truncation();
    let mut rep = RelationReport::default();
    let faces: Vec<Vec<Matrix>> = (0..=top).map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| m.face(n, i)).collect() }).collect();
    let degs: Vec<Vec<Matrix>> = (0..top).map(|n| (0..=n).map(|j| m.degeneracy(n, j)).collect()).collect();
    for n in 2..=top {
        for j in 0..=n {
            for i in 0..j {
                let ok = (&faces[n - 1][i] * &faces[n][j]).eq_in(&(&faces[n - 1][j - 1] * &faces[n][i]), &dom);
                rep.record(ok, "d_i d_j = d_(j-1) d_i", || format!("n={n} i={i} j={j}"));
            }
        }
    }
    for n in 0..top {
        for j in 0..=n {
            let sj = &degs[n][j];
            for i in 0..=n + 1 {
                let lhs = &faces[n + 1][i] * sj;
                let rhs = if i < j {
                    &degs[n - 1][j - 1] * &faces[n][i]
                } else if i == j || i == j + 1 {
                    Matrix::identity(m.rank(n))
                } else {
                    &degs[n - 1][j] * &faces[n][i - 1]
                };
                rep.record(lhs.eq_in(&rhs, &dom), "d_i s_j", || format!("n={n} i={i} j={j}"));
            }
        }
    }
    for n in 0..top.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let ok = (&degs[n + 1][i] * &degs[n][j]).eq_in(&(&degs[n + 1][j + 1] * &degs[n][i]), &dom);
                rep.record(ok, "s_i s_j = s_(j+1) s_i", || format!("n={n} i={i} j={j}"));
            }
        }
    }
    if cyclic {
        let ts: Vec<Matrix> = (0..=top).map(|n| m.cyclic(n).expect("cyclic module")).collect();
        for n in 0..=top {
            let mut p = Matrix::identity(m.rank(n));
            for _ in 0..=n {
                p = &ts[n] * &p;
            }
            rep.record(p.is_identity_in(&dom), "t^(n+1) = 1", || format!("n={n}"));
            if n >= 1 {
                let ok = (&faces[n][0] * &ts[n]).eq_in(&faces[n][n], &dom);
                rep.record(ok, "d_0 t = d_n", || format!("n={n}"));
                for i in 1..=n {
                    let ok = (&faces[n][i] * &ts[n]).eq_in(&(&ts[n - 1] * &faces[n][i - 1]), &dom);
                    rep.record(ok, "d_i t = t d_(i-1)", || format!("n={n} i={i}"));
                }
            }
            if n < top {
                let ok = (&degs[n][0] * &ts[n]).eq_in(&(&(&ts[n + 1] * &ts[n + 1]) * &degs[n][n]), &dom);
                rep.record(ok, "s_0 t = t^2 s_n", || format!("n={n}"));
                for j in 1..=n {
                    let ok = (&degs[n][j] * &ts[n]).eq_in(&(&ts[n + 1] * &degs[n][j - 1]), &dom);
                    rep.record(ok, "s_j t = t s_(j-1)", || format!("n={n} j={j}"));
                }
            }
        }
    }
    Ok(rep)
}
