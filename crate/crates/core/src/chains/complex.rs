//! Chain complexes of finite free modules, their homology and chain maps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::linalg::{rank, rank_kernel_image, smith_normal_form, ColumnSolver, Matrix, ScalarDomain, SparseVec, SubspaceBasis};
use crate::{Error, Result};

/// `C_lo <- .. <- C_hi` with `d_n: C_n -> C_(n-1)`; `d_lo` maps to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    domain: ScalarDomain,
    lo: i64,
    ranks: Vec<usize>,
    boundaries: Vec<Matrix>,
}

impl ChainComplex {
    /// `boundaries[k]` is `d_(lo+k)`; the first one must have zero rows.
    /// `d ∘ d = 0` is checked in the domain.
    pub fn new(domain: ScalarDomain, lo: i64, ranks: Vec<usize>, boundaries: Vec<Matrix>) -> Result<Self> {
        if ranks.len() != boundaries.len() {
            return Err(Error::DimensionMismatch(format!("{} ranks but {} boundaries", ranks.len(), boundaries.len())));
        }
        for (k, d) in boundaries.iter().enumerate() {
            let rows = if k == 0 { 0 } else { ranks[k - 1] };
            if d.shape() != (rows, ranks[k]) {
                return Err(Error::DimensionMismatch(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    lo + k as i64,
                    d.rows(),
                    d.cols(),
                    rows,
                    ranks[k]
                )));
            }
        }
        for k in 1..boundaries.len() {
            if !(&boundaries[k - 1] * &boundaries[k]).is_zero_in(&domain) {
                return Err(Error::NotAComplex(lo + k as i64));
            }
        }
        Ok(ChainComplex { domain, lo, ranks, boundaries })
    }

    /// Build from `d_n` for `n` in `lo..=hi`, where the first boundary is
    /// implicitly zero.
    pub fn from_boundaries(domain: ScalarDomain, lo: i64, ranks: Vec<usize>, upper: Vec<Matrix>) -> Result<Self> {
        let mut boundaries = Vec::with_capacity(ranks.len());
        if !ranks.is_empty() {
            boundaries.push(Matrix::zeros(0, ranks[0]));
        }
        boundaries.extend(upper);
        Self::new(domain, lo, ranks, boundaries)
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= self.lo && n <= self.hi()
    }

    pub fn rank(&self, n: i64) -> usize {
        if self.contains(n) {
            self.ranks[(n - self.lo) as usize]
        } else {
            0
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `d_n`, zero (with the right shape) outside the stored range.
    pub fn boundary(&self, n: i64) -> Matrix {
        if self.contains(n) {
            let d = &self.boundaries[(n - self.lo) as usize];
            if d.rows() == self.rank(n - 1) {
                return d.clone();
            }
        }
        Matrix::zeros(self.rank(n - 1), self.rank(n))
    }

    /// Same complex, reinterpreted over another domain.
    pub fn with_domain(&self, domain: ScalarDomain) -> Result<Self> {
        let boundaries = self.boundaries.iter().map(|d| d.reduce(&domain)).collect::<Result<Vec<_>>>()?;
        Self::new(domain, self.lo, self.ranks.clone(), boundaries)
    }
}

/// Homology in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: i64,
    pub betti: usize,
    /// Over `Z`: invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
    /// False at the top of the complex, where the outgoing boundary is unknown.
    pub complete: bool,
    reps: Vec<SparseVec>,
    boundaries: Vec<SparseVec>,
    cycles: usize,
}

impl HomologyGroup {
    /// Cycle representatives of the chosen homology basis (fields only).
    pub fn representatives(&self) -> &[SparseVec] {
        &self.reps
    }

    pub fn cycle_dim(&self) -> usize {
        self.cycles
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub domain: ScalarDomain,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn group(&self, n: i64) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.degree == n)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Coordinates of the class of the cycle `z` in the chosen basis, or
    /// `None` if `z` is not a cycle of this degree.
    pub fn class_of(&self, n: i64, z: &[(usize, crate::Rational)], c: &ChainComplex) -> Result<Option<Vec<crate::Rational>>> {
        let g = self.group(n).ok_or(Error::RangeExceedsComplex(n))?;
        let d = c.boundary(n);
        if !d.apply(z).iter().all(|(_, v)| self.domain.is_zero(v)) {
            return Ok(None);
        }
        let mut cols = g.boundaries.clone();
        cols.extend(g.reps.iter().cloned());
        let m = Matrix::from_columns(c.rank(n), cols);
        let solver = ColumnSolver::new(&m, self.domain)?;
        let Some(x) = solver.solve(z)? else { return Ok(None) };
        let mut out = vec![crate::Rational::ZERO; g.betti];
        let nb = g.boundaries.len();
        for (k, v) in x {
            if k >= nb {
                out[k - nb] = v;
            }
        }
        Ok(Some(out))
    }
}

/// Homology in the given degrees: rank–nullity over a field, Smith normal
/// form over `Z`.
pub fn homology(c: &ChainComplex, degrees: RangeInclusive<i64>) -> Result<HomologyResult> {
    let mut groups = Vec::new();
    for n in degrees {
        if !c.contains(n) {
            return Err(Error::RangeExceedsComplex(n));
        }
        let complete = n < c.hi();
        let d_out = c.boundary(n);
        let d_in = c.boundary(n + 1);
        let g = match c.domain {
            ScalarDomain::Integers => {
                let r_out = rank(&d_out, ScalarDomain::Rationals)?;
                let r_in = rank(&d_in, ScalarDomain::Rationals)?;
                let cycles = c.rank(n) - r_out;
                let torsion = if d_in.cols() == 0 { Vec::new() } else { smith_normal_form(&d_in)?.torsion() };
                HomologyGroup { degree: n, betti: cycles - r_in, torsion, complete, reps: Vec::new(), boundaries: Vec::new(), cycles }
            }
            dom => {
                let (_, ker, _) = rank_kernel_image(&d_out, dom)?;
                let im = SubspaceBasis::column_span(&d_in, dom)?;
                let reps = im.complement_in(&ker)?;
                HomologyGroup {
                    degree: n,
                    betti: ker.dim() - im.dim(),
                    torsion: Vec::new(),
                    complete,
                    reps,
                    boundaries: im.vectors().to_vec(),
                    cycles: ker.dim(),
                }
            }
        };
        groups.push(g);
    }
    Ok(HomologyResult { domain: c.domain, groups })
}

/// A degreewise map `f_n: C_n -> D_(n+shift)` commuting (or anticommuting)
/// with the differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub shift: i64,
    maps: BTreeMap<i64, Matrix>,
}

impl ChainMap {
    /// Checks `d f_n = ± f_(n-1) d` wherever both sides are defined.
    pub fn new(
        source: &ChainComplex,
        target: &ChainComplex,
        shift: i64,
        maps: BTreeMap<i64, Matrix>,
        anticommutes: bool,
    ) -> Result<Self> {
        let dom = source.domain;
        for (&n, f) in &maps {
            if f.shape() != (target.rank(n + shift), source.rank(n)) {
                return Err(Error::DimensionMismatch(format!("chain map component in degree {n}")));
            }
        }
        for (&n, f) in &maps {
            if !target.contains(n + shift - 1) && !source.contains(n - 1) {
                continue;
            }
            let lhs = &target.boundary(n + shift) * f;
            let rhs = match maps.get(&(n - 1)) {
                Some(g) => g * &source.boundary(n),
                None if source.contains(n - 1) && target.contains(n + shift - 1) => continue,
                None => Matrix::zeros(lhs.rows(), lhs.cols()),
            };
            let ok = if anticommutes { (&lhs + &rhs).is_zero_in(&dom) } else { lhs.eq_in(&rhs, &dom) };
            if !ok {
                return Err(Error::NotAChainMap(n));
            }
        }
        Ok(ChainMap { shift, maps })
    }

    pub fn component(&self, n: i64) -> Option<&Matrix> {
        self.maps.get(&n)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.maps.keys().copied()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        let maps = other
            .maps
            .iter()
            .filter_map(|(&n, g)| self.maps.get(&(n + other.shift)).map(|f| (n, f * g)))
            .collect();
        ChainMap { shift: self.shift + other.shift, maps }
    }
}

/// Matrix of `f_*: H_n(C) -> H_(n+shift)(D)` in the chosen homology bases.
pub fn induced_map(
    f: &ChainMap,
    src: &ChainComplex,
    h_src: &HomologyResult,
    tgt: &ChainComplex,
    h_tgt: &HomologyResult,
    n: i64,
) -> Result<Matrix> {
    let g = h_src.group(n).ok_or(Error::RangeExceedsComplex(n))?;
    let m = n + f.shift;
    let gt = h_tgt.group(m).ok_or(Error::RangeExceedsComplex(m))?;
    let fm = f.component(n).ok_or(Error::RangeExceedsComplex(n))?;
    let _ = src;
    let mut cols = Vec::with_capacity(g.betti);
    for r in &g.reps {
        let image = fm.apply(r);
        let coords = h_tgt.class_of(m, &image, tgt)?.ok_or(Error::NotAChainMap(n))?;
        cols.push(coords.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect());
    }
    Ok(Matrix::from_columns(gt.betti, cols))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exactness {
    pub im_dim: usize,
    pub ker_dim: usize,
    pub exact: bool,
}

/// Is `im f = ker g`? Decided by equality of canonical bases.
pub fn exactness_at(f: &Matrix, g: &Matrix, dom: ScalarDomain) -> Result<Exactness> {
    if f.rows() != g.cols() {
        return Err(Error::BasisMismatch(f.rows(), g.cols()));
    }
    let im = SubspaceBasis::column_span(f, dom)?;
    let (_, ker, _) = rank_kernel_image(g, dom)?;
    Ok(Exactness { im_dim: im.dim(), ker_dim: ker.dim(), exact: crate::linalg::subspace_equal(&im, &ker)? })
}
