//! The Hochschild cyclic module `[n] ↦ A^(⊗n+1)` and Hochschild homology.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::algebra::FiniteAlgebra;
use crate::chains::{chain_complex, homology, normalized, ChainComplex, HomologyResult, LinearizedSet, Normalize, SimplicialModule};
use crate::linalg::{Matrix, Rational, ScalarDomain};
use crate::simplicial::{CyclicBar, FiniteGroup};
use crate::{Error, Result};

/// Largest number of basis tensors any single degree may have by default.
pub const DEFAULT_BUDGET: u128 = 1 << 20;

/// `A^(⊗n+1)` for `n ≤ N`. Basis tensors are ordered lexicographically with
/// slot 0 most significant, i.e. `(a_0, .., a_n) ↦ Σ a_k d^(n-k)`.
#[derive(Clone, Debug)]
pub struct HochschildModule {
    alg: FiniteAlgebra,
    top: usize,
}

/// `d^(n+1)`, or the budget error.
pub fn tensor_count(d: usize, n: usize, budget: u128) -> Result<usize> {
    let mut needed: u128 = 1;
    for _ in 0..=n {
        needed = needed.saturating_mul(d as u128);
    }
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(needed as usize)
}

pub(crate) fn decode(mut idx: usize, d: usize, slots: usize) -> Vec<usize> {
    let mut out = vec![0; slots];
    for k in (0..slots).rev() {
        out[k] = idx % d;
        idx /= d;
    }
    out
}

pub(crate) fn encode(digits: impl IntoIterator<Item = usize>, d: usize) -> usize {
    digits.into_iter().fold(0, |acc, x| acc * d + x)
}

impl HochschildModule {
    pub fn new(alg: &FiniteAlgebra, top: usize, budget: u128) -> Result<Self> {
        tensor_count(alg.dim(), top, budget)?;
        Ok(HochschildModule { alg: alg.clone(), top })
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }

    /// Matrix of a slotwise operation `(a_0..a_n) ↦ Σ c · (b_0..b_m)`.
    fn operator(&self, from: usize, to: usize, f: impl Fn(&[usize], &mut Vec<(usize, Rational)>)) -> Matrix {
        let d = self.alg.dim();
        let cols = (0..self.rank(from))
            .map(|idx| {
                let mut col = Vec::new();
                f(&decode(idx, d, from + 1), &mut col);
                col
            })
            .collect();
        Matrix::from_columns(self.rank(to), cols)
    }
}

impl SimplicialModule for HochschildModule {
    fn domain(&self) -> ScalarDomain {
        self.alg.domain()
    }

    fn truncation(&self) -> usize {
        self.top
    }

    fn rank(&self, n: usize) -> usize {
        self.alg.dim().pow(n as u32 + 1)
    }

    fn face(&self, n: usize, i: usize) -> Matrix {
        let d = self.alg.dim();
        self.operator(n, n - 1, |a, col| {
            if i < n {
                for (k, c) in self.alg.basis_product(a[i], a[i + 1]) {
                    let digits = a[..i].iter().copied().chain([*k]).chain(a[i + 2..].iter().copied());
                    col.push((encode(digits, d), c.clone()));
                }
            } else {
                for (k, c) in self.alg.basis_product(a[n], a[0]) {
                    col.push((encode([*k].into_iter().chain(a[1..n].iter().copied()), d), c.clone()));
                }
            }
        })
    }

    fn degeneracy(&self, n: usize, j: usize) -> Matrix {
        let d = self.alg.dim();
        self.operator(n, n + 1, |a, col| {
            for (k, c) in self.alg.unit() {
                let digits = a[..=j].iter().copied().chain([*k]).chain(a[j + 1..].iter().copied());
                col.push((encode(digits, d), c.clone()));
            }
        })
    }

    /// The plain rotation `(a_0..a_n) ↦ (a_n, a_0..a_(n-1))`; the sign
    /// `(-1)^n` is applied by the cyclic bicomplex.
    fn cyclic(&self, n: usize) -> Option<Matrix> {
        let d = self.alg.dim();
        Some(self.operator(n, n, |a, col| {
            col.push((encode([a[n]].into_iter().chain(a[..n].iter().copied()), d), Rational::ONE));
        }))
    }

    fn is_cyclic(&self) -> bool {
        true
    }
}

/// The Hochschild complex of `A` in degrees `0..=top`.
pub fn hochschild_complex(alg: &FiniteAlgebra, top: usize, mode: Normalize, budget: u128) -> Result<ChainComplex> {
    let m = HochschildModule::new(alg, top, budget)?;
    match mode {
        Normalize::Unnormalized => chain_complex(&m),
        Normalize::Normalized => Ok(normalized(&m)?.complex),
    }
}

/// `HH_n(A)` for `n` in `degrees`, from the normalized complex.
pub fn hh(alg: &FiniteAlgebra, degrees: RangeInclusive<i64>, mode: Normalize, budget: u128) -> Result<HomologyResult> {
    let top = (*degrees.end()).max(0) as usize + 1;
    let c = hochschild_complex(alg, top, mode, budget)?;
    homology(&c, degrees)
}

/// Both routes to `HH(K[G])`, compared entrywise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub top: usize,
    /// Boundary `d_n` equal for `n = 1..=top`.
    pub boundaries_equal: Vec<bool>,
    pub betti_hochschild: Vec<usize>,
    pub betti_cyclic_bar: Vec<usize>,
}

impl PipelineReport {
    pub fn passed(&self) -> bool {
        self.boundaries_equal.iter().all(|&b| b) && self.betti_hochschild == self.betti_cyclic_bar
    }
}

/// The Hochschild complex of `K[G]` and the chains on `Γ·G`, matched by
/// sending `(g_0, .., g_n)` to the same tuple.
pub fn hh_vs_cyclic_bar(g: &FiniteGroup, top: usize, dom: ScalarDomain, budget: u128) -> Result<PipelineReport> {
    let alg = FiniteAlgebra::group_algebra(g, dom)?;
    let hm = HochschildModule::new(&alg, top, budget)?;
    let bar = LinearizedSet::new(CyclicBar::new(g.clone(), top), dom);
    let d = g.order();
    let perm = |n: usize| -> Result<Matrix> {
        let cols = (0..hm.rank(n))
            .map(|idx| {
                let code = decode(idx, d, n + 1).into_iter().map(|x| x as i64).collect();
                bar.index_of(n, &code)
                    .map(|k| vec![(k, Rational::ONE)])
                    .ok_or_else(|| Error::MatrixMismatch(alloc::format!("basis tensor {idx} missing in degree {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(bar.rank(n), cols))
    };
    let c_h = chain_complex(&hm)?;
    let c_b = chain_complex(&bar)?;
    let mut boundaries_equal = Vec::new();
    let mut prev = perm(0)?;
    for n in 1..=top {
        let p = perm(n)?;
        let lhs = &prev * &c_h.boundary(n as i64);
        let rhs = &c_b.boundary(n as i64) * &p;
        if !lhs.eq_in(&rhs, &dom) {
            return Err(Error::MatrixMismatch(alloc::format!("boundary d_{n} of K[{}]", g.name())));
        }
        boundaries_equal.push(true);
        prev = p;
    }
    let degrees = 0..=top as i64 - 1;
    let betti_hochschild = homology(&c_h, degrees.clone())?.betti();
    let betti_cyclic_bar = homology(&c_b, degrees)?.betti();
    if betti_hochschild != betti_cyclic_bar {
        return Err(Error::MatrixMismatch("Betti numbers differ".into()));
    }
    Ok(PipelineReport { top, boundaries_equal, betti_hochschild, betti_cyclic_bar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{check_module_identities, signed_cyclic};

    const Q: ScalarDomain = ScalarDomain::Rationals;

    fn alg(p: &str) -> FiniteAlgebra {
        FiniteAlgebra::from_preset(p, Q).unwrap()
    }

    #[test]
    fn identities_hold() {
        for p in ["unit", "truncpoly:2", "group:cyclic:2", "productfield:2"] {
            let m = HochschildModule::new(&alg(p), 4, DEFAULT_BUDGET).unwrap();
            let rep = check_module_identities(&m, true).unwrap();
            assert!(rep.passed(), "{p}: {:?}", rep.failures);
        }
    }

    #[test]
    fn low_degree_operators() {
        let a = alg("truncpoly:2");
        let m = HochschildModule::new(&a, 3, DEFAULT_BUDGET).unwrap();
        // d_0 on A⊗A is multiplication: 1⊗1 ↦ 1, 1⊗x ↦ x, x⊗1 ↦ x, x⊗x ↦ 0
        assert_eq!(m.face(1, 0), Matrix::from_rows(&[[1, 0, 0, 0], [0, 1, 1, 0]]));
        // s_0 on A: a ↦ a⊗1
        assert_eq!(m.degeneracy(0, 0), Matrix::from_rows(&[[1, 0], [0, 0], [0, 1], [0, 0]]));
        let t = signed_cyclic(&m, 1).unwrap();
        assert!((&t * &t).is_identity());
        assert!(!t.is_identity());
    }

    #[test]
    fn hh_values() {
        let b = |p: &str, top: i64| hh(&alg(p), 0..=top, Normalize::Normalized, DEFAULT_BUDGET).unwrap().betti();
        assert_eq!(b("unit", 3), vec![1, 0, 0, 0]);
        assert_eq!(b("truncpoly:2", 4), vec![2, 1, 1, 1, 1]);
        assert_eq!(b("productfield:2", 3), vec![2, 0, 0, 0]);
    }

    #[test]
    fn budget_guard() {
        let e = HochschildModule::new(&alg("truncpoly:3"), 20, DEFAULT_BUDGET);
        assert!(matches!(e, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn pipelines_agree() {
        let r = hh_vs_cyclic_bar(&FiniteGroup::cyclic(2), 4, Q, DEFAULT_BUDGET).unwrap();
        assert!(r.passed());
        // over Q the group algebra has HH concentrated in degree 0
        assert_eq!(r.betti_hochschild, vec![2, 0, 0, 0]);
        let r = hh_vs_cyclic_bar(&FiniteGroup::cyclic(2), 4, ScalarDomain::PrimeField(2), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.betti_hochschild, vec![2, 2, 2, 2]);
        let r = hh_vs_cyclic_bar(&FiniteGroup::trivial(), 3, Q, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.betti_hochschild, vec![1, 0, 0]);
    }
}
