//! Chain-level `I`, `S`, `B` and Connes' periodicity sequence
//! `HH_n -> HC_n -> HC_(n-2) -> HH_(n-1)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::bicomplex::{column_window, connes_b_report, CyclicBicomplex, CyclicOperators};
use crate::chains::{
    chain_complex, exactness_at, homology, induced_map, ChainComplex, ChainMap, HomologyResult, RelationReport, SimplicialModule,
    TotalComplex,
};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// `S: Tot_n -> Tot_(n-2)`, dropping columns 0 and 1 and shifting the rest.
pub fn s_component(tot: &TotalComplex, n: i64) -> Matrix {
    let rows = tot.complex.rank(n - 2);
    let cols = tot.complex.rank(n);
    let mut trip = Vec::new();
    for blk in tot.blocks(n) {
        let (p, q) = blk.at;
        if p < 2 {
            continue;
        }
        let t = tot.block(n - 2, (p - 2, q)).expect("shifted block inside the window");
        trip.extend((0..blk.size).map(|k| (t.offset + k, blk.offset + k, crate::Rational::ONE)));
    }
    Matrix::from_triplets(rows, cols, trip)
}

/// `Tot_n -> M_(n+1)`, `z ↦ B(z_0)` with `z_0` the column-0 component.
pub fn b_component(tot: &TotalComplex, ops: &CyclicOperators, n: i64) -> Matrix {
    let q = n as usize;
    &ops.connes_b(q) * &tot.projection(n, (0, n))
}

/// The three chain maps on a window `CC` with columns `0..=C`.
pub struct PeriodicityMaps {
    /// `C(M) -> Tot`
    pub i: ChainMap,
    /// `Tot -> Tot`, degree `-2`
    pub s: ChainMap,
    /// `Tot -> C(M)`, degree `+1`, anticommuting with the differentials
    pub b: ChainMap,
}

pub fn periodicity_maps(hoch: &ChainComplex, cc: &CyclicBicomplex, ops: &CyclicOperators) -> Result<PeriodicityMaps> {
    let tot = &cc.total;
    let top = tot.complex.hi();
    let i_maps: BTreeMap<i64, Matrix> = (0..=top.min(hoch.hi())).map(|n| (n, tot.inclusion(n, (0, n)))).collect();
    let s_maps: BTreeMap<i64, Matrix> = (2..=top).map(|n| (n, s_component(tot, n))).collect();
    let b_maps: BTreeMap<i64, Matrix> =
        (0..=top.min(hoch.hi() - 1).min(ops.top() as i64 - 1)).map(|n| (n, b_component(tot, ops, n))).collect();
    Ok(PeriodicityMaps {
        i: ChainMap::new(hoch, &tot.complex, 0, i_maps, false)?,
        s: ChainMap::new(&tot.complex, &tot.complex, -2, s_maps, false)?,
        b: ChainMap::new(&tot.complex, hoch, 1, b_maps, true)?,
    })
}

/// Induced map in degree `n`, or the zero map when either side is outside
/// the computed range (a zero group).
fn induced(f: &ChainMap, src: &ChainComplex, hs: &HomologyResult, tgt: &ChainComplex, ht: &HomologyResult, n: i64) -> Result<Matrix> {
    let cols = hs.group(n).map_or(0, |g| g.betti);
    let rows = ht.group(n + f.shift).map_or(0, |g| g.betti);
    if cols == 0 || rows == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    induced_map(f, src, hs, tgt, ht, n)
}

/// Induced maps out of degree `n`: `I: HH_n -> HC_n`, `S: HC_n -> HC_(n-2)`,
/// `B: HC_n -> HH_(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbiMaps {
    pub n: i64,
    pub i: Matrix,
    pub s: Matrix,
    pub b: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbiNode {
    pub node: String,
    pub im_dim: usize,
    pub ker_dim: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbiReport {
    pub max_degree: i64,
    pub hh: Vec<usize>,
    pub hc: Vec<usize>,
    /// `B² = 0`, `bB + Bb = 0` and the cyclic relations behind `CC`.
    pub relations: RelationReport,
    pub maps: Vec<SbiMaps>,
    pub nodes: Vec<SbiNode>,
    /// `S ∘ I = 0` on homology in every degree.
    pub s_after_i_zero: bool,
}

impl SbiReport {
    pub fn passed(&self) -> bool {
        self.relations.passed() && self.s_after_i_zero && self.nodes.iter().all(|n| n.exact)
    }
}

/// Exactness of the periodicity sequence at every node that only involves
/// groups of degree `≤ max_degree`. Needs a field and `N ≥ max_degree + 1`.
pub fn connes_maps<M: SimplicialModule + ?Sized>(m: &M, max_degree: usize) -> Result<SbiReport> {
    let dom = m.domain();
    if !dom.is_field() {
        return Err(Error::DomainNotField);
    }
    if m.truncation() < max_degree + 1 {
        return Err(Error::TruncationTooSmall(m.truncation()));
    }
    let ops = CyclicOperators::new(m)?;
    let mut relations = ops.relation_report(m);
    relations.merge(connes_b_report(m)?);
    if !relations.passed() {
        return Err(Error::RelationFailure(relations.failures.join("; ")));
    }
    let d = max_degree as i64;
    let hoch = chain_complex(m)?;
    let cc = column_window(m, &ops, 0, d + 1, d + 1)?;
    let maps = periodicity_maps(&hoch, &cc, &ops)?;
    let tot = &cc.total.complex;
    let h_hh = homology(&hoch, 0..=d)?;
    let h_hc = homology(tot, 0..=d)?;

    let mut all = Vec::new();
    for n in 0..=d {
        all.push(SbiMaps {
            n,
            i: induced(&maps.i, &hoch, &h_hh, tot, &h_hc, n)?,
            s: induced(&maps.s, tot, &h_hc, tot, &h_hc, n)?,
            // HH_(n+1) is outside the range at the top
            b: if n < d { induced(&maps.b, tot, &h_hc, &hoch, &h_hh, n)? } else { Matrix::zeros(0, h_hc.group(n).map_or(0, |g| g.betti)) },
        });
    }
    let hh_dim = |n: i64| h_hh.group(n).map_or(0, |g| g.betti);
    let hc_dim = |n: i64| h_hc.group(n).map_or(0, |g| g.betti);
    let mut nodes = Vec::new();
    let mut push = |node: String, f: &Matrix, g: &Matrix| -> Result<()> {
        let e = exactness_at(f, g, dom)?;
        nodes.push(SbiNode { node, im_dim: e.im_dim, ker_dim: e.ker_dim, exact: e.exact });
        Ok(())
    };
    for n in 0..=d {
        let at = n as usize;
        let b_in = if n >= 1 { all[at - 1].b.clone() } else { Matrix::zeros(hh_dim(0), 0) };
        push(format!("HH_{n}"), &b_in, &all[at].i)?;
        push(format!("HC_{n} [I,S]"), &all[at].i, &all[at].s)?;
        if n >= 2 {
            push(format!("HC_{} [S,B]", n - 2), &all[at].s, &all[at - 2].b)?;
        }
    }
    let s_after_i_zero = all.iter().all(|x| (&x.s * &x.i).is_zero_in(&dom));
    Ok(SbiReport {
        max_degree: d,
        hh: (0..=d).map(hh_dim).collect(),
        hc: (0..=d).map(hc_dim).collect(),
        relations,
        maps: all,
        nodes,
        s_after_i_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochschild::{FiniteAlgebra, HochschildModule, DEFAULT_BUDGET};
    use crate::linalg::ScalarDomain;

    fn report(p: &str, d: usize) -> SbiReport {
        let a = FiniteAlgebra::from_preset(p, ScalarDomain::Rationals).unwrap();
        connes_maps(&HochschildModule::new(&a, d + 1, DEFAULT_BUDGET).unwrap(), d).unwrap()
    }

    #[test]
    fn ground_field() {
        let r = report("unit", 4);
        assert!(r.passed(), "{:?}", r.nodes);
        assert_eq!(r.hc, alloc::vec![1, 0, 1, 0, 1]);
        // S: HC_2 -> HC_0 is an isomorphism
        assert_eq!(r.maps[2].s.shape(), (1, 1));
        assert!(!r.maps[2].s.is_zero());
        assert!(r.maps[0].i.is_identity());
    }

    #[test]
    fn dual_numbers_and_group_algebra() {
        for p in ["truncpoly:2", "group:cyclic:2"] {
            let r = report(p, 3);
            assert!(r.passed(), "{p}: {:?}", r.nodes);
            // I is the identity in degree 0
            assert_eq!(crate::linalg::rank(&r.maps[0].i, ScalarDomain::Rationals).unwrap(), r.hh[0]);
        }
    }
}
