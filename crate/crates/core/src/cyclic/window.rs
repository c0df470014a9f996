//! Truncated windows of the negative and periodic cyclic complexes, with the
//! `S`-tower as evidence of stabilization.
//!
//! Indexing: the full-plane complex has a column for every `p ∈ Z`, column
//! `p` carrying `b` when `p` is even and `-b'` when odd, total degree `p + q`.
//! The negative complex keeps the columns `p ≤ 0`. A window of `k` periods
//! keeps the columns `p ≥ -2k`, which is a quotient complex; the inverse
//! limit over `k` is the product totalization. For the periodic variant the
//! window in degree `n` is `CC` shifted by `2k`, so it computes `HC_(n+2k)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::bicomplex::{column_window, CyclicOperators};
use super::connes::s_component;
use crate::chains::{chain_complex, homology, induced_map, ChainMap, HomologyResult, SimplicialModule};
use crate::linalg::rank;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WindowVariant {
    Negative,
    Periodic,
}

/// `HC_n <- HC_(n+2) <- .. <- HC_(n+2k)` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerDegree {
    pub n: i64,
    /// `dim HC_(n+2j)` for `j = 0..=k`
    pub dims: Vec<usize>,
    /// `S: HC_(n+2j+2) -> HC_(n+2j)` is an isomorphism, `j = 0..k`
    pub s_iso: Vec<bool>,
    /// Least `j` from which every later map is an isomorphism.
    pub stable_from: Option<usize>,
}

impl TowerDegree {
    /// Per-step flag, monotone in `j`.
    pub fn stabilized(&self) -> Vec<bool> {
        (0..self.s_iso.len()).map(|j| self.stable_from.is_some_and(|s| j >= s)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerReport {
    pub variant: WindowVariant,
    pub window: usize,
    pub periods: usize,
    pub degrees: Vec<TowerDegree>,
    /// `(m, dim HH_m)` over the top half of the window.
    pub hh_top: Vec<(i64, usize)>,
    /// `HH` was found to vanish on the whole top half.
    pub stable: bool,
}

/// Number of periods `k` for a window `W`, and the largest degree the
/// window touches for requested degrees up to `hi`.
pub fn window_extent(window: usize, hi: i64) -> (usize, i64) {
    let k = (window / 2).max(1);
    (k, hi.max(0) + 2 * k as i64)
}

/// Homology of the truncated variant complex in `degrees`, plus the tower
/// report. Needs a field and `N ≥ max + 2k + 1` where `k = max(1, W/2)`.
pub fn hc_window<M: SimplicialModule + ?Sized>(
    variant: WindowVariant,
    m: &M,
    degrees: RangeInclusive<i64>,
    window: usize,
) -> Result<(HomologyResult, TowerReport)> {
    if window == 0 {
        return Err(Error::WindowTooSmall(0, 1));
    }
    let dom = m.domain();
    if !dom.is_field() {
        return Err(Error::DomainNotField);
    }
    let hi = (*degrees.end()).max(0);
    let (k, top) = window_extent(window, hi);
    let lo_col = -2 * k as i64;
    if *degrees.start() < lo_col {
        return Err(Error::WindowTooSmall(window, degrees.start().unsigned_abs() as usize));
    }
    if (m.truncation() as i64) < top + 1 {
        return Err(Error::TruncationTooSmall(m.truncation()));
    }
    let ops = CyclicOperators::new(m)?;
    let rep = ops.relation_report(m);
    if !rep.passed() {
        return Err(Error::RelationFailure(rep.failures.join("; ")));
    }

    let p_hi = match variant {
        WindowVariant::Negative => 0,
        WindowVariant::Periodic => hi + 1,
    };
    let var = column_window(m, &ops, lo_col, p_hi, hi + 1)?;
    let h_var = homology(&var.total.complex, degrees.clone())?;

    // the tower lives in the ordinary first-quadrant CC
    let cc = column_window(m, &ops, 0, top + 1, top + 1)?;
    let tot = &cc.total.complex;
    let h_cc = homology(tot, 0..=top)?;
    let s_maps: BTreeMap<i64, _> = (2..=top).map(|n| (n, s_component(&cc.total, n))).collect();
    let s = ChainMap::new(tot, tot, -2, s_maps, false)?;
    let dim = |n: i64| if n < 0 { 0 } else { h_cc.group(n).map_or(0, |g| g.betti) };

    let mut tower = Vec::new();
    for n in degrees.clone() {
        if n > hi {
            break;
        }
        let dims: Vec<usize> = (0..=k as i64).map(|j| dim(n + 2 * j)).collect();
        let mut s_iso = Vec::with_capacity(k);
        for j in 0..k as i64 {
            let (src, tgt) = (n + 2 * j + 2, n + 2 * j);
            let iso = if dim(src) != dim(tgt) {
                false
            } else if dim(src) == 0 {
                true
            } else {
                rank(&induced_map(&s, tot, &h_cc, tot, &h_cc, src)?, dom)? == dim(src)
            };
            s_iso.push(iso);
        }
        let stable_from = (0..=k).find(|&j| s_iso[j..].iter().all(|&x| x)).filter(|&j| j < k || k == 0);
        tower.push(TowerDegree { n, dims, s_iso, stable_from });
    }

    let hoch = chain_complex(m)?;
    let h_hh = homology(&hoch, top - k as i64..=top)?;
    let hh_top: Vec<(i64, usize)> = h_hh.groups.iter().map(|g| (g.degree, g.betti)).collect();
    let stable = hh_top.iter().all(|&(_, b)| b == 0);
    Ok((h_var, TowerReport { variant, window, periods: k, degrees: tower, hh_top, stable }))
}
