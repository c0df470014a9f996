//! The cyclic bicomplex over a window of columns, the extra-degeneracy
//! homotopy, Connes' operator `B` and cyclic homology.

use alloc::format;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::chains::{
    alternating_face_sum, homology, signed_cyclic, total_complex, Bicomplex, HomologyResult, RelationReport, SimplicialModule,
    TotalComplex, Variance,
};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Operators of a cyclic module used by the bicomplex, all with the signed `t`.
pub struct CyclicOperators {
    /// `b_n`, index `n`; `b_0` is the empty map out of degree 0.
    pub b: Vec<Matrix>,
    pub b_prime: Vec<Matrix>,
    /// `(-1)^n t_n`
    pub t: Vec<Matrix>,
    /// `1 + t + .. + t^n`
    pub norm: Vec<Matrix>,
    /// `1 - t`
    pub one_minus_t: Vec<Matrix>,
    /// Extra degeneracy `h_n = t_(n+1) s_n: M_n -> M_(n+1)` (unsigned `t`), for `n < N`.
    pub h: Vec<Matrix>,
    pub ranks: Vec<usize>,
}

impl CyclicOperators {
    pub fn new<M: SimplicialModule + ?Sized>(m: &M) -> Result<Self> {
        if !m.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let top = m.truncation();
        let ranks: Vec<usize> = (0..=top).map(|n| m.rank(n)).collect();
        let mut b = Vec::with_capacity(top + 1);
        let mut b_prime = Vec::with_capacity(top + 1);
        let mut t = Vec::with_capacity(top + 1);
        let mut norm = Vec::with_capacity(top + 1);
        let mut one_minus_t = Vec::with_capacity(top + 1);
        let mut h = Vec::with_capacity(top);
        for n in 0..=top {
            if n == 0 {
                b.push(Matrix::zeros(0, ranks[0]));
                b_prime.push(Matrix::zeros(0, ranks[0]));
            } else {
                b.push(alternating_face_sum(m, n, true));
                b_prime.push(alternating_face_sum(m, n, false));
            }
            let tn = signed_cyclic(m, n).ok_or(Error::NotCyclic)?;
            let id = Matrix::identity(ranks[n]);
            let mut acc = id.clone();
            let mut pow = id.clone();
            for _ in 0..n {
                pow = &tn * &pow;
                acc = &acc + &pow;
            }
            one_minus_t.push(&id - &tn);
            norm.push(acc);
            t.push(tn);
            if n < top {
                h.push(&m.cyclic(n + 1).ok_or(Error::NotCyclic)? * &m.degeneracy(n, n));
            }
        }
        Ok(CyclicOperators { b, b_prime, t, norm, one_minus_t, h, ranks })
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `b(1 - t) = (1 - t)b'` and `b'N = Nb` in every degree, as matrices.
    pub fn relation_report<M: SimplicialModule + ?Sized>(&self, m: &M) -> RelationReport {
        let dom = m.domain();
        let mut rep = RelationReport::default();
        for n in 1..=self.top() {
            let ok = (&self.b[n] * &self.one_minus_t[n]).eq_in(&(&self.one_minus_t[n - 1] * &self.b_prime[n]), &dom);
            rep.record(ok, "b(1-t) = (1-t)b'", || format!("n={n}"));
            let ok = (&self.b_prime[n] * &self.norm[n]).eq_in(&(&self.norm[n - 1] * &self.b[n]), &dom);
            rep.record(ok, "b'N = Nb", || format!("n={n}"));
        }
        rep
    }

    /// Connes' `B_n = (1 - t) h N: M_n -> M_(n+1)`, for `n < N`.
    pub fn connes_b(&self, n: usize) -> Matrix {
        &(&self.one_minus_t[n + 1] * &self.h[n]) * &self.norm[n]
    }
}

/// `b'h + hb' = 1` in degrees `0..N`, which makes the `b'` columns acyclic.
pub fn bprime_homotopy_check<M: SimplicialModule + ?Sized>(m: &M) -> Result<RelationReport> {
    if !m.is_cyclic() {
        return Err(Error::NoUnitStructure);
    }
    let ops = CyclicOperators::new(m)?;
    let dom = m.domain();
    let mut rep = RelationReport::default();
    for n in 0..ops.top() {
        let mut lhs = &ops.b_prime[n + 1] * &ops.h[n];
        if n >= 1 {
            lhs = &lhs + &(&ops.h[n - 1] * &ops.b_prime[n]);
        }
        rep.record(lhs.is_identity_in(&dom), "b'h + hb' = 1", || format!("n={n}"));
    }
    Ok(rep)
}

/// `B² = 0` and `bB + Bb = 0` as matrices, in every degree where both sides exist.
pub fn connes_b_report<M: SimplicialModule + ?Sized>(m: &M) -> Result<RelationReport> {
    let ops = CyclicOperators::new(m)?;
    let dom = m.domain();
    let mut rep = RelationReport::default();
    for n in 0..ops.top() {
        if n + 2 <= ops.top() {
            rep.record((&ops.connes_b(n + 1) * &ops.connes_b(n)).is_zero_in(&dom), "B² = 0", || format!("n={n}"));
        }
        let mut anti = &ops.b[n + 1] * &ops.connes_b(n);
        if n >= 1 {
            anti = &anti + &(&ops.connes_b(n - 1) * &ops.b[n]);
        }
        rep.record(anti.is_zero_in(&dom), "bB + Bb = 0", || format!("n={n}"));
    }
    Ok(rep)
}

/// The cyclic bicomplex restricted to columns `p_lo..=p_hi` and total degree
/// `≤ max_total`. Even columns carry `b`, odd ones `-b'`; the horizontal map
/// out of an odd column is `1 - t`, out of an even one `N`.
#[derive(Clone, Debug)]
pub struct CyclicBicomplex {
    pub columns: (i64, i64),
    pub max_total: i64,
    pub bicomplex: Bicomplex,
    pub total: TotalComplex,
}

pub fn column_window<M: SimplicialModule + ?Sized>(
    m: &M,
    ops: &CyclicOperators,
    p_lo: i64,
    p_hi: i64,
    max_total: i64,
) -> Result<CyclicBicomplex> {
    let top = ops.top() as i64;
    let mut bc = Bicomplex::new(m.domain(), Variance::Homological);
    for p in p_lo..=p_hi {
        for q in 0..=top {
            if p + q > max_total {
                break;
            }
            let qu = q as usize;
            bc.set_rank((p, q), ops.ranks[qu]);
            if q >= 1 {
                let v = if p.rem_euclid(2) == 0 { ops.b[qu].clone() } else { -&ops.b_prime[qu] };
                bc.set_vertical((p, q), v);
            }
            if p > p_lo {
                let hmap = if p.rem_euclid(2) == 1 { ops.one_minus_t[qu].clone() } else { ops.norm[qu].clone() };
                bc.set_horizontal((p, q), hmap);
            }
        }
    }
    let total = total_complex(&bc).map_err(|e| match e {
        Error::SignCheckFailed(p, q) => Error::RelationFailure(format!("cyclic bicomplex anticommutation at ({p}, {q})")),
        Error::NotAComplex(n) => Error::RelationFailure(format!("cyclic bicomplex differential squares to nonzero in degree {n}")),
        e => e,
    })?;
    Ok(CyclicBicomplex { columns: (p_lo, p_hi), max_total, bicomplex: bc, total })
}

/// `CC(M)` with columns `0..=columns`, checked for the cyclic relations.
pub fn cyclic_bicomplex<M: SimplicialModule + ?Sized>(m: &M, columns: usize) -> Result<CyclicBicomplex> {
    let ops = CyclicOperators::new(m)?;
    let rep = ops.relation_report(m);
    if !rep.passed() {
        return Err(Error::RelationFailure(rep.failures.join("; ")));
    }
    column_window(m, &ops, 0, columns as i64, m.truncation() as i64)
}

/// `HC_n(M)` for `n` in `degrees`, from `CC` with `max + 1` columns; the
/// result is compared with one more column (window stability).
pub fn hc<M: SimplicialModule + ?Sized>(m: &M, degrees: RangeInclusive<i64>) -> Result<HomologyResult> {
    let max = (*degrees.end()).max(0) as usize;
    hc_with_columns(m, degrees, max + 1)
}

pub fn hc_with_columns<M: SimplicialModule + ?Sized>(m: &M, degrees: RangeInclusive<i64>, columns: usize) -> Result<HomologyResult> {
    let max = (*degrees.end()).max(0) as usize;
    if columns < max + 1 {
        return Err(Error::WindowTooSmall(columns, max));
    }
    if m.truncation() < max + 2 {
        return Err(Error::TruncationTooSmall(m.truncation()));
    }
    let ops = CyclicOperators::new(m)?;
    let rep = ops.relation_report(m);
    if !rep.passed() {
        return Err(Error::RelationFailure(rep.failures.join("; ")));
    }
    // one degree past what is reported, so the extra column of the wide
    // window really enters the comparison
    let cap = max as i64 + 2;
    let narrow = column_window(m, &ops, 0, columns as i64, cap)?;
    let wide = column_window(m, &ops, 0, columns as i64 + 1, cap)?;
    let h = homology(&narrow.total.complex, degrees.clone())?;
    let h_wide = homology(&wide.total.complex, degrees)?;
    if h.betti() != h_wide.betti() {
        return Err(Error::WindowTooSmall(columns, max));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochschild::{FiniteAlgebra, HochschildModule, DEFAULT_BUDGET};
    use crate::linalg::ScalarDomain;

    const Q: ScalarDomain = ScalarDomain::Rationals;

    fn module(p: &str, top: usize) -> HochschildModule {
        HochschildModule::new(&FiniteAlgebra::from_preset(p, Q).unwrap(), top, DEFAULT_BUDGET).unwrap()
    }

    #[test]
    fn hc_of_ground_field() {
        let m = module("unit", 7);
        assert_eq!(hc(&m, 0..=5).unwrap().betti(), alloc::vec![1, 0, 1, 0, 1, 0]);
        assert_eq!(hc_with_columns(&m, 0..=5, 3), Err(Error::WindowTooSmall(3, 5)));
    }

    #[test]
    fn rank_one_rows() {
        let m = module("unit", 3);
        let ops = CyclicOperators::new(&m).unwrap();
        // on K^(⊗n+1) = K the signed t is (-1)^n
        assert!(ops.one_minus_t[0].is_zero());
        assert_eq!(ops.one_minus_t[1], Matrix::from_rows(&[[2]]));
        assert_eq!(ops.norm[2], Matrix::from_rows(&[[3]]));
    }

    #[test]
    fn homotopy_and_connes() {
        for p in ["unit", "truncpoly:2", "group:cyclic:3"] {
            let m = module(p, 4);
            assert!(bprime_homotopy_check(&m).unwrap().passed(), "{p}");
            assert!(connes_b_report(&m).unwrap().passed(), "{p}");
            assert!(CyclicOperators::new(&m).unwrap().relation_report(&m).passed());
        }
    }

    #[test]
    fn commutative_hc0() {
        let m = module("truncpoly:3", 3);
        assert_eq!(hc(&m, 0..=0).unwrap().betti(), alloc::vec![3]);
    }
}
