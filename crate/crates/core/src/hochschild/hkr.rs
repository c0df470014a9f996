//! The Hochschild–Kostant–Rosenberg maps `π: HH_n -> Ωⁿ` and
//! `ε: Ωⁿ -> HH_n`.

use alloc::vec::Vec;

use super::algebra::FiniteAlgebra;
use super::forms::DifferentialForms;
use super::module::{decode, encode, HochschildModule};
use crate::chains::{alternating_face_sum, chain_complex, homology, HomologyResult};
use crate::linalg::{Matrix, Rational, ScalarDomain, SparseVec};
use crate::{Error, Result};

/// Chain-level `π_n: A^(⊗n+1) -> Ωⁿ`, `(a_0, .., a_n) ↦ a_0 da_1 .. da_n`.
/// Checks `π ∘ b = 0`.
pub fn hkr_pi(forms: &DifferentialForms, n: usize) -> Result<Matrix> {
    let alg = forms.algebra();
    if n > forms.top() {
        return Err(Error::RangeExceedsComplex(n as i64));
    }
    let p = forms.omega(n).projection().clone();
    let m = HochschildModule::new(alg, n + 1, u128::MAX)?;
    let b = alternating_face_sum(&m, n + 1, true);
    if !(&p * &b).is_zero_in(&alg.domain()) {
        return Err(Error::NotAChainMap(n as i64));
    }
    Ok(p)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        out.push((perm.clone(), inv % 2 == 1));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { return out };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Chain-level `ε_n: Ωⁿ -> A^(⊗n+1)`,
/// `a_0 da_1 .. da_n ↦ (1/n!) Σ sgn(σ) (a_0, a_σ(1), .., a_σ(n))`, evaluated
/// on the canonical lift of each basis form. Checks that images are cycles.
pub fn hkr_epsilon_chain(forms: &DifferentialForms, n: usize) -> Result<Matrix> {
    let alg = forms.algebra();
    if alg.domain() != ScalarDomain::Rationals {
        return Err(Error::PositiveCharacteristic);
    }
    let d = alg.dim();
    let perms = permutations(n);
    let scale = Rational::new(1, (1..=n as i64).product());
    let lift = forms.omega(n).section();
    let cols: Vec<SparseVec> = lift
        .columns()
        .iter()
        .map(|col| {
            let mut v = Vec::new();
            for (idx, x) in col {
                let t = decode(*idx, d, n + 1);
                for (s, odd) in &perms {
                    let target = encode(core::iter::once(t[0]).chain(s.iter().map(|&k| t[k + 1])), d);
                    let c = &(x * &scale);
                    v.push((target, if *odd { -c } else { c.clone() }));
                }
            }
            v
        })
        .collect();
    let eps = Matrix::from_columns(d.pow(n as u32 + 1), cols);
    if n >= 1 {
        let m = HochschildModule::new(alg, n, u128::MAX)?;
        if !(&alternating_face_sum(&m, n, true) * &eps).is_zero() {
            return Err(Error::NotAChainMap(n as i64));
        }
    }
    Ok(eps)
}

/// `ε` on homology: the matrix `Ωⁿ -> HH_n` in the chosen homology basis of
/// the unnormalized Hochschild complex.
pub fn hkr_epsilon(forms: &DifferentialForms, n: usize) -> Result<(Matrix, HomologyResult)> {
    let eps = hkr_epsilon_chain(forms, n)?;
    let m = HochschildModule::new(forms.algebra(), n + 1, u128::MAX)?;
    let c = chain_complex(&m)?;
    let h = homology(&c, n as i64..=n as i64)?;
    let betti = h.groups[0].betti;
    let mut cols = Vec::new();
    for col in eps.columns() {
        let coords = h.class_of(n as i64, col, &c)?.ok_or(Error::NotAChainMap(n as i64))?;
        cols.push(coords.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect());
    }
    Ok((Matrix::from_columns(betti, cols), h))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkrDegree {
    pub n: usize,
    pub omega_dim: usize,
    pub pi_eps_identity: bool,
    /// `HH_n` and `ε ∘ π = 1` on it, when homology was requested.
    pub hh_dim: Option<usize>,
    pub eps_pi_identity: Option<bool>,
}

/// `π ∘ ε = 1` on `Ωⁿ` for `n ≤ top`, and optionally `ε ∘ π = 1` on `HH_n`
/// (which holds exactly when both are isomorphisms).
pub fn hkr_report(alg: &FiniteAlgebra, top: usize, on_homology: bool, budget: u128) -> Result<Vec<HkrDegree>> {
    if alg.domain() != ScalarDomain::Rationals {
        return Err(Error::PositiveCharacteristic);
    }
    let forms = DifferentialForms::new(alg, top, budget)?;
    super::module::tensor_count(alg.dim(), top + 1, budget)?;
    let mut out = Vec::new();
    for n in 0..=top {
        let pi = hkr_pi(&forms, n)?;
        let eps = hkr_epsilon_chain(&forms, n)?;
        let pi_eps_identity = (&pi * &eps).is_identity();
        let (hh_dim, eps_pi_identity) = if on_homology {
            let (e, h) = hkr_epsilon(&forms, n)?;
            let g = &h.groups[0];
            // π on homology, in the basis of representatives
            let p_h = Matrix::from_columns(forms.dim(n), g.representatives().iter().map(|r| pi.apply(r)).collect());
            let ok = g.betti == forms.dim(n) && (&e * &p_h).is_identity();
            (Some(g.betti), Some(ok))
        } else {
            (None, None)
        };
        out.push(HkrDegree { n, omega_dim: forms.dim(n), pi_eps_identity, hh_dim, eps_pi_identity });
    }
    Ok(out)
}
