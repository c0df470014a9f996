//! Kähler differentials, their exterior powers and the de Rham complex of a
//! commutative finite-dimensional algebra.
//!
//! `Ωⁿ` is presented as a quotient of `A^(⊗n+1)`, the tensor
//! `a_0 ⊗ a_1 ⊗ .. ⊗ a_n` standing for `a_0 da_1 .. da_n`. The relations are
//! the Leibniz rule in every slot `k ≥ 1` and the vanishing of squares in
//! adjacent slots, spanned by `e ⊗ e` and `e ⊗ f + f ⊗ e` on basis elements.

use alloc::vec;
use alloc::vec::Vec;

use super::algebra::FiniteAlgebra;
use super::module::{decode, encode, tensor_count};
use crate::linalg::{rank_kernel_image, Matrix, Rational, ScalarDomain, SparseVec, SubspaceBasis};
use crate::{Error, Result};

/// A quotient `ambient / relations` with canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedModule {
    relations: SubspaceBasis,
    projection: Matrix,
    section: Matrix,
}

impl PresentedModule {
    pub fn new(ambient: usize, dom: ScalarDomain, relations: &[SparseVec]) -> Result<Self> {
        let relations = SubspaceBasis::span(ambient, dom, relations)?;
        let (projection, section) = relations.quotient_maps();
        Ok(PresentedModule { relations, projection, section })
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient()
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn relations(&self) -> &SubspaceBasis {
        &self.relations
    }

    /// `ambient -> quotient`
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// `quotient -> ambient`, with `projection ∘ section = 1`.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn class_of(&self, v: &[(usize, Rational)]) -> SparseVec {
        self.projection.apply(v)
    }
}

/// Expand `x_0 ⊗ .. ⊗ x_n` into basis tensors.
fn tensor(factors: &[SparseVec], d: usize) -> SparseVec {
    let mut acc: Vec<(usize, Rational)> = vec![(0, Rational::ONE)];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (i, x) in &acc {
            for (k, y) in f {
                next.push((i * d + k, x * y));
            }
        }
        acc = next;
    }
    acc
}

fn basis(k: usize) -> SparseVec {
    vec![(k, Rational::ONE)]
}

/// `Ω⁰ .. Ω^top` of a commutative algebra, with the de Rham differential.
#[derive(Clone, Debug)]
pub struct DifferentialForms {
    alg: FiniteAlgebra,
    omegas: Vec<PresentedModule>,
}

impl DifferentialForms {
    pub fn new(alg: &FiniteAlgebra, top: usize, budget: u128) -> Result<Self> {
        if !alg.is_commutative() {
            return Err(Error::NotCommutative);
        }
        if !alg.domain().is_field() {
            return Err(Error::DomainNotField);
        }
        tensor_count(alg.dim(), top + 1, budget)?;
        let omegas = (0..=top).map(|n| Self::presentation(alg, n)).collect::<Result<Vec<_>>>()?;
        Ok(DifferentialForms { alg: alg.clone(), omegas })
    }

    fn presentation(alg: &FiniteAlgebra, n: usize) -> Result<PresentedModule> {
        let d = alg.dim();
        let ambient = d.pow(n as u32 + 1);
        let mut rels: Vec<SparseVec> = Vec::new();
        if n >= 1 {
            // Leibniz: a_0 ⊗ .. ⊗ bc ⊗ .. = a_0 b ⊗ .. ⊗ c ⊗ .. + a_0 c ⊗ .. ⊗ b ⊗ ..
            for k in 1..=n {
                for idx in 0..d.pow(n as u32 + 2) {
                    let t = decode(idx, d, n + 2);
                    let (a0, b, c) = (t[0], t[k], t[k + 1]);
                    let rest = |slot: SparseVec, first: SparseVec| -> Vec<SparseVec> {
                        let mut fs = vec![first];
                        fs.extend((1..k).map(|j| basis(t[j])));
                        fs.push(slot);
                        fs.extend((k + 2..n + 2).map(|j| basis(t[j])));
                        fs
                    };
                    let mut v = tensor(&rest(alg.basis_product(b, c).to_vec(), basis(a0)), d);
                    let neg = |w: SparseVec| w.into_iter().map(|(i, x)| (i, -x));
                    v.extend(neg(tensor(&rest(basis(c), alg.basis_product(a0, b).to_vec()), d)));
                    v.extend(neg(tensor(&rest(basis(b), alg.basis_product(a0, c).to_vec()), d)));
                    rels.push(v);
                }
            }
            // squares in adjacent slots
            for k in 1..n {
                for idx in 0..ambient {
                    let t = decode(idx, d, n + 1);
                    let (b, c) = (t[k], t[k + 1]);
                    if b > c {
                        continue;
                    }
                    let mut v = vec![(idx, Rational::ONE)];
                    if b < c {
                        let mut s = t.clone();
                        s.swap(k, k + 1);
                        v.push((encode(s, d), Rational::ONE));
                    }
                    rels.push(v);
                }
            }
        }
        PresentedModule::new(ambient, alg.domain(), &rels)
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }

    pub fn top(&self) -> usize {
        self.omegas.len() - 1
    }

    pub fn omega(&self, n: usize) -> &PresentedModule {
        &self.omegas[n]
    }

    pub fn dim(&self, n: usize) -> usize {
        self.omegas[n].dim()
    }

    /// The chain-level `a_0 ⊗ .. ↦ 1 ⊗ a_0 ⊗ ..` from `A^(⊗n+1)` to `A^(⊗n+2)`.
    fn d_chain(&self, n: usize) -> Matrix {
        let d = self.alg.dim();
        let unit = self.alg.unit().to_vec();
        let cols = (0..d.pow(n as u32 + 1))
            .map(|idx| {
                let mut fs = vec![unit.clone()];
                fs.extend(decode(idx, d, n + 1).into_iter().map(basis));
                tensor(&fs, d)
            })
            .collect();
        Matrix::from_columns(d.pow(n as u32 + 2), cols)
    }

    /// `d: Ωⁿ -> Ωⁿ⁺¹`; checks that relations go to relations.
    pub fn differential(&self, n: usize) -> Result<Matrix> {
        if n + 1 > self.top() {
            return Err(Error::RangeExceedsComplex(n as i64 + 1));
        }
        let dc = self.d_chain(n);
        let p = self.omegas[n + 1].projection();
        let rel = self.omegas[n].relations().to_matrix();
        if !(&(p * &dc) * &rel).is_zero_in(&self.alg.domain()) {
            return Err(Error::InvalidInput("de Rham differential does not preserve relations".into()));
        }
        Ok(&(p * &dc) * self.omegas[n].section())
    }

    /// `a · ω` for `a ∈ A`.
    pub fn action(&self, a: &[(usize, Rational)], n: usize, omega: &[(usize, Rational)]) -> SparseVec {
        let d = self.alg.dim();
        let lift = self.omegas[n].section().apply(omega);
        let mut out = Vec::new();
        for (idx, x) in lift {
            let t = decode(idx, d, n + 1);
            let head = self.alg.mul(a, &basis(t[0]));
            let mut fs = vec![head];
            fs.extend(t[1..].iter().map(|&k| basis(k)));
            out.extend(tensor(&fs, d).into_iter().map(|(i, y)| (i, &y * &x)));
        }
        self.omegas[n].class_of(&out)
    }

    /// `(a_0 da_1..da_p) ∧ (a'_0 da'_1..da'_q) = a_0 a'_0 da_1..da_p da'_1..da'_q`.
    pub fn wedge(&self, p: usize, u: &[(usize, Rational)], q: usize, v: &[(usize, Rational)]) -> Result<SparseVec> {
        if p + q > self.top() {
            return Err(Error::RangeExceedsComplex((p + q) as i64));
        }
        let d = self.alg.dim();
        let lu = self.omegas[p].section().apply(u);
        let lv = self.omegas[q].section().apply(v);
        let mut out = Vec::new();
        for (i, x) in &lu {
            let s = decode(*i, d, p + 1);
            for (j, y) in &lv {
                let t = decode(*j, d, q + 1);
                let mut fs = vec![self.alg.basis_product(s[0], t[0]).to_vec()];
                fs.extend(s[1..].iter().chain(&t[1..]).map(|&k| basis(k)));
                let xy = x * y;
                out.extend(tensor(&fs, d).into_iter().map(|(k, z)| (k, &z * &xy)));
            }
        }
        Ok(self.omegas[p + q].class_of(&out))
    }

    /// The class of `a_0 da_1 .. da_n` for basis indices.
    pub fn form(&self, slots: &[usize]) -> SparseVec {
        let n = slots.len() - 1;
        self.omegas[n].class_of(&[(encode(slots.iter().copied(), self.alg.dim()), Rational::ONE)])
    }
}

/// `Ω¹_A = A ⊗ A / (ab ⊗ c − a ⊗ bc + ca ⊗ b)`.
pub fn kaehler_one(alg: &FiniteAlgebra) -> Result<PresentedModule> {
    omega_power(alg, 1)
}

/// `Ωⁿ_A = Λⁿ_A Ω¹_A` as a presented module.
pub fn omega_power(alg: &FiniteAlgebra, n: usize) -> Result<PresentedModule> {
    if !alg.is_commutative() {
        return Err(Error::NotCommutative);
    }
    DifferentialForms::presentation(alg, n)
}

/// The de Rham complex `Ω⁰ -> Ω¹ -> ..` and its cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeRham {
    pub dims: Vec<usize>,
    pub differentials: Vec<Matrix>,
    /// `H⁰ .. H^(top-1)`; the top degree would need the next differential.
    pub cohomology: Vec<usize>,
}

pub fn derham(alg: &FiniteAlgebra, top: usize, budget: u128) -> Result<DeRham> {
    let forms = DifferentialForms::new(alg, top + 1, budget)?;
    let dom = alg.domain();
    let differentials = (0..=top).map(|n| forms.differential(n)).collect::<Result<Vec<_>>>()?;
    for n in 1..differentials.len() {
        if !(&differentials[n] * &differentials[n - 1]).is_zero_in(&dom) {
            return Err(Error::NotAComplex(n as i64));
        }
    }
    let mut cohomology = Vec::new();
    for n in 0..=top {
        let (_, ker, _) = rank_kernel_image(&differentials[n], dom)?;
        let im = if n == 0 { 0 } else { rank_kernel_image(&differentials[n - 1], dom)?.0 };
        cohomology.push(ker.dim() - im);
    }
    Ok(DeRham { dims: (0..=top + 1).map(|n| forms.dim(n)).collect(), differentials, cohomology })
}
