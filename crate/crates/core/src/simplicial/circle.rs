//! The simplicial circle `S¹ = Hom_ΔC(-, [0])`.
//!
//! A simplex of degree `n` is a morphism `[n] -> [0]`, determined by its
//! rotation. Operators are precomposition with `δ_i`, `σ_j`, `τ_n`, computed
//! through the normal form. The published codes (`0 = s_0^n(*)` and
//! `i = s_(n-1)..ŝ_(i-1)..s_0(τ)`) are derived by actually applying those
//! degeneracies, not assumed.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::cyclic_category::{CyclicMorphism, Gen};
use super::delta::MonotoneMap;
use super::set::{Code, SimplicialSet};

#[derive(Clone, Debug)]
pub struct Circle {
    top: usize,
    rot_of: Vec<Vec<usize>>,
    code_of: Vec<Vec<usize>>,
}

fn point(n: usize, rot: usize) -> CyclicMorphism {
    CyclicMorphism::new(MonotoneMap::new(0, vec![0; n + 1]).unwrap(), rot).unwrap()
}

fn act(x: &CyclicMorphism, g: Gen) -> usize {
    x.compose(&super::cyclic_category::cyclic_normal_form(&[g]).unwrap()).unwrap().rot
}

impl Circle {
    pub fn new(top: usize) -> Self {
        // one more degree than exposed so that codes of s_j x exist at the top
        let mut rot_of = Vec::with_capacity(top + 2);
        for n in 0..=top + 1 {
            let mut row = vec![0usize];
            for i in 1..=n {
                let mut x = point(1, 1);
                for k in (0..n).filter(|&k| k != i - 1) {
                    x = point(x.source() + 1, act(&x, Gen::Degen { j: k, n: x.source() }));
                }
                row.push(x.rot);
            }
            rot_of.push(row);
        }
        let code_of = rot_of
            .iter()
            .map(|row| {
                let mut inv = vec![usize::MAX; row.len()];
                for (c, &r) in row.iter().enumerate() {
                    assert_eq!(inv[r], usize::MAX, "circle codes are not a bijection");
                    inv[r] = c;
                }
                inv
            })
            .collect();
        Circle { top, rot_of, code_of }
    }

    /// Rotation of the morphism `[n] -> [0]` named by `code`.
    pub fn rotation(&self, n: usize, code: usize) -> usize {
        self.rot_of[n][code]
    }

    fn op(&self, n: usize, x: &Code, g: Gen) -> Code {
        let m = point(n, self.rot_of[n][x[0] as usize]);
        let r = act(&m, g);
        vec![self.code_of[g.source()][r] as i64]
    }
}

impl SimplicialSet for Circle {
    fn name(&self) -> String {
        format!("circle({})", self.top)
    }

    fn truncation(&self) -> usize {
        self.top
    }

    fn elements(&self, n: usize) -> Vec<Code> {
        (0..=n as i64).map(|c| vec![c]).collect()
    }

    fn face(&self, n: usize, i: usize, x: &Code) -> Code {
        self.op(n, x, Gen::Face { i, n })
    }

    fn degeneracy(&self, n: usize, j: usize, x: &Code) -> Code {
        self.op(n, x, Gen::Degen { j, n })
    }

    fn cyclic(&self, n: usize, x: &Code) -> Option<Code> {
        Some(self.op(n, x, Gen::Cyc { n }))
    }

    fn is_cyclic(&self) -> bool {
        true
    }
}
