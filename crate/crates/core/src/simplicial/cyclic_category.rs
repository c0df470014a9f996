//! Connes' cyclic category: morphisms `φ ∘ τ^r` with `φ` in the simplex category.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::delta::{compose, MonotoneMap};
use crate::{Error, Result};

/// Generators of the cyclic category, tagged with their target object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// `δ_i: [n-1] -> [n]`
    Face { i: usize, n: usize },
    /// `σ_j: [n+1] -> [n]`
    Degen { j: usize, n: usize },
    /// `τ_n: [n] -> [n]`
    Cyc { n: usize },
}

impl Gen {
    pub fn source(&self) -> usize {
        match *self {
            Gen::Face { n, .. } => n - 1,
            Gen::Degen { n, .. } => n + 1,
            Gen::Cyc { n } => n,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Gen::Face { n, .. } | Gen::Degen { n, .. } | Gen::Cyc { n } => n,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match *self {
            Gen::Face { i, n } => n >= 1 && i <= n,
            Gen::Degen { j, n } => j <= n,
            Gen::Cyc { .. } => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGenerator(format!("{self:?}")))
        }
    }

    fn morphism(&self) -> CyclicMorphism {
        match *self {
            Gen::Face { i, n } => CyclicMorphism { mono: MonotoneMap::face(i, n), rot: 0 },
            Gen::Degen { j, n } => CyclicMorphism { mono: MonotoneMap::degeneracy(j, n), rot: 0 },
            Gen::Cyc { n } => CyclicMorphism { mono: MonotoneMap::identity(n), rot: usize::from(n > 0) },
        }
    }
}

/// The unique decomposition `mono ∘ τ_m^rot` of a morphism `[m] -> [n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicMorphism {
    pub mono: MonotoneMap,
    pub rot: usize,
}

/// Move one `τ_n` past a simplex generator: `τ_n ∘ g = g' ∘ τ^e`.
fn push_tau(g: Gen) -> (Gen, usize) {
    match g {
        Gen::Face { i: 0, n } => (Gen::Face { i: n, n }, 0),
        Gen::Face { i, n } => (Gen::Face { i: i - 1, n }, 1),
        Gen::Degen { j: 0, n } => (Gen::Degen { j: n, n }, 2),
        Gen::Degen { j, n } => (Gen::Degen { j: j - 1, n }, 1),
        Gen::Cyc { .. } => unreachable!("only simplex generators are pushed"),
    }
}

impl CyclicMorphism {
    pub fn identity(n: usize) -> Self {
        CyclicMorphism { mono: MonotoneMap::identity(n), rot: 0 }
    }

    pub fn new(mono: MonotoneMap, rot: usize) -> Result<Self> {
        if rot > mono.source() {
            return Err(Error::InvalidInput(format!("rotation {rot} on [{}]", mono.source())));
        }
        Ok(CyclicMorphism { mono, rot })
    }

    pub fn source(&self) -> usize {
        self.mono.source()
    }

    pub fn target(&self) -> usize {
        self.mono.target()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &CyclicMorphism) -> Result<CyclicMorphism> {
        if other.target() != self.source() {
            return Err(Error::ObjectMismatch(format!(
                "[{}] -> [{}] after [{}] -> [{}]",
                self.source(),
                self.target(),
                other.source(),
                other.target()
            )));
        }
        // τ^a ∘ ψ = ψ' ∘ τ^c, rewriting along the canonical word of ψ
        let (sigma, delta) = other.mono.factorize();
        let mut word: Vec<Gen> = Vec::with_capacity(sigma.len() + delta.len());
        // composition order: leftmost applied last
        let mut obj = other.source();
        let mut app: Vec<Gen> = Vec::new();
        for &j in &sigma {
            app.push(Gen::Degen { j, n: obj - 1 });
            obj -= 1;
        }
        for &i in &delta {
            app.push(Gen::Face { i, n: obj + 1 });
            obj += 1;
        }
        let mut carry = self.rot;
        for g in app.iter().rev() {
            let mut cur = *g;
            let mut next = 0;
            for _ in 0..carry {
                let (g2, e) = push_tau(cur);
                cur = g2;
                next += e;
            }
            word.push(cur);
            carry = next % (cur.source() + 1);
        }
        let mut mono = MonotoneMap::identity(other.source());
        for g in word.iter().rev() {
            mono = compose(&g.morphism().mono, &mono)?;
        }
        let mono = compose(&self.mono, &mono)?;
        let rot = (carry + other.rot) % (other.source() + 1);
        Ok(CyclicMorphism { mono, rot })
    }

    /// Canonical generator word in composition order: faces, degeneracies, then `τ^rot`.
    pub fn to_word(&self) -> Vec<Gen> {
        let (sigma, delta) = self.mono.factorize();
        let mut app = Vec::new();
        let m = self.source();
        for _ in 0..self.rot {
            app.push(Gen::Cyc { n: m });
        }
        let mut obj = m;
        for &j in &sigma {
            app.push(Gen::Degen { j, n: obj - 1 });
            obj -= 1;
        }
        for &i in &delta {
            app.push(Gen::Face { i, n: obj + 1 });
            obj += 1;
        }
        app.reverse();
        app
    }

    /// Every morphism `[m] -> [n]`.
    pub fn all(m: usize, n: usize) -> Vec<CyclicMorphism> {
        MonotoneMap::all(m, n)
            .into_iter()
            .flat_map(|mono| (0..=m).map(move |rot| CyclicMorphism { mono: mono.clone(), rot }))
            .collect()
    }
}

/// Normal form of a composable word, given in composition order
/// (the first generator is applied last).
pub fn cyclic_normal_form(word: &[Gen]) -> Result<CyclicMorphism> {
    let Some(last) = word.last() else {
        return Err(Error::InvalidInput("empty word has no object".into()));
    };
    for g in word {
        g.validate()?;
    }
    for (k, w) in word.windows(2).enumerate() {
        if w[1].target() != w[0].source() {
            return Err(Error::NonComposableWord(k));
        }
    }
    let mut acc = CyclicMorphism::identity(last.source());
    for g in word.iter().rev() {
        acc = g.morphism().compose(&acc)?;
    }
    Ok(acc)
}

impl fmt::Debug for CyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} ∘ τ^{}", self.mono, self.rot)
    }
}
