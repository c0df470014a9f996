use std::collections::{BTreeMap, VecDeque};

use cychom_core::simplicial::{CyclicMorphism, Gen};

// The cyclic category modelled independently: a morphism [m] -> [n] is a
// nondecreasing f: Z -> Z with f(x + m + 1) = f(x) + n + 1, up to adding a
// multiple of n + 1. It is stored as f(0..=m) normalized to 0 <= f(0) <= n.
// τ_n is x ↦ x - 1.

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Periodic {
    pub m: usize,
    pub n: usize,
    pub v: Vec<i64>,
}

impl Periodic {
    pub fn new(m: usize, n: usize, mut v: Vec<i64>) -> Self {
        let p = n as i64 + 1;
        let shift = v[0].div_euclid(p);
        v.iter_mut().for_each(|x| *x -= shift * p);
        assert!(v.windows(2).all(|w| w[0] <= w[1]) && v[m] <= v[0] + p, "not a cyclic morphism: {v:?}");
        Periodic { m, n, v }
    }

    pub fn eval(&self, x: i64) -> i64 {
        let q = x.div_euclid(self.m as i64 + 1);
        let r = x.rem_euclid(self.m as i64 + 1) as usize;
        self.v[r] + q * (self.n as i64 + 1)
    }

    /// `self ∘ other`
    pub fn after(&self, other: &Periodic) -> Periodic {
        assert_eq!(other.n, self.m);
        Periodic::new(other.m, self.n, (0..=other.m as i64).map(|x| self.eval(other.eval(x))).collect())
    }

    pub fn generator(g: Gen) -> Periodic {
        match g {
            Gen::Face { i, n } => Periodic::new(n - 1, n, (0..n).map(|x| if x < i { x as i64 } else { x as i64 + 1 }).collect()),
            Gen::Degen { j, n } => {
                Periodic::new(n + 1, n, (0..=n + 1).map(|x| if x <= j { x as i64 } else { x as i64 - 1 }).collect())
            }
            Gen::Cyc { n } => Periodic::new(n, n, (0..=n as i64).map(|x| x - 1).collect()),
        }
    }

    pub fn identity(n: usize) -> Periodic {
        Periodic::new(n, n, (0..=n as i64).collect())
    }

    pub fn of(f: &CyclicMorphism) -> Periodic {
        let (m, n) = (f.source(), f.target());
        let mono = Periodic::new(m, n, f.mono.images().iter().map(|&x| x as i64).collect());
        let tau = Periodic::generator(Gen::Cyc { n: m });
        (0..f.rot).fold(mono, |acc, _| acc.after(&tau))
    }
}

/// Composite of a word in composition order (first entry applied last).
pub fn model_of_word(word: &[Gen]) -> Periodic {
    let start = Periodic::identity(word.last().unwrap().source());
    word.iter().rev().fold(start, |acc, &g| Periodic::generator(g).after(&acc))
}

pub fn generators_from(obj: usize, cap: usize) -> Vec<Gen> {
    let mut out = vec![Gen::Cyc { n: obj }];
    if obj < cap {
        out.extend((0..=obj + 1).map(|i| Gen::Face { i, n: obj + 1 }));
    }
    if obj > 0 {
        out.extend((0..obj).map(|j| Gen::Degen { j, n: obj - 1 }));
    }
    out
}

/// Every morphism between objects `<= top`, reached by postcomposing
/// generators, with one word (composition order) for each.
pub fn closure(top: usize) -> BTreeMap<Periodic, Vec<Gen>> {
    let mut seen: BTreeMap<Periodic, Vec<Gen>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for n in 0..=top {
        seen.insert(Periodic::identity(n), vec![]);
        queue.push_back(Periodic::identity(n));
    }
    while let Some(f) = queue.pop_front() {
        for g in generators_from(f.n, top) {
            let h = Periodic::generator(g).after(&f);
            if !seen.contains_key(&h) {
                let mut w = vec![g];
                w.extend(seen[&f].iter().copied());
                seen.insert(h.clone(), w);
                queue.push_back(h);
            }
        }
    }
    seen
}

pub fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
