//! Truncated simplicial and cyclic sets given by formulas, and the exhaustive
//! identity checker.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Canonical element code: a tuple of integers.
pub type Code = Vec<i64>;

/// A simplicial set known up to degree `truncation()`.
///
/// Faces and degeneracies take the degree of their input. `degeneracy` is
/// only required to be meaningful when the output degree is within the
/// truncation.
pub trait SimplicialSet {
    fn name(&self) -> String;
    fn truncation(&self) -> usize;
    /// Elements of degree `n`, sorted.
    fn elements(&self, n: usize) -> Vec<Code>;
    fn face(&self, n: usize, i: usize, x: &Code) -> Code;
    fn degeneracy(&self, n: usize, j: usize, x: &Code) -> Code;
    /// The cyclic operator `t_n`, for cyclic sets.
    fn cyclic(&self, _n: usize, _x: &Code) -> Option<Code> {
        None
    }
    fn is_cyclic(&self) -> bool {
        false
    }
}

impl<S: SimplicialSet + ?Sized> SimplicialSet for &S {
    fn name(&self) -> String {
        (**self).name()
    }
    fn truncation(&self) -> usize {
        (**self).truncation()
    }
    fn elements(&self, n: usize) -> Vec<Code> {
        (**self).elements(n)
    }
    fn face(&self, n: usize, i: usize, x: &Code) -> Code {
        (**self).face(n, i, x)
    }
    fn degeneracy(&self, n: usize, j: usize, x: &Code) -> Code {
        (**self).degeneracy(n, j, x)
    }
    fn cyclic(&self, n: usize, x: &Code) -> Option<Code> {
        (**self).cyclic(n, x)
    }
    fn is_cyclic(&self) -> bool {
        (**self).is_cyclic()
    }
}

impl<S: SimplicialSet + ?Sized> SimplicialSet for Box<S> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn truncation(&self) -> usize {
        (**self).truncation()
    }
    fn elements(&self, n: usize) -> Vec<Code> {
        (**self).elements(n)
    }
    fn face(&self, n: usize, i: usize, x: &Code) -> Code {
        (**self).face(n, i, x)
    }
    fn degeneracy(&self, n: usize, j: usize, x: &Code) -> Code {
        (**self).degeneracy(n, j, x)
    }
    fn cyclic(&self, n: usize, x: &Code) -> Option<Code> {
        (**self).cyclic(n, x)
    }
    fn is_cyclic(&self) -> bool {
        (**self).is_cyclic()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Simplicial,
    Cyclic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub relation: &'static str,
    pub degree: usize,
    pub indices: (usize, usize),
    pub element: Code,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails in degree {} at (i, j) = {:?} on {:?}", self.relation, self.degree, self.indices, self.element)
    }
}

/// Instance counts per relation and every violated instance (up to a cap).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checked: BTreeMap<&'static str, usize>,
    pub failures: usize,
    pub violations: Vec<Violation>,
}

const VIOLATION_CAP: usize = 64;

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn instances(&self) -> usize {
        self.checked.values().sum()
    }

    pub(crate) fn record(&mut self, ok: bool, relation: &'static str, degree: usize, indices: (usize, usize), element: &Code) {
        *self.checked.entry(relation).or_insert(0) += 1;
        if !ok {
            self.failures += 1;
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(Violation { relation, degree, indices, element: element.clone() });
            }
        }
    }

    pub fn merge(&mut self, other: IdentityReport) {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_insert(0) += v;
        }
        self.failures += other.failures;
        for v in other.violations {
            if self.violations.len() < VIOLATION_CAP {
                self.violations.push(v);
            }
        }
    }
}

/// Exhaustively check the simplicial identities (and in cyclic mode the
/// cyclic ones) on every element up to the truncation.
pub fn check_identities<S: SimplicialSet + ?Sized>(spec: &S, mode: CheckMode) -> Result<IdentityReport> {
    if mode == CheckMode::Cyclic && !spec.is_cyclic() {
        return Err(Error::CyclicModeOnNonCyclic);
    }
    let top = spec.truncation();
    let sets: Vec<BTreeSet<Code>> = (0..=top).map(|n| spec.elements(n).into_iter().collect()).collect();
    let mut rep = IdentityReport::default();
    let d = |n: usize, i: usize, x: &Code| spec.face(n, i, x);
    let s = |n: usize, j: usize, x: &Code| spec.degeneracy(n, j, x);

    for n in 0..=top {
        for x in &sets[n] {
            if n >= 1 {
                for i in 0..=n {
                    rep.record(sets[n - 1].contains(&d(n, i, x)), "face closure", n, (i, 0), x);
                }
            }
            if n < top {
                for j in 0..=n {
                    rep.record(sets[n + 1].contains(&s(n, j, x)), "degeneracy closure", n, (j, 0), x);
                }
            }
            // d_i d_j = d_{j-1} d_i for i < j
            if n >= 2 {
                for j in 1..=n {
                    for i in 0..j {
                        let ok = d(n - 1, i, &d(n, j, x)) == d(n - 1, j - 1, &d(n, i, x));
                        rep.record(ok, "d_i d_j = d_(j-1) d_i", n, (i, j), x);
                    }
                }
            }
            if n < top {
                for j in 0..=n {
                    let sx = s(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = d(n + 1, i, &sx);
                        let (ok, name) = if i < j {
                            (n >= 1 && lhs == s(n - 1, j - 1, &d(n, i, x)), "d_i s_j = s_(j-1) d_i")
                        } else if i == j || i == j + 1 {
                            (&lhs == x, "d_i s_j = id")
                        } else {
                            (lhs == s(n - 1, j, &d(n, i - 1, x)), "d_i s_j = s_j d_(i-1)")
                        };
                        rep.record(ok, name, n, (i, j), x);
                    }
                }
            }
            // s_i s_j = s_(j+1) s_i for i <= j
            if n + 2 <= top {
                for j in 0..=n {
                    for i in 0..=j {
                        let ok = s(n + 1, i, &s(n, j, x)) == s(n + 1, j + 1, &s(n, i, x));
                        rep.record(ok, "s_i s_j = s_(j+1) s_i", n, (i, j), x);
                    }
                }
            }
            if mode == CheckMode::Cyclic {
                check_cyclic_at(spec, &sets, n, x, &mut rep);
            }
        }
    }
    Ok(rep)
}

fn check_cyclic_at<S: SimplicialSet + ?Sized>(spec: &S, sets: &[BTreeSet<Code>], n: usize, x: &Code, rep: &mut IdentityReport) {
    let top = spec.truncation();
    let t = |n: usize, x: &Code| spec.cyclic(n, x).expect("cyclic operator missing");
    let tx = t(n, x);
    rep.record(sets[n].contains(&tx), "t closure", n, (0, 0), x);
    // t^(n+1) = id
    let mut y = x.clone();
    for _ in 0..=n {
        y = t(n, &y);
    }
    rep.record(&y == x, "t^(n+1) = id", n, (0, 0), x);
    if n >= 1 {
        rep.record(spec.face(n, 0, &tx) == spec.face(n, n, x), "d_0 t = d_n", n, (0, 0), x);
        for i in 1..=n {
            let ok = spec.face(n, i, &tx) == t(n - 1, &spec.face(n, i - 1, x));
            rep.record(ok, "d_i t = t d_(i-1)", n, (i, 0), x);
        }
    }
    if n < top {
        let ok = spec.degeneracy(n, 0, &tx) == t(n + 1, &t(n + 1, &spec.degeneracy(n, n, x)));
        rep.record(ok, "s_0 t = t^2 s_n", n, (0, 0), x);
        for i in 1..=n {
            let ok = spec.degeneracy(n, i, &tx) == t(n + 1, &spec.degeneracy(n, i - 1, x));
            rep.record(ok, "s_i t = t s_(i-1)", n, (i, 0), x);
        }
    }
}

/// A degreewise map between simplicial sets.
pub struct SimplicialMap<'a> {
    pub source: &'a dyn SimplicialSet,
    pub target: &'a dyn SimplicialSet,
    f: Box<dyn Fn(usize, &Code) -> Code + 'a>,
}

impl<'a> SimplicialMap<'a> {
    pub fn new(
        source: &'a dyn SimplicialSet,
        target: &'a dyn SimplicialSet,
        f: impl Fn(usize, &Code) -> Code + 'a,
    ) -> Self {
        SimplicialMap { source, target, f: Box::new(f) }
    }

    pub fn apply(&self, n: usize, x: &Code) -> Code {
        (self.f)(n, x)
    }

    /// Naturality with respect to faces and degeneracies, and `t` in cyclic
    /// mode, on every source element up to the common truncation.
    pub fn check(&self, mode: CheckMode) -> Result<IdentityReport> {
        if mode == CheckMode::Cyclic && !(self.source.is_cyclic() && self.target.is_cyclic()) {
            return Err(Error::CyclicModeOnNonCyclic);
        }
        let top = self.source.truncation().min(self.target.truncation());
        let targets: Vec<BTreeSet<Code>> = (0..=top).map(|n| self.target.elements(n).into_iter().collect()).collect();
        let (src, tgt) = (self.source, self.target);
        let mut rep = IdentityReport::default();
        for n in 0..=top {
            for x in src.elements(n) {
                let fx = self.apply(n, &x);
                rep.record(targets[n].contains(&fx), "map lands in target", n, (0, 0), &x);
                if n >= 1 {
                    for i in 0..=n {
                        let ok = self.apply(n - 1, &src.face(n, i, &x)) == tgt.face(n, i, &fx);
                        rep.record(ok, "f d_i = d_i f", n, (i, 0), &x);
                    }
                }
                if n < top {
                    for j in 0..=n {
                        let ok = self.apply(n + 1, &src.degeneracy(n, j, &x)) == tgt.degeneracy(n, j, &fx);
                        rep.record(ok, "f s_j = s_j f", n, (j, 0), &x);
                    }
                }
                if mode == CheckMode::Cyclic {
                    let ok = src.cyclic(n, &x).map(|y| self.apply(n, &y)) == tgt.cyclic(n, &fx);
                    rep.record(ok, "f t = t f", n, (0, 0), &x);
                }
            }
        }
        Ok(rep)
    }
}

/// `φ^* x` for a monotone `φ: [m] -> [n]` and `x` of degree `n`: faces in
/// decreasing order of the omitted values, then degeneracies in increasing
/// order of the merged values.
pub fn act<S: SimplicialSet + ?Sized>(spec: &S, x: &Code, phi: &super::delta::MonotoneMap) -> Code {
    let (sigma, delta) = phi.factorize();
    let mut deg = phi.target();
    let mut y = x.clone();
    for &i in delta.iter().rev() {
        y = spec.face(deg, i, &y);
        deg -= 1;
    }
    for &j in sigma.iter().rev() {
        y = spec.degeneracy(deg, j, &y);
        deg += 1;
    }
    y
}
