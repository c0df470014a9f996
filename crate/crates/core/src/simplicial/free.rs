//! The free cyclic set `F(Y)` on a simplicial set and the evaluation map.
//!
//! `F(Y)_n = S¹_n × Y_n` with `S¹_n` identified with the rotations `τ_n^r`.
//! A morphism `θ` of the cyclic category acts by rewriting `τ_n^r ∘ θ` into
//! normal form `φ ∘ τ^(r')` and sending `(r, y)` to `(r', φ^* y)`; for
//! `θ = τ_n` this is the strict rotation `(r, y) ↦ (r + 1, y)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::cyclic_category::{cyclic_normal_form, CyclicMorphism, Gen};
use super::delta::MonotoneMap;
use super::set::{act, check_identities, CheckMode, Code, IdentityReport, SimplicialMap, SimplicialSet};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct FreeCyclic<Y> {
    base: Y,
}

impl<Y: SimplicialSet> FreeCyclic<Y> {
    pub fn new(base: Y) -> Self {
        FreeCyclic { base }
    }

    pub fn base(&self) -> &Y {
        &self.base
    }

    fn op(&self, n: usize, x: &Code, g: Gen) -> Code {
        let r = x[0] as usize;
        let rot = CyclicMorphism::new(MonotoneMap::identity(n), r).expect("rotation in range");
        let nf = rot.compose(&cyclic_normal_form(&[g]).expect("valid generator")).expect("composable");
        let y = act(&self.base, &x[1..].to_vec(), &nf.mono);
        let mut out = Vec::with_capacity(y.len() + 1);
        out.push(nf.rot as i64);
        out.extend(y);
        out
    }
}

impl<Y: SimplicialSet> SimplicialSet for FreeCyclic<Y> {
    fn name(&self) -> String {
        format!("F({})", self.base.name())
    }

    fn truncation(&self) -> usize {
        self.base.truncation()
    }

    fn elements(&self, n: usize) -> Vec<Code> {
        let ys = self.base.elements(n);
        let mut out = Vec::with_capacity((n + 1) * ys.len());
        for r in 0..=n as i64 {
            for y in &ys {
                let mut c = Vec::with_capacity(y.len() + 1);
                c.push(r);
                c.extend_from_slice(y);
                out.push(c);
            }
        }
        out
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

/// `ev: F(X) -> X`, `(r, x) ↦ t^r x`.
pub fn evaluation_map<'a, X: SimplicialSet>(fx: &'a FreeCyclic<X>) -> Result<SimplicialMap<'a>> {
    let x = &fx.base;
    if !x.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    Ok(SimplicialMap::new(fx, x, move |n, c: &Code| {
        let mut y = c[1..].to_vec();
        for _ in 0..c[0] {
            y = x.cyclic(n, &y).expect("cyclic base");
        }
        y
    }))
}

/// The unit `Y -> F(Y)`, `y ↦ (0, y)`; simplicial but not cyclic.
pub fn unit_section<'a, Y: SimplicialSet>(fy: &'a FreeCyclic<Y>) -> SimplicialMap<'a> {
    SimplicialMap::new(&fy.base, fy, |_, y: &Code| {
        let mut c = Vec::with_capacity(y.len() + 1);
        c.push(0);
        c.extend_from_slice(y);
        c
    })
}

/// Everything that makes `F` left adjoint to the forgetful functor, checked
/// on the given `Y`: `F(Y)` is cyclic, the unit is simplicial, the counit on
/// `F(Y)` is cyclic, and both triangle identities hold elementwise.
pub fn adjunction_report<Y: SimplicialSet>(y: Y) -> Result<IdentityReport> {
    let fy = FreeCyclic::new(y);
    let ffy = FreeCyclic::new(&fy);
    let mut rep = check_identities(&fy, CheckMode::Cyclic)?;
    rep.merge(unit_section(&fy).check(CheckMode::Simplicial)?);
    let ev = evaluation_map(&ffy)?;
    rep.merge(ev.check(CheckMode::Cyclic)?);
    let eta_f = unit_section(&ffy);
    rep.merge(eta_f.check(CheckMode::Simplicial)?);

    let mut tri = IdentityReport::default();
    for n in 0..=fy.truncation() {
        for x in fy.elements(n) {
            // ev ∘ F(η)(r, y) = ev(r, (0, y)) must give back (r, y)
            let mut inner = Vec::with_capacity(x.len() + 1);
            inner.push(x[0]);
            inner.push(0);
            inner.extend_from_slice(&x[1..]);
            tri.record(ev.apply(n, &inner) == x, "ev ∘ F(unit) = id", n, (0, 0), &x);
            // ev ∘ unit on the cyclic set F(Y) is the identity
            tri.record(ev.apply(n, &eta_f.apply(n, &x)) == x, "ev ∘ unit = id", n, (0, 0), &x);
        }
    }
    rep.merge(tri);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{Circle, ClassifyingSpace, CyclicBar, FiniteGroup, SimplexQuotient};
    use alloc::vec;

    #[test]
    fn free_on_point_is_circle() {
        let f = FreeCyclic::new(SimplexQuotient::new(vec![0], 4));
        let c = Circle::new(4);
        for n in 0..=4 {
            assert_eq!(f.elements(n).len(), n + 1);
            for x in f.elements(n) {
                let cx = vec![x[0]];
                if n > 0 {
                    for i in 0..=n {
                        assert_eq!(f.face(n, i, &x)[0..1], c.face(n, i, &cx)[..]);
                    }
                }
                assert_eq!(f.cyclic(n, &x).unwrap()[0..1], c.cyclic(n, &cx).unwrap()[..]);
            }
        }
    }

    #[test]
    fn cardinality_and_suite() {
        let f = FreeCyclic::new(Circle::new(4));
        assert_eq!(f.elements(1).len(), 4);
        let b = FreeCyclic::new(ClassifyingSpace::new(FiniteGroup::cyclic(2), 4, None).unwrap());
        assert!(check_identities(&b, CheckMode::Cyclic).unwrap().passed());
    }

    #[test]
    fn evaluation_on_circle_adds() {
        let f = FreeCyclic::new(Circle::new(4));
        let ev = evaluation_map(&f).unwrap();
        for n in 0..=4 {
            for x in f.elements(n) {
                assert_eq!(ev.apply(n, &x), vec![(x[0] + x[1]) % (n as i64 + 1)]);
            }
        }
        assert!(ev.check(CheckMode::Cyclic).unwrap().passed());
    }

    #[test]
    fn evaluation_needs_cyclic() {
        let f = FreeCyclic::new(ClassifyingSpace::new(FiniteGroup::cyclic(2), 2, None).unwrap());
        assert!(matches!(evaluation_map(&f), Err(Error::NotCyclic)));
    }

    #[test]
    fn adjunction() {
        let rep = adjunction_report(CyclicBar::new(FiniteGroup::cyclic(2), 3)).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
    }
}
