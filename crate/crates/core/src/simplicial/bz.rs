//! `B·Z` as a cyclic set with `z = 1`, materialized only on the simplices
//! reachable from the image of the circle, and the map `S¹ -> B·Z`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::circle::Circle;
use super::set::{Code, SimplicialMap, SimplicialSet};

/// Operators of `B·Z` on integer tuples; `t(g) = (1 - Σg, g_1, .., g_(n-1))`.
pub fn bz_face(n: usize, i: usize, x: &Code) -> Code {
    if i == 0 {
        x[1..].to_vec()
    } else if i == n {
        x[..n - 1].to_vec()
    } else {
        let mut y = x[..i - 1].to_vec();
        y.push(x[i - 1] + x[i]);
        y.extend_from_slice(&x[i + 1..]);
        y
    }
}

pub fn bz_degeneracy(j: usize, x: &Code) -> Code {
    let mut y = x.clone();
    y.insert(j, 0);
    y
}

pub fn bz_cyclic(n: usize, x: &Code) -> Code {
    if n == 0 {
        return x.clone();
    }
    let mut y = Vec::with_capacity(n);
    y.push(1 - x.iter().sum::<i64>());
    y.extend_from_slice(&x[..n - 1]);
    y
}

/// Image of the circle code `i` in degree `n`: `0` goes to the zero tuple and
/// `i ≥ 1` to `s_(n-1)..ŝ_(i-1)..s_0 (1)`, evaluated with the bar degeneracies.
pub fn circle_code_image(n: usize, code: usize) -> Code {
    if code == 0 {
        return vec![0; n];
    }
    let mut x = vec![1];
    for k in (0..n).filter(|&k| k != code - 1) {
        x = bz_degeneracy(k, &x);
    }
    x
}

/// The part of `B·Z` generated by the circle's image under all operators.
#[derive(Clone, Debug)]
pub struct LazyBZ {
    top: usize,
    support: Vec<BTreeSet<Code>>,
}

/// Materialization stops here; the circle's image is closed, so a correct
/// map never gets close.
const SUPPORT_CAP: usize = 1 << 16;

impl LazyBZ {
    pub fn new(top: usize) -> Self {
        let mut support: Vec<BTreeSet<Code>> =
            (0..=top).map(|n| (0..=n).map(|c| circle_code_image(n, c)).collect()).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for n in 0..=top {
                let current: Vec<Code> = support[n].iter().cloned().collect();
                for x in &current {
                    let mut found = vec![(n, bz_cyclic(n, x))];
                    if n >= 1 {
                        found.extend((0..=n).map(|i| (n - 1, bz_face(n, i, x))));
                    }
                    if n < top {
                        found.extend((0..=n).map(|j| (n + 1, bz_degeneracy(j, x))));
                    }
                    for (m, y) in found {
                        if support[m].len() < SUPPORT_CAP && support[m].insert(y) {
                            changed = true;
                        }
                    }
                }
            }
        }
        LazyBZ { top, support }
    }

    pub fn support_size(&self, n: usize) -> usize {
        self.support[n].len()
    }
}

impl SimplicialSet for LazyBZ {
    fn name(&self) -> String {
        "B(Z)".into()
    }

    fn truncation(&self) -> usize {
        self.top
    }

    fn elements(&self, n: usize) -> Vec<Code> {
        self.support[n].iter().cloned().collect()
    }

    fn face(&self, n: usize, i: usize, x: &Code) -> Code {
        bz_face(n, i, x)
    }

    fn degeneracy(&self, _n: usize, j: usize, x: &Code) -> Code {
        bz_degeneracy(j, x)
    }

    fn cyclic(&self, n: usize, x: &Code) -> Option<Code> {
        Some(bz_cyclic(n, x))
    }

    fn is_cyclic(&self) -> bool {
        true
    }
}

/// The map `S¹ -> B·Z` sending the circle code `i` to [`circle_code_image`].
pub fn circle_to_bz<'a>(circle: &'a Circle, bz: &'a LazyBZ) -> SimplicialMap<'a> {
    SimplicialMap::new(circle, bz, |n, x: &Code| circle_code_image(n, x[0] as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::CheckMode;

    #[test]
    fn low_degree_images() {
        assert_eq!(circle_code_image(1, 1), vec![1]);
        assert_eq!(circle_code_image(1, 0), vec![0]);
        assert_eq!(circle_code_image(2, 1), vec![1, 0]);
        assert_eq!(circle_code_image(2, 2), vec![0, 1]);
    }

    #[test]
    fn map_is_cyclic() {
        let c = Circle::new(6);
        let b = LazyBZ::new(6);
        let rep = circle_to_bz(&c, &b).check(CheckMode::Cyclic).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
        // the image is already closed
        assert_eq!(b.support_size(4), 5);
    }
}
