//! Quotients of a standard simplex: the image of `Δ[k]` under a vertex labelling.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::delta::MonotoneMap;
use super::set::{Code, SimplicialSet};

/// Simplices of degree `n` are the label sequences `q ∘ φ` for monotone
/// `φ: [n] -> [k]`. Faces delete an entry and degeneracies repeat one, so
/// this is a simplicial subset of the sequences on the labels. With all
/// labels distinct it is `Δ[k]` itself; with one label it is a point.
#[derive(Clone, Debug)]
pub struct SimplexQuotient {
    labels: Vec<i64>,
    top: usize,
    elements: Vec<Vec<Code>>,
}

impl SimplexQuotient {
    pub fn new(labels: Vec<i64>, top: usize) -> Self {
        assert!(!labels.is_empty(), "Δ[k] needs at least one vertex");
        let k = labels.len() - 1;
        let elements = (0..=top)
            .map(|n| {
                let set: BTreeSet<Code> = MonotoneMap::all(n, k)
                    .iter()
                    .map(|phi| phi.images().iter().map(|&v| labels[v]).collect())
                    .collect();
                set.into_iter().collect()
            })
            .collect();
        SimplexQuotient { labels, top, elements }
    }
}

impl SimplicialSet for SimplexQuotient {
    fn name(&self) -> String {
        format!("quotient{:?}", self.labels)
    }

    fn truncation(&self) -> usize {
        self.top
    }

    fn elements(&self, n: usize) -> Vec<Code> {
        self.elements[n].clone()
    }

    fn face(&self, _n: usize, i: usize, x: &Code) -> Code {
        let mut y = x.clone();
        y.remove(i);
        y
    }

    fn degeneracy(&self, _n: usize, j: usize, x: &Code) -> Code {
        let mut y = x.clone();
        y.insert(j, x[j]);
        y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{check_identities, CheckMode};
    use alloc::vec;

    #[test]
    fn standard_simplex_counts() {
        let d2 = SimplexQuotient::new(vec![0, 1, 2], 3);
        // monotone maps [1] -> [2]
        assert_eq!(d2.elements(1).len(), 6);
        assert!(check_identities(&d2, CheckMode::Simplicial).unwrap().passed());
        let glued = SimplexQuotient::new(vec![0, 1, 0], 3);
        assert!(check_identities(&glued, CheckMode::Simplicial).unwrap().passed());
        assert!(matches!(check_identities(&glued, CheckMode::Cyclic), Err(crate::Error::CyclicModeOnNonCyclic)));
    }
}
