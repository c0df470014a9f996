//! Bar constructions of a finite group: `B·G` and the cyclic bar `Γ·G`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::group::FiniteGroup;
use super::set::{Code, SimplicialSet};
use crate::{Error, Result};

/// All tuples of length `len` over `0..base`, lexicographic.
pub(crate) fn tuples(base: usize, len: usize) -> Vec<Code> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0i64; len];
    loop {
        out.push(cur.clone());
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if (cur[k] as usize) < base {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// `B_n G = G^n` with the bar faces; cyclic when a central `z` is given.
#[derive(Clone, Debug)]
pub struct ClassifyingSpace {
    group: FiniteGroup,
    top: usize,
    z: Option<usize>,
}

impl ClassifyingSpace {
    pub fn new(group: FiniteGroup, top: usize, z: Option<usize>) -> Result<Self> {
        if let Some(z) = z {
            if z >= group.order() || !group.is_central(z) {
                return Err(Error::NotCentral(z));
            }
        }
        Ok(ClassifyingSpace { group, top, z })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }
}

impl SimplicialSet for ClassifyingSpace {
    fn name(&self) -> String {
        format!("B({})", self.group.name())
    }

    fn truncation(&self) -> usize {
        self.top
    }

    fn elements(&self, n: usize) -> Vec<Code> {
        tuples(self.group.order(), n)
    }

    fn face(&self, n: usize, i: usize, x: &Code) -> Code {
        let g = &self.group;
        if i == 0 {
            x[1..].to_vec()
        } else if i == n {
            x[..n - 1].to_vec()
        } else {
            let mut y = x[..i - 1].to_vec();
            y.push(g.mul(x[i - 1] as usize, x[i] as usize) as i64);
            y.extend_from_slice(&x[i + 1..]);
            y
        }
    }

    fn degeneracy(&self, _n: usize, j: usize, x: &Code) -> Code {
        let mut y = x.clone();
        y.insert(j, self.group.identity() as i64);
        y
    }

    fn cyclic(&self, n: usize, x: &Code) -> Option<Code> {
        let z = self.z?;
        if n == 0 {
            return Some(x.clone());
        }
        let g = &self.group;
        let prod = g.product_of(x.iter().map(|&v| v as usize));
        let mut y = Vec::with_capacity(n);
        y.push(g.mul(z, g.inv(prod)) as i64);
        y.extend_from_slice(&x[..n - 1]);
        Some(y)
    }

    fn is_cyclic(&self) -> bool {
        self.z.is_some()
    }
}

/// `Γ_n G = G^(n+1)`, the cyclic bar construction.
#[derive(Clone, Debug)]
pub struct CyclicBar {
    group: FiniteGroup,
    top: usize,
}

impl CyclicBar {
    pub fn new(group: FiniteGroup, top: usize) -> Self {
        CyclicBar { group, top }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }
}

impl SimplicialSet for CyclicBar {
    fn name(&self) -> String {
        format!("Gamma({})", self.group.name())
    }

    fn truncation(&self) -> usize {
        self.top
    }

    fn elements(&self, n: usize) -> Vec<Code> {
        tuples(self.group.order(), n + 1)
    }

    fn face(&self, n: usize, i: usize, x: &Code) -> Code {
        let g = &self.group;
        if i == n {
            let mut y = Vec::with_capacity(n);
            y.push(g.mul(x[n] as usize, x[0] as usize) as i64);
            y.extend_from_slice(&x[1..n]);
            y
        } else {
            let mut y = x[..i].to_vec();
            y.push(g.mul(x[i] as usize, x[i + 1] as usize) as i64);
            y.extend_from_slice(&x[i + 2..]);
            y
        }
    }

    fn degeneracy(&self, _n: usize, j: usize, x: &Code) -> Code {
        let mut y = x.clone();
        y.insert(j + 1, self.group.identity() as i64);
        y
    }

    fn cyclic(&self, n: usize, x: &Code) -> Option<Code> {
        let mut y = Vec::with_capacity(n + 1);
        y.push(x[n]);
        y.extend_from_slice(&x[..n]);
        Some(y)
    }

    fn is_cyclic(&self) -> bool {
        true
    }
}
