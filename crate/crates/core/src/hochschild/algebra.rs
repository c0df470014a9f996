//! Finite-dimensional unital algebras given by structure constants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{Rational, ScalarDomain, SparseVec};
use crate::simplicial::FiniteGroup;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    labels: Vec<String>,
    /// `table[i][j] = e_i e_j`
    table: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    domain: ScalarDomain,
    commutative: bool,
}

fn normalize(v: impl IntoIterator<Item = (usize, Rational)>, dom: &ScalarDomain) -> Result<SparseVec> {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, x) in v {
        *acc.entry(k).or_default() += &x;
    }
    let mut out = Vec::new();
    for (k, x) in acc {
        let x = dom.reduce(&x)?;
        if !x.is_zero() {
            out.push((k, x));
        }
    }
    Ok(out)
}

impl FiniteAlgebra {
    /// Validates associativity on all basis triples and the unit laws.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<SparseVec>>,
        unit: SparseVec,
        domain: ScalarDomain,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::InvalidInput("algebra of dimension 0".into()));
        }
        if table.len() != d || table.iter().any(|row| row.len() != d) {
            return Err(Error::DimensionMismatch(format!("structure table must be {d}x{d}")));
        }
        let check = |v: &SparseVec| v.iter().all(|(k, _)| *k < d);
        if !table.iter().flatten().all(check) || !check(&unit) {
            return Err(Error::DimensionMismatch(format!("coefficient index out of range for dimension {d}")));
        }
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(|v| normalize(v, &domain)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let unit = normalize(unit, &domain)?;
        let mut alg = FiniteAlgebra { name: name.into(), labels, table, unit, domain, commutative: false };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let left = alg.mul(&alg.table[i][j], &[(k, Rational::ONE)]);
                    let right = alg.mul(&[(i, Rational::ONE)], &alg.table[j][k]);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..d {
            let e = vec![(i, Rational::ONE)];
            if alg.mul(&alg.unit, &e) != e || alg.mul(&e, &alg.unit) != e {
                return Err(Error::NoUnit);
            }
        }
        alg.commutative = (0..d).all(|i| (0..d).all(|j| alg.table[i][j] == alg.table[j][i]));
        Ok(alg)
    }

    /// `K[G]` with basis the group elements in table order.
    pub fn group_algebra(g: &FiniteGroup, domain: ScalarDomain) -> Result<Self> {
        let n = g.order();
        let table = (0..n).map(|a| (0..n).map(|b| vec![(g.mul(a, b), Rational::ONE)]).collect()).collect();
        let labels = (0..n).map(|k| format!("g{k}")).collect();
        Self::new(format!("K[{}]", g.name()), labels, table, vec![(g.identity(), Rational::ONE)], domain)
    }

    /// `K[x]/(x^k)` with basis `1, x, .., x^(k-1)`.
    pub fn truncated_polynomial(k: usize, domain: ScalarDomain) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInput("truncpoly needs k ≥ 1".into()));
        }
        let table =
            (0..k).map(|a| (0..k).map(|b| if a + b < k { vec![(a + b, Rational::ONE)] } else { Vec::new() }).collect()).collect();
        let labels = (0..k).map(|a| format!("x^{a}")).collect();
        Self::new(format!("K[x]/(x^{k})"), labels, table, vec![(0, Rational::ONE)], domain)
    }

    /// `K^m` with basis the orthogonal idempotents.
    pub fn product_field(m: usize, domain: ScalarDomain) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("productfield needs m ≥ 1".into()));
        }
        let table = (0..m).map(|a| (0..m).map(|b| if a == b { vec![(a, Rational::ONE)] } else { Vec::new() }).collect()).collect();
        let labels = (0..m).map(|a| format!("e{a}")).collect();
        let unit = (0..m).map(|a| (a, Rational::ONE)).collect();
        Self::new(format!("K^{m}"), labels, table, unit, domain)
    }

    /// The ground field itself.
    pub fn unit_algebra(domain: ScalarDomain) -> Result<Self> {
        Self::new("K", vec!["1".to_string()], vec![vec![vec![(0, Rational::ONE)]]], vec![(0, Rational::ONE)], domain)
    }

    /// `unit`, `truncpoly:k`, `productfield:m`, `group:<group preset>`.
    pub fn from_preset(s: &str, domain: ScalarDomain) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown algebra preset '{s}'"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        if s == "unit" {
            return Self::unit_algebra(domain);
        }
        let (head, rest) = s.split_once(':').ok_or_else(bad)?;
        match head {
            "truncpoly" => Self::truncated_polynomial(num(rest)?, domain),
            "productfield" => Self::product_field(num(rest)?, domain),
            "group" => Self::group_algebra(&FiniteGroup::from_preset(rest)?, domain),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn unit(&self) -> &[(usize, Rational)] {
        &self.unit
    }

    /// Index of the unit if it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit.as_slice() {
            [(k, x)] if x.is_one() => Some(*k),
            _ => None,
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<SparseVec>] {
        &self.table
    }

    pub fn mul(&self, a: &[(usize, Rational)], b: &[(usize, Rational)]) -> SparseVec {
        let mut out = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, c) in &self.table[*i][*j] {
                    out.push((*k, &xy * c));
                }
            }
        }
        normalize(out, &self.domain).expect("entries already reduced")
    }

    /// Same structure constants over another domain.
    pub fn with_domain(&self, domain: ScalarDomain) -> Result<Self> {
        Self::new(self.name.clone(), self.labels.clone(), self.table.clone(), self.unit.clone(), domain)
    }
}

/// Every algebra preset, in a fixed order.
pub const ALGEBRA_PRESETS: &[&str] = &[
    "unit",
    "truncpoly:2",
    "truncpoly:3",
    "productfield:2",
    "productfield:3",
    "group:cyclic:2",
    "group:cyclic:3",
    "group:cyclic:4",
    "group:symmetric:3",
    "group:product:2,3",
];

#[cfg(test)]
mod tests {
    use super::*;

    const Q: ScalarDomain = ScalarDomain::Rationals;

    #[test]
    fn presets_are_valid() {
        for p in ALGEBRA_PRESETS {
            let a = FiniteAlgebra::from_preset(p, Q).unwrap();
            assert!(a.dim() >= 1);
        }
        assert!(!FiniteAlgebra::from_preset("group:symmetric:3", Q).unwrap().is_commutative());
        assert!(FiniteAlgebra::from_preset("truncpoly:3", Q).unwrap().is_commutative());
        assert!(FiniteAlgebra::from_preset("bogus", Q).is_err());
    }

    #[test]
    fn group_algebra_z2() {
        let a = FiniteAlgebra::group_algebra(&FiniteGroup::cyclic(2), Q).unwrap();
        assert_eq!(a.basis_product(1, 1), &[(0, Rational::ONE)]);
        assert_eq!(a.unit_index(), Some(0));
    }

    #[test]
    fn broken_tables() {
        // x·x = 1 with x·1 = 0: not unital
        let one = |k| vec![(k, Rational::ONE)];
        let t = vec![vec![one(0), Vec::new()], vec![Vec::new(), one(0)]];
        let e = FiniteAlgebra::new("bad", vec!["1".into(), "x".into()], t, one(0), Q);
        assert!(matches!(e, Err(Error::NotAssociative(..)) | Err(Error::NoUnit)));
        // associative but 1 is not a unit
        let t = vec![vec![one(0), Vec::new()], vec![Vec::new(), Vec::new()]];
        let e = FiniteAlgebra::new("bad", vec!["1".into(), "x".into()], t, one(0), Q);
        assert_eq!(e, Err(Error::NoUnit));
    }

    #[test]
    fn product_field_unit_is_not_a_basis_vector() {
        let a = FiniteAlgebra::product_field(2, Q).unwrap();
        assert_eq!(a.unit_index(), None);
        assert_eq!(a.mul(a.unit(), a.unit()), a.unit().to_vec());
    }
}
