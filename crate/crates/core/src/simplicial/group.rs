//! Finite groups given by multiplication tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a row-major table: `table[a][b] = a * b`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        Self::named("table", table)
    }

    fn named(name: &str, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("table is not square over 0..n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup { name: name.to_string(), table, identity, inverse })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::named(&format!("cyclic:{n}"), table).expect("cyclic tables are groups")
    }

    /// Product of cyclic groups; element `(x_1, .., x_k)` has index in
    /// mixed radix with the first factor most significant.
    pub fn product(orders: &[usize]) -> Self {
        assert!(orders.iter().all(|&o| o > 0), "factor of order zero");
        let n: usize = orders.iter().product();
        let digits = |mut x: usize| {
            let mut d = alloc::vec![0; orders.len()];
            for k in (0..orders.len()).rev() {
                d[k] = x % orders[k];
                x /= orders[k];
            }
            d
        };
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let (da, db) = (digits(a), digits(b));
                        da.iter().zip(&db).zip(orders).fold(0, |acc, ((x, y), o)| acc * o + (x + y) % o)
                    })
                    .collect()
            })
            .collect();
        let label: Vec<String> = orders.iter().map(|o| o.to_string()).collect();
        Self::named(&format!("product:{}", label.join(",")), table).expect("products of cyclic groups are groups")
    }

    /// Permutations of `{0, .., k-1}` in lexicographic order; `(p q)(x) = p(q(x))`.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            perms.push(cur.clone());
            // next permutation in lexicographic order
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index(&q.iter().map(|&x| p[x]).collect()))
                    .collect()
            })
            .collect();
        Self::named(&format!("symmetric:{k}"), table).expect("permutation tables are groups")
    }

    /// `cyclic:n`, `product:a,b,..` or `symmetric:k`.
    pub fn from_preset(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown group preset `{s}`"));
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> =
            args.split(',').map(|a| a.trim().parse::<usize>()).collect::<core::result::Result<_, _>>().map_err(|_| bad())?;
        if nums.is_empty() || nums.contains(&0) {
            return Err(bad());
        }
        match (kind, nums.as_slice()) {
            ("cyclic", [n]) => Ok(Self::cyclic(*n)),
            ("product", orders) => Ok(Self::product(orders)),
            ("symmetric", [k]) if *k <= 5 => Ok(Self::symmetric(*k)),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn product_of(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order()).all(|a| self.mul(a, z) == self.mul(z, a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| self.is_central(a))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn presets() {
        assert_eq!(FiniteGroup::cyclic(4).mul(3, 2), 1);
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.identity(), 0);
        let p = FiniteGroup::from_preset("product:2,3").unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
        assert!(FiniteGroup::from_preset("dihedral:4").is_err());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
    }
}
