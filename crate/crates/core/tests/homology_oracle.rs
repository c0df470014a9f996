mod common;

use common::{bar_complex, circle_complex, dense_of, simplicial_chains, DenseComplex};
use cychom_core::chains::{chain_complex, homology, linearize, LinearizedSet, Normalize};
use cychom_core::simplicial::{Circle, ClassifyingSpace, FiniteGroup, SimplexQuotient, SimplicialSet};
use cychom_core::ScalarDomain;
use num_bigint::BigInt;
use proptest::prelude::*;

fn betti<S: SimplicialSet>(set: S, dom: ScalarDomain, mode: Normalize, max: i64) -> Vec<usize> {
    homology(&linearize(set, dom, mode).unwrap(), 0..=max).unwrap().betti()
}

#[test]
fn circle_against_interval_quotient() {
    let oracle = circle_complex(6);
    assert!(oracle.squares_to_zero());
    assert_eq!(oracle.betti_q(), [1, 1, 0, 0, 0, 0]);
    for mode in [Normalize::Unnormalized, Normalize::Normalized] {
        assert_eq!(betti(Circle::new(6), ScalarDomain::Rationals, mode, 5), oracle.betti_q());
        assert_eq!(betti(Circle::new(6), ScalarDomain::PrimeField(2), mode, 5), oracle.betti_mod(2));
        let hz = homology(&linearize(Circle::new(6), ScalarDomain::Integers, mode).unwrap(), 0..=5).unwrap();
        for (g, (free, torsion)) in hz.groups.iter().zip(oracle.integral()) {
            assert_eq!((g.betti, g.torsion.clone()), (free, torsion));
        }
    }
}

/// Boundary matrices of the library's `B·G` against the bar formulas,
/// matched through the element codes.
fn bar_boundaries_agree(order: usize, top: usize) {
    let oracle = bar_complex(order, top);
    let lin = LinearizedSet::new(ClassifyingSpace::new(FiniteGroup::cyclic(order), top, None).unwrap(), ScalarDomain::Integers);
    let c = chain_complex(&lin).unwrap();
    let tuples: Vec<Vec<Vec<usize>>> = (0..=top).map(|n| common::tuples(order, n)).collect();
    let pos = |n: usize, k: usize| -> usize {
        let code: Vec<usize> = lin.basis(n)[k].iter().map(|&x| x as usize).collect();
        tuples[n].binary_search(&code).unwrap()
    };
    for n in 1..=top {
        let lib = dense_of(&c.boundary(n as i64));
        for (r, row) in lib.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                assert_eq!(x, oracle.d[n][pos(n - 1, r)][pos(n, k)], "d_{n} of B(Z/{order})");
            }
        }
    }
}

#[test]
fn classifying_space_boundaries() {
    bar_boundaries_agree(2, 5);
    bar_boundaries_agree(3, 4);
}

#[test]
fn classifying_space_integral_homology() {
    for order in [2usize, 3] {
        let oracle = bar_complex(order, 5);
        let expect: Vec<(usize, Vec<BigInt>)> = oracle.integral();
        let o = BigInt::from(order);
        assert_eq!(
            expect,
            vec![(1, vec![]), (0, vec![o.clone()]), (0, vec![]), (0, vec![o]), (0, vec![])],
            "oracle for Z/{order}"
        );
        for mode in [Normalize::Unnormalized, Normalize::Normalized] {
            let set = ClassifyingSpace::new(FiniteGroup::cyclic(order), 5, None).unwrap();
            let h = homology(&linearize(set, ScalarDomain::Integers, mode).unwrap(), 0..=4).unwrap();
            let got: Vec<(usize, Vec<BigInt>)> = h.groups.iter().map(|g| (g.betti, g.torsion.clone())).collect();
            assert_eq!(got, expect);
        }
    }
}

#[test]
fn classifying_space_mod_two() {
    let oracle = bar_complex(2, 6);
    assert_eq!(oracle.betti_mod(2), [1; 6]);
    let set = ClassifyingSpace::new(FiniteGroup::cyclic(2), 6, None).unwrap();
    assert_eq!(betti(set, ScalarDomain::PrimeField(2), Normalize::Normalized, 5), oracle.betti_mod(2));
}

fn quotient_oracle(q: &SimplexQuotient) -> DenseComplex {
    let elements: Vec<Vec<Vec<i64>>> = (0..=q.truncation()).map(|n| q.elements(n)).collect();
    simplicial_chains(&elements, |_, i, x| {
        let mut y = x.clone();
        y.remove(i);
        y
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalization_is_a_quasi_isomorphism(labels in prop::collection::vec(0i64..3, 1..5), p in prop::sample::select(vec![2u64, 3])) {
        let q = SimplexQuotient::new(labels, 4);
        let oracle = quotient_oracle(&q);
        for (dom, expect) in [(ScalarDomain::Rationals, oracle.betti_q()), (ScalarDomain::PrimeField(p), oracle.betti_mod(p))] {
            let un = betti(q.clone(), dom, Normalize::Unnormalized, 3);
            let no = betti(q.clone(), dom, Normalize::Normalized, 3);
            prop_assert_eq!(&un, &no);
            prop_assert_eq!(&un[..], &expect[..]);
        }
    }
}
