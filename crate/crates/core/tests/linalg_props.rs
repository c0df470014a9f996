mod common;

use common::{invariant_factors, rank_mod_p, rank_q, transpose, Dense};
use cychom_core::linalg::{rank, rank_kernel_image, smith_normal_form, subspace_equal, SubspaceBasis};
use cychom_core::simplicial::{factorize_epi_mono, MonotoneMap};
use cychom_core::{Matrix, Rational, ScalarDomain};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = Dense> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        // sparse-ish entries so ranks vary
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -bound..=bound], c), r)
    })
}

fn mat(d: &Dense) -> Matrix {
    Matrix::from_rows(d)
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_matches_dense_elimination(d in small_matrix(7, 7, 4)) {
        let m = mat(&d);
        prop_assert_eq!(rank(&m, ScalarDomain::Rationals).unwrap(), rank_q(&d));
        for p in PRIMES {
            prop_assert_eq!(rank(&m, ScalarDomain::PrimeField(p)).unwrap(), rank_mod_p(&d, p));
        }
    }

    #[test]
    fn rank_of_transpose(d in small_matrix(7, 7, 4)) {
        let m = mat(&d);
        for dom in [ScalarDomain::Rationals, ScalarDomain::PrimeField(3)] {
            prop_assert_eq!(rank(&m, dom).unwrap(), rank(&m.transpose(), dom).unwrap());
        }
        prop_assert_eq!(rank_q(&d), rank_q(&transpose(&d)));
    }

    #[test]
    fn rank_nullity_and_kernel(d in small_matrix(6, 8, 3)) {
        let m = mat(&d);
        for dom in [ScalarDomain::Rationals, ScalarDomain::PrimeField(2), ScalarDomain::PrimeField(5)] {
            let (r, ker, im) = rank_kernel_image(&m, dom).unwrap();
            prop_assert_eq!(r + ker.dim(), m.cols());
            prop_assert_eq!(im.dim(), r);
            for v in ker.vectors() {
                let image = m.apply(v);
                let reduced = Matrix::column_vector(m.rows(), image).reduce(&dom).unwrap();
                prop_assert!(reduced.is_zero());
            }
            for c in m.columns() {
                prop_assert!(im.contains(c).unwrap());
            }
        }
    }

    #[test]
    fn smith_form_matches_oracle(d in small_matrix(5, 5, 6)) {
        let m = mat(&d);
        let s = smith_normal_form(&m).unwrap();
        let nonzero: Vec<BigInt> = s.d.iter().filter(|x| **x != BigInt::from(0)).cloned().collect();
        prop_assert_eq!(nonzero, invariant_factors(&d));
        prop_assert_eq!(s.rank, rank_q(&d));
        // left * m * right is the diagonal
        let prod = &(&s.left * &m) * &s.right;
        for (r, c, x) in prod.triplets() {
            prop_assert_eq!(r, c);
            prop_assert_eq!(x.numer(), s.d[r].clone());
        }
        for k in 1..s.d.len() {
            if s.d[k] != BigInt::from(0) {
                prop_assert_eq!(&s.d[k] % &s.d[k - 1], BigInt::from(0));
            }
        }
    }

    #[test]
    fn span_is_invariant_under_column_operations(
        d in small_matrix(6, 5, 3),
        ops in prop::collection::vec((0usize..5, 0usize..5, -3i64..=3), 0..8),
    ) {
        let m = mat(&d);
        let mut cols: Vec<Vec<(usize, Rational)>> = m.columns().to_vec();
        for (a, b, k) in ops {
            let (a, b) = (a % cols.len(), b % cols.len());
            if a == b {
                continue;
            }
            // c_a += k c_b keeps the span
            let extra = Matrix::column_vector(m.rows(), cols[b].clone()).scale(&Rational::from_int(k));
            let sum = &Matrix::column_vector(m.rows(), cols[a].clone()) + &extra;
            cols[a] = sum.into_columns().remove(0);
        }
        for dom in [ScalarDomain::Rationals, ScalarDomain::PrimeField(3)] {
            let s1 = SubspaceBasis::span(m.rows(), dom, m.columns()).unwrap();
            let s2 = SubspaceBasis::span(m.rows(), dom, &cols).unwrap();
            prop_assert!(subspace_equal(&s1, &s2).unwrap());
            prop_assert_eq!(s1, s2);
        }
    }

    #[test]
    fn monotone_factorization_roundtrip(m in 0usize..5, n in 0usize..5, pick in any::<prop::sample::Index>()) {
        let all = MonotoneMap::all(m, n);
        let f = &all[pick.index(all.len())];
        let (sigma, delta) = factorize_epi_mono(f);
        prop_assert_eq!(&MonotoneMap::from_words(m, &sigma, &delta).unwrap(), f);
        // σ word strictly decreasing, δ word strictly increasing
        prop_assert!(sigma.windows(2).all(|w| w[0] > w[1]));
        prop_assert!(delta.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn hom_delta_counts_are_binomial() {
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for m in 0..6 {
        for n in 0..6 {
            assert_eq!(MonotoneMap::all(m, n).len() as u64, binom((m + n + 1) as u64, (m + 1) as u64), "[{m}] -> [{n}]");
        }
    }
}

#[test]
fn smith_oracle_sanity() {
    assert_eq!(invariant_factors(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), [2, 6, 12].map(BigInt::from));
    assert_eq!(invariant_factors(&vec![vec![2, 0], vec![0, 3]]), [1, 6].map(BigInt::from));
}
