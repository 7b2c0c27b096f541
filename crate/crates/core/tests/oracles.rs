//! Library values against small brute-force computations written here from
//! the definitions.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use modsym_core::enumerate::{
    count_equal_minset_tuples_naive, gen_set_partitions, gen_tilings, partitions_from_composition,
    SetPartition,
};
use modsym_core::polycore::range_point;
use modsym_core::stirling::{
    omega_poly, stirling1_higher, stirling1_mod, stirling2_mod, Stirling2ModMethod,
};
use modsym_core::symfun::{bounded_elem_sym, elem_sym, modular_all_ones, modular_sym, Method};
use modsym_core::{Monomial, Polynomial};

/// Every restricted growth string of length `n`, by recursion.
fn all_rgs(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let open = prefix.iter().map(|&b| b + 1).max().unwrap_or(0);
        for b in 0..=open {
            prefix.push(b);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Gaps between block minima read straight off the string.
fn gaps(rgs: &[usize]) -> Vec<usize> {
    let firsts: Vec<usize> = (0..rgs.len())
        .filter(|&i| !rgs[..i].contains(&rgs[i]))
        .map(|i| i + 1)
        .collect();
    let mut d: Vec<usize> = firsts.windows(2).map(|w| w[1] - w[0] - 1).collect();
    if let Some(&m) = firsts.last() {
        d.push(rgs.len() - m);
    }
    d
}

#[test]
fn second_kind_modular_by_partition_scan() {
    for n in 0..=9 {
        let strings = all_rgs(n);
        for s in 1..=3 {
            for k in 0..=n {
                let count = strings
                    .iter()
                    .filter(|r| {
                        let d = gaps(r);
                        d.len() == k && d.iter().all(|x| x % (s + 1) <= 1)
                    })
                    .count();
                let want = stirling2_mod(n, k, s, Stirling2ModMethod::Recurrence).unwrap();
                assert_eq!(BigInt::from(count), want, "n={n} k={k} s={s}");
            }
        }
    }
}

#[test]
fn first_kind_modular_by_partition_scan() {
    for n in 0..=4usize {
        for s in 1..=2usize {
            for k in 0..=n * s {
                let board = n * (s + 1) - k;
                let count = all_rgs(board)
                    .iter()
                    .filter(|r| {
                        let d = gaps(r);
                        d.len() == n && d.iter().all(|&x| x <= s)
                    })
                    .count();
                assert_eq!(
                    BigInt::from(count),
                    stirling1_mod(n + 1, k + 1, s),
                    "n={n} k={k} s={s}"
                );
            }
        }
    }
}

/// `prod_i (1 + x_i + ... + x_i^s)` expanded term by term.
fn bounded_product(n: usize, s: usize) -> Polynomial {
    (1..=n).fold(Polynomial::one(), |acc, i| {
        let factor = Polynomial::from_terms(
            (0..=s).map(|e| (Monomial::var_pow(i, e as u32), BigInt::one())),
        );
        &acc * &factor
    })
}

fn homogeneous_part(p: &Polynomial, k: u64) -> Polynomial {
    Polynomial::from_terms(
        p.terms()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

#[test]
fn bounded_elementary_is_a_product_slice() {
    for n in 0..=4 {
        for s in 1..=3 {
            let full = bounded_product(n, s);
            for k in 0..=n * s + 1 {
                assert_eq!(homogeneous_part(&full, k as u64), bounded_elem_sym(n, k, s));
            }
        }
    }
    for n in 0..=5 {
        let full = bounded_product(n, 1);
        for k in 0..=n {
            assert_eq!(homogeneous_part(&full, k as u64), elem_sym(n, k));
        }
    }
}

#[test]
fn all_ones_counts_tilings() {
    for n in 1..=5 {
        for k in 0..=8 {
            for s in 1..=3 {
                let tilings = gen_tilings(n, k, s).count();
                assert_eq!(modular_all_ones(n, k, s), BigInt::from(tilings));
            }
        }
    }
}

#[test]
fn compositions_cover_every_partition_once() {
    for n in 1..=7usize {
        for k in 1..=n {
            let mut seen: BTreeSet<SetPartition> = BTreeSet::new();
            let mut total = 0usize;
            for a in (0..k).map(|_| 0..=n - k).multi_cartesian_product() {
                if a.iter().sum::<usize>() != n - k {
                    continue;
                }
                let weight: usize = a
                    .iter()
                    .enumerate()
                    .map(|(i, &ai)| (i + 1).pow(ai as u32))
                    .product();
                let parts: Vec<SetPartition> = partitions_from_composition(&a).collect();
                assert_eq!(parts.len(), weight);
                for p in parts {
                    assert_eq!(p.diff_vector(), a);
                    assert!(seen.insert(p));
                    total += 1;
                }
            }
            let all: BTreeSet<SetPartition> = gen_set_partitions(n, k).collect();
            assert_eq!(total, all.len());
            assert_eq!(seen, all);
        }
    }
}

#[test]
fn equal_minset_tuples_by_full_product() {
    for n in 0..=4 {
        for k in 0..=n {
            for s in 1..=2 {
                assert_eq!(
                    count_equal_minset_tuples_naive(n, k, s),
                    stirling1_higher(n, k, s)
                );
            }
        }
    }
}

#[test]
fn omega_roots() {
    // Omega_(n,s) vanishes at 0 and at -i^s for i < n
    for n in 1..=6 {
        for s in 1..=3 {
            let p = omega_poly(n, s);
            for i in 0..n {
                let root = -BigInt::from(i).pow(s as u32);
                assert!(p.eval(&[root]).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn specialization_matches_symbolic_evaluation() {
    for k in 0..=5 {
        for m in 0..=6 {
            for s in 1..=3 {
                let poly = modular_sym(k, m, s, Method::Enumeration);
                let v = stirling2_mod(k + m, k, s, Stirling2ModMethod::Specialization).unwrap();
                assert_eq!(poly.eval(&range_point(k)).unwrap(), v);
            }
        }
    }
}
