// SPDX-License-Identifier: MIT
//! Subspace-configuration verdicts for the rank-3 case lists, checked against the module oracle.

mod common;

use common::*;
use grasscat_core::configs::{poset_from_profile, profile_verdict, simplify, SubspacePoset, Verdict};
use grasscat_core::oracle::PRIMES;
use grasscat_core::Profile;

#[test]
fn repeated_label_cases() {
    for (idx, n) in [LOWER_TIGHT, LOWER_SPARSE] {
        assert_eq!(yes_set(&LOWER, &idx, n, b'a'), vec!['a']);
    }
}

#[test]
fn distinct_label_cases() {
    for (idx, n) in [UPPER_TIGHT, UPPER_SPARSE] {
        assert_eq!(yes_set(&UPPER, &idx, n, b'A'), vec!['A', 'E', 'F', 'G']);
    }
}

#[test]
fn case_lists_agree_with_oracle() {
    for prime in PRIMES {
        let (idx, n) = LOWER_TIGHT;
        assert_eq!(oracle_yes_set(&LOWER, &idx, n, b'a', prime), vec!['a']);
        let (idx, n) = UPPER_TIGHT;
        assert_eq!(oracle_yes_set(&UPPER, &idx, n, b'A', prime), vec!['A', 'E', 'F', 'G']);
    }
}

#[test]
fn d4_rejection() {
    let p = Profile::parse(9, "169|147|358").unwrap();
    let s = simplify(&poset_from_profile(&p).unwrap());
    let mut mults: Vec<usize> = s.multiplicities();
    mults.sort_unstable();
    assert_eq!(mults, vec![2, 2, 2, 3]);
    assert_eq!(s.edges.len(), 3);
    assert_eq!(profile_verdict(&p).unwrap(), Verdict::No);
}

type Shape = (Vec<(usize, usize)>, Vec<(usize, usize)>);

fn catalog_one() -> Vec<Shape> {
    vec![
        (vec![(1, 1), (2, 3)], vec![(1, 2)]),
        (vec![(1, 1), (2, 2), (3, 3)], vec![(1, 2), (2, 3)]),
        (vec![(1, 1), (2, 2), (3, 3)], vec![(1, 3), (2, 3)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 3)], vec![(1, 2), (1, 3), (2, 4), (3, 4)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 3)], vec![(1, 2), (2, 4), (3, 4)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 3)], vec![(1, 4), (2, 4), (3, 4)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 2), (5, 3)], vec![(1, 5), (2, 5), (3, 5), (4, 5)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 2), (5, 3)], vec![(1, 2), (2, 5), (3, 5), (4, 5)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 2), (5, 3)], vec![(1, 2), (1, 3), (2, 5), (3, 5), (4, 5)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 2), (5, 3)], vec![(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)]),
    ]
}

fn catalog_two() -> Vec<Shape> {
    let v = vec![(1, 1), (2, 1), (3, 2), (4, 2), (5, 3)];
    vec![
        (vec![(1, 1), (2, 1), (3, 3)], vec![(1, 3), (2, 3)]),
        (vec![(1, 1), (2, 1), (3, 2), (4, 3)], vec![(1, 3), (2, 3), (3, 4)]),
        (vec![(1, 1), (2, 2), (3, 1), (4, 3)], vec![(1, 2), (2, 4), (3, 4)]),
        (vec![(1, 1), (2, 1), (3, 2), (4, 3)], vec![(1, 4), (2, 4), (3, 4)]),
        (vec![(1, 1), (2, 2), (3, 1), (4, 2), (5, 3)], vec![(1, 2), (2, 5), (3, 5), (4, 5)]),
        (vec![(1, 1), (2, 2), (3, 2), (4, 1), (5, 3)], vec![(1, 2), (1, 3), (2, 5), (3, 5), (4, 5)]),
        (v.clone(), vec![(1, 3), (2, 4), (3, 5), (4, 5)]),
        (v.clone(), vec![(1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]),
        (v.clone(), vec![(1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]),
        (v.clone(), vec![(1, 3), (2, 3), (3, 5), (4, 5)]),
        (v, vec![(1, 5), (2, 5), (3, 5), (4, 5)]),
    ]
}

fn catalog_yes(cat: Vec<Shape>) -> Vec<char> {
    cat.into_iter()
        .enumerate()
        .filter(|(_, (v, e))| {
            let s = simplify(&SubspacePoset::new(v.clone(), e.clone()));
            grasscat_core::configs::generic_indecomposable(&s) == Verdict::Yes
        })
        .map(|(i, _)| (b'A' + i as u8) as char)
        .collect()
}

#[test]
fn shape_catalogs() {
    assert_eq!(catalog_yes(catalog_one()), vec!['G']);
    assert_eq!(catalog_yes(catalog_two()), vec!['K']);
}
