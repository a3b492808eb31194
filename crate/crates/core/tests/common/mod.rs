// SPDX-License-Identifier: MIT
//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use grasscat_core::configs::{profile_verdict, Verdict};
use grasscat_core::oracle::{Field, Module};
use grasscat_core::Profile;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Pattern = [[usize; 3]; 3];

pub const LOWER: [Pattern; 8] = [
    [[1, 5, 8], [1, 4, 7], [3, 6, 9]],
    [[1, 5, 9], [1, 4, 7], [3, 6, 8]],
    [[1, 6, 8], [1, 4, 7], [3, 5, 9]],
    [[1, 6, 9], [1, 4, 7], [3, 5, 8]],
    [[1, 4, 7], [1, 5, 8], [3, 6, 9]],
    [[1, 3, 7], [1, 5, 8], [4, 6, 9]],
    [[1, 4, 6], [1, 5, 8], [3, 7, 9]],
    [[1, 3, 6], [1, 5, 8], [4, 7, 9]],
];

pub const UPPER: [Pattern; 8] = [
    [[1, 3, 6], [2, 5, 8], [4, 7, 9]],
    [[1, 3, 7], [2, 5, 8], [4, 6, 9]],
    [[1, 4, 6], [2, 5, 8], [3, 7, 9]],
    [[1, 4, 7], [2, 5, 8], [3, 6, 9]],
    [[1, 4, 7], [3, 6, 9], [2, 5, 8]],
    [[1, 4, 8], [3, 6, 9], [2, 5, 7]],
    [[1, 5, 7], [3, 6, 9], [2, 4, 8]],
    [[1, 5, 8], [3, 6, 9], [2, 4, 7]],
];

pub fn instantiate(idx: &[usize], n: usize, rows: &Pattern) -> Profile {
    Profile::from_vecs(n, rows.iter().map(|r| r.iter().map(|&p| idx[p - 1]).collect()).collect()).unwrap()
}

pub fn yes_set(list: &[Pattern], idx: &[usize], n: usize, first: u8) -> Vec<char> {
    list.iter()
        .enumerate()
        .filter(|(_, rows)| profile_verdict(&instantiate(idx, n, rows)).unwrap() == Verdict::Yes)
        .map(|(c, _)| (first + c as u8) as char)
        .collect()
}

pub fn oracle_yes_set(list: &[Pattern], idx: &[usize], n: usize, first: u8, prime: u64) -> Vec<char> {
    let f = Field::new(prime);
    list.iter()
        .enumerate()
        .filter(|(c, rows)| {
            let mut rng = ChaCha8Rng::seed_from_u64(*c as u64);
            let m = Module::from_profile(f, &instantiate(idx, n, rows), &mut rng).unwrap();
            m.is_indecomposable(20, &mut rng)
        })
        .map(|(c, _)| (first + c as u8) as char)
        .collect()
}

pub const LOWER_TIGHT: ([usize; 9], usize) = ([1, 1, 2, 3, 4, 5, 6, 7, 8], 8);
pub const LOWER_SPARSE: ([usize; 9], usize) = ([2, 2, 4, 6, 8, 10, 12, 14, 16], 17);
pub const UPPER_TIGHT: ([usize; 9], usize) = ([1, 2, 3, 4, 5, 6, 7, 8, 9], 9);
pub const UPPER_SPARSE: ([usize; 9], usize) = ([2, 4, 6, 8, 10, 12, 14, 16, 18], 19);

/// The Table 1 fixture, one profile per line.
pub fn table_one() -> Vec<Profile> {
    include_str!("../fixtures/table1.txt")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| Profile::parse(9, l.trim()).unwrap())
        .collect()
}
