// SPDX-License-Identifier: MIT
//! Closed-form counts and exhaustive generators for rigid profiles.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::profiles::{collapse, quasi_boxes, Profile};
use crate::roots::{q, RootVector, Q};
use crate::subsets::{all_subsets, KSubset};

/// Counts of partitions `r = r₁ + r₂ + r₃` into positive parts by the number
/// of distinct parts.
pub fn partition_counts(r: usize) -> (u64, u64, u64) {
    let mut p = [0u64; 3];
    for r1 in 1..=r {
        for r2 in 1..=r1 {
            if r1 + r2 >= r {
                break;
            }
            let r3 = r - r1 - r2;
            if r3 > r2 {
                continue;
            }
            let distinct = 1 + (r1 != r2) as usize + (r2 != r3) as usize;
            p[distinct - 1] += 1;
        }
    }
    (p[0], p[1], p[2])
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The closed formula for the number of three-box rank-2 profiles.
pub fn n_kn(k: usize, n: usize) -> u128 {
    (3..=k)
        .map(|r| {
            let (p1, p2, p3) = partition_counts(r);
            let r2 = 2 * r as u128;
            let coeff = r2 * p1 as u128 / 3 + r2 * p2 as u128 + 2 * r2 * p3 as u128;
            coeff * binomial(n, 2 * r) * binomial(n.saturating_sub(2 * r), k - r)
        })
        .sum()
}

/// The collapsed pair forms exactly three quasi-boxes, all of them boxes.
pub fn is_three_box(i: &KSubset, j: &KSubset) -> bool {
    let Ok(c) = collapse(i, j) else { return false };
    match quasi_boxes(&c.upper, &c.lower) {
        Ok(qb) => qb.len() == 3 && qb.iter().all(|b| b.is_box),
        Err(_) => false,
    }
}

/// All ordered pairs `I|J` with three boxes after collapse, in lexicographic order.
pub fn enumerate_three_box_rank2(k: usize, n: usize) -> Vec<Profile> {
    let subs = all_subsets(k, n);
    subs.par_iter()
        .flat_map_iter(|i| {
            subs.iter()
                .filter(move |j| is_three_box(i, j))
                .map(move |j| Profile::new(vec![i.clone(), j.clone()]).expect("same (k, n)"))
        })
        .collect()
}

/// Number of three-box pairs without materializing them.
pub fn count_three_box_rank2(k: usize, n: usize) -> u128 {
    let subs = all_subsets(k, n);
    subs.par_iter()
        .map(|i| subs.iter().filter(|j| is_three_box(i, j)).count() as u128)
        .sum()
}

fn weakly_decreasing_rows(
    subs: &[KSubset],
    m: usize,
    acc: &mut Vec<KSubset>,
    visit: &mut dyn FnMut(&[KSubset]),
) {
    if acc.len() == m {
        visit(acc);
        return;
    }
    let prev = acc.last().cloned();
    for s in subs {
        if let Some(p) = &prev {
            if !p.elements().iter().zip(s.elements()).all(|(a, b)| a >= b) {
                continue;
            }
        }
        acc.push(s.clone());
        weakly_decreasing_rows(subs, m, acc, visit);
        acc.pop();
    }
}

/// Visits every weakly column decreasing `m`-row profile over `(k, n)`.
pub fn for_each_weakly_column_decreasing(k: usize, n: usize, m: usize, mut visit: impl FnMut(&Profile)) {
    let subs = all_subsets(k, n);
    let mut acc = Vec::with_capacity(m);
    weakly_decreasing_rows(&subs, m, &mut acc, &mut |rows| {
        visit(&Profile::new(rows.to_vec()).expect("same (k, n)"))
    });
}

/// Canonical `m`-row profiles with `q = 2`, sorted.
pub fn enumerate_canonical_real(k: usize, n: usize, m: usize) -> Vec<Profile> {
    let mut out = Vec::new();
    let two = Q::from(2);
    for_each_weakly_column_decreasing(k, n, m, |p| {
        if p.is_canonical() {
            let v = RootVector { n, k, x: p.multiplicity_vector() };
            if q(&v) == two {
                out.push(p.clone());
            }
        }
    });
    out.sort();
    out
}

/// The twelve imaginary rank-3 row patterns, as positions into `i₁ < … < i₉`.
/// The first nine are the shifts of `157|369|248`.
pub const IMAGINARY_PATTERNS: [[[usize; 3]; 3]; 12] = [
    [[1, 5, 7], [3, 6, 9], [2, 4, 8]],
    [[2, 6, 8], [1, 4, 7], [3, 5, 9]],
    [[3, 7, 9], [2, 5, 8], [1, 4, 6]],
    [[1, 4, 8], [3, 6, 9], [2, 5, 7]],
    [[2, 5, 9], [1, 4, 7], [3, 6, 8]],
    [[1, 3, 6], [2, 5, 8], [4, 7, 9]],
    [[2, 4, 7], [3, 6, 9], [1, 5, 8]],
    [[3, 5, 8], [1, 4, 7], [2, 6, 9]],
    [[4, 6, 9], [2, 5, 8], [1, 3, 7]],
    [[1, 4, 7], [3, 6, 9], [2, 5, 8]],
    [[2, 5, 8], [1, 4, 7], [3, 6, 9]],
    [[3, 6, 9], [2, 5, 8], [1, 4, 7]],
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImaginaryCandidate {
    pub profile: Profile,
    pub pattern: usize,
    /// Instance of a shift of `157|369|248` rather than of `147|369|258`.
    pub rigid_pattern: bool,
}

/// Instantiates the twelve patterns over every 9-subset of `[n]`.
pub fn enumerate_imaginary_rank3(n: usize) -> Vec<ImaginaryCandidate> {
    if n < 9 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for tuple in all_subsets(9, n) {
        let idx = tuple.elements();
        for (pi, pat) in IMAGINARY_PATTERNS.iter().enumerate() {
            let rows = pat
                .iter()
                .map(|r| KSubset::new(n, r.iter().map(|&p| idx[p - 1])).expect("valid"))
                .collect();
            out.push(ImaginaryCandidate {
                profile: Profile::new(rows).expect("same (k, n)"),
                pattern: pi,
                rigid_pattern: pi < 9,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(partition_counts(3), (1, 0, 0));
        assert_eq!(partition_counts(4), (0, 1, 0));
        assert_eq!(partition_counts(6), (1, 1, 1));
        assert_eq!(partition_counts(2), (0, 0, 0));
    }

    #[test]
    fn closed_formula() {
        assert_eq!(n_kn(4, 8), 120);
        assert_eq!(n_kn(2, 10), 0);
        assert_eq!(n_kn(3, 6), 2);
        assert_eq!(n_kn(3, 9), 168);
    }

    #[test]
    fn small_enumerations() {
        let p = enumerate_three_box_rank2(3, 6);
        let names: Vec<String> = p.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["135|246", "246|135"]);
        assert_eq!(count_three_box_rank2(4, 8), 120);
        assert_eq!(enumerate_canonical_real(3, 9, 1).len(), 84);
        assert_eq!(enumerate_imaginary_rank3(9).len(), 12);
        assert_eq!(enumerate_imaginary_rank3(10).len(), 120);
        assert!(enumerate_imaginary_rank3(8).is_empty());
    }
}
