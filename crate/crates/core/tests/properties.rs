// SPDX-License-Identifier: MIT
//! Randomized round trips on subsets, profiles and root coordinates.

use grasscat_core::profiles::{collapse, quasi_boxes, IncMode};
use grasscat_core::roots::{from_simple_coords, to_simple_coords, RootVector};
use grasscat_core::subsets::{peaks, shift_subset, valleys, KSubset};
use grasscat_core::Profile;
use proptest::prelude::*;

fn subset(k: usize, n: usize) -> impl Strategy<Value = KSubset> {
    proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k)
        .prop_map(move |e| KSubset::new(n, e).unwrap())
}

fn profile() -> impl Strategy<Value = Profile> {
    (2usize..=5, 1usize..=4)
        .prop_flat_map(|(k, m)| (Just(k), k + 1..=12usize, Just(m)))
        .prop_flat_map(|(k, n, m)| proptest::collection::vec(subset(k, n), m))
        .prop_map(|rows| Profile::new(rows).unwrap())
}

proptest! {
    #[test]
    fn display_parse_roundtrip(p in profile()) {
        prop_assert_eq!(Profile::parse(p.n(), &p.to_string()).unwrap(), p);
    }

    #[test]
    fn full_shift_is_identity(p in profile(), a in -20i64..20) {
        let n = p.n() as i64;
        prop_assert_eq!(p.shift(a).shift(n - a), p.clone());
        prop_assert_eq!(p.shift(a).multiplicity_vector().iter().sum::<i64>(), (p.k() * p.rank()) as i64);
    }

    #[test]
    fn increase_then_decrease(p in profile(), j in 1usize..=12) {
        let j = 1 + (j - 1) % p.n();
        for mode in [IncMode::Subset, IncMode::Complement] {
            let up = p.increase(j, mode).unwrap();
            prop_assert_eq!(up.decrease(j + 1, mode).unwrap(), p.clone());
        }
    }

    #[test]
    fn peaks_match_valleys(s in (1usize..=6).prop_flat_map(|k| (k + 1..=14usize).prop_flat_map(move |n| subset(k, n)))) {
        prop_assert_eq!(peaks(&s).len(), valleys(&s).len());
        let t = shift_subset(&s, 1);
        prop_assert_eq!(peaks(&t).len(), peaks(&s).len());
    }

    #[test]
    fn collapse_keeps_quasi_boxes(
        (i, j) in (1usize..=6).prop_flat_map(|k| (k + 1..=14usize).prop_flat_map(move |n| (subset(k, n), subset(k, n))))
    ) {
        prop_assume!(i != j);
        let c = collapse(&i, &j).unwrap();
        prop_assert_eq!(quasi_boxes(&i, &j).unwrap().len(), quasi_boxes(&c.upper, &c.lower).unwrap().len());
    }

    #[test]
    fn simple_coords_roundtrip(k in 1usize..=6, extra in 1usize..=8, seed in proptest::collection::vec(-4i64..=4, 14)) {
        let n = k + extra;
        let mut x = seed[..n].to_vec();
        let r = x.iter().sum::<i64>().rem_euclid(k as i64);
        x[0] -= r;
        let v = RootVector::new(k, x).unwrap();
        let c = to_simple_coords(&v).unwrap();
        prop_assert_eq!(from_simple_coords(n, k, &c), v);
    }
}
