// SPDX-License-Identifier: MIT
//! Tube rows over (3,9), recovery fixtures, and oracle consistency checks.

use grasscat_core::artube::{tau_inverse_profile, tube_walk};
use grasscat_core::oracle::{Config, Field, Module, TruncatedModule, PRIMES};
use grasscat_core::subsets::KSubset;
use grasscat_core::Profile;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pp(s: &str) -> Profile {
    Profile::parse(9, s).unwrap()
}

/// Rows of rank at most 3 from the (3,9) tube figures, each a full `τ`-orbit.
const ROWS: &[&[&str]] = &[
    &["124", "356", "457", "689", "178", "239"],
    &["135|246", "357", "468|579", "168", "279|138", "249"],
    &["359|246", "135|247", "368|579", "468|157", "269|138", "279|148"],
    &["359|247", "136|258|479", "368|157", "469|258|137", "269|148", "379|258|146"],
    &["379|258|147", "369|258|479", "136|258|147", "369|258|137", "469|258|147", "369|258|146"],
    &["256", "347", "589", "167", "238", "149"],
    &["357|246", "358|479", "168|579", "268|137", "249|138", "259|146"],
    &["359|247|146", "358|257|469", "368|157|479", "268|158|379", "269|148|137", "259|248|136"],
    &["268", "379|148", "259", "136|247", "358", "469|157"],
    &["379|268|148", "379|259|148", "136|259|247", "136|358|247", "469|358|157", "469|268|157"],
    &["158", "269|137", "248", "359|146", "257", "368|479"],
    &["269|158|137", "269|248|137", "359|248|146", "359|257|146", "368|257|479", "368|158|479"],
    &["268|157", "369|248|137", "259|148", "369|257|146", "358|247", "369|158|479"],
    &["368|257|146", "359|248|137", "269|158|479"],
];

fn check_row(row: &[&str], cfg: &Config) {
    let walk = tube_walk(&pp(row[0]), 64, cfg).unwrap();
    let got: Vec<String> = walk.profiles.iter().map(|p| p.to_string()).collect();
    assert_eq!(got, row, "row from {}", row[0]);
    assert_eq!(walk.period, Some(row.len()));
}

#[test]
fn figure_rows() {
    let cfg = Config::default();
    for row in ROWS {
        check_row(row, &cfg);
    }
}

#[test]
fn figure_rows_second_prime() {
    let cfg = Config { prime: PRIMES[1], seed: 7, ..Config::default() };
    for row in ROWS.iter().take(4) {
        check_row(row, &cfg);
    }
}

#[test]
fn imaginary_step() {
    let step = tau_inverse_profile(&pp("157|369|248"), &Config::default()).unwrap();
    assert_eq!(step.profile, pp("137|259"));
    assert_eq!(step.cover, vec![2, 4, 6, 8, 9]);
}

#[test]
fn rank_bookkeeping() {
    let cfg = Config::default();
    for row in ROWS {
        for s in row.iter() {
            let p = pp(s);
            let step = tau_inverse_profile(&p, &cfg).unwrap();
            assert_eq!(step.profile.rank() + p.rank(), step.cover.len(), "{s}");
        }
    }
}

#[test]
fn non_rigid_fixed_point() {
    let cfg = Config::default();
    let p = pp("369|258|147");
    assert_eq!(tau_inverse_profile(&p, &cfg).unwrap().profile, p);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = Module::from_profile(Field::new(cfg.prime), &p, &mut rng).unwrap();
    assert!(m.ext1(&m).unwrap() > 0);
}

#[test]
fn cover_fixtures() {
    let f = Field::new(PRIMES[0]);
    let l = Module::rank1(f, &KSubset::parse(9, "156").unwrap());
    assert_eq!(l.cover_indices(), vec![4, 9]);
    for u in 1..=9 {
        assert_eq!(Module::projective(f, 3, 9, u).cover_indices(), vec![u]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let m = Module::from_profile(f, &pp("359|246"), &mut rng).unwrap();
    assert_eq!(m.cover_indices(), vec![1, 2, 4, 8]);
}

#[test]
fn projective_syzygy_is_empty() {
    let p = Module::projective(Field::new(PRIMES[0]), 3, 9, 2);
    assert_eq!(p.syzygy().unwrap().s, 0);
    assert!(tau_inverse_profile(&pp("123"), &Config::default()).is_err());
}

#[test]
fn truncation_stability() {
    for prime in PRIMES {
        let f = Field::new(prime);
        for s in ["124", "135|246", "368|257|146", "157|369|248", "369|258|147"] {
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            let m = Module::from_profile(f, &pp(s), &mut rng).unwrap();
            let short = m.to_matrices(18).unwrap();
            let long = m.to_matrices(36).unwrap();
            short.check_relations().unwrap();
            long.check_relations().unwrap();
            let (a, b) = (short.to_module().unwrap(), long.to_module().unwrap());
            for (x, y) in a.chain.iter().zip(&b.chain) {
                assert!(x.contains_space(f, y) && y.contains_space(f, x), "{s}");
            }
            assert_eq!(a.ext1(&a).unwrap(), b.ext1(&b).unwrap());
            assert_eq!(a.is_indecomposable(20, &mut rng), b.is_indecomposable(20, &mut rng));
            let omega = m.syzygy().unwrap();
            omega.to_matrices(18).unwrap().check_relations().unwrap();
        }
    }
}

#[test]
fn matrices_roundtrip_json() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let m = Module::from_profile(Field::new(PRIMES[1]), &pp("258|147|136"), &mut rng).unwrap();
    let tm = m.to_matrices(18).unwrap();
    let json = serde_json::to_string(&tm).unwrap();
    let back: TruncatedModule = serde_json::from_str(&json).unwrap();
    assert_eq!(back, tm);
}

#[test]
fn direct_sums_decompose() {
    let f = Field::new(PRIMES[0]);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let m = Module::from_profile(f, &pp("135|246"), &mut rng).unwrap();
    assert!(!Module::direct_sum(&[m.clone(), m.clone()]).is_indecomposable(20, &mut rng));
    assert!(!m.hom(&m).is_empty());
    let l = Module::rank1(f, &KSubset::parse(9, "147").unwrap());
    assert_eq!(l.ext1(&l).unwrap(), 0);
}
