// SPDX-License-Identifier: MIT
//! Auslander–Reiten translates of profiles, AR sequences with rank-1 ends,
//! tube walks and the rank-3 census for `(3, 9)`.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{enumerate_canonical_real, enumerate_imaginary_rank3};
use crate::error::{Error, Result};
use crate::oracle::{Config, Field, Module};
use crate::profiles::Profile;
use crate::roots::{profile_root, RootType, Q};
use crate::subsets::{all_subsets, KSubset};

fn shifted(i: &KSubset, offsets: &[i64], base: i64) -> KSubset {
    KSubset::from_cyclic(i.n(), offsets.iter().map(|d| base + d)).expect("valid shape")
}

fn is_interval(n: usize, e: &[usize]) -> Option<usize> {
    let set: BTreeSet<usize> = e.iter().copied().collect();
    set.iter().copied().find(|&b| {
        (0..e.len()).all(|d| set.contains(&crate::subsets::cyc(b as i64 + d as i64, n)))
    })
}

/// `τ⁻¹ L_I` for `I = {i} ∪ {j, …, j+k−2}`: `{i+1, …, i+k−1, j+k−1}`.
pub fn tau_inverse_rank1_two_intervals(set: &KSubset) -> Result<KSubset> {
    let (n, k) = (set.n(), set.k());
    if is_interval(n, set.elements()).is_some() {
        return Err(Error::Shape(format!("{set} is projective")));
    }
    for &i in set.elements() {
        let rest: Vec<usize> = set.elements().iter().copied().filter(|&e| e != i).collect();
        if let Some(j) = is_interval(n, &rest) {
            let mut e: Vec<i64> = (1..k as i64).map(|d| i as i64 + d).collect();
            e.push(j as i64 + k as i64 - 1);
            return KSubset::from_cyclic(n, e);
        }
    }
    Err(Error::Shape(format!("{set} is not a point and an interval")))
}

/// An AR sequence `left ↪ middle ↠ right`, the middle given by its predicted profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArSequence {
    pub left: Profile,
    pub middle: Profile,
    pub right: Profile,
}

fn three_peaks(set: &KSubset) -> Result<()> {
    if set.k() != 3 {
        return Err(Error::Shape(format!("k = {} but three peaks need k = 3", set.k())));
    }
    if set.elements().iter().any(|&e| set.contains_cyc(e as i64 + 1)) {
        return Err(Error::Shape(format!("{set} does not have three peaks")));
    }
    Ok(())
}

fn translate(set: &KSubset, a: i64) -> KSubset {
    crate::subsets::shift_subset(set, a)
}

fn row(s: &KSubset) -> Profile {
    Profile::new(vec![s.clone()]).expect("single row")
}

/// The sequence starting at `L_I`: `X = I + 1`, `Y = I + 2`, middle `X|I|Y`.
pub fn ar_sequence_start(set: &KSubset) -> Result<ArSequence> {
    three_peaks(set)?;
    let (x, y) = (translate(set, 1), translate(set, 2));
    Ok(ArSequence {
        left: row(set),
        middle: Profile::new(vec![x.clone(), set.clone(), y.clone()])?,
        right: Profile::new(vec![x, y])?,
    })
}

/// The sequence ending at `L_I`: `X = I − 2`, `Y = I − 1`, middle `X|I|Y`.
pub fn ar_sequence_end(set: &KSubset) -> Result<ArSequence> {
    three_peaks(set)?;
    let (x, y) = (translate(set, -2), translate(set, -1));
    Ok(ArSequence {
        left: Profile::new(vec![x.clone(), y.clone()])?,
        middle: Profile::new(vec![x, set.clone(), y])?,
        right: row(set),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Start,
    End,
}

/// A middle term `L_A ⊕ N` for `I = {i, i+2, i+4}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArSplit {
    pub i: usize,
    pub summand: KSubset,
    pub complement: Profile,
}

pub fn ar_split_rule(set: &KSubset, direction: Direction) -> Result<ArSplit> {
    let n = set.n();
    if set.k() != 3 {
        return Err(Error::Shape(format!("k = {} but the rule needs k = 3", set.k())));
    }
    let i = set
        .elements()
        .iter()
        .copied()
        .find(|&i| shifted(set, &[0, 2, 4], i as i64) == *set)
        .ok_or_else(|| Error::Shape(format!("{set} is not of the form {{i, i+2, i+4}}")))?;
    if n < 7 {
        return Err(Error::SplitNeedsSeven(n));
    }
    let base = i as i64;
    let (summand, complement) = match direction {
        Direction::Start => (
            shifted(set, &[1, 2, 4], base),
            Profile::new(vec![shifted(set, &[0, 3, 5], base), shifted(set, &[2, 4, 6], base)])?,
        ),
        Direction::End => (
            shifted(set, &[0, 2, 3], base),
            Profile::new(vec![shifted(set, &[-2, 0, 2], base), shifted(set, &[-1, 1, 4], base)])?,
        ),
    };
    Ok(ArSplit { i, summand, complement })
}

/// Builds the middle term of the AR sequence starting at `L_I` as a random
/// extension of `τ⁻¹ L_I` by `L_I`.
pub fn ar_middle_module(set: &KSubset, cfg: &Config) -> Result<Module> {
    let f = Field::new(cfg.prime);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let l = Module::rank1(f, set);
    let tl = l.syzygy()?;
    tl.extension(&l, &mut rng)
}

/// Outcome of one profile-level `τ⁻¹` step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauStep {
    pub input: Profile,
    pub profile: Profile,
    pub cover: Vec<usize>,
    /// Every candidate that passed the isomorphism test.
    pub matches: Vec<Profile>,
}

fn content_of(p: &Profile) -> Vec<usize> {
    p.multiplicity_vector().into_iter().map(|x| x as usize).collect()
}

fn subsets_with_content(k: usize, n: usize, content: &[usize], rank: usize) -> Vec<Profile> {
    let subs = all_subsets(k, n);
    let mut out = Vec::new();
    let mut acc: Vec<KSubset> = Vec::new();
    let mut remaining = content.to_vec();
    fn rec(
        subs: &[KSubset],
        rank: usize,
        remaining: &mut Vec<usize>,
        acc: &mut Vec<KSubset>,
        out: &mut Vec<Profile>,
    ) {
        if acc.len() == rank {
            if remaining.iter().all(|&c| c == 0) {
                out.push(Profile::new(acc.clone()).expect("same (k, n)"));
            }
            return;
        }
        let left = rank - acc.len();
        if remaining.iter().any(|&c| c > left) {
            return;
        }
        for s in subs {
            if s.elements().iter().all(|&e| remaining[e - 1] > 0) {
                s.elements().iter().for_each(|&e| remaining[e - 1] -= 1);
                acc.push(s.clone());
                rec(subs, rank, remaining, acc, out);
                acc.pop();
                s.elements().iter().for_each(|&e| remaining[e - 1] += 1);
            }
        }
    }
    rec(&subs, rank, &mut remaining, &mut acc, &mut out);
    out
}

/// Candidate profiles of the given rank and content: the input itself, then
/// profiles with pairwise interlacing rows, then the rest.
fn candidates(input: &Profile, rank: usize, content: &[usize], exhaustive: bool) -> Vec<Profile> {
    let (k, n) = (input.k(), input.n());
    let mut rest: Vec<Profile> = match rank {
        1 | 2 => subsets_with_content(k, n, content, rank),
        3 if !exhaustive => {
            let mut v: Vec<Profile> = enumerate_canonical_real(k, n, 3)
                .iter()
                .flat_map(|p| p.cyclic_permutations())
                .collect();
            if k == 3 {
                v.extend(enumerate_imaginary_rank3(n).into_iter().flat_map(|c| c.profile.cyclic_permutations()));
            }
            v
        }
        _ if exhaustive => subsets_with_content(k, n, content, rank),
        _ => Vec::new(),
    };
    rest.extend(input.cyclic_permutations());
    rest.retain(|p| p.rank() == rank && content_of(p) == content && p != input);
    rest.sort_by_key(|p| (!p.is_interlacing(), p.clone()));
    rest.dedup();
    let mut out = Vec::with_capacity(rest.len() + 1);
    if input.rank() == rank && content_of(input) == content {
        out.push(input.clone());
    }
    out.extend(rest);
    out
}

/// `τ⁻¹` at the level of profiles: build, take the first syzygy, and identify
/// it among candidate profiles by cover and isomorphism.
pub fn tau_inverse_profile(p: &Profile, cfg: &Config) -> Result<TauStep> {
    let f = Field::new(cfg.prime);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let m = Module::from_profile(f, p, &mut rng)?;
    let omega = m.syzygy()?;
    if omega.s == 0 {
        return Err(Error::InvalidProfile(format!("{p} is projective")));
    }
    let content = omega.content();
    let cover = omega.cover_indices();
    if omega.s > cfg.max_rank {
        return Err(Error::RecoveryFailed(format!(
            "τ⁻¹({p}) has rank {} above the recovery limit {}",
            omega.s, cfg.max_rank
        )));
    }
    let mut tried = 0;
    for exhaustive in [false, true] {
        if exhaustive && omega.s < 3 {
            break;
        }
        let mut matches = Vec::new();
        for cand in candidates(p, omega.s, &content, exhaustive) {
            tried += 1;
            let cm = if cand == *p { m.clone() } else { Module::from_profile(f, &cand, &mut rng)? };
            if cm.cover_indices() == cover && omega.is_isomorphic(&cm, cfg.iso_trials, &mut rng) {
                matches.push(cand);
            }
        }
        if let Some(first) = matches.first() {
            return Ok(TauStep { input: p.clone(), profile: first.clone(), cover: m.cover_indices(), matches });
        }
    }
    Err(Error::RecoveryFailed(format!(
        "τ⁻¹({p}) has rank {}, content {content:?}, cover {cover:?}; {tried} candidates tried",
        omega.s
    )))
}

/// One `τ`-orbit, starting profile first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubeRow {
    pub profiles: Vec<Profile>,
    /// Set when the walk returned to the start.
    pub period: Option<usize>,
}

pub fn tube_walk(start: &Profile, max_steps: usize, cfg: &Config) -> Result<TubeRow> {
    let mut profiles = vec![start.clone()];
    for _ in 0..max_steps {
        let next = tau_inverse_profile(profiles.last().expect("nonempty"), cfg)?.profile;
        if next == *start {
            let period = profiles.len();
            return Ok(TubeRow { profiles, period: Some(period) });
        }
        if profiles.contains(&next) {
            break;
        }
        profiles.push(next);
    }
    Ok(TubeRow { profiles, period: None })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub profile: Profile,
    pub q: Q,
    pub root_type: RootType,
}

/// The 216 rotations of the canonical real profiles and the 9 shifts of
/// `157|369|248`, in that order.
pub fn census_39() -> Result<Vec<CensusEntry>> {
    let mut profiles: Vec<Profile> =
        enumerate_canonical_real(3, 9, 3).iter().flat_map(|p| p.cyclic_permutations()).collect();
    let base = Profile::parse(9, "157|369|248")?;
    profiles.extend((0..9).map(|a| base.shift(a)));
    let distinct: BTreeSet<&Profile> = profiles.iter().collect();
    if distinct.len() != profiles.len() {
        return Err(Error::InvalidProfile("duplicate census entry".into()));
    }
    let entries = profiles
        .into_iter()
        .map(|p| {
            let r = profile_root(&p)?;
            Ok(CensusEntry { profile: p, q: r.q, root_type: r.root_type })
        })
        .collect::<Result<Vec<_>>>()?;
    let real = entries.iter().filter(|e| e.root_type == RootType::RealRoot).count();
    let imag = entries.iter().filter(|e| e.root_type == RootType::ImaginaryRoot).count();
    if entries.len() != 225 || real != 216 || imag != 9 {
        return Err(Error::InvalidProfile(format!("census has {real} real and {imag} imaginary entries")));
    }
    Ok(entries)
}

/// Oracle verdicts for one profile at one prime, majority over seeds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityCheck {
    pub profile: Profile,
    pub prime: u64,
    pub ext1: usize,
    pub indecomposable: bool,
    /// Seeds disagreed.
    pub discrepancy: bool,
}

pub fn rigidity_check(p: &Profile, prime: u64, seeds: &[u64], cfg: &Config) -> Result<RigidityCheck> {
    let f = Field::new(prime);
    let mut exts = Vec::new();
    let mut indec = Vec::new();
    for &seed in seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Module::from_profile(f, p, &mut rng)?;
        exts.push(m.ext1(&m)?);
        indec.push(m.is_indecomposable(cfg.indec_trials, &mut rng));
    }
    let mode = |v: &[usize]| {
        let mut best = (0, v[0]);
        for &x in v {
            let c = v.iter().filter(|&&y| y == x).count();
            if c > best.0 || (c == best.0 && x < best.1) {
                best = (c, x);
            }
        }
        best.1
    };
    let yes = indec.iter().filter(|&&b| b).count();
    Ok(RigidityCheck {
        profile: p.clone(),
        prime,
        ext1: mode(&exts),
        indecomposable: 2 * yes > indec.len(),
        discrepancy: exts.iter().any(|&e| e != exts[0]) || indec.iter().any(|&b| b != indec[0]),
    })
}

/// Runs [`rigidity_check`] on every profile at every prime, in input order.
pub fn rigidity_census(profiles: &[Profile], primes: &[u64], seeds: &[u64], cfg: &Config) -> Result<Vec<RigidityCheck>> {
    let jobs: Vec<(&Profile, u64)> = profiles.iter().flat_map(|p| primes.iter().map(move |&q| (p, q))).collect();
    jobs.par_iter().map(|(p, q)| rigidity_check(p, *q, seeds, cfg)).collect()
}

/// Smallest profile in the `τ`-orbit of `p`, when the orbit closes.
pub fn tube_id(p: &Profile, max_steps: usize, cfg: &Config) -> Option<Profile> {
    let row = tube_walk(p, max_steps, cfg).ok()?;
    row.period?;
    row.profiles.into_iter().min()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &str) -> KSubset {
        KSubset::parse(n, e).unwrap()
    }

    #[test]
    fn rank_one_formula() {
        assert_eq!(tau_inverse_rank1_two_intervals(&s(9, "124")).unwrap(), s(9, "356"));
        assert_eq!(tau_inverse_rank1_two_intervals(&s(9, "256")).unwrap(), s(9, "347"));
        assert_eq!(tau_inverse_rank1_two_intervals(&s(8, "145")).unwrap(), s(8, "236"));
        assert!(tau_inverse_rank1_two_intervals(&s(9, "123")).is_err());
        assert!(tau_inverse_rank1_two_intervals(&s(9, "147")).is_err());
    }

    #[test]
    fn ar_sequences() {
        let a = ar_sequence_start(&s(9, "147")).unwrap();
        assert_eq!(a.middle.to_string(), "258|147|369");
        let a = ar_sequence_start(&s(6, "135")).unwrap();
        assert_eq!(a.right.to_string(), "246|135");
        assert!(ar_sequence_start(&s(9, "124")).is_err());
        let d = ar_sequence_end(&s(9, "147")).unwrap();
        assert_eq!(d.left.to_string(), "258|369");
    }

    #[test]
    fn split_rules() {
        let sp = ar_split_rule(&s(9, "135"), Direction::Start).unwrap();
        assert_eq!(sp.summand, s(9, "235"));
        assert_eq!(sp.complement.to_string(), "146|357");
        let sp = ar_split_rule(&s(7, "135"), Direction::Start).unwrap();
        assert_eq!(sp.complement.to_string(), "146|357");
        assert_eq!(ar_split_rule(&s(6, "135"), Direction::Start), Err(Error::SplitNeedsSeven(6)));
        let sp = ar_split_rule(&s(9, "357"), Direction::End).unwrap();
        assert_eq!(sp.summand, s(9, "356"));
        assert_eq!(sp.complement.to_string(), "135|247");
    }

    #[test]
    fn census_counts() {
        let c = census_39().unwrap();
        assert_eq!(c.len(), 225);
    }
}
