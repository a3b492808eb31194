// SPDX-License-Identifier: MIT
//! Cyclic k-subsets of `[n] = {1, …, n}`.
//!
//! A [`KSubset`] encodes the rank-1 module `L_I`. Indices are 1-based and all
//! arithmetic is cyclic, with residue 0 written as `n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduces an integer to the cyclic range `1..=n`.
pub fn cyc(i: i64, n: usize) -> usize {
    let n = n as i64;
    ((i - 1).rem_euclid(n) + 1) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SubsetRepr", into = "SubsetRepr")]
pub struct KSubset {
    n: usize,
    elements: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SubsetRepr {
    n: usize,
    k: usize,
    elements: Vec<usize>,
}

impl TryFrom<SubsetRepr> for KSubset {
    type Error = Error;

    fn try_from(r: SubsetRepr) -> Result<Self> {
        let s = KSubset::new(r.n, r.elements)?;
        if s.k() != r.k {
            return Err(Error::InvalidSubset(format!("k = {} but {} elements", r.k, s.k())));
        }
        Ok(s)
    }
}

impl From<KSubset> for SubsetRepr {
    fn from(s: KSubset) -> Self {
        SubsetRepr { n: s.n, k: s.k(), elements: s.elements }
    }
}

impl KSubset {
    /// Builds a subset from arbitrary-order elements in `1..=n`.
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSubset("n must be positive".into()));
        }
        let mut v: Vec<usize> = elements.into_iter().collect();
        v.sort_unstable();
        let len = v.len();
        v.dedup();
        if v.len() != len {
            return Err(Error::InvalidSubset(format!("repeated element in {v:?}")));
        }
        if v.is_empty() {
            return Err(Error::InvalidSubset("empty subset".into()));
        }
        if let Some(&e) = v.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidSubset(format!("element {e} outside [1, {n}]")));
        }
        Ok(KSubset { n, elements: v })
    }

    /// Builds a subset from elements reduced cyclically modulo `n`.
    pub fn from_cyclic(n: usize, elements: impl IntoIterator<Item = i64>) -> Result<Self> {
        Self::new(n, elements.into_iter().map(|e| cyc(e, n)))
    }

    /// Parses digit notation such as `"156"` (only for `n ≤ 9`) or a
    /// comma/space separated list.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let elems: Vec<usize> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::InvalidSubset(format!("{t}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidSubset(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(n, elems)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// Membership of a cyclically reduced index.
    pub fn contains_cyc(&self, i: i64) -> bool {
        self.contains(cyc(i, self.n))
    }

    /// Indicator vector of length `n` (position `i-1` for label `i`).
    pub fn indicator(&self) -> Vec<i64> {
        let mut v = vec![0; self.n];
        for &e in &self.elements {
            v[e - 1] = 1;
        }
        v
    }

    /// The complement `[n] ∖ I`, or `None` when `I = [n]`.
    pub fn complement(&self) -> Option<KSubset> {
        let c: Vec<usize> = (1..=self.n).filter(|&i| !self.contains(i)).collect();
        if c.is_empty() {
            None
        } else {
            Some(KSubset { n: self.n, elements: c })
        }
    }

    fn check_same(&self, other: &KSubset) -> Result<()> {
        if self.n != other.n || self.k() != other.k() {
            return Err(Error::Mismatch(format!(
                "(k, n) = ({}, {}) vs ({}, {})",
                self.k(),
                self.n,
                other.k(),
                other.n
            )));
        }
        Ok(())
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for e in &self.elements {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Peaks `{i ∉ I : i+1 ∈ I}`.
pub fn peaks(s: &KSubset) -> BTreeSet<usize> {
    (1..=s.n)
        .filter(|&i| !s.contains(i) && s.contains_cyc(i as i64 + 1))
        .collect()
}

/// Valleys `{i ∈ I : i+1 ∉ I}`.
pub fn valleys(s: &KSubset) -> BTreeSet<usize> {
    (1..=s.n)
        .filter(|&i| s.contains(i) && !s.contains_cyc(i as i64 + 1))
        .collect()
}

/// Returns `Some(r)` when the differences `I∖J` and `J∖I` strictly alternate
/// with `r` elements each, and `None` otherwise.
pub fn interlacing_degree(i: &KSubset, j: &KSubset) -> Result<Option<usize>> {
    i.check_same(j)?;
    let mut marks: Vec<(usize, bool)> = i
        .elements
        .iter()
        .filter(|e| !j.contains(**e))
        .map(|&e| (e, true))
        .chain(j.elements.iter().filter(|e| !i.contains(**e)).map(|&e| (e, false)))
        .collect();
    marks.sort_unstable();
    let alternates = marks.windows(2).all(|w| w[0].1 != w[1].1);
    Ok(alternates.then_some(marks.len() / 2))
}

/// Adds `a` to every element modulo `n`.
pub fn shift_subset(s: &KSubset, a: i64) -> KSubset {
    KSubset::from_cyclic(s.n, s.elements.iter().map(|&e| e as i64 + a))
        .expect("shift of a valid subset is valid")
}

/// All k-subsets of `[n]` in lexicographic order.
pub fn all_subsets(k: usize, n: usize) -> Vec<KSubset> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<KSubset>) {
        if cur.len() == k {
            out.push(KSubset { n, elements: cur.clone() });
            return;
        }
        for e in start..=n {
            if n - e + 1 < k - cur.len() {
                break;
            }
            cur.push(e);
            rec(e + 1, k, n, cur, out);
            cur.pop();
        }
    }
    if k >= 1 && k <= n {
        rec(1, k, n, &mut cur, &mut out);
    }
    out
}
