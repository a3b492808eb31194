// SPDX-License-Identifier: MIT
//! Profiles of filtered modules and the rim geometry between two rows.
//!
//! Row 1 is the top quotient factor, the last row the submodule factor.
//! Between two rows `I` (upper) and `J` (lower) the close-packed gap
//! `d(j) = d(j-1) + [j ∈ J] - [j ∈ I]` is normalized to minimum 0; its zeros
//! are the meeting points and the arcs in between are the quasi-boxes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subsets::{interlacing_degree, shift_subset, KSubset};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ProfileRepr", into = "ProfileRepr")]
pub struct Profile {
    n: usize,
    k: usize,
    rows: Vec<KSubset>,
}

#[derive(Serialize, Deserialize)]
struct ProfileRepr {
    n: usize,
    k: usize,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<ProfileRepr> for Profile {
    type Error = Error;

    fn try_from(r: ProfileRepr) -> Result<Self> {
        let p = Profile::from_vecs(r.n, r.rows)?;
        if p.k != r.k {
            return Err(Error::InvalidProfile(format!("k = {} but rows have {}", r.k, p.k)));
        }
        Ok(p)
    }
}

impl From<Profile> for ProfileRepr {
    fn from(p: Profile) -> Self {
        ProfileRepr {
            n: p.n,
            k: p.k,
            rows: p.rows.iter().map(|r| r.elements().to_vec()).collect(),
        }
    }
}

/// Mode of the label insertion/removal maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IncMode {
    /// The label belongs to every row; `k` changes with `n`.
    Subset,
    /// The label belongs to no row; only `n` changes.
    Complement,
}

impl Profile {
    pub fn new(rows: Vec<KSubset>) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::InvalidProfile("a profile needs at least one row".into()))?;
        let (n, k) = (first.n(), first.k());
        if let Some(r) = rows.iter().find(|r| r.n() != n || r.k() != k) {
            return Err(Error::Mismatch(format!("row {r} is not over (k, n) = ({k}, {n})")));
        }
        Ok(Profile { n, k, rows })
    }

    pub fn from_vecs(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(rows.into_iter().map(|r| KSubset::new(n, r)).collect::<Result<_>>()?)
    }

    /// Parses `"359|258|147"`; entries are digits for `n ≤ 9`, otherwise
    /// space or comma separated.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Self::new(s.split('|').map(|r| KSubset::parse(n, r)).collect::<Result<_>>()?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[KSubset] {
        &self.rows
    }

    /// Multiplicity vector `x_i = #{rows containing i}`.
    pub fn multiplicity_vector(&self) -> Vec<i64> {
        let mut x = vec![0i64; self.n];
        for r in &self.rows {
            for &e in r.elements() {
                x[e - 1] += 1;
            }
        }
        x
    }

    /// Content as a sorted multiset of labels.
    pub fn content(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.rows.iter().flat_map(|r| r.elements().iter().copied()).collect();
        c.sort_unstable();
        c
    }

    pub fn is_weakly_column_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| {
            w[0].elements().iter().zip(w[1].elements()).all(|(a, b)| a >= b)
        })
    }

    pub fn is_canonical(&self) -> bool {
        let first = self.rows[0].elements();
        let last = self.rows[self.rows.len() - 1].elements();
        self.is_weakly_column_decreasing() && (1..self.k).all(|j| last[j] >= first[j - 1])
    }

    /// Every pair of rows is interlacing.
    pub fn is_interlacing(&self) -> bool {
        let m = self.rows.len();
        (0..m).all(|a| {
            (a + 1..m).all(|b| matches!(interlacing_degree(&self.rows[a], &self.rows[b]), Ok(Some(_))))
        })
    }

    /// All `m` rotations of the row order, starting with `self`.
    pub fn cyclic_permutations(&self) -> Vec<Profile> {
        let m = self.rows.len();
        (0..m)
            .map(|s| Profile {
                n: self.n,
                k: self.k,
                rows: (0..m).map(|i| self.rows[(i + s) % m].clone()).collect(),
            })
            .collect()
    }

    /// The first canonical rotation, if any.
    pub fn canonical_rotation(&self) -> Option<Profile> {
        self.cyclic_permutations().into_iter().find(|p| p.is_canonical())
    }

    /// Adds `a` to every label of every row.
    pub fn shift(&self, a: i64) -> Profile {
        Profile {
            n: self.n,
            k: self.k,
            rows: self.rows.iter().map(|r| shift_subset(r, a)).collect(),
        }
    }

    /// Inserts the label `j + 1`, fixing labels `≤ j` and moving labels `> j` up.
    pub fn increase(&self, j: usize, mode: IncMode) -> Result<Profile> {
        if j == 0 || j > self.n {
            return Err(Error::InvalidSubset(format!("label {j} outside [1, {}]", self.n)));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut e: Vec<usize> =
                    r.elements().iter().map(|&i| if i > j { i + 1 } else { i }).collect();
                if mode == IncMode::Subset {
                    e.push(j + 1);
                }
                KSubset::new(self.n + 1, e)
            })
            .collect::<Result<_>>()?;
        Profile::new(rows)
    }

    /// Removes the label `j`, moving labels `> j` down.
    pub fn decrease(&self, j: usize, mode: IncMode) -> Result<Profile> {
        if j == 0 || j > self.n || self.n < 2 {
            return Err(Error::InvalidSubset(format!("label {j} outside [1, {}]", self.n)));
        }
        for r in &self.rows {
            match mode {
                IncMode::Subset if !r.contains(j) => return Err(Error::LabelNotCommon(j)),
                IncMode::Complement if r.contains(j) => return Err(Error::LabelPresent(j)),
                _ => {}
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                KSubset::new(
                    self.n - 1,
                    r.elements().iter().filter(|&&i| i != j).map(|&i| if i > j { i - 1 } else { i }),
                )
            })
            .collect::<Result<_>>()
            .map_err(|_| Error::DegenerateCollapse)?;
        Profile::new(rows)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// A region between two close-packed rims, over the cyclic arc `(start, end]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiBox {
    pub start: usize,
    pub end: usize,
    pub size: usize,
    pub cosize: usize,
    pub is_box: bool,
}

impl QuasiBox {
    /// Labels of the arc in cyclic order.
    pub fn arc(&self, n: usize) -> Vec<usize> {
        arc_labels(self.start, self.end, n)
    }

    /// Whether edge label `e` lies in the arc.
    pub fn covers(&self, e: usize, n: usize) -> bool {
        let oe = (e + n - self.start) % n;
        let len = match (self.end + n - self.start) % n {
            0 => n,
            l => l,
        };
        let oe = if oe == 0 { n } else { oe };
        oe <= len
    }
}

fn arc_labels(start: usize, end: usize, n: usize) -> Vec<usize> {
    let len = if end > start { end - start } else { end + n - start };
    (1..=len).map(|o| (start + o - 1) % n + 1).collect()
}

fn check_pair(i: &KSubset, j: &KSubset) -> Result<()> {
    if i.n() != j.n() || i.k() != j.k() {
        return Err(Error::Mismatch(format!("{i} vs {j}")));
    }
    Ok(())
}

/// Close-packed gap `d(0..=n)` between the upper rim of `i` and the lower rim of `j`.
pub fn rim_difference(i: &KSubset, j: &KSubset) -> Result<Vec<i64>> {
    check_pair(i, j)?;
    let n = i.n();
    let mut d = vec![0i64; n + 1];
    for p in 1..=n {
        d[p] = d[p - 1] + j.contains(p) as i64 - i.contains(p) as i64;
    }
    let min = *d.iter().min().expect("n ≥ 1");
    d.iter_mut().for_each(|x| *x -= min);
    Ok(d)
}

/// Meeting points: labels `p ∈ [n]` with `d(p) = 0`.
pub fn meeting_points(i: &KSubset, j: &KSubset) -> Result<Vec<usize>> {
    let d = rim_difference(i, j)?;
    Ok((1..=i.n()).filter(|&p| d[p] == 0).collect())
}

/// Quasi-boxes between the rims of `i` (upper) and `j` (lower), ordered by arc start.
///
/// A quasi-box is a box when, along its arc, the lower rim takes all of its
/// descents first and the upper rim all of its descents last.
pub fn quasi_boxes(i: &KSubset, j: &KSubset) -> Result<Vec<QuasiBox>> {
    let d = rim_difference(i, j)?;
    let n = i.n();
    let zeros: Vec<usize> = (1..=n).filter(|&p| d[p] == 0).collect();
    let mut out = Vec::new();
    for (a, &za) in zeros.iter().enumerate() {
        let zb = zeros[(a + 1) % zeros.len()];
        let arc = arc_labels(za, zb, n);
        if arc.len() < 2 || arc[..arc.len() - 1].iter().any(|&p| d[p] == 0) {
            continue;
        }
        let size = arc.iter().filter(|&&p| i.contains(p)).count();
        let cosize = arc.len() - size;
        let in_j = arc.iter().filter(|&&p| j.contains(p)).count();
        let lower_first = arc.iter().take(in_j).all(|&p| j.contains(p));
        let upper_last = arc.iter().rev().take(size).all(|&p| i.contains(p));
        out.push(QuasiBox { start: za, end: zb, size, cosize, is_box: lower_first && upper_last });
    }
    Ok(out)
}

/// A fully reduced pair over `(k', n')` together with the labels kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapsed {
    pub upper: KSubset,
    pub lower: KSubset,
    /// `kept[t - 1]` is the original label of collapsed label `t`.
    pub kept: Vec<usize>,
}

/// Removes common labels and common non-labels and relabels in order.
pub fn collapse(i: &KSubset, j: &KSubset) -> Result<Collapsed> {
    check_pair(i, j)?;
    let kept: Vec<usize> = (1..=i.n()).filter(|&p| i.contains(p) != j.contains(p)).collect();
    if kept.is_empty() {
        return Err(Error::DegenerateCollapse);
    }
    let n2 = kept.len();
    let pick = |s: &KSubset| {
        KSubset::new(n2, (1..=n2).filter(|&t| s.contains(kept[t - 1])))
    };
    Ok(Collapsed { upper: pick(i)?, lower: pick(j)?, kept })
}

/// Rotates the collapsed labels by `a`, keeping common labels fixed.
pub fn a_shift(i: &KSubset, j: &KSubset, a: i64) -> Result<(KSubset, KSubset)> {
    let c = collapse(i, j)?;
    let n2 = c.kept.len();
    let lift = |s: &KSubset, orig: &KSubset| {
        let moved = shift_subset(s, a);
        let common = orig.elements().iter().copied().filter(|&p| i.contains(p) && j.contains(p));
        KSubset::new(i.n(), moved.elements().iter().map(|&t| c.kept[t - 1]).chain(common))
    };
    debug_assert_eq!(c.upper.n(), n2);
    Ok((lift(&c.upper, i)?, lift(&c.lower, j)?))
}
