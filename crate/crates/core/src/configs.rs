// SPDX-License-Identifier: MIT
//! Subspace configurations read off the close-packed contours of a profile.
//!
//! Each quasi-box between rows `r` and `r+1` is a region of multiplicity `r`;
//! the region below the last rim has multiplicity `m`. An edge `u → w` records
//! the inclusion of the subspace of `u` into the subspace of `w`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profiles::{quasi_boxes, Profile, QuasiBox};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspacePoset {
    /// `(id, multiplicity)`, ids distinct.
    pub vertices: Vec<(usize, usize)>,
    /// Inclusions `(smaller, larger)`.
    pub edges: BTreeSet<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl SubspacePoset {
    pub fn new(vertices: Vec<(usize, usize)>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        SubspacePoset { vertices, edges: edges.into_iter().collect() }
    }

    pub fn mult(&self, id: usize) -> usize {
        self.vertices.iter().find(|v| v.0 == id).map(|v| v.1).expect("known vertex")
    }

    pub fn out_neighbors(&self, id: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == id).map(|e| e.1).collect()
    }

    pub fn in_neighbors(&self, id: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.1 == id).map(|e| e.0).collect()
    }

    /// Multiplicities sorted, for shape comparisons.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.vertices.iter().map(|v| v.1).collect();
        m.sort_unstable();
        m
    }

    /// Graphviz rendering with multiplicities as labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        for (id, m) in &self.vertices {
            let _ = writeln!(s, "  v{id} [label=\"{m}\"];");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  v{a} -> v{b};");
        }
        s.push_str("}\n");
        s
    }

    fn remove(&mut self, id: usize) {
        let ins = self.in_neighbors(id);
        let outs = self.out_neighbors(id);
        self.vertices.retain(|v| v.0 != id);
        self.edges.retain(|e| e.0 != id && e.1 != id);
        for &a in &ins {
            for &b in &outs {
                self.edges.insert((a, b));
            }
        }
    }

    /// Drops edges implied by a longer chain of inclusions.
    pub fn transitive_reduction(&mut self) {
        let redundant: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                self.out_neighbors(a).into_iter().any(|w| w != b && reachable(self, w).contains(&b))
            })
            .collect();
        for e in redundant {
            self.edges.remove(&e);
        }
    }

    fn is_connected(&self) -> bool {
        let Some(&(start, _)) = self.vertices.first() else { return true };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for &(x, y) in &self.edges {
                for (p, q) in [(x, y), (y, x)] {
                    if p == a && seen.insert(q) {
                        stack.push(q);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// Builds the configuration of a profile with at least two rows.
///
/// A level-`r` region over arc edge `e` includes into the region of the first
/// deeper level whose arc contains `e`, or into the bottom region.
pub fn poset_from_profile(p: &Profile) -> Result<SubspacePoset> {
    let m = p.rank();
    if m < 2 {
        return Err(Error::RankTooSmall);
    }
    let n = p.n();
    let levels: Vec<Vec<QuasiBox>> = p
        .rows()
        .windows(2)
        .map(|w| quasi_boxes(&w[0], &w[1]))
        .collect::<Result<_>>()?;
    let mut vertices = Vec::new();
    let mut ids: Vec<Vec<usize>> = Vec::new();
    let mut next = 1;
    for (r, boxes) in levels.iter().enumerate() {
        ids.push(Vec::new());
        for _ in boxes {
            vertices.push((next, r + 1));
            ids[r].push(next);
            next += 1;
        }
    }
    let bottom = next;
    vertices.push((bottom, m));
    let mut edges = BTreeSet::new();
    for (r, boxes) in levels.iter().enumerate() {
        for (b, qb) in boxes.iter().enumerate() {
            for e in qb.arc(n) {
                let target = (r + 1..levels.len())
                    .find_map(|r2| levels[r2].iter().position(|q2| q2.covers(e, n)).map(|b2| ids[r2][b2]))
                    .unwrap_or(bottom);
                edges.insert((ids[r][b], target));
            }
        }
    }
    let mut poset = SubspacePoset { vertices, edges };
    poset.transitive_reduction();
    Ok(poset)
}

/// Removes vertices forced as intersections, smallest id first, to a fixed point.
///
/// A vertex `u` with out-neighbors `w₁..w_t` (`t ≥ 2`) that all include into a
/// common `z` is removed when `mult(u) = Σ mult(w_i) - (t-1) mult(z)`.
pub fn simplify(s: &SubspacePoset) -> SubspacePoset {
    let mut cur = s.clone();
    'outer: loop {
        let mut ids: Vec<usize> = cur.vertices.iter().map(|v| v.0).collect();
        ids.sort_unstable();
        for u in ids {
            let outs = cur.out_neighbors(u);
            if outs.len() < 2 {
                continue;
            }
            let common: BTreeSet<usize> = outs
                .iter()
                .map(|&w| cur.out_neighbors(w).into_iter().collect::<BTreeSet<_>>())
                .reduce(|a, b| a.intersection(&b).copied().collect())
                .unwrap_or_default();
            let total: i64 = outs.iter().map(|&w| cur.mult(w) as i64).sum();
            let t = outs.len() as i64;
            let forced = common
                .iter()
                .any(|&z| total - (t - 1) * cur.mult(z) as i64 == cur.mult(u) as i64);
            if forced {
                cur.remove(u);
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Tree shapes whose Tits form is positive semi-definite.
fn dynkin_or_affine_tree(s: &SubspacePoset) -> bool {
    let nv = s.vertices.len();
    let deg = |id: usize| s.edges.iter().filter(|e| e.0 == id || e.1 == id).count();
    if s.edges.len() + 1 != nv {
        return false;
    }
    let degs: Vec<usize> = s.vertices.iter().map(|v| deg(v.0)).collect();
    let branch: Vec<usize> = s.vertices.iter().filter(|v| deg(v.0) >= 3).map(|v| v.0).collect();
    match branch.len() {
        0 => true,
        1 => {
            let c = branch[0];
            let mut arms: Vec<usize> = neighbors(s, c)
                .into_iter()
                .map(|nb| arm_length(s, c, nb))
                .collect();
            arms.sort_unstable();
            matches!(arms.as_slice(), [1, 1, _] | [1, 2, 2..=5] | [2, 2, 2] | [1, 3, 3] | [1, 1, 1, 1])
        }
        2 => {
            // Two branch points: only the affine D shape with all arms of length one.
            degs.iter().all(|&d| d <= 3)
                && branch.iter().all(|&b| {
                    neighbors(s, b).into_iter().filter(|&nb| deg(nb) == 1).count() == 2
                })
        }
        _ => false,
    }
}

fn neighbors(s: &SubspacePoset, id: usize) -> Vec<usize> {
    s.edges
        .iter()
        .filter_map(|&(a, b)| if a == id { Some(b) } else if b == id { Some(a) } else { None })
        .collect()
}

fn arm_length(s: &SubspacePoset, from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let nbs: Vec<usize> = neighbors(s, cur).into_iter().filter(|&x| x != prev).collect();
        if nbs.len() != 1 {
            return len;
        }
        prev = cur;
        cur = nbs[0];
        len += 1;
    }
}

/// `Σ d_v² - Σ_{edges} d_a d_b`.
pub fn tits_form(s: &SubspacePoset) -> i64 {
    let sq: i64 = s.vertices.iter().map(|v| (v.1 * v.1) as i64).sum();
    let cross: i64 = s.edges.iter().map(|&(a, b)| (s.mult(a) * s.mult(b)) as i64).sum();
    sq - cross
}

/// Whether the subspace of `u` is a direct summand in general position.
///
/// Every vertex above `u` contains it. The vertices not above `u` share no
/// lower bound with it, and their maximal elements together with `u` fit into
/// the ambient dimension, so a complement of `u` can be chosen to contain them.
fn splits_off(s: &SubspacePoset, u: usize, top: usize) -> bool {
    let above = reachable(s, u);
    let others: Vec<usize> = s
        .vertices
        .iter()
        .map(|v| v.0)
        .filter(|&v| v != u && !above.contains(&v))
        .collect();
    let below_u: BTreeSet<usize> = s.vertices.iter().map(|v| v.0).filter(|&v| reachable(s, v).contains(&u)).collect();
    if others.iter().any(|&v| below_u.contains(&v) || s.vertices.iter().any(|w| {
        let r = reachable(s, w.0);
        r.contains(&u) && r.contains(&v)
    })) {
        return false;
    }
    let maximal: usize = others
        .iter()
        .filter(|&&v| !others.iter().any(|&w| w != v && reachable(s, v).contains(&w)))
        .map(|&v| s.mult(v))
        .sum();
    maximal + s.mult(u) <= top
}

/// Decides whether an indecomposable configuration with these multiplicities exists.
///
/// Disconnected posets decompose, and so do posets where some vertex splits
/// off in general position. On Dynkin and affine trees the multiplicity vector
/// must be a positive root, i.e. have Tits form at most 1. Everything else is
/// `Unknown`.
pub fn generic_indecomposable(s: &SubspacePoset) -> Verdict {
    if s.vertices.len() == 1 {
        return if s.vertices[0].1 == 1 { Verdict::Yes } else { Verdict::No };
    }
    if !s.is_connected() {
        return Verdict::No;
    }
    let top = s.vertices.iter().map(|v| v.1).max().unwrap_or(0);
    if s.vertices.iter().any(|&(u, mu)| mu < top && splits_off(s, u, top)) {
        return Verdict::No;
    }
    if dynkin_or_affine_tree(s) {
        return if tits_form(s) <= 1 { Verdict::Yes } else { Verdict::No };
    }
    Verdict::Unknown
}

fn reachable(s: &SubspacePoset, u: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![u];
    while let Some(a) = stack.pop() {
        for b in s.out_neighbors(a) {
            if seen.insert(b) {
                stack.push(b);
            }
        }
    }
    seen
}

/// Configuration, simplification and verdict for a profile.
pub fn profile_verdict(p: &Profile) -> Result<Verdict> {
    Ok(generic_indecomposable(&simplify(&poset_from_profile(p)?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let p = Profile::parse(9, "169|147|358").unwrap();
        let s = poset_from_profile(&p).unwrap();
        assert_eq!(s.multiplicities(), vec![1, 1, 2, 2, 2, 3]);
        let e: Vec<(usize, usize)> = s.edges.iter().copied().filter(|e| e.0 <= 2).collect();
        assert_eq!(e, vec![(1, 3), (1, 4), (2, 4), (2, 5)]);
        let t = simplify(&s);
        assert_eq!(t.multiplicities(), vec![2, 2, 2, 3]);
        assert_eq!(t.edges.len(), 3);
        assert_eq!(generic_indecomposable(&t), Verdict::No);
    }

    #[test]
    fn three_boxes_and_small_shapes() {
        let p = Profile::parse(9, "147|258").unwrap();
        let s = poset_from_profile(&p).unwrap();
        assert_eq!(s.multiplicities(), vec![1, 1, 1, 2]);
        assert_eq!(s.edges.len(), 3);
        assert_eq!(generic_indecomposable(&simplify(&s)), Verdict::Yes);
        assert!(poset_from_profile(&Profile::parse(9, "147").unwrap()).is_err());
        assert_eq!(generic_indecomposable(&SubspacePoset::new(vec![(1, 1)], [])), Verdict::Yes);
        let a3 = SubspacePoset::new(vec![(1, 1), (2, 2), (3, 1)], [(1, 2), (3, 2)]);
        assert_eq!(generic_indecomposable(&a3), Verdict::No);
        let rule = SubspacePoset::new(vec![(1, 1), (2, 2), (3, 2), (4, 3)], [(1, 2), (1, 3), (2, 4), (3, 4)]);
        assert_eq!(simplify(&rule).vertices.len(), 3);
        let plain = SubspacePoset::new(vec![(1, 1), (2, 2)], [(1, 2)]);
        assert_eq!(simplify(&plain), plain);
    }

    #[test]
    fn star_of_four() {
        let p = Profile::parse(9, "147|147|258").unwrap();
        let s = poset_from_profile(&p).unwrap();
        assert_eq!(s.multiplicities(), vec![2, 2, 2, 3]);
        let star = SubspacePoset::new(
            vec![(1, 2), (2, 2), (3, 2), (4, 2), (5, 3)],
            [(1, 5), (2, 5), (3, 5), (4, 5)],
        );
        assert_eq!(generic_indecomposable(&star), Verdict::Yes);
        assert_eq!(generic_indecomposable(&simplify(&s)), Verdict::No);
        assert!(s.to_dot().starts_with("digraph"));
    }
}
