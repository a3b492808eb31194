// SPDX-License-Identifier: MIT
//! The root system of the diagram `J_{k,n}` on the lattice `ℤⁿ(k)`.
//!
//! Nodes `1..n-1` carry the simple roots `α_i = -e_i + e_{i+1}` and node `n`
//! carries `β = e_1 + … + e_k`, attached to node `k`. All forms are computed
//! exactly with denominators dividing `k²`.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profiles::Profile;

pub type Q = Ratio<i64>;

/// A simple reflection generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gen {
    /// `α_i`, `1 ≤ i ≤ n-1`.
    Alpha(usize),
    Beta,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Alpha(i) => write!(f, "α{i}"),
            Gen::Beta => write!(f, "β"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootType {
    RealRoot,
    ImaginaryRoot,
    NotRoot,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootVector {
    pub n: usize,
    pub k: usize,
    pub x: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleRootCoords {
    pub c_beta: i64,
    /// Coefficients of `α_1..α_{n-1}`.
    pub c: Vec<i64>,
}

impl SimpleRootCoords {
    fn node_values(&self) -> impl Iterator<Item = i64> + '_ {
        self.c.iter().copied().chain(std::iter::once(self.c_beta))
    }

    fn is_simple(&self) -> bool {
        self.node_values().filter(|&v| v != 0).count() == 1 && self.node_values().any(|v| v == 1)
    }
}

impl fmt::Display for SimpleRootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = std::iter::once((self.c_beta, "β".to_string()))
            .chain(self.c.iter().enumerate().map(|(i, &c)| (c, format!("α{}", i + 1))));
        let mut first = true;
        for (c, name) in terms.filter(|(c, _)| *c != 0) {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}{name}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl RootVector {
    pub fn new(k: usize, x: Vec<i64>) -> Result<Self> {
        let n = x.len();
        if k == 0 || k >= n {
            return Err(Error::Mismatch(format!("need 1 ≤ k < n, got k = {k}, n = {n}")));
        }
        let sum: i64 = x.iter().sum();
        if sum % k as i64 != 0 {
            return Err(Error::NotInLattice { sum, k });
        }
        Ok(RootVector { n, k, x })
    }

    /// The simple root attached to a generator.
    pub fn simple(n: usize, k: usize, g: Gen) -> Self {
        let mut x = vec![0; n];
        match g {
            Gen::Alpha(i) => {
                x[i - 1] = -1;
                x[i] = 1;
            }
            Gen::Beta => x[..k].iter_mut().for_each(|v| *v = 1),
        }
        RootVector { n, k, x }
    }

    pub fn sum(&self) -> i64 {
        self.x.iter().sum()
    }

    fn check_same(&self, w: &RootVector) -> Result<()> {
        if self.n != w.n || self.k != w.k {
            return Err(Error::Mismatch(format!(
                "(k, n) = ({}, {}) vs ({}, {})",
                self.k, self.n, w.k, w.n
            )));
        }
        Ok(())
    }
}

fn correction(k: usize) -> Q {
    let k = k as i64;
    Q::new(2 - k, k * k)
}

/// `B(v, w) = Σ v_i w_i + ((2-k)/k²)(Σ v_i)(Σ w_i)`.
pub fn bilinear(v: &RootVector, w: &RootVector) -> Result<Q> {
    v.check_same(w)?;
    let dot: i64 = v.x.iter().zip(&w.x).map(|(a, b)| a * b).sum();
    Ok(Q::from(dot) + correction(v.k) * Q::from(v.sum() * w.sum()))
}

/// `q(v) = B(v, v)`.
pub fn q(v: &RootVector) -> Q {
    bilinear(v, v).expect("same parameters")
}

/// The generators of `J_{k,n}` indexed by node: `α_1..α_{n-1}`, then `β`.
pub fn generators(n: usize) -> Vec<Gen> {
    (1..n).map(Gen::Alpha).chain(std::iter::once(Gen::Beta)).collect()
}

/// Diagram adjacency on nodes `1..=n`: the path `1..n-1` plus `n ~ k`.
pub fn adjacent(n: usize, k: usize, a: usize, b: usize) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    (b == a + 1 && b < n) || (b == n && a == k)
}

pub fn to_simple_coords(v: &RootVector) -> Result<SimpleRootCoords> {
    let sum = v.sum();
    if sum % v.k as i64 != 0 {
        return Err(Error::NotInLattice { sum, k: v.k });
    }
    let c_beta = sum / v.k as i64;
    let mut acc = 0;
    let mut c = Vec::with_capacity(v.n - 1);
    for i in 0..v.n - 1 {
        acc += v.x[i] - if i < v.k { c_beta } else { 0 };
        c.push(-acc);
    }
    Ok(SimpleRootCoords { c_beta, c })
}

pub fn from_simple_coords(n: usize, k: usize, s: &SimpleRootCoords) -> RootVector {
    let x = (0..n)
        .map(|i| {
            let prev = if i == 0 { 0 } else { s.c[i - 1] };
            let cur = if i == n - 1 { 0 } else { s.c[i] };
            prev - cur + if i < k { s.c_beta } else { 0 }
        })
        .collect();
    RootVector { n, k, x }
}

/// The simple reflection `s_g(v) = v - B(v, g) g`.
pub fn reflect(v: &RootVector, g: Gen) -> RootVector {
    let mut x = v.x.clone();
    match g {
        Gen::Alpha(i) => x.swap(i - 1, i),
        Gen::Beta => {
            let tail: i64 = v.x[v.k..].iter().sum();
            let r = tail - 2 * v.sum() / v.k as i64;
            x[..v.k].iter_mut().for_each(|e| *e += r);
        }
    }
    RootVector { n: v.n, k: v.k, x }
}

/// Applies a word of reflections, rightmost letter first.
pub fn apply_word(v: &RootVector, word: &[Gen]) -> RootVector {
    word.iter().rev().fold(v.clone(), |acc, &g| reflect(&acc, g))
}

/// Parses words like `"s3s4sβs1"` (`sb` is accepted for `sβ`).
pub fn parse_word(s: &str) -> Result<Vec<Gen>> {
    let bad = || Error::InvalidSubset(format!("bad reflection word {s:?}"));
    let s = s.replace("sβ", "sb");
    s.split('s')
        .skip(1)
        .map(|t| match t.trim() {
            "b" => Ok(Gen::Beta),
            t => t.parse::<usize>().map(Gen::Alpha).map_err(|_| bad()),
        })
        .collect::<Result<_>>()
        .and_then(|w: Vec<Gen>| if s.starts_with('s') { Ok(w) } else { Err(bad()) })
}

/// `⟨v, g^∨⟩ = B(v, g)` for every generator, in node order.
pub fn pairings(v: &RootVector) -> Vec<Q> {
    generators(v.n)
        .into_iter()
        .map(|g| bilinear(v, &RootVector::simple(v.n, v.k, g)).expect("same parameters"))
        .collect()
}

fn support_connected(n: usize, k: usize, c: &SimpleRootCoords) -> bool {
    let supp: Vec<usize> = c
        .node_values()
        .enumerate()
        .filter(|(_, v)| *v != 0)
        .map(|(i, _)| i + 1)
        .collect();
    let Some(&start) = supp.first() else { return false };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        for &b in &supp {
            if !seen.contains(&b) && adjacent(n, k, a, b) {
                seen.push(b);
                stack.push(b);
            }
        }
    }
    seen.len() == supp.len()
}

/// Reduces to a simple root or to the fundamental chamber.
pub fn classify(v: &RootVector) -> Result<RootType> {
    let mut c = to_simple_coords(v)?;
    if c.node_values().all(|x| x == 0) {
        return Err(Error::ZeroVector);
    }
    let pos = c.node_values().any(|x| x > 0);
    let neg = c.node_values().any(|x| x < 0);
    if pos && neg {
        return Ok(RootType::NotRoot);
    }
    let mut cur = v.clone();
    if neg {
        cur.x.iter_mut().for_each(|e| *e = -*e);
        c = to_simple_coords(&cur)?;
    }
    let gens = generators(v.n);
    loop {
        if c.is_simple() {
            return Ok(RootType::RealRoot);
        }
        let pr = pairings(&cur);
        match pr.iter().position(|p| *p > Q::from(0)) {
            Some(idx) => {
                cur = reflect(&cur, gens[idx]);
                c = to_simple_coords(&cur)?;
                if c.node_values().any(|x| x < 0) {
                    return Ok(RootType::NotRoot);
                }
            }
            None => {
                return Ok(if support_connected(v.n, v.k, &c) {
                    RootType::ImaginaryRoot
                } else {
                    RootType::NotRoot
                });
            }
        }
    }
}

/// Root data of a profile's multiplicity vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRoot {
    pub x: Vec<i64>,
    pub q: Q,
    pub root_type: RootType,
    pub coords: SimpleRootCoords,
}

pub fn profile_root(p: &Profile) -> Result<ProfileRoot> {
    let v = RootVector::new(p.k(), p.multiplicity_vector())?;
    Ok(ProfileRoot {
        q: q(&v),
        root_type: classify(&v)?,
        coords: to_simple_coords(&v)?,
        x: v.x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(k: usize, x: &[i64]) -> RootVector {
        RootVector::new(k, x.to_vec()).unwrap()
    }

    #[test]
    fn forms() {
        assert_eq!(q(&rv(3, &[2, 1, 1, 2, 2, 1, 1, 1, 1])), Q::from(2));
        assert_eq!(q(&rv(3, &[0; 9])), Q::from(0));
        assert_eq!(q(&rv(3, &[1, 0, 0, 1, 0, 0, 1, 0, 0])), Q::from(2));
        let b = RootVector::simple(9, 3, Gen::Beta);
        for i in 1..9 {
            let a = RootVector::simple(9, 3, Gen::Alpha(i));
            assert_eq!(q(&a), Q::from(2));
            let want = if i == 3 { -1 } else { 0 };
            assert_eq!(bilinear(&b, &a).unwrap(), Q::from(want));
        }
        assert_eq!(q(&b), Q::from(2));
    }

    #[test]
    fn coords() {
        let c = to_simple_coords(&rv(3, &[2, 1, 1, 2, 2, 1, 1, 1, 1])).unwrap();
        assert_eq!((c.c_beta, c.c.clone()), (4, vec![2, 5, 8, 6, 4, 3, 2, 1]));
        assert_eq!(c.to_string(), "4β+2α1+5α2+8α3+6α4+4α5+3α6+2α7+α8");
        let c = to_simple_coords(&rv(3, &[2, 1, 1, 1, 1, 1, 1, 1, 0])).unwrap();
        assert_eq!((c.c_beta, c.c.clone()), (3, vec![1, 3, 5, 4, 3, 2, 1, 0]));
        let c = to_simple_coords(&rv(3, &[1, 1, 1, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!((c.c_beta, c.c.clone()), (1, vec![0; 8]));
        assert_eq!(from_simple_coords(9, 3, &c), rv(3, &[1, 1, 1, 0, 0, 0, 0, 0, 0]));
        assert!(matches!(RootVector::new(3, vec![1, 0, 0, 0]), Err(Error::NotInLattice { .. })));
    }

    #[test]
    fn reflections() {
        let b = RootVector::simple(9, 3, Gen::Beta);
        let mut nb = b.clone();
        nb.x.iter_mut().for_each(|e| *e = -*e);
        assert_eq!(reflect(&b, Gen::Beta), nb);
        let v = rv(3, &[2, 1, 1, 2, 2, 1, 1, 1, 1]);
        assert_eq!(reflect(&v, Gen::Alpha(3)).x, vec![2, 1, 2, 1, 2, 1, 1, 1, 1]);
        let w = parse_word("s3s4s5s2s3s4s1s2s3sβs6s7s5s6s4s5s3s4s2s3sβ").unwrap();
        assert_eq!(w.len(), 21);
        assert_eq!(apply_word(&rv(3, &[2, 1, 1, 1, 1, 1, 1, 1, 0]), &w), b);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&rv(3, &[2, 1, 1, 1, 1, 1, 1, 1, 0])).unwrap(), RootType::RealRoot);
        assert_eq!(classify(&rv(3, &[1; 9])).unwrap(), RootType::ImaginaryRoot);
        assert_eq!(classify(&rv(3, &[1, 0, 0, 1, 0, 0, 1, 0, 0])).unwrap(), RootType::RealRoot);
        assert_eq!(classify(&rv(3, &[0; 9])), Err(Error::ZeroVector));
        assert_eq!(classify(&rv(3, &[3, 0, 0, 0, 0, 0, 0, 0, 0])).unwrap(), RootType::NotRoot);
        let p = Profile::parse(9, "147|258").unwrap();
        let r = profile_root(&p).unwrap();
        assert_eq!((r.q, r.root_type), (Q::from(2), RootType::RealRoot));
        let p = Profile::parse(9, "157|369|248").unwrap();
        let r = profile_root(&p).unwrap();
        assert_eq!((r.q, r.root_type), (Q::from(0), RootType::ImaginaryRoot));
    }
}
