// SPDX-License-Identifier: MIT
//! Arrow matrices `x_j`, `y_j` of a module, recovered from Hermite bases of its lattices.

use serde::{Deserialize, Serialize};

use super::fp::{poly, Field, RowSpace};
use super::module::{o_span, Module};
use super::series::PolyMat;
use crate::error::{Error, Result};

/// A module given by its arrows, entries truncated modulo `t^trunc`.
/// `x[j - 1]` maps vertex `j - 1` to `j`; `y[j - 1]` maps back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedModule {
    pub k: usize,
    pub n: usize,
    pub p: u64,
    pub rank: usize,
    pub trunc: usize,
    pub x: Vec<PolyMat>,
    pub y: Vec<PolyMat>,
}

type PolyEntries = Vec<Vec<Vec<u64>>>;

/// Upper triangular basis of `L_j` with diagonal `t^{a_c}`, as exact polynomials.
fn hermite(f: Field, t: &RowSpace, s: usize, h: usize) -> PolyEntries {
    let perm = |c: usize, a: usize| (s - 1 - c) * h + a;
    let mut rs = RowSpace::new(s * h);
    for v in t.basis() {
        let mut w = vec![0; s * h];
        for c in 0..s {
            for a in 0..h {
                w[perm(c, a)] = v[c * h + a];
            }
        }
        rs.insert(f, w);
    }
    let mut b = vec![vec![Vec::new(); s]; s];
    for c in 0..s {
        let best = rs
            .basis()
            .iter()
            .zip(rs.pivots())
            .filter(|(_, &pc)| s - 1 - pc / h == c)
            .min_by_key(|(_, &pc)| pc % h);
        match best {
            Some((row, _)) => {
                for (r, col) in b.iter_mut().enumerate() {
                    col[c] = poly::trim((0..h).map(|a| row[perm(r, a)]).collect());
                }
            }
            None => {
                let mut e = vec![0; h + 1];
                e[h] = 1;
                b[c][c] = e;
            }
        }
    }
    b
}

fn diag_degree(b: &PolyEntries, c: usize) -> usize {
    b[c][c].iter().position(|&x| x != 0).expect("nonzero diagonal")
}

/// Exact `B^{-1} C` for upper triangular `B` with monomial diagonal.
fn solve_upper(f: Field, b: &PolyEntries, c: &PolyEntries) -> Result<PolyEntries> {
    let s = b.len();
    let mut z = vec![vec![Vec::new(); s]; s];
    for col in 0..s {
        for r in (0..s).rev() {
            let mut num = c[r][col].clone();
            for r2 in r + 1..s {
                num = poly::sub(f, &num, &poly::mul(f, &b[r][r2], &z[r2][col]));
            }
            let a = diag_degree(b, r);
            if num.iter().take(a).any(|&x| x != 0) {
                return Err(Error::InvalidModule("lattices not nested".into()));
            }
            z[r][col] = num.get(a..).map(|v| v.to_vec()).unwrap_or_default();
        }
    }
    Ok(z)
}

fn to_polymat(e: &PolyEntries, len: usize) -> PolyMat {
    let s = e.len();
    let mut m = PolyMat::zeros(s, s, len);
    for (r, row) in e.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            for (d, &x) in entry.iter().enumerate().take(len) {
                m.set(r, c, d, x);
            }
        }
    }
    m
}

fn times_t(e: &PolyEntries) -> PolyEntries {
    e.iter()
        .map(|row| {
            row.iter()
                .map(|p| if p.is_empty() { Vec::new() } else { std::iter::once(0).chain(p.iter().copied()).collect() })
                .collect()
        })
        .collect()
}

impl Module {
    pub fn to_matrices(&self, trunc: usize) -> Result<TruncatedModule> {
        let f = self.field;
        let bases: Vec<PolyEntries> = self.chain.iter().map(|t| hermite(f, t, self.s, self.h)).collect();
        let mut x = Vec::with_capacity(self.n);
        let mut y = Vec::with_capacity(self.n);
        for j in 1..=self.n {
            x.push(to_polymat(&solve_upper(f, &bases[j], &bases[j - 1])?, trunc));
            y.push(to_polymat(&solve_upper(f, &bases[j - 1], &times_t(&bases[j]))?, trunc));
        }
        Ok(TruncatedModule { k: self.k, n: self.n, p: f.p, rank: self.s, trunc, x, y })
    }
}

impl TruncatedModule {
    /// Checks `xy = yx = t` at every vertex and that going once round is `t^{n-k}`.
    pub fn check_relations(&self) -> Result<()> {
        let f = Field::new(self.p);
        let s = self.rank;
        let tid = PolyMat::scalar_monomial(s, self.trunc, 1);
        if self.x.len() != self.n || self.y.len() != self.n {
            return Err(Error::InvalidModule("expected n arrows each way".into()));
        }
        for j in 0..self.n {
            if self.x[j].mul(f, &self.y[j]) != tid || self.y[j].mul(f, &self.x[j]) != tid {
                return Err(Error::InvalidModule(format!("xy ≠ t at arrow {}", j + 1)));
            }
        }
        let mut round = PolyMat::identity(s, self.trunc);
        for j in 0..self.n {
            round = self.x[j].mul(f, &round);
        }
        if round != PolyMat::scalar_monomial(s, self.trunc, self.n - self.k) {
            return Err(Error::InvalidModule("x^n ≠ t^(n-k)".into()));
        }
        Ok(())
    }

    pub fn to_module(&self) -> Result<Module> {
        self.check_relations()?;
        let f = Field::new(self.p);
        let (s, h) = (self.rank, self.n - self.k);
        if self.trunc < h {
            return Err(Error::InvalidModule("truncation below n - k".into()));
        }
        let mut chain = vec![RowSpace::new(s * h); self.n + 1];
        let mut z = PolyMat::identity(s, h);
        for j in (0..=self.n).rev() {
            let cols = (0..s).map(|c| {
                let mut v = vec![0; s * h];
                for r in 0..s {
                    v[r * h..r * h + h].copy_from_slice(z.entry(r, c));
                }
                v
            });
            chain[j] = o_span(f, s * h, h, cols);
            if j > 0 {
                z = z.mul(f, &self.x[j - 1].with_len(h));
            }
        }
        let m = Module { field: f, k: self.k, n: self.n, h, s, chain };
        m.check()?;
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::Profile;
    use crate::subsets::KSubset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rank_one_arrows() {
        let f = Field::new(32003);
        let i = KSubset::parse(6, "135").unwrap();
        let tm = Module::rank1(f, &i).to_matrices(12).unwrap();
        tm.check_relations().unwrap();
        for j in 1..=6 {
            let want = if i.contains(j) { 0 } else { 1 };
            assert_eq!(tm.x[j - 1], PolyMat::scalar_monomial(1, 12, want));
        }
    }

    #[test]
    fn roundtrip() {
        let f = Field::new(65537);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = Module::from_profile(f, &Profile::parse(9, "368|257|146").unwrap(), &mut rng).unwrap();
        let tm = m.to_matrices(18).unwrap();
        tm.check_relations().unwrap();
        let back = tm.to_module().unwrap();
        for (a, b) in m.chain.iter().zip(&back.chain) {
            assert!(a.contains_space(f, b) && b.contains_space(f, a));
        }
    }
}
