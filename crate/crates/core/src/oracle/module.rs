// SPDX-License-Identifier: MIT
//! Modules as chains of lattices.
//!
//! A free module of rank `s` is determined by its lattices at the vertices,
//! all embedded into the lattice `L_n = O^s` at vertex `n` via the `x` maps:
//! `t^h L_n = L_0 ⊆ L_1 ⊆ … ⊆ L_n` with `t L_j ⊆ L_{j-1}`, where
//! `O = 𝔽_p[[t]]` and `h = n - k`. Everything contains `t^h L_n`, so the
//! chain is stored as subspaces `T_j = L_j / t^h L_n` of `E = (O/t^h)^s`,
//! with coordinate `c·h + a` holding the coefficient of `t^a e_c`.

use rand::Rng;

use super::fp::{nullspace, Field, RowSpace};
use super::series::PolyMat;
use crate::error::{Error, Result};
use crate::profiles::Profile;
use crate::subsets::KSubset;

#[derive(Debug, Clone)]
pub struct Module {
    pub field: Field,
    pub k: usize,
    pub n: usize,
    pub h: usize,
    pub s: usize,
    /// `T_0, …, T_n`.
    pub chain: Vec<RowSpace>,
}

/// `t·v` in `(O/t^h)^s`.
pub fn t_shift(v: &[u64], h: usize) -> Vec<u64> {
    let mut out = vec![0; v.len()];
    for (c, block) in v.chunks(h).enumerate() {
        out[c * h + 1..c * h + h].copy_from_slice(&block[..h - 1]);
    }
    out
}

/// The `O`-submodule generated by `gens`.
pub fn o_span(f: Field, dim: usize, h: usize, gens: impl IntoIterator<Item = Vec<u64>>) -> RowSpace {
    let mut rs = RowSpace::new(dim);
    for g in gens {
        let mut v = g;
        while v.iter().any(|&x| x != 0) {
            if !rs.insert(f, v.clone()) {
                break;
            }
            v = t_shift(&v, h);
        }
    }
    rs
}

/// Elements of an `O`-submodule that are independent modulo `t` times it.
pub fn o_generators(f: Field, t: &RowSpace, h: usize) -> Vec<Vec<u64>> {
    let mut acc = RowSpace::spanned_by(f, t.dim, t.basis().iter().map(|v| t_shift(v, h)).collect::<Vec<_>>().iter());
    t.basis().iter().filter(|v| acc.insert(f, (*v).clone())).cloned().collect()
}

/// `A·v` for a matrix over `O/t^h` acting on `(O/t^h)^cols`.
pub fn apply(f: Field, a: &PolyMat, v: &[u64], h: usize) -> Vec<u64> {
    let mut out = vec![0; a.rows * h];
    for r in 0..a.rows {
        for c in 0..a.cols {
            let e = a.entry(r, c);
            let vb = &v[c * h..c * h + h];
            for (d, &x) in e.iter().enumerate().take(h) {
                if x == 0 {
                    continue;
                }
                for (i, &y) in vb.iter().enumerate().take(h - d) {
                    if y != 0 {
                        out[r * h + i + d] = (out[r * h + i + d] + x * y) % f.p;
                    }
                }
            }
        }
    }
    out
}

/// Row `w` with `w·v = q·(A v)` for all `v`.
fn pull_back(f: Field, q: &[u64], a: &PolyMat, h: usize) -> Vec<u64> {
    let mut w = vec![0; a.cols * h];
    for r in 0..a.rows {
        for c in 0..a.cols {
            for (d, &x) in a.entry(r, c).iter().enumerate().take(h) {
                if x == 0 {
                    continue;
                }
                for i in 0..h - d {
                    let y = q[r * h + i + d];
                    if y != 0 {
                        w[c * h + i] = (w[c * h + i] + x * y) % f.p;
                    }
                }
            }
        }
    }
    w
}

/// `{v : A v ∈ T}`.
pub fn preimage(f: Field, a: &PolyMat, t: &RowSpace, h: usize) -> RowSpace {
    let rows: Vec<Vec<u64>> = t.annihilator(f).iter().map(|q| pull_back(f, q, a, h)).collect();
    let dim = a.cols * h;
    let basis = nullspace(f, dim, rows);
    RowSpace::spanned_by(f, dim, basis.iter())
}

/// A minimal projective presentation `0 → Ω → P → M → 0`.
#[derive(Debug, Clone)]
pub struct Presentation {
    /// Vertex of each indecomposable projective summand of `P`.
    pub cover: Vec<usize>,
    pub p: Module,
    /// `P → M` at vertex `n`, `s × r`.
    pub map: PolyMat,
    /// `Ω → P` at vertex `n`, `r × (r - s)`.
    pub kernel: PolyMat,
    /// Summands of `P` that index the coordinates of `Ω`.
    pub free_cols: Vec<usize>,
    pub omega: Module,
}

impl Module {
    pub fn dim(&self) -> usize {
        self.s * self.h
    }

    pub fn zero(field: Field, k: usize, n: usize) -> Module {
        Module { field, k, n, h: n - k, s: 0, chain: vec![RowSpace::new(0); n + 1] }
    }

    /// The rank-1 module `L_I`.
    pub fn rank1(field: Field, i: &KSubset) -> Module {
        let (n, k) = (i.n(), i.k());
        let h = n - k;
        let chain = (0..=n)
            .map(|j| {
                let c = (j + 1..=n).filter(|&x| !i.contains(x)).count();
                o_span(field, h, h, (c < h).then(|| {
                    let mut v = vec![0; h];
                    v[c] = 1;
                    v
                }))
            })
            .collect();
        Module { field, k, n, h, s: 1, chain }
    }

    /// The indecomposable projective with top at vertex `u`.
    pub fn projective(field: Field, k: usize, n: usize, u: usize) -> Module {
        let i = KSubset::from_cyclic(n, (1..=k as i64).map(|d| u as i64 + d)).expect("valid");
        Module::rank1(field, &i)
    }

    pub fn direct_sum(parts: &[Module]) -> Module {
        let first = &parts[0];
        let (field, k, n, h) = (first.field, first.k, first.n, first.h);
        let s: usize = parts.iter().map(|m| m.s).sum();
        let chain = (0..=n)
            .map(|j| {
                let mut rs = RowSpace::new(s * h);
                let mut off = 0;
                for m in parts {
                    for v in m.chain[j].basis() {
                        let mut w = vec![0; s * h];
                        w[off..off + m.dim()].copy_from_slice(v);
                        rs.insert(field, w);
                    }
                    off += m.dim();
                }
                rs
            })
            .collect();
        Module { field, k, n, h, s, chain }
    }

    pub fn check(&self) -> Result<()> {
        let f = self.field;
        let bad = |m: &str| Err(Error::InvalidModule(m.to_string()));
        if self.chain.len() != self.n + 1 {
            return bad("chain length");
        }
        if self.chain[0].rank() != 0 || self.chain[self.n].rank() != self.dim() {
            return bad("chain ends");
        }
        for j in 1..=self.n {
            let (lo, hi) = (&self.chain[j - 1], &self.chain[j]);
            if !hi.contains_space(f, lo) {
                return bad("chain not increasing");
            }
            if !hi.basis().iter().all(|v| lo.contains(f, &t_shift(v, self.h))) {
                return bad("t T_j not inside T_{j-1}");
            }
        }
        Ok(())
    }

    /// Multiplicity of each label `j`: the number of rank-1 factors containing `j`.
    pub fn content(&self) -> Vec<usize> {
        (1..=self.n).map(|j| self.s - (self.chain[j].rank() - self.chain[j - 1].rank())).collect()
    }

    /// The radical at vertex `j`.
    fn radical(&self, j: usize) -> RowSpace {
        let f = self.field;
        let h = self.h;
        let mut rad = self.chain[j - 1].clone();
        let upper = if j < self.n { &self.chain[j + 1] } else { &self.chain[self.n] };
        for v in upper.basis() {
            rad.insert(f, t_shift(v, h));
        }
        if j == self.n {
            for v in self.chain[1].basis() {
                let mut w = vec![0; self.dim()];
                for c in 0..self.s {
                    w[c * h] = v[c * h + h - 1];
                }
                rad.insert(f, w);
            }
        }
        rad
    }

    /// Dimension of the top at each vertex `1..=n`.
    pub fn top(&self) -> Vec<usize> {
        (1..=self.n).map(|j| self.chain[j].rank() - self.radical(j).rank()).collect()
    }

    /// Vertices of the projective cover, with multiplicity.
    pub fn cover_indices(&self) -> Vec<usize> {
        self.top().iter().enumerate().flat_map(|(j, &d)| std::iter::repeat_n(j + 1, d)).collect()
    }

    /// Basis of `Hom(self, other)` modulo `t^h`, as `other.s × self.s` matrices.
    pub fn hom(&self, other: &Module) -> Vec<PolyMat> {
        assert_eq!((self.k, self.n), (other.k, other.n), "different algebras");
        let f = self.field;
        let h = self.h;
        let (rows, cols) = (other.s, self.s);
        let nvars = rows * cols * h;
        if nvars == 0 {
            return Vec::new();
        }
        let mut constraints = RowSpace::new(nvars);
        for j in 1..self.n {
            let ann = other.chain[j].annihilator(f);
            if ann.is_empty() {
                continue;
            }
            for g in o_generators(f, &self.chain[j], h) {
                for q in &ann {
                    let mut row = vec![0; nvars];
                    for r in 0..rows {
                        for c in 0..cols {
                            for d in 0..h {
                                let mut acc = 0;
                                for a in 0..h - d {
                                    acc += q[r * h + a + d] * g[c * h + a] % f.p;
                                }
                                row[(r * cols + c) * h + d] = acc % f.p;
                            }
                        }
                    }
                    constraints.insert(f, row);
                }
            }
        }
        constraints
            .annihilator(f)
            .into_iter()
            .map(|v| PolyMat::from_flat(rows, cols, h, v))
            .collect()
    }

    /// `s s' h − dim Hom mod t^h`: the colength of `Hom(M, N)` in `Mat(O)`.
    pub fn hom_colength(&self, other: &Module) -> usize {
        self.s * other.s * self.h - self.hom(other).len()
    }

    pub fn presentation(&self) -> Result<Presentation> {
        let f = self.field;
        let h = self.h;
        let mut cover = Vec::new();
        let mut cols: Vec<PolyMat> = Vec::new();
        for (ju, &d) in self.top().iter().enumerate() {
            if d == 0 {
                continue;
            }
            let u = ju + 1;
            let pu = Module::projective(f, self.k, self.n, u);
            let shift = h - pu.chain[u].rank();
            let mut rad = self.radical(u);
            let mut chosen = 0;
            for g in pu.hom(self) {
                if chosen == d {
                    break;
                }
                let mut img = vec![0; self.dim()];
                for c in 0..self.s {
                    for a in 0..h - shift {
                        img[c * h + a + shift] = g.get(c, 0, a);
                    }
                }
                if rad.insert(f, img) {
                    cover.push(u);
                    cols.push(g);
                    chosen += 1;
                }
            }
            if chosen != d {
                return Err(Error::InvalidModule("projective cover incomplete".into()));
            }
        }
        let r = cols.len();
        let mut map = PolyMat::zeros(self.s, r, h);
        for (ci, g) in cols.iter().enumerate() {
            for row in 0..self.s {
                map.entry_mut(row, ci).copy_from_slice(g.entry(row, 0));
            }
        }
        let mut span = RowSpace::new(self.s);
        let mut pivot_cols = Vec::new();
        let mut free_cols = Vec::new();
        for c in 0..r {
            let col: Vec<u64> = (0..self.s).map(|row| map.get(row, c, 0)).collect();
            if span.insert(f, col) {
                pivot_cols.push(c);
            } else {
                free_cols.push(c);
            }
        }
        if pivot_cols.len() != self.s {
            return Err(Error::InvalidModule("cover not surjective".into()));
        }
        let fs_inv = map.select_cols(&pivot_cols).inverse(f).expect("unit pivot block");
        let solved = fs_inv.mul(f, &map.select_cols(&free_cols));
        let mut kernel = PolyMat::zeros(r, free_cols.len(), h);
        for (ci, &fc) in free_cols.iter().enumerate() {
            kernel.set(fc, ci, 0, 1);
            for (pi, &pc) in pivot_cols.iter().enumerate() {
                let e: Vec<u64> = solved.entry(pi, ci).iter().map(|&x| f.neg(x)).collect();
                kernel.entry_mut(pc, ci).copy_from_slice(&e);
            }
        }
        let parts: Vec<Module> = cover.iter().map(|&u| Module::projective(f, self.k, self.n, u)).collect();
        let p = if parts.is_empty() { Module::zero(f, self.k, self.n) } else { Module::direct_sum(&parts) };
        for (tp, tm) in p.chain.iter().zip(&self.chain) {
            let img = RowSpace::spanned_by(f, self.dim(), tp.basis().iter().map(|w| apply(f, &map, w, h)).collect::<Vec<_>>().iter());
            if img.rank() != tm.rank() {
                return Err(Error::InvalidModule("cover not surjective".into()));
            }
        }
        let omega = Module {
            field: f,
            k: self.k,
            n: self.n,
            h,
            s: free_cols.len(),
            chain: p.chain.iter().map(|t| preimage(f, &kernel, t, h)).collect(),
        };
        Ok(Presentation { cover, p, map, kernel, free_cols, omega })
    }

    /// First syzygy.
    pub fn syzygy(&self) -> Result<Module> {
        Ok(self.presentation()?.omega)
    }

    /// `dim_𝔽_p Ext¹(self, other)`.
    pub fn ext1(&self, other: &Module) -> Result<usize> {
        let pres = self.presentation()?;
        Ok(ext_data(&pres, other).0.len())
    }

    /// An extension `0 → other → E → self → 0` with a random class,
    /// nonzero in every direction of a complement of the trivial classes.
    pub fn extension<R: Rng>(&self, other: &Module, rng: &mut R) -> Result<Module> {
        let f = self.field;
        let h = self.h;
        let pres = self.presentation()?;
        let (classes, _) = ext_data(&pres, other);
        let mut phi = PolyMat::zeros(other.s, pres.omega.s, h);
        for c in &classes {
            phi = phi.add(f, &c.scale(f, f.random_nonzero(rng)));
        }
        let s_e = other.s + self.s;
        let dim = s_e * h;
        let psi_p = |w: &[u64]| {
            let mut wr = vec![0; pres.omega.s * h];
            for (ri, &c) in pres.free_cols.iter().enumerate() {
                wr[ri * h..ri * h + h].copy_from_slice(&w[c * h..c * h + h]);
            }
            let mut out = apply(f, &phi, &wr, h);
            out.extend(apply(f, &pres.map, w, h));
            out
        };
        let chain = (0..=self.n)
            .map(|j| {
                let mut rs = RowSpace::new(dim);
                for w in pres.p.chain[j].basis() {
                    rs.insert(f, psi_p(w));
                }
                for u in other.chain[j].basis() {
                    let mut v = u.clone();
                    v.resize(dim, 0);
                    rs.insert(f, v);
                }
                rs
            })
            .collect();
        Ok(Module { field: f, k: self.k, n: self.n, h, s: s_e, chain })
    }

    /// Iterated generic extensions of the rows, the first row on top.
    pub fn from_profile<R: Rng>(field: Field, profile: &Profile, rng: &mut R) -> Result<Module> {
        let rows = profile.rows();
        let mut m = Module::rank1(field, &rows[0]);
        for r in &rows[1..] {
            m = m.extension(&Module::rank1(field, r), rng)?;
        }
        Ok(m)
    }

    fn random_hom<R: Rng>(&self, basis: &[PolyMat], other: &Module, rng: &mut R) -> PolyMat {
        let f = self.field;
        let mut g = PolyMat::zeros(other.s, self.s, self.h);
        for b in basis {
            g = g.add(f, &b.scale(f, f.random(rng)));
        }
        g
    }

    /// Monte Carlo: `false` is certain, `true` holds with high probability.
    pub fn is_indecomposable<R: Rng>(&self, trials: usize, rng: &mut R) -> bool {
        if self.s == 0 {
            return false;
        }
        let f = self.field;
        let basis = self.hom(self);
        (0..trials).all(|_| {
            let phi = self.random_hom(&basis, self, rng);
            !super::fp::poly::squarefree_part_reducible(f, &min_poly(f, &phi))
        })
    }

    /// Monte Carlo: `true` is certain, `false` holds with high probability.
    pub fn is_isomorphic<R: Rng>(&self, other: &Module, trials: usize, rng: &mut R) -> bool {
        if (self.k, self.n, self.s) != (other.k, other.n, other.s) {
            return false;
        }
        if self.chain.iter().zip(&other.chain).any(|(a, b)| a.rank() != b.rank()) {
            return false;
        }
        if self.s == 0 {
            return true;
        }
        let f = self.field;
        let basis = self.hom(other);
        (0..trials).any(|_| {
            let g = self.random_hom(&basis, other, rng);
            RowSpace::spanned_by(f, self.s, g.constant().iter()).rank() == self.s
        })
    }

    fn relabel(&self, k: usize, n: usize, h: usize, chain: Vec<RowSpace>) -> Module {
        Module { field: self.field, k, n, h, s: self.s, chain }
    }

    fn lift(&self, v: &[u64], shift: usize) -> Vec<u64> {
        let (h, h2) = (self.h, self.h + 1);
        let mut w = vec![0; self.s * h2];
        for c in 0..self.s {
            for a in 0..h {
                if a + shift < h2 {
                    w[c * h2 + a + shift] = v[c * h + a];
                }
            }
        }
        w
    }

    /// Inserts vertex `j + 1` with `x` invertible.
    pub fn increase_subset(&self, j: usize) -> Result<Module> {
        if j == 0 || j > self.n {
            return Err(Error::InvalidSubset(format!("label {j} outside [1, {}]", self.n)));
        }
        let mut chain = self.chain[..=j].to_vec();
        chain.extend(self.chain[j..].iter().cloned());
        Ok(self.relabel(self.k + 1, self.n + 1, self.h, chain))
    }

    /// Inserts vertex `j + 1` with `y` invertible.
    pub fn increase_complement(&self, j: usize) -> Result<Module> {
        if j == 0 || j > self.n {
            return Err(Error::InvalidSubset(format!("label {j} outside [1, {}]", self.n)));
        }
        let f = self.field;
        let h2 = self.h + 1;
        let dim = self.s * h2;
        let top: Vec<Vec<u64>> = (0..self.s)
            .map(|c| {
                let mut w = vec![0; dim];
                w[c * h2 + self.h] = 1;
                w
            })
            .collect();
        let lifted = |t: &RowSpace, shift: usize, with_top: bool| {
            let mut rs = RowSpace::new(dim);
            for v in t.basis() {
                rs.insert(f, self.lift(v, shift));
            }
            if with_top {
                for w in &top {
                    rs.insert(f, w.clone());
                }
            }
            rs
        };
        let mut chain: Vec<RowSpace> = self.chain[..=j].iter().map(|t| lifted(t, 1, false)).collect();
        chain.extend(self.chain[j..].iter().map(|t| lifted(t, 0, true)));
        Ok(self.relabel(self.k, self.n + 1, h2, chain))
    }

    /// Removes vertex `j`, which needs `x_j` invertible.
    pub fn decrease_subset(&self, j: usize) -> Result<Module> {
        if j == 0 || j > self.n || self.k < 2 {
            return Err(Error::InvalidSubset(format!("label {j} outside [1, {}]", self.n)));
        }
        if self.chain[j].rank() != self.chain[j - 1].rank() {
            return Err(Error::LabelNotCommon(j));
        }
        let mut chain = self.chain.clone();
        chain.remove(j);
        Ok(self.relabel(self.k - 1, self.n - 1, self.h, chain))
    }

    /// Removes vertex `j`, which needs `y_j` invertible.
    pub fn decrease_complement(&self, j: usize) -> Result<Module> {
        if j == 0 || j > self.n || self.h < 2 {
            return Err(Error::InvalidSubset(format!("label {j} outside [1, {}]", self.n)));
        }
        if self.chain[j].rank() - self.chain[j - 1].rank() != self.s {
            return Err(Error::LabelPresent(j));
        }
        let f = self.field;
        let (h, h2) = (self.h, self.h - 1);
        let dim = self.s * h2;
        let squeeze = |t: &RowSpace, shift: usize| {
            let mut rs = RowSpace::new(dim);
            for v in t.basis() {
                let mut w = vec![0; dim];
                for c in 0..self.s {
                    for a in 0..h2 {
                        w[c * h2 + a] = v[c * h + a + shift];
                    }
                }
                rs.insert(f, w);
            }
            rs
        };
        let mut chain: Vec<RowSpace> = self.chain[..j].iter().map(|t| squeeze(t, 1)).collect();
        chain.extend(self.chain[j + 1..].iter().map(|t| squeeze(t, 0)));
        Ok(self.relabel(self.k, self.n - 1, h2, chain))
    }
}

/// Complement basis of the trivial classes in `Hom(Ω, N)`, and the trivial classes.
fn ext_data(pres: &Presentation, other: &Module) -> (Vec<PolyMat>, RowSpace) {
    let f = pres.p.field;
    let homs = pres.omega.hom(other);
    let dim = other.s * pres.omega.s * pres.p.h;
    let mut trivial = RowSpace::new(dim);
    if dim == 0 {
        return (Vec::new(), trivial);
    }
    for g in pres.p.hom(other) {
        trivial.insert(f, g.mul(f, &pres.kernel).data);
    }
    let base = trivial.clone();
    let mut acc = trivial;
    let classes = homs.into_iter().filter(|g| acc.insert(f, g.data.clone())).collect();
    (classes, base)
}

/// Minimal polynomial of a square matrix over `O/t^h`, viewed over 𝔽_p.
fn min_poly(f: Field, a: &PolyMat) -> Vec<u64> {
    let dim = a.data.len();
    let mut rows: Vec<(Vec<u64>, Vec<u64>, usize)> = Vec::new();
    let mut power = PolyMat::identity(a.rows, a.len);
    for d in 0..=dim {
        let mut v = power.data.clone();
        let mut combo = vec![0; dim + 1];
        combo[d] = 1;
        for (rv, rc, pc) in &rows {
            let c = v[*pc];
            if c != 0 {
                let nc = f.neg(c);
                f.axpy(&mut v, nc, rv);
                f.axpy(&mut combo, nc, rc);
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => {
                combo.truncate(d + 1);
                return combo;
            }
            Some(pc) => {
                let inv = f.inv(v[pc]);
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                combo.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                rows.push((v, combo, pc));
            }
        }
        power = power.mul(f, a);
    }
    unreachable!("minimal polynomial degree bounded by dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(n: usize, e: &str) -> KSubset {
        KSubset::parse(n, e).unwrap()
    }

    #[test]
    fn rank_one_basics() {
        let f = Field::new(32003);
        let m = Module::rank1(f, &s(9, "124"));
        m.check().unwrap();
        let c: Vec<usize> = m.content();
        assert_eq!(c, s(9, "124").indicator().iter().map(|&x| x as usize).collect::<Vec<_>>());
        assert_eq!(m.cover_indices(), vec![3, 9]);
        let pres = m.presentation().unwrap();
        assert_eq!(pres.omega.s, 1);
        pres.omega.check().unwrap();
        let om = Module::rank1(f, &s(9, "356"));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(pres.omega.is_isomorphic(&om, 20, &mut rng));
    }

    #[test]
    fn projectives_are_rigid() {
        let f = Field::new(32003);
        let p = Module::projective(f, 3, 9, 4);
        assert_eq!(p.cover_indices(), vec![4]);
        assert_eq!(p.syzygy().unwrap().s, 0);
        let m = Module::rank1(f, &s(9, "147"));
        assert_eq!(p.ext1(&m).unwrap(), 0);
        assert_eq!(m.ext1(&p).unwrap(), 0);
    }

    #[test]
    fn rank_two_extension() {
        let f = Field::new(32003);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = Module::rank1(f, &s(6, "135"));
        let b = Module::rank1(f, &s(6, "246"));
        assert!(a.ext1(&b).unwrap() > 0);
        let m = Module::from_profile(f, &Profile::parse(6, "135|246").unwrap(), &mut rng).unwrap();
        m.check().unwrap();
        assert!(m.is_indecomposable(20, &mut rng));
        assert_eq!(m.ext1(&m).unwrap(), 0);
        let d = Module::direct_sum(&[a, b]);
        assert!(!d.is_indecomposable(20, &mut rng));
    }

    #[test]
    fn increase_and_decrease() {
        let f = Field::new(32003);
        let m = Module::rank1(f, &s(6, "135"));
        let up = m.increase_subset(2).unwrap();
        up.check().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(up.is_isomorphic(&Module::rank1(f, &s(7, "1346")), 10, &mut rng));
        let co = m.increase_complement(2).unwrap();
        co.check().unwrap();
        assert!(co.is_isomorphic(&Module::rank1(f, &s(7, "146")), 10, &mut rng));
        let back = co.decrease_complement(3).unwrap();
        assert!(back.is_isomorphic(&m, 10, &mut rng));
        let back = up.decrease_subset(3).unwrap();
        assert!(back.is_isomorphic(&m, 10, &mut rng));
    }
}
