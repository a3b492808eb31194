// SPDX-License-Identifier: MIT
//! Prime field arithmetic, incremental row echelon forms and polynomials over 𝔽_p.

use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        assert!((3..(1 << 31)).contains(&p), "prime out of range");
        Field { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.p - a }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn random<R: Rng>(self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    pub fn random_nonzero<R: Rng>(self, rng: &mut R) -> u64 {
        rng.gen_range(1..self.p)
    }

    /// `acc += c * v`.
    pub fn axpy(self, acc: &mut [u64], c: u64, v: &[u64]) {
        if c == 0 {
            return;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            if x != 0 {
                *a = (*a + c * x) % self.p;
            }
        }
    }

    pub fn dot(self, a: &[u64], b: &[u64]) -> u64 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| (acc + x * y) % self.p)
    }
}

/// A subspace of `𝔽_p^dim` in reduced row echelon form, grown one vector at a time.
#[derive(Debug, Clone)]
pub struct RowSpace {
    pub dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        RowSpace { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn spanned_by<'a>(f: Field, dim: usize, vs: impl IntoIterator<Item = &'a Vec<u64>>) -> Self {
        let mut s = RowSpace::new(dim);
        for v in vs {
            s.insert(f, v.clone());
        }
        s
    }

    pub fn full(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        RowSpace { dim, rows, pivots: (0..dim).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` modulo the space.
    pub fn reduce(&self, f: Field, mut v: Vec<u64>) -> Vec<u64> {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                f.axpy(&mut v, f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, f: Field, v: &[u64]) -> bool {
        self.reduce(f, v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, f: Field, v: Vec<u64>) -> bool {
        let mut v = self.reduce(f, v);
        let Some(pc) = v.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(v[pc]);
        v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                f.axpy(row, f.neg(c), &v);
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    pub fn contains_space(&self, f: Field, other: &RowSpace) -> bool {
        other.rows.iter().all(|v| self.contains(f, v))
    }

    pub fn sum(&self, f: Field, other: &RowSpace) -> RowSpace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(f, v.clone());
        }
        s
    }

    /// Basis of `{w : w·v = 0 for all v in the space}`.
    pub fn annihilator(&self, f: Field) -> Vec<Vec<u64>> {
        let free: Vec<usize> = (0..self.dim).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut w = vec![0; self.dim];
                w[fc] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    w[pc] = f.neg(row[fc]);
                }
                w
            })
            .collect()
    }
}

/// Kernel of the linear map whose matrix has the given rows, over `ncols` unknowns.
pub fn nullspace(f: Field, ncols: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> Vec<Vec<u64>> {
    let mut rs = RowSpace::new(ncols);
    for r in rows {
        if rs.rank() == ncols {
            break;
        }
        rs.insert(f, r);
    }
    rs.annihilator(f)
}

/// Polynomials over 𝔽_p, coefficients from low to high degree, no trailing zeros.
pub mod poly {
    use super::Field;

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn deg(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    pub fn sub(f: Field, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = vec![0; a.len().max(b.len())];
        for (i, &x) in a.iter().enumerate() {
            r[i] = x;
        }
        for (i, &y) in b.iter().enumerate() {
            r[i] = f.sub(r[i], y);
        }
        trim(r)
    }

    pub fn mul(f: Field, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + x * y) % f.p;
            }
        }
        trim(r)
    }

    /// Remainder of `a` modulo nonzero `m`.
    pub fn rem(f: Field, a: &[u64], m: &[u64]) -> Vec<u64> {
        let dm = deg(m).expect("nonzero modulus");
        let inv = f.inv(m[dm]);
        let mut r = trim(a.to_vec());
        while let Some(dr) = deg(&r) {
            if dr < dm {
                break;
            }
            let c = f.mul(r[dr], inv);
            for (i, &y) in m.iter().enumerate() {
                let idx = dr - dm + i;
                r[idx] = f.sub(r[idx], f.mul(c, y));
            }
            r = trim(r);
        }
        r
    }

    /// Exact quotient of `a` by nonzero `m`.
    pub fn div(f: Field, a: &[u64], m: &[u64]) -> Vec<u64> {
        let dm = deg(m).expect("nonzero divisor");
        let inv = f.inv(m[dm]);
        let mut r = trim(a.to_vec());
        let mut q = vec![0; r.len().saturating_sub(dm).max(1)];
        while let Some(dr) = deg(&r) {
            if dr < dm {
                break;
            }
            let c = f.mul(r[dr], inv);
            q[dr - dm] = c;
            for (i, &y) in m.iter().enumerate() {
                let idx = dr - dm + i;
                r[idx] = f.sub(r[idx], f.mul(c, y));
            }
            r = trim(r);
        }
        trim(q)
    }

    pub fn gcd(f: Field, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(f, &a, &b);
            a = b;
            b = r;
        }
        if let Some(d) = deg(&a) {
            let inv = f.inv(a[d]);
            a.iter_mut().for_each(|x| *x = f.mul(*x, inv));
        }
        a
    }

    pub fn derivative(f: Field, a: &[u64]) -> Vec<u64> {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, i as u64 % f.p)).collect())
    }

    pub fn powmod(f: Field, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut result = rem(f, &[1], m);
        let mut b = rem(f, base, m);
        while e > 0 {
            if e & 1 == 1 {
                result = rem(f, &mul(f, &result, &b), m);
            }
            b = rem(f, &mul(f, &b, &b), m);
            e >>= 1;
        }
        result
    }

    /// Squarefree part `a / gcd(a, a')`.
    pub fn squarefree(f: Field, a: &[u64]) -> Vec<u64> {
        let g = gcd(f, a, &derivative(f, a));
        div(f, a, &g)
    }

    /// Whether `a` has two distinct monic irreducible factors, or one factor
    /// that splits, i.e. the squarefree part is reducible.
    pub fn squarefree_part_reducible(f: Field, a: &[u64]) -> bool {
        let g = squarefree(f, a);
        let Some(d) = deg(&g) else { return false };
        if d <= 1 {
            return false;
        }
        let x = vec![0, 1];
        let mut xp = x.clone();
        for _ in 1..=d / 2 {
            xp = powmod(f, &xp, f.p, &g);
            let h = gcd(f, &g, &sub(f, &xp, &x));
            if deg(&h).is_some_and(|dh| dh > 0) {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let f = Field::new(32003);
        assert_eq!(f.mul(f.inv(17), 17), 1);
        assert_eq!(f.sub(0, 1), 32002);
    }

    #[test]
    fn row_space() {
        let f = Field::new(101);
        let mut s = RowSpace::new(3);
        assert!(s.insert(f, vec![1, 2, 3]));
        assert!(s.insert(f, vec![2, 4, 7]));
        assert!(!s.insert(f, vec![3, 6, 10]));
        assert_eq!(s.rank(), 2);
        let ann = s.annihilator(f);
        assert_eq!(ann.len(), 1);
        assert_eq!(f.dot(&ann[0], &[1, 2, 3]), 0);
        let k = nullspace(f, 3, vec![vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(k.len(), 1);
    }

    #[test]
    fn polys() {
        let f = Field::new(101);
        // (x-1)(x-2) splits.
        assert!(poly::squarefree_part_reducible(f, &[2, 98, 1]));
        // (x-1)² has squarefree part x-1.
        assert!(!poly::squarefree_part_reducible(f, &[1, 99, 1]));
        // x² + 1 is irreducible mod 103 and splits mod 101.
        assert!(!poly::squarefree_part_reducible(Field::new(103), &[1, 0, 1]));
        assert!(poly::squarefree_part_reducible(f, &[1, 0, 1]));
    }
}
