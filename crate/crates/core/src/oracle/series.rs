// SPDX-License-Identifier: MIT
//! Matrices over `𝔽_p[t]/(t^len)`.

use serde::{Deserialize, Serialize};

use super::fp::Field;

/// Dense matrix of truncated power series; entry `(r, c)` has coefficients
/// `data[(r * cols + c) * len ..][..len]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyMat {
    pub rows: usize,
    pub cols: usize,
    pub len: usize,
    pub data: Vec<u64>,
}

impl PolyMat {
    pub fn zeros(rows: usize, cols: usize, len: usize) -> Self {
        PolyMat { rows, cols, len, data: vec![0; rows * cols * len] }
    }

    pub fn identity(s: usize, len: usize) -> Self {
        Self::scalar_monomial(s, len, 0)
    }

    /// `t^e · Id`, truncated.
    pub fn scalar_monomial(s: usize, len: usize, e: usize) -> Self {
        let mut m = Self::zeros(s, s, len);
        if e < len {
            for i in 0..s {
                m.set(i, i, e, 1);
            }
        }
        m
    }

    /// Reads a flat coefficient vector in the same layout as `data`.
    pub fn from_flat(rows: usize, cols: usize, len: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols * len);
        PolyMat { rows, cols, len, data }
    }

    #[inline]
    pub fn idx(&self, r: usize, c: usize, d: usize) -> usize {
        (r * self.cols + c) * self.len + d
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize, d: usize) -> u64 {
        self.data[self.idx(r, c, d)]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, d: usize, v: u64) {
        let i = self.idx(r, c, d);
        self.data[i] = v;
    }

    pub fn entry(&self, r: usize, c: usize) -> &[u64] {
        let i = self.idx(r, c, 0);
        &self.data[i..i + self.len]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut [u64] {
        let i = self.idx(r, c, 0);
        &mut self.data[i..i + self.len]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Reinterprets with a different truncation, padding with zeros.
    pub fn with_len(&self, len: usize) -> Self {
        let mut m = Self::zeros(self.rows, self.cols, len);
        for r in 0..self.rows {
            for c in 0..self.cols {
                for d in 0..len.min(self.len) {
                    m.set(r, c, d, self.get(r, c, d));
                }
            }
        }
        m
    }

    pub fn mul(&self, f: Field, other: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let len = self.len.min(other.len);
        let mut out = Self::zeros(self.rows, other.cols, len);
        for r in 0..self.rows {
            for m in 0..self.cols {
                let a = self.entry(r, m);
                if a.iter().all(|&x| x == 0) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.entry(m, c);
                    let o = out.entry_mut(r, c);
                    for (i, &x) in a.iter().enumerate().take(len) {
                        if x == 0 {
                            continue;
                        }
                        for (j, &y) in b.iter().enumerate().take(len - i) {
                            o[i + j] = (o[i + j] + x * y) % f.p;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, f: Field, other: &PolyMat) -> PolyMat {
        assert_eq!((self.rows, self.cols, self.len), (other.rows, other.cols, other.len));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        PolyMat { data, ..*self }
    }

    pub fn scale(&self, f: Field, c: u64) -> PolyMat {
        PolyMat { data: self.data.iter().map(|&x| f.mul(x, c)).collect(), ..*self }
    }

    /// Constant term as a dense matrix over 𝔽_p.
    pub fn constant(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c, 0)).collect()).collect()
    }

    /// Columns selected in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> PolyMat {
        let mut m = Self::zeros(self.rows, cols.len(), self.len);
        for r in 0..self.rows {
            for (ci, &c) in cols.iter().enumerate() {
                m.entry_mut(r, ci).copy_from_slice(self.entry(r, c));
            }
        }
        m
    }

    /// Inverse of a square matrix whose constant term is invertible.
    pub fn inverse(&self, f: Field) -> Option<PolyMat> {
        let s = self.rows;
        assert_eq!(s, self.cols);
        let len = self.len;
        let mut a = self.clone();
        let mut inv = Self::identity(s, len);
        for col in 0..s {
            let piv = (col..s).find(|&r| a.get(r, col, 0) != 0)?;
            if piv != col {
                for c in 0..s {
                    for d in 0..len {
                        let (x, y) = (a.get(piv, c, d), a.get(col, c, d));
                        a.set(piv, c, d, y);
                        a.set(col, c, d, x);
                        let (x, y) = (inv.get(piv, c, d), inv.get(col, c, d));
                        inv.set(piv, c, d, y);
                        inv.set(col, c, d, x);
                    }
                }
            }
            let u = series_inverse(f, a.entry(col, col));
            for c in 0..s {
                let e = series_mul(f, a.entry(col, c), &u);
                a.entry_mut(col, c).copy_from_slice(&e);
                let e = series_mul(f, inv.entry(col, c), &u);
                inv.entry_mut(col, c).copy_from_slice(&e);
            }
            for r in 0..s {
                if r == col || a.entry(r, col).iter().all(|&x| x == 0) {
                    continue;
                }
                let factor = a.entry(r, col).to_vec();
                for c in 0..s {
                    let e = series_mul(f, &factor, a.entry(col, c));
                    let dst = a.entry_mut(r, c);
                    for (x, y) in dst.iter_mut().zip(&e) {
                        *x = f.sub(*x, *y);
                    }
                    let e = series_mul(f, &factor, inv.entry(col, c));
                    let dst = inv.entry_mut(r, c);
                    for (x, y) in dst.iter_mut().zip(&e) {
                        *x = f.sub(*x, *y);
                    }
                }
            }
        }
        Some(inv)
    }
}

/// Product of two series of equal truncation.
pub fn series_mul(f: Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().min(b.len());
    let mut out = vec![0; len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(len - i) {
            out[i + j] = (out[i + j] + x * y) % f.p;
        }
    }
    out
}

/// Inverse of a unit series.
pub fn series_inverse(f: Field, a: &[u64]) -> Vec<u64> {
    let len = a.len();
    let mut out = vec![0; len];
    let inv0 = f.inv(a[0]);
    for d in 0..len {
        let mut acc = if d == 0 { 1 } else { 0 };
        for i in 1..=d {
            acc = f.sub(acc, f.mul(a[i], out[d - i]));
        }
        out[d] = f.mul(acc, inv0);
    }
    out
}
