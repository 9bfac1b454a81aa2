//! Polynomial matrices and dense linear algebra over the coefficient field.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::poly::{Polynomial, Ring};
use crate::error::{Error, Result};

/// Largest size accepted by the cofactor determinant.
pub const MAX_DET_SIZE: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<K: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<K>>,
}

impl<K: Field> PolyMatrix<K> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial<K>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ArityMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| e.ring() != first.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Polynomial<K>>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, |c| c.len());
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Invalid("ragged columns".into()));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for c in columns {
                entries.push(c[i].clone());
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn identity(ring: &Ring<K>, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|idx| {
                if idx / n == idx % n {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
            .collect();
        PolyMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<K> {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial<K>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Removes row `k` (0-based).
    pub fn without_row(&self, k: usize) -> Self {
        let entries = (0..self.rows)
            .filter(|&i| i != k)
            .flat_map(|i| self.row(i).iter().cloned())
            .collect();
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols,
            entries,
        }
    }

    pub fn without_col(&self, k: usize) -> Self {
        let mut entries = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            for j in (0..self.cols).filter(|&j| j != k) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        let entries = perm
            .iter()
            .flat_map(|&i| self.row(i).iter().cloned())
            .collect();
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Result<Polynomial<K>> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > MAX_DET_SIZE {
            return Err(Error::Invalid("determinant larger than 4x4".into()));
        }
        Ok(self.cofactor_det())
    }

    fn cofactor_det(&self) -> Polynomial<K> {
        match self.rows {
            0 => panic!("empty matrix has no ring"),
            1 => self.entries[0].clone(),
            2 => self
                .get(0, 0)
                .mul(self.get(1, 1))
                .sub(&self.get(0, 1).mul(self.get(1, 0))),
            n => {
                let minor_rows = self.without_row(0);
                let mut acc = self.get(0, 0).ring().zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.mul(&minor_rows.without_col(j).cofactor_det());
                    acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    /// Maximal minors of an `(n+1) x n` matrix with alternating signs:
    /// `(Δ1, -Δ2, Δ3, ...)` where `Δk` drops row `k`. The resulting vector
    /// is orthogonal to every column.
    pub fn signed_maximal_minors(&self) -> Result<Vec<Polynomial<K>>> {
        if self.rows != self.cols + 1 {
            return Err(Error::Invalid("need an (n+1) x n matrix".into()));
        }
        (0..self.rows)
            .map(|k| {
                let d = self.without_row(k).determinant()?;
                Ok(if k % 2 == 0 { d } else { d.neg() })
            })
            .collect()
    }
}

/// Free-function form used by the examples in the docs.
pub fn determinant<K: Field>(m: &PolyMatrix<K>) -> Result<Polynomial<K>> {
    m.determinant()
}

/// Dense matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<K: Field> {
    pub field: K,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<K::Elem>,
}

impl<K: Field> DenseMatrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(field: &K, rows: Vec<Vec<K::Elem>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        DenseMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(field: &K, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let k = &self.field;
        let mut out = Self::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = k.add(out.get(i, j), &k.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = self.field.mul(v, c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(&other.data) {
            *v = self.field.add(v, w);
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let k = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !k.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = k.inv(self.get(r, c)).unwrap();
            for j in c..self.cols {
                let v = k.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if k.is_zero(&f) {
                    continue;
                }
                for j in c..self.cols {
                    let v = k.sub(self.get(i, j), &k.mul(&f, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<K::Elem>> {
        let k = &self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![k.zero(); self.cols];
                v[f] = k.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = k.neg(m.get(r, f));
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let k = &self.field;
        let mut aug = Self::zeros(k, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, k.one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut out = Self::zeros(k, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    pub fn determinant(&self) -> K::Elem {
        assert_eq!(self.rows, self.cols);
        let k = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = k.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !k.is_zero(m.get(i, c))) else {
                return k.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = k.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = k.mul(&det, &piv);
            let inv = k.inv(&piv).unwrap();
            for i in c + 1..n {
                let f = k.mul(m.get(i, c), &inv);
                if k.is_zero(&f) {
                    continue;
                }
                for j in c..n {
                    let v = k.sub(m.get(i, j), &k.mul(&f, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Applies the matrix to a vector of polynomials: `(A v)_i = Σ_j a_ij v_j`.
    pub fn apply(&self, v: &[Polynomial<K>]) -> Vec<Polynomial<K>> {
        assert_eq!(v.len(), self.cols);
        let ring = v[0].ring().clone();
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (j, vj) in v.iter().enumerate() {
                    if !self.field.is_zero(self.get(i, j)) {
                        acc = acc.add(&vj.scale(self.get(i, j)));
                    }
                }
                acc
            })
            .collect()
    }
}
