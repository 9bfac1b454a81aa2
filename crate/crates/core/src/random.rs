//! Seeded pseudo-random stream for "general" choices. Every random object
//! in the crate is drawn from here so results are reproducible from
//! `(field, seed)`.

use alloc::vec::Vec;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{DenseMatrix, Field, Monomial, Polynomial, Ring};

#[derive(Clone, Debug)]
pub struct SeedStream {
    rng: ChaCha8Rng,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        SeedStream {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent child stream, so adding draws in one consumer does not
    /// shift the values seen by another.
    pub fn fork(&mut self, label: u64) -> SeedStream {
        let s = self.rng.next_u64() ^ label.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        SeedStream::new(s)
    }

    pub fn rng(&mut self) -> &mut dyn RngCore {
        &mut self.rng
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    pub fn elem<K: Field>(&mut self, k: &K) -> K::Elem {
        k.random(&mut self.rng)
    }

    pub fn nonzero<K: Field>(&mut self, k: &K) -> K::Elem {
        k.random_nonzero(&mut self.rng)
    }

    pub fn vector<K: Field>(&mut self, k: &K, n: usize) -> Vec<K::Elem> {
        (0..n).map(|_| self.elem(k)).collect()
    }

    /// Random vector that is not identically zero.
    pub fn nonzero_vector<K: Field>(&mut self, k: &K, n: usize) -> Vec<K::Elem> {
        loop {
            let v = self.vector(k, n);
            if v.iter().any(|x| !k.is_zero(x)) {
                return v;
            }
        }
    }

    /// Dense random form of degree `d` in the variables `vars` of `ring`.
    pub fn form_in<K: Field>(&mut self, ring: &Ring<K>, vars: &[usize], d: u32) -> Polynomial<K> {
        let sub = Ring::new(ring.field.clone(), vars.len());
        let terms = sub
            .monomials_of_degree(d)
            .into_iter()
            .map(|m| {
                let mut exps = [0u32; crate::algebra::MAX_VARS];
                for (i, &v) in vars.iter().enumerate() {
                    exps[v] = m.exp(i);
                }
                (
                    Monomial::from_exponents(&exps[..ring.nvars]),
                    self.elem(&ring.field),
                )
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Dense random form of degree `d` in all variables.
    pub fn form<K: Field>(&mut self, ring: &Ring<K>, d: u32) -> Polynomial<K> {
        let vars: Vec<usize> = (0..ring.nvars).collect();
        self.form_in(ring, &vars, d)
    }

    pub fn linear_form<K: Field>(&mut self, ring: &Ring<K>) -> Polynomial<K> {
        loop {
            let l = self.form(ring, 1);
            if !l.is_zero() {
                return l;
            }
        }
    }

    /// Random `n x m` matrix.
    pub fn matrix<K: Field>(&mut self, k: &K, rows: usize, cols: usize) -> DenseMatrix<K> {
        let data = (0..rows * cols).map(|_| self.elem(k)).collect();
        DenseMatrix {
            field: k.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Random invertible square matrix.
    pub fn invertible_matrix<K: Field>(&mut self, k: &K, n: usize) -> DenseMatrix<K> {
        loop {
            let m = self.matrix(k, n, n);
            if !k.is_zero(&m.determinant()) {
                return m;
            }
        }
    }
}
