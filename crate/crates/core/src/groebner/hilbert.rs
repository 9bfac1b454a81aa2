//! Hilbert series of monomial ideals by pivot recursion, and the numeric
//! invariants read off from it.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::algebra::{Monomial, MAX_VARS};

/// Hilbert data of `S/I` for a homogeneous ideal `I` of `S = K[x_0..x_{n-1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator `N(t)` of the series `N(t) / (1-t)^n`, ascending.
    pub numerator: Vec<i64>,
    /// Reduced numerator `h(t)` with series `h(t) / (1-t)^krull_dim`.
    pub h_vector: Vec<i64>,
    pub nvars: usize,
    pub krull_dim: usize,
    /// `krull_dim - 1`; `-1` for the empty projective scheme.
    pub proj_dim: i64,
    /// `h(1)`; zero for the unit ideal.
    pub degree: i64,
    /// Hilbert polynomial coefficients, ascending in `t`.
    pub hilbert_poly: Vec<Ratio<i64>>,
}

impl HilbertData {
    pub fn from_numerator(nvars: usize, numerator: Vec<i64>) -> Self {
        let mut h = trim(numerator.clone());
        let mut dim = nvars;
        while dim > 0 && !h.is_empty() && h.iter().sum::<i64>() == 0 {
            h = divide_one_minus_t(&h);
            dim -= 1;
        }
        let unit = h.is_empty();
        let degree = if unit { 0 } else { h.iter().sum() };
        let krull_dim = if unit { 0 } else { dim };
        let hilbert_poly = if unit || krull_dim == 0 {
            Vec::new()
        } else {
            let mut acc = vec![Ratio::from_integer(0); krull_dim];
            for (i, &hi) in h.iter().enumerate() {
                let b = binomial_poly(i as i64, krull_dim - 1);
                for (a, c) in acc.iter_mut().zip(b) {
                    *a += c * hi;
                }
            }
            trim_ratio(acc)
        };
        HilbertData {
            numerator,
            h_vector: h,
            nvars,
            krull_dim,
            proj_dim: if unit { -1 } else { krull_dim as i64 - 1 },
            degree,
            hilbert_poly,
        }
    }

    /// `dim_K (S/I)_t`, expanded from the series.
    pub fn hilbert_function(&self, t: i64) -> i64 {
        if self.h_vector.is_empty() || t < 0 {
            return 0;
        }
        let d = self.krull_dim as i64;
        self.h_vector
            .iter()
            .enumerate()
            .map(|(i, &hi)| {
                let k = t - i as i64;
                if k < 0 {
                    0
                } else if d == 0 {
                    if k == 0 {
                        hi
                    } else {
                        0
                    }
                } else {
                    hi * binom(k + d - 1, d - 1)
                }
            })
            .sum()
    }

    /// Value of the Hilbert polynomial at `t`.
    pub fn hilbert_poly_at(&self, t: i64) -> Ratio<i64> {
        self.hilbert_poly
            .iter()
            .rev()
            .fold(Ratio::from_integer(0), |acc, c| acc * t + c)
    }

    /// Degree from which the Hilbert function agrees with the polynomial.
    pub fn regularity_bound(&self) -> i64 {
        (self.h_vector.len() as i64 - self.krull_dim as i64).max(0)
    }

    /// Arithmetic genus `1 - P(0)` of a curve.
    pub fn arithmetic_genus(&self) -> Option<i64> {
        (self.proj_dim == 1).then(|| 1 - self.hilbert_poly_at(0).to_integer())
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn trim_ratio(mut v: Vec<Ratio<i64>>) -> Vec<Ratio<i64>> {
    while v.last().is_some_and(|c| *c == Ratio::from_integer(0)) {
        v.pop();
    }
    v
}

fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    // q_i = p_0 + ... + p_i
    let mut q = Vec::with_capacity(p.len());
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(q)
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `C(t - shift + e, e)` as a polynomial in `t`, ascending, length `e + 1`.
fn binomial_poly(shift: i64, e: usize) -> Vec<Ratio<i64>> {
    let mut p = vec![Ratio::from_integer(1)];
    let mut fact = 1i64;
    for j in 1..=e as i64 {
        // multiply by (t - shift + j)
        let c = j - shift;
        let mut next = vec![Ratio::from_integer(0); p.len() + 1];
        for (i, a) in p.iter().enumerate() {
            next[i] += a * c;
            next[i + 1] += a;
        }
        p = next;
        fact *= j;
    }
    p.into_iter().map(|c| c / fact).collect()
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1;
    v
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

type Memo = BTreeMap<Vec<[u8; MAX_VARS]>, Vec<i64>>;

/// Numerator of the Hilbert series of `S / (gens)` over `(1-t)^n`.
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    let mut memo = Memo::new();
    numerator_rec(minimalize(gens.to_vec()), &mut memo)
}

fn numerator_rec(gens: Vec<Monomial>, memo: &mut Memo) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    // split off generators coprime to all others
    let mut factor = vec![1i64];
    let mut rest = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let isolated = gens
            .iter()
            .enumerate()
            .all(|(j, h)| i == j || g.is_coprime(h));
        if isolated {
            factor = poly_mul(&factor, &one_minus_t_pow(g.degree()));
        } else {
            rest.push(*g);
        }
    }
    if rest.is_empty() {
        return factor;
    }
    let mut key: Vec<[u8; MAX_VARS]> = rest.iter().map(|m| *m.exponents()).collect();
    key.sort_unstable();
    if let Some(v) = memo.get(&key) {
        return poly_mul(&factor, v);
    }
    // pivot on the variable occurring in most generators, at the median
    // of its positive exponents
    let mut counts = [0usize; MAX_VARS];
    for g in &rest {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let var = (0..MAX_VARS).max_by_key(|&i| (counts[i], MAX_VARS - i)).unwrap();
    let mut exps: Vec<u32> = rest.iter().map(|g| g.exp(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2].max(1);
    let pivot = Monomial::var(var, e);
    let mut plus = rest.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|g| {
            let mut x = [0u32; MAX_VARS];
            for (i, slot) in x.iter_mut().enumerate() {
                *slot = g.exp(i);
            }
            x[var] = x[var].saturating_sub(e);
            Monomial::from_exponents(&x)
        })
        .collect();
    let a = numerator_rec(minimalize(plus), memo);
    let b = numerator_rec(minimalize(colon), memo);
    let mut shifted = vec![0; e as usize];
    shifted.extend(b);
    let v = poly_add(&a, &shifted);
    memo.insert(key, v.clone());
    poly_mul(&factor, &v)
}
