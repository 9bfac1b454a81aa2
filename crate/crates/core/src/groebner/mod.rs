//! Gröbner bases and the ideal algebra built on them.

mod buchberger;
mod hilbert;
mod points;
#[cfg(test)]
mod tests;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use spin::Mutex;

use crate::algebra::{DenseMatrix, Field, Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::random::SeedStream;

pub use buchberger::{groebner_basis, normal_form, s_polynomial, Stats};
pub use hilbert::{monomial_numerator, HilbertData};

/// Default cap on S-pair reductions per basis computation.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

type Basis<K> = Arc<Vec<Polynomial<K>>>;

/// An ideal given by generators, with a memo of reduced Gröbner bases.
///
/// The memo is filled under a lock, so concurrent requests for the same
/// order trigger a single computation.
pub struct Ideal<K: Field> {
    ring: Ring<K>,
    gens: Vec<Polynomial<K>>,
    budget: usize,
    cache: Mutex<Vec<(MonomialOrder, Basis<K>)>>,
}

impl<K: Field> Clone for Ideal<K> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            budget: self.budget,
            cache: Mutex::new(self.cache.lock().clone()),
        }
    }
}

impl<K: Field> core::fmt::Debug for Ideal<K> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Ideal")
            .field("nvars", &self.ring.nvars)
            .field("gens", &self.gens)
            .finish()
    }
}

impl<K: Field> Ideal<K> {
    /// Ideal of `ring` generated by `gens`; zero generators are dropped and
    /// the rest are brought to the ring's monomial order.
    pub fn new(ring: &Ring<K>, gens: Vec<Polynomial<K>>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            let r = g.ring();
            if r.field != ring.field || r.nvars != ring.nvars {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g.to_order(ring.order));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            budget: DEFAULT_PAIR_BUDGET,
            cache: Mutex::new(Vec::new()),
        })
    }

    /// Like [`Ideal::new`] for generators already known to live in `ring`.
    pub fn from_gens(ring: &Ring<K>, gens: Vec<Polynomial<K>>) -> Self {
        Self::new(ring, gens).expect("generators in the ideal's ring")
    }

    pub fn zero(ring: &Ring<K>) -> Self {
        Self::from_gens(ring, Vec::new())
    }

    pub fn unit(ring: &Ring<K>) -> Self {
        Self::from_gens(ring, vec![ring.one()])
    }

    /// The irrelevant ideal `(x_0, ..., x_{n-1})`.
    pub fn irrelevant(ring: &Ring<K>) -> Self {
        Self::from_gens(ring, ring.vars())
    }

    /// Replaces the S-pair budget of this ideal and of ideals derived from it.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn derived(&self, gens: Vec<Polynomial<K>>) -> Self {
        Self::from_gens(&self.ring, gens).with_budget(self.budget)
    }

    /// Reduced Gröbner basis for `order`, computed once and memoized.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Basis<K>> {
        let mut cache = self.cache.lock();
        if let Some((_, b)) = cache.iter().find(|(o, _)| *o == order) {
            return Ok(b.clone());
        }
        let ring = self.ring.with_order(order);
        let gens: Vec<_> = self.gens.iter().map(|g| g.to_order(order)).collect();
        let (basis, _) = groebner_basis(&ring, &gens, self.budget)?;
        let basis = Arc::new(basis);
        cache.push((order, basis.clone()));
        Ok(basis)
    }

    /// Basis in the ring's own order.
    pub fn basis(&self) -> Result<Basis<K>> {
        self.groebner_basis(self.ring.order)
    }

    /// Seeds the memo with a basis known to be reduced for `order`.
    fn with_basis(self, order: MonomialOrder, basis: Vec<Polynomial<K>>) -> Self {
        self.cache.lock().push((order, Arc::new(basis)));
        self
    }

    pub fn normal_form(&self, f: &Polynomial<K>) -> Result<Polynomial<K>> {
        let b = self.basis()?;
        Ok(normal_form(&f.to_order(self.ring.order), &b))
    }

    pub fn contains(&self, f: &Polynomial<K>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<K>) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal<K>) -> Result<bool> {
        let a = self.groebner_basis(MonomialOrder::Grevlex)?;
        let b = other.groebner_basis(MonomialOrder::Grevlex)?;
        Ok(a == b)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.basis()?.iter().any(|g| g.is_constant()))
    }

    /// Reduced grevlex basis as a new ideal.
    pub fn minimized(&self) -> Result<Self> {
        let b = self.groebner_basis(MonomialOrder::Grevlex)?;
        let gens: Vec<_> = b.iter().map(|g| g.to_order(self.ring.order)).collect();
        Ok(self.derived(gens).with_basis(MonomialOrder::Grevlex, b.to_vec()))
    }

    pub fn sum(&self, other: &Ideal<K>) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(self.derived(gens))
    }

    pub fn add_generators(&self, extra: &[Polynomial<K>]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ok(Self::new(&self.ring, gens)?.with_budget(self.budget))
    }

    pub fn product(&self, other: &Ideal<K>) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(self.derived(gens))
    }

    pub fn power(&self, e: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.ring).with_budget(self.budget);
        for _ in 0..e {
            acc = acc.product(self)?.minimized()?;
        }
        Ok(acc)
    }

    fn check_ring(&self, other: &Ideal<K>) -> Result<()> {
        if self.ring.field != other.ring.field || self.ring.nvars != other.ring.nvars {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// `I ∩ J`, eliminating `t` from `t·I + (1-t)·J`.
    pub fn intersection(&self, other: &Ideal<K>) -> Result<Self> {
        self.check_ring(other)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Self::zero(&self.ring).with_budget(self.budget));
        }
        let n = self.ring.nvars;
        let big = Ring::new(self.ring.field.clone(), n + 1).with_order(MonomialOrder::Block(1));
        let shift: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = big.one().sub(&t);
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(t.mul(&g.remap(&big, &shift)));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.remap(&big, &shift)));
        }
        let (basis, _) = groebner_basis(&big, &gens, self.budget)?;
        let gens: Vec<_> = basis
            .iter()
            .filter(|g| !g.uses_var(0))
            .map(|g| drop_first_vars(g, &self.ring, 1))
            .collect();
        Ok(self.derived(gens))
    }

    /// `(I : g) = (I ∩ (g)) / g`.
    pub fn quotient_by(&self, g: &Polynomial<K>) -> Result<Self> {
        let g = g.to_order(self.ring.order);
        if g.is_zero() {
            return Ok(Self::unit(&self.ring).with_budget(self.budget));
        }
        let principal = self.derived(vec![g.clone()]);
        let inter = self.intersection(&principal)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for h in &inter.gens {
            gens.push(h.exact_div(&g).ok_or_else(|| {
                Error::Certificate("intersection generator not divisible".into())
            })?);
        }
        Ok(self.derived(gens).minimized()?)
    }

    /// `(I : J) = ∩_g (I : g)` over the generators of `J`.
    pub fn quotient(&self, other: &Ideal<K>) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?.minimized()?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.ring).with_budget(self.budget)))
    }

    /// `(I : J^∞)` as the stable value of iterated quotients.
    pub fn saturation(&self, other: &Ideal<K>) -> Result<Self> {
        let mut cur = self.minimized()?;
        loop {
            let next = cur.quotient(other)?;
            if next.same_ideal(&cur)? {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// `(I : g^∞)` by iterated quotients by one polynomial.
    pub fn saturate_by_element(&self, g: &Polynomial<K>) -> Result<Self> {
        if g.total_degree() == Some(1) && g.is_homogeneous() && self.is_homogeneous() {
            return self.saturate_by_linear_form(g);
        }
        let mut cur = self.minimized()?;
        loop {
            let next = cur.quotient_by(g)?;
            if next.same_ideal(&cur)? {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// `(I : g^∞)` in one basis computation: eliminate `u` from
    /// `I + (1 - u·g)`.
    pub fn saturate_rabinowitsch(&self, g: &Polynomial<K>) -> Result<Self> {
        let n = self.ring.nvars;
        let big = Ring::new(self.ring.field.clone(), n + 1).with_order(MonomialOrder::Block(1));
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<_> = self.gens.iter().map(|f| f.remap(&big, &shift)).collect();
        gens.push(big.one().sub(&big.var(0).mul(&g.remap(&big, &shift))));
        let (basis, _) = groebner_basis(&big, &gens, self.budget)?;
        let gens: Vec<_> = basis
            .iter()
            .filter(|f| !f.uses_var(0))
            .map(|f| drop_first_vars(f, &self.ring, 1))
            .collect();
        self.derived(gens).minimized()
    }

    /// `(I : ℓ^∞)` for a linear form: move `ℓ` to the last variable, where
    /// a grevlex basis saturates by dividing out powers of that variable.
    pub fn saturate_by_linear_form(&self, l: &Polynomial<K>) -> Result<Self> {
        let n = self.ring.nvars;
        let k = &self.ring.field;
        let l = l.to_order(self.ring.order);
        let pivot = (0..n)
            .rev()
            .find(|&i| !k.is_zero(&l.coeff(&Monomial::var(i, 1))))
            .ok_or_else(|| Error::Invalid("saturation by a zero linear form".into()))?;
        let grev = self.ring.with_order(MonomialOrder::Grevlex);
        let w = grev.vars();
        // z_i -> w_{pos(i)} for i != pivot; z_pivot -> (w_last - Σ c_i w_pos(i)) / c_pivot
        let pos = |i: usize| if i < pivot { i } else { i - 1 };
        let cp_inv = k.inv(&l.coeff(&Monomial::var(pivot, 1))).unwrap();
        let mut zp = w[n - 1].clone();
        for i in (0..n).filter(|&i| i != pivot) {
            let c = l.coeff(&Monomial::var(i, 1));
            zp = zp.sub(&w[pos(i)].scale(&c));
        }
        let zp = zp.scale(&cp_inv);
        let forward: Vec<_> = (0..n)
            .map(|i| if i == pivot { zp.clone() } else { w[pos(i)].clone() })
            .collect();
        let moved: Vec<_> = self
            .gens
            .iter()
            .map(|g| g.to_order(MonomialOrder::Grevlex).substitute(&forward))
            .collect::<Result<_>>()?;
        let (basis, _) = groebner_basis(&grev, &moved, self.budget)?;
        let stripped: Vec<_> = basis.iter().map(|g| strip_var_power(g, n - 1)).collect();
        // w_j -> z_{i(j)} for j < n-1, w_last -> ℓ
        let zs = self.ring.with_order(MonomialOrder::Grevlex).vars();
        let lg = l.to_order(MonomialOrder::Grevlex);
        let backward: Vec<_> = (0..n)
            .map(|j| {
                if j == n - 1 {
                    lg.clone()
                } else {
                    let i = if j < pivot { j } else { j + 1 };
                    zs[i].clone()
                }
            })
            .collect();
        let gens: Vec<_> = stripped
            .iter()
            .map(|g| g.substitute(&backward).map(|p| p.to_order(self.ring.order)))
            .collect::<Result<_>>()?;
        self.derived(gens).minimized()
    }

    /// `(I : J^∞)` for `J` generated by forms of one degree, through one
    /// random combination `ℓ` of the generators of `J`.
    pub fn saturate_generic(&self, other: &Ideal<K>, rng: &mut SeedStream) -> Result<Self> {
        self.check_ring(other)?;
        let gens = other.generators();
        if gens.is_empty() {
            return Ok(self.clone());
        }
        let d = gens[0].homogeneous_degree();
        if d.is_none() || gens.iter().any(|g| g.homogeneous_degree() != d) {
            return self.saturation(other);
        }
        let k = &self.ring.field;
        let mut l = self.ring.zero();
        while l.is_zero() {
            for g in gens {
                l = l.add(&g.scale(&generic_scalar(k, rng)));
            }
        }
        self.saturate_by_element(&l)
    }

    /// `(I : (x_0..x_{n-1})^∞)`.
    pub fn saturate_irrelevant(&self, rng: &mut SeedStream) -> Result<Self> {
        self.saturate_generic(&Self::irrelevant(&self.ring), rng)
    }

    /// `I ∩ K[kept variables]`, expressed in a ring of the kept variables
    /// (in their original relative order).
    pub fn eliminate(&self, vars: &[usize]) -> Result<Self> {
        let n = self.ring.nvars;
        let e = vars.len();
        let kept: Vec<usize> = (0..n).filter(|i| !vars.contains(i)).collect();
        // eliminated variables first
        let mut map = vec![0usize; n];
        for (slot, &v) in vars.iter().enumerate() {
            map[v] = slot;
        }
        for (slot, &v) in kept.iter().enumerate() {
            map[v] = e + slot;
        }
        let big = self.ring.with_order(MonomialOrder::Block(e));
        let gens: Vec<_> = self.gens.iter().map(|g| g.remap(&big, &map)).collect();
        let (basis, _) = groebner_basis(&big, &gens, self.budget)?;
        let small = Ring::new(self.ring.field.clone(), kept.len()).with_order(self.ring.order);
        let gens: Vec<_> = basis
            .iter()
            .filter(|g| (0..e).all(|v| !g.uses_var(v)))
            .map(|g| drop_first_vars(g, &small, e))
            .collect();
        Ok(Self::from_gens(&small, gens).with_budget(self.budget))
    }

    /// Hilbert data of `S/I`.
    pub fn hilbert(&self) -> Result<HilbertData> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let b = self.groebner_basis(MonomialOrder::Grevlex)?;
        Ok(hilbert_of_basis(self.ring.nvars, &b))
    }

    /// Hilbert data from a basis in `order`.
    pub fn hilbert_in(&self, order: MonomialOrder) -> Result<HilbertData> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let b = self.groebner_basis(order)?;
        Ok(hilbert_of_basis(self.ring.nvars, &b))
    }

    /// A basis of the degree-`d` piece `I_d`: for each monomial `m` of
    /// degree `d` in the lead ideal, the element `m - NF(m)`.
    pub fn graded_piece(&self, d: u32) -> Result<Vec<Polynomial<K>>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let grev = self.ring.with_order(MonomialOrder::Grevlex);
        let b = self.groebner_basis(MonomialOrder::Grevlex)?;
        let mut out = Vec::new();
        for m in grev.monomials_of_degree(d) {
            if b.iter().any(|g| g.leading_monomial().unwrap().divides(&m)) {
                let mono = Polynomial::monomial(&grev, m, grev.field.one());
                let nf = normal_form(&mono, &b);
                out.push(mono.sub(&nf).to_order(self.ring.order));
            }
        }
        Ok(out)
    }

    /// The degree-`d` piece as coefficient rows over the monomials of
    /// degree `d` (descending grevlex), in reduced row echelon form.
    pub fn graded_piece_matrix(&self, d: u32) -> Result<(Vec<Monomial>, DenseMatrix<K>)> {
        let grev = self.ring.with_order(MonomialOrder::Grevlex);
        let monos = grev.monomials_of_degree(d);
        let piece = self.graded_piece(d)?;
        let rows = piece
            .iter()
            .map(|p| {
                let p = p.to_order(MonomialOrder::Grevlex);
                monos.iter().map(|m| p.coeff(m)).collect()
            })
            .collect();
        let mut m = DenseMatrix::from_rows(&self.ring.field, rows);
        if !piece.is_empty() {
            m.rref();
        }
        Ok((monos, m))
    }

    /// Number of geometric points of a zero-dimensional projective scheme.
    pub fn count_distinct_points(&self, rng: &mut SeedStream) -> Result<usize> {
        points::count_distinct_points(self, rng)
    }

    /// Radical of a zero-dimensional projective scheme, i.e. the ideal of
    /// its reduced set of points.
    pub fn radical_of_points(&self, rng: &mut SeedStream) -> Result<Self> {
        points::radical_of_points(self, rng)
    }

    /// Pulls the ideal back along a linear substitution `x -> images`.
    pub fn substitute(&self, images: &[Polynomial<K>]) -> Result<Self> {
        let target = images
            .first()
            .map(|p| p.ring().clone())
            .unwrap_or_else(|| self.ring.clone());
        let gens: Vec<_> = self
            .gens
            .iter()
            .map(|g| g.substitute(images))
            .collect::<Result<_>>()?;
        Ok(Self::new(&target, gens)?.with_budget(self.budget))
    }

    /// Checks the Buchberger criterion on the memoized basis for `order`:
    /// every S-polynomial reduces to zero and every generator reduces to
    /// zero.
    pub fn verify_basis(&self, order: MonomialOrder) -> Result<bool> {
        let b = self.groebner_basis(order)?;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !normal_form(&s_polynomial(&b[i], &b[j]), &b).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(self
            .gens
            .iter()
            .all(|g| normal_form(&g.to_order(order), &b).is_zero()))
    }
}

pub(crate) fn hilbert_of_basis<K: Field>(nvars: usize, basis: &[Polynomial<K>]) -> HilbertData {
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| *g.leading_monomial().unwrap())
        .collect();
    HilbertData::from_numerator(nvars, monomial_numerator(&lms))
}

/// Random scalar for genericity; wider than the field's default draw over
/// the rationals so that bad coincidences stay rare.
pub(crate) fn generic_scalar<K: Field>(k: &K, rng: &mut SeedStream) -> K::Elem {
    if k.characteristic() == 0 {
        let v = (rng.next_u64() % 61) as i64 - 30;
        k.from_i64(if v == 0 { 31 } else { v })
    } else {
        rng.nonzero(k)
    }
}

fn strip_var_power<K: Field>(g: &Polynomial<K>, v: usize) -> Polynomial<K> {
    let e = g.terms().iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0);
    if e == 0 {
        return g.clone();
    }
    let d = Monomial::var(v, e);
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| (m.quotient_of(&d), c.clone()))
        .collect();
    Polynomial::from_terms(g.ring(), terms)
}

/// Re-expresses `g` (free of the first `e` variables) in `target`.
fn drop_first_vars<K: Field>(g: &Polynomial<K>, target: &Ring<K>, e: usize) -> Polynomial<K> {
    let n = g.ring().nvars;
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let exps: Vec<u32> = (e..n).map(|i| m.exp(i)).collect();
            (Monomial::from_exponents(&exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}
