//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! sugar (normal, for homogeneous input) selection strategy.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial, Ring, MAX_VARS};
use crate::error::{Error, Result};

type Terms<K> = Vec<(Monomial, <K as Field>::Elem)>;

/// Divisibility pre-filter: bit `5i + j` is set when the exponent of
/// variable `i` reaches the `j`-th threshold.
#[inline]
pub(crate) fn divmask(m: &Monomial) -> u64 {
    const THRESHOLDS: [u8; 5] = [1, 2, 3, 4, 6];
    let e = m.exponents();
    let mut mask = 0u64;
    for (i, &x) in e.iter().enumerate().take(MAX_VARS) {
        for (j, &t) in THRESHOLDS.iter().enumerate() {
            if x >= t {
                mask |= 1 << (5 * i + j);
            }
        }
    }
    mask
}

/// `a - c * m * b`.
fn sub_scaled<K: Field>(
    k: &K,
    order: MonomialOrder,
    a: &[(Monomial, K::Elem)],
    c: &K::Elem,
    m: &Monomial,
    b: &[(Monomial, K::Elem)],
) -> Terms<K> {
    let nc = k.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, k.mul(&b[j].1, &nc)));
                j += 1;
            }
            Ordering::Equal => {
                let s = k.add(&a[i].1, &k.mul(&b[j].1, &nc));
                if !k.is_zero(&s) {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push((t.0.mul(m), k.mul(&t.1, &nc)));
    }
    out
}

/// A monic reducer with its cached leading data.
pub(crate) struct Reducer<'a, K: Field> {
    pub terms: &'a [(Monomial, K::Elem)],
    pub lm: Monomial,
    pub mask: u64,
    pub lc_inv: K::Elem,
}

impl<'a, K: Field> Reducer<'a, K> {
    pub fn new(p: &'a Polynomial<K>) -> Self {
        let lm = *p.leading_monomial().expect("nonzero reducer");
        Reducer {
            terms: p.terms(),
            lm,
            mask: divmask(&lm),
            lc_inv: p.field().inv(p.leading_coeff().unwrap()).unwrap(),
        }
    }
}

fn find_reducer<K: Field>(m: &Monomial, reducers: &[Reducer<'_, K>]) -> Option<usize> {
    let mask = divmask(m);
    reducers
        .iter()
        .position(|r| r.mask & !mask == 0 && r.lm.divides(m))
}

/// Reduces `f` modulo `reducers`. With `full` the whole polynomial is
/// reduced, otherwise only until the leading term is irreducible.
pub(crate) fn reduce<K: Field>(
    ring: &Ring<K>,
    f: Terms<K>,
    reducers: &[Reducer<'_, K>],
    full: bool,
) -> Terms<K> {
    let k = &ring.field;
    let order = ring.order;
    let mut out: Terms<K> = Vec::new();
    let mut rem = f;
    let mut head = 0;
    while head < rem.len() {
        let (m, c) = &rem[head];
        match find_reducer(m, reducers) {
            Some(idx) => {
                let r = &reducers[idx];
                let q = m.quotient_of(&r.lm);
                let c = k.mul(c, &r.lc_inv);
                rem = sub_scaled(k, order, &rem[head + 1..], &c, &q, &r.terms[1..]);
                head = 0;
            }
            None if full => {
                out.push(rem[head].clone());
                head += 1;
            }
            None => {
                out.extend_from_slice(&rem[head..]);
                return out;
            }
        }
    }
    out
}

fn make_monic<K: Field>(k: &K, mut t: Terms<K>) -> Terms<K> {
    if let Some((_, lc)) = t.first() {
        if !k.is_one(lc) {
            let inv = k.inv(lc).expect("nonzero");
            for x in t.iter_mut() {
                x.1 = k.mul(&x.1, &inv);
            }
        }
    }
    t
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Entry<K: Field> {
    poly: Polynomial<K>,
    lm: Monomial,
    mask: u64,
    sugar: u32,
    active: bool,
}

/// Counters describing one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
}

struct State<K: Field> {
    ring: Ring<K>,
    basis: Vec<Entry<K>>,
    pairs: Vec<Pair>,
}

impl<K: Field> State<K> {
    fn reducers(&self) -> Vec<Reducer<'_, K>> {
        let mut r: Vec<_> = self
            .basis
            .iter()
            .filter(|e| e.active)
            .map(|e| Reducer {
                terms: e.poly.terms(),
                lm: e.lm,
                mask: e.mask,
                lc_inv: self.ring.field.one(),
            })
            .collect();
        // short reducers first keeps intermediate expressions small
        r.sort_by_key(|x| x.terms.len());
        r
    }

    /// Inserts a monic, top-reduced element and updates the pair set.
    fn insert(&mut self, poly: Polynomial<K>, sugar: u32) {
        let h = self.basis.len();
        let hl = *poly.leading_monomial().unwrap();
        // candidate pairs (h, g)
        let cands: Vec<(usize, Monomial)> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(g, e)| (g, hl.lcm(&e.lm)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::with_capacity(cands.len());
        for (idx, &(g, l)) in cands.iter().enumerate() {
            let coprime = hl.is_coprime(&self.basis[g].lm);
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(&l))
                || kept.iter().any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !hl.is_coprime(&self.basis[*g].lm))
            .map(|(g, l)| {
                let e = &self.basis[g];
                let sugar = core::cmp::max(
                    sugar + l.degree() - hl.degree(),
                    e.sugar + l.degree() - e.lm.degree(),
                );
                Pair {
                    i: g,
                    j: h,
                    lcm: l,
                    sugar,
                }
            })
            .collect();
        let basis = &self.basis;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm)
                && basis[p.i].lm.lcm(&hl) != p.lcm
                && basis[p.j].lm.lcm(&hl) != p.lcm)
        });
        self.pairs.extend(new_pairs);
        for e in self.basis.iter_mut() {
            if e.active && hl.divides(&e.lm) {
                e.active = false;
            }
        }
        self.basis.push(Entry {
            poly,
            lm: hl,
            mask: divmask(&hl),
            sugar,
            active: true,
        });
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
            })
            .map(|(i, _)| i)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Terms<K> {
        let k = &self.ring.field;
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let ma = p.lcm.quotient_of(&a.lm);
        let mb = p.lcm.quotient_of(&b.lm);
        let lhs: Terms<K> = a.poly.terms()[1..]
            .iter()
            .map(|(m, c)| (m.mul(&ma), c.clone()))
            .collect();
        sub_scaled(k, self.ring.order, &lhs, &k.one(), &mb, &b.poly.terms()[1..])
    }
}

/// Reduced Gröbner basis of `gens` (all in `ring`), sorted by ascending
/// leading monomial. Aborts after `budget` S-pair reductions.
pub fn groebner_basis<K: Field>(
    ring: &Ring<K>,
    gens: &[Polynomial<K>],
    budget: usize,
) -> Result<(Vec<Polynomial<K>>, Stats)> {
    let k = ring.field.clone();
    let mut st = State {
        ring: ring.clone(),
        basis: Vec::new(),
        pairs: Vec::new(),
    };
    let mut stats = Stats::default();
    let mut input: Vec<&Polynomial<K>> = gens.iter().filter(|g| !g.is_zero()).collect();
    input.sort_by_key(|g| g.total_degree().unwrap_or(0));
    for g in input {
        let sugar = g.total_degree().unwrap_or(0);
        let red = {
            let reducers = st.reducers();
            reduce(ring, g.terms().to_vec(), &reducers, false)
        };
        if red.is_empty() {
            continue;
        }
        if red[0].0 == Monomial::ONE {
            return Ok((alloc::vec![ring.one()], stats));
        }
        let p = Polynomial::from_sorted_terms(ring, make_monic(&k, red));
        st.insert(p, sugar);
    }
    while let Some(pair) = st.select() {
        if stats.pairs_reduced >= budget {
            return Err(Error::BudgetExceeded {
                pairs: stats.pairs_reduced,
            });
        }
        stats.pairs_reduced += 1;
        let s = st.spoly(&pair);
        let red = {
            let reducers = st.reducers();
            reduce(ring, s, &reducers, false)
        };
        if red.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        if red[0].0 == Monomial::ONE {
            return Ok((alloc::vec![ring.one()], stats));
        }
        let p = Polynomial::from_sorted_terms(ring, make_monic(&k, red));
        st.insert(p, pair.sugar);
    }
    Ok((interreduce(ring, st), stats))
}

fn interreduce<K: Field>(ring: &Ring<K>, st: State<K>) -> Vec<Polynomial<K>> {
    let mut active: Vec<Polynomial<K>> = st
        .basis
        .into_iter()
        .filter(|e| e.active)
        .map(|e| e.poly)
        .collect();
    active.sort_by(|a, b| {
        ring.order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut out = Vec::with_capacity(active.len());
    for i in 0..active.len() {
        let reduced = {
            let others: Vec<Reducer<'_, K>> = active
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| Reducer::new(p))
                .collect();
            let terms = active[i].terms();
            let mut tail = reduce(ring, terms[1..].to_vec(), &others, true);
            tail.insert(0, terms[0].clone());
            tail
        };
        out.push(Polynomial::from_sorted_terms(ring, reduced));
    }
    out
}

/// Fully reduced normal form of `f` against a Gröbner basis.
pub fn normal_form<K: Field>(f: &Polynomial<K>, basis: &[Polynomial<K>]) -> Polynomial<K> {
    let ring = f.ring();
    let reducers: Vec<Reducer<'_, K>> = basis.iter().map(Reducer::new).collect();
    Polynomial::from_sorted_terms(ring, reduce(ring, f.terms().to_vec(), &reducers, true))
}

/// The S-polynomial of two nonzero polynomials, scaled so both leading
/// terms cancel exactly.
pub fn s_polynomial<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>) -> Polynomial<K> {
    let k = f.field();
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = lf.lcm(lg);
    let a = f.mul_term(&l.quotient_of(lf), &k.inv(f.leading_coeff().unwrap()).unwrap());
    let b = g.mul_term(&l.quotient_of(lg), &k.inv(g.leading_coeff().unwrap()).unwrap());
    a.sub(&b)
}
