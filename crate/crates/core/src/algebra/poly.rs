//! Sparse multivariate polynomials with terms kept in strictly descending order.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// Coefficient field, arity and active monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<K: Field> {
    pub field: K,
    pub nvars: usize,
    pub order: MonomialOrder,
}

impl<K: Field> Ring<K> {
    pub fn new(field: K, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Ring {
            field,
            nvars,
            order: MonomialOrder::Grevlex,
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Ring {
            field: self.field.clone(),
            nvars: self.nvars,
            order,
        }
    }

    pub fn with_nvars(&self, nvars: usize) -> Self {
        Ring::new(self.field.clone(), nvars).with_order(self.order)
    }

    pub fn zero(&self) -> Polynomial<K> {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial<K> {
        Polynomial::constant(self, self.field.one())
    }

    pub fn var(&self, i: usize) -> Polynomial<K> {
        Polynomial::monomial(self, Monomial::var(i, 1), self.field.one())
    }

    pub fn vars(&self) -> Vec<Polynomial<K>> {
        (0..self.nvars).map(|i| self.var(i)).collect()
    }

    pub fn constant(&self, c: i64) -> Polynomial<K> {
        Polynomial::constant(self, self.field.from_i64(c))
    }

    /// All monomials of degree `d`, in descending order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial::from_exponents(exps));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        if self.nvars == 0 {
            if d == 0 {
                out.push(Monomial::ONE);
            }
            return out;
        }
        rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.order.cmp(b, a));
        out
    }
}

pub type Term<K> = (Monomial, <K as Field>::Elem);

#[derive(Clone, Debug)]
pub struct Polynomial<K: Field> {
    ring: Ring<K>,
    terms: Vec<Term<K>>,
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Ring<K>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring<K>, c: K::Elem) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn monomial(ring: &Ring<K>, m: Monomial, c: K::Elem) -> Self {
        let terms = if ring.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: sorted, combined,
    /// zero coefficients dropped.
    pub fn from_terms(ring: &Ring<K>, mut terms: Vec<Term<K>>) -> Self {
        let order = ring.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let k = &ring.field;
        let mut out: Vec<Term<K>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = k.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if k.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if k.is_zero(&last.1) {
                out.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Builds from terms already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Ring<K>, terms: Vec<Term<K>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !ring.field.is_zero(&t.1)));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    #[inline]
    pub fn field(&self) -> &K {
        &self.ring.field
    }

    #[inline]
    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<K>> {
        self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 0)
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    #[inline]
    pub fn leading_coeff(&self) -> Option<&K::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximum total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Common degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Coefficient of a given monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> K::Elem {
        let order = self.ring.order;
        match self.terms.binary_search_by(|t| order.cmp(m, &t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    /// Highest variable index used, plus one.
    pub fn support_len(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| m.support_len())
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    /// Panics on ring mismatch; use `try_add` at API boundaries.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let one = self.field().one();
        self.merge(other, &one, &Monomial::ONE, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let one = self.field().one();
        self.merge(other, &one, &Monomial::ONE, true)
    }

    /// `self - c * m * other` in one merge pass.
    pub fn sub_mul_term(&self, c: &K::Elem, m: &Monomial, other: &Self) -> Self {
        self.merge(other, c, m, true)
    }

    fn merge(&self, other: &Self, c: &K::Elem, m: &Monomial, negate: bool) -> Self {
        let k = &self.ring.field;
        let order = self.ring.order;
        let c = if negate { k.neg(c) } else { c.clone() };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(bm, bc)| (bm.mul(m), k.mul(bc, &c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let s = k.add(&x.1, &y.1);
                        let mono = x.0;
                        a.next();
                        b.next();
                        if !k.is_zero(&s) {
                            out.push((mono, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (None, None) => break,
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let k = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, k.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let k = &self.ring.field;
        if k.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, k.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &K::Elem) -> Self {
        let k = &self.ring.field;
        if k.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (a.mul(m), k.mul(b, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let k = &self.ring.field;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, c);
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (am, ac) in &small.terms {
            for (bm, bc) in &large.terms {
                terms.push((am.mul(bm), k.mul(ac, bc)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if self.field().is_one(c) => self.clone(),
            Some(c) => {
                let inv = self.field().inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.ring.nvars, "variable index out of range");
        let k = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exp(var);
                let lowered = m.lower(var)?;
                let c = k.mul(c, &k.from_i64(e as i64));
                (!k.is_zero(&c)).then_some((lowered, c))
            })
            .collect();
        // lowering one variable preserves relative order only for some orders
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Evaluates at a point of the coefficient field.
    pub fn evaluate(&self, point: &[K::Elem]) -> Result<K::Elem> {
        if point.len() != self.ring.nvars {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars,
                found: point.len(),
            });
        }
        let k = &self.ring.field;
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v = k.mul(&v, &k.pow(x, e as u64));
                }
            }
            acc = k.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for variable `i`. The images may live in a
    /// ring of different arity; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Polynomial<K>]) -> Result<Polynomial<K>> {
        if images.len() != self.ring.nvars {
            return Err(Error::ArityMismatch {
                expected: self.ring.nvars,
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| p.ring != target) || target.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        // powers[i][e] = images[i]^e, built lazily
        let mut powers: Vec<Vec<Polynomial<K>>> = images
            .iter()
            .map(|_| vec![target.one()])
            .collect();
        let mut acc_terms: Vec<Term<K>> = Vec::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&target, c.clone());
            for i in 0..self.ring.nvars {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                prod = prod.mul(&powers[i][e]);
            }
            acc_terms.extend(prod.terms);
        }
        Ok(Polynomial::from_terms(&target, acc_terms))
    }

    /// Re-sorts the terms for another monomial order.
    pub fn to_order(&self, order: MonomialOrder) -> Self {
        if order == self.ring.order {
            return self.clone();
        }
        Polynomial::from_terms(&self.ring.with_order(order), self.terms.clone())
    }

    /// Moves variable `i` to `map[i]` in `target`.
    pub fn remap(&self, target: &Ring<K>, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.ring.nvars);
        assert!(map.iter().all(|&j| j < target.nvars));
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())).collect(),
        )
    }

    /// Exact division by leading-term cancellation; `None` when `den` does
    /// not divide `self`.
    pub fn exact_div(&self, den: &Self) -> Option<Self> {
        assert_eq!(self.ring, den.ring, "ring mismatch");
        let k = &self.ring.field;
        let (lm, lc) = den.terms.first()?;
        let lc_inv = k.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let qm = m.checked_div(lm)?;
            let qc = k.mul(c, &lc_inv);
            rem = rem.sub_mul_term(&qc, &qm, den);
            quot.push((qm, qc));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quot))
    }

    /// Writes the polynomial with explicit variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a, K> {
        PolyDisplay { poly: self, names }
    }

    /// Rendering in the text grammar with the standard names.
    pub fn to_text(&self) -> String {
        alloc::format!("{}", self)
    }
}

/// `exact_div` as a free function, mirroring the other operations.
pub fn exact_divide<K: Field>(num: &Polynomial<K>, den: &Polynomial<K>) -> Option<Polynomial<K>> {
    if den.is_zero() {
        return None;
    }
    num.exact_div(den)
}

pub fn poly_mul<K: Field>(a: &Polynomial<K>, b: &Polynomial<K>) -> Result<Polynomial<K>> {
    a.try_mul(b)
}

pub fn partial_derivative<K: Field>(f: &Polynomial<K>, var: usize) -> Result<Polynomial<K>> {
    if var >= f.ring.nvars {
        return Err(Error::ArityMismatch {
            expected: f.ring.nvars,
            found: var,
        });
    }
    Ok(f.derivative(var))
}

/// Standard variable names: `z0..z3` then `y0..y3`, then `x8...`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (0..nvars)
        .map(|i| match i {
            0..=3 => alloc::format!("z{}", i),
            4..=7 => alloc::format!("y{}", i - 4),
            _ => alloc::format!("x{}", i),
        })
        .collect()
}

pub struct PolyDisplay<'a, K: Field> {
    poly: &'a Polynomial<K>,
    names: &'a [&'a str],
}

impl<K: Field> fmt::Display for PolyDisplay<'_, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self.poly, self.names, f)
    }
}

fn write_poly<K: Field>(
    p: &Polynomial<K>,
    names: &[&str],
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let k = p.field();
    if p.is_zero() {
        return write!(f, "0");
    }
    for (idx, (m, c)) in p.terms.iter().enumerate() {
        let mut buf = String::new();
        {
            use core::fmt::Write;
            let _ = write!(buf, "{}", super::field::ElemDisplay { field: k, elem: c });
        }
        let (negative, abs_repr) = if let Some(stripped) = buf.strip_prefix('-') {
            (true, String::from(stripped))
        } else {
            (false, buf)
        };
        if negative {
            write!(f, "-")?;
        } else if idx > 0 {
            write!(f, "+")?;
        }
        let unit = abs_repr == "1";
        let mut first = true;
        if !unit || m.degree() == 0 {
            write!(f, "{}", abs_repr)?;
            first = false;
        }
        for i in 0..p.ring.nvars {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", names[i])?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
    }
    Ok(())
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let owned = default_names(self.ring.nvars);
        let names: Vec<&str> = owned.iter().map(|s| s.as_str()).collect();
        write_poly(self, &names, f)
    }
}
