//! Counting the geometric points of a zero-dimensional projective scheme.
//!
//! After a random change of coordinates that keeps every point off the
//! hyperplane `x_0 = 0`, the scheme is dehomogenized and its radical is
//! obtained by adjoining the squarefree parts of the minimal polynomials of
//! every coordinate function. The vector-space dimension of the radical's
//! coordinate ring is the number of points.

use alloc::vec::Vec;

use super::{groebner_basis, normal_form, Ideal};
use crate::algebra::univariate::UniPoly;
use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::random::SeedStream;

const ATTEMPTS: usize = 5;

pub(super) fn count_distinct_points<K: Field>(
    ideal: &Ideal<K>,
    rng: &mut SeedStream,
) -> Result<usize> {
    Ok(match affine_radical(ideal, rng)? {
        None => 0,
        Some(chart) => standard_monomials(&chart.basis, ideal.ring().nvars - 1).len(),
    })
}

/// Homogeneous radical ideal of a zero-dimensional projective scheme.
pub(super) fn radical_of_points<K: Field>(
    ideal: &Ideal<K>,
    rng: &mut SeedStream,
) -> Result<Ideal<K>> {
    let Some(chart) = affine_radical(ideal, rng)? else {
        return Ok(Ideal::unit(ideal.ring()).with_budget(ideal.budget()));
    };
    let ring = ideal.ring().with_order(MonomialOrder::Grevlex);
    let n = ring.nvars;
    let homogenized: Vec<Polynomial<K>> = chart
        .basis
        .iter()
        .map(|g| {
            let d = g.total_degree().unwrap_or(0);
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let mut exps = alloc::vec![d - m.degree()];
                    exps.extend((0..n - 1).map(|i| m.exp(i)));
                    (Monomial::from_exponents(&exps), c.clone())
                })
                .collect();
            Polynomial::from_terms(&ring, terms)
        })
        .collect();
    let back = chart
        .change
        .inverse()
        .ok_or_else(|| Error::Certificate("coordinate change is singular".into()))?
        .apply(&ring.vars());
    let gens: Vec<_> = homogenized
        .iter()
        .map(|g| g.substitute(&back).map(|p| p.to_order(ideal.ring().order)))
        .collect::<Result<_>>()?;
    Ideal::new(ideal.ring(), gens).map(|i| i.with_budget(ideal.budget()))
}

struct Chart<K: Field> {
    /// `A` with the moved ideal `I(A x)`.
    change: crate::algebra::DenseMatrix<K>,
    /// Reduced grevlex basis of the radical of the moved ideal on `x_0 = 1`.
    basis: Vec<Polynomial<K>>,
}

fn affine_radical<K: Field>(ideal: &Ideal<K>, rng: &mut SeedStream) -> Result<Option<Chart<K>>> {
    let h = ideal.hilbert()?;
    match h.proj_dim {
        -1 => return Ok(None),
        0 => {}
        d => return Err(Error::PositiveDimension(d)),
    }
    let ring = ideal.ring().with_order(MonomialOrder::Grevlex);
    let n = ring.nvars;
    let k = &ring.field;
    for _ in 0..ATTEMPTS {
        let a = rng.invertible_matrix(k, n);
        let images = a.apply(&ring.vars());
        let moved = ideal.substitute(&images)?;
        // no point may lie on x0 = 0
        let off = moved.add_generators(&[ring.var(0).to_order(ideal.ring().order)])?;
        if off.hilbert()?.proj_dim != -1 {
            continue;
        }
        let affine = Ring::new(k.clone(), n - 1);
        let mut dehom: Vec<Polynomial<K>> = Vec::new();
        let mut point = Vec::with_capacity(n);
        point.push(affine.one());
        point.extend(affine.vars());
        for g in moved.generators() {
            dehom.push(g.to_order(MonomialOrder::Grevlex).substitute(&point)?);
        }
        let (basis, _) = groebner_basis(&affine, &dehom, ideal.budget())?;
        let mut radical = basis.clone();
        for v in 0..n - 1 {
            let mp = minimal_polynomial(&affine, &basis, v)?;
            let sf = mp.squarefree_part();
            let terms = sf
                .coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(v, e as u32), c.clone()))
                .collect();
            radical.push(Polynomial::from_terms(&affine, terms));
        }
        let (rbasis, _) = groebner_basis(&affine, &radical, ideal.budget())?;
        return Ok(Some(Chart {
            change: a,
            basis: rbasis,
        }));
    }
    Err(Error::Inconclusive {
        attempts: ATTEMPTS,
        what: "points avoiding a random hyperplane".into(),
    })
}

/// Monomials outside the lead ideal of a zero-dimensional basis.
fn standard_monomials<K: Field>(basis: &[Polynomial<K>], nvars: usize) -> Vec<Monomial> {
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| *g.leading_monomial().unwrap())
        .collect();
    let mut out = Vec::new();
    let mut frontier = alloc::vec![Monomial::ONE];
    if lms.iter().any(|m| m.divides(&Monomial::ONE)) {
        return out;
    }
    while let Some(m) = frontier.pop() {
        if out.contains(&m) {
            continue;
        }
        out.push(m);
        for v in 0..nvars {
            let next = m.mul(&Monomial::var(v, 1));
            if !lms.iter().any(|l| l.divides(&next)) && !out.contains(&next) {
                frontier.push(next);
            }
        }
    }
    out
}

/// Minimal polynomial of the coordinate `x_v` acting on the finite
/// dimensional quotient by `basis`.
fn minimal_polynomial<K: Field>(
    ring: &Ring<K>,
    basis: &[Polynomial<K>],
    v: usize,
) -> Result<UniPoly<K>> {
    let k = &ring.field;
    let stdm = standard_monomials(basis, ring.nvars);
    let dim = stdm.len();
    let coords = |p: &Polynomial<K>| -> Vec<K::Elem> { stdm.iter().map(|m| p.coeff(m)).collect() };
    // rows: reduced vectors with a record of which powers combine into them
    let mut rows: Vec<(Vec<K::Elem>, Vec<K::Elem>, usize)> = Vec::new();
    let x = ring.var(v);
    let mut power = ring.one();
    for e in 0..=dim {
        let mut vec = coords(&power);
        let mut combo = alloc::vec![k.zero(); dim + 1];
        combo[e] = k.one();
        for (rv, rc, piv) in &rows {
            let c = vec[*piv].clone();
            if !k.is_zero(&c) {
                for (a, b) in vec.iter_mut().zip(rv) {
                    *a = k.sub(a, &k.mul(&c, b));
                }
                for (a, b) in combo.iter_mut().zip(rc) {
                    *a = k.sub(a, &k.mul(&c, b));
                }
            }
        }
        match vec.iter().position(|c| !k.is_zero(c)) {
            None => {
                return Ok(UniPoly::new(k, combo[..=e].to_vec()));
            }
            Some(piv) => {
                let inv = k.inv(&vec[piv]).unwrap();
                for a in vec.iter_mut() {
                    *a = k.mul(a, &inv);
                }
                for a in combo.iter_mut() {
                    *a = k.mul(a, &inv);
                }
                rows.push((vec, combo, piv));
            }
        }
        power = normal_form(&power.mul(&x), basis);
    }
    Err(Error::PositiveDimension(1))
}
