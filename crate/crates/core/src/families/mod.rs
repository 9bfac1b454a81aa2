//! Constructors for the quarto-quartic families `J`, `R`, `D`, `C` and the
//! Loria example, with their expected invariants and dimension counts.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{DenseMatrix, Field, Monomial, PolyMatrix, Polynomial, Rationals, Ring};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::random::SeedStream;
use crate::ratmap::{line_component, point_ideal, secant_length, MapAnalysis, RationalMap, ATTEMPTS};

mod deep;
#[cfg(test)]
mod tests;

pub use deep::{contraction_suite, deep_suite, ContractionReport, DeepReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    J,
    R,
    D,
    C,
    Loria,
}

impl Family {
    pub const THEOREM_B: [Family; 4] = [Family::R, Family::C, Family::D, Family::J];

    pub fn label(&self) -> &'static str {
        match self {
            Family::J => "J",
            Family::R => "R",
            Family::D => "D",
            Family::C => "C",
            Family::Loria => "loria",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "J" | "j" => Some(Family::J),
            "R" | "r" => Some(Family::R),
            "D" | "d" => Some(Family::D),
            "C" | "c" => Some(Family::C),
            "loria" | "Loria" | "L" => Some(Family::Loria),
            _ => None,
        }
    }
}

/// Invariants a family member must show.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile {
    pub bidegree: (u32, i64),
    pub alpha: i64,
    pub beta: Option<i64>,
    pub eta: Option<i64>,
    pub genus: Option<i64>,
}

/// Expected row for a family member of degree `d`; only the entries the
/// construction pins down are filled in.
pub fn expected_profile(family: Family, d: u32) -> Option<Profile> {
    let di = d as i64;
    match (family, d) {
        (Family::J, 4) => Some(Profile {
            bidegree: (4, 4),
            alpha: 12,
            beta: Some(0),
            eta: None,
            genus: Some(3),
        }),
        (Family::J, _) => Some(Profile {
            bidegree: (d, di),
            alpha: di * (di - 1),
            beta: None,
            eta: None,
            genus: None,
        }),
        (Family::R, 4) => Some(Profile {
            bidegree: (4, 4),
            alpha: 9,
            beta: Some(1),
            eta: Some(3),
            genus: Some(0),
        }),
        (Family::R, _) => Some(Profile {
            bidegree: (d, di),
            alpha: (di + 2) * (di - 1) / 2,
            beta: None,
            eta: None,
            genus: None,
        }),
        (Family::C, 4) => Some(Profile {
            bidegree: (4, 4),
            alpha: 10,
            beta: Some(1),
            eta: Some(2),
            genus: Some(1),
        }),
        (Family::D, 4) => Some(Profile {
            bidegree: (4, 4),
            alpha: 11,
            beta: Some(1),
            eta: Some(1),
            genus: Some(2),
        }),
        _ => None,
    }
}

/// Cells where an analysis disagrees with a profile, as `name: want X, got Y`.
pub fn profile_mismatches(want: &Profile, got: &MapAnalysis) -> Vec<String> {
    let mut out = Vec::new();
    if want.bidegree != got.bidegree {
        out.push(format!("bidegree: want {:?}, got {:?}", want.bidegree, got.bidegree));
    }
    if want.alpha != got.alpha {
        out.push(format!("alpha: want {}, got {}", want.alpha, got.alpha));
    }
    if let Some(b) = want.beta {
        if b != got.beta {
            out.push(format!("beta: want {b}, got {}", got.beta));
        }
    }
    if want.eta.is_some() && want.eta != got.eta {
        out.push(format!("eta: want {:?}, got {:?}", want.eta, got.eta));
    }
    if want.genus.is_some() && want.genus != got.genus {
        out.push(format!("genus: want {:?}, got {:?}", want.genus, got.genus));
    }
    out
}

/// A constructed map with its witnesses.
#[derive(Clone, Debug)]
pub struct Member<K: Field> {
    pub family: Family,
    pub map: RationalMap<K>,
    pub inverse: Option<RationalMap<K>>,
    /// Distinguished line (`D`) or triple line (`R`).
    pub delta: Option<Ideal<K>>,
    /// Residual base curve `Γ̄` (`D`).
    pub gamma: Option<Ideal<K>>,
    pub expected: Option<Profile>,
}

/// Builds a member of `family` from a seed.
pub fn construct<K: Field>(family: Family, ring: &Ring<K>, d: u32, rng: &mut SeedStream) -> Result<Member<K>> {
    match family {
        Family::J => make_jonquieres(ring, None, d, rng),
        Family::R => make_ruled(ring, d, rng),
        Family::D => need_quartic(family, d).and_then(|_| make_determinantal(ring, None, rng)),
        Family::C => need_quartic(family, d).and_then(|_| make_conic(ring, None, rng)),
        Family::Loria => need_quartic(family, d).and_then(|_| make_loria(ring)),
    }
}

fn need_quartic(family: Family, d: u32) -> Result<()> {
    if d != 4 {
        return Err(Error::Invalid(format!("family {} exists in degree 4 only", family.label())));
    }
    Ok(())
}

/// Rows of a reduced echelon matrix over the monomials `monos` as forms.
fn rows_to_forms<K: Field>(ring: &Ring<K>, monos: &[Monomial], m: &DenseMatrix<K>) -> Vec<Polynomial<K>> {
    (0..m.rows)
        .map(|i| {
            let terms = monos
                .iter()
                .zip(m.row(i))
                .map(|(mo, c)| (*mo, c.clone()))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .filter(|p: &Polynomial<K>| !p.is_zero())
        .collect()
}

/// Degree-`d` forms of `ideal` as a map, failing unless there are exactly
/// four of them.
fn linear_system<K: Field>(ideal: &Ideal<K>, d: u32, what: &str) -> Result<Vec<Polynomial<K>>> {
    let (monos, m) = ideal.graded_piece_matrix(d)?;
    let forms = rows_to_forms(ideal.ring(), &monos, &m);
    if forms.len() != 4 {
        return Err(Error::Certificate(format!(
            "{what}: degree-{d} piece has dimension {}, expected 4",
            forms.len()
        )));
    }
    Ok(forms)
}

fn retry<T>(what: &str, mut attempt: impl FnMut() -> Result<T>) -> Result<T> {
    let mut last = None;
    for _ in 0..ATTEMPTS {
        match attempt() {
            Ok(v) => return Ok(v),
            Err(e @ Error::Certificate(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::Certificate(format!("{what}: no attempt made"))))
}

// ---------------------------------------------------------------------------
// de Jonquières

/// `S_{d-1} = z3·Q_{d-2} + Q_{d-1}`, `S_d = z3·P_{d-1} + P_d`, with all
/// four forms in `z0, z1, z2`.
#[derive(Clone, Debug)]
pub struct JonquieresParams<K: Field> {
    pub d: u32,
    pub p_low: Polynomial<K>,
    pub p_high: Polynomial<K>,
    pub q_low: Polynomial<K>,
    pub q_high: Polynomial<K>,
}

impl<K: Field> JonquieresParams<K> {
    pub fn random(ring: &Ring<K>, d: u32, rng: &mut SeedStream) -> Self {
        let plane = [0, 1, 2];
        JonquieresParams {
            d,
            p_low: rng.form_in(ring, &plane, d - 1),
            p_high: rng.form_in(ring, &plane, d),
            q_low: rng.form_in(ring, &plane, d - 2),
            q_high: rng.form_in(ring, &plane, d - 1),
        }
    }

    pub fn surfaces(&self, ring: &Ring<K>) -> (Polynomial<K>, Polynomial<K>) {
        let z3 = ring.var(3);
        (
            z3.mul(&self.q_low).add(&self.q_high),
            z3.mul(&self.p_low).add(&self.p_high),
        )
    }

    fn check(&self, ring: &Ring<K>) -> Result<()> {
        let d = self.d;
        let shapes = [
            (&self.p_low, d - 1, "P_{d-1}"),
            (&self.p_high, d, "P_d"),
            (&self.q_low, d - 2, "Q_{d-2}"),
            (&self.q_high, d - 1, "Q_{d-1}"),
        ];
        for (f, e, name) in shapes {
            if f.uses_var(3) || (!f.is_zero() && f.homogeneous_degree() != Some(e)) {
                return Err(Error::Certificate(format!("{name} is not a form of degree {e} in z0, z1, z2")));
            }
        }
        if self.p_low.mul(&self.q_high) == self.p_high.mul(&self.q_low) {
            return Err(Error::Certificate("P_{d-1}·Q_{d-1} = P_d·Q_{d-2}".into()));
        }
        let (s1, s2) = self.surfaces(ring);
        let ci = Ideal::new(ring, vec![s1, s2])?;
        if ci.hilbert()?.proj_dim != 1 {
            return Err(Error::Certificate("S_{d-1} and S_d share a factor".into()));
        }
        Ok(())
    }
}

/// `(z0·S_{d-1} : z1·S_{d-1} : z2·S_{d-1} : S_d)` with its closed-form
/// inverse.
pub fn make_jonquieres<K: Field>(
    ring: &Ring<K>,
    params: Option<JonquieresParams<K>>,
    d: u32,
    rng: &mut SeedStream,
) -> Result<Member<K>> {
    if d < 2 {
        return Err(Error::Invalid(format!("de Jonquières maps need d >= 2, got {d}")));
    }
    let params = match params {
        Some(p) => {
            p.check(ring)?;
            p
        }
        None => retry("de Jonquières parameters", || {
            let p = JonquieresParams::random(ring, d, rng);
            p.check(ring).map(|_| p)
        })?,
    };
    let d = params.d;
    let (s1, s2) = params.surfaces(ring);
    let z = ring.vars();
    let comps = vec![z[0].mul(&s1), z[1].mul(&s1), z[2].mul(&s1), s2];
    let map = RationalMap::new(ring, comps, &format!("J d={d}"))?;
    let y3 = ring.var(3);
    let s1i = params.p_low.sub(&y3.mul(&params.q_low));
    let s2i = y3.mul(&params.q_high).sub(&params.p_high);
    let inv = vec![z[0].mul(&s1i), z[1].mul(&s1i), z[2].mul(&s1i), s2i];
    let inverse = RationalMap::new(ring, inv, &format!("J d={d} inverse"))?;
    Ok(Member {
        family: Family::J,
        map,
        inverse: Some(inverse),
        delta: None,
        gamma: None,
        expected: expected_profile(Family::J, d),
    })
}

// ---------------------------------------------------------------------------
// ruled

#[derive(Clone, Debug)]
pub struct RuledParams<K: Field> {
    pub d: u32,
    pub delta: Ideal<K>,
    pub lines: Vec<Ideal<K>>,
    pub points: Vec<Vec<K::Elem>>,
}

impl<K: Field> RuledParams<K> {
    pub fn random(ring: &Ring<K>, d: u32, rng: &mut SeedStream) -> Result<Self> {
        let k = &ring.field;
        let a = rng.nonzero_vector(k, 4);
        let b = rng.nonzero_vector(k, 4);
        let delta = crate::ratmap::line_through(ring, &a, &b)?;
        let mut lines = Vec::new();
        for _ in 1..d {
            let t = rng.elem(k);
            let on: Vec<_> = a.iter().zip(&b).map(|(x, y)| k.add(x, &k.mul(&t, y))).collect();
            let off = rng.nonzero_vector(k, 4);
            lines.push(crate::ratmap::line_through(ring, &on, &off)?);
        }
        let points = (1..d).map(|_| rng.nonzero_vector(k, 4)).collect();
        Ok(RuledParams { d, delta, lines, points })
    }

    fn check(&self, rng: &mut SeedStream) -> Result<()> {
        for (i, l) in self.lines.iter().enumerate() {
            let meet = secant_length(&self.delta, l, rng).map_err(|_| cert("Δ_i equals δ"))?;
            if meet != 1 {
                return Err(cert(&format!("Δ_{} meets δ in length {meet}", i + 1)));
            }
            for (j, m) in self.lines.iter().enumerate().skip(i + 1) {
                if secant_length(l, m, rng).map_err(|_| cert("two lines Δ coincide"))? != 0 {
                    return Err(cert(&format!("Δ_{} and Δ_{} meet", i + 1, j + 1)));
                }
            }
        }
        let all: Vec<&Ideal<K>> = core::iter::once(&self.delta).chain(&self.lines).collect();
        for (i, p) in self.points.iter().enumerate() {
            for l in &all {
                let on = l
                    .generators()
                    .iter()
                    .map(|g| g.evaluate(p))
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .all(|v| l.ring().field.is_zero(v));
                if on {
                    return Err(cert(&format!("p_{} lies on a line", i + 1)));
                }
            }
        }
        Ok(())
    }

    /// `I_δ^{d-1} ∩ I_{Δ_1} ∩ … ∩ I_{p_1} ∩ …`.
    pub fn ideal(&self) -> Result<Ideal<K>> {
        let ring = self.delta.ring().clone();
        let mut acc = self.delta.power(self.d - 1)?;
        for l in &self.lines {
            acc = acc.intersection(l)?.minimized()?;
        }
        for p in &self.points {
            acc = acc.intersection(&point_ideal(&ring, p)?)?.minimized()?;
        }
        Ok(acc)
    }
}

fn cert(s: &str) -> Error {
    Error::Certificate(s.into())
}

/// Degree-`d` forms through `δ` with multiplicity `d-1`, through the
/// lines `Δ_i` and the points `p_i`.
pub fn make_ruled<K: Field>(ring: &Ring<K>, d: u32, rng: &mut SeedStream) -> Result<Member<K>> {
    if d < 2 {
        return Err(Error::Invalid(format!("ruled maps need d >= 2, got {d}")));
    }
    let (params, comps) = retry("ruled parameters", || {
        let p = RuledParams::random(ring, d, rng)?;
        p.check(rng)?;
        let comps = linear_system(&p.ideal()?, d, "ruled linear system")?;
        Ok((p, comps))
    })?;
    let map = RationalMap::new(ring, comps, &format!("R d={d}"))?;
    Ok(Member {
        family: Family::R,
        map,
        inverse: None,
        delta: Some(params.delta),
        gamma: None,
        expected: expected_profile(Family::R, d),
    })
}

// ---------------------------------------------------------------------------
// determinantal

/// Linear data of the determinantal construction; `T_λ = λ_0 U_0 + λ_1 U_1`.
#[derive(Clone, Debug)]
pub struct DetParams<K: Field> {
    pub n0: DenseMatrix<K>,
    pub n1: DenseMatrix<K>,
    pub m: DenseMatrix<K>,
    pub u0: DenseMatrix<K>,
    pub u1: DenseMatrix<K>,
    pub b: DenseMatrix<K>,
}

impl<K: Field> DetParams<K> {
    /// The pairing `∧²L`: `B = [[0, -1], [1, 0]]`.
    pub fn pairing(k: &K) -> DenseMatrix<K> {
        DenseMatrix::from_i64(k, &[&[0, -1], &[1, 0]])
    }

    /// The worked example with `N_0 = N_1`, `M = id` and cyclic `U_0, U_1`.
    pub fn explicit(k: &K) -> Self {
        let n = DenseMatrix::from_i64(k, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
        DetParams {
            n0: n.clone(),
            n1: n,
            m: DenseMatrix::identity(k, 4),
            u0: DenseMatrix::from_i64(k, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0]]),
            u1: DenseMatrix::from_i64(k, &[&[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]),
            b: Self::pairing(k),
        }
    }

    pub fn random(k: &K, rng: &mut SeedStream) -> Self {
        DetParams {
            n0: rng.matrix(k, 4, 2),
            n1: rng.matrix(k, 4, 2),
            m: rng.matrix(k, 4, 4),
            u0: rng.matrix(k, 4, 4),
            u1: rng.matrix(k, 4, 4),
            b: Self::pairing(k),
        }
    }

    fn check(&self) -> Result<()> {
        if self.n0.rank() != 2 || self.n1.rank() != 2 {
            return Err(cert("N_0 or N_1 does not have rank 2"));
        }
        let k = &self.u0.field;
        let stacked = DenseMatrix::from_rows(k, vec![self.u0.data.clone(), self.u1.data.clone()]);
        if stacked.rank() != 2 {
            return Err(cert("U_0 and U_1 are dependent"));
        }
        Ok(())
    }

    /// `T_λ` for a vector of linear forms `λ`, as a matrix of forms.
    fn t_of(&self, lambda: &[Polynomial<K>]) -> Vec<Vec<Polynomial<K>>> {
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        lambda[0]
                            .scale(self.u0.get(i, j))
                            .add(&lambda[1].scale(self.u1.get(i, j)))
                    })
                    .collect()
            })
            .collect()
    }
}

fn mat_vec<K: Field>(rows: &[Vec<Polynomial<K>>], v: &[Polynomial<K>]) -> Vec<Polynomial<K>> {
    rows.iter()
        .map(|r| r.iter().zip(v).fold(v[0].ring().zero(), |acc, (a, b)| acc.add(&a.mul(b))))
        .collect()
}

fn transpose<K: Field>(rows: &[Vec<Polynomial<K>>]) -> Vec<Vec<Polynomial<K>>> {
    (0..rows[0].len())
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// `G = (g_0 g_1 g_2)` with `g_0 = N_1 B N_0ᵀ z`, `g_1 = M z`,
/// `g_2 = T_{B N_0ᵀ z}(z)`.
pub fn determinantal_matrix<K: Field>(ring: &Ring<K>, p: &DetParams<K>) -> Result<PolyMatrix<K>> {
    let z = ring.vars();
    let lambda = p.b.apply(&p.n0.transpose().apply(&z));
    let g0 = p.n1.apply(&lambda);
    let g1 = p.m.apply(&z);
    let g2 = mat_vec(&p.t_of(&lambda), &z);
    PolyMatrix::from_columns(&[g0, g1, g2])
}

/// `G' = (g'_0 g'_1 g'_2)` with `g'_0 = -N_0 B N_1ᵀ y`, `g'_1 = Mᵀ y`,
/// `g'_2 = (T_{B N_1ᵀ y})ᵀ(y)`.
pub fn determinantal_inverse_matrix<K: Field>(ring: &Ring<K>, p: &DetParams<K>) -> Result<PolyMatrix<K>> {
    let y = ring.vars();
    let lambda = p.b.apply(&p.n1.transpose().apply(&y));
    let g0: Vec<_> = p.n0.apply(&lambda).iter().map(|f| f.neg()).collect();
    let g1 = p.m.transpose().apply(&y);
    let g2 = mat_vec(&transpose(&p.t_of(&lambda)), &y);
    PolyMatrix::from_columns(&[g0, g1, g2])
}

/// `τ` and `τ'` as signed maximal minors, with the matrix `G` of `τ`.
pub fn determinantal_maps<K: Field>(
    ring: &Ring<K>,
    p: &DetParams<K>,
) -> Result<(RationalMap<K>, RationalMap<K>, PolyMatrix<K>)> {
    p.check()?;
    let g = determinantal_matrix(ring, p)?;
    let gp = determinantal_inverse_matrix(ring, p)?;
    let tau = RationalMap::new(ring, g.signed_maximal_minors()?, "D tau")?;
    let tau_p = RationalMap::new(ring, gp.signed_maximal_minors()?, "D tau'")?;
    Ok((tau, tau_p, g))
}

/// The line `Δ` (one-dimensional part of the singular scheme) and the
/// residual curve `Γ̄ = (base : I_Δ^∞)`.
pub fn delta_and_gamma<K: Field>(map: &RationalMap<K>, rng: &mut SeedStream) -> Result<(Ideal<K>, Ideal<K>)> {
    let sing = map.sing_scheme()?;
    let delta = line_component(&sing.ideal, rng)?;
    let gamma = map.base_ideal()?.saturate_generic(&delta, rng)?.minimized()?;
    Ok((delta, gamma))
}

/// `τ` with inverse `τ'`, `Δ` and `Γ̄`; certified by a base scheme of
/// dimension one and degree 11, and by `Δ = {N_0ᵀ z = 0}`.
pub fn make_determinantal<K: Field>(
    ring: &Ring<K>,
    params: Option<DetParams<K>>,
    rng: &mut SeedStream,
) -> Result<Member<K>> {
    let k = ring.field.clone();
    let attempt = |p: DetParams<K>, rng: &mut SeedStream| -> Result<Member<K>> {
        let (tau, tau_p, _) = determinantal_maps(ring, &p)?;
        let hb = tau.base_ideal()?.hilbert()?;
        if (hb.proj_dim, hb.degree) != (1, 11) {
            return Err(cert(&format!(
                "base scheme of dimension {} and degree {}, expected 1 and 11",
                hb.proj_dim, hb.degree
            )));
        }
        let (delta, gamma) = delta_and_gamma(&tau, rng)?;
        let kernel_line = Ideal::new(ring, p.n0.transpose().apply(&ring.vars()))?;
        if !delta.same_ideal(&kernel_line)? {
            return Err(cert("singular line differs from N_0ᵀ z = 0"));
        }
        Ok(Member {
            family: Family::D,
            map: tau,
            inverse: Some(tau_p),
            delta: Some(delta),
            gamma: Some(gamma),
            expected: expected_profile(Family::D, 4),
        })
    };
    match params {
        Some(p) => attempt(p, rng),
        None => retry("determinantal parameters", || {
            let p = DetParams::random(&k, rng);
            attempt(p, rng)
        }),
    }
}

// ---------------------------------------------------------------------------
// conic

/// `p = (0:0:0:1)`, `Q_1 ∈ I_p(2)`, `Q_2` a conic in `z0, z1, z2`, a plane
/// `f` and a point `p_1`.
#[derive(Clone, Debug)]
pub struct ConicParams<K: Field> {
    pub q1: Polynomial<K>,
    pub q2: Polynomial<K>,
    pub f: Polynomial<K>,
    pub p1: Vec<K::Elem>,
}

impl<K: Field> ConicParams<K> {
    pub fn random(ring: &Ring<K>, rng: &mut SeedStream) -> Self {
        let k = &ring.field;
        let z3 = ring.var(3);
        let q1 = rng
            .form_in(ring, &[0, 1, 2], 2)
            .add(&z3.mul(&rng.form_in(ring, &[0, 1, 2], 1)));
        ConicParams {
            q1,
            q2: rng.form_in(ring, &[0, 1, 2], 2),
            f: rng.linear_form(ring),
            p1: rng.nonzero_vector(k, 4),
        }
    }

    /// `(f²Q_2, Q_1², fQ_1z_0, fQ_1z_1, fQ_1z_2)`.
    pub fn g_ideal(&self, ring: &Ring<K>) -> Result<Ideal<K>> {
        let fq = self.f.mul(&self.q1);
        let z = ring.vars();
        Ideal::new(
            ring,
            vec![
                self.f.mul(&self.f).mul(&self.q2),
                self.q1.mul(&self.q1),
                fq.mul(&z[0]),
                fq.mul(&z[1]),
                fq.mul(&z[2]),
            ],
        )
    }

    /// `(f,Q_1)² ∩ (Q_1,Q_2) ∩ I_p²`, computed by intersections.
    pub fn g_by_intersection(&self, ring: &Ring<K>) -> Result<Ideal<K>> {
        let z = ring.vars();
        let fq = Ideal::new(ring, vec![self.f.clone(), self.q1.clone()])?.power(2)?;
        let qq = Ideal::new(ring, vec![self.q1.clone(), self.q2.clone()])?;
        let p2 = Ideal::new(ring, z[..3].to_vec())?.power(2)?;
        fq.intersection(&qq)?.minimized()?.intersection(&p2)?.minimized()
    }
}

pub fn make_conic<K: Field>(ring: &Ring<K>, params: Option<ConicParams<K>>, rng: &mut SeedStream) -> Result<Member<K>> {
    let attempt = |p: ConicParams<K>| -> Result<Vec<Polynomial<K>>> {
        let g = p.g_ideal(ring)?;
        if !g.same_ideal(&p.g_by_intersection(ring)?)? {
            return Err(cert("explicit generators differ from (f,Q1)^2 ∩ (Q1,Q2) ∩ I_p^2"));
        }
        let full = g.intersection(&point_ideal(ring, &p.p1)?)?.minimized()?;
        linear_system(&full, 4, "conic linear system")
    };
    let comps = match params {
        Some(p) => attempt(p)?,
        None => retry("conic parameters", || attempt(ConicParams::random(ring, rng)))?,
    };
    Ok(Member {
        family: Family::C,
        map: RationalMap::new(ring, comps, "C")?,
        inverse: None,
        delta: None,
        gamma: None,
        expected: expected_profile(Family::C, 4),
    })
}

// ---------------------------------------------------------------------------
// Loria

/// Seed of the three points `O_1, O_2, O_3` in the plane `z3 = 0`.
pub const LORIA_SEED: u64 = 1890;

/// Small integer points in `z3 = 0` with no zero coordinate among the
/// first three, drawn from [`LORIA_SEED`].
pub fn loria_points() -> [[i64; 4]; 3] {
    let mut rng = SeedStream::new(LORIA_SEED);
    let mut draw = || loop {
        let v: [i64; 3] = core::array::from_fn(|_| (rng.next_u64() % 11) as i64 - 5);
        if v.iter().all(|&x| x != 0) {
            return [v[0], v[1], v[2], 0];
        }
    };
    loop {
        let pts = [draw(), draw(), draw()];
        // pairwise independent and not collinear
        let det = |a: &[i64; 4], b: &[i64; 4], c: &[i64; 4]| {
            a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
        };
        let cross = |a: &[i64; 4], b: &[i64; 4]| {
            [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
        };
        let distinct = (0..3).all(|i| (i + 1..3).all(|j| cross(&pts[i], &pts[j]) != [0, 0, 0]));
        if distinct && det(&pts[0], &pts[1], &pts[2]) != 0 {
            return pts;
        }
    }
}

/// Primitive integer quadric cones `q_0, q_1, q_2` through the lines
/// `l_0, l_1, l_2` (`(z1,z2)`, `(z2,z0)`, `(z0,z1)`), `q_j` passing through
/// the two points `O_i` with `i ≠ j+1`.
pub fn loria_quadrics() -> Result<[[BigInt; 10]; 3]> {
    let k = Rationals;
    let ring = Ring::new(k, 4);
    let monos = ring.monomials_of_degree(2);
    let o = loria_points();
    let on_lines: [[i64; 4]; 7] = [
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [1, 0, 0, 1],
        [0, 1, 0, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 0],
        [0, 0, 1, 1],
    ];
    let mut out: [[BigInt; 10]; 3] = Default::default();
    for j in 0..3 {
        let mut rows: Vec<[i64; 4]> = on_lines.to_vec();
        rows.extend((0..3).filter(|&i| i != j).map(|i| o[i]));
        let m = DenseMatrix::from_rows(
            &k,
            rows.iter()
                .map(|pt| {
                    let pt: Vec<_> = pt.iter().map(|&v| k.from_i64(v)).collect();
                    monos
                        .iter()
                        .map(|mo| Polynomial::monomial(&ring, *mo, k.one()).evaluate(&pt).unwrap())
                        .collect()
                })
                .collect(),
        );
        let ker = m.kernel();
        if ker.len() != 1 {
            return Err(Error::Certificate(format!(
                "incidence system for q_{j} has a {}-dimensional solution space",
                ker.len()
            )));
        }
        let v = &ker[0];
        let lcm = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = v
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for (slot, c) in out[j].iter_mut().zip(ints) {
            *slot = c * &sign / &g;
        }
    }
    Ok(out)
}

/// `(q_1 q_2, q_0 q_2, q_0 q_1, z0 z1 z2 z3)`.
pub fn make_loria<K: Field>(ring: &Ring<K>) -> Result<Member<K>> {
    let k = &ring.field;
    let monos = ring.monomials_of_degree(2);
    let q: Vec<Polynomial<K>> = loria_quadrics()?
        .iter()
        .map(|c| {
            let terms = monos.iter().zip(c).map(|(m, v)| (*m, k.from_bigint(v))).collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    let z = ring.vars();
    let lines = loria_lines(ring)?;
    let o = loria_points();
    for (j, qj) in q.iter().enumerate() {
        if qj.is_zero() {
            return Err(cert("quadric cone vanishes in this characteristic"));
        }
        for l in &lines {
            if !l.contains(qj)? {
                return Err(cert(&format!("q_{j} does not contain a coordinate line")));
            }
        }
        for (i, pt) in o.iter().enumerate().filter(|(i, _)| *i != j) {
            let pt: Vec<_> = pt.iter().map(|&v| k.from_i64(v)).collect();
            if !k.is_zero(&qj.evaluate(&pt)?) {
                return Err(cert(&format!("q_{j} misses O_{}", i + 1)));
            }
        }
    }
    let comps = vec![
        q[1].mul(&q[2]),
        q[0].mul(&q[2]),
        q[0].mul(&q[1]),
        z[0].mul(&z[1]).mul(&z[2]).mul(&z[3]),
    ];
    Ok(Member {
        family: Family::Loria,
        map: RationalMap::new(ring, comps, "loria")?,
        inverse: None,
        delta: None,
        gamma: None,
        expected: None,
    })
}

/// Ideals of `l_0 = (z1,z2)`, `l_1 = (z2,z0)`, `l_2 = (z0,z1)`.
pub fn loria_lines<K: Field>(ring: &Ring<K>) -> Result<Vec<Ideal<K>>> {
    let z = ring.vars();
    [(1, 2), (2, 0), (0, 1)]
        .iter()
        .map(|&(a, b)| Ideal::new(ring, vec![z[a].clone(), z[b].clone()]))
        .collect()
}

// ---------------------------------------------------------------------------
// dimensions

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the family: `2d²+2d+14` (J), `6d+13` (R), 46 (D), 37 (C).
pub fn dimension_formula(family: Family, d: u32) -> Result<i64> {
    let di = d as i64;
    match (family, d) {
        (Family::J, 2..) => Ok(2 * di * di + 2 * di + 14),
        (Family::R, 2..) => Ok(6 * di + 13),
        (Family::D, 4) => Ok(46),
        (Family::C, 4) => Ok(37),
        _ => Err(Error::Invalid(format!(
            "no dimension formula for family {} in degree {d}",
            family.label()
        ))),
    }
}

/// Recomputes the dimension from its parameter count and compares.
pub fn dimension_identity(family: Family, d: u32) -> Result<bool> {
    let di = d as i64;
    let count = match family {
        Family::J => binom(di, di - 2) + 2 * binom(di + 1, di - 1) + binom(di + 2, di) + 13,
        Family::R => 4 + 3 * (di - 1) + 3 * (di - 1) + 15,
        Family::D => 7 + 7 + 15 + 21 - 4,
        Family::C => 9 + 7 + 3 + 3 + 15,
        Family::Loria => return Err(Error::Invalid("no dimension count for the Loria example".into())),
    };
    Ok(count == dimension_formula(family, d)?)
}
