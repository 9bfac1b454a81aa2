//! Rational maps `P3 ⇢ P3` given by four forms of one degree, and the
//! invariants used to tell families of birational maps apart.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use spin::Once;

use crate::algebra::{DenseMatrix, Field, Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::random::SeedStream;

pub use crate::algebra::exact_divide;


/// Fresh draws allowed before a randomized check gives up.
pub const ATTEMPTS: usize = 5;

/// Seed of the internal stream used for saturations whose result does not
/// depend on the draw.
const INTERNAL_SEED: u64 = 0x5a7;

/// `(z_0:z_1:z_2:z_3) ⇢ (φ_0:φ_1:φ_2:φ_3)`.
pub struct RationalMap<K: Field> {
    ring: Ring<K>,
    components: Vec<Polynomial<K>>,
    degree: u32,
    /// Free-form provenance, e.g. the family and seed it was built from.
    pub note: String,
    base: Once<Ideal<K>>,
}

impl<K: Field> Clone for RationalMap<K> {
    fn clone(&self) -> Self {
        let base = Once::new();
        if let Some(b) = self.base.get() {
            base.call_once(|| b.clone());
        }
        RationalMap {
            ring: self.ring.clone(),
            components: self.components.clone(),
            degree: self.degree,
            note: self.note.clone(),
            base,
        }
    }
}

impl<K: Field> core::fmt::Debug for RationalMap<K> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("RationalMap")
            .field("degree", &self.degree)
            .field("components", &self.components)
            .field("note", &self.note)
            .finish()
    }
}

/// Singular scheme of the base scheme: the ideal cut by all partials of
/// all components, saturated.
#[derive(Clone, Debug)]
pub struct SingScheme<K: Field> {
    pub ideal: Ideal<K>,
    pub beta: i64,
    pub eta: Option<i64>,
}

/// Outcome of pulling back a random point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Birationality {
    pub birational: bool,
    pub fiber_degree: i64,
    pub attempts: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Liaison {
    pub deg_c1: i64,
    pub deg_c2: i64,
}

/// Closure of the image of a hypersurface.
#[derive(Clone, Debug)]
pub struct Image<K: Field> {
    pub ideal: Ideal<K>,
    pub dim: i64,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapAnalysis {
    /// Degree of the one-dimensional base scheme, 0 if it is finite.
    pub alpha: i64,
    pub beta: i64,
    pub eta: Option<i64>,
    pub bidegree: (u32, i64),
    pub deg_c1: i64,
    pub deg_c2: i64,
    pub genus: Option<i64>,
    /// Singularity profile of the plane section when it falls outside the
    /// classification table.
    pub genus_unclassified: Option<String>,
    pub birational: bool,
    pub checks: Vec<Check>,
}

impl MapAnalysis {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl<K: Field> RationalMap<K> {
    /// Four homogeneous forms of one common degree, not all zero.
    pub fn new(ring: &Ring<K>, components: Vec<Polynomial<K>>, note: &str) -> Result<Self> {
        if ring.nvars != 4 {
            return Err(Error::ArityMismatch {
                expected: 4,
                found: ring.nvars,
            });
        }
        if components.len() != 4 {
            return Err(Error::ArityMismatch {
                expected: 4,
                found: components.len(),
            });
        }
        let mut degree = None;
        for c in &components {
            if c.ring().nvars != 4 || c.field() != &ring.field {
                return Err(Error::RingMismatch);
            }
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
            if degree.is_some_and(|e| e != d) {
                return Err(Error::Invalid(format!(
                    "components have different degrees {} and {d}",
                    degree.unwrap()
                )));
            }
            degree = Some(d);
        }
        let degree = degree.ok_or_else(|| Error::Invalid("all components are zero".into()))?;
        Ok(RationalMap {
            ring: ring.clone(),
            components: components.into_iter().map(|c| c.to_order(ring.order)).collect(),
            degree,
            note: note.into(),
            base: Once::new(),
        })
    }

    pub fn identity(ring: &Ring<K>) -> Self {
        Self::new(ring, ring.vars(), "identity").unwrap()
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn components(&self) -> &[Polynomial<K>] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn component_ideal(&self) -> Ideal<K> {
        Ideal::from_gens(&self.ring, self.components.clone())
    }

    /// `Σ c_i φ_i`.
    pub fn pullback_linear(&self, coeffs: &[K::Elem]) -> Polynomial<K> {
        let k = &self.ring.field;
        let mut acc = self.ring.zero();
        for (c, phi) in coeffs.iter().zip(&self.components) {
            if !k.is_zero(c) {
                acc = acc.add(&phi.scale(c));
            }
        }
        acc
    }

    /// Saturation of `(φ_0..φ_3)` by the irrelevant ideal.
    pub fn base_ideal(&self) -> Result<Ideal<K>> {
        if let Some(b) = self.base.get() {
            return Ok(b.clone());
        }
        let mut rng = SeedStream::new(INTERNAL_SEED);
        let sat = self.component_ideal().saturate_irrelevant(&mut rng)?;
        sat.hilbert()?;
        Ok(self.base.call_once(|| sat).clone())
    }

    /// Certifies the absence of a common factor: the base scheme has
    /// codimension at least two.
    pub fn check_codimension(&self) -> Result<()> {
        let h = self.base_ideal()?.hilbert()?;
        if h.proj_dim > 1 {
            return Err(Error::Certificate(format!(
                "base scheme has a divisorial part (projective dimension {})",
                h.proj_dim
            )));
        }
        Ok(())
    }

    /// `(I : (φ)^∞)` through one random combination of the components.
    fn strip_base(&self, ideal: &Ideal<K>, rng: &mut SeedStream) -> Result<Ideal<K>> {
        let k = &self.ring.field;
        let coeffs: Vec<_> = (0..4).map(|_| rng.nonzero(k)).collect();
        let ell = self.pullback_linear(&coeffs);
        ideal.saturate_rabinowitsch(&ell)
    }

    /// The scheme cut by the sixteen partials `∂φ_i/∂z_j`.
    pub fn sing_scheme(&self) -> Result<SingScheme<K>> {
        let mut gens = Vec::with_capacity(16);
        for phi in &self.components {
            for j in 0..4 {
                gens.push(phi.derivative(j));
            }
        }
        let mut rng = SeedStream::new(INTERNAL_SEED);
        let ideal = Ideal::new(&self.ring, gens)?.saturate_irrelevant(&mut rng)?;
        let h = ideal.hilbert()?;
        Ok(SingScheme {
            eta: (h.proj_dim == 1).then_some(h.degree),
            beta: h.proj_dim,
            ideal,
        })
    }

    /// Pulls back a random point and strips the base scheme; the map is
    /// birational iff what is left is one reduced point.
    pub fn is_birational(&self, rng: &mut SeedStream) -> Result<Birationality> {
        let k = self.ring.field.clone();
        for attempt in 1..=ATTEMPTS {
            let lines: Vec<Polynomial<K>> = (0..3)
                .map(|_| self.pullback_linear(&rng.nonzero_vector(&k, 4)))
                .collect();
            let fiber = Ideal::new(&self.ring, lines)?;
            let fiber = self.strip_base(&fiber, rng)?;
            let h = fiber.hilbert()?;
            if h.proj_dim == 0 {
                return Ok(Birationality {
                    birational: h.degree == 1,
                    fiber_degree: h.degree,
                    attempts: attempt,
                });
            }
        }
        Err(Error::Inconclusive {
            attempts: ATTEMPTS,
            what: "fiber of a random point is not finite".into(),
        })
    }

    /// Degree of the strict transform `C_1` of a random line, and the
    /// residual degree `d² - deg C_1`.
    pub fn inverse_degree(&self, rng: &mut SeedStream) -> Result<Liaison> {
        let k = self.ring.field.clone();
        let d = self.degree as i64;
        for _ in 0..ATTEMPTS {
            let planes: Vec<Polynomial<K>> = (0..2)
                .map(|_| self.pullback_linear(&rng.nonzero_vector(&k, 4)))
                .collect();
            let pre = Ideal::new(&self.ring, planes)?;
            if pre.hilbert()?.proj_dim != 1 {
                continue;
            }
            let c1 = self.strip_base(&pre, rng)?;
            let h = c1.hilbert()?;
            if h.proj_dim == 1 {
                return Ok(Liaison {
                    deg_c1: h.degree,
                    deg_c2: d * d - h.degree,
                });
            }
        }
        Err(Error::Inconclusive {
            attempts: ATTEMPTS,
            what: "preimage of a random line has no curve outside the base scheme".into(),
        })
    }

    /// `inv ∘ self = c · id`; returns `c`.
    pub fn compose_check(&self, inv: &RationalMap<K>) -> Result<Polynomial<K>> {
        if inv.ring.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        let images: Vec<_> = self
            .components
            .iter()
            .map(|c| c.remap(&inv.ring, &[0, 1, 2, 3]))
            .collect();
        let composed: Vec<Polynomial<K>> = inv
            .components
            .iter()
            .map(|c| c.substitute(&images).map(|p| p.to_order(self.ring.order)))
            .collect::<Result<_>>()?;
        let z = self.ring.vars();
        let (lead, _) = composed
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_zero())
            .ok_or_else(|| Error::NotAnInverse("composition is zero".into()))?;
        let c = composed[lead]
            .exact_div(&z[lead])
            .ok_or_else(|| Error::NotAnInverse(format!("component {lead} is not divisible by z{lead}")))?;
        for (i, p) in composed.iter().enumerate() {
            if *p != c.mul(&z[i]) {
                return Err(Error::NotAnInverse(format!(
                    "component {i} is not c·z{i}"
                )));
            }
        }
        Ok(c)
    }

    /// `det(∂φ_i/∂z_j)`.
    pub fn jacobian(&self) -> Polynomial<K> {
        let entries = self
            .components
            .iter()
            .flat_map(|phi| (0..4).map(move |j| phi.derivative(j)))
            .collect();
        PolyMatrix::new(4, 4, entries)
            .and_then(|m| m.determinant())
            .expect("4x4 matrix of partials")
    }

    /// Closure of `φ(V(S) \ base)`: graph ideal in `K[z, y]` plus `S`,
    /// stripped of everything over the base scheme, with `z` eliminated.
    pub fn image_of_hypersurface(&self, s: &Polynomial<K>, rng: &mut SeedStream) -> Result<Image<K>> {
        let k = &self.ring.field;
        let big = Ring::new(k.clone(), 8).with_order(MonomialOrder::Grevlex);
        let zmap = [0usize, 1, 2, 3];
        let phi: Vec<_> = self.components.iter().map(|c| c.remap(&big, &zmap)).collect();
        let y: Vec<_> = (4..8).map(|i| big.var(i)).collect();
        let mut minors = Vec::with_capacity(6);
        for i in 0..4 {
            for j in i + 1..4 {
                minors.push(y[i].mul(&phi[j]).sub(&y[j].mul(&phi[i])));
            }
        }
        let coeffs: Vec<_> = (0..4).map(|_| rng.nonzero(k)).collect();
        let mut ell = big.zero();
        for (c, p) in coeffs.iter().zip(&phi) {
            ell = ell.add(&p.scale(c));
        }
        // strict transform of S
        let mut gens = minors;
        gens.push(s.remap(&big, &zmap));
        let graph = Ideal::new(&big, gens)?.saturate_rabinowitsch(&ell)?;
        let image = graph.eliminate(&[0, 1, 2, 3])?;
        let image = image.saturate_irrelevant(rng)?.minimized()?;
        let h = image.hilbert()?;
        Ok(Image {
            dim: h.proj_dim,
            degree: h.degree,
            ideal: image,
        })
    }

    /// Geometric genus of a general plane section of a general member,
    /// for quartic maps.
    pub fn genus(&self, rng: &mut SeedStream) -> Result<i64> {
        if self.degree != 4 {
            return Err(Error::Invalid(format!(
                "genus classification needs quartic components, found degree {}",
                self.degree
            )));
        }
        let mut last = String::new();
        for _ in 0..ATTEMPTS {
            match self.genus_attempt(rng)? {
                Ok(g) => return Ok(g),
                Err(why) => last = why,
            }
        }
        Err(Error::UnclassifiedSingularity(last))
    }

    fn genus_attempt(&self, rng: &mut SeedStream) -> Result<core::result::Result<i64, String>> {
        let k = self.ring.field.clone();
        let q = self.pullback_linear(&rng.nonzero_vector(&k, 4));
        let plane = Ring::new(k.clone(), 3).with_order(MonomialOrder::Grevlex);
        let a = rng.vector(&k, 3);
        let mut z3 = plane.zero();
        for (i, c) in a.iter().enumerate() {
            z3 = z3.add(&plane.var(i).scale(c));
        }
        let mut images = plane.vars();
        images.push(z3);
        let quartic = q.substitute(&images)?;
        if quartic.is_zero() {
            return Ok(Err("member contains the section plane".into()));
        }
        let mut gens = vec![quartic.clone()];
        gens.extend((0..3).map(|j| quartic.derivative(j)));
        let j = Ideal::new(&plane, gens)?.saturate_irrelevant(rng)?;
        let h = j.hilbert()?;
        if h.proj_dim == -1 {
            return Ok(Ok(3));
        }
        if h.proj_dim != 0 {
            return Ok(Err(format!(
                "section is singular along a curve (dimension {})",
                h.proj_dim
            )));
        }
        let len = h.degree;
        let n = j.count_distinct_points(rng)?;
        Ok(match (n, len) {
            (1, 1) => Ok(2),
            (2, 2) => Ok(1),
            (1, 4) => {
                let point = j.radical_of_points(rng)?;
                if point.power(3)?.contains(&quartic)? {
                    Ok(0)
                } else {
                    Err("length-4 point that is not a triple point".into())
                }
            }
            (n, l) => Err(format!("{n} points, total length {l}")),
        })
    }

    /// Invariants of the map; `genus` only for quartic maps.
    pub fn analyze(&self, rng: &mut SeedStream) -> Result<MapAnalysis> {
        let mut checks = Vec::new();
        let d = self.degree;
        let base = self.base_ideal()?;
        let hb = base.hilbert()?;
        checks.push(Check::new(
            "codimension",
            hb.proj_dim <= 1,
            format!("base scheme projective dimension {}", hb.proj_dim),
        ));
        if hb.proj_dim > 1 {
            return Err(Error::Certificate("base scheme has a divisorial part".into()));
        }
        let alpha = if hb.proj_dim == 1 { hb.degree } else { 0 };
        let sing = if d >= 2 {
            let s = self.sing_scheme()?;
            (s.beta, s.eta)
        } else {
            (-1, None)
        };
        let bir = self.is_birational(&mut rng.fork(1))?;
        checks.push(Check::new(
            "birational",
            bir.birational,
            format!("generic fiber degree {}", bir.fiber_degree),
        ));
        let (deg_c1, deg_c2) = if bir.birational {
            let l = self.inverse_degree(&mut rng.fork(2))?;
            (l.deg_c1, l.deg_c2)
        } else {
            (0, (d * d) as i64)
        };
        checks.push(Check::new(
            "liaison",
            deg_c1 + deg_c2 == (d * d) as i64,
            format!("deg C1 {deg_c1} + deg C2 {deg_c2} = {}", d * d),
        ));
        let jac = self.jacobian();
        let jdeg = jac.homogeneous_degree();
        let jac_ok = if jac.is_zero() {
            !bir.birational
        } else {
            jdeg == Some(4 * (d - 1))
        };
        checks.push(Check::new(
            "jacobian",
            jac_ok,
            match jdeg {
                Some(e) => format!("jacobian of degree {e}"),
                None => "jacobian vanishes".into(),
            },
        ));
        let (genus, genus_unclassified) = if d == 4 && bir.birational {
            match self.genus(&mut rng.fork(3)) {
                Ok(g) => (Some(g), None),
                Err(Error::UnclassifiedSingularity(why)) => (None, Some(why)),
                Err(e) => return Err(e),
            }
        } else {
            (None, None)
        };
        Ok(MapAnalysis {
            alpha,
            beta: sing.0,
            eta: sing.1,
            bidegree: (d, deg_c1),
            deg_c1,
            deg_c2,
            genus,
            genus_unclassified,
            birational: bir.birational,
            checks,
        })
    }
}

/// Length of the intersection scheme of a curve and a line.
pub fn secant_length<K: Field>(curve: &Ideal<K>, line: &Ideal<K>, rng: &mut SeedStream) -> Result<i64> {
    if line.contains_ideal(curve)? || curve.contains_ideal(line)? {
        return Err(Error::Containment);
    }
    let meet = curve.sum(line)?.saturate_irrelevant(rng)?;
    let h = meet.hilbert()?;
    match h.proj_dim {
        -1 => Ok(0),
        0 => Ok(h.degree),
        _ => Err(Error::Containment),
    }
}

/// Linear forms vanishing on a point given by coordinates.
pub fn point_ideal<K: Field>(ring: &Ring<K>, coords: &[K::Elem]) -> Result<Ideal<K>> {
    let a = DenseMatrix::from_rows(&ring.field, vec![coords.to_vec()]);
    Ideal::new(ring, forms_from_kernel(ring, &a))
}

/// Ideal of the line through two points.
pub fn line_through<K: Field>(ring: &Ring<K>, p: &[K::Elem], q: &[K::Elem]) -> Result<Ideal<K>> {
    let a = DenseMatrix::from_rows(&ring.field, vec![p.to_vec(), q.to_vec()]);
    if a.rank() < 2 {
        return Err(Error::Invalid("points coincide".into()));
    }
    Ideal::new(ring, forms_from_kernel(ring, &a))
}

fn forms_from_kernel<K: Field>(ring: &Ring<K>, a: &DenseMatrix<K>) -> Vec<Polynomial<K>> {
    a.kernel()
        .iter()
        .map(|v| {
            let terms = v
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(i, 1), c.clone()))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

/// The point cut by a zero-dimensional ideal of degree one, as coordinates.
fn rational_point<K: Field>(ideal: &Ideal<K>) -> Result<Vec<K::Elem>> {
    let linear = ideal.graded_piece(1)?;
    let n = ideal.ring().nvars;
    if linear.len() != n - 1 {
        return Err(Error::Certificate(format!(
            "expected a reduced point, found {} linear equations",
            linear.len()
        )));
    }
    let rows = linear
        .iter()
        .map(|l| (0..n).map(|i| l.coeff(&Monomial::var(i, 1))).collect())
        .collect();
    let ker = DenseMatrix::from_rows(&ideal.ring().field, rows).kernel();
    Ok(ker.into_iter().next().unwrap())
}

/// The line underlying the one-dimensional part of a scheme whose curve
/// part has degree one: cut by two random planes and join the two points.
pub fn line_component<K: Field>(ideal: &Ideal<K>, rng: &mut SeedStream) -> Result<Ideal<K>> {
    let h = ideal.hilbert()?;
    if h.proj_dim != 1 || h.degree != 1 {
        return Err(Error::Certificate(format!(
            "one-dimensional part is not a line (dimension {}, degree {})",
            h.proj_dim, h.degree
        )));
    }
    let ring = ideal.ring();
    for _ in 0..ATTEMPTS {
        let mut pts = Vec::with_capacity(2);
        for _ in 0..2 {
            let cut = ideal
                .add_generators(&[rng.linear_form(ring)])?
                .saturate_irrelevant(rng)?;
            let hc = cut.hilbert()?;
            if hc.proj_dim == 0 && hc.degree == 1 {
                if let Ok(p) = rational_point(&cut) {
                    pts.push(p);
                }
            }
        }
        if pts.len() == 2 {
            if let Ok(line) = line_through(ring, &pts[0], &pts[1]) {
                if line.contains_ideal(ideal)? {
                    return Ok(line.minimized()?);
                }
            }
        }
    }
    Err(Error::Inconclusive {
        attempts: ATTEMPTS,
        what: "plane sections of the line component".into(),
    })
}
