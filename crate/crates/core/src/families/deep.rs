//! Structural checks on a determinantal member: the residual curve `Γ̄`,
//! its cubic `S_3`, the inverse and the contracted surfaces.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;

use super::{delta_and_gamma, Member};
use crate::algebra::{exact_divide, Field, Polynomial};
use crate::error::{Error, Result};
use crate::random::SeedStream;
use crate::ratmap::{secant_length, Check};

/// Outcome of the cheap structural checks.
#[derive(Clone, Debug)]
pub struct DeepReport<K: Field> {
    pub checks: Vec<Check>,
    /// The unique cubic through `Γ̄`.
    pub cubic: Option<Polynomial<K>>,
    /// `jacobian(τ) / S_3`.
    pub cofactor: Option<Polynomial<K>>,
}

impl<K: Field> DeepReport<K> {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct ContractionReport {
    pub checks: Vec<Check>,
}

impl ContractionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn parts<K: Field>(member: &Member<K>) -> Result<(&super::RationalMap<K>, &super::Ideal<K>, &super::Ideal<K>)> {
    match (&member.inverse, &member.delta, &member.gamma) {
        (Some(inv), Some(d), Some(g)) => Ok((inv, d, g)),
        _ => Err(Error::Invalid("deep checks need a determinantal member with its witnesses".into())),
    }
}

fn poly_text(p: &[Ratio<i64>]) -> String {
    let mut out = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if *c.numer() == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if *c.numer() > 0 { " + " } else { " - " });
        } else if *c.numer() < 0 {
            out.push('-');
        }
        let a = if *c.numer() < 0 { -c } else { *c };
        let a = if a.is_integer() { format!("{}", a.numer()) } else { format!("{a}") };
        match i {
            0 => out.push_str(&a),
            1 => out.push_str(&format!("{a}t")),
            _ => out.push_str(&format!("{a}t^{i}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Hilbert polynomial of `Γ̄`, its 5-secancy to `Δ`, the quartic and cubic
/// pieces, the composition with the inverse and the factor `S_3` of the
/// Jacobian.
pub fn deep_suite<K: Field>(member: &Member<K>, rng: &mut SeedStream) -> Result<DeepReport<K>> {
    let (inv, delta, gamma) = parts(member)?;
    let tau = &member.map;
    let mut checks = Vec::new();

    let hg = gamma.hilbert()?;
    let want = [Ratio::from_integer(-4), Ratio::from_integer(8)];
    checks.push(Check::new(
        "gamma_hilbert_polynomial",
        hg.hilbert_poly == want,
        format!("P(t) = {}, want 8t - 4", poly_text(&hg.hilbert_poly)),
    ));

    let sec = secant_length(gamma, delta, rng)?;
    checks.push(Check::new("gamma_delta_secant", sec == 5, format!("length {sec}, want 5")));

    let base4 = tau.base_ideal()?.graded_piece(4)?.len();
    checks.push(Check::new(
        "base_quartics",
        base4 == 4,
        format!("dim I_F(4) = {base4}, want 4"),
    ));

    let cubics = gamma.graded_piece(3)?;
    checks.push(Check::new(
        "gamma_cubics",
        cubics.len() == 1,
        format!("dim I_Γ(3) = {}, want 1", cubics.len()),
    ));

    let c = tau.compose_check(inv);
    let (ok, detail) = match &c {
        Ok(c) => (c.homogeneous_degree() == Some(15), format!("deg c = {:?}, want 15", c.homogeneous_degree())),
        Err(e) => (false, format!("{e}")),
    };
    checks.push(Check::new("inverse_composition", ok, detail));

    let mut cofactor = None;
    let cubic = cubics.into_iter().next();
    match &cubic {
        Some(s3) => {
            let q = exact_divide(&tau.jacobian(), s3);
            let deg = q.as_ref().and_then(|q| q.homogeneous_degree());
            checks.push(Check::new(
                "jacobian_factor",
                deg == Some(9),
                match deg {
                    Some(d) => format!("jacobian = S3 · (degree {d}), want 9"),
                    None => "S3 does not divide the jacobian".into(),
                },
            ));
            cofactor = q;
        }
        None => checks.push(Check::new("jacobian_factor", false, "no cubic through Γ̄".into())),
    }

    Ok(DeepReport { checks, cubic, cofactor })
}

/// `τ(S_3)` is the 5-secant line `Δ'` of the residual base curve `Γ'` of
/// the inverse, and the degree-9 cofactor is contracted onto a curve of
/// degree 8.
pub fn contraction_suite<K: Field>(
    member: &Member<K>,
    deep: &DeepReport<K>,
    rng: &mut SeedStream,
) -> Result<ContractionReport> {
    let (inv, _, _) = parts(member)?;
    let tau = &member.map;
    let (s3, cof) = match (&deep.cubic, &deep.cofactor) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Invalid("contraction checks need S3 and its cofactor".into())),
    };
    let mut checks = Vec::new();

    let (delta_p, gamma_p) = delta_and_gamma(inv, rng)?;
    let sec = secant_length(&gamma_p, &delta_p, rng)?;
    checks.push(Check::new(
        "inverse_gamma_delta_secant",
        sec == 5,
        format!("length {sec}, want 5"),
    ));

    let img = tau.image_of_hypersurface(s3, rng)?;
    let is_line = (img.dim, img.degree) == (1, 1);
    let same = is_line && img.ideal.same_ideal(&delta_p)?;
    checks.push(Check::new(
        "cubic_contracted_to_line",
        same,
        format!(
            "image of dimension {} and degree {}{}",
            img.dim,
            img.degree,
            if is_line && !same { ", not the line Δ'" } else { "" }
        ),
    ));

    let img9 = tau.image_of_hypersurface(cof, rng)?;
    checks.push(Check::new(
        "nonic_contracted_to_curve",
        (img9.dim, img9.degree) == (1, 8),
        format!("image of dimension {} and degree {}, want 1 and 8", img9.dim, img9.degree),
    ));

    Ok(ContractionReport { checks })
}
