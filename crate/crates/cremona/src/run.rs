//! The four commands, independent of argument parsing.

use std::time::Instant;

use cremona_core::algebra::{Field, PrimeField, Rationals, Ring};
use cremona_core::chow::{blowup_degree, gamma_class, ruled_degree, x_class, ChowClass};
use cremona_core::families::{
    construct, contraction_suite, deep_suite, dimension_formula, dimension_identity, profile_mismatches, Family,
    Member,
};
use cremona_core::random::SeedStream;
use thiserror::Error;

use crate::fixture::{parse_any, AnyFixture, Fixture, FixtureError};
use crate::report::{CheckRow, Report, Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Fast,
    Full,
}

impl Tier {
    pub fn label(&self) -> &'static str {
        match self {
            Tier::Fast => "fast",
            Tier::Full => "full",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub prime: u64,
    pub seed: u64,
    pub family: Family,
    pub d: u32,
    pub tier: Tier,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: cremona_core::algebra::DEFAULT_PRIME,
            seed: 1,
            family: Family::D,
            d: 4,
            tier: Tier::Fast,
            timings: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("fixture: {0}")]
    Fixture(#[from] FixtureError),
    #[error("{0}")]
    Core(#[from] cremona_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl RunError {
    /// 3 for unusable input, 4 for failed computations.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Fixture(_) | RunError::Io(_) => 3,
            RunError::Core(cremona_core::Error::InvalidModulus(_) | cremona_core::Error::Invalid(_)) => 3,
            RunError::Core(_) => 4,
        }
    }
}

impl RunConfig {
    pub fn field(&self) -> Result<PrimeField, RunError> {
        Ok(PrimeField::new(self.prime)?)
    }
}

/// Builds a member and renders it as a fixture. The Loria example is
/// always built over the rationals.
pub fn cmd_construct(cfg: &RunConfig) -> Result<String, RunError> {
    let mut rng = SeedStream::new(cfg.seed);
    if cfg.family == Family::Loria {
        let ring = Ring::new(Rationals, 4);
        let m = construct(Family::Loria, &ring, cfg.d, &mut rng)?;
        return Ok(Fixture::from_member(&m, None, cfg.d).to_text());
    }
    let ring = Ring::new(cfg.field()?, 4);
    let m = construct(cfg.family, &ring, cfg.d, &mut rng)?;
    Ok(Fixture::from_member(&m, Some(cfg.seed), cfg.d).to_text())
}

fn analyze_fixture<K: Field>(fx: &Fixture<K>, cfg: &RunConfig, report: &mut Report) -> Result<(), RunError> {
    let start = Instant::now();
    let mut rng = SeedStream::new(cfg.seed);
    let a = fx.map.analyze(&mut rng)?;
    let mut row = Row::from_analysis(&a);
    if let Some(inv) = &fx.inverse {
        let c = fx.map.compose_check(inv);
        row.checks.push(CheckRow::new(
            "inverse_composition",
            c.is_ok(),
            match &c {
                Ok(c) => format!("composition is z times a form of degree {:?}", c.homogeneous_degree()),
                Err(e) => e.to_string(),
            },
            "the recorded inverse composes to the identity",
        ));
    }
    if let Some(want) = &fx.expected {
        let bad = profile_mismatches(want, &a);
        row.checks.push(CheckRow::new(
            "expected_profile",
            bad.is_empty(),
            if bad.is_empty() { "matches".to_string() } else { bad.join("; ") },
            "computed invariants agree with the fixture annotation",
        ));
    }
    if let (Some(f), Some(d)) = (fx.family, fx.d) {
        row.dimension = dimension_formula(f, d).ok();
    }
    if cfg.timings {
        row.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let key = fx.family.map_or("map", |f| f.label());
    report.families.insert(key.into(), row);
    Ok(())
}

/// Full analysis of a fixture; the report fails when the fixture's
/// `[expected]` section disagrees with the computation.
pub fn cmd_analyze(text: &str, cfg: &RunConfig) -> Result<Report, RunError> {
    let fx = parse_any(text)?;
    let seed = cfg.seed;
    match &fx {
        AnyFixture::Prime(f) => {
            let mut r = Report::new(f.map.ring().field.label(), seed, cfg.tier.label());
            analyze_fixture(f, cfg, &mut r)?;
            Ok(r)
        }
        AnyFixture::Rational(f) => {
            let mut r = Report::new("QQ".into(), seed, cfg.tier.label());
            analyze_fixture(f, cfg, &mut r)?;
            Ok(r)
        }
    }
}

type FamilyOutcome = (Family, Result<(Row, Option<Member<PrimeField>>), String>);

fn theorem_b_row(f: Family, ring: &Ring<PrimeField>, cfg: &RunConfig) -> Result<(Row, Option<Member<PrimeField>>), String> {
    let start = Instant::now();
    let mut rng = SeedStream::new(cfg.seed);
    let m = construct(f, ring, 4, &mut rng).map_err(|e| e.to_string())?;
    let a = m.map.analyze(&mut rng).map_err(|e| e.to_string())?;
    let mut row = Row::from_analysis(&a);
    let want = m.expected.expect("every Theorem B family has a profile");
    let bad = profile_mismatches(&want, &a);
    row.checks.push(CheckRow::new(
        "profile",
        bad.is_empty(),
        if bad.is_empty() { "matches the table".to_string() } else { bad.join("; ") },
        "bidegree, alpha, beta, eta and genus of the family",
    ));
    row.dimension = dimension_formula(f, 4).ok();
    if cfg.timings {
        row.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok((row, (f == Family::D).then_some(m)))
}

/// One member of each of `J, R, D, C`, analyzed in parallel, with the
/// dimension row; the full tier adds the determinantal deep and
/// contraction checks.
pub fn cmd_theorem_b(cfg: &RunConfig) -> Result<Report, RunError> {
    let ring = Ring::new(cfg.field()?, 4);
    let mut report = Report::new(ring.field.label(), cfg.seed, cfg.tier.label());
    let outcomes: Vec<FamilyOutcome> = std::thread::scope(|s| {
        let handles: Vec<_> = Family::THEOREM_B
            .iter()
            .map(|&f| {
                let ring = &ring;
                s.spawn(move || (f, theorem_b_row(f, ring, cfg)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("analysis thread")).collect()
    });
    let mut det = None;
    for (f, out) in outcomes {
        match out {
            Ok((row, m)) => {
                report.families.insert(f.label().into(), row);
                if m.is_some() {
                    det = m;
                }
            }
            Err(e) => {
                report.errors.insert(f.label().into(), e);
            }
        }
    }
    report.sections.insert("dimensions".into(), dimension_checks());
    for f in Family::THEOREM_B {
        report.dimensions.insert(f.label().into(), dimension_formula(f, 4)?);
    }
    if cfg.tier == Tier::Full {
        match det {
            Some(m) => determinantal_sections(&m, cfg, &mut report),
            None => {
                report
                    .errors
                    .insert("D-deep".into(), "no determinantal member to examine".into());
            }
        }
    }
    Ok(report)
}

fn determinantal_sections(m: &Member<PrimeField>, cfg: &RunConfig, report: &mut Report) {
    let mut rng = SeedStream::new(cfg.seed).fork(7);
    let deep = match deep_suite(m, &mut rng) {
        Ok(d) => d,
        Err(e) => {
            report.errors.insert("D-deep".into(), e.to_string());
            return;
        }
    };
    let claims = |name: &str| match name {
        "gamma_hilbert_polynomial" => "the residual curve has degree 8 and genus 5",
        "gamma_delta_secant" => "the distinguished line is 5-secant to the residual curve",
        "base_quartics" => "the base ideal has exactly four quartics",
        "gamma_cubics" => "the residual curve lies on a unique cubic",
        "inverse_composition" => "the primed construction inverts the map",
        "jacobian_factor" => "the cubic divides the jacobian with a nonic cofactor",
        "inverse_gamma_delta_secant" => "the inverse has the same 5-secant structure",
        "cubic_contracted_to_line" => "the cubic is contracted onto the 5-secant line of the inverse",
        "nonic_contracted_to_curve" => "the nonic cofactor is contracted onto a curve of degree 8",
        _ => "",
    };
    report.sections.insert(
        "D-deep".into(),
        deep.checks.iter().map(|c| CheckRow::from_check(c, claims(&c.name))).collect(),
    );
    match contraction_suite(m, &deep, &mut rng) {
        Ok(c) => {
            report.sections.insert(
                "D-contraction".into(),
                c.checks.iter().map(|c| CheckRow::from_check(c, claims(&c.name))).collect(),
            );
        }
        Err(e) => {
            report.errors.insert("D-contraction".into(), e.to_string());
        }
    }
}

fn dimension_checks() -> Vec<CheckRow> {
    let mut rows = Vec::new();
    for (f, range) in [(Family::J, 2..=8), (Family::R, 2..=8), (Family::D, 4..=4), (Family::C, 4..=4)] {
        let failed: Vec<u32> = range
            .clone()
            .filter(|&d| !dimension_identity(f, d).unwrap_or(false))
            .collect();
        rows.push(CheckRow::new(
            &format!("{}_parameter_count", f.label()),
            failed.is_empty(),
            if failed.is_empty() {
                format!("holds for d in {}..={}", range.start(), range.end())
            } else {
                format!("fails for d = {failed:?}")
            },
            "the parameter count equals the closed-form dimension",
        ));
    }
    rows
}

/// Intersection numbers on `P1 x P3 x P3'`.
pub fn cmd_chow(cfg: &RunConfig) -> Report {
    let mut report = Report::new("ZZ".into(), cfg.seed, cfg.tier.label());
    let x = x_class();
    let (s, h, hp) = (ChowClass::s(), ChowClass::h(), ChowClass::h_prime());
    let xh = (x * h.pow(3)).degree();
    let xhp = (x * hp.pow(3)).degree();
    let g = gamma_class();
    let want = s * h * ChowClass::one().scale(5) + h.pow(2).scale(3);
    let gh = blowup_degree(&(g * h));
    let gs = blowup_degree(&(g * s));
    let ruled: Vec<(u32, i64)> = (2..=8).map(|d| (d, ruled_degree(d).unwrap_or(-1))).collect();
    let rows = vec![
        CheckRow::new("x_h3", xh == 1, format!("X·H^3 = {xh}"), "the first projection of X is birational"),
        CheckRow::new("x_hp3", xhp == 1, format!("X·H'^3 = {xhp}"), "the second projection of X is birational"),
        CheckRow::new(
            "gamma_class",
            g == want,
            format!("Γ = {}sH + {}H^2", g.coeff(1, 1, 0), g.coeff(0, 2, 0)),
            "the curve class is 5sH + 3H^2",
        ),
        CheckRow::new("gamma_h", gh == 8, format!("Γ·H = {gh}"), "the curve has degree 8"),
        CheckRow::new("gamma_s", gs == 3, format!("Γ·s = {gs}"), "the curve has degree 3 over the pencil"),
        CheckRow::new(
            "ruled_degree",
            ruled.iter().all(|&(d, v)| v == d as i64),
            ruled.iter().map(|(d, v)| format!("{d}:{v}")).collect::<Vec<_>>().join(" "),
            "the scroll attached to the ruled family has degree d",
        ),
    ];
    report.sections.insert("chow".into(), rows);
    report
}
