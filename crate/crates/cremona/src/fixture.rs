//! Plain-text map fixtures.
//!
//! ```text
//! ring z0 z1 z2 z3
//! field 32003
//! seed 1
//! family D
//! z1*z2^3 - ...
//! (three more components)
//! [inverse]
//! ...
//! [delta]
//! z0
//! z1
//! [expected]
//! bidegree 4 4
//! alpha 11
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Polynomials use the
//! core text grammar with variables `z0..z3`.

use std::fmt::Write as _;

use cremona_core::algebra::{parse_poly, Field, Polynomial, PrimeField, Rationals, Ring, Z_NAMES};
use cremona_core::families::{Family, Member, Profile};
use cremona_core::groebner::Ideal;
use cremona_core::ratmap::RationalMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FixtureError {
    FixtureError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Coefficient field named in a fixture header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "QQ" | "Q" => Some(FieldSpec::Rationals),
            _ => s.parse().ok().map(FieldSpec::Prime),
        }
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Prime(p) => p.to_string(),
            FieldSpec::Rationals => "QQ".into(),
        }
    }
}

/// A map with optional witnesses, as stored on disk.
#[derive(Clone, Debug)]
pub struct Fixture<K: Field> {
    pub seed: Option<u64>,
    pub family: Option<Family>,
    pub d: Option<u32>,
    pub map: RationalMap<K>,
    pub inverse: Option<RationalMap<K>>,
    pub delta: Option<Ideal<K>>,
    pub gamma: Option<Ideal<K>>,
    pub expected: Option<Profile>,
}

impl<K: Field> Fixture<K> {
    pub fn from_member(member: &Member<K>, seed: Option<u64>, d: u32) -> Self {
        Fixture {
            seed,
            family: Some(member.family),
            d: Some(d),
            map: member.map.clone(),
            inverse: member.inverse.clone(),
            delta: member.delta.clone(),
            gamma: member.gamma.clone(),
            expected: member.expected,
        }
    }

    pub fn to_text(&self) -> String {
        let k = &self.map.ring().field;
        let mut out = String::new();
        writeln!(out, "ring {}", Z_NAMES.join(" ")).unwrap();
        writeln!(out, "field {}", k.label()).unwrap();
        if let Some(s) = self.seed {
            writeln!(out, "seed {s}").unwrap();
        }
        if let Some(f) = self.family {
            writeln!(out, "family {}", f.label()).unwrap();
        }
        if let Some(d) = self.d {
            writeln!(out, "d {d}").unwrap();
        }
        for c in self.map.components() {
            writeln!(out, "{c}").unwrap();
        }
        if let Some(inv) = &self.inverse {
            out.push_str("[inverse]\n");
            for c in inv.components() {
                writeln!(out, "{c}").unwrap();
            }
        }
        for (name, ideal) in [("delta", &self.delta), ("gamma", &self.gamma)] {
            if let Some(i) = ideal {
                writeln!(out, "[{name}]").unwrap();
                for g in i.generators() {
                    writeln!(out, "{g}").unwrap();
                }
            }
        }
        if let Some(p) = &self.expected {
            out.push_str("[expected]\n");
            writeln!(out, "bidegree {} {}", p.bidegree.0, p.bidegree.1).unwrap();
            writeln!(out, "alpha {}", p.alpha).unwrap();
            if let Some(b) = p.beta {
                writeln!(out, "beta {b}").unwrap();
            }
            if let Some(e) = p.eta {
                writeln!(out, "eta {e}").unwrap();
            }
            if let Some(g) = p.genus {
                writeln!(out, "genus {g}").unwrap();
            }
        }
        out
    }
}

/// A fixture over whichever field its header names.
#[derive(Clone, Debug)]
pub enum AnyFixture {
    Prime(Fixture<PrimeField>),
    Rational(Fixture<Rationals>),
}

/// Field named by the `field` header line, defaulting to `F_32003`.
pub fn field_of(text: &str) -> Result<FieldSpec, FixtureError> {
    for (i, line) in lines(text) {
        if let Some(rest) = line.strip_prefix("field") {
            let v = rest.trim();
            return FieldSpec::parse(v).ok_or_else(|| syntax(i, 7, format!("unknown field `{v}`")));
        }
    }
    Ok(FieldSpec::Prime(cremona_core::algebra::DEFAULT_PRIME))
}

pub fn parse_any(text: &str) -> Result<AnyFixture, FixtureError> {
    match field_of(text)? {
        FieldSpec::Rationals => parse(&Ring::new(Rationals, 4), text).map(AnyFixture::Rational),
        FieldSpec::Prime(p) => {
            let k = PrimeField::new(p).map_err(|e| FixtureError::Invalid(e.to_string()))?;
            parse(&Ring::new(k, 4), text).map(AnyFixture::Prime)
        }
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

#[derive(PartialEq)]
enum Section {
    Map,
    Inverse,
    Delta,
    Gamma,
    Expected,
}

const HEADER_KEYS: [&str; 5] = ["ring", "field", "seed", "family", "d"];

/// Parses a fixture over `ring`; the header's field must agree with it.
pub fn parse<K: Field>(ring: &Ring<K>, text: &str) -> Result<Fixture<K>, FixtureError> {
    let mut seed = None;
    let mut family = None;
    let mut d = None;
    let mut section = Section::Map;
    let mut polys: [Vec<Polynomial<K>>; 4] = Default::default();
    let mut expected: Option<Profile> = None;
    let poly = |n: usize, l: &str| {
        parse_poly(ring, &Z_NAMES, l).map_err(|e| match e {
            cremona_core::Error::Parse { column, message } => syntax(n, column, message),
            other => syntax(n, 1, other.to_string()),
        })
    };
    for (n, line) in lines(text) {
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = match name {
                "inverse" => Section::Inverse,
                "delta" => Section::Delta,
                "gamma" => Section::Gamma,
                "expected" => Section::Expected,
                other => return Err(syntax(n, 2, format!("unknown section `{other}`"))),
            };
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let value_col = line.len() - rest.len() + 1;
        if section == Section::Map && HEADER_KEYS.contains(&key) {
            if !polys[0].is_empty() {
                return Err(syntax(n, 1, format!("header `{key}` after the components")));
            }
            match key {
                "ring" => {
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    if names != Z_NAMES {
                        return Err(syntax(n, value_col, "ring must be `z0 z1 z2 z3`"));
                    }
                }
                "field" => {
                    let want = ring.field.label();
                    if FieldSpec::parse(rest).map(|f| f.label()) != Some(want.clone()) {
                        return Err(syntax(n, value_col, format!("field `{rest}` does not match {want}")));
                    }
                }
                "seed" => seed = Some(rest.parse().map_err(|_| syntax(n, value_col, "seed must be an integer"))?),
                "family" => {
                    family = Some(
                        Family::parse(rest).ok_or_else(|| syntax(n, value_col, format!("unknown family `{rest}`")))?,
                    )
                }
                "d" => d = Some(rest.parse().map_err(|_| syntax(n, value_col, "d must be an integer"))?),
                _ => unreachable!(),
            }
            continue;
        }
        match section {
            Section::Map => polys[0].push(poly(n, line)?),
            Section::Inverse => polys[1].push(poly(n, line)?),
            Section::Delta => polys[2].push(poly(n, line)?),
            Section::Gamma => polys[3].push(poly(n, line)?),
            Section::Expected => {
                let p = expected.get_or_insert(Profile {
                    bidegree: (0, 0),
                    alpha: 0,
                    beta: None,
                    eta: None,
                    genus: None,
                });
                let nums: Result<Vec<i64>, _> = rest.split_whitespace().map(str::parse).collect();
                let nums = nums.map_err(|_| syntax(n, value_col, "expected integers"))?;
                match (key, nums.as_slice()) {
                    ("bidegree", [a, b]) if *a >= 0 => p.bidegree = (*a as u32, *b),
                    ("alpha", [a]) => p.alpha = *a,
                    ("beta", [b]) => p.beta = Some(*b),
                    ("eta", [e]) => p.eta = Some(*e),
                    ("genus", [g]) => p.genus = Some(*g),
                    _ => return Err(syntax(n, 1, format!("bad expectation `{line}`"))),
                }
            }
        }
    }
    let [comps, inv, delta, gamma] = polys;
    let map = RationalMap::new(ring, comps, "fixture").map_err(|e| FixtureError::Invalid(format!("map: {e}")))?;
    let inverse = if inv.is_empty() {
        None
    } else {
        Some(RationalMap::new(ring, inv, "fixture inverse").map_err(|e| FixtureError::Invalid(format!("inverse: {e}")))?)
    };
    let ideal = |g: Vec<Polynomial<K>>, what: &str| -> Result<Option<Ideal<K>>, FixtureError> {
        if g.is_empty() {
            return Ok(None);
        }
        Ideal::new(ring, g)
            .map(Some)
            .map_err(|e| FixtureError::Invalid(format!("{what}: {e}")))
    };
    Ok(Fixture {
        seed,
        family,
        d,
        map,
        inverse,
        delta: ideal(delta, "delta")?,
        gamma: ideal(gamma, "gamma")?,
        expected,
    })
}
