use std::path::PathBuf;
use std::process::{Command, Output};

use cremona::{cmd_analyze, cmd_chow, cmd_construct, cmd_theorem_b, parse_any, AnyFixture, Report, RunConfig};
use cremona_core::families::Family;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cremona-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn cfg(family: Family, seed: u64, d: u32) -> RunConfig {
    RunConfig {
        family,
        seed,
        d,
        ..Default::default()
    }
}

#[test]
fn construct_is_deterministic() {
    let a = cmd_construct(&cfg(Family::D, 1, 4)).unwrap();
    let b = cmd_construct(&cfg(Family::D, 1, 4)).unwrap();
    assert_eq!(a, b);
    let c = cmd_construct(&cfg(Family::D, 2, 4)).unwrap();
    assert_ne!(a, c);
}

#[test]
fn determinantal_fixture_has_four_quartics_and_witnesses() {
    let text = cmd_construct(&cfg(Family::D, 1, 4)).unwrap();
    let AnyFixture::Prime(fx) = parse_any(&text).unwrap() else {
        panic!("expected a prime-field fixture");
    };
    assert_eq!(fx.map.degree(), 4);
    assert_eq!(fx.map.components().len(), 4);
    assert!(fx.inverse.is_some() && fx.delta.is_some() && fx.gamma.is_some());
    assert_eq!(fx.family, Some(Family::D));
    assert_eq!(fx.seed, Some(1));
    // writing the parsed fixture back gives the same text
    assert_eq!(fx.to_text(), text);
}

#[test]
fn loria_fixture_is_rational() {
    let text = cmd_construct(&cfg(Family::Loria, 1, 4)).unwrap();
    assert!(text.lines().any(|l| l == "field QQ"));
    assert!(matches!(parse_any(&text).unwrap(), AnyFixture::Rational(_)));
}

#[test]
fn cubic_de_jonquieres_fixture() {
    let text = cmd_construct(&cfg(Family::J, 1, 3)).unwrap();
    let AnyFixture::Prime(fx) = parse_any(&text).unwrap() else {
        panic!("expected a prime-field fixture");
    };
    assert_eq!(fx.map.degree(), 3);
    assert_eq!(fx.inverse.unwrap().degree(), 3);
}

#[test]
fn analyze_rows() {
    for (f, want) in [
        (Family::D, ([4, 4], 11, 1, Some(1), Some(2))),
        (Family::R, ([4, 4], 9, 1, Some(3), Some(0))),
    ] {
        let text = cmd_construct(&cfg(f, 1, 4)).unwrap();
        let r = cmd_analyze(&text, &RunConfig::default()).unwrap();
        let row = &r.families[f.label()];
        assert_eq!((row.bidegree, row.alpha, row.beta, row.eta, row.genus), want);
        assert!(r.passed(), "{:?}", r.failures());
    }
}

#[test]
fn identity_fixture() {
    let text = "ring z0 z1 z2 z3\nfield 32003\nz0\nz1\nz2\nz3\n";
    let r = cmd_analyze(text, &RunConfig::default()).unwrap();
    let row = &r.families["map"];
    assert_eq!(row.bidegree, [1, 1]);
    assert_eq!(row.alpha, 0);
    assert!(row.birational);
    assert!(r.passed());
}

#[test]
fn wrong_expectation_fails_with_exit_one() {
    let text = cmd_construct(&cfg(Family::R, 1, 4)).unwrap().replace("alpha 9", "alpha 10");
    let p = scratch("wrong.txt", &text);
    let out = bin(&["analyze", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("FAIL R.expected_profile: alpha: want 10, got 9"), "{err}");
}

#[test]
fn parse_errors_name_line_and_column() {
    let p = scratch("bad.txt", "ring z0 z1 z2 z3\nfield 32003\nz0\nz1\nz2\nz3+*z1\n");
    let out = bin(&["analyze", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 6, column 4"), "{err}");
}

#[test]
fn bad_arguments() {
    assert_eq!(bin(&["construct", "--family", "X"]).status.code(), Some(2));
    assert_eq!(bin(&["chow", "--tier", "slow"]).status.code(), Some(2));
    assert_eq!(bin(&["theoremB", "--prime", "32004"]).status.code(), Some(3));
    assert_eq!(bin(&["construct", "--family", "C", "--d", "3"]).status.code(), Some(3));
}

#[test]
fn chow_report() {
    let out = bin(&["chow", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r, cmd_chow(&RunConfig::default()));
    let names: Vec<_> = r.sections["chow"].iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["x_h3", "x_hp3", "gamma_class", "gamma_h", "gamma_s", "ruled_degree"]);
}

#[test]
fn theorem_b_report_round_trips_and_is_reproducible() {
    let a = cmd_theorem_b(&RunConfig::default()).unwrap();
    let json = a.to_json();
    assert_eq!(Report::from_json(&json).unwrap(), a);
    let b = cmd_theorem_b(&RunConfig::default()).unwrap();
    assert_eq!(b.to_json(), json);
    assert!(a.passed(), "{:?}", a.failures());
    let genus: Vec<_> = ["R", "C", "D", "J"].iter().map(|f| a.families[*f].genus).collect();
    assert_eq!(genus, [Some(0), Some(1), Some(2), Some(3)]);
    let dims: Vec<_> = ["R", "C", "D", "J"].iter().map(|f| a.dimensions[*f]).collect();
    assert_eq!(dims, [37, 37, 46, 54]);
}

#[test]
fn binary_writes_out_file() {
    let dir = std::env::temp_dir().join(format!("cremona-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("theorem.json");
    let status = bin(&["theoremB", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(status.status.code(), Some(0));
    let r = Report::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r.families.len(), 4);
    assert!(r.families.values().all(|row| row.timing_ms.is_none()));
}
