use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use proptest::prelude::*;

use super::*;
use crate::algebra::{parse_poly, PrimeField, Rationals, Z_NAMES};

fn ring(n: usize) -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), n)
}

fn ideal(r: &Ring<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
    let names = ["z0", "z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8"];
    Ideal::from_gens(
        r,
        gens.iter().map(|g| parse_poly(r, &names, g).unwrap()).collect(),
    )
}

fn texts(b: &[Polynomial<PrimeField>]) -> Vec<alloc::string::String> {
    b.iter().map(|p| p.to_text()).collect()
}

/// Division by repeated cancellation of any divisible term, written
/// independently of the engine's reducer.
fn naive_remainder(f: &Polynomial<PrimeField>, basis: &[Polynomial<PrimeField>]) -> Polynomial<PrimeField> {
    let k = f.field().clone();
    let mut p = f.clone();
    let mut rem = f.ring().zero();
    while !p.is_zero() {
        let (m, c) = p.terms()[0];
        let mut divided = false;
        for g in basis {
            let (gm, gc) = g.terms()[0];
            if let Some(q) = m.checked_div(&gm) {
                let factor = k.mul(&c, &k.inv(&gc).unwrap());
                p = p.sub(&g.mul_term(&q, &factor));
                divided = true;
                break;
            }
        }
        if !divided {
            let lead = Polynomial::monomial(f.ring(), m, c);
            rem = rem.add(&lead);
            p = p.sub(&lead);
        }
    }
    rem
}

fn buchberger_certificate(b: &[Polynomial<PrimeField>]) -> bool {
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let (fi, fj) = (&b[i], &b[j]);
            let (li, lj) = (fi.terms()[0].0, fj.terms()[0].0);
            let l = li.lcm(&lj);
            let k = fi.field();
            let s = fi
                .mul_term(&l.quotient_of(&li), &k.inv(&fi.terms()[0].1).unwrap())
                .sub(&fj.mul_term(&l.quotient_of(&lj), &k.inv(&fj.terms()[0].1).unwrap()));
            if !naive_remainder(&s, b).is_zero() {
                return false;
            }
        }
    }
    true
}

fn is_reduced(b: &[Polynomial<PrimeField>]) -> bool {
    b.iter().enumerate().all(|(i, g)| {
        g.field().is_one(g.leading_coeff().unwrap())
            && b.iter().enumerate().all(|(j, h)| {
                i == j
                    || g
                        .terms()
                        .iter()
                        .all(|(m, _)| !h.leading_monomial().unwrap().divides(m))
            })
    })
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = ring(4);
    let i = ideal(&r, &["z0^2", "z1*z2"]);
    let b = i.basis().unwrap();
    let mut t = texts(&b);
    t.sort();
    assert_eq!(t, ["z0^2", "z1*z2"]);
}

#[test]
fn linear_basis() {
    let r = ring(4);
    let b = ideal(&r, &["z0-z1", "z0+z1"]).basis().unwrap();
    assert_eq!(texts(&b), ["z1", "z0"]);
}

#[test]
fn three_coordinate_products() {
    let r = ring(4);
    let i = ideal(&r, &["z0*z1", "z0*z2", "z1*z2"]);
    let b = i.basis().unwrap();
    let mut t = texts(&b);
    t.sort();
    assert_eq!(t, ["z0*z1", "z0*z2", "z1*z2"]);
    assert!(buchberger_certificate(&b));
    assert!(i.verify_basis(MonomialOrder::Grevlex).unwrap());
}

#[test]
fn budget_exhaustion_is_reported() {
    let r = ring(4);
    let mut s = SeedStream::new(1);
    let gens = (0..4).map(|_| s.form(&r, 3)).collect();
    let i = Ideal::from_gens(&r, gens).with_budget(3);
    match i.basis() {
        Err(Error::BudgetExceeded { pairs }) => assert_eq!(pairs, 3),
        other => panic!("unexpected {:?}", other.map(|b| b.len())),
    }
}

#[test]
fn membership() {
    let r = ring(4);
    let i = ideal(&r, &["z0", "z1"]);
    assert!(i.contains(&parse_poly(&r, &Z_NAMES, "z0^2").unwrap()).unwrap());
    assert!(!i.contains(&r.var(2)).unwrap());
}

#[test]
fn intersections() {
    let r = ring(4);
    let i = ideal(&r, &["z0^2+z1*z3", "z2"]);
    assert!(i.intersection(&Ideal::unit(&r)).unwrap().same_ideal(&i).unwrap());
    let x = ideal(&r, &["z0"]).intersection(&ideal(&r, &["z1"])).unwrap();
    assert!(x.same_ideal(&ideal(&r, &["z0*z1"])).unwrap());
    let lines = ideal(&r, &["z0", "z1"])
        .intersection(&ideal(&r, &["z2", "z3"]))
        .unwrap();
    assert!(lines
        .same_ideal(&ideal(&r, &["z0*z2", "z0*z3", "z1*z2", "z1*z3"]))
        .unwrap());
    let h = lines.hilbert().unwrap();
    assert_eq!((h.proj_dim, h.degree), (1, 2));
}

#[test]
fn quotients() {
    let r = ring(4);
    let q = ideal(&r, &["z0*z1"]).quotient(&ideal(&r, &["z0"])).unwrap();
    assert!(q.same_ideal(&ideal(&r, &["z1"])).unwrap());
    let i = ideal(&r, &["z0^2", "z1*z3-z2^2"]);
    assert!(i.quotient(&Ideal::unit(&r)).unwrap().same_ideal(&i).unwrap());
}

#[test]
fn saturations() {
    let r = ring(4);
    let i = ideal(&r, &["z0*z1", "z0*z2"]);
    let expect = ideal(&r, &["z1", "z2"]);
    let z0 = ideal(&r, &["z0"]);
    assert!(i.saturation(&z0).unwrap().same_ideal(&expect).unwrap());
    assert!(i.saturate_by_element(&r.var(0)).unwrap().same_ideal(&expect).unwrap());
    // fixpoint
    assert!(expect.saturation(&z0).unwrap().same_ideal(&expect).unwrap());
    // a point with an embedded component at the origin of the cone
    let j = ideal(&r, &["z0^2", "z0*z1", "z0*z2", "z0*z3", "z1"]);
    let mut rng = SeedStream::new(2);
    let sat = j.saturate_irrelevant(&mut rng).unwrap();
    assert!(sat.same_ideal(&ideal(&r, &["z0", "z1"])).unwrap());
    let exact = j.saturation(&Ideal::irrelevant(&r)).unwrap();
    assert!(exact.same_ideal(&sat).unwrap());
}

#[test]
fn linear_form_saturation_agrees_with_iterated_quotients() {
    let r = ring(4);
    let mut s = SeedStream::new(9);
    let l = s.linear_form(&r);
    let f = s.form(&r, 2);
    let g = s.form(&r, 2);
    // (l f, l^2 g, l*z3^2): saturation by l recovers (f, g, z3^2)
    let i = Ideal::from_gens(
        &r,
        vec![l.mul(&f), l.pow(2).mul(&g), l.mul(&r.var(3).pow(2))],
    );
    let fast = i.saturate_by_linear_form(&l).unwrap();
    let slow = i.saturation(&Ideal::from_gens(&r, vec![l.clone()])).unwrap();
    assert!(fast.same_ideal(&slow).unwrap());
    let want = Ideal::from_gens(&r, vec![f, g, r.var(3).pow(2)]);
    assert!(want.saturation(&Ideal::from_gens(&r, vec![l])).unwrap().same_ideal(&fast).unwrap());
}

#[test]
fn eliminations() {
    // ring (t, z0, z1)
    let r = ring(3);
    let i = ideal(&r, &["z0*z1-z2"]);
    let e = i.eliminate(&[0]).unwrap();
    assert_eq!(e.ring().nvars, 2);
    assert!(e.generators().is_empty() || e.basis().unwrap().is_empty());
    // graph of the identity in (z, y): eliminating z leaves (0)
    let r8 = ring(8);
    let mut minors = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            minors.push(r8.var(a).mul(&r8.var(4 + b)).sub(&r8.var(b).mul(&r8.var(4 + a))));
        }
    }
    let g = Ideal::from_gens(&r8, minors);
    let e = g.eliminate(&[0, 1, 2, 3]).unwrap();
    assert!(e.basis().unwrap().is_empty());
    // a twisted cubic parametrization: eliminate (s, t) from z_i - s^{3-i} t^i
    let r6 = ring(6);
    let names = ["s", "t", "z0", "z1", "z2", "z3"];
    let gens = ["z0-s^3", "z1-s^2*t", "z2-s*t^2", "z3-t^3"]
        .iter()
        .map(|g| parse_poly(&r6, &names, g).unwrap())
        .collect();
    let cubic = Ideal::from_gens(&r6, gens).eliminate(&[0, 1]).unwrap();
    let h = cubic.hilbert().unwrap();
    assert_eq!((h.proj_dim, h.degree), (1, 3));
    assert_eq!(h.arithmetic_genus(), Some(0));
}

#[test]
fn hilbert_examples() {
    let r = ring(4);
    let h = Ideal::zero(&r).hilbert().unwrap();
    assert_eq!((h.proj_dim, h.degree), (3, 1));
    let h = ideal(&r, &["z0", "z1"]).power(2).unwrap().hilbert().unwrap();
    assert_eq!((h.proj_dim, h.degree), (1, 3));
    assert_eq!(h.hilbert_poly, vec![Ratio::from_integer(1), Ratio::from_integer(3)]);
    let h = Ideal::unit(&r).hilbert().unwrap();
    assert_eq!((h.proj_dim, h.degree), (-1, 0));
    let non_hom = ideal(&r, &["z0^2-z1"]);
    assert_eq!(non_hom.hilbert(), Err(Error::NotHomogeneous));
}

#[test]
fn graded_pieces() {
    let r = ring(4);
    assert_eq!(ideal(&r, &["z0", "z1"]).graded_piece(1).unwrap().len(), 2);
    assert_eq!(ideal(&r, &["z0", "z1"]).graded_piece(2).unwrap().len(), 7);
    let (_, m) = ideal(&r, &["z0*z1", "z0*z2"]).graded_piece_matrix(2).unwrap();
    assert_eq!(m.rank(), 2);
}

#[test]
fn point_counts() {
    let r = ring(4);
    let mut s = SeedStream::new(4);
    // (1:0:0:0) and (1:1:1:1)
    let pts = ideal(&r, &["z1", "z2", "z3"])
        .intersection(&ideal(&r, &["z1-z0", "z2-z0", "z3-z0"]))
        .unwrap();
    assert_eq!(pts.count_distinct_points(&mut s).unwrap(), 2);
    let r3 = ring(3);
    let fat = ideal(&r3, &["z0^2", "z1"]);
    assert_eq!(fat.hilbert().unwrap().degree, 2);
    assert_eq!(fat.count_distinct_points(&mut s).unwrap(), 1);
    // the Tjurina-type scheme (x^2, y^2) of length 4 at one point
    let t = ideal(&r3, &["z0^2", "z1^2"]);
    assert_eq!(t.hilbert().unwrap().degree, 4);
    assert_eq!(t.count_distinct_points(&mut s).unwrap(), 1);
    assert_eq!(Ideal::unit(&r3).count_distinct_points(&mut s).unwrap(), 0);
    assert!(matches!(
        ideal(&r, &["z0"]).count_distinct_points(&mut s),
        Err(Error::PositiveDimension(2))
    ));
    // irrational points: z1^2 - 2 z0^2 = 0 on the line z2 = 0 of the plane
    let q = ideal(&r3, &["z1^2-2*z0^2", "z2"]);
    assert_eq!(q.count_distinct_points(&mut s).unwrap(), 2);
}

#[test]
fn rational_coefficients() {
    let r = Ring::new(Rationals, 4);
    let i = Ideal::from_gens(
        &r,
        vec![
            parse_poly(&r, &Z_NAMES, "2*z0-3*z1").unwrap(),
            parse_poly(&r, &Z_NAMES, "z0*z2-z3^2").unwrap(),
        ],
    );
    let h = i.hilbert().unwrap();
    assert_eq!((h.proj_dim, h.degree), (1, 2));
    assert!(i.verify_basis(MonomialOrder::Lex).unwrap());
}

/// Monomials of degree `t` outside a monomial ideal, counted directly.
fn direct_count(lms: &[Monomial], nvars: usize, t: u32) -> i64 {
    ring(nvars)
        .monomials_of_degree(t)
        .iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .count() as i64
}

fn random_ideal(seed: u64, n_gens: usize, max_deg: u32) -> Ideal<PrimeField> {
    let r = ring(4);
    let mut s = SeedStream::new(seed);
    let gens = (0..n_gens)
        .map(|i| {
            let d = 1 + ((seed as usize + i) as u32 % max_deg);
            // sparse: keep three terms of a dense form
            let f = s.form(&r, d);
            let terms: Vec<_> = f.terms().iter().step_by(f.len() / 3 + 1).cloned().collect();
            Polynomial::from_terms(&r, terms)
        })
        .collect();
    Ideal::from_gens(&r, gens)
}

#[test]
fn complete_intersection_degrees() {
    let r = ring(4);
    let mut s = SeedStream::new(77);
    for (a, b) in [(1, 1), (2, 2), (3, 4), (4, 4)] {
        let i = Ideal::from_gens(&r, vec![s.form(&r, a), s.form(&r, b)]);
        let h = i.hilbert().unwrap();
        assert_eq!(h.proj_dim, 1);
        assert_eq!(h.degree, (a * b) as i64, "CI ({a},{b})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bases_are_reduced_and_certified(seed in any::<u64>(), n in 1usize..4) {
        let i = random_ideal(seed, n, 3);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let b = i.groebner_basis(order).unwrap();
            prop_assert!(is_reduced(&b));
            prop_assert!(buchberger_certificate(&b));
            for g in i.generators() {
                prop_assert!(naive_remainder(&g.to_order(order), &b).is_zero());
            }
        }
    }

    #[test]
    fn dimension_and_degree_do_not_depend_on_the_order(seed in any::<u64>(), n in 1usize..4) {
        let i = random_ideal(seed, n, 3);
        let a = i.hilbert_in(MonomialOrder::Grevlex).unwrap();
        let b = i.hilbert_in(MonomialOrder::Lex).unwrap();
        prop_assert_eq!((a.proj_dim, a.degree), (b.proj_dim, b.degree));
        prop_assert_eq!(a.hilbert_poly, b.hilbert_poly);
    }

    #[test]
    fn hilbert_function_matches_monomial_count(seed in any::<u64>(), n in 1usize..4) {
        let i = random_ideal(seed, n, 3);
        let b = i.basis().unwrap();
        let lms: Vec<Monomial> = b.iter().map(|g| *g.leading_monomial().unwrap()).collect();
        let h = i.hilbert().unwrap();
        let bound = h.regularity_bound();
        for t in 0..(bound + 3) as u32 {
            let direct = direct_count(&lms, 4, t);
            prop_assert_eq!(h.hilbert_function(t as i64), direct);
            if t as i64 >= bound && h.proj_dim >= 0 {
                prop_assert_eq!(h.hilbert_poly_at(t as i64), Ratio::from_integer(direct));
            }
        }
        if h.proj_dim >= 1 {
            let e = h.krull_dim as i64 - 1;
            let fact: i64 = (1..=e).product();
            prop_assert_eq!(
                Ratio::from_integer(h.degree),
                h.hilbert_poly[e as usize] * fact
            );
        }
    }

    #[test]
    fn containments(a in any::<u64>(), b in any::<u64>()) {
        let i = random_ideal(a, 2, 2);
        let j = random_ideal(b, 1, 2);
        let inter = i.intersection(&j).unwrap();
        prop_assert!(i.contains_ideal(&inter).unwrap());
        prop_assert!(j.contains_ideal(&inter).unwrap());
        let q = i.quotient(&j).unwrap();
        prop_assert!(q.contains_ideal(&i).unwrap());
        let qq = q.quotient(&j).unwrap();
        prop_assert!(qq.contains_ideal(&q).unwrap());
        let sat = i.saturation(&j).unwrap();
        prop_assert!(sat.contains_ideal(&i).unwrap());
        prop_assert!(sat.contains_ideal(&qq).unwrap());
    }
}
