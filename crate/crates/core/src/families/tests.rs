use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::{parse_poly, PrimeField, Z_NAMES};

fn ring() -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), 4)
}

fn qq() -> Ring<Rationals> {
    Ring::new(Rationals, 4)
}

fn poly<K: Field>(r: &Ring<K>, s: &str) -> Polynomial<K> {
    parse_poly(r, &Z_NAMES, s).unwrap()
}

fn row(a: &MapAnalysis) -> (u32, i64, i64, i64, Option<i64>, Option<i64>) {
    (a.bidegree.0, a.bidegree.1, a.alpha, a.beta, a.eta, a.genus)
}

#[test]
fn labels_round_trip() {
    for f in [Family::J, Family::R, Family::D, Family::C, Family::Loria] {
        assert_eq!(Family::parse(f.label()), Some(f));
    }
    assert_eq!(Family::parse("X"), None);
}

#[test]
fn jonquieres_quartic() {
    let r = ring();
    let m = make_jonquieres(&r, None, 4, &mut SeedStream::new(1)).unwrap();
    let a = m.map.analyze(&mut SeedStream::new(1)).unwrap();
    assert!(a.all_passed());
    assert!(profile_mismatches(&m.expected.unwrap(), &a).is_empty(), "{a:?}");
    assert_eq!(row(&a), (4, 4, 12, 0, None, Some(3)));
}

#[test]
fn smallest_monoidal_map() {
    let r = ring();
    let p = JonquieresParams {
        d: 2,
        p_low: poly(&r, "z0"),
        p_high: poly(&r, "z1^2"),
        q_low: r.zero(),
        q_high: poly(&r, "z2"),
    };
    let m = make_jonquieres(&r, Some(p), 2, &mut SeedStream::new(1)).unwrap();
    assert!(m.map.is_birational(&mut SeedStream::new(2)).unwrap().birational);
    let c = m.map.compose_check(m.inverse.as_ref().unwrap()).unwrap();
    assert_eq!(c.homogeneous_degree(), Some(3));
}

#[test]
fn jonquieres_closed_form_inverse() {
    let r = ring();
    for d in 2..=5 {
        let m = make_jonquieres(&r, None, d, &mut SeedStream::new(d as u64)).unwrap();
        let c = m.map.compose_check(m.inverse.as_ref().unwrap()).unwrap();
        assert_eq!(c.homogeneous_degree(), Some(d * d - 1), "d = {d}");
        // the inverse is again monoidal, so composing the other way works too
        let back = m.inverse.as_ref().unwrap().compose_check(&m.map).unwrap();
        assert_eq!(back.homogeneous_degree(), Some(d * d - 1));
    }
}

#[test]
fn jonquieres_rejects_proportional_data() {
    let r = ring();
    // P_{d-1} Q_{d-1} = P_d Q_{d-2}
    let p = JonquieresParams {
        d: 2,
        p_low: poly(&r, "z0"),
        p_high: poly(&r, "z0*z1"),
        q_low: poly(&r, "1"),
        q_high: poly(&r, "z1"),
    };
    assert!(matches!(
        make_jonquieres(&r, Some(p), 2, &mut SeedStream::new(1)),
        Err(Error::Certificate(_))
    ));
    assert!(make_jonquieres(&r, None, 1, &mut SeedStream::new(1)).is_err());
}

#[test]
fn ruled_quartic() {
    let r = ring();
    let m = make_ruled(&r, 4, &mut SeedStream::new(1)).unwrap();
    let base = m.map.base_ideal().unwrap();
    assert_eq!(base.graded_piece(4).unwrap().len(), 4);
    assert_eq!(base.hilbert().unwrap().degree, 9);
    let a = m.map.analyze(&mut SeedStream::new(1)).unwrap();
    assert_eq!(row(&a), (4, 4, 9, 1, Some(3), Some(0)));
    // the triple line lies in the singular scheme
    let sing = m.map.sing_scheme().unwrap();
    assert!(m.delta.unwrap().contains_ideal(&sing.ideal).unwrap());
}

#[test]
fn ruled_small_degrees() {
    let r = ring();
    for (d, alpha) in [(2u32, 2i64), (3, 5)] {
        let m = make_ruled(&r, d, &mut SeedStream::new(7)).unwrap();
        assert_eq!(m.expected.unwrap().alpha, alpha);
        let hb = m.map.base_ideal().unwrap().hilbert().unwrap();
        assert_eq!((hb.proj_dim, hb.degree), (1, alpha));
        let mut rng = SeedStream::new(3);
        assert!(m.map.is_birational(&mut rng).unwrap().birational);
        assert_eq!(m.map.inverse_degree(&mut rng).unwrap().deg_c1, d as i64);
    }
}

fn explicit_entries() -> [[&'static str; 3]; 4] {
    [
        ["-z1", "z0", "-z1^2+z0*z3"],
        ["z0", "z1", "z0^2-z1*z2"],
        ["0", "z2", "z0*z1-z1*z3"],
        ["0", "z3", "-z0*z1+z0*z2"],
    ]
}

#[test]
fn explicit_determinantal_matrix() {
    let r = qq();
    let p = DetParams::explicit(&r.field);
    let g = determinantal_matrix(&r, &p).unwrap();
    for (i, want) in explicit_entries().iter().enumerate() {
        for (j, w) in want.iter().enumerate() {
            assert_eq!(g.get(i, j), &poly(&r, w), "G[{i}][{j}]");
        }
    }
}

#[test]
fn explicit_determinantal_map_is_birational() {
    let r = qq();
    let (tau, tau_p, g) = determinantal_maps(&r, &DetParams::explicit(&r.field)).unwrap();
    assert_eq!(tau.degree(), 4);
    // columns of G are syzygies of the signed minors
    for j in 0..3 {
        let s = (0..4).fold(r.zero(), |acc, i| acc.add(&g.get(i, j).mul(&tau.components()[i])));
        assert!(s.is_zero(), "column {j}");
    }
    let mut rng = SeedStream::new(1);
    assert!(tau.is_birational(&mut rng).unwrap().birational);
    assert_eq!(tau.inverse_degree(&mut rng).unwrap().deg_c1, 4);
    let c = tau.compose_check(&tau_p).unwrap();
    assert_eq!(c.homogeneous_degree(), Some(15));
}

#[test]
fn determinantal_member() {
    let r = ring();
    let m = make_determinantal(&r, None, &mut SeedStream::new(1)).unwrap();
    let a = m.map.analyze(&mut SeedStream::new(1)).unwrap();
    assert!(profile_mismatches(&m.expected.unwrap(), &a).is_empty(), "{a:?}");
    assert_eq!(row(&a), (4, 4, 11, 1, Some(1), Some(2)));
    let delta = m.delta.as_ref().unwrap();
    assert_eq!(delta.hilbert().unwrap().degree, 1);
    let deep = deep_suite(&m, &mut SeedStream::new(2)).unwrap();
    assert!(deep.all_passed(), "{:?}", deep.checks);
}

#[test]
fn determinantal_rejects_degenerate_data() {
    let r = ring();
    let k = r.field;
    let mut p = DetParams::explicit(&k);
    p.u1 = p.u0.scale(&k.from_i64(3));
    assert!(matches!(
        make_determinantal(&r, Some(p), &mut SeedStream::new(1)),
        Err(Error::Certificate(_))
    ));
}

#[test]
fn conic_member() {
    let r = ring();
    let mut rng = SeedStream::new(1);
    let p = ConicParams::random(&r, &mut rng);
    // Q1 has no z3^2 term: it passes through p
    assert_eq!(p.q1.evaluate(&[0, 0, 0, 1]).unwrap(), 0);
    let g = p.g_ideal(&r).unwrap();
    assert!(g.same_ideal(&p.g_by_intersection(&r).unwrap()).unwrap());
    let m = make_conic(&r, Some(p.clone()), &mut rng).unwrap();
    let a = m.map.analyze(&mut SeedStream::new(1)).unwrap();
    assert_eq!(row(&a), (4, 4, 10, 1, Some(2), Some(1)));
    assert_eq!(a.deg_c2, 12);
    // every member is double along the conic (f, Q1)
    let double = Ideal::new(&r, vec![p.f.clone(), p.q1.clone()]).unwrap().power(2).unwrap();
    for c in m.map.components() {
        assert!(double.contains(c).unwrap());
    }
}

#[test]
fn conic_basis_is_echelon() {
    let r = ring();
    let m = make_conic(&r, None, &mut SeedStream::new(4)).unwrap();
    let leads: Vec<_> = m.map.components().iter().map(|c| *c.leading_monomial().unwrap()).collect();
    for (i, c) in m.map.components().iter().enumerate() {
        assert_eq!(c.leading_coeff(), Some(&1));
        for (j, l) in leads.iter().enumerate() {
            if i != j {
                assert_eq!(c.coeff(l), 0);
            }
        }
    }
}

#[test]
fn loria_points_are_general() {
    let o = loria_points();
    for p in &o {
        assert_eq!(p[3], 0);
        assert!(p[..3].iter().all(|&x| x != 0));
    }
}

#[test]
fn loria_quadrics_satisfy_incidences() {
    let q = loria_quadrics().unwrap();
    let r = qq();
    let monos = r.monomials_of_degree(2);
    let o = loria_points();
    for (j, c) in q.iter().enumerate() {
        let f = Polynomial::from_terms(&r, monos.iter().zip(c).map(|(m, v)| (*m, r.field.from_bigint(v))).collect());
        // primitive integer vector
        assert_eq!(c.iter().fold(BigInt::zero(), |a, b| a.gcd(b)), BigInt::one());
        // a cone over the three coordinate lines through (0:0:0:1)
        for s in ["z0^2", "z1^2", "z2^2", "z3^2", "z0*z3", "z1*z3", "z2*z3"] {
            assert!(f.coeff(poly(&r, s).leading_monomial().unwrap()).is_zero());
        }
        for (i, pt) in o.iter().enumerate() {
            let v: Vec<_> = pt.iter().map(|&x| r.field.from_i64(x)).collect();
            let val = f.evaluate(&v).unwrap();
            assert_eq!(val.is_zero(), i != j, "q_{j} at O_{}", i + 1);
        }
    }
}

#[test]
fn loria_map() {
    let r = qq();
    let m = make_loria(&r).unwrap();
    for l in loria_lines(&r).unwrap() {
        for c in m.map.components() {
            assert!(l.contains(c).unwrap());
        }
    }
    let mut rng = SeedStream::new(1);
    assert!(m.map.is_birational(&mut rng).unwrap().birational);
    assert_eq!(m.map.inverse_degree(&mut rng).unwrap().deg_c1, 4);
    let fp = make_loria(&ring()).unwrap();
    assert_eq!(fp.map.sing_scheme().unwrap().beta, 1);
}

#[test]
fn dimensions() {
    assert_eq!(dimension_formula(Family::J, 4).unwrap(), 54);
    assert_eq!(dimension_formula(Family::R, 4).unwrap(), 37);
    assert_eq!(dimension_formula(Family::D, 4).unwrap(), 46);
    assert_eq!(dimension_formula(Family::C, 4).unwrap(), 37);
    for d in 2..=8 {
        assert!(dimension_identity(Family::J, d).unwrap());
        assert!(dimension_identity(Family::R, d).unwrap());
    }
    assert!(dimension_identity(Family::D, 4).unwrap());
    assert!(dimension_identity(Family::C, 4).unwrap());
    assert!(dimension_formula(Family::D, 3).is_err());
    assert!(dimension_formula(Family::Loria, 4).is_err());
}

#[test]
fn quartic_only_families() {
    let r = ring();
    for f in [Family::D, Family::C, Family::Loria] {
        assert!(matches!(construct(f, &r, 3, &mut SeedStream::new(1)), Err(Error::Invalid(_))));
    }
}

#[test]
fn genus_is_seed_independent() {
    let r = ring();
    for f in Family::THEOREM_B {
        let m = construct(f, &r, 4, &mut SeedStream::new(11)).unwrap();
        let g: Vec<_> = (1..=3).map(|s| m.map.genus(&mut SeedStream::new(s)).unwrap()).collect();
        assert!(g.windows(2).all(|w| w[0] == w[1]), "{f:?}: {g:?}");
        assert_eq!(Some(g[0]), m.expected.unwrap().genus);
    }
}
