use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::random::SeedStream;

fn fp_ring() -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), 4)
}

fn p(r: &Ring<PrimeField>, s: &str) -> Polynomial<PrimeField> {
    parse_poly(r, &Z_NAMES, s).unwrap()
}

/// Random sparse polynomial from a seed, mixing degrees.
fn sparse(r: &Ring<PrimeField>, seed: u64, max_deg: u32) -> Polynomial<PrimeField> {
    let mut s = SeedStream::new(seed);
    let mut acc = r.zero();
    let n = 1 + (s.next_u64() % 5) as u32;
    for _ in 0..n {
        let d = (s.next_u64() % (max_deg as u64 + 1)) as u32;
        let mono = s.form(r, d);
        // keep one term of the dense form
        if let Some(t) = mono.terms().get((s.next_u64() as usize) % mono.len().max(1)) {
            acc = acc.add(&Polynomial::monomial(r, t.0, t.1));
        }
    }
    acc
}

#[test]
fn difference_of_squares() {
    let r = fp_ring();
    let f = p(&r, "z0+z1").mul(&p(&r, "z0-z1"));
    assert_eq!(f, p(&r, "z0^2-z1^2"));
}

#[test]
fn ring_mismatch_is_an_error() {
    let r = fp_ring();
    let r5 = Ring::new(PrimeField::default(), 5);
    assert_eq!(
        poly_mul(&r.var(0), &r5.var(0)),
        Err(crate::Error::RingMismatch)
    );
    let lex = r.with_order(MonomialOrder::Lex);
    assert!(r.var(0).try_add(&lex.var(0)).is_err());
}

#[test]
fn derivative_examples() {
    let r = fp_ring();
    assert_eq!(p(&r, "z0^2*z1").derivative(0), p(&r, "2*z0*z1"));
    assert!(p(&r, "5").derivative(0).is_zero());
    assert!(partial_derivative(&p(&r, "z0"), 4).is_err());
}

#[test]
fn euler_identity_on_random_forms() {
    let r = fp_ring();
    let mut s = SeedStream::new(11);
    for d in 1..=5u32 {
        let f = s.form(&r, d);
        let mut acc = r.zero();
        for i in 0..4 {
            acc = acc.add(&r.var(i).mul(&f.derivative(i)));
        }
        assert_eq!(acc, f.scale(&r.field.from_i64(d as i64)));
        for i in 0..4 {
            assert_eq!(f.derivative(i).homogeneous_degree(), Some(d - 1));
        }
    }
}

#[test]
fn substitution_examples() {
    let r = fp_ring();
    let mut s = SeedStream::new(3);
    let f = s.form(&r, 3);
    assert_eq!(f.substitute(&r.vars()).unwrap(), f);
    let swapped = vec![r.var(1), r.var(0), r.var(2), r.var(3)];
    assert_eq!(p(&r, "z0*z1").substitute(&swapped).unwrap(), p(&r, "z0*z1"));
    assert!(f.substitute(&r.vars()[..3]).is_err());
    // degree bookkeeping: quartic of quartics has degree 16
    let g = s.form(&r, 4);
    let images: Vec<_> = (0..4).map(|_| s.form(&r, 4)).collect();
    assert_eq!(g.substitute(&images).unwrap().homogeneous_degree(), Some(16));
}

/// Q2(f Q1 z0, f Q1 z1, f Q1 z2) = (f Q1)^2 Q2(z0, z1, z2), checked against a
/// coefficient-by-coefficient expansion of the left side.
#[test]
fn homogeneity_of_the_double_conic_quadric() {
    let r = fp_ring();
    let k = r.field;
    let mut s = SeedStream::new(5);
    let q2 = s.form_in(&r, &[0, 1, 2], 2);
    let q1 = s.form(&r, 2);
    let f = s.linear_form(&r);
    let fq1 = f.mul(&q1);
    // oracle: expand Σ c_ij (fQ1 z_i)(fQ1 z_j) term by term
    let mut expanded = r.zero();
    for (m, c) in q2.terms() {
        let mut prod = Polynomial::constant(&r, *c);
        for i in 0..3 {
            for _ in 0..m.exp(i) {
                prod = prod.mul(&fq1.mul(&r.var(i)));
            }
        }
        expanded = expanded.add(&prod);
    }
    let images = vec![
        fq1.mul(&r.var(0)),
        fq1.mul(&r.var(1)),
        fq1.mul(&r.var(2)),
        r.var(3),
    ];
    let lhs = q2.substitute(&images).unwrap();
    assert_eq!(lhs, expanded);
    assert_eq!(lhs, fq1.pow(2).mul(&q2));
    assert_eq!(lhs.homogeneous_degree(), Some(8));
    let _ = k;
}

#[test]
fn exact_division() {
    let r = fp_ring();
    assert_eq!(
        exact_divide(&p(&r, "z0^2-z1^2"), &p(&r, "z0-z1")),
        Some(p(&r, "z0+z1"))
    );
    assert_eq!(exact_divide(&p(&r, "z0^2"), &p(&r, "z1")), None);
    assert_eq!(exact_divide(&p(&r, "z0"), &r.zero()), None);
}

#[test]
fn determinant_is_alternating_under_row_permutations() {
    let r = fp_ring();
    let mut s = SeedStream::new(17);
    let entries: Vec<_> = (0..9).map(|i| s.form(&r, 1 + (i % 2))).collect();
    let m = PolyMatrix::new(3, 3, entries).unwrap();
    let d = m.determinant().unwrap();
    let perms: [([usize; 3], bool); 6] = [
        ([0, 1, 2], false),
        ([1, 0, 2], true),
        ([0, 2, 1], true),
        ([2, 1, 0], true),
        ([1, 2, 0], false),
        ([2, 0, 1], false),
    ];
    for (perm, odd) in perms {
        let dp = m.permute_rows(&perm).determinant().unwrap();
        assert_eq!(dp, if odd { d.neg() } else { d.clone() });
    }
}

#[test]
fn signed_minors_annihilate_columns() {
    let r = fp_ring();
    let mut s = SeedStream::new(19);
    let cols: Vec<Vec<_>> = [1u32, 1, 2]
        .iter()
        .map(|&d| (0..4).map(|_| s.form(&r, d)).collect())
        .collect();
    let g = PolyMatrix::from_columns(&cols).unwrap();
    let tau = g.signed_maximal_minors().unwrap();
    for c in &cols {
        let mut acc = r.zero();
        for (t, e) in tau.iter().zip(c) {
            acc = acc.add(&t.mul(e));
        }
        assert!(acc.is_zero());
    }
    assert!(tau.iter().all(|t| t.homogeneous_degree() == Some(4)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let r = fp_ring();
        let (x, y, z) = (sparse(&r, a, 3), sparse(&r, b, 3), sparse(&r, c, 3));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.mul(&r.one()), x.clone());
    }

    #[test]
    fn canonical_text_round_trip(a in any::<u64>()) {
        let r = fp_ring();
        let x = sparse(&r, a, 4);
        let text = x.to_text();
        let back = parse_poly(&r, &Z_NAMES, &text).unwrap();
        prop_assert_eq!(back.terms(), x.terms());
    }

    #[test]
    fn homogeneity_preserved(a in any::<u64>(), da in 0u32..4, db in 0u32..4) {
        let r = fp_ring();
        let mut s = SeedStream::new(a);
        let f = s.form(&r, da);
        let g = s.form(&r, db);
        let prod = f.mul(&g);
        prop_assert!(prod.is_zero() || prod.homogeneous_degree() == Some(da + db));
        let images: Vec<_> = (0..4).map(|_| s.form(&r, 2)).collect();
        let sub = f.substitute(&images).unwrap();
        prop_assert!(sub.is_zero() || sub.homogeneous_degree() == Some(2 * da));
    }
}
