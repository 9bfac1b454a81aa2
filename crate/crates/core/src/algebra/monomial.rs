//! Exponent vectors and monomial orders.

use core::cmp::Ordering;

/// Largest ring arity supported: the bigraded `P3 x P3'` ring plus
/// auxiliary variables.
pub const MAX_VARS: usize = 12;

/// Exponent vector with cached total degree. Slots past the ring arity are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e).expect("exponent overflow");
        }
        m.deg = exps.iter().map(|&e| e as u16).sum();
        m
    }

    pub fn var(i: usize, e: u32) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = u8::try_from(e).expect("exponent overflow");
        m.deg = e as u16;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    /// Degree restricted to the variables in `range`.
    pub fn partial_degree(&self, range: core::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / den`, assuming `den` divides `self`.
    #[inline]
    pub fn quotient_of(&self, den: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i] - den.exps[i];
        }
        Monomial {
            exps,
            deg: self.deg - den.deg,
        }
    }

    pub fn checked_div(&self, den: &Monomial) -> Option<Monomial> {
        den.divides(self).then(|| self.quotient_of(den))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        let mut deg = 0u16;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].max(other.exps[i]);
            deg += exps[i] as u16;
        }
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        let mut deg = 0u16;
        for i in 0..MAX_VARS {
            exps[i] = self.exps[i].min(other.exps[i]);
            deg += exps[i] as u16;
        }
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Drops one power of variable `i`, if present.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = *self;
        m.exps[i] -= 1;
        m.deg -= 1;
        Some(m)
    }

    /// Moves exponents to new slots: variable `i` goes to `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial::ONE;
        for (i, &j) in map.iter().enumerate() {
            m.exps[j] += self.exps[i];
        }
        m.deg = self.deg;
        debug_assert_eq!(
            m.deg as u32,
            self.exps[..map.len()].iter().map(|&e| e as u32).sum::<u32>()
        );
        m
    }

    /// Highest variable index with nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }
}

/// Monomial orders. `Block(k)` compares the first `k` variables by grevlex
/// first and breaks ties with grevlex on the remaining ones; it eliminates
/// the first `k` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Block(usize),
}

#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..MAX_VARS).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block(k) => {
                grevlex_range(a, b, 0, k).then_with(|| grevlex_range(a, b, k, MAX_VARS))
            }
        }
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 6).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            (1usize..6).prop_map(MonomialOrder::Block)
        ]
    }

    proptest! {
        #[test]
        fn orders_are_total_multiplicative_with_one_minimal(
            o in order(), a in mono(), b in mono(), c in mono()
        ) {
            // antisymmetry / totality
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            // transitivity
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
            // multiplicativity
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), o.cmp(&a, &b));
            // 1 is minimal
            prop_assert_ne!(o.cmp(&Monomial::ONE, &a), Ordering::Greater);
        }

        #[test]
        fn lcm_gcd_divisibility(a in mono(), b in mono()) {
            let l = a.lcm(&b);
            let g = a.gcd(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert_eq!(l.degree() + g.degree(), a.degree() + b.degree());
            prop_assert_eq!(a.divides(&b), b.checked_div(&a).is_some());
        }
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // z0*z2 < z1^2 in grevlex
        let a = Monomial::from_exponents(&[1, 0, 1]);
        let b = Monomial::from_exponents(&[0, 2, 0]);
        assert_eq!(o.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        // block order eliminates the first variable
        let t = Monomial::var(0, 1);
        let big = Monomial::from_exponents(&[0, 5, 5]);
        assert_eq!(MonomialOrder::Block(1).cmp(&t, &big), Ordering::Greater);
    }
}
