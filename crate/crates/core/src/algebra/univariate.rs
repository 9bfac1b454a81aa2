//! Dense univariate polynomials, only what squarefree decomposition needs.

use alloc::vec::Vec;

use super::field::Field;

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<K: Field> {
    pub field: K,
    pub coeffs: Vec<K::Elem>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(field: &K, mut coeffs: Vec<K::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        let k = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(c, &k.from_i64(i as i64)))
            .collect();
        UniPoly::new(k, coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).unwrap();
                UniPoly::new(
                    &self.field,
                    self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect(),
                )
            }
        }
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn div_rem(&self, den: &Self) -> (Self, Self) {
        let k = &self.field;
        let dd = den.degree().expect("division by zero polynomial");
        let lc_inv = k.inv(den.coeffs.last().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![k.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = k.mul(rem.last().unwrap(), &lc_inv);
            for (i, dc) in den.coeffs.iter().enumerate() {
                rem[shift + i] = k.sub(&rem[shift + i], &k.mul(&c, dc));
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|x| k.is_zero(x)) {
                rem.pop();
            }
        }
        (UniPoly::new(k, quot), UniPoly::new(k, rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f / gcd(f, f')`, valid when the characteristic exceeds the degree.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}
