//! Intersection numbers on `P1 x P3 x P3'`, i.e. in the truncated ring
//! `Z[s, H, H'] / (s^2, H^4, H'^4)`, and the degree of the rational normal
//! scroll attached to the ruled family.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A class `Σ c[a][b][e] s^a H^b H'^e` with `a ≤ 1`, `b, e ≤ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ChowClass {
    c: [[[i64; 4]; 4]; 2],
}

impl ChowClass {
    pub const ZERO: ChowClass = ChowClass {
        c: [[[0; 4]; 4]; 2],
    };

    pub fn monomial(a: usize, b: usize, e: usize, coeff: i64) -> Self {
        let mut x = Self::ZERO;
        if a < 2 && b < 4 && e < 4 {
            x.c[a][b][e] = coeff;
        }
        x
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 0, 1)
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, 0, 1)
    }

    pub fn h() -> Self {
        Self::monomial(0, 1, 0, 1)
    }

    pub fn h_prime() -> Self {
        Self::monomial(0, 0, 1, 1)
    }

    pub fn coeff(&self, a: usize, b: usize, e: usize) -> i64 {
        self.c[a][b][e]
    }

    /// Coefficient of the top class `s·H³·H'³`.
    pub fn degree(&self) -> i64 {
        self.c[1][3][3]
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut x = *self;
        x.c.iter_mut().flatten().flatten().for_each(|v| *v *= k);
        x
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * *self)
    }

    /// The involution exchanging `H` and `H'`.
    pub fn swap(&self) -> Self {
        let mut x = Self::ZERO;
        for a in 0..2 {
            for b in 0..4 {
                for e in 0..4 {
                    x.c[a][e][b] = self.c[a][b][e];
                }
            }
        }
        x
    }

    /// Homogeneous component of codimension `k`.
    pub fn graded_part(&self, k: usize) -> Self {
        let mut x = Self::ZERO;
        for a in 0..2 {
            for b in 0..4 {
                for e in 0..4 {
                    if a + b + e == k {
                        x.c[a][b][e] = self.c[a][b][e];
                    }
                }
            }
        }
        x
    }
}

impl Add for ChowClass {
    type Output = ChowClass;
    fn add(mut self, o: ChowClass) -> ChowClass {
        for (x, y) in self.c.iter_mut().flatten().flatten().zip(o.c.iter().flatten().flatten()) {
            *x += y;
        }
        self
    }
}

impl Neg for ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale(-1)
    }
}

impl Sub for ChowClass {
    type Output = ChowClass;
    fn sub(self, o: ChowClass) -> ChowClass {
        self + (-o)
    }
}

impl Mul for ChowClass {
    type Output = ChowClass;
    fn mul(self, o: ChowClass) -> ChowClass {
        chow_mul(&self, &o)
    }
}

/// Product in the truncated ring.
pub fn chow_mul(x: &ChowClass, y: &ChowClass) -> ChowClass {
    let mut out = ChowClass::ZERO;
    for a1 in 0..2 {
        for b1 in 0..4 {
            for e1 in 0..4 {
                let u = x.c[a1][b1][e1];
                if u == 0 {
                    continue;
                }
                for a2 in 0..2 - a1 {
                    for b2 in 0..4 - b1 {
                        for e2 in 0..4 - e1 {
                            out.c[a1 + a2][b1 + b2][e1 + e2] += u * y.c[a2][b2][e2];
                        }
                    }
                }
            }
        }
    }
    out
}

/// `X = (s+H)(s+H')(H+H')(s+H+H')`.
pub fn x_class() -> ChowClass {
    let (s, h, hp) = (ChowClass::s(), ChowClass::h(), ChowClass::h_prime());
    (s + h) * (s + hp) * (h + hp) * (s + h + hp)
}

/// Coefficients of `t^0..=t^k` in `1 / Π (1 - x_i t)`, expanded in the
/// truncated ring.
pub fn inverse_product_series(roots: &[ChowClass], k: usize) -> Vec<ChowClass> {
    let mut series = vec![ChowClass::ZERO; k + 1];
    series[0] = ChowClass::one();
    for x in roots {
        // multiply by Σ x^j t^j
        let powers: Vec<ChowClass> = (0..=k).map(|j| x.pow(j as u32)).collect();
        let mut next = vec![ChowClass::ZERO; k + 1];
        for (i, a) in series.iter().enumerate() {
            for (j, p) in powers.iter().enumerate().take(k + 1 - i) {
                next[i + j] = next[i + j] + *a * *p;
            }
        }
        series = next;
    }
    series
}

/// Class of the curve `Γ`: the `t²` coefficient of
/// `1 / ((1 - s t)(1 - H t)(1 - (s+H) t))`.
pub fn gamma_class() -> ChowClass {
    let (s, h) = (ChowClass::s(), ChowClass::h());
    inverse_product_series(&[s, h, s + h], 2)[2]
}

/// Degree of a zero-cycle on the blow-up of `P3` along a line, which sits
/// in `P1 x P3` with class `s + H`.
pub fn blowup_degree(x: &ChowClass) -> i64 {
    (*x * (ChowClass::s() + ChowClass::h())).coeff(1, 3, 0)
}

/// Degree of the image of the blown-up `P3` in `P_{d+2}`:
/// `(H' + s)^{d-1} · H'^3`, normalized with `H'^d = H'^{d-1}·H`, then
/// integrated over the blow-up, whose class in `P1 x P3` is `s + H`.
pub fn ruled_degree(d: u32) -> Result<i64> {
    if d < 2 {
        return Err(Error::Invalid(alloc::format!("ruled_degree needs d >= 2, got {d}")));
    }
    let d = d as usize;
    let top = d + 3;
    // coefficient table c[a][b][e]: s^a H^b H'^e, with e unbounded below `top`
    let mut poly = vec![[[0i64; 4]; 2]; top];
    poly[0][0][0] = 1;
    let mul_by_hp_plus_s = |p: &Vec<[[i64; 4]; 2]>| {
        let mut out = vec![[[0i64; 4]; 2]; top];
        for e in 0..top {
            for a in 0..2 {
                for b in 0..4 {
                    let v = p[e][a][b];
                    if v == 0 {
                        continue;
                    }
                    if e + 1 < top {
                        out[e + 1][a][b] += v;
                    }
                    if a == 0 {
                        out[e][1][b] += v;
                    }
                }
            }
        }
        out
    };
    for _ in 0..d - 1 {
        poly = mul_by_hp_plus_s(&poly);
    }
    // times H'^3
    let mut shifted = vec![[[0i64; 4]; 2]; top];
    for e in 0..top - 3 {
        shifted[e + 3] = poly[e];
    }
    // rewrite H'^e -> H'^{e-1} H for e >= d, highest power first
    for e in (d..top).rev() {
        for a in 0..2 {
            for b in 0..4 {
                let v = shifted[e][a][b];
                if v != 0 {
                    shifted[e][a][b] = 0;
                    if b < 3 {
                        shifted[e - 1][a][b + 1] += v;
                    }
                }
            }
        }
    }
    // everything now lives in H'^{d-1} · A^3(blow-up); push forward
    let mut base = ChowClass::ZERO;
    for (a, row) in shifted[d - 1].iter().enumerate() {
        for (b, &v) in row.iter().enumerate() {
            base = base + ChowClass::monomial(a, b, 0, v);
        }
    }
    Ok(blowup_degree(&base))
}
