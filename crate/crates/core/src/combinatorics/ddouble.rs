//! Minimal double-double arithmetic (about 106 significant bits).

use core::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct DDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> DDouble {
    let s = a + b;
    DDouble {
        hi: s,
        lo: b - (s - a),
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

impl DDouble {
    pub const ONE: DDouble = DDouble { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> DDouble {
        DDouble { hi: x, lo: 0.0 }
    }

    pub fn sqrt(x: f64) -> DDouble {
        let s = libm::sqrt(x);
        let residual = libm::fma(-s, s, x);
        quick_two_sum(s, residual / (2.0 * s))
    }

    pub fn scale(self, k: f64) -> DDouble {
        DDouble {
            hi: self.hi * k,
            lo: self.lo * k,
        }
    }

    pub fn powu(self, mut e: u32) -> DDouble {
        let mut base = self;
        let mut acc = DDouble::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Nearest integer, or `None` when it does not fit in `i128`.
    pub fn round_i128(self) -> Option<i128> {
        let r = libm::round(self.hi);
        if r.is_nan() || libm::fabs(r) >= 1.0e38 {
            return None;
        }
        let frac = (self.hi - r) + self.lo;
        Some(r as i128 + libm::round(frac) as i128)
    }
}

impl Add for DDouble {
    type Output = DDouble;

    fn add(self, b: DDouble) -> DDouble {
        let (s, e) = two_sum(self.hi, b.hi);
        quick_two_sum(s, e + self.lo + b.lo)
    }
}

impl Neg for DDouble {
    type Output = DDouble;

    fn neg(self) -> DDouble {
        DDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DDouble {
    type Output = DDouble;

    fn sub(self, b: DDouble) -> DDouble {
        self + (-b)
    }
}

impl Mul for DDouble {
    type Output = DDouble;

    fn mul(self, b: DDouble) -> DDouble {
        let (p, e) = two_prod(self.hi, b.hi);
        quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for DDouble {
    type Output = DDouble;

    fn div(self, b: DDouble) -> DDouble {
        let q1 = self.hi / b.hi;
        let r = self - b * DDouble::from_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * DDouble::from_f64(q2);
        let q3 = r.hi / b.hi;
        quick_two_sum(q1, q2) + DDouble::from_f64(q3)
    }
}
