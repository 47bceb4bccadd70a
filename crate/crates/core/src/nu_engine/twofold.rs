//! Double-double arithmetic for the `k` discriminant. Its two roots can
//! nearly coincide, and plain `f64` then loses half the digits.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(super) struct Twofold {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> Twofold {
    let s = a + b;
    let bb = s - a;
    Twofold {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

fn quick_two_sum(a: f64, b: f64) -> Twofold {
    let s = a + b;
    Twofold { hi: s, lo: b - (s - a) }
}

fn two_prod(a: f64, b: f64) -> Twofold {
    let p = a * b;
    Twofold {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Twofold {
    pub(super) fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub(super) fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from(0.0);
        }
        let s = self.hi.sqrt();
        let rest = (self - two_prod(s, s)).value();
        quick_two_sum(s, rest / (2.0 * s))
    }
}

impl From<f64> for Twofold {
    fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }
}

impl Add for Twofold {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = two_sum(self.hi, o.hi);
        quick_two_sum(s.hi, s.lo + self.lo + o.lo)
    }
}

impl Neg for Twofold {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Twofold {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for Twofold {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + (self.hi * o.lo + self.lo * o.hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keeps_cancelled_digits() {
        // (1 + 2^-40)² − 1 − 2^-39 = 2^-80, invisible in f64
        let x = Twofold::from(1.0 + 2f64.powi(-40));
        let r = x * x - Twofold::from(1.0) - Twofold::from(2f64.powi(-39));
        assert_eq!(r.value(), 2f64.powi(-80));
        assert_eq!(Twofold::from(2.0).sqrt().value(), std::f64::consts::SQRT_2);
    }
}
