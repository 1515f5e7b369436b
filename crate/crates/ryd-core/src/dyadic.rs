//! Dyadic rationals: exact arithmetic for coefficients of the form
//! `m / 2^e`.
//!
//! The star and Pieri products on adjoint spaces pass through intermediate
//! coefficients like `1/2` and `2^{f−f'−f''}` with small exponents; every
//! published coefficient must come back out an integer.  A full rational
//! type is overkill — the denominators are always powers of two — so this
//! minimal exact type keeps the crate dependency-free and makes the
//! integrality assertion at the public boundary explicit.

use core::fmt;
use core::ops::{Add, AddAssign, Mul};

/// An exact dyadic rational `num / 2^exp`, kept normalized (`num` odd or
/// zero, and `exp == 0` when `num == 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };
    pub const HALF: Dyadic = Dyadic { num: 1, exp: 1 };

    /// Construct `num / 2^exp`, normalizing.
    pub fn new(num: i64, exp: u32) -> Dyadic {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_int(n: i64) -> Dyadic {
        Dyadic { num: n, exp: 0 }
    }

    /// `self * 2^e`, where `e` may be negative.
    pub fn times_pow2(self, e: i32) -> Dyadic {
        if self.num == 0 {
            return Dyadic::ZERO;
        }
        let exp = self.exp as i64 - e as i64;
        if exp <= 0 {
            Dyadic {
                num: self.num << (-exp) as u32,
                exp: 0,
            }
        } else {
            Dyadic {
                num: self.num,
                exp: exp as u32,
            }
        }
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.exp == 0
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(self) -> Option<i64> {
        if self.exp == 0 {
            Some(self.num)
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.num == 0 {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let num = (self.num << (exp - self.exp)) + (rhs.num << (exp - rhs.exp));
        Dyadic::new(num, exp)
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, rhs: Dyadic) {
        *self = *self + rhs;
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::new(self.num * rhs.num, self.exp + rhs.exp)
    }
}

impl Mul<i64> for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: i64) -> Dyadic {
        Dyadic::new(self.num * rhs, self.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let h = Dyadic::HALF;
        assert_eq!(h + h, Dyadic::ONE);
        assert_eq!(h * Dyadic::from_int(4), Dyadic::from_int(2));
        assert_eq!(Dyadic::from_int(3).times_pow2(-2), Dyadic::new(3, 2));
        assert_eq!(Dyadic::new(3, 2).times_pow2(2), Dyadic::from_int(3));
        assert_eq!(Dyadic::new(4, 2), Dyadic::ONE);
        assert!(Dyadic::new(6, 1).is_integer());
        assert_eq!(Dyadic::new(6, 1).to_integer(), Some(3));
        assert_eq!(Dyadic::new(3, 1).to_integer(), None);
        assert_eq!(h + h + Dyadic::from_int(-1), Dyadic::ZERO);
    }
}
