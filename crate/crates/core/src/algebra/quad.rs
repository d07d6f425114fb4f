use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Rat, Ring};
use crate::error::{Error, Result};

/// Element `a + b·√3` of Q(√3).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QuadNum {
    pub a: Rat,
    pub b: Rat,
}

impl QuadNum {
    pub fn new(a: Rat, b: Rat) -> Self {
        QuadNum { a, b }
    }

    /// `a + b√3` from integers.
    pub fn int(a: i64, b: i64) -> Self {
        QuadNum::new(Rat::from(a), Rat::from(b))
    }

    pub fn rat(a: Rat) -> Self {
        QuadNum::new(a, Rat::zero())
    }

    pub fn sqrt3() -> Self {
        QuadNum::int(0, 1)
    }

    pub fn zero() -> Self {
        QuadNum::default()
    }

    pub fn one() -> Self {
        QuadNum::int(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> QuadNum {
        QuadNum::new(self.a.clone(), -&self.b)
    }

    /// `a² − 3b²`.
    pub fn norm(&self) -> Rat {
        &(&self.a * &self.a) - &(&Rat::from(3) * &(&self.b * &self.b))
    }

    pub fn trace(&self) -> Rat {
        &self.a + &self.a
    }

    pub fn inv(&self) -> Result<QuadNum> {
        let n = self.norm();
        let ni = n.inv().ok_or(Error::DivisionByZero)?;
        Ok(QuadNum::new(&self.a * &ni, -&(&self.b * &ni)))
    }

    pub fn div(&self, rhs: &QuadNum) -> Result<QuadNum> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> QuadNum {
        QuadNum::new(&self.a * r, &self.b * r)
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√3", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}√3", self.a, self.b.abs())
                } else {
                    write!(f, "{}+{}√3", self.a, self.b)
                }
            }
        }
    }
}

impl From<Rat> for QuadNum {
    fn from(r: Rat) -> Self {
        QuadNum::rat(r)
    }
}

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        QuadNum::int(n, 0)
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &'a QuadNum) -> QuadNum {
        QuadNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &'a QuadNum) -> QuadNum {
        QuadNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &'a QuadNum) -> QuadNum {
        let three = Rat::from(3);
        let a = &(&self.a * &rhs.a) + &(&three * &(&self.b * &rhs.b));
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        QuadNum::new(a, b)
    }
}

impl Add for QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: QuadNum) -> QuadNum {
        &self + &rhs
    }
}

impl Sub for QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: QuadNum) -> QuadNum {
        &self - &rhs
    }
}

impl Mul for QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: QuadNum) -> QuadNum {
        &self * &rhs
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::new(-self.a, -self.b)
    }
}

impl<'a> Neg for &'a QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::new(-&self.a, -&self.b)
    }
}

/// The field Q(√3).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QuadField;

impl Ring for QuadField {
    type Elem = QuadNum;

    fn zero(&self) -> QuadNum {
        QuadNum::zero()
    }
    fn one(&self) -> QuadNum {
        QuadNum::one()
    }
    fn is_zero(&self, a: &QuadNum) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &QuadNum, b: &QuadNum) -> QuadNum {
        a + b
    }
    fn sub(&self, a: &QuadNum, b: &QuadNum) -> QuadNum {
        a - b
    }
    fn neg(&self, a: &QuadNum) -> QuadNum {
        -a
    }
    fn mul(&self, a: &QuadNum, b: &QuadNum) -> QuadNum {
        a * b
    }
    fn from_i64(&self, n: i64) -> QuadNum {
        QuadNum::from(n)
    }
    fn exact_div(&self, a: &QuadNum, b: &QuadNum) -> Option<QuadNum> {
        a.div(b).ok()
    }
}

impl Field for QuadField {
    fn inv(&self, a: &QuadNum) -> Option<QuadNum> {
        a.inv().ok()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_five_minus_three_sqrt3() {
        let c = QuadNum::int(5, -3);
        assert_eq!(c.norm(), Rat::from(-2));
        assert_eq!(&c * &c.conj(), QuadNum::from(-2));
    }

    #[test]
    fn cube_of_one_plus_sqrt3() {
        let u = QuadNum::int(1, 1);
        // (1+√3)² = 4+2√3, times (1+√3) = 4+4√3+2√3+6
        assert_eq!(&u * &(&u * &u), QuadNum::int(10, 6));
    }

    #[test]
    fn inverse_of_zero_errors() {
        assert_eq!(QuadNum::zero().inv(), Err(Error::DivisionByZero));
        let c = QuadNum::int(5, -3);
        assert_eq!(&c * &c.inv().unwrap(), QuadNum::one());
    }
}
