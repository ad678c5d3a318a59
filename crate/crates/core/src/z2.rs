use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

/// An element of the cyclic group of order two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z2(bool);

impl Z2 {
    pub const ZERO: Z2 = Z2(false);
    pub const ONE: Z2 = Z2(true);

    pub fn from_parity(n: i64) -> Self {
        Z2(n.rem_euclid(2) == 1)
    }

    pub fn is_one(self) -> bool {
        self.0
    }

    pub fn is_zero(self) -> bool {
        !self.0
    }

    /// `0` or `1`.
    pub fn value(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for Z2 {
    fn from(b: bool) -> Self {
        Z2(b)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Z2 {
    type Output = Z2;
    fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for Z2 {
    fn add_assign(&mut self, rhs: Z2) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Z2 {
    type Output = Z2;
    fn sub(self, rhs: Z2) -> Z2 {
        self + rhs
    }
}

impl Neg for Z2 {
    type Output = Z2;
    fn neg(self) -> Z2 {
        self
    }
}

impl std::iter::Sum for Z2 {
    fn sum<I: Iterator<Item = Z2>>(iter: I) -> Z2 {
        iter.fold(Z2::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        assert_eq!(Z2::ONE + Z2::ONE, Z2::ZERO);
        assert_eq!(Z2::ONE + Z2::ZERO, Z2::ONE);
        assert_eq!(Z2::from_parity(-3), Z2::ONE);
        assert_eq!(Z2::from_parity(4), Z2::ZERO);
        assert_eq!([Z2::ONE; 9].into_iter().sum::<Z2>(), Z2::ONE);
    }
}
