//! The field `Z/5`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigInt;

use crate::error::RingError;

/// A residue modulo 5.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mod5(u8);

impl Mod5 {
    /// Builds a residue from any integer.
    pub fn new(n: i64) -> Self {
        Self(n.rem_euclid(5) as u8)
    }

    /// Builds a residue from an arbitrary-precision integer.
    pub fn from_bigint(n: &BigInt) -> Self {
        let five = BigInt::from(5);
        let r = ((n % &five) + &five) % &five;
        Self(u8::try_from(r).expect("residue fits in u8"))
    }

    /// The underlying value in `{0, 1, 2, 3, 4}`.
    pub fn value(self) -> u8 {
        self.0
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(self) -> Result<Self, RingError> {
        match self.0 {
            0 => Err(RingError::DivisionByNonUnit),
            1 => Ok(Self(1)),
            2 => Ok(Self(3)),
            3 => Ok(Self(2)),
            4 => Ok(Self(4)),
            _ => unreachable!(),
        }
    }

    /// Integer power (nonnegative exponents; use `inverse` first for
    /// negative ones).
    pub fn pow(self, mut e: u64) -> Self {
        let mut acc = Self(1);
        let mut sq = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq;
            }
            sq = sq * sq;
            e >>= 1;
        }
        acc
    }
}

impl Add for Mod5 {
    type Output = Mod5;
    fn add(self, rhs: Mod5) -> Mod5 {
        Mod5(((self.0 + rhs.0) % 5) as u8)
    }
}

impl Sub for Mod5 {
    type Output = Mod5;
    fn sub(self, rhs: Mod5) -> Mod5 {
        Mod5((self.0 + 5 - rhs.0) % 5)
    }
}

impl Mul for Mod5 {
    type Output = Mod5;
    fn mul(self, rhs: Mod5) -> Mod5 {
        Mod5((self.0 * rhs.0) % 5)
    }
}

impl Neg for Mod5 {
    type Output = Mod5;
    fn neg(self) -> Mod5 {
        Mod5((5 - self.0) % 5)
    }
}

impl fmt::Display for Mod5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Mod5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mod5({})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        assert_eq!(Mod5::new(3) + Mod5::new(4), Mod5::new(2));
        assert_eq!(Mod5::new(3) * Mod5::new(4), Mod5::new(2));
        assert_eq!(Mod5::new(1) - Mod5::new(3), Mod5::new(3));
        assert_eq!(-Mod5::new(2), Mod5::new(3));
        assert_eq!(Mod5::new(-7), Mod5::new(3));
    }

    #[test]
    fn inverses() {
        for v in 1..5 {
            let x = Mod5::new(v);
            assert_eq!(x * x.inverse().unwrap(), Mod5::new(1));
        }
        assert!(Mod5::new(0).inverse().is_err());
    }

    #[test]
    fn big_reduction() {
        let n: BigInt = "-123456789123456789".parse().unwrap();
        let expect = Mod5::new((-123456789123456789i64).rem_euclid(5));
        assert_eq!(Mod5::from_bigint(&n), expect);
        assert_eq!(Mod5::new(3).pow(4), Mod5::new(1));
    }
}
