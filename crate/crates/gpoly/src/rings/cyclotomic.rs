//! The cyclotomic ring `Z[zeta]`, `zeta = e^{i*pi/5}` (a primitive tenth
//! root of unity), reduced modulo `zeta^4 - zeta^3 + zeta^2 - zeta + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, Zero};

use crate::error::RingError;
use crate::rings::{bigint_to_json, GoldenNumber, Mod5};

/// An exact element `c0 + c1*zeta + c2*zeta^2 + c3*zeta^3` with
/// `zeta = e^{i*pi/5}`.
///
/// After reduction `zeta^5 = -1` and `zeta^10 = 1` hold. Components are
/// rationals to accommodate intermediate work; the homomorphism targets
/// require integrality and check it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    /// Coefficients of `1, zeta, zeta^2, zeta^3`.
    pub c: [BigRational; 4],
}

impl CyclotomicNumber {
    /// Builds from four rational coefficients.
    pub fn new(c: [BigRational; 4]) -> Self {
        Self { c }
    }

    /// Builds from four integer coefficients.
    pub fn from_ints(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        Self::new([
            BigRational::from_integer(c0.into()),
            BigRational::from_integer(c1.into()),
            BigRational::from_integer(c2.into()),
            BigRational::from_integer(c3.into()),
        ])
    }

    /// Zero.
    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    /// One.
    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    /// The integer `n`.
    pub fn integer(n: i64) -> Self {
        Self::from_ints(n, 0, 0, 0)
    }

    /// `zeta^k` for any integer `k` (negative allowed), reduced with
    /// `zeta^10 = 1` and `zeta^5 = -1`.
    pub fn zeta_pow(k: i64) -> Self {
        let m = k.rem_euclid(10) as usize;
        let (m, sign) = if m >= 5 { (m - 5, -1i64) } else { (m, 1) };
        match m {
            0 => Self::integer(sign),
            1 => Self::from_ints(0, sign, 0, 0),
            2 => Self::from_ints(0, 0, sign, 0),
            3 => Self::from_ints(0, 0, 0, sign),
            // zeta^4 = zeta^3 - zeta^2 + zeta - 1.
            4 => Self::from_ints(-sign, sign, -sign, sign),
            _ => unreachable!(),
        }
    }

    /// True when the value is zero.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    /// Complex conjugation, `zeta -> zeta^9`. A ring automorphism.
    pub fn conj(&self) -> Self {
        let mut acc = Self::zero();
        for (k, coeff) in self.c.iter().enumerate() {
            let term = Self::zeta_pow(9 * k as i64).scale(coeff);
            acc = &acc + &term;
        }
        acc
    }

    /// Multiplies every coefficient by a rational.
    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new([
            &self.c[0] * r,
            &self.c[1] * r,
            &self.c[2] * r,
            &self.c[3] * r,
        ])
    }

    /// The image of a golden number under the ring homomorphism
    /// `phi -> zeta - zeta^4` (which equals `1 + zeta^2 - zeta^3`).
    ///
    /// Requires integral golden components.
    pub fn from_golden(x: &GoldenNumber) -> Result<Self, RingError> {
        if !x.is_integral() {
            return Err(RingError::NonIntegral(x.to_string()));
        }
        Ok(Self::from_golden_rational(x))
    }

    /// Same homomorphism extended to rational components (internal use; the
    /// strict integral entry point is [`CyclotomicNumber::from_golden`]).
    pub fn from_golden_rational(x: &GoldenNumber) -> Self {
        // phi -> 1 + zeta^2 - zeta^3.
        Self::new([
            &x.a + &x.b,
            BigRational::zero(),
            x.b.clone(),
            -x.b.clone(),
        ])
    }

    /// Reduction to `Z/5` by the ring homomorphism `zeta -> -1`
    /// (the quotient by the ideal generated by `zeta + 1` is `Z/5`).
    ///
    /// Requires integral coefficients.
    pub fn to_mod5(&self) -> Result<Mod5, RingError> {
        if !self.is_integral() {
            return Err(RingError::NonIntegral(self.to_string()));
        }
        let v = self.c[0].to_integer() - self.c[1].to_integer()
            + self.c[2].to_integer()
            - self.c[3].to_integer();
        Ok(Mod5::from_bigint(&v))
    }

    /// Interprets a value lying in the real subfield as a golden number.
    ///
    /// An element is real exactly when `c1 = 0` and `c2 = -c3`; it then
    /// equals `(c0 - c2) + c2 * phi`. Errors otherwise.
    pub fn to_golden(&self) -> Result<GoldenNumber, RingError> {
        if !self.c[1].is_zero() || !(&self.c[2] + &self.c[3]).is_zero() {
            return Err(RingError::NotReal(self.to_string()));
        }
        Ok(GoldenNumber::new(
            &self.c[0] - &self.c[2],
            self.c[2].clone(),
        ))
    }

    /// True when fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.c[1].is_zero() && (&self.c[2] + &self.c[3]).is_zero()
    }

    /// Exact multiplicative inverse, via the inverse in `Q(zeta)` computed
    /// from the conjugates `zeta -> zeta^3, zeta^7, zeta^9` (the other
    /// units of `Z/10`). Errors on zero.
    pub fn inverse(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByNonUnit);
        }
        // N = x * sigma_3(x) * sigma_7(x) * sigma_9(x) is the field norm,
        // a nonzero rational; x^{-1} = (product of the three conjugates)/N.
        let sigma = |k: i64| -> Self {
            let mut acc = Self::zero();
            for (j, coeff) in self.c.iter().enumerate() {
                acc = &acc + &Self::zeta_pow(k * j as i64).scale(coeff);
            }
            acc
        };
        let prod = &(&sigma(3) * &sigma(7)) * &sigma(9);
        let norm = self * &prod;
        debug_assert!(
            norm.c[1].is_zero() && norm.c[2].is_zero() && norm.c[3].is_zero(),
            "field norm must be rational"
        );
        if norm.c[0].is_zero() {
            return Err(RingError::DivisionByNonUnit);
        }
        Ok(prod.scale(&norm.c[0].recip()))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<Self, RingError> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Canonical JSON form: a 4-integer array. Errors if non-integral.
    pub fn to_json(&self) -> Result<serde_json::Value, RingError> {
        if !self.is_integral() {
            return Err(RingError::NonIntegral(self.to_string()));
        }
        Ok(serde_json::Value::Array(
            self.c
                .iter()
                .map(|x| bigint_to_json(&x.to_integer()))
                .collect(),
        ))
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "({coeff})*zeta")?,
                _ => write!(f, "({coeff})*zeta^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber({self})")
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber::new([
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        ])
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber::new([
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        ])
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        // Convolve into degrees 0..6, then reduce 6 -> 5 -> 4 using
        // zeta^6 = -zeta, zeta^5 = -1, zeta^4 = zeta^3 - zeta^2 + zeta - 1.
        let mut t: [BigRational; 7] = std::array::from_fn(|_| BigRational::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                t[i + j] = &t[i + j] + &self.c[i] * &rhs.c[j];
            }
        }
        let c6 = std::mem::take(&mut t[6]);
        t[1] = &t[1] - &c6;
        let c5 = std::mem::take(&mut t[5]);
        t[0] = &t[0] - &c5;
        let c4 = std::mem::take(&mut t[4]);
        t[3] = &t[3] + &c4;
        t[2] = &t[2] - &c4;
        t[1] = &t[1] + &c4;
        t[0] = &t[0] - &c4;
        CyclotomicNumber::new([
            std::mem::take(&mut t[0]),
            std::mem::take(&mut t[1]),
            std::mem::take(&mut t[2]),
            std::mem::take(&mut t[3]),
        ])
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber::new([
            -self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        ])
    }
}

macro_rules! forward_cyc_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(rhs)
            }
        }
        impl $trait<CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_cyc_binop!(Add, add);
forward_cyc_binop!(Sub, sub);
forward_cyc_binop!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomial_relations() {
        let z = CyclotomicNumber::zeta_pow(1);
        // zeta * zeta^4 = zeta^5 = -1.
        assert_eq!(
            &z * &CyclotomicNumber::zeta_pow(4),
            CyclotomicNumber::integer(-1)
        );
        // zeta^10 = 1.
        assert_eq!(z.pow(10).unwrap(), CyclotomicNumber::one());
        // Phi_10(zeta) = zeta^4 - zeta^3 + zeta^2 - zeta + 1 = 0.
        let phi10 = &(&(&CyclotomicNumber::zeta_pow(4)
            - &CyclotomicNumber::zeta_pow(3))
            + &CyclotomicNumber::zeta_pow(2))
            - &z
            + CyclotomicNumber::one();
        assert!(phi10.is_zero());
    }

    #[test]
    fn zeta_pow_table_consistent_with_multiplication() {
        let z = CyclotomicNumber::zeta_pow(1);
        let mut acc = CyclotomicNumber::one();
        for k in 0..21 {
            assert_eq!(acc, CyclotomicNumber::zeta_pow(k), "zeta^{k}");
            acc = &acc * &z;
        }
        assert_eq!(CyclotomicNumber::zeta_pow(-1), CyclotomicNumber::zeta_pow(9));
    }

    #[test]
    fn golden_embedding_is_a_homomorphism() {
        let phi = GoldenNumber::phi();
        let img = CyclotomicNumber::from_golden(&phi).unwrap();
        // phi -> zeta - zeta^4 = 1 + zeta^2 - zeta^3.
        assert_eq!(
            img,
            &CyclotomicNumber::zeta_pow(1) - &CyclotomicNumber::zeta_pow(4)
        );
        assert_eq!(img, CyclotomicNumber::from_ints(1, 0, 1, -1));
        // Image of phi^2 = image of phi + 1.
        let phi2 = &phi * &phi;
        assert_eq!(
            CyclotomicNumber::from_golden(&phi2).unwrap(),
            &img * &img
        );
        assert!(
            CyclotomicNumber::from_golden(&GoldenNumber::new(
                BigRational::new(1.into(), 2.into()),
                BigRational::zero()
            ))
            .is_err()
        );
    }

    #[test]
    fn mod5_reduction() {
        // Image of phi reduces to 3 mod 5; zeta + 1 reduces to 0.
        let img_phi =
            CyclotomicNumber::from_golden(&GoldenNumber::phi()).unwrap();
        assert_eq!(img_phi.to_mod5().unwrap(), Mod5::new(3));
        let gen = &CyclotomicNumber::zeta_pow(1) + &CyclotomicNumber::one();
        assert_eq!(gen.to_mod5().unwrap(), Mod5::new(0));
        let img_phi1 =
            CyclotomicNumber::from_golden(&GoldenNumber::phi_plus_1()).unwrap();
        assert_eq!(img_phi1.to_mod5().unwrap(), Mod5::new(4));
    }

    #[test]
    fn conjugation_and_real_subfield() {
        let x = CyclotomicNumber::from_ints(2, -1, 3, 5);
        let c = x.conj();
        // conj is an automorphism of order two.
        assert_eq!(c.conj(), x);
        let y = CyclotomicNumber::from_ints(-1, 2, 0, 7);
        assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        // x * conj(x) is real; its golden form is recoverable.
        let r = &x * &c;
        assert!(r.is_real());
        let g = r.to_golden().unwrap();
        assert_eq!(CyclotomicNumber::from_golden(&g).unwrap(), r);
        // The golden embedding lands in the real subfield.
        let img =
            CyclotomicNumber::from_golden(&GoldenNumber::from_ints(4, -7))
                .unwrap();
        assert_eq!(img.to_golden().unwrap(), GoldenNumber::from_ints(4, -7));
    }

    #[test]
    fn inverse() {
        let x = CyclotomicNumber::from_ints(2, -1, 0, 3);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, CyclotomicNumber::one());
        assert!(CyclotomicNumber::zero().inverse().is_err());
        // zeta is a unit with integral inverse zeta^9.
        let z_inv = CyclotomicNumber::zeta_pow(1).inverse().unwrap();
        assert_eq!(z_inv, CyclotomicNumber::zeta_pow(9));
    }
}
