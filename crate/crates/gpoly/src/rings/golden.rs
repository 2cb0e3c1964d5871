//! The golden ring: exact arithmetic in `Q(phi)` with `phi = (1+sqrt(5))/2`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, Signed, Zero};

use crate::error::RingError;
use crate::rings::{bigint_from_json, bigint_to_json};

/// An exact element `a + b*phi` of the real quadratic field `Q(phi)`,
/// `phi^2 = phi + 1`.
///
/// Components are rationals so that halves such as `phi/2` stay exact; most
/// values arising from polynomial evaluation are integral. `phi` is a unit
/// (`phi * (phi - 1) = 1`), and every nonzero element of the field is
/// invertible via its Galois norm.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNumber {
    /// Rational part.
    pub a: BigRational,
    /// Coefficient of `phi`.
    pub b: BigRational,
}

impl GoldenNumber {
    /// Builds `a + b*phi` from rational components.
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    /// Builds `a + b*phi` from integer components.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    /// The integer `n` as a golden number.
    pub fn integer(n: i64) -> Self {
        Self::from_ints(n, 0)
    }

    /// Builds from big-integer components.
    pub fn from_bigints(a: BigInt, b: BigInt) -> Self {
        Self::new(BigRational::from_integer(a), BigRational::from_integer(b))
    }

    /// Zero.
    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    /// One.
    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    /// The golden ratio `phi`.
    pub fn phi() -> Self {
        Self::from_ints(0, 1)
    }

    /// The evaluation point `w = 2 - phi = (3 - sqrt(5))/2`.
    pub fn w_point() -> Self {
        Self::from_ints(2, -1)
    }

    /// The evaluation point `z = 3 - phi = (5 - sqrt(5))/2`.
    pub fn z_point() -> Self {
        Self::from_ints(3, -1)
    }

    /// The evaluation point `phi + 1 = phi^2`.
    pub fn phi_plus_1() -> Self {
        Self::from_ints(1, 1)
    }

    /// The evaluation point `phi + 2`.
    pub fn phi_plus_2() -> Self {
        Self::from_ints(2, 1)
    }

    /// True when the value is zero.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when both components are integers.
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// The Galois conjugate `sqrt(5) -> -sqrt(5)`, i.e.
    /// `a + b*phi -> (a+b) - b*phi`. This is a ring automorphism of order 2.
    pub fn conjugate(&self) -> Self {
        Self::new(&self.a + &self.b, -self.b.clone())
    }

    /// The field norm `x * conj(x) = a^2 + a*b - b^2`, a rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact multiplicative inverse. Errors on zero.
    pub fn inverse(&self) -> Result<Self, RingError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(RingError::DivisionByNonUnit);
        }
        let c = self.conjugate();
        Ok(Self::new(c.a / &n, c.b / &n))
    }

    /// Exact division. Errors when `rhs` is zero.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self, RingError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power; negative exponents invert first (error on zero base).
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

    /// Exact sign of the real embedding `a + b*(1+sqrt(5))/2`:
    /// returns -1, 0, or +1.
    ///
    /// Writing the value as `(p + r*sqrt(5))/2` with `p = 2a + b`, `r = b`,
    /// the sign follows from the signs of `p` and `r` and, when they differ,
    /// from comparing `p^2` against `5 r^2` — integer arithmetic only.
    pub fn sign(&self) -> i8 {
        let two = BigRational::from_integer(2.into());
        let p = &self.a * &two + &self.b;
        let r = &self.b;
        let sp = rational_sign(&p);
        let sr = rational_sign(r);
        match (sp, sr) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // p > 0, r < 0: sign of p^2 - 5 r^2.
            (1, -1) => rational_sign(&(&p * &p - BigRational::from_integer(5.into()) * r * r)),
            // p < 0, r > 0: sign of 5 r^2 - p^2.
            (-1, 1) => rational_sign(&(BigRational::from_integer(5.into()) * r * r - &p * &p)),
            _ => unreachable!("rational_sign returns -1, 0, or 1"),
        }
    }

    /// `true` when `self > rhs` in the real embedding.
    pub fn gt(&self, rhs: &Self) -> bool {
        (self - rhs).sign() > 0
    }

    /// `true` when `self >= rhs` in the real embedding.
    pub fn ge(&self, rhs: &Self) -> bool {
        (self - rhs).sign() >= 0
    }

    /// Canonical JSON form `{"a":[num,den],"b":[num,den]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let pair = |r: &BigRational| {
            serde_json::Value::Array(vec![
                bigint_to_json(r.numer()),
                bigint_to_json(r.denom()),
            ])
        };
        serde_json::json!({ "a": pair(&self.a), "b": pair(&self.b) })
    }

    /// Parses the canonical JSON form.
    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let pair = |v: &serde_json::Value| -> Option<BigRational> {
            let arr = v.as_array()?;
            if arr.len() != 2 {
                return None;
            }
            let num = bigint_from_json(&arr[0])?;
            let den = bigint_from_json(&arr[1])?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        };
        Some(Self::new(pair(v.get("a")?)?, pair(v.get("b")?)?))
    }
}

fn rational_sign(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*phi", self.b);
        }
        if self.b.is_positive() {
            write!(f, "{} + {}*phi", self.a, self.b)
        } else {
            write!(f, "{} - {}*phi", self.a, -self.b.clone())
        }
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNumber({self})")
    }
}

impl Add for &GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi.
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad_bc = &self.a * &rhs.b + &self.b * &rhs.a;
        GoldenNumber::new(ac + &bd, ad_bc + bd)
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_golden_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: &GoldenNumber) -> GoldenNumber {
                (&self).$method(rhs)
            }
        }
        impl $trait<GoldenNumber> for &GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_golden_binop!(Add, add);
forward_golden_binop!(Sub, sub);
forward_golden_binop!(Mul, mul);

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        -&self
    }
}

impl AddAssign<&GoldenNumber> for GoldenNumber {
    fn add_assign(&mut self, rhs: &GoldenNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GoldenNumber> for GoldenNumber {
    fn sub_assign(&mut self, rhs: &GoldenNumber) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&GoldenNumber> for GoldenNumber {
    fn mul_assign(&mut self, rhs: &GoldenNumber) {
        *self = &*self * rhs;
    }
}

impl From<i64> for GoldenNumber {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi() -> GoldenNumber {
        GoldenNumber::phi()
    }

    #[test]
    fn defining_relation() {
        // phi^2 = phi + 1, phi^{-1} = phi - 1, phi^3 = 2 phi + 1.
        assert_eq!(&phi() * &phi(), GoldenNumber::from_ints(1, 1));
        assert_eq!(phi().pow(-1).unwrap(), GoldenNumber::from_ints(-1, 1));
        assert_eq!(phi().pow(3).unwrap(), GoldenNumber::from_ints(1, 2));
        assert_eq!(
            &phi() * &GoldenNumber::from_ints(-1, 1),
            GoldenNumber::one()
        );
    }

    #[test]
    fn named_points_multiply() {
        // (2 - phi)(3 - phi) = 7 - 4 phi.
        let prod = &GoldenNumber::w_point() * &GoldenNumber::z_point();
        assert_eq!(prod, GoldenNumber::from_ints(7, -4));
    }

    #[test]
    fn conjugation_is_an_involution_and_automorphism() {
        let x = GoldenNumber::from_ints(3, -5);
        let y = GoldenNumber::from_ints(-2, 7);
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(
            (&x * &y).conjugate(),
            &x.conjugate() * &y.conjugate()
        );
        assert_eq!(
            (&x + &y).conjugate(),
            &x.conjugate() + &y.conjugate()
        );
        // conj(phi) = 1 - phi; conj(phi+1) = 2 - phi = w; conj(phi+2) = z.
        assert_eq!(phi().conjugate(), GoldenNumber::from_ints(1, -1));
        assert_eq!(
            GoldenNumber::phi_plus_1().conjugate(),
            GoldenNumber::w_point()
        );
        assert_eq!(
            GoldenNumber::phi_plus_2().conjugate(),
            GoldenNumber::z_point()
        );
    }

    #[test]
    fn exact_sign() {
        assert_eq!(GoldenNumber::from_ints(1, -1).sign(), -1); // 1 - phi < 0
        assert_eq!(GoldenNumber::zero().sign(), 0);
        assert_eq!(GoldenNumber::from_ints(5, -3).sign(), 1); // 5 - 3 phi > 0
        assert_eq!(GoldenNumber::from_ints(-5, 3).sign(), -1);
        assert_eq!(GoldenNumber::from_ints(8, -5).sign(), -1); // 8 - 5 phi = -0.09...
        assert_eq!(GoldenNumber::from_ints(-8, 5).sign(), 1);
        // Rational constants keep their rational sign.
        assert_eq!(GoldenNumber::from_ints(7, 0).sign(), 1);
        assert_eq!(GoldenNumber::from_ints(-7, 0).sign(), -1);
    }

    #[test]
    fn inverse_of_generic_element() {
        let x = GoldenNumber::from_ints(3, 4);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, GoldenNumber::one());
        assert!(GoldenNumber::zero().inverse().is_err());
    }

    #[test]
    fn negative_powers_of_phi() {
        // phi^{-2} = 2 - phi = w.
        assert_eq!(phi().pow(-2).unwrap(), GoldenNumber::w_point());
        // (-phi)^{-2} = w as well; (-phi)^{-3} = -(phi^{-3}) = 3 - 2 phi.
        let neg_phi = -phi();
        assert_eq!(neg_phi.pow(-2).unwrap(), GoldenNumber::w_point());
        assert_eq!(neg_phi.pow(-3).unwrap(), GoldenNumber::from_ints(3, -2));
    }

    #[test]
    fn json_round_trip() {
        let x = GoldenNumber::new(
            BigRational::new(7.into(), 2.into()),
            BigRational::new((-1).into(), 3.into()),
        );
        let v = x.to_json();
        assert_eq!(GoldenNumber::from_json(&v).unwrap(), x);
    }
}
