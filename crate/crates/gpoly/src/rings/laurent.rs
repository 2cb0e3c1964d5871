//! Integer-coefficient Laurent polynomials in the variable `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Signed, Zero};

use crate::rings::{bigint_from_json, bigint_to_json, CyclotomicNumber, IntPolynomial};

/// A Laurent polynomial in `q`: a map from (possibly negative) exponents to
/// nonzero arbitrary-precision coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The constant `c`.
    pub fn constant(c: i64) -> Self {
        Self::monomial(0, BigInt::from(c))
    }

    /// The monomial `c * q^e`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        Self { coeffs: m }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, BigInt::one())
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, BigInt::one())
    }

    /// The loop value `q + 1 + q^{-1}`.
    pub fn circle() -> Self {
        &(&Self::q() + &Self::one()) + &Self::q_pow(-1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterates `(exponent, coefficient)` pairs in increasing exponent
    /// order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    /// The coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonnegative integer power.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one();
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// Exact evaluation at `q = zeta^k` (`zeta = e^{i*pi/5}`), for any
    /// integer `k`.
    pub fn eval_at_zeta(&self, k: i64) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::zero();
        for (e, c) in &self.coeffs {
            let term = CyclotomicNumber::zeta_pow(k * e)
                .scale(&num::BigRational::from_integer(c.clone()));
            acc = &acc + &term;
        }
        acc
    }

    /// Exact evaluation at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact evaluation at `q = -1`.
    pub fn eval_at_neg_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Exact evaluation at a nonzero rational `q`.
    ///
    /// Panics on `x == 0`: a Laurent polynomial has no value there.
    pub fn eval_rational(&self, x: &num::BigRational) -> num::BigRational {
        assert!(!x.is_zero(), "Laurent polynomials cannot be evaluated at 0");
        let mut acc = num::BigRational::zero();
        for (&e, c) in &self.coeffs {
            let p = if e >= 0 {
                num::pow::pow(x.clone(), e as usize)
            } else {
                num::pow::pow(x.clone(), (-e) as usize).recip()
            };
            acc += p * num::BigRational::from_integer(c.clone());
        }
        acc
    }

    /// The substitution `Q -> q + 2 + q^{-1}` applied to an integer
    /// polynomial in `Q`, yielding a Laurent polynomial in `q`.
    pub fn substitute_q_shift(f: &IntPolynomial) -> Self {
        let base = &(&Self::q() + &Self::constant(2)) + &Self::q_pow(-1);
        let mut acc = Self::zero();
        let mut power = Self::one();
        for c in f.coeffs() {
            acc = &acc + &power.scale(c);
            power = &power * &base;
        }
        acc
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, v)| (*e, v * c))
                .collect(),
        }
    }

    /// The image under `q -> q^{-1}`: every exponent is negated.
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (-e, v.clone())).collect(),
        }
    }

    /// Canonical JSON form: a map from exponent (as a string key) to
    /// coefficient.
    pub fn to_json(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (e, c) in &self.coeffs {
            m.insert(e.to_string(), bigint_to_json(c));
        }
        serde_json::Value::Object(m)
    }

    /// Parses the canonical JSON form.
    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let obj = v.as_object()?;
        let mut coeffs = BTreeMap::new();
        for (k, val) in obj {
            let e: i64 = k.parse().ok()?;
            let c = bigint_from_json(val)?;
            if !c.is_zero() {
                coeffs.insert(e, c);
            }
        }
        Some(Self { coeffs })
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = out.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(e);
            }
        }
        LaurentPolynomial { coeffs: out }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = out.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                out.remove(e);
            }
        }
        LaurentPolynomial { coeffs: out }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let entry = out.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPolynomial { coeffs: out }
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_laurent_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_laurent_binop!(Add, add);
forward_laurent_binop!(Sub, sub);
forward_laurent_binop!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "q")?,
                1 => write!(f, "{mag}*q")?,
                _ if mag.is_one() => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::GoldenNumber;

    #[test]
    fn circle_value_at_roots_of_unity() {
        let circle = LaurentPolynomial::circle();
        // At q = zeta: zeta + 1 + zeta^9 = 1 + phi (embedded).
        let at_zeta = circle.eval_at_zeta(1);
        let phi1 = CyclotomicNumber::from_golden(&GoldenNumber::phi_plus_1()).unwrap();
        assert_eq!(at_zeta, phi1);
        // At q = zeta^5 = -1: -1 + 1 - 1 = -1.
        assert_eq!(circle.eval_at_zeta(5), CyclotomicNumber::integer(-1));
        assert_eq!(circle.eval_at_neg_one(), BigInt::from(-1));
        assert_eq!(circle.eval_at_one(), BigInt::from(3));
        // q at k = 5 evaluates to -1.
        assert_eq!(
            LaurentPolynomial::q().eval_at_zeta(5),
            CyclotomicNumber::integer(-1)
        );
    }

    #[test]
    fn multiplication_and_negative_exponents() {
        let p = &LaurentPolynomial::q() + &LaurentPolynomial::q_pow(-1);
        let sq = &p * &p;
        assert_eq!(sq.coeff(2), BigInt::one());
        assert_eq!(sq.coeff(0), BigInt::from(2));
        assert_eq!(sq.coeff(-2), BigInt::one());
        assert_eq!(sq.coeff(1), BigInt::zero());
    }

    #[test]
    fn substitution_matches_integer_evaluation() {
        // F(Q) = (Q-1)(Q-2); under Q = q + 2 + 1/q at q = 3 this is F(3 + 2 + 1/3)
        // only for integers q where Q is an integer; instead check at q = 1
        // (Q = 4) and q = -1 (Q = 0).
        let f = IntPolynomial::from_roots(&[1, 2]);
        let r = LaurentPolynomial::substitute_q_shift(&f);
        assert_eq!(r.eval_at_one(), f.eval_i64(4));
        assert_eq!(r.eval_at_neg_one(), f.eval_i64(0));
    }

    #[test]
    fn json_round_trip() {
        let p = &LaurentPolynomial::monomial(-3, BigInt::from(7))
            + &LaurentPolynomial::monomial(2, BigInt::from(-1));
        let v = p.to_json();
        assert_eq!(LaurentPolynomial::from_json(&v).unwrap(), p);
    }
}
