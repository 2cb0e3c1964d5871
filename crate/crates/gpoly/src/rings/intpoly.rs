//! Integer-coefficient polynomials in the variable `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::rings::{bigint_from_json, bigint_to_json, GoldenNumber, Mod5};

/// A polynomial in `Q` with arbitrary-precision integer coefficients,
/// stored dense (index = degree). The highest-degree stored coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// A constant polynomial from a machine integer.
    pub fn constant_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// The variable `Q`.
    pub fn q() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `Q + c`.
    pub fn q_plus(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c), BigInt::one()])
    }

    /// Builds from a coefficient vector (index = degree), trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from machine-integer coefficients (index = degree).
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The product `(Q - r0)(Q - r1)...` over the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        let mut acc = Self::one();
        for &r in roots {
            acc = &acc * &Self::q_plus(-r);
        }
        acc
    }

    /// Coefficient view (index = degree; highest is nonzero unless empty).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `Q^k` (zero when beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact evaluation at an integer.
    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a machine integer.
    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval_bigint(&BigInt::from(x))
    }

    /// Exact evaluation at a golden number (Horner).
    pub fn eval_golden(&self, x: &GoldenNumber) -> GoldenNumber {
        let mut acc = GoldenNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &GoldenNumber::from_bigints(c.clone(), BigInt::zero());
        }
        acc
    }

    /// Exact evaluation at a rational.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluation in `Z/5`.
    pub fn eval_mod5(&self, x: Mod5) -> Mod5 {
        let mut acc = Mod5::new(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Mod5::from_bigint(c);
        }
        acc
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

    /// Exact polynomial division: returns `self / divisor` when the
    /// division leaves no remainder over the integers, `None` otherwise.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.degree().expect("divisor nonzero");
        let nd = self.degree().expect("dividend nonzero");
        if nd < dd {
            return None;
        }
        let lead = divisor.coeffs.last().expect("divisor nonzero").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % &lead) != BigInt::zero() {
                return None;
            }
            let q = &top / &lead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let delta = dc * &q;
                rem[k + i] -= delta;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Canonical JSON form: the coefficient array (index = degree).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(bigint_to_json).collect())
    }

    /// Parses the canonical JSON form.
    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let arr = v.as_array()?;
        let coeffs: Option<Vec<BigInt>> = arr.iter().map(bigint_from_json).collect();
        Some(Self::from_coeffs(coeffs?))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = BigInt::zero();
            if let Some(a) = self.coeffs.get(i) {
                c += a;
            }
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            out.push(c);
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = BigInt::zero();
            if let Some(a) = self.coeffs.get(i) {
                c += a;
            }
            if let Some(b) = rhs.coeffs.get(i) {
                c -= b;
            }
            out.push(c);
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag.is_one() {
                        write!(f, "Q")?;
                    } else {
                        write!(f, "{mag}*Q")?;
                    }
                }
                _ => {
                    if mag.is_one() {
                        write!(f, "Q^{k}")?;
                    } else {
                        write!(f, "{mag}*Q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = IntPolynomial::from_roots(&[1, 2]); // (Q-1)(Q-2) = Q^2 - 3Q + 2
        assert_eq!(p, IntPolynomial::from_i64s(&[2, -3, 1]));
        assert_eq!(p.to_string(), "Q^2 - 3*Q + 2");
        assert_eq!(p.eval_i64(4), BigInt::from(6));
        let q = IntPolynomial::q();
        assert_eq!((&p * &q).degree(), Some(3));
        assert_eq!(&p - &p, IntPolynomial::zero());
    }

    #[test]
    fn golden_evaluation() {
        // (Q-1)(Q-2) at phi+1 is phi * (phi-1) = 1.
        let p = IntPolynomial::from_roots(&[1, 2]);
        assert_eq!(
            p.eval_golden(&GoldenNumber::phi_plus_1()),
            GoldenNumber::one()
        );
        // At phi+2: (phi+1) * phi = 2 phi + 1.
        assert_eq!(
            p.eval_golden(&GoldenNumber::phi_plus_2()),
            GoldenNumber::from_ints(1, 2)
        );
        assert_eq!(
            IntPolynomial::zero().eval_golden(&GoldenNumber::phi()),
            GoldenNumber::zero()
        );
    }

    #[test]
    fn exact_division() {
        let f = IntPolynomial::from_roots(&[1, 2, 3, 4]);
        let d = IntPolynomial::from_roots(&[2, 4]);
        let q = f.divide_exact(&d).unwrap();
        assert_eq!(q, IntPolynomial::from_roots(&[1, 3]));
        assert!(f.divide_exact(&IntPolynomial::from_roots(&[5])).is_none());
        // Non-monic divisor dividing exactly.
        let two_qm1 = &IntPolynomial::constant_i64(2) * &IntPolynomial::from_roots(&[1]);
        let prod = &two_qm1 * &d;
        assert_eq!(prod.divide_exact(&two_qm1).unwrap(), d);
    }

    #[test]
    fn mod5_evaluation() {
        let p = IntPolynomial::from_i64s(&[7, -3, 1]);
        // 7 - 3*2 + 4 = 5 = 0 mod 5.
        assert_eq!(p.eval_mod5(Mod5::new(2)), Mod5::new(0));
    }

    #[test]
    fn json_round_trip() {
        let p = IntPolynomial::from_i64s(&[0, -7, 0, 3]);
        let v = p.to_json();
        assert_eq!(IntPolynomial::from_json(&v).unwrap(), p);
        assert_eq!(IntPolynomial::from_json(&IntPolynomial::zero().to_json()).unwrap(), IntPolynomial::zero());
    }
}
