//! Exact Lagrange interpolation for integer-valued polynomial data.

use num::{BigInt, BigRational, One, Zero};

use crate::error::RingError;
use crate::rings::IntPolynomial;

/// Reconstructs the unique integer polynomial of degree at most
/// `degree_bound` passing through the given sample points, which must have
/// pairwise distinct abscissas.
///
/// The first `degree_bound + 1` samples determine the candidate via exact
/// rational Lagrange interpolation; the call fails if the resulting
/// coefficients are not integers, or if any remaining sample disagrees with
/// the candidate.
pub fn lagrange_interpolate(
    samples: &[(i64, BigInt)],
    degree_bound: usize,
) -> Result<IntPolynomial, RingError> {
    let needed = degree_bound + 1;
    if samples.len() < needed {
        return Err(RingError::Interpolation(format!(
            "need {needed} samples for degree bound {degree_bound}, got {}",
            samples.len()
        )));
    }
    let base = &samples[..needed];
    for (i, (x, _)) in base.iter().enumerate() {
        if base[..i].iter().any(|(y, _)| y == x) {
            return Err(RingError::Interpolation(format!(
                "duplicate abscissa {x}"
            )));
        }
    }

    // Accumulate sum_i y_i * prod_{j != i} (Q - x_j) / (x_i - x_j) with
    // rational coefficients, least-degree first.
    let mut acc = vec![BigRational::zero(); needed];
    for (i, (xi, yi)) in base.iter().enumerate() {
        // Numerator polynomial prod_{j != i} (Q - x_j).
        let mut num = vec![BigRational::zero(); needed];
        num[0] = BigRational::one();
        let mut deg = 0;
        let mut denom = BigRational::one();
        for (j, (xj, _)) in base.iter().enumerate() {
            if j == i {
                continue;
            }
            let root = BigRational::from_integer(BigInt::from(*xj));
            for k in (0..=deg).rev() {
                let high = num[k].clone();
                num[k + 1] += &high;
                num[k] = -(&root * &high);
                // Shift: multiply by (Q - xj) means new[k+1] += old[k],
                // new[k] = -xj * old[k]; handled by the two lines above
                // because we walk k downward.
            }
            deg += 1;
            denom *= BigRational::from_integer(BigInt::from(xi - xj));
        }
        let weight = BigRational::from_integer(yi.clone()) / denom;
        for (a, n) in acc.iter_mut().zip(num.iter()) {
            *a += &weight * n;
        }
    }

    let mut int_coeffs = Vec::with_capacity(needed);
    for c in &acc {
        if !c.is_integer() {
            return Err(RingError::Interpolation(format!(
                "non-integer coefficient {c}"
            )));
        }
        int_coeffs.push(c.to_integer());
    }
    let poly = IntPolynomial::from_coeffs(int_coeffs);

    for (x, y) in &samples[needed..] {
        let got = poly.eval_i64(*x);
        if got != *y {
            return Err(RingError::Interpolation(format!(
                "consistency check failed at {x}: interpolant gives {got}, sample says {y}"
            )));
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;
    use rand::{Rng, SeedableRng};

    fn pts(data: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
        data.iter().map(|(x, y)| (*x, BigInt::from(*y))).collect()
    }

    #[test]
    fn quadratic_through_counting_data() {
        // Counts 0, 2, 6 at 2, 3, 4 come from (Q-1)(Q-2).
        let poly = lagrange_interpolate(&pts(&[(2, 0), (3, 2), (4, 6)]), 2).unwrap();
        assert_eq!(poly, IntPolynomial::from_roots(&[1, 2]));
    }

    #[test]
    fn constants_and_lines() {
        let c = lagrange_interpolate(&pts(&[(5, 7)]), 0).unwrap();
        assert_eq!(c, IntPolynomial::constant_i64(7));
        let line = lagrange_interpolate(&pts(&[(0, -3), (2, 1)]), 1).unwrap();
        assert_eq!(line, IntPolynomial::from_i64s(&[-3, 2]));
    }

    #[test]
    fn extra_samples_must_agree() {
        let ok = lagrange_interpolate(&pts(&[(2, 0), (3, 2), (4, 6), (5, 12)]), 2);
        assert!(ok.is_ok());
        let bad = lagrange_interpolate(&pts(&[(2, 0), (3, 2), (4, 6), (5, 13)]), 2);
        assert!(bad.is_err());
    }

    #[test]
    fn duplicate_abscissa_rejected() {
        assert!(lagrange_interpolate(&pts(&[(1, 1), (1, 2)]), 1).is_err());
    }

    #[test]
    fn round_trip_random_polynomials() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let deg = rng.gen_range(0..=6usize);
            let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-10..=10)).collect();
            let poly = IntPolynomial::from_i64s(&coeffs);
            let samples: Vec<(i64, BigInt)> =
                (0..=(deg as i64 + 2)).map(|x| (x, poly.eval_i64(x))).collect();
            let bound = poly.degree().map(|d| d.to_usize().unwrap()).unwrap_or(0).max(deg);
            let back = lagrange_interpolate(&samples, bound).unwrap();
            assert_eq!(back, poly);
        }
    }
}
