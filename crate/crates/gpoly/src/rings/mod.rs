//! Exact number rings and polynomial containers.
//!
//! Everything downstream evaluates polynomials in one of four rings:
//!
//! * [`GoldenNumber`] — `a + b*phi` with rational `a`, `b` and
//!   `phi = (1+sqrt(5))/2`, used for the golden evaluation points
//!   `w = 2-phi`, `z = 3-phi`, `phi+1`, `phi+2`;
//! * [`CyclotomicNumber`] — `Z[zeta]` with `zeta = e^{i*pi/5}` reduced by
//!   `zeta^4 - zeta^3 + zeta^2 - zeta + 1`, used for Laurent evaluations at
//!   tenth roots of unity;
//! * [`Mod5`] — the field `Z/5`, the target of the congruence checks;
//! * arbitrary-precision integers, housed in [`IntPolynomial`] (variable `Q`)
//!   and [`LaurentPolynomial`] (variable `q`, negative exponents allowed).
//!
//! All arithmetic is exact; sign questions about golden numbers are decided
//! by integer comparisons, never floating point.

pub mod cyclotomic;
pub mod golden;
pub mod interp;
pub mod intpoly;
pub mod laurent;
pub mod residue;

pub use cyclotomic::CyclotomicNumber;
pub use golden::GoldenNumber;
pub use interp::lagrange_interpolate;
pub use intpoly::IntPolynomial;
pub use laurent::LaurentPolynomial;
pub use residue::Mod5;

use num::BigInt;

/// Renders an arbitrary-precision integer as a JSON number (the crate
/// enables `serde_json`'s arbitrary-precision support, so no digits are
/// lost).
pub(crate) fn bigint_to_json(n: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        serde_json::Number::from_string_unchecked(n.to_string()),
    )
}

/// Parses an arbitrary-precision integer back out of a JSON number.
pub(crate) fn bigint_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.to_string().parse().ok(),
        _ => None,
    }
}
