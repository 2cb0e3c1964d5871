//! A tour of the exact arithmetic layer: the golden ring, the tenth
//! cyclotomic ring, residues mod 5, and integer polynomials.
//!
//! Run with: cargo run --example rings

use gpoly::rings::{CyclotomicNumber, GoldenNumber, IntPolynomial, Mod5};

fn main() {
    // ---- The golden ring: numbers a + b·φ with rational a, b. ----
    let phi = GoldenNumber::phi();
    let one = GoldenNumber::one();

    println!("φ               = {phi}");
    println!("φ²              = {}", &phi * &phi);
    assert_eq!(&phi * &phi, &phi + &one, "φ satisfies φ² = φ + 1");

    let inv = phi.inverse().expect("φ is a unit");
    println!("φ⁻¹             = {inv}");
    assert_eq!(inv, &phi - &one, "φ⁻¹ = φ - 1");

    println!("conjugate of φ  = {}", phi.conjugate());
    println!("norm of φ       = {}", phi.norm());
    println!("φ⁵              = {}", phi.pow(5).unwrap());
    println!("φ⁻⁵             = {}", phi.pow(-5).unwrap());

    // The two conjugate evaluation points used throughout the crate.
    let w = GoldenNumber::w_point();
    let z = GoldenNumber::z_point();
    println!("w = 2-φ         = {w}");
    println!("z = 3-φ         = {z}");
    assert_eq!(&z - &one, (&w - &one).pow(2).unwrap(), "z - 1 = (w - 1)²");
    assert!(w.gt(&GoldenNumber::zero()) && z.gt(&w), "0 < w < z");

    // ---- The tenth cyclotomic ring: Z[ζ], ζ a primitive 10th root. ----
    let zeta = CyclotomicNumber::zeta_pow(1);
    println!("\nζ               = {zeta}");
    println!("ζ²              = {}", CyclotomicNumber::zeta_pow(2));
    println!("ζ⁵              = {}", CyclotomicNumber::zeta_pow(5));
    assert_eq!(
        CyclotomicNumber::zeta_pow(5),
        -CyclotomicNumber::one(),
        "ζ⁵ = -1"
    );
    assert_eq!(zeta.pow(10).unwrap(), CyclotomicNumber::one(), "ζ¹⁰ = 1");

    // The golden ratio embeds as φ̂ = 1 + ζ² - ζ³ and keeps its identity.
    let phi_hat = CyclotomicNumber::from_golden(&phi).expect("φ is integral");
    println!("φ̂               = {phi_hat}");
    assert_eq!(
        &phi_hat * &phi_hat,
        &phi_hat + &CyclotomicNumber::one(),
        "φ̂² = φ̂ + 1"
    );
    assert!(phi_hat.is_real(), "φ̂ is fixed by conjugation");
    assert_eq!(
        phi_hat.to_golden().expect("φ̂ is real"),
        phi,
        "the embedding round-trips"
    );

    // ---- Residues mod 5. ----
    println!("\nresidues mod 5:");
    for v in 1..5 {
        let r = Mod5::new(v);
        println!("  {r}⁻¹ = {}", r.inverse().expect("nonzero residue"));
    }
    assert_eq!(Mod5::new(-7), Mod5::new(3), "negative values normalize");

    // ---- Integer polynomials in one variable Q. ----
    let p = IntPolynomial::from_roots(&[1, 2, 3]);
    println!("\n(Q-1)(Q-2)(Q-3) = {p}");
    assert_eq!(p.eval_i64(4), 6.into());
    assert_eq!(p.eval_i64(2), 0.into());

    let golden_value = p.eval_golden(&w);
    println!("same polynomial at Q = 2-φ: {golden_value}");

    let quotient = p
        .divide_exact(&IntPolynomial::from_i64s(&[-2, 1]))
        .expect("Q-2 divides");
    println!("divided by (Q-2): {quotient}");
    assert_eq!(quotient, IntPolynomial::from_roots(&[1, 3]));

    println!("\nall ring identities verified");
}
