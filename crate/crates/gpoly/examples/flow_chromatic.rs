//! Flow and chromatic polynomials of multigraphs, computed exactly by
//! contraction–deletion with memoization on canonical forms.
//!
//! Run with: cargo run --example flow_chromatic

use gpoly::flow::FlowEngine;
use gpoly::graph::gen;
use gpoly::rings::GoldenNumber;

fn main() {
    let engine = FlowEngine::new();

    println!("flow polynomials (ascending coefficients shown by Display):");
    let named = [
        ("theta", gen::theta()),
        ("dumbbell", gen::dumbbell()),
        ("K4", gen::k4()),
        ("K5", gen::k5()),
        ("K3,3", gen::k33()),
        ("cube", gen::cube()),
        ("octahedron", gen::octahedron()),
        ("Petersen", gen::petersen()),
    ];
    for (name, g) in &named {
        println!("  {name:<11} {}", engine.flow_polynomial(g));
    }

    // Counting evaluations: F(4) counts proper 3-edge-colorings of a
    // cubic graph, F(0) carries the 5-residue information.
    let petersen = gen::petersen();
    let f = engine.flow_polynomial(&petersen);
    println!("\nPetersen F(0) = {}", f.eval_i64(0));
    println!("Petersen F(4) = {}", f.eval_i64(4));
    assert_eq!(f.eval_i64(0), 240.into());
    assert_eq!(f.eval_i64(4), 0.into(), "the Petersen graph is a snark");

    let k4 = gen::k4();
    let f4 = engine.flow_polynomial(&k4);
    println!("K4 F(4)       = {} (its 3-edge-colorings)", f4.eval_i64(4));
    assert_eq!(f4.eval_i64(4), 6.into());

    // Golden evaluations at the two conjugate points.
    let w = GoldenNumber::w_point();
    let z = GoldenNumber::z_point();
    println!("K4 F(2-φ)     = {}", f4.eval_golden(&w));
    println!("K4 F(3-φ)     = {}", f4.eval_golden(&z));

    // Chromatic polynomials from the same engine.
    println!("\nchromatic polynomials:");
    for (name, g) in [("K4", &k4), ("cube", &gen::cube())] {
        println!("  {name:<5} {}", engine.chromatic_polynomial(g));
    }

    // Planar duality: the flow polynomial of the cube equals the chromatic
    // polynomial of its planar dual (the octahedron) divided by Q.
    let cube_flow = engine.flow_polynomial(&gen::cube());
    let octa_chromatic = engine.chromatic_polynomial(&gen::octahedron());
    let q = gpoly::rings::IntPolynomial::q();
    assert_eq!(
        &cube_flow * &q,
        octa_chromatic,
        "flow of the cube = chromatic of the octahedron / Q"
    );
    println!("\nduality: Q · F_cube = P_octahedron verified");

    println!(
        "memo after this run: {} flow entries, {} chromatic entries",
        engine.cached_flows(),
        engine.cached_chromatics()
    );
}
