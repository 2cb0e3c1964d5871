//! Snarks: cubic bridgeless graphs with no proper 3-edge-coloring, and
//! the divisibility facts their flow polynomials must satisfy.
//!
//! Run with: cargo run --example snarks

use gpoly::diagram::fixtures;
use gpoly::flow::FlowEngine;
use gpoly::graph::gen;
use gpoly::identities::{is_snark, three_edge_colorings, IdentityChecker};
use gpoly::rings::IntPolynomial;

fn main() {
    // Which of the named cubic graphs are snarks?
    println!("snark verdicts:");
    let named = [
        ("theta", gen::theta()),
        ("K4", gen::k4()),
        ("K3,3", gen::k33()),
        ("cube", gen::cube()),
        ("Petersen", gen::petersen()),
        ("flower snark J5", gen::flower_snark_j5()),
    ];
    for (name, g) in &named {
        println!(
            "  {name:<16} snark: {:<5} 3-edge-colorings: {}",
            is_snark(g),
            three_edge_colorings(g)
        );
    }
    assert!(is_snark(&gen::petersen()));
    assert!(is_snark(&gen::flower_snark_j5()));
    assert!(!is_snark(&gen::k4()));

    // Edge-coloring counts agree with the flow value at 4 on every cubic
    // graph, snark or not.
    let engine = FlowEngine::new();
    for (name, g) in &named {
        if g.is_cubic() {
            let f4 = engine.flow_polynomial(g).eval_i64(4);
            assert_eq!(
                f4,
                three_edge_colorings(g).into(),
                "coloring count disagrees with F(4) on {name}"
            );
        }
    }
    println!("\nF(4) equals the 3-edge-coloring count on every cubic graph above");

    // The full snark suite: F(0) divisible by 5 and by 120, the flow
    // polynomial divisible by (Q-1)(Q-2)(Q-3)(Q-4), no 3-edge-coloring,
    // and — when a diagram is supplied — a vanishing signed coloring count.
    let checker = IdentityChecker::new();
    let report = checker
        .snark_checks(&gen::petersen(), Some(&fixtures::petersen_diagram()))
        .expect("the Petersen graph is a snark");
    println!("\nPetersen suite:\n{report}");
    assert!(report.passed());

    let report = checker
        .snark_checks(&gen::flower_snark_j5(), None)
        .expect("the flower snark is a snark");
    println!("flower snark J5 suite:\n{report}");
    assert!(report.passed());

    // The divisibility is visible in the factored values.
    let f = engine.flow_polynomial(&gen::petersen());
    println!("Petersen flow polynomial: {f}");
    println!("F(0) = {} = 2 · 120", f.eval_i64(0));
    let quotient = f
        .divide_exact(&IntPolynomial::from_roots(&[1, 2, 3, 4]))
        .expect("the four linear factors divide");
    println!("after removing (Q-1)(Q-2)(Q-3)(Q-4): {quotient}");
}
