//! The golden and mod-5 identities tying flow polynomials of cubic graphs
//! to Yamada polynomials of their diagrams.
//!
//! Run with: cargo run --example golden_identities

use gpoly::diagram::fixtures;
use gpoly::graph::{gen, planar_embedding};
use gpoly::identities::IdentityChecker;

fn main() {
    let checker = IdentityChecker::new();

    // The planar identity: for a planar cubic bridgeless graph, the flow
    // value at φ+2 is a scaled square of the value at φ+1, and the values
    // at the conjugate pair 3-φ, 2-φ satisfy the mirror statement. The
    // checker demands a crossing-free diagram of the graph as a planarity
    // witness.
    for (name, g) in [("theta", gen::theta()), ("K4", gen::k4())] {
        let witness = fixtures::flat(&g).expect("planar graph");
        let report = checker
            .check_golden_planar(&g, &witness)
            .expect("preconditions hold");
        println!("{name}:\n{report}");
        assert!(report.passed());
    }

    // The same identity across a generated corpus.
    let corpus: Vec<_> = gen::loopfree_cubic_multigraphs(10)
        .into_values()
        .flatten()
        .filter(|g| !g.has_bridge() && planar_embedding(g).is_some())
        .collect();
    let mut checked = 0;
    for g in &corpus {
        let witness = fixtures::flat(g).expect("planar graph");
        assert!(checker.check_golden_planar(g, &witness).unwrap().passed());
        checked += 1;
    }
    println!("golden identity verified on {checked} planar cubic graphs\n");

    // The spatial generalization: for any diagram with vertex degrees 2
    // and 3, the Yamada value at ζ is a signed power of φ̂ times the
    // square of the value at ζ⁸ — no planarity needed.
    for (name, d) in [
        ("trefoil", fixtures::trefoil()),
        ("knotted theta", fixtures::knotted_theta()),
        ("K3,3 one crossing", fixtures::k33_one_crossing()),
        ("Petersen diagram", fixtures::petersen_diagram()),
    ] {
        let report = checker.check_golden_yamada(&d).expect("valid diagram");
        println!("{name}:\n{report}");
        assert!(report.passed());
    }

    // Mod-5 congruences: the residue of F(0) is tied to the square of
    // F(4), and for diagrams the Yamada values at -1 and 1 obey the same
    // relation with an exact integer refinement.
    let theta = gen::theta();
    let report = checker.check_mod5_planar(&theta).unwrap();
    println!("theta mod 5:\n{report}");
    assert!(report.passed());

    let d = fixtures::petersen_diagram();
    let report = checker.check_mod5_diagram(&d).unwrap();
    println!("Petersen diagram mod 5:\n{report}");
    assert!(report.passed());

    // The residue scan: which residues F(0) mod 5 takes is governed by
    // the parity of half the vertex count.
    let corpus: Vec<_> = gen::simple_cubic_graphs(12).into_values().flatten().collect();
    let scan = checker.residue_scan(&corpus);
    println!(
        "residues of F(0) mod 5 over {} simple cubic graphs: {:?}",
        corpus.len(),
        scan.counts
    );
    assert!(scan.report.passed());
    assert_eq!(scan.counts.iter().sum::<usize>(), corpus.len() - scan.skipped);
    println!("residue classes match the vertex parity rule");
}
