//! Marked disks, the chromatic expansion of a single-crossing closure,
//! and the inequalities separating planar from nonplanar closures.
//!
//! Run with: cargo run --example near_planar

use gpoly::disk::MarkedDisk;
use gpoly::identities::{GoldenVariant, IdentityChecker};
use gpoly::nearplanar::{
    disk_k33_diagram, gram_determinant, gram_matrix_c2, marked_disk_from_diagram, random_disks,
    DiskExpander, NearPlanarChecker,
};
use gpoly::rings::GoldenNumber;

fn main() {
    // A marked disk is a graph with four legs on its boundary. Capping
    // the legs in the two planar ways and with the crossing produces
    // three closures; their flow polynomials are the disk's coordinates.
    let expander = DiskExpander::new();
    let disk = MarkedDisk::h_graph();
    let v = expander.expand(&disk).expect("well-formed disk");
    println!("coordinates of the horizontal-bar disk:");
    println!("  alpha = {}", v.alpha);
    println!("  beta  = {}", v.beta);
    println!("  gamma = {}", v.gamma);

    // The crossing closure of any disk expands over the two planar
    // closures: an exact polynomial identity.
    let checker = NearPlanarChecker::new();
    let mut disks = vec![
        MarkedDisk::pairing_p0(),
        MarkedDisk::i_graph(),
        MarkedDisk::h_graph(),
        marked_disk_from_diagram(&disk_k33_diagram()).expect("drawable disk"),
    ];
    disks.extend(random_disks(5, 6, 3));
    for disk in &disks {
        let (_, report) = checker.near_planar_flow(disk).expect("well-formed disk");
        assert!(report.passed());
    }
    println!(
        "\ncrossing-closure expansion verified on {} disks",
        disks.len()
    );

    // The pairing matrix of the three basic caps, and its determinant:
    // the golden points are exactly its roots in (0, 4).
    let gram = gram_matrix_c2(checker.flow());
    let det = gram_determinant(&gram);
    println!("\npairing determinant: {det}");
    let w = GoldenNumber::w_point();
    assert!(det.eval_golden(&w).is_zero(), "2-φ is a root");
    assert!(
        det.eval_golden(&GoldenNumber::phi_plus_1()).is_zero(),
        "φ+1 is a root"
    );

    // At those points the pairing degenerates, and one planar closure
    // becomes a golden-linear combination of the other two.
    let identity_checker = IdentityChecker::new();
    let completions = vec![
        MarkedDisk::pairing_p0(),
        MarkedDisk::pairing_p1(),
        MarkedDisk::star(),
        MarkedDisk::i_graph(),
        MarkedDisk::h_graph(),
    ];
    for variant in [GoldenVariant::PhiPlus1, GoldenVariant::TwoMinusPhi] {
        let report = identity_checker.check_linear_relation(variant, &completions);
        assert!(report.passed());
        println!("linear relation at {variant} holds against {} completions", completions.len());
    }

    // Growing a disk family by peripheral edges: the gap between the
    // crossing closure and its planar expansion changes sign exactly when
    // the closure stops being planar.
    println!("\nfamily of disks (seed T, then alternating peripheral edges):");
    println!("  member  eff.edges  planar  sign  gap at 2-φ");
    let family = MarkedDisk::family_from_moves("T;P1;P3;P2;P4;P1").expect("valid moves");
    for (k, member) in family.iter().enumerate() {
        let closure = member.glue(&MarkedDisk::pairing_x());
        let verdict = checker.inequality_check(&closure.graph).expect("cubic closure");
        println!(
            "  {k:>6}  {:>9}  {:<6}  {:>4}  {}",
            verdict.effective_edges, verdict.planar, verdict.sign, verdict.difference
        );
        assert!(verdict.report.passed());
        assert_eq!(verdict.sign == 0, verdict.planar, "gap vanishes exactly on planar closures");
    }

    // The recurrence along the family is captured by a 2×2 transfer
    // matrix; its verdicts agree with the direct computation.
    let report = checker.family_check("T;P1;P3;P2;P4;P1").expect("valid moves");
    assert!(report.passed());
    println!("\ntransfer-matrix recurrence agrees with direct verdicts");

    // The disk drawn from K3,3 minus an edge is the first strict case.
    let k33 = marked_disk_from_diagram(&disk_k33_diagram()).expect("drawable disk");
    let closure = k33.glue(&MarkedDisk::pairing_x());
    let verdict = checker.inequality_check(&closure.graph).expect("cubic closure");
    assert!(!verdict.planar && verdict.sign > 0);
    println!("K3,3 closure is nonplanar with a strictly positive gap: {}", verdict.difference);
}
