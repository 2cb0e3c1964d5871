//! Spatial-graph diagrams and their Yamada polynomials: fixtures, move
//! invariance, mirror images, and the JSON exchange format used by the
//! command-line interface.
//!
//! Run with: cargo run --example spatial_diagrams

use gpoly::diagram::fixtures;
use gpoly::nearplanar::disk_k33_diagram;
use gpoly::rings::LaurentPolynomial;
use gpoly::yamada::{penrose_number, YamadaEngine};

fn main() {
    let engine = YamadaEngine::new();

    println!("Yamada polynomials of named diagrams:");
    let named = [
        ("circle", fixtures::circle()),
        ("flat theta", fixtures::flat_theta()),
        ("trefoil", fixtures::trefoil()),
        ("Hopf link", fixtures::hopf_link()),
        ("figure eight", fixtures::figure_eight()),
        ("knotted theta", fixtures::knotted_theta()),
        ("K3,3 one crossing", fixtures::k33_one_crossing()),
    ];
    for (name, d) in &named {
        let r = engine.yamada(d).expect("well-formed diagram");
        println!("  {name:<18} {r}");
    }

    // Move invariance: sliding strands over or between each other leaves
    // the polynomial unchanged; a kink only multiplies by a power of the
    // variable (the polynomial is a regular-isotopy invariant).
    let plain = engine.yamada(&fixtures::circle()).unwrap();
    let kinked = engine.yamada(&fixtures::kink_unknot()).unwrap();
    let wiggled = engine.yamada(&fixtures::rii_unknot()).unwrap();
    assert_eq!(plain, wiggled, "opposite crossings cancel");
    assert_eq!(
        kinked,
        &plain * &LaurentPolynomial::monomial(-2, 1.into()),
        "a kink contributes exactly the framing factor"
    );
    println!("\nmove invariance on redrawn unknots verified");

    // Mirror image: reversing every crossing inverts the variable.
    let trefoil = fixtures::trefoil();
    let r = engine.yamada(&trefoil).unwrap();
    let mirrored = engine.yamada(&trefoil.mirror()).unwrap();
    assert_eq!(mirrored, r.invert_variable(), "mirror inverts the variable");
    assert_ne!(mirrored, r, "the trefoil is chiral");
    println!("mirror image inverts the variable (trefoil is chiral)");

    // Integer evaluations and the signed strand-coloring count.
    let theta = fixtures::flat_theta();
    let r_theta = engine.yamada(&theta).unwrap();
    println!("\nflat theta R(1)  = {}", r_theta.eval_at_one());
    println!("flat theta R(-1) = {}", r_theta.eval_at_neg_one());
    let penrose = penrose_number(&theta).expect("cubic diagram");
    println!("flat theta signed coloring count = {penrose}");

    // A crossing-free diagram of a planar graph attains the coloring
    // bound; a genuinely knotted diagram of the same graph still does,
    // because its only crossings are strand self-intersections.
    let knotted = fixtures::knotted_theta();
    let r_knotted = engine.yamada(&knotted).unwrap();
    assert_ne!(r_knotted, r_theta, "the knotted theta is a different embedding");
    assert_eq!(
        r_knotted.eval_at_one(),
        r_theta.eval_at_one(),
        "both embeddings have the same value at 1"
    );

    // Laurent polynomials are exact objects: build one by hand.
    let by_hand = &LaurentPolynomial::monomial(-2, 1.into())
        + &LaurentPolynomial::monomial(3, (-4).into());
    println!("\na hand-built Laurent polynomial: {by_hand}");
    assert_eq!(by_hand.eval_at_one(), (-3).into());

    // JSON exchange: diagrams and disk graphs serialize losslessly; the
    // files written here can be fed to the command-line interface.
    let dir = std::env::temp_dir().join("gpoly-examples");
    std::fs::create_dir_all(&dir).expect("temp dir");
    for (stem, value) in [
        ("trefoil", trefoil.to_json()),
        ("knotted_theta", knotted.to_json()),
        ("petersen_diagram", fixtures::petersen_diagram().to_json()),
        ("disk_k33", disk_k33_diagram().to_json()),
    ] {
        let path = dir.join(format!("{stem}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&value).unwrap())
            .expect("write JSON");
        println!("wrote {}", path.display());
    }

    let round_trip =
        gpoly::diagram::PlanarDiagram::from_json(&trefoil.to_json()).expect("round trip");
    assert_eq!(engine.yamada(&round_trip).unwrap(), r);
    println!("JSON round trip preserves the polynomial");
}
