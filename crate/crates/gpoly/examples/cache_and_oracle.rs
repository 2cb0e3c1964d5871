//! Two independent ways to compute flow polynomials — contraction–deletion
//! and direct flow counting with interpolation — plus the persistent memo
//! cache that makes corpus runs cheap.
//!
//! Run with: cargo run --example cache_and_oracle

use gpoly::flow::{count_group_flows, flow_polynomial_from_counts, FlowEngine};
use gpoly::graph::gen;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // Counting nowhere-zero flows over Z_m for each small modulus gives
    // the flow polynomial by interpolation — an oracle that shares no
    // code with the contraction–deletion engine.
    let theta = gen::theta();
    println!("nowhere-zero flow counts of the theta graph:");
    for m in 1u32..=5 {
        println!("  over Z_{m}: {}", count_group_flows(&theta, m));
    }

    let engine = FlowEngine::new();
    let direct = engine.flow_polynomial(&theta);
    let interpolated = flow_polynomial_from_counts(&theta).expect("small graph");
    println!("contraction–deletion: {direct}");
    println!("interpolated:         {interpolated}");
    assert_eq!(direct, interpolated);

    // The two engines agree on named graphs and on random multigraphs
    // with loops and parallel edges.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut corpus = vec![
        gen::theta(),
        gen::dumbbell(),
        gen::k4(),
        gen::k33(),
        gen::cube(),
        gen::petersen(),
    ];
    corpus.extend((0..25).map(|_| gen::random_connected_multigraph(&mut rng, 8, 5)));
    for g in &corpus {
        assert_eq!(
            engine.flow_polynomial(g),
            flow_polynomial_from_counts(g).expect("small graph"),
            "oracle disagreement"
        );
    }
    println!("\nboth engines agree on {} graphs", corpus.len());

    // The memo keys on canonical forms, so isomorphic minors are shared
    // across the whole corpus.
    println!("memo holds {} flow polynomials", engine.cached_flows());

    // The memo persists as JSON lines and reloads into a fresh engine.
    let path = std::env::temp_dir().join("gpoly-examples-flow-cache.jsonl");
    engine.save_cache(&path).expect("writable temp file");
    let fresh = FlowEngine::new();
    let loaded = fresh.load_cache(&path).expect("readable cache");
    println!("reloaded {loaded} entries from {}", path.display());
    assert_eq!(loaded, engine.cached_flows());

    // A warm cache answers without recursing; the values are identical.
    for g in &corpus {
        assert_eq!(fresh.flow_polynomial(g), engine.flow_polynomial(g));
    }
    println!("warm-cache answers match the originals");
    std::fs::remove_file(&path).ok();
}
