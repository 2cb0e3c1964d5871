//! Graph input and output: graph6/sparse6 codes, generated corpora, and
//! canonical keys for isomorphism-stable deduplication.
//!
//! Run with: cargo run --example graph_streams

use gpoly::graph::graph6::{parse_auto, parse_graph6, write_graph6, write_sparse6};
use gpoly::graph::{canonical_key, gen, MultiGraph};

fn main() {
    // graph6 covers simple graphs; sparse6 covers multigraphs with loops
    // and parallel edges. parse_auto dispatches on the format prefix.
    let k4 = parse_graph6("C~").expect("valid graph6");
    assert!(k4.is_cubic() && k4.num_vertices() == 4);
    println!("C~ decodes to K4: {} vertices, {} edges", 4, k4.num_edges());

    let petersen = gen::petersen();
    let code = write_graph6(&petersen).expect("simple graph");
    println!("Petersen graph6   = {code}");
    let back = parse_auto(&code).expect("round trip");
    assert_eq!(canonical_key(&petersen), canonical_key(&back));

    let dumbbell = gen::dumbbell();
    let s6 = write_sparse6(&dumbbell);
    println!("dumbbell sparse6  = {s6} (two loops joined by an edge)");
    let back = parse_auto(&s6).expect("round trip");
    assert_eq!(back.num_edges(), 3);
    assert_eq!(back.loops_at(0) + back.loops_at(1), 2);

    // Generated corpora, counted up to isomorphism.
    println!("\nconnected simple cubic graphs by vertex count:");
    let mut total = 0;
    for (n, graphs) in gen::simple_cubic_graphs(12) {
        total += graphs.len();
        println!("  n = {n:>2}: {}", graphs.len());
    }
    assert_eq!(total, 1 + 2 + 5 + 19 + 85);

    println!("\nconnected loop-free cubic multigraphs by vertex count:");
    for (n, graphs) in gen::loopfree_cubic_multigraphs(8) {
        println!("  n = {n:>2}: {}", graphs.len());
    }

    // Canonical keys are label-independent: shuffle the vertices of the
    // Petersen graph and the key is unchanged.
    let relabeled = {
        let perm: Vec<usize> = (0..10).map(|v| (3 * v + 7) % 10).collect();
        let mut g = MultiGraph::new(10);
        for &(u, v) in petersen.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    };
    assert_eq!(canonical_key(&petersen), canonical_key(&relabeled));
    println!("\ncanonical key is invariant under relabeling (Petersen checked)");

    // Streams: one code per line is the exchange format used by the CLI.
    let stream: String = gen::simple_cubic_graphs(8)
        .into_values()
        .flatten()
        .map(|g| write_graph6(&g).expect("simple"))
        .collect::<Vec<_>>()
        .join("\n");
    println!("\na cubic corpus as a graph6 stream:\n{stream}");
}
