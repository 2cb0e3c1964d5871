//! Named graph fixtures, inductive generators for connected cubic
//! multigraph families, brute-force enumerators used to validate them, and
//! seeded random graphs.

use std::collections::{BTreeMap, HashSet};

use rand::Rng;

use crate::graph::canon::{canonical_key, CanonKey};
use crate::graph::multigraph::MultiGraph;

/// Two vertices joined by three parallel edges.
pub fn theta() -> MultiGraph {
    MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
}

/// Two loop vertices joined by a bridge.
pub fn dumbbell() -> MultiGraph {
    MultiGraph::from_edges(2, &[(0, 0), (1, 1), (0, 1)]).unwrap()
}

/// The complete graph on 4 vertices.
pub fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// The complete graph on 5 vertices.
pub fn k5() -> MultiGraph {
    let mut g = MultiGraph::new(5);
    for u in 0..5 {
        for v in (u + 1)..5 {
            g.add_edge(u, v);
        }
    }
    g
}

/// The complete bipartite graph on 3 + 3 vertices.
pub fn k33() -> MultiGraph {
    let mut g = MultiGraph::new(6);
    for u in 0..3 {
        for v in 3..6 {
            g.add_edge(u, v);
        }
    }
    g
}

/// The cycle on `n` vertices (`n >= 1`; a single vertex gets a loop).
pub fn cycle(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    g
}

/// The Petersen graph: outer 5-cycle, inner 5-star, spokes.
pub fn petersen() -> MultiGraph {
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push((i, 5 + i)); // spokes
    }
    MultiGraph::from_edges(10, &edges).unwrap()
}

/// The 3-cube graph.
pub fn cube() -> MultiGraph {
    let mut g = MultiGraph::new(8);
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// The octahedron (planar dual of the cube).
pub fn octahedron() -> MultiGraph {
    // Vertices 0/1, 2/3, 4/5 are the three antipodal pairs.
    let mut g = MultiGraph::new(6);
    for u in 0..6 {
        for v in (u + 1)..6 {
            if v != u + 1 || u % 2 != 0 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A ring of `k` diamonds (`k >= 2`): K4-minus-an-edge blocks arranged in a
/// cycle, consecutive blocks joined by an edge between their degree-2 ports.
/// Every edge reduction of such a ring creates a parallel edge, so together
/// with K4 these belong to the irreducible seeds for the simple cubic family.
pub fn diamond_ring(k: usize) -> MultiGraph {
    assert!(k >= 2, "a ring needs at least two diamonds");
    let n = 4 * k;
    let mut g = MultiGraph::new(n);
    for i in 0..k {
        let b = 4 * i;
        // Diamond on b..b+4: ports b and b+1, triangle pair b+2 and b+3.
        for (u, v) in [(b, b + 2), (b, b + 3), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)] {
            g.add_edge(u, v);
        }
        g.add_edge(b + 1, (b + 4) % n);
    }
    g
}

/// Appends a diamond (K4 minus an edge) on four fresh vertices and returns
/// its two degree-2 ports.
fn push_diamond(g: &mut MultiGraph) -> (usize, usize) {
    let b = g.num_vertices();
    for _ in 0..4 {
        g.add_vertex();
    }
    for (u, v) in [(b, b + 2), (b, b + 3), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)] {
        g.add_edge(u, v);
    }
    (b, b + 1)
}

/// Appends a handcuff gadget — a digon whose two stems meet in a head
/// vertex — and returns the head, which still has one free slot.
fn push_handcuff(g: &mut MultiGraph) -> usize {
    let b = g.num_vertices();
    for _ in 0..3 {
        g.add_vertex();
    }
    g.add_edge(b, b + 1);
    g.add_edge(b, b + 1);
    g.add_edge(b, b + 2);
    g.add_edge(b + 1, b + 2);
    b + 2
}

/// The connected loop-free cubic multigraphs on which every edge reduction
/// either introduces a loop or disconnects the graph: `g` handcuff gadgets
/// (a digon with both stems meeting in a head) whose heads are the leaves of
/// a bridge tree with all internal degrees 3. Supported for `g` in 2..=4,
/// i.e. 6, 10 and 14 vertices.
pub fn handcuff_tree(g: usize) -> MultiGraph {
    let mut out = MultiGraph::new(0);
    let heads: Vec<usize> = (0..g).map(|_| push_handcuff(&mut out)).collect();
    match g {
        2 => {
            out.add_edge(heads[0], heads[1]);
        }
        3 => {
            let m = out.add_vertex();
            for &h in &heads {
                out.add_edge(h, m);
            }
        }
        4 => {
            let m1 = out.add_vertex();
            let m2 = out.add_vertex();
            out.add_edge(heads[0], m1);
            out.add_edge(heads[1], m1);
            out.add_edge(heads[2], m2);
            out.add_edge(heads[3], m2);
            out.add_edge(m1, m2);
        }
        _ => panic!("handcuff trees are provided for 2..=4 gadgets"),
    }
    out
}

/// The simple cubic graphs beyond K4 and the diamond rings on which every
/// edge reduction creates a parallel edge or disconnects the graph, for at
/// most 14 vertices. Each is an assembly of diamonds and "hub" vertices
/// whose edges all end in diamond ports, with hub–hub edges only as bridges.
fn bridged_diamond_assemblies(max_n: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    if max_n >= 10 {
        // Two subdivided-K4 pendants joined by a bridge: a hub on both ports
        // of its own diamond, hubs joined by the bridge.
        let mut g = MultiGraph::new(0);
        let (a1, a2) = push_diamond(&mut g);
        let (b1, b2) = push_diamond(&mut g);
        let w1 = g.add_vertex();
        let w2 = g.add_vertex();
        g.add_edge(a1, w1);
        g.add_edge(a2, w1);
        g.add_edge(b1, w2);
        g.add_edge(b2, w2);
        g.add_edge(w1, w2);
        out.push(g);
    }
    if max_n >= 14 {
        // Theta of diamonds: two hubs, each adjacent to one port of all
        // three diamonds.
        let mut td = MultiGraph::new(0);
        let ports: Vec<(usize, usize)> = (0..3).map(|_| push_diamond(&mut td)).collect();
        let w1 = td.add_vertex();
        let w2 = td.add_vertex();
        for &(p, q) in &ports {
            td.add_edge(p, w1);
            td.add_edge(q, w2);
        }
        out.push(td);

        // Chain variant: one hub takes both ports of the first diamond plus
        // one port of the second; the other hub takes the rest.
        let mut ch = MultiGraph::new(0);
        let ports: Vec<(usize, usize)> = (0..3).map(|_| push_diamond(&mut ch)).collect();
        let w1 = ch.add_vertex();
        let w2 = ch.add_vertex();
        ch.add_edge(ports[0].0, w1);
        ch.add_edge(ports[0].1, w1);
        ch.add_edge(ports[1].0, w1);
        ch.add_edge(ports[1].1, w2);
        ch.add_edge(ports[2].0, w2);
        ch.add_edge(ports[2].1, w2);
        out.push(ch);

        // Bridged variant: a pendant diamond loop on one hub, a pendant
        // two-diamond loop on the other, hubs joined by a bridge.
        let mut br = MultiGraph::new(0);
        let ports: Vec<(usize, usize)> = (0..3).map(|_| push_diamond(&mut br)).collect();
        let w1 = br.add_vertex();
        let w2 = br.add_vertex();
        br.add_edge(ports[0].0, w1);
        br.add_edge(ports[0].1, w1);
        br.add_edge(ports[1].0, w2);
        br.add_edge(ports[2].0, w2);
        br.add_edge(ports[1].1, ports[2].1);
        br.add_edge(w1, w2);
        out.push(br);
    }
    out
}

/// The flower snark on 20 vertices.
pub fn flower_snark_j5() -> MultiGraph {
    let n = 5;
    // Vertex layout: hub b_i = i, cycle a_i = 5 + i, petals c_i = 10 + i and
    // d_i = 15 + i for i in 0..5.
    let mut edges = Vec::new();
    for i in 0..n {
        let (b, a, c, d) = (i, n + i, 2 * n + i, 3 * n + i);
        edges.push((b, a));
        edges.push((b, c));
        edges.push((b, d));
        edges.push((n + i, n + (i + 1) % n)); // inner 5-cycle on the a's
    }
    // One outer 10-cycle through all c's then all d's.
    for i in 0..n - 1 {
        edges.push((2 * n + i, 2 * n + i + 1));
        edges.push((3 * n + i, 3 * n + i + 1));
    }
    edges.push((2 * n + n - 1, 3 * n));
    edges.push((3 * n + n - 1, 2 * n));
    MultiGraph::from_edges(4 * n, &edges).unwrap()
}

/// All ways of joining the midpoints of two (possibly equal) subdivided
/// edges by a fresh edge. Preserves "connected and cubic".
pub fn h_insertions(g: &MultiGraph) -> Vec<MultiGraph> {
    let m = g.num_edges();
    let mut out = Vec::new();
    for e in 0..m {
        for f in e..m {
            let (g1, w1) = g.subdivide_edge(e);
            let f1 = if e == f {
                g1.num_edges() - 1 // second split lands on a replacement half
            } else if f > e {
                f - 1
            } else {
                f
            };
            let (mut g2, w2) = g1.subdivide_edge(f1);
            g2.add_edge(w1, w2);
            out.push(g2);
        }
    }
    out
}

/// All ways of hanging a looped pendant vertex from a subdivided edge.
/// Preserves "connected and cubic".
pub fn tadpole_insertions(g: &MultiGraph) -> Vec<MultiGraph> {
    (0..g.num_edges())
        .map(|e| {
            let (mut g1, w) = g.subdivide_edge(e);
            let x = g1.add_vertex();
            g1.add_edge(w, x);
            g1.add_edge(x, x);
            g1
        })
        .collect()
}

fn closure(
    bases: &[MultiGraph],
    max_n: usize,
    with_tadpoles: bool,
    keep: impl Fn(&MultiGraph) -> bool,
) -> BTreeMap<usize, Vec<MultiGraph>> {
    let mut by_order: BTreeMap<usize, Vec<MultiGraph>> = BTreeMap::new();
    let mut seen: HashSet<CanonKey> = HashSet::new();
    let mut admit = |g: MultiGraph, by_order: &mut BTreeMap<usize, Vec<MultiGraph>>| {
        if g.num_vertices() <= max_n && keep(&g) && seen.insert(canonical_key(&g)) {
            by_order.entry(g.num_vertices()).or_default().push(g);
        }
    };
    for b in bases {
        admit(b.clone(), &mut by_order);
    }
    let orders: Vec<usize> = (0..=max_n).collect();
    for n in orders {
        let level: Vec<MultiGraph> = match by_order.get(&n) {
            Some(v) => v.clone(),
            None => continue,
        };
        if n + 2 > max_n {
            continue;
        }
        for g in &level {
            for h in h_insertions(g) {
                admit(h, &mut by_order);
            }
            if with_tadpoles {
                for t in tadpole_insertions(g) {
                    admit(t, &mut by_order);
                }
            }
        }
    }
    by_order
}

/// All connected simple cubic graphs with at most `max_n` vertices, grouped
/// by order. Generated inductively by edge insertion from the irreducible
/// graphs — those on which every edge reduction creates a parallel edge or a
/// disconnection: K4, the diamond rings, and the bridged diamond assemblies.
/// The seed list is validated against brute force and published counts up to
/// 14 vertices, so larger orders are not offered.
pub fn simple_cubic_graphs(max_n: usize) -> BTreeMap<usize, Vec<MultiGraph>> {
    assert!(max_n <= 14, "irreducible seeds are enumerated up to 14 vertices");
    let mut bases = vec![k4()];
    let mut k = 2;
    while 4 * k <= max_n {
        bases.push(diamond_ring(k));
        k += 1;
    }
    bases.extend(bridged_diamond_assemblies(max_n));
    closure(&bases, max_n, false, |g| g.is_simple())
}

/// All connected loop-free cubic multigraphs with at most `max_n` vertices,
/// grouped by order. Generated inductively from the theta graph and the
/// handcuff trees, which admit no loop-free connected edge reduction.
pub fn loopfree_cubic_multigraphs(max_n: usize) -> BTreeMap<usize, Vec<MultiGraph>> {
    assert!(max_n <= 16, "irreducible seeds are enumerated up to 16 vertices");
    let mut bases = vec![theta()];
    let mut g = 2;
    while 4 * g - 2 <= max_n && g <= 4 {
        bases.push(handcuff_tree(g));
        g += 1;
    }
    closure(&bases, max_n, false, |g| g.loop_count() == 0)
}

/// All connected cubic multigraphs (loops allowed) with at most `max_n`
/// vertices, grouped by order.
pub fn cubic_multigraphs(max_n: usize) -> BTreeMap<usize, Vec<MultiGraph>> {
    closure(&[theta(), dumbbell()], max_n, true, |_| true)
}

/// Brute-force enumeration of connected cubic multigraphs on exactly `n`
/// labelled vertices, deduplicated up to isomorphism. Exponential; intended
/// for validating the inductive generators at small orders.
pub fn brute_force_cubic(n: usize, allow_loops: bool, require_simple: bool) -> Vec<MultiGraph> {
    let max_mult = if require_simple { 1 } else { 3 };
    let mut out: Vec<MultiGraph> = Vec::new();
    let mut seen: HashSet<CanonKey> = HashSet::new();
    // deg[v] = degree already committed; edges built vertex by vertex.
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();

    fn distribute(
        v: usize,
        u: usize,
        need: usize,
        n: usize,
        max_mult: usize,
        deg: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        emit: &mut dyn FnMut(&mut Vec<usize>, &mut Vec<(usize, usize)>),
    ) {
        if need == 0 {
            emit(deg, edges);
            return;
        }
        if u >= n {
            return;
        }
        let cap = max_mult.min(3 - deg[u]).min(need);
        for k in 0..=cap {
            for _ in 0..k {
                edges.push((v, u));
            }
            deg[u] += k;
            deg[v] += k;
            distribute(v, u + 1, need - k, n, max_mult, deg, edges, emit);
            deg[u] -= k;
            deg[v] -= k;
            for _ in 0..k {
                edges.pop();
            }
        }
    }

    fn fill(
        v: usize,
        n: usize,
        allow_loops: bool,
        max_mult: usize,
        deg: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        out: &mut Vec<MultiGraph>,
        seen: &mut HashSet<CanonKey>,
    ) {
        if v == n {
            let g = MultiGraph::from_edges(n, edges).unwrap();
            if g.is_connected() && seen.insert(canonical_key(&g)) {
                out.push(g);
            }
            return;
        }
        let have = deg[v];
        if have > 3 {
            return;
        }
        let loop_options = if allow_loops && 3 - have >= 2 { 1 } else { 0 };
        for l in 0..=loop_options {
            for _ in 0..l {
                edges.push((v, v));
            }
            deg[v] += 2 * l;
            let need = 3 - deg[v];
            let mut emit = |deg: &mut Vec<usize>, edges: &mut Vec<(usize, usize)>| {
                fill(v + 1, n, allow_loops, max_mult, deg, edges, out, seen);
            };
            distribute(v, v + 1, need, n, max_mult, deg, edges, &mut emit);
            deg[v] -= 2 * l;
            for _ in 0..l {
                edges.pop();
            }
        }
    }

    fill(0, n, allow_loops, max_mult, &mut deg, &mut edges, &mut out, &mut seen);
    out
}

/// A seeded random connected multigraph: a random spanning tree plus up to
/// `max_extra` arbitrary extra edges (loops and parallels allowed), so its
/// cycle rank is at most `max_extra`.
pub fn random_connected_multigraph(
    rng: &mut impl Rng,
    max_n: usize,
    max_extra: usize,
) -> MultiGraph {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut g = MultiGraph::new(n);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v);
    }
    let extra = rng.gen_range(0..=max_extra);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        g.add_edge(u, v);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(graphs: &[MultiGraph]) -> HashSet<CanonKey> {
        graphs.iter().map(canonical_key).collect()
    }

    #[test]
    fn fixtures_are_cubic_where_expected() {
        for g in [theta(), dumbbell(), k4(), petersen(), cube(), flower_snark_j5(), k33()] {
            assert!(g.is_cubic(), "fixture with degrees {:?}", g.degrees());
            assert!(g.is_connected());
        }
        assert_eq!(octahedron().degrees(), vec![4; 6]);
        assert_eq!(flower_snark_j5().num_edges(), 30);
        assert!(petersen().is_simple());
        assert!(flower_snark_j5().is_simple());
    }

    #[test]
    fn h_insertion_preserves_cubic_connected() {
        for g in h_insertions(&theta()) {
            assert!(g.is_cubic());
            assert!(g.is_connected());
            assert_eq!(g.num_vertices(), 4);
        }
        for g in tadpole_insertions(&k4()) {
            assert!(g.is_cubic());
            assert!(g.is_connected());
            assert_eq!(g.loop_count(), 1);
        }
    }

    #[test]
    fn simple_cubic_counts_match_reference() {
        let fam = simple_cubic_graphs(14);
        assert_eq!(fam[&4].len(), 1);
        assert_eq!(fam[&6].len(), 2);
        assert_eq!(fam[&8].len(), 5);
        assert_eq!(fam[&10].len(), 19);
        assert_eq!(fam[&12].len(), 85);
        assert_eq!(fam[&14].len(), 509);
        for graphs in fam.values() {
            for g in graphs {
                assert!(g.is_cubic() && g.is_simple() && g.is_connected());
            }
        }
    }

    /// Every way of removing a non-loop edge and smoothing its endpoints.
    /// Reductions whose smoothing is undefined (bare loop ends) are skipped.
    fn edge_reductions(g: &MultiGraph) -> Vec<MultiGraph> {
        let mut out = Vec::new();
        for e in 0..g.num_edges() {
            let (x, y) = g.edge(e);
            if x == y {
                continue;
            }
            if let Ok(h) = g
                .delete_edge(e)
                .smooth_vertex(x.max(y))
                .and_then(|h| h.smooth_vertex(x.min(y)))
            {
                out.push(h);
            }
        }
        out
    }

    #[test]
    fn generator_seeds_are_irreducible() {
        // Simple universe: every reduction leaves the class or disconnects.
        let mut simple_seeds = vec![diamond_ring(2), diamond_ring(3)];
        simple_seeds.extend(bridged_diamond_assemblies(14));
        assert_eq!(simple_seeds.len(), 6);
        for g in &simple_seeds {
            assert!(g.is_cubic() && g.is_simple() && g.is_connected());
            for r in edge_reductions(g) {
                assert!(!(r.is_simple() && r.is_connected()));
            }
        }
        // Loop-free universe likewise.
        for k in [2usize, 3, 4] {
            let g = handcuff_tree(k);
            assert!(g.is_cubic() && g.is_connected());
            assert_eq!((g.num_vertices(), g.loop_count()), (4 * k - 2, 0));
            for r in edge_reductions(&g) {
                assert!(!(r.loop_count() == 0 && r.is_connected()));
            }
        }
        // Sanity: ordinary members of each class do reduce.
        assert!(edge_reductions(&petersen())
            .iter()
            .any(|r| r.is_simple() && r.is_connected()));
        let domino =
            MultiGraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap();
        assert!(edge_reductions(&domino)
            .iter()
            .any(|r| r.loop_count() == 0 && r.is_connected()));
    }

    #[test]
    fn inductive_generators_match_brute_force() {
        // Simple cubic graphs on 4..=8 vertices.
        let fam = simple_cubic_graphs(8);
        for n in [4usize, 6, 8] {
            let brute = brute_force_cubic(n, false, true);
            assert_eq!(keys(&fam[&n]), keys(&brute), "simple cubic on {n}");
        }
        // Loop-free multigraphs on 2..=8 vertices.
        let fam = loopfree_cubic_multigraphs(8);
        for n in [2usize, 4, 6, 8] {
            let brute: Vec<MultiGraph> = brute_force_cubic(n, false, false);
            assert_eq!(keys(&fam[&n]), keys(&brute), "loop-free cubic on {n}");
        }
        // Full multigraph universe on 2..=6 vertices.
        let fam = cubic_multigraphs(6);
        for n in [2usize, 4, 6] {
            let brute = brute_force_cubic(n, true, false);
            assert_eq!(keys(&fam[&n]), keys(&brute), "cubic multigraphs on {n}");
        }
        assert_eq!(fam[&2].len(), 2); // theta and dumbbell
    }

    #[test]
    fn random_graphs_are_connected_with_bounded_rank() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let g = random_connected_multigraph(&mut rng, 9, 6);
            assert!(g.is_connected());
            assert!(g.cyclomatic() <= 6);
        }
    }
}
