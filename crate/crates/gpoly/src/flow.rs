//! Flow and chromatic polynomials of multigraphs.
//!
//! Both are computed exactly over the integers by deletion–contraction with
//! structural reductions (loop factoring, suppression of 2-valent vertices,
//! bridge shortcuts, component splitting) and a memo table keyed by
//! isomorphism-canonical forms, so repeated and isomorphic subproblems are
//! solved once. An independent counting oracle enumerates nowhere-zero
//! flows over small cyclic groups directly and reconstructs the flow
//! polynomial by interpolation, giving an end-to-end cross-check that never
//! touches the recursive engine.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use dashmap::DashMap;
use num::{BigInt, One, Zero};

use crate::error::RingError;
use crate::graph::{canonical_key, CanonKey, MultiGraph};
use crate::rings::{lagrange_interpolate, IntPolynomial};

/// Memoizing calculator for flow and chromatic polynomials.
///
/// The tables are keyed by canonical forms, so isomorphic graphs — and
/// isomorphic subproblems arising inside different computations — share
/// entries. The engine is cheap to share behind a reference and safe to use
/// from several threads.
#[derive(Debug, Default)]
pub struct FlowEngine {
    flows: DashMap<CanonKey, IntPolynomial>,
    chromatics: DashMap<CanonKey, IntPolynomial>,
}

impl FlowEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized flow polynomials (connected, reduced graphs).
    pub fn cached_flows(&self) -> usize {
        self.flows.len()
    }

    /// Number of memoized chromatic polynomials.
    pub fn cached_chromatics(&self) -> usize {
        self.chromatics.len()
    }

    /// The flow polynomial of an arbitrary multigraph, as a polynomial in
    /// the group order `Q`. Multiplicative over components; zero on graphs
    /// with a bridge; a loop contributes a factor `Q - 1`.
    pub fn flow_polynomial(&self, g: &MultiGraph) -> IntPolynomial {
        self.flow_rec(g.clone())
    }

    /// The chromatic polynomial of an arbitrary multigraph, as a polynomial
    /// in the number of colours `Q`. Zero on graphs with a loop; parallel
    /// edges are equivalent to single ones.
    pub fn chromatic_polynomial(&self, g: &MultiGraph) -> IntPolynomial {
        self.chromatic_rec(g.clone())
    }

    fn flow_rec(&self, mut g: MultiGraph) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        // Structural reductions to a fixpoint. Each pass strictly shrinks
        // the graph, and every rule preserves the flow polynomial up to the
        // factors collected in `acc`.
        loop {
            // Loops factor out as Q - 1 each.
            let loops = g.loop_count();
            if loops > 0 {
                acc = acc * IntPolynomial::q_plus(-1).pow(loops as u64);
                g = without_loops(&g);
                continue;
            }
            // A pendant edge is a bridge: no nowhere-zero flow at all.
            if g.degrees().iter().any(|&d| d == 1) {
                return IntPolynomial::zero();
            }
            // Isolated vertices carry no flow data.
            if let Some(v) = (0..g.num_vertices()).rev().find(|&v| g.degree(v) == 0) {
                g = g.remove_vertex(v);
                continue;
            }
            // A 2-valent vertex forces its two edge values to agree;
            // suppress it. (Loop-free by now, so smoothing cannot fail.)
            if let Some(v) = (0..g.num_vertices()).find(|&v| g.degree(v) == 2) {
                g = g
                    .smooth_vertex(v)
                    .expect("2-valent vertex without a loop is smoothable");
                continue;
            }
            break;
        }
        if g.num_edges() == 0 {
            return acc;
        }
        if g.has_bridge() {
            return IntPolynomial::zero();
        }
        for comp in g.split_components() {
            let factor = self.flow_connected(comp);
            if factor.is_zero() {
                return IntPolynomial::zero();
            }
            acc = acc * factor;
        }
        acc
    }

    /// Flow polynomial of a connected, loop-free, bridgeless graph with
    /// minimum degree 3 — the shape left by the reductions above.
    fn flow_connected(&self, g: MultiGraph) -> IntPolynomial {
        let key = canonical_key(&g);
        if let Some(hit) = self.flows.get(&key) {
            return hit.clone();
        }
        let e = flow_branch_edge(&g);
        let contracted = g
            .contract_edge(e)
            .expect("branch edge of a loop-free graph is not a loop");
        let deleted = g.delete_edge(e);
        let result = self.flow_rec(contracted) - self.flow_rec(deleted);
        self.flows.insert(key, result.clone());
        result
    }

    fn chromatic_rec(&self, g: MultiGraph) -> IntPolynomial {
        if g.loop_count() > 0 {
            return IntPolynomial::zero();
        }
        let g = collapse_parallels(&g);
        let mut acc = IntPolynomial::one();
        let mut isolated = 0u64;
        let mut comps: Vec<MultiGraph> = Vec::new();
        for comp in g.split_components() {
            if comp.num_edges() == 0 {
                isolated += 1;
            } else {
                comps.push(comp);
            }
        }
        if isolated > 0 {
            acc = acc * IntPolynomial::q().pow(isolated);
        }
        for comp in comps {
            acc = acc * self.chromatic_connected(comp);
            if acc.is_zero() {
                return acc;
            }
        }
        acc
    }

    /// Chromatic polynomial of a connected simple graph with at least one
    /// edge.
    fn chromatic_connected(&self, g: MultiGraph) -> IntPolynomial {
        let n = g.num_vertices();
        // Trees: Q (Q-1)^(n-1).
        if g.num_edges() == n - 1 {
            return IntPolynomial::q() * IntPolynomial::q_plus(-1).pow((n - 1) as u64);
        }
        let key = canonical_key(&g);
        if let Some(hit) = self.chromatics.get(&key) {
            return hit.clone();
        }
        let e = chromatic_branch_edge(&g);
        let contracted = g
            .contract_edge(e)
            .expect("branch edge of a loop-free graph is not a loop");
        let result = self.chromatic_rec(g.delete_edge(e)) - self.chromatic_rec(contracted);
        self.chromatics.insert(key, result.clone());
        result
    }

    /// Writes both memo tables as JSON lines.
    pub fn save_cache(&self, path: &Path) -> std::io::Result<()> {
        let mut out = BufWriter::new(File::create(path)?);
        for (name, table) in [("flow", &self.flows), ("chromatic", &self.chromatics)] {
            for entry in table.iter() {
                let line = serde_json::json!({
                    "table": name,
                    "key": hex::encode(key_bytes(entry.key())),
                    "coeffs": entry.value().to_json(),
                });
                writeln!(out, "{line}")?;
            }
        }
        Ok(())
    }

    /// Loads a cache written by [`save_cache`](Self::save_cache), merging it
    /// into the current tables. Returns the number of entries read.
    pub fn load_cache(&self, path: &Path) -> std::io::Result<usize> {
        let reader = BufReader::new(File::open(path)?);
        let mut read = 0;
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let v: serde_json::Value = serde_json::from_str(&line)
                .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
            let bad =
                || std::io::Error::new(std::io::ErrorKind::InvalidData, "malformed cache line");
            let table = v["table"].as_str().ok_or_else(bad)?;
            let key = bytes_key(&hex::decode(v["key"].as_str().ok_or_else(bad)?).map_err(
                |e| std::io::Error::new(std::io::ErrorKind::InvalidData, e),
            )?)
            .ok_or_else(bad)?;
            let poly = IntPolynomial::from_json(&v["coeffs"]).ok_or_else(bad)?;
            match table {
                "flow" => {
                    self.flows.insert(key, poly);
                }
                "chromatic" => {
                    self.chromatics.insert(key, poly);
                }
                _ => return Err(bad()),
            }
            read += 1;
        }
        Ok(read)
    }
}

fn without_loops(g: &MultiGraph) -> MultiGraph {
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, v)| u != v).collect();
    MultiGraph::from_edges(g.num_vertices(), &edges).expect("filtered edges stay valid")
}

fn collapse_parallels(g: &MultiGraph) -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    MultiGraph::from_edges(g.num_vertices(), &edges).expect("deduped edges stay valid")
}

/// Branch edge for the flow recursion: an edge of the largest parallel
/// class, so contraction immediately converts the rest of the class into
/// loop factors; ties and the simple case prefer an edge whose endpoints
/// share many neighbours (contraction then piles up parallels).
fn flow_branch_edge(g: &MultiGraph) -> usize {
    (0..g.num_edges())
        .max_by_key(|&e| {
            let (u, v) = g.edge(e);
            (g.parallel_class(e).len(), common_neighbors(g, u, v))
        })
        .expect("caller guarantees at least one edge")
}

/// Branch edge for the chromatic recursion: the graph is simple here, so
/// only the shared-neighbour heuristic applies.
fn chromatic_branch_edge(g: &MultiGraph) -> usize {
    (0..g.num_edges())
        .max_by_key(|&e| {
            let (u, v) = g.edge(e);
            common_neighbors(g, u, v)
        })
        .expect("caller guarantees at least one edge")
}

fn common_neighbors(g: &MultiGraph, u: usize, v: usize) -> usize {
    let adj = g.adjacency();
    let mut seen: Vec<bool> = vec![false; g.num_vertices()];
    for &(_, w) in &adj[u] {
        seen[w] = true;
    }
    adj[v].iter().filter(|&&(_, w)| seen[w]).count()
}

fn key_bytes(key: &CanonKey) -> Vec<u8> {
    key.iter().flat_map(|v| v.to_le_bytes()).collect()
}

fn bytes_key(bytes: &[u8]) -> Option<CanonKey> {
    if bytes.len() % 4 != 0 {
        return None;
    }
    Some(
        bytes
            .chunks_exact(4)
            .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
            .collect(),
    )
}

/// Counts the nowhere-zero flows of `g` with values in the cyclic group of
/// order `modulus`, by direct enumeration: values on the edges outside a
/// spanning forest are free, the forest edges are determined by the
/// fundamental cuts, and an assignment counts when every edge is nonzero.
/// Loops contribute a factor `modulus - 1` each.
///
/// Runtime is `(modulus - 1)^k` for cycle rank `k` — intended as an oracle
/// on small graphs, not as a general algorithm.
pub fn count_group_flows(g: &MultiGraph, modulus: u32) -> BigInt {
    assert!(modulus >= 1);
    let loops = g.loop_count();
    let core = without_loops(g);
    let loop_factor = BigInt::from(modulus - 1).pow(loops as u32);
    if loop_factor.is_zero() && loops > 0 {
        return BigInt::zero();
    }

    // Spanning forest by depth-first search.
    let n = core.num_vertices();
    let adj = core.adjacency();
    let mut parent_edge: Vec<Option<usize>> = vec![None; n]; // edge to parent
    let mut parent: Vec<usize> = (0..n).collect();
    let mut depth: Vec<usize> = vec![0; n];
    let mut visited = vec![false; n];
    let mut in_forest = vec![false; core.num_edges()];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &(e, w) in &adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = u;
                    parent_edge[w] = Some(e);
                    depth[w] = depth[u] + 1;
                    in_forest[e] = true;
                    stack.push(w);
                }
            }
        }
    }

    // Forest-edge index and, per free edge, the signed fundamental cycle.
    let forest_index: Vec<Option<usize>> = {
        let mut next = 0;
        in_forest
            .iter()
            .map(|&t| {
                if t {
                    next += 1;
                    Some(next - 1)
                } else {
                    None
                }
            })
            .collect()
    };
    let forest_count = forest_index.iter().flatten().count();
    let free: Vec<usize> = (0..core.num_edges()).filter(|&e| !in_forest[e]).collect();

    // Walks from `x` up to the root collecting (forest slot, sign); the
    // fundamental cycle of free edge (u, v) is the symmetric path u..v.
    let cycle_of = |e: usize| -> Vec<(usize, i64)> {
        let (mut u, mut v) = core.edge(e);
        let mut steps: Vec<(usize, i64)> = Vec::new();
        // Orient the free edge u -> v; walk both ends to their common
        // ancestor. Climbing from v adds parent edges with the sign that
        // continues the cycle, climbing from u with the opposite sign.
        while depth[u] > depth[v] {
            let pe = parent_edge[u].expect("deeper vertex has a parent");
            let sign = if core.edge(pe).1 == u { 1 } else { -1 };
            steps.push((forest_index[pe].unwrap(), sign));
            u = parent[u];
        }
        while depth[v] > depth[u] {
            let pe = parent_edge[v].expect("deeper vertex has a parent");
            let sign = if core.edge(pe).1 == v { -1 } else { 1 };
            steps.push((forest_index[pe].unwrap(), sign));
            v = parent[v];
        }
        while u != v {
            let pu = parent_edge[u].expect("non-root has a parent");
            let sign = if core.edge(pu).1 == u { 1 } else { -1 };
            steps.push((forest_index[pu].unwrap(), sign));
            u = parent[u];
            let pv = parent_edge[v].expect("non-root has a parent");
            let sign = if core.edge(pv).1 == v { -1 } else { 1 };
            steps.push((forest_index[pv].unwrap(), sign));
            v = parent[v];
        }
        steps
    };
    let cycles: Vec<Vec<(usize, i64)>> = free.iter().map(|&e| cycle_of(e)).collect();

    // Depth-first enumeration of nonzero values on the free edges, keeping
    // the induced forest sums and the number of zero forest edges current.
    let m = modulus as i64;
    let mut sums = vec![0i64; forest_count];
    let mut zeros = forest_count;
    let mut count = BigInt::zero();
    fn apply(sums: &mut [i64], zeros: &mut usize, steps: &[(usize, i64)], value: i64, m: i64) {
        for &(slot, sign) in steps {
            let before = sums[slot];
            let after = (before + sign * value).rem_euclid(m);
            sums[slot] = after;
            if before == 0 && after != 0 {
                *zeros -= 1;
            } else if before != 0 && after == 0 {
                *zeros += 1;
            }
        }
    }
    fn recurse(
        d: usize,
        cycles: &[Vec<(usize, i64)>],
        sums: &mut Vec<i64>,
        zeros: &mut usize,
        m: i64,
        count: &mut BigInt,
    ) {
        if d == cycles.len() {
            if *zeros == 0 {
                *count += 1;
            }
            return;
        }
        for value in 1..m {
            apply(sums, zeros, &cycles[d], value, m);
            recurse(d + 1, cycles, sums, zeros, m, count);
            apply(sums, zeros, &cycles[d], -value, m);
        }
    }
    if modulus == 1 {
        // No nonzero values exist; only an edgeless core admits a flow.
        count = if forest_count == 0 && free.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    } else {
        recurse(0, &cycles, &mut sums, &mut zeros, m, &mut count);
    }
    loop_factor * count
}

/// Reconstructs the flow polynomial from the counting oracle alone:
/// evaluates [`count_group_flows`] at `Q = 1, …, rank + 1` and interpolates
/// exactly. Fails only if the counts are not polynomial of the expected
/// degree — which would mean a bug in the oracle.
pub fn flow_polynomial_from_counts(g: &MultiGraph) -> Result<IntPolynomial, RingError> {
    let rank = g.cyclomatic();
    let samples: Vec<(i64, BigInt)> = (1..=rank as i64 + 1)
        .map(|q| (q, count_group_flows(g, q as u32)))
        .collect();
    lagrange_interpolate(&samples, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen;
    use rand::SeedableRng;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(coeffs)
    }

    #[test]
    fn flow_closed_forms() {
        let eng = FlowEngine::new();
        // Cycles: Q - 1. Theta: (Q-1)(Q-2). K4: (Q-1)(Q-2)(Q-3).
        assert_eq!(eng.flow_polynomial(&gen::cycle(3)), poly(&[-1, 1]));
        assert_eq!(eng.flow_polynomial(&gen::cycle(7)), poly(&[-1, 1]));
        assert_eq!(
            eng.flow_polynomial(&gen::theta()),
            IntPolynomial::from_roots(&[1, 2])
        );
        assert_eq!(
            eng.flow_polynomial(&gen::k4()),
            IntPolynomial::from_roots(&[1, 2, 3])
        );
        // Bridges kill the flow polynomial.
        assert!(eng.flow_polynomial(&gen::dumbbell()).is_zero());
        let path = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(eng.flow_polynomial(&path).is_zero());
        // Loops and disjoint unions factor.
        let loop_only = MultiGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(eng.flow_polynomial(&loop_only), poly(&[-1, 1]));
        let two_triangles = gen::cycle(3).disjoint_union(&gen::cycle(3));
        assert_eq!(
            eng.flow_polynomial(&two_triangles),
            poly(&[-1, 1]) * poly(&[-1, 1])
        );
        // The empty graph has exactly one (empty) flow.
        assert_eq!(eng.flow_polynomial(&MultiGraph::new(0)), poly(&[1]));
        assert_eq!(eng.flow_polynomial(&MultiGraph::new(3)), poly(&[1]));
    }

    #[test]
    fn chromatic_closed_forms() {
        let eng = FlowEngine::new();
        assert_eq!(
            eng.chromatic_polynomial(&gen::k4()),
            IntPolynomial::from_roots(&[0, 1, 2, 3])
        );
        // Cycle: (Q-1)^n + (-1)^n (Q-1).
        let q1 = poly(&[-1, 1]);
        assert_eq!(
            eng.chromatic_polynomial(&gen::cycle(5)),
            q1.pow(5) - q1.clone()
        );
        assert_eq!(
            eng.chromatic_polynomial(&gen::cycle(4)),
            q1.pow(4) + q1.clone()
        );
        // Trees: Q (Q-1)^(n-1); parallels don't matter; loops kill it.
        let path = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            eng.chromatic_polynomial(&path),
            IntPolynomial::q() * q1.pow(3)
        );
        assert_eq!(
            eng.chromatic_polynomial(&gen::theta()),
            IntPolynomial::q() * q1.clone()
        );
        let loop_graph = MultiGraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert!(eng.chromatic_polynomial(&loop_graph).is_zero());
        // Known counts: Petersen has 120 proper 3-colourings, K33 has two
        // proper 2-colourings.
        assert_eq!(
            eng.chromatic_polynomial(&gen::petersen()).eval_i64(3),
            BigInt::from(120)
        );
        assert_eq!(
            eng.chromatic_polynomial(&gen::k33()).eval_i64(2),
            BigInt::from(2)
        );
        // Isolated vertices contribute Q each.
        assert_eq!(
            eng.chromatic_polynomial(&MultiGraph::new(3)),
            IntPolynomial::q().pow(3)
        );
    }

    #[test]
    fn petersen_flow_values() {
        let eng = FlowEngine::new();
        let f = eng.flow_polynomial(&gen::petersen());
        for q in [1, 2, 3, 4] {
            assert_eq!(f.eval_i64(q), BigInt::zero(), "Q = {q}");
        }
        assert_eq!(f.eval_i64(5), BigInt::from(240));
    }

    #[test]
    fn flow_agrees_with_counting_oracle() {
        let eng = FlowEngine::new();
        for g in [
            gen::theta(),
            gen::k4(),
            gen::k33(),
            gen::cube(),
            gen::petersen(),
            gen::octahedron(),
            gen::diamond_ring(2),
        ] {
            assert_eq!(
                eng.flow_polynomial(&g),
                flow_polynomial_from_counts(&g).unwrap()
            );
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let g = gen::random_connected_multigraph(&mut rng, 8, 6);
            assert_eq!(
                eng.flow_polynomial(&g),
                flow_polynomial_from_counts(&g).unwrap(),
                "graph with edges {:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn oracle_counts_directly() {
        // Triangle: flows are constant on the cycle, so Q - 1 of them.
        assert_eq!(count_group_flows(&gen::cycle(3), 5), BigInt::from(4));
        // K4 at Q = 3: (3-1)(3-2)(3-3) = 0; at Q = 4: 3 * 2 * 1 = 6.
        assert_eq!(count_group_flows(&gen::k4(), 3), BigInt::zero());
        assert_eq!(count_group_flows(&gen::k4(), 4), BigInt::from(6));
        // Bridges force a zero edge.
        assert_eq!(count_group_flows(&gen::dumbbell(), 7), BigInt::zero());
        // Modulus 1 counts the empty flow only.
        assert_eq!(count_group_flows(&MultiGraph::new(2), 1), BigInt::one());
        assert_eq!(count_group_flows(&gen::cycle(3), 1), BigInt::zero());
    }

    #[test]
    fn duality_on_planar_pairs() {
        // For a connected planar graph, Q * flow = chromatic of the dual:
        // theta/triangle, K4/K4, cube/octahedron.
        let eng = FlowEngine::new();
        let q = IntPolynomial::q();
        assert_eq!(
            q.clone() * eng.flow_polynomial(&gen::theta()),
            eng.chromatic_polynomial(&gen::cycle(3))
        );
        assert_eq!(
            q.clone() * eng.flow_polynomial(&gen::k4()),
            eng.chromatic_polynomial(&gen::k4())
        );
        assert_eq!(
            q * eng.flow_polynomial(&gen::cube()),
            eng.chromatic_polynomial(&gen::octahedron())
        );
    }

    #[test]
    fn memo_is_isomorphism_stable() {
        let eng = FlowEngine::new();
        let p = gen::petersen();
        let f1 = eng.flow_polynomial(&p);
        let cached = eng.cached_flows();
        // A relabelled copy hits the same entries and computes nothing new.
        let perm: Vec<usize> = vec![3, 1, 4, 0, 5, 9, 2, 6, 8, 7];
        let edges: Vec<(usize, usize)> =
            p.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let relabelled = MultiGraph::from_edges(10, &edges).unwrap();
        assert_eq!(eng.flow_polynomial(&relabelled), f1);
        assert_eq!(eng.cached_flows(), cached);
    }

    #[test]
    fn cache_round_trips_through_disk() {
        let eng = FlowEngine::new();
        let flow = eng.flow_polynomial(&gen::k33());
        let chrom = eng.chromatic_polynomial(&gen::k4());
        let dir = std::env::temp_dir().join("gpoly-cache-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        eng.save_cache(&path).unwrap();

        let fresh = FlowEngine::new();
        let read = fresh.load_cache(&path).unwrap();
        assert_eq!(read, eng.cached_flows() + eng.cached_chromatics());
        assert_eq!(fresh.cached_flows(), eng.cached_flows());
        assert_eq!(fresh.flow_polynomial(&gen::k33()), flow);
        assert_eq!(fresh.chromatic_polynomial(&gen::k4()), chrom);
        std::fs::remove_file(&path).ok();
    }
}
