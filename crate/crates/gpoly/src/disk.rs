//! Multigraphs in a disk with four marked boundary legs.
//!
//! A [`MarkedDisk`] is a multigraph together with four distinguished
//! univalent vertices, its *legs*, labeled 1–4. The labels follow a fixed
//! geometric convention: legs 1 and 2 sit on the bottom of the disk, legs 3
//! and 4 on the top, and the cyclic order around the boundary circle is
//! (1, 2, 4, 3). All pairing and closure operations in the crate use this
//! convention, so the three crossing-free ways to cap the legs off are
//!
//! * `P0`: arcs {1–3, 2–4} (two vertical strands),
//! * `P1`: arcs {1–2, 3–4} (two horizontal strands),
//! * `S`: one 4-valent vertex joined to all four legs,
//!
//! and the remaining abstract pairing `X` = {1–4, 2–3} cannot be drawn in
//! the disk without a crossing. Capping a disk with `X` therefore produces a
//! graph with a distinguished one-crossing projection.
//!
//! Gluing identifies leg *k* of one disk with leg *k* of the other; the
//! second disk is understood to be presented as seen from outside the first
//! (already reflected), which is why all the standard caps — being invariant
//! under that reflection — can be used directly.

use crate::error::CheckError;
use crate::graph::multigraph::{MultiGraph, VertexId};

/// The standard caps that close a 4-legged disk into a closed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cap {
    /// Arcs {1–3, 2–4}.
    P0,
    /// Arcs {1–2, 3–4}.
    P1,
    /// The abstract pairing {1–4, 2–3} (not drawable in the disk).
    X,
    /// A single 4-valent vertex joined to all four legs.
    Star,
    /// Two trivalent vertices: one joined to legs 1, 2, the other to legs
    /// 3, 4, plus a bar between them.
    IGraph,
    /// Two trivalent vertices: one joined to legs 1, 3, the other to legs
    /// 2, 4, plus a bar between them.
    HGraph,
}

impl Cap {
    /// All six standard caps.
    pub const ALL: [Cap; 6] = [
        Cap::P0,
        Cap::P1,
        Cap::X,
        Cap::Star,
        Cap::IGraph,
        Cap::HGraph,
    ];

    /// The cap as a marked disk.
    pub fn disk(self) -> MarkedDisk {
        match self {
            Cap::P0 => MarkedDisk::pairing_p0(),
            Cap::P1 => MarkedDisk::pairing_p1(),
            Cap::X => MarkedDisk::pairing_x(),
            Cap::Star => MarkedDisk::star(),
            Cap::IGraph => MarkedDisk::i_graph(),
            Cap::HGraph => MarkedDisk::h_graph(),
        }
    }
}

/// Positions where a peripheral edge can be added: the edge is a rung
/// between the two leg edges named by the position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeripheralPosition {
    /// Between the edges at legs 1 and 2.
    Bottom,
    /// Between the edges at legs 2 and 4.
    Right,
    /// Between the edges at legs 3 and 4.
    Top,
    /// Between the edges at legs 1 and 3.
    Left,
}

impl PeripheralPosition {
    /// All four positions.
    pub const ALL: [PeripheralPosition; 4] = [
        PeripheralPosition::Bottom,
        PeripheralPosition::Right,
        PeripheralPosition::Top,
        PeripheralPosition::Left,
    ];

    /// The 0-based indices of the two legs whose edges the rung joins.
    pub fn leg_indices(self) -> (usize, usize) {
        match self {
            PeripheralPosition::Bottom => (0, 1),
            PeripheralPosition::Right => (1, 3),
            PeripheralPosition::Top => (2, 3),
            PeripheralPosition::Left => (0, 2),
        }
    }

    /// Parses a move token: `P1`–`P4` for the four positions, with aliases
    /// `H` (horizontal, = `P1`) and `T` (transverse, = `P2`). Case
    /// insensitive.
    pub fn parse(token: &str) -> Option<Self> {
        match token.to_ascii_uppercase().as_str() {
            "P1" | "H" => Some(PeripheralPosition::Bottom),
            "P2" | "T" => Some(PeripheralPosition::Right),
            "P3" => Some(PeripheralPosition::Top),
            "P4" => Some(PeripheralPosition::Left),
            _ => None,
        }
    }
}

impl std::fmt::Display for PeripheralPosition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PeripheralPosition::Bottom => "P1",
            PeripheralPosition::Right => "P2",
            PeripheralPosition::Top => "P3",
            PeripheralPosition::Left => "P4",
        };
        f.write_str(s)
    }
}

/// The closed multigraph produced by capping or gluing disks, plus a count
/// of the boundary strands that closed up into free circles. Each such
/// circle is kept in the graph as a vertex carrying a single loop (the
/// multigraph stand-in for a vertexless circle, worth a factor `Q - 1` to
/// the flow polynomial).
#[derive(Clone, Debug)]
pub struct Closure {
    /// The glued-up graph.
    pub graph: MultiGraph,
    /// How many leg chains closed into free circles during smoothing.
    pub leg_circles: usize,
}

impl Closure {
    /// Edge count with vertexless circles counted as zero edges: the number
    /// of edges minus one per component that is a lone vertex with a single
    /// loop. This is the edge count `E` used by the golden identities, where
    /// a free circle is not an edge.
    pub fn effective_edges(&self) -> usize {
        self.graph.num_edges() - circle_components(&self.graph)
    }
}

/// Number of components consisting of a single vertex with a single loop.
pub fn circle_components(g: &MultiGraph) -> usize {
    let (_, labels) = g.component_labels();
    let num_components = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut vertices = vec![0usize; num_components];
    let mut edges = vec![0usize; num_components];
    let mut loops = vec![0usize; num_components];
    for v in 0..g.num_vertices() {
        vertices[labels[v]] += 1;
    }
    for e in 0..g.num_edges() {
        let (u, v) = g.edge(e);
        edges[labels[u]] += 1;
        if u == v {
            loops[labels[u]] += 1;
        }
    }
    (0..num_components)
        .filter(|&c| vertices[c] == 1 && edges[c] == 1 && loops[c] == 1)
        .count()
}

/// Smooths away the 2-valent junction vertices listed in `pending`,
/// returning the cleaned graph and the number of free circles encountered
/// (left behind as loop vertices). Every pending vertex must have degree
/// exactly 2 throughout, which holds for capped legs.
pub(crate) fn smooth_junctions(
    mut g: MultiGraph,
    mut pending: Vec<VertexId>,
) -> (MultiGraph, usize) {
    loop {
        let Some(pos) = pending.iter().position(|&v| g.loops_at(v) == 0) else {
            break;
        };
        let v = pending.swap_remove(pos);
        debug_assert_eq!(g.degree(v), 2, "junction vertices stay 2-valent");
        let last = g.num_vertices() - 1;
        g = g
            .smooth_vertex(v)
            .expect("loop-free 2-valent junctions are smoothable");
        for p in pending.iter_mut() {
            if *p == last {
                *p = v;
            }
        }
    }
    // Anything left is a 2-valent vertex whose both slots form one loop:
    // a strand that closed into a free circle. Keep it as a loop vertex.
    for &v in &pending {
        debug_assert_eq!(g.degree(v), 2);
        debug_assert_eq!(g.loops_at(v), 1);
    }
    let circles = pending.len();
    (g, circles)
}

/// A multigraph with four marked boundary legs (univalent vertices),
/// labeled 1–4 in the convention described at the module level.
#[derive(Clone, Debug)]
pub struct MarkedDisk {
    graph: MultiGraph,
    legs: [VertexId; 4],
}

impl MarkedDisk {
    /// Wraps a graph and four leg vertices, checking that the legs are
    /// distinct, in range, and univalent.
    pub fn new(graph: MultiGraph, legs: [VertexId; 4]) -> Result<Self, CheckError> {
        for (k, &leg) in legs.iter().enumerate() {
            if leg >= graph.num_vertices() {
                return Err(CheckError::Precondition(format!(
                    "leg {} is vertex {leg}, out of range",
                    k + 1
                )));
            }
            if graph.degree(leg) != 1 {
                return Err(CheckError::Precondition(format!(
                    "leg {} (vertex {leg}) has degree {}, legs must be univalent",
                    k + 1,
                    graph.degree(leg)
                )));
            }
        }
        for a in 0..4 {
            for b in (a + 1)..4 {
                if legs[a] == legs[b] {
                    return Err(CheckError::Precondition(format!(
                        "legs {} and {} are the same vertex",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(MarkedDisk { graph, legs })
    }

    /// The underlying graph, legs included.
    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    /// The four leg vertices in label order 1–4.
    pub fn legs(&self) -> [VertexId; 4] {
        self.legs
    }

    /// True for vertices that are not legs.
    pub fn is_internal(&self, v: VertexId) -> bool {
        !self.legs.contains(&v)
    }

    /// Number of non-leg vertices.
    pub fn num_internal_vertices(&self) -> usize {
        self.graph.num_vertices() - 4
    }

    /// True when every internal vertex is trivalent (vacuously true when
    /// there are none). The standard pairings pass; the star does not.
    pub fn is_cubic(&self) -> bool {
        (0..self.graph.num_vertices())
            .filter(|&v| self.is_internal(v))
            .all(|v| self.graph.degree(v) == 3)
    }

    /// Vertex colors for canonical hashing: legs get the distinct colors
    /// 1–4 (their labels matter: swapping two legs changes the element),
    /// internal vertices get 0.
    pub fn leg_colors(&self) -> Vec<u32> {
        let mut colors = vec![0u32; self.graph.num_vertices()];
        for (k, &leg) in self.legs.iter().enumerate() {
            colors[leg] = k as u32 + 1;
        }
        colors
    }

    /// The pairing {1–3, 2–4}.
    pub fn pairing_p0() -> Self {
        let g = MultiGraph::from_edges(4, &[(0, 2), (1, 3)]).expect("static disk");
        MarkedDisk {
            graph: g,
            legs: [0, 1, 2, 3],
        }
    }

    /// The pairing {1–2, 3–4}.
    pub fn pairing_p1() -> Self {
        let g = MultiGraph::from_edges(4, &[(0, 1), (2, 3)]).expect("static disk");
        MarkedDisk {
            graph: g,
            legs: [0, 1, 2, 3],
        }
    }

    /// The abstract pairing {1–4, 2–3}; capping with it is what makes a
    /// closed graph "near-planar" rather than planar.
    pub fn pairing_x() -> Self {
        let g = MultiGraph::from_edges(4, &[(0, 3), (1, 2)]).expect("static disk");
        MarkedDisk {
            graph: g,
            legs: [0, 1, 2, 3],
        }
    }

    /// One 4-valent vertex joined to all four legs.
    pub fn star() -> Self {
        let g = MultiGraph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).expect("static disk");
        MarkedDisk {
            graph: g,
            legs: [0, 1, 2, 3],
        }
    }

    /// Vertex a joined to legs 1, 2; vertex b joined to legs 3, 4; bar a–b.
    pub fn i_graph() -> Self {
        let g = MultiGraph::from_edges(6, &[(0, 4), (1, 4), (2, 5), (3, 5), (4, 5)])
            .expect("static disk");
        MarkedDisk {
            graph: g,
            legs: [0, 1, 2, 3],
        }
    }

    /// Vertex a joined to legs 1, 3; vertex b joined to legs 2, 4; bar a–b.
    pub fn h_graph() -> Self {
        let g = MultiGraph::from_edges(6, &[(0, 4), (2, 4), (1, 5), (3, 5), (4, 5)])
            .expect("static disk");
        MarkedDisk {
            graph: g,
            legs: [0, 1, 2, 3],
        }
    }

    /// Glues leg k of `self` to leg k of `completion` for all k and smooths
    /// the junctions away, returning the closed graph.
    pub fn glue(&self, completion: &MarkedDisk) -> Closure {
        let mut g = self.graph.disjoint_union(&completion.graph);
        let offset = self.graph.num_vertices();
        let mut pending = Vec::with_capacity(8);
        for k in 0..4 {
            g.add_edge(self.legs[k], completion.legs[k] + offset);
            pending.push(self.legs[k]);
            pending.push(completion.legs[k] + offset);
        }
        let (graph, leg_circles) = smooth_junctions(g, pending);
        Closure { graph, leg_circles }
    }

    /// Closes the disk with one of the standard caps.
    pub fn close_with(&self, cap: Cap) -> Closure {
        self.glue(&cap.disk())
    }

    /// Adds a peripheral edge: subdivides the two leg edges named by the
    /// position and joins the new midpoints by a rung. Legs and their labels
    /// are unchanged.
    pub fn add_peripheral_edge(&self, position: PeripheralPosition) -> MarkedDisk {
        let (i, j) = position.leg_indices();
        let ei = leg_edge(&self.graph, self.legs[i]);
        let (g1, a) = self.graph.subdivide_edge(ei);
        let ej = leg_edge(&g1, self.legs[j]);
        let (mut g2, b) = g1.subdivide_edge(ej);
        g2.add_edge(a, b);
        MarkedDisk {
            graph: g2,
            legs: self.legs,
        }
    }

    /// Parses a move string like `"H;P1;P3"` and returns every member of
    /// the resulting family, starting with the seed.
    ///
    /// The first token names the seed disk: `H` or `T` for the bar disk
    /// joining {1,3} to {2,4} (the tripod-closure form), `I` for the bar
    /// disk joining {1,2} to {3,4}. Every following token is a peripheral
    /// move: `P1`–`P4`, with aliases `H` = `P1` and `T` = `P2`. Tokens are
    /// separated by semicolons; whitespace and case are ignored.
    pub fn family_from_moves(spec: &str) -> Result<Vec<MarkedDisk>, CheckError> {
        let tokens: Vec<&str> = spec
            .split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect();
        let Some((&seed_token, moves)) = tokens.split_first() else {
            return Err(CheckError::Precondition(
                "empty move string: expected a seed token".into(),
            ));
        };
        let seed = match seed_token.to_ascii_uppercase().as_str() {
            "H" | "T" => MarkedDisk::h_graph(),
            "I" => MarkedDisk::i_graph(),
            other => {
                return Err(CheckError::Precondition(format!(
                    "unknown seed token {other:?}: expected H, T, or I"
                )))
            }
        };
        let mut members = vec![seed];
        for &token in moves {
            let position = PeripheralPosition::parse(token).ok_or_else(|| {
                CheckError::Precondition(format!(
                    "unknown move token {token:?}: expected P1-P4, H, or T"
                ))
            })?;
            let next = members.last().expect("nonempty").add_peripheral_edge(position);
            members.push(next);
        }
        Ok(members)
    }
}

/// The unique edge incident to a univalent vertex.
fn leg_edge(g: &MultiGraph, leg: VertexId) -> usize {
    (0..g.num_edges())
        .find(|&e| {
            let (u, v) = g.edge(e);
            u == leg || v == leg
        })
        .expect("legs are univalent, so they have an incident edge")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::FlowEngine;
    use crate::graph::canon::canonical_key;
    use crate::graph::gen;
    use crate::rings::intpoly::IntPolynomial;

    #[test]
    fn leg_validation() {
        let g = MultiGraph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        assert!(MarkedDisk::new(g.clone(), [0, 1, 2, 3]).is_ok());
        assert!(MarkedDisk::new(g.clone(), [0, 1, 2, 2]).is_err());
        assert!(MarkedDisk::new(g.clone(), [0, 1, 2, 9]).is_err());
        let bad = MultiGraph::from_edges(4, &[(0, 2), (1, 3), (0, 1)]).unwrap();
        assert!(MarkedDisk::new(bad, [0, 1, 2, 3]).is_err());
    }

    #[test]
    fn pairing_closures_produce_circles() {
        let p0 = MarkedDisk::pairing_p0();
        let double = p0.glue(&MarkedDisk::pairing_p0());
        assert_eq!(double.leg_circles, 2);
        assert_eq!(double.effective_edges(), 0);
        assert_eq!(double.graph.num_vertices(), 2);
        assert_eq!(double.graph.loop_count(), 2);

        let mixed = p0.glue(&MarkedDisk::pairing_p1());
        assert_eq!(mixed.leg_circles, 1);
        assert_eq!(mixed.effective_edges(), 0);
    }

    #[test]
    fn star_closures() {
        let engine = FlowEngine::new();
        let s = MarkedDisk::star();
        // Star against a pairing: one vertex with two loops.
        let c = s.close_with(Cap::P0);
        assert_eq!(c.graph.num_vertices(), 1);
        assert_eq!(c.graph.num_edges(), 2);
        assert_eq!(c.effective_edges(), 2);
        let q1 = IntPolynomial::q_plus(-1);
        assert_eq!(engine.flow_polynomial(&c.graph), &q1 * &q1);
        // Star against star: the 4-banana.
        let banana = s.close_with(Cap::Star);
        assert_eq!(banana.graph.num_vertices(), 2);
        assert_eq!(banana.graph.num_edges(), 4);
        let f = engine.flow_polynomial(&banana.graph);
        let expected = (&q1.pow(4) + &q1)
            .divide_exact(&IntPolynomial::q())
            .expect("banana flow is divisible by Q");
        assert_eq!(f, expected);
    }

    #[test]
    fn bar_disk_closures_match_known_graphs() {
        let engine = FlowEngine::new();
        // I-graph capped with P0 is the theta graph.
        let theta = MarkedDisk::i_graph().close_with(Cap::P0);
        assert_eq!(canonical_key(&theta.graph), canonical_key(&gen::theta()));
        assert_eq!(
            engine.flow_polynomial(&theta.graph),
            IntPolynomial::from_roots(&[1, 2])
        );
        // I-graph capped with P1 has two bridges: flow vanishes.
        let bridged = MarkedDisk::i_graph().close_with(Cap::P1);
        assert!(engine.flow_polynomial(&bridged.graph).is_zero());
        // H-graph capped with X is the theta graph again (triple bar).
        let x_closed = MarkedDisk::h_graph().close_with(Cap::X);
        assert_eq!(canonical_key(&x_closed.graph), canonical_key(&gen::theta()));
    }

    #[test]
    fn peripheral_edges_preserve_legs_and_build_k33() {
        let members = MarkedDisk::family_from_moves("H;P1;P3").unwrap();
        assert_eq!(members.len(), 3);
        for member in &members {
            assert!(member.is_cubic());
            for &leg in &member.legs() {
                assert_eq!(member.graph().degree(leg), 1);
            }
        }
        // H with a bottom and a top rung closes with X to K3,3.
        let closure = members[2].close_with(Cap::X);
        assert_eq!(closure.leg_circles, 0);
        assert_eq!(canonical_key(&closure.graph), canonical_key(&gen::k33()));
        // The intermediate member closes to K4.
        let k4 = members[1].close_with(Cap::X);
        assert_eq!(canonical_key(&k4.graph), canonical_key(&gen::k4()));
    }

    #[test]
    fn family_grammar_accepts_aliases() {
        let members = MarkedDisk::family_from_moves(" t ; h ; p1 ; P3 ").unwrap();
        assert_eq!(members.len(), 4);
        assert!(MarkedDisk::family_from_moves("").is_err());
        assert!(MarkedDisk::family_from_moves("Q").is_err());
        assert!(MarkedDisk::family_from_moves("H;P9").is_err());
    }

    #[test]
    fn circle_component_counting() {
        // One loop vertex, one honest vertex with a loop and a tail.
        let g = MultiGraph::from_edges(3, &[(0, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!(circle_components(&g), 1);
    }
}
