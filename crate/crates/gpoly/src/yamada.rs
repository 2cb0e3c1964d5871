//! The Yamada polynomial of spatial-graph diagrams.
//!
//! [`YamadaEngine`] computes `R(q)` in the ring of integer Laurent
//! polynomials:
//!
//! - a crossing expands by the three-term skein relation
//!   `R = q * R(join along the rotation pairs 01|23) + R(flat 4-valent
//!   vertex) + q^{-1} * R(join along 03|12)`;
//! - a crossing-free diagram with underlying multigraph `G` (closed strands
//!   and free circles counted as loop vertices) evaluates to
//!   `(-1)^{V-E} * F_G(Q)` with `Q = q + 2 + q^{-1}`, where `F_G` is the
//!   flow polynomial, computed through a shared [`FlowEngine`];
//! - [`YamadaEngine::yamada_graph`] recomputes the crossing-free case by a
//!   direct contraction–deletion recursion that never touches the flow
//!   engine, and [`penrose_number`] recounts `R(1)` for cubic spatial
//!   graphs by signed 3-colorings, so the pipeline is cross-checked by
//!   genuinely independent computations.

use dashmap::DashMap;


use crate::diagram::{NodeKind, PlanarDiagram};
use crate::error::DiagramError;
use crate::flow::FlowEngine;
use crate::graph::{canonical_key, CanonKey, MultiGraph};
use crate::rings::LaurentPolynomial;

/// Computes Yamada polynomials, sharing one flow-polynomial memo across all
/// skein leaves.
#[derive(Debug)]
pub struct YamadaEngine {
    flow: FlowEngine,
    graph_memo: DashMap<CanonKey, LaurentPolynomial>,
}

impl Default for YamadaEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl YamadaEngine {
    pub fn new() -> Self {
        YamadaEngine {
            flow: FlowEngine::new(),
            graph_memo: DashMap::new(),
        }
    }

    /// Builds an engine around an existing flow engine (for cache sharing).
    pub fn with_flow(flow: FlowEngine) -> Self {
        YamadaEngine {
            flow,
            graph_memo: DashMap::new(),
        }
    }

    /// The shared flow-polynomial engine.
    pub fn flow(&self) -> &FlowEngine {
        &self.flow
    }

    /// The Yamada polynomial of a diagram.
    pub fn yamada(&self, d: &PlanarDiagram) -> Result<LaurentPolynomial, DiagramError> {
        d.validate()?;
        Ok(self.expand(d, &PickFirst))
    }

    /// The Yamada polynomial, resolving crossings in an order chosen by
    /// `picker`. The result never depends on the order; exposing the choice
    /// lets tests certify that.
    pub fn yamada_with_order(
        &self,
        d: &PlanarDiagram,
        picker: &dyn CrossingPicker,
    ) -> Result<LaurentPolynomial, DiagramError> {
        d.validate()?;
        Ok(self.expand(d, picker))
    }

    fn expand(&self, d: &PlanarDiagram, picker: &dyn CrossingPicker) -> LaurentPolynomial {
        match picker.pick(d) {
            Some(c) => {
                let res = d
                    .resolve_crossing(c)
                    .expect("picker returns crossings of d");
                let q = LaurentPolynomial::q_pow(1);
                let q_inv = LaurentPolynomial::q_pow(-1);
                q * self.expand(&res.q_join, picker)
                    + self.expand(&res.flat, picker)
                    + q_inv * self.expand(&res.q_inverse_join, picker)
            }
            None => self.crossing_free_value(d),
        }
    }

    fn crossing_free_value(&self, d: &PlanarDiagram) -> LaurentPolynomial {
        self.yamada_graph_via_flow(&d.underlying_graph().graph)
    }

    /// `(-1)^{V-E} * F_G(q + 2 + q^{-1})`: the Yamada polynomial of a flat
    /// (crossing-free) spatial graph, through the flow engine.
    pub fn yamada_graph_via_flow(&self, g: &MultiGraph) -> LaurentPolynomial {
        let f = self.flow.flow_polynomial(g);
        let r = LaurentPolynomial::substitute_q_shift(&f);
        if (g.num_vertices() + g.num_edges()) % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// The Yamada polynomial of a flat spatial graph by direct
    /// contraction–deletion: `R(G) = R(G/e) + R(G - e)` for a non-loop edge,
    /// a factor `-(q + 1 + q^{-1})` per loop, and `(-1)^V` for edgeless
    /// graphs. Independent of the flow engine.
    pub fn yamada_graph(&self, g: &MultiGraph) -> LaurentPolynomial {
        let key = canonical_key(g);
        if let Some(hit) = self.graph_memo.get(&key) {
            return hit.clone();
        }
        let value = if let Some(l) = (0..g.num_edges()).find(|&e| g.is_loop(e)) {
            -(LaurentPolynomial::circle() * self.yamada_graph(&g.delete_edge(l)))
        } else if g.num_edges() == 0 {
            if g.num_vertices() % 2 == 0 {
                LaurentPolynomial::one()
            } else {
                -LaurentPolynomial::one()
            }
        } else {
            let e = 0;
            let contracted = g.contract_edge(e).expect("edge 0 is not a loop");
            self.yamada_graph(&contracted) + self.yamada_graph(&g.delete_edge(e))
        };
        self.graph_memo.insert(key, value.clone());
        value
    }
}

/// Strategy for choosing which crossing to resolve next.
pub trait CrossingPicker {
    fn pick(&self, d: &PlanarDiagram) -> Option<usize>;
}

/// Resolve the lowest-numbered crossing first (the default).
pub struct PickFirst;

impl CrossingPicker for PickFirst {
    fn pick(&self, d: &PlanarDiagram) -> Option<usize> {
        d.first_crossing()
    }
}

/// Resolve the highest-numbered crossing first.
pub struct PickLast;

impl CrossingPicker for PickLast {
    fn pick(&self, d: &PlanarDiagram) -> Option<usize> {
        d.crossings().last().copied()
    }
}

/// The signed count of proper 3-colorings of the strands of a cubic spatial
/// graph: every strand unit (a maximal chain through crossings and 2-valent
/// vertices) takes one of three colors, the three units at each trivalent
/// vertex must be pairwise distinct, and each coloring contributes the sign
/// `(-1)^{number of crossings whose two strands carry different colors}`.
/// Equals `(-1)^{V-E} * R(1)`.
///
/// Errors unless the diagram describes a cubic spatial graph: every vertex
/// of degree 2 or 3 with at least one trivalent vertex on every strand, and
/// no free circles.
pub fn penrose_number(d: &PlanarDiagram) -> Result<i64, DiagramError> {
    d.validate()?;
    if d.free_circles() > 0 {
        return Err(DiagramError::Precondition(
            "free circles are not strands of a cubic spatial graph".into(),
        ));
    }

    // Union-find over half-edges; unions join half-edges on the same strand
    // unit.
    let halfedges: Vec<usize> = d
        .nodes()
        .iter()
        .flat_map(|n| n.halfedges.iter().copied())
        .collect();
    let slot: std::collections::HashMap<usize, usize> = halfedges
        .iter()
        .enumerate()
        .map(|(i, &h)| (h, i))
        .collect();
    let mut parent: Vec<usize> = (0..halfedges.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for &(a, b) in d.arcs() {
        union(&mut parent, slot[&a], slot[&b]);
    }
    let mut trivalent: Vec<[usize; 3]> = Vec::new();
    for node in d.nodes() {
        match node.kind {
            NodeKind::Crossing => {
                union(&mut parent, slot[&node.halfedges[0]], slot[&node.halfedges[2]]);
                union(&mut parent, slot[&node.halfedges[1]], slot[&node.halfedges[3]]);
            }
            NodeKind::Vertex => match node.halfedges.len() {
                2 => union(&mut parent, slot[&node.halfedges[0]], slot[&node.halfedges[1]]),
                3 => {}
                k => {
                    return Err(DiagramError::Precondition(format!(
                        "vertex of degree {k}: strand colorings need degrees 2 or 3"
                    )))
                }
            },
        }
    }

    // Name the units 0..u, putting every root in play.
    let mut unit_of_root = std::collections::HashMap::new();
    let mut unit_of_halfedge = std::collections::HashMap::new();
    for &h in &halfedges {
        let r = find(&mut parent, slot[&h]);
        let next = unit_of_root.len();
        let u = *unit_of_root.entry(r).or_insert(next);
        unit_of_halfedge.insert(h, u);
    }
    let num_units = unit_of_root.len();

    let mut touched = vec![false; num_units];
    let mut vertex_units: Vec<[usize; 3]> = Vec::new();
    for node in d.nodes() {
        if node.kind == NodeKind::Vertex && node.halfedges.len() == 3 {
            let us = [
                unit_of_halfedge[&node.halfedges[0]],
                unit_of_halfedge[&node.halfedges[1]],
                unit_of_halfedge[&node.halfedges[2]],
            ];
            for &u in &us {
                touched[u] = true;
            }
            vertex_units.push(us);
        }
    }
    trivalent.append(&mut vertex_units);
    if touched.iter().any(|&t| !t) {
        return Err(DiagramError::Precondition(
            "a closed strand never meets a trivalent vertex".into(),
        ));
    }

    let crossing_units: Vec<(usize, usize)> = d
        .nodes()
        .iter()
        .filter(|n| n.kind == NodeKind::Crossing)
        .map(|n| {
            (
                unit_of_halfedge[&n.halfedges[0]],
                unit_of_halfedge[&n.halfedges[1]],
            )
        })
        .collect();

    // Check each vertex as soon as its last unit is colored.
    let mut check_at: Vec<Vec<[usize; 3]>> = vec![Vec::new(); num_units];
    for &us in &trivalent {
        let last = us.into_iter().max().expect("three units");
        check_at[last].push(us);
    }

    fn search(
        unit: usize,
        colors: &mut Vec<u8>,
        check_at: &[Vec<[usize; 3]>],
        crossings: &[(usize, usize)],
    ) -> i64 {
        if unit == colors.capacity() {
            let flips = crossings
                .iter()
                .filter(|&&(a, b)| colors[a] != colors[b])
                .count();
            return if flips % 2 == 0 { 1 } else { -1 };
        }
        let palette: &[u8] = if unit == 0 { &[0] } else { &[0, 1, 2] };
        let mut total = 0;
        for &c in palette {
            colors.push(c);
            if check_at[unit]
                .iter()
                .all(|us| us.iter().map(|&u| colors[u]).collect::<std::collections::BTreeSet<_>>().len() == 3)
            {
                total += search(unit + 1, colors, check_at, crossings);
            }
            colors.pop();
        }
        total
    }

    if num_units == 0 {
        return Ok(1);
    }
    let mut colors = Vec::with_capacity(num_units);
    // Fixing the first unit's color costs a factor of exactly 3: recoloring
    // permutes colorings and preserves every sign.
    Ok(3 * search(0, &mut colors, &check_at, &crossing_units))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::diagram::{Node, NodeKind, PlanarDiagram, ReidemeisterMove};
    use crate::graph::gen;
    use num::{BigInt, BigRational, FromPrimitive, One};

    fn engine() -> YamadaEngine {
        YamadaEngine::new()
    }

    fn circle_poly() -> LaurentPolynomial {
        LaurentPolynomial::circle()
    }

    #[test]
    fn base_values_pin_the_conventions() {
        let en = engine();
        // Empty diagram.
        let empty = PlanarDiagram::new(Vec::new(), Vec::new(), 0).unwrap();
        assert_eq!(en.yamada(&empty).unwrap(), LaurentPolynomial::one());
        // A lone vertex evaluates to -1, keeping the wedge rule and the
        // k-loop bouquet formula consistent.
        let vertex = PlanarDiagram::new(
            vec![Node {
                kind: NodeKind::Vertex,
                halfedges: vec![],
            }],
            Vec::new(),
            0,
        )
        .unwrap();
        assert_eq!(en.yamada(&vertex).unwrap(), -LaurentPolynomial::one());
        // A free circle contributes q + 1 + q^{-1}.
        assert_eq!(en.yamada(&circle()).unwrap(), circle_poly());
        // k loops at one vertex: (-1)^{k-1} (q + 1 + q^{-1})^k.
        for k in 1..=4u64 {
            let expected = if k % 2 == 0 {
                -circle_poly().pow(k)
            } else {
                circle_poly().pow(k)
            };
            assert_eq!(en.yamada(&bouquet(k as usize)).unwrap(), expected);
        }
        // Theta: -(q + 1 + q^{-1}) (q + q^{-1}).
        let expected =
            -(circle_poly() * (LaurentPolynomial::q_pow(1) + LaurentPolynomial::q_pow(-1)));
        assert_eq!(en.yamada(&flat_theta()).unwrap(), expected);
        assert_eq!(
            en.yamada(&flat_theta()).unwrap().eval_at_neg_one(),
            BigInt::from(-2)
        );
        // A flat graph with a bridge vanishes.
        let dumbbell = flat(&gen::dumbbell()).unwrap();
        assert!(en.yamada(&dumbbell).unwrap().is_zero());
    }

    #[test]
    fn kinks_change_framing_by_q_squared() {
        let en = engine();
        let r = en.yamada(&kink_unknot()).unwrap();
        assert_eq!(r, LaurentPolynomial::q_pow(-2) * circle_poly());
        let r_mirror = en.yamada(&kink_unknot().mirror()).unwrap();
        assert_eq!(r_mirror, LaurentPolynomial::q_pow(2) * circle_poly());
        // Reidemeister II cancels the framing change entirely.
        assert_eq!(en.yamada(&rii_unknot()).unwrap(), circle_poly());
    }

    #[test]
    fn mirror_image_inverts_the_variable() {
        let en = engine();
        for d in [
            trefoil(),
            figure_eight(),
            knotted_theta(),
            k33_one_crossing(),
            hopf_link(),
        ] {
            let r = en.yamada(&d).unwrap();
            let rm = en.yamada(&d.mirror()).unwrap();
            assert_eq!(rm, r.invert_variable());
        }
    }

    #[test]
    fn resolution_order_does_not_matter() {
        let en = engine();
        for d in diagram_corpus(3) {
            let first = en.yamada_with_order(&d, &PickFirst).unwrap();
            let last = en.yamada_with_order(&d, &PickLast).unwrap();
            assert_eq!(first, last);
        }
    }

    #[test]
    fn contraction_deletion_matches_the_flow_composition() {
        let en = engine();
        let mut graphs = vec![
            gen::theta(),
            gen::dumbbell(),
            gen::k4(),
            gen::k33(),
            gen::petersen(),
            gen::cube(),
            gen::diamond_ring(2),
            gen::handcuff_tree(2),
        ];
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 3..=5 {
            for _ in 0..4 {
                graphs.push(gen::random_connected_multigraph(&mut rng, n, n + 3));
            }
        }
        for g in &graphs {
            assert_eq!(
                en.yamada_graph(g),
                en.yamada_graph_via_flow(g),
                "graph reduction mismatch on {} vertices / {} edges",
                g.num_vertices(),
                g.num_edges()
            );
        }
    }

    #[test]
    fn flat_diagrams_agree_with_the_graph_recursion() {
        let en = engine();
        for g in [gen::theta(), gen::k4(), gen::cube(), gen::diamond_ring(2)] {
            let d = flat(&g).unwrap();
            assert_eq!(en.yamada(&d).unwrap(), en.yamada_graph(&g));
        }
    }

    #[test]
    fn rational_evaluation_matches_the_flow_polynomial() {
        let en = engine();
        let r = en.yamada(&flat_theta()).unwrap();
        let f = en.flow().flow_polynomial(&gen::theta());
        for q in 2..=5i64 {
            let qr = BigRational::from_i64(q).unwrap();
            let big_q = &qr + BigRational::from_i64(2).unwrap() + qr.recip();
            // V - E = -1 for the theta, so R(q) = -F(Q).
            assert_eq!(r.eval_rational(&qr), -f.eval_rational(&big_q));
        }
    }

    #[test]
    fn reidemeister_two_invariance() {
        let en = engine();
        let corpus: Vec<PlanarDiagram> = diagram_corpus(3)
            .into_iter()
            .step_by(5)
            .take(8)
            .collect();
        for d in corpus {
            let r = en.yamada(&d).unwrap();
            for &(a, b) in d.rii_sites().iter().take(2) {
                for first_over in [false, true] {
                    let moved = d
                        .apply_reidemeister(&ReidemeisterMove::TwoInsert {
                            tail_a: a,
                            tail_b: b,
                            first_over,
                        })
                        .unwrap();
                    assert_eq!(en.yamada(&moved).unwrap(), r, "site ({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn reidemeister_three_invariance() {
        let en = engine();
        let mut cases = 0;
        for d in [
            braid_closure(3, &[1, 2, 1]),
            braid_closure(3, &[-1, -2, -1]),
            braid_closure(3, &[1, 2, 1, 1]),
            figure_eight(),
        ] {
            let r = en.yamada(&d).unwrap();
            for tail in d.riii_sites() {
                let moved = d
                    .apply_reidemeister(&ReidemeisterMove::ThreeSlide { face_tail: tail })
                    .unwrap();
                assert_eq!(en.yamada(&moved).unwrap(), r);
                cases += 1;
            }
        }
        assert!(cases >= 2, "expected at least two slide sites, got {cases}");
    }

    #[test]
    fn braid_relation_closures_agree() {
        let en = engine();
        assert_eq!(
            en.yamada(&braid_closure(3, &[1, 2, 1])).unwrap(),
            en.yamada(&braid_closure(3, &[2, 1, 2])).unwrap()
        );
        assert_eq!(
            en.yamada(&braid_closure(3, &[-1, -2, -1])).unwrap(),
            en.yamada(&braid_closure(3, &[-2, -1, -2])).unwrap()
        );
    }

    #[test]
    fn crossing_expansion_is_consistent_with_the_edge_form() {
        // R(crossing) = q R(join 01|23) + R(I-form) + (q^{-1} - 1) R(join 03|12):
        // contracting/deleting the I-form's middle edge recovers the flat
        // vertex and the second join, so both expansions must agree.
        let en = engine();
        for d in [trefoil(), kink_unknot(), knotted_theta(), k33_one_crossing()] {
            let c = d.first_crossing().unwrap();
            let res = d.resolve_crossing(c).unwrap();
            let iform = d.i_form_resolution(c).unwrap();
            let lhs = en.yamada(&d).unwrap();
            let rhs = LaurentPolynomial::q_pow(1) * en.yamada(&res.q_join).unwrap()
                + en.yamada(&iform).unwrap()
                + (LaurentPolynomial::q_pow(-1) - LaurentPolynomial::one())
                    * en.yamada(&res.q_inverse_join).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn value_at_minus_one_only_sees_the_underlying_graph() {
        let en = engine();
        for d in diagram_corpus(4) {
            let r = en.yamada(&d).unwrap();
            let u = d.underlying_graph().graph;
            let f0 = en.flow().flow_polynomial(&u).eval_i64(0);
            let sign = if (u.num_vertices() + u.num_edges()) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            assert_eq!(r.eval_at_neg_one(), sign * f0);
        }
    }

    #[test]
    fn penrose_counts_match_hand_values() {
        assert_eq!(penrose_number(&flat_theta()).unwrap(), 6);
        assert_eq!(penrose_number(&flat(&gen::k4()).unwrap()).unwrap(), 6);
        // All three crossings of the knotted theta are self-crossings of one
        // edge, so every coloring keeps sign +1.
        assert_eq!(penrose_number(&knotted_theta()).unwrap(), 6);
        // The two strands at the single crossing get equal/different colors
        // equally often: the signed count collapses to zero.
        assert_eq!(penrose_number(&k33_one_crossing()).unwrap(), 0);
        // No 3-edge-colorings at all.
        assert_eq!(penrose_number(&petersen_diagram()).unwrap(), 0);
        // Non-cubic inputs are rejected.
        assert!(penrose_number(&kink_unknot()).is_err());
        assert!(penrose_number(&circle()).is_err());
        assert!(penrose_number(&bouquet(2)).is_err());
    }

    #[test]
    fn penrose_equals_the_signed_yamada_value_at_one() {
        let en = engine();
        for d in [
            flat_theta(),
            flat(&gen::k4()).unwrap(),
            flat(&gen::cube()).unwrap(),
            knotted_theta(),
            knotted_theta().mirror(),
            k33_one_crossing(),
            petersen_diagram(),
        ] {
            let p = penrose_number(&d).unwrap();
            let r1 = en.yamada(&d).unwrap().eval_at_one();
            let u = d.underlying_graph().graph;
            let sign = if (u.num_vertices() + u.num_edges()) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            assert_eq!(BigInt::from(p), sign * r1);
        }
    }

    #[test]
    fn penrose_bound_by_edge_colorings() {
        let en = engine();
        for d in [
            flat_theta(),
            flat(&gen::k4()).unwrap(),
            knotted_theta(),
            k33_one_crossing(),
            petersen_diagram(),
        ] {
            let p = penrose_number(&d).unwrap();
            let u = d.underlying_graph().graph;
            let colorings = en.flow().flow_polynomial(&u).eval_i64(4);
            assert!(BigInt::from(p.abs()) <= colorings.clone(), "{p} vs {colorings}");
        }
        // Crossing-free cubic diagrams meet the bound with equality...
        let p = penrose_number(&flat_theta()).unwrap();
        let colorings = en.flow().flow_polynomial(&gen::theta()).eval_i64(4);
        assert_eq!(BigInt::from(p), colorings);
        // ...while the drawn complete bipartite graph stays strictly below.
        let colorings = en.flow().flow_polynomial(&gen::k33()).eval_i64(4);
        assert_eq!(colorings, BigInt::from(12));
        assert!(BigInt::from(penrose_number(&k33_one_crossing()).unwrap().abs()) < colorings);
    }

    #[test]
    fn wedge_multiplies_with_a_sign() {
        let en = engine();
        let theta = flat_theta();
        let r_theta = en.yamada(&theta).unwrap();
        let wedged = theta.wedge(0, &theta, 1).unwrap();
        assert_eq!(en.yamada(&wedged).unwrap(), -(r_theta.clone() * r_theta.clone()));
        let with_loop = theta.wedge(0, &loop_vertex(), 0).unwrap();
        assert_eq!(en.yamada(&with_loop).unwrap(), -(r_theta * circle_poly()));
    }

    #[test]
    fn knotting_is_visible_in_the_polynomial() {
        let en = engine();
        // The knotted theta differs from the flat one.
        assert_ne!(
            en.yamada(&knotted_theta()).unwrap(),
            en.yamada(&flat_theta()).unwrap()
        );
        // The trefoil differs from an unknotted marked circle, and from its
        // own mirror image.
        let r_trefoil = en.yamada(&trefoil()).unwrap();
        assert_ne!(r_trefoil, en.yamada(&loop_vertex()).unwrap());
        assert_ne!(r_trefoil, en.yamada(&trefoil().mirror()).unwrap());
        // The figure-eight knot is amphichiral: its polynomial is symmetric.
        let r_eight = en.yamada(&figure_eight()).unwrap();
        assert_eq!(r_eight, r_eight.invert_variable());
    }
}
