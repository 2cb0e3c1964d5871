//! Planar diagrams of spatial graphs.
//!
//! A [`PlanarDiagram`] is a combinatorial description of a generic projection
//! of a graph embedded in 3-space. `nodes` carry counterclockwise cyclic
//! half-edge lists and are either genuine graph vertices or crossings; a
//! crossing always has exactly four half-edges, and the strand through
//! positions 0 and 2 passes *over* the strand through positions 1 and 3.
//! `arcs` pair up half-edges into strand segments, `free_circles` counts
//! disjoint crossing-free circles drawn beside the rest, and `boundary`
//! optionally marks univalent nodes as disk boundary legs.
//!
//! The module provides validation, face tracing (hence a sphere test, i.e.
//! whether the data really is a diagram drawn in the plane), crossing
//! resolution, mirroring, strand tracing to the underlying abstract
//! multigraph, Reidemeister II/III rewrites, and JSON round trips.

pub mod fixtures;
pub mod geometry;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::DiagramError;
use crate::graph::multigraph::MultiGraph;
use crate::graph::planar::RotationSystem;

/// Identifier of a half-edge: any non-negative integer, unique per diagram.
pub type HalfEdge = usize;
/// Index of a node in the diagram's node list.
pub type NodeId = usize;

/// What a diagram node represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    /// A genuine vertex of the spatial graph.
    Vertex,
    /// A transversal double point of the projection.
    Crossing,
}

/// One node of a diagram: its kind plus the counterclockwise cyclic order of
/// the half-edges attached to it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub kind: NodeKind,
    pub halfedges: Vec<HalfEdge>,
}

/// A diagram of a spatial graph: nodes with rotations, arcs, free circles,
/// and an optional ordered list of marked boundary nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarDiagram {
    nodes: Vec<Node>,
    arcs: Vec<(HalfEdge, HalfEdge)>,
    #[serde(default)]
    free_circles: usize,
    #[serde(default)]
    boundary: Vec<NodeId>,
}

/// The three resolutions of a crossing, along with the exponent of `q` each
/// carries in the skein expansion of the Yamada polynomial.
#[derive(Clone, Debug)]
pub struct CrossingResolutions {
    /// Strands joined as (h0 h1)(h2 h3); enters the skein with weight `q`.
    pub q_join: PlanarDiagram,
    /// The crossing replaced by a genuine 4-valent vertex; weight `1`.
    pub flat: PlanarDiagram,
    /// Strands joined as (h0 h3)(h1 h2); weight `q^{-1}`.
    pub q_inverse_join: PlanarDiagram,
}

impl CrossingResolutions {
    /// Exponents of `q` attached to `q_join`, `flat`, `q_inverse_join`.
    pub const Q_EXPONENTS: [i64; 3] = [1, 0, -1];

    /// The resolutions paired with their `q`-exponents.
    pub fn into_weighted(self) -> [(PlanarDiagram, i64); 3] {
        [
            (self.q_join, 1),
            (self.flat, 0),
            (self.q_inverse_join, -1),
        ]
    }
}

/// A Reidemeister rewrite at a specific site of a diagram.
///
/// Sites are named by half-edges: a *tail* `h` denotes the directed arc side
/// that leaves `h`'s node through `h` (crossing the arc toward its partner).
#[derive(Clone, Copy, Debug)]
pub enum ReidemeisterMove {
    /// Push the arc at `tail_a` across the arc at `tail_b` (both directed
    /// sides must lie on a common face), creating two crossings. With
    /// `first_over` the `tail_a` strand passes over at both new crossings,
    /// otherwise under.
    TwoInsert {
        tail_a: HalfEdge,
        tail_b: HalfEdge,
        first_over: bool,
    },
    /// Slide a strand across the triangular face containing `face_tail`
    /// (which must have three distinct crossing corners and a sliding
    /// strand, i.e. a non-cyclic over/under pattern).
    ThreeSlide { face_tail: HalfEdge },
}

/// The abstract multigraph behind a diagram, with bookkeeping linking each
/// crossing to the two strands that pass through it.
#[derive(Clone, Debug)]
pub struct UnderlyingGraph {
    /// Vertices 0..k are the diagram's vertex nodes in order; every closed
    /// strand (and every free circle) contributes one extra vertex carrying
    /// a single loop edge.
    pub graph: MultiGraph,
    /// For each crossing node: the edge of `graph` passing over it and the
    /// edge passing under it (equal if a strand crosses itself).
    pub crossing_strands: HashMap<NodeId, (usize, usize)>,
    /// Diagram vertex node -> vertex of `graph`.
    pub vertex_of_node: HashMap<NodeId, usize>,
}

/// A crossing-free diagram with an ordered list of marked boundary legs,
/// each a univalent vertex node. The boundary legs are the attachment
/// points used when disk diagrams are paired or glued.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskGraph {
    diagram: PlanarDiagram,
}

struct Index {
    /// half-edge -> (node, position within the node's rotation)
    at: HashMap<HalfEdge, (NodeId, usize)>,
    /// half-edge -> the half-edge at the other end of its arc
    partner: HashMap<HalfEdge, HalfEdge>,
}

impl PlanarDiagram {
    /// Builds and validates a diagram.
    pub fn new(
        nodes: Vec<Node>,
        arcs: Vec<(HalfEdge, HalfEdge)>,
        free_circles: usize,
    ) -> Result<Self, DiagramError> {
        Self::with_boundary(nodes, arcs, free_circles, Vec::new())
    }

    /// Builds and validates a diagram with marked boundary nodes.
    pub fn with_boundary(
        nodes: Vec<Node>,
        arcs: Vec<(HalfEdge, HalfEdge)>,
        free_circles: usize,
        boundary: Vec<NodeId>,
    ) -> Result<Self, DiagramError> {
        let d = PlanarDiagram {
            nodes,
            arcs,
            free_circles,
            boundary,
        };
        d.validate()?;
        Ok(d)
    }

    /// A crossing-free diagram of an embedded multigraph. Edge `e` of `g`
    /// owns half-edges `2e` and `2e + 1`, matching the rotation system's
    /// dart numbering. The rotations are *not* required to be planar; use
    /// [`PlanarDiagram::is_realizable`] to test that.
    pub fn from_rotation(g: &MultiGraph, rot: &RotationSystem) -> Result<Self, DiagramError> {
        if rot.rotations.len() != g.num_vertices() {
            return Err(DiagramError::Malformed(
                "rotation system size does not match the graph".into(),
            ));
        }
        let nodes = rot
            .rotations
            .iter()
            .map(|r| Node {
                kind: NodeKind::Vertex,
                halfedges: r.clone(),
            })
            .collect();
        let arcs = (0..g.num_edges()).map(|e| (2 * e, 2 * e + 1)).collect();
        Self::new(nodes, arcs, 0)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[(HalfEdge, HalfEdge)] {
        &self.arcs
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    pub fn boundary(&self) -> &[NodeId] {
        &self.boundary
    }

    /// Ids of the crossing nodes, in node order.
    pub fn crossings(&self) -> Vec<NodeId> {
        (0..self.nodes.len())
            .filter(|&i| self.nodes[i].kind == NodeKind::Crossing)
            .collect()
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings().len()
    }

    /// The first crossing, if any.
    pub fn first_crossing(&self) -> Option<NodeId> {
        (0..self.nodes.len()).find(|&i| self.nodes[i].kind == NodeKind::Crossing)
    }

    /// Checks the structural invariants: crossings have exactly four
    /// half-edges, every half-edge is attached to exactly one node and used
    /// by exactly one arc, arcs join two distinct half-edges, and boundary
    /// marks are distinct univalent vertex nodes.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut at = HashMap::new();
        for (i, node) in self.nodes.iter().enumerate() {
            if node.kind == NodeKind::Crossing && node.halfedges.len() != 4 {
                return Err(DiagramError::Malformed(format!(
                    "crossing node {i} has {} half-edges, expected 4",
                    node.halfedges.len()
                )));
            }
            for (p, &h) in node.halfedges.iter().enumerate() {
                if at.insert(h, (i, p)).is_some() {
                    return Err(DiagramError::Malformed(format!(
                        "half-edge {h} is attached to more than one node position"
                    )));
                }
            }
        }
        let mut used = HashMap::new();
        for (k, &(a, b)) in self.arcs.iter().enumerate() {
            if a == b {
                return Err(DiagramError::Malformed(format!(
                    "arc {k} joins half-edge {a} to itself"
                )));
            }
            for h in [a, b] {
                if !at.contains_key(&h) {
                    return Err(DiagramError::Malformed(format!(
                        "arc {k} references unattached half-edge {h}"
                    )));
                }
                if used.insert(h, k).is_some() {
                    return Err(DiagramError::Malformed(format!(
                        "half-edge {h} is used by more than one arc"
                    )));
                }
            }
        }
        if let Some((&h, _)) = at.iter().find(|(h, _)| !used.contains_key(h)) {
            return Err(DiagramError::Malformed(format!(
                "half-edge {h} is not used by any arc"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for &b in &self.boundary {
            if b >= self.nodes.len() {
                return Err(DiagramError::NoSuchNode(b));
            }
            if !seen.insert(b) {
                return Err(DiagramError::Malformed(format!(
                    "boundary node {b} is marked twice"
                )));
            }
            let node = &self.nodes[b];
            if node.kind != NodeKind::Vertex || node.halfedges.len() != 1 {
                return Err(DiagramError::Malformed(format!(
                    "boundary node {b} must be a univalent vertex"
                )));
            }
        }
        Ok(())
    }

    fn index(&self) -> Index {
        let mut at = HashMap::new();
        for (i, node) in self.nodes.iter().enumerate() {
            for (p, &h) in node.halfedges.iter().enumerate() {
                at.insert(h, (i, p));
            }
        }
        let mut partner = HashMap::new();
        for &(a, b) in &self.arcs {
            partner.insert(a, b);
            partner.insert(b, a);
        }
        Index { at, partner }
    }

    /// The node and rotation position a half-edge is attached to.
    pub fn halfedge_location(&self, h: HalfEdge) -> Option<(NodeId, usize)> {
        self.nodes.iter().enumerate().find_map(|(i, node)| {
            node.halfedges
                .iter()
                .position(|&x| x == h)
                .map(|p| (i, p))
        })
    }

    /// The other end of the arc using `h`.
    pub fn arc_partner(&self, h: HalfEdge) -> Option<HalfEdge> {
        self.arcs.iter().find_map(|&(a, b)| {
            if a == h {
                Some(b)
            } else if b == h {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Faces of the diagram as orbits of directed arc sides. Each orbit
    /// entry is a *tail* half-edge `h`, standing for the directed traversal
    /// from `h`'s node across its arc; the successor is the rotation
    /// successor of the arc partner. Free circles contribute no faces here
    /// (each is a sphere of its own).
    pub fn faces(&self) -> Vec<Vec<HalfEdge>> {
        let ix = self.index();
        let next = |h: HalfEdge| -> HalfEdge {
            let p = ix.partner[&h];
            let (n, pos) = ix.at[&p];
            let rot = &self.nodes[n].halfedges;
            rot[(pos + 1) % rot.len()]
        };
        let mut seen = std::collections::HashSet::new();
        let mut faces = Vec::new();
        let mut tails: Vec<HalfEdge> = ix.at.keys().copied().collect();
        tails.sort_unstable();
        for start in tails {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            loop {
                seen.insert(h);
                face.push(h);
                h = next(h);
                if h == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    /// Sum over connected components of `2 - (V - E + F)`; zero exactly when
    /// every component embeds in the sphere, i.e. when the diagram really is
    /// a plane drawing. Components without arcs (isolated nodes, free
    /// circles) are spheres by convention.
    pub fn genus_defect(&self) -> i64 {
        let ix = self.index();
        // Union-find over nodes through arcs.
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.arcs {
            let (na, _) = ix.at[&a];
            let (nb, _) = ix.at[&b];
            let (ra, rb) = (find(&mut parent, na), find(&mut parent, nb));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut verts: HashMap<usize, i64> = HashMap::new();
        let mut edges: HashMap<usize, i64> = HashMap::new();
        let mut faces: HashMap<usize, i64> = HashMap::new();
        for n in 0..self.nodes.len() {
            let r = find(&mut parent, n);
            *verts.entry(r).or_default() += 1;
        }
        for &(a, _) in &self.arcs {
            let (na, _) = ix.at[&a];
            let r = find(&mut parent, na);
            *edges.entry(r).or_default() += 1;
        }
        for face in self.faces() {
            let (n, _) = ix.at[&face[0]];
            let r = find(&mut parent, n);
            *faces.entry(r).or_default() += 1;
        }
        let mut defect = 0;
        for (&r, &v) in &verts {
            let e = edges.get(&r).copied().unwrap_or(0);
            if e == 0 {
                continue; // isolated node: a sphere
            }
            let f = faces.get(&r).copied().unwrap_or(0);
            defect += 2 - (v - e + f);
        }
        defect
    }

    /// True when the diagram validates and traces out spheres, i.e. it is a
    /// genuine plane drawing of a spatial-graph projection.
    pub fn is_realizable(&self) -> bool {
        self.validate().is_ok() && self.genus_defect() == 0
    }

    /// Traces all strands through the crossings, producing the underlying
    /// abstract multigraph. Closed strands and free circles each become a
    /// fresh vertex carrying one loop edge, so that `V - E` bookkeeping sees
    /// them as circles.
    pub fn underlying_graph(&self) -> UnderlyingGraph {
        let ix = self.index();
        let mut vertex_of_node = HashMap::new();
        let mut n_vertices = 0;
        for (i, node) in self.nodes.iter().enumerate() {
            if node.kind == NodeKind::Vertex {
                vertex_of_node.insert(i, n_vertices);
                n_vertices += 1;
            }
        }
        let mut g = MultiGraph::new(n_vertices);
        let mut strand_passages: Vec<Vec<(NodeId, bool)>> = Vec::new();
        let mut visited = std::collections::HashSet::new();

        // Walk from `start` (a half-edge at a vertex node) through crossings
        // until another vertex node is reached; record crossing passages.
        let walk_open = |start: HalfEdge, visited: &mut std::collections::HashSet<HalfEdge>| {
            visited.insert(start);
            let mut passages = Vec::new();
            let mut cur = ix.partner[&start];
            loop {
                visited.insert(cur);
                let (n, pos) = ix.at[&cur];
                if self.nodes[n].kind == NodeKind::Vertex {
                    return (n, passages);
                }
                passages.push((n, pos % 2 == 0));
                let out = self.nodes[n].halfedges[(pos + 2) % 4];
                visited.insert(out);
                cur = ix.partner[&out];
            }
        };

        for (i, node) in self.nodes.iter().enumerate() {
            if node.kind != NodeKind::Vertex {
                continue;
            }
            for &h in &node.halfedges {
                if visited.contains(&h) {
                    continue;
                }
                let (end_node, passages) = walk_open(h, &mut visited);
                let e = g.add_edge(vertex_of_node[&i], vertex_of_node[&end_node]);
                debug_assert_eq!(e, strand_passages.len());
                strand_passages.push(passages);
            }
        }

        // Remaining half-edges belong to closed strands through crossings.
        let mut all: Vec<HalfEdge> = ix.at.keys().copied().collect();
        all.sort_unstable();
        for start in all {
            if visited.contains(&start) {
                continue;
            }
            let mut passages = Vec::new();
            let mut cur = start;
            loop {
                visited.insert(cur);
                let (n, pos) = ix.at[&cur];
                passages.push((n, pos % 2 == 0));
                let out = self.nodes[n].halfedges[(pos + 2) % 4];
                visited.insert(out);
                cur = ix.partner[&out];
                if cur == start {
                    break;
                }
            }
            let v = g.add_vertex();
            let e = g.add_edge(v, v);
            debug_assert_eq!(e, strand_passages.len());
            strand_passages.push(passages);
        }

        for _ in 0..self.free_circles {
            let v = g.add_vertex();
            g.add_edge(v, v);
            strand_passages.push(Vec::new());
        }

        let mut crossing_strands: HashMap<NodeId, (Option<usize>, Option<usize>)> = HashMap::new();
        for (edge, passages) in strand_passages.iter().enumerate() {
            for &(c, over) in passages {
                let entry = crossing_strands.entry(c).or_insert((None, None));
                if over {
                    entry.0 = Some(edge);
                } else {
                    entry.1 = Some(edge);
                }
            }
        }
        let crossing_strands = crossing_strands
            .into_iter()
            .map(|(c, (o, u))| {
                (
                    c,
                    (
                        o.expect("every crossing carries an over strand"),
                        u.expect("every crossing carries an under strand"),
                    ),
                )
            })
            .collect();

        UnderlyingGraph {
            graph: g,
            crossing_strands,
            vertex_of_node,
        }
    }

    /// `V - E` of the underlying graph (crossings are not vertices).
    pub fn euler_characteristic(&self) -> i64 {
        let g = self.underlying_graph().graph;
        g.num_vertices() as i64 - g.num_edges() as i64
    }

    /// Number of degree-3 vertices of the underlying graph.
    pub fn trivalent_count(&self) -> usize {
        let g = self.underlying_graph().graph;
        (0..g.num_vertices()).filter(|&v| g.degree(v) == 3).count()
    }

    /// The exponent `V3 - (V - E)` appearing in the golden identity for
    /// spatial graphs; non-negative whenever all degrees are 2 or 3.
    pub fn e_prime(&self) -> i64 {
        self.trivalent_count() as i64 - self.euler_characteristic()
    }

    /// Replaces the crossing `c` by each of its three resolutions.
    pub fn resolve_crossing(&self, c: NodeId) -> Result<CrossingResolutions, DiagramError> {
        let node = self.nodes.get(c).ok_or(DiagramError::NoSuchNode(c))?;
        if node.kind != NodeKind::Crossing {
            return Err(DiagramError::NotACrossing(c));
        }
        let h = node.halfedges.clone();
        let q_join = self.splice_out(c, [(h[0], h[1]), (h[2], h[3])]);
        let q_inverse_join = self.splice_out(c, [(h[0], h[3]), (h[1], h[2])]);
        let mut flat = self.clone();
        flat.nodes[c].kind = NodeKind::Vertex;
        Ok(CrossingResolutions {
            q_join,
            flat,
            q_inverse_join,
        })
    }

    /// Replaces the crossing `c` by the "I"-shaped insertion: two trivalent
    /// vertices joined by a fresh edge, attached so that contracting the new
    /// edge gives the flat (4-valent vertex) resolution and deleting it
    /// gives the `q^{-1}` join.
    pub fn i_form_resolution(&self, c: NodeId) -> Result<PlanarDiagram, DiagramError> {
        let node = self.nodes.get(c).ok_or(DiagramError::NoSuchNode(c))?;
        if node.kind != NodeKind::Crossing {
            return Err(DiagramError::NotACrossing(c));
        }
        let h = node.halfedges.clone();
        let fresh = self.max_halfedge() + 1;
        let (m0, m1) = (fresh, fresh + 1);
        let mut nodes = self.nodes.clone();
        nodes[c] = Node {
            kind: NodeKind::Vertex,
            halfedges: vec![h[0], m0, h[3]],
        };
        nodes.push(Node {
            kind: NodeKind::Vertex,
            halfedges: vec![h[1], h[2], m1],
        });
        let mut arcs = self.arcs.clone();
        arcs.push((m0, m1));
        PlanarDiagram::with_boundary(nodes, arcs, self.free_circles, self.boundary.clone())
    }

    fn max_halfedge(&self) -> HalfEdge {
        self.nodes
            .iter()
            .flat_map(|n| n.halfedges.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Removes node `c`, splicing its half-edges together along the two
    /// `joins` pairs. Splices that close up entirely become free circles.
    fn splice_out(&self, c: NodeId, joins: [(HalfEdge, HalfEdge); 2]) -> PlanarDiagram {
        let mut partner: HashMap<HalfEdge, HalfEdge> = HashMap::new();
        for &(a, b) in &self.arcs {
            partner.insert(a, b);
            partner.insert(b, a);
        }
        let mut circles = 0;
        for (a, b) in joins {
            let pa = partner.remove(&a).expect("half-edge has an arc");
            let pb = partner.remove(&b).expect("half-edge has an arc");
            if pa == b {
                // The arc ran directly between the joined pair: closed circle.
                circles += 1;
                continue;
            }
            partner.insert(pa, pb);
            partner.insert(pb, pa);
        }
        let removed: std::collections::HashSet<HalfEdge> =
            self.nodes[c].halfedges.iter().copied().collect();
        let mut arcs = Vec::new();
        let mut done = std::collections::HashSet::new();
        let mut keys: Vec<HalfEdge> = partner.keys().copied().collect();
        keys.sort_unstable();
        for a in keys {
            if removed.contains(&a) || done.contains(&a) {
                continue;
            }
            let b = partner[&a];
            debug_assert!(!removed.contains(&b));
            done.insert(a);
            done.insert(b);
            arcs.push((a.min(b), a.max(b)));
        }
        let mut nodes = self.nodes.clone();
        nodes.remove(c);
        let boundary = self
            .boundary
            .iter()
            .map(|&b| if b > c { b - 1 } else { b })
            .collect();
        PlanarDiagram {
            nodes,
            arcs,
            free_circles: self.free_circles + circles,
            boundary,
        }
    }

    /// Switches every crossing: the under-strand becomes the over-strand.
    /// Resolving a crossing of the mirror yields the same three diagrams
    /// with the `q` and `q^{-1}` joins exchanged.
    pub fn mirror(&self) -> PlanarDiagram {
        let mut nodes = self.nodes.clone();
        for node in &mut nodes {
            if node.kind == NodeKind::Crossing {
                node.halfedges.rotate_left(1);
            }
        }
        PlanarDiagram {
            nodes,
            arcs: self.arcs.clone(),
            free_circles: self.free_circles,
            boundary: self.boundary.clone(),
        }
    }

    /// Disjoint union; the other diagram's half-edges are shifted past this
    /// diagram's, and its boundary marks are dropped.
    pub fn disjoint_union(&self, other: &PlanarDiagram) -> PlanarDiagram {
        let shift = self.max_halfedge() + 1;
        let mut nodes = self.nodes.clone();
        for node in &other.nodes {
            nodes.push(Node {
                kind: node.kind,
                halfedges: node.halfedges.iter().map(|&h| h + shift).collect(),
            });
        }
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(a, b)| (a + shift, b + shift)));
        PlanarDiagram {
            nodes,
            arcs,
            free_circles: self.free_circles + other.free_circles,
            boundary: self.boundary.clone(),
        }
    }

    /// Wedge: glue vertex node `w` of `other` onto vertex node `v` of this
    /// diagram, inserting `other`'s rotation at the end of `v`'s rotation
    /// (a one-point union drawn in a small disk at `v`). Boundary marks are
    /// dropped.
    pub fn wedge(
        &self,
        v: NodeId,
        other: &PlanarDiagram,
        w: NodeId,
    ) -> Result<PlanarDiagram, DiagramError> {
        for (d, x) in [(self, v), (other, w)] {
            let node = d.nodes.get(x).ok_or(DiagramError::NoSuchNode(x))?;
            if node.kind != NodeKind::Vertex {
                return Err(DiagramError::Precondition(format!(
                    "wedge point {x} must be a vertex node"
                )));
            }
        }
        let shift = self.max_halfedge() + 1;
        let mut nodes = self.nodes.clone();
        nodes[v]
            .halfedges
            .extend(other.nodes[w].halfedges.iter().map(|&h| h + shift));
        for (i, node) in other.nodes.iter().enumerate() {
            if i == w {
                continue;
            }
            nodes.push(Node {
                kind: node.kind,
                halfedges: node.halfedges.iter().map(|&h| h + shift).collect(),
            });
        }
        let mut arcs = self.arcs.clone();
        arcs.extend(other.arcs.iter().map(|&(a, b)| (a + shift, b + shift)));
        let d = PlanarDiagram {
            nodes,
            arcs,
            free_circles: self.free_circles + other.free_circles,
            boundary: Vec::new(),
        };
        d.validate()?;
        Ok(d)
    }

    /// Applies a Reidemeister II or III rewrite at the given site.
    pub fn apply_reidemeister(&self, mv: &ReidemeisterMove) -> Result<PlanarDiagram, DiagramError> {
        match *mv {
            ReidemeisterMove::TwoInsert {
                tail_a,
                tail_b,
                first_over,
            } => self.reidemeister_two(tail_a, tail_b, first_over),
            ReidemeisterMove::ThreeSlide { face_tail } => self.reidemeister_three(face_tail),
        }
    }

    fn reidemeister_two(
        &self,
        tail_a: HalfEdge,
        tail_b: HalfEdge,
        first_over: bool,
    ) -> Result<PlanarDiagram, DiagramError> {
        let ix = self.index();
        if !ix.at.contains_key(&tail_a) || !ix.at.contains_key(&tail_b) {
            return Err(DiagramError::InvalidSite(
                "unknown half-edge in Reidemeister II site".into(),
            ));
        }
        let face = self
            .faces()
            .into_iter()
            .find(|f| f.contains(&tail_a))
            .expect("every half-edge lies on a face");
        if !face.contains(&tail_b) {
            return Err(DiagramError::InvalidSite(
                "Reidemeister II needs two arc sides on a common face".into(),
            ));
        }
        let x = tail_a;
        let xp = ix.partner[&x];
        let y = tail_b;
        let yp = ix.partner[&y];
        if (x.min(xp), x.max(xp)) == (y.min(yp), y.max(yp)) {
            return Err(DiagramError::InvalidSite(
                "Reidemeister II needs two distinct arcs".into(),
            ));
        }
        let fresh = self.max_halfedge() + 1;
        // Face orbits walk their boundary with the face region to the
        // right, so inside the common face the two directed sides run
        // antiparallel: side a east->west along the bottom, side b
        // west->east along the top. Pushing a finger of a up across b
        // creates an eastern crossing (met first by a, climbing
        // southeast->northwest while b crosses southwest->northeast) and a
        // western one (a descends northeast->southwest, b crosses
        // northwest->southeast).
        let (c1_a_in, c1_a_out, c1_b_in, c1_b_out) = (fresh, fresh + 1, fresh + 2, fresh + 3);
        let (c2_a_in, c2_a_out, c2_b_in, c2_b_out) =
            (fresh + 4, fresh + 5, fresh + 6, fresh + 7);
        // Counterclockwise rotations starting on strand a, so a passes over.
        let mut rot1 = vec![c1_a_out, c1_b_in, c1_a_in, c1_b_out];
        let mut rot2 = vec![c2_a_in, c2_b_in, c2_a_out, c2_b_out];
        if !first_over {
            rot1.rotate_left(1);
            rot2.rotate_left(1);
        }
        let mut nodes = self.nodes.clone();
        nodes.push(Node {
            kind: NodeKind::Crossing,
            halfedges: rot1,
        });
        nodes.push(Node {
            kind: NodeKind::Crossing,
            halfedges: rot2,
        });
        let mut arcs: Vec<(HalfEdge, HalfEdge)> = self
            .arcs
            .iter()
            .copied()
            .filter(|&(a, b)| {
                (a.min(b), a.max(b)) != (x.min(xp), x.max(xp))
                    && (a.min(b), a.max(b)) != (y.min(yp), y.max(yp))
            })
            .collect();
        arcs.extend([
            (x, c1_a_in),
            (c1_a_out, c2_a_in),
            (c2_a_out, xp),
            (y, c2_b_in),
            (c2_b_out, c1_b_in),
            (c1_b_out, yp),
        ]);
        let d = PlanarDiagram {
            nodes,
            arcs,
            free_circles: self.free_circles,
            boundary: self.boundary.clone(),
        };
        d.validate()?;
        Ok(d)
    }

    fn reidemeister_three(&self, face_tail: HalfEdge) -> Result<PlanarDiagram, DiagramError> {
        let ix = self.index();
        if !ix.at.contains_key(&face_tail) {
            return Err(DiagramError::InvalidSite(
                "unknown half-edge in Reidemeister III site".into(),
            ));
        }
        let face = self
            .faces()
            .into_iter()
            .find(|f| f.contains(&face_tail))
            .expect("every half-edge lies on a face");
        if face.len() != 3 {
            return Err(DiagramError::InvalidSite(format!(
                "Reidemeister III needs a triangular face, found length {}",
                face.len()
            )));
        }
        // Corner i sits at the node reached through face[i]'s arc; the two
        // triangle-side half-edges there are partner(face[i]) and face[i+1].
        let mut corners = Vec::new();
        for i in 0..3 {
            let p = ix.partner[&face[i]];
            let (n, _) = ix.at[&p];
            let f_next = face[(i + 1) % 3];
            corners.push((n, p, f_next));
        }
        let corner_nodes: Vec<NodeId> = corners.iter().map(|&(n, _, _)| n).collect();
        if corner_nodes.iter().any(|&n| self.nodes[n].kind != NodeKind::Crossing) {
            return Err(DiagramError::InvalidSite(
                "Reidemeister III needs three crossing corners".into(),
            ));
        }
        if corner_nodes[0] == corner_nodes[1]
            || corner_nodes[1] == corner_nodes[2]
            || corner_nodes[0] == corner_nodes[2]
        {
            return Err(DiagramError::InvalidSite(
                "Reidemeister III corners must be distinct crossings".into(),
            ));
        }
        // Side i of the triangle is the arc traversed from face[i]; it meets
        // corner i-1 at its tail and corner i at its head. At each corner
        // exactly one of the two meeting sides is on the over strand; a
        // slide exists unless the three "beats" form a cycle.
        let over_at = |h: HalfEdge| -> bool {
            let (_, pos) = ix.at[&h];
            pos % 2 == 0
        };
        // beats[i] = true when side i passes over side i+1 at corner i.
        let beats: Vec<bool> = (0..3).map(|i| over_at(corners[i].1)).collect();
        if beats.iter().all(|&b| b) || beats.iter().all(|&b| !b) {
            return Err(DiagramError::InvalidSite(
                "Reidemeister III needs a non-cyclic over/under pattern".into(),
            ));
        }
        // Swap each corner's triangle-side half-edges with their
        // strand-opposites in the arc list; rotations stay fixed.
        let mut relabel: HashMap<HalfEdge, HalfEdge> = HashMap::new();
        for &(n, p, f_next) in &corners {
            for h in [p, f_next] {
                let (_, pos) = ix.at[&h];
                let opp = self.nodes[n].halfedges[(pos + 2) % 4];
                relabel.insert(h, opp);
                relabel.insert(opp, h);
            }
        }
        let arcs = self
            .arcs
            .iter()
            .map(|&(a, b)| {
                (
                    relabel.get(&a).copied().unwrap_or(a),
                    relabel.get(&b).copied().unwrap_or(b),
                )
            })
            .collect();
        let d = PlanarDiagram {
            nodes: self.nodes.clone(),
            arcs,
            free_circles: self.free_circles,
            boundary: self.boundary.clone(),
        };
        d.validate()?;
        Ok(d)
    }

    /// All Reidemeister II sites: ordered pairs of distinct-arc tails on a
    /// common face.
    pub fn rii_sites(&self) -> Vec<(HalfEdge, HalfEdge)> {
        let ix = self.index();
        let mut sites = Vec::new();
        for face in self.faces() {
            for (i, &a) in face.iter().enumerate() {
                for &b in face.iter().skip(i + 1) {
                    let pa = ix.partner[&a];
                    let pb = ix.partner[&b];
                    if (a.min(pa), a.max(pa)) != (b.min(pb), b.max(pb)) {
                        sites.push((a, b));
                        sites.push((b, a));
                    }
                }
            }
        }
        sites
    }

    /// All valid Reidemeister III sites, one face-tail per triangle.
    pub fn riii_sites(&self) -> Vec<HalfEdge> {
        let mut sites = Vec::new();
        for face in self.faces() {
            if face.len() != 3 {
                continue;
            }
            let tail = face[0];
            if self.reidemeister_three(tail).is_ok() {
                sites.push(tail);
            }
        }
        sites
    }

    /// Serializes to the documented JSON schema.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("diagram serialization cannot fail")
    }

    /// Parses and validates a diagram from the documented JSON schema.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, DiagramError> {
        let d: PlanarDiagram =
            serde_json::from_value(v.clone()).map_err(|e| DiagramError::Json(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }
}

impl DiskGraph {
    /// Wraps a crossing-free diagram whose marked boundary nodes are its
    /// ordered legs.
    pub fn new(diagram: PlanarDiagram) -> Result<Self, DiagramError> {
        diagram.validate()?;
        if diagram.num_crossings() > 0 {
            return Err(DiagramError::Precondition(
                "disk graphs must be crossing-free".into(),
            ));
        }
        if diagram.boundary().is_empty() {
            return Err(DiagramError::Precondition(
                "disk graphs need at least one marked boundary node".into(),
            ));
        }
        Ok(DiskGraph { diagram })
    }

    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn boundary(&self) -> &[NodeId] {
        self.diagram.boundary()
    }

    /// Number of boundary legs.
    pub fn legs(&self) -> usize {
        self.diagram.boundary().len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.diagram.to_json()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, DiagramError> {
        Self::new(PlanarDiagram::from_json(v)?)
    }
}
