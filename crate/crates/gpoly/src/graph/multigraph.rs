//! A finite undirected multigraph: loops and parallel edges allowed.

use std::collections::VecDeque;

use crate::error::GraphError;

/// Vertex identifier: a dense index in `0..num_vertices()`.
pub type VertexId = usize;
/// Edge identifier: a dense index in `0..num_edges()`.
pub type EdgeId = usize;

/// An undirected multigraph on vertices `0..n`, stored as an edge list.
///
/// Loops (`u == v`) and parallel edges are both allowed. Structural edits
/// (`delete_edge`, `contract_edge`, ...) return new graphs and keep vertex
/// ids dense by moving the last vertex into any freed slot.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl MultiGraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// Builds a graph from an explicit edge list, validating endpoints.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::NoSuchVertex(u.max(v)));
            }
        }
        Ok(Self { n, edges: edges.to_vec() })
    }

    /// Number of vertices.
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Number of edges (loops count once).
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// The endpoint pair of an edge.
    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// All edges as endpoint pairs, indexed by `EdgeId`.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    /// Appends an edge and returns its id.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    /// True if the edge is a loop.
    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Number of loops attached to `v`.
    pub fn loops_at(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == b && a == v).count()
    }

    /// Total number of loop edges.
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == b).count()
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// Degrees of all vertices.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// True if every vertex has degree exactly 3.
    pub fn is_cubic(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    /// True if the graph has no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    /// Per-vertex incidence lists of `(edge, other endpoint)`; a loop at `v`
    /// appears twice in `v`'s list.
    pub fn adjacency(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((e, v));
            adj[v].push((e, u));
        }
        adj
    }

    /// All edges sharing both endpoints with `e` (including `e` itself).
    pub fn parallel_class(&self, e: EdgeId) -> Vec<EdgeId> {
        let (u, v) = self.edges[e];
        let (u, v) = (u.min(v), u.max(v));
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| (a.min(b), a.max(b)) == (u, v))
            .map(|(f, _)| f)
            .collect()
    }

    /// A copy with edge `e` removed (vertex set unchanged; edge ids above
    /// `e` shift down by one).
    pub fn delete_edge(&self, e: EdgeId) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Self { n: self.n, edges }
    }

    /// A copy with vertices `u` and `v` identified. Edges between them
    /// become loops. The merged vertex keeps id `min(u, v)`; the last vertex
    /// moves into the freed slot.
    pub fn identify_vertices(&self, u: VertexId, v: VertexId) -> Self {
        assert!(u < self.n && v < self.n);
        if u == v {
            return self.clone();
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let last = self.n - 1;
        let relabel = |x: VertexId| -> VertexId {
            if x == gone {
                keep
            } else if x == last {
                gone
            } else {
                x
            }
        };
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Self { n: self.n - 1, edges }
    }

    /// Contracts a non-loop edge: removes it and identifies its endpoints.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Self, GraphError> {
        if e >= self.edges.len() {
            return Err(GraphError::NoSuchEdge(e));
        }
        let (u, v) = self.edges[e];
        if u == v {
            return Err(GraphError::ContractLoop);
        }
        Ok(self.delete_edge(e).identify_vertices(u, v))
    }

    /// A copy with vertex `v` and all incident edges removed; the last
    /// vertex moves into the freed slot.
    pub fn remove_vertex(&self, v: VertexId) -> Self {
        assert!(v < self.n);
        let last = self.n - 1;
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| {
                let f = |x: VertexId| if x == last { v } else { x };
                (f(a), f(b))
            })
            .collect();
        Self { n: self.n - 1, edges }
    }

    /// Splits edge `e` with a new midpoint vertex; returns the new graph and
    /// the midpoint's id. The two replacement edges are appended at the end
    /// of the edge list.
    pub fn subdivide_edge(&self, e: EdgeId) -> (Self, VertexId) {
        let (u, v) = self.edges[e];
        let mut g = self.delete_edge(e);
        let w = g.add_vertex();
        g.add_edge(u, w);
        g.add_edge(w, v);
        (g, w)
    }

    /// Suppresses a vertex of degree exactly 2 whose two edge slots belong
    /// to distinct edges, joining its neighbours directly. Fails on a bare
    /// loop vertex (whose suppression would leave a free circle) and on any
    /// vertex of degree other than 2.
    pub fn smooth_vertex(&self, v: VertexId) -> Result<Self, GraphError> {
        if v >= self.n {
            return Err(GraphError::NoSuchVertex(v));
        }
        if self.degree(v) != 2 {
            return Err(GraphError::Precondition(format!(
                "vertex {v} has degree {}, expected 2",
                self.degree(v)
            )));
        }
        if self.loops_at(v) > 0 {
            return Err(GraphError::Precondition(format!(
                "vertex {v} carries a loop; suppressing it would leave a free circle"
            )));
        }
        let incident: Vec<(EdgeId, VertexId)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(e, &(a, b))| (e, if a == v { b } else { a }))
            .collect();
        debug_assert_eq!(incident.len(), 2);
        let (e1, a) = incident[0];
        let (e2, b) = incident[1];
        let mut g = self.delete_edge(e2).delete_edge(e1);
        debug_assert!(e1 < e2);
        g.add_edge(a, b);
        Ok(g.remove_vertex(v))
    }

    /// Component count and a component label per vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            label[start] = count;
            while let Some(v) = queue.pop_front() {
                for &(_, w) in &adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// True if the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.component_labels().0 <= 1
    }

    /// The connected components as separate graphs, each with densely
    /// relabelled vertices (preserving relative order).
    pub fn split_components(&self) -> Vec<MultiGraph> {
        let (count, label) = self.component_labels();
        if count <= 1 {
            return vec![self.clone()];
        }
        let mut local = vec![0usize; self.n];
        let mut sizes = vec![0usize; count];
        for v in 0..self.n {
            local[v] = sizes[label[v]];
            sizes[label[v]] += 1;
        }
        let mut parts: Vec<MultiGraph> = sizes.iter().map(|&s| MultiGraph::new(s)).collect();
        for &(u, v) in &self.edges {
            parts[label[u]].add_edge(local[u], local[v]);
        }
        parts
    }

    /// First Betti number `m - n + c`.
    pub fn cyclomatic(&self) -> usize {
        let c = self.component_labels().0;
        self.edges.len() + c - self.n
    }

    /// The ids of all bridge edges (loops and parallel copies are never
    /// bridges).
    pub fn bridges(&self) -> Vec<EdgeId> {
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut timer = 0usize;
        let mut out = Vec::new();

        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // Frames: (vertex, entry edge id or MAX, parent vertex, cursor).
            let mut stack: Vec<(usize, usize, usize, usize)> =
                vec![(root, usize::MAX, usize::MAX, 0)];
            while let Some(frame) = stack.last_mut() {
                let (v, entry_edge, _, cursor) = *frame;
                if cursor < adj[v].len() {
                    frame.3 += 1;
                    let (e, w) = adj[v][cursor];
                    if e == entry_edge {
                        continue; // the single arrival slot of the tree edge
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, e, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    let (v, entry_edge, parent, _) = stack.pop().unwrap();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push(entry_edge);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True if some edge is a bridge.
    pub fn has_bridge(&self) -> bool {
        !self.bridges().is_empty()
    }

    /// The disjoint union, with `other`'s vertices appended after `self`'s.
    pub fn disjoint_union(&self, other: &MultiGraph) -> Self {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self { n: self.n + other.n, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> MultiGraph {
        MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    fn dumbbell() -> MultiGraph {
        MultiGraph::from_edges(2, &[(0, 0), (1, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn degrees_and_shape() {
        let t = theta();
        assert_eq!(t.degrees(), vec![3, 3]);
        assert!(t.is_cubic());
        assert!(!t.is_simple());
        let d = dumbbell();
        assert_eq!(d.degrees(), vec![3, 3]);
        assert_eq!(d.loop_count(), 2);
        assert_eq!(d.loops_at(0), 1);
        assert!(d.is_cubic());
    }

    #[test]
    fn contraction_creates_loops_from_parallels() {
        let t = theta();
        let c = t.contract_edge(0).unwrap();
        assert_eq!(c.num_vertices(), 1);
        assert_eq!(c.loop_count(), 2);
        assert!(t.contract_edge(5).is_err());
        let d = dumbbell();
        assert!(matches!(d.contract_edge(0), Err(GraphError::ContractLoop)));
    }

    #[test]
    fn bridges_in_multigraphs() {
        // Dumbbell: the connecting edge is the unique bridge; loops are not.
        assert_eq!(dumbbell().bridges(), vec![2]);
        // Theta: parallel edges are never bridges.
        assert!(theta().bridges().is_empty());
        // A path has every edge as a bridge.
        let path = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.bridges(), vec![0, 1, 2]);
        // Two triangles joined by an edge: only the joining edge.
        let barbell = MultiGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
        )
        .unwrap();
        assert_eq!(barbell.bridges(), vec![6]);
    }

    #[test]
    fn components_and_cyclomatic() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let (count, label) = g.component_labels();
        assert_eq!(count, 2);
        assert_eq!(label[0], label[2]);
        assert_ne!(label[0], label[3]);
        assert_eq!(g.cyclomatic(), 1);
        let parts = g.split_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].num_edges(), 3);
        assert_eq!(parts[1].num_edges(), 1);
        assert!(theta().is_connected());
        assert_eq!(theta().cyclomatic(), 2);
    }

    #[test]
    fn subdivision_and_smoothing_are_inverse() {
        let t = theta();
        let (s, w) = t.subdivide_edge(1);
        assert_eq!(s.num_vertices(), 3);
        assert_eq!(s.degree(w), 2);
        let back = s.smooth_vertex(w).unwrap();
        assert_eq!(back.num_vertices(), 2);
        assert_eq!(back.num_edges(), 3);
        assert!(back.is_cubic());
    }

    #[test]
    fn smoothing_parallel_pair_gives_loop() {
        // 0 = 1 by a digon, smoothing vertex 1 turns it into a loop at 0.
        let digon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let g = digon.smooth_vertex(1).unwrap();
        assert_eq!(g.num_vertices(), 1);
        assert_eq!(g.loop_count(), 1);
        // A bare loop vertex cannot be smoothed.
        let circle = MultiGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert!(circle.smooth_vertex(0).is_err());
    }

    #[test]
    fn identify_and_remove_relabel_densely() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.identify_vertices(1, 3);
        assert_eq!(h.num_vertices(), 3);
        assert_eq!(h.num_edges(), 4);
        assert_eq!(h.degree(1), 4);
        let r = g.remove_vertex(0);
        assert_eq!(r.num_vertices(), 3);
        assert_eq!(r.num_edges(), 2);
    }

    #[test]
    fn disjoint_union_shifts_labels() {
        let u = theta().disjoint_union(&dumbbell());
        assert_eq!(u.num_vertices(), 4);
        assert_eq!(u.num_edges(), 6);
        assert_eq!(u.loops_at(2), 1);
        assert_eq!(u.component_labels().0, 2);
    }
}
