//! Exact straight-line drawings.
//!
//! [`from_straight_line`] places the vertices of a simple graph at integer
//! coordinates, draws every edge as a segment, and converts each transversal
//! segment intersection into a crossing node. All incidence and ordering
//! tests use exact integer/rational arithmetic, so the construction is a
//! deterministic function of the coordinates.

use std::cmp::Ordering;

use num::{BigInt, BigRational};

use super::{HalfEdge, Node, NodeKind, PlanarDiagram};
use crate::error::DiagramError;
use crate::graph::multigraph::MultiGraph;

/// z-component of the cross product (b - a) x (c - a).
fn cross(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let (abx, aby) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
    let (acx, acy) = ((c.0 - a.0) as i128, (c.1 - a.1) as i128);
    abx * acy - aby * acx
}

fn direction_cross(u: (i64, i64), v: (i64, i64)) -> i128 {
    u.0 as i128 * v.1 as i128 - u.1 as i128 * v.0 as i128
}

/// Counterclockwise comparator on non-zero direction vectors, starting from
/// the positive x-axis.
fn ccw_cmp(u: (i64, i64), v: (i64, i64)) -> Ordering {
    let half = |w: (i64, i64)| -> u8 {
        if w.1 < 0 || (w.1 == 0 && w.0 < 0) {
            1
        } else {
            0
        }
    };
    half(u).cmp(&half(v)).then_with(|| {
        let c = direction_cross(u, v);
        if c > 0 {
            Ordering::Less
        } else if c < 0 {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Draws the simple graph `g` with vertex `v` at `points[v]` and edges as
/// straight segments; every transversal intersection becomes a crossing
/// whose over strand is the edge with the *smaller* index. The drawing must
/// be in general position: distinct vertex points, no vertex in the interior
/// of another edge, no touching or overlapping segments, and no three edges
/// through one interior point.
pub fn from_straight_line(
    g: &MultiGraph,
    points: &[(i64, i64)],
) -> Result<PlanarDiagram, DiagramError> {
    if points.len() != g.num_vertices() {
        return Err(DiagramError::Precondition(format!(
            "expected {} points, got {}",
            g.num_vertices(),
            points.len()
        )));
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i] == points[j] {
                return Err(DiagramError::Precondition(format!(
                    "vertices {i} and {j} share a point"
                )));
            }
        }
    }
    let m = g.num_edges();
    for e in 0..m {
        let (u, v) = g.edge(e);
        if u == v {
            return Err(DiagramError::Precondition(
                "straight-line drawings need loop-free graphs".into(),
            ));
        }
        for f in (e + 1)..m {
            if {
                let (a, b) = g.edge(f);
                (a.min(b), a.max(b)) == (u.min(v), u.max(v))
            } {
                return Err(DiagramError::Precondition(
                    "straight-line drawings need simple graphs".into(),
                ));
            }
        }
    }

    // crossings_on[e]: (parameter along e, other edge, crossing id)
    let mut crossings_on: Vec<Vec<(BigRational, usize, usize)>> = vec![Vec::new(); m];
    let mut crossing_pairs: Vec<(usize, usize)> = Vec::new();
    for e in 0..m {
        let (ea, eb) = g.edge(e);
        let (pa, pb) = (points[ea], points[eb]);
        for f in (e + 1)..m {
            let (fc, fd) = g.edge(f);
            if ea == fc || ea == fd || eb == fc || eb == fd {
                // Shared endpoint: require non-collinear continuations so no
                // overlap can occur.
                let shared = if ea == fc || ea == fd { ea } else { eb };
                let other_e = if shared == ea { eb } else { ea };
                let other_f = if shared == fc { fd } else { fc };
                let c = cross(points[shared], points[other_e], points[other_f]);
                if c == 0 {
                    let dot = (points[other_e].0 - points[shared].0) as i128
                        * (points[other_f].0 - points[shared].0) as i128
                        + (points[other_e].1 - points[shared].1) as i128
                            * (points[other_f].1 - points[shared].1) as i128;
                    if dot > 0 {
                        return Err(DiagramError::Precondition(format!(
                            "edges {e} and {f} overlap at vertex {shared}"
                        )));
                    }
                }
                continue;
            }
            let (pc, pd) = (points[fc], points[fd]);
            let d1 = cross(pc, pd, pa);
            let d2 = cross(pc, pd, pb);
            let d3 = cross(pa, pb, pc);
            let d4 = cross(pa, pb, pd);
            let strict = |x: i128, y: i128| (x > 0 && y < 0) || (x < 0 && y > 0);
            if strict(d1, d2) && strict(d3, d4) {
                let id = crossing_pairs.len();
                let te = BigRational::new(BigInt::from(d1), BigInt::from(d1 - d2));
                let tf = BigRational::new(BigInt::from(d3), BigInt::from(d3 - d4));
                crossings_on[e].push((te, f, id));
                crossings_on[f].push((tf, e, id));
                crossing_pairs.push((e, f));
            } else if d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0 {
                // An endpoint touching the other segment would make the
                // projection non-generic.
                let on_segment = |p: (i64, i64), a: (i64, i64), b: (i64, i64)| {
                    cross(a, b, p) == 0
                        && p.0 >= a.0.min(b.0)
                        && p.0 <= a.0.max(b.0)
                        && p.1 >= a.1.min(b.1)
                        && p.1 <= a.1.max(b.1)
                };
                if on_segment(pa, pc, pd)
                    || on_segment(pb, pc, pd)
                    || on_segment(pc, pa, pb)
                    || on_segment(pd, pa, pb)
                {
                    return Err(DiagramError::Precondition(format!(
                        "edges {e} and {f} touch non-transversally"
                    )));
                }
            }
        }
        // A vertex of another edge lying inside this segment is also
        // non-generic even if its edges miss the interior.
        for (w, &p) in points.iter().enumerate() {
            if w == ea || w == eb {
                continue;
            }
            if cross(pa, pb, p) == 0
                && p.0 >= pa.0.min(pb.0)
                && p.0 <= pa.0.max(pb.0)
                && p.1 >= pa.1.min(pb.1)
                && p.1 <= pa.1.max(pb.1)
            {
                return Err(DiagramError::Precondition(format!(
                    "vertex {w} lies on edge {e}"
                )));
            }
        }
    }
    for (e, list) in crossings_on.iter_mut().enumerate() {
        list.sort_by(|x, y| x.0.cmp(&y.0));
        for pair in list.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(DiagramError::Precondition(format!(
                    "three segments meet at one point on edge {e}"
                )));
            }
        }
    }

    // Half-edge ids: edge e owns a contiguous block. Along e (from its first
    // endpoint) the strand pieces are v0 -> x1 -> x2 -> ... -> v1; the block
    // stores [start dart, (back, forward) per crossing..., end dart].
    let mut next_id: HalfEdge = 0;
    let mut alloc = |k: usize| -> Vec<HalfEdge> {
        let block: Vec<HalfEdge> = (next_id..next_id + k).collect();
        next_id += k;
        block
    };
    let mut edge_block: Vec<Vec<HalfEdge>> = Vec::with_capacity(m);
    for e in 0..m {
        edge_block.push(alloc(2 + 2 * crossings_on[e].len()));
    }
    let start_dart = |e: usize| edge_block[e][0];
    let end_dart = |e: usize| *edge_block[e].last().expect("block is non-empty");
    // The k-th crossing along e (0-based): back dart points toward the start
    // vertex, forward dart toward the end vertex.
    let back_dart = |e: usize, k: usize| edge_block[e][1 + 2 * k];
    let forward_dart = |e: usize, k: usize| edge_block[e][2 + 2 * k];

    let mut nodes = Vec::new();
    for (v, &p) in points.iter().enumerate() {
        let mut darts: Vec<(HalfEdge, (i64, i64))> = Vec::new();
        for e in 0..m {
            let (a, b) = g.edge(e);
            if a == v {
                let q = points[b];
                darts.push((start_dart(e), (q.0 - p.0, q.1 - p.1)));
            } else if b == v {
                let q = points[a];
                darts.push((end_dart(e), (q.0 - p.0, q.1 - p.1)));
            }
        }
        darts.sort_by(|x, y| ccw_cmp(x.1, y.1));
        nodes.push(Node {
            kind: NodeKind::Vertex,
            halfedges: darts.into_iter().map(|(h, _)| h).collect(),
        });
    }
    for (id, &(e, f)) in crossing_pairs.iter().enumerate() {
        let ke = crossings_on[e]
            .iter()
            .position(|&(_, _, cid)| cid == id)
            .expect("crossing is listed on its edge");
        let kf = crossings_on[f]
            .iter()
            .position(|&(_, _, cid)| cid == id)
            .expect("crossing is listed on its edge");
        let dir = |edge: usize| {
            let (a, b) = g.edge(edge);
            (
                points[b].0 - points[a].0,
                points[b].1 - points[a].1,
            )
        };
        let de = dir(e);
        let df = dir(f);
        let neg = |w: (i64, i64)| (-w.0, -w.1);
        let mut darts = vec![
            (back_dart(e, ke), neg(de), e),
            (forward_dart(e, ke), de, e),
            (back_dart(f, kf), neg(df), f),
            (forward_dart(f, kf), df, f),
        ];
        darts.sort_by(|x, y| ccw_cmp(x.1, y.1));
        // Rotate so position 0 (the over strand) belongs to the
        // smaller-indexed edge.
        let over = e.min(f);
        let pos = darts
            .iter()
            .position(|&(_, _, owner)| owner == over)
            .expect("both edges contribute darts");
        darts.rotate_left(pos);
        nodes.push(Node {
            kind: NodeKind::Crossing,
            halfedges: darts.into_iter().map(|(h, _, _)| h).collect(),
        });
    }

    let mut arcs = Vec::new();
    for e in 0..m {
        let k = crossings_on[e].len();
        let mut prev = start_dart(e);
        for i in 0..k {
            arcs.push((prev, back_dart(e, i)));
            prev = forward_dart(e, i);
        }
        arcs.push((prev, end_dart(e)));
    }

    PlanarDiagram::new(nodes, arcs, 0)
}
