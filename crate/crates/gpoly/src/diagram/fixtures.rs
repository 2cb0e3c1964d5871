//! Named diagram fixtures: unknots, braid closures, flat embeddings of the
//! small graphs, a knotted theta curve, and straight-line drawings of the
//! two classic non-planar graphs. Used across tests, examples, and the
//! verification corpora.

use super::geometry::from_straight_line;
use super::{Node, NodeKind, PlanarDiagram, ReidemeisterMove};
use crate::error::DiagramError;
use crate::graph::multigraph::MultiGraph;
use crate::graph::{gen, planar};

/// One crossing-free circle and nothing else.
pub fn circle() -> PlanarDiagram {
    PlanarDiagram::new(Vec::new(), Vec::new(), 1).expect("fixture is valid")
}

/// A single vertex carrying `k` side-by-side loops.
pub fn bouquet(k: usize) -> PlanarDiagram {
    let node = Node {
        kind: NodeKind::Vertex,
        halfedges: (0..2 * k).collect(),
    };
    let arcs = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
    PlanarDiagram::new(vec![node], arcs, 0).expect("fixture is valid")
}

/// One vertex with a single loop: a circle with a marked point.
pub fn loop_vertex() -> PlanarDiagram {
    bouquet(1)
}

/// A circle subdivided by two 2-valent vertices.
pub fn two_vertex_unknot() -> PlanarDiagram {
    let nodes = vec![
        Node {
            kind: NodeKind::Vertex,
            halfedges: vec![0, 3],
        },
        Node {
            kind: NodeKind::Vertex,
            halfedges: vec![1, 2],
        },
    ];
    PlanarDiagram::new(nodes, vec![(0, 1), (2, 3)], 0).expect("fixture is valid")
}

/// An unknot drawn with one kink: a single crossing whose four ends close
/// up into one strand.
pub fn kink_unknot() -> PlanarDiagram {
    let node = Node {
        kind: NodeKind::Crossing,
        halfedges: vec![0, 1, 2, 3],
    };
    PlanarDiagram::new(vec![node], vec![(3, 0), (1, 2)], 0).expect("fixture is valid")
}

/// An unknot carrying a clasp of two crossings, produced by applying a
/// Reidemeister II move to [`two_vertex_unknot`].
pub fn rii_unknot() -> PlanarDiagram {
    let base = two_vertex_unknot();
    let (tail_a, tail_b) = base.rii_sites()[0];
    base.apply_reidemeister(&ReidemeisterMove::TwoInsert {
        tail_a,
        tail_b,
        first_over: true,
    })
    .expect("fixture site is valid")
}

/// A crossing-free diagram of a planar multigraph, using a planarity
/// witness rotation system.
pub fn flat(g: &MultiGraph) -> Result<PlanarDiagram, DiagramError> {
    let rot = planar::planar_embedding(g)
        .ok_or_else(|| DiagramError::NotPlanar("graph has no planar embedding".into()))?;
    PlanarDiagram::from_rotation(g, &rot)
}

/// The standard crossing-free theta-curve diagram.
pub fn flat_theta() -> PlanarDiagram {
    flat(&gen::theta()).expect("theta is planar")
}

/// Closure of a braid word on `strands` strands. Letters are `±i` for the
/// generator swapping positions `i` and `i + 1` (1-based); the sign selects
/// which strand passes over. Positions never used by the word close into
/// free circles.
pub fn braid_closure(strands: usize, word: &[i32]) -> PlanarDiagram {
    assert!(strands >= 1, "a braid needs at least one strand");
    let mut nodes = Vec::new();
    let mut arcs = Vec::new();
    let mut pending: Vec<Option<usize>> = vec![None; strands];
    let mut first: Vec<Option<usize>> = vec![None; strands];
    let mut next_id = 0;
    for &letter in word {
        assert!(letter != 0, "braid letters are nonzero");
        let j = (letter.unsigned_abs() as usize) - 1;
        assert!(
            j + 1 < strands,
            "braid letter {letter} does not fit in {strands} strands"
        );
        let (nw, sw, se, ne) = (next_id, next_id + 1, next_id + 2, next_id + 3);
        next_id += 4;
        let mut rot = vec![nw, sw, se, ne];
        if letter < 0 {
            rot.rotate_left(1);
        }
        nodes.push(Node {
            kind: NodeKind::Crossing,
            halfedges: rot,
        });
        for (pos, top) in [(j, nw), (j + 1, ne)] {
            match pending[pos].take() {
                Some(p) => arcs.push((p, top)),
                None => first[pos] = Some(top),
            }
        }
        pending[j] = Some(sw);
        pending[j + 1] = Some(se);
    }
    let mut free_circles = 0;
    for pos in 0..strands {
        match (first[pos], pending[pos]) {
            (Some(f), Some(p)) => arcs.push((p, f)),
            (None, None) => free_circles += 1,
            _ => unreachable!("tops and bottoms of a braid position come in pairs"),
        }
    }
    PlanarDiagram::new(nodes, arcs, free_circles).expect("braid closures are valid")
}

/// The left-handed trefoil knot as a 2-strand braid closure.
pub fn trefoil() -> PlanarDiagram {
    braid_closure(2, &[1, 1, 1])
}

/// The Hopf link as a 2-strand braid closure.
pub fn hopf_link() -> PlanarDiagram {
    braid_closure(2, &[1, 1])
}

/// The figure-eight knot as a 3-strand braid closure.
pub fn figure_eight() -> PlanarDiagram {
    braid_closure(3, &[1, -2, 1, -2])
}

/// A nontrivially embedded theta curve: one edge of the flat theta is cut
/// open and rerouted through a trefoil tangle, so one constituent cycle of
/// the theta is a trefoil knot.
pub fn knotted_theta() -> PlanarDiagram {
    let base = flat_theta();
    // Edge 2 of the theta owns half-edges 4 and 5; cut its arc.
    let mut arcs: Vec<(usize, usize)> = base
        .arcs()
        .iter()
        .copied()
        .filter(|&(a, b)| (a.min(b), a.max(b)) != (4, 5))
        .collect();
    let mut nodes = base.nodes().to_vec();
    // Three positive crossings of an open 2-braid, ids 6..18 as
    // [nw, sw, se, ne] blocks.
    for c in 0..3 {
        let base_id = 6 + 4 * c;
        nodes.push(Node {
            kind: NodeKind::Crossing,
            halfedges: vec![base_id, base_id + 1, base_id + 2, base_id + 3],
        });
    }
    let (x_nw, x_sw, x_se, x_ne) = (6, 7, 8, 9);
    let (y_nw, y_sw, y_se, y_ne) = (10, 11, 12, 13);
    let (z_nw, z_sw, z_se, z_ne) = (14, 15, 16, 17);
    arcs.extend([
        (x_sw, y_nw),
        (x_se, y_ne),
        (y_sw, z_nw),
        (y_se, z_ne),
        (z_sw, x_nw), // closure of the braid's first position
        (4, x_ne),    // splice the open ends into the theta edge
        (z_se, 5),
    ]);
    PlanarDiagram::new(nodes, arcs, 0).expect("fixture is valid")
}

/// A straight-line drawing of the complete bipartite graph on 3 + 3
/// vertices with a single crossing.
pub fn k33_one_crossing() -> PlanarDiagram {
    let pts = [(-4, 0), (4, 1), (8, 0), (0, 4), (0, -4), (0, 0)];
    from_straight_line(&gen::k33(), &pts).expect("drawing is generic")
}

/// The classic pentagram drawing of the Petersen graph: outer pentagon,
/// inner five-point star, five crossings.
pub fn petersen_diagram() -> PlanarDiagram {
    let pts = [
        (10, 0),
        (3, 10),
        (-9, 6),
        (-9, -6),
        (3, -10),
        (5, 0),
        (2, 5),
        (-4, 3),
        (-4, -3),
        (2, -5),
    ];
    from_straight_line(&gen::petersen(), &pts).expect("drawing is generic")
}

/// A deterministic corpus of diagrams with at most `max_crossings`
/// crossings, mixing crossing-free embeddings, braid closures, Reidemeister
/// variants, mirrors, and the knotted fixtures.
pub fn diagram_corpus(max_crossings: usize) -> Vec<PlanarDiagram> {
    let mut corpus: Vec<PlanarDiagram> = Vec::new();
    corpus.push(circle());
    corpus.push(bouquet(1));
    corpus.push(bouquet(2));
    corpus.push(bouquet(3));
    corpus.push(two_vertex_unknot());
    corpus.push(kink_unknot());
    corpus.push(kink_unknot().mirror());
    corpus.push(rii_unknot());
    for g in [
        gen::theta(),
        gen::dumbbell(),
        gen::k4(),
        gen::cube(),
        gen::diamond_ring(2),
        gen::handcuff_tree(2),
    ] {
        corpus.push(flat(&g).expect("fixture graphs are planar"));
    }
    // All 2-strand braid words of length 2..=4.
    for len in 2..=4usize {
        for mask in 0..(1u32 << len) {
            let word: Vec<i32> = (0..len)
                .map(|i| if mask & (1 << i) != 0 { 1 } else { -1 })
                .collect();
            corpus.push(braid_closure(2, &word));
        }
    }
    // A few 3-strand closures, including links and the figure-eight knot.
    for word in [
        vec![1, 2],
        vec![1, -2],
        vec![1, 2, 1],
        vec![1, 2, -1],
        vec![1, 2, 1, 2],
        vec![1, -2, 1, -2],
        vec![-1, 2, -1, 2],
    ] {
        corpus.push(braid_closure(3, &word));
    }
    corpus.push(trefoil());
    corpus.push(trefoil().mirror());
    corpus.push(hopf_link());
    corpus.push(knotted_theta());
    corpus.push(knotted_theta().mirror());
    corpus.push(k33_one_crossing());
    // Reidemeister II variants of the flat theta in both over/under senses.
    let theta = flat_theta();
    for (i, &(a, b)) in theta.rii_sites().iter().take(4).enumerate() {
        let mv = ReidemeisterMove::TwoInsert {
            tail_a: a,
            tail_b: b,
            first_over: i % 2 == 0,
        };
        corpus.push(theta.apply_reidemeister(&mv).expect("site is valid"));
    }
    corpus.retain(|d| d.num_crossings() <= max_crossings);
    corpus
}
