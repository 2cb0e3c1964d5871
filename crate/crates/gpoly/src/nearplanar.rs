//! Near-planar graphs: planar disks capped by the one abstract pairing that
//! needs a crossing.
//!
//! The flow polynomials of planar graphs drawn in a disk with four marked
//! boundary legs span a 3-dimensional space with the edge-free basis
//!
//! * `P0` — arcs {1–3, 2–4},
//! * `P1` — arcs {1–2, 3–4},
//! * `S`  — one 4-valent vertex joined to all four legs,
//!
//! (legs 1, 2 at the bottom, 3, 4 at the top, rim order (1, 2, 4, 3); see
//! [`crate::disk`]). [`DiskExpander`] writes any disk graph in this basis by
//! contraction–deletion. Capping a disk with the leftover abstract pairing
//! `X` = {1–4, 2–3} produces a *near-planar* graph — planar except for one
//! unavoidable crossing — and [`NearPlanarChecker`] verifies the exact
//! identities tying its flow polynomial to the expansion coefficients, to
//! golden-ratio evaluations of the planar resolutions, and to Yamada
//! evaluations of the two one-crossing diagrams.
//!
//! One glyph, two readings: *inside* the disk space the 4-valent star `S`
//! plays the role of the fourth natural element, while the abstract pairing
//! `X` appears only as a *cap* that closes a disk into a near-planar graph.
//! Both readings are forced by the pairing computations and are kept apart
//! in the API: [`Cap::Star`] versus [`Cap::X`].

use dashmap::DashMap;
use num::{BigInt, BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::geometry::from_straight_line;
use crate::diagram::{DiskGraph, Node, NodeKind, PlanarDiagram};
use crate::disk::{circle_components, Cap, MarkedDisk, PeripheralPosition};
use crate::error::CheckError;
use crate::flow::FlowEngine;
use crate::graph::{canonical_key, canonical_key_colored, planar_embedding, CanonKey, MultiGraph, VertexId};
use crate::report::Report;
use crate::rings::{GoldenNumber, IntPolynomial};
use crate::yamada::YamadaEngine;

/// Coordinates of a disk element over the ordered basis (`P0`, `P1`, `S`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticVector<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
}

impl<T> ChromaticVector<T> {
    pub fn new(alpha: T, beta: T, gamma: T) -> Self {
        ChromaticVector { alpha, beta, gamma }
    }

    /// Applies `f` to each coordinate.
    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> ChromaticVector<U> {
        ChromaticVector {
            alpha: f(&self.alpha),
            beta: f(&self.beta),
            gamma: f(&self.gamma),
        }
    }

    /// Swaps the `P0` and `P1` coordinates (the effect of a quarter-turn of
    /// the disk on the basis).
    pub fn swapped(&self) -> Self
    where
        T: Clone,
    {
        ChromaticVector {
            alpha: self.beta.clone(),
            beta: self.alpha.clone(),
            gamma: self.gamma.clone(),
        }
    }
}

impl ChromaticVector<IntPolynomial> {
    pub fn zero() -> Self {
        Self::new(
            IntPolynomial::zero(),
            IntPolynomial::zero(),
            IntPolynomial::zero(),
        )
    }

    /// Multiplies every coordinate by `c`.
    pub fn scale(&self, c: &IntPolynomial) -> Self {
        self.map(|x| x * c)
    }

    /// Evaluates every coordinate at a golden point.
    pub fn eval_golden(&self, q: &GoldenNumber) -> ChromaticVector<GoldenNumber> {
        self.map(|x| x.eval_golden(q))
    }
}

impl std::ops::Add for &ChromaticVector<IntPolynomial> {
    type Output = ChromaticVector<IntPolynomial>;
    fn add(self, rhs: Self) -> ChromaticVector<IntPolynomial> {
        ChromaticVector {
            alpha: &self.alpha + &rhs.alpha,
            beta: &self.beta + &rhs.beta,
            gamma: &self.gamma + &rhs.gamma,
        }
    }
}

impl std::ops::Sub for &ChromaticVector<IntPolynomial> {
    type Output = ChromaticVector<IntPolynomial>;
    fn sub(self, rhs: Self) -> ChromaticVector<IntPolynomial> {
        ChromaticVector {
            alpha: &self.alpha - &rhs.alpha,
            beta: &self.beta - &rhs.beta,
            gamma: &self.gamma - &rhs.gamma,
        }
    }
}

impl<T: std::fmt::Display> std::fmt::Display for ChromaticVector<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Writes disk graphs in the edge-free basis by contraction–deletion,
/// memoized on canonical forms (legs colored 1–4, internal vertices 0).
///
/// The rewriting rules, applied innermost-first:
/// * a loop is deleted against a factor `Q - 1`;
/// * an isolated internal vertex is dropped;
/// * a univalent internal vertex kills the element (its edge is a bridge);
/// * a 2-valent internal vertex is smoothed away;
/// * any remaining internal edge `e` expands as `F = F/e - F∖e`;
/// * what survives is one of the three basis elements — a terminal
///   {1–4, 2–3} pairing cannot occur for genuine disk inputs and signals
///   corrupted data.
#[derive(Debug, Default)]
pub struct DiskExpander {
    memo: DashMap<CanonKey, ChromaticVector<IntPolynomial>>,
}

impl DiskExpander {
    pub fn new() -> Self {
        Self::default()
    }

    /// Expansion coefficients of a marked disk.
    pub fn expand(&self, disk: &MarkedDisk) -> Result<ChromaticVector<IntPolynomial>, CheckError> {
        self.expand_state(disk.graph(), disk.legs())
    }

    /// Expansion coefficients of a crossing-free disk diagram with exactly
    /// four boundary legs.
    pub fn expand_disk_graph(
        &self,
        disk: &DiskGraph,
    ) -> Result<ChromaticVector<IntPolynomial>, CheckError> {
        self.expand(&marked_disk_from_diagram(disk)?)
    }

    fn expand_state(
        &self,
        g: &MultiGraph,
        legs: [VertexId; 4],
    ) -> Result<ChromaticVector<IntPolynomial>, CheckError> {
        let mut colors = vec![0u32; g.num_vertices()];
        for (k, &leg) in legs.iter().enumerate() {
            colors[leg] = k as u32 + 1;
        }
        let key = canonical_key_colored(g, &colors);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let result = self.expand_step(g, legs)?;
        self.memo.insert(key, result.clone());
        Ok(result)
    }

    fn expand_step(
        &self,
        g: &MultiGraph,
        legs: [VertexId; 4],
    ) -> Result<ChromaticVector<IntPolynomial>, CheckError> {
        let is_leg = |v: VertexId| legs.contains(&v);
        // Loops carry a factor Q - 1.
        if let Some(e) = (0..g.num_edges()).find(|&e| {
            let (u, v) = g.edge(e);
            u == v
        }) {
            let rest = self.expand_state(&g.delete_edge(e), legs)?;
            return Ok(rest.scale(&IntPolynomial::q_plus(-1)));
        }
        // Internal vertices of degree 0, 1, 2.
        for v in 0..g.num_vertices() {
            if is_leg(v) {
                continue;
            }
            match g.degree(v) {
                0 => {
                    let last = g.num_vertices() - 1;
                    let reduced = g.remove_vertex(v);
                    return self.expand_state(&reduced, relabel(legs, last, v));
                }
                1 => return Ok(ChromaticVector::zero()),
                2 => {
                    let last = g.num_vertices() - 1;
                    let reduced = g
                        .smooth_vertex(v)
                        .expect("loop-free 2-valent vertices are smoothable");
                    return self.expand_state(&reduced, relabel(legs, last, v));
                }
                _ => {}
            }
        }
        // Contraction-deletion on the first edge between internal vertices.
        let internal_edge = (0..g.num_edges()).find(|&e| {
            let (u, v) = g.edge(e);
            !is_leg(u) && !is_leg(v)
        });
        if let Some(e) = internal_edge {
            let (u, v) = g.edge(e);
            let gone = u.max(v);
            let last = g.num_vertices() - 1;
            let contracted = g.contract_edge(e).expect("internal edges are loop-free");
            let contracted_legs = if last == gone {
                legs
            } else {
                relabel(legs, last, gone)
            };
            let with = self.expand_state(&contracted, contracted_legs)?;
            let without = self.expand_state(&g.delete_edge(e), legs)?;
            return Ok(&with - &without);
        }
        self.classify_terminal(g, legs)
    }

    fn classify_terminal(
        &self,
        g: &MultiGraph,
        legs: [VertexId; 4],
    ) -> Result<ChromaticVector<IntPolynomial>, CheckError> {
        let one = IntPolynomial::one();
        let zero = IntPolynomial::zero();
        let internal: Vec<VertexId> =
            (0..g.num_vertices()).filter(|v| !legs.contains(v)).collect();
        match internal.len() {
            0 => {
                let p = partner(g, legs[0]).ok_or_else(|| {
                    CheckError::CorruptedDisk("terminal leg without an arc".into())
                })?;
                // The two legs not in the first arc must pair with each other.
                let rest: Vec<VertexId> = legs
                    .iter()
                    .copied()
                    .filter(|&l| l != legs[0] && l != p)
                    .collect();
                if rest.len() != 2 || partner(g, rest[0]) != Some(rest[1]) {
                    return Err(CheckError::CorruptedDisk(
                        "terminal arcs do not pair the four legs".into(),
                    ));
                }
                if p == legs[2] {
                    Ok(ChromaticVector::new(one, zero.clone(), zero))
                } else if p == legs[1] {
                    Ok(ChromaticVector::new(zero.clone(), one, zero))
                } else {
                    Err(CheckError::CorruptedDisk(
                        "terminal pairing {1-4, 2-3} cannot come from a disk drawing".into(),
                    ))
                }
            }
            1 => {
                let c = internal[0];
                let star = g.degree(c) == 4 && legs.iter().all(|&l| partner(g, l) == Some(c));
                if star {
                    Ok(ChromaticVector::new(zero.clone(), zero, one))
                } else {
                    Err(CheckError::CorruptedDisk(
                        "terminal internal vertex is not a 4-valent star".into(),
                    ))
                }
            }
            _ => Err(CheckError::CorruptedDisk(
                "terminal state keeps several internal vertices".into(),
            )),
        }
    }
}

/// New leg array after the vertex `last` was renumbered to `slot`.
fn relabel(mut legs: [VertexId; 4], last: VertexId, slot: VertexId) -> [VertexId; 4] {
    for l in legs.iter_mut() {
        if *l == last {
            *l = slot;
        }
    }
    legs
}

/// The other endpoint of the unique edge at a univalent vertex.
fn partner(g: &MultiGraph, v: VertexId) -> Option<VertexId> {
    (0..g.num_edges()).find_map(|e| {
        let (a, b) = g.edge(e);
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    })
}

/// Reads the abstract marked disk out of a crossing-free disk diagram with
/// exactly four boundary legs (label order = boundary order).
pub fn marked_disk_from_diagram(disk: &DiskGraph) -> Result<MarkedDisk, CheckError> {
    if disk.legs() != 4 {
        return Err(CheckError::Precondition(format!(
            "expected 4 boundary legs, found {}",
            disk.legs()
        )));
    }
    let under = disk.diagram().underlying_graph();
    let mut legs = [0usize; 4];
    for (k, &node) in disk.boundary().iter().enumerate() {
        legs[k] = *under.vertex_of_node.get(&node).ok_or_else(|| {
            CheckError::CorruptedDisk(format!("boundary node {node} is not a vertex node"))
        })?;
    }
    MarkedDisk::new(under.graph, legs)
}

/// The pairing matrix of the edge-free basis (`P0`, `P1`, `S`): entry
/// `(i, j)` is the flow polynomial of the closed graph `basis_i ∪ basis_j`,
/// computed by the flow engine.
pub fn gram_matrix_c2(flow: &FlowEngine) -> [[IntPolynomial; 3]; 3] {
    let caps = [Cap::P0, Cap::P1, Cap::Star];
    caps.map(|a| caps.map(|b| flow.flow_polynomial(&a.disk().glue(&b.disk()).graph)))
}

/// Determinant of the 3×3 pairing matrix.
pub fn gram_determinant(m: &[[IntPolynomial; 3]; 3]) -> IntPolynomial {
    let minor = |r: [usize; 2], c: [usize; 2]| -> IntPolynomial {
        &(&m[r[0]][c[0]] * &m[r[1]][c[1]]) - &(&m[r[0]][c[1]] * &m[r[1]][c[0]])
    };
    let mut det = &m[0][0] * &minor([1, 2], [1, 2]);
    det = &det - &(&m[0][1] * &minor([1, 2], [0, 2]));
    &det + &(&m[0][2] * &minor([1, 2], [0, 1]))
}

/// Closes a 4-legged crossing-free disk diagram with one crossing joining
/// legs 1–4 (over) and 2–3 (under), producing a one-crossing diagram of the
/// near-planar graph `X ∪ disk`. The mirror image (1–4 under) is
/// `cross_closure(disk)?.mirror()`.
pub fn cross_closure(disk: &DiskGraph) -> Result<PlanarDiagram, CheckError> {
    if disk.legs() != 4 {
        return Err(CheckError::Precondition(format!(
            "expected 4 boundary legs, found {}",
            disk.legs()
        )));
    }
    let d = disk.diagram();
    let fresh = d
        .nodes()
        .iter()
        .flat_map(|n| n.halfedges.iter().copied())
        .max()
        .map_or(0, |h| h + 1);
    let c = [fresh, fresh + 1, fresh + 2, fresh + 3];
    // Seen from the outer region the rim order (1, 2, 4, 3) reverses to
    // (1, 3, 4, 2), so the crossing's counterclockwise rotation meets the
    // legs in that order; positions 0 and 2 form the over strand 1-4.
    let attach = [c[0], c[3], c[1], c[2]]; // leg k (0-based) -> crossing half-edge
    let boundary = d.boundary().to_vec();
    let mut arcs = d.arcs().to_vec();
    for (k, &leg) in boundary.iter().enumerate() {
        let h = d.nodes()[leg].halfedges[0];
        let arc = arcs
            .iter_mut()
            .find(|(a, b)| *a == h || *b == h)
            .expect("leg half-edges carry an arc");
        if arc.0 == h {
            arc.0 = attach[k];
        } else {
            arc.1 = attach[k];
        }
    }
    let mut nodes: Vec<Node> = d
        .nodes()
        .iter()
        .enumerate()
        .filter(|(i, _)| !boundary.contains(i))
        .map(|(_, n)| n.clone())
        .collect();
    nodes.push(Node {
        kind: NodeKind::Crossing,
        halfedges: c.to_vec(),
    });
    let spliced = PlanarDiagram::new(nodes, arcs, d.free_circles())?;
    if !spliced.is_realizable() {
        return Err(CheckError::CorruptedDisk(
            "crossing closure is not a plane drawing; the disk's legs do not sit on the rim in the order (1, 2, 4, 3)".into(),
        ));
    }
    Ok(spliced)
}

/// The matrix of a peripheral-edge move on the disk space, columns indexed
/// by the basis (`P0`, `P1`, `S`). Derived, not hard-coded: column `i` is
/// the expansion of the move applied to basis element `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferMatrix {
    pub columns: [ChromaticVector<IntPolynomial>; 3],
}

impl TransferMatrix {
    pub fn apply(&self, v: &ChromaticVector<IntPolynomial>) -> ChromaticVector<IntPolynomial> {
        let [c0, c1, c2] = &self.columns;
        &(&c0.scale(&v.alpha) + &c1.scale(&v.beta)) + &c2.scale(&v.gamma)
    }

    /// Conjugation by the quarter-turn that exchanges `P0` and `P1`.
    pub fn swapped(&self) -> TransferMatrix {
        let [c0, c1, c2] = &self.columns;
        TransferMatrix {
            columns: [c1.swapped(), c0.swapped(), c2.swapped()],
        }
    }
}

/// Verdict of one golden flow inequality on a closed graph.
#[derive(Clone, Debug)]
pub struct InequalityVerdict {
    /// Edge count with free circles counted as zero edges.
    pub effective_edges: usize,
    /// The exact golden difference whose sign is the verdict.
    pub difference: GoldenNumber,
    /// `-1`, `0`, or `1`.
    pub sign: i8,
    /// Whether the graph admits a planar embedding.
    pub planar: bool,
    pub report: Report,
}

/// Verifies the near-planar identities: the one-crossing expansion of flow
/// polynomials, the golden quadratic identity, the flow inequalities at the
/// golden points, the Yamada restatement, and the peripheral-edge
/// recurrence. Owns the engines and memoizes across calls.
#[derive(Debug, Default)]
pub struct NearPlanarChecker {
    yamada: YamadaEngine,
    expander: DiskExpander,
}

impl NearPlanarChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn flow(&self) -> &FlowEngine {
        self.yamada.flow()
    }

    pub fn yamada(&self) -> &YamadaEngine {
        &self.yamada
    }

    pub fn expander(&self) -> &DiskExpander {
        &self.expander
    }

    /// Flow polynomial of the glued graph `cap ∪ disk`.
    pub fn pairing(&self, disk: &MarkedDisk, cap: Cap) -> IntPolynomial {
        self.flow().flow_polynomial(&disk.glue(&cap.disk()).graph)
    }

    /// Computes the flow polynomial of `X ∪ disk` and checks, as an identity
    /// of polynomials in `Q`, that
    /// `(Q² - 3Q + 1)·F_{X∪disk} = -⟨P0, disk⟩ + (Q-1)·⟨S, disk⟩ - ⟨P1, disk⟩`.
    pub fn near_planar_flow(
        &self,
        disk: &MarkedDisk,
    ) -> Result<(IntPolynomial, Report), CheckError> {
        let mut report = Report::new("near-planar flow");
        let direct = self
            .flow()
            .flow_polynomial(&disk.glue(&MarkedDisk::pairing_x()).graph);
        let p0 = self.pairing(disk, Cap::P0);
        let p1 = self.pairing(disk, Cap::P1);
        let s = self.pairing(disk, Cap::Star);
        let quadratic = IntPolynomial::from_i64s(&[1, -3, 1]);
        let lhs = &quadratic * &direct;
        let rhs = &(&(&IntPolynomial::q_plus(-1) * &s) - &p0) - &p1;
        report.check_eq("one-crossing expansion matches the direct flow", &lhs, &rhs);
        Ok((direct, report))
    }

    /// Verifies the golden identities for a cubic disk: the quadratic
    /// identity relating `F_{X∪disk}` at `z = 3 - φ` to the two planar
    /// resolutions at `w = 2 - φ`, and the crossing-resolution identity
    /// expressing `F_{X∪disk}(z)` through resolutions evaluated at `z`.
    pub fn golden_nearplanar_identity(&self, disk: &MarkedDisk) -> Result<Report, CheckError> {
        if !disk.is_cubic() {
            return Err(CheckError::Precondition(
                "golden near-planar identity needs a cubic disk".into(),
            ));
        }
        let mut report = Report::new("golden near-planar identity");
        let z = GoldenNumber::z_point();
        let w = GoldenNumber::w_point();
        let phi = GoldenNumber::phi();
        let phi_inv = GoldenNumber::from_ints(-1, 1);

        let x_closure = disk.glue(&MarkedDisk::pairing_x());
        let e = x_closure.effective_edges() as i64;
        let fx = self.flow().flow_polynomial(&x_closure.graph);
        let f0 = self.pairing(disk, Cap::P0);
        let f1 = self.pairing(disk, Cap::P1);
        let fi = self.pairing(disk, Cap::IGraph);

        let fx_z = fx.eval_golden(&z);
        let (f0_w, f1_w) = (f0.eval_golden(&w), f1.eval_golden(&w));
        let quad = &(&(&f0_w * &f0_w) + &(&(&phi_inv * &f0_w) * &f1_w)) + &(&f1_w * &f1_w);
        let rhs = &(-&phi).pow(-e)? * &quad;
        report.check_eq("quadratic identity at the conjugate golden points", &fx_z, &rhs);

        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let phi_half = GoldenNumber::new(BigRational::zero(), half.clone());
        let phi_inv_half = GoldenNumber::new(-&half, half.clone());
        let one_half = GoldenNumber::new(half, BigRational::zero());
        let (f0_z, f1_z, fi_z) = (
            f0.eval_golden(&z),
            f1.eval_golden(&z),
            fi.eval_golden(&z),
        );
        let resolution = &(&(&phi_half * &f0_z) - &(&phi_inv_half * &fi_z)) + &(&one_half * &f1_z);
        report.check_eq("crossing-resolution identity at z", &fx_z, &resolution);

        let discriminant = &(&(&z * &z) - &(&GoldenNumber::from_ints(3, 0) * &z))
            + &GoldenNumber::one();
        report.check_eq(
            "discriminant value at z",
            &discriminant,
            &GoldenNumber::from_ints(2, -2),
        );
        Ok(report)
    }

    /// Effective edge count and the two golden differences for a closed
    /// graph `g`: `(-φ)^E·F(z) - F(w)²` and `φ^E·F(φ+1)² - F(φ+2)`.
    pub fn golden_gaps(
        &self,
        g: &MultiGraph,
    ) -> Result<(usize, GoldenNumber, GoldenNumber), CheckError> {
        let f = self.flow().flow_polynomial(g);
        let e = (g.num_edges() - circle_components(g)) as i64;
        let phi = GoldenNumber::phi();
        let fz = f.eval_golden(&GoldenNumber::z_point());
        let fw = f.eval_golden(&GoldenNumber::w_point());
        let direct = &(&(-&phi).pow(e)? * &fz) - &(&fw * &fw);
        let f1 = f.eval_golden(&GoldenNumber::phi_plus_1());
        let f2 = f.eval_golden(&GoldenNumber::phi_plus_2());
        let conjugate = &(&phi.pow(e)? * &(&f1 * &f1)) - &f2;
        Ok((e as usize, direct, conjugate))
    }

    fn cubic_closed_precondition(g: &MultiGraph) -> Result<(), CheckError> {
        for v in 0..g.num_vertices() {
            let circle = g.degree(v) == 2 && g.loops_at(v) == 1;
            if g.degree(v) != 3 && !circle {
                return Err(CheckError::Precondition(format!(
                    "vertex {v} has degree {}, expected a cubic graph (free circles allowed)",
                    g.degree(v)
                )));
            }
        }
        if g.has_bridge() {
            return Err(CheckError::Precondition(
                "flow inequalities need a bridgeless graph".into(),
            ));
        }
        Ok(())
    }

    /// Sign of `(-φ)^E·F(z) - F(w)²` for a bridgeless cubic graph; planar
    /// inputs must attain equality.
    pub fn inequality_check(&self, g: &MultiGraph) -> Result<InequalityVerdict, CheckError> {
        Self::cubic_closed_precondition(g)?;
        let (e, difference, _) = self.golden_gaps(g)?;
        let planar = planar_embedding(g).is_some();
        let mut report = Report::new("golden flow inequality");
        report.check_with_values(
            "difference is nonnegative",
            difference.sign() >= 0,
            &difference,
            &"0",
        );
        if planar {
            report.check_with_values(
                "planar input attains equality",
                difference.is_zero(),
                &difference,
                &"0",
            );
        }
        Ok(InequalityVerdict {
            effective_edges: e,
            sign: difference.sign(),
            difference,
            planar,
            report,
        })
    }

    /// Sign of `φ^E·F(φ+1)² - F(φ+2)` for a bridgeless cubic graph; planar
    /// inputs must attain equality.
    pub fn conjugate_inequality_check(
        &self,
        g: &MultiGraph,
    ) -> Result<InequalityVerdict, CheckError> {
        Self::cubic_closed_precondition(g)?;
        let (e, _, difference) = self.golden_gaps(g)?;
        let planar = planar_embedding(g).is_some();
        let mut report = Report::new("conjugate golden flow inequality");
        report.check_with_values(
            "difference is nonnegative",
            difference.sign() >= 0,
            &difference,
            &"0",
        );
        if planar {
            report.check_with_values(
                "planar input attains equality",
                difference.is_zero(),
                &difference,
                &"0",
            );
        }
        Ok(InequalityVerdict {
            effective_edges: e,
            sign: difference.sign(),
            difference,
            planar,
            report,
        })
    }

    /// The quadratic-form difference `γ(α+β+γ) - (1+3φ)·αβ` whose sign
    /// decides the golden flow inequality for `X ∪ disk` directly from the
    /// disk's expansion coefficients at `w`.
    pub fn quadratic_form_gap(v: &ChromaticVector<GoldenNumber>) -> GoldenNumber {
        let sum = &(&v.alpha + &v.beta) + &v.gamma;
        let lhs = &v.gamma * &sum;
        let rhs = &(&GoldenNumber::from_ints(1, 3) * &v.alpha) * &v.beta;
        &lhs - &rhs
    }

    /// Verifies the Yamada restatement of the golden inequality for a cubic
    /// disk diagram: the two one-crossing closures (over and under) are
    /// mirror diagrams, the product of their Yamada evaluations at `q = ζ⁴`
    /// is a real golden integer equal to both the resolution quadratic and
    /// `(-φ)^E·F_{X∪disk}(z)`, and the bound `F_{X∪disk}(w) ≤ product`
    /// carries the same verdict as the direct golden inequality and as the
    /// quadratic-form reduction.
    pub fn yamada_form_check(&self, disk: &DiskGraph) -> Result<Report, CheckError> {
        let marked = marked_disk_from_diagram(disk)?;
        if !marked.is_cubic() {
            return Err(CheckError::Precondition(
                "the Yamada restatement needs a cubic disk".into(),
            ));
        }
        let mut report = Report::new("Yamada form of the golden inequality");
        let over = cross_closure(disk)?;
        let under = over.mirror();
        let r_over = self.yamada.yamada(&over)?;
        let r_under = self.yamada.yamada(&under)?;
        report.check_eq(
            "mirror closure inverts the Yamada variable",
            &r_under,
            &r_over.invert_variable(),
        );

        let product = &r_over.eval_at_zeta(4) * &r_under.eval_at_zeta(4);
        if !product.is_real() {
            return Err(CheckError::Precondition(format!(
                "Yamada product at ζ⁴ is not real: {product}"
            )));
        }
        let product = product.to_golden()?;

        let w = GoldenNumber::w_point();
        let phi_inv = GoldenNumber::from_ints(-1, 1);
        let f0_w = self.pairing(&marked, Cap::P0).eval_golden(&w);
        let f1_w = self.pairing(&marked, Cap::P1).eval_golden(&w);
        let quad = &(&(&f0_w * &f0_w) + &(&(&phi_inv * &f0_w) * &f1_w)) + &(&f1_w * &f1_w);
        report.check_eq("product equals the resolution quadratic", &product, &quad);

        let x_closure = marked.glue(&MarkedDisk::pairing_x());
        let fx = self.flow().flow_polynomial(&x_closure.graph);
        let e = x_closure.effective_edges() as i64;
        let scaled = &(-&GoldenNumber::phi()).pow(e)? * &fx.eval_golden(&GoldenNumber::z_point());
        report.check_eq("product equals the scaled flow value at z", &product, &scaled);

        report.check(
            "spliced diagram closes the disk by the crossing pairing",
            canonical_key(&over.underlying_graph().graph) == canonical_key(&x_closure.graph),
        );

        let fx_w = fx.eval_golden(&w);
        let bound = (&product - &fx_w).sign() >= 0;
        report.check_with_values("Yamada product bounds the flow value at w", bound, &fx_w, &product);

        let (_, direct_gap, _) = self.golden_gaps(&x_closure.graph)?;
        report.check(
            "verdict matches the direct golden inequality",
            bound == (direct_gap.sign() >= 0),
        );
        let coords = self.expander.expand(&marked)?.eval_golden(&w);
        let reduction_gap = Self::quadratic_form_gap(&coords);
        report.check(
            "verdict matches the quadratic-form reduction",
            bound == (reduction_gap.sign() >= 0),
        );
        Ok(report)
    }

    /// The transfer matrix of a peripheral move, derived by expanding the
    /// move applied to each basis element.
    pub fn transfer_matrix(&self, position: PeripheralPosition) -> Result<TransferMatrix, CheckError> {
        let col = |cap: Cap| self.expander.expand(&cap.disk().add_peripheral_edge(position));
        Ok(TransferMatrix {
            columns: [col(Cap::P0)?, col(Cap::P1)?, col(Cap::Star)?],
        })
    }

    /// Checks, for every peripheral position, that expanding `disk + edge`
    /// agrees with the transfer matrix applied to the expansion of `disk` —
    /// an identity of polynomials in `Q`.
    pub fn recurrence_check(&self, disk: &MarkedDisk) -> Result<Report, CheckError> {
        let mut report = Report::new("peripheral-edge recurrence");
        let base = self.expander.expand(disk)?;
        for position in PeripheralPosition::ALL {
            let direct = self.expander.expand(&disk.add_peripheral_edge(position))?;
            let via_matrix = self.transfer_matrix(position)?.apply(&base);
            report.check_eq(format!("recurrence at {position}"), &direct, &via_matrix);
        }
        Ok(report)
    }

    /// Walks a peripheral-move family and verifies, member by member: the
    /// one-crossing flow expansion, the nonnegativity of the golden gap,
    /// the agreement of that verdict (and its equality case) with the
    /// quadratic-form reduction, the sign pattern `sign(α) = sign(β) =
    /// -sign(γ) = (-1)^{V/2}` whenever all coefficients are nonzero, and
    /// that the gap vanishes exactly for the members whose crossing closure
    /// is planar.
    pub fn family_check(&self, moves: &str) -> Result<Report, CheckError> {
        let members = MarkedDisk::family_from_moves(moves)?;
        let mut report = Report::new(format!("peripheral family {moves:?}"));
        let w = GoldenNumber::w_point();
        for (k, member) in members.iter().enumerate() {
            let (_, flow_report) = self.near_planar_flow(member)?;
            report.check(
                format!("member {k}: one-crossing flow expansion"),
                flow_report.passed(),
            );

            let closure = member.glue(&MarkedDisk::pairing_x());
            let (_, gap, _) = self.golden_gaps(&closure.graph)?;
            report.check_with_values(
                format!("member {k}: golden gap is nonnegative"),
                gap.sign() >= 0,
                &gap,
                &"0",
            );

            let coords = self.expander.expand(member)?.eval_golden(&w);
            let reduction = Self::quadratic_form_gap(&coords);
            report.check(
                format!("member {k}: verdicts of gap and reduction agree"),
                (gap.sign() >= 0) == (reduction.sign() >= 0),
            );
            report.check(
                format!("member {k}: equality cases of gap and reduction agree"),
                gap.is_zero() == reduction.is_zero(),
            );

            let all_nonzero =
                !coords.alpha.is_zero() && !coords.beta.is_zero() && !coords.gamma.is_zero();
            if all_nonzero {
                let v = member.num_internal_vertices();
                let expected = if (v / 2) % 2 == 0 { 1 } else { -1 };
                let pattern = coords.alpha.sign() == expected
                    && coords.beta.sign() == expected
                    && coords.gamma.sign() == -expected;
                report.check_with_values(
                    format!("member {k}: coefficient sign pattern"),
                    pattern,
                    &coords,
                    &format!("signs ({expected}, {expected}, {})", -expected),
                );
            }

            let planar = planar_embedding(&closure.graph).is_some();
            report.check(
                format!("member {k}: gap vanishes exactly on planar closures"),
                gap.is_zero() == planar,
            );
        }
        Ok(report)
    }
}

/// Deterministic pseudo-random cubic disks: a seed disk followed by random
/// peripheral moves.
pub fn random_disks(seed: u64, count: usize, max_moves: usize) -> Vec<MarkedDisk> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut disk = if rng.gen_bool(0.5) {
                MarkedDisk::h_graph()
            } else {
                MarkedDisk::i_graph()
            };
            for _ in 0..rng.gen_range(0..=max_moves) {
                let position = PeripheralPosition::ALL[rng.gen_range(0..4)];
                disk = disk.add_peripheral_edge(position);
            }
            disk
        })
        .collect()
}

fn disk_diagram_from_lines(
    n: usize,
    edges: &[(usize, usize)],
    points: &[(i64, i64)],
    legs: [usize; 4],
) -> DiskGraph {
    let g = MultiGraph::from_edges(n, edges).expect("static disk graph");
    let drawn = from_straight_line(&g, points).expect("static disk drawing");
    assert_eq!(drawn.num_crossings(), 0, "disk drawings are crossing-free");
    let with_legs = PlanarDiagram::with_boundary(
        drawn.nodes().to_vec(),
        drawn.arcs().to_vec(),
        drawn.free_circles(),
        legs.to_vec(),
    )
    .expect("static disk diagram");
    DiskGraph::new(with_legs).expect("static disk graph")
}

/// The pairing `P0` as a drawn disk diagram (two vertical strands).
pub fn disk_p0_diagram() -> DiskGraph {
    disk_diagram_from_lines(
        4,
        &[(0, 2), (1, 3)],
        &[(-10, -10), (10, -10), (-10, 10), (10, 10)],
        [0, 1, 2, 3],
    )
}

/// The bar disk joining legs {1, 2} to legs {3, 4}, drawn in the disk.
pub fn disk_i_diagram() -> DiskGraph {
    disk_diagram_from_lines(
        6,
        &[(0, 2), (0, 3), (1, 4), (1, 5), (0, 1)],
        &[
            (0, -3),
            (0, 3),
            (-10, -10),
            (10, -10),
            (-10, 10),
            (10, 10),
        ],
        [2, 3, 4, 5],
    )
}

/// The bar disk joining legs {1, 3} to legs {2, 4}, drawn in the disk.
pub fn disk_h_diagram() -> DiskGraph {
    disk_diagram_from_lines(
        6,
        &[(0, 2), (0, 4), (1, 3), (1, 5), (0, 1)],
        &[
            (-3, 0),
            (3, 0),
            (-10, -10),
            (10, -10),
            (-10, 10),
            (10, 10),
        ],
        [2, 3, 4, 5],
    )
}

/// The bar disk with one bottom and one top rung, drawn in the disk; its
/// crossing closure is the complete bipartite graph on 3 + 3 vertices.
pub fn disk_k33_diagram() -> DiskGraph {
    disk_diagram_from_lines(
        10,
        &[
            (0, 2),
            (2, 6),
            (1, 3),
            (3, 7),
            (0, 4),
            (4, 8),
            (1, 5),
            (5, 9),
            (0, 1),
            (2, 3),
            (4, 5),
        ],
        &[
            (-5, 0),
            (5, 0),
            (-6, -5),
            (6, -5),
            (-6, 5),
            (6, 5),
            (-7, -10),
            (7, -10),
            (-7, 10),
            (7, 10),
        ],
        [6, 7, 8, 9],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen;

    fn vector(alpha: &IntPolynomial, beta: &IntPolynomial, gamma: &IntPolynomial) -> ChromaticVector<IntPolynomial> {
        ChromaticVector::new(alpha.clone(), beta.clone(), gamma.clone())
    }

    #[test]
    fn expansion_of_basis_and_bar_disks() {
        let x = DiskExpander::new();
        let one = IntPolynomial::one();
        let zero = IntPolynomial::zero();
        assert_eq!(
            x.expand(&MarkedDisk::pairing_p0()).unwrap(),
            vector(&one, &zero, &zero)
        );
        assert_eq!(
            x.expand(&MarkedDisk::pairing_p1()).unwrap(),
            vector(&zero, &one, &zero)
        );
        assert_eq!(
            x.expand(&MarkedDisk::star()).unwrap(),
            vector(&zero, &zero, &one)
        );
        let minus_one = -&one;
        assert_eq!(
            x.expand(&MarkedDisk::i_graph()).unwrap(),
            vector(&zero, &minus_one, &one)
        );
        assert_eq!(
            x.expand(&MarkedDisk::h_graph()).unwrap(),
            vector(&minus_one, &zero, &one)
        );
        // The crossing pairing is rejected as corrupted input.
        assert!(matches!(
            x.expand(&MarkedDisk::pairing_x()),
            Err(CheckError::CorruptedDisk(_))
        ));
    }

    #[test]
    fn expansion_absorbs_circles_and_kills_pendant_edges() {
        let x = DiskExpander::new();
        // Star plus a free circle (a lone loop vertex).
        let mut g = MarkedDisk::star().graph().clone();
        let c = g.add_vertex();
        g.add_edge(c, c);
        let disk = MarkedDisk::new(g, [0, 1, 2, 3]).unwrap();
        let q1 = IntPolynomial::q_plus(-1);
        assert_eq!(
            x.expand(&disk).unwrap(),
            vector(&IntPolynomial::zero(), &IntPolynomial::zero(), &q1)
        );
        // A pendant internal edge kills the element.
        let mut g = MarkedDisk::pairing_p0().graph().clone();
        let u = g.add_vertex();
        let v = g.add_vertex();
        g.add_edge(u, v);
        let disk = MarkedDisk::new(g, [0, 1, 2, 3]).unwrap();
        assert_eq!(x.expand(&disk).unwrap(), ChromaticVector::zero());
    }

    #[test]
    fn gram_matrix_closed_forms_and_determinant() {
        let flow = FlowEngine::new();
        let m = gram_matrix_c2(&flow);
        let q1 = IntPolynomial::q_plus(-1);
        let q1sq = &q1 * &q1;
        assert_eq!(m[0][0], q1sq);
        assert_eq!(m[0][1], q1);
        assert_eq!(m[1][0], q1);
        assert_eq!(m[1][1], q1sq);
        assert_eq!(m[0][2], q1sq);
        assert_eq!(m[2][0], q1sq);
        assert_eq!(m[1][2], q1sq);
        assert_eq!(m[2][1], q1sq);
        // The star pairs with itself to ((Q-1)^4 + (Q-1)) / Q.
        let banana = &(&q1.pow(4) + &q1);
        assert_eq!(
            m[2][2],
            banana.divide_exact(&IntPolynomial::q()).unwrap()
        );
        // det = (Q-1)^3 (Q-2)^2 (Q^2 - 3Q + 1), vanishing exactly at the
        // roots of the trailing quadratic among the golden points.
        let det = gram_determinant(&m);
        let expected = &IntPolynomial::from_roots(&[1, 1, 1, 2, 2])
            * &IntPolynomial::from_i64s(&[1, -3, 1]);
        assert_eq!(det, expected);
        assert!(det.eval_golden(&GoldenNumber::w_point()).is_zero());
        assert!(det.eval_golden(&GoldenNumber::phi_plus_1()).is_zero());
        assert!(!det.eval_golden(&GoldenNumber::z_point()).is_zero());
        assert!(!det.eval_golden(&GoldenNumber::phi_plus_2()).is_zero());
    }

    #[test]
    fn expansion_solves_the_pairing_system() {
        // The expansion coefficients must reproduce every pairing with the
        // basis caps: an independent cross-check of the expander against the
        // flow engine.
        let checker = NearPlanarChecker::new();
        for (i, disk) in random_disks(11, 8, 4).into_iter().enumerate() {
            let v = checker.expander().expand(&disk).unwrap();
            for cap in [Cap::P0, Cap::P1, Cap::Star] {
                let direct = checker.pairing(&disk, cap);
                let caps = [Cap::P0, Cap::P1, Cap::Star];
                let row: Vec<IntPolynomial> = caps
                    .iter()
                    .map(|&c| {
                        checker
                            .flow()
                            .flow_polynomial(&cap.disk().glue(&c.disk()).graph)
                    })
                    .collect();
                let combined = &(&(&row[0] * &v.alpha) + &(&row[1] * &v.beta))
                    + &(&row[2] * &v.gamma);
                assert_eq!(direct, combined, "disk {i} against {cap:?}");
            }
        }
    }

    #[test]
    fn near_planar_flow_identity_on_fixtures_and_random_disks() {
        let checker = NearPlanarChecker::new();
        // Degenerate pairings: X ∪ P0 is one circle, X ∪ S two loops.
        let (f, report) = checker.near_planar_flow(&MarkedDisk::pairing_p0()).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(f, IntPolynomial::q_plus(-1));
        let (f, report) = checker.near_planar_flow(&MarkedDisk::star()).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(f, IntPolynomial::q_plus(-1).pow(2));
        // The bar-disk family member closing to K(3,3).
        let k33_disk = &MarkedDisk::family_from_moves("H;P1;P3").unwrap()[2];
        let (f, report) = checker.near_planar_flow(k33_disk).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(f, checker.flow().flow_polynomial(&gen::k33()));
        // Twenty or more random disks, checked as polynomial identities.
        for (i, disk) in random_disks(7, 22, 5).into_iter().enumerate() {
            let (_, report) = checker.near_planar_flow(&disk).unwrap();
            assert!(report.passed(), "random disk {i}: {report}");
        }
    }

    #[test]
    fn golden_identity_on_fixtures() {
        let checker = NearPlanarChecker::new();
        for disk in [
            MarkedDisk::pairing_p0(),
            MarkedDisk::i_graph(),
            MarkedDisk::h_graph(),
            MarkedDisk::family_from_moves("H;P1;P3").unwrap()[2].clone(),
        ] {
            let report = checker.golden_nearplanar_identity(&disk).unwrap();
            assert!(report.passed(), "{report}");
        }
        // Non-cubic disks are rejected.
        assert!(checker
            .golden_nearplanar_identity(&MarkedDisk::star())
            .is_err());
    }

    #[test]
    fn inequalities_on_known_graphs() {
        let checker = NearPlanarChecker::new();
        let k4 = checker.inequality_check(&gen::k4()).unwrap();
        assert!(k4.report.passed(), "{}", k4.report);
        assert!(k4.planar);
        assert_eq!(k4.sign, 0);
        let k4c = checker.conjugate_inequality_check(&gen::k4()).unwrap();
        assert!(k4c.report.passed(), "{}", k4c.report);
        assert_eq!(k4c.sign, 0);

        let k33 = checker.inequality_check(&gen::k33()).unwrap();
        assert!(k33.report.passed(), "{}", k33.report);
        assert!(!k33.planar);
        assert_eq!(k33.sign, 1, "nonplanar closure has a strict gap");

        let petersen = checker.inequality_check(&gen::petersen()).unwrap();
        assert!(petersen.report.passed(), "{}", petersen.report);
        let petersen_c = checker
            .conjugate_inequality_check(&gen::petersen())
            .unwrap();
        assert!(petersen_c.report.passed(), "{}", petersen_c.report);

        // Bridges are rejected.
        let dumbbell = gen::dumbbell();
        assert!(checker.inequality_check(&dumbbell).is_err());
    }

    #[test]
    fn transfer_matrices_match_the_expected_forms() {
        let checker = NearPlanarChecker::new();
        let bottom = checker
            .transfer_matrix(PeripheralPosition::Bottom)
            .unwrap();
        let one = IntPolynomial::one();
        let zero = IntPolynomial::zero();
        assert_eq!(bottom.columns[0], vector(&(-&one), &zero, &one));
        assert_eq!(
            bottom.columns[1],
            vector(&zero, &IntPolynomial::q_plus(-2), &zero)
        );
        assert_eq!(
            bottom.columns[2],
            vector(&zero, &one, &IntPolynomial::q_plus(-3))
        );
        // At w the bottom matrix is rows ((-1, 0, 0), (0, -φ, 1), (1, 0, -φ²)).
        let w = GoldenNumber::w_point();
        let phi = GoldenNumber::phi();
        let at_w = |c: &ChromaticVector<IntPolynomial>| c.eval_golden(&w);
        let c0 = at_w(&bottom.columns[0]);
        let c1 = at_w(&bottom.columns[1]);
        let c2 = at_w(&bottom.columns[2]);
        assert_eq!(c0.alpha, -&GoldenNumber::one());
        assert_eq!(c0.gamma, GoldenNumber::one());
        assert_eq!(c1.beta, -&phi);
        assert_eq!(c2.beta, GoldenNumber::one());
        assert_eq!(c2.gamma, -&(&phi * &phi));

        let top = checker.transfer_matrix(PeripheralPosition::Top).unwrap();
        assert_eq!(top, bottom, "top and bottom moves share a matrix");
        let left = checker.transfer_matrix(PeripheralPosition::Left).unwrap();
        let right = checker.transfer_matrix(PeripheralPosition::Right).unwrap();
        assert_eq!(left, right, "left and right moves share a matrix");
        assert_eq!(
            left,
            bottom.swapped(),
            "quarter-turn conjugation relates the two matrices"
        );
    }

    #[test]
    fn recurrence_holds_on_fixture_and_random_disks() {
        let checker = NearPlanarChecker::new();
        let report = checker.recurrence_check(&MarkedDisk::h_graph()).unwrap();
        assert!(report.passed(), "{report}");
        for disk in random_disks(23, 6, 3) {
            let report = checker.recurrence_check(&disk).unwrap();
            assert!(report.passed(), "{report}");
        }
        // The bar disk has β = 0; one bottom edge makes it nonzero.
        let x = checker.expander();
        let before = x.expand(&MarkedDisk::h_graph()).unwrap();
        assert!(before.beta.is_zero());
        let after = x
            .expand(&MarkedDisk::h_graph().add_peripheral_edge(PeripheralPosition::Bottom))
            .unwrap();
        assert!(!after.beta.is_zero());
    }

    #[test]
    fn family_check_to_depth_ten() {
        let checker = NearPlanarChecker::new();
        let report = checker
            .family_check("T;P1;P3;P2;P4;P1;P3;P2;P4;P1;P3")
            .unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.num_passed() >= 50, "expected per-member coverage");
    }

    #[test]
    fn disk_diagram_fixtures_match_their_abstract_disks() {
        let p0 = marked_disk_from_diagram(&disk_p0_diagram()).unwrap();
        assert_eq!(
            DiskExpander::new().expand(&p0).unwrap(),
            vector(
                &IntPolynomial::one(),
                &IntPolynomial::zero(),
                &IntPolynomial::zero()
            )
        );
        let i = marked_disk_from_diagram(&disk_i_diagram()).unwrap();
        assert_eq!(
            canonical_key(&i.glue(&MarkedDisk::pairing_p0()).graph),
            canonical_key(&gen::theta())
        );
        let k33 = marked_disk_from_diagram(&disk_k33_diagram()).unwrap();
        assert_eq!(
            canonical_key(&k33.glue(&MarkedDisk::pairing_x()).graph),
            canonical_key(&gen::k33())
        );
    }

    #[test]
    fn yamada_form_check_on_disk_diagrams() {
        let checker = NearPlanarChecker::new();
        for (name, disk) in [
            ("p0", disk_p0_diagram()),
            ("i", disk_i_diagram()),
            ("h", disk_h_diagram()),
            ("k33", disk_k33_diagram()),
        ] {
            let report = checker.yamada_form_check(&disk).unwrap();
            assert!(report.passed(), "{name}: {report}");
        }
    }

    #[test]
    fn cross_closure_of_the_k33_disk_is_nonplanar_but_realizable() {
        let spliced = cross_closure(&disk_k33_diagram()).unwrap();
        assert!(spliced.is_realizable());
        assert_eq!(spliced.num_crossings(), 1);
        let under = spliced.underlying_graph().graph;
        assert_eq!(canonical_key(&under), canonical_key(&gen::k33()));
        assert!(planar_embedding(&under).is_none());
    }
}
