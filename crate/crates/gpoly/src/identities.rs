//! Verifiers for the exact identities, congruences, and residue statements
//! that tie flow, chromatic, and Yamada evaluations together: the golden
//! identity for planar cubic graphs and its Yamada form for spatial-graph
//! diagrams, the mod-5 congruences, the residue classes of `F(0)`, the snark
//! divisibilities, the linear pairing relations at the golden points, and
//! the closure value rows of marked disks with their formal dependency.
//!
//! Every check is an exact ring equality — never a numerical tolerance.

use std::collections::VecDeque;

use num::{BigInt, Zero};

use crate::diagram::{DiskGraph, PlanarDiagram};
use crate::disk::{Cap, MarkedDisk};
use crate::error::CheckError;
use crate::flow::FlowEngine;
use crate::graph::{canonical_key, planar_embedding, EdgeId, MultiGraph};
use crate::nearplanar::{marked_disk_from_diagram, ChromaticVector, DiskExpander};
use crate::report::Report;
use crate::rings::{CyclotomicNumber, GoldenNumber, IntPolynomial, Mod5};
use crate::yamada::{penrose_number, YamadaEngine};

/// The two golden evaluation points at which the linear pairing relation
/// holds, with the matching coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenVariant {
    /// `Q = φ + 1`, coefficients `φ⁻¹` and `-φ⁻²`.
    PhiPlus1,
    /// `Q = 2 - φ`, coefficients `-φ` and `-φ²`.
    TwoMinusPhi,
}

impl GoldenVariant {
    pub fn point(self) -> GoldenNumber {
        match self {
            GoldenVariant::PhiPlus1 => GoldenNumber::phi_plus_1(),
            GoldenVariant::TwoMinusPhi => GoldenNumber::w_point(),
        }
    }

    /// Coefficients `(a, b)` of the relation `⟨I, C⟩ = a·⟨P0, C⟩ + b·⟨P1, C⟩`
    /// at this evaluation point.
    pub fn coefficients(self) -> (GoldenNumber, GoldenNumber) {
        let phi = GoldenNumber::phi();
        match self {
            GoldenVariant::PhiPlus1 => (
                GoldenNumber::from_ints(-1, 1),
                -&GoldenNumber::from_ints(2, -1),
            ),
            GoldenVariant::TwoMinusPhi => (-&phi, -&(&phi * &phi)),
        }
    }
}

impl std::fmt::Display for GoldenVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GoldenVariant::PhiPlus1 => write!(f, "Q = φ+1"),
            GoldenVariant::TwoMinusPhi => write!(f, "Q = 2-φ"),
        }
    }
}

/// Outcome of a residue scan over a corpus of cubic graphs.
#[derive(Clone, Debug)]
pub struct ResidueScan {
    pub report: Report,
    /// How many scanned graphs had `F(0) ≡ r (mod 5)`, indexed by `r`.
    pub counts: [usize; 5],
    /// Corpus members skipped for not being cubic.
    pub skipped: usize,
}

/// Counts the proper 3-edge-colorings of a multigraph by backtracking
/// (edges sharing an endpoint get distinct colors; a loop admits none).
pub fn three_edge_colorings(g: &MultiGraph) -> u64 {
    let m = g.num_edges();
    if m == 0 {
        return 1;
    }
    if (0..g.num_vertices()).any(|v| g.loops_at(v) > 0) {
        return 0;
    }
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); g.num_vertices()];
    for e in 0..m {
        let (u, v) = g.edge(e);
        incident[u].push(e);
        incident[v].push(e);
    }
    // Color edges in breadth-first order over shared endpoints so each new
    // edge is constrained by an already-colored neighbor.
    let mut order = Vec::with_capacity(m);
    let mut seen = vec![false; m];
    for start in 0..m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            order.push(e);
            let (u, v) = g.edge(e);
            for w in [u, v] {
                for &f in &incident[w] {
                    if !seen[f] {
                        seen[f] = true;
                        queue.push_back(f);
                    }
                }
            }
        }
    }

    fn extend(
        k: usize,
        order: &[EdgeId],
        colors: &mut [u8],
        g: &MultiGraph,
        incident: &[Vec<EdgeId>],
    ) -> u64 {
        let Some(&e) = order.get(k) else {
            return 1;
        };
        let (u, v) = g.edge(e);
        let mut total = 0;
        'colors: for c in 1..=3u8 {
            for &f in incident[u].iter().chain(&incident[v]) {
                if f != e && colors[f] == c {
                    continue 'colors;
                }
            }
            colors[e] = c;
            total += extend(k + 1, order, colors, g, incident);
            colors[e] = 0;
        }
        total
    }
    extend(0, &order, &mut vec![0; m], g, &incident)
}

/// A snark: cubic, bridgeless, and not 3-edge-colorable.
pub fn is_snark(g: &MultiGraph) -> bool {
    g.is_cubic() && !g.has_bridge() && three_edge_colorings(g) == 0
}

/// The four closure value rows of a cubic marked disk, as constant golden
/// vectors over the expansion coordinates: pairing each basis cap against
/// `(P0, P1, S)` and evaluating.
struct ClosureRows {
    at_z: [[GoldenNumber; 3]; 4],
    at_w: [[GoldenNumber; 3]; 4],
}

fn closure_rows() -> ClosureRows {
    let phi = GoldenNumber::phi();
    let p1 = GoldenNumber::from_ints(-1, 1); // φ⁻¹
    let p2 = GoldenNumber::from_ints(2, -1); // φ⁻²
    let p3 = GoldenNumber::from_ints(-3, 2); // φ⁻³
    let p4 = GoldenNumber::from_ints(5, -3); // φ⁻⁴
    let zero = GoldenNumber::zero();
    let one = GoldenNumber::one();
    ClosureRows {
        at_z: [
            [p4.clone(), p2.clone(), p4.clone()],
            [p2.clone(), p4.clone(), p4.clone()],
            [-&p3, zero.clone(), p4.clone()],
            [zero.clone(), -&p3, p4.clone()],
        ],
        at_w: [
            [p2.clone(), -&p1, p2.clone()],
            [-&p1, p2.clone(), p2.clone()],
            [one.clone(), zero.clone(), -&phi],
            [zero, one, -&phi],
        ],
    }
}

fn dot3(row: &[GoldenNumber; 3], v: &ChromaticVector<GoldenNumber>) -> GoldenNumber {
    &(&(&row[0] * &v.alpha) + &(&row[1] * &v.beta)) + &(&row[2] * &v.gamma)
}

/// Verifies, graph-independently, the formal dependency among the four
/// closure rows: the alternating combination of the z-rows vanishes, the
/// matching alternating quadratic form of the w-rows vanishes (with the bar
/// rows weighted by the prefactor ratio `-φ⁻³` of their three extra edges),
/// and the loop values of the two evaluation points agree.
pub fn closure_row_dependency() -> Report {
    let mut report = Report::new("closure row dependency");
    let rows = closure_rows();
    let phi = GoldenNumber::phi();
    let p3 = GoldenNumber::from_ints(-3, 2); // φ⁻³
    let zero = GoldenNumber::zero();

    let [r0, r1, ri, rh] = &rows.at_z;
    let linear_ok = (0..3).all(|k| (&(&(&r0[k] - &r1[k]) - &ri[k]) + &rh[k]).is_zero());
    report.check("alternating combination of the value rows vanishes", linear_ok);

    let [v0, v1, vi, vh] = &rows.at_w;
    let quad_ok = (0..3).all(|i| {
        (0..3).all(|j| {
            let direct = &(&v0[i] * &v0[j]) - &(&v1[i] * &v1[j]);
            let bars = &(&vi[i] * &vi[j]) - &(&vh[i] * &vh[j]);
            (&direct + &(&p3 * &bars)).is_zero()
        })
    });
    report.check(
        "alternating quadratic form of the conjugate rows vanishes",
        quad_ok,
    );

    let ratio = (-&phi).pow(-3).expect("φ is a unit");
    report.check_eq("prefactor ratio of the bar closures", &ratio, &(-&p3));

    let z = GoldenNumber::z_point();
    let w = GoldenNumber::w_point();
    let w1 = &w - &GoldenNumber::one();
    report.check_eq(
        "loop values of the two evaluation points agree",
        &(&z - &GoldenNumber::one()),
        &(&w1 * &w1),
    );
    let _ = zero;
    report
}

/// Verifies the coefficient identities behind squaring the crossing
/// expansion at the conjugate point and eliminating the 4-valent vertex by
/// the linear pairing relation: the combined per-resolution weights square
/// to `ζ - φ` and `ζ⁹ - φ` with cross coefficient `2`, exactly in the
/// cyclotomic ring.
pub fn skein_square_coefficients() -> Report {
    let mut report = Report::new("squared crossing-expansion coefficients");
    let zeta = CyclotomicNumber::zeta_pow;
    let phi = CyclotomicNumber::from_golden(&GoldenNumber::phi()).expect("integral");
    let phi_inv =
        CyclotomicNumber::from_golden(&GoldenNumber::from_ints(-1, 1)).expect("integral");
    let phi_inv2 =
        CyclotomicNumber::from_golden(&GoldenNumber::from_ints(2, -1)).expect("integral");
    let one = CyclotomicNumber::one();

    report.check_eq(
        "embedded golden ratio satisfies its quadratic",
        &(&phi * &phi),
        &(&phi + &one),
    );
    report.check_eq(
        "vertex-elimination weight has both coefficient forms",
        &(&one - &phi_inv2),
        &phi_inv,
    );

    let c_a = &zeta(8) - &phi_inv;
    let c_b = &zeta(2) - &phi_inv;
    report.check_eq(
        "first squared coefficient",
        &(&c_a * &c_a),
        &(&zeta(1) - &phi),
    );
    report.check_eq("cross coefficient is twice the unit", &(&c_a * &c_b), &one);
    report.check_eq(
        "second squared coefficient",
        &(&c_b * &c_b),
        &(&zeta(9) - &phi),
    );

    let q_conj = &(&zeta(8) + &CyclotomicNumber::integer(2)) + &zeta(2);
    report.check_eq(
        "conjugate point sits at the chromatic value φ+1",
        &q_conj,
        &CyclotomicNumber::from_golden(&GoldenNumber::phi_plus_1()).expect("integral"),
    );
    let q_direct = &(&zeta(1) + &CyclotomicNumber::integer(2)) + &zeta(9);
    report.check_eq(
        "direct point sits at the chromatic value φ+2",
        &q_direct,
        &CyclotomicNumber::from_golden(&GoldenNumber::phi_plus_2()).expect("integral"),
    );
    report
}

/// Verifies identity and congruence statements, sharing one flow memo and
/// one disk expander across all calls.
#[derive(Debug, Default)]
pub struct IdentityChecker {
    yamada: YamadaEngine,
    expander: DiskExpander,
}

impl IdentityChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_engine(yamada: YamadaEngine) -> Self {
        IdentityChecker {
            yamada,
            expander: DiskExpander::new(),
        }
    }

    pub fn flow(&self) -> &FlowEngine {
        self.yamada.flow()
    }

    pub fn yamada_engine(&self) -> &YamadaEngine {
        &self.yamada
    }

    fn require(&self, ok: bool, message: &str) -> Result<(), CheckError> {
        if ok {
            Ok(())
        } else {
            Err(CheckError::Precondition(message.into()))
        }
    }

    /// Verifies the golden flow identity for a planar cubic bridgeless
    /// graph, witnessed by a crossing-free plane drawing:
    /// `F(φ+2) = φ^E·F(φ+1)²` and its Galois conjugate
    /// `(-φ)^E·F(3-φ) = F(2-φ)²`.
    pub fn check_golden_planar(
        &self,
        g: &MultiGraph,
        witness: &PlanarDiagram,
    ) -> Result<Report, CheckError> {
        self.require(g.is_cubic(), "the golden identity needs a cubic graph")?;
        self.require(!g.has_bridge(), "the golden identity needs a bridgeless graph")?;
        self.require(
            witness.num_crossings() == 0,
            "the witness drawing must be crossing-free",
        )?;
        self.require(
            witness.is_realizable(),
            "the witness drawing must be a plane drawing",
        )?;
        self.require(
            canonical_key(&witness.underlying_graph().graph) == canonical_key(g),
            "the witness draws a different graph",
        )?;

        let mut report = Report::new("golden flow identity");
        let f = self.flow().flow_polynomial(g);
        let e = g.num_edges() as i64;
        let phi = GoldenNumber::phi();

        let lhs = f.eval_golden(&GoldenNumber::phi_plus_2());
        let f1 = f.eval_golden(&GoldenNumber::phi_plus_1());
        let rhs = &phi.pow(e)? * &(&f1 * &f1);
        report.check_eq("value at φ+2 is the scaled square of the value at φ+1", &lhs, &rhs);

        let fz = f.eval_golden(&GoldenNumber::z_point());
        let fw = f.eval_golden(&GoldenNumber::w_point());
        let conj_lhs = &(-&phi).pow(e)? * &fz;
        report.check_eq(
            "conjugate form: scaled value at 3-φ is the square of the value at 2-φ",
            &conj_lhs,
            &(&fw * &fw),
        );
        Ok(report)
    }

    /// Verifies the Yamada golden identity for a diagram of a spatial graph
    /// with vertex degrees 2 and 3:
    /// `R(ζ) = (-1)^{V-E}·φ^{E'}·R(ζ⁸)²` in the cyclotomic ring, with
    /// `φ` embedded as `ζ - ζ⁴`, `V`, `E` counted on the underlying graph,
    /// and `E' = V₃ - V + E`.
    pub fn check_golden_yamada(&self, d: &PlanarDiagram) -> Result<Report, CheckError> {
        self.require(
            d.is_realizable(),
            "the Yamada golden identity needs a plane diagram",
        )?;
        let under = d.underlying_graph().graph;
        self.require(
            (0..under.num_vertices()).all(|v| matches!(under.degree(v), 2 | 3)),
            "the Yamada golden identity needs vertex degrees 2 and 3",
        )?;

        let mut report = Report::new("Yamada golden identity");
        let r = self.yamada.yamada(d)?;
        let v = under.num_vertices();
        let e = under.num_edges();
        let e_prime = d.e_prime();

        let lhs = r.eval_at_zeta(1);
        let r8 = r.eval_at_zeta(8);
        let phi = CyclotomicNumber::from_golden(&GoldenNumber::phi()).expect("integral");
        let mut rhs = &phi.pow(e_prime)? * &(&r8 * &r8);
        if (v + e) % 2 != 0 {
            rhs = -&rhs;
        }
        report.check_eq(
            "value at ζ is the signed scaled square of the value at ζ⁸",
            &lhs,
            &rhs,
        );
        Ok(report)
    }

    /// Verifies `F(0) ≡ 3^E·F(4)² (mod 5)` for a planar cubic graph.
    pub fn check_mod5_planar(&self, g: &MultiGraph) -> Result<Report, CheckError> {
        self.require(g.is_cubic(), "the mod-5 flow congruence needs a cubic graph")?;
        self.require(
            planar_embedding(g).is_some(),
            "the mod-5 flow congruence needs a planar graph",
        )?;
        let mut report = Report::new("mod-5 flow congruence");
        let f = self.flow().flow_polynomial(g);
        let lhs = Mod5::from_bigint(&f.eval_i64(0));
        let f4 = Mod5::from_bigint(&f.eval_i64(4));
        let rhs = Mod5::new(3).pow(g.num_edges() as u64) * f4 * f4;
        report.check_eq("flow value at 0 matches the scaled square at 4", &lhs, &rhs);
        Ok(report)
    }

    /// Verifies `R(-1) ≡ (-1)^{V-E}·3^E·R(1)² (mod 5)` for a diagram whose
    /// underlying graph is cubic, along with the exact integer identity
    /// `R(-1) = (-1)^{V-E}·F(0)`.
    pub fn check_mod5_diagram(&self, d: &PlanarDiagram) -> Result<Report, CheckError> {
        self.require(
            d.is_realizable(),
            "the mod-5 Yamada congruence needs a plane diagram",
        )?;
        let under = d.underlying_graph().graph;
        self.require(
            under.is_cubic(),
            "the mod-5 Yamada congruence needs a cubic underlying graph",
        )?;
        let mut report = Report::new("mod-5 Yamada congruence");
        let r = self.yamada.yamada(d)?;
        let v = under.num_vertices();
        let e = under.num_edges();
        let sign = if (v + e) % 2 == 0 { 1 } else { -1 };

        let lhs = Mod5::from_bigint(&r.eval_at_neg_one());
        let r1 = Mod5::from_bigint(&r.eval_at_one());
        let rhs = Mod5::new(sign) * Mod5::new(3).pow(e as u64) * r1 * r1;
        report.check_eq("Yamada value at -1 matches the scaled square at 1", &lhs, &rhs);

        let f0 = self.flow().flow_polynomial(&under).eval_i64(0);
        report.check_eq(
            "Yamada value at -1 equals the signed flow value at 0",
            &r.eval_at_neg_one(),
            &(BigInt::from(sign) * f0),
        );
        Ok(report)
    }

    /// Verifies `F(0) ≡ 3^E·R(1)² (mod 5)` for any cubic graph paired with
    /// any diagram of it — planar or not.
    pub fn check_mod5_pair(
        &self,
        g: &MultiGraph,
        d: &PlanarDiagram,
    ) -> Result<Report, CheckError> {
        self.require(g.is_cubic(), "the mixed mod-5 congruence needs a cubic graph")?;
        self.require(
            d.is_realizable(),
            "the mixed mod-5 congruence needs a plane diagram",
        )?;
        self.require(
            canonical_key(&d.underlying_graph().graph) == canonical_key(g),
            "the diagram draws a different graph",
        )?;
        let mut report = Report::new("mixed mod-5 congruence");
        let f0 = Mod5::from_bigint(&self.flow().flow_polynomial(g).eval_i64(0));
        let r = self.yamada.yamada(d)?;
        let r1 = Mod5::from_bigint(&r.eval_at_one());
        let rhs = Mod5::new(3).pow(g.num_edges() as u64) * r1 * r1;
        report.check_eq("flow value at 0 matches the scaled Yamada square at 1", &f0, &rhs);
        Ok(report)
    }

    /// Scans a corpus of graphs: each cubic member's `F(0) mod 5` must lie
    /// in `{0, 1, 4}` when `V/2` is even and in `{0, 2, 3}` when `V/2` is
    /// odd. Non-cubic members are reported and skipped.
    pub fn residue_scan<'a>(&self, corpus: impl IntoIterator<Item = &'a MultiGraph>) -> ResidueScan {
        let mut report = Report::new("mod-5 residue scan");
        let mut counts = [0usize; 5];
        let mut skipped = 0usize;
        for (k, g) in corpus.into_iter().enumerate() {
            if !g.is_cubic() {
                report.check(format!("member {k}: skipped (not cubic)"), true);
                skipped += 1;
                continue;
            }
            let residue = Mod5::from_bigint(&self.flow().flow_polynomial(g).eval_i64(0)).value();
            counts[residue as usize] += 1;
            let allowed: [u8; 3] = if (g.num_vertices() / 2) % 2 == 0 {
                [0, 1, 4]
            } else {
                [0, 2, 3]
            };
            report.check_with_values(
                format!("member {k}: residue class matches the parity of V/2"),
                allowed.contains(&residue),
                &residue,
                &format!("{allowed:?}"),
            );
        }
        ResidueScan {
            report,
            counts,
            skipped,
        }
    }

    /// The snark test suite: snark recognition, `5 | F(0)`, `120 | F(0)`,
    /// exact divisibility of `F` by `(Q-1)(Q-2)(Q-3)(Q-4)`, vanishing
    /// 3-edge-coloring count cross-checked against `F(4)`, and — when a
    /// diagram is supplied — a vanishing Penrose number.
    pub fn snark_checks(
        &self,
        g: &MultiGraph,
        diagram: Option<&PlanarDiagram>,
    ) -> Result<Report, CheckError> {
        let mut report = Report::new("snark checks");
        report.check(
            "graph is a snark (cubic, bridgeless, not 3-edge-colorable)",
            is_snark(g),
        );
        let f = self.flow().flow_polynomial(g);
        let f0 = f.eval_i64(0);
        report.check_with_values(
            "flow value at 0 is divisible by 5",
            Mod5::from_bigint(&f0).value() == 0,
            &f0,
            &"0 (mod 5)",
        );
        report.check_with_values(
            "flow value at 0 is divisible by 120",
            (&f0 % BigInt::from(120)).is_zero(),
            &f0,
            &"0 (mod 120)",
        );
        report.check(
            "flow polynomial is divisible by (Q-1)(Q-2)(Q-3)(Q-4)",
            f.divide_exact(&IntPolynomial::from_roots(&[1, 2, 3, 4]))
                .is_some(),
        );
        let colorings = three_edge_colorings(g);
        report.check_with_values(
            "no proper 3-edge-coloring exists",
            colorings == 0,
            &colorings,
            &0,
        );
        report.check_eq(
            "coloring count equals the flow value at 4",
            &BigInt::from(colorings),
            &f.eval_i64(4),
        );
        if let Some(d) = diagram {
            self.require(
                canonical_key(&d.underlying_graph().graph) == canonical_key(g),
                "the diagram draws a different graph",
            )?;
            let penrose = penrose_number(d)?;
            report.check_eq("Penrose number vanishes", &penrose, &0);
        }
        Ok(report)
    }

    /// Flow polynomial of the glued graph `cap ∪ completion`.
    fn pairing(&self, completion: &MarkedDisk, cap: Cap) -> IntPolynomial {
        self.flow()
            .flow_polynomial(&completion.glue(&cap.disk()).graph)
    }

    /// Verifies the linear pairing relation `⟨I, C⟩ = a·⟨P0, C⟩ + b·⟨P1, C⟩`
    /// at the chosen golden point for every completion. The completions
    /// must be genuine (planar) disks: the relation lives in the algebra
    /// spanned by drawn disks, and pairing against the crossing-only `X`
    /// element can tell the two sides apart.
    pub fn check_linear_relation(
        &self,
        variant: GoldenVariant,
        completions: &[MarkedDisk],
    ) -> Report {
        let mut report = Report::new(format!("linear pairing relation at {variant}"));
        let q = variant.point();
        let (a, b) = variant.coefficients();
        for (k, c) in completions.iter().enumerate() {
            let lhs = self.pairing(c, Cap::IGraph).eval_golden(&q);
            let p0 = self.pairing(c, Cap::P0).eval_golden(&q);
            let p1 = self.pairing(c, Cap::P1).eval_golden(&q);
            let rhs = &(&a * &p0) + &(&b * &p1);
            report.check_eq(format!("completion {k}"), &lhs, &rhs);
        }
        report
    }

    /// [`Self::check_linear_relation`] for drawn crossing-free disk
    /// diagrams.
    pub fn check_linear_relation_diagrams(
        &self,
        variant: GoldenVariant,
        completions: &[DiskGraph],
    ) -> Result<Report, CheckError> {
        let marked = completions
            .iter()
            .map(marked_disk_from_diagram)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.check_linear_relation(variant, &marked))
    }

    /// Verifies the closure value rows of a cubic marked disk: for each cap
    /// `c ∈ {P0, P1, I, H}`, the flow value of `c ∪ disk` at `z = 3-φ` and
    /// `w = 2-φ` equals the constant row applied to the expansion
    /// coordinates, the golden defect of each closure vanishes with its own
    /// edge count, the bar closures carry three extra edges, and the formal
    /// row dependency holds symbolically.
    pub fn check_closure_rows(&self, disk: &MarkedDisk) -> Result<Report, CheckError> {
        self.require(
            disk.is_cubic(),
            "the closure value rows need a cubic disk",
        )?;
        let mut report = Report::new("closure value rows");
        let z = GoldenNumber::z_point();
        let w = GoldenNumber::w_point();
        let phi = GoldenNumber::phi();
        let coords = self.expander.expand(disk)?;
        let cz = coords.eval_golden(&z);
        let cw = coords.eval_golden(&w);
        let rows = closure_rows();

        let caps = [
            ("pairing 1-3/2-4", Cap::P0),
            ("pairing 1-2/3-4", Cap::P1),
            ("bar joining 1,2 to 3,4", Cap::IGraph),
            ("bar joining 1,3 to 2,4", Cap::HGraph),
        ];
        let mut effective = [0usize; 4];
        for (k, (name, cap)) in caps.into_iter().enumerate() {
            let closure = disk.glue(&cap.disk());
            let f = self.flow().flow_polynomial(&closure.graph);
            effective[k] = closure.effective_edges();
            let direct_z = f.eval_golden(&z);
            let direct_w = f.eval_golden(&w);
            report.check_eq(
                format!("{name}: value row at z"),
                &direct_z,
                &dot3(&rows.at_z[k], &cz),
            );
            report.check_eq(
                format!("{name}: value row at w"),
                &direct_w,
                &dot3(&rows.at_w[k], &cw),
            );
            let scaled = &(-&phi).pow(-(effective[k] as i64))? * &(&direct_w * &direct_w);
            report.check_eq(format!("{name}: golden defect vanishes"), &direct_z, &scaled);
        }
        report.check(
            "bar closures carry three extra edges",
            effective[1] == effective[0]
                && effective[2] == effective[0] + 3
                && effective[3] == effective[0] + 3,
        );
        report.merge(closure_row_dependency());
        Ok(report)
    }

    /// [`Self::check_closure_rows`] for a drawn crossing-free disk diagram.
    pub fn check_closure_rows_diagram(&self, disk: &DiskGraph) -> Result<Report, CheckError> {
        self.check_closure_rows(&marked_disk_from_diagram(disk)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures;
    use crate::graph::gen;
    use crate::nearplanar::{disk_h_diagram, disk_i_diagram, disk_k33_diagram, disk_p0_diagram, random_disks};

    #[test]
    fn golden_planar_identity_on_named_graphs() {
        let checker = IdentityChecker::new();
        let theta = gen::theta();
        let report = checker
            .check_golden_planar(&theta, &fixtures::flat(&theta).unwrap())
            .unwrap();
        assert!(report.passed(), "{report}");
        let f = checker.flow().flow_polynomial(&theta);
        assert_eq!(
            f.eval_golden(&GoldenNumber::phi_plus_2()),
            GoldenNumber::from_ints(1, 2),
        );

        let k4 = gen::k4();
        let report = checker
            .check_golden_planar(&k4, &fixtures::flat(&k4).unwrap())
            .unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(
            checker
                .flow()
                .flow_polynomial(&k4)
                .eval_golden(&GoldenNumber::phi_plus_2()),
            GoldenNumber::from_ints(1, 1),
        );

        // A crossing witness is rejected, as is a mismatched graph.
        assert!(checker
            .check_golden_planar(&gen::k33(), &fixtures::k33_one_crossing())
            .is_err());
        assert!(checker
            .check_golden_planar(&theta, &fixtures::flat(&k4).unwrap())
            .is_err());
        assert!(checker
            .check_golden_planar(&gen::dumbbell(), &fixtures::flat(&gen::dumbbell()).unwrap())
            .is_err());
    }

    #[test]
    fn golden_planar_identity_on_the_planar_cubic_corpus() {
        let checker = IdentityChecker::new();
        let mut checked = 0usize;
        for g in gen::loopfree_cubic_multigraphs(10).values().flatten() {
            if g.has_bridge() || planar_embedding(g).is_none() {
                continue;
            }
            let witness = fixtures::flat(g).expect("planar graphs have flat drawings");
            let report = checker.check_golden_planar(g, &witness).unwrap();
            assert!(report.passed(), "{report}");
            checked += 1;
        }
        assert!(checked >= 50, "only {checked} planar cubic graphs checked");
    }

    #[test]
    fn yamada_golden_identity_on_fixtures() {
        let checker = IdentityChecker::new();
        // The double-kink unknot has prefactor 1: both sides match directly.
        let rii = fixtures::rii_unknot();
        assert_eq!(rii.e_prime(), 0);
        let r = checker.yamada_engine().yamada(&rii).unwrap();
        assert_eq!(
            r.eval_at_zeta(1),
            &r.eval_at_zeta(8) * &r.eval_at_zeta(8),
        );
        for d in [
            fixtures::circle(),
            fixtures::flat_theta(),
            fixtures::trefoil(),
            fixtures::knotted_theta(),
            fixtures::k33_one_crossing(),
            fixtures::petersen_diagram(),
        ] {
            let report = checker.check_golden_yamada(&d).unwrap();
            assert!(report.passed(), "{report}");
        }
        // Degree-4 vertices are rejected.
        assert!(checker.check_golden_yamada(&fixtures::bouquet(2)).is_err());
    }

    #[test]
    fn yamada_golden_identity_on_the_diagram_corpus() {
        let checker = IdentityChecker::new();
        let mut checked = 0usize;
        for d in fixtures::diagram_corpus(4) {
            let under = d.underlying_graph().graph;
            if !(0..under.num_vertices()).all(|v| matches!(under.degree(v), 2 | 3)) {
                continue;
            }
            let report = checker.check_golden_yamada(&d).unwrap();
            assert!(report.passed(), "{report}");
            checked += 1;
        }
        assert!(checked >= 50, "only {checked} diagrams checked");
    }

    #[test]
    fn mod5_congruences_on_named_inputs() {
        let checker = IdentityChecker::new();
        let theta = gen::theta();
        assert!(checker.check_mod5_planar(&theta).unwrap().passed());
        let f = checker.flow().flow_polynomial(&theta);
        assert_eq!(f.eval_i64(0), BigInt::from(2));
        assert_eq!(f.eval_i64(4), BigInt::from(6));
        assert!(checker.check_mod5_planar(&gen::k4()).unwrap().passed());
        // Nonplanar input is rejected by the planar congruence...
        assert!(checker.check_mod5_planar(&gen::petersen()).is_err());
        // ...but handled by the diagram and mixed forms.
        for d in [
            fixtures::flat_theta(),
            fixtures::knotted_theta(),
            fixtures::k33_one_crossing(),
            fixtures::petersen_diagram(),
        ] {
            let report = checker.check_mod5_diagram(&d).unwrap();
            assert!(report.passed(), "{report}");
            let under = d.underlying_graph().graph;
            let report = checker.check_mod5_pair(&under, &d).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn mod5_congruence_on_the_planar_corpus() {
        let checker = IdentityChecker::new();
        let mut checked = 0usize;
        for g in gen::loopfree_cubic_multigraphs(10).values().flatten() {
            if planar_embedding(g).is_none() {
                continue;
            }
            assert!(checker.check_mod5_planar(g).unwrap().passed());
            checked += 1;
        }
        assert!(checked >= 50);
    }

    #[test]
    fn residue_scan_follows_vertex_parity() {
        let checker = IdentityChecker::new();
        let corpus: Vec<MultiGraph> = gen::simple_cubic_graphs(12)
            .into_values()
            .flatten()
            .collect();
        let scan = checker.residue_scan(&corpus);
        assert!(scan.report.passed(), "{}", scan.report);
        assert_eq!(scan.skipped, 0);
        assert_eq!(scan.counts.iter().sum::<usize>(), corpus.len());
        // 1 + 2 + 5 + 19 + 85 connected simple cubic graphs up to 12 vertices.
        assert_eq!(corpus.len(), 112);

        let mixed = vec![gen::cycle(5), gen::theta()];
        let scan = checker.residue_scan(&mixed);
        assert!(scan.report.passed());
        assert_eq!(scan.skipped, 1);
    }

    #[test]
    fn three_edge_coloring_counts_match_flow_values() {
        let checker = IdentityChecker::new();
        for g in [gen::theta(), gen::k4(), gen::cube(), gen::petersen()] {
            let colorings = three_edge_colorings(&g);
            let f4 = checker.flow().flow_polynomial(&g).eval_i64(4);
            assert_eq!(BigInt::from(colorings), f4);
        }
        assert_eq!(three_edge_colorings(&gen::theta()), 6);
        assert_eq!(three_edge_colorings(&gen::k4()), 6);
        assert_eq!(three_edge_colorings(&gen::petersen()), 0);
    }

    #[test]
    fn snark_suite_on_petersen_and_the_flower_snark() {
        let checker = IdentityChecker::new();
        assert!(is_snark(&gen::petersen()));
        assert!(is_snark(&gen::flower_snark_j5()));
        assert!(!is_snark(&gen::k4()));
        assert!(!is_snark(&gen::theta()));
        assert!(!is_snark(&gen::dumbbell()));

        let report = checker
            .snark_checks(&gen::petersen(), Some(&fixtures::petersen_diagram()))
            .unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(
            checker.flow().flow_polynomial(&gen::petersen()).eval_i64(0),
            BigInt::from(240),
        );

        let report = checker.snark_checks(&gen::flower_snark_j5(), None).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn linear_pairing_relation_on_many_completions() {
        let checker = IdentityChecker::new();
        let mut completions = vec![
            MarkedDisk::pairing_p0(),
            MarkedDisk::pairing_p1(),
            MarkedDisk::star(),
            MarkedDisk::i_graph(),
            MarkedDisk::h_graph(),
        ];
        completions.extend(random_disks(5, 6, 3));
        assert!(completions.len() >= 10);
        for variant in [GoldenVariant::PhiPlus1, GoldenVariant::TwoMinusPhi] {
            let report = checker.check_linear_relation(variant, &completions);
            assert!(report.passed(), "{report}");
            assert_eq!(report.num_passed(), completions.len());
        }
        // The relation does not extend to the crossing-only X pairing:
        // its Gram row escapes the kernel of the planar pairing.
        let with_x = [MarkedDisk::pairing_x()];
        assert!(!checker
            .check_linear_relation(GoldenVariant::PhiPlus1, &with_x)
            .passed());
        // The bar-against-star pairing has the closed form (Q-1)(Q-2)².
        assert_eq!(
            checker.pairing(&MarkedDisk::star(), Cap::IGraph),
            IntPolynomial::from_roots(&[1, 2, 2]),
        );
        // Drawn completions go through the same check.
        let drawn = [disk_p0_diagram(), disk_i_diagram(), disk_h_diagram()];
        let report = checker
            .check_linear_relation_diagrams(GoldenVariant::PhiPlus1, &drawn)
            .unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn closure_rows_on_fixture_disks() {
        let checker = IdentityChecker::new();
        for disk in [
            MarkedDisk::pairing_p0(),
            MarkedDisk::i_graph(),
            MarkedDisk::h_graph(),
            MarkedDisk::family_from_moves("H;P1;P3").unwrap()[2].clone(),
        ] {
            let report = checker.check_closure_rows(&disk).unwrap();
            assert!(report.passed(), "{report}");
        }
        let report = checker
            .check_closure_rows_diagram(&disk_k33_diagram())
            .unwrap();
        assert!(report.passed(), "{report}");
        // The star disk is not cubic.
        assert!(checker.check_closure_rows(&MarkedDisk::star()).is_err());
    }

    #[test]
    fn symbolic_reports_pass() {
        let dependency = closure_row_dependency();
        assert!(dependency.passed(), "{dependency}");
        let skein = skein_square_coefficients();
        assert!(skein.passed(), "{skein}");
        // The combined weights collapse to single powers of ζ.
        let phi_inv =
            CyclotomicNumber::from_golden(&GoldenNumber::from_ints(-1, 1)).unwrap();
        let c_a = &CyclotomicNumber::zeta_pow(8) - &phi_inv;
        let c_b = &CyclotomicNumber::zeta_pow(2) - &phi_inv;
        assert_eq!(c_a, -&CyclotomicNumber::zeta_pow(2));
        assert_eq!(c_b, CyclotomicNumber::zeta_pow(3));
    }
}
