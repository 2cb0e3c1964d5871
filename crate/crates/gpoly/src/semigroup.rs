//! The free semigroup of 2×2 golden matrices acting on the two-dimensional
//! strand module: exact matrix arithmetic for the generators `A` and `B`,
//! the ping-pong freeness certificate, realization of words as planar cubic
//! graphs whose flow values reproduce the matrix pairings, the exponential
//! count of distinct pairing values, and the `Q = 4` action of the squared
//! generators.
//!
//! The module basis is `e₁` (strand from the bottom port to the first top
//! port, cup over the last two) and `e₂` (strand to the last top port, cup
//! over the first two). A word acts by stacking rung blocks: `A` places a
//! rung across strands 2 and 3, `B` across strands 1 and 2, rightmost
//! letter nearest the bottom cap. Pairings close the diagram with a
//! reflected cap on top and an arc joining the two ports.

use std::collections::HashSet;
use std::fmt;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::disk::{circle_components, smooth_junctions};
use crate::error::CheckError;
use crate::flow::FlowEngine;
use crate::graph::MultiGraph;
use crate::report::Report;
use crate::rings::{GoldenNumber, IntPolynomial};

/// A 2×2 matrix over the golden ring, multiplied exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenMatrix2 {
    entries: [[GoldenNumber; 2]; 2],
}

impl GoldenMatrix2 {
    pub fn new(entries: [[GoldenNumber; 2]; 2]) -> Self {
        GoldenMatrix2 { entries }
    }

    pub fn identity() -> Self {
        let one = GoldenNumber::one;
        let zero = GoldenNumber::zero;
        GoldenMatrix2::new([[one(), zero()], [zero(), one()]])
    }

    pub fn entry(&self, row: usize, col: usize) -> &GoldenNumber {
        &self.entries[row][col]
    }

    pub fn scale(&self, s: &GoldenNumber) -> Self {
        GoldenMatrix2::new(self.entries.clone().map(|row| row.map(|x| &x * s)))
    }

    pub fn det(&self) -> GoldenNumber {
        &(&self.entries[0][0] * &self.entries[1][1]) - &(&self.entries[0][1] * &self.entries[1][0])
    }

    /// Image of a coordinate vector.
    pub fn apply(&self, v: &ModuleVector) -> ModuleVector {
        ModuleVector::new(
            &(&self.entries[0][0] * &v.e1) + &(&self.entries[0][1] * &v.e2),
            &(&self.entries[1][0] * &v.e1) + &(&self.entries[1][1] * &v.e2),
        )
    }

    /// Image of the `i`-th basis vector (`i ∈ {1, 2}`): the `i`-th column.
    pub fn column(&self, i: usize) -> ModuleVector {
        ModuleVector::new(self.entries[0][i - 1].clone(), self.entries[1][i - 1].clone())
    }

    /// Canonical text encoding, usable as an exact hash key.
    pub fn encode(&self) -> String {
        format!("{self}")
    }
}

impl std::ops::Mul for &GoldenMatrix2 {
    type Output = GoldenMatrix2;

    fn mul(self, rhs: &GoldenMatrix2) -> GoldenMatrix2 {
        let mut entries = [[GoldenNumber::zero(), GoldenNumber::zero()], [
            GoldenNumber::zero(),
            GoldenNumber::zero(),
        ]];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = &(&self.entries[i][0] * &rhs.entries[0][j])
                    + &(&self.entries[i][1] * &rhs.entries[1][j]);
            }
        }
        GoldenMatrix2::new(entries)
    }
}

impl fmt::Display for GoldenMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// Coordinates over the module basis `(e₁, e₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    pub e1: GoldenNumber,
    pub e2: GoldenNumber,
}

impl ModuleVector {
    pub fn new(e1: GoldenNumber, e2: GoldenNumber) -> Self {
        ModuleVector { e1, e2 }
    }

    /// Strictly positive in both coordinates.
    pub fn is_positive(&self) -> bool {
        self.e1.sign() > 0 && self.e2.sign() > 0
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·e1 + ({})·e2", self.e1, self.e2)
    }
}

/// The two semigroup generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn matrix(self) -> GoldenMatrix2 {
        match self {
            Letter::A => matrix_a(),
            Letter::B => matrix_b(),
        }
    }

    /// The pair of strand columns (0-based) its rung block joins.
    fn strands(self) -> (usize, usize) {
        match self {
            Letter::A => (1, 2),
            Letter::B => (0, 1),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A => write!(f, "A"),
            Letter::B => write!(f, "B"),
        }
    }
}

/// Parses a word over the alphabet `A`, `B` (single letters) and `a`, `b`
/// (squared letters), ignoring whitespace.
pub fn parse_word(s: &str) -> Result<Vec<Letter>, CheckError> {
    let mut word = Vec::new();
    for c in s.chars() {
        match c {
            'A' => word.push(Letter::A),
            'B' => word.push(Letter::B),
            'a' => word.extend([Letter::A, Letter::A]),
            'b' => word.extend([Letter::B, Letter::B]),
            c if c.is_whitespace() => {}
            other => {
                return Err(CheckError::Precondition(format!(
                    "unknown letter {other:?} in word (alphabet: A, B, a, b)"
                )));
            }
        }
    }
    Ok(word)
}

/// Renders a word, with the empty word shown explicitly.
pub fn format_word(word: &[Letter]) -> String {
    if word.is_empty() {
        "(empty)".into()
    } else {
        word.iter().map(|l| l.to_string()).collect()
    }
}

/// `A = -φ·[[1, 1], [0, φ]]`.
pub fn matrix_a() -> GoldenMatrix2 {
    let phi = GoldenNumber::phi();
    GoldenMatrix2::new([
        [GoldenNumber::one(), GoldenNumber::one()],
        [GoldenNumber::zero(), phi.clone()],
    ])
    .scale(&-&phi)
}

/// `B = -φ·[[φ, 0], [1, 1]]`.
pub fn matrix_b() -> GoldenMatrix2 {
    let phi = GoldenNumber::phi();
    GoldenMatrix2::new([
        [phi.clone(), GoldenNumber::zero()],
        [GoldenNumber::one(), GoldenNumber::one()],
    ])
    .scale(&-&phi)
}

/// The generators and their squares: `(A, B, A², B²)`.
pub fn matrices() -> (GoldenMatrix2, GoldenMatrix2, GoldenMatrix2, GoldenMatrix2) {
    let a = matrix_a();
    let b = matrix_b();
    let a2 = &a * &a;
    let b2 = &b * &b;
    (a, b, a2, b2)
}

/// Verifies the closed forms of the squared generators and the generator
/// determinants by exact golden multiplication.
pub fn matrix_squares_report() -> Report {
    let mut report = Report::new("squared generator matrices");
    let (a, b, a2, b2) = matrices();
    let phi = GoldenNumber::phi();
    let phi2 = &phi * &phi;
    let a2_expected = GoldenMatrix2::new([
        [GoldenNumber::one(), phi2.clone()],
        [GoldenNumber::zero(), phi2.clone()],
    ])
    .scale(&phi2);
    report.check_eq("A² has the closed form φ²[[1, φ²], [0, φ²]]", &a2, &a2_expected);
    let b2_expected = GoldenMatrix2::new([
        [phi2.clone(), GoldenNumber::zero()],
        [phi2.clone(), GoldenNumber::one()],
    ])
    .scale(&phi2);
    report.check_eq("B² has the closed form φ²[[φ², 0], [φ², 1]]", &b2, &b2_expected);
    let phi3 = &phi2 * &phi;
    report.check_eq("det A = φ³", &a.det(), &phi3);
    report.check_eq("det B = φ³", &b.det(), &phi3);
    report.check(
        "the squared generators do not commute",
        &a2 * &b2 != &b2 * &a2,
    );
    report
}

/// Product of the letter matrices, leftmost letter outermost (so the
/// rightmost letter acts first on a vector).
pub fn word_matrix(word: &[Letter]) -> GoldenMatrix2 {
    word.iter()
        .fold(GoldenMatrix2::identity(), |acc, l| &acc * &l.matrix())
}

/// Product of the squared letter matrices.
pub fn squared_word_matrix(word: &[Letter]) -> GoldenMatrix2 {
    word.iter().fold(GoldenMatrix2::identity(), |acc, l| {
        let m = l.matrix();
        &(&acc * &m) * &m
    })
}

/// Distinctness statistics over all `2ⁿ` words of `n` squared letters.
#[derive(Clone, Copy, Debug)]
pub struct DistinctCount {
    pub words: usize,
    /// Distinct word matrices (freeness predicts all `2ⁿ`).
    pub matrices: usize,
    /// The largest number of distinct values taken by a single matrix
    /// entry slot; the pigeonhole bound makes it at least `2^{n/4}`.
    pub entry_values: usize,
}

fn enumerate_squared<F: FnMut(&GoldenMatrix2)>(
    depth: usize,
    current: &GoldenMatrix2,
    a2: &GoldenMatrix2,
    b2: &GoldenMatrix2,
    visit: &mut F,
) {
    if depth == 0 {
        visit(current);
        return;
    }
    enumerate_squared(depth - 1, &(current * a2), a2, b2, visit);
    enumerate_squared(depth - 1, &(current * b2), a2, b2, visit);
}

/// Enumerates all `2ⁿ` words in the squared generators and counts distinct
/// matrices and distinct per-slot entry values, exactly.
pub fn distinct_count(n: usize) -> Result<DistinctCount, CheckError> {
    if n == 0 || n > 14 {
        return Err(CheckError::Precondition(
            "squared-word length must be between 1 and 14".into(),
        ));
    }
    let (_, _, a2, b2) = matrices();
    let mut matrices_seen = HashSet::new();
    let mut slots: [HashSet<String>; 4] = Default::default();
    enumerate_squared(n, &GoldenMatrix2::identity(), &a2, &b2, &mut |m| {
        matrices_seen.insert(m.encode());
        for (k, slot) in slots.iter_mut().enumerate() {
            slot.insert(m.entry(k / 2, k % 2).to_string());
        }
    });
    Ok(DistinctCount {
        words: 1 << n,
        matrices: matrices_seen.len(),
        entry_values: slots.iter().map(HashSet::len).max().unwrap_or(0),
    })
}

/// The freeness certificate: `A²` maps the open positive cone into the
/// region `u₁ > u₂ > 0` and `B²` into `0 < w₁ < w₂`, verified symbolically
/// on the coefficient forms (`u₁ - u₂ = φ²v₁` and `w₂ - w₁ = φ²v₂` with
/// nonnegative matrix entries) and spot-checked on random positive vectors
/// by exact golden sign computation.
pub fn ping_pong_certificate() -> Report {
    let mut report = Report::new("ping-pong certificate");
    let (_, _, a2, b2) = matrices();
    let phi2 = GoldenNumber::from_ints(1, 1);

    report.check_eq(
        "A²: the difference u1 - u2 has coefficient φ² on v1",
        &(a2.entry(0, 0) - a2.entry(1, 0)),
        &phi2,
    );
    report.check(
        "A²: the difference u1 - u2 has no v2 term",
        (a2.entry(0, 1) - a2.entry(1, 1)).is_zero(),
    );
    report.check_eq(
        "B²: the difference w2 - w1 has coefficient φ² on v2",
        &(b2.entry(1, 1) - b2.entry(0, 1)),
        &phi2,
    );
    report.check(
        "B²: the difference w2 - w1 has no v1 term",
        (b2.entry(1, 0) - b2.entry(0, 0)).is_zero(),
    );
    report.check(
        "squared generators have nonnegative entries",
        (0..2).all(|i| (0..2).all(|j| a2.entry(i, j).sign() >= 0 && b2.entry(i, j).sign() >= 0)),
    );
    report.check(
        "every row of a squared generator has a positive entry",
        (0..2).all(|i| {
            (a2.entry(i, 0).sign() > 0 || a2.entry(i, 1).sign() > 0)
                && (b2.entry(i, 0).sign() > 0 || b2.entry(i, 1).sign() > 0)
        }),
    );

    // Boundary of the cone: v = (0, 1) collapses the strict inequality.
    let boundary = a2.apply(&ModuleVector::new(GoldenNumber::zero(), GoldenNumber::one()));
    report.check_eq(
        "the boundary vector (0, 1) collapses the A-cone inequality",
        &boundary.e1,
        &boundary.e2,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut all_ok = true;
    for _ in 0..40 {
        let coord = |rng: &mut ChaCha8Rng| {
            GoldenNumber::from_ints(rng.gen_range(1..=30), rng.gen_range(0..=30))
        };
        let v = ModuleVector::new(coord(&mut rng), coord(&mut rng));
        let u = a2.apply(&v);
        let w = b2.apply(&v);
        let mixed = a2.apply(&b2.apply(&v));
        all_ok &= u.is_positive() && u.e1.gt(&u.e2);
        all_ok &= w.is_positive() && w.e2.gt(&w.e1);
        all_ok &= mixed.is_positive() && mixed.e1.gt(&mixed.e2);
    }
    report.check(
        "random positive vectors land strictly inside the target cones",
        all_ok,
    );
    report
}

/// Realizes the pairing `⟨W·e_i, e_j⟩` as a multigraph: bottom cap `e_i`,
/// the rung blocks of `W` with the rightmost letter lowest, a reflected
/// `e_j` cap on top, and the closing arc between the two ports; all
/// 2-valent junctions smoothed away (closed strands stay as loop vertices).
pub fn word_graph(word: &[Letter], i: usize, j: usize) -> Result<MultiGraph, CheckError> {
    if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
        return Err(CheckError::Precondition(
            "basis indices must be 1 or 2".into(),
        ));
    }
    let mut g = MultiGraph::new(0);
    let pb = g.add_vertex();
    let mut top = [g.add_vertex(), g.add_vertex(), g.add_vertex()];
    let junctions = vec![pb, top[0], top[1], top[2]];
    if i == 1 {
        g.add_edge(pb, top[0]);
        g.add_edge(top[1], top[2]);
    } else {
        g.add_edge(pb, top[2]);
        g.add_edge(top[0], top[1]);
    }
    for letter in word.iter().rev() {
        let (s, t) = letter.strands();
        let x = g.add_vertex();
        let y = g.add_vertex();
        g.add_edge(top[s], x);
        g.add_edge(top[t], y);
        g.add_edge(x, y);
        top[s] = x;
        top[t] = y;
    }
    let pt = g.add_vertex();
    if j == 1 {
        g.add_edge(top[0], pt);
        g.add_edge(top[1], top[2]);
    } else {
        g.add_edge(top[2], pt);
        g.add_edge(top[0], top[1]);
    }
    g.add_edge(pb, pt);
    let mut pending = junctions;
    pending.push(pt);
    let (smoothed, _circles) = smooth_junctions(g, pending);
    Ok(smoothed)
}

/// Computes pairings of word images two ways — golden matrix algebra
/// against direct flow evaluation of the realized graphs — sharing one
/// flow memo.
#[derive(Debug, Default)]
pub struct SemigroupChecker {
    flow: FlowEngine,
}

impl SemigroupChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn flow(&self) -> &FlowEngine {
        &self.flow
    }

    /// The Gram matrix `⟨e_i, e_j⟩` as flow polynomials of the capped
    /// basis graphs.
    pub fn gram_polynomials(&self) -> Result<[[IntPolynomial; 2]; 2], CheckError> {
        let entry = |i, j| -> Result<IntPolynomial, CheckError> {
            Ok(self.flow.flow_polynomial(&word_graph(&[], i, j)?))
        };
        Ok([[entry(1, 1)?, entry(1, 2)?], [entry(2, 1)?, entry(2, 2)?]])
    }

    /// The Gram matrix evaluated at `q`; an error if it is singular there.
    pub fn gram_e(&self, q: &GoldenNumber) -> Result<[[GoldenNumber; 2]; 2], CheckError> {
        let polys = self.gram_polynomials()?;
        let g = polys.map(|row| row.map(|p| p.eval_golden(q)));
        let det = &(&g[0][0] * &g[1][1]) - &(&g[0][1] * &g[1][0]);
        if det.is_zero() {
            return Err(CheckError::Precondition(format!(
                "the Gram matrix is singular at Q = {q}"
            )));
        }
        Ok(g)
    }

    /// `⟨W·e_i, e_j⟩` at `Q = 2-φ` by pure matrix algebra: the Gram matrix
    /// applied to the image column.
    pub fn pairing_via_matrices(
        &self,
        word: &[Letter],
        i: usize,
        j: usize,
    ) -> Result<GoldenNumber, CheckError> {
        if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
            return Err(CheckError::Precondition(
                "basis indices must be 1 or 2".into(),
            ));
        }
        let gram = self.gram_e(&GoldenNumber::w_point())?;
        let x = word_matrix(word).column(i);
        Ok(&(&gram[j - 1][0] * &x.e1) + &(&gram[j - 1][1] * &x.e2))
    }

    /// `⟨W·e_i, e_j⟩` at `Q = 2-φ` by evaluating the flow polynomial of
    /// the realized word graph.
    pub fn pairing_via_flow(
        &self,
        word: &[Letter],
        i: usize,
        j: usize,
    ) -> Result<GoldenNumber, CheckError> {
        let g = word_graph(word, i, j)?;
        Ok(self
            .flow
            .flow_polynomial(&g)
            .eval_golden(&GoldenNumber::w_point()))
    }

    /// Cross-checks the two pairing computations for every word of length
    /// at most `n` and every basis pair, and verifies that inserting a
    /// neutral junction on a strand never changes a pairing.
    pub fn crosscheck_words(&self, n: usize) -> Result<Report, CheckError> {
        if n > 8 {
            return Err(CheckError::Precondition(
                "direct flow computation is kept to words of length at most 8".into(),
            ));
        }
        let mut report = Report::new("matrix-against-flow pairing crosscheck");
        for len in 0..=n {
            for bits in 0..(1u32 << len) {
                let word: Vec<Letter> = (0..len)
                    .map(|k| {
                        if bits >> k & 1 == 0 {
                            Letter::A
                        } else {
                            Letter::B
                        }
                    })
                    .collect();
                for i in 1..=2 {
                    for j in 1..=2 {
                        report.check_eq(
                            format!("word {} slot ({i},{j})", format_word(&word)),
                            &self.pairing_via_flow(&word, i, j)?,
                            &self.pairing_via_matrices(&word, i, j)?,
                        );
                    }
                }
            }
        }
        // A subdivision on a strand is a neutral insertion: the word graph
        // pairing is blind to it.
        let base = word_graph(&[Letter::A, Letter::B], 1, 2)?;
        let (subdivided, _) = base.subdivide_edge(0);
        report.check_eq(
            "a neutral junction on a strand never changes the pairing",
            &self.flow.flow_polynomial(&subdivided),
            &self.flow.flow_polynomial(&base),
        );
        Ok(report)
    }

    /// The growth certificate: for each requested squared-word length `m`,
    /// all `2^m` word matrices are distinct, and the four pairing slots of
    /// the Gram-transformed matrices together take at least `2^m` values,
    /// so the best slot takes at least `2^{m/4} = 2^{n/16}` distinct flow
    /// values on realized graphs with `n = 4m` internal vertices.
    pub fn growth_lower_bound(&self, lengths: &[usize]) -> Result<Report, CheckError> {
        let mut report = Report::new("exponential growth of pairing values");
        let gram = self.gram_e(&GoldenNumber::w_point())?;
        let fixture = word_graph(&[Letter::A, Letter::A], 1, 1)?;
        let internal = fixture.num_vertices() - circle_components(&fixture);
        report.check_eq(
            "each squared letter contributes four internal vertices",
            &internal,
            &4,
        );
        let (_, _, a2, b2) = matrices();
        for &m in lengths {
            if m == 0 || m > 14 {
                return Err(CheckError::Precondition(
                    "squared-word length must be between 1 and 14".into(),
                ));
            }
            let mut seen = HashSet::new();
            let mut slots: [HashSet<String>; 4] = Default::default();
            enumerate_squared(m, &GoldenMatrix2::identity(), &a2, &b2, &mut |w| {
                seen.insert(w.encode());
                for i in 0..2 {
                    for j in 0..2 {
                        let value = &(&gram[j][0] * w.entry(0, i)) + &(&gram[j][1] * w.entry(1, i));
                        slots[2 * j + i].insert(value.to_string());
                    }
                }
            });
            let words = 1usize << m;
            report.check_with_values(
                format!("length {m}: all squared-word matrices are distinct"),
                seen.len() == words,
                &seen.len(),
                &words,
            );
            let product: u128 = slots.iter().map(|s| s.len() as u128).product();
            report.check_with_values(
                format!("length {m}: slot counts multiply past the word count"),
                product >= words as u128,
                &product,
                &words,
            );
            let best = slots.iter().map(HashSet::len).max().unwrap_or(0) as u128;
            report.check_with_values(
                format!(
                    "length {m}: some slot takes at least 2^(n/16) values at n = {} vertices",
                    4 * m
                ),
                best.pow(4) >= words as u128,
                &best,
                &format!("2^{m}/4 root"),
            );
        }
        Ok(report)
    }

    /// Verifies the `Q = 4` action of the squared generators at the pairing
    /// level: against every supplied completion `(V, j)` — meaning the
    /// functional `⟨·, V·e_j⟩` — the relations `A²e₁ = 4e₁`,
    /// `A²e₂ = e₁ + e₂`, `B²e₁ = e₁ + e₂`, and `B²e₂ = 4e₂` hold for the
    /// flow values at `Q = 4`.
    pub fn q4_action_check(&self, completions: &[(Vec<Letter>, usize)]) -> Result<Report, CheckError> {
        let mut report = Report::new("Q = 4 action of the squared generators");
        for (k, (v_word, j)) in completions.iter().enumerate() {
            let adjoint: Vec<Letter> = v_word.iter().rev().copied().collect();
            let pair4 = |extra: &[Letter], i: usize| -> Result<BigInt, CheckError> {
                let word: Vec<Letter> = adjoint.iter().chain(extra).copied().collect();
                Ok(self.flow.flow_polynomial(&word_graph(&word, i, *j)?).eval_i64(4))
            };
            let base1 = pair4(&[], 1)?;
            let base2 = pair4(&[], 2)?;
            let aa = [Letter::A, Letter::A];
            let bb = [Letter::B, Letter::B];
            report.check_eq(
                format!("completion {k}: A²e1 = 4·e1"),
                &pair4(&aa, 1)?,
                &(BigInt::from(4) * &base1),
            );
            report.check_eq(
                format!("completion {k}: A²e2 = e1 + e2"),
                &pair4(&aa, 2)?,
                &(&base1 + &base2),
            );
            report.check_eq(
                format!("completion {k}: B²e1 = e1 + e2"),
                &pair4(&bb, 1)?,
                &(&base1 + &base2),
            );
            report.check_eq(
                format!("completion {k}: B²e2 = 4·e2"),
                &pair4(&bb, 2)?,
                &(BigInt::from(4) * &base2),
            );
        }
        Ok(report)
    }
}
