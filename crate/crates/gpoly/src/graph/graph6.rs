//! The graph6 and sparse6 text formats for exchanging graphs.
//!
//! graph6 covers simple graphs; sparse6 additionally carries loops and
//! parallel edges. Both store a vertex count followed by a 6-bits-per-byte
//! payload printed as ASCII 63..126.

use crate::error::GraphError;
use crate::graph::multigraph::MultiGraph;

const HEADER_GRAPH6: &str = ">>graph6<<";
const HEADER_SPARSE6: &str = ">>sparse6<<";

struct BitReader<'a> {
    data: &'a [u8], // 6-bit groups, already de-biased
    pos: usize,     // bit position
}

impl<'a> BitReader<'a> {
    fn new(data: &'a [u8]) -> Self {
        Self { data, pos: 0 }
    }

    /// Reads `k` bits MSB-first; `None` on exhaustion.
    fn take(&mut self, k: usize) -> Option<u64> {
        if self.pos + k > self.data.len() * 6 {
            return None;
        }
        let mut out = 0u64;
        for _ in 0..k {
            let byte = self.data[self.pos / 6];
            let bit = (byte >> (5 - self.pos % 6)) & 1;
            out = (out << 1) | u64::from(bit);
            self.pos += 1;
        }
        Some(out)
    }
}

#[derive(Default)]
struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    fn push(&mut self, value: u64, k: usize) {
        for i in (0..k).rev() {
            self.bits.push((value >> i) & 1 == 1);
        }
    }

    fn pad_and_encode(mut self, pad_bit: bool) -> String {
        while self.bits.len() % 6 != 0 {
            self.bits.push(pad_bit);
        }
        self.bits
            .chunks(6)
            .map(|c| {
                let v = c.iter().fold(0u8, |acc, &b| (acc << 1) | u8::from(b));
                (v + 63) as char
            })
            .collect()
    }
}

fn debias(s: &str, offset0: usize) -> Result<Vec<u8>, GraphError> {
    s.bytes()
        .enumerate()
        .map(|(i, b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(GraphError::Parse {
                    offset: offset0 + i,
                    message: format!("byte {b:#04x} outside printable range 63..=126"),
                })
            }
        })
        .collect()
}

/// Reads the N(n) vertex-count prefix; returns (n, bytes consumed).
fn read_n(data: &[u8], offset0: usize) -> Result<(usize, usize), GraphError> {
    let err = |msg: &str| GraphError::Parse {
        offset: offset0,
        message: msg.to_string(),
    };
    match data.first() {
        None => Err(err("missing vertex count")),
        Some(&b) if b < 63 => Ok((b as usize, 1)),
        Some(63) => {
            // 63 here is the de-biased value 126.
            match data.get(1) {
                Some(63) => {
                    if data.len() < 8 {
                        return Err(err("truncated 36-bit vertex count"));
                    }
                    let n = data[2..8].iter().fold(0u64, |a, &b| (a << 6) | u64::from(b));
                    Ok((n as usize, 8))
                }
                Some(_) => {
                    if data.len() < 4 {
                        return Err(err("truncated 18-bit vertex count"));
                    }
                    let n = data[1..4].iter().fold(0u64, |a, &b| (a << 6) | u64::from(b));
                    Ok((n as usize, 4))
                }
                None => Err(err("truncated vertex count")),
            }
        }
        Some(_) => unreachable!("de-biased bytes are <= 63"),
    }
}

fn write_n(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Parses a graph6 string (simple graph). A `>>graph6<<` header is allowed.
pub fn parse_graph6(s: &str) -> Result<MultiGraph, GraphError> {
    let s = s.trim_end();
    let body = s.strip_prefix(HEADER_GRAPH6).unwrap_or(s);
    let skipped = s.len() - body.len();
    let data = debias(body, skipped)?;
    let (n, used) = read_n(&data, skipped)?;
    let mut reader = BitReader::new(&data[used..]);
    let mut g = MultiGraph::new(n);
    for col in 1..n {
        for row in 0..col {
            let bit = reader.take(1).ok_or_else(|| GraphError::Parse {
                offset: skipped + used + reader.pos / 6,
                message: format!("adjacency bits end early at pair ({row},{col})"),
            })?;
            if bit == 1 {
                g.add_edge(row, col);
            }
        }
    }
    Ok(g)
}

/// Writes a simple graph in graph6 form; fails on loops or parallel edges.
pub fn write_graph6(g: &MultiGraph) -> Result<String, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::Precondition(
            "graph6 requires a simple graph; use sparse6 for multigraphs".into(),
        ));
    }
    let n = g.num_vertices();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = String::new();
    write_n(&mut out, n);
    let mut bits = BitWriter::default();
    for col in 1..n {
        for row in 0..col {
            bits.push(u64::from(adj[row * n + col]), 1);
        }
    }
    out.push_str(&bits.pad_and_encode(false));
    Ok(out)
}

fn sparse6_k(n: usize) -> usize {
    if n <= 1 {
        1
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Parses a sparse6 string (multigraph with loops). A `>>sparse6<<` header
/// is allowed; the leading `:` is required.
pub fn parse_sparse6(s: &str) -> Result<MultiGraph, GraphError> {
    let s = s.trim_end();
    let body = s.strip_prefix(HEADER_SPARSE6).unwrap_or(s);
    let skipped = s.len() - body.len();
    let body = body.strip_prefix(':').ok_or(GraphError::Parse {
        offset: skipped,
        message: "sparse6 data must start with ':'".into(),
    })?;
    let data = debias(body, skipped + 1)?;
    let (n, used) = read_n(&data, skipped + 1)?;
    let k = sparse6_k(n);
    let mut reader = BitReader::new(&data[used..]);
    let mut g = MultiGraph::new(n);
    let mut v = 0usize;
    loop {
        let Some(b) = reader.take(1) else { break };
        let Some(x) = reader.take(k) else { break };
        let x = x as usize;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            g.add_edge(x, v);
        }
    }
    Ok(g)
}

/// Writes any multigraph in sparse6 form (round-trips loops and parallel
/// edges).
pub fn write_sparse6(g: &MultiGraph) -> String {
    let n = g.num_vertices();
    let k = sparse6_k(n);
    let mut sorted: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.max(v), u.min(v)))
        .collect();
    sorted.sort_unstable();

    let mut bits = BitWriter::default();
    let mut v = 0usize;
    for &(hi, lo) in &sorted {
        if hi == v {
            bits.push(0, 1);
            bits.push(lo as u64, k);
        } else if hi == v + 1 {
            v += 1;
            bits.push(1, 1);
            bits.push(lo as u64, k);
        } else {
            v = hi;
            bits.push(1, 1);
            bits.push(hi as u64, k);
            bits.push(0, 1);
            bits.push(lo as u64, k);
        }
    }
    // Padding with 1-bits can fabricate a spurious loop at n-1 when n is a
    // power of two, the final position sits at n-2, and at least k+1 pad
    // bits remain. A (0, n-1) pair advances the position harmlessly.
    if n >= 2 && n == (1 << k) && v == n - 2 {
        let used = bits.bits.len() % 6;
        let pad = (6 - used) % 6;
        if pad >= k + 1 {
            bits.push(0, 1);
            bits.push((n - 1) as u64, k);
        }
    }
    let mut out = String::from(":");
    write_n(&mut out, n);
    out.push_str(&bits.pad_and_encode(true));

    debug_assert_eq!(
        {
            let mut e = parse_sparse6(&out).unwrap().edges().to_vec();
            e.iter_mut().for_each(|p| *p = (p.0.max(p.1), p.0.min(p.1)));
            e.sort_unstable();
            e
        },
        sorted,
        "sparse6 writer self-check failed"
    );
    out
}

/// Parses either format, dispatching on headers and the `:` prefix.
pub fn parse_auto(s: &str) -> Result<MultiGraph, GraphError> {
    let t = s.trim();
    if t.starts_with(HEADER_SPARSE6) || t.starts_with(':') {
        parse_sparse6(t)
    } else {
        parse_graph6(t)
    }
}
