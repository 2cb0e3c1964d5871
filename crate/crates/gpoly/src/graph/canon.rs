//! Canonical keys for multigraphs, used to memoize polynomial computations.
//!
//! Isomorphic graphs receive equal keys, non-isomorphic ones distinct keys.
//! The construction is individualization–refinement: vertices are first
//! partitioned by invariants (optional pinned colour, loop count, degree),
//! the partition is refined by iterated neighbourhood signatures that track
//! edge multiplicities, and remaining symmetry is broken by individualizing
//! each member of the first non-singleton class and taking the minimum
//! resulting encoding.

use std::collections::HashMap;

use crate::graph::multigraph::MultiGraph;

/// An order-comparable, hashable canonical form.
pub type CanonKey = Vec<u32>;

/// Canonical key of a multigraph; disjoint unions are keyed component-wise
/// so that symmetric unions stay cheap.
pub fn canonical_key(g: &MultiGraph) -> CanonKey {
    let comps = g.split_components();
    if comps.len() <= 1 {
        return component_key(g, None);
    }
    let mut keys: Vec<CanonKey> = comps.iter().map(|c| component_key(c, None)).collect();
    keys.sort();
    // A leading sentinel keeps multi-component keys disjoint from connected
    // ones, whose first entry is a (small) vertex count.
    let mut out = vec![u32::MAX];
    for k in keys {
        out.push(k.len() as u32);
        out.extend(k);
    }
    out
}

/// Canonical key respecting a vertex colouring: only colour-preserving
/// isomorphisms identify two graphs. Works on disconnected graphs directly.
pub fn canonical_key_colored(g: &MultiGraph, colors: &[u32]) -> CanonKey {
    assert_eq!(colors.len(), g.num_vertices());
    component_key(g, Some(colors))
}

struct Searcher {
    n: usize,
    m: usize,
    loops: Vec<u32>,
    /// Caller-supplied vertex colours; all zero when no colouring was given.
    /// These enter the encoded key, so differently pinned graphs never collide.
    pins: Vec<u32>,
    /// Per vertex: sorted (neighbour, multiplicity) pairs, loops excluded.
    nbrs: Vec<Vec<(usize, u32)>>,
    /// Multiplicity lookup for encoding.
    mult: HashMap<(usize, usize), u32>,
    best: Option<CanonKey>,
}

fn component_key(g: &MultiGraph, pinned: Option<&[u32]>) -> CanonKey {
    let n = g.num_vertices();
    let mut loops = vec![0u32; n];
    let mut mult: HashMap<(usize, usize), u32> = HashMap::new();
    for &(u, v) in g.edges() {
        if u == v {
            loops[u] += 1;
        } else {
            *mult.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
    }
    let mut nbrs: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for (&(u, v), &k) in &mult {
        nbrs[u].push((v, k));
        nbrs[v].push((u, k));
    }
    for list in &mut nbrs {
        list.sort_unstable();
    }

    // Initial colours from (pin, loop count, degree).
    let mut tags: Vec<(u32, u32, u32)> = (0..n)
        .map(|v| {
            (
                pinned.map_or(0, |p| p[v]),
                loops[v],
                g.degree(v) as u32,
            )
        })
        .collect();
    let mut sorted = tags.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let colors: Vec<u32> = tags
        .drain(..)
        .map(|t| sorted.binary_search(&t).unwrap() as u32)
        .collect();

    let pins = match pinned {
        Some(p) => p.to_vec(),
        None => vec![0; n],
    };
    let mut s = Searcher {
        n,
        m: g.num_edges(),
        loops,
        pins,
        nbrs,
        mult,
        best: None,
    };
    s.search(colors);
    s.best.expect("search always produces a candidate")
}

impl Searcher {
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        loop {
            let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..self.n)
                .map(|v| {
                    let mut around: Vec<(u32, u32)> = self.nbrs[v]
                        .iter()
                        .map(|&(w, k)| (colors[w], k))
                        .collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut order: Vec<&(u32, Vec<(u32, u32)>)> = sigs.iter().collect();
            order.sort();
            order.dedup();
            let next: Vec<u32> = sigs
                .iter()
                .map(|s| order.binary_search(&s).unwrap() as u32)
                .collect();
            let classes = |c: &[u32]| {
                let mut u: Vec<u32> = c.to_vec();
                u.sort_unstable();
                u.dedup();
                u.len()
            };
            if classes(&next) == classes(&colors) {
                return next;
            }
            colors = next;
        }
    }

    fn search(&mut self, colors: Vec<u32>) {
        let colors = self.refine(colors);
        // First colour class with more than one member, by colour value.
        let mut count: HashMap<u32, usize> = HashMap::new();
        for &c in &colors {
            *count.entry(c).or_insert(0) += 1;
        }
        let target = count
            .iter()
            .filter(|&(_, &k)| k > 1)
            .map(|(&c, _)| c)
            .min();
        match target {
            None => {
                let key = self.encode(&colors);
                if self.best.as_ref().is_none_or(|b| key < *b) {
                    self.best = Some(key);
                }
            }
            Some(class) => {
                let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
                for v in 0..self.n {
                    if colors[v] == class {
                        let mut next = colors.clone();
                        next[v] = fresh;
                        self.search(next);
                    }
                }
            }
        }
    }

    fn encode(&self, colors: &[u32]) -> CanonKey {
        // Discrete colouring: vertex at canonical position p is the one with
        // the p-th smallest colour.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| colors[v]);
        let mut key = Vec::with_capacity(2 + 2 * self.n + self.n * self.n / 2);
        key.push(self.n as u32);
        key.push(self.m as u32);
        for &v in &order {
            key.push(self.pins[v]);
        }
        for &v in &order {
            key.push(self.loops[v]);
        }
        for p in 0..self.n {
            for q in (p + 1)..self.n {
                let (a, b) = (order[p].min(order[q]), order[p].max(order[q]));
                key.push(self.mult.get(&(a, b)).copied().unwrap_or(0));
            }
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn relabel(g: &MultiGraph, perm: &[usize]) -> MultiGraph {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        MultiGraph::from_edges(g.num_vertices(), &edges).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let fixtures = [
            MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap(),
            MultiGraph::from_edges(2, &[(0, 0), (1, 1), (0, 1)]).unwrap(),
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
            MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 1), (0, 2)])
                .unwrap(),
        ];
        for g in &fixtures {
            let base = canonical_key(g);
            for _ in 0..10 {
                let mut perm: Vec<usize> = (0..g.num_vertices()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_key(&relabel(g, &perm)), base);
            }
        }
    }

    #[test]
    fn distinguishes_nonisomorphic_graphs() {
        // Same degree sequence (all cubic on 6 vertices), different graphs.
        let k33 = MultiGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let prism = MultiGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_ne!(canonical_key(&k33), canonical_key(&prism));
        // Multiplicity matters: theta vs triangle-with-extra... vs 3-path.
        let theta = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let digon_loop = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 0)]).unwrap();
        assert_ne!(canonical_key(&theta), canonical_key(&digon_loop));
    }

    #[test]
    fn disjoint_unions_key_componentwise() {
        let a = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let b = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(canonical_key(&a.disjoint_union(&b)), canonical_key(&b.disjoint_union(&a)));
        assert_ne!(canonical_key(&a.disjoint_union(&b)), canonical_key(&a));
    }

    #[test]
    fn pinned_colors_restrict_symmetry() {
        // A 4-cycle: all vertices alike without pins.
        let c4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let plain = canonical_key_colored(&c4, &[0, 0, 0, 0]);
        let pin_adjacent = canonical_key_colored(&c4, &[1, 2, 0, 0]);
        let pin_opposite = canonical_key_colored(&c4, &[1, 0, 2, 0]);
        assert_ne!(pin_adjacent, pin_opposite);
        assert_ne!(plain, pin_adjacent);
        // Rotating the pinned pattern yields the same key.
        let rotated = canonical_key_colored(&c4, &[0, 1, 2, 0]);
        assert_eq!(pin_adjacent, rotated);
    }

    #[test]
    fn petersen_key_stable() {
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let mut edges = Vec::new();
        edges.extend(outer);
        edges.extend(inner);
        edges.extend(spokes);
        let p = MultiGraph::from_edges(10, &edges).unwrap();
        let base = canonical_key(&p);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..10).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_key(&relabel(&p, &perm)), base);
        }
    }
}
