//! Brute-force ground truth and graph generators.
//!
//! Nothing here shares code with [`crate::recognition`]: the oracles work on
//! plain `u32` adjacency masks and exhaustive subset enumeration, so they
//! can be trusted as an independent check of the fast algorithms.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex, VertexSet};
use crate::recognition::{OddAntiholeWitness, TwoCliqueCover};

pub const MAX_COVER_N: usize = 24;
pub const MAX_ANTIHOLE_N: usize = 16;
pub const MAX_ENUMERATE_N: usize = 7;

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect()
}

fn bits_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn is_clique_mask(adj: &[u32], set: u32) -> bool {
    (0..adj.len()).all(|v| set >> v & 1 == 0 || set & !(1 << v) & !adj[v] == 0)
}

/// Tries every bipartition with vertex 0 on side 1, in increasing order of
/// the side-1 bitmask, and returns the first whose sides are both cliques.
pub fn brute_two_clique_cover(g: &Graph) -> Result<Option<TwoCliqueCover>> {
    let n = g.n();
    if n > MAX_COVER_N {
        return Err(Error::Capacity { n, max: MAX_COVER_N });
    }
    if n == 0 {
        return Ok(Some(TwoCliqueCover::default()));
    }
    let adj = masks(g);
    let full = (1u32 << n) - 1;
    for rest in 0..1u32 << (n - 1) {
        let side1 = 1 | rest << 1;
        let side2 = full & !side1;
        if is_clique_mask(&adj, side1) && is_clique_mask(&adj, side2) {
            return Ok(Some(TwoCliqueCover::new(bits_to_set(side1), bits_to_set(side2))));
        }
    }
    Ok(None)
}

/// Next larger integer with the same popcount.
fn next_combination(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Searches odd subsets of size 3, 5, .. (within a size, by increasing
/// bitmask) for one whose induced complement is a single cycle. The cycle
/// is listed from its minimum vertex towards the smaller neighbour.
pub fn brute_find_odd_antihole(g: &Graph) -> Result<Option<OddAntiholeWitness>> {
    let n = g.n();
    if n > MAX_ANTIHOLE_N {
        return Err(Error::Capacity { n, max: MAX_ANTIHOLE_N });
    }
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let comp: Vec<u32> = masks(g)
        .iter()
        .enumerate()
        .map(|(v, &m)| full & !m & !(1 << v))
        .collect();
    for k in (3..=n).step_by(2) {
        let mut s = (1u32 << k) - 1;
        while s <= full {
            if let Some(order) = complement_cycle(&comp, s) {
                return Ok(Some(OddAntiholeWitness::new(order)));
            }
            s = next_combination(s);
        }
    }
    Ok(None)
}

/// If the complement restricted to `s` is one cycle through all of `s`,
/// returns it in canonical order.
fn complement_cycle(comp: &[u32], s: u32) -> Option<Vec<Vertex>> {
    for (u, &row) in comp.iter().enumerate() {
        if s >> u & 1 == 1 && (row & s).count_ones() != 2 {
            return None;
        }
    }
    let start = s.trailing_zeros() as usize;
    let nb = comp[start] & s;
    let mut prev = start;
    let mut v = nb.trailing_zeros() as usize;
    let mut order = vec![start];
    while v != start {
        order.push(v);
        let next = comp[v] & s & !(1 << prev);
        prev = v;
        v = next.trailing_zeros() as usize;
    }
    (order.len() == s.count_ones() as usize).then_some(order)
}

/// `(u, v)` pairs with `u < v` in lexicographic order; bit `i` of an
/// enumeration mask controls pair `i`.
fn pairs(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// The labelled graph on `n` vertices whose edge set is given by `mask`
/// over the lexicographic pair order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for (i, (u, v)) in pairs(n).enumerate() {
        if mask >> i & 1 == 1 {
            b.set(u, v);
        }
    }
    b.build()
}

/// A finite, reproducible sequence of graphs.
#[allow(clippy::large_enum_variant)]
pub enum GraphStream {
    Exhaustive {
        n: usize,
        next: u64,
        end: u64,
    },
    Random {
        rng: ChaCha8Rng,
        remaining: usize,
        sizes: (usize, usize),
        densities: Vec<f64>,
    },
}

impl GraphStream {
    /// `count` graphs with vertex count uniform in `sizes` (inclusive) and
    /// edge probability drawn from `densities`.
    pub fn random(count: usize, sizes: (usize, usize), densities: &[f64], seed: u64) -> Result<Self> {
        if sizes.0 > sizes.1 || densities.is_empty() {
            return Err(Error::Argument("empty size range or density list".into()));
        }
        if let Some(p) = densities.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::Argument(format!("probability {p} outside [0, 1]")));
        }
        Ok(GraphStream::Random {
            rng: ChaCha8Rng::seed_from_u64(seed),
            remaining: count,
            sizes,
            densities: densities.to_vec(),
        })
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            GraphStream::Exhaustive { n, next, end } => {
                if *next >= *end {
                    return None;
                }
                let g = graph_from_mask(*n, *next);
                *next += 1;
                Some(g)
            }
            GraphStream::Random {
                rng,
                remaining,
                sizes,
                densities,
            } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let span = (sizes.1 - sizes.0 + 1) as u64;
                let n = sizes.0 + (rng.next_u64() % span) as usize;
                let p = densities[(rng.next_u64() % densities.len() as u64) as usize];
                let seed = rng.next_u64();
                Some(random_graph(n, p, seed).expect("densities validated"))
            }
        }
    }
}

/// All `2^(n(n-1)/2)` labelled graphs on `n` vertices, in edge-mask order.
pub fn enumerate_graphs(n: usize) -> Result<GraphStream> {
    if n > MAX_ENUMERATE_N {
        return Err(Error::Capacity { n, max: MAX_ENUMERATE_N });
    }
    Ok(GraphStream::Exhaustive {
        n,
        next: 0,
        end: 1 << (n * n.saturating_sub(1) / 2),
    })
}

/// `G(n, p)` from a ChaCha8 stream seeded with `seed`.
///
/// Pairs are visited in lexicographic order; each consumes one `u64`, whose
/// top 53 bits `x` make an edge iff `x < p * 2^53`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Argument(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold = p * (1u64 << 53) as f64;
    let mut b = GraphBuilder::new(n);
    for (u, v) in pairs(n) {
        if ((rng.next_u64() >> 11) as f64) < threshold {
            b.set(u, v);
        }
    }
    Ok(b.build())
}

/// One vertex per edge of `g` (edges in lexicographic order); two vertices
/// are adjacent iff their edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut b = GraphBuilder::new(edges.len());
    for (i, &(a, c)) in edges.iter().enumerate() {
        for (j, &(x, y)) in edges.iter().enumerate().skip(i + 1) {
            if a == x || a == y || c == x || c == y {
                b.set(i, j);
            }
        }
    }
    b.build()
}

/// Apex-restricted antihole search: the first vertex (in label order) whose
/// neighbourhood contains an odd antihole, with the witness in host labels.
pub fn brute_find_apex_antihole(g: &Graph) -> Result<Option<(Vertex, OddAntiholeWitness)>> {
    for v in 0..g.n() {
        let nb: VertexSet = g.neighbors(v).collect();
        let (h, map) = g.induced_subgraph(&nb)?;
        if let Some(w) = brute_find_odd_antihole(&h)? {
            return Ok(Some((v, w.map_through(&map))));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{cycle, path, star};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn brute_cover_examples() {
        assert_eq!(
            brute_two_clique_cover(&path(4)).unwrap(),
            Some(TwoCliqueCover::new(set(&[0, 1]), set(&[2, 3])))
        );
        assert_eq!(brute_two_clique_cover(&cycle(5)).unwrap(), None);
        assert_eq!(
            brute_two_clique_cover(&Graph::empty(1)).unwrap(),
            Some(TwoCliqueCover::new(set(&[0]), set(&[])))
        );
        assert!(matches!(
            brute_two_clique_cover(&Graph::empty(25)),
            Err(Error::Capacity { n: 25, max: 24 })
        ));
    }

    #[test]
    fn brute_antihole_examples() {
        assert_eq!(
            brute_find_odd_antihole(&Graph::empty(3)).unwrap().unwrap().cycle_order,
            vec![0, 1, 2]
        );
        assert_eq!(brute_find_odd_antihole(&Graph::complete(6)).unwrap(), None);
        assert_eq!(
            brute_find_odd_antihole(&cycle(5)).unwrap().unwrap().cycle_order,
            vec![0, 2, 4, 1, 3]
        );
        // C7^C: its only odd antihole is the whole graph, listed along C7.
        assert_eq!(
            brute_find_odd_antihole(&cycle(7).complement()).unwrap().unwrap().cycle_order,
            vec![0, 1, 2, 3, 4, 5, 6]
        );
        // C7 itself holds 3K1 on {0, 2, 4}
        assert_eq!(
            brute_find_odd_antihole(&cycle(7)).unwrap().unwrap().cycle_order,
            vec![0, 2, 4]
        );
        assert!(brute_find_odd_antihole(&Graph::empty(17)).is_err());
    }

    #[test]
    fn gosper_visits_all_combinations() {
        let mut s = 0b111u32;
        let mut count = 0;
        while s < 1 << 6 {
            assert_eq!(s.count_ones(), 3);
            count += 1;
            s = next_combination(s);
        }
        assert_eq!(count, 20);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        let zero: Vec<Graph> = enumerate_graphs(0).unwrap().collect();
        assert_eq!(zero, vec![Graph::empty(0)]);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn enumeration_is_distinct() {
        let all: std::collections::HashSet<Graph> = enumerate_graphs(5).unwrap().collect();
        assert_eq!(all.len(), 1 << 10);
    }

    #[test]
    fn random_graph_contract() {
        for s in [0, 1, 99] {
            assert_eq!(random_graph(5, 0.0, s).unwrap(), Graph::empty(5));
            assert_eq!(random_graph(5, 1.0, s).unwrap(), Graph::complete(5));
        }
        assert_eq!(random_graph(10, 0.5, 42).unwrap(), random_graph(10, 0.5, 42).unwrap());
        assert!(random_graph(3, 1.5, 0).is_err());
        assert!(random_graph(3, f64::NAN, 0).is_err());
        let a: Vec<Graph> = GraphStream::random(20, (3, 9), &[0.2, 0.8], 5).unwrap().collect();
        let b: Vec<Graph> = GraphStream::random(20, (3, 9), &[0.2, 0.8], 5).unwrap().collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| (3..=9).contains(&g.n())));
    }

    #[test]
    fn random_graph_density_is_plausible() {
        let g = random_graph(200, 0.3, 7).unwrap();
        let frac = g.edge_count() as f64 / (200.0 * 199.0 / 2.0);
        assert!((frac - 0.3).abs() < 0.02, "{frac}");
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(line_graph(&star(3)), Graph::complete(3));
        assert_eq!(line_graph(&path(4)), path(3));
        // C5 edges in order 01, 04, 12, 23, 34.
        let l = line_graph(&cycle(5));
        assert_eq!(l.degree_sequence(), vec![2; 5]);
        assert_eq!(brute_find_odd_antihole(&l.complement()).unwrap().unwrap().len(), 5);
    }

    #[test]
    fn apex_search() {
        let (apex, w) = brute_find_apex_antihole(&star(3)).unwrap().unwrap();
        assert_eq!(apex, 0);
        assert_eq!(w.cycle_order, vec![1, 2, 3]);
        assert_eq!(brute_find_apex_antihole(&cycle(6)).unwrap(), None);
    }
}
