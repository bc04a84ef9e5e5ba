//! Adding one vertex to a graph that already has a two-clique cover.
//!
//! Starting from the new vertex `u`, the complement is explored in layers:
//! `H^1` is the set of non-neighbours of `u`, and `H^j` collects the
//! vertices missing an edge to some member of `H^{j-1}` that are not yet
//! layered. Vertices of the same parity are pairwise adjacent unless two of
//! them share a layer and are non-adjacent; then `u` lies on an odd
//! antihole. Otherwise `u` joins the even layers, the odd layers form the
//! other clique, and every vertex the layers never reach keeps its old side.

use crate::error::{Error, Precondition, Result};
use crate::graph::{BitSet, Graph, Vertex, VertexSet};

use super::cover::{shortest_odd_complement_cycle, ComplementBfs};
use super::types::{CoverOutcome, OddAntiholeWitness, TwoCliqueCover};
use super::verify::verify_antihole;

fn invalid(msg: impl Into<String>) -> Error {
    Error::Precondition(Precondition::InvalidPrior(msg.into()))
}

/// Checks that `prior` is a partition of `V(g) \ {u}` into two cliques.
fn check_prior(g: &Graph, u: Vertex, prior: &TwoCliqueCover) -> Result<[BitSet; 2]> {
    let n = g.n();
    let s1 = prior.side1.to_bits(n)?;
    let s2 = prior.side2.to_bits(n)?;
    if s1.contains(u) || s2.contains(u) {
        return Err(invalid(format!("new vertex {u} already appears in the cover")));
    }
    if !s1.is_disjoint(s2.words()) {
        return Err(invalid("sides are not disjoint"));
    }
    if s1.len() + s2.len() != n - 1 {
        return Err(invalid(format!("sides do not cover every vertex other than {u}")));
    }
    if !g.is_clique(&s1) {
        return Err(invalid("side1 is not a clique"));
    }
    if !g.is_clique(&s2) {
        return Err(invalid("side2 is not a clique"));
    }
    Ok([s1, s2])
}

/// Extends a two-clique cover of `g - u` to `g`, or returns an odd antihole
/// of `g` through `u`.
///
/// `prior` uses the labels of `g` and must partition `V(g) \ {u}` into two
/// cliques.
pub fn extend_cover(g: &Graph, u: Vertex, prior: &TwoCliqueCover) -> Result<CoverOutcome> {
    g.check_vertex(u)?;
    let [old1, old2] = check_prior(g, u, prior)?;

    let bfs = ComplementBfs::run(g, u, usize::MAX);
    if let Some((x, y)) = bfs.same_layer_edge(g) {
        // complement(g - u) is bipartite, so every odd complement cycle runs
        // through u and the shallowest same-layer edge closes a chordless one
        let walk = bfs.closed_walk(x, y);
        let witness = OddAntiholeWitness::new(walk).normalized_from(Some(u));
        if verify_antihole(g, &witness)? {
            return Ok(CoverOutcome::Antihole(witness));
        }
        let reached = bfs.layers.iter().flat_map(|l| l.iter());
        let cycle = shortest_odd_complement_cycle(g, reached)
            .expect("same-layer edge implies an odd complement cycle");
        return Ok(CoverOutcome::Antihole(
            OddAntiholeWitness::new(cycle).normalized_from(Some(u)),
        ));
    }

    let mut side1 = BitSet::new(g.n());
    let mut side2 = BitSet::new(g.n());
    let mut reached = BitSet::new(g.n());
    for (d, layer) in bfs.layers.iter().enumerate() {
        reached.union_with(layer.words());
        if d % 2 == 0 {
            side1.union_with(layer.words());
        } else {
            side2.union_with(layer.words());
        }
    }
    let mut keep1 = old1;
    keep1.difference_with(reached.words());
    let mut keep2 = old2;
    keep2.difference_with(reached.words());
    side1.union_with(keep1.words());
    side2.union_with(keep2.words());
    Ok(CoverOutcome::Cover(TwoCliqueCover::new(
        VertexSet::from_bits(&side1),
        VertexSet::from_bits(&side2),
    )))
}

/// Builds `g` one vertex at a time in `order`, extending the cover at each
/// step. The first failing prefix yields the witness, in `g`'s labels.
pub fn incremental_two_clique_cover(g: &Graph, order: &[Vertex]) -> Result<CoverOutcome> {
    let n = g.n();
    let mut seen = vec![false; n];
    for &v in order {
        g.check_vertex(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Argument(format!("vertex {v} repeated in insertion order")));
        }
    }
    if order.len() != n {
        return Err(Error::Argument("insertion order must list every vertex".into()));
    }

    let mut members = BitSet::new(n);
    let mut cover = TwoCliqueCover::default();
    let mut local = vec![usize::MAX; n];
    for &u in order {
        members.insert(u);
        let (h, map) = g.induced_by_bits(&members);
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let to_local = |s: &VertexSet| -> VertexSet { s.iter().map(|&v| local[v]).collect() };
        let prior = TwoCliqueCover::new(to_local(&cover.side1), to_local(&cover.side2));
        match extend_cover(&h, local[u], &prior)? {
            CoverOutcome::Cover(c) => cover = c.map_through(&map),
            CoverOutcome::Antihole(w) => {
                return Ok(CoverOutcome::Antihole(w.map_through(&map).normalized_from(Some(u))))
            }
        }
    }
    Ok(CoverOutcome::Cover(cover))
}
