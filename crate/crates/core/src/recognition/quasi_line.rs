use rayon::prelude::*;

use crate::graph::{Graph, Vertex};

use super::cover::two_clique_cover;
use super::types::{CoverOutcome, QuasiLineCertificate, QuasiLineObstruction, QuasiLineOutcome};

fn neighborhood_outcome(g: &Graph, v: Vertex) -> CoverOutcome {
    let (h, map) = g.induced_by_bits(&g.neighbor_set(v));
    match two_clique_cover(&h) {
        CoverOutcome::Cover(c) => CoverOutcome::Cover(c.map_through(&map)),
        CoverOutcome::Antihole(w) => CoverOutcome::Antihole(w.map_through(&map).normalized()),
    }
}

fn assemble(outcomes: impl IntoIterator<Item = CoverOutcome>) -> QuasiLineOutcome {
    let mut per_vertex = Vec::new();
    for (apex, out) in outcomes.into_iter().enumerate() {
        match out {
            CoverOutcome::Cover(c) => per_vertex.push(c),
            CoverOutcome::Antihole(witness) => {
                return QuasiLineOutcome::Obstruction(QuasiLineObstruction { apex, witness })
            }
        }
    }
    QuasiLineOutcome::Certificate(QuasiLineCertificate { per_vertex })
}

/// Decides whether every neighbourhood of `g` is a union of two cliques.
///
/// On failure the obstruction names the smallest vertex whose
/// neighbourhood contains an odd antihole.
pub fn quasi_line(g: &Graph) -> QuasiLineOutcome {
    // lazily evaluated: stops at the first failing apex
    assemble((0..g.n()).map(|v| neighborhood_outcome(g, v)))
}

/// [`quasi_line`] with the neighbourhood checks spread over the rayon pool.
/// The result is identical to the sequential one.
pub fn quasi_line_parallel(g: &Graph) -> QuasiLineOutcome {
    let outcomes: Vec<CoverOutcome> = (0..g.n())
        .into_par_iter()
        .map(|v| neighborhood_outcome(g, v))
        .collect();
    assemble(outcomes)
}
