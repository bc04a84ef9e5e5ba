//! Certificate checkers. Each returns `Ok(false)` for a certificate that is
//! well-formed but wrong, and `Err(Range)` for labels outside the graph.

use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};

use super::types::{
    OddAntiholeWitness, QuasiLineCertificate, QuasiLineObstruction, TwoCliqueCover,
};

fn check_labels<'a, I>(g: &Graph, labels: I) -> Result<()>
where
    I: IntoIterator<Item = &'a Vertex>,
{
    labels.into_iter().try_for_each(|&v| g.check_vertex(v))
}

/// Whether `cover` partitions exactly `target` into two cliques of `g`.
fn covers_exactly(g: &Graph, cover: &TwoCliqueCover, target: &[Vertex]) -> bool {
    let (a, b) = (cover.side1.as_slice(), cover.side2.as_slice());
    let mut all: Vec<Vertex> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all == target && g.is_clique_list(a) && g.is_clique_list(b)
}

pub fn verify_two_clique_cover(g: &Graph, cover: &TwoCliqueCover) -> Result<bool> {
    check_labels(g, cover.side1.iter().chain(cover.side2.iter()))?;
    let everything: Vec<Vertex> = (0..g.n()).collect();
    Ok(covers_exactly(g, cover, &everything))
}

pub fn verify_antihole(g: &Graph, w: &OddAntiholeWitness) -> Result<bool> {
    let c = &w.cycle_order;
    check_labels(g, c)?;
    let k = c.len();
    if k < 3 || k.is_multiple_of(2) {
        return Ok(false);
    }
    if VertexSet::from_iter(c.iter().copied()).len() != k {
        return Ok(false);
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(c[i], c[j]) == consecutive {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn verify_quasi_line_certificate(g: &Graph, cert: &QuasiLineCertificate) -> Result<bool> {
    for cover in &cert.per_vertex {
        check_labels(g, cover.side1.iter().chain(cover.side2.iter()))?;
    }
    if cert.per_vertex.len() != g.n() {
        return Ok(false);
    }
    Ok(cert.per_vertex.iter().enumerate().all(|(v, cover)| {
        let nb: Vec<Vertex> = g.neighbors(v).collect();
        covers_exactly(g, cover, &nb)
    }))
}

pub fn verify_obstruction(g: &Graph, obs: &QuasiLineObstruction) -> Result<bool> {
    g.check_vertex(obs.apex)?;
    if !verify_antihole(g, &obs.witness)? {
        return Ok(false);
    }
    Ok(obs.witness.cycle_order.iter().all(|&x| g.has_edge(obs.apex, x)))
}
