//! Structure around a non-adjacent pair in a `{3K1, C5}`-free graph.

use crate::error::{Error, Precondition, Result};
use crate::graph::{BitSet, Graph, Vertex, VertexSet};

use super::types::Lemma1Partition;

/// An induced `3K1` or `C5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForbiddenWitness {
    ThreeK1(VertexSet),
    C5(VertexSet),
}

impl ForbiddenWitness {
    pub fn vertices(&self) -> &VertexSet {
        match self {
            ForbiddenWitness::ThreeK1(s) | ForbiddenWitness::C5(s) => s,
        }
    }
}

/// Looks for an induced `3K1`, then for an induced `C5`.
///
/// The `C5` scan visits every 5-subset, so it is `O(n^5)`.
pub fn check_3k1_c5_free(g: &Graph) -> Option<ForbiddenWitness> {
    let n = g.n();
    for u in 0..n {
        let nu = g.non_neighbor_set(u);
        for v in nu.iter().filter(|&v| v > u) {
            let mut common = nu.clone();
            common.intersect_with(g.non_neighbor_set(v).words());
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some(ForbiddenWitness::ThreeK1(VertexSet::from_iter([u, v, w])));
            }
        }
    }

    let mut idx = [0usize, 1, 2, 3, 4];
    if n < 5 {
        return None;
    }
    loop {
        // 2-regular on five vertices can only be C5
        let two_regular = idx.iter().all(|&a| {
            idx.iter().filter(|&&b| b != a && g.has_edge(a, b)).count() == 2
        });
        if two_regular {
            return Some(ForbiddenWitness::C5(idx.iter().copied().collect()));
        }
        let i = (0..5).rev().find(|&i| idx[i] < n - 5 + i)?;
        idx[i] += 1;
        for j in i + 1..5 {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Splits `V(g)` around the non-adjacent pair `(v, w)`:
///
/// * `B`: neighbours of `v` only; `C`: neighbours of `w` only;
/// * `A1`: common neighbours with a non-neighbour in `C`;
/// * `A2`: other common neighbours with a non-neighbour in `B`;
/// * `A3`: everything else.
///
/// In a `{3K1, C5}`-free graph `B`, `C`, `A1` and `A2` are cliques.
pub fn lemma1_partition(g: &Graph, v: Vertex, w: Vertex) -> Result<Lemma1Partition> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    let n = g.n();
    if g.edge_count() == n * n.saturating_sub(1) / 2 {
        return Err(Error::Precondition(Precondition::Complete));
    }
    if v == w {
        return Err(Error::Precondition(Precondition::SameVertex(v)));
    }
    if g.has_edge(v, w) {
        return Err(Error::Precondition(Precondition::Adjacent(v, w)));
    }
    match check_3k1_c5_free(g) {
        Some(ForbiddenWitness::ThreeK1(s)) => {
            return Err(Error::Precondition(Precondition::Contains3K1(s.as_slice().to_vec())))
        }
        Some(ForbiddenWitness::C5(s)) => {
            return Err(Error::Precondition(Precondition::ContainsC5(s.as_slice().to_vec())))
        }
        None => {}
    }

    let nv = g.row(v);
    let nw = g.row(w);
    let mut b = BitSet::from_slice(nv, n);
    b.difference_with(nw);
    let mut c = BitSet::from_slice(nw, n);
    c.difference_with(nv);
    let mut common = BitSet::from_slice(nv, n);
    common.intersect_with(nw);

    // "misses some member of S": S is not contained in N(a)
    let mut a1 = BitSet::new(n);
    let mut a2 = BitSet::new(n);
    for a in common.iter() {
        if c.has_outside(g.row(a)) {
            a1.insert(a);
        } else if b.has_outside(g.row(a)) {
            a2.insert(a);
        }
    }
    let mut a3 = BitSet::full(n);
    for s in [&b, &c, &a1, &a2] {
        a3.difference_with(s.words());
    }
    a3.remove(v);
    a3.remove(w);

    Ok(Lemma1Partition {
        v,
        w,
        b: VertexSet::from_bits(&b),
        c: VertexSet::from_bits(&c),
        a1: VertexSet::from_bits(&a1),
        a2: VertexSet::from_bits(&a2),
        a3: VertexSet::from_bits(&a3),
    })
}
