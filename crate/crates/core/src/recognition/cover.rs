//! Two-clique covers via 2-colouring the complement.
//!
//! `G` is a union of two cliques exactly when its complement is bipartite.
//! When it is not, a shortest odd cycle of the complement is chordless, so
//! its vertices induce an odd antihole in `G`.

use crate::graph::{BitSet, Graph, Vertex, VertexSet};

use super::types::{CoverOutcome, OddAntiholeWitness, TwoCliqueCover};

const UNSEEN: u8 = u8::MAX;

/// `dst := a \ row` without allocating.
#[inline]
pub(crate) fn and_not_into(dst: &mut [u64], a: &[u64], row: &[u64]) {
    for ((d, x), r) in dst.iter_mut().zip(a).zip(row) {
        *d = x & !r;
    }
}

/// Decides whether `g` is a union of two cliques.
///
/// Complement components are coloured in increasing order of their minimum
/// vertex, which always lands on `side1`. If some colour class is not a
/// clique, the shortest odd cycle of the complement is returned as the
/// witness, listed from its minimum vertex.
pub fn two_clique_cover(g: &Graph) -> CoverOutcome {
    let n = g.n();
    let mut color = vec![UNSEEN; n];
    let mut component = vec![usize::MAX; n];
    let mut sides = [BitSet::new(n), BitSet::new(n)];
    let mut unvisited = BitSet::full(n);
    let mut fresh = vec![0u64; g.stride()];
    let mut queue: Vec<Vertex> = Vec::with_capacity(n);
    let mut roots = Vec::new();

    while let Some(root) = unvisited.first() {
        let id = roots.len();
        roots.push(root);
        unvisited.remove(root);
        color[root] = 0;
        component[root] = id;
        sides[0].insert(root);
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            and_not_into(&mut fresh, unvisited.words(), g.row(v));
            let c = 1 - color[v];
            for x in crate::graph::Ones::new(&fresh) {
                color[x] = c;
                component[x] = id;
                sides[c as usize].insert(x);
                unvisited.remove(x);
                queue.push(x);
            }
        }
    }

    // A same-colour complement edge stays inside one component.
    let mut conflicted = vec![false; roots.len()];
    let mut scratch = vec![0u64; g.stride()];
    for v in 0..n {
        and_not_into(&mut scratch, sides[color[v] as usize].words(), g.row(v));
        scratch[v / 64] &= !(1 << (v % 64));
        if scratch.iter().any(|&w| w != 0) {
            conflicted[component[v]] = true;
        }
    }

    if !conflicted.contains(&true) {
        let [s1, s2] = sides;
        return CoverOutcome::Cover(TwoCliqueCover::new(
            VertexSet::from_bits(&s1),
            VertexSet::from_bits(&s2),
        ));
    }

    let sources = (0..n).filter(|&v| conflicted[component[v]]);
    let cycle = shortest_odd_complement_cycle(g, sources)
        .expect("a same-colour complement edge implies an odd complement cycle");
    CoverOutcome::Antihole(OddAntiholeWitness::new(cycle).normalized())
}

/// Breadth-first layers of the complement from `source`.
pub(crate) struct ComplementBfs {
    pub dist: Vec<usize>,
    pub parent: Vec<Vertex>,
    pub layers: Vec<BitSet>,
}

impl ComplementBfs {
    /// Explores until layer `max_depth` (inclusive) or exhaustion.
    pub fn run(g: &Graph, source: Vertex, max_depth: usize) -> Self {
        let n = g.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut unvisited = BitSet::full(n);
        unvisited.remove(source);
        dist[source] = 0;
        let mut first = BitSet::new(n);
        first.insert(source);
        let mut layers = vec![first];
        let mut fresh = vec![0u64; g.stride()];
        while layers.len() <= max_depth {
            let d = layers.len();
            let mut next = BitSet::new(n);
            for v in layers[d - 1].iter() {
                and_not_into(&mut fresh, unvisited.words(), g.row(v));
                for x in crate::graph::Ones::new(&fresh) {
                    dist[x] = d;
                    parent[x] = v;
                    unvisited.remove(x);
                    next.insert(x);
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        Self {
            dist,
            parent,
            layers,
        }
    }

    /// The first complement edge joining two vertices of one layer, scanning
    /// layers outward and vertices in increasing order.
    pub fn same_layer_edge(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        let mut scratch = vec![0u64; g.stride()];
        for layer in &self.layers {
            for x in layer.iter() {
                and_not_into(&mut scratch, layer.words(), g.row(x));
                scratch[x / 64] &= !(1 << (x % 64));
                if let Some(y) = crate::graph::Ones::new(&scratch).next() {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Closed walk `source -> x`, `x - y`, `y -> source` through tree paths.
    pub fn closed_walk(&self, x: Vertex, y: Vertex) -> Vec<Vertex> {
        let path = |mut v: Vertex| {
            let mut p = vec![v];
            while self.dist[v] != 0 {
                v = self.parent[v];
                p.push(v);
            }
            p.reverse();
            p
        };
        let mut walk = path(x);
        let back = path(y);
        walk.extend(back[1..].iter().rev());
        walk
    }
}

/// Shortest odd cycle of `complement(g)` through any of `sources`, found by
/// one breadth-first search per source.
///
/// The minimum over sources of `2d + 1`, where `d` is the depth of the
/// shallowest same-layer complement edge, is the odd girth. At that minimum
/// the two tree paths can only meet at the source (a later meeting point
/// would close a shorter odd cycle), so the walk is a simple cycle, and a
/// shortest odd cycle has no chords.
pub fn shortest_odd_complement_cycle<I>(g: &Graph, sources: I) -> Option<Vec<Vertex>>
where
    I: IntoIterator<Item = Vertex>,
{
    let mut best: Option<Vec<Vertex>> = None;
    for s in sources {
        let limit = match &best {
            Some(c) if c.len() == 3 => break,
            // only strictly shorter cycles are of interest: 2d + 1 < len
            Some(c) => (c.len() - 1) / 2 - 1,
            None => usize::MAX,
        };
        let bfs = ComplementBfs::run(g, s, limit);
        if let Some((x, y)) = bfs.same_layer_edge(g) {
            let walk = bfs.closed_walk(x, y);
            if best.as_ref().is_none_or(|b| walk.len() < b.len()) {
                best = Some(walk);
            }
        }
    }
    best
}
