use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex, VertexSet};

/// A partition of `V(G)` into two cliques. Either side may be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoCliqueCover {
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl TwoCliqueCover {
    pub fn new(side1: VertexSet, side2: VertexSet) -> Self {
        Self { side1, side2 }
    }

    /// Relabels both sides through `map` (local label -> host label).
    pub fn map_through(&self, map: &[Vertex]) -> Self {
        Self {
            side1: self.side1.map_through(map),
            side2: self.side2.map_through(map),
        }
    }
}

/// Vertices `v_0, .., v_{2k}` whose induced subgraph is the complement of
/// the cycle `v_0 v_1 .. v_{2k} v_0`: cyclically consecutive vertices are
/// non-adjacent, every other pair is adjacent. Length 3 is `3K1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OddAntiholeWitness {
    pub cycle_order: Vec<Vertex>,
}

impl OddAntiholeWitness {
    pub fn new(cycle_order: Vec<Vertex>) -> Self {
        Self { cycle_order }
    }

    pub fn len(&self) -> usize {
        self.cycle_order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle_order.is_empty()
    }

    pub fn map_through(&self, map: &[Vertex]) -> Self {
        Self {
            cycle_order: self.cycle_order.iter().map(|&v| map[v]).collect(),
        }
    }

    /// Rotates and reflects the cycle so it starts at `start` and continues
    /// towards the smaller of `start`'s two cycle neighbours. If `start` is
    /// not on the cycle the minimum vertex is used instead.
    pub fn normalized_from(mut self, start: Option<Vertex>) -> Self {
        let c = &mut self.cycle_order;
        if c.is_empty() {
            return self;
        }
        let pos = start
            .and_then(|s| c.iter().position(|&v| v == s))
            .unwrap_or_else(|| (0..c.len()).min_by_key(|&i| c[i]).unwrap());
        c.rotate_left(pos);
        if c.len() > 2 && c[c.len() - 1] < c[1] {
            c[1..].reverse();
        }
        self
    }

    pub fn normalized(self) -> Self {
        self.normalized_from(None)
    }
}

/// For every vertex `v`, a two-clique cover of `G[N(v)]` in host labels.
/// Entry `i` belongs to vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiLineCertificate {
    pub per_vertex: Vec<TwoCliqueCover>,
}

/// A vertex whose neighbourhood contains an odd antihole, so that
/// `{apex} ∪ witness` induces `K1 + C_{2k+1}^C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiLineObstruction {
    pub apex: Vertex,
    pub witness: OddAntiholeWitness,
}

/// Either a cover or an antihole, never both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverOutcome {
    Cover(TwoCliqueCover),
    Antihole(OddAntiholeWitness),
}

impl CoverOutcome {
    pub fn is_cover(&self) -> bool {
        matches!(self, CoverOutcome::Cover(_))
    }

    pub fn cover(&self) -> Option<&TwoCliqueCover> {
        match self {
            CoverOutcome::Cover(c) => Some(c),
            CoverOutcome::Antihole(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&OddAntiholeWitness> {
        match self {
            CoverOutcome::Antihole(w) => Some(w),
            CoverOutcome::Cover(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuasiLineOutcome {
    Certificate(QuasiLineCertificate),
    Obstruction(QuasiLineObstruction),
}

impl QuasiLineOutcome {
    pub fn is_quasi_line(&self) -> bool {
        matches!(self, QuasiLineOutcome::Certificate(_))
    }
}

/// The sets `{v, w}, B, C, A1, A2, A3` built around a non-adjacent pair in a
/// `{3K1, C5}`-free graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Partition {
    pub v: Vertex,
    pub w: Vertex,
    /// Neighbours of `v` that are not neighbours of `w`.
    pub b: VertexSet,
    /// Neighbours of `w` that are not neighbours of `v`.
    pub c: VertexSet,
    /// Common neighbours with a non-neighbour in `c`.
    pub a1: VertexSet,
    /// Remaining common neighbours with a non-neighbour in `b`.
    pub a2: VertexSet,
    pub a3: VertexSet,
}

impl Lemma1Partition {
    /// Checks the defining formulas and the completeness of `B`, `C`, `A1`,
    /// `A2` against `g`. Returns the first violated condition.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        let all = [&self.b, &self.c, &self.a1, &self.a2, &self.a3];
        for s in all {
            if let Some(&x) = s.iter().find(|&&x| x >= n) {
                return Err(format!("vertex {x} out of range"));
            }
        }
        if self.v >= n || self.w >= n || self.v == self.w {
            return Err("v and w must be distinct vertices".into());
        }
        let mut seen = vec![false; n];
        for x in [self.v, self.w].into_iter().chain(all.iter().flat_map(|s| s.iter().copied())) {
            if std::mem::replace(&mut seen[x], true) {
                return Err(format!("vertex {x} appears twice"));
            }
        }
        if let Some(x) = seen.iter().position(|&s| !s) {
            return Err(format!("vertex {x} is not covered"));
        }

        let (v, w) = (self.v, self.w);
        let expect_b: VertexSet = (0..n).filter(|&x| g.has_edge(x, v) && !g.has_edge(x, w)).collect();
        let expect_c: VertexSet = (0..n).filter(|&x| g.has_edge(x, w) && !g.has_edge(x, v)).collect();
        let common = |x: Vertex| g.has_edge(x, v) && g.has_edge(x, w);
        let expect_a1: VertexSet = (0..n)
            .filter(|&x| common(x) && expect_c.iter().any(|&c| !g.has_edge(x, c)))
            .collect();
        let expect_a2: VertexSet = (0..n)
            .filter(|&x| {
                common(x) && !expect_a1.contains(x) && expect_b.iter().any(|&b| !g.has_edge(x, b))
            })
            .collect();
        for (name, got, want) in [
            ("B", &self.b, &expect_b),
            ("C", &self.c, &expect_c),
            ("A1", &self.a1, &expect_a1),
            ("A2", &self.a2, &expect_a2),
        ] {
            if got != want {
                return Err(format!("{name} is {got:?}, expected {want:?}"));
            }
            if !g.is_clique_list(got.as_slice()) {
                return Err(format!("{name} is not a clique"));
            }
        }
        Ok(())
    }
}
