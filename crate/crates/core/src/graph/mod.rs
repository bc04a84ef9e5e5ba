//! Simple undirected graphs on vertices `0..n`, stored as bit rows.

mod bits;
pub mod dot;
pub mod edgelist;
pub mod graph6;

pub use bits::{BitSet, Ones};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use bits::words_for;

pub type Vertex = usize;

/// A finite simple undirected graph on `0..n`.
///
/// Row `v` holds the neighbourhood of `v` as `ceil(n / 64)` words. Rows are
/// symmetric and the diagonal is clear. Graphs are immutable once built; use
/// [`GraphBuilder`] or [`Graph::from_edges`] to construct one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: Vertex) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: Vertex) -> BitSet {
        BitSet::from_slice(self.row(v), self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::Range { vertex: v, n: self.n })
        }
    }

    /// Whether every pair of distinct members of `set` is adjacent.
    pub fn is_clique(&self, set: &BitSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(self.row(v))
        })
    }

    pub fn is_clique_list(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            let row = &mut g.rows[v * self.stride..(v + 1) * self.stride];
            for w in row.iter_mut() {
                *w = !*w;
            }
            let rem = self.n % 64;
            if rem != 0 {
                row[self.stride - 1] &= (1u64 << rem) - 1;
            }
            row[v / 64] &= !(1u64 << (v % 64));
        }
        g
    }

    /// Non-neighbours of `v` other than `v` itself.
    pub fn non_neighbor_set(&self, v: Vertex) -> BitSet {
        let mut s = BitSet::full(self.n);
        s.difference_with(self.row(v));
        s.remove(v);
        s
    }

    pub fn neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.neighbors(v).collect()))
    }

    /// The subgraph induced by `set`, relabelled order-preservingly.
    ///
    /// The returned map sends new label `i` to the `i`-th smallest member of
    /// `set`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        for &v in set.iter() {
            self.check_vertex(v)?;
        }
        let map = set.as_slice().to_vec();
        let mut b = GraphBuilder::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.set(i, j);
                }
            }
        }
        Ok((b.build(), map))
    }

    pub fn induced_by_bits(&self, set: &BitSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = set.iter().collect();
        let mut b = GraphBuilder::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            let row = self.row(u);
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if row[v / 64] >> (v % 64) & 1 == 1 {
                    b.set(i, j);
                }
            }
        }
        (b.build(), map)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Graph join: every vertex of `self` is made adjacent to every vertex of
    /// `other`, whose labels are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let a = self.n;
        let mut b = GraphBuilder::from_graph(self.disjoint_union(other));
        for u in 0..a {
            for v in a..b.n() {
                b.set(u, v);
            }
        }
        b.build()
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut b = GraphBuilder::new(self.n + other.n);
        for (u, v) in self.edges() {
            b.set(u, v);
        }
        for (u, v) in other.edges() {
            b.set(u + off, v + off);
        }
        b.build()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        Self { g: Graph::empty(n) }
    }

    pub fn from_graph(g: Graph) -> Self {
        Self { g }
    }

    pub fn n(&self) -> usize {
        self.g.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        self.g.check_vertex(u)?;
        self.g.check_vertex(v)?;
        if u == v {
            return Err(Error::Argument(format!("self-loop on vertex {u}")));
        }
        self.set(u, v);
        Ok(self)
    }

    pub(crate) fn set(&mut self, u: Vertex, v: Vertex) {
        let s = self.g.stride;
        self.g.rows[u * s + v / 64] |= 1 << (v % 64);
        self.g.rows[v * s + u / 64] |= 1 << (u % 64);
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

/// A sorted, duplicate-free list of vertex labels.
///
/// A `VertexSet` is not tied to a host graph; range is checked by the
/// operations that consume it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Fails if `members` contains a duplicate.
    pub fn try_from_vec(mut members: Vec<Vertex>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Argument(format!("duplicate vertex {}", w[0])));
        }
        Ok(Self(members))
    }

    pub fn from_bits(bits: &BitSet) -> Self {
        Self(bits.iter().collect())
    }

    pub fn to_bits(&self, n: usize) -> Result<BitSet> {
        let mut b = BitSet::new(n);
        for &v in &self.0 {
            if v >= n {
                return Err(Error::Range { vertex: v, n });
            }
            b.insert(v);
        }
        Ok(b)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    /// Relabels through `map` (new label -> old label).
    pub fn map_through(&self, map: &[Vertex]) -> VertexSet {
        let mut v: Vec<Vertex> = self.0.iter().map(|&i| map[i]).collect();
        v.sort_unstable();
        VertexSet(v)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl TryFrom<Vec<Vertex>> for VertexSet {
    type Error = Error;
    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Self::try_from_vec(v)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Standard small graphs used throughout the tests and pattern library.
pub mod named {
    use super::{Graph, GraphBuilder};

    pub fn path(k: usize) -> Graph {
        let mut b = GraphBuilder::new(k);
        for i in 1..k {
            b.set(i - 1, i);
        }
        b.build()
    }

    /// `C_k` on `0..k` with edges `i ~ i+1 mod k`. Requires `k >= 3`.
    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        let mut b = GraphBuilder::from_graph(path(k));
        b.set(k - 1, 0);
        b.build()
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        let mut b = GraphBuilder::new(k + 1);
        for i in 1..=k {
            b.set(0, i);
        }
        b.build()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        let c5c = cycle(5).complement();
        let expected = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c5c, expected);
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);
    }

    #[test]
    fn complement_across_word_boundary() {
        let g = Graph::empty(65);
        let c = g.complement();
        assert_eq!(c.edge_count(), 65 * 64 / 2);
        assert!(!c.has_edge(64, 64));
    }

    #[test]
    fn induced_examples() {
        let (g, map) = cycle(5).induced_subgraph(&set(&[0, 1, 2])).unwrap();
        assert_eq!(g, path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (g, _) = Graph::complete(5).induced_subgraph(&set(&[1, 3])).unwrap();
        assert_eq!(g, Graph::complete(2));
        // C7^C on {0,1,3,4,5}: 0,1 independent; 3-5 edge; 4 adjacent to neither 3 nor 5.
        let (g, map) = cycle(7).complement().induced_subgraph(&set(&[0, 1, 3, 5, 4])).unwrap();
        assert_eq!(map, vec![0, 1, 3, 4, 5]);
        let expected = Graph::from_edges(
            5,
            [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)],
        )
        .unwrap();
        assert_eq!(g, expected);
        assert!(matches!(
            path(3).induced_subgraph(&set(&[0, 3])),
            Err(Error::Range { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(Graph::complete(4).neighborhood(0).unwrap(), set(&[1, 2, 3]));
        assert!(Graph::empty(3).neighborhood(2).unwrap().is_empty());
        assert_eq!(cycle(5).neighborhood(0).unwrap(), set(&[1, 4]));
        assert!(cycle(5).neighborhood(5).is_err());
    }

    #[test]
    fn builder_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 3)]).is_err());
        assert_eq!(Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn vertex_set_rejects_duplicates() {
        assert!(VertexSet::try_from_vec(vec![2, 1, 2]).is_err());
        let s: VertexSet = serde_json_like(&[3, 1]);
        assert_eq!(s.as_slice(), &[1, 3]);
    }

    fn serde_json_like(v: &[usize]) -> VertexSet {
        VertexSet::try_from(v.to_vec()).unwrap()
    }

    #[test]
    fn join_and_union() {
        let claw = Graph::empty(1).join(&Graph::empty(3));
        assert_eq!(claw, star(3));
        let u = Graph::complete(2).disjoint_union(&Graph::complete(1));
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
