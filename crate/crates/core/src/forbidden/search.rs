//! Induced subgraph search by backtracking over bit rows.

use serde::{Deserialize, Serialize};

use crate::graph::{BitSet, Graph, Vertex};

/// `mapping[p]` is the host vertex assigned to pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding {
    pub mapping: Vec<Vertex>,
}

/// Whether `emb` maps `pattern` injectively into `host` preserving both
/// edges and non-edges.
pub fn verify_embedding(host: &Graph, pattern: &Graph, emb: &Embedding) -> bool {
    let m = &emb.mapping;
    if m.len() != pattern.n() || m.iter().any(|&h| h >= host.n()) {
        return false;
    }
    (0..m.len()).all(|i| {
        (i + 1..m.len()).all(|j| m[i] != m[j] && host.has_edge(m[i], m[j]) == pattern.has_edge(i, j))
    })
}

/// Pattern vertices in search order: start from a maximum-degree vertex,
/// then repeatedly take the vertex with the most already-placed neighbours
/// (ties: higher degree, then lower label).
fn search_order(pattern: &Graph) -> Vec<Vertex> {
    let k = pattern.n();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&p| !placed[p])
            .max_by(|&a, &b| {
                (links[a], pattern.degree(a))
                    .cmp(&(links[b], pattern.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for q in pattern.neighbors(next) {
            links[q] += 1;
        }
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    order: Vec<Vertex>,
    /// For depth `i`: `(j, adjacent)` for every `j < i`.
    constraints: Vec<Vec<(usize, bool)>>,
    /// Host vertices passing the degree filter, per depth.
    admissible: Vec<BitSet>,
    image: Vec<Vertex>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used: &mut BitSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let mut cand = self.admissible[depth].clone();
        cand.difference_with(used.words());
        for &(j, adjacent) in &self.constraints[depth] {
            let row = self.host.row(self.image[j]);
            if adjacent {
                cand.intersect_with(row);
            } else {
                cand.difference_with(row);
            }
        }
        for h in cand.iter() {
            self.image[depth] = h;
            used.insert(h);
            if self.run(depth + 1, used) {
                return true;
            }
            used.remove(h);
        }
        false
    }
}

/// Finds an induced copy of `pattern` in `host`.
///
/// Candidates for each pattern vertex are narrowed by degree and
/// co-degree, then by intersecting host rows (or their complements) of
/// the vertices already placed. The returned embedding is the
/// lexicographically least one with respect to the search order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let (n, k) = (host.n(), pattern.n());
    if k > n {
        return None;
    }
    let order = search_order(pattern);
    let mut pos = vec![0; k];
    for (i, &p) in order.iter().enumerate() {
        pos[p] = i;
    }
    let constraints = order
        .iter()
        .enumerate()
        .map(|(i, &p)| (0..i).map(|j| (j, pattern.has_edge(p, order[j]))).collect())
        .collect();
    let host_deg: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    let admissible = order
        .iter()
        .map(|&p| {
            let d = pattern.degree(p);
            let co = k - 1 - d;
            let mut s = BitSet::new(n);
            s.extend((0..n).filter(|&h| host_deg[h] >= d && n - 1 - host_deg[h] >= co));
            s
        })
        .collect();
    let mut search = Search {
        host,
        order,
        constraints,
        admissible,
        image: vec![0; k],
    };
    let mut used = BitSet::new(n);
    if !search.run(0, &mut used) {
        return None;
    }
    Some(Embedding {
        mapping: (0..k).map(|p| search.image[pos[p]]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forbidden::pattern::{build_pattern, PatternId};
    use crate::graph::named::{cycle, star};

    #[test]
    fn claw_in_k14() {
        let claw = build_pattern(&PatternId::Claw).unwrap();
        let emb = find_induced(&star(4), &claw).unwrap();
        assert!(verify_embedding(&star(4), &claw, &emb));
        assert_eq!(emb.mapping, vec![0, 1, 2, 3]);
    }

    #[test]
    fn no_c5_in_c7() {
        assert_eq!(find_induced(&cycle(7), &cycle(5)), None);
    }

    #[test]
    fn two_k1_plus_k2_k1_in_c7_complement() {
        let host = build_pattern(&PatternId::Antihole(7)).unwrap();
        let pat = build_pattern(&PatternId::two_k1_plus_k2_k1()).unwrap();
        let emb = find_induced(&host, &pat).unwrap();
        assert!(verify_embedding(&host, &pat, &emb));
    }

    #[test]
    fn trivial_patterns() {
        assert_eq!(
            find_induced(&Graph::empty(2), &Graph::empty(0)),
            Some(Embedding { mapping: vec![] })
        );
        assert_eq!(find_induced(&Graph::empty(2), &Graph::empty(3)), None);
        assert_eq!(find_induced(&Graph::complete(4), &Graph::empty(2)), None);
    }

    #[test]
    fn search_order_is_connected_first() {
        // path 0-1-2-3: inner vertices first, then the ends
        let order = search_order(&crate::graph::named::path(4));
        assert_eq!(order, vec![1, 2, 0, 3]);
    }

    #[test]
    fn verify_rejects_bad_embeddings() {
        let claw = build_pattern(&PatternId::Claw).unwrap();
        let host = star(4);
        for m in [vec![0, 1, 2], vec![0, 1, 1, 2], vec![1, 0, 2, 3], vec![0, 1, 2, 9]] {
            assert!(!verify_embedding(&host, &claw, &Embedding { mapping: m }));
        }
    }
}
