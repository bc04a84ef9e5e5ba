//! Forbidden induced subgraphs: pattern library, induced search, and the
//! sufficient condition for quasi-line graphs built from three patterns.

mod pattern;
mod search;

pub use pattern::{build_pattern, PatternId};
pub use search::{find_induced, verify_embedding, Embedding};

use serde::Serialize;

use crate::graph::Graph;

/// Patterns searched by [`corollary2_check`], in order.
pub const COROLLARY2_PATTERNS: [PatternId; 3] = [PatternId::Claw, PatternId::W6, PatternId::Corollary2];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corollary2Report {
    pub found: Vec<(PatternId, Embedding)>,
    /// True iff none of the three patterns occurs, which guarantees that the
    /// graph is quasi-line.
    pub implied_quasi_line: bool,
}

/// Searches for the claw, `W6` and `K1 + (2K1 + (K2 ∪ K1))`.
pub fn corollary2_check(g: &Graph) -> Corollary2Report {
    let found: Vec<(PatternId, Embedding)> = COROLLARY2_PATTERNS
        .iter()
        .filter_map(|id| {
            let pat = build_pattern(id).expect("built-in patterns are well-formed");
            find_induced(g, &pat).map(|e| (id.clone(), e))
        })
        .collect();
    Corollary2Report {
        implied_quasi_line: found.is_empty(),
        found,
    }
}
