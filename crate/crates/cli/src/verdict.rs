//! The JSON verdict emitted by every `check`, `find` and `lemma1` run, and
//! its independent re-verification.
//!
//! ```json
//! {"property": "two-cliques", "holds": true,
//!  "certificate": {"side1": [0, 1], "side2": [2, 3]}, "input_echo": "Ch"}
//! ```
//!
//! | property           | holds = true                      | holds = false                         |
//! |--------------------|-----------------------------------|---------------------------------------|
//! | `two-cliques`      | `{side1, side2}`                  | `{witness: [..]}`                     |
//! | `quasi-line`       | `{per_vertex: [{side1, side2}..]}`| `{apex, witness: [..]}`               |
//! | `induced-pattern`  | `{pattern, embedding: [..]}`      | `{pattern, embedding: null}`          |
//! | `lemma1-partition` | `{v, w, b, c, a1, a2, a3}`        | `{v, w, reason, vertices: [..]}`      |

use serde::{Deserialize, Serialize};
use serde_json::Value;

use quasiline_core::forbidden::{build_pattern, find_induced, verify_embedding, Embedding, PatternId};
use quasiline_core::graph::{graph6, Graph, Vertex};
use quasiline_core::recognition::{
    lemma1_partition, verify_antihole, verify_obstruction, verify_quasi_line_certificate,
    verify_two_clique_cover, Lemma1Partition, OddAntiholeWitness, QuasiLineCertificate,
    QuasiLineObstruction, TwoCliqueCover,
};
use quasiline_core::{Error, Precondition};

pub const TWO_CLIQUES: &str = "two-cliques";
pub const QUASI_LINE: &str = "quasi-line";
pub const INDUCED_PATTERN: &str = "induced-pattern";
pub const LEMMA1: &str = "lemma1-partition";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: String,
    pub holds: bool,
    pub certificate: Value,
    pub input_echo: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntiholeCertificate {
    pub witness: OddAntiholeWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCertificate {
    pub pattern: PatternId,
    pub embedding: Option<Embedding>,
}

/// Why `lemma1_partition` does not apply, with checkable evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Refusal {
    pub v: Vertex,
    pub w: Vertex,
    pub reason: RefusalReason,
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RefusalReason {
    Complete,
    Adjacent,
    #[serde(rename = "contains-3k1")]
    Contains3K1,
    #[serde(rename = "contains-c5")]
    ContainsC5,
}

impl Lemma1Refusal {
    /// Maps the precondition failures that describe the graph; anything
    /// else is a usage error and yields `None`.
    pub fn from_error(v: Vertex, w: Vertex, e: &Error) -> Option<Self> {
        let Error::Precondition(p) = e else { return None };
        let (reason, vertices) = match p {
            Precondition::Complete => (RefusalReason::Complete, vec![]),
            Precondition::Adjacent(a, b) => (RefusalReason::Adjacent, vec![*a, *b]),
            Precondition::Contains3K1(s) => (RefusalReason::Contains3K1, s.clone()),
            Precondition::ContainsC5(s) => (RefusalReason::ContainsC5, s.clone()),
            _ => return None,
        };
        Some(Self {
            v,
            w,
            reason,
            vertices,
        })
    }

    fn holds_in(&self, g: &Graph) -> bool {
        let s = &self.vertices;
        if s.iter().any(|&x| x >= g.n()) {
            return false;
        }
        let distinct = {
            let mut t = s.clone();
            t.sort_unstable();
            t.dedup();
            t.len() == s.len()
        };
        let n = g.n();
        match self.reason {
            RefusalReason::Complete => g.edge_count() == n * n.saturating_sub(1) / 2,
            RefusalReason::Adjacent => {
                s.len() == 2 && s[0] == self.v && s[1] == self.w && g.has_edge(s[0], s[1])
            }
            RefusalReason::Contains3K1 => {
                s.len() == 3 && distinct && s.iter().all(|&a| s.iter().all(|&b| !g.has_edge(a, b)))
            }
            RefusalReason::ContainsC5 => {
                s.len() == 5
                    && distinct
                    && s.iter()
                        .all(|&a| s.iter().filter(|&&b| g.has_edge(a, b)).count() == 2)
            }
        }
    }
}

impl Verdict {
    pub fn new<C: Serialize>(property: &str, holds: bool, certificate: &C, g: &Graph) -> Self {
        Self {
            property: property.to_string(),
            holds,
            certificate: serde_json::to_value(certificate).expect("certificates serialize"),
            input_echo: graph6::encode(g),
        }
    }

    /// The graph recorded in `input_echo`.
    pub fn echoed_graph(&self) -> Result<Graph, String> {
        graph6::parse(self.input_echo.as_bytes()).map_err(|e| format!("input_echo: {e}"))
    }

    /// Re-checks the certificate against `g` without trusting whoever
    /// produced it. `Err` means the verdict is malformed.
    pub fn verify(&self, g: &Graph) -> Result<bool, String> {
        if graph6::encode(g) != self.input_echo {
            return Ok(false);
        }
        let cert = self.certificate.clone();
        let parse_err = |e: serde_json::Error| format!("certificate: {e}");
        let range = |e: Error| format!("certificate: {e}");
        match (self.property.as_str(), self.holds) {
            (TWO_CLIQUES, true) => {
                let c: TwoCliqueCover = serde_json::from_value(cert).map_err(parse_err)?;
                verify_two_clique_cover(g, &c).map_err(range)
            }
            (TWO_CLIQUES, false) => {
                let c: AntiholeCertificate = serde_json::from_value(cert).map_err(parse_err)?;
                verify_antihole(g, &c.witness).map_err(range)
            }
            (QUASI_LINE, true) => {
                let c: QuasiLineCertificate = serde_json::from_value(cert).map_err(parse_err)?;
                verify_quasi_line_certificate(g, &c).map_err(range)
            }
            (QUASI_LINE, false) => {
                let c: QuasiLineObstruction = serde_json::from_value(cert).map_err(parse_err)?;
                verify_obstruction(g, &c).map_err(range)
            }
            (INDUCED_PATTERN, holds) => {
                let c: PatternCertificate = serde_json::from_value(cert).map_err(parse_err)?;
                let pattern = build_pattern(&c.pattern).map_err(range)?;
                Ok(match (&c.embedding, holds) {
                    (Some(e), true) => verify_embedding(g, &pattern, e),
                    // absence has no short certificate; search again
                    (None, false) => find_induced(g, &pattern).is_none(),
                    _ => false,
                })
            }
            (LEMMA1, true) => {
                let p: Lemma1Partition = serde_json::from_value(cert).map_err(parse_err)?;
                Ok(p.check(g).is_ok() && lemma1_partition(g, p.v, p.w).as_ref() == Ok(&p))
            }
            (LEMMA1, false) => {
                let r: Lemma1Refusal = serde_json::from_value(cert).map_err(parse_err)?;
                Ok(r.holds_in(g))
            }
            (other, _) => Err(format!("unknown property {other:?}")),
        }
    }
}
