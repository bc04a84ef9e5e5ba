//! Named pattern graphs and their textual grammar:
//!
//! ```text
//! E := claw | w6 | cor2 | antihole(K) | cycle(K) | path(K)
//!    | complete(K) | empty(K) | join(E,E) | union(E,E)
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{named, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum PatternId {
    /// `K_{1,3}`, centre 0.
    Claw,
    /// The six-vertex wheel `K1 + C5`, hub 0.
    W6,
    /// `K1 + (2K1 + (K2 ∪ K1))`.
    Corollary2,
    /// Complement of the odd cycle `C_k`.
    Antihole(usize),
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Empty(usize),
    /// `+`: all edges between the two parts.
    Join(Box<PatternId>, Box<PatternId>),
    /// `∪`: no edges between the two parts.
    Union(Box<PatternId>, Box<PatternId>),
}

impl PatternId {
    pub fn join(a: PatternId, b: PatternId) -> Self {
        PatternId::Join(Box::new(a), Box::new(b))
    }

    pub fn union(a: PatternId, b: PatternId) -> Self {
        PatternId::Union(Box::new(a), Box::new(b))
    }

    /// The expansion of the named composite patterns.
    pub fn expanded(&self) -> PatternId {
        use PatternId::*;
        match self {
            Claw => Self::join(Empty(1), Empty(3)),
            W6 => Self::join(Empty(1), Cycle(5)),
            Corollary2 => Self::join(Empty(1), Self::two_k1_plus_k2_k1()),
            other => other.clone(),
        }
    }

    /// `2K1 + (K2 ∪ K1)`, which sits inside every `C_{2n+1}^C` with `n > 2`.
    pub fn two_k1_plus_k2_k1() -> PatternId {
        Self::join(
            PatternId::Empty(2),
            Self::union(PatternId::Complete(2), PatternId::Complete(1)),
        )
    }
}

fn arg(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Argument(msg()))
    }
}

/// Builds the pattern graph. Joins and unions place the left operand first.
pub fn build_pattern(id: &PatternId) -> Result<Graph> {
    use PatternId::*;
    Ok(match id {
        Claw | W6 | Corollary2 => build_pattern(&id.expanded())?,
        Antihole(k) => {
            arg(*k >= 3 && k % 2 == 1, || format!("antihole({k}) needs odd k >= 3"))?;
            named::cycle(*k).complement()
        }
        Cycle(k) => {
            arg(*k >= 3, || format!("cycle({k}) needs k >= 3"))?;
            named::cycle(*k)
        }
        Path(k) => {
            arg(*k >= 1, || format!("path({k}) needs k >= 1"))?;
            named::path(*k)
        }
        Complete(k) => {
            arg(*k >= 1, || format!("complete({k}) needs k >= 1"))?;
            Graph::complete(*k)
        }
        Empty(k) => {
            arg(*k >= 1, || format!("empty({k}) needs k >= 1"))?;
            Graph::empty(*k)
        }
        Join(a, b) => build_pattern(a)?.join(&build_pattern(b)?),
        Union(a, b) => build_pattern(a)?.disjoint_union(&build_pattern(b)?),
    })
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternId::*;
        match self {
            Claw => f.write_str("claw"),
            W6 => f.write_str("w6"),
            Corollary2 => f.write_str("cor2"),
            Antihole(k) => write!(f, "antihole({k})"),
            Cycle(k) => write!(f, "cycle({k})"),
            Path(k) => write!(f, "path({k})"),
            Complete(k) => write!(f, "complete({k})"),
            Empty(k) => write!(f, "empty({k})"),
            Join(a, b) => write!(f, "join({a},{b})"),
            Union(a, b) => write!(f, "union({a},{b})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Argument(format!("pattern {:?}, column {}: {msg}", self.src, self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn number(&mut self) -> Result<usize> {
        self.expect('(')?;
        let w = self.word();
        let k = w.parse().map_err(|_| self.err(&format!("expected a number, found {w:?}")))?;
        self.expect(')')?;
        Ok(k)
    }

    fn pair(&mut self) -> Result<(PatternId, PatternId)> {
        self.expect('(')?;
        let a = self.expr()?;
        self.expect(',')?;
        let b = self.expr()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn expr(&mut self) -> Result<PatternId> {
        let start = self.pos;
        Ok(match self.word() {
            "claw" => PatternId::Claw,
            "w6" => PatternId::W6,
            "cor2" => PatternId::Corollary2,
            "antihole" => PatternId::Antihole(self.number()?),
            "cycle" => PatternId::Cycle(self.number()?),
            "path" => PatternId::Path(self.number()?),
            "complete" => PatternId::Complete(self.number()?),
            "empty" => PatternId::Empty(self.number()?),
            "join" => {
                let (a, b) = self.pair()?;
                PatternId::join(a, b)
            }
            "union" => {
                let (a, b) = self.pair()?;
                PatternId::union(a, b)
            }
            other => {
                self.pos = start;
                return Err(self.err(&format!("unknown pattern {other:?}")));
            }
        })
    }
}

impl FromStr for PatternId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let id = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(id)
    }
}

impl From<PatternId> for String {
    fn from(p: PatternId) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for PatternId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claw() {
        let g = build_pattern(&PatternId::Claw).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree_sequence(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn antihole_three_is_3k1() {
        assert_eq!(build_pattern(&PatternId::Antihole(3)).unwrap(), Graph::empty(3));
        assert!(build_pattern(&PatternId::Antihole(4)).is_err());
        assert!(build_pattern(&PatternId::Antihole(1)).is_err());
    }

    #[test]
    fn corollary2_graph() {
        let g = build_pattern(&PatternId::Corollary2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 12);
        // apex 0; {1,2} independent; 3-4 edge; 5 alone within its part
        assert_eq!(g.degree(0), 5);
        assert!(!g.has_edge(1, 2));
        for a in [1, 2] {
            for x in [3, 4, 5] {
                assert!(g.has_edge(a, x));
            }
        }
        assert!(g.has_edge(3, 4));
        assert!(!g.has_edge(3, 5) && !g.has_edge(4, 5));
    }

    #[test]
    fn w6_is_six_vertex_wheel() {
        let g = build_pattern(&PatternId::W6).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.degree_sequence(), vec![5, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn other_constructors_validate() {
        assert!(build_pattern(&PatternId::Cycle(2)).is_err());
        assert!(build_pattern(&PatternId::Path(0)).is_err());
        assert!(build_pattern(&PatternId::Complete(0)).is_err());
        assert!(build_pattern(&PatternId::Empty(0)).is_err());
        assert_eq!(build_pattern(&PatternId::Path(1)).unwrap(), Graph::empty(1));
    }

    #[test]
    fn parse_and_display() {
        let p: PatternId = " join( empty(1) , cycle(6) )".parse().unwrap();
        assert_eq!(p, PatternId::join(PatternId::Empty(1), PatternId::Cycle(6)));
        assert_eq!(p.to_string(), "join(empty(1),cycle(6))");
        for s in ["claw", "w6", "cor2", "antihole(7)", "union(path(3),complete(2))"] {
            assert_eq!(s.parse::<PatternId>().unwrap().to_string(), s);
        }
        for bad in ["", "wheel", "cycle(", "cycle(x)", "join(claw)", "claw claw"] {
            assert!(bad.parse::<PatternId>().is_err(), "{bad}");
        }
    }
}
