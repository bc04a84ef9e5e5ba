//! Whitespace-separated edge lists, one `u v` pair per line.
//!
//! Blank lines and lines starting with `#` are ignored, except that a
//! comment of the form `# n=N` fixes the vertex count when the caller does
//! not supply one. [`encode`] always writes that comment so isolated
//! high-numbered vertices survive a round trip.

use super::{Graph, GraphBuilder, Vertex};
use crate::error::{Error, Result};

pub fn parse(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut declared = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("n=") {
                declared = Some(v.trim().parse::<usize>().map_err(|e| Error::Input {
                    line: lineno,
                    message: format!("bad vertex count {v:?}: {e}"),
                })?);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut label = || -> Result<Vertex> {
            let tok = fields.next().ok_or_else(|| Error::Input {
                line: lineno,
                message: "expected two vertex labels".into(),
            })?;
            tok.parse::<Vertex>().map_err(|_| Error::Input {
                line: lineno,
                message: format!("{tok:?} is not a non-negative integer"),
            })
        };
        let (u, v) = (label()?, label()?);
        if fields.next().is_some() {
            return Err(Error::Input {
                line: lineno,
                message: "expected exactly two vertex labels".into(),
            });
        }
        if u == v {
            return Err(Error::Input {
                line: lineno,
                message: format!("self-loop on vertex {u}"),
            });
        }
        edges.push((u, v));
    }

    let n = match n.or(declared) {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    let mut b = GraphBuilder::new(n);
    for (u, v) in edges {
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}

pub fn encode(g: &Graph) -> String {
    let mut s = format!("# n={}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
