//! Graphviz output. Write-only.

use super::Graph;

pub fn encode(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2() {
        assert_eq!(
            encode(&Graph::complete(2)),
            "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
        );
    }
}
