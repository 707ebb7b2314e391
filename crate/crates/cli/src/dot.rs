use std::fmt::Write;

use convdiff::space::ReflexiveDigraph;

/// Graphviz text for the reflexive reduction of `x`.
///
/// Loops are left out. When both `u -> v` and `v -> u` are present they are
/// drawn once, from the smaller index, with `dir=none`. Nodes and edges come
/// out in index order, so equal digraphs give identical text.
pub fn emit_dot(x: &ReflexiveDigraph, names: Option<&[String]>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..x.size() {
        let label = names.and_then(|ns| ns.get(v)).cloned().unwrap_or_else(|| v.to_string());
        writeln!(out, "  n{v} [label=\"{}\"];", escape(&label)).unwrap();
    }
    for (v, u) in x.edges() {
        if v == u {
            continue;
        }
        let back = x.is_neighbor(u, v);
        if back && u < v {
            continue;
        }
        let attr = if back { " [dir=none]" } else { "" };
        writeln!(out, "  n{v} -> n{u}{attr};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Counts `(undirected, directed)` edges in text produced by [`emit_dot`].
pub fn count_dot_edges(dot: &str) -> (usize, usize) {
    let edges = dot.lines().filter(|l| l.contains("->"));
    edges.fold(
        (0, 0),
        |(u, d), l| {
            if l.contains("dir=none") {
                (u + 1, d)
            } else {
                (u, d + 1)
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use convdiff::space::pentacle;

    #[test]
    fn single_point() {
        let dot = emit_dot(&ReflexiveDigraph::discrete(1), None);
        assert_eq!(dot, "digraph G {\n  n0 [label=\"0\"];\n}\n");
    }

    #[test]
    fn pentacle_edges() {
        let p = pentacle();
        let arcs = p.edges().filter(|(v, u)| v != u).count();
        assert_eq!(arcs, 15);
        assert_eq!(count_dot_edges(&emit_dot(&p, None)), (5, 5));
    }

    #[test]
    fn labels_are_escaped() {
        let names = vec!["a\"b".to_string()];
        assert!(emit_dot(&ReflexiveDigraph::discrete(1), Some(&names)).contains("label=\"a\\\"b\""));
    }
}
