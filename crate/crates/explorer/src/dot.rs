//! Graphviz export.

use std::fmt::Write;

use crate::graph::CrystalGraph;

/// Renders `graph` as a DOT digraph, one `rank=same` group per level.
/// Identical graphs always give identical text.
pub fn export_dot(graph: &CrystalGraph) -> String {
    let mut out = String::new();
    out.push_str("digraph crystal {\n");
    let _ = writeln!(out, "  // ell={} model={}", graph.ell, graph.model);
    out.push_str("  node [shape=plaintext];\n");
    for level in graph.levels.iter().filter(|l| !l.is_empty()) {
        out.push_str("  { rank=same;");
        for node in level {
            let _ = write!(out, " \"{node}\";");
        }
        out.push_str(" }\n");
    }
    for edge in &graph.edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            edge.source, edge.target, edge.residue
        );
    }
    out.push_str("}\n");
    out
}
