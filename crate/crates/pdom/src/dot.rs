use pdom_core::{Graph, VertexSet};

/// Graphviz text for `g`, with members of `highlight` filled grey.
pub fn to_dot(g: &Graph, highlight: VertexSet) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        if highlight.contains(v) {
            out.push_str(&format!("  {v} [style=filled, fillcolor=lightgray];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
