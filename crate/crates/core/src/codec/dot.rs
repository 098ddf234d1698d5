//! Graphviz export of the underlying 4-valent graph.

use crate::diagram::{Diagram, Tag};

/// An undirected DOT graph: one node per crossing, one edge per diagram edge,
/// augmenting edges drawn dashed. Slot numbers are attached as port labels.
/// No layout information is included.
pub fn emit_dot(diagram: &Diagram) -> String {
    let mut out = String::from("graph alternator {\n  node [shape=circle];\n");
    for (c, crossing) in diagram.crossings().iter().enumerate() {
        let [a, b] = crossing.over.slots();
        out.push_str(&format!("  c{c} [label=\"{c}\" tooltip=\"over {a},{b}\"];\n"));
    }
    for e in diagram.edges() {
        let [x, y] = e.darts;
        let style = match e.tag {
            Tag::Original => "solid",
            Tag::Augment => "dashed",
        };
        out.push_str(&format!(
            "  c{} -- c{} [taillabel=\"{}\" headlabel=\"{}\" style={style}];\n",
            x.crossing(),
            y.crossing(),
            x.slot(),
            y.slot()
        ));
    }
    out.push_str("}\n");
    out
}
