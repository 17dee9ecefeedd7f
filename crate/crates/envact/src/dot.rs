//! Graphviz export of the enveloping space.

use std::fmt::Write;

use envact_core::EnvelopingSpace;

/// `[g,x]` for the least pair of a class, with `g` by name.
pub fn class_label(env: &EnvelopingSpace, class: usize) -> String {
    let (g, x) = env.representative(class);
    format!("[{},{}]", env.source().group().name(g), x)
}

/// One node per class of `X_G`, labelled by its least pair, with the image
/// of `X` filled. An edge `c -> d` labelled `g` means `μ(g, c) = d`.
pub fn class_graph(env: &EnvelopingSpace) -> String {
    let group = env.source().group();
    let image = env.iota_image();
    let mut out = String::from("digraph envelope {\n  rankdir=LR;\n  node [shape=box];\n");
    for c in 0..env.len() {
        let style = if image.contains(c) {
            ", style=filled, fillcolor=\"#9ecae1\""
        } else {
            ""
        };
        writeln!(out, "  c{c} [label=\"{}\"{style}];", class_label(env, c)).unwrap();
    }
    for (c, g, d) in env.class_graph() {
        writeln!(out, "  c{c} -> c{d} [label=\"{}\"];", escape(group.name(g))).unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
