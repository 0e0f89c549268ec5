//! Graphviz rendering of the covering diagram: bottom-up layout, one rank
//! per height, optional highlighted elements.

use crate::lattice::FiniteLattice;

pub fn write_dot(l: &FiniteLattice, highlight: &[usize]) -> String {
    let quote = |x: usize| format!("\"{}\"", l.label(x).replace('"', "\\\""));
    let mut out = String::from("// format 1\ndigraph lattice {\n  rankdir=BT;\n");
    out.push_str("  node [shape=ellipse];\n");
    let max_height = l.elements().map(|x| l.height(x)).max().unwrap_or(0);
    for h in 0..=max_height {
        let level: Vec<usize> = l.elements().filter(|&x| l.height(x) == h).collect();
        if !level.is_empty() {
            out.push_str("  { rank=same;");
            for x in level {
                out.push(' ');
                out.push_str(&quote(x));
                out.push(';');
            }
            out.push_str(" }\n");
        }
    }
    for &x in highlight {
        out.push_str(&format!(
            "  {} [style=filled, fillcolor=lightgoldenrod];\n",
            quote(x)
        ));
    }
    for &(lo, hi) in l.covers() {
        out.push_str(&format!("  {} -> {};\n", quote(lo), quote(hi)));
    }
    out.push_str("}\n");
    out
}
