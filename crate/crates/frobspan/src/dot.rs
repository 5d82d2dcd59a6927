//! Deterministic Graphviz DOT export of a cospan apex.
//!
//! Apex vertices become circular nodes `v<i>` in index order; boundary
//! ports are rendered as labeled half-edges: plaintext nodes `in<a>` /
//! `out<b>` wired to the leg image with a dashed edge.

use std::fmt::Write;

use crate::cospan::GraphCospan;

pub fn to_dot(cospan: &GraphCospan) -> String {
    let mut out = String::new();
    out.push_str("graph cospan {\n");
    for v in 0..cospan.apex().vertex_count() {
        writeln!(out, "  v{v} [shape=circle, label=\"{v}\"];").unwrap();
    }
    for &(u, v) in cospan.apex().edges() {
        writeln!(out, "  v{u} -- v{v};").unwrap();
    }
    for (a, &v) in cospan.leg_in().iter().enumerate() {
        writeln!(out, "  in{a} [shape=plaintext, label=\"in{a}\"];").unwrap();
        writeln!(out, "  in{a} -- v{v} [style=dashed];").unwrap();
    }
    for (b, &v) in cospan.leg_out().iter().enumerate() {
        writeln!(out, "  out{b} [shape=plaintext, label=\"out{b}\"];").unwrap();
        writeln!(out, "  out{b} -- v{v} [style=dashed];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cospan::{Generator, GraphCospan};

    #[test]
    fn identity_dot_has_one_node_no_graph_edges() {
        let dot = to_dot(&GraphCospan::identity(1));
        assert!(dot.contains("v0 [shape=circle"));
        assert!(!dot.contains("v0 -- v0;"));
        assert!(dot.contains("in0 -- v0 [style=dashed];"));
        assert!(dot.contains("out0 -- v0 [style=dashed];"));
    }

    #[test]
    fn handle_dot_has_two_parallel_edges() {
        let handle = GraphCospan::generator(Generator::Comult)
            .compose_homotopy(&GraphCospan::generator(Generator::Mult))
            .unwrap();
        let dot = to_dot(&handle);
        assert_eq!(dot.matches("v0 -- v1;").count(), 2);
    }

    #[test]
    fn output_is_deterministic() {
        let c = GraphCospan::generator(Generator::Mult).mapping_cylinder();
        assert_eq!(to_dot(&c), to_dot(&c));
    }
}
