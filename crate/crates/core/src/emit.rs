//! Text renderings: 1-cut diagrams as DOT graphs and polynomials as lists
//! of building blocks.

use std::fmt::Write as _;

use crate::enumerate::CutDiagram;
use crate::linkpoly::{LinkPolynomial, RingVariable};

const COLORS: [&str; 12] = [
    "red", "green", "blue", "yellow", "orange", "purple", "cyan", "magenta", "brown", "pink",
    "gray", "olive",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A directed graph from `source` to each aggregated cut outcome, edges
/// labeled with multiplicities, in outcome order.
pub fn emit_dot(source: &str, diagram: &CutDiagram) -> String {
    let src = quote(source);
    let mut out = format!("digraph {src} {{\n  {src};\n");
    for (outcome, count) in &diagram.aggregated {
        let _ = writeln!(out, "  {src} -> {} [label=\"{count}\"];", quote(&outcome.to_string()));
    }
    out.push_str("}\n");
    out
}

/// The ring colors, one block per monomial, and for each ring the chain of
/// blocks its strand passes through, closed back on the first.
pub fn emit_blocks(poly: &LinkPolynomial) -> String {
    let terms = poly.display_terms();
    let mut out = String::from("rings:\n");
    for i in 0..poly.rings() {
        let color = COLORS
            .get(i)
            .map_or_else(|| format!("color{i}"), |c| c.to_string());
        let _ = writeln!(out, "  {} {color}", RingVariable::new(i));
    }
    out.push_str("blocks:\n");
    for (b, m) in terms.iter().enumerate() {
        let _ = writeln!(out, "  B{} {m} arity={}", b + 1, m.order());
    }
    out.push_str("connections:\n");
    for ring in (0..poly.rings()).map(RingVariable::new) {
        let chain: Vec<String> = terms
            .iter()
            .enumerate()
            .filter(|(_, m)| m.contains(ring))
            .map(|(b, _)| format!("B{}", b + 1))
            .collect();
        match chain.first() {
            Some(first) => {
                let _ = writeln!(out, "  {ring}: {} -> {first}", chain.join(" -> "));
            }
            None => {
                let _ = writeln!(out, "  {ring}: free");
            }
        }
    }
    out
}
