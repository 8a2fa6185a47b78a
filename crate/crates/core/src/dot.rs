//! Hasse diagrams in DOT.

use std::fmt::Write;

use crate::dlframe::Analysis;
use crate::lattice::{Elem, FiniteLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum View {
    Hasse,
    Dl,
    Cba,
}

impl View {
    pub const ALL: [View; 3] = [View::Hasse, View::Dl, View::Cba];

    pub fn name(&self) -> &'static str {
        match self {
            View::Hasse => "hasse",
            View::Dl => "dl",
            View::Cba => "cba",
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// One node per element of the view, one edge per covering pair. Closed
/// elements are filled; dense elements carry the external label `dense`.
pub fn render(an: &Analysis<'_>, view: View) -> String {
    let base = an.lattice();
    let (lattice, elems): (&FiniteLattice, Vec<Elem>) = match view {
        View::Hasse => (base, base.elements().collect()),
        View::Dl => (an.dl_lattice(), an.dl().to_vec()),
        View::Cba => (&an.cba().lattice, an.closed().to_vec()),
    };
    let mut out = String::new();
    let title = format!("{}-{}", an.model().name(), view.name());
    writeln!(out, "digraph {} {{", quote(&title)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for &x in &elems {
        let mut attrs = vec![format!("label={}", quote(base.label(x)))];
        if an.is_closed(x) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightgray".into());
        }
        if an.is_dense(x) {
            attrs.push("xlabel=\"dense\"".into());
        }
        writeln!(out, "  n{x} [{}];", attrs.join(", ")).unwrap();
    }
    for (i, j) in lattice.covers() {
        writeln!(out, "  n{} -> n{};", elems[i], elems[j]).unwrap();
    }
    out.push_str("}\n");
    out
}
