//! Text formats: `.sg` signed graphs, DOT export and witness files.
//!
//! `.sg` layout:
//!
//! ```text
//! sg <n>
//! e <u> <v> <+|->
//! ```
//!
//! Edges are written with `u < v` in lexicographic order. Lines starting
//! with `#` and blank lines are ignored on input.
//!
//! DOT export writes `graph G { ... }` with one `u -- v [sign="+"]` line per
//! edge; negative edges carry `sign="-", style=dashed, color=red`. Vertex
//! labels, when present, become `v [label="..."]`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Sign, SignedGraph, SwitchSet};
use crate::hom::{HomWitness, PackingWitness};

pub fn write_sg(sg: &SignedGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sg {}", sg.vertex_count());
    for (e, s) in sg.signed_edges() {
        let _ = writeln!(out, "e {} {} {}", e.u(), e.v(), s.symbol());
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    write_sg(&SignedGraph::all_positive(g.clone()))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(line: usize, tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("bad {what}")))
}

/// Meaningful lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_sg(text: &str) -> Result<SignedGraph> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("sg") {
        return Err(parse_err(ln, "expected `sg <n>` header"));
    }
    let n = parse_usize(ln, toks.next(), "vertex count")?;
    if toks.next().is_some() {
        return Err(parse_err(ln, "trailing tokens"));
    }
    let mut sg = SignedGraph::all_positive(Graph::new(n));
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("e") {
            return Err(parse_err(ln, "expected `e <u> <v> <+|->`"));
        }
        let u = parse_usize(ln, toks.next(), "endpoint")?;
        let v = parse_usize(ln, toks.next(), "endpoint")?;
        let sign = match toks.next() {
            Some("+") => Sign::Positive,
            Some("-") => Sign::Negative,
            _ => return Err(parse_err(ln, "sign must be + or -")),
        };
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        sg.add_edge(u, v, sign)
            .map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(sg)
}

pub fn to_dot(sg: &SignedGraph) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(labels) = sg.graph().labels() {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
        }
    } else {
        for v in 0..sg.vertex_count() {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (e, s) in sg.signed_edges() {
        match s {
            Sign::Positive => {
                let _ = writeln!(out, "  {} -- {} [sign=\"+\"];", e.u(), e.v());
            }
            Sign::Negative => {
                let _ = writeln!(
                    out,
                    "  {} -- {} [sign=\"-\", style=dashed, color=red];",
                    e.u(),
                    e.v()
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn write_hom_witness(w: &HomWitness) -> String {
    let mut out = String::new();
    for (u, v) in w.map.iter().enumerate() {
        let _ = writeln!(out, "map {u} -> {v}");
    }
    for u in w.switch.vertices() {
        let _ = writeln!(out, "switch {u}");
    }
    out
}

pub fn parse_hom_witness(text: &str) -> Result<HomWitness> {
    let mut map: BTreeMap<usize, usize> = BTreeMap::new();
    let mut switch = Vec::new();
    for (ln, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["map", u, "->", v] => {
                let u = parse_usize(ln, Some(u), "source vertex")?;
                let v = parse_usize(ln, Some(v), "target vertex")?;
                if map.insert(u, v).is_some() {
                    return Err(parse_err(ln, format!("vertex {u} mapped twice")));
                }
            }
            ["switch", u] => switch.push(parse_usize(ln, Some(u), "vertex")?),
            _ => return Err(parse_err(ln, "expected `map u -> v` or `switch u`")),
        }
    }
    if map.keys().copied().ne(0..map.len()) {
        return Err(parse_err(0, "map must cover vertices 0..n"));
    }
    Ok(HomWitness {
        map: map.into_values().collect(),
        switch: SwitchSet::new(switch),
    })
}

pub fn write_packing(w: &PackingWitness) -> String {
    let mut out = String::new();
    for (e, c) in &w.classes {
        let _ = writeln!(out, "class {} {} {c}", e.u(), e.v());
    }
    out
}

/// Reads `class u v c` lines; the per-class switch sets are recomputed
/// against `sg`. Returns `None` if some class is not equivalent to `Σ`.
pub fn parse_packing(
    text: &str,
    sg: &SignedGraph,
    class_count: usize,
) -> Result<Option<PackingWitness>> {
    let mut classes = BTreeMap::new();
    for (ln, line) in content_lines(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let ["class", u, v, c] = toks.as_slice() else {
            return Err(parse_err(ln, "expected `class u v c`"));
        };
        let e = Edge::new(
            parse_usize(ln, Some(u), "endpoint")?,
            parse_usize(ln, Some(v), "endpoint")?,
        );
        if classes
            .insert(e, parse_usize(ln, Some(c), "class")?)
            .is_some()
        {
            return Err(parse_err(ln, format!("edge {e} listed twice")));
        }
    }
    Ok(crate::hom::certify_classes(sg, &classes, class_count)?
        .map(|switches| PackingWitness { classes, switches }))
}
