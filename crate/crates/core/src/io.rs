//! Text and DOT renderings of graphs, digraphs, and labellings, plus the
//! JSON shapes of the possible verdict and report values.
//!
//! Text formats: a digraph is `D n m` followed by `m` lines `u v`, one arc
//! `u -> v` each; a graph is the same with a `G` header and undirected
//! edges; a labelling is `L n` followed by `n` lines `v b` with `b` 0 or 1.
//! `#` starts a comment anywhere on a line. Parse errors carry 1-based line
//! numbers.

use std::collections::HashSet;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::construct::ConstructionResult;
use crate::decide::{CensusReport, Verdict, Witness};
use crate::graph::{Digraph, Graph};
use crate::labelling::{LambdaTriple, Scope, VertexLabelling};
use crate::{Error, Result};

/// A parsed input file: either kind of host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedInput {
    Directed(Digraph),
    Undirected(Graph),
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.find('#').map_or(raw, |at| &raw[..at]).trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, got '{token}'"),
    })
}

fn parse_pair_line(line_no: usize, line: &str, n: usize) -> Result<(usize, usize)> {
    let mut tokens = line.split_whitespace();
    let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("expected two vertex numbers, got '{line}'"),
        });
    };
    let u = parse_usize(a, line_no, "a vertex number")?;
    let v = parse_usize(b, line_no, "a vertex number")?;
    if u >= n || v >= n {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("vertex {} out of range for order {n}", u.max(v)),
        });
    }
    if u == v {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("loop at vertex {u} is not allowed"),
        });
    }
    Ok((u, v))
}

/// Parses a `D`- or `G`-headed file into the corresponding host.
pub fn parse_graph_text(text: &str) -> Result<ParsedInput> {
    let mut lines = significant_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            msg: "empty input, expected a 'D n m' or 'G n m' header".into(),
        });
    };
    let mut tokens = header.split_whitespace();
    let (Some(kind), Some(n_tok), Some(m_tok), None) =
        (tokens.next(), tokens.next(), tokens.next(), tokens.next())
    else {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("expected 'D n m' or 'G n m', got '{header}'"),
        });
    };
    if kind != "D" && kind != "G" {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("unknown kind '{kind}', expected 'D' or 'G'"),
        });
    }
    let n = parse_usize(n_tok, header_line, "a vertex count")?;
    let m = parse_usize(m_tok, header_line, "a pair count")?;
    let mut pairs = Vec::with_capacity(m);
    let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unexpected extra line after {m} pairs"),
            });
        }
        let (u, v) = parse_pair_line(line_no, line, n)?;
        let key = if kind == "G" {
            (u.min(v), u.max(v))
        } else {
            (u, v)
        };
        if !seen.insert(key) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("duplicate pair {u} {v}"),
            });
        }
        pairs.push((u, v));
        last_line = line_no;
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header promises {m} pairs, found {}", pairs.len()),
        });
    }
    Ok(if kind == "D" {
        ParsedInput::Directed(Digraph::new(n, pairs)?)
    } else {
        ParsedInput::Undirected(Graph::new(n, pairs)?)
    })
}

/// Parses an `L`-headed labelling file; every vertex must appear exactly
/// once. The scope is not part of the format and is supplied by the caller.
pub fn parse_labelling_text(text: &str, scope: Scope) -> Result<VertexLabelling> {
    let mut lines = significant_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            msg: "empty input, expected an 'L n' header".into(),
        });
    };
    let mut tokens = header.split_whitespace();
    let (Some(kind), Some(n_tok), None) = (tokens.next(), tokens.next(), tokens.next()) else {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("expected 'L n', got '{header}'"),
        });
    };
    if kind != "L" {
        return Err(Error::Parse {
            line: header_line,
            msg: format!("unknown kind '{kind}', expected 'L'"),
        });
    }
    let n = parse_usize(n_tok, header_line, "a vertex count")?;
    let mut labels = vec![None::<u8>; n];
    let mut assigned = 0usize;
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if assigned == n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("unexpected extra line after {n} labels"),
            });
        }
        let mut tokens = line.split_whitespace();
        let (Some(v_tok), Some(b_tok), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected 'v b', got '{line}'"),
            });
        };
        let v = parse_usize(v_tok, line_no, "a vertex number")?;
        if v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} out of range for order {n}"),
            });
        }
        let b = parse_usize(b_tok, line_no, "a label")?;
        if b > 1 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("label must be 0 or 1, got {b}"),
            });
        }
        if labels[v].is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} labelled twice"),
            });
        }
        labels[v] = Some(b as u8);
        assigned += 1;
        last_line = line_no;
    }
    if assigned != n {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header promises {n} labels, found {assigned}"),
        });
    }
    let labels: Vec<u8> = labels
        .into_iter()
        .map(|l| l.expect("all assigned"))
        .collect();
    VertexLabelling::new(labels, scope)
}

/// Renders a digraph in the `D n m` text format.
pub fn digraph_to_text(d: &Digraph) -> String {
    let mut out = format!("D {} {}\n", d.vertex_count(), d.arc_count());
    for &(u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Renders a graph in the `G n m` text format.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("G {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Renders a labelling in the `L n` text format, vertices ascending.
pub fn labelling_to_text(f: &VertexLabelling) -> String {
    let mut out = format!("L {}\n", f.len());
    for (v, &b) in f.labels().iter().enumerate() {
        out.push_str(&format!("{v} {b}\n"));
    }
    out
}

fn dot_nodes(out: &mut String, n: usize, f: Option<&VertexLabelling>) {
    for v in 0..n {
        match f {
            Some(f) => out.push_str(&format!("  {v} [label=\"{v}:{}\"];\n", f.get(v))),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
}

/// DOT rendering of a digraph, annotating vertices with their labels when a
/// labelling is supplied.
pub fn digraph_to_dot(d: &Digraph, f: Option<&VertexLabelling>) -> String {
    let mut out = String::from("digraph {\n");
    dot_nodes(&mut out, d.vertex_count(), f);
    for &(u, v) in d.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of an undirected graph.
pub fn graph_to_dot(g: &Graph, f: Option<&VertexLabelling>) -> String {
    let mut out = String::from("graph {\n");
    dot_nodes(&mut out, g.vertex_count(), f);
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

struct WitnessJson<'a> {
    labelling: &'a VertexLabelling,
    orientation: Option<&'a Digraph>,
    lambda: &'a LambdaTriple,
}

impl Serialize for WitnessJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Arcs<'a>(&'a Digraph);
        impl Serialize for Arcs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.arcs().iter())
            }
        }
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("labelling", self.labelling)?;
        if let Some(d) = self.orientation {
            map.serialize_entry("orientation", &Arcs(d))?;
        }
        map.serialize_entry("lambda", self.lambda)?;
        map.end()
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WitnessJson {
            labelling: &self.labelling,
            orientation: self.orientation.as_ref(),
            lambda: &self.lambda,
        }
        .serialize(s)
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("decision", &self.decision)?;
        if let Some(w) = &self.witness {
            map.serialize_entry("witness", w)?;
        }
        map.serialize_entry("search_space", &self.search_space)?;
        map.end()
    }
}

impl Serialize for CensusReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.classes.iter())
    }
}

impl Serialize for ConstructionResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("decision", &self.validated)?;
        map.serialize_entry(
            "witness",
            &WitnessJson {
                labelling: &self.labelling,
                orientation: Some(&self.digraph),
                lambda: &self.lambda,
            },
        )?;
        map.serialize_entry("search_space", &1u64)?;
        if let Some(case) = self.case {
            map.serialize_entry("case", case.as_str())?;
        }
        map.end()
    }
}
