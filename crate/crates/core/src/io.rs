//! The line-oriented arc-list text format and DOT export.
//!
//! ```text
//! kpartite 2 1      # or: digraph <n>
//! arc 0 2
//! arc 2 1
//! ```
//!
//! `#` starts a comment anywhere on a line. For `kpartite` headers the first
//! `n1` vertices form part 1, the next `n2` part 2, and so on, and the arcs
//! must orient the complete multipartite graph.

use std::fmt::Write as _;

use crate::digraph::{Digraph, Graph};
use crate::error::{Error, Result};
use crate::partition::{PartitionSpec, PartitionedDigraph};

/// Either kind of file the parser accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedDigraph {
    Plain(Digraph),
    Partitioned(PartitionedDigraph),
}

impl ParsedDigraph {
    pub fn digraph(&self) -> &Digraph {
        match self {
            ParsedDigraph::Plain(d) => d,
            ParsedDigraph::Partitioned(p) => p.digraph(),
        }
    }

    pub fn partition(&self) -> Option<&PartitionSpec> {
        match self {
            ParsedDigraph::Plain(_) => None,
            ParsedDigraph::Partitioned(p) => Some(p.partition()),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, got {tok:?}")))
}

pub fn parse_digraph(text: &str) -> Result<ParsedDigraph> {
    let mut header: Option<(usize, Option<PartitionSpec>)> = None;
    let mut digraph = Digraph::empty(0);

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match (&header, toks[0]) {
            (None, "digraph") => {
                if toks.len() != 2 {
                    return Err(parse_err(line, "expected `digraph <n>`"));
                }
                let n = parse_num(toks[1], line)?;
                digraph = Digraph::empty(n);
                header = Some((n, None));
            }
            (None, "kpartite") => {
                let sizes = toks[1..].iter().map(|t| parse_num(t, line)).collect::<Result<Vec<_>>>()?;
                let p = PartitionSpec::new_sorted(sizes).map_err(|e| parse_err(line, e.to_string()))?;
                let n = p.vertex_count();
                digraph = Digraph::empty(n);
                header = Some((n, Some(p)));
            }
            (None, other) => {
                return Err(parse_err(line, format!("expected `digraph` or `kpartite` header, got {other:?}")))
            }
            (Some(_), "arc") => {
                if toks.len() != 3 {
                    return Err(parse_err(line, "expected `arc <u> <v>`"));
                }
                let u = parse_num(toks[1], line)?;
                let v = parse_num(toks[2], line)?;
                digraph.insert_arc(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            (Some(_), "digraph" | "kpartite") => return Err(parse_err(line, "duplicate header")),
            (Some(_), other) => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }

    match header {
        None => Err(parse_err(0, "missing header")),
        Some((_, None)) => Ok(ParsedDigraph::Plain(digraph)),
        Some((_, Some(p))) => {
            PartitionedDigraph::new(digraph, p).map(ParsedDigraph::Partitioned).map_err(|e| parse_err(0, e.to_string()))
        }
    }
}

/// Parses an undirected graph: either `graph <n>` followed by `edge <u> <v>`
/// lines, or any digraph file, whose underlying graph is returned.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|raw| raw.split('#').next().unwrap_or("").trim())
        .find(|content| !content.is_empty())
        .and_then(|content| content.split_whitespace().next());
    if first != Some("graph") {
        return parse_digraph(text).map(|p| p.digraph().underlying_graph());
    }

    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match (&mut g, toks[0]) {
            (None, "graph") => {
                if toks.len() != 2 {
                    return Err(parse_err(line, "expected `graph <n>`"));
                }
                g = Some(Graph::empty(parse_num(toks[1], line)?));
            }
            (Some(g), "edge") => {
                if toks.len() != 3 {
                    return Err(parse_err(line, "expected `edge <u> <v>`"));
                }
                let u = parse_num(toks[1], line)?;
                let v = parse_num(toks[2], line)?;
                g.insert_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            (Some(_), "graph") => return Err(parse_err(line, "duplicate header")),
            (_, other) => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }
    g.ok_or_else(|| parse_err(0, "missing header"))
}

fn emit_arcs(out: &mut String, d: &Digraph) {
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "arc {u} {v}");
    }
}

/// Canonical text for a plain digraph: header then arcs in sorted order.
pub fn emit_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {}\n", d.vertex_count());
    emit_arcs(&mut out, d);
    out
}

pub fn emit_partitioned(p: &PartitionedDigraph) -> String {
    let sizes: Vec<String> = p.partition().sizes().iter().map(ToString::to_string).collect();
    let mut out = format!("kpartite {}\n", sizes.join(" "));
    emit_arcs(&mut out, p.digraph());
    out
}

pub fn emit_parsed(p: &ParsedDigraph) -> String {
    match p {
        ParsedDigraph::Plain(d) => emit_digraph(d),
        ParsedDigraph::Partitioned(p) => emit_partitioned(p),
    }
}

/// DOT text for a digraph. With a partition, each part becomes a same-rank cluster.
pub fn export_dot(d: &Digraph, partition: Option<&PartitionSpec>) -> String {
    let mut out = String::from("digraph D {\n");
    match partition {
        Some(p) => {
            for l in 0..p.parts() {
                let members: Vec<String> = p.block(l).map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  subgraph cluster_{l} {{ label=\"V{}\"; rank=same; {}; }}",
                    l + 1,
                    members.join("; ")
                );
            }
        }
        None => {
            for v in 0..d.vertex_count() {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

/// Edge-list text for an undirected graph: `graph <n>` then `edge <u> <v>` lines.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "edge {u} {v}");
    }
    out
}

pub fn export_graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_plain_digraph() {
        let p = parse_digraph("digraph 3\narc 0 1\narc 1 2").unwrap();
        assert_eq!(p, ParsedDigraph::Plain(Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap()));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_digraph("# header next\n\ndigraph 2 # two vertices\narc 1 0   # only arc\n").unwrap();
        assert_eq!(p.digraph().arcs().collect::<Vec<_>>(), vec![(1, 0)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("digraph 3\narc 0 1\narc 1 0", 3),
            ("digraph 3\narc 1 1", 2),
            ("digraph 3\narc 0 1\narc 0 1", 3),
            ("digraph 3\narc 0 3", 2),
            ("digraph 3\nedge 0 1", 2),
            ("arc 0 1", 1),
            ("digraph x", 1),
            ("digraph 3\narc 0", 2),
            ("kpartite 1 2", 1),
        ];
        for (text, line) in cases {
            match parse_digraph(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn graph_files_round_trip() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
        let from_digraph = parse_graph("digraph 3\narc 0 1\narc 2 1").unwrap();
        assert_eq!(from_digraph, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        for (text, line) in [("graph 3\nedge 0 1\nedge 1 0", 3), ("graph 2\nedge 0 0", 2), ("graph 2\narc 0 1", 2)] {
            match parse_graph(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn kpartite_requires_full_orientation() {
        let ok = parse_digraph("kpartite 2 1\narc 0 2\narc 2 1").unwrap();
        assert_eq!(ok.partition().unwrap().sizes(), &[2, 1]);
        assert!(parse_digraph("kpartite 2 1\narc 0 2").is_err());
        assert!(parse_digraph("kpartite 2 1\narc 0 2\narc 2 1\narc 0 1").is_err());
    }

    #[test]
    fn emit_is_canonical() {
        let text = "digraph 3\narc 1 2\n# c\narc 0 1\n";
        let parsed = parse_digraph(text).unwrap();
        assert_eq!(emit_parsed(&parsed), "digraph 3\narc 0 1\narc 1 2\n");
    }

    #[test]
    fn dot_has_clusters_and_arcs() {
        let p = parse_digraph("kpartite 2 1\narc 0 2\narc 2 1").unwrap();
        let dot = export_dot(p.digraph(), p.partition());
        assert!(dot.starts_with("digraph D {"));
        assert!(dot.contains("subgraph cluster_0 { label=\"V1\"; rank=same; 0; 1; }"));
        assert!(dot.contains("  2 -> 1;"));
        assert_eq!(dot.matches("->").count(), 2);
    }

    fn arb_digraph() -> impl Strategy<Value = Digraph> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |choice| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let arcs = pairs.zip(choice).filter_map(|((u, v), c)| match c {
                    0 => None,
                    1 => Some((u, v)),
                    _ => Some((v, u)),
                });
                Digraph::from_arcs(n, arcs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(d in arb_digraph()) {
            let text = emit_digraph(&d);
            let back = parse_digraph(&text).unwrap();
            prop_assert_eq!(back.digraph(), &d);
            prop_assert_eq!(emit_parsed(&back), text);
        }
    }
}
