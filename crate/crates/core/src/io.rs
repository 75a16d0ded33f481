//! Text formats for graphs and hypergraphs. Writers are byte-deterministic:
//! edges, set members, and label lines are emitted in sorted order.
//!
//! Graph format:
//! ```text
//! p graph <n> <m>
//! e <u> <v>          (m lines, 0-based ids)
//! l <v> <name>       (optional label lines)
//! ```
//!
//! Hypergraph format:
//! ```text
//! p hyper <|U|> <|F|>
//! <universe names, space separated>
//! <one line per set, member names space separated>
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// A parsed instance of either kind.
#[derive(Debug, Clone)]
pub enum Instance {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Graph(_) => "graph",
            Instance::Hypergraph(_) => "hypergraph",
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        match self {
            Instance::Graph(g) => Ok(g),
            Instance::Hypergraph(_) => Err(Error::KindMismatch {
                expected: "graph",
                found: "hypergraph",
            }),
        }
    }

    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        match self {
            Instance::Hypergraph(h) => Ok(h),
            Instance::Graph(_) => Err(Error::KindMismatch {
                expected: "hypergraph",
                found: "graph",
            }),
        }
    }
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    writeln!(out, "p graph {} {}", g.n(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "e {u} {v}").unwrap();
    }
    for v in g.vertices() {
        if let Some(label) = g.label(v) {
            writeln!(out, "l {v} {label}").unwrap();
        }
    }
    out
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "p hyper {} {}", h.universe_size(), h.set_count()).unwrap();
    writeln!(out, "{}", h.universe().join(" ")).unwrap();
    for j in 0..h.set_count() {
        writeln!(out, "{}", h.set_members(j).join(" ")).unwrap();
    }
    out
}

fn parse_header(text: &str) -> Result<(&'static str, usize, usize, usize)> {
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "p" {
            return Err(Error::parse(idx + 1, "expected header `p graph <n> <m>` or `p hyper <u> <f>`"));
        }
        let kind = match fields[1] {
            "graph" => "graph",
            "hyper" => "hyper",
            other => return Err(Error::parse(idx + 1, format!("unknown instance kind {other:?}"))),
        };
        let a = fields[2]
            .parse::<usize>()
            .map_err(|_| Error::parse(idx + 1, "invalid count in header"))?;
        let b = fields[3]
            .parse::<usize>()
            .map_err(|_| Error::parse(idx + 1, "invalid count in header"))?;
        return Ok((kind, a, b, idx));
    }
    Err(Error::parse(1, "empty input"))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (kind, n, m, header_idx) = parse_header(text)?;
    if kind != "graph" {
        return Err(Error::KindMismatch {
            expected: "graph",
            found: "hypergraph",
        });
    }
    let mut g = Graph::new(n);
    let mut edges = 0usize;
    for (idx, line) in text.lines().enumerate().skip(header_idx + 1) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let lineno = idx + 1;
        match fields[0] {
            "e" => {
                if fields.len() != 3 {
                    return Err(Error::parse(lineno, "edge line must be `e <u> <v>`"));
                }
                let u = fields[1]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(lineno, "invalid vertex id"))?;
                let v = fields[2]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(lineno, "invalid vertex id"))?;
                g.add_edge(u, v)
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
                edges += 1;
            }
            "l" => {
                if fields.len() != 3 {
                    return Err(Error::parse(lineno, "label line must be `l <v> <name>`"));
                }
                let v = fields[1]
                    .parse::<usize>()
                    .map_err(|_| Error::parse(lineno, "invalid vertex id"))?;
                g.set_label(v, fields[2])
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
            }
            other => {
                return Err(Error::parse(lineno, format!("unknown line kind {other:?}")));
            }
        }
    }
    if edges != m {
        return Err(Error::parse(
            1,
            format!("header declares {m} edges but {edges} edge lines found"),
        ));
    }
    Ok(g)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let (kind, u, f, header_idx) = parse_header(text)?;
    if kind != "hyper" {
        return Err(Error::KindMismatch {
            expected: "hypergraph",
            found: "graph",
        });
    }
    let mut lines = text.lines().enumerate().skip(header_idx + 1);
    let universe: Vec<String> = match lines.next() {
        Some((idx, line)) => {
            let names: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            if names.len() != u {
                return Err(Error::parse(
                    idx + 1,
                    format!("expected {u} universe names, found {}", names.len()),
                ));
            }
            names
        }
        None if u == 0 => Vec::new(),
        None => return Err(Error::parse(header_idx + 2, "missing universe line")),
    };
    let mut sets: Vec<Vec<String>> = Vec::with_capacity(f);
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if sets.len() == f {
            return Err(Error::parse(idx + 1, "more set lines than declared"));
        }
        sets.push(line.split_whitespace().map(str::to_string).collect());
    }
    if sets.len() != f {
        return Err(Error::parse(
            1,
            format!("header declares {f} sets but {} set lines found", sets.len()),
        ));
    }
    Hypergraph::new(universe, sets)
}

/// Parses either format, dispatching on the header.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let (kind, ..) = parse_header(text)?;
    match kind {
        "graph" => Ok(Instance::Graph(parse_graph(text)?)),
        _ => Ok(Instance::Hypergraph(parse_hypergraph(text)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes;
    use crate::hypergraph::tests::hyper;

    #[test]
    fn graph_round_trip_with_labels() {
        let mut g = classes::cycle(4);
        g.set_label(0, "s").unwrap();
        g.set_label(3, "w_S1").unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "p graph 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\nl 0 s\nl 3 w_S1\n");
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn hypergraph_round_trip() {
        let h = hyper(&["a", "b", "c"], &[&["b", "a"], &["b", "c"]]);
        let text = write_hypergraph(&h);
        assert_eq!(text, "p hyper 3 2\na b c\na b\nb c\n");
        let back = parse_hypergraph(&text).unwrap();
        assert_eq!(back.universe(), h.universe());
        assert_eq!(back.sets(), h.sets());
    }

    #[test]
    fn empty_family_and_empty_universe() {
        let h = Hypergraph::new(["a", "b"], Vec::<Vec<&str>>::new()).unwrap();
        let text = write_hypergraph(&h);
        assert_eq!(text, "p hyper 2 0\na b\n");
        assert_eq!(parse_hypergraph(&text).unwrap().set_count(), 0);

        let h = Hypergraph::new(Vec::<&str>::new(), Vec::<Vec<&str>>::new()).unwrap();
        let text = write_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        assert_eq!(back.universe_size(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("p graph 2 1\ne 0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p graph 2 2\ne 0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("p hyper 1 0\na\n"),
            Err(Error::KindMismatch { .. })
        ));
        assert!(matches!(
            parse_hypergraph("p hyper 2 1\na b\na c\n"),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn instance_dispatch() {
        let g = parse_instance("p graph 1 0\n").unwrap();
        assert_eq!(g.kind(), "graph");
        assert!(g.into_hypergraph().is_err());
        let h = parse_instance("p hyper 1 1\na\na\n").unwrap();
        assert_eq!(h.kind(), "hypergraph");
    }
}
