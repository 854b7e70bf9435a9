//! Graph file formats.
//!
//! * Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//!   endpoints.
//! * DIMACS: `c` comment lines, a `p edge n m` header and `e u v` lines with
//!   1-based endpoints.
//!
//! Both readers accept LF or CRLF line endings and skip blank lines. Writers
//! emit LF and list each edge once as `u < v` in lexicographic order.

use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::BadParameter(format!(
                "unknown graph format `{other}`"
            ))),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match toks.next() {
        Some(t) => Err(parse_err(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

pub fn read_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => read_edge_list(text),
        Format::Dimacs => read_dimacs(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Dimacs => write_dimacs(g),
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn check_edge(n: usize, u: usize, v: usize, line: usize) -> Result<()> {
    if let Some(x) = [u, v].into_iter().find(|&x| x >= n) {
        return Err(parse_err(
            line,
            format!("vertex {x} out of range for {n} vertices"),
        ));
    }
    if u == v {
        return Err(parse_err(line, format!("self-loop at vertex {u}")));
    }
    Ok(())
}

fn read_edge_list(text: &str) -> Result<Graph> {
    let mut it = lines(text);
    let (hline, header) = it
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let mut toks = header.split_whitespace();
    let n = number(toks.next(), hline, "vertex count")?;
    let m = number(toks.next(), hline, "edge count")?;
    no_trailing(toks, hline)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in it {
        let mut toks = l.split_whitespace();
        let u = number(toks.next(), line, "endpoint")?;
        let v = number(toks.next(), line, "endpoint")?;
        no_trailing(toks, line)?;
        check_edge(n, u, v, line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::InconsistentHeader {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

fn read_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, l) in lines(text) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            line,
                            format!("expected `p edge`, found `p {}`", other.unwrap_or("")),
                        ))
                    }
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                no_trailing(toks, line)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                no_trailing(toks, line)?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertices are 1-based"));
                }
                check_edge(n, u - 1, v - 1, line)?;
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing problem line `p edge n m`"))?;
    if edges.len() != m {
        return Err(Error::InconsistentHeader {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_triangle() {
        let g = read_graph("3 3\n0 1\n1 2\n2 0", Format::EdgeList).unwrap();
        assert_eq!(g, complete(3).unwrap());
    }

    #[test]
    fn dimacs_path() {
        let g = read_graph("c a path\np edge 3 2\ne 1 2\ne 2 3\n", Format::Dimacs).unwrap();
        assert_eq!(g, path(3).unwrap());
    }

    #[test]
    fn crlf_tolerated() {
        let g = read_graph("2 1\r\n0 1\r\n", Format::EdgeList).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            read_graph("3 2\n0 1\n1 x\n", Format::EdgeList),
            Err(Error::Parse {
                line: 3,
                message: "invalid endpoint `x`".into()
            })
        );
        assert!(matches!(
            read_graph("3 1\n0 5\n", Format::EdgeList),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            read_graph("3 3\n0 1\n", Format::EdgeList),
            Err(Error::InconsistentHeader {
                declared: 3,
                found: 1
            })
        );
        assert!(matches!(
            read_graph("p edge 2 1\ne 0 1\n", Format::Dimacs),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_graph("e 1 2\n", Format::Dimacs),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn canonical_output() {
        let g = read_graph("3 3\n2 1\n0 2\n1 0\n", Format::EdgeList).unwrap();
        assert_eq!(write_graph(&g, Format::EdgeList), "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(
            write_graph(&g, Format::Dimacs),
            "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
        );
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..15, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = crate::graph::random::gnp(n, p, seed);
            for f in [Format::EdgeList, Format::Dimacs] {
                let text = write_graph(&g, f);
                prop_assert_eq!(read_graph(&text, f).unwrap(), g.clone());
                prop_assert_eq!(write_graph(&read_graph(&text, f).unwrap(), f), text);
            }
        }
    }
}
