//! Coloring text format: a line with `k`, then one 0-based color per line in
//! vertex order.

use std::fmt::Write as _;

use super::Coloring;
use crate::error::{Error, Result};

pub fn read_coloring(text: &str) -> Result<Coloring> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse = |line: usize, tok: &str, what: &str| -> Result<usize> {
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid {what} `{tok}`"),
        })
    };
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing color count".into(),
    })?;
    let k = parse(hline, header, "color count")?;
    let mut assign = Vec::new();
    for (line, tok) in lines {
        let c = parse(line, tok, "color")?;
        if c >= k {
            return Err(Error::Parse {
                line,
                message: format!("color {c} is not below k = {k}"),
            });
        }
        assign.push(c);
    }
    Coloring::new(k, assign)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut s = format!("{}\n", c.k());
    for &x in c.colors() {
        writeln!(s, "{x}").unwrap();
    }
    s
}
