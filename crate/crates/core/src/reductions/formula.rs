use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monotone 3-CNF formula read with not-all-equal semantics: every clause
/// needs a true and a false literal. Variables are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NaeFormula {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeFormula {
    /// With `strict`, a clause mentioning a variable twice is rejected.
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>, strict: bool) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(&x) = c.iter().find(|&&x| x >= num_vars) {
                return Err(Error::MalformedFormula(format!(
                    "clause {} uses variable {} but there are {num_vars}",
                    j + 1,
                    x + 1
                )));
            }
            if strict && (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) {
                return Err(Error::MalformedFormula(format!(
                    "clause {} repeats a variable",
                    j + 1
                )));
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Parses `p nae <vars> <clauses>` followed by one clause per line as
    /// three 1-based variables and an optional terminating `0`. Lines
    /// starting with `c` are comments.
    pub fn parse(text: &str, strict: bool) -> Result<Self> {
        let bad = |line: usize, msg: String| Error::MalformedFormula(format!("line {line}: {msg}"));
        let mut header = None;
        let mut clauses = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let tokens: Vec<&str> = raw.split_whitespace().collect();
            match tokens.first() {
                None => continue,
                Some(&"c") => continue,
                Some(&"p") => {
                    if header.is_some() {
                        return Err(bad(line, "duplicate header".into()));
                    }
                    let [_, "nae", vars, count] = tokens[..] else {
                        return Err(bad(line, "expected `p nae <vars> <clauses>`".into()));
                    };
                    let num = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| bad(line, format!("invalid count `{s}`")))
                    };
                    header = Some((num(vars)?, num(count)?));
                }
                Some(_) => {
                    let Some((num_vars, _)) = header else {
                        return Err(bad(line, "clause before header".into()));
                    };
                    let body = match tokens.last() {
                        Some(&"0") => &tokens[..tokens.len() - 1],
                        _ => &tokens[..],
                    };
                    if body.len() != 3 {
                        return Err(bad(
                            line,
                            format!("a clause needs 3 literals, found {}", body.len()),
                        ));
                    }
                    let mut clause = [0; 3];
                    for (slot, tok) in clause.iter_mut().zip(body) {
                        let lit: i64 = tok
                            .parse()
                            .map_err(|_| bad(line, format!("invalid literal `{tok}`")))?;
                        if lit <= 0 {
                            return Err(bad(
                                line,
                                format!("literal {lit} is not a positive variable"),
                            ));
                        }
                        if lit as usize > num_vars {
                            return Err(bad(line, format!("variable {lit} exceeds {num_vars}")));
                        }
                        *slot = lit as usize - 1;
                    }
                    clauses.push(clause);
                }
            }
        }
        let Some((num_vars, count)) = header else {
            return Err(Error::MalformedFormula("missing `p nae` header".into()));
        };
        if clauses.len() != count {
            return Err(Error::MalformedFormula(format!(
                "header declares {count} clauses, found {}",
                clauses.len()
            )));
        }
        Self::new(num_vars, clauses, strict)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("p nae {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            writeln!(s, "{} {} {} 0", c[0] + 1, c[1] + 1, c[2] + 1).unwrap();
        }
        s
    }

    /// Every clause has a true and a false literal.
    pub fn is_nae_satisfied(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|c| {
                let trues = c.iter().filter(|&&x| assignment[x]).count();
                trues == 1 || trues == 2
            })
    }

    /// The first satisfying assignment in binary counting order (variable 0
    /// least significant), by trying all of them.
    pub fn brute_force(&self) -> Option<Vec<bool>> {
        assert!(
            self.num_vars < 32,
            "exhaustive search limited to 31 variables"
        );
        (0u32..1 << self.num_vars)
            .map(|mask| {
                (0..self.num_vars)
                    .map(|i| mask >> i & 1 == 1)
                    .collect::<Vec<_>>()
            })
            .find(|a| self.is_nae_satisfied(a))
    }
}
