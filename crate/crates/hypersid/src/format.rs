//! Plain-text hypergraph files.
//!
//! ```text
//! # optional comments anywhere
//! r n m
//! parts c_0 c_1 ... c_{n-1}     (optional, directly after the header)
//! v_1 v_2 ... v_r               (m edge lines, 0-based vertices)
//! ```

use std::fmt;
use std::fmt::Write as _;

use hypersid_core::{Hypergraph, PartiteHypergraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed file: the hypergraph and, when present, its partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphFile {
    pub hypergraph: Hypergraph,
    pub parts: Option<Vec<u8>>,
}

impl HypergraphFile {
    pub fn plain(hypergraph: Hypergraph) -> Self {
        HypergraphFile { hypergraph, parts: None }
    }

    pub fn partite(p: &PartiteHypergraph) -> Self {
        HypergraphFile { hypergraph: p.hypergraph().clone(), parts: Some(p.parts().to_vec()) }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: line[..s].chars().count() + 1 });
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn number<T: std::str::FromStr>(tok: &Token<'_>, line: usize, what: &str) -> Result<T, ParseError> {
    tok.text.parse().map_err(|_| err(line, tok.column, format!("expected {}, found `{}`", what, tok.text)))
}

pub fn parse_hypergraph(text: &str) -> Result<HypergraphFile, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut parts: Option<Vec<u8>> = None;
    let mut edges: Vec<Vec<Vertex>> = Vec::new();
    let mut seen = std::collections::BTreeMap::new();
    let mut last_line = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        if toks.is_empty() {
            continue;
        }
        let Some((r, n, m)) = header else {
            if toks.len() != 3 {
                let col = toks.get(3).map_or(toks.last().unwrap().column, |t| t.column);
                return Err(err(line, col, format!("header needs `r n m`, found {} field(s)", toks.len())));
            }
            let r: usize = number(&toks[0], line, "uniformity")?;
            if r == 0 {
                return Err(err(line, toks[0].column, "uniformity must be at least 1"));
            }
            let n = number(&toks[1], line, "vertex count")?;
            let m = number(&toks[2], line, "edge count")?;
            header = Some((r, n, m));
            continue;
        };
        if toks[0].text == "parts" {
            if parts.is_some() || !edges.is_empty() {
                return Err(err(line, toks[0].column, "`parts` must come once, directly after the header"));
            }
            if toks.len() != n + 1 {
                return Err(err(line, toks[0].column, format!("`parts` needs {} classes, found {}", n, toks.len() - 1)));
            }
            let mut classes = Vec::with_capacity(n);
            for t in &toks[1..] {
                let c: u8 = number(t, line, "class index")?;
                if c == 0 || c as usize > r {
                    return Err(err(line, t.column, format!("class {} outside 1..={}", c, r)));
                }
                classes.push(c);
            }
            parts = Some(classes);
            continue;
        }
        if toks.len() != r {
            let col = toks.get(r).map_or(toks.last().unwrap().column, |t| t.column);
            return Err(err(line, col, format!("edge needs {} vertices, found {}", r, toks.len())));
        }
        if edges.len() == m {
            return Err(err(line, toks[0].column, format!("more than the {} edges declared in the header", m)));
        }
        let mut edge = Vec::with_capacity(r);
        for t in &toks {
            let v: Vertex = number(t, line, "vertex")?;
            if v as usize >= n {
                return Err(err(line, t.column, format!("vertex {} outside 0..{}", v, n)));
            }
            if edge.contains(&v) {
                return Err(err(line, t.column, format!("vertex {} repeated in edge", v)));
            }
            edge.push(v);
        }
        edge.sort_unstable();
        if let Some(first) = seen.insert(edge.clone(), line) {
            return Err(err(line, toks[0].column, format!("duplicate edge {:?} (first on line {})", edge, first)));
        }
        edges.push(edge);
    }
    let Some((r, n, m)) = header else {
        return Err(err(last_line.max(1), 1, "missing header `r n m`"));
    };
    if edges.len() != m {
        return Err(err(last_line.max(1), 1, format!("header declares {} edges, found {}", m, edges.len())));
    }
    let hypergraph = Hypergraph::new(r, n, &edges).map_err(|e| err(1, 1, e.to_string()))?;
    if let Some(p) = &parts {
        PartiteHypergraph::new(hypergraph.clone(), p.clone()).map_err(|e| err(1, 1, format!("invalid partition: {}", e)))?;
    }
    Ok(HypergraphFile { hypergraph, parts })
}

/// Canonical text: header, optional `parts` line, edges in sorted order.
pub fn write_hypergraph(file: &HypergraphFile) -> String {
    let h = &file.hypergraph;
    let mut out = format!("{} {} {}\n", h.uniformity(), h.vertex_count(), h.edge_count());
    if let Some(p) = &file.parts {
        out.push_str("parts");
        for c in p {
            write!(out, " {}", c).unwrap();
        }
        out.push('\n');
    }
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagnostics_point_at_the_token() {
        let e = parse_hypergraph("2 3 2\n0 1\n1 7\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_hypergraph("# c\n2 3 2\n0 1\n 1  0\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 2));
        assert!(e.message.contains("duplicate"));
        let e = parse_hypergraph("2 3\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_hypergraph("3 4 1\n0 1 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse_hypergraph("2 3 2\n0 1\n").unwrap_err();
        assert!(e.message.contains("declares 2"));
    }

    #[test]
    fn parts_line() {
        let f = parse_hypergraph("2 4 2\nparts 1 2 1 2\n0 1\n2 3\n").unwrap();
        assert_eq!(f.parts, Some(vec![1, 2, 1, 2]));
        assert!(parse_hypergraph("2 2 1\nparts 1 1\n0 1\n").is_err());
        assert!(parse_hypergraph("2 2 1\nparts 1 3\n0 1\n").is_err());
    }
}
