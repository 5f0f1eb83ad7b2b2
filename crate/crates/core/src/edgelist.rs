//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n e
//! u v
//! ...
//! ```
//!
//! Labels are 0-based. Blank lines and lines starting with `#` are skipped.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut num = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse { line: lineno, msg: format!("missing {what}") })?;
        tok.parse().map_err(|_| Error::Parse { line: lineno, msg: format!("bad {what} {tok:?}") })
    };
    let a = num("first field")?;
    let b = num("second field")?;
    if it.next().is_some() {
        return Err(Error::Parse { line: lineno, msg: "expected two fields".into() });
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let (n, e) = parse_pair(header, hl)?;
    let edges = lines.map(|(i, l)| parse_pair(l, i)).collect::<Result<Vec<_>>>()?;
    if edges.len() != e {
        return Err(Error::Parse { line: hl, msg: format!("header declares {e} edges, found {}", edges.len()) });
    }
    Graph::new(n, &edges)
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_file(path: &std::path::Path) -> std::io::Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse(&text).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let g = parse("# triangle\n3 3\n\n0 1\n1 2\n# closing edge\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::cycle(5);
        assert_eq!(write(&g), "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse(&write(&g)).unwrap(), g);
        assert_eq!(write(&Graph::empty(3)), "3 0\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse("2 1\n0 0\n"), Err(Error::Loop(0)));
    }
}
