//! The canonical graph text format.
//!
//! ```text
//! # comments anywhere
//! n m
//! u v        (m lines, 0 <= u < v < n, strictly sorted)
//! ```

use std::fmt;

use domlab_core::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    /// 1-based line, or 0 for end of input.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "at end of input: {}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), FormatError> {
    let mut it = text.split_whitespace();
    let mut num = || -> Result<usize, FormatError> {
        let tok = it
            .next()
            .ok_or_else(|| err(line, "expected two integers"))?;
        tok.parse()
            .map_err(|_| err(line, format!("not a non-negative integer: {tok:?}")))
    };
    let a = num()?;
    let b = num()?;
    if it.next().is_some() {
        return Err(err(line, "trailing tokens"));
    }
    Ok((a, b))
}

/// Reads a graph, rejecting anything a writer would not have produced.
pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = data.next().ok_or_else(|| err(0, "missing header line"))?;
    let (n, m) = pair(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last: Option<(usize, usize)> = None;
    for (ln, l) in data.by_ref().take(m) {
        let (u, v) = pair(ln, l)?;
        if u >= v {
            return Err(err(ln, format!("edge {u} {v} must have u < v")));
        }
        if v >= n {
            return Err(err(ln, format!("vertex {v} out of range for n = {n}")));
        }
        if last.is_some_and(|p| p >= (u, v)) {
            return Err(err(ln, "edges must be strictly sorted"));
        }
        last = Some((u, v));
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(err(0, format!("expected {m} edges, found {}", edges.len())));
    }
    if let Some((ln, _)) = data.next() {
        return Err(err(ln, format!("more than the declared {m} edges")));
    }
    Graph::from_edges(n, edges).map_err(|e| err(0, e.to_string()))
}

/// Writes the canonical form. No comments are emitted, so reading and
/// writing again reproduces the bytes.
pub fn write_graph(g: &Graph) -> String {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_unstable();
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.order(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One set per line, ascending indices separated by spaces.
pub fn write_witnesses<'a>(sets: impl IntoIterator<Item = &'a VertexSet>) -> String {
    sets.into_iter().map(|s| format!("{s}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_with_comments() {
        let g = read_graph("# triangle\n3 3\n0 1\n# mid\n0 2\n1 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_violations() {
        for bad in [
            "",
            "3",
            "3 1\n1 0\n",
            "3 1\n0 3\n",
            "3 2\n0 2\n0 1\n",
            "3 2\n0 1\n0 1\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0 1 2\n",
            "3 1\n0 -1\n",
        ] {
            assert!(read_graph(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn writer_sorts() {
        let g = Graph::from_edges(4, [(2, 3), (0, 3), (0, 1)]).unwrap();
        assert_eq!(write_graph(&g), "4 3\n0 1\n0 3\n2 3\n");
    }

    #[test]
    fn empty_graph() {
        let g = read_graph("0 0\n").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(write_graph(&g), "0 0\n");
    }
}
