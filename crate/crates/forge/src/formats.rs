//! Plain-text formats for sign matrices (`.pm`) and graphs (`.adj`).
//!
//! Sign matrix: the order on line 1, then one line of `+`/`-` per row.
//! Graph: the vertex count on line 1, then one `u v` line per edge (1-based,
//! `u < v`, sorted). Both end with a newline and nothing else.

use ramsey_forge_core::hadamard::SignMatrix;
use ramsey_forge_core::srg::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing trailing newline")]
    NoTrailingNewline,
    #[error(transparent)]
    Core(#[from] ramsey_forge_core::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn lines(text: &str) -> Result<Vec<&str>, FormatError> {
    let body = text.strip_suffix('\n').ok_or(FormatError::NoTrailingNewline)?;
    Ok(body.split('\n').collect())
}

fn header(first: Option<&&str>) -> Result<usize, FormatError> {
    let first = first.ok_or_else(|| syntax(1, "empty input"))?;
    if first.is_empty() || !first.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(1, format!("expected a decimal count, got {first:?}")));
    }
    first.parse().map_err(|_| syntax(1, "count out of range"))
}

pub fn write_sign_matrix(h: &SignMatrix) -> String {
    let n = h.order();
    let mut out = String::with_capacity((n + 1) * (n + 1) + 8);
    out.push_str(&n.to_string());
    out.push('\n');
    for row in h.rows() {
        out.extend(row.iter().map(|&e| if e == 1 { '+' } else { '-' }));
        out.push('\n');
    }
    out
}

pub fn parse_sign_matrix(text: &str) -> Result<SignMatrix, FormatError> {
    let lines = lines(text)?;
    let n = header(lines.first())?;
    if n == 0 {
        return Err(syntax(1, "order must be positive"));
    }
    if lines.len() != n + 1 {
        return Err(syntax(lines.len().min(n + 1), format!("expected {n} rows, found {}", lines.len() - 1)));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (idx, row) in lines[1..].iter().enumerate() {
        if row.len() != n {
            return Err(syntax(idx + 2, format!("expected {n} characters, found {}", row.len())));
        }
        for ch in row.bytes() {
            entries.push(match ch {
                b'+' => 1,
                b'-' => -1,
                other => return Err(syntax(idx + 2, format!("unexpected character {:?}", other as char))),
            });
        }
    }
    Ok(SignMatrix::new(n, entries)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let lines = lines(text)?;
    let n = header(lines.first())?;
    let mut edges = Vec::with_capacity(lines.len() - 1);
    let mut prev: Option<(usize, usize)> = None;
    for (idx, line) in lines[1..].iter().enumerate() {
        let lineno = idx + 2;
        let mut parts = line.split(' ');
        let mut field = || -> Result<usize, FormatError> {
            let f = parts.next().ok_or_else(|| syntax(lineno, "expected \"u v\""))?;
            if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(lineno, format!("bad vertex {f:?}")));
            }
            f.parse().map_err(|_| syntax(lineno, "vertex out of range"))
        };
        let (u, v) = (field()?, field()?);
        if parts.next().is_some() {
            return Err(syntax(lineno, "trailing fields"));
        }
        if !(1 <= u && u < v && v <= n) {
            return Err(syntax(lineno, format!("edge {u} {v} needs 1 <= u < v <= {n}")));
        }
        if prev.is_some_and(|p| p >= (u, v)) {
            return Err(syntax(lineno, "edges must be strictly increasing"));
        }
        prev = Some((u, v));
        edges.push((u - 1, v - 1));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramsey_forge_core::hadamard::sylvester;

    #[test]
    fn sign_matrix_text() {
        let h = sylvester(1).unwrap();
        assert_eq!(write_sign_matrix(&h), "2\n++\n+-\n");
        assert_eq!(parse_sign_matrix("2\n++\n+-\n").unwrap(), h);
        assert_eq!(parse_sign_matrix("2\n++\n+-"), Err(FormatError::NoTrailingNewline));
        assert!(parse_sign_matrix("2\n++\n+ -\n").is_err());
        assert!(parse_sign_matrix("2\n++\n+-\n\n").is_err());
        assert!(parse_sign_matrix("3\n++\n+-\n").is_err());
        assert!(parse_sign_matrix("+2\n++\n+-\n").is_err());
    }

    #[test]
    fn graph_text() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "4\n1 2\n1 4\n2 3\n3 4\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert!(parse_graph("4\n1 4\n1 2\n").is_err());
        assert!(parse_graph("4\n2 1\n").is_err());
        assert!(parse_graph("4\n1 5\n").is_err());
        assert!(parse_graph("4\n1 2\n1 2\n").is_err());
        assert_eq!(parse_graph("3\n").unwrap().edge_count(), 0);
    }
}
