use std::io::BufRead;

use super::Graph;
use crate::error::{Error, Result};

/// Reads the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and lines starting with `#` are skipped. Repeated edges are
/// merged silently; self-loops are an error.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut header_line = 0;
    let mut edges = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let (a, b) = two_ints(text).ok_or_else(|| Error::Parse {
            line: lineno,
            message: format!("expected two non-negative integers, got {text:?}"),
        })?;
        match header {
            None => {
                header = Some((a, b));
                header_line = lineno;
            }
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("vertex id out of range 0..{n}"),
                    });
                }
                if a == b {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("self-loop at vertex {a}"),
                    });
                }
                edges.push((a, b));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing header line \"n m\"".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

fn two_ints(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Graph> {
        parse_edge_list(s.as_bytes())
    }

    #[test]
    fn path_on_three() {
        let g = parse("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn single_vertex() {
        let g = parse("1 0").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
    }

    #[test]
    fn complete_four() {
        let g = parse("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g.size(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn comments_and_duplicates() {
        let g = parse("# header follows\n3 3\n0 1\n# mid\n1 0\n1 2\n").unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn errors_name_the_line() {
        match parse("3 1\n0 0") {
            Err(Error::Parse { line: 2, message }) => assert!(message.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
        match parse("3 1\n0 7") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse("3 1\n0 x") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("").is_err());
    }
}
