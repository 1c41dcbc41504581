//! Plain-text graph files.
//!
//! ```text
//! # comment
//! n 6
//! 1 2
//! 2 3
//! ```
//!
//! One edge per line as two 1-based vertex indices. The optional `n <d>`
//! header fixes the vertex count; without it the largest index is used.

use edgering::graph::Graph;
use edgering::vertex_set::MAX_VERTICES;

use crate::error::CliError;

fn parse_index(tok: &str, line: usize) -> Result<usize, CliError> {
    tok.parse::<usize>().map_err(|_| CliError::Parse {
        line,
        message: format!("expected a positive integer, got {tok:?}"),
    })
}

pub fn parse(text: &str) -> Result<Graph, CliError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            ["n", d] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(CliError::Parse {
                        line,
                        message: "the n header must come first and only once".into(),
                    });
                }
                declared = Some((parse_index(d, line)?, line));
            }
            [a, b] => {
                let (u, v) = (parse_index(a, line)?, parse_index(b, line)?);
                if u == 0 || v == 0 {
                    return Err(CliError::Parse {
                        line,
                        message: "vertex indices start at 1".into(),
                    });
                }
                if u == v {
                    return Err(CliError::Parse {
                        line,
                        message: format!("self-loop at vertex {u}"),
                    });
                }
                if let Some((d, _)) = declared {
                    if u > d || v > d {
                        return Err(CliError::Parse {
                            line,
                            message: format!("vertex index above the declared n {d}"),
                        });
                    }
                }
                edges.push((u - 1, v - 1, line));
            }
            _ => {
                return Err(CliError::Parse {
                    line,
                    message: format!("expected \"i j\" or \"n d\", got {content:?}"),
                })
            }
        }
    }
    let order = match declared {
        Some((d, _)) => d,
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    if order > MAX_VERTICES {
        return Err(CliError::Capacity(format!(
            "{order} vertices, at most {MAX_VERTICES} supported"
        )));
    }
    Ok(Graph::new(order, edges.into_iter().map(|(u, v, _)| (u, v)))?)
}

pub fn serialize(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn read(path: &str) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use edgering::graph::named::*;

    #[test]
    fn parses_with_and_without_header() {
        let g = parse("# hexagon\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n").unwrap();
        assert_eq!(g, cycle(6));
        let g = parse("n 8\n1 2 # edge\n\n").unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.size(), 1);
        assert_eq!(parse("").unwrap().order(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        assert_eq!(parse("1 2\n2 1\n1 2\n").unwrap().size(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        let cases = [
            ("1 2\n2 x\n", 2),
            ("1 2\n\n3 3\n", 3),
            ("n 3\n1 4\n", 2),
            ("1 2\nn 4\n", 2),
            ("0 1\n", 1),
            ("1 2 3\n", 1),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(CliError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn oversized_is_a_capacity_error() {
        assert!(matches!(parse("n 65\n1 2\n"), Err(CliError::Capacity(_))));
        assert!(matches!(parse("1 70\n"), Err(CliError::Capacity(_))));
    }

    #[test]
    fn round_trip_named_graphs() {
        for g in [petersen(), cube(), complete_bipartite(2, 5), path(3), Graph::empty(3)] {
            assert_eq!(parse(&serialize(&g)).unwrap(), g);
        }
    }
}
