//! The `jfg v1` text format.
//!
//! ```text
//! jfg 1 <n> <r>
//! colour 1 <m_1>
//! <u> <v>
//! ...
//! colour r <m_r>
//! ...
//! ```
//!
//! Edges satisfy `0 <= u < v < n` and appear in lexicographic order within
//! each colour; colours appear in ascending order.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use thiserror::Error;

use super::{Edge, GraphError, RFoldGraph, Vertex, MAX_COLOURS};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

pub fn to_jfg_string(g: &RFoldGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.total_edges());
    let _ = writeln!(out, "jfg 1 {} {}", g.n(), g.r());
    for c in 0..g.r() {
        let _ = writeln!(out, "colour {} {}", c + 1, g.edge_count(c));
        for (u, v) in g.edges(c).iter() {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}

pub fn write_jfg<W: Write>(g: &RFoldGraph, mut w: W) -> io::Result<()> {
    writeln!(w, "jfg 1 {} {}", g.n(), g.r())?;
    for c in 0..g.r() {
        writeln!(w, "colour {} {}", c + 1, g.edge_count(c))?;
        for (u, v) in g.edges(c).iter() {
            writeln!(w, "{u} {v}")?;
        }
    }
    w.flush()
}

pub fn write_jfg_file(g: &RFoldGraph, path: &Path) -> io::Result<()> {
    let file = std::fs::File::create(path)?;
    write_jfg(g, io::BufWriter::new(file))
}

pub fn read_jfg(path: &Path) -> Result<RFoldGraph, FormatError> {
    parse_jfg(&std::fs::read_to_string(path)?)
}

fn parse_fields<const N: usize>(line_no: usize, line: &str) -> Result<[&str; N], FormatError> {
    let fields: Vec<&str> = line.split_ascii_whitespace().collect();
    fields
        .try_into()
        .map_err(|f: Vec<&str>| syntax(line_no, format!("expected {N} fields, found {}", f.len())))
}

fn parse_num<T: std::str::FromStr>(line_no: usize, s: &str, what: &str) -> Result<T, FormatError> {
    s.parse()
        .map_err(|_| syntax(line_no, format!("invalid {what} `{s}`")))
}

/// Parses a `jfg v1` document.
///
/// Rejects malformed lines, vertices outside `0..n`, non-canonical or
/// out-of-order edges, duplicates, and section counts that do not match.
pub fn parse_jfg(text: &str) -> Result<RFoldGraph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (line_no, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let [magic, version, n, r] = parse_fields::<4>(line_no, header)?;
    if magic != "jfg" || version != "1" {
        return Err(syntax(line_no, "expected header `jfg 1 <n> <r>`"));
    }
    let n: usize = parse_num(line_no, n, "vertex count")?;
    let r: usize = parse_num(line_no, r, "colour count")?;
    if r == 0 || r > MAX_COLOURS {
        return Err(FormatError::Graph {
            line: line_no,
            source: if r == 0 {
                GraphError::NoColours
            } else {
                GraphError::TooManyColours(r)
            },
        });
    }
    if n > Vertex::MAX as usize {
        return Err(FormatError::Graph {
            line: line_no,
            source: GraphError::TooManyVertices(n),
        });
    }

    let mut colours: Vec<Vec<Edge>> = Vec::with_capacity(r);
    for colour in 1..=r {
        let (line_no, sect) = lines
            .next()
            .ok_or_else(|| syntax(line_no + 1, format!("missing section for colour {colour}")))?;
        let [kw, idx, m] = parse_fields::<3>(line_no, sect)?;
        if kw != "colour" {
            return Err(syntax(line_no, "expected `colour <i> <m_i>`"));
        }
        let idx: usize = parse_num(line_no, idx, "colour index")?;
        if idx != colour {
            return Err(syntax(line_no, format!("expected colour {colour}, found {idx}")));
        }
        let m: usize = parse_num(line_no, m, "edge count")?;
        let mut edges: Vec<Edge> = Vec::with_capacity(m.min(1 << 20));
        for k in 0..m {
            let (line_no, line) = lines.next().ok_or_else(|| {
                syntax(line_no + k + 1, format!("colour {colour} declares {m} edges, found {k}"))
            })?;
            let [u, v] = parse_fields::<2>(line_no, line)
                .map_err(|_| syntax(line_no, format!("colour {colour} declares {m} edges, found {k}")))?;
            let u: Vertex = parse_num(line_no, u, "vertex")?;
            let v: Vertex = parse_num(line_no, v, "vertex")?;
            if u as usize >= n || v as usize >= n {
                return Err(FormatError::Graph {
                    line: line_no,
                    source: GraphError::VertexOutOfRange { u, v, n },
                });
            }
            if u == v {
                return Err(FormatError::Graph {
                    line: line_no,
                    source: GraphError::SelfLoop(u),
                });
            }
            if u > v {
                return Err(syntax(line_no, format!("edge `{u} {v}` is not written as u < v")));
            }
            if let Some(&last) = edges.last() {
                if last == (u, v) {
                    return Err(FormatError::Graph {
                        line: line_no,
                        source: GraphError::DuplicateEdge { colour: colour - 1, u, v },
                    });
                }
                if last > (u, v) {
                    return Err(syntax(line_no, "edges are not in lexicographic order"));
                }
            }
            edges.push((u, v));
        }
        colours.push(edges);
    }
    for (line_no, rest) in lines {
        if !rest.trim().is_empty() {
            return Err(syntax(line_no, "trailing content after the last colour section"));
        }
    }
    Ok(RFoldGraph::from_sorted_unchecked(n, colours))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RFoldGraph {
        RFoldGraph::from_edges(4, vec![vec![(0, 1), (2, 3), (0, 2)], vec![(0, 1), (2, 3), (1, 3)]]).unwrap()
    }

    #[test]
    fn writes_expected_text() {
        let text = to_jfg_string(&sample());
        assert_eq!(
            text,
            "jfg 1 4 2\ncolour 1 3\n0 1\n0 2\n2 3\ncolour 2 3\n0 1\n1 3\n2 3\n"
        );
        let mut buf = Vec::new();
        write_jfg(&sample(), &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), text);
    }

    #[test]
    fn parses_what_it_writes() {
        let g = sample();
        assert_eq!(parse_jfg(&to_jfg_string(&g)).unwrap(), g);
        let empty = RFoldGraph::empty(1, 3).unwrap();
        assert_eq!(parse_jfg(&to_jfg_string(&empty)).unwrap(), empty);
    }

    fn err(text: &str) -> String {
        parse_jfg(text).unwrap_err().to_string()
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(err("").contains("empty input"));
        assert!(err("jfg 2 3 1\ncolour 1 0\n").contains("header"));
        assert!(err("jfg 1 3 1\ncolour 1 1\n0 3\n").contains("outside"));
        assert!(err("jfg 1 3 1\ncolour 1 2\n0 1\n0 1\n").contains("duplicate"));
        assert!(err("jfg 1 3 1\ncolour 1 2\n0 1\n").contains("declares 2 edges, found 1"));
        assert!(err("jfg 1 3 1\ncolour 1 1\n0 1\n1 2\n").contains("trailing"));
        assert!(err("jfg 1 3 2\ncolour 1 0\n").contains("missing section"));
        assert!(err("jfg 1 3 2\ncolour 2 0\ncolour 1 0\n").contains("expected colour 1"));
        assert!(err("jfg 1 3 1\ncolour 1 1\n1 0\n").contains("u < v"));
        assert!(err("jfg 1 3 1\ncolour 1 2\n1 2\n0 1\n").contains("lexicographic"));
        assert!(err("jfg 1 3 1\ncolour 1 1\n1 1\n").contains("self-loop"));
        assert!(err("jfg 1 3 1\ncolour 1 1\n0 x\n").contains("invalid vertex"));
        assert!(err("jfg 1 3 0\n").contains("at least one colour"));
        assert!(err("jfg 1 3 1\ncolour 1 1\n0 1 2\n").contains("declares 1 edges, found 0"));
    }

    #[test]
    fn round_trips_through_a_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.jfg");
        write_jfg_file(&sample(), &path).unwrap();
        assert_eq!(read_jfg(&path).unwrap(), sample());
        assert!(matches!(read_jfg(&dir.path().join("missing.jfg")), Err(FormatError::Io(_))));
    }
}
