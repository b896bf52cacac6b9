//! Text formats: a plain edge list and graph6.
//!
//! graph6 reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use crate::error::ParseError;
use crate::graph::Graph;

/// Parses `"n m"` followed by `m` lines of `"u v"`.
///
/// Tokens are whitespace separated; CRLF line endings and blank lines are
/// tolerated. Line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let [order, size] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(size);
    let mut seen = std::collections::HashSet::new();
    for (line, text) in lines.by_ref().take(size) {
        let [u, v] = parse_pair(line, text)?;
        for vertex in [u, v] {
            if vertex >= order {
                return Err(ParseError::IndexOutOfRange {
                    line,
                    vertex,
                    order,
                });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push(key);
    }
    if edges.len() < size {
        return Err(ParseError::Malformed {
            line: header_line,
            reason: format!("header announces {size} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Malformed {
            line,
            reason: format!("more than the announced {size} edges"),
        });
    }
    Ok(Graph::new(order, edges).expect("edges validated above"))
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], ParseError> {
    let malformed = |reason: String| ParseError::Malformed { line, reason };
    let mut tokens = text.split_whitespace();
    let mut out = [0; 2];
    for slot in &mut out {
        let tok = tokens
            .next()
            .ok_or_else(|| malformed("expected two integers".into()))?;
        *slot = tok
            .parse()
            .map_err(|_| malformed(format!("not a non-negative integer: {tok:?}")))?;
    }
    if let Some(extra) = tokens.next() {
        return Err(malformed(format!("unexpected token {extra:?}")));
    }
    Ok(out)
}

/// Writes a graph in the edge-list format read by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. An optional `>>graph6<<` prefix is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    if line.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut data = Vec::with_capacity(line.len());
    for (position, ch) in line.chars().enumerate() {
        match ch as u32 {
            63..=126 => data.push(ch as u8 - 63),
            _ => return Err(ParseError::BadCharacter { position, ch }),
        }
    }

    let (order, header_len) = if data[0] != 63 {
        (data[0] as usize, 1)
    } else if data.len() >= 2 && data[1] != 63 {
        (read_big_endian(&data, 1, 3)?, 4)
    } else {
        (read_big_endian(&data, 2, 6)?, 8)
    };

    let bits = order * order.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &data[header_len..];
    if body.len() < expected {
        return Err(ParseError::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(ParseError::TrailingData {
            found: body.len() - expected,
        });
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if (body[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(order, edges).expect("graph6 upper triangle is simple"))
}

fn read_big_endian(data: &[u8], start: usize, len: usize) -> Result<usize, ParseError> {
    let chunk = data.get(start..start + len).ok_or(ParseError::Truncated {
        expected: start + len,
        found: data.len(),
    })?;
    Ok(chunk.iter().fold(0usize, |acc, &d| (acc << 6) | d as usize))
}

/// Encodes a graph as a single graph6 line (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut data: Vec<u8> = Vec::new();
    if n <= 62 {
        data.push(n as u8);
    } else if n <= 258_047 {
        data.push(63);
        data.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8));
    } else {
        data.extend([63, 63]);
        data.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let mut body = vec![0u8; bits.div_ceil(6)];
    // column-major upper triangle: bit index of (i, j), i < j, is j(j-1)/2 + i
    for &(i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        body[k / 6] |= 1 << (5 - k % 6);
    }
    data.extend(body);
    data.into_iter().map(|d| (d + 63) as char).collect()
}

/// Parses a file with one graph6 graph per line; blank lines are skipped.
/// Each entry carries its 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Vec<(usize, Result<Graph, ParseError>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3, Family::Path(3).build().unwrap());
        assert_eq!(parse_edge_list("1 0").unwrap(), Graph::empty(1));
        assert_eq!(
            parse_edge_list("2 1\n0 0"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
    }

    #[test]
    fn edge_list_crlf_and_blank_lines() {
        let g = parse_edge_list("3 2\r\n\r\n2 1\r\n0   1\r\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_errors_are_distinct() {
        assert_eq!(parse_edge_list(""), Err(ParseError::Empty));
        assert!(matches!(
            parse_edge_list("3 1\n0 x"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("3 1\n0 3"),
            Err(ParseError::IndexOutOfRange {
                line: 2,
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
        assert!(matches!(
            parse_edge_list("3 2\n0 1"),
            Err(ParseError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2"),
            Err(ParseError::Malformed { line: 3, .. })
        ));
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Family::Complete(2).build().unwrap());
        assert_eq!(parse_graph6("B?").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().size(), 1);
    }

    #[test]
    fn graph6_hand_decoded() {
        // C5: bits 0, 2, 5, 6, 9 of the column-major triangle -> 101001 100100
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);
        // K4: n = 4 -> 'C', six bits all set -> '~'
        assert_eq!(to_graph6(&Family::Complete(4).build().unwrap()), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), Family::Complete(4).build().unwrap());
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(
            parse_graph6("A "),
            Err(ParseError::BadCharacter { position: 1, ch: ' ' })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(ParseError::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(parse_graph6("A_?"), Err(ParseError::TrailingData { found: 1 }));
        assert!(matches!(parse_graph6("~"), Err(ParseError::Truncated { .. })));
    }

    #[test]
    fn graph6_large_header() {
        let g = Family::Path(70).build().unwrap();
        let line = to_graph6(&g);
        assert!(line.starts_with('~'));
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn batch_reports_bad_lines_and_continues() {
        let parsed = parse_graph6_lines("A_\nnot graph6 !\n\nB?\n");
        assert_eq!(parsed.len(), 3);
        assert!(parsed[0].1.is_ok());
        assert_eq!(parsed[1].0, 2);
        assert!(parsed[1].1.is_err());
        assert_eq!(parsed[2].0, 4);
        assert!(parsed[2].1.is_ok());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..20).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
                .prop_map(move |edges| Graph::new(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
