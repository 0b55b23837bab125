//! graph6 text format (one graph per line) and a JSON adjacency-list
//! alternative `{"n": int, "edges": [[i, j], ...]}`.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};
use crate::Error;

const HEADER: &str = ">>graph6<<";

/// Encodes a graph as a single graph6 line (no trailing newline).
pub fn graph6_write(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        // 18-bit order, '~' prefix, three sextets big-endian
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut sextet = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            sextet = (sextet << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((sextet + 63) as char);
                sextet = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((sextet << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 line. A leading `>>graph6<<` header is accepted.
pub fn graph6_read(line: &str) -> Result<Graph, Error> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty line".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {bad:#04x} outside printable graph6 range"
        )));
    }

    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::MalformedGraph6(
                "orders above 258047 are not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::MalformedGraph6("truncated order field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::MalformedGraph6("graph of order 0".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_VERTICES });
    }

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if bytes.len() - pos != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            bytes.len() - pos
        )));
    }

    let mut b = GraphBuilder::new(n)?;
    let mut sextet = 0u8;
    let mut remaining = 0;
    for j in 1..n {
        for i in 0..j {
            if remaining == 0 {
                sextet = bytes[pos] - 63;
                pos += 1;
                remaining = 6;
            }
            if sextet & 0x20 != 0 {
                b.add_edge(i, j)?;
            }
            sextet <<= 1;
            remaining -= 1;
        }
    }
    Ok(b.build())
}

/// Decodes every non-empty line of a graph6 stream.
pub fn graph6_read_all(text: &str) -> Result<Vec<Graph>, Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(graph6_read)
        .collect()
}

#[derive(Serialize, Deserialize)]
struct AdjacencyJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Reads the JSON adjacency-list form `{"n":..., "edges":[[i,j],...]}`.
pub fn json_read(text: &str) -> Result<Graph, Error> {
    let parsed: AdjacencyJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidParameter(format!("bad adjacency JSON: {e}")))?;
    Graph::from_edges(parsed.n, &parsed.edges)
}

pub fn json_write(g: &Graph) -> String {
    serde_json::to_string(&AdjacencyJson { n: g.order(), edges: g.edges() })
        .expect("adjacency serialization")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, pseudo_sphere};

    // hand-encoded per the format definition: order byte 3+63='B',
    // triangle bits 111 padded to 111000 -> 56+63 = 'w'
    #[test]
    fn k3_encodes_to_bw() {
        assert_eq!(graph6_write(&complete(3).unwrap()), "Bw");
    }

    #[test]
    fn round_trip_small_graphs() {
        for g in [
            path(5).unwrap(),
            cycle(7).unwrap(),
            complete(1).unwrap(),
            pseudo_sphere(3, 3).unwrap(),
        ] {
            let back = graph6_read(&graph6_write(&g)).unwrap();
            assert!(back.adjacency_eq(&g));
        }
    }

    #[test]
    fn round_trip_large_order_form() {
        let g = path(100).unwrap();
        let text = graph6_write(&g);
        assert!(text.starts_with('~'));
        assert!(graph6_read(&text).unwrap().adjacency_eq(&g));
    }

    #[test]
    fn header_is_accepted() {
        let g = cycle(5).unwrap();
        let line = format!(">>graph6<<{}", graph6_write(&g));
        assert!(graph6_read(&line).unwrap().adjacency_eq(&g));
    }

    #[test]
    fn malformed_inputs_rejected() {
        assert!(graph6_read("").is_err());
        assert!(graph6_read("garbage\u{1f600}").is_err());
        // order byte says 5 vertices but the bit stream is truncated
        assert!(graph6_read("D").is_err());
        // trailing junk after a valid K3
        assert!(graph6_read("Bww").is_err());
        assert!(graph6_read("~~~~~~").is_err());
    }

    #[test]
    fn multi_line_stream() {
        let text = format!(
            "{}\n\n{}\n",
            graph6_write(&path(4).unwrap()),
            graph6_write(&cycle(3).unwrap())
        );
        let graphs = graph6_read_all(&text).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].order(), 4);
        assert_eq!(graphs[1].size(), 3);
    }

    #[test]
    fn json_round_trip_and_errors() {
        let g = cycle(5).unwrap();
        let back = json_read(&json_write(&g)).unwrap();
        assert!(back.adjacency_eq(&g));
        assert!(json_read("{\"n\": 2, \"edges\": [[0, 2]]}").is_err());
        assert!(json_read("not json").is_err());
    }
}
