//! Graph interchange formats: graph6, DIMACS edge format, and DOT export.
//!
//! graph6 follows the published format exactly: every byte is six bits plus
//! 63, and the edge bits are the upper adjacency triangle in column-major
//! order, i.e. (0,1), (0,2), (1,2), (0,3), ... packed most significant bit
//! first and zero-padded to a byte boundary.

use crate::error::Error;
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses one line of graph6 (optional `>>graph6<<` header allowed).
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, GRAPH6_HEADER.len()),
        None => (line, 0),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                base + i,
                format!("byte 0x{b:02x} outside the printable graph6 range 63..=126"),
            ));
        }
    }
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }

    let (n, header_len) = decode_order(bytes, base)?;
    let need_bits = n * n.saturating_sub(1) / 2;
    let need_bytes = need_bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < need_bytes {
        return Err(Error::parse(
            base + bytes.len(),
            format!(
                "truncated edge data: need {need_bytes} bytes for n={n}, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > need_bytes {
        return Err(Error::parse(
            base + header_len + need_bytes,
            "trailing garbage after edge data",
        ));
    }

    let mut g = Graph::empty(n);
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            pos += 1;
        }
    }
    // padding bits must be zero
    while pos < 6 * need_bytes {
        let byte = data[pos / 6] - 63;
        if byte >> (5 - pos % 6) & 1 == 1 {
            return Err(Error::parse(
                base + header_len + pos / 6,
                "nonzero padding bits",
            ));
        }
        pos += 1;
    }
    Ok(g)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize), Error> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::parse(base, "malformed length prefix (need 3 bytes)"));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        if n < 63 {
            return Err(Error::parse(base, "non-canonical length prefix"));
        }
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(Error::parse(base, "malformed length prefix (need 6 bytes)"));
    }
    let mut n = 0usize;
    for &b in &bytes[2..8] {
        n = n << 6 | (b - 63) as usize;
    }
    if n < 258048 {
        return Err(Error::parse(base, "non-canonical length prefix"));
    }
    Ok((n, 8))
}

/// Encodes a graph as graph6. Inverse of [`parse_graph6`].
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258047 {
        bytes.push(126);
        bytes.push((n >> 12 & 63) as u8 + 63);
        bytes.push((n >> 6 & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in (0..36).step_by(6).rev() {
            bytes.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Parses DIMACS edge format: a `p edge n m` problem line followed by
/// `e u v` lines with 1-indexed endpoints. Comment lines (`c ...`) are
/// skipped; duplicate edges collapse; self-loops are rejected.
pub fn parse_dimacs(text: &str) -> Result<Graph, Error> {
    let mut g: Option<Graph> = None;
    let mut offset = 0usize;
    for line in text.lines() {
        let line_offset = offset;
        offset += line.len() + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if g.is_some() {
                    return Err(Error::parse(line_offset, "duplicate problem line"));
                }
                if fields.len() < 4 || fields[1] != "edge" {
                    return Err(Error::parse(
                        line_offset,
                        "problem line must be `p edge <n> <m>`",
                    ));
                }
                let n: usize = fields[2]
                    .parse()
                    .map_err(|_| Error::parse(line_offset, "bad vertex count"))?;
                g = Some(Graph::empty(n));
            }
            "e" => {
                let graph = g
                    .as_mut()
                    .ok_or_else(|| Error::parse(line_offset, "edge before problem line"))?;
                if fields.len() < 3 {
                    return Err(Error::parse(line_offset, "edge line must be `e <u> <v>`"));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| Error::parse(line_offset, "bad endpoint"))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| Error::parse(line_offset, "bad endpoint"))?;
                if u == 0 || v == 0 || u > graph.n() || v > graph.n() {
                    return Err(Error::parse(
                        line_offset,
                        format!("edge endpoint out of range 1..={}", graph.n()),
                    ));
                }
                if u == v {
                    return Err(Error::parse(line_offset, format!("self-loop at {u}")));
                }
                graph.add_edge(u - 1, v - 1);
            }
            _ => {
                return Err(Error::parse(
                    line_offset,
                    format!("unrecognized line kind `{}`", fields[0]),
                ));
            }
        }
    }
    g.ok_or_else(|| Error::parse(0, "missing problem line"))
}

/// Emits DIMACS edge format (1-indexed).
pub fn emit_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// DOT export of the graph itself.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match g.labels() {
            Some(labels) => out.push_str(&format!("  {} [label=\"{}\"];\n", v, labels[v])),
            None => out.push_str(&format!("  {};\n", v)),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", u, v));
    }
    out.push_str("}\n");
    out
}
