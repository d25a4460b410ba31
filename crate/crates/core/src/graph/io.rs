//! graph6 and plain edge-list formats.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

fn push_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

impl Graph {
    /// The graph6 string, without header or trailing newline.
    pub fn to_graph6(&self) -> String {
        let n = self.vertex_count();
        let mut out = Vec::new();
        push_size(&mut out, n as u64);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n as u32 {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Parses one graph6 line; an optional `>>graph6<<` header and
    /// surrounding whitespace are accepted. Offsets in errors are byte
    /// positions in `text`.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let start = text.len() - text.trim_start().len();
        let mut body = text.trim();
        let mut base = start;
        if let Some(rest) = body.strip_prefix(HEADER) {
            body = rest;
            base += HEADER.len();
        }
        let bytes = body.as_bytes();
        if let Some(k) = bytes.iter().position(|&c| !(63..=126).contains(&c)) {
            return Err(parse_error(base + k, format!("byte {:#04x} is not a graph6 character", bytes[k])));
        }
        let need = |k: usize| {
            if bytes.len() < k {
                Err(parse_error(base + bytes.len(), "truncated vertex count"))
            } else {
                Ok(())
            }
        };
        let value = |range: std::ops::Range<usize>| {
            bytes[range].iter().fold(0u64, |acc, &c| (acc << 6) | (c - 63) as u64)
        };
        need(1)?;
        let (n, mut pos) = if bytes[0] != 126 {
            ((bytes[0] - 63) as u64, 1)
        } else {
            need(2)?;
            if bytes[1] != 126 {
                need(4)?;
                (value(1..4), 4)
            } else {
                need(8)?;
                (value(2..8), 8)
            }
        };
        if n > crate::perm::MAX_DEGREE as u64 {
            return Err(parse_error(base, format!("{n} vertices exceeds the supported maximum")));
        }
        let n = n as usize;
        let bits = n * n.saturating_sub(1) / 2;
        let expected = pos + bits.div_ceil(6);
        if bytes.len() != expected {
            let at = base + bytes.len().min(expected);
            return Err(parse_error(
                at,
                format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
            ));
        }
        let mut edges = Vec::new();
        let mut k = 0usize;
        for j in 1..n as u32 {
            for i in 0..j {
                let byte = bytes[pos + k / 6] - 63;
                if (byte >> (5 - k % 6)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        pos += bits.div_ceil(6);
        if bits % 6 != 0 {
            let last = bytes[pos - 1] - 63;
            if last & ((1 << (6 - bits % 6)) - 1) != 0 {
                return Err(parse_error(base + pos - 1, "nonzero padding bits"));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// One `u v` line per edge (`u < v`, sorted), newline-terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses `u v` lines; blank lines and lines starting with `#` are
    /// skipped. The vertex count is one more than the largest endpoint,
    /// or `vertices` when given.
    pub fn from_edge_list(text: &str, vertices: Option<usize>) -> Result<Graph> {
        let mut edges = Vec::new();
        let mut max_seen: Option<u32> = None;
        let mut offset = 0usize;
        for line in text.split_inclusive('\n') {
            let line_start = offset;
            offset += line.len();
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut fields = Vec::new();
            let mut cursor = 0usize;
            for field in line.split_whitespace() {
                let at = cursor + line[cursor..].find(field).expect("field comes from the line");
                cursor = at + field.len();
                fields.push((line_start + at, field));
            }
            if fields.len() != 2 {
                let at = fields.get(2).map_or(line_start, |f| f.0);
                return Err(parse_error(at, format!("expected two vertex indices, found {}", fields.len())));
            }
            let mut ends = [0u32; 2];
            for (slot, (at, field)) in ends.iter_mut().zip(&fields) {
                *slot = field
                    .parse()
                    .map_err(|_| parse_error(*at, format!("`{field}` is not a vertex index")))?;
            }
            if ends[0] == ends[1] {
                return Err(parse_error(fields[0].0, format!("loop at vertex {}", ends[0])));
            }
            max_seen = Some(max_seen.map_or(ends[0].max(ends[1]), |m| m.max(ends[0]).max(ends[1])));
            edges.push((ends[0], ends[1]));
        }
        let inferred = max_seen.map_or(0, |m| m as usize + 1);
        let n = match vertices {
            Some(n) if n < inferred => {
                return Err(parse_error(0, format!("vertex {} out of range for {n} vertices", inferred - 1)))
            }
            Some(n) => n,
            None => inferred,
        };
        Graph::from_edges(n, &edges).map_err(|e| parse_error(0, e.to_string()))
    }
}

/// Reads either format, guessing from the content: text whose first
/// non-comment line holds two whitespace-separated fields is an edge list,
/// anything else is graph6.
pub fn parse_graph(text: &str) -> Result<(Graph, GraphFormat)> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if line.split_whitespace().count() >= 2 => {
            Ok((Graph::from_edge_list(text, None)?, GraphFormat::EdgeList))
        }
        None if text.trim().is_empty() => Err(parse_error(0, "empty input")),
        _ => Ok((Graph::from_graph6(text)?, GraphFormat::Graph6)),
    }
}
