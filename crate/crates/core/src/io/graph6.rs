use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is skipped).
pub fn read_graph6(line: &str) -> Result<Multigraph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!(
            "byte {b} is outside the printable range 63..=126"
        )));
    }
    let data: Vec<u8> = bytes.iter().map(|b| b - 63).collect();
    let (n, rest) = match data.as_slice() {
        [] => return Err(bad("empty input")),
        [63, 63, tail @ ..] => {
            if tail.len() < 6 {
                return Err(bad("truncated vertex count"));
            }
            (
                tail[..6]
                    .iter()
                    .fold(0usize, |acc, &x| acc << 6 | x as usize),
                &tail[6..],
            )
        }
        [63, tail @ ..] => {
            if tail.len() < 3 {
                return Err(bad("truncated vertex count"));
            }
            (
                tail[..3]
                    .iter()
                    .fold(0usize, |acc, &x| acc << 6 | x as usize),
                &tail[3..],
            )
        }
        [x, tail @ ..] => (*x as usize, tail),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if rest.len() != needed {
        return Err(bad(format!(
            "{n} vertices need {needed} adjacency bytes, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if rest[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::simple(n, &edges)
}

/// Decodes a file with one graph6 string per non-empty line.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Multigraph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(read_graph6)
        .collect()
}

/// Encodes a simple graph.
pub fn write_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8);
    } else if n < 258_048 {
        out.push(63);
        out.extend((0..3).rev().map(|s| (n >> (6 * s) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|s| (n >> (6 * s) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | (g.multiplicity(i, j) > 0) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    Ok(out.into_iter().map(|b| (b + 63) as char).collect())
}
