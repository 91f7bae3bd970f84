use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Deserialize;

use crate::cover::{Cover, Matching};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// A multigraph with optional per-vertex list sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigraphDocument {
    pub graph: Multigraph,
    pub h: Option<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize, usize)>,
    #[serde(default)]
    h: Option<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCover {
    graph: RawGraph,
    list_sizes: Vec<usize>,
    matchings: BTreeMap<String, Vec<Vec<(usize, usize)>>>,
}

fn compact<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn edge_list(g: &Multigraph) -> String {
    compact(&g.pairs().map(|(u, v, s)| [u, v, s]).collect::<Vec<_>>())
}

fn build_graph(raw: RawGraph) -> Result<MultigraphDocument> {
    let graph = Multigraph::new(raw.n, &raw.edges)?;
    if let Some(h) = &raw.h {
        if h.len() != raw.n {
            return Err(Error::ListSizeLength {
                expected: raw.n,
                got: h.len(),
            });
        }
    }
    Ok(MultigraphDocument { graph, h: raw.h })
}

pub fn read_multigraph(text: &str) -> Result<MultigraphDocument> {
    build_graph(serde_json::from_str(text)?)
}

pub fn write_multigraph(doc: &MultigraphDocument) -> String {
    let mut out = String::from("{\n");
    write!(
        out,
        "  \"n\": {},\n  \"edges\": {}",
        doc.graph.vertex_count(),
        edge_list(&doc.graph)
    )
    .unwrap();
    if let Some(h) = &doc.h {
        write!(out, ",\n  \"h\": {}", compact(h)).unwrap();
    }
    out.push_str("\n}\n");
    out
}

fn parse_pair_key(key: &str) -> Result<(usize, usize)> {
    let parsed = key
        .split_once('-')
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)));
    match parsed {
        Some((u, v)) if u < v => Ok((u, v)),
        _ => Err(Error::InvalidCover(format!(
            "matching key {key:?} is not of the form \"u-v\" with u < v"
        ))),
    }
}

pub fn read_cover(text: &str) -> Result<Cover> {
    let raw: RawCover = serde_json::from_str(text)?;
    let doc = build_graph(raw.graph)?;
    let mut matchings = BTreeMap::new();
    for (key, ms) in raw.matchings {
        matchings.insert(parse_pair_key(&key)?, ms);
    }
    Cover::new(doc.graph, raw.list_sizes, matchings)
}

pub fn write_cover(cover: &Cover) -> String {
    let g = cover.base();
    let mut out = String::from("{\n");
    write!(
        out,
        "  \"graph\": {{\"n\":{},\"edges\":{}}},\n  \"list_sizes\": {},\n  \"matchings\": {{",
        g.vertex_count(),
        edge_list(g),
        compact(&cover.list_sizes())
    )
    .unwrap();
    let entries: Vec<String> = cover
        .all_matchings()
        .iter()
        .map(|(&(u, v), ms)| {
            let as_arrays: Vec<Vec<[usize; 2]>> = ms
                .iter()
                .map(|m: &Matching| m.iter().map(|&(i, j)| [i, j]).collect())
                .collect();
            format!("\"{u}-{v}\":{}", compact(&as_arrays))
        })
        .collect();
    out.push_str(&entries.join(","));
    out.push_str("}\n}\n");
    out
}
