//! File formats: graph6 for simple graphs, and JSON documents for
//! multigraphs and covers.
//!
//! The JSON writers emit one top-level key per line with compact values,
//! so a document written here and read back is reproduced byte for byte.

mod graph6;
mod json;

pub use graph6::{read_graph6, read_graph6_lines, write_graph6};
pub use json::{read_cover, read_multigraph, write_cover, write_multigraph, MultigraphDocument};

use crate::error::Result;
use crate::multigraph::Multigraph;

/// Reads a graph from text, guessing the format: JSON if it starts with `{`,
/// graph6 otherwise. The list sizes are present only in JSON documents.
pub fn read_graph_auto(text: &str) -> Result<MultigraphDocument> {
    if text.trim_start().starts_with('{') {
        read_multigraph(text)
    } else {
        Ok(MultigraphDocument {
            graph: read_graph6(text.trim())?,
            h: None,
        })
    }
}

impl From<Multigraph> for MultigraphDocument {
    fn from(graph: Multigraph) -> Self {
        MultigraphDocument { graph, h: None }
    }
}
