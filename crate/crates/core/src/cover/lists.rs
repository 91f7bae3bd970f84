use std::collections::BTreeMap;

use crate::cover::{Cover, Matching};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// A cover built from a list assignment, with the color names behind each
/// list index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListCover {
    pub cover: Cover,
    /// `palette[v][i]` is the abstract color at index `i` of `L(v)`.
    pub palette: Vec<Vec<String>>,
}

/// Encodes list coloring as DP-coloring: on each edge, equal colors are
/// matched. Transversals of the result are exactly the proper list colorings.
pub fn cover_from_lists(g: &Multigraph, lists: &[Vec<String>]) -> Result<ListCover> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if lists.len() != g.vertex_count() {
        return Err(Error::ListSizeLength {
            expected: g.vertex_count(),
            got: lists.len(),
        });
    }
    let palette: Vec<Vec<String>> = lists
        .iter()
        .map(|l| {
            let mut l = l.clone();
            l.sort();
            l.dedup();
            l
        })
        .collect();
    let mut matchings = BTreeMap::new();
    for (u, v, _) in g.pairs() {
        let m: Matching = palette[u]
            .iter()
            .enumerate()
            .filter_map(|(i, c)| palette[v].binary_search(c).ok().map(|j| (i, j)))
            .collect();
        matchings.insert((u, v), vec![m]);
    }
    let sizes = palette.iter().map(Vec::len).collect();
    Ok(ListCover {
        cover: Cover::new(g.clone(), sizes, matchings)?,
        palette,
    })
}
