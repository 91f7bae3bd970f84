use super::Multigraph;
use crate::error::{Error, Result};

/// Parametrized graph families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `K_t^q`.
    CliqueMultiple { t: usize, q: usize },
    /// `C_n^q` on vertices `0..n` with pairs `i, i+1 mod n`.
    CycleMultiple { n: usize, q: usize },
    /// Vertex `v` becomes the independent set `v*q .. v*q+q`, each edge a `K_{q,q}`.
    Blowup { graph: Multigraph, q: usize },
}

pub fn make_family(family: &Family) -> Result<Multigraph> {
    match family {
        &Family::CliqueMultiple { t, q } => {
            if t == 0 || q == 0 {
                return Err(Error::InvalidParameter(format!(
                    "clique multiple needs t >= 1 and q >= 1, got t={t}, q={q}"
                )));
            }
            let mut edges = Vec::new();
            for u in 0..t {
                for v in u + 1..t {
                    edges.push((u, v, q));
                }
            }
            Multigraph::new(t, &edges)
        }
        &Family::CycleMultiple { n, q } => {
            if n < 3 || q == 0 {
                return Err(Error::InvalidParameter(format!(
                    "cycle multiple needs n >= 3 and q >= 1, got n={n}, q={q}"
                )));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, q)).collect();
            Multigraph::new(n, &edges)
        }
        Family::Blowup { graph, q } => {
            let q = *q;
            if q == 0 {
                return Err(Error::InvalidParameter("blowup needs q >= 1".into()));
            }
            if !graph.is_simple() {
                return Err(Error::NotSimple);
            }
            let mut edges = Vec::new();
            for (u, v, _) in graph.pairs() {
                for a in 0..q {
                    for b in 0..q {
                        edges.push((u * q + a, v * q + b, 1));
                    }
                }
            }
            Multigraph::new(graph.vertex_count() * q, &edges)
        }
    }
}

/// `F(B, u, u')`: delete the vertex set `block` and join `u` and `u2` by one
/// more edge. Surviving vertices keep their relative order.
pub fn block_surgery(g: &Multigraph, block: &[usize], u: usize, u2: usize) -> Result<Multigraph> {
    let n = g.vertex_count();
    for &w in block.iter().chain([&u, &u2]) {
        if w >= n {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                vertex_count: n,
            });
        }
    }
    if block.contains(&u) || block.contains(&u2) {
        return Err(Error::InvalidParameter(
            "surgery endpoints must lie outside the removed block".into(),
        ));
    }
    if u == u2 {
        return Err(Error::InvalidParameter(
            "surgery endpoints must be distinct".into(),
        ));
    }
    let touches = |w: usize| g.neighbors(w).iter().any(|(x, _)| block.contains(x));
    if !touches(u) || !touches(u2) {
        return Err(Error::InvalidParameter(
            "surgery endpoints must be neighbors of the removed block".into(),
        ));
    }
    let (rest, kept) = g.remove_vertices(block);
    let pos = |w: usize| kept.binary_search(&w).expect("kept vertex");
    rest.with_edges_added(pos(u), pos(u2), 1)
}
