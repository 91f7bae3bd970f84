use super::Multigraph;

/// One edge-block: a maximal 2-edge-connected piece, a single cut edge, or
/// an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBlock {
    pub vertices: Vec<usize>,
    pub is_cut_edge: bool,
    /// Attached to the rest of its component by exactly one cut edge.
    pub pendent: bool,
    /// For pendent blocks that are not cut edges: the cut edge `(inside, outside)`.
    pub attachment: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBlockDecomposition {
    /// Sorted by vertex set; a cut edge sorts among the 2-sets.
    pub edge_blocks: Vec<EdgeBlock>,
    /// Cut edges `(u, v)` with `u < v`. A pair of multiplicity >= 2 is never a cut edge.
    pub cut_edges: Vec<(usize, usize)>,
}

fn bridges(g: &Multigraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();

    fn visit(
        g: &Multigraph,
        v: usize,
        parent: Option<usize>,
        disc: &mut [usize],
        low: &mut [usize],
        time: &mut usize,
        out: &mut Vec<(usize, usize)>,
    ) {
        *time += 1;
        disc[v] = *time;
        low[v] = *time;
        for &(w, s) in g.neighbors(v) {
            if disc[w] == 0 {
                visit(g, w, Some(v), disc, low, time, out);
                low[v] = low[v].min(low[w]);
                if low[w] > disc[v] && s == 1 {
                    out.push((v.min(w), v.max(w)));
                }
            } else if Some(w) != parent {
                low[v] = low[v].min(disc[w]);
            } else if s >= 2 {
                // a parallel copy of the tree edge is a back edge
                low[v] = low[v].min(disc[w]);
            }
        }
    }

    for v in 0..n {
        if disc[v] == 0 {
            visit(g, v, None, &mut disc, &mut low, &mut time, &mut out);
        }
    }
    out.sort_unstable();
    out
}

pub(super) fn decompose(g: &Multigraph) -> EdgeBlockDecomposition {
    let n = g.vertex_count();
    let cut_edges = bridges(g);
    let is_bridge = |u: usize, v: usize| cut_edges.binary_search(&(u.min(v), u.max(v))).is_ok();

    // 2-edge-connected classes: components after deleting the cut edges.
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(y, _) in g.neighbors(x) {
                if class[y] == usize::MAX && !is_bridge(x, y) {
                    class[y] = id;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    // Degree of each class in the bridge tree.
    let mut tree_degree = vec![0usize; classes.len()];
    let mut class_bridge: Vec<Option<(usize, usize)>> = vec![None; classes.len()];
    for &(u, v) in &cut_edges {
        tree_degree[class[u]] += 1;
        tree_degree[class[v]] += 1;
        class_bridge[class[u]] = Some((u, v));
        class_bridge[class[v]] = Some((v, u));
    }

    let mut edge_blocks = Vec::new();
    for (id, members) in classes.iter().enumerate() {
        // Single vertices that touch a cut edge are covered by that cut edge.
        if members.len() == 1 && tree_degree[id] > 0 {
            continue;
        }
        let pendent = tree_degree[id] == 1;
        edge_blocks.push(EdgeBlock {
            vertices: members.clone(),
            is_cut_edge: false,
            pendent,
            attachment: if pendent { class_bridge[id] } else { None },
        });
    }
    for &(u, v) in &cut_edges {
        let leaf = |w: usize| classes[class[w]].len() == 1 && tree_degree[class[w]] == 1;
        edge_blocks.push(EdgeBlock {
            vertices: vec![u, v],
            is_cut_edge: true,
            pendent: leaf(u) || leaf(v),
            attachment: None,
        });
    }
    edge_blocks.sort_by(|a, b| {
        a.vertices
            .cmp(&b.vertices)
            .then(a.is_cut_edge.cmp(&b.is_cut_edge))
    });
    EdgeBlockDecomposition {
        edge_blocks,
        cut_edges,
    }
}
