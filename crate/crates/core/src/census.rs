//! Small multigraphs up to isomorphism.
//!
//! Canonical forms come from colour refinement followed by a search over
//! all orderings that respect the refined colour classes. That is
//! exponential in the worst case and meant for graphs of at most ten or so
//! vertices.

use std::collections::BTreeSet;

use crate::multigraph::{make_family, Family, Multigraph};

/// Stable vertex colours, ranked so that equal ranks mean equal signatures.
fn refined_colours(g: &Multigraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = vec![0; n];
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<(usize, usize)>)> = (0..n)
            .map(|v| {
                let mut around: Vec<(usize, usize)> = g
                    .neighbors(v)
                    .iter()
                    .map(|&(w, s)| (colour[w], s))
                    .collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let distinct: Vec<_> = signatures
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colour = next;
    }
}

fn code(g: &Multigraph, order: &[usize]) -> Vec<usize> {
    let n = order.len();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            out.push(g.multiplicity(order[i], order[j]));
        }
    }
    out
}

/// A canonical representative: isomorphic inputs give equal outputs.
pub fn canonical_form(g: &Multigraph) -> Multigraph {
    let n = g.vertex_count();
    let colour = refined_colours(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let max = colour.iter().copied().max().map_or(0, |c| c + 1);
    for c in 0..max {
        cells.push((0..n).filter(|&v| colour[v] == c).collect());
    }
    // order[i] is the original vertex placed at position i
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut perms: Vec<Vec<usize>> = cells.clone();
    loop {
        let order: Vec<usize> = perms.iter().flatten().copied().collect();
        let c = code(g, &order);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            best = Some((c, order));
        }
        // next combination of within-cell permutations, odometer style
        let mut i = perms.len();
        loop {
            if i == 0 {
                let (_, order) = best.expect("at least one ordering");
                let mut position = vec![0; n];
                for (pos, &v) in order.iter().enumerate() {
                    position[v] = pos;
                }
                return g.relabeled(&position);
            }
            i -= 1;
            if crate::cover::next_permutation(&mut perms[i]) {
                break;
            }
            perms[i].sort_unstable();
        }
    }
}

pub fn are_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degrees().iter().collect::<BTreeSet<_>>()
            == b.degrees().iter().collect::<BTreeSet<_>>()
        && canonical_form(a) == canonical_form(b)
}

/// All simple graphs on `n` vertices, one per isomorphism class.
pub fn simple_graphs(n: usize) -> Vec<Multigraph> {
    let mut level: BTreeSet<Multigraph> = BTreeSet::from([Multigraph::empty(0)]);
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for g in &level {
            let base: Vec<(usize, usize, usize)> = g.pairs().collect();
            for mask in 0u32..1 << (m - 1) {
                let mut edges = base.clone();
                edges.extend(
                    (0..m - 1)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| (v, m - 1, 1)),
                );
                let h = Multigraph::new(m, &edges).expect("valid edges");
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

pub fn connected_simple_graphs(n: usize) -> Vec<Multigraph> {
    simple_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// Uniform multiples `K_t^s` and `C_t^s` on at most `max_vertices` vertices.
fn block_shapes(max_vertices: usize, max_multiplicity: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for s in 1..=max_multiplicity {
        for t in 2..=max_vertices {
            out.push(make_family(&Family::CliqueMultiple { t, q: s }).expect("valid clique"));
            if t >= 4 {
                out.push(make_family(&Family::CycleMultiple { n: t, q: s }).expect("valid cycle"));
            }
        }
    }
    out
}

/// Every GDP-tree with at most `max_vertices` vertices, multiplicity at most
/// `max_multiplicity` and degree at most `max_degree`, up to isomorphism.
pub fn gdp_trees(
    max_vertices: usize,
    max_multiplicity: usize,
    max_degree: usize,
) -> Vec<Multigraph> {
    let shapes = block_shapes(max_vertices, max_multiplicity);
    let mut seen: BTreeSet<Multigraph> = BTreeSet::new();
    let mut frontier: Vec<Multigraph> = Vec::new();
    if max_vertices >= 1 {
        let k1 = Multigraph::empty(1);
        seen.insert(k1.clone());
        frontier.push(k1);
    }
    while let Some(g) = frontier.pop() {
        let n = g.vertex_count();
        for shape in &shapes {
            let t = shape.vertex_count();
            if n + t - 1 > max_vertices {
                continue;
            }
            // glue shape vertex 0 onto v; shapes are vertex-transitive
            for v in 0..n {
                let rename = |x: usize| if x == 0 { v } else { n + x - 1 };
                let mut edges: Vec<(usize, usize, usize)> = g.pairs().collect();
                edges.extend(shape.pairs().map(|(a, b, s)| (rename(a), rename(b), s)));
                let h = Multigraph::new(n + t - 1, &edges).expect("valid edges");
                if h.degrees().into_iter().any(|d| d > max_degree) {
                    continue;
                }
                let c = canonical_form(&h);
                if seen.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
    }
    seen.into_iter().collect()
}
