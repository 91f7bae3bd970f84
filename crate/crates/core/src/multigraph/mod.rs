//! Loopless multigraphs with integer edge multiplicities.
//!
//! Vertices are the dense ids `0..vertex_count`. Every unordered pair is
//! stored once as `(u, v)` with `u < v`, so iteration order over pairs is
//! canonical and reproducible.

mod blocks;
mod edge_blocks;
mod families;
mod gdp;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub use blocks::BlockDecomposition;
pub use edge_blocks::{EdgeBlock, EdgeBlockDecomposition};
pub use families::{block_surgery, make_family, Family};
pub use gdp::{BlockFamily, ComponentClass, ComponentReport, GdpClassification};

/// A loopless multigraph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    n: usize,
    pairs: BTreeMap<(usize, usize), usize>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    /// Builds a multigraph from `(u, v, multiplicity)` triples.
    ///
    /// Repeated pairs are summed, in either orientation.
    pub fn new(vertex_count: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let mut pairs = BTreeMap::new();
        for &(u, v, s) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if s == 0 {
                return Err(Error::ZeroMultiplicity { u, v });
            }
            *pairs.entry((u.min(v), u.max(v))).or_insert(0) += s;
        }
        Ok(Self::from_pairs(vertex_count, pairs))
    }

    /// Simple graph from an edge list; duplicates become parallel edges.
    pub fn simple(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let triples: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::new(vertex_count, &triples)
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_pairs(vertex_count, BTreeMap::new())
    }

    fn from_pairs(n: usize, pairs: BTreeMap<(usize, usize), usize>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &s) in &pairs {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Multigraph { n, pairs, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.pairs.values().sum()
    }

    /// Number of adjacent pairs (edges of the skeleton).
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Adjacent pairs `(u, v, multiplicity)` with `u < v`, in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.pairs.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.pairs.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Neighbors of `v` with the multiplicity of each pair, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// `d_G(v)`, counting parallel edges.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().map(|&(_, s)| s).sum()
    }

    /// `|N_G(v)|`, the degree in the skeleton.
    pub fn simple_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.pairs.values().copied().max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.pairs.values().all(|&s| s == 1)
    }

    /// The simple graph on the same vertices with every multiplicity set to 1.
    pub fn skeleton(&self) -> Multigraph {
        let pairs = self.pairs.keys().map(|&p| (p, 1)).collect();
        Self::from_pairs(self.n, pairs)
    }

    /// `m(G) = |E(G)| - |E(skeleton)|`.
    pub fn excess(&self) -> usize {
        self.edge_count() - self.pair_count()
    }

    /// The multiple `G^s`: every multiplicity scaled by `s`.
    pub fn multiple(&self, s: usize) -> Result<Multigraph> {
        if s == 0 {
            return Err(Error::InvalidParameter("multiple requires s >= 1".into()));
        }
        let pairs = self.pairs.iter().map(|(&p, &m)| (p, m * s)).collect();
        Ok(Self::from_pairs(self.n, pairs))
    }

    /// Subgraph induced by `vertices`, relabeled to `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut pairs = BTreeMap::new();
        for (&(u, v), &s) in &self.pairs {
            let (a, b) = (index[u], index[v]);
            if a != usize::MAX && b != usize::MAX {
                pairs.insert((a.min(b), a.max(b)), s);
            }
        }
        Self::from_pairs(vertices.len(), pairs)
    }

    /// Deletes the given vertices; survivors keep their relative order.
    /// Returns the new graph and, for each new vertex, its old id.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Multigraph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        (self.induced(&kept), kept)
    }

    /// Adds `count` parallel copies of the pair `u v`.
    pub fn with_edges_added(&self, u: usize, v: usize, count: usize) -> Result<Multigraph> {
        let mut triples: Vec<_> = self.pairs().collect();
        triples.push((u, v, count));
        Multigraph::new(self.n, &triples)
    }

    /// Removes one copy of the pair `u v`; `None` if the pair is not adjacent.
    pub fn with_edge_copy_removed(&self, u: usize, v: usize) -> Option<Multigraph> {
        let key = (u.min(v), u.max(v));
        let s = *self.pairs.get(&key)?;
        let mut pairs = self.pairs.clone();
        if s == 1 {
            pairs.remove(&key);
        } else {
            pairs.insert(key, s - 1);
        }
        Some(Self::from_pairs(self.n, pairs))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component. The null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Whether the graph is a complete simple graph `K_n` (`n >= 1`).
    pub fn is_complete_simple(&self) -> bool {
        self.n >= 1 && self.is_simple() && self.pair_count() == self.n * (self.n - 1) / 2
    }

    /// Multiplicity matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<usize> {
        let mut m = vec![0; self.n * self.n];
        for (&(u, v), &s) in &self.pairs {
            m[u * self.n + v] = s;
            m[v * self.n + u] = s;
        }
        m
    }

    /// Graph obtained by relabeling vertex `v` to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Multigraph {
        let pairs = self
            .pairs
            .iter()
            .map(|(&(u, v), &s)| {
                let (a, b) = (perm[u], perm[v]);
                ((a.min(b), a.max(b)), s)
            })
            .collect();
        Self::from_pairs(self.n, pairs)
    }

    pub fn blocks(&self) -> BlockDecomposition {
        blocks::decompose(self)
    }

    pub fn edge_blocks(&self) -> EdgeBlockDecomposition {
        edge_blocks::decompose(self)
    }

    pub fn classify_gdp(&self) -> GdpClassification {
        gdp::classify(self)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, [", self.n)?;
        for (i, (u, v, s)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if s == 1 {
                write!(f, "{u}-{v}")?;
            } else {
                write!(f, "{u}-{v}x{s}")?;
            }
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Multigraph::new(2, &[(1, 1, 1)]), Err(Error::LoopEdge(1)));
        assert!(matches!(
            Multigraph::new(2, &[(0, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
        assert!(matches!(
            Multigraph::new(2, &[(0, 1, 0)]),
            Err(Error::ZeroMultiplicity { .. })
        ));
    }

    #[test]
    fn build_sums_repeated_pairs() {
        let g = Multigraph::new(3, &[(0, 1, 1), (1, 0, 1)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.pair_count(), 1);
        assert_eq!(g.edge_count(), 2);

        let k24 = Multigraph::new(2, &[(0, 1, 4)]).unwrap();
        assert_eq!(k24.vertex_count(), 2);
        assert_eq!(k24.edge_count(), 4);

        let single = Multigraph::new(1, &[]).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);
    }

    #[test]
    fn skeleton_and_excess() {
        let k24 = Multigraph::new(2, &[(0, 1, 4)]).unwrap();
        assert_eq!(k24.skeleton(), Multigraph::simple(2, &[(0, 1)]).unwrap());
        assert_eq!(k24.excess(), 3);

        let c52 = make_family(&Family::CycleMultiple { n: 5, q: 2 }).unwrap();
        assert_eq!(
            c52.skeleton(),
            make_family(&Family::CycleMultiple { n: 5, q: 1 }).unwrap()
        );
        assert_eq!(c52.excess(), 5);

        let k4 = make_family(&Family::CliqueMultiple { t: 4, q: 1 }).unwrap();
        assert_eq!(k4.skeleton(), k4);
        assert_eq!(k4.excess(), 0);
    }

    #[test]
    fn degrees_count_multiplicity() {
        let g = Multigraph::new(3, &[(0, 1, 3), (1, 2, 1)]).unwrap();
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.simple_degree(1), 2);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn edge_copy_removal() {
        let g = Multigraph::new(2, &[(0, 1, 2)]).unwrap();
        let g1 = g.with_edge_copy_removed(1, 0).unwrap();
        assert_eq!(g1.multiplicity(0, 1), 1);
        let g0 = g1.with_edge_copy_removed(0, 1).unwrap();
        assert_eq!(g0.pair_count(), 0);
        assert!(g0.with_edge_copy_removed(0, 1).is_none());
    }
}
