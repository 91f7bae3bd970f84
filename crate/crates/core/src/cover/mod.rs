//! DP-covers `(H, L)` of a multigraph.
//!
//! Colors are `(vertex, index)` pairs: `L(v) = {0, .., list_sizes[v] - 1}`,
//! so lists are disjoint and independent by construction. For each adjacent
//! pair `u < v` of multiplicity `s`, the cover stores exactly `s` matchings,
//! each a set of index pairs `(i, j)` with `i` in `L(u)` and `j` in `L(v)`.
//! `H` is the union of all stored matchings.

pub(crate) mod enumerate;
mod hard;
mod lists;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub use enumerate::{enumerate_covers, CoverSpace, EnumerationOptions, MAX_LIST_SIZE};
pub use hard::{hard_cover, HardFamily};
pub use lists::{cover_from_lists, ListCover};

/// A matching between two lists, stored as sorted `(i, j)` pairs.
pub type Matching = Vec<(usize, usize)>;

/// A DP-cover of `base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cover {
    base: Multigraph,
    list_sizes: Vec<usize>,
    matchings: BTreeMap<(usize, usize), Vec<Matching>>,
}

/// One chosen color index per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transversal(pub Vec<usize>);

impl Transversal {
    pub fn choice(&self, v: usize) -> usize {
        self.0[v]
    }
}

impl Cover {
    /// Validates and builds a cover.
    ///
    /// Every adjacent pair `u < v` of multiplicity `s` must carry exactly `s`
    /// matchings; non-adjacent pairs must carry none.
    pub fn new(
        base: Multigraph,
        list_sizes: Vec<usize>,
        matchings: BTreeMap<(usize, usize), Vec<Matching>>,
    ) -> Result<Self> {
        let n = base.vertex_count();
        if list_sizes.len() != n {
            return Err(Error::ListSizeLength {
                expected: n,
                got: list_sizes.len(),
            });
        }
        for &(u, v) in matchings.keys() {
            if u >= v || v >= n || base.multiplicity(u, v) == 0 {
                return Err(Error::InvalidCover(format!(
                    "matchings given for non-adjacent or unordered pair {u}-{v}"
                )));
            }
        }
        let mut normalized = BTreeMap::new();
        for (u, v, s) in base.pairs() {
            let given = matchings.get(&(u, v)).ok_or_else(|| {
                Error::InvalidCover(format!("no matchings given for pair {u}-{v}"))
            })?;
            if given.len() != s {
                return Err(Error::InvalidCover(format!(
                    "pair {u}-{v} has multiplicity {s} but {} matchings",
                    given.len()
                )));
            }
            let mut list = Vec::with_capacity(s);
            for m in given {
                let mut m = m.clone();
                m.sort_unstable();
                let mut left = BTreeSet::new();
                let mut right = BTreeSet::new();
                for &(i, j) in &m {
                    if i >= list_sizes[u] || j >= list_sizes[v] {
                        return Err(Error::InvalidCover(format!(
                            "color pair ({i},{j}) out of range on pair {u}-{v}"
                        )));
                    }
                    if !left.insert(i) || !right.insert(j) {
                        return Err(Error::InvalidCover(format!(
                            "edge set on pair {u}-{v} is not a matching"
                        )));
                    }
                }
                list.push(m);
            }
            normalized.insert((u, v), list);
        }
        Ok(Cover {
            base,
            list_sizes,
            matchings: normalized,
        })
    }

    /// The cover where each of the `s` matchings of a pair is `{(i, i)}`.
    pub fn aligned(base: Multigraph, list_sizes: Vec<usize>) -> Result<Self> {
        let mut matchings = BTreeMap::new();
        for (u, v, s) in base.pairs() {
            let lu = list_sizes.get(u).copied().unwrap_or(0);
            let lv = list_sizes.get(v).copied().unwrap_or(0);
            let m: Matching = (0..lu.min(lv)).map(|i| (i, i)).collect();
            matchings.insert((u, v), vec![m; s]);
        }
        Cover::new(base, list_sizes, matchings)
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn list_sizes(&self) -> &[usize] {
        &self.list_sizes
    }

    pub fn list_size(&self, v: usize) -> usize {
        self.list_sizes[v]
    }

    /// The `s` matchings of the pair `u < v` (empty for non-adjacent pairs).
    pub fn matchings(&self, u: usize, v: usize) -> &[Matching] {
        self.matchings
            .get(&(u.min(v), u.max(v)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn all_matchings(&self) -> &BTreeMap<(usize, usize), Vec<Matching>> {
        &self.matchings
    }

    /// `|L(v)| >= h(v)` for every vertex.
    pub fn is_h_cover(&self, h: &[usize]) -> bool {
        h.len() == self.list_sizes.len() && self.list_sizes.iter().zip(h).all(|(l, h)| l >= h)
    }

    /// `E_H(L(u), L(v))` for `u < v`, as a set of `(i, j)`.
    pub fn conflict_edges(&self, u: usize, v: usize) -> BTreeSet<(usize, usize)> {
        let (a, b) = (u.min(v), u.max(v));
        let set: BTreeSet<_> = self.matchings(a, b).iter().flatten().copied().collect();
        if u <= v {
            set
        } else {
            set.into_iter().map(|(i, j)| (j, i)).collect()
        }
    }

    /// Whether color `i` of `u` is adjacent in `H` to color `j` of `v`.
    pub fn conflicts(&self, u: usize, i: usize, v: usize, j: usize) -> bool {
        let key = if u < v { (i, j) } else { (j, i) };
        self.matchings(u, v)
            .iter()
            .any(|m| m.binary_search(&key).is_ok())
    }

    /// Whether `t` is an independent transversal of `H`.
    pub fn is_transversal(&self, t: &Transversal) -> bool {
        let n = self.base.vertex_count();
        if t.0.len() != n || (0..n).any(|v| t.0[v] >= self.list_sizes[v]) {
            return false;
        }
        self.base
            .pairs()
            .all(|(u, v, _)| !self.conflicts(u, t.0[u], v, t.0[v]))
    }

    /// Offset of `L(v)` in the vertex numbering of [`Cover::conflict_graph`].
    pub fn color_offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.list_sizes
            .iter()
            .map(|l| {
                let o = acc;
                acc += l;
                o
            })
            .collect()
    }

    /// `H` as a simple graph; color `i` of `v` is vertex `color_offsets()[v] + i`.
    pub fn conflict_graph(&self) -> Multigraph {
        let off = self.color_offsets();
        let total = self.list_sizes.iter().sum();
        let mut edges = Vec::new();
        for (u, v, _) in self.base.pairs() {
            for (i, j) in self.conflict_edges(u, v) {
                edges.push((off[u] + i, off[v] + j, 1));
            }
        }
        Multigraph::new(total, &edges).expect("conflict graph is well formed")
    }

    /// Sorted `(vertex count, edge count)` of each component of `H`.
    pub fn conflict_components(&self) -> Vec<(usize, usize)> {
        let h = self.conflict_graph();
        let mut out: Vec<_> = h
            .components()
            .into_iter()
            .map(|c| {
                let edges = c.iter().map(|&x| h.degree(x)).sum::<usize>() / 2;
                (c.len(), edges)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The `q`-blowup: a cover of `base^q` where every color becomes an
    /// independent `q`-set and every `H`-edge a `K_{q,q}`.
    ///
    /// Color `i` of `v` becomes colors `i*q .. i*q+q`. Each stored matching
    /// `M` becomes the `q` shifted matchings
    /// `{(i*q + x, j*q + (x+r) mod q)}` for `r` in `0..q`.
    pub fn blowup(&self, q: usize) -> Result<Cover> {
        if q == 0 {
            return Err(Error::InvalidParameter("blowup needs q >= 1".into()));
        }
        let base = self.base.multiple(q)?;
        let list_sizes = self.list_sizes.iter().map(|l| l * q).collect();
        let mut matchings = BTreeMap::new();
        for (&pair, list) in &self.matchings {
            let mut out = Vec::with_capacity(list.len() * q);
            for m in list {
                for r in 0..q {
                    let mut shifted = Vec::with_capacity(m.len() * q);
                    for &(i, j) in m {
                        for x in 0..q {
                            shifted.push((i * q + x, j * q + (x + r) % q));
                        }
                    }
                    out.push(shifted);
                }
            }
            matchings.insert(pair, out);
        }
        Cover::new(base, list_sizes, matchings)
    }

    /// Whether `other` equals this cover after permuting each list.
    ///
    /// Compares `H` only: two covers with the same union of matchings but
    /// different decompositions are relabelings of each other.
    pub fn is_relabeling_of(&self, other: &Cover) -> bool {
        if self.base != other.base || self.list_sizes != other.list_sizes {
            return false;
        }
        let n = self.base.vertex_count();
        let mine: BTreeMap<_, _> = self
            .base
            .pairs()
            .map(|(u, v, _)| ((u, v), self.conflict_edges(u, v)))
            .collect();
        let theirs: BTreeMap<_, _> = self
            .base
            .pairs()
            .map(|(u, v, _)| ((u, v), other.conflict_edges(u, v)))
            .collect();
        if mine.iter().any(|(p, e)| theirs[p].len() != e.len()) {
            return false;
        }
        // Visit vertices so that each one after the first of its component
        // has an already-placed neighbor.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for start in 0..n {
            if placed[start] {
                continue;
            }
            placed[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &(y, _) in self.base.neighbors(x) {
                    if !placed[y] {
                        placed[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; n];
        relabel_search(self, &mine, &theirs, &order, 0, &mut perms)
    }
}

fn relabel_search(
    cover: &Cover,
    mine: &BTreeMap<(usize, usize), BTreeSet<(usize, usize)>>,
    theirs: &BTreeMap<(usize, usize), BTreeSet<(usize, usize)>>,
    order: &[usize],
    depth: usize,
    perms: &mut Vec<Option<Vec<usize>>>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let size = cover.list_sizes[v];
    let mut perm: Vec<usize> = (0..size).collect();
    loop {
        let consistent = cover.base.neighbors(v).iter().all(|&(w, _)| {
            let Some(pw) = &perms[w] else { return true };
            let (a, b) = (v.min(w), v.max(w));
            let (pa, pb) = if v < w { (&perm, pw) } else { (pw, &perm) };
            mine[&(a, b)]
                .iter()
                .all(|&(i, j)| theirs[&(a, b)].contains(&(pa[i], pb[j])))
        });
        if consistent {
            perms[v] = Some(perm.clone());
            if relabel_search(cover, mine, theirs, order, depth + 1, perms) {
                return true;
            }
            perms[v] = None;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{make_family, Family};

    fn c4() -> Multigraph {
        make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap()
    }

    #[test]
    fn single_edge_singletons() {
        let k2 = Multigraph::simple(2, &[(0, 1)]).unwrap();
        let cover = Cover::new(
            k2,
            vec![1, 1],
            BTreeMap::from([((0, 1), vec![vec![(0, 0)]])]),
        )
        .unwrap();
        assert!(!cover.is_transversal(&Transversal(vec![0, 0])));
        assert_eq!(cover.conflict_components(), vec![(2, 1)]);
    }

    #[test]
    fn aligned_cover_of_c4_is_two_c4() {
        let cover = Cover::aligned(c4(), vec![2; 4]).unwrap();
        assert_eq!(cover.conflict_components(), vec![(4, 4), (4, 4)]);
        assert!(cover.is_transversal(&Transversal(vec![0, 1, 0, 1])));
    }

    #[test]
    fn rejects_non_matchings_and_bad_counts() {
        let k2 = Multigraph::simple(2, &[(0, 1)]).unwrap();
        let bad = Cover::new(
            k2.clone(),
            vec![2, 2],
            BTreeMap::from([((0, 1), vec![vec![(0, 0), (0, 1)]])]),
        );
        assert!(matches!(bad, Err(Error::InvalidCover(_))));
        let range = Cover::new(
            k2.clone(),
            vec![2, 2],
            BTreeMap::from([((0, 1), vec![vec![(2, 0)]])]),
        );
        assert!(matches!(range, Err(Error::InvalidCover(_))));
        let count = Cover::new(
            k2.clone(),
            vec![2, 2],
            BTreeMap::from([((0, 1), vec![vec![], vec![]])]),
        );
        assert!(matches!(count, Err(Error::InvalidCover(_))));
        let missing = Cover::new(k2, vec![2, 2], BTreeMap::new());
        assert!(matches!(missing, Err(Error::InvalidCover(_))));
    }

    #[test]
    fn h_cover_check() {
        let cover = Cover::aligned(c4(), vec![2, 3, 2, 2]).unwrap();
        assert!(cover.is_h_cover(&[2, 2, 2, 2]));
        assert!(!cover.is_h_cover(&[2, 2, 3, 2]));
    }

    #[test]
    fn blowup_identity_and_shape() {
        let cover = hard_cover(HardFamily::EvenCycle, 2, 1).unwrap();
        assert_eq!(cover.blowup(1).unwrap(), cover);
        let b = cover.blowup(2).unwrap();
        assert_eq!(b.base(), &c4().multiple(2).unwrap());
        assert_eq!(b.list_sizes(), &[4, 4, 4, 4]);
        // each color of C_8 becomes 2 colors, each edge a K_{2,2}
        assert_eq!(b.conflict_components(), vec![(16, 32)]);
        assert_eq!(b.matchings(0, 1).len(), 2);
    }

    #[test]
    fn relabeling_detects_swaps() {
        let a = Cover::aligned(c4(), vec![2; 4]).unwrap();
        let mut m = a.all_matchings().clone();
        m.insert((0, 1), vec![vec![(0, 1), (1, 0)]]);
        m.insert((1, 2), vec![vec![(0, 1), (1, 0)]]);
        let b = Cover::new(c4(), vec![2; 4], m.clone()).unwrap();
        // two swaps cancel: still two disjoint 4-cycles
        assert!(a.is_relabeling_of(&b));
        m.insert((2, 3), vec![vec![(0, 1), (1, 0)]]);
        let c = Cover::new(c4(), vec![2; 4], m).unwrap();
        assert!(!a.is_relabeling_of(&c));
        assert_eq!(c.conflict_components(), vec![(8, 8)]);
    }

    #[test]
    fn permutations_enumerate_in_order() {
        let mut p = vec![0, 1, 2];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 6);
        assert_eq!(p, vec![2, 1, 0]);
    }
}
