//! Exhaustive enumeration of `h`-covers.
//!
//! A [`CoverSpace`] fixes, for every adjacent pair, the ordered list of
//! admissible matching choices. A cover is a tuple of choice indices, one
//! per pair, ordered lexicographically with the last pair varying fastest.
//!
//! Two reductions are available:
//!
//! * `maximal_only`: every matching is maximal, i.e. saturates the shorter
//!   list. Extra `H`-edges only remove transversals, so a non-colorable
//!   cover exists iff one made of maximal matchings exists.
//! * `tree_normalized`: along a BFS spanning forest, the child's list is
//!   relabeled so that one matching of the tree pair matches the child's
//!   colors `0, 1, ..` to an increasing sequence of parent colors. When the
//!   child's list is at least as long as the parent's and matchings are
//!   maximal, this is the identity `i -> i`.

use std::collections::VecDeque;

use crate::cover::{Cover, Matching};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Lists longer than this cannot be represented by the bitmask solver.
pub const MAX_LIST_SIZE: usize = 64;

/// Per-pair choice lists larger than this are refused.
const MAX_PAIR_CHOICES: u128 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub maximal_only: bool,
    pub tree_normalized: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            maximal_only: true,
            tree_normalized: true,
        }
    }
}

impl EnumerationOptions {
    /// No reduction at all: every matching, every labeling.
    pub fn raw() -> Self {
        EnumerationOptions {
            maximal_only: false,
            tree_normalized: false,
        }
    }
}

/// One admissible multiset of matchings on a pair, with its union as masks.
#[derive(Debug, Clone)]
pub(crate) struct PairChoice {
    pub matchings: Vec<Matching>,
    /// `forward[i]`: colors of `v` adjacent to color `i` of `u`.
    pub forward: Vec<u64>,
    /// `backward[j]`: colors of `u` adjacent to color `j` of `v`.
    pub backward: Vec<u64>,
}

#[derive(Debug, Clone)]
pub(crate) struct PairSpace {
    pub u: usize,
    pub v: usize,
    pub choices: Vec<PairChoice>,
}

/// The set of all `h`-covers of a graph under the chosen reductions.
#[derive(Debug, Clone)]
pub struct CoverSpace {
    base: Multigraph,
    list_sizes: Vec<usize>,
    pub(crate) pairs: Vec<PairSpace>,
    /// For each vertex: `(neighbor, pair index, vertex is the pair's u)`.
    pub(crate) incidence: Vec<Vec<(usize, usize, bool)>>,
}

fn all_matchings(a: usize, b: usize, maximal_only: bool) -> Vec<Matching> {
    // Assigns a partner (or none, unless `total`) to each row in turn.
    fn go(
        i: usize,
        a: usize,
        b: usize,
        total: bool,
        used: &mut [bool],
        cur: &mut Matching,
        out: &mut Vec<Matching>,
    ) {
        if i == a {
            out.push(cur.clone());
            return;
        }
        if !total {
            go(i + 1, a, b, total, used, cur, out);
        }
        for j in 0..b {
            if !used[j] {
                used[j] = true;
                cur.push((i, j));
                go(i + 1, a, b, total, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    if !maximal_only {
        go(
            0,
            a,
            b,
            false,
            &mut vec![false; b],
            &mut Vec::new(),
            &mut out,
        );
    } else if a <= b {
        go(
            0,
            a,
            b,
            true,
            &mut vec![false; b],
            &mut Vec::new(),
            &mut out,
        );
    } else {
        go(
            0,
            b,
            a,
            true,
            &mut vec![false; a],
            &mut Vec::new(),
            &mut out,
        );
        for m in &mut out {
            for e in m.iter_mut() {
                *e = (e.1, e.0);
            }
        }
    }
    for m in &mut out {
        m.sort_unstable();
    }
    out.sort();
    out
}

/// Matchings `{(S[r], r)}` for increasing parent sequences `S`, oriented as
/// `(parent color, child color)`.
fn canonical_tree_matchings(parent: usize, child: usize, maximal_only: bool) -> Vec<Matching> {
    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            subsets(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    let top = parent.min(child);
    let sizes: Vec<usize> = if maximal_only {
        vec![top]
    } else {
        (0..=top).collect()
    };
    let mut out = Vec::new();
    for m in sizes {
        let mut subs = Vec::new();
        subsets(parent, m, 0, &mut Vec::new(), &mut subs);
        for s in subs {
            out.push(s.into_iter().enumerate().map(|(r, p)| (p, r)).collect());
        }
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Non-decreasing index sequences of length `r` over `0..m`.
fn multisets(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn go(m: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            cur.push(x);
            go(m, r, x, cur, out);
            cur.pop();
        }
    }
    go(m, r, 0, &mut cur, &mut out);
    out
}

fn masks(a: usize, b: usize, matchings: &[Matching]) -> (Vec<u64>, Vec<u64>) {
    let mut forward = vec![0u64; a];
    let mut backward = vec![0u64; b];
    for m in matchings {
        for &(i, j) in m {
            forward[i] |= 1 << j;
            backward[j] |= 1 << i;
        }
    }
    (forward, backward)
}

/// Parent of each non-root vertex in the BFS forest rooted at the least
/// vertex of each component, scanning neighbors in increasing order.
fn bfs_parents(g: &Multigraph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
    }
    parent
}

impl CoverSpace {
    /// Builds the space of covers of `g` with `|L(v)| = h(v)` exactly.
    /// Longer lists only add colorings, so these are the worst cases.
    pub fn new(g: &Multigraph, h: &[usize], options: EnumerationOptions) -> Result<Self> {
        let n = g.vertex_count();
        if h.len() != n {
            return Err(Error::ListSizeLength {
                expected: n,
                got: h.len(),
            });
        }
        if let Some(v) = (0..n).find(|&v| h[v] > MAX_LIST_SIZE) {
            return Err(Error::InvalidParameter(format!(
                "list size {} at vertex {v} exceeds {MAX_LIST_SIZE}",
                h[v]
            )));
        }
        let parent = if options.tree_normalized {
            bfs_parents(g)
        } else {
            vec![None; n]
        };
        let mut pairs = Vec::with_capacity(g.pair_count());
        let mut incidence = vec![Vec::new(); n];
        for (u, v, s) in g.pairs() {
            let (a, b) = (h[u], h[v]);
            let free = all_matchings(a, b, options.maximal_only);
            let tree_orientation = if parent[v] == Some(u) {
                Some(false)
            } else if parent[u] == Some(v) {
                Some(true)
            } else {
                None
            };
            let (frozen, rest): (Vec<Matching>, usize) = match tree_orientation {
                None => (Vec::new(), s),
                Some(child_is_u) => {
                    let (p, c) = if child_is_u { (b, a) } else { (a, b) };
                    let canon = canonical_tree_matchings(p, c, options.maximal_only)
                        .into_iter()
                        .map(|m| {
                            let mut m: Matching = if child_is_u {
                                m.into_iter().map(|(pc, cc)| (cc, pc)).collect()
                            } else {
                                m
                            };
                            m.sort_unstable();
                            m
                        })
                        .collect();
                    (canon, s - 1)
                }
            };
            let count = binomial((free.len() + rest).saturating_sub(1) as u128, rest as u128)
                .saturating_mul(frozen.len().max(1) as u128);
            if count > MAX_PAIR_CHOICES {
                return Err(Error::InvalidParameter(format!(
                    "pair {u}-{v} admits {count} matching choices; too many to enumerate"
                )));
            }
            let mut choices = Vec::new();
            let heads: Vec<Option<&Matching>> = if tree_orientation.is_some() {
                frozen.iter().map(Some).collect()
            } else {
                vec![None]
            };
            for head in heads {
                for tail in multisets(free.len(), rest) {
                    let mut ms: Vec<Matching> = head.into_iter().cloned().collect();
                    ms.extend(tail.iter().map(|&x| free[x].clone()));
                    let (forward, backward) = masks(a, b, &ms);
                    choices.push(PairChoice {
                        matchings: ms,
                        forward,
                        backward,
                    });
                }
            }
            let idx = pairs.len();
            incidence[u].push((v, idx, true));
            incidence[v].push((u, idx, false));
            pairs.push(PairSpace { u, v, choices });
        }
        Ok(CoverSpace {
            base: g.clone(),
            list_sizes: h.to_vec(),
            pairs,
            incidence,
        })
    }

    pub fn base(&self) -> &Multigraph {
        &self.base
    }

    pub fn list_sizes(&self) -> &[usize] {
        &self.list_sizes
    }

    /// Number of covers in the space, saturating.
    pub fn len(&self) -> u128 {
        self.pairs
            .iter()
            .fold(1u128, |acc, p| acc.saturating_mul(p.choices.len() as u128))
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of choices for each pair, in canonical pair order.
    pub fn radices(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.choices.len()).collect()
    }

    /// Choice digits of the cover at `index` (last pair fastest).
    pub fn digits(&self, mut index: u128) -> Vec<usize> {
        let mut digits = vec![0; self.pairs.len()];
        for (d, p) in digits.iter_mut().zip(&self.pairs).rev() {
            let r = p.choices.len() as u128;
            *d = (index % r) as usize;
            index /= r;
        }
        digits
    }

    /// Advances `digits` to the next cover; `false` after the last one.
    pub fn advance(&self, digits: &mut [usize]) -> bool {
        for (d, p) in digits.iter_mut().zip(&self.pairs).rev() {
            *d += 1;
            if *d < p.choices.len() {
                return true;
            }
            *d = 0;
        }
        false
    }

    /// Materializes the cover with the given choice digits.
    pub fn cover(&self, digits: &[usize]) -> Cover {
        let matchings = self
            .pairs
            .iter()
            .zip(digits)
            .map(|(p, &d)| ((p.u, p.v), p.choices[d].matchings.clone()))
            .collect();
        Cover::new(self.base.clone(), self.list_sizes.clone(), matchings)
            .expect("enumerated covers are valid")
    }

    pub fn iter(&self) -> impl Iterator<Item = Cover> + '_ {
        let mut digits = Some(vec![0; self.pairs.len()]);
        std::iter::from_fn(move || {
            let cur = digits.take()?;
            let out = self.cover(&cur);
            let mut next = cur;
            if self.advance(&mut next) {
                digits = Some(next);
            }
            Some(out)
        })
    }
}

/// Every `h`-cover of `g` under the given reductions, in enumeration order.
pub fn enumerate_covers(
    g: &Multigraph,
    h: &[usize],
    options: EnumerationOptions,
) -> Result<Vec<Cover>> {
    let space = CoverSpace::new(g, h, options)?;
    Ok(space.iter().collect())
}
