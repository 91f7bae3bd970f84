use std::collections::BTreeMap;

use rayon::prelude::*;

use super::search::{search, Instance, Order, Outcome};
use super::{ColorabilityVerdict, DecisionOptions, Status};
use crate::cover::{Cover, CoverSpace, Matching};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

const CHUNK: u128 = 1 << 14;

enum ChunkEnd {
    Bad(u128),
    OutOfNodes(u128),
}

fn instance_at<'a>(
    space: &'a CoverSpace,
    ends: &'a [(usize, usize)],
    digits: &[usize],
) -> Instance<'a> {
    Instance {
        sizes: space.list_sizes(),
        incidence: &space.incidence,
        ends,
        masks: space
            .pairs
            .iter()
            .zip(digits)
            .map(|(p, &d)| {
                (
                    p.choices[d].forward.as_slice(),
                    p.choices[d].backward.as_slice(),
                )
            })
            .collect(),
    }
}

/// Solves covers `start..end` of the space in order, reusing the last
/// transversal whenever it still fits.
fn scan_chunk(
    space: &CoverSpace,
    ends: &[(usize, usize)],
    start: u128,
    end: u128,
    max_nodes: u64,
) -> Option<ChunkEnd> {
    let mut digits = space.digits(start);
    let mut inst = instance_at(space, ends, &digits);
    let radices = space.radices();
    let mut cached: Option<Vec<usize>> = None;
    let mut index = start;
    loop {
        let reusable = cached.as_deref().is_some_and(|t| inst.is_transversal(t));
        if !reusable {
            let mut nodes = 0;
            match search(&inst, Order::FewestColors, max_nodes, &mut nodes) {
                Outcome::Found(t) => cached = Some(t),
                Outcome::Exhausted => return Some(ChunkEnd::Bad(index)),
                Outcome::OutOfBudget => return Some(ChunkEnd::OutOfNodes(index)),
            }
        }
        index += 1;
        if index >= end {
            return None;
        }
        let mut p = digits.len();
        loop {
            p -= 1;
            digits[p] += 1;
            if digits[p] < radices[p] {
                break;
            }
            digits[p] = 0;
        }
        for (q, &d) in digits.iter().enumerate().skip(p) {
            let c = &space.pairs[q].choices[d];
            inst.masks[q] = (c.forward.as_slice(), c.backward.as_slice());
        }
    }
}

enum Scan {
    AllColorable,
    Bad(Vec<usize>, u128),
    Undecided(String, u128),
}

fn scan(space: &CoverSpace, options: &DecisionOptions) -> Scan {
    let total = space.len();
    let limit = total.min(options.max_covers as u128);
    let ends: Vec<(usize, usize)> = space.pairs.iter().map(|p| (p.u, p.v)).collect();
    let chunks = limit.div_ceil(CHUNK);
    let run = |c: u128| {
        scan_chunk(
            space,
            &ends,
            c * CHUNK,
            ((c + 1) * CHUNK).min(limit),
            options.max_nodes,
        )
    };
    let first = if options.jobs > 1 && chunks > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build();
        match pool {
            Ok(pool) => pool.install(|| {
                (0..chunks as u64)
                    .into_par_iter()
                    .find_map_first(|c| run(c as u128))
            }),
            Err(_) => (0..chunks).find_map(run),
        }
    } else {
        (0..chunks).find_map(run)
    };
    match first {
        Some(ChunkEnd::Bad(i)) => Scan::Bad(space.digits(i), i + 1),
        Some(ChunkEnd::OutOfNodes(i)) => Scan::Undecided(
            format!(
                "node budget of {} exhausted on cover {i}",
                options.max_nodes
            ),
            i,
        ),
        None if limit < total => Scan::Undecided(
            format!(
                "cover budget of {} exhausted with {} covers unexamined",
                options.max_covers,
                total - limit
            ),
            limit,
        ),
        None => Scan::AllColorable,
    }
}

/// Vertices left after repeatedly removing any vertex whose list is longer
/// than its degree among the remaining vertices.
fn peel(g: &Multigraph, h: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| h[v] > deg[v]).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &(w, s) in g.neighbors(v) {
            if alive[w] {
                deg[w] -= s;
                if h[w] > deg[w] {
                    stack.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Extends a cover of `G[part]` to all of `g`, aligning the other pairs.
fn lift(g: &Multigraph, h: &[usize], part: &[usize], inner: &Cover) -> Cover {
    let mut matchings: BTreeMap<(usize, usize), Vec<Matching>> = BTreeMap::new();
    for (u, v, s) in g.pairs() {
        let inside = (part.binary_search(&u), part.binary_search(&v));
        let ms = match inside {
            (Ok(a), Ok(b)) => inner.matchings(a, b).to_vec(),
            _ => vec![(0..h[u].min(h[v])).map(|i| (i, i)).collect(); s],
        };
        matchings.insert((u, v), ms);
    }
    Cover::new(g.clone(), h.to_vec(), matchings).expect("lifted cover is valid")
}

/// Whether `g` has a transversal for every cover with `|L(v)| = h(v)`.
///
/// Returns the enumeration-least bad cover when the answer is no.
pub fn is_dp_h_colorable(
    g: &Multigraph,
    h: &[usize],
    options: &DecisionOptions,
) -> Result<ColorabilityVerdict> {
    let n = g.vertex_count();
    if h.len() != n {
        return Err(Error::ListSizeLength {
            expected: n,
            got: h.len(),
        });
    }
    let verdict = |status, bad_cover, covers_examined| ColorabilityVerdict {
        status,
        witness: None,
        bad_cover,
        covers_examined,
        reason: None,
    };
    if h.contains(&0) {
        return Ok(verdict(
            Status::NotColorable,
            Some(Cover::aligned(g.clone(), h.to_vec())?),
            0,
        ));
    }
    let core = if options.peel {
        peel(g, h)
    } else {
        (0..n).collect()
    };
    let rest = g.induced(&core);
    let mut examined = 0u128;
    let mut undecided: Option<String> = None;
    for comp in rest.components() {
        let part: Vec<usize> = comp.iter().map(|&i| core[i]).collect();
        let sub = g.induced(&part);
        let hs: Vec<usize> = part.iter().map(|&v| h[v]).collect();
        let space = CoverSpace::new(&sub, &hs, options.enumeration)?;
        match scan(&space, options) {
            Scan::AllColorable => examined += space.len(),
            Scan::Bad(digits, seen) => {
                let bad = lift(g, h, &part, &space.cover(&digits));
                return Ok(verdict(Status::NotColorable, Some(bad), examined + seen));
            }
            Scan::Undecided(reason, seen) => {
                examined += seen;
                undecided.get_or_insert(reason);
            }
        }
    }
    Ok(match undecided {
        Some(reason) => ColorabilityVerdict::undecided(reason, examined),
        None => verdict(Status::Colorable, None, examined),
    })
}

/// DP-colorability with `h(v) = d(v)`.
pub fn is_dp_degree_colorable(
    g: &Multigraph,
    options: &DecisionOptions,
) -> Result<ColorabilityVerdict> {
    is_dp_h_colorable(g, &g.degrees(), options)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiDp {
    Exact(usize),
    ExceedsMax(usize),
    Undecided { k: usize, reason: String },
}

/// The least `k <= max_k` such that `g` is DP `k`-colorable.
pub fn chi_dp(g: &Multigraph, max_k: usize, options: &DecisionOptions) -> Result<ChiDp> {
    let n = g.vertex_count();
    for k in 1..=max_k {
        let v = is_dp_h_colorable(g, &vec![k; n], options)?;
        match v.status {
            Status::Colorable => return Ok(ChiDp::Exact(k)),
            Status::NotColorable => {}
            Status::Undecided => {
                return Ok(ChiDp::Undecided {
                    k,
                    reason: v.reason.unwrap_or_default(),
                })
            }
        }
    }
    Ok(ChiDp::ExceedsMax(max_k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::EnumerationOptions;
    use crate::multigraph::{make_family, Family};

    fn opts() -> DecisionOptions {
        DecisionOptions::default()
    }

    #[test]
    fn four_cycle_is_not_two_colorable_and_the_bad_cover_is_an_eight_cycle() {
        let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
        let v = is_dp_h_colorable(&c4, &[2; 4], &opts()).unwrap();
        assert_eq!(v.status, Status::NotColorable);
        assert_eq!(v.bad_cover.unwrap().conflict_components(), vec![(8, 8)]);
    }

    #[test]
    fn five_cycle_bad_cover_is_two_five_cycles() {
        let c5 = make_family(&Family::CycleMultiple { n: 5, q: 1 }).unwrap();
        let v = is_dp_h_colorable(&c5, &[2; 5], &opts()).unwrap();
        assert_eq!(
            v.bad_cover.unwrap().conflict_components(),
            vec![(5, 5), (5, 5)]
        );
    }

    #[test]
    fn path_is_two_colorable_with_and_without_peeling() {
        let p3 = Multigraph::simple(3, &[(0, 1), (1, 2)]).unwrap();
        for peel in [true, false] {
            let o = DecisionOptions { peel, ..opts() };
            assert_eq!(
                is_dp_h_colorable(&p3, &[2; 3], &o).unwrap().status,
                Status::Colorable
            );
        }
    }

    #[test]
    fn degree_colorability_examples() {
        let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
        assert_eq!(
            is_dp_degree_colorable(&c4, &opts()).unwrap().status,
            Status::NotColorable
        );
        let diamond = Multigraph::simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            is_dp_degree_colorable(&diamond, &opts()).unwrap().status,
            Status::Colorable
        );
        let k1 = Multigraph::empty(1);
        let v = is_dp_degree_colorable(&k1, &opts()).unwrap();
        assert_eq!(v.status, Status::NotColorable);
        assert_eq!(v.bad_cover.unwrap().list_sizes(), &[0]);
    }

    #[test]
    fn chi_dp_examples() {
        let k5 = make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap();
        assert_eq!(chi_dp(&k5, 6, &opts()).unwrap(), ChiDp::Exact(5));
        let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
        assert_eq!(chi_dp(&c4, 6, &opts()).unwrap(), ChiDp::Exact(3));
        let star = Multigraph::simple(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(chi_dp(&star, 6, &opts()).unwrap(), ChiDp::Exact(2));
        assert_eq!(chi_dp(&k5, 3, &opts()).unwrap(), ChiDp::ExceedsMax(3));
    }

    #[test]
    fn cover_budget_yields_undecided() {
        let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
        let o = DecisionOptions {
            max_covers: 1,
            enumeration: EnumerationOptions::raw(),
            ..opts()
        };
        let v = is_dp_h_colorable(&c4, &[2; 4], &o).unwrap();
        assert_eq!(v.status, Status::Undecided);
        assert!(v.reason.unwrap().contains("cover budget"));
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        let g = Multigraph::new(3, &[(0, 1, 2), (1, 2, 2), (0, 2, 1)]).unwrap();
        let h = [4, 4, 3];
        let seq = is_dp_h_colorable(&g, &h, &opts()).unwrap();
        let par = is_dp_h_colorable(&g, &h, &DecisionOptions { jobs: 4, ..opts() }).unwrap();
        assert_eq!(seq, par);
    }
}
