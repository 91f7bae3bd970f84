#![allow(dead_code)]

use dpcolor::multigraph::Multigraph;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Multigraphs on `1..=max_n` vertices with every pair multiplicity in `0..=max_mult`.
pub fn arb_multigraph(max_n: usize, max_mult: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0..=max_mult, n * (n - 1) / 2)
            .prop_map(move |mults| build(n, &mults))
    })
}

pub fn arb_simple_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    arb_multigraph(max_n, 1)
}

pub fn arb_connected_multigraph(
    max_n: usize,
    max_mult: usize,
) -> impl Strategy<Value = Multigraph> {
    arb_multigraph(max_n, max_mult).prop_filter("connected", |g| g.is_connected())
}

/// Pair multiplicities in the order (0,1), (0,2), (1,2), (0,3), ...
pub fn build(n: usize, mults: &[usize]) -> Multigraph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if mults[i] > 0 {
                edges.push((u, v, mults[i]));
            }
            i += 1;
        }
    }
    Multigraph::new(n, &edges).unwrap()
}

pub fn random_multigraph(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_mult: usize,
    density: f64,
) -> Multigraph {
    let mults: Vec<usize> = (0..n * (n - 1) / 2)
        .map(|_| {
            if rng.gen_bool(density) {
                rng.gen_range(1..=max_mult)
            } else {
                0
            }
        })
        .collect();
    build(n, &mults)
}

/// Every assignment of `0..sizes[v]` to each vertex, in lexicographic order.
pub fn for_each_assignment(sizes: &[usize], mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if sizes.contains(&0) {
        return false;
    }
    let mut a = vec![0; sizes.len()];
    loop {
        if f(&a) {
            return true;
        }
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            a[i] += 1;
            if a[i] < sizes[i] {
                break;
            }
            a[i] = 0;
        }
    }
}

pub fn is_proper(g: &Multigraph, colors: &[usize]) -> bool {
    g.pairs().all(|(u, v, _)| colors[u] != colors[v])
}

pub fn chromatic_number(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    (1..=n)
        .find(|&c| for_each_assignment(&vec![c; n], |a| is_proper(g, a)))
        .unwrap_or(0)
}

/// Number of proper colorings choosing `lists[v][i]` at each vertex.
pub fn count_list_colorings(g: &Multigraph, lists: &[Vec<String>]) -> u64 {
    let sizes: Vec<usize> = lists.iter().map(Vec::len).collect();
    let mut count = 0;
    for_each_assignment(&sizes, |a| {
        if g.pairs().all(|(u, v, _)| lists[u][a[u]] != lists[v][a[v]]) {
            count += 1;
        }
        false
    });
    count
}

/// Whether every assignment of `c`-lists has a proper coloring.
/// Lists are drawn up to renaming: each new vertex's list takes some old
/// colors and the lowest unused fresh ones.
pub fn is_choosable(g: &Multigraph, c: usize) -> bool {
    fn subsets(pool: usize, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            start: usize,
            pool: usize,
            size: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == size {
                out.push(cur.clone());
                return;
            }
            for x in start..pool {
                cur.push(x);
                rec(x + 1, pool, size, cur, out);
                cur.pop();
            }
        }
        rec(0, pool, size, &mut cur, &mut out);
        out
    }
    fn rec(g: &Multigraph, c: usize, v: usize, used: usize, lists: &mut Vec<Vec<usize>>) -> bool {
        let n = g.vertex_count();
        if v == n {
            let sizes = vec![c; n];
            return for_each_assignment(&sizes, |a| {
                g.pairs().all(|(x, y, _)| lists[x][a[x]] != lists[y][a[y]])
            });
        }
        for fresh in 0..=c {
            if c - fresh > used {
                continue;
            }
            for old in subsets(used, c - fresh) {
                let mut list = old;
                list.extend(used..used + fresh);
                lists.push(list);
                let ok = rec(g, c, v + 1, used + fresh, lists);
                lists.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    c >= 1 && rec(g, c, 0, 0, &mut Vec::new())
}

pub fn choice_number(g: &Multigraph) -> usize {
    (1..=g.vertex_count().max(1))
        .find(|&c| is_choosable(g, c))
        .unwrap()
}

/// All injections from `0..a` into `0..b` when `a <= b`, as `(i, image)` pairs,
/// and the transposed ones otherwise.
fn maximum_matchings(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    fn injections(a: usize, b: usize) -> Vec<Vec<usize>> {
        if a == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for prefix in injections(a - 1, b) {
            for x in 0..b {
                if !prefix.contains(&x) {
                    let mut p = prefix.clone();
                    p.push(x);
                    out.push(p);
                }
            }
        }
        out
    }
    if a <= b {
        injections(a, b)
            .into_iter()
            .map(|f| f.into_iter().enumerate().collect())
            .collect()
    } else {
        injections(b, a)
            .into_iter()
            .map(|f| f.into_iter().enumerate().map(|(j, i)| (i, j)).collect())
            .collect()
    }
}

/// DP h-colorability by trying every cover whose edge copies carry maximum
/// matchings, and every choice of one color per list on each.
pub fn dp_colorable_brute(g: &Multigraph, h: &[usize]) -> bool {
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for (u, v, s) in g.pairs() {
        for _ in 0..s {
            slots.push((u, v));
        }
    }
    let options: Vec<Vec<Vec<(usize, usize)>>> = slots
        .iter()
        .map(|&(u, v)| maximum_matchings(h[u], h[v]))
        .collect();
    if h.contains(&0) {
        return false;
    }
    let radices: Vec<usize> = options.iter().map(Vec::len).collect();
    !for_each_assignment(&radices, |pick| {
        let colorable = for_each_assignment(h, |colors| {
            slots
                .iter()
                .enumerate()
                .all(|(e, &(u, v))| !options[e][pick[e]].contains(&(colors[u], colors[v])))
        });
        !colorable
    })
}

pub fn dp_chromatic_brute(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    (1..).find(|&c| dp_colorable_brute(g, &vec![c; n])).unwrap()
}
