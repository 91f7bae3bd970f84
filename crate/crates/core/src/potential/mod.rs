//! The potential function `ρ` and the tree functional `Φ_k`.
//!
//! All values are exact: set potentials are `i64`, anything involving
//! `α = (k-2)/(2k-7)` is a [`Rational`].

mod phi;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub use phi::{phi, PhiHypotheses, PhiReport, TreeFunctional};

pub type Rational = Ratio<i64>;

/// The constants `k`, `λ = ⌈(k²-7)/(2k-7)⌉` and `α = (k-2)/(2k-7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PotentialParams {
    pub k: usize,
    pub lambda: i64,
    pub alpha: Rational,
}

/// A single term of the potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Local {
    /// A vertex with list size `h`.
    Vertex(usize),
    /// A pair joined by `s` parallel edges.
    Pair(usize),
}

impl PotentialParams {
    pub fn new(k: usize) -> Result<Self> {
        if k < 5 {
            return Err(Error::InvalidParameter(format!(
                "potential parameters need k >= 5, got {k}"
            )));
        }
        let k = k as i64;
        let lambda = Integer::div_ceil(&(k * k - 7), &(2 * k - 7));
        Ok(PotentialParams {
            k: k as usize,
            lambda,
            alpha: Rational::new(k - 2, 2 * k - 7),
        })
    }

    pub fn rho_vertex(&self, h: usize) -> Result<i64> {
        let k = self.k;
        if h >= k {
            return Err(Error::InvalidParameter(format!(
                "list size {h} exceeds k-1 = {}",
                k - 1
            )));
        }
        let base = h as i64 * self.lambda;
        Ok(match h {
            _ if h == k - 1 => base + 1,
            0 | 1 => base - 2,
            _ => base - 1,
        })
    }

    /// `0` for non-adjacent pairs, otherwise `1 - (2λ+1)s`.
    pub fn rho_pair(&self, s: usize) -> i64 {
        if s == 0 {
            0
        } else {
            1 - (2 * self.lambda + 1) * s as i64
        }
    }

    pub fn rho_local(&self, term: Local) -> Result<i64> {
        match term {
            Local::Vertex(h) => self.rho_vertex(h),
            Local::Pair(s) => Ok(self.rho_pair(s)),
        }
    }
}

fn check_h(g: &Multigraph, h: &[usize], params: &PotentialParams) -> Result<()> {
    if h.len() != g.vertex_count() {
        return Err(Error::ListSizeLength {
            expected: g.vertex_count(),
            got: h.len(),
        });
    }
    match h.iter().position(|&x| x >= params.k) {
        Some(v) => Err(Error::ListSizeOutOfRange {
            vertex: v,
            h: h[v],
            max: params.k - 1,
        }),
        None => Ok(()),
    }
}

/// `ρ_{G,h}(A)`. Repeated vertices in `a` count once.
pub fn rho_set(g: &Multigraph, h: &[usize], a: &[usize], params: &PotentialParams) -> Result<i64> {
    check_h(g, h, params)?;
    let mut a = a.to_vec();
    a.sort_unstable();
    a.dedup();
    if let Some(&v) = a.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: g.vertex_count(),
        });
    }
    let mut total = 0;
    for &v in &a {
        total += params.rho_vertex(h[v])?;
        for &(w, s) in g.neighbors(v) {
            if w > v && a.binary_search(&w).is_ok() {
                total += params.rho_pair(s);
            }
        }
    }
    Ok(total)
}

/// `ρ_h(G)`, the potential of the whole vertex set.
pub fn rho(g: &Multigraph, h: &[usize], params: &PotentialParams) -> Result<i64> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    rho_set(g, h, &all, params)
}

/// Complete simple graphs, and for `k = 5` also `K_2^4` and double cycles.
pub fn is_exceptional(g: &Multigraph, k: usize) -> bool {
    let n = g.vertex_count();
    if n >= 1 && g.is_complete_simple() {
        return true;
    }
    if k != 5 {
        return false;
    }
    if n == 2 && g.multiplicity(0, 1) == 4 {
        return true;
    }
    n >= 3
        && g.pair_count() == n
        && g.pairs().all(|(_, _, s)| s == 2)
        && (0..n).all(|v| g.simple_degree(v) == 2)
        && g.is_connected()
}

/// Whether `ρ(U1 ∪ U2) + ρ(U1 ∩ U2) <= ρ(U1) + ρ(U2)`.
pub fn check_submodular(
    g: &Multigraph,
    h: &[usize],
    u1: &[usize],
    u2: &[usize],
    params: &PotentialParams,
) -> Result<bool> {
    let union: Vec<usize> = u1.iter().chain(u2).copied().collect();
    let inter: Vec<usize> = u1.iter().filter(|v| u2.contains(v)).copied().collect();
    Ok(
        rho_set(g, h, &union, params)? + rho_set(g, h, &inter, params)?
            <= rho_set(g, h, u1, params)? + rho_set(g, h, u2, params)?,
    )
}

/// The least `ρ_G(A) - ρ(G)` over non-empty proper subsets `A`, or `None`
/// when `G` has fewer than two vertices.
pub fn min_proper_subset_gap(
    g: &Multigraph,
    h: &[usize],
    params: &PotentialParams,
) -> Result<Option<i64>> {
    let n = g.vertex_count();
    if n > 24 {
        return Err(Error::InvalidParameter(format!(
            "{n} vertices is too many for subset enumeration"
        )));
    }
    let whole = rho(g, h, params)?;
    let mut best: Option<i64> = None;
    for mask in 1u32..(1 << n) - 1 {
        let a: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let gap = rho_set(g, h, &a, params)? - whole;
        best = Some(best.map_or(gap, |b| b.min(gap)));
    }
    Ok(best)
}
