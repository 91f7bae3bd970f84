//! Charge redistribution on a multigraph with list sizes.
//!
//! Every vertex starts with its potential and every adjacent pair with its
//! (negative) pair potential. Each pair is then paid off equally by its two
//! endpoints, and inside the special set `S₀*` every non-low vertex takes `α`
//! along each edge to a low vertex. The ledger keeps all charges exactly.

mod cases;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::potential::{rho, PotentialParams, Rational};

pub use cases::{
    check_cases, component_sum_vs_phi, CaseReport, CaseTag, ComponentCheck, ComponentSumReport,
};

/// The distinguished vertex sets used by the redistribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialSets {
    pub s0_star: Vec<usize>,
    /// Endpoint of the attaching cut edge inside `S₀*`.
    pub x0_star: Option<usize>,
    /// Endpoint of the attaching cut edge outside `S₀*`.
    pub y0_star: Option<usize>,
    /// Vertices with `h(v) = d(v)`.
    pub low_set: Vec<usize>,
    /// Low vertices inside `S₀*`.
    pub b0: Vec<usize>,
}

impl SpecialSets {
    pub fn contains(&self, v: usize) -> bool {
        self.s0_star.binary_search(&v).is_ok()
    }

    pub fn is_low(&self, v: usize) -> bool {
        self.low_set.binary_search(&v).is_ok()
    }
}

/// Computes `S₀*`: the whole vertex set of a bridgeless graph, otherwise
/// the smallest pendent edge-block that is not a single cut edge (fewest
/// vertices, then fewest edges, then least vertex list).
pub fn special_sets(g: &Multigraph, h: &[usize]) -> Result<SpecialSets> {
    let n = g.vertex_count();
    if h.len() != n {
        return Err(Error::ListSizeLength {
            expected: n,
            got: h.len(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let decomposition = g.edge_blocks();
    let (s0_star, attachment) = if decomposition.cut_edges.is_empty() {
        ((0..n).collect(), None)
    } else {
        let best = decomposition
            .edge_blocks
            .iter()
            .filter(|b| b.pendent && !b.is_cut_edge)
            .min_by_key(|b| {
                (
                    b.vertices.len(),
                    g.induced(&b.vertices).edge_count(),
                    b.vertices.clone(),
                )
            })
            .ok_or(Error::UndefinedSpecialSet)?;
        (best.vertices.clone(), best.attachment)
    };
    let low_set: Vec<usize> = (0..n).filter(|&v| h[v] == g.degree(v)).collect();
    let b0 = low_set
        .iter()
        .copied()
        .filter(|v| s0_star.binary_search(v).is_ok())
        .collect();
    Ok(SpecialSets {
        s0_star,
        x0_star: attachment.map(|(x, _)| x),
        y0_star: attachment.map(|(_, y)| y),
        low_set,
        b0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCharge {
    pub vertex: usize,
    pub h: usize,
    pub degree: usize,
    pub initial: Rational,
    /// After every incident pair has been paid.
    pub after_pairs: Rational,
    /// `ch*(v)`.
    pub final_charge: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCharge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: usize,
    pub initial: Rational,
    pub final_charge: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub params: PotentialParams,
    pub graph: Multigraph,
    pub h: Vec<usize>,
    pub sets: SpecialSets,
    pub vertices: Vec<VertexCharge>,
    pub pairs: Vec<PairCharge>,
    /// `ρ_h(G)`.
    pub potential: i64,
}

impl ChargeLedger {
    /// Sum of all final vertex and pair charges.
    pub fn total(&self) -> Rational {
        self.vertices
            .iter()
            .map(|v| v.final_charge)
            .sum::<Rational>()
            + self.pairs.iter().map(|p| p.final_charge).sum::<Rational>()
    }

    /// Total final charge outside `S₀*`.
    pub fn outside_total(&self) -> Rational {
        self.vertices
            .iter()
            .filter(|v| !self.sets.contains(v.vertex))
            .map(|v| v.final_charge)
            .sum()
    }
}

pub fn discharge(g: &Multigraph, h: &[usize], k: usize) -> Result<ChargeLedger> {
    let params = PotentialParams::new(k)?;
    let potential = rho(g, h, &params)?;
    let sets = special_sets(g, h)?;
    let lambda = params.lambda;

    let mut vertices: Vec<VertexCharge> = (0..g.vertex_count())
        .map(|v| {
            let initial = Rational::from_integer(params.rho_vertex(h[v])?);
            Ok(VertexCharge {
                vertex: v,
                h: h[v],
                degree: g.degree(v),
                initial,
                after_pairs: initial,
                final_charge: initial,
            })
        })
        .collect::<Result<_>>()?;
    let mut pairs = Vec::with_capacity(g.pair_count());
    for (u, v, s) in g.pairs() {
        let initial = Rational::from_integer(params.rho_pair(s));
        let share = Rational::new(s as i64 * (2 * lambda + 1) - 1, 2);
        vertices[u].after_pairs -= share;
        vertices[v].after_pairs -= share;
        pairs.push(PairCharge {
            u,
            v,
            multiplicity: s,
            initial,
            final_charge: initial + share + share,
        });
    }
    for vc in &mut vertices {
        vc.final_charge = vc.after_pairs;
    }
    for (u, v, s) in g.pairs() {
        if !sets.contains(u) || !sets.contains(v) {
            continue;
        }
        let flow = params.alpha * s as i64;
        match (sets.is_low(u), sets.is_low(v)) {
            (false, true) => {
                vertices[u].final_charge += flow;
                vertices[v].final_charge -= flow;
            }
            (true, false) => {
                vertices[v].final_charge += flow;
                vertices[u].final_charge -= flow;
            }
            _ => {}
        }
    }
    debug_assert!(pairs.iter().all(|p| p.final_charge.is_zero()));
    Ok(ChargeLedger {
        params,
        graph: g.clone(),
        h: h.to_vec(),
        sets,
        vertices,
        pairs,
        potential,
    })
}
