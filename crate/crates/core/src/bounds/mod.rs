//! Closed-form lower bounds on edge counts of critical graphs.

mod table;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::potential::{is_exceptional, rho, PotentialParams, Rational};

pub use table::{format_decimal, table1, Rendering, Table, TABLE_SOURCES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundSource {
    Dirac,
    Gallai,
    Krivelevich,
    KostochkaStiebitz,
    KostochkaYancey,
    Rabern,
    /// `k - 1 + 1/λ` for DP-critical graphs.
    DpPotential,
}

impl BoundSource {
    pub const ALL: [BoundSource; 7] = [
        BoundSource::Dirac,
        BoundSource::Gallai,
        BoundSource::Krivelevich,
        BoundSource::KostochkaStiebitz,
        BoundSource::KostochkaYancey,
        BoundSource::Rabern,
        BoundSource::DpPotential,
    ];

    /// Short tag used on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            BoundSource::Dirac => "dirac",
            BoundSource::Gallai => "gallai",
            BoundSource::Krivelevich => "krivelevich",
            BoundSource::KostochkaStiebitz => "ks",
            BoundSource::KostochkaYancey => "ky",
            BoundSource::Rabern => "rabern",
            BoundSource::DpPotential => "dp",
        }
    }

    /// Column heading in the comparison table.
    pub fn label(self) -> &'static str {
        match self {
            BoundSource::Dirac => "Dirac",
            BoundSource::Gallai => "Ga",
            BoundSource::Krivelevich => "Kr",
            BoundSource::KostochkaStiebitz => "KS",
            BoundSource::KostochkaYancey => "KY",
            BoundSource::Rabern => "Ra",
            BoundSource::DpPotential => "DP",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.tag() == tag)
    }

    pub fn min_k(self) -> usize {
        match self {
            BoundSource::KostochkaStiebitz => 6,
            BoundSource::DpPotential => 5,
            _ => 4,
        }
    }

    /// Whether the edge bound is claimed for `n` vertices.
    pub fn valid_n(self, n: usize, k: usize) -> bool {
        match self {
            BoundSource::KostochkaYancey => n >= k && n != k + 1,
            BoundSource::DpPotential => true,
            _ => n >= k + 2,
        }
    }

    fn check_k(self, k: usize) -> Result<()> {
        if k < self.min_k() {
            Err(Error::InvalidParameter(format!(
                "{} bound needs k >= {}, got {k}",
                self.tag(),
                self.min_k()
            )))
        } else {
            Ok(())
        }
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// The coefficient `c` in a bound of the form `|E| >= c·n/2 + const`.
pub fn avg_degree_coefficient(source: BoundSource, k: usize) -> Result<Rational> {
    source.check_k(k)?;
    let ki = k as i64;
    let base = Rational::from_integer(ki - 1);
    let extra = match source {
        BoundSource::Dirac => Rational::zero(),
        BoundSource::Gallai => r(ki - 3, ki * ki - 3),
        BoundSource::Krivelevich => r(ki - 3, ki * ki - 2 * ki - 1),
        BoundSource::KostochkaStiebitz => {
            // 2(k-3) / (k² + 6k - 9 - 6/(k-2)), cleared of the inner fraction
            r(
                2 * (ki - 3) * (ki - 2),
                (ki * ki + 6 * ki - 9) * (ki - 2) - 6,
            )
        }
        BoundSource::KostochkaYancey => r(ki - 3, ki - 1),
        BoundSource::Rabern => match k {
            4 | 5 => r(ki - 3, ki * ki - 2 * ki + 2),
            6 => r(93, 766),
            _ => r(
                (ki - 3) * (ki - 3) * (2 * ki - 3),
                ki.pow(4) - 2 * ki.pow(3) - 11 * ki * ki + 28 * ki - 14,
            ),
        },
        BoundSource::DpPotential => r(1, PotentialParams::new(k)?.lambda),
    };
    Ok(base + extra)
}

/// The additive constant of the edge bound.
fn additive(source: BoundSource, k: usize) -> Result<Rational> {
    let ki = k as i64;
    Ok(match source {
        BoundSource::Dirac => r(ki - 3, 2),
        BoundSource::KostochkaYancey => -r(ki * (ki - 3), 2 * (ki - 1)),
        BoundSource::DpPotential => r(1, PotentialParams::new(k)?.lambda),
        _ => Rational::zero(),
    })
}

/// Lower bound on the number of edges of an `n`-vertex critical graph.
pub fn min_edges(source: BoundSource, n: usize, k: usize) -> Result<Rational> {
    source.check_k(k)?;
    if !source.valid_n(n, k) {
        return Err(Error::InvalidParameter(format!(
            "{} bound does not apply to n={n}, k={k}",
            source.tag()
        )));
    }
    Ok(avg_degree_coefficient(source, k)? * r(n as i64, 2) + additive(source, k)?)
}

/// How a graph fits the three-way conclusion for DP `k`-critical graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    /// `G = K_k`.
    Complete,
    /// `k = 5` and `G` is `K_2^4` or a double cycle.
    QuadrupleEdgeOrDoubleCycle,
    /// Enough edges.
    EdgeThreshold,
    /// None of the three; such a graph cannot be DP `k`-critical.
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub k: usize,
    pub lambda: i64,
    pub vertices: usize,
    pub edges: usize,
    pub case: Trichotomy,
    pub threshold: Rational,
    pub meets_threshold: bool,
    /// `ρ_h(G)` with `h ≡ k-1`.
    pub potential: i64,
    /// For simple graphs: `ρ_h(G) <= -2` exactly when the edge threshold is met.
    pub potential_matches_threshold: Option<bool>,
}

/// Places `g` in the trichotomy for DP `k`-critical graphs.
pub fn audit_graph(g: &Multigraph, k: usize) -> Result<AuditReport> {
    let params = PotentialParams::new(k)?;
    let n = g.vertex_count();
    let edges = g.edge_count();
    let threshold = min_edges(BoundSource::DpPotential, n, k)?;
    let meets_threshold = Rational::from_integer(edges as i64) >= threshold;
    let potential = rho(g, &vec![k - 1; n], &params)?;
    let case = if n == k && g.is_complete_simple() {
        Trichotomy::Complete
    } else if k == 5 && !g.is_simple() && is_exceptional(g, 5) {
        Trichotomy::QuadrupleEdgeOrDoubleCycle
    } else if meets_threshold {
        Trichotomy::EdgeThreshold
    } else {
        Trichotomy::Neither
    };
    Ok(AuditReport {
        k,
        lambda: params.lambda,
        vertices: n,
        edges,
        case,
        threshold,
        meets_threshold,
        potential,
        potential_matches_threshold: g
            .is_simple()
            .then_some((potential <= -2) == meets_threshold),
    })
}
