use super::{check_h, PotentialParams, Rational};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Which preconditions of the `Φ_k > 1 + α` inequality hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiHypotheses {
    /// `3 <= h(v) <= k-1` everywhere.
    pub list_sizes_in_range: bool,
    /// `h(v) >= d(v)` everywhere.
    pub lists_cover_degrees: bool,
    pub gdp_tree: bool,
    /// No block is `(k-1)`-regular or `(k-2)`-regular.
    pub no_forbidden_regular_block: bool,
}

impl PhiHypotheses {
    pub fn all(&self) -> bool {
        self.list_sizes_in_range
            && self.lists_cover_degrees
            && self.gdp_tree
            && self.no_forbidden_regular_block
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiReport {
    pub value: Rational,
    /// `σ_h(T) = Σ (h(v) - d(v))`; may be negative when `h < d` somewhere.
    pub sigma: i64,
    /// `m(T)`, the number of edges beyond the skeleton.
    pub excess: usize,
    /// `|V_{k-1}(T)|`.
    pub top: usize,
    /// `|V^-_{k-1}(T)|`.
    pub below_top: usize,
    pub hypotheses: PhiHypotheses,
}

/// `Φ_k(T) = α σ_h(T) + m(T) + |V^-_{k-1}(T)| - |V_{k-1}(T)|` for a connected `T`.
pub fn phi(t: &Multigraph, h: &[usize], params: &PotentialParams) -> Result<PhiReport> {
    check_h(t, h, params)?;
    TreeFunctional::new(t, params)?.evaluate(h)
}

/// The parts of `Φ_k(T)` that do not depend on `h`, for evaluating many
/// list assignments on one tree.
#[derive(Debug, Clone)]
pub struct TreeFunctional {
    params: PotentialParams,
    degrees: Vec<usize>,
    excess: usize,
    gdp_tree: bool,
    no_forbidden_regular_block: bool,
}

impl TreeFunctional {
    pub fn new(t: &Multigraph, params: &PotentialParams) -> Result<Self> {
        if !t.is_connected() {
            return Err(Error::Disconnected);
        }
        let k = params.k;
        let class = t.classify_gdp();
        let blocks = &class.components[0].blocks;
        Ok(TreeFunctional {
            params: *params,
            degrees: t.degrees(),
            excess: t.excess(),
            gdp_tree: class.is_gdp_tree(),
            no_forbidden_regular_block: blocks
                .iter()
                .all(|(_, f)| !matches!(f.regularity(), Some(r) if r + 1 == k || r + 2 == k)),
        })
    }

    pub fn evaluate(&self, h: &[usize]) -> Result<PhiReport> {
        let k = self.params.k;
        let n = self.degrees.len();
        if h.len() != n {
            return Err(Error::ListSizeLength {
                expected: n,
                got: h.len(),
            });
        }
        if let Some(v) = h.iter().position(|&x| x >= k) {
            return Err(Error::ListSizeOutOfRange {
                vertex: v,
                h: h[v],
                max: k - 1,
            });
        }
        let sigma: i64 = (0..n).map(|v| h[v] as i64 - self.degrees[v] as i64).sum();
        let top = h.iter().filter(|&&x| x == k - 1).count();
        let below_top = n - top;
        let value = self.params.alpha * sigma
            + Rational::from_integer(self.excess as i64 + below_top as i64 - top as i64);
        let hypotheses = PhiHypotheses {
            list_sizes_in_range: h.iter().all(|&x| (3..k).contains(&x)),
            lists_cover_degrees: (0..n).all(|v| h[v] >= self.degrees[v]),
            gdp_tree: self.gdp_tree,
            no_forbidden_regular_block: self.no_forbidden_regular_block,
        };
        Ok(PhiReport {
            value,
            sigma,
            excess: self.excess,
            top,
            below_top,
            hypotheses,
        })
    }
}
