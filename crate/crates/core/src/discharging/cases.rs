use super::ChargeLedger;
use crate::potential::{phi, PhiHypotheses, PotentialParams, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Non-low, `h(v) < d(v) <= k-1`.
    N1,
    /// Non-low, `h(v) < d(v) = k`.
    N2,
    /// Non-low, `h(v) < d(v)`, `d(v) >= k+1`.
    N3,
    /// Low with `h(v) <= k-2`.
    L1,
    /// Low with `h(v) = k-1`.
    L2,
    /// Non-low with `h(v) > d(v)`; no bound applies.
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub vertex: usize,
    pub tag: CaseTag,
    pub final_charge: Rational,
    /// Upper bound on the final charge; `None` for [`CaseTag::Unbounded`].
    pub bound: Option<Rational>,
    /// Every inequality in the case's chain holds.
    pub holds: bool,
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

/// Tags each vertex of `S₀*` and checks the upper bound for its case.
pub fn check_cases(ledger: &ChargeLedger) -> Vec<CaseReport> {
    let g = &ledger.graph;
    let p: &PotentialParams = &ledger.params;
    let (k, lambda, alpha) = (p.k as i64, p.lambda, p.alpha);
    let sets = &ledger.sets;
    let in_b0 = |w: usize| sets.b0.binary_search(&w).is_ok();
    sets.s0_star
        .iter()
        .map(|&v| {
            let vc = &ledger.vertices[v];
            let ch = vc.final_charge;
            let (h, d) = (vc.h as i64, vc.degree as i64);
            let (tag, bound, holds) = if sets.is_low(v) {
                let excess = int(d - g.simple_degree(v) as i64) / 2;
                let d_star = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&(w, _)| sets.contains(w))
                    .map(|&(_, s)| s as i64)
                    .sum::<i64>();
                let d_low = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&(w, _)| in_b0(w))
                    .map(|&(_, s)| s as i64)
                    .sum::<i64>();
                let (tag, lead) = if h == k - 1 {
                    (CaseTag::L2, 1)
                } else {
                    (CaseTag::L1, -1)
                };
                let bound = int(lead) - excess - alpha * (d_star - d_low);
                (tag, Some(bound), ch <= bound)
            } else if d <= h {
                (CaseTag::Unbounded, None, true)
            } else if d < k {
                let first = int(lambda * (h - d) - 1) + alpha * d;
                let second = int(-lambda - 1) + alpha * d;
                (
                    CaseTag::N1,
                    Some(first),
                    ch <= first && first <= second && second < int(-1),
                )
            } else if d == k {
                let bound = int(-lambda + 1) + alpha * k;
                (CaseTag::N2, Some(bound), ch <= bound && bound <= int(0))
            } else {
                let first = int((k - 1) * lambda + 1 - d * lambda) + alpha * d;
                let second = int(-lambda + 1) + alpha * k - int(lambda) + alpha;
                (
                    CaseTag::N3,
                    Some(first),
                    ch <= first && first <= second && second < int(-1),
                )
            };
            CaseReport {
                vertex: v,
                tag,
                final_charge: ch,
                bound,
                holds,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCheck {
    pub vertices: Vec<usize>,
    pub charge_sum: Rational,
    pub phi: Rational,
    /// `Σ ch*(v) <= -Φ_k(B) + α`.
    pub sum_within_phi_bound: bool,
    pub hypotheses: PhiHypotheses,
    /// `Σ ch*(v) < -1`, checked only when all hypotheses hold.
    pub strict_bound: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentSumReport {
    /// `S₀*` has no low vertex.
    Vacuous,
    Components(Vec<ComponentCheck>),
}

impl ComponentSumReport {
    pub fn holds(&self) -> bool {
        match self {
            ComponentSumReport::Vacuous => true,
            ComponentSumReport::Components(cs) => cs
                .iter()
                .all(|c| c.sum_within_phi_bound && c.strict_bound != Some(false)),
        }
    }
}

/// Compares the charge on each component of the low part of `S₀*` with `Φ_k`.
pub fn component_sum_vs_phi(ledger: &ChargeLedger) -> ComponentSumReport {
    let b0 = &ledger.sets.b0;
    if b0.is_empty() {
        return ComponentSumReport::Vacuous;
    }
    let low_part = ledger.graph.induced(b0);
    let params = &ledger.params;
    let checks = low_part
        .components()
        .into_iter()
        .map(|comp| {
            let vertices: Vec<usize> = comp.iter().map(|&i| b0[i]).collect();
            let b = low_part.induced(&comp);
            let hb: Vec<usize> = vertices.iter().map(|&v| ledger.h[v]).collect();
            let report = phi(&b, &hb, params).expect("components are connected and h is in range");
            let charge_sum: Rational = vertices
                .iter()
                .map(|&v| ledger.vertices[v].final_charge)
                .sum();
            let all = report.hypotheses.all();
            ComponentCheck {
                vertices,
                charge_sum,
                phi: report.value,
                sum_within_phi_bound: charge_sum <= -report.value + params.alpha,
                hypotheses: report.hypotheses,
                strict_bound: all.then_some(charge_sum < int(-1)),
            }
        })
        .collect();
    ComponentSumReport::Components(checks)
}

#[cfg(test)]
mod tests {
    use super::super::discharge;
    use super::*;
    use crate::multigraph::{make_family, Family, Multigraph};

    #[test]
    fn quadruple_edge_is_low_of_the_top_kind() {
        let k24 = make_family(&Family::CliqueMultiple { t: 2, q: 4 }).unwrap();
        let l = discharge(&k24, &[4, 4], 5).unwrap();
        let cases = check_cases(&l);
        assert!(cases.iter().all(|c| c.tag == CaseTag::L2 && c.holds));
        // 1 - (4-1)/2 - 0
        assert_eq!(cases[0].bound, Some(Rational::new(-1, 2)));
    }

    #[test]
    fn non_low_vertex_of_degree_k() {
        // a 5-wheel's hub has degree 5 = k with h = 4; the rim vertices are low with h = 3
        let g = Multigraph::simple(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
            ],
        )
        .unwrap();
        let l = discharge(&g, &[4, 3, 3, 3, 3, 3], 5).unwrap();
        let cases = check_cases(&l);
        assert_eq!(cases[0].tag, CaseTag::N2);
        assert_eq!(cases[0].bound, Some(Rational::from_integer(0)));
        assert!(cases.iter().all(|c| c.holds));
        let report = component_sum_vs_phi(&l);
        assert!(report.holds());
    }

    #[test]
    fn vacuous_without_low_vertices() {
        let c5 = make_family(&Family::CycleMultiple { n: 5, q: 1 }).unwrap();
        let l = discharge(&c5, &[3; 5], 5).unwrap();
        assert_eq!(component_sum_vs_phi(&l), ComponentSumReport::Vacuous);
        assert!(check_cases(&l).iter().all(|c| c.tag == CaseTag::Unbounded));
    }

    #[test]
    fn single_low_vertex_component() {
        // K_5 minus an edge plus h = degree on the two degree-3 vertices
        let k5 = make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap();
        let g = k5.with_edge_copy_removed(0, 1).unwrap();
        let l = discharge(&g, &[3, 3, 4, 4, 4], 5).unwrap();
        match component_sum_vs_phi(&l) {
            ComponentSumReport::Components(cs) => {
                assert!(cs.iter().all(|c| c.sum_within_phi_bound));
            }
            ComponentSumReport::Vacuous => panic!("expected low vertices"),
        }
    }
}
