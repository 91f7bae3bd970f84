use super::{is_dp_h_colorable, DecisionOptions, Status};
use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriticalityStatus {
    HMinimal,
    Colorable,
    HasNonColorableProperSubgraph,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Deletion {
    /// One copy of the pair `(u, v)` removed.
    EdgeCopy(usize, usize),
    /// An isolated vertex removed.
    Vertex(usize),
}

/// A proper subgraph that is already not colorable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperSubgraph {
    pub deletion: Deletion,
    pub graph: Multigraph,
    pub list_sizes: Vec<usize>,
    pub bad_cover: Cover,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    pub status: CriticalityStatus,
    /// A cover of the whole graph with no transversal.
    pub bad_cover: Option<Cover>,
    pub offending: Option<ProperSubgraph>,
    pub reason: Option<String>,
}

impl CriticalityReport {
    fn new(status: CriticalityStatus) -> Self {
        CriticalityReport {
            status,
            bad_cover: None,
            offending: None,
            reason: None,
        }
    }

    fn undecided(reason: Option<String>) -> Self {
        CriticalityReport {
            reason,
            ..Self::new(CriticalityStatus::Undecided)
        }
    }

    pub fn holds(&self) -> Option<bool> {
        match self.status {
            CriticalityStatus::HMinimal => Some(true),
            CriticalityStatus::Undecided => None,
            _ => Some(false),
        }
    }
}

/// Whether `g` is not DP `h`-colorable while every proper subgraph is.
///
/// Every proper subgraph lies inside `g` minus one edge copy or `g` minus
/// one isolated vertex, so only those are tested.
pub fn is_h_minimal(
    g: &Multigraph,
    h: &[usize],
    options: &DecisionOptions,
) -> Result<CriticalityReport> {
    let whole = is_dp_h_colorable(g, h, options)?;
    match whole.status {
        Status::Colorable => return Ok(CriticalityReport::new(CriticalityStatus::Colorable)),
        Status::Undecided => return Ok(CriticalityReport::undecided(whole.reason)),
        Status::NotColorable => {}
    }
    let mut candidates: Vec<(Deletion, Multigraph, Vec<usize>)> = Vec::new();
    for (u, v, _) in g.pairs() {
        let smaller = g.with_edge_copy_removed(u, v).expect("pair is present");
        candidates.push((Deletion::EdgeCopy(u, v), smaller, h.to_vec()));
    }
    if g.vertex_count() > 1 {
        for w in g.isolated_vertices() {
            let (smaller, kept) = g.remove_vertices(&[w]);
            let hs = kept.iter().map(|&x| h[x]).collect();
            candidates.push((Deletion::Vertex(w), smaller, hs));
        }
    }
    for (deletion, graph, list_sizes) in candidates {
        let sub = is_dp_h_colorable(&graph, &list_sizes, options)?;
        match sub.status {
            Status::Colorable => {}
            Status::Undecided => return Ok(CriticalityReport::undecided(sub.reason)),
            Status::NotColorable => {
                return Ok(CriticalityReport {
                    bad_cover: whole.bad_cover,
                    offending: Some(ProperSubgraph {
                        deletion,
                        graph,
                        list_sizes,
                        bad_cover: sub.bad_cover.expect("negative verdicts carry a cover"),
                    }),
                    ..CriticalityReport::new(CriticalityStatus::HasNonColorableProperSubgraph)
                })
            }
        }
    }
    Ok(CriticalityReport {
        bad_cover: whole.bad_cover,
        ..CriticalityReport::new(CriticalityStatus::HMinimal)
    })
}

/// DP `k`-criticality: `h`-minimality for `h` identically `k - 1`.
pub fn is_dp_critical(
    g: &Multigraph,
    k: usize,
    options: &DecisionOptions,
) -> Result<CriticalityReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("criticality needs k >= 1".into()));
    }
    is_h_minimal(g, &vec![k - 1; g.vertex_count()], options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{make_family, Family};

    fn opts() -> DecisionOptions {
        DecisionOptions::default()
    }

    #[test]
    fn small_minimal_graphs() {
        let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
        assert_eq!(
            is_h_minimal(&c4, &[2; 4], &opts()).unwrap().status,
            CriticalityStatus::HMinimal
        );
        let k24 = make_family(&Family::CliqueMultiple { t: 2, q: 4 }).unwrap();
        assert_eq!(
            is_h_minimal(&k24, &[4; 2], &opts()).unwrap().status,
            CriticalityStatus::HMinimal
        );
        assert_eq!(
            is_dp_critical(&k24, 5, &opts()).unwrap().status,
            CriticalityStatus::HMinimal
        );
    }

    #[test]
    fn four_cycle_is_not_five_critical() {
        let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
        assert_eq!(
            is_dp_critical(&c4, 5, &opts()).unwrap().status,
            CriticalityStatus::Colorable
        );
    }

    #[test]
    fn pendant_edge_spoils_minimality() {
        let g = Multigraph::simple(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let r = is_h_minimal(&g, &[2; 5], &opts()).unwrap();
        assert_eq!(r.status, CriticalityStatus::HasNonColorableProperSubgraph);
        assert_eq!(r.offending.unwrap().deletion, Deletion::EdgeCopy(3, 4));
    }

    #[test]
    fn isolated_vertex_spoils_minimality() {
        let g = Multigraph::new(3, &[(0, 1, 4)]).unwrap();
        let r = is_h_minimal(&g, &[4, 4, 4], &opts()).unwrap();
        assert_eq!(r.status, CriticalityStatus::HasNonColorableProperSubgraph);
        assert_eq!(r.offending.unwrap().deletion, Deletion::Vertex(2));
        let r = is_h_minimal(&g, &[4, 4, 5], &opts()).unwrap();
        assert_eq!(r.status, CriticalityStatus::HasNonColorableProperSubgraph);
    }

    #[test]
    fn single_vertex_is_one_critical() {
        assert_eq!(
            is_dp_critical(&Multigraph::empty(1), 1, &opts())
                .unwrap()
                .status,
            CriticalityStatus::HMinimal
        );
    }
}
