use crate::cover::Cover;
use crate::error::{Error, Result};
use crate::multigraph::{make_family, Family};

/// The three families with a unique non-colorable cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HardFamily {
    /// `C_{2t}^q` with lists of size `2q`.
    EvenCycle,
    /// `K_t^q` with lists of size `(t-1)q`.
    Clique,
    /// `C_{2t+1}^q` with lists of size `2q`.
    OddCycle,
}

impl HardFamily {
    /// The base multigraph `C_{2t}^q`, `K_t^q` or `C_{2t+1}^q`.
    pub fn graph(self, t: usize, q: usize) -> Result<crate::multigraph::Multigraph> {
        self.check(t, q)?;
        match self {
            HardFamily::EvenCycle => make_family(&Family::CycleMultiple { n: 2 * t, q }),
            HardFamily::Clique => make_family(&Family::CliqueMultiple { t, q }),
            HardFamily::OddCycle => make_family(&Family::CycleMultiple { n: 2 * t + 1, q }),
        }
    }

    /// The list size at which the family is exactly not colorable.
    pub fn list_size(self, t: usize, q: usize) -> usize {
        match self {
            HardFamily::EvenCycle | HardFamily::OddCycle => 2 * q,
            HardFamily::Clique => (t - 1) * q,
        }
    }

    fn check(self, t: usize, q: usize) -> Result<()> {
        let ok = q >= 1
            && match self {
                HardFamily::EvenCycle => t >= 2,
                HardFamily::Clique | HardFamily::OddCycle => t >= 1,
            };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "invalid hard-cover parameters {self:?} t={t} q={q}"
            )))
        }
    }
}

/// The canonical non-colorable cover of a [`HardFamily`] member: the
/// `q`-blowup of `C_{4t}` over `C_{2t}`, of `t-1` disjoint `K_t` over `K_t`,
/// or of two disjoint `C_{2t+1}` over `C_{2t+1}`.
pub fn hard_cover(family: HardFamily, t: usize, q: usize) -> Result<Cover> {
    let base = family.graph(t, 1)?;
    let size = family.list_size(t, 1);
    let mut cover = Cover::aligned(base.clone(), vec![size; base.vertex_count()])?;
    if family == HardFamily::EvenCycle {
        // one crossed pair turns two 2t-cycles into a 4t-cycle
        let mut matchings = cover.all_matchings().clone();
        matchings.insert((0, 2 * t - 1), vec![vec![(0, 1), (1, 0)]]);
        cover = Cover::new(base, vec![2; 2 * t], matchings)?;
    }
    cover.blowup(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_of_hard_covers() {
        let c8 = hard_cover(HardFamily::EvenCycle, 2, 1).unwrap();
        assert_eq!(c8.conflict_components(), vec![(8, 8)]);
        let k3 = hard_cover(HardFamily::Clique, 3, 1).unwrap();
        assert_eq!(k3.conflict_components(), vec![(3, 3), (3, 3)]);
        let c5 = hard_cover(HardFamily::OddCycle, 2, 1).unwrap();
        assert_eq!(c5.conflict_components(), vec![(5, 5), (5, 5)]);
        let k1 = hard_cover(HardFamily::Clique, 1, 3).unwrap();
        assert_eq!(k1.list_sizes(), &[0]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(hard_cover(HardFamily::EvenCycle, 1, 1).is_err());
        assert!(hard_cover(HardFamily::Clique, 0, 1).is_err());
        assert!(hard_cover(HardFamily::OddCycle, 2, 0).is_err());
    }
}
