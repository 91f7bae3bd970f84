//! Exact transversal search and the decision procedures built on it.
//!
//! Every decision is three-valued. A budget that runs out yields
//! [`Status::Undecided`], never a guess.

mod critical;
mod decide;
mod hard_check;
pub(crate) mod search;

use crate::cover::{Cover, EnumerationOptions, Transversal};
use crate::error::Result;

pub use critical::{
    is_dp_critical, is_h_minimal, CriticalityReport, CriticalityStatus, Deletion, ProperSubgraph,
};
pub use decide::{chi_dp, is_dp_degree_colorable, is_dp_h_colorable, ChiDp};
pub use hard_check::{verify_lemma31, Lemma31Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Colorable,
    NotColorable,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorabilityVerdict {
    pub status: Status,
    /// Lexicographically least transversal, from [`find_transversal`].
    pub witness: Option<Transversal>,
    /// Enumeration-least cover without a transversal.
    pub bad_cover: Option<Cover>,
    /// Covers solved before the verdict was reached.
    pub covers_examined: u128,
    /// Why the verdict is undecided.
    pub reason: Option<String>,
}

impl ColorabilityVerdict {
    pub fn colorable(&self) -> Option<bool> {
        match self.status {
            Status::Colorable => Some(true),
            Status::NotColorable => Some(false),
            Status::Undecided => None,
        }
    }

    fn undecided(reason: String, covers_examined: u128) -> Self {
        ColorabilityVerdict {
            status: Status::Undecided,
            witness: None,
            bad_cover: None,
            covers_examined,
            reason: Some(reason),
        }
    }
}

/// Limits and switches for the decision procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecisionOptions {
    /// Covers enumerated per connected piece before giving up.
    pub max_covers: u64,
    /// Search nodes (color trials) allowed on any single cover.
    pub max_nodes: u64,
    /// Worker threads for large enumerations; results do not depend on it.
    pub jobs: usize,
    pub enumeration: EnumerationOptions,
    /// Drop vertices whose list outnumbers their remaining degree first.
    pub peel: bool,
}

impl Default for DecisionOptions {
    fn default() -> Self {
        DecisionOptions {
            max_covers: 10_000_000,
            max_nodes: 100_000_000,
            jobs: 1,
            enumeration: EnumerationOptions::default(),
            peel: true,
        }
    }
}

/// Decides whether `cover` has a transversal, returning the least one.
pub fn find_transversal(cover: &Cover, max_nodes: u64) -> Result<ColorabilityVerdict> {
    let compiled = search::Compiled::new(cover)?;
    let inst = compiled.instance();
    let mut nodes = 0;
    let decided = search::search(&inst, search::Order::FewestColors, max_nodes, &mut nodes);
    let outcome = match decided {
        search::Outcome::Found(_) => {
            search::search(&inst, search::Order::Fixed, max_nodes, &mut nodes)
        }
        other => other,
    };
    Ok(match outcome {
        search::Outcome::Found(choice) => ColorabilityVerdict {
            status: Status::Colorable,
            witness: Some(Transversal(choice)),
            bad_cover: None,
            covers_examined: 1,
            reason: None,
        },
        search::Outcome::Exhausted => ColorabilityVerdict {
            status: Status::NotColorable,
            witness: None,
            bad_cover: Some(cover.clone()),
            covers_examined: 1,
            reason: None,
        },
        search::Outcome::OutOfBudget => {
            ColorabilityVerdict::undecided(format!("node budget of {max_nodes} exhausted"), 1)
        }
    })
}
