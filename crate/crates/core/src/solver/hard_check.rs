use super::search::{search, Compiled, Order, Outcome};
use super::DecisionOptions;
use crate::cover::{hard_cover, Cover, CoverSpace, HardFamily};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma31Report {
    pub family: HardFamily,
    pub t: usize,
    pub q: usize,
    pub covers: u128,
    pub non_colorable: u128,
    /// The canonical hard cover itself has no transversal.
    pub hard_cover_non_colorable: bool,
    /// First non-colorable cover that is not a relabeling of the hard cover.
    pub counterexample: Option<Cover>,
    /// `None` when a budget ran out.
    pub passed: Option<bool>,
    pub reason: Option<String>,
}

fn colorable(cover: &Cover, max_nodes: u64) -> Result<Option<bool>> {
    let compiled = Compiled::new(cover)?;
    let mut nodes = 0;
    Ok(
        match search(
            &compiled.instance(),
            Order::FewestColors,
            max_nodes,
            &mut nodes,
        ) {
            Outcome::Found(_) => Some(true),
            Outcome::Exhausted => Some(false),
            Outcome::OutOfBudget => None,
        },
    )
}

/// Enumerates every cover of the family member with its critical list size
/// and checks that the non-colorable ones are exactly the relabelings of
/// [`hard_cover`].
pub fn verify_lemma31(
    family: HardFamily,
    t: usize,
    q: usize,
    options: &DecisionOptions,
) -> Result<Lemma31Report> {
    let g = family.graph(t, q)?;
    let h = vec![family.list_size(t, q); g.vertex_count()];
    let hard = hard_cover(family, t, q)?;
    let space = CoverSpace::new(&g, &h, options.enumeration)?;
    let mut report = Lemma31Report {
        family,
        t,
        q,
        covers: space.len(),
        non_colorable: 0,
        hard_cover_non_colorable: false,
        counterexample: None,
        passed: None,
        reason: None,
    };
    if space.len() > options.max_covers as u128 {
        report.reason = Some(format!(
            "{} covers exceed the cover budget of {}",
            space.len(),
            options.max_covers
        ));
        return Ok(report);
    }
    let out_of_nodes = || Some(format!("node budget of {} exhausted", options.max_nodes));
    match colorable(&hard, options.max_nodes)? {
        None => {
            report.reason = out_of_nodes();
            return Ok(report);
        }
        Some(c) => report.hard_cover_non_colorable = !c,
    }
    for cover in space.iter() {
        match colorable(&cover, options.max_nodes)? {
            None => {
                report.reason = out_of_nodes();
                return Ok(report);
            }
            Some(true) => {}
            Some(false) => {
                report.non_colorable += 1;
                if report.counterexample.is_none() && !cover.is_relabeling_of(&hard) {
                    report.counterexample = Some(cover);
                }
            }
        }
    }
    let pass = report.hard_cover_non_colorable
        && report.non_colorable > 0
        && report.counterexample.is_none();
    report.passed = Some(pass);
    Ok(report)
}
