//! Bitmask backtracking over one cover.

use crate::cover::enumerate::MAX_LIST_SIZE;
use crate::cover::Cover;
use crate::error::{Error, Result};

/// A cover in solver form: per-pair conflict masks indexed by color.
pub(crate) struct Instance<'a> {
    pub sizes: &'a [usize],
    pub incidence: &'a [Vec<(usize, usize, bool)>],
    pub ends: &'a [(usize, usize)],
    /// `(forward, backward)` per pair.
    pub masks: Vec<(&'a [u64], &'a [u64])>,
}

impl Instance<'_> {
    fn conflict(&self, pair: usize, v_is_u: bool, color: usize) -> u64 {
        let (f, b) = self.masks[pair];
        if v_is_u {
            f[color]
        } else {
            b[color]
        }
    }

    pub fn is_transversal(&self, choice: &[usize]) -> bool {
        self.ends
            .iter()
            .enumerate()
            .all(|(p, &(u, v))| self.masks[p].0[choice[u]] & (1 << choice[v]) == 0)
    }
}

/// Owned masks for a standalone cover.
pub(crate) struct Compiled {
    sizes: Vec<usize>,
    incidence: Vec<Vec<(usize, usize, bool)>>,
    ends: Vec<(usize, usize)>,
    masks: Vec<(Vec<u64>, Vec<u64>)>,
}

impl Compiled {
    pub fn new(cover: &Cover) -> Result<Self> {
        let sizes = cover.list_sizes().to_vec();
        if let Some(v) = sizes.iter().position(|&s| s > MAX_LIST_SIZE) {
            return Err(Error::InvalidParameter(format!(
                "list size {} at vertex {v} exceeds {MAX_LIST_SIZE}",
                sizes[v]
            )));
        }
        let mut incidence = vec![Vec::new(); sizes.len()];
        let mut ends = Vec::new();
        let mut masks = Vec::new();
        for (&(u, v), ms) in cover.all_matchings() {
            let mut f = vec![0u64; sizes[u]];
            let mut b = vec![0u64; sizes[v]];
            for m in ms {
                for &(i, j) in m {
                    f[i] |= 1 << j;
                    b[j] |= 1 << i;
                }
            }
            let p = ends.len();
            incidence[u].push((v, p, true));
            incidence[v].push((u, p, false));
            ends.push((u, v));
            masks.push((f, b));
        }
        Ok(Compiled {
            sizes,
            incidence,
            ends,
            masks,
        })
    }

    pub fn instance(&self) -> Instance<'_> {
        Instance {
            sizes: &self.sizes,
            incidence: &self.incidence,
            ends: &self.ends,
            masks: self
                .masks
                .iter()
                .map(|(f, b)| (f.as_slice(), b.as_slice()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Vertices `0, 1, ..` in turn, colors ascending: the first hit is lexicographically least.
    Fixed,
    /// Smallest remaining domain first.
    FewestColors,
}

fn full(size: usize) -> u64 {
    if size >= 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

struct State<'i, 'a> {
    inst: &'i Instance<'a>,
    order: Order,
    domain: Vec<u64>,
    choice: Vec<usize>,
    trail: Vec<(usize, u64)>,
    nodes: u64,
    budget: u64,
}

const UNSET: usize = usize::MAX;

impl State<'_, '_> {
    fn pick(&self, assigned: usize) -> usize {
        match self.order {
            Order::Fixed => assigned,
            Order::FewestColors => {
                let mut best = UNSET;
                let mut best_count = u32::MAX;
                for (v, &d) in self.domain.iter().enumerate() {
                    if self.choice[v] == UNSET && d.count_ones() < best_count {
                        best = v;
                        best_count = d.count_ones();
                    }
                }
                best
            }
        }
    }

    fn run(&mut self, assigned: usize) -> Option<bool> {
        if assigned == self.choice.len() {
            return Some(true);
        }
        let v = self.pick(assigned);
        let mut colors = self.domain[v];
        while colors != 0 {
            let c = colors.trailing_zeros() as usize;
            colors &= colors - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.choice[v] = c;
            let mark = self.trail.len();
            let mut wiped = false;
            for &(w, p, v_is_u) in &self.inst.incidence[v] {
                if self.choice[w] != UNSET {
                    continue;
                }
                let old = self.domain[w];
                let new = old & !self.inst.conflict(p, v_is_u, c);
                if new != old {
                    self.trail.push((w, old));
                    self.domain[w] = new;
                    if new == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped {
                match self.run(assigned + 1) {
                    Some(false) => {}
                    found_or_budget => return found_or_budget,
                }
            }
            while self.trail.len() > mark {
                let (w, old) = self.trail.pop().expect("trail entry");
                self.domain[w] = old;
            }
        }
        self.choice[v] = UNSET;
        Some(false)
    }
}

/// Searches for a transversal. `nodes` accumulates color trials.
pub(crate) fn search(inst: &Instance<'_>, order: Order, budget: u64, nodes: &mut u64) -> Outcome {
    let n = inst.sizes.len();
    let mut state = State {
        inst,
        order,
        domain: inst.sizes.iter().map(|&s| full(s)).collect(),
        choice: vec![UNSET; n],
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    let result = state.run(0);
    *nodes += state.nodes;
    match result {
        Some(true) => Outcome::Found(state.choice),
        Some(false) => Outcome::Exhausted,
        None => Outcome::OutOfBudget,
    }
}
