// Compute the DP chromatic number of a few small graphs.

use dpcolor::multigraph::{make_family, Family, Multigraph};
use dpcolor::solver::{chi_dp, ChiDp, DecisionOptions};

fn main() {
    let graphs = [
        ("K_1", Multigraph::empty(1)),
        (
            "star K_1,3",
            Multigraph::simple(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ),
        (
            "C_4",
            make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap(),
        ),
        (
            "C_5",
            make_family(&Family::CycleMultiple { n: 5, q: 1 }).unwrap(),
        ),
        (
            "K_4",
            make_family(&Family::CliqueMultiple { t: 4, q: 1 }).unwrap(),
        ),
        (
            "K_2^3",
            make_family(&Family::CliqueMultiple { t: 2, q: 3 }).unwrap(),
        ),
    ];
    let opts = DecisionOptions::default();
    for (name, g) in &graphs {
        match chi_dp(g, 6, &opts).unwrap() {
            ChiDp::Exact(k) => println!("chi_DP({name}) = {k}"),
            ChiDp::ExceedsMax(m) => println!("chi_DP({name}) > {m}"),
            ChiDp::Undecided { k, reason } => println!("chi_DP({name}) undecided at {k}: {reason}"),
        }
    }
}
