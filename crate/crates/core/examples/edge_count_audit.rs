// Place graphs in the edge-count trichotomy for DP k-critical graphs.

use dpcolor::bounds::audit_graph;
use dpcolor::multigraph::{make_family, Family};

fn main() {
    let graphs = [
        (
            "K_5",
            make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap(),
            5,
        ),
        (
            "K_2^4",
            make_family(&Family::CliqueMultiple { t: 2, q: 4 }).unwrap(),
            5,
        ),
        (
            "C_6^2",
            make_family(&Family::CycleMultiple { n: 6, q: 2 }).unwrap(),
            5,
        ),
        (
            "C_7",
            make_family(&Family::CycleMultiple { n: 7, q: 1 }).unwrap(),
            5,
        ),
        (
            "K_7",
            make_family(&Family::CliqueMultiple { t: 7, q: 1 }).unwrap(),
            6,
        ),
    ];
    for (name, g, k) in &graphs {
        let a = audit_graph(g, *k).unwrap();
        println!(
            "{name} (k = {k}): {:?}, {} edges vs threshold {}, rho {}",
            a.case, a.edges, a.threshold, a.potential
        );
    }
}
