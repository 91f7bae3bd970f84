// Decide DP h-colorability by enumerating covers, and print a bad cover.

use dpcolor::multigraph::{make_family, Family, Multigraph};
use dpcolor::solver::{is_dp_degree_colorable, is_dp_h_colorable, DecisionOptions};

fn main() {
    let opts = DecisionOptions::default();

    let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
    let v = is_dp_h_colorable(&c4, &[2; 4], &opts).unwrap();
    println!(
        "C_4 with 2-lists: colorable = {:?} after {} covers",
        v.colorable(),
        v.covers_examined
    );
    if let Some(bad) = &v.bad_cover {
        println!(
            "  bad cover graph components (vertices, edges): {:?}",
            bad.conflict_components()
        );
    }

    let c4_3 = is_dp_h_colorable(&c4, &[3; 4], &opts).unwrap();
    println!("C_4 with 3-lists: colorable = {:?}", c4_3.colorable());
    if let Some(w) = &c4_3.witness {
        println!("  a transversal of the last cover examined: {:?}", w.0);
    }

    // A path with lists equal to the degrees is colorable; its blocks are K_2.
    let p3 = Multigraph::simple(3, &[(0, 1), (1, 2)]).unwrap();
    println!(
        "P_3 with h = degree + 1: {:?}",
        is_dp_h_colorable(&p3, &[2, 3, 2], &opts)
            .unwrap()
            .colorable()
    );

    // Degree-colorability fails exactly on GDP-trees.
    let diamond = Multigraph::simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    for (name, g) in [("C_4", &c4), ("diamond", &diamond)] {
        let v = is_dp_degree_colorable(g, &opts).unwrap();
        println!(
            "{name}: DP degree-colorable {:?}, GDP-tree {}",
            v.colorable(),
            g.classify_gdp().is_gdp_tree()
        );
    }

    let parallel = DecisionOptions {
        jobs: 2,
        ..DecisionOptions::default()
    };
    let c5 = make_family(&Family::CycleMultiple { n: 5, q: 1 }).unwrap();
    let a = is_dp_h_colorable(&c5, &[2; 5], &opts).unwrap();
    let b = is_dp_h_colorable(&c5, &[2; 5], &parallel).unwrap();
    println!("C_5 verdicts agree across thread counts: {}", a == b);
}
