// Enumerate small graphs up to isomorphism and count the GDP-trees among them.

use dpcolor::census::{
    are_isomorphic, canonical_form, connected_simple_graphs, gdp_trees, simple_graphs,
};
use dpcolor::multigraph::Multigraph;

fn main() {
    for n in 1..=6 {
        let all = simple_graphs(n).len();
        let connected = connected_simple_graphs(n);
        let gdp = connected
            .iter()
            .filter(|g| g.classify_gdp().is_gdp_tree())
            .count();
        println!(
            "n = {n}: {all} graphs, {} connected, {gdp} GDP-trees",
            connected.len()
        );
    }
    let a = Multigraph::simple(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let b = Multigraph::simple(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
    println!(
        "two labelings of P_4 isomorphic: {}",
        are_isomorphic(&a, &b)
    );
    println!(
        "canonical forms equal: {}",
        canonical_form(&a) == canonical_form(&b)
    );
    println!(
        "GDP-trees on at most 4 vertices with multiplicity at most 2: {}",
        gdp_trees(4, 2, usize::MAX).len()
    );
}
