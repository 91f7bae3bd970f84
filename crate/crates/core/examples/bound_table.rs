// Print the comparison of average-degree bounds and a few edge-count queries.

use dpcolor::bounds::{avg_degree_coefficient, min_edges, table1, BoundSource, Rendering};

fn main() {
    let table = table1(&[5, 6, 7, 8, 9, 10, 15, 20]);
    print!("{}", table.to_text(Rendering::Truncate));
    println!();
    print!("{}", table.to_csv(Rendering::RoundHalfEven));
    println!();
    for source in BoundSource::ALL {
        let k = source.min_k().max(6);
        let n = k + 3;
        println!(
            "{:<12} k={k}: average degree > {}, at least {} edges on {n} vertices",
            source.label(),
            avg_degree_coefficient(source, k).unwrap(),
            min_edges(source, n, k).unwrap()
        );
    }
}
