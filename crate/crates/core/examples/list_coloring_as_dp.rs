// Encode a list assignment as a cover and solve it.

use dpcolor::cover::cover_from_lists;
use dpcolor::multigraph::Multigraph;
use dpcolor::solver::find_transversal;

fn main() {
    let k23 = Multigraph::simple(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let names = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let lists = vec![
        names(&["a", "b"]),
        names(&["c", "d"]),
        names(&["a", "c"]),
        names(&["a", "d"]),
        names(&["b", "c"]),
    ];
    let lc = cover_from_lists(&k23, &lists).unwrap();
    let verdict = find_transversal(&lc.cover, 1_000_000).unwrap();
    match &verdict.witness {
        Some(t) => {
            let coloring: Vec<&str> =
                t.0.iter()
                    .enumerate()
                    .map(|(v, &i)| lc.palette[v][i].as_str())
                    .collect();
            println!("list coloring found: {coloring:?}");
        }
        None => println!("no proper list coloring: {:?}", verdict.status),
    }

    // K_2,4 is not 2-choosable: one leaf for each pair of colors from the two centers.
    let bad = vec![
        names(&["a", "b"]),
        names(&["c", "d"]),
        names(&["a", "c"]),
        names(&["a", "d"]),
        names(&["b", "c"]),
        names(&["b", "d"]),
    ];
    let k24 = Multigraph::simple(
        6,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
        ],
    )
    .unwrap();
    let lc = cover_from_lists(&k24, &bad).unwrap();
    println!(
        "K_2,4 with the bad assignment: {:?}",
        find_transversal(&lc.cover, 1_000_000).unwrap().status
    );
}
