// Evaluate the potential on exceptional graphs and check submodularity.

use dpcolor::multigraph::{make_family, Family, Multigraph};
use dpcolor::potential::{check_submodular, is_exceptional, rho, rho_set, PotentialParams};

fn main() {
    let params = PotentialParams::new(5).unwrap();
    println!(
        "k = 5: lambda = {}, alpha = {}",
        params.lambda, params.alpha
    );
    for h in 0..5 {
        println!(
            "  vertex weight with h = {h}: {}",
            params.rho_vertex(h).unwrap()
        );
    }
    for s in 0..4 {
        println!(
            "  pair weight with multiplicity {s}: {}",
            params.rho_pair(s)
        );
    }

    let k5 = make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap();
    let k24 = make_family(&Family::CliqueMultiple { t: 2, q: 4 }).unwrap();
    println!("rho(K_5) = {}", rho(&k5, &[4; 5], &params).unwrap());
    println!("rho(K_2^4) = {}", rho(&k24, &[4; 2], &params).unwrap());
    for n in 3..=8 {
        let g = make_family(&Family::CycleMultiple { n, q: 2 }).unwrap();
        println!(
            "rho(C_{n}^2) = {}, exceptional {}",
            rho(&g, &vec![4; n], &params).unwrap(),
            is_exceptional(&g, 5)
        );
    }
    println!(
        "rho of two vertices of K_5: {}",
        rho_set(&k5, &[4; 5], &[0, 1], &params).unwrap()
    );

    let g = Multigraph::new(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
    let h = [3, 4, 2, 2];
    let ok = check_submodular(&g, &h, &[0, 1, 2], &[1, 2, 3], &params).unwrap();
    println!("submodular on {{0,1,2}}, {{1,2,3}}: {ok}");
}
