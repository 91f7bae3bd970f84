// Certify h-minimality and DP k-criticality, and show a failing certificate.

use dpcolor::multigraph::{make_family, Family};
use dpcolor::solver::{is_dp_critical, is_h_minimal, DecisionOptions, Deletion};

fn main() {
    let opts = DecisionOptions::default();
    let instances = [
        (
            "K_5",
            make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap(),
        ),
        (
            "K_2^4",
            make_family(&Family::CliqueMultiple { t: 2, q: 4 }).unwrap(),
        ),
        (
            "C_3^2",
            make_family(&Family::CycleMultiple { n: 3, q: 2 }).unwrap(),
        ),
    ];
    for (name, g) in &instances {
        let h = vec![4; g.vertex_count()];
        let r = is_h_minimal(g, &h, &opts).unwrap();
        println!("{name} with 4-lists: {:?}", r.status);
    }

    let k5 = &instances[0].1;
    println!(
        "K_5 DP 5-critical: {:?}",
        is_dp_critical(k5, 5, &opts).unwrap().holds()
    );

    let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
    let r = is_dp_critical(&c4, 5, &opts).unwrap();
    println!("C_4 DP 5-critical: {:?} ({:?})", r.holds(), r.status);

    // C_4^2 with 3-lists is not colorable, but already C_4^2 minus one edge copy is not either.
    let c42 = make_family(&Family::CycleMultiple { n: 4, q: 2 }).unwrap();
    let r = is_h_minimal(&c42, &[3; 4], &opts).unwrap();
    println!("C_4^2 with 3-lists: {:?}", r.status);
    if let Some(p) = &r.offending {
        match p.deletion {
            Deletion::EdgeCopy(u, v) => {
                println!("  deleting one copy of {u}-{v} still leaves a bad cover")
            }
            Deletion::Vertex(w) => {
                println!("  deleting isolated vertex {w} still leaves a bad cover")
            }
        }
    }
}
