// Run the charge redistribution on a multigraph and audit the result.

use dpcolor::discharging::{check_cases, component_sum_vs_phi, discharge};
use dpcolor::multigraph::Multigraph;

fn main() {
    let g = Multigraph::new(
        6,
        &[
            (0, 1, 1),
            (1, 2, 2),
            (2, 0, 1),
            (2, 3, 1),
            (3, 4, 1),
            (4, 5, 1),
            (5, 3, 1),
        ],
    )
    .unwrap();
    let h = [2, 4, 4, 3, 2, 2];
    let ledger = discharge(&g, &h, 5).unwrap();
    println!(
        "S0* = {:?}, low part {:?}",
        ledger.sets.s0_star, ledger.sets.low_set
    );
    println!(
        "{:>3} {:>3} {:>3} {:>9} {:>9}",
        "v", "h", "d", "initial", "final"
    );
    for v in &ledger.vertices {
        println!(
            "{:>3} {:>3} {:>3} {:>9} {:>9}",
            v.vertex, v.h, v.degree, v.initial, v.final_charge
        );
    }
    println!(
        "total charge {} equals rho {}",
        ledger.total(),
        ledger.potential
    );
    for c in check_cases(&ledger) {
        let bound = c.bound.map_or("none".to_string(), |b| b.to_string());
        println!(
            "vertex {} case {:?}: charge {} bound {bound} holds {}",
            c.vertex, c.tag, c.final_charge, c.holds
        );
    }
    println!(
        "component sums within bound: {}",
        component_sum_vs_phi(&ledger).holds()
    );
}
