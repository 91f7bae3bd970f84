// The canonical non-colorable covers and a transversal search on each.

use dpcolor::cover::{hard_cover, HardFamily};
use dpcolor::solver::find_transversal;

fn main() {
    let cases = [
        ("C_4, lists of 2", HardFamily::EvenCycle, 2, 1),
        ("C_5, lists of 2", HardFamily::OddCycle, 2, 1),
        ("K_4, lists of 3", HardFamily::Clique, 4, 1),
        ("C_4^2, lists of 4", HardFamily::EvenCycle, 2, 2),
    ];
    for (name, family, t, q) in cases {
        let cover = hard_cover(family, t, q).unwrap();
        let shape: Vec<String> = cover
            .conflict_components()
            .iter()
            .map(|(n, m)| format!("{n} vertices/{m} edges"))
            .collect();
        let verdict = find_transversal(&cover, 1_000_000).unwrap();
        println!(
            "{name}: cover graph components [{}], transversal: {:?}",
            shape.join(", "),
            verdict.colorable()
        );
    }

    // Blowing up the C_4 cover by 2 matches the hard cover of C_4^2.
    let blown = hard_cover(HardFamily::EvenCycle, 2, 1)
        .unwrap()
        .blowup(2)
        .unwrap();
    let direct = hard_cover(HardFamily::EvenCycle, 2, 2).unwrap();
    println!(
        "blowup agrees with the direct construction: {}",
        blown.is_relabeling_of(&direct)
    );
}
