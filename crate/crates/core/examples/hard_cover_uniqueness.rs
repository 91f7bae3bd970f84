// Enumerate every cover of a small family member and confirm that the
// canonical hard cover is the only non-colorable one up to relabeling.

use dpcolor::cover::HardFamily;
use dpcolor::solver::{verify_lemma31, DecisionOptions};

fn main() {
    let opts = DecisionOptions::default();
    for (name, family, t) in [
        ("C_4", HardFamily::EvenCycle, 2),
        ("C_5", HardFamily::OddCycle, 2),
        ("K_3", HardFamily::Clique, 3),
        ("K_4", HardFamily::Clique, 4),
    ] {
        let r = verify_lemma31(family, t, 1, &opts).unwrap();
        println!(
            "{name}: {} covers, {} not colorable, hard cover bad {}, unique {:?}",
            r.covers, r.non_colorable, r.hard_cover_non_colorable, r.passed
        );
    }
}
