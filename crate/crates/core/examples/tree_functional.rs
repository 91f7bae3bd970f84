// Evaluate the tree functional on generated GDP-trees and compare with 1 + alpha.

use dpcolor::census::gdp_trees;
use dpcolor::potential::{phi, PotentialParams};

fn main() {
    let params = PotentialParams::new(5).unwrap();
    let trees = gdp_trees(5, 2, 4);
    println!(
        "{} GDP-trees on at most 5 vertices, multiplicity at most 2, degree at most 4",
        trees.len()
    );
    let mut checked = 0;
    let mut smallest = None;
    for t in &trees {
        let h: Vec<usize> = t.degrees().iter().map(|&d| d.max(3)).collect();
        let r = phi(t, &h, &params).unwrap();
        if r.hypotheses.all() {
            checked += 1;
            if smallest.is_none_or(|s| r.value < s) {
                smallest = Some(r.value);
            }
        }
    }
    println!("{checked} trees meet the hypotheses with h = max(degree, 3)");
    if let Some(s) = smallest {
        println!(
            "smallest value {s}, threshold 1 + alpha = {}",
            params.alpha + 1
        );
    }
}
