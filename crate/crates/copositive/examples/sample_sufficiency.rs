//! Randomized soundness check of the general sufficient conditions:
//! tensors drawn at or above the cube-root thresholds must never admit a
//! nonpositive value.
//!
//!     cargo run --release --example sample_sufficiency

use copositive::harness::sample_sufficiency;

fn main() {
    let report = sample_sufficiency(250, 42, 84, 30);
    println!(
        "seed {}, {} samples per corollary",
        report.seed, report.count_per_corollary
    );
    for c in &report.corollaries {
        println!(
            "  {:<14} recognized {:>4}/{:<4} certified {:>4} nonpositive {} inconclusive {}",
            c.rule, c.recognized, c.samples, c.positive_certified, c.nonpositive, c.inconclusive
        );
    }
    println!("clean: {}", report.clean());
}
