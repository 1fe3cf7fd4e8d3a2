//! Exhaustive cross-validation of the sign-pattern criteria against the
//! oracle over all 59049 tensors with entries in {-1, 0, 1}.
//!
//!     cargo run --release --example enumerate_all

use copositive::harness::enumerate_pm10;

fn main() {
    let r = enumerate_pm10(84, 30);
    println!(
        "enumerated {} tensors, {} applicable, {} ms",
        r.total, r.applicable, r.wall_time_ms
    );
    for c in &r.rules {
        println!(
            "  {:<14} applicable {:>6}  strict {:>4}  not strict {:>6}",
            c.rule, c.applicable, c.strict, c.not_strict
        );
    }
    println!("disagreements: {}", r.disagreements.len());
    println!("inconclusive:  {}", r.inconclusive);
    println!("overlap agreements (theorem vs {{-1,1}} corollary): {}", r.overlap_agreements);
    println!("strict sets closed under permutations: {}", r.orbit_closed);
    for d in &r.disagreements {
        println!("  DISAGREE {:?} {}: analytic {}, oracle {}", d.entries, d.rule, d.analytic, d.oracle);
    }
}
