//! Positivity certificates and exact witnesses from Bernstein subdivision.
//!
//!     cargo run --example certificate

use copositive::oracle::{bernstein_certify, oracle_verdict};
use copositive::rational::format_rational;
use copositive::tensor::SymTensor3;

fn run(name: &str, t: &SymTensor3) {
    let r = oracle_verdict(t, 84, 30);
    print!("{name}: {}", r.status);
    if let Some(c) = &r.certificate {
        print!(" ({} leaves, depth {})", c.leaf_count, c.max_depth);
    }
    if let Some(w) = &r.witness {
        print!(" witness {} -> {}", w.point, format_rational(&w.value));
    }
    if let Some(m) = &r.min_estimate {
        print!(" [best value seen {}]", format_rational(m));
    }
    println!();
}

fn main() {
    // positive with positive minimum 1/49: certified by subdivision
    run(
        "strict, interior minimum",
        &SymTensor3::from_i64([1, 1, 1, 0, 1, -1, 1, 1, 1, -1]),
    );

    // all Bernstein coefficients positive up front: depth-0 certificate
    run("trivially positive", &SymTensor3::from_i64([1; 10]));

    // value -8 near (1/2, 1/4, 1/4): the grid already refutes strictness
    run(
        "negative on the interior",
        &SymTensor3::from_i64([1, 1, 1, -1, 1, -1, 1, 1, 1, -1]),
    );

    // minimum exactly 0: a zero witness refutes *strict* copositivity
    run("boundary of strictness", &SymTensor3::from_i64([0; 10]));

    // pure subdivision (no grid prefilter) on the strict case
    let t = SymTensor3::from_i64([1, 1, 1, 0, 1, -1, 1, 1, 1, -1]);
    let r = bernstein_certify(&t, 30);
    let c = r.certificate.expect("certified");
    println!(
        "subdivision alone: {} with {} leaves, depth {}",
        r.status, c.leaf_count, c.max_depth
    );
}
