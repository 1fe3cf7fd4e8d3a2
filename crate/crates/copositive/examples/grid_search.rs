//! Exact rational grid minimization over the standard simplex.
//!
//!     cargo run --example grid_search

use copositive::oracle::grid_min;
use copositive::rational::format_rational;
use copositive::tensor::SymTensor3;

fn main() {
    // the reference tensor whose simplex minimum is exactly 1/49
    let t = SymTensor3::from_i64([1, 1, 1, 0, 1, -1, 1, 1, 1, -1]);

    println!("denominator   minimum        argmin");
    for denominator in [3, 7, 12, 14, 28, 84, 168] {
        let (min, point) = grid_min(&t, denominator);
        println!(
            "{denominator:>11}   {:<12}  {point}",
            format_rational(&min)
        );
    }
    println!();
    println!("the minimizer (4/7, 1/7, 2/7) lies on every grid whose");
    println!("denominator is a multiple of 7, so those rows are exact");
}
