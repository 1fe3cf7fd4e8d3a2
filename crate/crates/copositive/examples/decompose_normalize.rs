//! The quadratic/face split of a ternary cubic and cube-root
//! normalization for the general sufficient conditions.
//!
//!     cargo run --example decompose_normalize

use copositive::criteria::{check_matrix3, check_sufficient_general, DEFAULT_EPSILON};
use copositive::rational::format_rational;
use copositive::tensor::SymTensor3;

fn main() {
    // A x^3 = x1 (x^T M x) + A'(x2, x3)^3
    let t = SymTensor3::from_i64([1, 1, 1, 0, 1, -1, 1, 1, 1, -1]);
    let d = t.decompose();
    println!("M rows:");
    println!(
        "  [{} {} {}]",
        format_rational(&d.matrix.m11),
        format_rational(&d.matrix.m12),
        format_rational(&d.matrix.m13)
    );
    println!(
        "  [{} {} {}]",
        format_rational(&d.matrix.m12),
        format_rational(&d.matrix.m22),
        format_rational(&d.matrix.m23)
    );
    println!(
        "  [{} {} {}]",
        format_rational(&d.matrix.m13),
        format_rational(&d.matrix.m23),
        format_rational(&d.matrix.m33)
    );
    println!(
        "face tensor A' = ({}, {}, {}, {})",
        format_rational(&d.face.a111),
        format_rational(&d.face.a112),
        format_rational(&d.face.a122),
        format_rational(&d.face.a222)
    );

    let rep = check_matrix3(&d.matrix, DEFAULT_EPSILON);
    println!(
        "matrix test: alpha {:.6} beta {:.6} gamma {:.6} delta {:.6} -> copositive {}, strict {}",
        rep.alpha, rep.beta, rep.gamma, rep.delta, rep.copositive, rep.strict
    );
    println!("(for this tensor the split alone is not decisive — the quadratic part");
    println!(" is not copositive, yet the form has positive minimum 1/49)");

    // cube-root normalization maps (8, 1, 1, -4, ...) onto unit thresholds
    let t = SymTensor3::from_i64([8, 1, 1, -4, 2, -4, 2, -1, 1, 2]);
    let n = t.normalize().unwrap();
    println!(
        "normalized entries: b112 {:.3} b122 {:.3} b113 {:.3} b133 {:.3} b223 {:.3} b233 {:.3} b123 {:.3}",
        n.b112, n.b122, n.b113, n.b133, n.b223, n.b233, n.b123
    );
    let v = check_sufficient_general(&t, DEFAULT_EPSILON).unwrap();
    println!(
        "sufficient condition: {} via {}",
        v.status,
        v.rule.map(|r| r.to_string()).unwrap_or_default()
    );
}
