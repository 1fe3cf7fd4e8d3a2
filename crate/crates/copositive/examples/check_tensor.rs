//! Classify a tensor with the analytic criteria and show the verdict.
//!
//!     cargo run --example check_tensor

use copositive::criteria::{classify, DEFAULT_EPSILON};
use copositive::rational::format_rational;
use copositive::tensor::SymTensor3;

fn show(name: &str, t: &SymTensor3) {
    let v = classify(t, DEFAULT_EPSILON);
    print!("{name}: {}", v.status);
    if let Some(rule) = v.rule {
        print!(" [{rule}");
        if let Some(role) = v.role {
            print!(" with {role}");
        }
        print!("]");
    }
    if let Some(w) = &v.witness {
        print!(" witness {} -> {}", w.point, format_rational(&w.value));
    }
    println!();
}

fn main() {
    // entry order: a111, a222, a333, a112, a122, a113, a133, a223, a233, a123

    // strict despite two negative entries: the (0, -1) mixed pattern
    show(
        "reference strict tensor",
        &SymTensor3::from_i64([1, 1, 1, 0, 1, -1, 1, 1, 1, -1]),
    );

    // flipping a112 to -1 breaks strictness; a concrete violation is found
    show(
        "both mixed entries -1",
        &SymTensor3::from_i64([1, 1, 1, -1, 1, -1, 1, 1, 1, -1]),
    );

    // with a123 = 0 the pair sum may drop to -1
    show(
        "zero odd entry",
        &SymTensor3::from_i64([1, 1, 1, -1, 1, 0, 1, 1, 1, 0]),
    );

    // a123 = 1 needs only the common conditions
    show(
        "positive odd entry",
        &SymTensor3::from_i64([1, 1, 1, -1, 1, -1, 1, 1, -1, 1]),
    );

    // rational entries: the one-sided sufficient conditions kick in
    show(
        "scaled rational tensor",
        &SymTensor3::from_i64([8, 1, 1, -4, 2, -4, 2, -1, 1, 2]),
    );
}
