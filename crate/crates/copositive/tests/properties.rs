//! Randomized invariants (proptest) plus structural checks that are fast
//! enough to run exhaustively.

use num::traits::Signed;
use proptest::prelude::*;

use copositive::criteria::{check_dim2, classify, Status, DEFAULT_EPSILON};
use copositive::doc::TensorDocument;
use copositive::harness::enumeration_entries;
use copositive::oracle::grid_min;
use copositive::rational::{rat, Rat};
use copositive::tensor::{EvalPoint, SymTensor3};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-60i64..=60, 1i64..=16).prop_map(|(n, d)| rat(n, d))
}

fn arb_tensor() -> impl Strategy<Value = SymTensor3> {
    proptest::array::uniform10(arb_rat()).prop_map(SymTensor3::from_entries)
}

fn arb_point() -> impl Strategy<Value = EvalPoint> {
    proptest::array::uniform3((0i64..=40, 1i64..=8))
        .prop_map(|cs| EvalPoint::new(cs.iter().map(|(n, d)| rat(*n, *d)).collect()))
}

proptest! {
    #[test]
    fn homogeneity(t in arb_tensor(), p in arb_point(), n in 1i64..=9, d in 1i64..=9) {
        let lambda = rat(n, d);
        let scaled = EvalPoint::new(p.coords().iter().map(|c| c * &lambda).collect());
        let cube = &lambda * &lambda * &lambda;
        prop_assert_eq!(t.eval(&scaled).unwrap(), cube * t.eval(&p).unwrap());
    }

    #[test]
    fn decomposition_identity(t in arb_tensor(), p in arb_point()) {
        let d = t.decompose();
        let x = p.coords();
        let tail = d.face.eval(&EvalPoint::new(vec![x[1].clone(), x[2].clone()])).unwrap();
        let quad = d.matrix.eval(&p).unwrap();
        prop_assert_eq!(t.eval(&p).unwrap(), &x[0] * quad + tail);
    }

    #[test]
    fn permutation_equivariance(t in arb_tensor(), p in arb_point()) {
        // b_ijk = a_{perm(i) perm(j) perm(k)} evaluates like the original
        // at the inversely relabeled point
        let x = p.coords();
        let tp = t.permute([3, 1, 2]);
        let pp = EvalPoint::new(vec![x[1].clone(), x[2].clone(), x[0].clone()]);
        prop_assert_eq!(tp.eval(&p).unwrap(), t.eval(&pp).unwrap());
    }

    #[test]
    fn face_consistency(t in arb_tensor(), u in 0i64..=12, v in 0i64..=12) {
        for drop in 1..=3usize {
            let face = t.principal_face(drop).unwrap();
            let face_val = face.eval(&EvalPoint::from_i64(&[u, v])).unwrap();
            let mut coords = vec![0i64; 3];
            let kept: Vec<usize> = (1..=3).filter(|i| *i != drop).collect();
            coords[kept[0] - 1] = u;
            coords[kept[1] - 1] = v;
            prop_assert_eq!(face_val, t.eval(&EvalPoint::from_i64(&coords)).unwrap());
        }
    }

    #[test]
    fn grid_monotone_refinement(t in arb_tensor(), n in 1u32..=12) {
        let (coarse, _) = grid_min(&t, n);
        let (fine, _) = grid_min(&t, 2 * n);
        prop_assert!(fine <= coarse);
    }

    #[test]
    fn document_round_trip(t in arb_tensor()) {
        let doc = TensorDocument::from_tensor3(&t);
        let parsed = TensorDocument::from_str(&doc.to_json()).unwrap();
        let back = parsed.to_tensor3().unwrap();
        prop_assert_eq!(t.entries(), back.entries());
    }

    #[test]
    fn grid_value_soundness(t in arb_tensor(), n in 1u32..=20) {
        let (min, point) = grid_min(&t, n);
        prop_assert_eq!(t.eval(&point).unwrap(), min);
    }
}

/// Every principal 2-face of an analytically strict tensor is itself
/// strictly copositive: strictness restricts to faces.
#[test]
fn strict_tensors_have_strict_faces() {
    let mut strict = 0u32;
    for index in 0..59049u32 {
        let t = SymTensor3::from_i64(enumeration_entries(index));
        let v = classify(&t, DEFAULT_EPSILON);
        if v.status != Status::StrictlyCopositive {
            continue;
        }
        strict += 1;
        for drop in 1..=3usize {
            let face = t.principal_face(drop).unwrap();
            assert_eq!(
                check_dim2(&face, true).status,
                Status::StrictlyCopositive,
                "face {drop} of strict tensor {index} is not strict"
            );
        }
    }
    assert_eq!(strict, 88 + 118 + 136); // per-theorem strict counts
}

/// A strict verdict never coexists with a nonpositive grid value.
#[test]
fn no_false_strict_verdicts_on_sign_patterns() {
    for index in (0..59049u32).step_by(7) {
        let t = SymTensor3::from_i64(enumeration_entries(index));
        if classify(&t, DEFAULT_EPSILON).status == Status::StrictlyCopositive {
            let (min, _) = grid_min(&t, 30);
            assert!(min.is_positive());
        }
    }
}
