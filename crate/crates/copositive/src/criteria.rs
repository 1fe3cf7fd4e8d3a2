//! Analytic strict-copositivity criteria and the dispatcher.
//!
//! Dimension 2 is decided by an exact discriminant test; dimension 3
//! tensors with entries in `{-1, 0, 1}` are decided by the sign-pattern
//! theorems (rules named `Theorem 3.x` / `Corollary 3.x` in output);
//! general tensors with positive diagonal get one-sided sufficient
//! conditions through cube-root normalization. The 3x3 matrix test backs
//! the quadratic part of the decomposition.

use num::traits::Signed;

use crate::oracle::{self, OracleStatus, Witness};
use crate::rational::{int, to_f64, Rat};
use crate::tensor::{EvalPoint, SymMatrix3, SymTensor2, SymTensor3};

/// Tolerance for sign decisions made in floating point (square roots and
/// cube roots). Exact integer logic never uses it.
pub const DEFAULT_EPSILON: f64 = 1e-12;

/// Classification outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    StrictlyCopositive,
    NotStrictlyCopositive,
    SufficientConditionHolds,
    Inapplicable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::StrictlyCopositive => "strictly-copositive",
            Status::NotStrictlyCopositive => "not-strictly-copositive",
            Status::SufficientConditionHolds => "sufficient-condition-holds",
            Status::Inapplicable => "inapplicable",
        };
        f.write_str(s)
    }
}

/// Identifier of the decision rule applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Theorem22,
    Lemma23,
    Lemma24,
    Theorem31,
    Theorem32,
    Theorem33,
    Corollary34,
    Corollary36,
    Corollary37,
    /// Corollary 3.8 with the matched sub-condition (1-based).
    Corollary38(u8),
    /// Corollary 3.9 with the matched sub-condition (1-based).
    Corollary39(u8),
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rule::Theorem22 => write!(f, "Theorem 2.2"),
            Rule::Lemma23 => write!(f, "Lemma 2.3"),
            Rule::Lemma24 => write!(f, "Lemma 2.4"),
            Rule::Theorem31 => write!(f, "Theorem 3.1"),
            Rule::Theorem32 => write!(f, "Theorem 3.2"),
            Rule::Theorem33 => write!(f, "Theorem 3.3"),
            Rule::Corollary34 => write!(f, "Corollary 3.4"),
            Rule::Corollary36 => write!(f, "Corollary 3.6"),
            Rule::Corollary37 => write!(f, "Corollary 3.7"),
            Rule::Corollary38(b) => write!(f, "Corollary 3.8({b})"),
            Rule::Corollary39(b) => write!(f, "Corollary 3.9({b})"),
        }
    }
}

/// Distinct coordinate labels `(r, s, t)` matched to a rule's pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoleAssignment {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl std::fmt::Display for RoleAssignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(r={}, s={}, t={})", self.r, self.s, self.t)
    }
}

pub const ROLE_ASSIGNMENTS: [RoleAssignment; 6] = [
    RoleAssignment { r: 1, s: 2, t: 3 },
    RoleAssignment { r: 1, s: 3, t: 2 },
    RoleAssignment { r: 2, s: 1, t: 3 },
    RoleAssignment { r: 2, s: 3, t: 1 },
    RoleAssignment { r: 3, s: 1, t: 2 },
    RoleAssignment { r: 3, s: 2, t: 1 },
];

/// Verdict of an analytic check.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub rule: Option<Rule>,
    pub role: Option<RoleAssignment>,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn inapplicable(rule: Rule) -> Self {
        Verdict {
            status: Status::Inapplicable,
            rule: Some(rule),
            role: None,
            witness: None,
        }
    }

    fn strict(rule: Rule, role: Option<RoleAssignment>) -> Self {
        Verdict {
            status: Status::StrictlyCopositive,
            rule: Some(rule),
            role,
            witness: None,
        }
    }

    fn not_strict(rule: Rule, witness: Option<Witness>) -> Self {
        Verdict {
            status: Status::NotStrictlyCopositive,
            rule: Some(rule),
            role: None,
            witness,
        }
    }
}

/// Values of the matrix test quantities and the outcome.
#[derive(Clone, Copy, Debug)]
pub struct MatrixCriterionReport {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub copositive: bool,
    pub strict: bool,
}

/// Discriminant of the dimension-2 criterion:
/// `4 a111 a122^3 + 4 a112^3 a222 + a111^2 a222^2
///  - 6 a111 a112 a122 a222 - 3 a112^2 a122^2`.
pub fn dim2_discriminant(t: &SymTensor2) -> Rat {
    let (a, b, c, d) = (&t.a111, &t.a112, &t.a122, &t.a222);
    int(4) * a * c * c * c + int(4) * b * b * b * d + a * a * d * d
        - int(6) * a * b * c * d
        - int(3) * b * b * c * c
}

fn witness2(t: &SymTensor2) -> Option<Witness> {
    if !t.a111.is_positive() {
        return Some(Witness {
            point: EvalPoint::from_i64(&[1, 0]),
            value: t.a111.clone(),
        });
    }
    if !t.a222.is_positive() {
        return Some(Witness {
            point: EvalPoint::from_i64(&[0, 1]),
            value: t.a222.clone(),
        });
    }
    for n in [7u32, 12, 84] {
        let (v, p) = oracle::grid_min2(t, n);
        if !v.is_positive() {
            return Some(Witness { point: p, value: v });
        }
    }
    let res = oracle::bernstein_certify2(t, 30);
    res.witness
}

/// Dimension-2 criterion: nonnegative diagonal plus either nonnegative
/// mixed entries or a nonnegative discriminant (strict versions with
/// strict inequalities). Decisive for every rational tensor.
pub fn check_dim2(t: &SymTensor2, strict: bool) -> Verdict {
    let ok = |v: &Rat| {
        if strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    };
    let first_branch = !t.a112.is_negative() && !t.a122.is_negative();
    let pass = ok(&t.a111) && ok(&t.a222) && (first_branch || ok(&dim2_discriminant(t)));
    if pass {
        Verdict::strict(Rule::Theorem22, None)
    } else {
        Verdict::not_strict(Rule::Theorem22, if strict { witness2(t) } else { None })
    }
}

/// Dimension-2 `{-1, 0, 1}` shortcut: strictly copositive exactly when
/// both diagonal entries are 1 and the mixed entries sum to at least 0.
pub fn check_dim2_pm1(t: &SymTensor2) -> Verdict {
    let Some(e) = t.unit_entries() else {
        return Verdict::inapplicable(Rule::Lemma23);
    };
    let [a111, a112, a122, a222] = e;
    if a111 == 1 && a222 == 1 && a112 + a122 >= 0 {
        Verdict::strict(Rule::Lemma23, None)
    } else if a111 != 1 {
        Verdict::not_strict(
            Rule::Lemma23,
            Some(Witness {
                point: EvalPoint::from_i64(&[1, 0]),
                value: t.a111.clone(),
            }),
        )
    } else if a222 != 1 {
        Verdict::not_strict(
            Rule::Lemma23,
            Some(Witness {
                point: EvalPoint::from_i64(&[0, 1]),
                value: t.a222.clone(),
            }),
        )
    } else {
        // diagonal 1, mixed sum <= -1: value 2 + 3*(sum) <= -1 at (1,1)
        Verdict::not_strict(
            Rule::Lemma23,
            Some(Witness {
                point: EvalPoint::from_i64(&[1, 1]),
                value: int(2 + 3 * (a112 + a122)),
            }),
        )
    }
}

/// 3x3 symmetric matrix copositivity test.
///
/// Computes `alpha = m12 + sqrt(m11 m22)`, `beta = m13 + sqrt(m11 m33)`,
/// `gamma = m23 + sqrt(m22 m33)` and
/// `delta = m12 sqrt(m33) + m13 sqrt(m22) + m23 sqrt(m11)
///          + sqrt(m11 m22 m33) + sqrt(2 alpha beta gamma)`;
/// (strictly) copositive exactly when the diagonal and all four
/// quantities are `>= 0` (`> 0`), with tolerance `eps` on sign calls.
pub fn check_matrix3(m: &SymMatrix3, eps: f64) -> MatrixCriterionReport {
    let m11 = to_f64(&m.m11);
    let m22 = to_f64(&m.m22);
    let m33 = to_f64(&m.m33);
    let m12 = to_f64(&m.m12);
    let m13 = to_f64(&m.m13);
    let m23 = to_f64(&m.m23);
    if m11 < -eps || m22 < -eps || m33 < -eps {
        return MatrixCriterionReport {
            alpha: f64::NAN,
            beta: f64::NAN,
            gamma: f64::NAN,
            delta: f64::NAN,
            copositive: false,
            strict: false,
        };
    }
    // clamp tiny negatives produced by the tolerance band
    let root = |v: f64| v.max(0.0).sqrt();
    let alpha = m12 + root(m11 * m22);
    let beta = m13 + root(m11 * m33);
    let gamma = m23 + root(m22 * m33);
    let delta = m12 * root(m33) + m13 * root(m22) + m23 * root(m11) + root(m11 * m22 * m33)
        + root(2.0 * alpha * beta * gamma);
    let all = [m11, m22, m33, alpha, beta, gamma, delta];
    MatrixCriterionReport {
        alpha,
        beta,
        gamma,
        delta,
        copositive: all.iter().all(|v| *v >= -eps),
        strict: all.iter().all(|v| *v > eps),
    }
}

// Integer-entry helpers for the {-1,0,1} theorems. All logic here is
// exact integer arithmetic; no tolerances.

fn ent(e: &[i64; 10], i: usize, j: usize, k: usize) -> i64 {
    let mut s = [i, j, k];
    s.sort_unstable();
    match s {
        [1, 1, 1] => e[0],
        [2, 2, 2] => e[1],
        [3, 3, 3] => e[2],
        [1, 1, 2] => e[3],
        [1, 2, 2] => e[4],
        [1, 1, 3] => e[5],
        [1, 3, 3] => e[6],
        [2, 2, 3] => e[7],
        [2, 3, 3] => e[8],
        [1, 2, 3] => e[9],
        _ => unreachable!(),
    }
}

/// Diagonal all 1 and `a_iij + a_ijj >= 0` over the three unordered pairs.
fn common_conditions(e: &[i64; 10]) -> bool {
    e[0] == 1
        && e[1] == 1
        && e[2] == 1
        && e[3] + e[4] >= 0
        && e[5] + e[6] >= 0
        && e[7] + e[8] >= 0
}

/// Role assignments whose pattern `a_rss = a_rtt = 1` holds.
fn matching_roles(e: &[i64; 10]) -> Vec<RoleAssignment> {
    ROLE_ASSIGNMENTS
        .iter()
        .copied()
        .filter(|ra| ent(e, ra.r, ra.s, ra.s) == 1 && ent(e, ra.r, ra.t, ra.t) == 1)
        .collect()
}

/// Witness search for a tensor believed not strictly copositive: vertices
/// first, then the pair points `e_i + e_j`, then the exact grid, then
/// subdivision corners.
pub fn find_nonpositive_witness(t: &SymTensor3) -> Option<Witness> {
    for i in 0..3usize {
        let d = t.diagonal()[i];
        if !d.is_positive() {
            let mut coords = vec![0i64; 3];
            coords[i] = 1;
            return Some(Witness {
                point: EvalPoint::from_i64(&coords),
                value: d.clone(),
            });
        }
    }
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let mut coords = vec![0i64; 3];
        coords[i] = 1;
        coords[j] = 1;
        let p = EvalPoint::from_i64(&coords);
        let v = t.eval(&p).expect("3 coordinates");
        if !v.is_positive() {
            return Some(Witness { point: p, value: v });
        }
    }
    for n in [7u32, 12, 84] {
        let (v, p) = oracle::grid_min(t, n);
        if !v.is_positive() {
            return Some(Witness { point: p, value: v });
        }
    }
    let res = oracle::bernstein_certify(t, 30);
    if res.status == OracleStatus::NonpositiveWitness {
        res.witness
    } else {
        None
    }
}

fn unit_theorem(
    t: &SymTensor3,
    rule: Rule,
    a123_required: i64,
    role_condition: impl Fn(&[i64; 10], RoleAssignment) -> bool,
) -> Verdict {
    let Some(e) = t.unit_entries() else {
        return Verdict::inapplicable(rule);
    };
    if e[9] != a123_required {
        return Verdict::inapplicable(rule);
    }
    let roles = matching_roles(&e);
    if roles.is_empty() {
        return Verdict::inapplicable(rule);
    }
    if common_conditions(&e) {
        if let Some(role) = roles.iter().copied().find(|&ra| role_condition(&e, ra)) {
            return Verdict::strict(rule, Some(role));
        }
    }
    Verdict::not_strict(rule, find_nonpositive_witness(t))
}

/// `{-1,0,1}` criterion for `a123 = -1`: requires some role pattern
/// `a_rss = a_rtt = 1`; strict exactly when the common conditions hold and
/// either `a_rrs + a_rrt >= 0` or `a_stt = a_sst = 1` with
/// `(a_rrs, a_rrt)` one of `(0, -1)`, `(-1, 0)`.
pub fn check_thm31(t: &SymTensor3) -> Verdict {
    unit_theorem(t, Rule::Theorem31, -1, |e, ra| {
        let rrs = ent(e, ra.r, ra.r, ra.s);
        let rrt = ent(e, ra.r, ra.r, ra.t);
        rrs + rrt >= 0
            || (ent(e, ra.s, ra.t, ra.t) == 1
                && ent(e, ra.s, ra.s, ra.t) == 1
                && matches!((rrs, rrt), (0, -1) | (-1, 0)))
    })
}

/// `{-1,0,1}` criterion for `a123 = 0`: strict exactly when the common
/// conditions hold and `a_rrs + a_rrt >= -1` for a matching role pattern.
pub fn check_thm32(t: &SymTensor3) -> Verdict {
    unit_theorem(t, Rule::Theorem32, 0, |e, ra| {
        ent(e, ra.r, ra.r, ra.s) + ent(e, ra.r, ra.r, ra.t) >= -1
    })
}

/// `{-1,0,1}` criterion for `a123 = 1`: strict exactly when the common
/// conditions hold.
pub fn check_thm33(t: &SymTensor3) -> Verdict {
    unit_theorem(t, Rule::Theorem33, 1, |_, _| true)
}

/// `{-1,1}` criterion: strict exactly when the common conditions hold and
/// either `a123 = 1`, or `a123 = -1` with `a_rrs = a_rrt = 1` or
/// `a_rrs * a_rrt = -1` for a matching role pattern.
pub fn check_cor34(t: &SymTensor3) -> Verdict {
    let Some(e) = t.unit_entries() else {
        return Verdict::inapplicable(Rule::Corollary34);
    };
    if e.iter().any(|&v| v == 0) {
        return Verdict::inapplicable(Rule::Corollary34);
    }
    let roles = matching_roles(&e);
    if roles.is_empty() {
        return Verdict::inapplicable(Rule::Corollary34);
    }
    if common_conditions(&e) {
        if e[9] == 1 {
            return Verdict::strict(Rule::Corollary34, Some(roles[0]));
        }
        let matched = roles.iter().copied().find(|&ra| {
            let rrs = ent(&e, ra.r, ra.r, ra.s);
            let rrt = ent(&e, ra.r, ra.r, ra.t);
            (rrs == 1 && rrt == 1) || rrs * rrt == -1
        });
        if let Some(role) = matched {
            return Verdict::strict(Rule::Corollary34, Some(role));
        }
    }
    Verdict::not_strict(Rule::Corollary34, find_nonpositive_witness(t))
}

// Bound on a normalized entry: at least +1, at least -1, or at least 0
// (in units of the corresponding cube-root product).
#[derive(Clone, Copy)]
enum Bound {
    PlusRoot,
    MinusRoot,
    Zero,
}

use Bound::{MinusRoot, PlusRoot, Zero as ZeroBound};

// (rrs, rrt, sst, stt) bounds for each sufficient-condition branch.
// The second branch's stt bound is PlusRoot: together with sst it must
// pin the worst-case (s,t) face pattern to all-ones, matching the strict
// pattern theorems; a MinusRoot bound there admits tensors with negative
// values (for example diagonal 1, a112 = -1, a113 = 0, a122 = a133 = 1,
// a223 = 1, a233 = -1, a123 = -1 takes the value -2 at (2, 1, 1)).
const COR38_BRANCHES: [(Bound, Bound, Bound, Bound); 5] = [
    (PlusRoot, MinusRoot, MinusRoot, PlusRoot),
    (MinusRoot, ZeroBound, PlusRoot, PlusRoot),
    (ZeroBound, ZeroBound, PlusRoot, MinusRoot),
    (PlusRoot, MinusRoot, ZeroBound, ZeroBound),
    (ZeroBound, ZeroBound, ZeroBound, ZeroBound),
];

const COR39_BRANCHES: [(Bound, Bound, Bound, Bound); 2] = [
    (ZeroBound, MinusRoot, ZeroBound, ZeroBound),
    (MinusRoot, ZeroBound, MinusRoot, PlusRoot),
];

fn bound_holds(value: f64, bound: Bound, eps: f64) -> bool {
    let lower = match bound {
        Bound::PlusRoot => 1.0,
        Bound::MinusRoot => -1.0,
        Bound::Zero => 0.0,
    };
    value >= lower - eps
}

/// One-sided sufficient conditions for tensors with positive diagonal.
///
/// Normalizes by cube roots of the diagonal and tries, over all role
/// assignments, the threshold patterns of the general-tensor corollaries
/// in a fixed order. Returns the first matching rule; `Inapplicable`
/// asserts nothing about copositivity.
pub fn check_sufficient_general(t: &SymTensor3, eps: f64) -> Result<Verdict, crate::Error> {
    let nb = t.normalize()?;
    let b = |i: usize, j: usize, k: usize| nb.entry(i, j, k);
    let face_ok = |ra: RoleAssignment, eps: f64| {
        bound_holds(b(ra.r, ra.s, ra.s), Bound::PlusRoot, eps)
            && bound_holds(b(ra.r, ra.t, ra.t), Bound::PlusRoot, eps)
    };

    // Corollary 3.6: every off-diagonal at its extreme bound, a123 >= +1.
    for ra in ROLE_ASSIGNMENTS {
        if face_ok(ra, eps)
            && bound_holds(b(ra.r, ra.r, ra.s), MinusRoot, eps)
            && bound_holds(b(ra.r, ra.r, ra.t), MinusRoot, eps)
            && bound_holds(b(ra.s, ra.s, ra.t), MinusRoot, eps)
            && bound_holds(b(ra.s, ra.t, ra.t), PlusRoot, eps)
            && bound_holds(nb.b123, PlusRoot, eps)
        {
            return Ok(Verdict {
                status: Status::SufficientConditionHolds,
                rule: Some(Rule::Corollary36),
                role: Some(ra),
                witness: None,
            });
        }
    }

    // Corollary 3.7: a123 >= +1 with nonnegative (s,t) face entries.
    for ra in ROLE_ASSIGNMENTS {
        if face_ok(ra, eps)
            && bound_holds(b(ra.r, ra.r, ra.s), MinusRoot, eps)
            && bound_holds(b(ra.r, ra.r, ra.t), MinusRoot, eps)
            && bound_holds(b(ra.s, ra.s, ra.t), ZeroBound, eps)
            && bound_holds(b(ra.s, ra.t, ra.t), ZeroBound, eps)
            && bound_holds(nb.b123, PlusRoot, eps)
        {
            return Ok(Verdict {
                status: Status::SufficientConditionHolds,
                rule: Some(Rule::Corollary37),
                role: Some(ra),
                witness: None,
            });
        }
    }

    // Corollary 3.8: a123 >= -1, five sub-conditions.
    for (bi, (brrs, brrt, bsst, bstt)) in COR38_BRANCHES.into_iter().enumerate() {
        for ra in ROLE_ASSIGNMENTS {
            if face_ok(ra, eps)
                && bound_holds(nb.b123, MinusRoot, eps)
                && bound_holds(b(ra.r, ra.r, ra.s), brrs, eps)
                && bound_holds(b(ra.r, ra.r, ra.t), brrt, eps)
                && bound_holds(b(ra.s, ra.s, ra.t), bsst, eps)
                && bound_holds(b(ra.s, ra.t, ra.t), bstt, eps)
            {
                return Ok(Verdict {
                    status: Status::SufficientConditionHolds,
                    rule: Some(Rule::Corollary38(bi as u8 + 1)),
                    role: Some(ra),
                    witness: None,
                });
            }
        }
    }

    // Corollary 3.9: a123 >= 0, two sub-conditions.
    for (bi, (brrs, brrt, bsst, bstt)) in COR39_BRANCHES.into_iter().enumerate() {
        for ra in ROLE_ASSIGNMENTS {
            if face_ok(ra, eps)
                && bound_holds(nb.b123, ZeroBound, eps)
                && bound_holds(b(ra.r, ra.r, ra.s), brrs, eps)
                && bound_holds(b(ra.r, ra.r, ra.t), brrt, eps)
                && bound_holds(b(ra.s, ra.s, ra.t), bsst, eps)
                && bound_holds(b(ra.s, ra.t, ra.t), bstt, eps)
            {
                return Ok(Verdict {
                    status: Status::SufficientConditionHolds,
                    rule: Some(Rule::Corollary39(bi as u8 + 1)),
                    role: Some(ra),
                    witness: None,
                });
            }
        }
    }

    Ok(Verdict {
        status: Status::Inapplicable,
        rule: None,
        role: None,
        witness: None,
    })
}

/// Dispatcher: tries the `{-1,0,1}` theorems in order, then the
/// sufficient conditions when the diagonal is positive, else
/// `Inapplicable` (callers may fall back to the oracle).
pub fn classify(t: &SymTensor3, eps: f64) -> Verdict {
    if t.unit_entries().is_some() {
        for check in [check_thm31, check_thm32, check_thm33, check_cor34] {
            let v = check(t);
            if v.status != Status::Inapplicable {
                return v;
            }
        }
    }
    if t.diagonal().iter().all(|d| d.is_positive()) {
        if let Ok(v) = check_sufficient_general(t, eps) {
            if v.status != Status::Inapplicable {
                return v;
            }
        }
    }
    Verdict {
        status: Status::Inapplicable,
        rule: None,
        role: None,
        witness: None,
    }
}
