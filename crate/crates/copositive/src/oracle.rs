//! Independent rigorous decision of strict copositivity.
//!
//! Two mechanisms, both exact:
//!
//! * [`grid_min`] — evaluates the form on every rational grid point
//!   `(i/N, j/N, k/N)` of the standard simplex and returns the exact
//!   minimum with an argmin. Any value `<= 0` disproves strictness
//!   outright because grid points are feasible.
//! * [`bernstein_certify`] — expresses the cubic in the degree-3
//!   Bernstein basis over a simplex and bisects the longest edge until
//!   every leaf has all-positive coefficients (a positivity certificate)
//!   or some corner coefficient, which equals the form's value at that
//!   vertex, is `<= 0` (a witness).

use num::bigint::BigInt;
use num::traits::{Signed, Zero};

use crate::rational::{int, rat, Rat};
use crate::tensor::{EvalPoint, SymMatrix3, SymTensor2, SymTensor3};

/// Sub-simplex of the standard simplex, tracked by its three vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub vertices: [[Rat; 3]; 3],
}

impl Simplex {
    /// The standard simplex `{x >= 0 : x1 + x2 + x3 = 1}`.
    pub fn standard() -> Self {
        let e = |i: usize| {
            let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
            v[i] = int(1);
            v
        };
        Simplex {
            vertices: [e(0), e(1), e(2)],
        }
    }
}

/// Canonical multi-index order for degree-3 Bernstein coefficients,
/// matching the tensor's canonical entry order.
pub const MULTI_INDICES: [[u32; 3]; 10] = [
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
    [1, 0, 2],
    [0, 2, 1],
    [0, 1, 2],
    [1, 1, 1],
];

/// Degree-3 Bernstein coefficients of a cubic over a simplex.
///
/// Over the standard simplex these are exactly the 10 unique tensor
/// entries; corner coefficients always equal the form's vertex values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernsteinForm {
    pub coefficients: [Rat; 10],
}

impl BernsteinForm {
    /// Coefficients over `simplex`, computed exactly through the polar
    /// form: the coefficient at multi-index `(i, j, k)` is the polar form
    /// at vertex 1 taken `i` times, vertex 2 `j` times, vertex 3 `k` times.
    pub fn over_simplex(t: &SymTensor3, simplex: &Simplex) -> Self {
        let coefficients = MULTI_INDICES.map(|alpha| {
            let mut picks: Vec<&[Rat; 3]> = Vec::with_capacity(3);
            for (vi, &count) in alpha.iter().enumerate() {
                for _ in 0..count {
                    picks.push(&simplex.vertices[vi]);
                }
            }
            t.polar(picks[0], picks[1], picks[2])
        });
        BernsteinForm { coefficients }
    }

    /// Corner coefficients: values of the form at the simplex vertices.
    pub fn corners(&self) -> [&Rat; 3] {
        [
            &self.coefficients[0],
            &self.coefficients[1],
            &self.coefficients[2],
        ]
    }

    pub fn all_positive(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_positive())
    }
}

/// Outcome status of an oracle run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleStatus {
    PositiveCertified,
    NonpositiveWitness,
    Inconclusive,
}

impl std::fmt::Display for OracleStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OracleStatus::PositiveCertified => "positive-certified",
            OracleStatus::NonpositiveWitness => "nonpositive-witness",
            OracleStatus::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// Nonnegative nonzero point with an exact form value `<= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: EvalPoint,
    pub value: Rat,
}

/// Subdivision statistics backing a positivity certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub leaf_count: u64,
    pub max_depth: u32,
}

/// Result of an oracle decision.
#[derive(Clone, Debug)]
pub struct OracleResult {
    pub status: OracleStatus,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
    /// Best (smallest) exact value encountered at any evaluated point.
    pub min_estimate: Option<Rat>,
}

impl OracleResult {
    fn witness(point: EvalPoint, value: Rat) -> Self {
        OracleResult {
            status: OracleStatus::NonpositiveWitness,
            min_estimate: Some(value.clone()),
            witness: Some(Witness { point, value }),
            certificate: None,
        }
    }
}

// Safety valve against pathological subdivision trees (forms whose
// minimum is exactly zero at a point no corner ever hits).
const NODE_BUDGET: u64 = 4_000_000;

fn eval_int3(e: &[i64; 10], x1: i128, x2: i128, x3: i128) -> i128 {
    e[0] as i128 * x1 * x1 * x1
        + e[1] as i128 * x2 * x2 * x2
        + e[2] as i128 * x3 * x3 * x3
        + 3 * (e[3] as i128 * x1 * x1 * x2
            + e[4] as i128 * x1 * x2 * x2
            + e[5] as i128 * x1 * x1 * x3
            + e[6] as i128 * x1 * x3 * x3
            + e[7] as i128 * x2 * x2 * x3
            + e[8] as i128 * x2 * x3 * x3)
        + 6 * e[9] as i128 * x1 * x2 * x3
}

const FAST_GRID_LIMIT: u32 = 1 << 12;
const FAST_ENTRY_LIMIT: i64 = 1 << 40;

/// Exact minimum of the form over the simplex grid with the given
/// denominator, together with the first argmin in iteration order
/// (`i` ascending, then `j`).
pub fn grid_min(t: &SymTensor3, denominator: u32) -> (Rat, EvalPoint) {
    let n = denominator.max(1);
    let fast = t
        .scaled_integer_entries()
        .filter(|(e, _)| n <= FAST_GRID_LIMIT && e.iter().all(|v| v.abs() <= FAST_ENTRY_LIMIT));
    if let Some((e, scale)) = fast {
        let mut best: Option<(i128, [u32; 3])> = None;
        for i in 0..=n {
            for j in 0..=(n - i) {
                let k = n - i - j;
                let v = eval_int3(&e, i as i128, j as i128, k as i128);
                if best.as_ref().map_or(true, |(bv, _)| v < *bv) {
                    best = Some((v, [i, j, k]));
                }
            }
        }
        let (v, p) = best.unwrap();
        // scaled value is (scale * N^3) times the simplex-point value
        let value = Rat::new(
            BigInt::from(v),
            scale * BigInt::from(n as u64).pow(3),
        );
        let point = EvalPoint::new(p.map(|c| rat(c as i64, n as i64)).to_vec());
        return (value, point);
    }

    let mut best: Option<(Rat, EvalPoint)> = None;
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            let p = EvalPoint::new(
                [i, j, k].map(|c| rat(c as i64, n as i64)).to_vec(),
            );
            let v = t.eval(&p).expect("3 coordinates");
            if best.as_ref().map_or(true, |(bv, _)| v < *bv) {
                best = Some((v, p));
            }
        }
    }
    let (v, p) = best.unwrap();
    (v, p)
}

/// Exact minimum of a dimension-2 form over the grid of the 1-simplex.
pub fn grid_min2(t: &SymTensor2, denominator: u32) -> (Rat, EvalPoint) {
    let n = denominator.max(1);
    let mut best: Option<(Rat, EvalPoint)> = None;
    for i in 0..=n {
        let p = EvalPoint::new(vec![rat(i as i64, n as i64), rat((n - i) as i64, n as i64)]);
        let v = t.eval(&p).expect("2 coordinates");
        if best.as_ref().map_or(true, |(bv, _)| v < *bv) {
            best = Some((v, p));
        }
    }
    best.unwrap()
}

fn edge_len_sq(a: &[Rat; 3], b: &[Rat; 3]) -> Rat {
    let mut s = Rat::zero();
    for i in 0..3 {
        let d = &a[i] - &b[i];
        s += &d * &d;
    }
    s
}

fn midpoint(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    let half = rat(1, 2);
    std::array::from_fn(|i| (&a[i] + &b[i]) * &half)
}

fn track_min(est: &mut Option<Rat>, v: &Rat) {
    if est.as_ref().map_or(true, |m| v < m) {
        *est = Some(v.clone());
    }
}

/// Bernstein-coefficient subdivision over the standard simplex.
///
/// Leaves with all-positive coefficients are certified; a corner
/// coefficient `<= 0` is an exact nonpositive witness at that vertex.
/// Otherwise the longest edge is bisected (lexicographic tie-break on the
/// edge order (1,2), (1,3), (2,3)) and both children are explored, up to
/// `max_depth`.
pub fn bernstein_certify(t: &SymTensor3, max_depth: u32) -> OracleResult {
    let mut stack: Vec<(Simplex, u32)> = vec![(Simplex::standard(), 0)];
    let mut min_estimate: Option<Rat> = None;
    let mut inconclusive = false;
    let mut leaf_count: u64 = 0;
    let mut deepest: u32 = 0;
    let mut visited: u64 = 0;

    while let Some((simplex, depth)) = stack.pop() {
        visited += 1;
        if visited > NODE_BUDGET {
            inconclusive = true;
            break;
        }
        deepest = deepest.max(depth);
        let form = BernsteinForm::over_simplex(t, &simplex);
        for (ci, corner) in form.corners().into_iter().enumerate() {
            track_min(&mut min_estimate, corner);
            if !corner.is_positive() {
                return OracleResult::witness(
                    EvalPoint::new(simplex.vertices[ci].to_vec()),
                    corner.clone(),
                );
            }
        }
        if form.all_positive() {
            leaf_count += 1;
            continue;
        }
        if depth >= max_depth {
            inconclusive = true;
            continue;
        }
        let v = &simplex.vertices;
        let lens = [
            edge_len_sq(&v[0], &v[1]),
            edge_len_sq(&v[0], &v[2]),
            edge_len_sq(&v[1], &v[2]),
        ];
        let edges = [(0usize, 1usize), (0, 2), (1, 2)];
        let mut which = 0;
        for i in 1..3 {
            if lens[i] > lens[which] {
                which = i;
            }
        }
        let (a, b) = edges[which];
        let mid = midpoint(&v[a], &v[b]);
        let mut child1 = simplex.clone();
        child1.vertices[b] = mid.clone();
        let mut child2 = simplex;
        child2.vertices[a] = mid;
        stack.push((child2, depth + 1));
        stack.push((child1, depth + 1));
    }

    if inconclusive {
        OracleResult {
            status: OracleStatus::Inconclusive,
            witness: None,
            certificate: None,
            min_estimate,
        }
    } else {
        OracleResult {
            status: OracleStatus::PositiveCertified,
            witness: None,
            certificate: Some(Certificate {
                leaf_count,
                max_depth: deepest,
            }),
            min_estimate,
        }
    }
}

/// Dimension-2 analogue of [`bernstein_certify`]: cubic Bezier
/// coefficients over a segment in the 1-simplex.
pub fn bernstein_certify2(t: &SymTensor2, max_depth: u32) -> OracleResult {
    type Seg = [[Rat; 2]; 2];
    let coeffs = |seg: &Seg| -> [Rat; 4] {
        [
            t.polar(&seg[0], &seg[0], &seg[0]),
            t.polar(&seg[0], &seg[0], &seg[1]),
            t.polar(&seg[0], &seg[1], &seg[1]),
            t.polar(&seg[1], &seg[1], &seg[1]),
        ]
    };
    let start: Seg = [[int(1), int(0)], [int(0), int(1)]];
    let mut stack: Vec<(Seg, u32)> = vec![(start, 0)];
    let mut min_estimate: Option<Rat> = None;
    let mut inconclusive = false;
    let mut leaf_count = 0u64;
    let mut deepest = 0u32;
    let mut visited = 0u64;

    while let Some((seg, depth)) = stack.pop() {
        visited += 1;
        if visited > NODE_BUDGET {
            inconclusive = true;
            break;
        }
        deepest = deepest.max(depth);
        let c = coeffs(&seg);
        for (vi, corner) in [(0usize, &c[0]), (1, &c[3])] {
            track_min(&mut min_estimate, corner);
            if !corner.is_positive() {
                return OracleResult::witness(EvalPoint::new(seg[vi].to_vec()), corner.clone());
            }
        }
        if c.iter().all(|x| x.is_positive()) {
            leaf_count += 1;
            continue;
        }
        if depth >= max_depth {
            inconclusive = true;
            continue;
        }
        let half = rat(1, 2);
        let mid: [Rat; 2] = std::array::from_fn(|i| (&seg[0][i] + &seg[1][i]) * &half);
        stack.push(([mid.clone(), seg[1].clone()], depth + 1));
        stack.push(([seg[0].clone(), mid], depth + 1));
    }

    if inconclusive {
        OracleResult {
            status: OracleStatus::Inconclusive,
            witness: None,
            certificate: None,
            min_estimate,
        }
    } else {
        OracleResult {
            status: OracleStatus::PositiveCertified,
            witness: None,
            certificate: Some(Certificate {
                leaf_count,
                max_depth: deepest,
            }),
            min_estimate,
        }
    }
}

// Proof-relevant minimizers have small denominators, so coarse grids run
// first and catch exact-zero minima before subdivision starts.
const BASE_DENOMINATORS: [u32; 2] = [7, 12];

/// Full oracle decision: exact grid search (denominators 7, 12 and the
/// requested one) followed by Bernstein subdivision when the grid finds
/// no nonpositive value.
pub fn oracle_verdict(t: &SymTensor3, denominator: u32, max_depth: u32) -> OracleResult {
    let mut denoms: Vec<u32> = BASE_DENOMINATORS.to_vec();
    denoms.push(denominator.max(1));
    denoms.sort_unstable();
    denoms.dedup();

    let mut best: Option<Rat> = None;
    for n in denoms {
        let (v, p) = grid_min(t, n);
        if !v.is_positive() {
            return OracleResult::witness(p, v);
        }
        track_min(&mut best, &v);
    }
    let mut res = bernstein_certify(t, max_depth);
    if let Some(b) = best {
        track_min(&mut res.min_estimate, &b);
    }
    res
}

/// Dimension-2 analogue of [`oracle_verdict`].
pub fn oracle_verdict2(t: &SymTensor2, denominator: u32, max_depth: u32) -> OracleResult {
    let mut denoms: Vec<u32> = BASE_DENOMINATORS.to_vec();
    denoms.push(denominator.max(1));
    denoms.sort_unstable();
    denoms.dedup();

    let mut best: Option<Rat> = None;
    for n in denoms {
        let (v, p) = grid_min2(t, n);
        if !v.is_positive() {
            return OracleResult::witness(p, v);
        }
        track_min(&mut best, &v);
    }
    let mut res = bernstein_certify2(t, max_depth);
    if let Some(b) = best {
        track_min(&mut res.min_estimate, &b);
    }
    res
}

fn solve_linear(mut a: Vec<Vec<Rat>>) -> Option<Vec<Rat>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..=n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some((0..n).map(|r| a[r][n].clone()).collect())
}

/// Exact minimum of `x^T M x` over the standard simplex.
///
/// Enumerates every stationarity candidate — the 3 vertices, the critical
/// point of each edge and the interior stationary point of the
/// constrained problem — all in exact rationals, and takes the smallest
/// feasible value. Correct for any symmetric matrix because the minimum
/// of a quadratic over a compact polytope is attained at a stationary
/// point of the relative interior of some face.
pub fn quadratic_simplex_min(m: &SymMatrix3) -> (Rat, EvalPoint) {
    let entries = |i: usize, j: usize| -> &Rat {
        match (i.min(j), i.max(j)) {
            (0, 0) => &m.m11,
            (1, 1) => &m.m22,
            (2, 2) => &m.m33,
            (0, 1) => &m.m12,
            (0, 2) => &m.m13,
            (1, 2) => &m.m23,
            _ => unreachable!(),
        }
    };
    let mut candidates: Vec<[Rat; 3]> = Vec::new();

    for i in 0..3 {
        let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
        v[i] = int(1);
        candidates.push(v);
    }

    // edge (i, j): q(t) = t^2 m_ii + 2 t (1-t) m_ij + (1-t)^2 m_jj
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let a = entries(i, i) - entries(i, j) * int(2) + entries(j, j);
        if !a.is_zero() {
            let tstar = (entries(j, j) - entries(i, j)) / &a;
            if tstar.is_positive() && tstar < int(1) {
                let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
                v[i] = tstar.clone();
                v[j] = int(1) - tstar;
                candidates.push(v);
            }
        }
    }

    // interior stationary point: 2 M x = lambda * 1, sum x = 1
    let two = int(2);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for r in 0..3 {
        let mut row: Vec<Rat> = (0..3).map(|c| &two * entries(r, c)).collect();
        row.push(int(-1)); // -lambda
        row.push(Rat::zero());
        rows.push(row);
    }
    rows.push(vec![int(1), int(1), int(1), Rat::zero(), int(1)]);
    if let Some(sol) = solve_linear(rows) {
        let x = [sol[0].clone(), sol[1].clone(), sol[2].clone()];
        if x.iter().all(|c| !c.is_negative()) {
            candidates.push(x);
        }
    }

    let mut best: Option<(Rat, EvalPoint)> = None;
    for c in candidates {
        let p = EvalPoint::new(c.to_vec());
        let v = m.eval(&p).expect("3 coordinates");
        if best.as_ref().map_or(true, |(bv, _)| v < *bv) {
            best = Some((v, p));
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn case1_tensor() -> SymTensor3 {
        // diagonal 1, a112 = 0, a113 = -1, a122 = a133 = 1,
        // a223 = a233 = 1, a123 = -1
        SymTensor3::from_i64([1, 1, 1, 0, 1, -1, 1, 1, 1, -1])
    }

    #[test]
    fn grid_min_reproduces_constrained_minimum() {
        let (v, p) = grid_min(&case1_tensor(), 7);
        assert_eq!(v, rat(1, 49));
        assert_eq!(
            p.coords(),
            &[rat(4, 7), rat(1, 7), rat(2, 7)]
        );
    }

    #[test]
    fn grid_min_diagonal_tensor() {
        let t = SymTensor3::from_i64([1, 1, 1, 0, 0, 0, 0, 0, 0, 0]);
        let (v, p) = grid_min(&t, 3);
        assert_eq!(v, rat(1, 9));
        assert_eq!(p.coords(), &[rat(1, 3), rat(1, 3), rat(1, 3)]);
    }

    #[test]
    fn grid_min_sum_cube() {
        let t = SymTensor3::from_i64([1; 10]);
        for n in [1u32, 5, 12, 84] {
            let (v, _) = grid_min(&t, n);
            assert_eq!(v, int(1));
        }
    }

    #[test]
    fn grid_fast_path_matches_rational_path() {
        let t = SymTensor3::from_entries([
            rat(1, 2),
            int(1),
            rat(4, 3),
            rat(-1, 6),
            int(1),
            int(0),
            rat(2, 3),
            rat(-1, 2),
            int(1),
            rat(-5, 6),
        ]);
        let (fast_v, fast_p) = grid_min(&t, 11);
        // force the rational path by recomputing pointwise
        let mut best: Option<Rat> = None;
        for i in 0..=11u32 {
            for j in 0..=(11 - i) {
                let k = 11 - i - j;
                let p = EvalPoint::new(vec![rat(i as i64, 11), rat(j as i64, 11), rat(k as i64, 11)]);
                let v = t.eval(&p).unwrap();
                if best.as_ref().map_or(true, |b| v < *b) {
                    best = Some(v);
                }
            }
        }
        assert_eq!(fast_v, best.unwrap());
        assert_eq!(t.eval(&fast_p).unwrap(), fast_v);
    }

    #[test]
    fn bernstein_positive_at_depth_zero() {
        let t = SymTensor3::from_i64([2, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        let r = bernstein_certify(&t, 5);
        assert_eq!(r.status, OracleStatus::PositiveCertified);
        let cert = r.certificate.unwrap();
        assert_eq!(cert.leaf_count, 1);
        assert_eq!(cert.max_depth, 0);
    }

    #[test]
    fn bernstein_corner_witness() {
        let t = SymTensor3::from_i64([-1, 1, 1, 0, 0, 0, 0, 0, 0, 0]);
        let r = bernstein_certify(&t, 5);
        assert_eq!(r.status, OracleStatus::NonpositiveWitness);
        let w = r.witness.unwrap();
        assert_eq!(w.value, int(-1));
        assert_eq!(w.point.coords(), &[int(1), int(0), int(0)]);
    }

    #[test]
    fn bernstein_certifies_case1_tensor() {
        let r = bernstein_certify(&case1_tensor(), 30);
        assert_eq!(r.status, OracleStatus::PositiveCertified);
        let cert = r.certificate.unwrap();
        assert!(cert.max_depth <= 16, "depth {}", cert.max_depth);
    }

    #[test]
    fn oracle_verdict_necessity_variant() {
        // both a112 and a113 at -1: value -8 at (2,1,1)
        let t = SymTensor3::from_i64([1, 1, 1, -1, 1, -1, 1, 1, 1, -1]);
        let r = oracle_verdict(&t, 84, 30);
        assert_eq!(r.status, OracleStatus::NonpositiveWitness);
        let w = r.witness.unwrap();
        assert!(!w.value.is_positive());
        assert_eq!(t.eval(&w.point).unwrap(), w.value);
    }

    #[test]
    fn oracle_verdict_positive_diagonal() {
        let t = SymTensor3::from_i64([1, 1, 1, 0, 0, 0, 0, 0, 0, 0]);
        let r = oracle_verdict(&t, 84, 30);
        assert_eq!(r.status, OracleStatus::PositiveCertified);
    }

    #[test]
    fn oracle_verdict_zero_tensor() {
        let t = SymTensor3::from_i64([0; 10]);
        let r = oracle_verdict(&t, 84, 30);
        assert_eq!(r.status, OracleStatus::NonpositiveWitness);
        let w = r.witness.unwrap();
        assert_eq!(w.value, int(0));
    }

    #[test]
    fn grid2_and_certify2_agree_on_simple_forms() {
        let pos = SymTensor2::from_i64([1, 1, -1, 1]);
        let (v, _) = grid_min2(&pos, 84);
        assert!(v.is_positive());
        assert_eq!(
            bernstein_certify2(&pos, 30).status,
            OracleStatus::PositiveCertified
        );

        let neg = SymTensor2::from_i64([1, -1, -1, 1]);
        let r = oracle_verdict2(&neg, 84, 30);
        assert_eq!(r.status, OracleStatus::NonpositiveWitness);
    }

    #[test]
    fn quadratic_min_identity() {
        let (v, p) = quadratic_simplex_min(&SymMatrix3::identity());
        assert_eq!(v, rat(1, 3));
        assert_eq!(p.coords(), &[rat(1, 3), rat(1, 3), rat(1, 3)]);
    }

    #[test]
    fn quadratic_min_indefinite() {
        let m = SymMatrix3::new(int(1), int(1), int(1), int(-2), int(0), int(0));
        let (v, _) = quadratic_simplex_min(&m);
        // on the edge x3 = 0: t^2 + (1-t)^2 - 4 t (1-t), minimum -1/2 at t = 1/2
        assert_eq!(v, rat(-1, 2));
    }

    #[test]
    fn monotone_grid_refinement() {
        let t = case1_tensor();
        let (v1, _) = grid_min(&t, 7);
        let (v2, _) = grid_min(&t, 14);
        assert!(v2 <= v1);
    }
}
