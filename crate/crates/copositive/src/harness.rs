//! Cross-validation harness: exhaustive `{-1,0,1}` enumeration against the
//! oracle, the ternary cubic inequality suite, and randomized soundness
//! sampling of the sufficient conditions.

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{
    check_cor34, check_thm31, check_thm32, check_thm33, Rule, Status, Verdict,
};
use crate::oracle::{oracle_verdict, OracleResult, OracleStatus};
use crate::rational::{ceil_with_denominator, format_rational, rat, to_f64, Rat};
use crate::tensor::SymTensor3;

/// Entry order used everywhere reports enumerate the 10 unique entries.
pub const ENTRY_ORDER: [&str; 10] = [
    "a111", "a222", "a333", "a112", "a122", "a113", "a133", "a223", "a233", "a123",
];

/// Per-rule tallies over the enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct RuleCounter {
    pub rule: String,
    pub applicable: u64,
    pub strict: u64,
    pub not_strict: u64,
}

/// One analytic/oracle conflict (expected: none).
#[derive(Clone, Debug, Serialize)]
pub struct Disagreement {
    pub entries: [i64; 10],
    pub rule: String,
    pub analytic: String,
    pub oracle: String,
}

/// Outcome of the full `{-1,0,1}` enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub total: u64,
    pub applicable: u64,
    pub rules: Vec<RuleCounter>,
    pub disagreements: Vec<Disagreement>,
    pub inconclusive: u64,
    /// tensors where a theorem and the `{-1,1}` corollary both apply and agree
    pub overlap_agreements: u64,
    /// per-rule strict sets closed under coordinate permutations
    pub orbit_closed: bool,
    /// not serialized: keeps structured reports byte-identical across runs
    #[serde(skip)]
    pub wall_time_ms: u64,
}

impl EnumerationReport {
    pub fn clean(&self) -> bool {
        self.disagreements.is_empty() && self.inconclusive == 0 && self.orbit_closed
    }
}

/// Entries of tensor number `index` in lexicographic enumeration order:
/// base-3 digits over [`ENTRY_ORDER`], digit values mapped `0,1,2` to
/// `-1,0,1`, most significant digit first.
pub fn enumeration_entries(index: u32) -> [i64; 10] {
    let mut e = [0i64; 10];
    let mut rem = index;
    for slot in (0..10).rev() {
        e[slot] = (rem % 3) as i64 - 1;
        rem /= 3;
    }
    e
}

fn rule_for(e: &[i64; 10]) -> Option<(usize, Verdict)> {
    let t = SymTensor3::from_i64(*e);
    let checks = [check_thm31, check_thm32, check_thm33, check_cor34];
    for (idx, check) in checks.iter().enumerate() {
        let v = check(&t);
        if v.status != Status::Inapplicable {
            return Some((idx, v));
        }
    }
    None
}

fn permute_entries(e: &[i64; 10], perm: [usize; 3]) -> [i64; 10] {
    let t = SymTensor3::from_i64(*e);
    let p = t.permute(perm);
    let entries = p.entries();
    let mut out = [0i64; 10];
    for (slot, v) in entries.iter().enumerate() {
        out[slot] = crate::rational::as_i64(v).expect("unit entries stay integral");
    }
    out
}

const PERMS: [[usize; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

struct ItemOutcome {
    entries: [i64; 10],
    rule_idx: usize,
    rule: Rule,
    analytic: Status,
    oracle: OracleStatus,
    overlap_agreed: Option<bool>,
}

/// Exhaustive cross-validation of the `{-1,0,1}` criteria.
///
/// Walks all 3^10 entry assignments; wherever a theorem hypothesis
/// matches, compares the analytic verdict against the oracle, checks the
/// theorem/corollary overlap, and verifies each rule's strict set is
/// closed under coordinate permutations.
pub fn enumerate_pm10(denominator: u32, max_depth: u32) -> EnumerationReport {
    let start = Instant::now();
    let total: u32 = 59049;

    let outcomes: Vec<ItemOutcome> = (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let e = enumeration_entries(index);
            let (rule_idx, verdict) = rule_for(&e)?;
            let t = SymTensor3::from_i64(e);
            let oracle = oracle_verdict(&t, denominator, max_depth).status;
            let overlap_agreed = if rule_idx < 3 && e.iter().all(|&v| v != 0) {
                let cor = check_cor34(&t);
                Some(cor.status == verdict.status)
            } else {
                None
            };
            Some(ItemOutcome {
                entries: e,
                rule_idx,
                rule: verdict.rule.expect("applicable verdict carries a rule"),
                analytic: verdict.status,
                oracle,
                overlap_agreed,
            })
        })
        .collect();

    let rule_names = ["Theorem 3.1", "Theorem 3.2", "Theorem 3.3", "Corollary 3.4"];
    let mut rules: Vec<RuleCounter> = rule_names
        .iter()
        .map(|n| RuleCounter {
            rule: n.to_string(),
            applicable: 0,
            strict: 0,
            not_strict: 0,
        })
        .collect();
    let mut disagreements = Vec::new();
    let mut inconclusive = 0u64;
    let mut overlap_agreements = 0u64;
    let mut strict_sets: Vec<HashSet<[i64; 10]>> = vec![HashSet::new(); 4];

    for o in &outcomes {
        let c = &mut rules[o.rule_idx];
        c.applicable += 1;
        match o.analytic {
            Status::StrictlyCopositive => {
                c.strict += 1;
                strict_sets[o.rule_idx].insert(o.entries);
            }
            Status::NotStrictlyCopositive => c.not_strict += 1,
            _ => unreachable!("enumeration verdicts are decisive"),
        }
        let agree = match (o.analytic, o.oracle) {
            (Status::StrictlyCopositive, OracleStatus::PositiveCertified) => true,
            (Status::NotStrictlyCopositive, OracleStatus::NonpositiveWitness) => true,
            (_, OracleStatus::Inconclusive) => {
                inconclusive += 1;
                true // counted separately, not as a disagreement
            }
            _ => false,
        };
        if !agree {
            disagreements.push(Disagreement {
                entries: o.entries,
                rule: o.rule.to_string(),
                analytic: o.analytic.to_string(),
                oracle: o.oracle.to_string(),
            });
        }
        if o.overlap_agreed.is_some() {
            // the {-1,1} corollary also applied; tally it under its own row
            let c = &mut rules[3];
            c.applicable += 1;
            match o.analytic {
                Status::StrictlyCopositive => c.strict += 1,
                Status::NotStrictlyCopositive => c.not_strict += 1,
                _ => {}
            }
        }
        match o.overlap_agreed {
            Some(true) => overlap_agreements += 1,
            Some(false) => disagreements.push(Disagreement {
                entries: o.entries,
                rule: "Corollary 3.4".to_string(),
                analytic: o.analytic.to_string(),
                oracle: "theorem/corollary overlap conflict".to_string(),
            }),
            None => {}
        }
    }

    let orbit_closed = strict_sets.iter().all(|set| {
        set.iter()
            .all(|e| PERMS.iter().all(|p| set.contains(&permute_entries(e, *p))))
    });

    EnumerationReport {
        total: total as u64,
        applicable: outcomes.len() as u64,
        rules,
        disagreements,
        inconclusive,
        overlap_agreements,
        orbit_closed,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Which transcription of a printed inequality a case uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reading {
    Printed,
    Corrected,
}

impl std::fmt::Display for Reading {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Reading::Printed => "printed",
            Reading::Corrected => "corrected",
        })
    }
}

/// One inequality instance: the difference form as a tensor plus the
/// oracle outcome.
#[derive(Clone, Debug)]
pub struct InequalityCase {
    pub label: String,
    pub case: usize,
    pub reading: Reading,
    pub tensor: SymTensor3,
    pub verified: bool,
    pub result: OracleResult,
}

type Monomial = (i64, [usize; 3]);

fn multiplicity(idx: &[usize; 3]) -> i64 {
    let mut s = *idx;
    s.sort_unstable();
    if s[0] == s[2] {
        1
    } else if s[0] == s[1] || s[1] == s[2] {
        3
    } else {
        6
    }
}

/// `(x1+x2+x3)^3` minus the given monomials, as an exact tensor.
fn difference_tensor(monomials: &[Monomial]) -> SymTensor3 {
    let mut e = [1i64; 10];
    for (coef, idx) in monomials {
        let m = multiplicity(idx);
        assert_eq!(coef % m, 0, "monomial coefficient must be a multiple of its multiplicity");
        let slot = entry_slot(idx);
        e[slot] -= coef / m;
    }
    SymTensor3::from_i64(e)
}

fn entry_slot(idx: &[usize; 3]) -> usize {
    let mut s = *idx;
    s.sort_unstable();
    match s {
        [1, 1, 1] => 0,
        [2, 2, 2] => 1,
        [3, 3, 3] => 2,
        [1, 1, 2] => 3,
        [1, 2, 2] => 4,
        [1, 1, 3] => 5,
        [1, 3, 3] => 6,
        [2, 2, 3] => 7,
        [2, 3, 3] => 8,
        [1, 2, 3] => 9,
        _ => panic!("index digits must lie in 1..=3"),
    }
}

fn swap_x22x3(monomials: &[Monomial]) -> Vec<Monomial> {
    monomials
        .iter()
        .map(|(c, idx)| {
            let mut s = *idx;
            s.sort_unstable();
            let swapped = match s {
                [2, 2, 3] => [2, 3, 3],
                [2, 3, 3] => [2, 2, 3],
                other => other,
            };
            (*c, swapped)
        })
        .collect()
}

fn rotate(monomials: &[Monomial], shift: usize) -> Vec<Monomial> {
    let map = |i: usize| (i - 1 + shift) % 3 + 1;
    monomials
        .iter()
        .map(|(c, idx)| (*c, [map(idx[0]), map(idx[1]), map(idx[2])]))
        .collect()
}

/// Printed right-hand sides of the five ternary cubic inequalities.
fn printed_case(case: usize) -> Vec<Monomial> {
    match case {
        1 => vec![(12, [1, 2, 3]), (6, [1, 1, 2]), (6, [2, 2, 3])],
        2 => vec![(12, [1, 2, 3]), (6, [1, 1, 3]), (6, [2, 2, 3])],
        3 => vec![(12, [1, 2, 3]), (6, [1, 1, 3]), (3, [1, 1, 2])],
        4 => vec![(6, [1, 2, 3]), (3, [1, 1, 3]), (6, [1, 1, 3]), (6, [2, 2, 3])],
        5 => vec![(6, [1, 1, 3]), (6, [1, 1, 3]), (6, [2, 2, 3])],
        _ => panic!("cases are 1..=5"),
    }
}

/// Corrected right-hand sides. Cases 1-3 are kept as printed (case 3's
/// `3x1^2x2` term checks out as written). Case 4 reads the stray
/// `3x1^2x3` as `3x1^2x2`; case 5 reads the first of the duplicated
/// `6x1^2x3` terms as `6x1^2x2`, which makes the line parallel cases 1-2
/// and is the only nearby reading that holds.
fn corrected_case(case: usize) -> Vec<Monomial> {
    match case {
        1 | 2 | 3 => printed_case(case),
        4 => vec![(6, [1, 2, 3]), (3, [1, 1, 2]), (6, [1, 1, 3]), (6, [2, 2, 3])],
        5 => vec![(6, [1, 1, 2]), (6, [1, 1, 3]), (6, [2, 2, 3])],
        _ => panic!("cases are 1..=5"),
    }
}

/// Builds every inequality case — 5 lines, printed and corrected
/// readings, the `x2^2 x3 / x2 x3^2` interchange, and the three cyclic
/// variable exchanges — and runs the oracle on each difference form.
pub fn verify_inequalities(denominator: u32, max_depth: u32) -> Vec<InequalityCase> {
    let mut specs: Vec<(String, usize, Reading, Vec<Monomial>)> = Vec::new();
    for case in 1..=5usize {
        for (reading, monomials) in [
            (Reading::Printed, printed_case(case)),
            (Reading::Corrected, corrected_case(case)),
        ] {
            for (swap, ms) in [(false, monomials.clone()), (true, swap_x22x3(&monomials))] {
                for shift in 0..3usize {
                    let label = format!(
                        "case {case} [{reading}{}{}]",
                        if swap { ", interchange" } else { "" },
                        if shift > 0 {
                            format!(", rotation {shift}")
                        } else {
                            String::new()
                        }
                    );
                    specs.push((label, case, reading, rotate(&ms, shift)));
                }
            }
        }
    }
    specs
        .into_par_iter()
        .map(|(label, case, reading, monomials)| {
            let tensor = difference_tensor(&monomials);
            let result = oracle_verdict(&tensor, denominator, max_depth);
            InequalityCase {
                label,
                case,
                reading,
                verified: result.status == OracleStatus::PositiveCertified,
                tensor,
                result,
            }
        })
        .collect()
}

/// Sampling tallies for one sufficient-condition corollary.
#[derive(Clone, Debug, Serialize)]
pub struct CorollarySample {
    pub rule: String,
    pub samples: u64,
    /// samples the analytic sufficiency check recognized
    pub recognized: u64,
    pub positive_certified: u64,
    pub nonpositive: u64,
    pub inconclusive: u64,
}

/// Outcome of the randomized soundness run.
#[derive(Clone, Debug, Serialize)]
pub struct SamplingReport {
    pub seed: u64,
    pub count_per_corollary: u64,
    pub corollaries: Vec<CorollarySample>,
}

impl SamplingReport {
    pub fn clean(&self) -> bool {
        self.corollaries
            .iter()
            .all(|c| c.nonpositive == 0 && c.inconclusive == 0 && c.recognized == c.samples)
    }
}

// Lower bounds, in units of the matching cube-root diagonal product, in
// draw order (a112, a122, a113, a133, a223, a233, a123).
type BoundRow = [i64; 7];

const C36_ROW: BoundRow = [-1, 1, -1, 1, -1, 1, 1];
const C37_ROW: BoundRow = [-1, 1, -1, 1, 0, 0, 1];
const C38_ROWS: [BoundRow; 5] = [
    [1, 1, -1, 1, -1, 1, -1],
    [-1, 1, 0, 1, 1, 1, -1],
    [0, 1, 0, 1, 1, -1, -1],
    [1, 1, -1, 1, 0, 0, -1],
    [0, 1, 0, 1, 0, 0, -1],
];
const C39_ROWS: [BoundRow; 2] = [
    [0, 1, -1, 1, 0, 0, 0],
    [-1, 1, 0, 1, -1, 1, 0],
];

/// Denominator used for sampled off-diagonal entries.
pub const SAMPLE_DENOMINATOR: i64 = 4096;

fn draw_diag(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(8..=64), 16)
}

fn sample_tensor(rng: &mut ChaCha8Rng, row: &BoundRow) -> SymTensor3 {
    let a111 = draw_diag(rng);
    let a222 = draw_diag(rng);
    let a333 = draw_diag(rng);
    let d = [to_f64(&a111), to_f64(&a222), to_f64(&a333)];
    // cube-root scale for the entry at each draw slot
    let scales = [
        (d[0] * d[0] * d[1]).cbrt(), // a112
        (d[0] * d[1] * d[1]).cbrt(), // a122
        (d[0] * d[0] * d[2]).cbrt(), // a113
        (d[0] * d[2] * d[2]).cbrt(), // a133
        (d[1] * d[1] * d[2]).cbrt(), // a223
        (d[1] * d[2] * d[2]).cbrt(), // a233
        (d[0] * d[1] * d[2]).cbrt(), // a123
    ];
    let mut off = Vec::with_capacity(7);
    for (units, scale) in row.iter().zip(scales) {
        let margin: f64 = rng.gen_range(0.125..=2.0);
        off.push(ceil_with_denominator(
            *units as f64 * scale + margin,
            SAMPLE_DENOMINATOR,
        ));
    }
    SymTensor3::new(
        a111,
        a222,
        a333,
        off[0].clone(),
        off[1].clone(),
        off[2].clone(),
        off[3].clone(),
        off[4].clone(),
        off[5].clone(),
        off[6].clone(),
    )
}

/// Draws `count` tensors per corollary satisfying its hypotheses with a
/// strict random margin and asserts the oracle finds no nonpositive
/// value. Deterministic: one ChaCha8 stream seeded by `seed`, corollaries
/// in order 3.6, 3.7, 3.8, 3.9, fixed draw order per sample (branch
/// selector where applicable, three diagonal entries, then off-diagonals
/// a112, a122, a113, a133, a223, a233, a123 with one margin draw each).
pub fn sample_sufficiency(
    count: u64,
    seed: u64,
    denominator: u32,
    max_depth: u32,
) -> SamplingReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups: [(&str, &[BoundRow]); 4] = [
        ("Corollary 3.6", std::slice::from_ref(&C36_ROW)),
        ("Corollary 3.7", std::slice::from_ref(&C37_ROW)),
        ("Corollary 3.8", &C38_ROWS),
        ("Corollary 3.9", &C39_ROWS),
    ];
    let mut corollaries = Vec::new();
    for (name, rows) in groups {
        let tensors: Vec<SymTensor3> = (0..count)
            .map(|_| {
                let row = if rows.len() == 1 {
                    &rows[0]
                } else {
                    &rows[rng.gen_range(0..rows.len())]
                };
                sample_tensor(&mut rng, row)
            })
            .collect();
        let results: Vec<(bool, OracleStatus)> = tensors
            .par_iter()
            .map(|t| {
                let recognized = crate::criteria::check_sufficient_general(
                    t,
                    crate::criteria::DEFAULT_EPSILON,
                )
                .map(|v| v.status == Status::SufficientConditionHolds)
                .unwrap_or(false);
                let status = oracle_verdict(t, denominator, max_depth).status;
                (recognized, status)
            })
            .collect();
        let mut sample = CorollarySample {
            rule: name.to_string(),
            samples: count,
            recognized: 0,
            positive_certified: 0,
            nonpositive: 0,
            inconclusive: 0,
        };
        for (recognized, status) in results {
            if recognized {
                sample.recognized += 1;
            }
            match status {
                OracleStatus::PositiveCertified => sample.positive_certified += 1,
                OracleStatus::NonpositiveWitness => sample.nonpositive += 1,
                OracleStatus::Inconclusive => sample.inconclusive += 1,
            }
        }
        corollaries.push(sample);
    }
    SamplingReport {
        seed,
        count_per_corollary: count,
        corollaries,
    }
}

/// Human-oriented rendering of an inequality case row.
pub fn format_case_row(c: &InequalityCase) -> String {
    format!(
        "{:<40} {:<9} {:<5} min ≥ {}",
        c.label,
        c.reading,
        if c.verified { "yes" } else { "NO" },
        c.result
            .min_estimate
            .as_ref()
            .map(format_rational)
            .unwrap_or_else(|| "-".to_string()),
    )
}
