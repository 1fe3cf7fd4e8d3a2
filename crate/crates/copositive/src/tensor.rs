//! Symmetric tensors of order 3 (dimensions 2 and 3), 3x3 symmetric
//! matrices and evaluation points, all over exact rationals.
//!
//! Tensors are stored by their unique entries; the multinomial
//! multiplicities (1 for diagonal entries, 3 for two-distinct-index
//! entries, 6 for the all-distinct entry) are applied during evaluation.

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::Integer;

use crate::rational::{as_i64, format_rational, int, is_unit, to_f64, Rat};
use crate::Error;

/// Point in R^2 or R^3 with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint(Vec<Rat>);

impl EvalPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        EvalPoint(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        EvalPoint(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    fn expect_dim(&self, expected: usize) -> Result<(), Error> {
        if self.0.len() == expected {
            Ok(())
        } else {
            Err(Error::Arity {
                expected,
                got: self.0.len(),
            })
        }
    }
}

impl std::fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Order-3 dimension-2 symmetric tensor stored by its 4 unique entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor2 {
    pub a111: Rat,
    pub a112: Rat,
    pub a122: Rat,
    pub a222: Rat,
}

impl SymTensor2 {
    pub fn new(a111: Rat, a112: Rat, a122: Rat, a222: Rat) -> Self {
        SymTensor2 {
            a111,
            a112,
            a122,
            a222,
        }
    }

    pub fn from_i64(e: [i64; 4]) -> Self {
        SymTensor2::new(int(e[0]), int(e[1]), int(e[2]), int(e[3]))
    }

    /// Builds from the fully expanded 8-entry array; entry `(i, j, k)` with
    /// `i, j, k in {1, 2}` lives at `pos = 4*(i-1) + 2*(j-1) + (k-1)`.
    /// Rejects asymmetric input.
    pub fn from_full(full: &[Rat; 8]) -> Result<Self, Error> {
        let at = |i: usize, j: usize, k: usize| &full[4 * (i - 1) + 2 * (j - 1) + (k - 1)];
        for i in 1..=2usize {
            for j in 1..=2usize {
                for k in 1..=2usize {
                    let mut s = [i, j, k];
                    s.sort_unstable();
                    if at(i, j, k) != at(s[0], s[1], s[2]) {
                        return Err(Error::Document(format!(
                            "asymmetric entries at ({i}{j}{k})"
                        )));
                    }
                }
            }
        }
        Ok(SymTensor2::new(
            at(1, 1, 1).clone(),
            at(1, 1, 2).clone(),
            at(1, 2, 2).clone(),
            at(2, 2, 2).clone(),
        ))
    }

    /// Unique entry at sorted index `(i, j, k)`, indices 1-based.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> Result<&Rat, Error> {
        let mut s = [i, j, k];
        s.sort_unstable();
        match s {
            [1, 1, 1] => Ok(&self.a111),
            [1, 1, 2] => Ok(&self.a112),
            [1, 2, 2] => Ok(&self.a122),
            [2, 2, 2] => Ok(&self.a222),
            _ => Err(Error::InvalidIndex(*s.iter().max().unwrap())),
        }
    }

    /// Entries in canonical order `(a111, a112, a122, a222)`.
    pub fn entries(&self) -> [&Rat; 4] {
        [&self.a111, &self.a112, &self.a122, &self.a222]
    }

    /// The entries as integers in `{-1, 0, 1}`, when they all are.
    pub fn unit_entries(&self) -> Option<[i64; 4]> {
        if self.entries().iter().all(|e| is_unit(e)) {
            Some([
                as_i64(&self.a111)?,
                as_i64(&self.a112)?,
                as_i64(&self.a122)?,
                as_i64(&self.a222)?,
            ])
        } else {
            None
        }
    }

    /// Evaluates `a111 x1^3 + 3 a112 x1^2 x2 + 3 a122 x1 x2^2 + a222 x2^3`.
    pub fn eval(&self, x: &EvalPoint) -> Result<Rat, Error> {
        x.expect_dim(2)?;
        let (x1, x2) = (&x.0[0], &x.0[1]);
        let three = int(3);
        Ok(&self.a111 * x1 * x1 * x1
            + &three * &self.a112 * x1 * x1 * x2
            + &three * &self.a122 * x1 * x2 * x2
            + &self.a222 * x2 * x2 * x2)
    }

    /// Symmetric trilinear (polar) form; `polar(x, x, x) == eval(x)`.
    pub fn polar(&self, u: &[Rat; 2], v: &[Rat; 2], w: &[Rat; 2]) -> Rat {
        let sym = |i: usize, j: usize| &u[i] * &v[i] * &w[j] + &u[i] * &v[j] * &w[i] + &u[j] * &v[i] * &w[i];
        &self.a111 * &u[0] * &v[0] * &w[0]
            + &self.a222 * &u[1] * &v[1] * &w[1]
            + &self.a112 * sym(0, 1)
            + &self.a122 * sym(1, 0)
    }
}

/// 3x3 symmetric matrix stored by its 6 unique entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix3 {
    pub m11: Rat,
    pub m22: Rat,
    pub m33: Rat,
    pub m12: Rat,
    pub m13: Rat,
    pub m23: Rat,
}

impl SymMatrix3 {
    pub fn new(m11: Rat, m22: Rat, m33: Rat, m12: Rat, m13: Rat, m23: Rat) -> Self {
        SymMatrix3 {
            m11,
            m22,
            m33,
            m12,
            m13,
            m23,
        }
    }

    pub fn identity() -> Self {
        SymMatrix3::new(int(1), int(1), int(1), int(0), int(0), int(0))
    }

    /// Evaluates the quadratic form `x^T M x` exactly.
    pub fn eval(&self, x: &EvalPoint) -> Result<Rat, Error> {
        x.expect_dim(3)?;
        let (x1, x2, x3) = (&x.0[0], &x.0[1], &x.0[2]);
        let two = int(2);
        Ok(&self.m11 * x1 * x1
            + &self.m22 * x2 * x2
            + &self.m33 * x3 * x3
            + &two * &self.m12 * x1 * x2
            + &two * &self.m13 * x1 * x3
            + &two * &self.m23 * x2 * x3)
    }
}

/// Order-3 dimension-3 symmetric tensor stored by its 10 unique entries.
///
/// Canonical entry order throughout the crate:
/// `(a111, a222, a333, a112, a122, a113, a133, a223, a233, a123)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor3 {
    pub a111: Rat,
    pub a222: Rat,
    pub a333: Rat,
    pub a112: Rat,
    pub a122: Rat,
    pub a113: Rat,
    pub a133: Rat,
    pub a223: Rat,
    pub a233: Rat,
    pub a123: Rat,
}

impl SymTensor3 {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a111: Rat,
        a222: Rat,
        a333: Rat,
        a112: Rat,
        a122: Rat,
        a113: Rat,
        a133: Rat,
        a223: Rat,
        a233: Rat,
        a123: Rat,
    ) -> Self {
        SymTensor3 {
            a111,
            a222,
            a333,
            a112,
            a122,
            a113,
            a133,
            a223,
            a233,
            a123,
        }
    }

    /// From entries in canonical order.
    pub fn from_entries(e: [Rat; 10]) -> Self {
        let [a111, a222, a333, a112, a122, a113, a133, a223, a233, a123] = e;
        SymTensor3::new(a111, a222, a333, a112, a122, a113, a133, a223, a233, a123)
    }

    pub fn from_i64(e: [i64; 10]) -> Self {
        SymTensor3::from_entries(e.map(int))
    }

    /// Builds from the fully expanded 27-entry array; entry `(i, j, k)`
    /// with `i, j, k in {1, 2, 3}` lives at
    /// `pos = 9*(i-1) + 3*(j-1) + (k-1)`. Rejects asymmetric input.
    pub fn from_full(full: &[Rat; 27]) -> Result<Self, Error> {
        let at = |i: usize, j: usize, k: usize| &full[9 * (i - 1) + 3 * (j - 1) + (k - 1)];
        for i in 1..=3usize {
            for j in 1..=3usize {
                for k in 1..=3usize {
                    let mut s = [i, j, k];
                    s.sort_unstable();
                    if at(i, j, k) != at(s[0], s[1], s[2]) {
                        return Err(Error::Document(format!(
                            "asymmetric entries at ({i}{j}{k})"
                        )));
                    }
                }
            }
        }
        Ok(SymTensor3::new(
            at(1, 1, 1).clone(),
            at(2, 2, 2).clone(),
            at(3, 3, 3).clone(),
            at(1, 1, 2).clone(),
            at(1, 2, 2).clone(),
            at(1, 1, 3).clone(),
            at(1, 3, 3).clone(),
            at(2, 2, 3).clone(),
            at(2, 3, 3).clone(),
            at(1, 2, 3).clone(),
        ))
    }

    /// Unique entry at index `(i, j, k)` in any order, indices 1-based.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> Result<&Rat, Error> {
        let mut s = [i, j, k];
        s.sort_unstable();
        match s {
            [1, 1, 1] => Ok(&self.a111),
            [2, 2, 2] => Ok(&self.a222),
            [3, 3, 3] => Ok(&self.a333),
            [1, 1, 2] => Ok(&self.a112),
            [1, 2, 2] => Ok(&self.a122),
            [1, 1, 3] => Ok(&self.a113),
            [1, 3, 3] => Ok(&self.a133),
            [2, 2, 3] => Ok(&self.a223),
            [2, 3, 3] => Ok(&self.a233),
            [1, 2, 3] => Ok(&self.a123),
            _ => Err(Error::InvalidIndex(*s.iter().max().unwrap())),
        }
    }

    /// Entries in canonical order.
    pub fn entries(&self) -> [&Rat; 10] {
        [
            &self.a111, &self.a222, &self.a333, &self.a112, &self.a122, &self.a113, &self.a133,
            &self.a223, &self.a233, &self.a123,
        ]
    }

    pub fn diagonal(&self) -> [&Rat; 3] {
        [&self.a111, &self.a222, &self.a333]
    }

    /// The entries as integers in `{-1, 0, 1}`, when they all are.
    pub fn unit_entries(&self) -> Option<[i64; 10]> {
        if !self.entries().iter().all(|e| is_unit(e)) {
            return None;
        }
        let mut out = [0i64; 10];
        for (slot, e) in out.iter_mut().zip(self.entries()) {
            *slot = as_i64(e)?;
        }
        Some(out)
    }

    /// Entries scaled by the least common denominator, when the scaled
    /// values fit in `i64`. Returns `(scaled entries, common denominator)`;
    /// the scaled tensor is `denominator` times this one.
    pub fn scaled_integer_entries(&self) -> Option<([i64; 10], BigInt)> {
        let mut lcm = BigInt::one();
        for e in self.entries() {
            lcm = lcm.lcm(e.denom());
        }
        let mut out = [0i64; 10];
        for (slot, e) in out.iter_mut().zip(self.entries()) {
            let scaled = e.numer() * (&lcm / e.denom());
            *slot = scaled.to_i64()?;
        }
        Some((out, lcm))
    }

    /// Evaluates the ternary cubic form with multiplicities 3 and 6.
    pub fn eval(&self, x: &EvalPoint) -> Result<Rat, Error> {
        x.expect_dim(3)?;
        let (x1, x2, x3) = (&x.0[0], &x.0[1], &x.0[2]);
        let three = int(3);
        let six = int(6);
        Ok(&self.a111 * x1 * x1 * x1
            + &self.a222 * x2 * x2 * x2
            + &self.a333 * x3 * x3 * x3
            + &three * &self.a112 * x1 * x1 * x2
            + &three * &self.a122 * x1 * x2 * x2
            + &three * &self.a113 * x1 * x1 * x3
            + &three * &self.a133 * x1 * x3 * x3
            + &three * &self.a223 * x2 * x2 * x3
            + &three * &self.a233 * x2 * x3 * x3
            + &six * &self.a123 * x1 * x2 * x3)
    }

    /// Symmetric trilinear (polar) form; `polar(x, x, x) == eval(x)`.
    pub fn polar(&self, u: &[Rat; 3], v: &[Rat; 3], w: &[Rat; 3]) -> Rat {
        let sym = |i: usize, j: usize| {
            &u[i] * &v[i] * &w[j] + &u[i] * &v[j] * &w[i] + &u[j] * &v[i] * &w[i]
        };
        let mixed = &u[0] * &v[1] * &w[2]
            + &u[0] * &v[2] * &w[1]
            + &u[1] * &v[0] * &w[2]
            + &u[1] * &v[2] * &w[0]
            + &u[2] * &v[0] * &w[1]
            + &u[2] * &v[1] * &w[0];
        &self.a111 * &u[0] * &v[0] * &w[0]
            + &self.a222 * &u[1] * &v[1] * &w[1]
            + &self.a333 * &u[2] * &v[2] * &w[2]
            + &self.a112 * sym(0, 1)
            + &self.a122 * sym(1, 0)
            + &self.a113 * sym(0, 2)
            + &self.a133 * sym(2, 0)
            + &self.a223 * sym(1, 2)
            + &self.a233 * sym(2, 1)
            + &self.a123 * mixed
    }

    /// Splits the form as `A x^3 = x1 (x^T M x) + A' (x2, x3)^3`.
    ///
    /// `M` carries the terms containing `x1`; `A'` is the principal face
    /// on coordinates 2 and 3. The identity holds for every `x`.
    pub fn decompose(&self) -> Decomposition {
        let three = int(3);
        let three_halves = Rat::new(BigInt::from(3), BigInt::from(2));
        Decomposition {
            matrix: SymMatrix3::new(
                self.a111.clone(),
                &three * &self.a122,
                &three * &self.a133,
                &three_halves * &self.a112,
                &three_halves * &self.a113,
                &three * &self.a123,
            ),
            face: SymTensor2::new(
                self.a222.clone(),
                self.a223.clone(),
                self.a233.clone(),
                self.a333.clone(),
            ),
        }
    }

    /// Principal sub-tensor obtained by deleting coordinate `drop` (1-based).
    pub fn principal_face(&self, drop: usize) -> Result<SymTensor2, Error> {
        let keep: [usize; 2] = match drop {
            1 => [2, 3],
            2 => [1, 3],
            3 => [1, 2],
            _ => return Err(Error::InvalidIndex(drop)),
        };
        let (p, q) = (keep[0], keep[1]);
        Ok(SymTensor2::new(
            self.entry(p, p, p)?.clone(),
            self.entry(p, p, q)?.clone(),
            self.entry(p, q, q)?.clone(),
            self.entry(q, q, q)?.clone(),
        ))
    }

    /// Cube-root normalization: substitutes `y_i = a_iii^{1/3} x_i` so the
    /// diagonal becomes 1 and returns the rescaled off-diagonal
    /// coefficients. Requires a positive diagonal.
    pub fn normalize(&self) -> Result<NormalizedTensor, Error> {
        for (i, d) in self.diagonal().iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::Domain(format!(
                    "normalization requires a positive diagonal; a{0}{0}{0} = {1}",
                    i + 1,
                    format_rational(d)
                )));
            }
        }
        let s1 = to_f64(&self.a111).cbrt();
        let s2 = to_f64(&self.a222).cbrt();
        let s3 = to_f64(&self.a333).cbrt();
        Ok(NormalizedTensor {
            b112: to_f64(&self.a112) / (s1 * s1 * s2),
            b122: to_f64(&self.a122) / (s1 * s2 * s2),
            b113: to_f64(&self.a113) / (s1 * s1 * s3),
            b133: to_f64(&self.a133) / (s1 * s3 * s3),
            b223: to_f64(&self.a223) / (s2 * s2 * s3),
            b233: to_f64(&self.a233) / (s2 * s3 * s3),
            b123: to_f64(&self.a123) / (s1 * s2 * s3),
            s1,
            s2,
            s3,
        })
    }

    /// Relabels coordinates: new coordinate `i` takes the role of old
    /// coordinate `perm[i-1]`.
    pub fn permute(&self, perm: [usize; 3]) -> SymTensor3 {
        let e = |i: usize, j: usize, k: usize| {
            self.entry(perm[i - 1], perm[j - 1], perm[k - 1])
                .expect("permutation over 1..=3")
                .clone()
        };
        SymTensor3::new(
            e(1, 1, 1),
            e(2, 2, 2),
            e(3, 3, 3),
            e(1, 1, 2),
            e(1, 2, 2),
            e(1, 1, 3),
            e(1, 3, 3),
            e(2, 2, 3),
            e(2, 3, 3),
            e(1, 2, 3),
        )
    }
}

/// Result of [`SymTensor3::decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub matrix: SymMatrix3,
    pub face: SymTensor2,
}

/// Cube-root normalized coefficients and the scale factors applied.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizedTensor {
    pub b112: f64,
    pub b122: f64,
    pub b113: f64,
    pub b133: f64,
    pub b223: f64,
    pub b233: f64,
    pub b123: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl NormalizedTensor {
    /// Normalized entry at index `(i, j, k)` in any order; diagonal
    /// entries are exactly 1 by construction.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> f64 {
        let mut s = [i, j, k];
        s.sort_unstable();
        match s {
            [1, 1, 1] | [2, 2, 2] | [3, 3, 3] => 1.0,
            [1, 1, 2] => self.b112,
            [1, 2, 2] => self.b122,
            [1, 1, 3] => self.b113,
            [1, 3, 3] => self.b133,
            [2, 2, 3] => self.b223,
            [2, 3, 3] => self.b233,
            [1, 2, 3] => self.b123,
            _ => panic!("index out of range"),
        }
    }
}
