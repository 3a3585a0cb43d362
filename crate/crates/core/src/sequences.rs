//! A-, Z- and B-sequences.
//!
//! The A-sequence satisfies `f = t·A(f)` and the Z-sequence `g = 1/(1 − t·Z(f))`.
//! A type-I B-sequence drives every entry off the first column,
//! `d_{n+1,k} = d_{n,k−1} + Σ_j b_j d_{n−j,k+j}` for k ≥ 1; a type-II one drives
//! the first column, `d_{n+1,0} = Σ_j b̂_j d_{n−j,j}`.
//!
//! Existence is decided on truncated data. A negative verdict names the
//! coefficient (or triangle entry) where a defining constraint fails and is
//! final. A positive verdict only says the data are consistent through the
//! reported order.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::compositions::composition_sum;
use crate::rational::{self, Rational};
use crate::riordan::{RiordanError, RiordanPair, Triangle};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("not Riordan to depth {n}: entry ({n},{k}) violates the A-sequence recurrence")]
    NotRiordan { n: usize, k: usize },
    #[error("triangle needs at least {needed} rows, has {found}")]
    TooFewRows { needed: usize, found: usize },
    #[error("diagonal entry d({n},{n}) is zero")]
    ZeroDiagonal { n: usize },
    #[error("A(0) must be nonzero")]
    ZeroLeadingA,
    #[error("input known only through t^{available}, need t^{needed}")]
    TooShort { needed: usize, available: usize },
    #[error("independent {kind} computations disagree at coefficient {index}")]
    MethodsDisagree { kind: BSeqKind, index: usize },
}

/// A- and Z-sequences read off a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeqReport {
    pub a_seq: Series,
    pub z_seq: Series,
    /// Deepest row checked against the recurrences.
    pub certified_to: usize,
}

/// `A = t/f̄`.
pub fn a_sequence(p: &RiordanPair) -> Result<Series, SeqError> {
    let f_bar = p.f().comp_inverse()?;
    Ok(f_bar.shift(-1)?.reciprocal()?)
}

/// `Z = (g(f̄) − 1) / (f̄·g(f̄))`. Needs `g(0) = 1`.
pub fn z_sequence(p: &RiordanPair) -> Result<Series, SeqError> {
    if !p.is_normalized() {
        return Err(RiordanError::RequiresNormalized("Z-sequence").into());
    }
    let f_bar = p.f().comp_inverse()?;
    let g_of_f_bar = p.g().compose(&f_bar)?;
    let numerator = (&g_of_f_bar - &Series::one(g_of_f_bar.valid_to())).shift(-1)?;
    let denominator = &f_bar.shift(-1)? * &g_of_f_bar;
    Ok(numerator.div(&denominator)?)
}

/// Solves the A- and Z-recurrences row by row and checks every stored entry.
///
/// Row n+1, column 1 determines `a_n` (pivot `d_{n,n}`) and row n+1, column 0
/// determines `z_n`; all other entries in columns ≥ 2 are then checked.
pub fn a_z_from_triangle(t: &Triangle) -> Result<CharSeqReport, SeqError> {
    let rows = t.n_rows();
    if rows < 3 {
        return Err(SeqError::TooFewRows {
            needed: 3,
            found: rows,
        });
    }
    if let Some(n) = (0..rows).find(|&n| t.row(n)[n].is_zero()) {
        return Err(SeqError::ZeroDiagonal { n });
    }
    let mut a: Vec<Rational> = Vec::with_capacity(rows - 1);
    let mut z: Vec<Rational> = Vec::with_capacity(rows - 1);
    for n in 0..rows - 1 {
        let prev = t.row(n);
        let next = t.row(n + 1);
        let pivot = &prev[n];

        let mut acc = next[1].clone();
        for (j, aj) in a.iter().enumerate() {
            acc -= aj * &prev[j];
        }
        a.push(acc / pivot);

        let mut acc = next[0].clone();
        for (j, zj) in z.iter().enumerate() {
            acc -= zj * &prev[j];
        }
        z.push(acc / pivot);

        for k in 1..=n {
            let mut expected = Rational::zero();
            for (j, aj) in a.iter().enumerate().take(n - k + 1) {
                expected += aj * &prev[k + j];
            }
            if expected != next[k + 1] {
                return Err(SeqError::NotRiordan { n: n + 1, k: k + 1 });
            }
        }
    }
    Ok(CharSeqReport {
        a_seq: Series::from_coeffs(a),
        z_seq: Series::from_coeffs(z),
        certified_to: rows - 1,
    })
}

/// Rebuilds `(g, f)` from `f = t·A(f)` and `g = 1/(1 − t·Z(f))`.
///
/// `f` is the compositional inverse of `t/A(t)`. With A known through t^M and
/// Z through t^K, the pair is known through `min(M, K) + 1`.
pub fn pair_from_a_z(a: &Series, z: &Series) -> Result<RiordanPair, SeqError> {
    if a.coeff(0).is_zero() {
        return Err(SeqError::ZeroLeadingA);
    }
    let f = a.reciprocal()?.shift(1)?.comp_inverse()?;
    let tz = z.compose(&f)?.shift(1)?;
    let g = (&Series::one(tz.valid_to()) - &tz).reciprocal()?;
    let order = f.valid_to().min(g.valid_to());
    Ok(RiordanPair::new(g.truncate(order), f.truncate(order))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BSeqKind {
    TypeI,
    TypeII,
}

impl fmt::Display for BSeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BSeqKind::TypeI => "type-I",
            BSeqKind::TypeII => "type-II",
        })
    }
}

/// Where a defining constraint fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Coefficient index of the input series.
    Coefficient(usize),
    /// Triangle entry `(n, k)`.
    Entry { n: usize, k: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Coefficient(j) => write!(f, "index {j}"),
            Witness::Entry { n, k } => write!(f, "({n},{k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BSeqOutcome {
    /// Consistent through `order`; `b` holds every coefficient the data determine.
    Exists {
        order: usize,
        b: Series,
    },
    No {
        at: Witness,
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSeqVerdict {
    pub kind: BSeqKind,
    pub outcome: BSeqOutcome,
}

impl BSeqVerdict {
    fn exists(kind: BSeqKind, order: usize, b: Vec<Rational>) -> Self {
        BSeqVerdict {
            kind,
            outcome: BSeqOutcome::Exists {
                order,
                b: Series::from_coeffs(b),
            },
        }
    }

    fn no(kind: BSeqKind, at: Witness, reason: String) -> Self {
        BSeqVerdict {
            kind,
            outcome: BSeqOutcome::No { at, reason },
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.outcome, BSeqOutcome::Exists { .. })
    }

    pub fn b_seq(&self) -> Option<&Series> {
        match &self.outcome {
            BSeqOutcome::Exists { b, .. } => Some(b),
            BSeqOutcome::No { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            BSeqOutcome::Exists { .. } => None,
            BSeqOutcome::No { at, .. } => Some(at),
        }
    }

    /// Witness coefficient index for a negative verdict from a series route.
    pub fn witness_index(&self) -> Option<usize> {
        match self.witness() {
            Some(Witness::Coefficient(j)) => Some(*j),
            _ => None,
        }
    }
}

impl fmt::Display for BSeqVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            BSeqOutcome::Exists { order, .. } => write!(f, "EXISTS to order {order}"),
            BSeqOutcome::No { at, .. } => write!(f, "NO at {at}"),
        }
    }
}

fn require_len(s: &Series, needed: usize) -> Result<(), SeqError> {
    if s.valid_to() < needed {
        return Err(SeqError::TooShort {
            needed,
            available: s.valid_to(),
        });
    }
    Ok(())
}

/// Unknowns `x_j` of `target = X(inner)` where `inner` has order exactly 2:
/// `x_j` first enters the coefficient of `t^{2j}` with pivot `inner_2^j`, so even
/// coefficients solve and odd coefficients check. `target[m]` is matched against
/// `[t^m] X(inner)` for `m = 0..=last`.
///
/// Returns the solved prefix or the first odd `m` that fails.
fn solve_order_two_composition(
    target: impl Fn(usize) -> Rational,
    inner: &Series,
    last: usize,
) -> Result<Vec<Rational>, usize> {
    let inner = inner.truncate(last);
    let pivot = inner.coeff(2).clone();
    let mut acc = Series::zero(last);
    let mut power = Series::one(last);
    let mut pivot_power = Rational::one();
    let mut x: Vec<Rational> = Vec::new();
    for m in 0..=last {
        if m % 2 == 0 {
            let xj = (target(m) - acc.coeff(m)) / &pivot_power;
            acc = &acc + &power.scale(&xj);
            x.push(xj);
            power = &power * &inner;
            pivot_power *= &pivot;
        } else if target(m) != *acc.coeff(m) {
            return Err(m);
        }
    }
    Ok(x)
}

/// Type-I B-sequence by solving `A(t) = 1 + t·B(t²/A(t))` coefficient by coefficient.
pub fn type1_b_functional(a: &Series) -> Result<BSeqVerdict, SeqError> {
    require_len(a, 1)?;
    let kind = BSeqKind::TypeI;
    if !a.coeff(0).is_one() {
        return Ok(BSeqVerdict::no(
            kind,
            Witness::Coefficient(0),
            format!("a_0 = {} ≠ 1", a.coeff(0)),
        ));
    }
    let m = a.valid_to();
    // u = t²/A is known through t^{m+2}; only t^0..t^{m-1} of B(u) are needed.
    let u = a.reciprocal()?.shift(2)?;
    match solve_order_two_composition(|j| a.coeff(j + 1).clone(), &u, m - 1) {
        Ok(b) => Ok(BSeqVerdict::exists(kind, m, b)),
        Err(j) => Ok(BSeqVerdict::no(
            kind,
            Witness::Coefficient(j + 1),
            even_a_reason(j + 1),
        )),
    }
}

fn even_a_reason(index: usize) -> String {
    if index == 2 {
        "a_2 ≠ 0".to_string()
    } else {
        format!("a_{index} violates the even-index constraint")
    }
}

/// Type-I B-sequence from the A-sequence via composition sums.
///
/// With `c = 1/A` and `c̃_j = c_{j−2}` (`c̃_0 = c̃_1 = 0`):
/// `b_ℓ = a_{2ℓ+1} − Σ_{D_{2ℓ,ℓ−1}} b_k c̃_{i_1}⋯c̃_{i_k}`, and the even
/// coefficients must satisfy `a_2 = 0`, `a_{2ℓ} = Σ_{D_{2ℓ−1,ℓ−1}} b_k c̃_{i_1}⋯c̃_{i_k}`.
pub fn type1_b_from_a(a: &Series) -> Result<BSeqVerdict, SeqError> {
    require_len(a, 1)?;
    let kind = BSeqKind::TypeI;
    if !a.coeff(0).is_one() {
        return Ok(BSeqVerdict::no(
            kind,
            Witness::Coefficient(0),
            format!("a_0 = {} ≠ 1", a.coeff(0)),
        ));
    }
    let m = a.valid_to();
    let c = a.reciprocal()?;
    let c_tilde: Vec<Rational> = (0..=m)
        .map(|j| {
            if j < 2 {
                Rational::zero()
            } else {
                c.coeff(j - 2).clone()
            }
        })
        .collect();
    let mut b: Vec<Rational> = Vec::new();
    for n in 1..=m {
        if n % 2 == 1 {
            let ell = (n - 1) / 2;
            let weight = |k: usize| b[k].clone();
            let sum = if ell == 0 {
                Rational::zero()
            } else {
                composition_sum(2 * ell, ell - 1, &weight, &c_tilde)
            };
            let next = a.coeff(n) - sum;
            b.push(next);
        } else {
            let ell = n / 2;
            let weight = |k: usize| b[k].clone();
            let expected = if ell == 1 {
                Rational::zero()
            } else {
                composition_sum(2 * ell - 1, ell - 1, &weight, &c_tilde)
            };
            if *a.coeff(n) != expected {
                return Ok(BSeqVerdict::no(
                    kind,
                    Witness::Coefficient(n),
                    even_a_reason(n),
                ));
            }
        }
    }
    Ok(BSeqVerdict::exists(kind, m, b))
}

/// Type-I B-sequence straight from `f` via `f = t + t·f·B(t·f)`.
///
/// With `f̃_j = f_{j−1}` and `b̃_j = b_{j−1}` (`b̃_0 = 0`):
/// `b_{ℓ−1} = f_{2ℓ} − Σ_{D_{2ℓ,ℓ−1}} b̃_k f̃_{i_1}⋯f̃_{i_k}`, subject to `f_1 = 1`
/// and `f_{2ℓ+1} = Σ_{D_{2ℓ+1,ℓ}} b̃_k f̃_{i_1}⋯f̃_{i_k}` (so `f_3 = f_2²`).
pub fn type1_b_from_f(f: &Series) -> Result<BSeqVerdict, SeqError> {
    require_len(f, 2)?;
    let kind = BSeqKind::TypeI;
    if !f.coeff(0).is_zero() {
        return Err(RiordanError::NotProper("f(0) must be zero").into());
    }
    if !f.coeff(1).is_one() {
        return Ok(BSeqVerdict::no(
            kind,
            Witness::Coefficient(1),
            format!("f_1 = {} ≠ 1", f.coeff(1)),
        ));
    }
    let top = f.valid_to();
    let f_tilde: Vec<Rational> = (0..=top)
        .map(|j| {
            if j == 0 {
                Rational::zero()
            } else {
                f.coeff(j - 1).clone()
            }
        })
        .collect();
    let mut b: Vec<Rational> = Vec::new();
    for n in 2..=top {
        let weight = |k: usize| {
            if k == 0 {
                Rational::zero()
            } else {
                b[k - 1].clone()
            }
        };
        if n % 2 == 0 {
            let ell = n / 2;
            let sum = if ell == 1 {
                Rational::zero()
            } else {
                composition_sum(n, ell - 1, &weight, &f_tilde)
            };
            let next = f.coeff(n) - sum;
            b.push(next);
        } else {
            let ell = (n - 1) / 2;
            let expected = composition_sum(n, ell, &weight, &f_tilde);
            if *f.coeff(n) != expected {
                let reason = if n == 3 {
                    "f_3 ≠ f_2²".to_string()
                } else {
                    format!("f_{n} violates the odd-index constraint")
                };
                return Ok(BSeqVerdict::no(kind, Witness::Coefficient(n), reason));
            }
        }
    }
    Ok(BSeqVerdict::exists(kind, top, b))
}

/// Type-II B-sequence by solving `Z(t) = B̂(t·f̄(t))` coefficient by coefficient.
pub fn type2_b_functional(z: &Series, f_bar: &Series) -> Result<BSeqVerdict, SeqError> {
    let kind = BSeqKind::TypeII;
    let last = z.valid_to();
    require_len(f_bar, last.saturating_sub(1).max(1))?;
    let v = f_bar.shift(1)?;
    match solve_order_two_composition(|j| z.coeff(j).clone(), &v, last) {
        Ok(b) => Ok(BSeqVerdict::exists(kind, last, b)),
        Err(j) => Ok(BSeqVerdict::no(
            kind,
            Witness::Coefficient(j),
            odd_z_reason(j),
        )),
    }
}

fn odd_z_reason(index: usize) -> String {
    if index == 1 {
        "z_1 ≠ 0".to_string()
    } else {
        format!("z_{index} violates the odd-index constraint")
    }
}

/// Type-II B-sequence from explicit composition sums:
/// `b̂_0 = z_0`, `z_1 = 0`, `b̂_ℓ = f_1^ℓ (z_{2ℓ} − Σ_{D_{2ℓ,ℓ−1}} b̂_k f̄_{i_1−1}⋯f̄_{i_k−1})`
/// and `z_{2ℓ+1} = Σ_{D_{2ℓ+1,ℓ}} b̂_k f̄_{i_1−1}⋯f̄_{i_k−1}`.
pub fn type2_b_from_z_sums(z: &Series, f_bar: &Series) -> Result<BSeqVerdict, SeqError> {
    let kind = BSeqKind::TypeII;
    let last = z.valid_to();
    require_len(f_bar, last.saturating_sub(1).max(1))?;
    let f1 = f_bar.coeff(1).recip();
    let shifted: Vec<Rational> = (0..=last)
        .map(|i| {
            if i == 0 {
                Rational::zero()
            } else {
                f_bar.coeff(i - 1).clone()
            }
        })
        .collect();
    let mut b: Vec<Rational> = vec![z.coeff(0).clone()];
    for n in 1..=last {
        let weight = |k: usize| b[k].clone();
        if n % 2 == 0 {
            let ell = n / 2;
            let sum = if ell == 1 {
                Rational::zero()
            } else {
                composition_sum(n, ell - 1, &weight, &shifted)
            };
            let next = rational::pow(&f1, ell) * (z.coeff(n) - sum);
            b.push(next);
        } else {
            let ell = (n - 1) / 2;
            let expected = if ell == 0 {
                Rational::zero()
            } else {
                composition_sum(n, ell, &weight, &shifted)
            };
            if *z.coeff(n) != expected {
                return Ok(BSeqVerdict::no(
                    kind,
                    Witness::Coefficient(n),
                    odd_z_reason(n),
                ));
            }
        }
    }
    Ok(BSeqVerdict::exists(kind, last, b))
}

/// Type-II B-sequence of a normalized pair. Solves `Z = B̂(t·f̄)` directly and
/// cross-checks the result against the explicit composition-sum formulas.
pub fn type2_b(p: &RiordanPair) -> Result<BSeqVerdict, SeqError> {
    if !p.is_normalized() {
        return Err(RiordanError::RequiresNormalized("type-II B-sequence").into());
    }
    let z = z_sequence(p)?;
    let f_bar = p.f().comp_inverse()?;
    let solved = type2_b_functional(&z, &f_bar)?;
    let summed = type2_b_from_z_sums(&z, &f_bar)?;
    if let Some(index) = verdict_mismatch(&solved, &summed) {
        return Err(SeqError::MethodsDisagree {
            kind: BSeqKind::TypeII,
            index,
        });
    }
    Ok(solved)
}

/// First coefficient index where two series-route verdicts differ, if any.
pub fn verdict_mismatch(x: &BSeqVerdict, y: &BSeqVerdict) -> Option<usize> {
    match (&x.outcome, &y.outcome) {
        (BSeqOutcome::Exists { b: bx, .. }, BSeqOutcome::Exists { b: by, .. }) => {
            if bx.valid_to() != by.valid_to() {
                return Some(bx.valid_to().min(by.valid_to()) + 1);
            }
            bx.first_difference(by)
        }
        (BSeqOutcome::No { at: ax, .. }, BSeqOutcome::No { at: ay, .. }) => match (ax, ay) {
            (Witness::Coefficient(i), Witness::Coefficient(j)) if i == j => None,
            (Witness::Coefficient(i), Witness::Coefficient(j)) => Some(*i.min(j)),
            _ => Some(0),
        },
        (BSeqOutcome::No { at, .. }, _) | (_, BSeqOutcome::No { at, .. }) => match at {
            Witness::Coefficient(j) => Some(*j),
            Witness::Entry { n, .. } => Some(*n),
        },
    }
}

/// Outcome of checking a B-recurrence entry by entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceCheck {
    /// Every row through `depth` satisfies the recurrence.
    Verified {
        depth: usize,
    },
    Failed {
        n: usize,
        k: usize,
    },
}

/// Checks `d_{n+1,k} = d_{n,k−1} + Σ_j b_j d_{n−j,k+j}` (k ≥ 1, type I) or
/// `d_{n+1,0} = Σ_j b̂_j d_{n−j,j}` (type II) on the stored rows.
///
/// Stops at the first row whose check would need a coefficient `b` does not
/// supply; `depth` is the last row fully checked.
pub fn verify_b_recurrence(t: &Triangle, b: &Series, kind: BSeqKind) -> RecurrenceCheck {
    let rows = t.n_rows();
    let mut depth = 0;
    for n in 0..rows.saturating_sub(1) {
        let needed = match kind {
            BSeqKind::TypeI => n.saturating_sub(1) / 2,
            BSeqKind::TypeII => n / 2,
        };
        if needed > b.valid_to() {
            break;
        }
        match kind {
            BSeqKind::TypeI => {
                for k in 1..=n + 1 {
                    let mut rhs = t.entry(n, k - 1);
                    let mut j = 0;
                    while k + 2 * j <= n {
                        rhs += b.coeff(j) * &t.row(n - j)[k + j];
                        j += 1;
                    }
                    if rhs != t.row(n + 1)[k] {
                        return RecurrenceCheck::Failed { n: n + 1, k };
                    }
                }
            }
            BSeqKind::TypeII => {
                let mut rhs = Rational::zero();
                for j in 0..=n / 2 {
                    rhs += b.coeff(j) * &t.row(n - j)[j];
                }
                if rhs != t.row(n + 1)[0] {
                    return RecurrenceCheck::Failed { n: n + 1, k: 0 };
                }
            }
        }
        depth = n + 1;
    }
    RecurrenceCheck::Verified { depth }
}

/// Solves for a B-sequence directly from triangle entries, with no generating
/// functions involved.
///
/// Type I: `b_j` first appears in row 2j+2, column 1, with pivot `d_{j+1,j+1}`.
/// Type II: `b̂_j` first appears in row 2j+1, column 0, with pivot `d_{j,j}`.
/// Every other entry is a consistency check; the verdict's order is the last
/// row checked.
pub fn b_from_triangle(t: &Triangle, kind: BSeqKind) -> Result<BSeqVerdict, SeqError> {
    let rows = t.n_rows();
    if rows < 2 {
        return Err(SeqError::TooFewRows {
            needed: 2,
            found: rows,
        });
    }
    let mut b: Vec<Rational> = Vec::new();
    for n in 0..rows - 1 {
        let next = t.row(n + 1);
        match kind {
            BSeqKind::TypeI => {
                if n % 2 == 1 {
                    let j = (n - 1) / 2;
                    let pivot = &t.row(j + 1)[j + 1];
                    if pivot.is_zero() {
                        return Err(SeqError::ZeroDiagonal { n: j + 1 });
                    }
                    let mut acc = &next[1] - &t.row(n)[0];
                    for (i, bi) in b.iter().enumerate() {
                        acc -= bi * &t.row(n - i)[1 + i];
                    }
                    b.push(acc / pivot);
                }
                for k in 1..=n + 1 {
                    let mut rhs = t.entry(n, k - 1);
                    for (j, bj) in b.iter().enumerate() {
                        if k + 2 * j > n {
                            break;
                        }
                        rhs += bj * &t.row(n - j)[k + j];
                    }
                    if rhs != next[k] {
                        return Ok(BSeqVerdict::no(
                            kind,
                            Witness::Entry { n: n + 1, k },
                            format!("d({},{}) breaks the type-I recurrence", n + 1, k),
                        ));
                    }
                }
            }
            BSeqKind::TypeII => {
                if n % 2 == 0 {
                    let j = n / 2;
                    let pivot = &t.row(j)[j];
                    if pivot.is_zero() {
                        return Err(SeqError::ZeroDiagonal { n: j });
                    }
                    let mut acc = next[0].clone();
                    for (i, bi) in b.iter().enumerate() {
                        acc -= bi * &t.row(n - i)[i];
                    }
                    b.push(acc / pivot);
                } else {
                    let mut rhs = Rational::zero();
                    for (j, bj) in b.iter().enumerate().take(n / 2 + 1) {
                        rhs += bj * &t.row(n - j)[j];
                    }
                    if rhs != next[0] {
                        return Ok(BSeqVerdict::no(
                            kind,
                            Witness::Entry { n: n + 1, k: 0 },
                            format!("d({},0) breaks the type-II recurrence", n + 1),
                        ));
                    }
                }
            }
        }
    }
    if b.is_empty() {
        return Err(SeqError::TooFewRows {
            needed: 3,
            found: rows,
        });
    }
    Ok(BSeqVerdict::exists(kind, rows - 1, b))
}

/// Whether the Bell-subgroup biconditional holds for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BellStatus {
    Consistent,
    /// One verdict is negative only at a depth the other did not reach.
    Inconclusive,
    Contradiction(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellReport {
    pub is_bell: bool,
    /// First index where `f ≠ t·g`, for non-Bell pairs.
    pub bell_witness: Option<usize>,
    pub type1: BSeqVerdict,
    pub type2: BSeqVerdict,
    pub status: BellStatus,
}

/// Checks that a pair is Bell (`f = t·g`) exactly when its two B-sequences
/// either coincide or both fail to exist.
pub fn bell_b_equivalence(p: &RiordanPair) -> Result<BellReport, SeqError> {
    if !p.is_normalized() {
        return Err(RiordanError::RequiresNormalized("Bell B-sequence check").into());
    }
    let order = p.order();
    let tg = p.g().shift(1)?.truncate(order);
    let bell_witness = p.f().truncate(order).first_difference(&tg);
    let is_bell = bell_witness.is_none();
    let type1 = type1_b_from_f(p.f())?;
    let type2 = type2_b(p)?;

    // Rows of the triangle each verdict speaks for: f_j governs row j,
    // z_j governs row j+1.
    let row_of = |v: &BSeqVerdict| match &v.outcome {
        BSeqOutcome::Exists { order, .. } => match v.kind {
            BSeqKind::TypeI => *order,
            BSeqKind::TypeII => order + 1,
        },
        BSeqOutcome::No { at, .. } => match (v.kind, at) {
            (BSeqKind::TypeI, Witness::Coefficient(j)) => *j,
            (BSeqKind::TypeII, Witness::Coefficient(j)) => j + 1,
            (_, Witness::Entry { n, .. }) => *n,
        },
    };

    let status = match (type1.b_seq(), type2.b_seq()) {
        (Some(b1), Some(b2)) => {
            let same = b1.agrees_with(b2);
            match (is_bell, same) {
                (true, true) | (false, false) => BellStatus::Consistent,
                (true, false) => BellStatus::Contradiction(format!(
                    "Bell pair with different B-sequences (first difference at {})",
                    b1.first_difference(b2).unwrap_or(0)
                )),
                (false, true) => BellStatus::Contradiction(
                    "non-Bell pair with identical type-I and type-II B-sequences".to_string(),
                ),
            }
        }
        (None, None) => BellStatus::Consistent,
        _ if !is_bell => BellStatus::Consistent,
        _ => {
            let (yes, no) = if type1.is_positive() {
                (&type1, &type2)
            } else {
                (&type2, &type1)
            };
            if row_of(no) < row_of(yes) {
                BellStatus::Contradiction(format!(
                    "Bell pair: {} exists through row {} but {} fails at row {}",
                    yes.kind,
                    row_of(yes),
                    no.kind,
                    row_of(no)
                ))
            } else {
                BellStatus::Inconclusive
            }
        }
    };
    Ok(BellReport {
        is_bell,
        bell_witness,
        type1,
        type2,
        status,
    })
}
