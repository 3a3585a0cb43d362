//! Pascal-like Riordan matrices: symmetric rows with unit ends.
//!
//! In such a matrix column 1 equals the sub-diagonal, `p_{n,1} = p_{n,n−1} = 1 + (n−1)·a1`,
//! which fixes the A-sequence from `a1` alone:
//! `a_k = (k−1)·a1·(1−a1) − Σ_{i=2}^{k−1} a_i·p_{k,i}` for k ≥ 2.
//! In particular `a2 = a1(1 − a1)` divides every later `a_k` when the entries are integers.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{self, Rational};
use crate::riordan::{RiordanPair, Triangle};
use crate::sequences::{self, BSeqVerdict, SeqError};
use crate::series::Series;

/// Outcome of the shape check on a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PascalShape {
    PascalLike,
    /// Entry `(n, k)` breaks symmetry or the unit ends.
    Broken {
        n: usize,
        k: usize,
    },
}

/// Checks `p_{n,k} = p_{n,n−k}` and `p_{n,0} = p_{n,n} = 1` on every stored row.
pub fn pascal_shape(t: &Triangle) -> PascalShape {
    for (n, row) in t.rows().iter().enumerate() {
        if !row[0].is_one() {
            return PascalShape::Broken { n, k: 0 };
        }
        if !row[n].is_one() {
            return PascalShape::Broken { n, k: n };
        }
        if let Some(k) = (0..=n).find(|&k| row[k] != row[n - k]) {
            return PascalShape::Broken { n, k: k.max(n - k) };
        }
    }
    PascalShape::PascalLike
}

pub fn is_pascal_like(t: &Triangle) -> bool {
    pascal_shape(t) == PascalShape::PascalLike
}

/// Rows `0..n_rows` of the Pascal-like Riordan matrix with the given `a1`,
/// together with its A-sequence `a_0..a_{n_rows−2}`.
///
/// Row k+1 needs `a_k`, which the recursion reads off rows up to k.
pub fn pascal_like_rows(a1: &Rational, n_rows: usize) -> (Triangle, Series) {
    let n_rows = n_rows.max(2);
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    let mut a: Vec<Rational> = vec![Rational::one(), a1.clone()];
    let a2 = a1 * (Rational::one() - a1);
    for n in 0..n_rows - 1 {
        if n >= 2 {
            let prev = &rows[n];
            let mut next_a = rational::int(n as i64 - 1) * &a2;
            for (i, ai) in a.iter().enumerate().take(n).skip(2) {
                next_a -= ai * &prev[i];
            }
            a.push(next_a);
        }
        let prev = &rows[n];
        let mut row = Vec::with_capacity(n + 2);
        row.push(Rational::one());
        for k in 0..=n {
            let mut entry = Rational::zero();
            for (j, aj) in a.iter().enumerate().take(n - k + 1) {
                entry += aj * &prev[k + j];
            }
            row.push(entry);
        }
        rows.push(row);
    }
    a.truncate(n_rows - 1);
    let triangle = Triangle::new(rows).expect("rows are built with increasing length");
    (triangle, Series::from_coeffs(a))
}

/// The Pascal-like Riordan pair with parameter `a1`, known through t^order.
///
/// Its Z-sequence is `(1, 0, 0, …)` since column 0 is constant.
pub fn pascal_like_instance(a1: &Rational, order: usize) -> Result<RiordanPair, SeqError> {
    let (_, a) = pascal_like_rows(a1, order + 1);
    let z = Series::monomial(Rational::one(), 0, a.valid_to());
    sequences::pair_from_a_z(&a, &z)
}

/// How the divisibility `a2 | a_j` was decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Divisibility {
    /// `a_j / a2` is an integer for every known j ≥ 2 (or all vanish when a2 = 0).
    Holds,
    Fails {
        index: usize,
    },
    /// The A-sequence is not integral and `a2 ≠ 0`, so divisibility has no content.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PascalError {
    #[error("constraints not applicable: entry ({n},{k}) breaks the Pascal-like shape")]
    NotPascalLike { n: usize, k: usize },
    #[error(transparent)]
    Seq(#[from] SeqError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalLikeReport {
    pub a_seq: Series,
    /// `a0 = 1` and `a2 = a1(1 − a1)`.
    pub a2_identity: bool,
    /// First row `n` with `p_{n,n−1} ≠ 1 + (n−1)·a1`.
    pub subdiagonal_failure: Option<usize>,
    /// First index where the recursion fails, if any.
    pub recursion_failure: Option<usize>,
    pub divisibility: Divisibility,
}

impl PascalLikeReport {
    pub fn all_hold(&self) -> bool {
        self.a2_identity
            && self.subdiagonal_failure.is_none()
            && self.recursion_failure.is_none()
            && self.divisibility == Divisibility::Holds
    }
}

/// Checks the A-sequence identities on a Pascal-like Riordan triangle.
pub fn pascal_like_a_constraints(t: &Triangle) -> Result<PascalLikeReport, PascalError> {
    if let PascalShape::Broken { n, k } = pascal_shape(t) {
        return Err(PascalError::NotPascalLike { n, k });
    }
    let a = sequences::a_z_from_triangle(t)?.a_seq;
    let a1 = a.coeff(1).clone();
    let a2 = &a1 * (Rational::one() - &a1);
    let a2_identity = a.coeff(0).is_one() && a.valid_to() >= 2 && *a.coeff(2) == a2;
    let subdiagonal_failure = (1..t.n_rows())
        .find(|&n| t.entry(n, n - 1) != Rational::one() + rational::int(n as i64 - 1) * &a1);

    let recursion_failure = (2..=a.valid_to()).find(|&k| {
        let mut expected = rational::int(k as i64 - 1) * &a2;
        for i in 2..k {
            expected -= a.coeff(i) * &t.row(k)[i];
        }
        expected != *a.coeff(k)
    });

    let tail = || (2..=a.valid_to()).map(|j| (j, a.coeff(j)));
    let divisibility = if a2.is_zero() {
        match tail().find(|(_, v)| !v.is_zero()) {
            None => Divisibility::Holds,
            Some((index, _)) => Divisibility::Fails { index },
        }
    } else if rational::all_integral(a.coeffs()) {
        match tail().find(|(_, v)| !(*v / &a2).is_integer()) {
            None => Divisibility::Holds,
            Some((index, _)) => Divisibility::Fails { index },
        }
    } else {
        Divisibility::NotApplicable
    };

    Ok(PascalLikeReport {
        a_seq: a,
        a2_identity,
        subdiagonal_failure,
        recursion_failure,
        divisibility,
    })
}

/// Both B-sequence verdicts of a Pascal-like Riordan pair.
///
/// A type-I B-sequence needs `a2 = 0`, so it exists only for `a1 ∈ {0, 1}`:
/// `(1/(1−t), t)` and the Pascal matrix. Column 0 is constant, so every
/// Pascal-like Riordan matrix has type-II B-sequence `(1, 0, 0, …)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PascalLikeB {
    pub type1: BSeqVerdict,
    pub type2: BSeqVerdict,
}

pub fn classify_pascal_like_b(p: &RiordanPair) -> Result<PascalLikeB, SeqError> {
    Ok(PascalLikeB {
        type1: sequences::type1_b_from_f(p.f())?,
        type2: sequences::type2_b(p)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn delannoy_rows() {
        let (t, a) = pascal_like_rows(&int(2), 5);
        let expected =
            Triangle::from_int_rows(&[&[1], &[1, 1], &[1, 3, 1], &[1, 5, 5, 1], &[1, 7, 13, 7, 1]])
                .unwrap();
        assert_eq!(t, expected);
        assert_eq!(a, Series::from_ints(&[1, 2, -2, 6]));
    }

    #[test]
    fn pascal_and_trivial_instances() {
        let (t, a) = pascal_like_rows(&int(1), 7);
        assert_eq!(a, Series::from_ints(&[1, 1, 0, 0, 0, 0]));
        let row6: Vec<Rational> = [1, 6, 15, 20, 15, 6, 1].iter().map(|&x| int(x)).collect();
        assert_eq!(t.row(6), row6.as_slice());
        let (_, a) = pascal_like_rows(&int(0), 7);
        assert_eq!(a, Series::from_ints(&[1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn shape_check() {
        let (t, _) = pascal_like_rows(&int(3), 6);
        assert!(is_pascal_like(&t));
        let mut rows = t.rows().to_vec();
        rows[4][1] += int(1);
        assert_eq!(
            pascal_shape(&Triangle::new(rows).unwrap()),
            PascalShape::Broken { n: 4, k: 3 }
        );
        let mut rows = t.rows().to_vec();
        rows[3][0] = int(2);
        assert_eq!(
            pascal_shape(&Triangle::new(rows).unwrap()),
            PascalShape::Broken { n: 3, k: 0 }
        );
    }

    #[test]
    fn report_on_delannoy() {
        let (t, _) = pascal_like_rows(&int(2), 10);
        let report = pascal_like_a_constraints(&t).unwrap();
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn only_trivial_and_pascal_have_type1_b() {
        for a1 in -2..=3 {
            let p = pascal_like_instance(&int(a1), 10).unwrap();
            let b = classify_pascal_like_b(&p).unwrap();
            assert_eq!(b.type1.is_positive(), a1 == 0 || a1 == 1, "a1 = {a1}");
            assert!(b.type2.b_seq().unwrap().starts_with_ints(&[1, 0, 0, 0, 0]));
        }
    }
}
