//! Proper Riordan pairs `(g, f)`, their triangles, and the group law.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::Rational;
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiordanError {
    #[error("not a proper Riordan pair: {0}")]
    NotProper(&'static str),
    #[error("truncation too short: {rows} rows need order {needed}, pair is valid to {available}")]
    TruncationTooShort {
        rows: usize,
        needed: usize,
        available: usize,
    },
    #[error("{0} requires g(0) = 1")]
    RequiresNormalized(&'static str),
    #[error("triangle row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A proper Riordan pair: `g` of order 0 and `f` of order exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanPair {
    g: Series,
    f: Series,
    normalized: bool,
}

impl RiordanPair {
    pub fn new(g: Series, f: Series) -> Result<Self, RiordanError> {
        if g.valid_to() < 1 || f.valid_to() < 1 {
            return Err(RiordanError::NotProper("g and f must be known through t^1"));
        }
        if g.coeff(0).is_zero() {
            return Err(RiordanError::NotProper("g(0) must be nonzero"));
        }
        if !f.coeff(0).is_zero() {
            return Err(RiordanError::NotProper("f(0) must be zero"));
        }
        if f.coeff(1).is_zero() {
            return Err(RiordanError::NotProper("f'(0) must be nonzero"));
        }
        let normalized = g.coeff(0).is_one();
        Ok(RiordanPair { g, f, normalized })
    }

    /// `(1, t)`.
    pub fn identity(order: usize) -> Self {
        RiordanPair {
            g: Series::one(order),
            f: Series::t(order),
            normalized: true,
        }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    /// Whether `g(0) = 1`.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Highest power of t known for both `g` and `f`.
    pub fn order(&self) -> usize {
        self.g.valid_to().min(self.f.valid_to())
    }

    pub fn truncate(&self, order: usize) -> Self {
        RiordanPair {
            g: self.g.truncate(order),
            f: self.f.truncate(order),
            normalized: self.normalized,
        }
    }

    /// Rows `0..n_rows` of `d_{n,k} = [t^n] g·f^k`.
    pub fn expand(&self, n_rows: usize) -> Result<Triangle, RiordanError> {
        if n_rows == 0 {
            return Ok(Triangle { rows: Vec::new() });
        }
        let top = n_rows - 1;
        if top > self.order() {
            return Err(RiordanError::TruncationTooShort {
                rows: n_rows,
                needed: top,
                available: self.order(),
            });
        }
        let f = self.f.truncate(top);
        let mut rows: Vec<Vec<Rational>> = (0..n_rows).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut column = self.g.truncate(top);
        for k in 0..n_rows {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(column.coeff(n).clone());
            }
            column = &column * &f;
        }
        Ok(Triangle { rows })
    }

    /// `(g, f)·h = g·h(f)`.
    pub fn apply(&self, h: &Series) -> Result<Series, RiordanError> {
        Ok(&self.g * &h.compose(&self.f)?)
    }

    /// `(g1, f1)·(g2, f2) = (g1·g2(f1), f2(f1))`.
    pub fn multiply(&self, rhs: &RiordanPair) -> Result<RiordanPair, RiordanError> {
        let g = &self.g * &rhs.g.compose(&self.f)?;
        let f = rhs.f.compose(&self.f)?;
        let order = g.valid_to().min(f.valid_to());
        RiordanPair::new(g.truncate(order), f.truncate(order))
    }

    /// `(g, f)^{-1} = (1/g(f̄), f̄)`.
    pub fn inverse(&self) -> Result<RiordanPair, RiordanError> {
        let f_bar = self.f.comp_inverse()?;
        let g = self.g.compose(&f_bar)?.reciprocal()?;
        let order = g.valid_to().min(f_bar.valid_to());
        RiordanPair::new(g.truncate(order), f_bar.truncate(order))
    }

    /// Equality of both series on their joint valid range.
    pub fn agrees_with(&self, other: &RiordanPair) -> bool {
        self.g.agrees_with(&other.g) && self.f.agrees_with(&other.f)
    }
}

impl fmt::Display for RiordanPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "g: {}", self.g)?;
        write!(f, "f: {}", self.f)
    }
}

/// Explicit lower-triangular array; row n holds `d_{n,0} ..= d_{n,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Rational>>,
}

impl Triangle {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, RiordanError> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(RiordanError::RaggedRow {
                    row: n,
                    expected: n + 1,
                    found: row.len(),
                });
            }
        }
        Ok(Triangle { rows })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, RiordanError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rational::int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n_rows: usize) -> Self {
        Triangle {
            rows: (0..n_rows)
                .map(|n| {
                    (0..=n)
                        .map(|k| {
                            if k == n {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    /// `d_{n,k}`; `None` above the diagonal or past the last row.
    pub fn get(&self, n: usize, k: usize) -> Option<&Rational> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    /// `d_{n,k}` with entries above the diagonal read as zero.
    pub fn entry(&self, n: usize, k: usize) -> Rational {
        self.get(n, k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn column(&self, k: usize) -> Vec<Rational> {
        self.rows.iter().skip(k).map(|r| r[k].clone()).collect()
    }

    pub fn truncate(&self, n_rows: usize) -> Self {
        Triangle {
            rows: self.rows.iter().take(n_rows).cloned().collect(),
        }
    }

    /// Row-by-column matrix product over the rows both factors share.
    pub fn matmul(&self, rhs: &Triangle) -> Triangle {
        let n_rows = self.n_rows().min(rhs.n_rows());
        let rows = (0..n_rows)
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let mut acc = Rational::zero();
                        for j in k..=n {
                            acc += &self.rows[n][j] * &rhs.rows[j][k];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Triangle { rows }
    }

    /// Matrix times column vector, reading `h` as `(h_0, h_1, …)`.
    pub fn apply(&self, h: &Series) -> Series {
        let n_rows = self.n_rows().min(h.valid_to() + 1);
        Series::from_fn(n_rows - 1, |n| {
            let mut acc = Rational::zero();
            for k in 0..=n {
                acc += &self.rows[n][k] * h.coeff(k);
            }
            acc
        })
    }

    /// First `(n, k)` where the two triangles differ, over the rows both have.
    pub fn first_difference(&self, other: &Triangle) -> Option<(usize, usize)> {
        for (n, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            if let Some(k) = a.iter().zip(b).position(|(x, y)| x != y) {
                return Some((n, k));
            }
        }
        None
    }
}

impl fmt::Display for Triangle {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, row) in self.rows.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            for (k, x) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}
