//! Truncated formal power series over the rationals.
//!
//! A [`Series`] stores the coefficients of t^0 ..= t^valid_to. Everything above
//! `valid_to` is unknown, so every operation reports the highest power it can
//! still vouch for: binary ring operations take the minimum of their inputs,
//! division by t^k gives up k orders, and composition keeps the extra precision
//! an inner series of order r buys (see [`Series::compose`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient list has length {found}, expected valid_to + 1 = {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("series is not invertible: constant term is zero")]
    NotInvertible,
    #[error("composition undefined: inner series has nonzero constant term")]
    CompositionUndefined,
    #[error("no compositional inverse: series has order {0}, expected exactly 1")]
    NoCompositionalInverse(SeriesOrder),
    #[error("square root unsupported: constant term must be 1")]
    SqrtUnsupported,
    #[error("series is not divisible by t^{power}: coefficient {index} is nonzero")]
    NotDivisible { power: usize, index: usize },
    #[error("truncation too short: need coefficients through t^{needed}, have t^{available}")]
    TruncationTooShort { needed: usize, available: usize },
}

/// Index of the first nonzero coefficient, or `Infinite` for a series that is
/// zero throughout its valid range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeriesOrder {
    Finite(usize),
    Infinite,
}

impl fmt::Display for SeriesOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesOrder::Finite(r) => write!(f, "{r}"),
            SeriesOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// Power series truncated after `t^valid_to`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series from exactly `valid_to + 1` coefficients.
    pub fn new(coeffs: Vec<Rational>, valid_to: usize) -> Result<Self, SeriesError> {
        if coeffs.len() != valid_to + 1 {
            return Err(SeriesError::LengthMismatch {
                expected: valid_to + 1,
                found: coeffs.len(),
            });
        }
        Ok(Series { coeffs })
    }

    /// Series whose valid range is exactly the given coefficients. Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// Builds coefficients 0..=valid_to from a closure.
    pub fn from_fn(valid_to: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series {
            coeffs: (0..=valid_to).map(f).collect(),
        }
    }

    pub fn zero(valid_to: usize) -> Self {
        Self::from_fn(valid_to, |_| Rational::zero())
    }

    pub fn constant(c: Rational, valid_to: usize) -> Self {
        let mut s = Self::zero(valid_to);
        s.coeffs[0] = c;
        s
    }

    pub fn one(valid_to: usize) -> Self {
        Self::constant(Rational::one(), valid_to)
    }

    /// `c·t^power`, known through `t^valid_to`.
    pub fn monomial(c: Rational, power: usize, valid_to: usize) -> Self {
        let mut s = Self::zero(valid_to);
        if power <= valid_to {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `t`.
    pub fn t(valid_to: usize) -> Self {
        Self::monomial(Rational::one(), 1, valid_to)
    }

    /// `1/(1 - c·t)`.
    pub fn geometric(c: &Rational, valid_to: usize) -> Self {
        Self::from_fn(valid_to, |j| rational::pow(c, j))
    }

    pub fn valid_to(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^j`. Panics past `valid_to`.
    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    pub fn get(&self, j: usize) -> Option<&Rational> {
        self.coeffs.get(j)
    }

    pub fn order(&self) -> SeriesOrder {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map_or(SeriesOrder::Infinite, SeriesOrder::Finite)
    }

    /// Drops everything past `t^n`. A no-op when `n >= valid_to`.
    pub fn truncate(&self, n: usize) -> Self {
        Series {
            coeffs: self.coeffs[..=n.min(self.valid_to())].to_vec(),
        }
    }

    /// Truncation to exactly `n`, failing if fewer coefficients are known.
    pub fn truncate_exact(&self, n: usize) -> Result<Self, SeriesError> {
        if n > self.valid_to() {
            return Err(SeriesError::TruncationTooShort {
                needed: n,
                available: self.valid_to(),
            });
        }
        Ok(self.truncate(n))
    }

    /// First index on the joint valid range where the two series differ.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Equality on the joint valid range.
    pub fn agrees_with(&self, other: &Series) -> bool {
        self.first_difference(other).is_none()
    }

    /// True when this series equals the given integer coefficients over their
    /// common prefix, and this series is known at least as far as `expected`.
    pub fn starts_with_ints(&self, expected: &[i64]) -> bool {
        expected.len() <= self.coeffs.len()
            && expected
                .iter()
                .zip(&self.coeffs)
                .all(|(&e, c)| *c == rational::int(e))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `self^k`, with `self^0 = 1`.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Series::one(self.valid_to());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse via `c_j = -(Σ_{k≥1} a_k c_{j-k}) / a_0`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut c: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        c.push(inv0.clone());
        for j in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=j {
                acc += &self.coeffs[k] * &c[j - k];
            }
            c.push(-acc * &inv0);
        }
        Ok(Series { coeffs: c })
    }

    /// `self / other`, valid to the minimum of the two.
    pub fn div(&self, other: &Series) -> Result<Self, SeriesError> {
        Ok(self * &other.reciprocal()?)
    }

    /// `outer(inner)`, evaluated Horner-style.
    ///
    /// With `inner` of order r ≥ 1 known through `t^N` and `outer` known through
    /// `t^M`, the result is known through `min(N, (M+1)·r − 1)`; for r = 1 this is
    /// `min(M, N)`.
    pub fn compose(&self, inner: &Series) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::CompositionUndefined);
        }
        let n = inner.valid_to();
        let m = self.valid_to();
        let (valid, r) = match inner.order() {
            SeriesOrder::Infinite => (n, usize::MAX),
            SeriesOrder::Finite(r) => (n.min((m + 1) * r - 1), r),
        };
        // Outer terms past valid/r cannot reach t^valid.
        let top = if r == usize::MAX { 0 } else { m.min(valid / r) };
        let inner = inner.truncate(valid);
        let mut acc = Series::constant(self.coeffs[top].clone(), valid);
        for j in (0..top).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[j];
        }
        Ok(acc)
    }

    /// Compositional inverse `f̄` with `f(f̄(t)) = f̄(f(t)) = t`.
    ///
    /// Solves `[t^n] f(f̄) = 0` for n ≥ 2 one coefficient at a time: f̄_n enters
    /// only through the linear term `f_1·f̄_n`, so each step is a division by f_1.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        let order = self.order();
        if order != SeriesOrder::Finite(1) {
            return Err(SeriesError::NoCompositionalInverse(order));
        }
        let n = self.valid_to();
        let f1_inv = self.coeffs[1].recip();
        let mut g = vec![Rational::zero(); n + 1];
        g[1] = f1_inv.clone();
        // powers[j][i] = [t^i] g^j, filled column by column.
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n + 1]; n + 1];
        powers[1][1] = g[1].clone();
        for col in 2..=n {
            let mut acc = Rational::zero();
            for j in 2..=col {
                let mut entry = Rational::zero();
                for i in 1..=(col - j + 1) {
                    entry += &g[i] * &powers[j - 1][col - i];
                }
                acc += &self.coeffs[j] * &entry;
                powers[j][col] = entry;
            }
            g[col] = -acc * &f1_inv;
            powers[1][col] = g[col].clone();
        }
        Ok(Series { coeffs: g })
    }

    /// Square root on the branch with constant term 1.
    pub fn sqrt_one(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtUnsupported);
        }
        let half = rational::frac(1, 2);
        let mut r: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        r.push(Rational::one());
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc -= &r[i] * &r[n - i];
            }
            r.push(acc * &half);
        }
        Ok(Series { coeffs: r })
    }

    /// Multiplies by `t^k` (k > 0) or divides by `t^|k|` (k < 0).
    pub fn shift(&self, k: isize) -> Result<Self, SeriesError> {
        if k >= 0 {
            let k = k as usize;
            let mut coeffs = vec![Rational::zero(); k];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(Series { coeffs });
        }
        let k = k.unsigned_abs();
        if let Some(index) = self.coeffs.iter().take(k).position(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible { power: k, index });
        }
        if k > self.valid_to() {
            return Err(SeriesError::TruncationTooShort {
                needed: k,
                available: self.valid_to(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Term-wise derivative; coefficient j is `(j+1)·a_{j+1}`.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.valid_to() == 0 {
            return Err(SeriesError::TruncationTooShort {
                needed: 1,
                available: 0,
            });
        }
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * rational::int(j as i64))
                .collect(),
        })
    }

    /// First odd index with a nonzero coefficient, if any.
    pub fn odd_part_witness(&self) -> Option<usize> {
        (1..self.coeffs.len())
            .step_by(2)
            .find(|&j| !self.coeffs[j].is_zero())
    }

    /// First even index with a nonzero coefficient, if any.
    pub fn even_part_witness(&self) -> Option<usize> {
        (0..self.coeffs.len())
            .step_by(2)
            .find(|&j| !self.coeffs[j].is_zero())
    }
}

impl fmt::Display for Series {
    /// Comma-separated rationals from t^0, e.g. `1, 1, 1/2, -3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product truncated at the shorter input.
    fn mul(self, rhs: &Series) -> Series {
        let n = self.valid_to().min(rhs.valid_to());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }
}
