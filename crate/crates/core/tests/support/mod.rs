//! Oracles and generators shared by the integration tests.
//!
//! The oracles avoid the library's series operations: products are plain
//! convolutions of coefficient vectors and composition goes through integer
//! partitions, so agreement with the library is an independent check.

#![allow(dead_code)]

pub mod checks;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

use riordan::rational::{frac, int};
use riordan::{Rational, RiordanPair, Series, Triangle};

/// Truncated product of two coefficient vectors.
pub fn convolve(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Partitions of `n` as multiplicity vectors `m[i]` (parts of size i).
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, largest: usize, m: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(m.clone());
            return;
        }
        for part in (1..=largest.min(remaining)).rev() {
            m[part] += 1;
            go(remaining - part, part, m, out);
            m[part] -= 1;
        }
    }
    let mut out = Vec::new();
    let mut m = vec![0; n + 1];
    go(n, n, &mut m, &mut out);
    out
}

/// `[t^n] h(inner)` for `n ≤ len−1`, by Faà di Bruno's partition form:
/// each partition with multiplicities `m_i` and `k = Σ m_i` parts contributes
/// `h_k · k!/Π m_i! · Π inner_i^{m_i}`.
pub fn partition_compose(h: &[Rational], inner: &[Rational], len: usize) -> Vec<Rational> {
    assert!(inner.first().is_none_or(|c| c.is_zero()));
    let mut out = vec![Rational::zero(); len];
    if let Some(h0) = h.first() {
        if len > 0 {
            out[0] = h0.clone();
        }
    }
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        for m in partitions(n) {
            let k: usize = m.iter().sum();
            let Some(hk) = h.get(k) else { continue };
            let mut term = hk.clone() * Rational::from_integer(factorial(k));
            for (i, &mi) in m.iter().enumerate().skip(1) {
                if mi == 0 {
                    continue;
                }
                term /= Rational::from_integer(factorial(mi));
                let c = inner.get(i).cloned().unwrap_or_else(Rational::zero);
                for _ in 0..mi {
                    term *= &c;
                }
            }
            *slot += term;
        }
    }
    out
}

/// Triangle rows `0..n_rows` from columns `g·f^k`, using only convolutions.
pub fn naive_triangle(g: &Series, f: &Series, n_rows: usize) -> Triangle {
    let mut column = g.coeffs()[..n_rows.min(g.coeffs().len())].to_vec();
    column.resize(n_rows, Rational::zero());
    let mut rows: Vec<Vec<Rational>> = (0..n_rows).map(|n| Vec::with_capacity(n + 1)).collect();
    for k in 0..n_rows {
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            row.push(column[n].clone());
        }
        column = convolve(&column, f.coeffs(), n_rows);
    }
    Triangle::new(rows).unwrap()
}

/// Lower-triangular inverse of a triangle with nonzero diagonal, by forward substitution.
pub fn triangle_inverse(t: &Triangle) -> Triangle {
    let n = t.n_rows();
    let mut inv: Vec<Vec<Rational>> = (0..n).map(|i| vec![Rational::zero(); i + 1]).collect();
    for col in 0..n {
        for row in col..n {
            let mut acc = if row == col {
                Rational::one()
            } else {
                Rational::zero()
            };
            for j in col..row {
                acc -= t.entry(row, j) * &inv[j][col];
            }
            inv[row][col] = acc / t.entry(row, row);
        }
    }
    Triangle::new(inv).unwrap()
}

pub fn small_int(rng: &mut impl Rng) -> Rational {
    int(rng.gen_range(-3..=3))
}

pub fn small_nonzero(rng: &mut impl Rng) -> Rational {
    let v = rng.gen_range(1..=3);
    int(if rng.gen_bool(0.5) { v } else { -v })
}

/// Small rational with denominator up to 3, zero about a fifth of the time.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    if rng.gen_bool(0.2) {
        return Rational::zero();
    }
    frac(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_series(rng: &mut impl Rng, valid_to: usize) -> Series {
    Series::from_fn(valid_to, |_| small_rational(rng))
}

/// Proper pair with `g(0) = 1` and random `f'(0) ≠ 0`.
pub fn random_pair(rng: &mut impl Rng, order: usize) -> RiordanPair {
    let g = Series::from_fn(order, |j| {
        if j == 0 {
            Rational::one()
        } else {
            small_rational(rng)
        }
    });
    let f1 = small_nonzero(rng);
    let f = Series::from_fn(order, |j| match j {
        0 => Rational::zero(),
        1 => f1.clone(),
        _ => small_rational(rng),
    });
    RiordanPair::new(g, f).unwrap()
}

/// `f` with `f = t + t·f·B(t·f)`, by fixed-point iteration.
pub fn f_from_type1_b(b: &Series, order: usize) -> Series {
    let t = Series::t(order);
    let mut f = t.clone();
    for _ in 0..=order {
        let tf = &t * &f;
        f = &t + &(&tf * &b.compose(&tf).unwrap().truncate(order));
        f = f.truncate(order);
    }
    f
}

/// `g = 1/(1 − t·B̂(t·f))`, the column 0 generated by a type-II sequence.
pub fn g_from_type2_b(b_hat: &Series, f: &Series) -> Series {
    let order = f.valid_to();
    let tf = (&Series::t(order) * f).truncate(order);
    let inner = b_hat
        .compose(&tf)
        .unwrap()
        .shift(1)
        .unwrap()
        .truncate(order);
    (&Series::one(order) - &inner).reciprocal().unwrap()
}

/// A pair with the given type-I B-sequence and a random column 0.
pub fn pair_with_type1_b(rng: &mut impl Rng, b: &Series, order: usize) -> RiordanPair {
    let f = f_from_type1_b(b, order);
    let g = Series::from_fn(order, |j| {
        if j == 0 {
            Rational::one()
        } else {
            small_rational(rng)
        }
    });
    RiordanPair::new(g, f).unwrap()
}

/// A pair with type-I sequence `b` and type-II sequence `b_hat`.
pub fn pair_with_both_b(b: &Series, b_hat: &Series, order: usize) -> RiordanPair {
    let f = f_from_type1_b(b, order);
    let g = g_from_type2_b(b_hat, &f);
    RiordanPair::new(g, f).unwrap()
}

/// Random B-sequence long enough for a pair of the given order.
pub fn random_b(rng: &mut impl Rng, order: usize) -> Series {
    Series::from_fn(order, |_| small_int(rng))
}

/// A pair whose Z-sequence is `B̂(t·f̄)` for a random `B̂`, with random A of leading term `a0`.
pub fn pair_with_type2_b(rng: &mut impl Rng, a0: Rational, order: usize) -> (RiordanPair, Series) {
    let a = Series::from_fn(order - 1, |j| {
        if j == 0 {
            a0.clone()
        } else {
            small_rational(rng)
        }
    });
    let f_bar = a.reciprocal().unwrap().shift(1).unwrap();
    let f = f_bar.comp_inverse().unwrap();
    let b_hat = random_b(rng, order);
    let g = g_from_type2_b(&b_hat, &f.truncate(order));
    (RiordanPair::new(g, f.truncate(order)).unwrap(), b_hat)
}

/// Vector of small rational coefficients for proptest.
pub fn coeff_vec(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), len)
        .prop_map(|v| v.into_iter().map(|(n, d)| frac(n, d)).collect())
}

pub fn series_strategy(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Series> {
    coeff_vec(len).prop_map(Series::from_coeffs)
}

/// Series with nonzero constant term.
pub fn unit_series(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Series> {
    (
        coeff_vec(len),
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)],
    )
        .prop_map(|(mut c, lead)| {
            c[0] = int(lead);
            Series::from_coeffs(c)
        })
}

/// Series with `s(0) = 0`, `s'(0) ≠ 0`.
pub fn delta_series(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Series> {
    let lo = (*len.start()).max(2);
    let hi = (*len.end()).max(lo);
    (
        coeff_vec(lo..=hi),
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(-3)],
    )
        .prop_map(|(mut c, lead)| {
            c[0] = Rational::zero();
            c[1] = int(lead);
            Series::from_coeffs(c)
        })
}

pub fn pair_strategy(order: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = RiordanPair> {
    order.prop_flat_map(|n| {
        (unit_series(n + 1..=n + 1), delta_series(n + 1..=n + 1))
            .prop_map(|(g, f)| RiordanPair::new(g, f).unwrap())
    })
}
