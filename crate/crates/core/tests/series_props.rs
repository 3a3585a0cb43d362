mod support;

use num_traits::{One, Zero};
use proptest::prelude::*;

use riordan::compositions::compositions;
use riordan::rational::{frac, int};
use riordan::{Rational, Series};
use support::{convolve, delta_series, partition_compose, series_strategy, unit_series};

/// Coefficientwise reciprocal: `r_n = −(1/a_0) Σ_{k≥1} a_k r_{n−k}`.
fn reciprocal_oracle(a: &[Rational]) -> Vec<Rational> {
    let mut r: Vec<Rational> = vec![a[0].recip()];
    for n in 1..a.len() {
        let mut acc = Rational::zero();
        for k in 1..=n {
            acc += &a[k] * &r[n - k];
        }
        r.push(-acc / &a[0]);
    }
    r
}

/// Lagrange inversion: `[t^n] f̄ = (1/n) [t^{n−1}] (t/f)^n`.
fn comp_inverse_oracle(f: &[Rational]) -> Vec<Rational> {
    let len = f.len();
    let f_over_t: Vec<Rational> = f[1..].to_vec();
    let phi = reciprocal_oracle(&f_over_t);
    let mut out = vec![Rational::zero(); len];
    let mut power = vec![Rational::one()];
    for n in 1..len {
        power = convolve(&power, &phi, len);
        out[n] = power[n - 1].clone() / int(n as i64);
    }
    out
}

#[test]
fn catalan_inverse_matches_lagrange_oracle() {
    let f = Series::from_ints(&[0, 1, -1, 0, 0, 0]);
    let expected = comp_inverse_oracle(f.coeffs());
    assert_eq!(f.comp_inverse().unwrap().coeffs(), expected.as_slice());
    assert!(f
        .comp_inverse()
        .unwrap()
        .starts_with_ints(&[0, 1, 1, 2, 5, 14]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in series_strategy(6..=6), b in series_strategy(6..=6), c in series_strategy(6..=6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Series::zero(5));
        prop_assert_eq!(&a * &Series::one(5), a.clone());
    }

    #[test]
    fn product_matches_convolution(a in series_strategy(1..=9), b in series_strategy(1..=9)) {
        let len = a.coeffs().len().min(b.coeffs().len());
        let p = &a * &b;
        prop_assert_eq!(p.coeffs().to_vec(), convolve(a.coeffs(), b.coeffs(), len));
    }

    #[test]
    fn reciprocal_inverts(a in unit_series(1..=10)) {
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(r.coeffs().to_vec(), reciprocal_oracle(a.coeffs()));
        prop_assert_eq!(&a * &r, Series::one(a.valid_to()));
    }

    #[test]
    fn comp_inverse_is_two_sided(f in delta_series(2..=9)) {
        let g = f.comp_inverse().unwrap();
        prop_assert_eq!(g.coeffs().to_vec(), comp_inverse_oracle(f.coeffs()));
        let n = f.valid_to();
        prop_assert_eq!(f.compose(&g).unwrap().truncate(n), Series::t(n));
        prop_assert_eq!(g.compose(&f).unwrap().truncate(n), Series::t(n));
        prop_assert_eq!(g.comp_inverse().unwrap(), f);
    }

    #[test]
    fn compose_three_ways(h in series_strategy(1..=8), inner in delta_series(2..=8)) {
        let horner = h.compose(&inner).unwrap();
        let len = horner.valid_to() + 1;
        let partition = partition_compose(h.coeffs(), inner.coeffs(), len);
        prop_assert_eq!(horner.coeffs(), partition.as_slice());

        // Composition form: [t^n] h(inner) = Σ_k h_k Σ_{compositions of n into k parts} Π inner_i.
        for n in 1..len {
            let via_compositions = compositions(n, n).weighted_sum(
                |k| h.get(k).cloned().unwrap_or_else(Rational::zero),
                |i| inner.coeff(i).clone(),
            );
            prop_assert_eq!(horner.coeff(n), &via_compositions);
        }
    }

    #[test]
    fn sqrt_squares_back(mut c in series_strategy(1..=10)) {
        c = Series::from_coeffs(std::iter::once(Rational::one()).chain(c.coeffs()[1..].iter().cloned()).collect());
        let r = c.sqrt_one().unwrap();
        prop_assert_eq!(r.coeff(0), &Rational::one());
        prop_assert_eq!(&r * &r, c);
    }

    #[test]
    fn shift_round_trip(a in series_strategy(1..=8), k in 0usize..4) {
        let up = a.shift(k as isize).unwrap();
        prop_assert_eq!(up.valid_to(), a.valid_to() + k);
        prop_assert_eq!(up.shift(-(k as isize)).unwrap(), a);
    }
}

#[test]
fn catalan_related_square_root() {
    let r = Series::from_ints(&[1, -4, 0, 0, 0, 0]).sqrt_one().unwrap();
    assert!(r.starts_with_ints(&[1, -2, -2, -4, -10, -28]));
    assert_eq!(&r * &r, Series::from_ints(&[1, -4, 0, 0, 0, 0]));
}

#[test]
fn rational_coefficients_survive() {
    let a = Series::from_coeffs(vec![int(2), frac(1, 3), frac(-5, 7)]);
    let r = a.reciprocal().unwrap();
    assert_eq!(r.coeffs(), reciprocal_oracle(a.coeffs()).as_slice());
    assert_eq!(r.coeff(0), &frac(1, 2));
}
