//! Integer compositions and the composition sums of Faà di Bruno's formula.
//!
//! For `B(h(t))` with `h(0) = 0`, the coefficient of `t^n` is
//! `Σ b_k · h_{i_1} ⋯ h_{i_k}` over compositions `(i_1, …, i_k)` of n. The
//! B-sequence formulas restrict k to at most m parts; terms whose product
//! contains a vanishing factor drop out.

use num_traits::Zero;

use crate::rational::Rational;

/// All compositions of `n` into at most `max_parts` positive parts.
///
/// Tuples are ordered by number of parts, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSet {
    n: usize,
    max_parts: usize,
    tuples: Vec<Vec<usize>>,
}

impl CompositionSet {
    pub fn new(n: usize, max_parts: usize) -> Self {
        let mut tuples = Vec::new();
        for k in 1..=max_parts.min(n) {
            let mut current = Vec::with_capacity(k);
            push_with_parts(n, k, &mut current, &mut tuples);
        }
        CompositionSet {
            n,
            max_parts,
            tuples,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_parts(&self) -> usize {
        self.max_parts
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// `Σ weight(k) · Π factors[i_j]` over every tuple, with k the tuple length.
    ///
    /// Evaluates each term in full; see [`composition_sum`] for the pruned form.
    pub fn weighted_sum(
        &self,
        weight: impl Fn(usize) -> Rational,
        factors: impl Fn(usize) -> Rational,
    ) -> Rational {
        let mut total = Rational::zero();
        for tuple in &self.tuples {
            let mut term = weight(tuple.len());
            for &part in tuple {
                term *= factors(part);
            }
            total += term;
        }
        total
    }
}

fn push_with_parts(
    remaining: usize,
    parts: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if parts == 1 {
        current.push(remaining);
        out.push(current.clone());
        current.pop();
        return;
    }
    for first in 1..=(remaining - (parts - 1)) {
        current.push(first);
        push_with_parts(remaining - first, parts - 1, current, out);
        current.pop();
    }
}

/// Shorthand for [`CompositionSet::new`].
pub fn compositions(n: usize, max_parts: usize) -> CompositionSet {
    CompositionSet::new(n, max_parts)
}

/// `Σ weight(k) · Π factors[i_j]` over compositions of `n` with at most
/// `max_parts` parts, skipping every branch that picks a zero factor.
///
/// `factors[i]` for `i >= factors.len()` is treated as unavailable and panics,
/// so callers must supply factors through index `n`. `weight` is only called
/// for tuples whose factor product is nonzero.
pub fn composition_sum(
    n: usize,
    max_parts: usize,
    weight: &dyn Fn(usize) -> Rational,
    factors: &[Rational],
) -> Rational {
    let mut total = Rational::zero();
    if n == 0 {
        return total;
    }
    let mut product_stack: Vec<Rational> = Vec::new();
    walk(
        n,
        0,
        max_parts,
        weight,
        factors,
        &mut product_stack,
        &mut total,
    );
    total
}

fn walk(
    remaining: usize,
    depth: usize,
    max_parts: usize,
    weight: &dyn Fn(usize) -> Rational,
    factors: &[Rational],
    stack: &mut Vec<Rational>,
    total: &mut Rational,
) {
    if remaining == 0 {
        let product = stack.last().expect("at least one part");
        *total += weight(depth) * product;
        return;
    }
    if depth == max_parts {
        return;
    }
    for part in 1..=remaining {
        let factor = &factors[part];
        if factor.is_zero() {
            continue;
        }
        let next = match stack.last() {
            Some(p) => p * factor,
            None => factor.clone(),
        };
        stack.push(next);
        walk(
            remaining - part,
            depth + 1,
            max_parts,
            weight,
            factors,
            stack,
            total,
        );
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn small_sets() {
        assert_eq!(
            compositions(3, 3).tuples(),
            &[vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]]
        );
        assert_eq!(
            compositions(4, 2).tuples(),
            &[vec![4], vec![1, 3], vec![2, 2], vec![3, 1]]
        );
        assert_eq!(
            compositions(5, 2).tuples(),
            &[vec![5], vec![1, 4], vec![2, 3], vec![3, 2], vec![4, 1]]
        );
    }

    #[test]
    fn full_set_has_two_to_the_n_minus_one() {
        for n in 1..=12 {
            assert_eq!(compositions(n, n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn every_tuple_is_a_composition() {
        let set = compositions(9, 4);
        for t in set.tuples() {
            assert!(!t.is_empty() && t.len() <= 4);
            assert!(t.iter().all(|&p| p >= 1));
            assert_eq!(t.iter().sum::<usize>(), 9);
        }
    }

    #[test]
    fn pruned_sum_matches_full_enumeration() {
        let factors: Vec<Rational> = [0, 0, 1, -2, 3, 0, 5, 1, -1, 2]
            .iter()
            .map(|&x| int(x))
            .collect();
        let weight = |k: usize| int(k as i64 * 3 - 1);
        for n in 1..=9 {
            for m in 1..=n {
                let full = compositions(n, m).weighted_sum(weight, |i| factors[i].clone());
                assert_eq!(
                    composition_sum(n, m, &weight, &factors),
                    full,
                    "n={n} m={m}"
                );
            }
        }
    }
}
