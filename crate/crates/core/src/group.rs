//! Group operations in terms of A- and Z-sequences, and the classical subgroups.
//!
//! For `D3 = D1·D2` the sequences of the product follow from those of the
//! factors without building either triangle:
//! `A3 = A2 · A1(t/A2)` and `Z3 = (1 − (t/A2)·Z2) · Z1(t/A2) + A1(t/A2) · Z2`.
//! For the inverse, with `h` the compositional inverse of `t/A`:
//! `A* = (1/A)∘h` and `Z* = (Z/(t·Z − A))∘h`.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::rational::{self, Rational};
use crate::riordan::{RiordanError, RiordanPair};
use crate::sequences::{self, BSeqVerdict, SeqError};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("{subgroup} membership needs a pair of order at least {needed}, got {found}")]
    OrderTooSmall {
        subgroup: SubgroupId,
        needed: usize,
        found: usize,
    },
    #[error("A(0) must be nonzero")]
    ZeroLeadingA,
    #[error("{0} does not have a type-I B-sequence")]
    NoTypeIB(&'static str),
}

fn t_over(a: &Series) -> Result<Series, GroupError> {
    if a.coeff(0).is_zero() {
        return Err(GroupError::ZeroLeadingA);
    }
    Ok(a.reciprocal()?.shift(1)?)
}

/// A-sequence of `D1·D2`.
pub fn product_a(a1: &Series, a2: &Series) -> Result<Series, GroupError> {
    let s = t_over(a2)?;
    let order = a1.valid_to().min(a2.valid_to());
    Ok((a2 * &a1.compose(&s)?).truncate(order))
}

/// Z-sequence of `D1·D2`.
pub fn product_z(a1: &Series, z1: &Series, a2: &Series, z2: &Series) -> Result<Series, GroupError> {
    let s = t_over(a2)?;
    let z1_s = z1.compose(&s)?;
    let a1_s = a1.compose(&s)?;
    let first = &(&Series::one(s.valid_to()) - &(&s * z2)) * &z1_s;
    let order = a1
        .valid_to()
        .min(a2.valid_to())
        .min(z1.valid_to())
        .min(z2.valid_to());
    Ok((&first + &(&a1_s * z2)).truncate(order))
}

/// A-sequence of the inverse.
pub fn inverse_a(a: &Series) -> Result<Series, GroupError> {
    let h = t_over(a)?.comp_inverse()?;
    Ok(a.reciprocal()?.compose(&h)?.truncate(a.valid_to()))
}

/// Z-sequence of the inverse.
pub fn inverse_z(a: &Series, z: &Series) -> Result<Series, GroupError> {
    let h = t_over(a)?.comp_inverse()?;
    let order = a.valid_to().min(z.valid_to());
    let tz = z.truncate(order).shift(1)?.truncate(order);
    let ratio = z.truncate(order).div(&(&tz - &a.truncate(order)))?;
    Ok(ratio.compose(&h)?.truncate(order))
}

/// Both sides of the product rule for type-I B-sequences.
///
/// Whenever `A = 1 + t·B(t²/A)`, the series `B(t²/A)` is `(A − 1)/t`, so `lhs`
/// is `(A3 − 1)/t` for the product's A-sequence `A3`. `rhs` is
/// `B2(t²/A2) + B1(t²/(A2 A3))/A2 + (t/A2)·B2(t²/A2)·B1(t²/(A2 A3))`.
///
/// The product need not have a type-I B-sequence of its own: only the
/// `R02` shape of the A-sequence survives multiplication. `product_b` holds
/// the product's verdict, and when it is positive `product_b_agrees` records
/// whether `B3(t²/A3)` reproduces `lhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductBCheck {
    pub lhs: Series,
    pub rhs: Series,
    /// Number of leading coefficients compared.
    pub compared: usize,
    pub holds: bool,
    pub product_b: BSeqVerdict,
    pub product_b_agrees: Option<bool>,
}

fn type1_b(a: &Series, which: &'static str) -> Result<Series, GroupError> {
    match sequences::type1_b_from_a(a)?.b_seq() {
        Some(b) => Ok(b.clone()),
        None => Err(GroupError::NoTypeIB(which)),
    }
}

/// Evaluates both sides of the product rule; both factors need type-I B-sequences.
pub fn product_b_identity_check(
    p1: &RiordanPair,
    p2: &RiordanPair,
) -> Result<ProductBCheck, GroupError> {
    let a1 = sequences::a_sequence(p1)?;
    let a2 = sequences::a_sequence(p2)?;
    let a3 = sequences::a_sequence(&p1.multiply(p2)?)?;
    let b1 = type1_b(&a1, "first factor")?;
    let b2 = type1_b(&a2, "second factor")?;

    let u2 = a2.reciprocal()?.shift(2)?;
    let u3 = a3.reciprocal()?.shift(2)?;
    let u23 = (&a2 * &a3).reciprocal()?.shift(2)?;
    let lhs = (&a3 - &Series::one(a3.valid_to())).shift(-1)?;
    let b2_u2 = b2.compose(&u2)?;
    let b1_u23 = b1.compose(&u23)?;
    let inv_a2 = a2.reciprocal()?;
    let t_inv_a2 = inv_a2.shift(1)?;
    let rhs = &(&b2_u2 + &(&inv_a2 * &b1_u23)) + &(&(&t_inv_a2 * &b2_u2) * &b1_u23);

    let product_b = sequences::type1_b_from_a(&a3)?;
    let product_b_agrees = match product_b.b_seq() {
        Some(b3) => Some(b3.compose(&u3)?.agrees_with(&lhs)),
        None => None,
    };
    let compared = lhs.valid_to().min(rhs.valid_to()) + 1;
    Ok(ProductBCheck {
        holds: lhs.agrees_with(&rhs),
        lhs,
        rhs,
        compared,
        product_b,
        product_b_agrees,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupId {
    Appell,
    Lagrange,
    Bell,
    HittingTime,
    Derivative,
    Checkerboard,
    /// A-sequence `(1, a1, 0, a3, …)`.
    R02,
    /// A-sequence `(1, a1, …)` with Z-sequence `(a1, 0, …)`.
    R111,
}

impl SubgroupId {
    pub const ALL: [SubgroupId; 8] = [
        SubgroupId::Appell,
        SubgroupId::Lagrange,
        SubgroupId::Bell,
        SubgroupId::HittingTime,
        SubgroupId::Derivative,
        SubgroupId::Checkerboard,
        SubgroupId::R02,
        SubgroupId::R111,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubgroupId::Appell => "appell",
            SubgroupId::Lagrange => "lagrange",
            SubgroupId::Bell => "bell",
            SubgroupId::HittingTime => "hitting-time",
            SubgroupId::Derivative => "derivative",
            SubgroupId::Checkerboard => "checkerboard",
            SubgroupId::R02 => "r02",
            SubgroupId::R111 => "r111",
        }
    }

    pub fn from_name(name: &str) -> Option<SubgroupId> {
        let key = name.to_ascii_lowercase().replace(['_', ' '], "-");
        let key = match key.as_str() {
            "r-0-2" | "r0,2" => "r02",
            "r-1-1-1" | "r1,1,1" => "r111",
            "hitting" | "hittingtime" => "hitting-time",
            other => other,
        }
        .to_string();
        SubgroupId::ALL.into_iter().find(|s| s.name() == key)
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// The defining condition holds through t^order of the pair.
    Member {
        order: usize,
    },
    NotMember {
        index: usize,
        reason: String,
    },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

fn compare(lhs: &Series, rhs: &Series, order: usize, reason: &str) -> Membership {
    match lhs.truncate(order).first_difference(&rhs.truncate(order)) {
        None => Membership::Member { order },
        Some(index) => Membership::NotMember {
            index,
            reason: reason.to_string(),
        },
    }
}

fn first_nonzero_from(s: &Series, start: usize) -> Option<usize> {
    (start..=s.valid_to()).find(|&j| !s.coeff(j).is_zero())
}

/// Decides membership on the known coefficients of `p`.
///
/// A negative answer names the first coefficient that breaks the defining
/// condition. R111 needs `g(0) = 1` since it is stated through the Z-sequence.
pub fn is_member(p: &RiordanPair, subgroup: SubgroupId) -> Result<Membership, GroupError> {
    let order = p.order();
    let (g, f) = (p.g().truncate(order), p.f().truncate(order));
    let result = match subgroup {
        SubgroupId::Appell => match first_nonzero_from(&(&f - &Series::t(order)), 0) {
            None => Membership::Member { order },
            Some(index) => Membership::NotMember {
                index,
                reason: "f ≠ t".to_string(),
            },
        },
        SubgroupId::Lagrange => match first_nonzero_from(&(&g - &Series::one(order)), 0) {
            None => Membership::Member { order },
            Some(index) => Membership::NotMember {
                index,
                reason: "g ≠ 1".to_string(),
            },
        },
        SubgroupId::Bell => compare(&f, &g.shift(1)?, order, "f ≠ t·g"),
        SubgroupId::HittingTime => {
            let tf_prime = f.derivative()?.shift(1)?;
            compare(&(&g * &f), &tf_prime, order, "g·f ≠ t·f'")
        }
        SubgroupId::Derivative => {
            if order < 2 {
                return Err(GroupError::OrderTooSmall {
                    subgroup,
                    needed: 2,
                    found: order,
                });
            }
            compare(&g, &f.derivative()?, order - 1, "g ≠ f'")
        }
        SubgroupId::Checkerboard => match (g.odd_part_witness(), f.even_part_witness()) {
            (None, None) => Membership::Member { order },
            (gw, fw) => {
                let g_first = gw.is_some() && (fw.is_none() || gw < fw);
                if g_first {
                    Membership::NotMember {
                        index: gw.unwrap_or_default(),
                        reason: "g is not even".to_string(),
                    }
                } else {
                    Membership::NotMember {
                        index: fw.unwrap_or_default(),
                        reason: "f is not odd".to_string(),
                    }
                }
            }
        },
        SubgroupId::R02 => {
            if order < 3 {
                return Err(GroupError::OrderTooSmall {
                    subgroup,
                    needed: 3,
                    found: order,
                });
            }
            let a = sequences::a_sequence(p)?;
            if !a.coeff(0).is_one() {
                Membership::NotMember {
                    index: 0,
                    reason: "a_0 ≠ 1".to_string(),
                }
            } else if !a.coeff(2).is_zero() {
                Membership::NotMember {
                    index: 2,
                    reason: "a_2 ≠ 0".to_string(),
                }
            } else {
                Membership::Member { order }
            }
        }
        SubgroupId::R111 => {
            if order < 2 {
                return Err(GroupError::OrderTooSmall {
                    subgroup,
                    needed: 2,
                    found: order,
                });
            }
            let a = sequences::a_sequence(p)?;
            let z = sequences::z_sequence(p)?;
            if !a.coeff(0).is_one() {
                Membership::NotMember {
                    index: 0,
                    reason: "a_0 ≠ 1".to_string(),
                }
            } else if a.coeff(1) != z.coeff(0) {
                Membership::NotMember {
                    index: 0,
                    reason: "z_0 ≠ a_1".to_string(),
                }
            } else if !z.coeff(1).is_zero() {
                Membership::NotMember {
                    index: 1,
                    reason: "z_1 ≠ 0".to_string(),
                }
            } else {
                Membership::Member { order }
            }
        }
    };
    Ok(result)
}

fn small(rng: &mut impl Rng) -> Rational {
    rational::int(rng.gen_range(-3..=3))
}

fn small_nonzero(rng: &mut impl Rng) -> Rational {
    let v = rng.gen_range(1..=3);
    rational::int(if rng.gen_bool(0.5) { v } else { -v })
}

/// Random series with the given leading coefficient and small integer tail.
fn random_series(
    rng: &mut impl Rng,
    valid_to: usize,
    lead: Rational,
    keep: impl Fn(usize) -> bool,
) -> Series {
    Series::from_fn(valid_to, |j| match j {
        0 => lead.clone(),
        j if keep(j) => small(rng),
        _ => Rational::zero(),
    })
}

/// Random `f` with `f(0) = 0`, `f'(0)` a small nonzero integer.
fn random_f(rng: &mut impl Rng, valid_to: usize, keep: impl Fn(usize) -> bool) -> Series {
    let f1 = small_nonzero(rng);
    Series::from_fn(valid_to, |j| match j {
        0 => Rational::zero(),
        1 => f1.clone(),
        j if keep(j) => small(rng),
        _ => Rational::zero(),
    })
}

/// A random element of `subgroup` known through t^order, with `g(0) = 1`
/// except in the derivative subgroup, where `g(0) = f'(0)`.
pub fn random_member(
    subgroup: SubgroupId,
    order: usize,
    rng: &mut impl Rng,
) -> Result<RiordanPair, GroupError> {
    if order < 3 {
        return Err(GroupError::OrderTooSmall {
            subgroup,
            needed: 3,
            found: order,
        });
    }
    let any = |_: usize| true;
    let pair = match subgroup {
        SubgroupId::Appell => RiordanPair::new(
            random_series(rng, order, Rational::one(), any),
            Series::t(order),
        )?,
        SubgroupId::Lagrange => RiordanPair::new(Series::one(order), random_f(rng, order, any))?,
        SubgroupId::Bell => {
            let g = random_series(rng, order, Rational::one(), any);
            let f = g.shift(1)?.truncate(order);
            RiordanPair::new(g, f)?
        }
        SubgroupId::HittingTime => {
            let f = random_f(rng, order + 1, any);
            let g = f.derivative()?.div(&f.shift(-1)?)?;
            RiordanPair::new(g.truncate(order), f.truncate(order))?
        }
        SubgroupId::Derivative => {
            let f = random_f(rng, order + 1, any);
            RiordanPair::new(f.derivative()?, f.truncate(order))?
        }
        SubgroupId::Checkerboard => RiordanPair::new(
            random_series(rng, order, Rational::one(), |j| j % 2 == 0),
            random_f(rng, order, |j| j % 2 == 1),
        )?,
        SubgroupId::R02 => {
            let a = random_series(rng, order - 1, Rational::one(), |j| j != 2);
            let z = Series::from_fn(order - 1, |_| small(rng));
            sequences::pair_from_a_z(&a, &z)?
        }
        SubgroupId::R111 => {
            let a = random_series(rng, order - 1, Rational::one(), any);
            let a1 = a.coeff(1).clone();
            let z = Series::from_fn(order - 1, |j| match j {
                0 => a1.clone(),
                1 => Rational::zero(),
                _ => small(rng),
            });
            sequences::pair_from_a_z(&a, &z)?
        }
    };
    Ok(pair)
}

/// [`random_member`] driven by a ChaCha8 stream, so a seed reproduces the pair.
pub fn random_member_seeded(
    subgroup: SubgroupId,
    order: usize,
    seed: u64,
) -> Result<RiordanPair, GroupError> {
    random_member(subgroup, order, &mut ChaCha8Rng::seed_from_u64(seed))
}
