//! Named Riordan pairs, including the RNA secondary-structure family.
//!
//! The RNA generating function `g` solves `(1 − t + t²)·g = 1 + t²·g²` with
//! `g(0) = 1`, i.e. `g = (1 − t + t² − √(1 − 2t − t² − 2t³ + t⁴)) / (2t²)`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{self, Rational};
use crate::riordan::{RiordanError, RiordanPair, Triangle};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{name}`; valid names: {}", names().join(", "))]
    UnknownName { name: String },
    #[error("`{name}` takes {expected} parameter(s), got {found}")]
    WrongParams {
        name: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("malformed catalog reference `{0}`")]
    Malformed(String),
    #[error("closed form and defining equation disagree for {name} at t^{index}")]
    RoutesDisagree { name: &'static str, index: usize },
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub description: &'static str,
    pub formula: &'static str,
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.is_empty() {
            write!(f, "{}", self.name)?;
        } else {
            write!(f, "{}({})", self.name, self.params.join(", "))?;
        }
        write!(f, "\n  {}\n  {}", self.description, self.formula)
    }
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "identity",
        params: &[],
        description: "the identity matrix",
        formula: "(1, t)",
    },
    CatalogEntry {
        name: "negation_M",
        params: &[],
        description: "diagonal matrix of alternating signs, an involution",
        formula: "(1, -t)",
    },
    CatalogEntry {
        name: "pascal",
        params: &[],
        description: "Pascal's triangle of binomial coefficients",
        formula: "(1/(1-t), t/(1-t))",
    },
    CatalogEntry {
        name: "gen_pascal",
        params: &["k"],
        description: "generalized Pascal matrix with entries C(n,k) k^(n-k)",
        formula: "(1/(1-kt), t/(1-kt))",
    },
    CatalogEntry {
        name: "rna_R",
        params: &[],
        description: "RNA type matrix conjugate to the RNA matrix by (1/(1-t), t)",
        formula: "((1-t)g/(1-tg), tg), g = (1-t+t^2-sqrt(1-2t-t^2-2t^3+t^4))/(2t^2)",
    },
    CatalogEntry {
        name: "rna_Rstar",
        params: &[],
        description: "RNA matrix; first column counts secondary structures",
        formula: "(g, tg), g = (1-t+t^2-sqrt(1-2t-t^2-2t^3+t^4))/(2t^2)",
    },
    CatalogEntry {
        name: "rna_Rstarstar",
        params: &[],
        description: "RNA type matrix with the secondary-structure counts shifted",
        formula: "((g-1)/t, tg), g = (1-t+t^2-sqrt(1-2t-t^2-2t^3+t^4))/(2t^2)",
    },
    CatalogEntry {
        name: "catalan_C0",
        params: &[],
        description: "aerated Catalan matrix",
        formula: "(C(t^2), tC(t^2)), C = (1-sqrt(1-4t))/(2t)",
    },
    CatalogEntry {
        name: "appell_A0",
        params: &[],
        description: "partial-sum Appell matrix",
        formula: "(1/(1-t), t)",
    },
    CatalogEntry {
        name: "ex31_a",
        params: &[],
        description:
            "pair with distinct type-I and type-II B-sequences (1,0,0,...) and (2,0,0,...)",
        formula: "(1/(1-2t), t/(1-t))",
    },
    CatalogEntry {
        name: "ex31_b",
        params: &[],
        description:
            "pair with distinct type-I and type-II B-sequences (1,1,0,...) and (2,1,0,...)",
        formula: "(1/(1-2t-t^2 f), f), f = (1-t-sqrt(1-2t+t^2-4t^3))/(2t^2)",
    },
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Splits `gen_pascal(2)` or `gen_pascal(1/2)` into name and parameters.
pub fn parse_reference(text: &str) -> Result<(String, Vec<Rational>), CatalogError> {
    let text = text.trim();
    let Some(open) = text.find('(') else {
        return Ok((text.to_string(), Vec::new()));
    };
    let inner = text[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| CatalogError::Malformed(text.to_string()))?;
    let params = inner
        .split(',')
        .map(|p| p.trim().parse::<Rational>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CatalogError::Malformed(text.to_string()))?;
    Ok((text[..open].trim().to_string(), params))
}

/// RNA generating function through t^order, from the quadratic recurrence
/// `g_n = [n = 0] + g_{n−1} − g_{n−2} + Σ_{i=0}^{n−2} g_i g_{n−2−i}`.
pub fn rna_g_quadratic(order: usize) -> Series {
    let mut g: Vec<Rational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut next = if n == 0 {
            Rational::one()
        } else {
            Rational::zero()
        };
        if n >= 1 {
            next += &g[n - 1];
        }
        if n >= 2 {
            next -= &g[n - 2];
            for i in 0..=n - 2 {
                next += &g[i] * &g[n - 2 - i];
            }
        }
        g.push(next);
    }
    Series::from_coeffs(g)
}

/// RNA generating function through t^order, from its closed form.
pub fn rna_g_closed_form(order: usize) -> Result<Series, CatalogError> {
    let n = order + 2;
    let root = pad(&Series::from_ints(&[1, -2, -1, -2, 1]), n).sqrt_one()?;
    let numerator = &pad(&Series::from_ints(&[1, -1, 1]), n) - &root;
    Ok(numerator
        .shift(-2)?
        .scale(&rational::frac(1, 2))
        .truncate(order))
}

fn pad(s: &Series, valid_to: usize) -> Series {
    Series::from_fn(valid_to, |j| {
        s.get(j).cloned().unwrap_or_else(Rational::zero)
    })
}

/// RNA generating function, built by both routes and checked for agreement.
pub fn rna_g(order: usize) -> Result<Series, CatalogError> {
    let quadratic = rna_g_quadratic(order);
    let closed = rna_g_closed_form(order)?;
    if let Some(index) = quadratic.first_difference(&closed) {
        return Err(CatalogError::RoutesDisagree {
            name: "rna_g",
            index,
        });
    }
    Ok(quadratic)
}

/// `C(t²)` with `C` the Catalan generating function.
fn aerated_catalan(order: usize) -> Result<Series, CatalogError> {
    let n = order + 2;
    let root = pad(&Series::from_ints(&[1, 0, -4]), n).sqrt_one()?;
    Ok((&Series::one(n) - &root)
        .shift(-2)?
        .scale(&rational::frac(1, 2))
        .truncate(order))
}

/// `f` with `f = t + t·f + t²·f²`, from its closed form and cross-checked
/// against the fixed point of the quadratic.
pub fn ex31_b_f(order: usize) -> Result<Series, CatalogError> {
    let n = order + 2;
    let root = pad(&Series::from_ints(&[1, -2, 1, -4]), n).sqrt_one()?;
    let closed = (&pad(&Series::from_ints(&[1, -1]), n) - &root)
        .shift(-2)?
        .scale(&rational::frac(1, 2))
        .truncate(order);

    let t = Series::t(order);
    let mut f = Series::zero(order);
    for _ in 0..=order {
        let tf = &t * &f;
        f = &(&t + &tf) + &(&tf * &tf);
    }
    if let Some(index) = closed.first_difference(&f) {
        return Err(CatalogError::RoutesDisagree {
            name: "ex31_b",
            index,
        });
    }
    Ok(closed)
}

fn expect_params(
    name: &'static str,
    params: &[Rational],
    expected: usize,
) -> Result<(), CatalogError> {
    if params.len() != expected {
        return Err(CatalogError::WrongParams {
            name,
            expected,
            found: params.len(),
        });
    }
    Ok(())
}

/// The named pair known through t^order.
pub fn named_pair(
    name: &str,
    params: &[Rational],
    order: usize,
) -> Result<RiordanPair, CatalogError> {
    let entry = entry(name).ok_or_else(|| CatalogError::UnknownName {
        name: name.to_string(),
    })?;
    expect_params(entry.name, params, entry.params.len())?;
    let one = Rational::one();
    let t = Series::t(order);
    let pair = match entry.name {
        "identity" => RiordanPair::identity(order),
        "negation_M" => RiordanPair::new(Series::one(order), t.scale(&-one))?,
        "pascal" => gen_pascal(&one, order)?,
        "gen_pascal" => gen_pascal(&params[0], order)?,
        "rna_R" => {
            let g = rna_g(order)?;
            let tg = g.shift(1)?.truncate(order);
            let one_minus_t = &Series::one(order) - &t;
            let d = (&one_minus_t * &g).div(&(&Series::one(order) - &tg))?;
            RiordanPair::new(d, tg)?
        }
        "rna_Rstar" => {
            let g = rna_g(order)?;
            let tg = g.shift(1)?.truncate(order);
            RiordanPair::new(g, tg)?
        }
        "rna_Rstarstar" => {
            let g = rna_g(order + 1)?;
            let d = (&g - &Series::one(order + 1)).shift(-1)?;
            let tg = g.shift(1)?.truncate(order);
            RiordanPair::new(d, tg)?
        }
        "catalan_C0" => {
            let c = aerated_catalan(order)?;
            let f = c.shift(1)?.truncate(order);
            RiordanPair::new(c, f)?
        }
        "appell_A0" => RiordanPair::new(Series::geometric(&one, order), t)?,
        "ex31_a" => {
            let f = Series::geometric(&one, order).shift(1)?.truncate(order);
            RiordanPair::new(Series::geometric(&rational::int(2), order), f)?
        }
        "ex31_b" => {
            let f = ex31_b_f(order)?;
            let t2f = f.shift(2)?.truncate(order);
            let denom = &(&Series::one(order) - &t.scale(&rational::int(2))) - &t2f;
            RiordanPair::new(denom.reciprocal()?, f)?
        }
        _ => unreachable!("every catalog entry has a constructor"),
    };
    Ok(pair)
}

/// Resolves a reference such as `pascal` or `gen_pascal(3)`.
pub fn lookup(reference: &str, order: usize) -> Result<RiordanPair, CatalogError> {
    let (name, params) = parse_reference(reference)?;
    named_pair(&name, &params, order)
}

fn gen_pascal(k: &Rational, order: usize) -> Result<RiordanPair, CatalogError> {
    let g = Series::geometric(k, order);
    let f = g.shift(1)?.truncate(order);
    Ok(RiordanPair::new(g, f)?)
}

/// Result of checking the two first-column laws of `rna_Rstarstar`:
/// `d_{n+1,0} = d_{n,0} + d_{n,1}` and `d_{n,1} = d_{n−1,0} + Σ_{k=0}^{n−2} d_{k,0} d_{n−2−k,0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstColumnReport {
    pub depth: usize,
    pub triangle: Triangle,
    /// First row where the column-0 recurrence fails.
    pub recurrence_failure: Option<usize>,
    /// First row where the convolution for column 1 fails.
    pub convolution_failure: Option<usize>,
}

impl FirstColumnReport {
    pub fn holds(&self) -> bool {
        self.recurrence_failure.is_none() && self.convolution_failure.is_none()
    }
}

pub fn rna_first_column_law(depth: usize) -> Result<FirstColumnReport, CatalogError> {
    let triangle = named_pair("rna_Rstarstar", &[], depth)?.expand(depth + 1)?;
    let d = |n: usize, k: usize| triangle.entry(n, k);
    let recurrence_failure = (0..depth)
        .find(|&n| d(n + 1, 0) != d(n, 0) + d(n, 1))
        .map(|n| n + 1);
    let convolution_failure = (1..=depth).find(|&n| {
        let mut rhs = d(n - 1, 0);
        for k in 0..n.saturating_sub(1) {
            rhs += d(k, 0) * d(n - 2 - k, 0);
        }
        rhs != d(n, 1)
    });
    Ok(FirstColumnReport {
        depth,
        triangle,
        recurrence_failure,
        convolution_failure,
    })
}
