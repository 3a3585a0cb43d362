//! Cross-checks between independent B-sequence computations.
//!
//! Each function returns the agreed verdict or a description of the first
//! disagreement.

use riordan::rational::pow;
use riordan::sequences::{self, RecurrenceCheck};
use riordan::{BSeqKind, BSeqOutcome, BSeqVerdict, RiordanPair, Witness};

fn describe(v: &BSeqVerdict) -> String {
    match &v.outcome {
        BSeqOutcome::Exists { order, b } => format!("exists to {order}: {b}"),
        BSeqOutcome::No { at, reason } => format!("no at {at} ({reason})"),
    }
}

/// Type-I B from the functional equation, from the A-sequence sums and from
/// the f sums. A-coefficient j corresponds to f-coefficient j+1.
pub fn type1_routes(p: &RiordanPair) -> Result<BSeqVerdict, String> {
    let a = sequences::a_sequence(p).map_err(|e| e.to_string())?;
    let functional = sequences::type1_b_functional(&a).map_err(|e| e.to_string())?;
    let from_a = sequences::type1_b_from_a(&a).map_err(|e| e.to_string())?;
    let from_f = sequences::type1_b_from_f(p.f()).map_err(|e| e.to_string())?;
    if functional != from_a {
        return Err(format!(
            "functional {} vs A sums {}",
            describe(&functional),
            describe(&from_a)
        ));
    }
    let consistent = match (&from_a.outcome, &from_f.outcome) {
        (BSeqOutcome::Exists { b: x, .. }, BSeqOutcome::Exists { b: y, .. }) => x == y,
        (
            BSeqOutcome::No {
                at: Witness::Coefficient(i),
                ..
            },
            BSeqOutcome::No {
                at: Witness::Coefficient(j),
                ..
            },
        ) => i + 1 == *j,
        _ => false,
    };
    if !consistent {
        return Err(format!(
            "A sums {} vs f sums {}",
            describe(&from_a),
            describe(&from_f)
        ));
    }
    Ok(from_f)
}

/// Type-II B̂ from `Z = B̂(t f̄)` against the explicit sums, plus the closed
/// low-order identities `b̂0 = z0`, `b̂1 = f1 z2`, `b̂2 = f1² (z4 − b̂1 f̄3)`.
pub fn type2_routes(p: &RiordanPair) -> Result<BSeqVerdict, String> {
    let z = sequences::z_sequence(p).map_err(|e| e.to_string())?;
    let f_bar = p.f().comp_inverse().map_err(|e| e.to_string())?;
    let functional = sequences::type2_b_functional(&z, &f_bar).map_err(|e| e.to_string())?;
    let sums = sequences::type2_b_from_z_sums(&z, &f_bar).map_err(|e| e.to_string())?;
    if functional != sums {
        return Err(format!(
            "functional {} vs sums {}",
            describe(&functional),
            describe(&sums)
        ));
    }
    if let Some(b) = functional.b_seq() {
        let f1 = p.f().coeff(1);
        if b.coeff(0) != z.coeff(0) {
            return Err("b̂0 ≠ z0".into());
        }
        if b.valid_to() >= 1 && *b.coeff(1) != f1 * z.coeff(2) {
            return Err("b̂1 ≠ f1 z2".into());
        }
        if b.valid_to() >= 2
            && *b.coeff(2) != pow(f1, 2) * (z.coeff(4) - b.coeff(1) * f_bar.coeff(3))
        {
            return Err("b̂2 ≠ f1² (z4 − b̂1 f̄3)".into());
        }
    }
    let packaged = sequences::type2_b(p).map_err(|e| e.to_string())?;
    if packaged != functional {
        return Err("type2_b differs from its own routes".into());
    }
    Ok(functional)
}

/// Triangle row where a series-level failure shows up entry by entry.
fn failing_row(kind: BSeqKind, index: usize) -> usize {
    match kind {
        BSeqKind::TypeI => index,
        BSeqKind::TypeII => index + 1,
    }
}

/// Compares a series-level verdict with the entry-level recurrence on the
/// expanded triangle of `p`.
pub fn entry_level_agrees(p: &RiordanPair, verdict: &BSeqVerdict) -> Result<(), String> {
    let rows = p.order() + 1;
    let t = p.expand(rows).map_err(|e| e.to_string())?;
    let from_entries = sequences::b_from_triangle(&t, verdict.kind).map_err(|e| e.to_string())?;
    match &verdict.outcome {
        BSeqOutcome::Exists { b, .. } => {
            match sequences::verify_b_recurrence(&t, b, verdict.kind) {
                RecurrenceCheck::Verified { depth } if depth == rows - 1 => {}
                other => return Err(format!("{} recurrence check: {other:?}", verdict.kind)),
            }
            match from_entries.b_seq() {
                Some(e) if e.agrees_with(b) => Ok(()),
                _ => Err(format!(
                    "entry-level solve gave {}",
                    describe(&from_entries)
                )),
            }
        }
        BSeqOutcome::No {
            at: Witness::Coefficient(j),
            ..
        } => match from_entries.witness() {
            Some(Witness::Entry { n, .. }) if *n == failing_row(verdict.kind, *j) => Ok(()),
            _ => Err(format!(
                "series NO at {j}, entry level: {}",
                describe(&from_entries)
            )),
        },
        BSeqOutcome::No { at, .. } => Err(format!("unexpected witness {at}")),
    }
}
