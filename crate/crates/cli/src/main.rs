//! `riordan`: exact Riordan matrix computations from the command line.
//!
//! Exit status is 0 for a positive answer, 1 for a negative mathematical
//! verdict (the witness is printed) and 2 for unusable input.

mod report;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use riordan::group::{self, Membership, SubgroupId};
use riordan::sequences::{self, RecurrenceCheck, SeqError};
use riordan::{
    catalog, pascal, text, BSeqKind, BSeqOutcome, BSeqVerdict, RiordanPair, Series, Triangle,
};

use report::{compact, Format, Report, Verdict};

#[derive(Parser, Debug)]
#[command(name = "riordan", version, about = "Exact Riordan matrix calculations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation order: series are known through t^N
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u32).range(4..))]
    order: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the triangle of a pair
    Expand {
        #[command(flatten)]
        input: PairArgs,
        /// Number of rows (default: order + 1)
        #[arg(long)]
        rows: Option<usize>,
    },
    /// A-sequence of a pair or triangle
    Aseq {
        #[command(flatten)]
        input: PairArgs,
        #[command(flatten)]
        triangle: TriangleArg,
    },
    /// Z-sequence of a pair or triangle
    Zseq {
        #[command(flatten)]
        input: PairArgs,
        #[command(flatten)]
        triangle: TriangleArg,
    },
    /// Type-I or type-II B-sequence, or the first violated constraint
    Bseq {
        #[command(flatten)]
        input: PairArgs,
        #[command(flatten)]
        triangle: TriangleArg,
        #[command(flatten)]
        kind: KindArg,
    },
    /// Product of two pairs, each a catalog reference or a pair file
    Mul { left: String, right: String },
    /// Inverse of a pair
    Inv {
        #[command(flatten)]
        input: PairArgs,
    },
    /// Subgroup membership, or `pascal-like` structure
    Check {
        #[command(flatten)]
        input: PairArgs,
        /// appell, lagrange, bell, hitting-time, derivative, checkerboard, r02, r111 or pascal-like
        #[arg(long)]
        subgroup: String,
    },
    /// List catalog entries, or show one
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
    /// Check a B-sequence against the entries of a triangle
    Verify {
        #[command(flatten)]
        input: PairArgs,
        #[command(flatten)]
        triangle: TriangleArg,
        #[command(flatten)]
        kind: KindArg,
        /// Candidate sequence; solved from the triangle when omitted
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Rebuild a pair from its A- and Z-sequences and from its printed form
    Roundtrip {
        #[command(flatten)]
        input: PairArgs,
    },
}

#[derive(Args, Debug, Default)]
struct PairArgs {
    /// Catalog entry such as `pascal` or `gen_pascal(2)`
    #[arg(long)]
    name: Option<String>,
    /// File with `g:` and `f:` lines; `-` reads stdin
    #[arg(long)]
    pair: Option<PathBuf>,
    /// Coefficients of g, comma-separated (with --f)
    #[arg(long, requires = "f", allow_hyphen_values = true)]
    g: Option<String>,
    /// Coefficients of f, comma-separated (with --g)
    #[arg(long, requires = "g", allow_hyphen_values = true)]
    f: Option<String>,
    /// Random member of this subgroup (with --seed)
    #[arg(long, requires = "seed")]
    random: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug, Default)]
struct TriangleArg {
    /// File with one triangle row per line; `-` reads stdin
    #[arg(long)]
    triangle: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KindArg {
    /// 1 for type-I, 2 for type-II
    #[arg(long = "type", default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    kind: u8,
}

impl KindArg {
    fn kind(&self) -> BSeqKind {
        if self.kind == 1 {
            BSeqKind::TypeI
        } else {
            BSeqKind::TypeII
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        Ok(buf)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn parse_subgroup(name: &str) -> Result<SubgroupId> {
    SubgroupId::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = SubgroupId::ALL.iter().map(|s| s.name()).collect();
        anyhow!("unknown subgroup `{name}` (known: {})", known.join(", "))
    })
}

impl PairArgs {
    fn given(&self) -> usize {
        [
            self.name.is_some(),
            self.pair.is_some(),
            self.g.is_some(),
            self.random.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count()
    }

    fn resolve(&self, order: usize) -> Result<RiordanPair> {
        if self.given() != 1 {
            bail!("give exactly one of --name, --pair, --g/--f or --random");
        }
        if let Some(name) = &self.name {
            return Ok(catalog::lookup(name, order)?);
        }
        if let Some(path) = &self.pair {
            return text::parse_pair(&read_text(path)?).with_context(|| path.display().to_string());
        }
        if let (Some(g), Some(f)) = (&self.g, &self.f) {
            let g = text::parse_series(g).context("--g")?;
            let f = text::parse_series(f).context("--f")?;
            return Ok(RiordanPair::new(g, f)?);
        }
        let subgroup = parse_subgroup(self.random.as_deref().unwrap_or_default())?;
        let seed = self.seed.unwrap_or_default();
        Ok(group::random_member_seeded(subgroup, order, seed)?)
    }
}

/// Input that is either a pair or an explicit triangle.
enum Source {
    Pair(RiordanPair),
    Triangle(Triangle),
}

fn resolve_source(input: &PairArgs, triangle: &TriangleArg, order: usize) -> Result<Source> {
    match &triangle.triangle {
        Some(path) if input.given() == 0 => {
            let t = text::parse_triangle(&read_text(path)?)
                .with_context(|| path.display().to_string())?;
            Ok(Source::Triangle(t))
        }
        Some(_) => bail!("--triangle cannot be combined with a pair"),
        None => Ok(Source::Pair(input.resolve(order)?)),
    }
}

/// A catalog reference, or a pair file if a file of that name exists.
fn operand(text_or_path: &str, order: usize) -> Result<RiordanPair> {
    let path = Path::new(text_or_path);
    if path.is_file() {
        return text::parse_pair(&read_text(path)?).with_context(|| path.display().to_string());
    }
    Ok(catalog::lookup(text_or_path, order)?)
}

/// Triangles that are not Riordan arrays are a negative answer, not bad input.
fn not_riordan(report: &mut Report, err: SeqError) -> Result<()> {
    match err {
        SeqError::NotRiordan { n, k } => {
            report.line(format!("NOT RIORDAN at ({n},{k})"));
            report
                .field("verdict", "NOT RIORDAN")
                .field("witness", format!("({n},{k})"));
            report.negative();
            Ok(())
        }
        other => Err(other.into()),
    }
}

fn symbol(kind: BSeqKind) -> &'static str {
    match kind {
        BSeqKind::TypeI => "B",
        BSeqKind::TypeII => "B̂",
    }
}

fn b_verdict(report: &mut Report, v: &BSeqVerdict) {
    report.field("kind", v.kind);
    match &v.outcome {
        BSeqOutcome::Exists { order, b } => {
            report.line(format!("{} = {} ({v})", symbol(v.kind), compact(b)));
            report
                .field("verdict", "EXISTS")
                .field("order", order)
                .field("b", b);
        }
        BSeqOutcome::No { at, reason } => {
            report.line(format!("{}: {v} ({reason})", symbol(v.kind)));
            report
                .field("verdict", "NO")
                .field("witness", at)
                .field("reason", reason);
            report.negative();
        }
    }
}

fn membership(report: &mut Report, m: &Membership) {
    match m {
        Membership::Member { order } => {
            report.line(format!("MEMBER to order {order}"));
            report.field("verdict", "MEMBER").field("order", order);
        }
        Membership::NotMember { index, reason } => {
            report.line(format!("NOT MEMBER at index {index} ({reason})"));
            report
                .field("verdict", "NOT MEMBER")
                .field("witness", index)
                .field("reason", reason);
            report.negative();
        }
    }
}

/// Compares a formula result with direct extraction on their joint range.
fn formula_check(report: &mut Report, key: &str, formula: &Series, direct: &Series) {
    let joint = formula.valid_to().min(direct.valid_to());
    match formula.first_difference(direct) {
        None => {
            report.line(format!("{key} formula agrees to order {joint}"));
            report.field(format!("{key}.formula"), format!("agrees to order {joint}"));
        }
        Some(j) => {
            report.line(format!("{key} formula DISAGREES at index {j}"));
            report.field(format!("{key}.formula"), format!("disagrees at index {j}"));
            report.negative();
        }
    }
}

fn run(cli: Cli) -> Result<Report> {
    let order = cli.order as usize;
    let report = match cli.command {
        Command::Expand { input, rows } => {
            let p = input.resolve(order)?;
            let rows = rows.unwrap_or(p.order() + 1);
            let mut r = Report::new("expand");
            r.triangle(&p.expand(rows)?);
            r
        }
        Command::Aseq { input, triangle } => char_seq("aseq", &input, &triangle, order, true)?,
        Command::Zseq { input, triangle } => char_seq("zseq", &input, &triangle, order, false)?,
        Command::Bseq {
            input,
            triangle,
            kind,
        } => {
            let mut r = Report::new("bseq");
            let verdict = match resolve_source(&input, &triangle, order)? {
                Source::Pair(p) => match kind.kind() {
                    BSeqKind::TypeI => sequences::type1_b_from_f(p.f()),
                    BSeqKind::TypeII => sequences::type2_b(&p),
                },
                Source::Triangle(t) => sequences::b_from_triangle(&t, kind.kind()),
            };
            match verdict {
                Ok(v) => b_verdict(&mut r, &v),
                Err(e) => not_riordan(&mut r, e)?,
            }
            r
        }
        Command::Mul { left, right } => {
            let p = operand(&left, order)?;
            let q = operand(&right, order)?;
            let prod = p.multiply(&q)?;
            let mut r = Report::new("mul");
            r.pair("product", &prod);
            let a = sequences::a_sequence(&p)?;
            let b = sequences::a_sequence(&q)?;
            formula_check(
                &mut r,
                "A",
                &group::product_a(&a, &b)?,
                &sequences::a_sequence(&prod)?,
            );
            if p.is_normalized() && q.is_normalized() {
                let z = group::product_z(
                    &a,
                    &sequences::z_sequence(&p)?,
                    &b,
                    &sequences::z_sequence(&q)?,
                )?;
                formula_check(&mut r, "Z", &z, &sequences::z_sequence(&prod)?);
            }
            r
        }
        Command::Inv { input } => {
            let p = input.resolve(order)?;
            let inv = p.inverse()?;
            let mut r = Report::new("inv");
            r.pair("inverse", &inv);
            let a = sequences::a_sequence(&p)?;
            formula_check(
                &mut r,
                "A",
                &group::inverse_a(&a)?,
                &sequences::a_sequence(&inv)?,
            );
            if p.is_normalized() {
                let z = group::inverse_z(&a, &sequences::z_sequence(&p)?)?;
                formula_check(&mut r, "Z", &z, &sequences::z_sequence(&inv)?);
            }
            r
        }
        Command::Check { input, subgroup } => {
            let p = input.resolve(order)?;
            let mut r = Report::new("check");
            r.field("subgroup", &subgroup);
            if matches!(
                subgroup.to_ascii_lowercase().as_str(),
                "pascal-like" | "pascal_like"
            ) {
                pascal_check(&mut r, &p)?;
            } else {
                membership(&mut r, &group::is_member(&p, parse_subgroup(&subgroup)?)?);
            }
            r
        }
        Command::Catalog { name } => {
            let mut r = Report::new("catalog");
            match name {
                None => {
                    for e in catalog::ENTRIES {
                        r.line(e.to_string());
                        r.field(format!("entry.{}", e.name), e.formula);
                    }
                }
                Some(reference) => {
                    let (base, _) = catalog::parse_reference(&reference)?;
                    let entry = catalog::entry(&base)
                        .ok_or_else(|| anyhow!("unknown catalog entry `{base}`"))?;
                    r.line(entry.to_string());
                    r.field("name", entry.name).field("formula", entry.formula);
                    r.pair("pair", &catalog::lookup(&reference, order)?);
                }
            }
            r
        }
        Command::Verify {
            input,
            triangle,
            kind,
            b,
        } => {
            let t = match resolve_source(&input, &triangle, order)? {
                Source::Pair(p) => p.expand(p.order() + 1)?,
                Source::Triangle(t) => t,
            };
            let mut r = Report::new("verify");
            r.field("kind", kind.kind());
            match b {
                Some(b) => {
                    let b = text::parse_series(&b).context("--b")?;
                    match sequences::verify_b_recurrence(&t, &b, kind.kind()) {
                        RecurrenceCheck::Verified { depth } => {
                            r.line(format!("VERIFIED to depth {depth}"));
                            r.field("verdict", "VERIFIED").field("depth", depth);
                        }
                        RecurrenceCheck::Failed { n, k } => {
                            r.line(format!("FAILED at ({n},{k})"));
                            r.field("verdict", "FAILED")
                                .field("witness", format!("({n},{k})"));
                            r.negative();
                        }
                    }
                }
                None => match sequences::b_from_triangle(&t, kind.kind()) {
                    Ok(v) => b_verdict(&mut r, &v),
                    Err(e) => not_riordan(&mut r, e)?,
                },
            }
            r
        }
        Command::Roundtrip { input } => {
            let p = input.resolve(order)?;
            let a = sequences::a_sequence(&p)?;
            let z = sequences::z_sequence(&p)?;
            let rebuilt = sequences::pair_from_a_z(&a, &z)?;
            let mut r = Report::new("roundtrip");
            r.series("a", "A", &a).series("z", "Z", &z);
            match rebuilt
                .g()
                .first_difference(p.g())
                .or(rebuilt.f().first_difference(p.f()))
            {
                None => {
                    r.line(format!("ROUNDTRIP OK to order {}", rebuilt.order()));
                    r.field("sequences", format!("ok to order {}", rebuilt.order()));
                }
                Some(j) => {
                    r.line(format!("ROUNDTRIP MISMATCH at index {j}"));
                    r.field("sequences", format!("mismatch at index {j}"));
                    r.negative();
                }
            }
            let reparsed = text::parse_pair(&p.to_string())?;
            if reparsed == p {
                r.line("TEXT ROUNDTRIP OK");
                r.field("text", "ok");
            } else {
                r.line("TEXT ROUNDTRIP MISMATCH");
                r.field("text", "mismatch");
                r.negative();
            }
            r
        }
    };
    Ok(report)
}

fn char_seq(
    command: &str,
    input: &PairArgs,
    triangle: &TriangleArg,
    order: usize,
    want_a: bool,
) -> Result<Report> {
    let mut r = Report::new(command);
    let (key, label) = if want_a { ("a", "A") } else { ("z", "Z") };
    match resolve_source(input, triangle, order)? {
        Source::Pair(p) => {
            let s = if want_a {
                sequences::a_sequence(&p)?
            } else {
                sequences::z_sequence(&p)?
            };
            r.series(key, label, &s);
        }
        Source::Triangle(t) => match sequences::a_z_from_triangle(&t) {
            Ok(rep) => {
                r.series(key, label, if want_a { &rep.a_seq } else { &rep.z_seq });
                r.field("certified_to", rep.certified_to);
            }
            Err(e) => not_riordan(&mut r, e)?,
        },
    }
    Ok(r)
}

fn pascal_check(r: &mut Report, p: &RiordanPair) -> Result<()> {
    let t = p.expand(p.order() + 1)?;
    let report = match pascal::pascal_like_a_constraints(&t) {
        Ok(report) => report,
        Err(pascal::PascalError::NotPascalLike { n, k }) => {
            r.line(format!("NOT PASCAL-LIKE at ({n},{k})"));
            r.field("verdict", "NOT PASCAL-LIKE")
                .field("witness", format!("({n},{k})"));
            r.negative();
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    let a1 = report.a_seq.coeff(1).clone();
    r.series("a", "A", &report.a_seq);
    r.field("a1", &a1);
    let mut checks = vec![
        (
            "a2 = a1(1 - a1)",
            report
                .a2_identity
                .then_some(())
                .ok_or_else(|| "fails".to_string()),
        ),
        (
            "sub-diagonal law",
            report
                .subdiagonal_failure
                .map_or(Ok(()), |n| Err(format!("fails at row {n}"))),
        ),
        (
            "A recursion",
            report
                .recursion_failure
                .map_or(Ok(()), |k| Err(format!("fails at a_{k}"))),
        ),
    ];
    checks.push((
        "a2 divides a_j",
        match report.divisibility {
            pascal::Divisibility::Holds => Ok(()),
            pascal::Divisibility::Fails { index } => Err(format!("fails at a_{index}")),
            pascal::Divisibility::NotApplicable => Err("not applicable".to_string()),
        },
    ));
    for (label, outcome) in &checks {
        match outcome {
            Ok(()) => r.line(format!("{label}: holds")).field(*label, "holds"),
            Err(why) => r.line(format!("{label}: {why}")).field(*label, why),
        };
    }
    if report.all_hold() {
        r.line(format!("PASCAL-LIKE to depth {}", t.n_rows() - 1));
        r.field("verdict", "PASCAL-LIKE");
    } else {
        r.field("verdict", "CONSTRAINT FAILED");
        r.negative();
    }
    let b = pascal::classify_pascal_like_b(p)?;
    b_verdict_summary(r, &b.type1);
    b_verdict_summary(r, &b.type2);
    Ok(())
}

/// One-line B verdict that does not change the exit status.
fn b_verdict_summary(r: &mut Report, v: &BSeqVerdict) {
    let text = match &v.outcome {
        BSeqOutcome::Exists { b, .. } => format!("{} = {} ({v})", symbol(v.kind), compact(b)),
        BSeqOutcome::No { reason, .. } => format!("{}: {v} ({reason})", symbol(v.kind)),
    };
    r.line(text.clone());
    r.field(format!("{}", v.kind), text);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            println!("{}", report.render(format));
            match report.verdict {
                Verdict::Ok => ExitCode::SUCCESS,
                Verdict::No => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
