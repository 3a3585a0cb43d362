//! Plain-text formats for series, pairs and triangles.
//!
//! - series: comma-separated rationals on one line, `1, -2, 1/3`
//! - pair: two labelled series lines, `g: 1, 1, 1` and `f: 0, 1, 1`
//! - triangle: one row per line, entries separated by whitespace or commas
//!
//! Blank lines and lines starting with `#` are ignored. Serialization is the
//! `Display` form of each type, which this module parses back exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::rational::Rational;
use crate::riordan::{RiordanPair, Triangle};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MalformedRational(String),
    ZeroDenominator,
    RaggedRow { expected: usize, found: usize },
    MissingLabel(&'static str),
    DuplicateLabel(&'static str),
    UnexpectedLine,
    Empty,
    NotProper(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MalformedRational(tok) => write!(f, "malformed rational `{tok}`"),
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator"),
            ParseErrorKind::RaggedRow { expected, found } => {
                write!(f, "row has {found} entries, expected {expected}")
            }
            ParseErrorKind::MissingLabel(label) => write!(f, "missing `{label}:` line"),
            ParseErrorKind::DuplicateLabel(label) => write!(f, "`{label}:` given twice"),
            ParseErrorKind::UnexpectedLine => f.write_str("expected a `g:` or `f:` line"),
            ParseErrorKind::Empty => f.write_str("no data"),
            ParseErrorKind::NotProper(why) => write!(f, "{why}"),
        }
    }
}

/// Parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

/// Parses `-3`, `+2` or `7/12`.
pub fn parse_rational(token: &str) -> Result<Rational, ParseErrorKind> {
    let malformed = || ParseErrorKind::MalformedRational(token.to_string());
    let int = |s: &str| -> Result<BigInt, ParseErrorKind> {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        s.parse::<BigInt>().map_err(|_| malformed())
    };
    match token.split_once('/') {
        None => Ok(Rational::from_integer(int(token)?)),
        Some((num, den)) => {
            let num = int(num)?;
            if den.starts_with(['+', '-']) {
                return Err(malformed());
            }
            let den = int(den)?;
            if den.is_zero() {
                return Err(ParseErrorKind::ZeroDenominator);
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Meaningful lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let trimmed = l.trim();
        (!trimmed.is_empty() && !trimmed.starts_with('#')).then_some((i + 1, l))
    })
}

/// Tokens split on whitespace and `split`, with 1-based character columns shifted by `offset`.
fn tokens(line: &str, offset: usize, split: impl Fn(char) -> bool) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let mut start_col = 0;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        if split(ch) || ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((start_col, &line[s..byte]));
            }
        } else if start.is_none() {
            start = Some(byte);
            start_col = offset + col + 1;
        }
    }
    if let Some(s) = start {
        out.push((start_col, &line[s..]));
    }
    out
}

fn parse_values(
    line_no: usize,
    line: &str,
    offset: usize,
    comma_only: bool,
) -> Result<Vec<Rational>, ParseError> {
    if comma_only {
        // Empty fields between commas are errors, so walk fields rather than tokens.
        let mut values = Vec::new();
        let mut col = offset + 1;
        for field in line.split(',') {
            let lead = field.chars().take_while(|c| c.is_whitespace()).count();
            let tok = field.trim();
            let tok_col = col + lead;
            if tok.contains(char::is_whitespace) || tok.is_empty() {
                return Err(ParseError::at(
                    line_no,
                    tok_col,
                    ParseErrorKind::MalformedRational(tok.to_string()),
                ));
            }
            values.push(parse_rational(tok).map_err(|k| ParseError::at(line_no, tok_col, k))?);
            col += field.chars().count() + 1;
        }
        Ok(values)
    } else {
        tokens(line, offset, |c| c == ',')
            .into_iter()
            .map(|(col, tok)| parse_rational(tok).map_err(|k| ParseError::at(line_no, col, k)))
            .collect()
    }
}

/// Parses a series from its single content line.
pub fn parse_series(text: &str) -> Result<Series, ParseError> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines
        .next()
        .ok_or(ParseError::at(1, 1, ParseErrorKind::Empty))?;
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::at(extra, 1, ParseErrorKind::UnexpectedLine));
    }
    Ok(Series::from_coeffs(parse_values(line_no, line, 0, true)?))
}

/// Parses `g:` and `f:` lines, in either order.
pub fn parse_pair(text: &str) -> Result<RiordanPair, ParseError> {
    let mut g: Option<Series> = None;
    let mut f: Option<Series> = None;
    let mut first_line = 1;
    for (idx, (line_no, line)) in content_lines(text).enumerate() {
        if idx == 0 {
            first_line = line_no;
        }
        let lead = line.chars().take_while(|c| c.is_whitespace()).count();
        let body = line.trim_start();
        let (name, rest, slot) = if let Some(rest) = body.strip_prefix("g:") {
            ("g", rest, &mut g)
        } else if let Some(rest) = body.strip_prefix("f:") {
            ("f", rest, &mut f)
        } else {
            return Err(ParseError::at(
                line_no,
                lead + 1,
                ParseErrorKind::UnexpectedLine,
            ));
        };
        if slot.is_some() {
            return Err(ParseError::at(
                line_no,
                lead + 1,
                ParseErrorKind::DuplicateLabel(name),
            ));
        }
        *slot = Some(Series::from_coeffs(parse_values(
            line_no,
            rest,
            lead + 2,
            true,
        )?));
    }
    let g = g.ok_or(ParseError::at(
        first_line,
        1,
        ParseErrorKind::MissingLabel("g"),
    ))?;
    let f = f.ok_or(ParseError::at(
        first_line,
        1,
        ParseErrorKind::MissingLabel("f"),
    ))?;
    RiordanPair::new(g, f)
        .map_err(|e| ParseError::at(first_line, 1, ParseErrorKind::NotProper(e.to_string())))
}

/// Parses one row per line; row n must have n+1 entries.
pub fn parse_triangle(text: &str) -> Result<Triangle, ParseError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let row = parse_values(line_no, line, 0, false)?;
        let expected = rows.len() + 1;
        if row.len() != expected {
            return Err(ParseError::at(
                line_no,
                1,
                ParseErrorKind::RaggedRow {
                    expected,
                    found: row.len(),
                },
            ));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::at(1, 1, ParseErrorKind::Empty));
    }
    Ok(Triangle::new(rows).expect("row lengths checked while parsing"))
}

/// Any of the three kinds of input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Series(Series),
    Pair(RiordanPair),
    Triangle(Triangle),
}

/// Detects the format: labelled lines make a pair, a single line a series,
/// anything else a triangle.
pub fn parse_input(text: &str) -> Result<Value, ParseError> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let labelled = lines.iter().any(|(_, l)| {
        let l = l.trim_start();
        l.starts_with("g:") || l.starts_with("f:")
    });
    if labelled {
        parse_pair(text).map(Value::Pair)
    } else if lines.len() == 1 {
        parse_series(text).map(Value::Series)
    } else {
        parse_triangle(text).map(Value::Triangle)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Series(s) => write!(f, "{s}"),
            Value::Pair(p) => write!(f, "{p}"),
            Value::Triangle(t) => write!(f, "{t}"),
        }
    }
}
