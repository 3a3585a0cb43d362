//! Command output in plain or `key: value` form.

use std::fmt::Display;

use riordan::{RiordanPair, Series, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Structured,
}

/// Whether the command reached a positive or a negative mathematical answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    No,
}

/// What a command prints: free-form lines for people and fields for diffing.
#[derive(Debug)]
pub struct Report {
    lines: Vec<String>,
    fields: Vec<(String, String)>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            lines: Vec::new(),
            fields: vec![("command".to_string(), command.to_string())],
            verdict: Verdict::Ok,
        }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn negative(&mut self) -> &mut Self {
        self.verdict = Verdict::No;
        self
    }

    pub fn series(&mut self, key: &str, label: &str, s: &Series) -> &mut Self {
        self.line(format!("{label} = {}", compact(s)));
        self.field(key, s);
        self.field(format!("{key}.valid_to"), s.valid_to())
    }

    pub fn pair(&mut self, key: &str, p: &RiordanPair) -> &mut Self {
        self.line(p.to_string());
        self.field(format!("{key}.g"), p.g());
        self.field(format!("{key}.f"), p.f());
        self.field(format!("{key}.order"), p.order())
    }

    pub fn triangle(&mut self, t: &Triangle) -> &mut Self {
        self.line(t.to_string());
        self.field("rows", t.n_rows());
        for (n, row) in t.rows().iter().enumerate() {
            let text: Vec<String> = row.iter().map(ToString::to_string).collect();
            self.field(format!("row.{n}"), text.join(" "));
        }
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.lines.join("\n"),
            Format::Structured => self
                .fields
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

/// Coefficients joined by bare commas, e.g. `1,1,0,-1/2`.
pub fn compact(s: &Series) -> String {
    s.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
