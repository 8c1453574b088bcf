use std::io::{self, Write};

use serde_json::{json, Map, Value};

/// Digits kept in text mode.
pub const TEXT_DIGITS: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    JsonLines,
    Csv,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "text" => Some(Self::Text),
            "json-lines" | "jsonl" => Some(Self::JsonLines),
            "csv" => Some(Self::Csv),
            _ => None,
        }
    }
}

/// `%g`-style rendering with `digits` significant digits, trailing zeros
/// stripped and negative zero printed as `0`.
pub fn fmt_g(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let p = digits.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Shortest representation that round-trips, `-0` normalised.
pub fn fmt_exact(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x}")
    }
}

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn render(&self, fmt: OutputFormat) -> String {
        match self {
            Cell::Num(x) if fmt == OutputFormat::Text => fmt_g(*x, TEXT_DIGITS),
            Cell::Num(x) => fmt_exact(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => json!(x),
            Cell::Int(n) => json!(n),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
        }
    }
}

/// Writes results in the selected format.
pub struct Emitter<'w, W: Write> {
    pub format: OutputFormat,
    out: &'w mut W,
}

impl<'w, W: Write> Emitter<'w, W> {
    pub fn new(format: OutputFormat, out: &'w mut W) -> Self {
        Self { format, out }
    }

    /// One numeric value (a hypercomplex number) per line.
    pub fn values(&mut self, op: &str, form: &str, values: &[Vec<f64>]) -> io::Result<()> {
        for (i, v) in values.iter().enumerate() {
            match self.format {
                OutputFormat::Text => writeln!(self.out, "{}", join(v.iter().map(|x| fmt_g(*x, TEXT_DIGITS))))?,
                OutputFormat::Csv => writeln!(self.out, "{}", join(v.iter().map(|x| fmt_exact(*x))))?,
                OutputFormat::JsonLines => {
                    let mut obj = json!({ "op": op, "form": form, "value": v });
                    if values.len() > 1 {
                        obj["index"] = json!(i);
                    }
                    writeln!(self.out, "{obj}")?;
                }
            }
        }
        Ok(())
    }

    pub fn table(&mut self, headers: &[&str], rows: &[Vec<Cell>]) -> io::Result<()> {
        match self.format {
            OutputFormat::JsonLines => {
                for row in rows {
                    let obj: Map<String, Value> =
                        headers.iter().zip(row).map(|(h, c)| (h.to_string(), c.json())).collect();
                    writeln!(self.out, "{}", Value::Object(obj))?;
                }
            }
            OutputFormat::Csv => {
                writeln!(self.out, "{}", headers.join(","))?;
                for row in rows {
                    writeln!(self.out, "{}", join(row.iter().map(|c| c.render(OutputFormat::Csv))))?;
                }
            }
            OutputFormat::Text => {
                let cells: Vec<Vec<String>> =
                    rows.iter().map(|r| r.iter().map(|c| c.render(OutputFormat::Text)).collect()).collect();
                // Text columns read better left-aligned, numbers right-aligned.
                let left: Vec<bool> = (0..headers.len())
                    .map(|i| rows.first().is_some_and(|r| matches!(r.get(i), Some(Cell::Text(_)))))
                    .collect();
                let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
                for r in &cells {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |items: Vec<String>| {
                    let padded: Vec<String> = items
                        .iter()
                        .zip(&widths)
                        .zip(&left)
                        .map(|((s, w), l)| if *l { format!("{s:<w$}") } else { format!("{s:>w$}") })
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                writeln!(self.out, "{}", line(headers.iter().map(|h| h.to_string()).collect()))?;
                for r in cells {
                    writeln!(self.out, "{}", line(r))?;
                }
            }
        }
        Ok(())
    }

    /// Free-form trailing line; only emitted in text mode.
    pub fn note(&mut self, text: &str) -> io::Result<()> {
        if self.format == OutputFormat::Text {
            writeln!(self.out, "{text}")?;
        }
        Ok(())
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join(",")
}
