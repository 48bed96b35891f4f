use std::io::{self, Write};

use hypvol_core::exact::decimal::{mag_to_scientific, to_scientific, Rounding};
use hypvol_core::{Ball, PiScaled, Rational};
use serde::Serialize;

use crate::args::Format;

/// One output record. Text, JSON and CSV are all rendered from these, so the
/// three formats carry identical numbers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub dimension: Option<u32>,
    pub quantity: String,
    pub midpoint: Option<String>,
    pub radius: Option<String>,
    pub exact_numerator: Option<String>,
    pub exact_denominator: Option<String>,
    pub verdict: Option<String>,
    pub display: String,
}

/// Significant digits for midpoints. Midpoints are rounded half-to-even; the
/// radius says how far they can be trusted.
#[derive(Clone, Copy, Debug)]
pub struct Style {
    pub digits: usize,
}

impl Row {
    pub fn note(dimension: Option<u32>, quantity: impl Into<String>, display: impl Into<String>) -> Row {
        Row {
            dimension,
            quantity: quantity.into(),
            midpoint: None,
            radius: None,
            exact_numerator: None,
            exact_denominator: None,
            verdict: None,
            display: display.into(),
        }
    }

    pub fn exact(dimension: Option<u32>, quantity: impl Into<String>, q: &Rational, style: Style) -> Row {
        Row {
            midpoint: Some(to_scientific(q, style.digits, Rounding::HalfEven)),
            radius: Some("0".into()),
            exact_numerator: Some(q.numer().to_string()),
            exact_denominator: Some(q.denom().to_string()),
            display: q.to_string(),
            ..Row::note(dimension, quantity, "")
        }
    }

    pub fn ball(dimension: Option<u32>, quantity: impl Into<String>, b: &Ball, style: Style) -> Row {
        let mid = to_scientific(&b.mid_rational(), style.digits, Rounding::HalfEven);
        let rad = mag_to_scientific(&b.radius());
        Row {
            display: format!("{mid} +/- {rad}"),
            midpoint: Some(mid),
            radius: Some(rad),
            ..Row::note(dimension, quantity, "")
        }
    }

    pub fn pi_scaled(
        dimension: Option<u32>,
        quantity: impl Into<String>,
        x: &PiScaled,
        prec: u32,
        style: Style,
    ) -> Row {
        let b = x.eval(prec);
        let c = x.coefficient();
        Row {
            exact_numerator: Some(c.numer().to_string()),
            exact_denominator: Some(c.denom().to_string()),
            display: x.to_string(),
            ..Row::ball(dimension, quantity, &b, style)
        }
    }

    pub fn with_display(mut self, display: impl Into<String>) -> Row {
        self.display = display.into();
        self
    }

    pub fn with_verdict(mut self, verdict: impl Into<String>) -> Row {
        self.verdict = Some(verdict.into());
        self
    }
}

/// Text layout: a two-column table, or a list of labelled values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    Table { header: &'static str },
    List,
}

pub fn render(rows: &[Row], format: Format, layout: Layout, out: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            if rows.is_empty() {
                w.write_record([
                    "dimension",
                    "quantity",
                    "midpoint",
                    "radius",
                    "exact_numerator",
                    "exact_denominator",
                    "verdict",
                    "display",
                ])?;
            }
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()
        }
        Format::Text => match layout {
            Layout::Table { header } => {
                writeln!(out, "{:>2} | {header}", "n")?;
                for row in rows {
                    writeln!(out, "{:>2} | {}", row.dimension.unwrap_or_default(), row.display)?;
                }
                Ok(())
            }
            Layout::List => {
                for row in rows {
                    let n = row.dimension.map(|n| format!("n={n}")).unwrap_or_default();
                    let verdict = row.verdict.as_deref().map(|v| format!("  [{v}]")).unwrap_or_default();
                    writeln!(out, "{n:<5} {:<44} {}{verdict}", row.quantity, row.display)?;
                }
                Ok(())
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const STYLE: Style = Style { digits: 5 };

    #[test]
    fn exact_rows_carry_both_parts() {
        let row = Row::exact(Some(4), "chi", &Rational::frac(1, 30), STYLE);
        assert_eq!(row.exact_numerator.as_deref(), Some("1"));
        assert_eq!(row.exact_denominator.as_deref(), Some("30"));
        assert_eq!(row.midpoint.as_deref(), Some("3.3333e-2"));
        assert_eq!(row.display, "1/30");
    }

    #[test]
    fn csv_has_header() {
        let rows = vec![Row::note(Some(30), "method", "DENOMINATOR")];
        let mut buf = Vec::new();
        render(&rows, Format::Csv, Layout::List, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "dimension,quantity,midpoint,radius,exact_numerator,exact_denominator,verdict,display"
        );
        assert_eq!(lines.next().unwrap(), "30,method,,,,,,DENOMINATOR");
    }

    #[test]
    fn json_keys_are_stable() {
        let rows = vec![Row::exact(None, "x", &Rational::from(3), STYLE)];
        let mut buf = Vec::new();
        render(&rows, Format::Json, Layout::List, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let keys: Vec<&str> = v[0].as_object().unwrap().keys().map(String::as_str).collect();
        for k in [
            "dimension",
            "quantity",
            "midpoint",
            "radius",
            "exact_numerator",
            "exact_denominator",
            "verdict",
        ] {
            assert!(keys.contains(&k), "{k}");
        }
    }
}
