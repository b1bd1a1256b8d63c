//! Deterministic CSV/JSON rendering of reports and GDOF tables.

use std::io::{self, Write};

use serde::Serialize;

use crate::gap::RateReport;
use crate::gdof::GdofPoint;

/// Round to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// 12 significant digits, printed as the shorter of plain decimal and
/// scientific notation (plain on ties).
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let r = round12(x);
    let plain = format!("{r}");
    let sci = format!("{r:e}");
    if sci.len() < plain.len() {
        sci
    } else {
        plain
    }
}

pub const SWEEP_HEADER: &str = "P,a,c12,regime,scheme,achievable_bits,upper_bits,bound_label,gap_bits";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    #[serde(rename = "P")]
    pub p: f64,
    pub a: f64,
    pub c12: f64,
    pub regime: String,
    pub scheme: String,
    pub achievable_bits: f64,
    pub upper_bits: f64,
    pub bound_label: String,
    pub gap_bits: f64,
}

impl From<&RateReport> for SweepRow {
    fn from(r: &RateReport) -> Self {
        SweepRow {
            p: round12(r.params.p()),
            a: round12(r.params.a()),
            c12: round12(r.params.c12()),
            regime: r.regime.to_string(),
            scheme: r.scheme.to_string(),
            achievable_bits: round12(r.achievable),
            upper_bits: round12(r.upper),
            bound_label: r.bound_label.to_string(),
            gap_bits: round12(r.gap),
        }
    }
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            fmt_num(self.p),
            fmt_num(self.a),
            fmt_num(self.c12),
            self.regime,
            self.scheme,
            fmt_num(self.achievable_bits),
            fmt_num(self.upper_bits),
            self.bound_label,
            fmt_num(self.gap_bits)
        )
    }
}

pub fn write_sweep_csv<W: Write>(out: &mut W, reports: &[RateReport]) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for r in reports {
        writeln!(out, "{}", SweepRow::from(r).csv_line())?;
    }
    Ok(())
}

pub fn write_sweep_json<W: Write>(out: &mut W, reports: &[RateReport]) -> io::Result<()> {
    let rows: Vec<SweepRow> = reports.iter().map(SweepRow::from).collect();
    serde_json::to_writer_pretty(&mut *out, &rows)?;
    writeln!(out)
}

/// Header for a GDOF table; the numeric columns appear only when a power
/// was given.
pub fn gdof_header(numeric: bool) -> &'static str {
    if numeric {
        "alpha,beta,d_formula,d_numeric_ach,d_numeric_ub"
    } else {
        "alpha,beta,d_formula"
    }
}

pub fn write_gdof_csv<W: Write>(out: &mut W, points: &[GdofPoint], numeric: bool) -> io::Result<()> {
    writeln!(out, "{}", gdof_header(numeric))?;
    for p in points {
        let mut line = format!("{},{},{}", fmt_num(p.alpha), fmt_num(p.beta), fmt_num(p.d_formula));
        if numeric {
            let opt = |v: Option<f64>| v.map(fmt_num).unwrap_or_default();
            line.push_str(&format!(",{},{}", opt(p.d_numeric), opt(p.d_numeric_ub)));
        }
        writeln!(out, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(0.1), "0.1");
        assert_eq!(fmt_num(1e6), "1e6");
        assert_eq!(fmt_num(250.0), "250");
        assert_eq!(fmt_num(1e-20), "1e-20");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_num(2.0f64.sqrt() * 1e30), "1.41421356237e30");
        assert_eq!(fmt_num(f64::NAN), "nan");
    }

    proptest! {
        #[test]
        fn formatted_value_is_12_digit_rounding(x in -1e12f64..1e12) {
            let back: f64 = fmt_num(x).parse().unwrap();
            let rel = if x == 0.0 { back.abs() } else { ((back - x) / x).abs() };
            prop_assert!(rel <= 5e-12);
            prop_assert_eq!(fmt_num(back), fmt_num(x));
        }
    }
}
