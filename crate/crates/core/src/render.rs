//! Text renderings of polynomials, coefficient tables and verification reports.
//!
//! Machine formats (JSON, CSV) carry numbers as exact `numerator/denominator` strings,
//! or bare integers when the denominator is 1.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::Rational;
use crate::coeffs::{CoeffTable, Reconciliation};
use crate::poly::Poly;
use crate::report::VerifyReport;
use crate::series::TSeries;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
    Latex,
}

fn coeff_strings(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_owned()];
    }
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn csv_row(p: &Poly) -> String {
    coeff_strings(p).join(",")
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Ascending LaTeX polynomial body, e.g. `-\frac{1}{2} + \frac{3}{2}x^{2}`.
pub fn latex_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let coef = if k > 0 && magnitude.is_one() {
            String::new()
        } else {
            latex_rational(&magnitude)
        };
        match k {
            0 => out.push_str(&coef),
            1 => write!(out, "{coef}x").unwrap(),
            _ => write!(out, "{coef}x^{{{k}}}").unwrap(),
        }
    }
    out
}

#[derive(Serialize)]
struct PolyJson<'a> {
    n: usize,
    method: &'a str,
    coefficients: Vec<String>,
}

/// `p_n(x)` coefficients, ascending.
pub fn render_poly(n: usize, method: &str, p: &Poly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!("{p}\n"),
        OutputFormat::Csv => format!("{}\n", csv_row(p)),
        OutputFormat::Json => {
            let doc = PolyJson {
                n,
                method,
                coefficients: coeff_strings(p),
            };
            format!("{}\n", serde_json::to_string(&doc).expect("serializable"))
        }
        OutputFormat::Latex => format!("\\[ p_{{{n}}}(x) = {} \\]\n", latex_poly(p)),
    }
}

fn join_ints(row: &[BigInt], sep: &str) -> String {
    row.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Serialize)]
struct TableJson<'a> {
    #[serde(rename = "N_max")]
    n_max: usize,
    rows: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reconciliation: Option<&'a Reconciliation>,
}

/// One row per `N`; the reconciliation section, when given, follows the table.
pub fn render_table(
    table: &CoeffTable,
    reconciliation: Option<&Reconciliation>,
    format: OutputFormat,
) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for row in table.rows() {
                writeln!(out, "{}", join_ints(row, " ")).unwrap();
            }
            if let Some(rec) = reconciliation {
                writeln!(
                    out,
                    "closed-form reconciliation: {} entries checked, {} mismatches",
                    rec.checked,
                    rec.mismatches.len()
                )
                .unwrap();
                for m in &rec.mismatches {
                    writeln!(
                        out,
                        "  {} a_{}({}): recurrence {} closed form {}",
                        m.form.name(),
                        m.i,
                        m.n,
                        m.recurrence,
                        m.closed_form
                    )
                    .unwrap();
                }
            }
        }
        OutputFormat::Csv => {
            for row in table.rows() {
                writeln!(out, "{}", join_ints(row, ",")).unwrap();
            }
            if let Some(rec) = reconciliation {
                out.push('\n');
                out.push_str("form,i,N,recurrence,closed_form\n");
                for m in &rec.mismatches {
                    writeln!(
                        out,
                        "{},{},{},{},{}",
                        m.form.name(),
                        m.i,
                        m.n,
                        m.recurrence,
                        m.closed_form
                    )
                    .unwrap();
                }
            }
        }
        OutputFormat::Json => {
            let doc = TableJson {
                n_max: table.n_max(),
                rows: table
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect(),
                reconciliation,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&doc).expect("serializable")
            )
            .unwrap();
        }
        OutputFormat::Latex => {
            let cols = table.n_max();
            writeln!(out, "\\begin{{array}}{{r|{}}}", "r".repeat(cols)).unwrap();
            let header: Vec<String> = (1..=cols).map(|i| format!("a_{{{i}}}")).collect();
            writeln!(out, "N & {} \\\\ \\hline", header.join(" & ")).unwrap();
            for (idx, row) in table.rows().iter().enumerate() {
                let mut cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                cells.resize(cols, String::new());
                writeln!(out, "{} & {} \\\\", idx + 1, cells.join(" & ")).unwrap();
            }
            out.push_str("\\end{array}\n");
            if let Some(rec) = reconciliation {
                writeln!(
                    out,
                    "% closed-form reconciliation: {} checked, {} mismatches",
                    rec.checked,
                    rec.mismatches.len()
                )
                .unwrap();
                for m in &rec.mismatches {
                    writeln!(
                        out,
                        "% {} a_{}({}): recurrence {} closed form {}",
                        m.form.name(),
                        m.i,
                        m.n,
                        m.recurrence,
                        m.closed_form
                    )
                    .unwrap();
                }
            }
        }
    }
    out
}

#[derive(Serialize)]
struct HigherJson {
    alpha: u32,
    order: usize,
    rows: Vec<Vec<String>>,
}

/// Rows `p_0^{(alpha)}, ..., p_order^{(alpha)}`.
pub fn render_higher(alpha: u32, series: &TSeries, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for (n, p) in series.coeffs().iter().enumerate() {
                writeln!(out, "{n}: {p}").unwrap();
            }
        }
        OutputFormat::Csv => {
            for p in series.coeffs() {
                writeln!(out, "{}", csv_row(p)).unwrap();
            }
        }
        OutputFormat::Json => {
            let doc = HigherJson {
                alpha,
                order: series.order(),
                rows: series.coeffs().iter().map(coeff_strings).collect(),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&doc).expect("serializable")
            )
            .unwrap();
        }
        OutputFormat::Latex => {
            out.push_str("\\begin{align*}\n");
            for (n, p) in series.coeffs().iter().enumerate() {
                writeln!(out, "p_{{{n}}}^{{({alpha})}}(x) &= {} \\\\", latex_poly(p)).unwrap();
            }
            out.push_str("\\end{align*}\n");
        }
    }
    out
}

/// JSON Lines: one canonical object per report.
pub fn reports_to_json_lines(reports: &[VerifyReport]) -> String {
    reports
        .iter()
        .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
        .collect()
}

pub fn render_reports(reports: &[VerifyReport], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Json => return reports_to_json_lines(reports),
        OutputFormat::Plain => {
            for r in reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                write!(out, "{status} {} {}", r.identity_id, r.params_label(" ")).unwrap();
                if let Some(f) = &r.first_failure {
                    write!(
                        out,
                        " first failure at t^{} x^{}: lhs {} rhs {}",
                        f.t_power, f.x_power, f.lhs, f.rhs
                    )
                    .unwrap();
                }
                out.push('\n');
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(
                out,
                "{} reports, {} passed, {} failed",
                reports.len(),
                passed,
                reports.len() - passed
            )
            .unwrap();
        }
        OutputFormat::Csv => {
            out.push_str("identity_id,params,passed,t_power,x_power,lhs,rhs\n");
            for r in reports {
                write!(
                    out,
                    "{},{},{}",
                    r.identity_id,
                    r.params_label(";"),
                    r.passed
                )
                .unwrap();
                match &r.first_failure {
                    Some(f) => writeln!(out, ",{},{},{},{}", f.t_power, f.x_power, f.lhs, f.rhs),
                    None => writeln!(out, ",,,,"),
                }
                .unwrap();
            }
        }
        OutputFormat::Latex => {
            out.push_str("\\begin{tabular}{llc}\n");
            out.push_str("identity & parameters & result \\\\ \\hline\n");
            for r in reports {
                let status = if r.passed { "\\checkmark" } else { "$\\times$" };
                writeln!(
                    out,
                    "\\verb|{}| & ${}$ & {} \\\\",
                    r.identity_id,
                    r.params_label(",\\ "),
                    status
                )
                .unwrap();
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}
