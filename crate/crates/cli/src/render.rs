//! Output rendering for the CLI.

use std::io::{self, Write};

use clap::ValueEnum;
use oscpoly::moments::Gram;
use oscpoly::quadrature::QuadRule;
use oscpoly::{MomentValue, ToJson, VerifyReport, XPoly};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Pretty,
    Json,
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

pub fn write_poly(out: &mut impl Write, p: &XPoly, format: Format) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", p.to_json()),
        Format::Pretty => writeln!(out, "{p}"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["power", "coefficient"]).map_err(csv_err)?;
            for (k, c) in p.coeffs().iter().enumerate() {
                w.write_record([k.to_string(), c.to_string()])
                    .map_err(csv_err)?;
            }
            w.flush()
        }
    }
}

fn moment_cell(v: &MomentValue) -> String {
    format!("{};{};{}", v.one, v.sqrt_pi, v.gamma_g_half)
}

pub fn write_matrix(out: &mut impl Write, m: &Gram, format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            let rows: Vec<Value> = m.iter().map(|row| row.to_json()).collect();
            writeln!(out, "{}", Value::Array(rows))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in m {
                w.write_record(row.iter().map(moment_cell))
                    .map_err(csv_err)?;
            }
            w.flush()
        }
        Format::Pretty => {
            for (i, row) in m.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        writeln!(out, "[{i},{j}] {v}")?;
                    }
                }
            }
            Ok(())
        }
    }
}

pub fn write_reports(
    out: &mut impl Write,
    group: &str,
    reports: &[VerifyReport],
    format: ReportFormat,
) -> io::Result<()> {
    for r in reports {
        match format {
            ReportFormat::Json => {
                let line = serde_json::to_string(r).map_err(io::Error::other)?;
                writeln!(out, "{line}")?;
            }
            ReportFormat::Pretty => {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {group} {} {:?}", r.identity, r.indices)?;
                if !r.pass {
                    writeln!(out, "    expected: {}", r.expected)?;
                    writeln!(out, "    got:      {}", r.got)?;
                }
            }
        }
    }
    Ok(())
}

pub fn write_totals(
    out: &mut impl Write,
    total: usize,
    failed: usize,
    format: ReportFormat,
) -> io::Result<()> {
    let passed = total - failed;
    match format {
        ReportFormat::Json => writeln!(
            out,
            "{}",
            json!({"total": total, "passed": passed, "failed": failed})
        ),
        ReportFormat::Pretty => writeln!(out, "total {total} passed {passed} failed {failed}"),
    }
}

pub fn write_rule(out: &mut impl Write, rule: &QuadRule, dump: bool) -> io::Result<()> {
    if dump {
        let pairs: Vec<Value> = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(x, w)| json!([x, w]))
            .collect();
        return writeln!(out, "{}", Value::Array(pairs));
    }
    writeln!(
        out,
        "{:?} order {} exact through degree {}",
        rule.kind,
        rule.order(),
        rule.exact_degree()
    )?;
    for (i, (x, w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        writeln!(out, "{i:>4} {x:>24.17e} {w:>24.17e}")?;
    }
    Ok(())
}
