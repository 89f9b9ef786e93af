//! Plain-text instance and assignment formats.
//!
//! Vector instance:
//!
//! ```text
//! n m d            (or `n m d hetero`)
//! p_00 p_01 ...    n lines of d numbers
//! ```
//!
//! A heterogeneous instance lists `n·m` lines instead, vector-major then
//! partition. A GLB instance starts with `jobs machines` followed by
//! `jobs·machines` lines of `machines` entries, each a number or `inf`, ordered
//! job-major then chosen machine. Assignments are one index per line.
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::glb::{GlbCost, GlbInstance};
use crate::vs::VsInstance;

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(token: &str, what: &str, line: usize) -> Result<usize> {
    let v: usize = token.parse().map_err(|_| {
        Error::parse(
            line,
            format!("{what} must be a nonnegative integer, got {token:?}"),
        )
    })?;
    if v == 0 {
        return Err(Error::parse(line, format!("{what} must be at least 1")));
    }
    Ok(v)
}

fn parse_row(line_text: &str, expected: usize, line: usize) -> Result<Vec<f64>> {
    let row = line_text
        .split_whitespace()
        .map(|t| {
            let v: f64 = t
                .parse()
                .map_err(|_| Error::parse(line, format!("not a number: {t:?}")))?;
            if !v.is_finite() || v < 0.0 {
                return Err(Error::parse(
                    line,
                    format!("cost {t} is not finite and nonnegative"),
                ));
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    if row.len() != expected {
        return Err(Error::parse(
            line,
            format!("expected {expected} values, found {}", row.len()),
        ));
    }
    Ok(row)
}

pub fn parse_vs_instance(text: &str) -> Result<VsInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `n m d`"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let heterogeneous = match tokens.as_slice() {
        [_, _, _] => false,
        [_, _, _, "hetero"] => true,
        _ => {
            return Err(Error::parse(
                hline,
                format!("header must be `n m d` or `n m d hetero`, got {header:?}"),
            ))
        }
    };
    let n = parse_count(tokens[0], "n", hline)?;
    let m = parse_count(tokens[1], "m", hline)?;
    let d = parse_count(tokens[2], "d", hline)?;
    let rows = if heterogeneous { n * m } else { n };
    let mut costs = Vec::with_capacity(rows * d);
    let mut last_line = hline;
    for r in 0..rows {
        let (line, body) = lines.next().ok_or_else(|| {
            Error::parse(
                last_line + 1,
                format!("expected {rows} cost rows, found {r}"),
            )
        })?;
        costs.extend(parse_row(body, d, line)?);
        last_line = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(
            line,
            "unexpected content after the last cost row",
        ));
    }
    if heterogeneous {
        VsInstance::heterogeneous_from_flat(n, m, d, costs)
    } else {
        VsInstance::from_flat(n, m, d, costs)
    }
}

pub fn write_vs_instance(inst: &VsInstance) -> String {
    let mut out = String::new();
    let (n, m, d) = (inst.n(), inst.m(), inst.d());
    if inst.is_heterogeneous() {
        writeln!(out, "{n} {m} {d} hetero").unwrap();
    } else {
        writeln!(out, "{n} {m} {d}").unwrap();
    }
    for row in inst.raw_costs().chunks(d) {
        write_row(&mut out, row.iter().map(|v| v.to_string()));
    }
    out
}

fn write_row(out: &mut String, items: impl Iterator<Item = String>) {
    let mut first = true;
    for item in items {
        if !first {
            out.push(' ');
        }
        out.push_str(&item);
        first = false;
    }
    out.push('\n');
}

pub fn parse_glb_instance(text: &str) -> Result<GlbInstance> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `jobs machines`"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::parse(
            hline,
            format!("header must be `jobs machines`, got {header:?}"),
        ));
    }
    let jobs = parse_count(tokens[0], "jobs", hline)?;
    let machines = parse_count(tokens[1], "machines", hline)?;
    let rows = jobs * machines;
    let mut cost = Vec::with_capacity(rows * machines);
    let mut last_line = hline;
    for r in 0..rows {
        let (line, body) = lines.next().ok_or_else(|| {
            Error::parse(
                last_line + 1,
                format!("expected {rows} cost rows, found {r}"),
            )
        })?;
        let before = cost.len();
        for t in body.split_whitespace() {
            let c = if t.eq_ignore_ascii_case("inf") {
                GlbCost::Infinite
            } else {
                let v: f64 = t
                    .parse()
                    .map_err(|_| Error::parse(line, format!("not a cost: {t:?}")))?;
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::parse(
                        line,
                        format!("cost {t} must be nonnegative and finite, or `inf`"),
                    ));
                }
                GlbCost::Finite(v)
            };
            cost.push(c);
        }
        if cost.len() - before != machines {
            return Err(Error::parse(
                line,
                format!("expected {machines} values, found {}", cost.len() - before),
            ));
        }
        last_line = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(
            line,
            "unexpected content after the last cost row",
        ));
    }
    GlbInstance::new(jobs, machines, cost)
}

pub fn write_glb_instance(inst: &GlbInstance) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", inst.jobs(), inst.machines()).unwrap();
    for row in inst.raw_costs().chunks(inst.machines()) {
        write_row(&mut out, row.iter().map(|c| c.to_string()));
    }
    out
}

/// Reads one index per line.
pub fn parse_assignment(text: &str) -> Result<Vec<usize>> {
    content_lines(text)
        .map(|(line, body)| {
            body.parse::<usize>()
                .map_err(|_| Error::parse(line, format!("not an index: {body:?}")))
        })
        .collect()
}

pub fn write_assignment(targets: &[usize]) -> String {
    let mut out = String::new();
    for t in targets {
        writeln!(out, "{t}").unwrap();
    }
    out
}
