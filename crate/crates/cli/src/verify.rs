use apoly_core::apolynomial::{count_via_elements, enumerate_a_polynomials};
use apoly_core::charsums::verify_kloosterman_identity;
use apoly_core::counting::{
    bound_check, corrected_bound_check, count_formula, existence, inert_count_c, lucas_s,
    niederreiter_rhs, place_count_b,
};
use apoly_core::curve::{degree_place_count, rational_places};
use apoly_core::ResourceCap;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::report::Report;
use crate::CliError;

/// (r, n) with r*n <= max_rn, or with r fixed and n <= max_n.
fn cells(r: Option<u32>, max_n: Option<u32>, max_rn: u32) -> Vec<(u32, u32)> {
    match r {
        Some(r) => (1..=max_n.unwrap_or(max_rn / r.max(1)))
            .map(|n| (r, n))
            .collect(),
        None => (1..=max_rn)
            .flat_map(|r| (1..=(max_rn / r).min(max_n.unwrap_or(u32::MAX))).map(move |n| (r, n)))
            .collect(),
    }
}

fn grid(max_r: u32, max_n: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=max_r).flat_map(move |r| (1..=max_n).map(move |n| (r, n)))
}

pub fn identity(max_t: u64) -> Result<Report, CliError> {
    let mut report = Report::verification("identity").param("max_t", max_t);
    for t in 1..=max_t {
        let (lhs, rhs) = (niederreiter_rhs(t)?, lucas_s(t));
        if lhs != rhs {
            report
                .failures
                .push(format!("t={t}: binomial sum {lhs}, recurrence {rhs}"));
        }
    }
    report.value = Some(max_t.to_string());
    report.method = Some("formula");
    Ok(report.judge())
}

pub fn existence_suite(max_r: u32, max_n: u32) -> Result<Report, CliError> {
    let mut report = Report::verification("existence")
        .param("max_r", max_r)
        .param("max_n", max_n);
    let mut exceptions = Vec::new();
    for (r, n) in grid(max_r, max_n) {
        let exists = existence(r, n)?;
        if !exists {
            exceptions.push(format!("({r},{n})"));
        }
        if exists != ((r, n) != (1, 3)) {
            report.failures.push(format!(
                "(r,n)=({r},{n}): A_r(n) = {}",
                count_formula(r, n)?
            ));
        }
    }
    report.value = Some((max_r as u64 * max_n as u64).to_string());
    report.values = Some(json!({ "exceptions": exceptions }));
    report.method = Some("formula");
    Ok(report.judge())
}

pub fn inert(max_r: u32, max_n: u32) -> Result<Report, CliError> {
    let mut report = Report::verification("inert")
        .param("max_r", max_r)
        .param("max_n", max_n);
    for (r, n) in grid(max_r, max_n) {
        let (c, a) = (inert_count_c(r, n)?, count_formula(r, n)?);
        if c != &a * 2 {
            report
                .failures
                .push(format!("(r,n)=({r},{n}): C {c}, A {a}"));
        }
    }
    report.value = Some((max_r as u64 * max_n as u64).to_string());
    report.method = Some("formula");
    Ok(report.judge())
}

pub fn bound(max_r: u32, max_n: u32) -> Result<Report, CliError> {
    let mut report = Report::verification("bound")
        .param("max_r", max_r)
        .param("max_n", max_n);
    let mut corrected_failures = 0u64;
    for (r, n) in grid(max_r, max_n) {
        let b = bound_check(r, n)?;
        if !b.holds {
            report.failures.push(format!(
                "(r,n)=({r},{n}): |4n A - q^n|/4n = {}/{} ~ {:e} > {:e}",
                b.lhs_numerator, b.denominator, b.lhs_approx, b.rhs_approx
            ));
        }
        if !corrected_bound_check(r, n)?.holds {
            corrected_failures += 1;
        }
    }
    report.value = Some((max_r as u64 * max_n as u64).to_string());
    report.values = Some(json!({ "corrected_bound_failures": corrected_failures.to_string() }));
    report.method = Some("formula");
    Ok(report.judge())
}

pub fn kloosterman(
    r: Option<u32>,
    max_n: Option<u32>,
    max_rn: u32,
    max_chars: Option<usize>,
    cap: ResourceCap,
) -> Result<Report, CliError> {
    let mut report = Report::verification("kloosterman").param("max_rn", max_rn);
    if let Some(r) = r {
        report = report.param("r", r);
    }
    if let Some(n) = max_n {
        report = report.param("max_n", n);
    }
    if let Some(k) = max_chars {
        report = report.param("max_chars", k);
    }
    let mut rows = Vec::new();
    for (r, n) in cells(r, max_n, max_rn) {
        let cell = verify_kloosterman_identity(r, n, cap, max_chars)?;
        let failing: Vec<_> = cell.failures().collect();
        if let Some(first) = failing.first() {
            report.failures.push(format!(
                "(r,n)=({r},{n}): {} of {} characters, first c={}: average {}, stated {}",
                failing.len(),
                cell.characters.len(),
                first.twist,
                first.lhs,
                cell.rhs
            ));
        }
        let mut averages: Vec<&BigInt> = cell.characters.iter().map(|c| &c.lhs).collect();
        averages.sort();
        averages.dedup();
        rows.push(json!({
            "r": r.to_string(),
            "n": n.to_string(),
            "stated": cell.rhs.to_string(),
            "averages": averages.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "characters": cell.characters.len().to_string(),
            "exhaustive": cell.exhaustive,
            "trace_one_units": cell.r_count.to_string(),
            "trace_one_units_from_counts": cell.r_count_formula.to_string(),
        }));
    }
    report.value = Some(rows.len().to_string());
    report.values = Some(Value::from(rows));
    report.method = Some("scan");
    Ok(report.judge())
}

pub fn curve(max_rn: u32, cap: ResourceCap) -> Result<Report, CliError> {
    let mut report = Report::verification("curve").param("max_rn", max_rn);
    let all = cells(None, None, max_rn);
    for &(r, n) in &all {
        let rn = r as u64 * n as u64;
        let predicted = (BigInt::from(1) << rn as usize) + 1 - lucas_s(rn);
        match rational_places(r, n, cap) {
            Ok(p) if BigInt::from(p) == predicted => {}
            Ok(p) => report.failures.push(format!(
                "(r,n)=({r},{n}): {p} places, predicted {predicted}"
            )),
            Err(apoly_core::Error::ZetaMismatch {
                scanned, predicted, ..
            }) => report.failures.push(format!(
                "(r,n)=({r},{n}): {scanned} places, predicted {predicted}"
            )),
            Err(e) => return Err(e.into()),
        }
        let (scanned, b) = (degree_place_count(r, n, cap)?, place_count_b(r, n)?);
        if scanned != b {
            report
                .failures
                .push(format!("(r,n)=({r},{n}): degree-n places {scanned}, B {b}"));
        }
    }
    report.value = Some(all.len().to_string());
    report.method = Some("scan");
    Ok(report.judge())
}

pub fn oracles(r: Option<u32>, max_log: u32, cap: ResourceCap) -> Result<Report, CliError> {
    let mut report = Report::verification("oracles").param("max_log", max_log);
    if let Some(r) = r {
        report = report.param("r", r);
    }
    let all = cells(r, r.map(|r| max_log / r), max_log);
    for &(r, n) in &all {
        let formula = count_formula(r, n)?;
        let scanned = BigInt::from(enumerate_a_polynomials(r, n, cap)?.len());
        let orbits = BigInt::from(count_via_elements(r, n, cap)?);
        if formula != scanned || formula != orbits {
            report.failures.push(format!(
                "(r,n)=({r},{n}): formula {formula}, poly-oracle {scanned}, element-oracle {orbits}"
            ));
        }
    }
    report.value = Some(all.len().to_string());
    report.method = Some("all");
    Ok(report.judge())
}
