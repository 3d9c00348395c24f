use apoly_core::apolynomial::{count_via_elements, enumerate_a_polynomials, q_iterate};
use apoly_core::counting::count_formula;
use apoly_core::text::{format_poly, parse_poly};
use apoly_core::{PolyRing, ResourceCap};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::report::Report;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    PolyOracle,
    ElementOracle,
    All,
}

pub fn count(r: u32, n: u32, method: Method, cap: ResourceCap) -> Result<Report, CliError> {
    let report = Report::new("count").param("r", r).param("n", n);
    let formula = || count_formula(r, n).map(|a| a.to_string());
    let scan = || enumerate_a_polynomials(r, n, cap).map(|v| v.len().to_string());
    let orbits = || count_via_elements(r, n, cap).map(|a| a.to_string());
    Ok(match method {
        Method::Formula => Report {
            value: Some(formula()?),
            method: Some("formula"),
            ..report
        },
        Method::PolyOracle => Report {
            value: Some(scan()?),
            method: Some("poly-oracle"),
            ..report
        },
        Method::ElementOracle => Report {
            value: Some(orbits()?),
            method: Some("element-oracle"),
            ..report
        },
        Method::All => {
            let (a, b, c) = (formula()?, scan()?, orbits()?);
            let mut report = Report {
                value: Some(a.clone()),
                values: Some(json!({ "formula": a, "poly-oracle": b, "element-oracle": c })),
                method: Some("all"),
                ..report
            };
            if a != b || a != c {
                report
                    .failures
                    .push(format!("formula {a}, poly-oracle {b}, element-oracle {c}"));
            }
            report.judge()
        }
    })
}

pub fn enumerate(r: u32, n: u32, cap: ResourceCap) -> Result<Report, CliError> {
    let list = enumerate_a_polynomials(r, n, cap)?;
    Ok(Report {
        value: Some(list.len().to_string()),
        values: Some(Value::from(
            list.iter().map(format_poly).collect::<Vec<_>>(),
        )),
        method: Some("scan"),
        ..Report::new("enumerate").param("r", r).param("n", n)
    })
}

pub fn construct(
    r: u32,
    seed: &str,
    n: Option<u32>,
    m: u32,
    degree_cap: u64,
    cap: ResourceCap,
) -> Result<Report, CliError> {
    let ring = PolyRing::over_degree(r)?;
    let mut report = Report::new("construct")
        .param("r", r)
        .param("m", m)
        .param("seed", seed);
    let seed = if seed == "auto" {
        let n = n.ok_or_else(|| CliError::Usage("--seed auto needs --n".into()))?;
        report = report.param("n", n);
        enumerate_a_polynomials(r, n, cap)?
            .into_iter()
            .next()
            .ok_or_else(|| CliError::Usage(format!("no A-polynomial of degree {n} over F_2^{r}")))?
    } else {
        parse_poly(seed, ring.field()).map_err(apoly_core::Error::from)?
    };
    let seq = q_iterate(&ring, &seed, m, degree_cap)?;
    let mut checks = Vec::new();
    for (i, f) in seq.iterates().iter().enumerate() {
        checks.push(json!({
            "m": i,
            "degree": f.degree().unwrap_or(0).to_string(),
            "irreducible": true,
            "self_reciprocal": ring.is_self_reciprocal(f)?,
        }));
    }
    let iterates: Vec<String> = seq.iterates().iter().map(format_poly).collect();
    report.value = iterates.last().cloned();
    report.values = Some(Value::from(iterates));
    report.checks = Some(Value::from(checks));
    Ok(report)
}
