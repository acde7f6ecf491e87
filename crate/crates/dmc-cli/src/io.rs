//! File formats: code specifications, profiles, distributions, reports.

use std::fs;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use serde_json::json;

use dmc_core::profile::{CheckOutcome, Type2Entry, VerifyReport, WeightProfile};
use dmc_core::type1::{Type1Case, Type1Variant};
use dmc_core::{DecreasingSet, Monomial};

use crate::CliError;

/// Canonical interchange format: bit `i` of a mask set iff `x_i` divides the
/// monomial; masks sorted ascending on output.
#[derive(Debug, Serialize, Deserialize)]
pub struct CodeSpecFile {
    pub m: u32,
    pub monomials: Vec<u32>,
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {path}: {e}")))
    }
}

pub fn write_text(path: &str, content: &str) -> Result<(), CliError> {
    if path == "-" {
        std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| CliError::Input(format!("writing standard output: {e}")))
    } else {
        fs::write(path, content).map_err(|e| CliError::Input(format!("writing {path}: {e}")))
    }
}

pub fn read_code_spec(path: &str, allow_non_decreasing: bool) -> Result<DecreasingSet, CliError> {
    let text = read_text(path)?;
    let file: CodeSpecFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("parsing code spec {path}: {e}")))?;
    let monomials: Vec<Monomial> = file
        .monomials
        .iter()
        .map(|&mask| Monomial::new(file.m, mask))
        .collect::<dmc_core::Result<_>>()
        .map_err(|e| CliError::Input(format!("code spec {path}: {e}")))?;
    check_m_supported(file.m)?;
    match DecreasingSet::from_monomials(file.m, &monomials) {
        Ok(set) => Ok(set),
        Err(err) if allow_non_decreasing => {
            eprintln!("warning: {err}; continuing as requested");
            DecreasingSet::from_monomials_unchecked(file.m, &monomials)
                .map_err(|e| CliError::Input(format!("code spec {path}: {e}")))
        }
        Err(err) => Err(CliError::Input(format!("code spec {path}: {err}"))),
    }
}

pub fn check_m_supported(m: u32) -> Result<(), CliError> {
    if !(1..=16).contains(&m) {
        return Err(CliError::Input(format!(
            "m = {m} outside the supported code range 1..=16"
        )));
    }
    Ok(())
}

pub fn code_spec_json(set: &DecreasingSet) -> String {
    let file = CodeSpecFile {
        m: set.m(),
        monomials: set.masks().to_vec(),
    };
    let mut out = serde_json::to_string_pretty(&file).expect("serializable");
    out.push('\n');
    out
}

fn type2_json(entry: &Type2Entry) -> serde_json::Value {
    match entry {
        Type2Entry::Formula(v) | Type2Entry::Census(v) => json!(v.to_string()),
        Type2Entry::Forbidden => json!("0"),
        Type2Entry::Unavailable(reason) => json!({ "unavailable": reason }),
    }
}

pub fn profile_json(profile: &WeightProfile, ledger: Option<&[(u32, Vec<Type1Case>)]>) -> String {
    let entries: Vec<serde_json::Value> = profile
        .entries
        .iter()
        .map(|e| {
            json!({
                "weight": e.weight,
                "mu": e.mu,
                "type1": e.type1.to_string(),
                "type2": type2_json(&e.type2),
                "method": {
                    "type1": if e.type1_in_range { "formula" } else { "none" },
                    "type2": e.type2.method(),
                },
            })
        })
        .collect();
    let mut root = json!({
        "m": profile.m,
        "r": profile.r,
        "K": profile.k,
        "w_min": profile.w_min,
        "entries": entries,
    });
    if let Some(ledger) = ledger {
        let blocks: Vec<serde_json::Value> = ledger
            .iter()
            .map(|(mu, cases)| {
                json!({
                    "mu": mu,
                    "cases": cases.iter().map(case_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        root["ledger"] = json!(blocks);
    }
    let mut out = serde_json::to_string_pretty(&root).expect("serializable");
    out.push('\n');
    out
}

pub fn case_json(case: &Type1Case) -> serde_json::Value {
    let mut value = match &case.variant {
        Type1Variant::A1 { f, g, h } => json!({
            "variant": "A1",
            "f": f.to_string(),
            "g": g.to_string(),
            "h": h.to_string(),
        }),
        Type1Variant::A2 {
            f,
            g,
            h,
            h_star,
            shift_witness,
        } => json!({
            "variant": "A2",
            "f": f.to_string(),
            "g": g.to_string(),
            "h": h.to_string(),
            "h_star": h_star.to_string(),
            "witness": shift_witness.to_string(),
        }),
        Type1Variant::B1 {
            f,
            h,
            shift_witness,
            multiple_h,
        } => {
            let mut v = json!({
                "variant": "B1",
                "f": f.to_string(),
                "h": h.to_string(),
                "witness": shift_witness.to_string(),
            });
            if *multiple_h {
                v["multiple_h"] = json!(true);
            }
            v
        }
    };
    value["count"] = json!(case.count.to_string());
    value
}

pub fn profile_csv(profile: &WeightProfile) -> String {
    let mut out = String::from("weight,mu,type1,type2\n");
    for e in &profile.entries {
        let type2 = match &e.type2 {
            Type2Entry::Formula(v) | Type2Entry::Census(v) => v.to_string(),
            Type2Entry::Forbidden => String::from("0"),
            Type2Entry::Unavailable(_) => String::from("unavailable"),
        };
        out.push_str(&format!("{},{},{},{}\n", e.weight, e.mu, e.type1, type2));
    }
    out
}

pub fn distribution_json(m: u32, k: usize, counts: &[(u64, u128)]) -> String {
    let rows: Vec<serde_json::Value> = counts
        .iter()
        .map(|(w, c)| json!({ "weight": w, "count": c.to_string() }))
        .collect();
    let root = json!({ "m": m, "K": k, "counts": rows });
    let mut out = serde_json::to_string_pretty(&root).expect("serializable");
    out.push('\n');
    out
}

pub fn distribution_csv(counts: &[(u64, u128)]) -> String {
    let mut out = String::from("weight,count\n");
    for (w, c) in counts {
        out.push_str(&format!("{w},{c}\n"));
    }
    out
}

pub fn report_json(report: &VerifyReport) -> String {
    let checks: Vec<serde_json::Value> = report
        .checks
        .iter()
        .map(|c| {
            let outcome = match &c.outcome {
                CheckOutcome::Match => String::from("match"),
                CheckOutcome::Mismatch => String::from("mismatch"),
                CheckOutcome::Skipped(reason) => format!("skipped: {reason}"),
            };
            json!({
                "label": c.label,
                "expected": c.expected,
                "actual": c.actual,
                "outcome": outcome,
            })
        })
        .collect();
    let root = json!({ "ok": report.ok, "checks": checks });
    let mut out = serde_json::to_string_pretty(&root).expect("serializable");
    out.push('\n');
    out
}

/// Parses a comma-separated monomial list in the `x`-grammar (`x1x3x5`) or
/// `1` for the constant monomial.
pub fn parse_monomial_list(text: &str, m: u32) -> Result<Vec<Monomial>, CliError> {
    text.split(',')
        .filter(|piece| !piece.trim().is_empty())
        .map(|piece| {
            Monomial::parse(piece.trim(), m)
                .map_err(|e| CliError::Input(format!("monomial '{piece}': {e}")))
        })
        .collect()
}

/// Parses a rows file: whitespace- or comma-separated row indices.
pub fn parse_rows(text: &str) -> Result<Vec<u64>, CliError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|piece| !piece.is_empty())
        .map(|piece| {
            piece
                .parse::<u64>()
                .map_err(|e| CliError::Input(format!("row index '{piece}': {e}")))
        })
        .collect()
}
