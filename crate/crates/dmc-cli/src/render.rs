//! Text rendering: Young diagrams and design tables.

use dmc_core::design::DesignReport;
use dmc_core::profile::Type2Entry;
use dmc_core::{DecreasingSet, OrbitKind, OrbitSpec};

/// ASCII Young diagram of an orbit parameter grid.
///
/// Rows are the variables of the acted monomial (ascending); columns are the
/// free positions below its largest variable. Cells: `*` free binary choice,
/// `R` rank-restricted choice, `X` fixed at zero, `0` structurally absent.
pub fn young_diagram(spec: &OrbitSpec, set_for_self: Option<&DecreasingSet>) -> String {
    let acted = spec.acted();
    let rows = acted.indices();
    let Some(&top) = rows.last() else {
        return String::from("(constant monomial: empty diagram)\n");
    };
    let columns: Vec<u32> = mask_bits(spec.f.j_set(top).expect("index below m"));
    let mut out = String::new();
    out.push_str("      ");
    for j in &columns {
        out.push_str(&format!("{:>4}", format!("x{j}")));
    }
    out.push('\n');
    for &i in &rows {
        out.push_str(&format!("{:>4} |", format!("x{i}")));
        for &j in &columns {
            let cell = cell_mark(spec, set_for_self, i, j);
            out.push_str(&format!("{cell:>4}"));
        }
        out.push('\n');
    }
    out.push_str("legend: * free, R rank-restricted, X fixed, 0 absent\n");
    out
}

fn cell_mark(
    spec: &OrbitSpec,
    set_for_self: Option<&DecreasingSet>,
    i: u32,
    j: u32,
) -> char {
    if j >= i {
        return '0';
    }
    match &spec.kind {
        OrbitKind::Full => '*',
        OrbitKind::RestrictedPair(g) => {
            let acted = spec.acted();
            let hstar = acted.gcd(g).expect("same m");
            if !hstar.contains(i) {
                return '*';
            }
            let fg = spec.f.product(g).expect("same m");
            if fg.j_set(i).expect("below m") >> j & 1 == 1 {
                'R'
            } else {
                '*'
            }
        }
        OrbitKind::RestrictedSelf(_) => {
            let set = set_for_self.expect("restricted-self diagram needs the set");
            if set.j_set_restricted(&spec.f, i).expect("row index") >> j & 1 == 1 {
                'R'
            } else {
                'X'
            }
        }
    }
}

fn mask_bits(mask: u32) -> Vec<u32> {
    let mut v = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        v.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    v
}

fn entry_cell(entry: &Type2Entry) -> String {
    match entry {
        Type2Entry::Formula(v) | Type2Entry::Census(v) => v.to_string(),
        Type2Entry::Forbidden => String::from("0"),
        Type2Entry::Unavailable(_) => String::from("(census unavailable)"),
    }
}

/// The candidate comparison table.
pub fn design_table(report: &DesignReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<10} {:>5} {:>5} {:>12} {:>20} {:>28}\n",
        "f", "|I_3|", "K", "W_wmin", "W_1.5wmin", "W_1.75wmin (type1 + type2)"
    ));
    for row in &report.rows {
        let w175 = match &row.w_175_type2 {
            Type2Entry::Forbidden => row.w_175_type1.to_string(),
            other => format!("{} + {}", row.w_175_type1, entry_cell(other)),
        };
        out.push_str(&format!(
            "{:<10} {:>5} {:>5} {:>12} {:>20} {:>28}\n",
            row.f_max.to_string(),
            row.i3,
            row.k,
            row.w_min_count,
            entry_cell(&row.w_15),
            w175,
        ));
    }
    out.push_str("\nranking by (|lambda|, type1 refinement score):\n");
    for note in &report.notes {
        out.push_str(&format!("  {note}\n"));
    }
    out
}

/// JSON sidecar of the design table.
pub fn design_json(report: &DesignReport) -> String {
    let rows: Vec<serde_json::Value> = report
        .rows
        .iter()
        .map(|row| {
            serde_json::json!({
                "f": row.f_max.to_string(),
                "i3": row.i3,
                "K": row.k,
                "lambda": row.lambda_total,
                "score": row.refinement_score.to_string(),
                "w_min": row.w_min_count.to_string(),
                "w_1.5": type2_cell_json(&row.w_15),
                "w_1.75_type1": row.w_175_type1.to_string(),
                "w_1.75_type2": type2_cell_json(&row.w_175_type2),
            })
        })
        .collect();
    let root = serde_json::json!({ "m": report.m, "rows": rows, "ranking": report.notes });
    let mut out = serde_json::to_string_pretty(&root).expect("serializable");
    out.push('\n');
    out
}

fn type2_cell_json(entry: &Type2Entry) -> serde_json::Value {
    match entry {
        Type2Entry::Formula(v) | Type2Entry::Census(v) => {
            serde_json::json!(v.to_string())
        }
        Type2Entry::Forbidden => serde_json::json!("0"),
        Type2Entry::Unavailable(reason) => serde_json::json!({ "unavailable": reason }),
    }
}
