//! Text and TSV renderings. JSON goes straight through serde.

use satake_core::fusion::SatakeReport;
use satake_core::{CheckOutcome, Coweight, DecompositionTable};

/// Map-key form of a coweight: `1,-2`.
pub fn key(v: &Coweight) -> String {
    v.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub fn decomposition_json(t: &DecompositionTable) -> serde_json::Value {
    t.iter()
        .map(|(k, v)| (key(k), serde_json::Value::from(*v)))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.clone()));
        out.push('\n');
    }
    out
}

pub fn tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

pub fn grading_cell(report_grading: &std::collections::BTreeMap<i64, u64>) -> String {
    report_grading
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn decomposition_cell(t: &DecompositionTable) -> String {
    t.iter()
        .map(|(k, v)| format!("({}):{v}", key(k)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn check_rows(checks: &[CheckOutcome]) -> Vec<Vec<String>> {
    checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                if c.passed { "pass" } else { "FAIL" }.to_string(),
                c.cases.to_string(),
                c.failure.clone().unwrap_or_default(),
            ]
        })
        .collect()
}

/// Dimensions beyond u64 are emitted as decimal strings.
pub fn dim_json(d: u128) -> serde_json::Value {
    u64::try_from(d).map(serde_json::Value::from).unwrap_or_else(|_| d.to_string().into())
}

pub fn report_json(r: &SatakeReport) -> serde_json::Value {
    let objects: Vec<serde_json::Value> = r
        .objects
        .iter()
        .map(|o| {
            let grading: serde_json::Map<String, serde_json::Value> = o
                .grading
                .iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::from(*v)))
                .collect();
            serde_json::json!({
                "lambda": o.lambda,
                "dim": dim_json(o.dim),
                "grading": grading,
                "dual": o.dual,
            })
        })
        .collect();
    let tensor: Vec<serde_json::Value> = r
        .tensor
        .iter()
        .map(|t| {
            serde_json::json!({
                "lambda": t.lambda,
                "mu": t.mu,
                "decomposition": decomposition_json(&t.decomposition),
            })
        })
        .collect();
    serde_json::json!({
        "height_bound": r.height_bound,
        "objects": objects,
        "tensor": tensor,
        "checks": r.checks,
    })
}

pub fn report_tables(r: &SatakeReport, as_tsv: bool) -> String {
    let objects: Vec<Vec<String>> = r
        .objects
        .iter()
        .map(|o| {
            vec![
                key(&o.lambda),
                o.dim.to_string(),
                grading_cell(o.grading.as_map()),
                key(&o.dual),
            ]
        })
        .collect();
    let tensor: Vec<Vec<String>> = r
        .tensor
        .iter()
        .map(|t| vec![key(&t.lambda), key(&t.mu), decomposition_cell(&t.decomposition)])
        .collect();
    let checks = check_rows(&r.checks);
    let render = if as_tsv { tsv } else { aligned };
    format!(
        "# objects\n{}\n# tensor\n{}\n# checks\n{}",
        render(&["lambda", "dim", "grading", "dual"], &objects),
        render(&["lambda", "mu", "decomposition"], &tensor),
        render(&["check", "status", "cases", "failure"], &checks),
    )
}
