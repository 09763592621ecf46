//! Fixed-schema renderings. CSV and JSON use ASCII `sqrt()` forms; the text
//! table uses `√`. Line endings are LF everywhere.

use serde::Serialize;

use super::catalog::MethodResult;
use super::scan::{ScanRow, SineScan};
use crate::error::{Error, Result};
use crate::exactnum::HpDecimal;

#[derive(Serialize)]
struct CatalogRecord<'a> {
    method_id: &'a str,
    tradition: &'a str,
    exact_form: String,
    value: String,
    rel_error: String,
    digits_correct: u32,
}

fn record(r: &MethodResult) -> CatalogRecord<'_> {
    CatalogRecord {
        method_id: &r.method_id,
        tradition: r.tradition.name(),
        exact_form: r
            .exact_form
            .as_ref()
            .map(|x| x.to_ascii())
            .unwrap_or_default(),
        value: r.value.render(),
        rel_error: r.rel_error.render(),
        digits_correct: r.digits_correct,
    }
}

#[derive(Serialize)]
struct ScanRecord {
    angle_deg: String,
    value: String,
    oracle: String,
    rel_error: String,
}

#[derive(Serialize)]
struct SineRecord {
    angle_deg: String,
    bhaskara1: String,
    table: String,
    oracle: String,
    bhaskara1_rel_error: String,
    table_rel_error: String,
}

fn opt(x: &Option<HpDecimal>) -> String {
    x.as_ref().map(HpDecimal::render).unwrap_or_default()
}

fn scan_records(rows: &[ScanRow]) -> Vec<ScanRecord> {
    rows.iter()
        .map(|r| ScanRecord {
            angle_deg: r.angle_deg.to_string(),
            value: r.value.render(),
            oracle: r.oracle.render(),
            rel_error: r.rel_error.render(),
        })
        .collect()
}

/// Rows, then a `max` row holding the largest errors and where they occur.
fn sine_records(scan: &SineScan) -> Vec<SineRecord> {
    let mut out: Vec<SineRecord> = scan
        .rows
        .iter()
        .map(|r| SineRecord {
            angle_deg: r.angle_deg.to_string(),
            bhaskara1: r.bhaskara1.render(),
            table: opt(&r.table),
            oracle: r.oracle.render(),
            bhaskara1_rel_error: opt(&r.bhaskara1_rel_error),
            table_rel_error: opt(&r.table_rel_error),
        })
        .collect();
    let at = |m: &Option<(crate::ExactRational, HpDecimal)>| {
        m.as_ref().map(|(a, _)| a.to_string()).unwrap_or_default()
    };
    let val = |m: &Option<(crate::ExactRational, HpDecimal)>| {
        m.as_ref().map(|(_, e)| e.render()).unwrap_or_default()
    };
    out.push(SineRecord {
        angle_deg: "max".into(),
        bhaskara1: at(&scan.max_bhaskara1),
        table: at(&scan.max_table),
        oracle: String::new(),
        bhaskara1_rel_error: val(&scan.max_bhaskara1),
        table_rel_error: val(&scan.max_table),
    });
    out
}

fn to_csv<T: Serialize>(records: &[T]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in records {
        w.serialize(r)
            .map_err(|e| Error::Unsupported(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Unsupported(e.to_string()))
}

fn to_json<T: Serialize>(records: &[T]) -> Result<String> {
    let mut s =
        serde_json::to_string_pretty(records).map_err(|e| Error::Unsupported(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Header `method_id,tradition,exact_form,value,rel_error,digits_correct`.
pub fn catalog_csv(rows: &[MethodResult]) -> Result<String> {
    to_csv(&rows.iter().map(record).collect::<Vec<_>>())
}

pub fn catalog_json(rows: &[MethodResult]) -> Result<String> {
    to_json(&rows.iter().map(record).collect::<Vec<_>>())
}

pub fn scan_csv(rows: &[ScanRow]) -> Result<String> {
    to_csv(&scan_records(rows))
}

pub fn scan_json(rows: &[ScanRow]) -> Result<String> {
    to_json(&scan_records(rows))
}

pub fn sine_scan_csv(scan: &SineScan) -> Result<String> {
    to_csv(&sine_records(scan))
}

pub fn sine_scan_json(scan: &SineScan) -> Result<String> {
    to_json(&sine_records(scan))
}

/// Left-aligned columns separated by two spaces, widths counted in chars.
pub fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(headers.to_vec());
    out.push_str(&line(
        widths
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn catalog_table(rows: &[MethodResult]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.method_id.clone(),
                r.tradition.name().to_string(),
                r.exact_form
                    .as_ref()
                    .map(|x| x.to_string())
                    .unwrap_or_default(),
                r.value.render(),
                r.rel_error.render(),
                r.digits_correct.to_string(),
                r.era_label.clone(),
            ]
        })
        .collect();
    text_table(
        &[
            "method",
            "tradition",
            "exact",
            "value",
            "rel_error",
            "digits",
            "source",
        ],
        &body,
    )
}

pub fn scan_table(rows: &[ScanRow]) -> String {
    let body: Vec<Vec<String>> = scan_records(rows)
        .into_iter()
        .map(|r| vec![r.angle_deg, r.value, r.oracle, r.rel_error])
        .collect();
    text_table(&["angle_deg", "value", "oracle", "rel_error"], &body)
}

pub fn sine_scan_table(scan: &SineScan) -> String {
    let body: Vec<Vec<String>> = sine_records(scan)
        .into_iter()
        .map(|r| {
            vec![
                r.angle_deg,
                r.bhaskara1,
                r.table,
                r.oracle,
                r.bhaskara1_rel_error,
                r.table_rel_error,
            ]
        })
        .collect();
    text_table(
        &[
            "angle_deg",
            "bhaskara1",
            "table",
            "oracle",
            "bhaskara1_rel_error",
            "table_rel_error",
        ],
        &body,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::pi_catalog;

    #[test]
    fn csv_schema() {
        let rows = pi_catalog(7).unwrap();
        let csv = catalog_csv(&rows).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("method_id,tradition,exact_form,value,rel_error,digits_correct")
        );
        assert!(csv
            .lines()
            .any(|l| l.starts_with("virasena,Jaina,355/113,3.1415929,")));
        assert!(csv.contains("54-36*sqrt(2)"));
        assert!(!csv.contains('\r'));
        assert!(!csv.contains('√'));
        assert_eq!(csv, catalog_csv(&pi_catalog(7).unwrap()).unwrap());
    }

    #[test]
    fn json_schema() {
        let rows = pi_catalog(7).unwrap();
        let v: serde_json::Value = serde_json::from_str(&catalog_json(&rows).unwrap()).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), rows.len());
        let keys: Vec<_> = arr[0].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 6);
        for k in [
            "method_id",
            "tradition",
            "exact_form",
            "value",
            "rel_error",
            "digits_correct",
        ] {
            assert!(arr[0].get(k).is_some(), "{k}");
        }
    }

    #[test]
    fn table_alignment() {
        let t = text_table(&["a", "bb"], &[vec!["√10".into(), "x".into()]]);
        assert_eq!(t, "a    bb\n---  --\n√10  x\n");
    }
}
