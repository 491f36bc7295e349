//! Machine-readable reports with deterministic serialization: keys keep
//! insertion order, every set is emitted sorted, and the payload carries no
//! timing or other run-varying data, so identical commands with identical
//! seeds produce byte-identical output.

use crate::gf::Elt;
use crate::linalg::Vector;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub results: Vec<(String, String)>,
    pub table: Option<Table>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report { command: command.to_string(), params: Vec::new(), results: Vec::new(), table: None }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push((key.to_string(), value.to_string()));
    }

    pub fn result(&mut self, key: &str, value: impl ToString) {
        self.results.push((key.to_string(), value.to_string()));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Csv,
}

/// Serializes a report; identical reports produce identical bytes.
pub fn emit_report(r: &Report, format: ReportFormat) -> Vec<u8> {
    let mut out = String::new();
    match format {
        ReportFormat::Text => {
            out.push_str("volset-report v1\n");
            out.push_str(&format!("command = {}\n", r.command));
            out.push_str(&format!("version = {TOOL_VERSION}\n"));
            out.push_str("[params]\n");
            for (k, v) in &r.params {
                out.push_str(&format!("{k} = {v}\n"));
            }
            out.push_str("[results]\n");
            for (k, v) in &r.results {
                out.push_str(&format!("{k} = {v}\n"));
            }
            if let Some(t) = &r.table {
                out.push_str("[table]\n");
                out.push_str(&t.columns.join(" "));
                out.push('\n');
                for row in &t.rows {
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
            }
        }
        ReportFormat::Csv => {
            out.push_str(&format!("#command,{}\n", r.command));
            out.push_str(&format!("#version,{TOOL_VERSION}\n"));
            for (k, v) in &r.params {
                out.push_str(&format!("#param,{k},{v}\n"));
            }
            match &r.table {
                Some(t) => {
                    for (k, v) in &r.results {
                        out.push_str(&format!("#result,{k},{v}\n"));
                    }
                    out.push_str(&t.columns.join(","));
                    out.push('\n');
                    for row in &t.rows {
                        out.push_str(&row.join(","));
                        out.push('\n');
                    }
                }
                None => {
                    out.push_str("key,value\n");
                    for (k, v) in &r.results {
                        out.push_str(&format!("{k},{v}\n"));
                    }
                }
            }
        }
    }
    out.into_bytes()
}

/// Sorted scalar set as a space-separated index list.
pub fn fmt_scalars<'a>(elements: impl IntoIterator<Item = &'a Elt>) -> String {
    let parts: Vec<String> = elements.into_iter().map(|e| e.to_string()).collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(" ")
    }
}

/// One vector as `(c1,c2,...,cd)`.
pub fn fmt_vector(v: &[Elt]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A tuple of vectors, space separated.
pub fn fmt_tuple(vs: &[Vector]) -> String {
    let parts: Vec<String> = vs.iter().map(|v| fmt_vector(v)).collect();
    parts.join(" ")
}

/// Truncated fixed-point ratio with four decimals, in pure integers.
pub fn fmt_ratio(num: u64, den: u64) -> String {
    if den == 0 {
        return "-".to_string();
    }
    let scaled = num as u128 * 10_000 / den as u128;
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_reports_are_byte_identical() {
        let build = || {
            let mut r = Report::new("demo");
            r.param("seed", 42);
            r.result("size", 3);
            r
        };
        assert_eq!(emit_report(&build(), ReportFormat::Text), emit_report(&build(), ReportFormat::Text));
        assert_eq!(emit_report(&build(), ReportFormat::Csv), emit_report(&build(), ReportFormat::Csv));
    }

    #[test]
    fn ratio_formatting_is_exact_truncation() {
        assert_eq!(fmt_ratio(37, 100), "0.3700");
        assert_eq!(fmt_ratio(1, 3), "0.3333");
        assert_eq!(fmt_ratio(10, 10), "1.0000");
        assert_eq!(fmt_ratio(0, 7), "0.0000");
    }

    #[test]
    fn vector_and_set_formatting() {
        assert_eq!(fmt_vector(&[1, 0, 2]), "(1,0,2)");
        assert_eq!(fmt_scalars(&[0, 1, 4]), "0 1 4");
        assert_eq!(fmt_scalars(&[]), "-");
    }
}
