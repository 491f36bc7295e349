//! The `volset-pointset v1` file format.
//!
//! ```text
//! volset-pointset v1
//! p=<prime> k=<ext degree> d=<ambient dim> [mod=<c0,c1,...,ck>]
//! <d element indices per line>
//! ```
//!
//! Element indices use the canonical base-p encoding of the field module;
//! `mod=` pins the basis when k > 1. Canonical files list points sorted
//! ascending, which makes parse and emit exact inverses.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Vector;
use crate::sets::PointSet;

pub const MAGIC: &str = "volset-pointset v1";

/// Parses a point-set file into its field and validated, deduplicated set.
pub fn parse_pointset(text: &str) -> Result<(Field, PointSet)> {
    let mut lines = text.lines().enumerate();
    let (_, magic) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty file".into() })?;
    if magic.trim_end() != MAGIC {
        return Err(Error::Parse { line: 1, msg: format!("expected `{MAGIC}`") });
    }
    let (_, header) =
        lines.next().ok_or(Error::Parse { line: 2, msg: "missing header line".into() })?;
    let (field, d) = parse_header(header)?;

    let mut seen = std::collections::BTreeSet::new();
    let mut points: Vec<Vector> = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut point = Vec::with_capacity(d);
        for tok in line.split_whitespace() {
            let idx: u64 = tok
                .parse()
                .map_err(|_| Error::Parse { line: line_no, msg: format!("bad element index `{tok}`") })?;
            if idx >= field.q() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("element index {idx} out of range for q = {}", field.q()),
                });
            }
            point.push(idx);
        }
        if point.len() != d {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {d} coordinates, got {}", point.len()),
            });
        }
        if !seen.insert(point.clone()) {
            return Err(Error::Parse { line: line_no, msg: "duplicate point".into() });
        }
        points.push(point);
    }
    let set = PointSet::new(&field, d, points)?;
    Ok((field, set))
}

fn parse_header(header: &str) -> Result<(Field, usize)> {
    let mut p = None;
    let mut k = None;
    let mut d = None;
    let mut modulus: Option<Vec<u64>> = None;
    for tok in header.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or(Error::Parse { line: 2, msg: format!("bad header token `{tok}`") })?;
        let bad = |_| Error::Parse { line: 2, msg: format!("bad value for `{key}`") };
        match key {
            "p" => p = Some(value.parse::<u64>().map_err(bad)?),
            "k" => k = Some(value.parse::<u32>().map_err(bad)?),
            "d" => d = Some(value.parse::<usize>().map_err(bad)?),
            "mod" => {
                let coeffs: std::result::Result<Vec<u64>, _> =
                    value.split(',').map(|c| c.parse::<u64>()).collect();
                modulus = Some(coeffs.map_err(bad)?);
            }
            _ => return Err(Error::Parse { line: 2, msg: format!("unknown header key `{key}`") }),
        }
    }
    let p = p.ok_or(Error::Parse { line: 2, msg: "missing p=".into() })?;
    let k = k.ok_or(Error::Parse { line: 2, msg: "missing k=".into() })?;
    let d = d.ok_or(Error::Parse { line: 2, msg: "missing d=".into() })?;
    let field = Field::new(p, k, modulus.as_deref())?;
    Ok((field, d))
}

/// Canonical serialization: header plus points in ascending order; `mod=` is
/// included exactly when k > 1.
pub fn emit_pointset(field: &Field, set: &PointSet) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!("p={} k={} d={}", field.p(), field.k(), set.dim()));
    if let Some(m) = field.modulus() {
        let coeffs: Vec<String> = m.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(" mod={}", coeffs.join(",")));
    }
    out.push('\n');
    for point in set.points() {
        let coords: Vec<String> = point.iter().map(|c| c.to_string()).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}
