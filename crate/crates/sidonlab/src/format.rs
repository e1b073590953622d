//! File formats: the point-set text format (`dim <n>` header, one decimal
//! point per line, `#` comments), its JSON alternative
//! `{"dim": n, "points": [...]}`, and CSV/JSON bound tables.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::constructions::BoundRow;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

#[derive(Serialize, Deserialize)]
struct PointSetJson {
    dim: usize,
    points: Vec<u32>,
}

/// Parse the text format. Everything after `#` on a line is a comment;
/// blank lines are ignored.
pub fn parse_point_set_text(input: &str) -> Result<PointSet> {
    let mut lines = input
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty point-set file".into()))?;
    let n = header
        .strip_prefix("dim")
        .map(str::trim)
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| Error::Parse(format!("expected `dim <n>` header, got {header:?}")))?;
    let mut points = Vec::new();
    for line in lines {
        let p = line
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad point line {line:?}")))?;
        points.push(p);
    }
    PointSet::from_points(n, &points).map_err(|e| Error::Parse(e.to_string()))
}

/// Parse the JSON alternative.
pub fn parse_point_set_json(input: &str) -> Result<PointSet> {
    let raw: PointSetJson =
        serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    PointSet::from_points(raw.dim, &raw.points).map_err(|e| Error::Parse(e.to_string()))
}

/// Parse either format, sniffing JSON by a leading brace.
pub fn parse_point_set(input: &str) -> Result<PointSet> {
    if input.trim_start().starts_with('{') {
        parse_point_set_json(input)
    } else {
        parse_point_set_text(input)
    }
}

/// Read a point set from disk (format sniffed from the content).
pub fn read_point_set(path: &Path) -> Result<PointSet> {
    let text = std::fs::read_to_string(path)?;
    parse_point_set(&text)
}

pub fn write_point_set_text<W: Write>(sink: &mut W, s: &PointSet) -> Result<()> {
    writeln!(sink, "dim {}", s.dim())?;
    for p in s.iter() {
        writeln!(sink, "{p}")?;
    }
    Ok(())
}

pub fn write_point_set_json<W: Write>(sink: &mut W, s: &PointSet) -> Result<()> {
    let raw = PointSetJson {
        dim: s.dim(),
        points: s.points(),
    };
    serde_json::to_writer(&mut *sink, &raw).map_err(std::io::Error::from)?;
    writeln!(sink)?;
    Ok(())
}

/// Write a point set; a `.json` extension selects the JSON format.
pub fn save_point_set(path: &Path, s: &PointSet) -> Result<()> {
    let mut out = Vec::new();
    if path.extension().is_some_and(|e| e == "json") {
        write_point_set_json(&mut out, s)?;
    } else {
        write_point_set_text(&mut out, s)?;
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// CSV bound table: `n,dim,base,improved,witness_file`. `witness_files`
/// runs parallel to `rows`; absent witnesses leave the column empty.
pub fn bounds_to_csv(rows: &[BoundRow], witness_files: &[Option<String>]) -> String {
    let mut out = String::from("n,dim,base,improved,witness_file\n");
    for (i, r) in rows.iter().enumerate() {
        let file = witness_files
            .get(i)
            .and_then(|f| f.as_deref())
            .unwrap_or("");
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.odd_n, r.ambient_dim, r.base_size, r.improved_size, file
        ));
    }
    out
}

#[derive(Serialize)]
struct BoundRowJson<'a> {
    n: u32,
    dim: u32,
    base: u64,
    improved: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_file: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_size: Option<u64>,
}

/// JSON bound table mirroring the CSV columns, plus witness sizes.
pub fn bounds_to_json(rows: &[BoundRow], witness_files: &[Option<String>]) -> String {
    let items: Vec<BoundRowJson> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| BoundRowJson {
            n: r.odd_n,
            dim: r.ambient_dim,
            base: r.base_size,
            improved: r.improved_size,
            witness_file: witness_files.get(i).and_then(|f| f.as_deref()),
            witness_size: r.witness.as_ref().map(|w| w.len() as u64),
        })
        .collect();
    serde_json::to_string_pretty(&items).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip_with_comments() {
        let text = "# a comment\ndim 4\n0\n3 # trailing\n\n9\n";
        let s = parse_point_set(text).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.points(), vec![0, 3, 9]);

        let mut buf = Vec::new();
        write_point_set_text(&mut buf, &s).unwrap();
        let again = parse_point_set(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn json_roundtrip() {
        let s = PointSet::from_points(5, &[1, 2, 30]).unwrap();
        let mut buf = Vec::new();
        write_point_set_json(&mut buf, &s).unwrap();
        let again = parse_point_set(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(again, s);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_point_set("").is_err());
        assert!(parse_point_set("dim x\n1\n").is_err());
        assert!(parse_point_set("dim 2\n7\n").is_err()); // out of range
        assert!(parse_point_set("2\n1\n").is_err()); // missing header
        assert!(parse_point_set("{\"dim\": 2}").is_err());
    }

    #[test]
    fn bounds_csv_shape() {
        let rows = crate::constructions::bound_table(&[5, 7], false).unwrap();
        let csv = bounds_to_csv(&rows, &[None, Some("w7.set".into())]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,dim,base,improved,witness_file");
        assert_eq!(lines[1], "5,9,22,23,");
        assert_eq!(lines[2], "7,13,74,75,w7.set");
    }
}
