//! Data emission: scientific notation with 12 significant digits, CSV with
//! comma delimiters, and JSON that carries the exact same number tokens so
//! both formats are digit-for-digit comparable.

use std::path::{Path, PathBuf};

/// Renders a number in scientific notation with 12 significant digits.
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

/// One table cell: a number (rendered via [`fmt12`]) or verbatim text.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Text(String),
}

/// A rectangular result table with named columns.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Num(x) => fmt12(*x),
                    Cell::Text(s) => csv_field(s),
                })
                .collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let cols: Vec<String> = self.columns.iter().map(|c| json_string(c)).collect();
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row
                    .iter()
                    .map(|c| match c {
                        Cell::Num(x) => fmt12(*x),
                        Cell::Text(s) => json_string(s),
                    })
                    .collect();
                format!("    [{}]", cells.join(", "))
            })
            .collect();
        format!(
            "{{\n  \"columns\": [{}],\n  \"rows\": [\n{}\n  ]\n}}\n",
            cols.join(", "),
            rows.join(",\n")
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected csv or json)")),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn json_opt_num(x: Option<f64>) -> String {
    match x {
        Some(v) => fmt12(v),
        None => "null".to_string(),
    }
}

/// Renders a flat JSON object; values must already be valid JSON fragments.
pub fn json_object(fields: &[(&str, String)]) -> String {
    let inner: Vec<String> = fields
        .iter()
        .map(|(k, v)| format!("  {}: {}", json_string(k), v))
        .collect();
    format!("{{\n{}\n}}\n", inner.join(",\n"))
}

/// Renders a JSON array of pre-rendered fragments.
pub fn json_array(items: &[String]) -> String {
    if items.is_empty() {
        return "[]".to_string();
    }
    let shifted: Vec<String> = items
        .iter()
        .map(|it| {
            let indented = it.trim_end().replace('\n', "\n  ");
            format!("  {indented}")
        })
        .collect();
    format!("[\n{}\n]", shifted.join(",\n"))
}

/// Writes `contents` to `dir/name`, creating the directory if needed.
pub fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, String> {
    std::fs::create_dir_all(dir)
        .map_err(|e| format!("cannot create output directory {}: {e}", dir.display()))?;
    let path = dir.join(name);
    std::fs::write(&path, contents)
        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    Ok(path)
}
