//! Cayley-table text format.
//!
//! ```text
//! N
//! <row 0: N whitespace-separated 0-based indices>
//! ...
//! <row N-1>
//! [optional: N whitespace-separated labels]
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::table::SemigroupTable;

pub fn parse_table(text: &str) -> Result<SemigroupTable> {
    let mut lines = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let size: usize = header.trim().parse().map_err(|_| Error::Parse {
        line: line_no,
        message: format!("expected table size, found {:?}", header.trim()),
    })?;
    if size == 0 {
        return Err(Error::Parse {
            line: line_no,
            message: "table size must be at least 1".into(),
        });
    }

    let mut rows = Vec::with_capacity(size);
    for a in 0..size {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: line_no + a + 1,
            message: format!("missing row {a}"),
        })?;
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad entry {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != size {
            return Err(Error::Parse {
                line: line_no,
                message: format!("row {a} has {} entries, expected {size}", row.len()),
            });
        }
        if let Some(&bad) = row.iter().find(|&&p| p >= size) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("entry {bad} out of range for size {size}"),
            });
        }
        rows.push(row);
    }

    let mut table = SemigroupTable::from_rows(&rows)?;
    if let Some((line_no, line)) = lines.next() {
        let labels: Vec<String> = line.split_whitespace().map(str::to_owned).collect();
        if labels.len() != size {
            return Err(Error::Parse {
                line: line_no,
                message: format!("{} labels, expected {size}", labels.len()),
            });
        }
        table = table.with_labels(labels)?;
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            message: "trailing content after labels".into(),
        });
    }
    Ok(table)
}

pub fn write_table(table: &SemigroupTable) -> String {
    let n = table.size();
    let mut out = String::with_capacity(n * n * 3 + 16);
    let _ = writeln!(out, "{n}");
    for a in 0..n {
        let row: Vec<String> = table.row(a).iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    if let Some(labels) = table.labels() {
        let _ = writeln!(out, "{}", labels.join(" "));
    }
    out
}
