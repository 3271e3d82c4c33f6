//! Seifert-matrix text files and knot-table CSV files.

use knotorder::{IntMatrix, KnotRecord, LaurentPolynomial, SeifertMatrix};
use num_bigint::BigInt;
use serde::Deserialize;

use crate::CliError;

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a Seifert-matrix file.
///
/// The first nonblank line holds the dimension `2g`; each of the next `2g`
/// nonblank lines holds one row. `#` starts a comment. Line numbers in
/// errors are 1-based.
pub fn parse_seifert_file(text: &str) -> Result<SeifertMatrix, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((dim_line, dim_text)) = lines.next() else {
        return Err(parse_error(1, "missing dimension line"));
    };
    let dim: usize = dim_text
        .parse()
        .map_err(|_| parse_error(dim_line, format!("expected a dimension, found {dim_text:?}")))?;

    let mut rows = Vec::with_capacity(dim);
    let mut last_line = dim_line;
    for _ in 0..dim {
        let Some((n, row_text)) = lines.next() else {
            return Err(parse_error(
                last_line + 1,
                format!("expected {dim} rows, found {}", rows.len()),
            ));
        };
        last_line = n;
        let row: Vec<BigInt> = row_text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| parse_error(n, format!("not an integer: {tok:?}")))
            })
            .collect::<Result<_, _>>()?;
        if row.len() != dim {
            return Err(parse_error(n, format!("expected {dim} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if let Some((n, _)) = lines.next() {
        return Err(parse_error(n, "trailing content after the matrix"));
    }
    let matrix = IntMatrix::try_from_rows(rows).expect("rows have equal length");
    Ok(SeifertMatrix::new(matrix)?)
}

/// Canonical text form; `parse_seifert_file(&emit_seifert_file(v)) == v`.
pub fn emit_seifert_file(v: &SeifertMatrix) -> String {
    let m = v.matrix();
    let mut out = format!("{}\n", m.rows());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub const KNOT_TABLE_HEADER: [&str; 4] = ["name", "crossings", "alexander", "determinant"];

#[derive(Deserialize)]
struct RawRow {
    name: String,
    crossings: String,
    alexander: String,
    determinant: String,
}

/// Parses a knot table; every row is validated by [`KnotRecord::new`].
///
/// Errors carry the 1-based file line of the offending row.
pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());

    let headers = reader.headers().map_err(|e| parse_error(1, e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != KNOT_TABLE_HEADER {
        return Err(parse_error(
            1,
            format!("expected header {}", KNOT_TABLE_HEADER.join(",")),
        ));
    }

    let mut records = Vec::new();
    let mut raw = csv::StringRecord::new();
    loop {
        match reader.read_record(&mut raw) {
            Ok(true) => {}
            Ok(false) => break,
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line() as usize);
                return Err(parse_error(line, e.to_string()));
            }
        }
        let line = raw.position().map_or(0, |p| p.line() as usize);
        let row: RawRow = raw
            .deserialize(Some(&headers))
            .map_err(|e| parse_error(line, e.to_string()))?;
        records.push(record_from_row(row, line)?);
    }
    Ok(records)
}

fn record_from_row(row: RawRow, line: usize) -> Result<KnotRecord, CliError> {
    let crossings: u32 = row
        .crossings
        .parse()
        .map_err(|_| parse_error(line, format!("bad crossing number {:?}", row.crossings)))?;
    let determinant: u64 = row
        .determinant
        .parse()
        .map_err(|_| parse_error(line, format!("bad determinant {:?}", row.determinant)))?;
    let coeffs: Vec<BigInt> = row
        .alexander
        .split(';')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| parse_error(line, format!("bad Alexander coefficient {c:?}")))
        })
        .collect::<Result<_, _>>()?;
    let alexander = LaurentPolynomial::normalize(coeffs.clone());
    if alexander.coeffs() != coeffs.as_slice() {
        return Err(parse_error(line, "Alexander coefficients are not normalized"));
    }
    KnotRecord::new(row.name, crossings, alexander, determinant).map_err(|e| CliError::Record { line, source: e })
}

/// Canonical CSV form of a knot table.
pub fn emit_knot_table(records: &[KnotRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(KNOT_TABLE_HEADER).expect("in-memory write");
    for r in records {
        let alexander: Vec<String> = r.alexander.coeffs().iter().map(ToString::to_string).collect();
        writer
            .write_record([
                r.name.clone(),
                r.crossings.to_string(),
                alexander.join(";"),
                r.determinant.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is UTF-8")
}
