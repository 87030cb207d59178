//! CSV format for complex vectors and grid data.
//!
//! One header line (`index,re,im`, `x,re,im` or `y,re,im`), then one row per
//! entry. Floats are written with 17 significant digits, so reading a file
//! back reproduces every value bit for bit. Lines end in LF.

use crate::CliError;
use num_complex::Complex64;
use std::io::{Read, Write};

/// Scientific notation with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_float(field: &str, line: u64, column: &str) -> Result<f64, CliError> {
    field
        .trim()
        .parse()
        .map_err(|_| CliError::Parse(format!("line {line}: invalid {column} value {field:?}")))
}

/// Reads the `re,im` columns of a three-column CSV with a header row.
///
/// The first column (index or grid coordinate) is not interpreted; rows are
/// taken in file order.
pub fn read_complex<R: Read>(reader: R) -> Result<Vec<Complex64>, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| CliError::Parse(format!("unreadable CSV header: {e}")))?;
    if headers.len() != 3 {
        return Err(CliError::Parse(format!(
            "expected 3 columns (index,re,im), header has {}",
            headers.len()
        )));
    }
    let mut values = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| CliError::Parse(format!("malformed CSV: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let re = parse_float(&record[1], line, "re")?;
        let im = parse_float(&record[2], line, "im")?;
        values.push(Complex64::new(re, im));
    }
    Ok(values)
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn write_rows<W: Write>(
    out: W,
    first: &str,
    rows: impl Iterator<Item = (String, Complex64)>,
) -> Result<(), CliError> {
    let mut w = writer(out);
    w.write_record([first, "re", "im"]).map_err(csv_io)?;
    for (label, z) in rows {
        w.write_record([label, format_float(z.re), format_float(z.im)])
            .map_err(csv_io)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_io(err: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(err))
}

/// Writes `index,re,im` rows.
pub fn write_indexed<W: Write>(out: W, values: &[Complex64]) -> Result<(), CliError> {
    write_rows(
        out,
        "index",
        values.iter().enumerate().map(|(i, z)| (i.to_string(), *z)),
    )
}

/// Writes `<axis>,re,im` rows with the grid coordinate in the first column.
pub fn write_grid<W: Write>(
    out: W,
    axis: &str,
    coords: &[f64],
    values: &[Complex64],
) -> Result<(), CliError> {
    debug_assert_eq!(coords.len(), values.len());
    write_rows(
        out,
        axis,
        coords
            .iter()
            .zip(values)
            .map(|(c, z)| (format_float(*c), *z)),
    )
}
