use std::io::Write;

use serde::Serialize;

use crate::LabError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Writes `rows` as CSV with a header line, or as a pretty JSON array.
pub fn write_rows<T: Serialize, W: Write>(rows: &[T], format: Format, mut out: W) -> Result<(), LabError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn rows_to_string<T: Serialize>(rows: &[T], format: Format) -> Result<String, LabError> {
    let mut buf = Vec::new();
    write_rows(rows, format, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv and json output is UTF-8"))
}
