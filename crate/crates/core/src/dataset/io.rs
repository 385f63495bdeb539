use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use super::{Annotation, Dataset, DatasetHeader, DatasetRecord, TermTriple, ValidityLabel};
use crate::error::DatasetError;

pub const DATASET_FORMAT: &str = "syllogism-dataset";
pub const DATASET_VERSION: u32 = 1;

/// Writes the header line followed by one record per line.
pub fn write_dataset(mut out: impl Write, dataset: &Dataset) -> Result<(), DatasetError> {
    serde_json::to_writer(&mut out, &dataset.header)?;
    out.write_all(b"\n")?;
    for record in &dataset.records {
        serde_json::to_writer(&mut out, record)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a dataset file. The header line is optional so that record files
/// produced elsewhere can be audited; blank lines are skipped. Record ids
/// must be unique.
pub fn read_dataset(input: impl BufRead) -> Result<Dataset, DatasetError> {
    let mut header = None;
    let mut records: Vec<DatasetRecord> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (index, line) in input.lines().enumerate() {
        let line = line?;
        let number = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        let schema = |message: String| DatasetError::Schema { line: number, message };
        let value: serde_json::Value = serde_json::from_str(&line).map_err(|e| schema(e.to_string()))?;
        if value.get("format").is_some() {
            if header.is_some() || !records.is_empty() {
                return Err(schema("header must be the first line".into()));
            }
            let h: DatasetHeader = serde_json::from_value(value).map_err(|e| schema(e.to_string()))?;
            if h.format != DATASET_FORMAT || h.version != DATASET_VERSION {
                return Err(schema(format!(
                    "unsupported format `{}` version {} (expected `{DATASET_FORMAT}` version {DATASET_VERSION})",
                    h.format, h.version
                )));
            }
            header = Some(h);
            continue;
        }
        let record: DatasetRecord = serde_json::from_value(value).map_err(|e| schema(e.to_string()))?;
        if record.premises.is_empty() {
            return Err(schema(format!("record `{}` has no premises", record.id)));
        }
        if !seen.insert(record.id.clone()) {
            return Err(schema(format!("duplicate record id `{}`", record.id)));
        }
        records.push(record);
    }
    let header = header.unwrap_or_else(|| DatasetHeader::new(records.len()));
    Ok(Dataset { header, records })
}

fn csv_reader<R: std::io::Read>(input: R, delimiter: u8) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .delimiter(delimiter)
        .from_reader(input)
}

/// Reads `id,label` (or tab-separated) lines. An optional `id,label`
/// header row, blank lines and `#` comments are skipped.
pub fn read_predictions(input: &str) -> Result<BTreeMap<String, ValidityLabel>, DatasetError> {
    let delimiter = if input.lines().any(|l| l.contains('\t')) {
        b'\t'
    } else {
        b','
    };
    let mut out = BTreeMap::new();
    for (index, row) in csv_reader(input.as_bytes(), delimiter).records().enumerate() {
        let row = row?;
        let line = row.position().map_or(index + 1, |p| p.line() as usize);
        if row.len() == 1 && row[0].is_empty() {
            continue;
        }
        if row.len() != 2 {
            return Err(DatasetError::Schema {
                line,
                message: format!("expected `id,label`, found {} fields", row.len()),
            });
        }
        if index == 0 && row[0].eq_ignore_ascii_case("id") && row[1].eq_ignore_ascii_case("label") {
            continue;
        }
        out.insert(row[0].to_string(), ValidityLabel::parse(&row[1])?);
    }
    Ok(out)
}

/// Reads `s,m,p` lines. An optional `s,m,p` header row, blank lines and
/// `#` comments are skipped.
pub fn read_triples(input: &str) -> Result<Vec<TermTriple>, DatasetError> {
    let mut out = Vec::new();
    for (index, row) in csv_reader(input.as_bytes(), b',').records().enumerate() {
        let row = row?;
        let line = row.position().map_or(index + 1, |p| p.line() as usize);
        if row.len() == 1 && row[0].is_empty() {
            continue;
        }
        if row.len() != 3 {
            return Err(DatasetError::Schema {
                line,
                message: format!("expected `s,m,p`, found {} fields", row.len()),
            });
        }
        if index == 0 && (&row[0], &row[1], &row[2]) == ("s", "m", "p") {
            continue;
        }
        out.push(TermTriple::new(&row[0], &row[1], &row[2])?);
    }
    Ok(out)
}

/// Reads external annotations, one JSON object per line keyed by `id`.
pub fn read_annotations(input: impl BufRead) -> Result<BTreeMap<String, Annotation>, DatasetError> {
    let mut out = BTreeMap::new();
    for (index, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let annotation: Annotation = serde_json::from_str(&line).map_err(|e| DatasetError::Schema {
            line: index + 1,
            message: e.to_string(),
        })?;
        out.insert(annotation.id.clone(), annotation);
    }
    Ok(out)
}
