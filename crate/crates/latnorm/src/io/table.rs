//! Operation tables as CSV. The corner cell is `T`, the header row and the
//! leading column both carry element labels, and cells hold result labels.
//! Rows and columns may come in any order on input — they are resolved by
//! label against the lattice — and are written in element-index order.

use crate::io::ParseError;
use crate::lattice::FiniteLattice;
use crate::tnorm::OpTable;

pub fn parse_table(l: &FiniteLattice, text: &str) -> Result<OpTable, ParseError> {
    let n = l.n();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for rec in reader.records() {
        records.push(rec?);
    }
    if records.len() != n + 1 {
        return Err(ParseError::ShapeMismatch(format!(
            "expected {} rows after the header, found {}",
            n,
            records.len().saturating_sub(1)
        )));
    }
    let header = &records[0];
    if header.len() != n + 1 {
        return Err(ParseError::ShapeMismatch(format!(
            "expected {} columns after the corner, found {}",
            n,
            header.len().saturating_sub(1)
        )));
    }
    let resolve = |line: usize, label: &str| {
        l.index_of(label).ok_or(ParseError::UnknownLabel {
            line,
            label: label.to_string(),
        })
    };
    let mut cols = Vec::with_capacity(n);
    let mut seen_col = vec![false; n];
    for c in 1..=n {
        let idx = resolve(1, &header[c])?;
        if seen_col[idx] {
            return Err(ParseError::ShapeMismatch(format!(
                "column label `{}` appears twice",
                &header[c]
            )));
        }
        seen_col[idx] = true;
        cols.push(idx);
    }
    let mut table = OpTable::filled(n, l.bottom());
    let mut seen_row = vec![false; n];
    for (ri, rec) in records[1..].iter().enumerate() {
        let line = ri + 2;
        if rec.len() != n + 1 {
            return Err(ParseError::ShapeMismatch(format!(
                "row {} has {} cells, expected {}",
                line,
                rec.len().saturating_sub(1),
                n
            )));
        }
        let row = resolve(line, &rec[0])?;
        if seen_row[row] {
            return Err(ParseError::ShapeMismatch(format!(
                "row label `{}` appears twice",
                &rec[0]
            )));
        }
        seen_row[row] = true;
        for (ci, &col) in cols.iter().enumerate() {
            table.set(row, col, resolve(line, &rec[ci + 1])?);
        }
    }
    Ok(table)
}

pub fn write_table(l: &FiniteLattice, t: &OpTable) -> String {
    assert_eq!(l.n(), t.n(), "table size must match the lattice");
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["T".to_string()];
    header.extend(l.elements().map(|x| l.label(x).to_string()));
    w.write_record(&header).unwrap();
    for x in l.elements() {
        let mut row = vec![l.label(x).to_string()];
        row.extend(l.elements().map(|y| l.label(t.get(x, y)).to_string()));
        w.write_record(&row).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}
