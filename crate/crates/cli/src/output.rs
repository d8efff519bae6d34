// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! CSV tables.

use std::io::Write;

/// A header plus uniform rows of pre-formatted fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.header.len(), "row does not match the schema");
        self.rows.push(row);
    }
}

/// Shortest representation that parses back to the same bits.
pub fn float(x: f64) -> String {
    format!("{x:?}")
}

pub fn write_csv<W: Write>(table: &Table, out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
