use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};

use serde::Serialize;

use crate::args::OutputArgs;
use crate::CliError;

pub const SCHEMA: u32 = 1;

/// Versioned top-level JSON object.
#[derive(Serialize)]
pub struct Envelope<T> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: T,
}

pub fn json<T: Serialize>(body: T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(&Envelope {
        schema: SCHEMA,
        body,
    })?;
    s.push('\n');
    Ok(s)
}

pub fn csv<T: Serialize>(rows: impl IntoIterator<Item = T>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut l = String::new();
        for (cell, w) in cells.iter().zip(&widths) {
            let _ = write!(l, "{cell:<w$}  ");
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn emit(out: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn note(out: &OutputArgs, msg: &str) {
    if !out.quiet {
        eprintln!("{msg}");
    }
}
