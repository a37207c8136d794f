use std::fmt;
use std::io::{self, Stdout, Write};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Whitespace-separated columns, no header.
    Plain,
    /// Comma-separated with a header row.
    Csv,
    /// One JSON object per line.
    Jsonl,
}

/// Row sink for the three output formats. Plain rows are tab-separated.
pub enum Table {
    Plain(Stdout),
    Csv(Box<csv::Writer<Stdout>>),
    Jsonl(Stdout),
}

impl Table {
    pub fn new(format: Format, header: &[&str]) -> io::Result<Self> {
        Ok(match format {
            Format::Plain => Table::Plain(io::stdout()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(io::stdout());
                w.write_record(header).map_err(io::Error::other)?;
                Table::Csv(Box::new(w))
            }
            Format::Jsonl => Table::Jsonl(io::stdout()),
        })
    }

    pub fn row(&mut self, fields: &[String], object: serde_json::Value) -> io::Result<()> {
        match self {
            Table::Plain(out) => writeln!(out.lock(), "{}", fields.join("\t")),
            Table::Csv(w) => w.write_record(fields).map_err(io::Error::other),
            Table::Jsonl(out) => writeln!(out.lock(), "{object}"),
        }
    }

    pub fn finish(self) -> io::Result<()> {
        match self {
            Table::Csv(mut w) => w.flush(),
            Table::Plain(mut out) | Table::Jsonl(mut out) => out.flush(),
        }
    }
}

/// A one-row answer: plain prints just the result, the last field.
pub fn single(
    format: Format,
    header: &[&str],
    fields: &[String],
    object: serde_json::Value,
) -> Result<(), super::Failure> {
    match format {
        Format::Plain => line(format_args!(
            "{}",
            fields.last().map(String::as_str).unwrap_or("")
        ))?,
        _ => {
            let mut table = Table::new(format, header)?;
            table.row(fields, object)?;
            table.finish()?;
        }
    }
    Ok(())
}

pub fn line(args: fmt::Arguments<'_>) -> io::Result<()> {
    let mut out = io::stdout().lock();
    out.write_fmt(args)?;
    out.write_all(b"\n")
}
