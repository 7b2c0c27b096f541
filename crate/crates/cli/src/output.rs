use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Buffered standard output or file.
pub fn open(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization is infallible")
}

/// Minimal CSV field quoting.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Streams one object per record, then the count.
pub struct ObjectStream<'a> {
    out: &'a mut dyn Write,
    format: Format,
    count: u64,
}

impl<'a> ObjectStream<'a> {
    pub fn start(out: &'a mut dyn Write, format: Format, family: &str) -> io::Result<Self> {
        match format {
            Format::Text => {}
            Format::Csv => writeln!(out, "kind,value")?,
            Format::Json => write!(out, "{{\"family\":{},\"items\":[", json_string(family))?,
        }
        Ok(ObjectStream {
            out,
            format,
            count: 0,
        })
    }

    pub fn push(&mut self, item: &str) -> io::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{item}")?,
            Format::Csv => writeln!(self.out, "object,{}", csv_field(item))?,
            Format::Json => {
                if self.count > 0 {
                    self.out.write_all(b",")?;
                }
                self.out.write_all(json_string(item).as_bytes())?;
            }
        }
        self.count += 1;
        Ok(())
    }

    pub fn finish(self) -> io::Result<u64> {
        match self.format {
            Format::Text => writeln!(self.out, "count: {}", self.count)?,
            Format::Csv => writeln!(self.out, "count,{}", self.count)?,
            Format::Json => writeln!(self.out, "],\"count\":{}}}", self.count)?,
        }
        self.out.flush()?;
        Ok(self.count)
    }
}
