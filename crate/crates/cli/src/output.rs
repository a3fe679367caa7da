//! Streaming row output in b-file, CSV or JSON form.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `n value` per line
    Bfile,
    Csv,
    /// array of objects; values as decimal strings
    Json,
}

/// Writes rows as they are produced. The first column is the integer index
/// `n`; every other cell is written as a string.
pub struct RowWriter<'a, W: Write> {
    out: &'a mut W,
    format: Format,
    columns: &'static [&'static str],
    rows: usize,
}

impl<'a, W: Write> RowWriter<'a, W> {
    pub fn new(
        out: &'a mut W,
        format: Format,
        columns: &'static [&'static str],
    ) -> io::Result<Self> {
        match format {
            Format::Csv => writeln!(out, "{}", columns.join(","))?,
            Format::Json => write!(out, "[")?,
            Format::Bfile => {}
        }
        Ok(RowWriter {
            out,
            format,
            columns,
            rows: 0,
        })
    }

    pub fn row(&mut self, n: i64, cells: &[&dyn ToString]) -> io::Result<()> {
        debug_assert_eq!(cells.len() + 1, self.columns.len());
        match self.format {
            Format::Bfile => {
                write!(self.out, "{n}")?;
                for c in cells {
                    write!(self.out, " {}", c.to_string())?;
                }
                writeln!(self.out)?;
            }
            Format::Csv => {
                write!(self.out, "{n}")?;
                for c in cells {
                    write!(self.out, ",{}", csv_field(&c.to_string()))?;
                }
                writeln!(self.out)?;
            }
            Format::Json => {
                let mut obj = Map::new();
                obj.insert(self.columns[0].into(), Value::from(n));
                for (name, c) in self.columns[1..].iter().zip(cells) {
                    obj.insert((*name).into(), Value::String(c.to_string()));
                }
                let sep = if self.rows == 0 { "\n" } else { ",\n" };
                write!(self.out, "{sep}{}", Value::Object(obj))?;
            }
        }
        self.rows += 1;
        Ok(())
    }

    pub fn finish(self) -> io::Result<usize> {
        if self.format == Format::Json {
            if self.rows > 0 {
                writeln!(self.out)?;
            }
            writeln!(self.out, "]")?;
        }
        self.out.flush()?;
        Ok(self.rows)
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        let mut w = RowWriter::new(&mut buf, format, &["n", "value", "label"]).unwrap();
        w.row(1, &[&2, &"a,b"]).unwrap();
        w.row(2, &[&"12345678901234567890123", &"x"]).unwrap();
        w.finish().unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats() {
        assert_eq!(
            render(Format::Bfile),
            "1 2 a,b\n2 12345678901234567890123 x\n"
        );
        assert_eq!(
            render(Format::Csv),
            "n,value,label\n1,2,\"a,b\"\n2,12345678901234567890123,x\n"
        );
        let json: Value = serde_json::from_str(&render(Format::Json)).unwrap();
        assert_eq!(json[1]["value"], "12345678901234567890123");
        assert_eq!(json[0]["n"], 1);
    }

    #[test]
    fn empty_json_is_an_array() {
        let mut buf = Vec::new();
        let w = RowWriter::new(&mut buf, Format::Json, &["n", "value"]).unwrap();
        w.finish().unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "[]\n");
    }
}
