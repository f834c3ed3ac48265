//! Row-by-row output in CSV, JSON Lines or plain text.

use std::io::{self, Write};

use serde_json::{Map, Number, Value};

use crate::args::Format;

/// One output value.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Exact integer, kept as decimal text so big values survive.
    Int(String),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    pub fn int(v: impl ToString) -> Self {
        Cell::Int(v.to_string())
    }

    pub fn text(v: impl ToString) -> Self {
        Cell::Text(v.to_string())
    }

    fn render(&self) -> String {
        match self {
            Cell::Int(s) | Cell::Text(s) => s.clone(),
            Cell::Float(x) => format!("{x}"),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(s) => match s.parse::<i64>() {
                Ok(v) => Value::Number(v.into()),
                Err(_) => Value::String(s.clone()),
            },
            Cell::Float(x) => Number::from_f64(*x).map(Value::Number).unwrap_or(Value::Null),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

/// Writes records as they are produced; nothing is buffered beyond one row.
pub struct Emitter<'a> {
    format: Format,
    header: Vec<String>,
    /// Print the header in text mode too.
    text_header: bool,
    out: &'a mut dyn Write,
    started: bool,
}

impl<'a> Emitter<'a> {
    pub fn new(format: Format, header: &[&str], out: &'a mut dyn Write) -> Self {
        Self::with_header(format, header.iter().map(|s| s.to_string()).collect(), false, out)
    }

    /// Table output: text mode shows the header as a CSV line as well.
    pub fn table(format: Format, header: Vec<String>, out: &'a mut dyn Write) -> Self {
        Self::with_header(format, header, true, out)
    }

    fn with_header(format: Format, header: Vec<String>, text_header: bool, out: &'a mut dyn Write) -> Self {
        Self { format, header, text_header, out, started: false }
    }

    pub fn row(&mut self, cells: Vec<Cell>) -> io::Result<()> {
        debug_assert_eq!(cells.len(), self.header.len());
        let first = !self.started;
        self.started = true;
        match self.format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
                if first {
                    w.write_record(&self.header)?;
                }
                w.write_record(cells.iter().map(Cell::render))?;
                let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
                self.out.write_all(&bytes)?;
            }
            Format::Json => {
                let obj: Map<String, Value> = self.header.iter().cloned().zip(cells.iter().map(Cell::json)).collect();
                serde_json::to_writer(&mut *self.out, &Value::Object(obj))?;
                self.out.write_all(b"\n")?;
            }
            Format::Text => {
                if first && self.text_header {
                    writeln!(self.out, "{}", self.header.join(","))?;
                }
                let sep = if self.text_header { "," } else { " " };
                let line: Vec<String> = cells.iter().map(Cell::render).collect();
                writeln!(self.out, "{}", line.join(sep))?;
            }
        }
        self.out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let mut buf = Vec::new();
        let mut e = Emitter::new(Format::Csv, &["a", "b"], &mut buf);
        e.row(vec![Cell::int(1), Cell::text("x,y")]).unwrap();
        e.row(vec![Cell::int(2), Cell::Bool(true)]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a,b\n1,\"x,y\"\n2,true\n");

        let mut buf = Vec::new();
        let mut e = Emitter::new(Format::Json, &["a", "b"], &mut buf);
        e.row(vec![Cell::int("123456789012345678901234567890"), Cell::Float(0.5)]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "{\"a\":\"123456789012345678901234567890\",\"b\":0.5}\n");

        let mut buf = Vec::new();
        let mut e = Emitter::new(Format::Text, &["a"], &mut buf);
        e.row(vec![Cell::text("0101")]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0101\n");
    }
}
