//! Record writers: JSON lines or CSV with one header per table.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use podq_core::{CheckReport, Series, StatTable};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct CoeffRow {
    n: usize,
    coeff: String,
}

struct ReportRow<'a> {
    check: &'a str,
    order: usize,
    pass: bool,
    n: Option<u64>,
    expected: Option<&'a str>,
    actual: Option<&'a str>,
    ms: f64,
}

impl<'a> From<&'a CheckReport> for ReportRow<'a> {
    fn from(r: &'a CheckReport) -> Self {
        let cx = r.counterexample.as_ref();
        ReportRow {
            check: &r.check,
            order: r.order,
            pass: r.pass,
            n: cx.map(|c| c.n),
            expected: cx.map(|c| c.expected.as_str()),
            actual: cx.map(|c| c.actual.as_str()),
            ms: r.ms,
        }
    }
}

pub struct Sink {
    out: Box<dyn Write>,
    csv: Option<csv::Writer<Box<dyn Write>>>,
}

impl Sink {
    pub fn new(out: impl Write + 'static, format: Format) -> Self {
        let out: Box<dyn Write> = Box::new(io::BufWriter::new(out));
        match format {
            Format::Json => Sink { out, csv: None },
            Format::Csv => Sink {
                out: Box::new(io::sink()),
                csv: Some(csv::Writer::from_writer(out)),
            },
        }
    }

    fn json_line<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, value)?;
        self.out.write_all(b"\n")
    }

    /// One record per coefficient, as decimal strings in either mode.
    pub fn coefficients(&mut self, s: &Series) -> io::Result<()> {
        for (n, coeff) in s.to_decimal_strings().into_iter().enumerate() {
            let row = CoeffRow { n, coeff };
            match &mut self.csv {
                Some(w) => w.serialize(row)?,
                None => self.json_line(&row)?,
            }
        }
        Ok(())
    }

    pub fn stat_rows(&mut self, table: &StatTable) -> io::Result<()> {
        for row in table.rows() {
            match &mut self.csv {
                Some(w) => w.serialize(&row)?,
                None => self.json_line(&row)?,
            }
        }
        Ok(())
    }

    /// Writes the CSV header even when no report follows.
    pub fn begin_reports(&mut self) -> io::Result<()> {
        if let Some(w) = &mut self.csv {
            w.write_record(["check", "order", "pass", "n", "expected", "actual", "ms"])?;
        }
        Ok(())
    }

    pub fn report(&mut self, r: &CheckReport) -> io::Result<()> {
        match &mut self.csv {
            Some(w) => {
                let row = ReportRow::from(r);
                w.write_record([
                    row.check.to_string(),
                    row.order.to_string(),
                    row.pass.to_string(),
                    row.n.map(|n| n.to_string()).unwrap_or_default(),
                    row.expected.unwrap_or_default().to_string(),
                    row.actual.unwrap_or_default().to_string(),
                    format!("{:.3}", row.ms),
                ])?;
                Ok(())
            }
            None => self.json_line(r),
        }
    }

    pub fn finish(mut self) -> io::Result<()> {
        if let Some(w) = &mut self.csv {
            w.flush()?;
        }
        self.out.flush()
    }
}
