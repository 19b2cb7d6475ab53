//! Per-evaluation history and its CSV export.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::error::Result;

pub const CSV_HEADER: &str = "eval_index,value,best_so_far,elapsed_ms";

/// One raw objective evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HistoryRecord {
    /// 1-based.
    pub eval_index: usize,
    pub value: f64,
    pub best_so_far: f64,
    pub elapsed_ms: u64,
}

/// Append-only evaluation log maintaining the best-so-far column.
#[derive(Clone, Debug, Default)]
pub struct History {
    records: Vec<HistoryRecord>,
}

impl History {
    pub fn push(&mut self, value: f64, elapsed_ms: u64) -> &HistoryRecord {
        let best_so_far = match self.records.last() {
            Some(prev) if value >= prev.best_so_far || value.is_nan() => prev.best_so_far,
            _ => value,
        };
        self.records.push(HistoryRecord {
            eval_index: self.records.len() + 1,
            value,
            best_so_far,
            elapsed_ms,
        });
        self.records.last().unwrap()
    }

    pub fn records(&self) -> &[HistoryRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn clear(&mut self) {
        self.records.clear();
    }

    pub fn best(&self) -> Option<f64> {
        self.records.last().map(|r| r.best_so_far)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(32 * (self.records.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.records {
            writeln!(out, "{},{},{},{}", r.eval_index, r.value, r.best_so_far, r.elapsed_ms).unwrap();
        }
        out
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
        file.write_all(self.to_csv().as_bytes())?;
        file.flush()?;
        Ok(())
    }
}
