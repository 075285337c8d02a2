//! CSV and JSON writers. Every file carries its timestamp on a line of its
//! own so that two runs can be compared after dropping that line.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const TIMESTAMP_KEY: &str = "generated_at";

/// RFC 3339 time of this run, taken from `SOURCE_DATE_EPOCH` when set.
pub fn timestamp() -> String {
    let epoch = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.parse::<i64>().ok())
        .and_then(|s| chrono::DateTime::from_timestamp(s, 0));
    epoch
        .unwrap_or_else(chrono::Utc::now)
        .to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Twelve significant digits.
pub fn number(x: f64) -> String {
    format!("{x:.11e}")
}

pub struct Sink {
    dir: PathBuf,
    generated_at: String,
    csv: bool,
    json: bool,
    written: Vec<PathBuf>,
}

impl Sink {
    pub fn new(dir: impl Into<PathBuf>, csv: bool, json: bool) -> CliResult<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        Ok(Sink {
            dir,
            generated_at: timestamp(),
            csv,
            json,
            written: Vec::new(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn written(&self) -> &[PathBuf] {
        &self.written
    }

    /// Header comment line, then a header row and numeric rows.
    pub fn csv(&mut self, name: &str, header: &[&str], rows: &[Vec<f64>]) -> CliResult<()> {
        if !self.csv {
            return Ok(());
        }
        let path = self.dir.join(name);
        let mut buf = format!("# {TIMESTAMP_KEY}: {}\n", self.generated_at).into_bytes();
        {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut buf);
            let fail = |e: csv::Error| CliError::Serialize(e.to_string());
            w.write_record(header).map_err(fail)?;
            for row in rows {
                w.write_record(row.iter().map(|&x| number(x)))
                    .map_err(fail)?;
            }
            w.flush().map_err(|e| CliError::io(&path, e))?;
        }
        fs::write(&path, buf).map_err(|e| CliError::io(&path, e))?;
        self.written.push(path);
        Ok(())
    }

    pub fn json<T: Serialize>(&mut self, name: &str, value: &T) -> CliResult<()> {
        if !self.json {
            return Ok(());
        }
        let path = self.dir.join(name);
        let text = render_json(&self.generated_at, value)?;
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        self.written.push(path);
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    generated_at: String,
    report: T,
}

/// `{"generated_at": ..., "report": ...}`, pretty-printed so the timestamp
/// sits on its own line.
pub fn render_json<T: Serialize>(generated_at: &str, value: &T) -> CliResult<String> {
    let envelope = Envelope {
        generated_at: generated_at.to_string(),
        report: value,
    };
    let mut text =
        serde_json::to_string_pretty(&envelope).map_err(|e| CliError::Serialize(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// Read back the `report` of a file written by [`Sink::json`].
pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let envelope: Envelope<T> = serde_json::from_str(&text)
        .map_err(|e| CliError::Serialize(format!("{}: {e}", path.display())))?;
    Ok(envelope.report)
}

/// File contents with the timestamp line removed.
pub fn without_timestamp(text: &str) -> String {
    text.lines()
        .filter(|l| !l.contains(TIMESTAMP_KEY))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_keep_twelve_digits() {
        assert_eq!(number(0.154705131366), "1.54705131366e-1");
        assert_eq!(number(-5.4e-11), "-5.40000000000e-11");
    }

    #[test]
    fn csv_layout() {
        let dir = tempfile::tempdir().unwrap();
        let mut sink = Sink::new(dir.path(), true, true).unwrap();
        sink.csv("t.csv", &["a", "b"], &[vec![1.0, 2.5]]).unwrap();
        let text = fs::read_to_string(dir.path().join("t.csv")).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# generated_at: "));
        assert_eq!(lines[1], "a,b");
        assert_eq!(lines[2], "1.00000000000e0,2.50000000000e0");
        assert!(!text.contains('\r'));
    }

    #[test]
    fn json_round_trip_and_timestamp_line() {
        let dir = tempfile::tempdir().unwrap();
        let mut sink = Sink::new(dir.path(), false, true).unwrap();
        let value = (0.1 + 0.2, Some(1e-300), None::<f64>);
        sink.json("v.json", &value).unwrap();
        sink.csv("skipped.csv", &["x"], &[]).unwrap();
        assert!(!dir.path().join("skipped.csv").exists());
        let path = dir.path().join("v.json");
        let back: (f64, Option<f64>, Option<f64>) = read_json(&path).unwrap();
        assert_eq!(back, value);
        let text = fs::read_to_string(&path).unwrap();
        let stamped: Vec<&str> = text.lines().filter(|l| l.contains(TIMESTAMP_KEY)).collect();
        assert_eq!(stamped.len(), 1);
    }

    #[test]
    fn source_date_epoch_format() {
        let t = chrono::DateTime::from_timestamp(0, 0)
            .unwrap()
            .to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
        assert_eq!(t, "1970-01-01T00:00:00Z");
    }
}
