//! JSONL report store: one record per line, schema-versioned, with a
//! `RunManifest` as the final line (distinguished by its `manifest` field).
//! Interrupted runs leave a sidecar checkpoint next to the output file;
//! resuming with identical parameters truncates to the checkpointed record
//! count and continues, producing a byte-identical final report.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::verify::{Verdict, VerificationRecord};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub total: u64,
    pub holds: u64,
    pub violated: u64,
    pub vacuous: u64,
}

impl VerdictCounts {
    pub fn tally(records: &[VerificationRecord]) -> VerdictCounts {
        let mut c = VerdictCounts::default();
        for r in records {
            c.add(r.verdict);
        }
        c
    }

    pub fn add(&mut self, v: Verdict) {
        self.total += 1;
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Violated => self.violated += 1,
            Verdict::Vacuous => self.vacuous += 1,
        }
    }
}

/// Final line of a completed report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    /// Always true; distinguishes the manifest line from records.
    pub manifest: bool,
    pub schema: u32,
    pub version: String,
    pub command: String,
    pub params: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub started_at: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finished_at: Option<i64>,
    pub counts: VerdictCounts,
}

impl RunManifest {
    pub fn new(command: &str, params: &str) -> RunManifest {
        RunManifest {
            manifest: true,
            schema: crate::verify::RECORD_SCHEMA,
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            params: params.to_string(),
            seed: None,
            started_at: None,
            finished_at: None,
            counts: VerdictCounts::default(),
        }
    }
}

/// Sidecar checkpoint for resumable scans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub command: String,
    pub params: String,
    pub records_written: u64,
}

pub fn checkpoint_path(out: &Path) -> PathBuf {
    let mut os = out.as_os_str().to_owned();
    os.push(".ckpt");
    PathBuf::from(os)
}

pub fn write_checkpoint(out: &Path, ckpt: &Checkpoint) -> std::io::Result<()> {
    fs::write(
        checkpoint_path(out),
        serde_json::to_string(ckpt).expect("checkpoint serializes"),
    )
}

pub fn read_checkpoint(out: &Path) -> std::io::Result<Option<Checkpoint>> {
    let p = checkpoint_path(out);
    if !p.exists() {
        return Ok(None);
    }
    let data = fs::read_to_string(p)?;
    Ok(serde_json::from_str(&data).ok())
}

pub fn clear_checkpoint(out: &Path) -> std::io::Result<()> {
    let p = checkpoint_path(out);
    if p.exists() {
        fs::remove_file(p)?;
    }
    Ok(())
}

/// A parsed line of a report file.
pub enum ReportLine {
    Record(VerificationRecord),
    Manifest(RunManifest),
}

pub fn parse_line(line: &str) -> Result<ReportLine, serde_json::Error> {
    let v: serde_json::Value = serde_json::from_str(line)?;
    if v.get("manifest").and_then(|m| m.as_bool()) == Some(true) {
        Ok(ReportLine::Manifest(serde_json::from_value(v)?))
    } else {
        Ok(ReportLine::Record(serde_json::from_value(v)?))
    }
}

pub fn write_record(w: &mut impl Write, r: &VerificationRecord) -> std::io::Result<()> {
    serde_json::to_writer(&mut *w, r)?;
    writeln!(w)
}

pub fn write_manifest(w: &mut impl Write, m: &RunManifest) -> std::io::Result<()> {
    serde_json::to_writer(&mut *w, m)?;
    writeln!(w)
}

/// Per-statement verdict counts plus the tightest-slack instances.
#[derive(Debug, Default)]
pub struct Summary {
    pub by_statement: BTreeMap<String, VerdictCounts>,
    /// Up to `EXTREMAL_KEEP` records with the smallest slack, per statement.
    pub extremal: BTreeMap<String, Vec<(i64, String)>>,
    pub manifest: Option<RunManifest>,
    pub records: Vec<VerificationRecord>,
}

const EXTREMAL_KEEP: usize = 5;

#[derive(Debug)]
pub struct MalformedLine {
    pub line_number: usize,
    pub error: serde_json::Error,
}

impl std::fmt::Display for MalformedLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "malformed line {}: {}", self.line_number, self.error)
    }
}

pub fn summarize(path: &Path) -> std::io::Result<Result<Summary, MalformedLine>> {
    let file = fs::File::open(path)?;
    let mut summary = Summary::default();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(&line) {
            Err(error) => {
                return Ok(Err(MalformedLine {
                    line_number: i + 1,
                    error,
                }))
            }
            Ok(ReportLine::Manifest(m)) => summary.manifest = Some(m),
            Ok(ReportLine::Record(r)) => {
                let key = r.statement.to_string();
                summary.by_statement.entry(key.clone()).or_default().add(r.verdict);
                if let Some(slack) = r.slack() {
                    let entry = summary.extremal.entry(key).or_default();
                    entry.push((slack, r.instance.clone()));
                    entry.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
                    entry.truncate(EXTREMAL_KEEP);
                }
                summary.records.push(r);
            }
        }
    }
    Ok(Ok(summary))
}

impl Summary {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("statement            total   holds violated  vacuous\n");
        for (stmt, c) in &self.by_statement {
            out.push_str(&format!(
                "{stmt:<20} {:>6} {:>7} {:>8} {:>8}\n",
                c.total, c.holds, c.violated, c.vacuous
            ));
        }
        for (stmt, ex) in &self.extremal {
            if let Some((slack, instance)) = ex.first() {
                out.push_str(&format!("tightest {stmt}: slack {slack} on {instance}\n"));
            }
        }
        if self.by_statement.is_empty() {
            out.push_str("(empty report)\n");
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("statement,variant,verdict,predicted,observed,slack,instance\n");
        for r in &self.records {
            let q = |x: Option<crate::verify::Quantity>| match x {
                Some(crate::verify::Quantity::Int(v)) => v.to_string(),
                Some(crate::verify::Quantity::Interval([a, b])) => format!("[{a};{b}]"),
                None => String::new(),
            };
            out.push_str(&format!(
                "{},{},{:?},{},{},{},\"{}\"\n",
                r.statement,
                r.variant.clone().unwrap_or_default(),
                r.verdict,
                q(r.predicted),
                q(r.observed),
                r.slack().map(|s| s.to_string()).unwrap_or_default(),
                r.instance.replace('"', "''"),
            ));
        }
        out
    }
}
