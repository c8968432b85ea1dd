//! Command-line front end: job descriptions, dispatch to the library and deterministic JSON
//! reports.
//!
//! A [`JobSpec`] names a command such as `cherednik scan` together with its inputs; [`run`]
//! turns it into a [`Report`]. Rationals are parsed exactly, and `"generic"` keeps a parameter
//! symbolic. Reports contain no timestamps unless `timing` is set, so repeated runs of the same
//! job are byte-identical.

mod commands;
mod selftest;

pub use selftest::{selftest_records, SelftestOptions};

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coeffs::Rational;
use crate::error::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable bounding the number of worker threads.
pub const THREADS_VAR: &str = "SRAK_THREADS";

/// One job. Unset fields take per-command defaults; unknown fields are rejected.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    /// `group analyze`, `sra normalize`, `sra mul`, `sra center`, `sra poisson`,
    /// `centralizer selftest`, `cherednik gram`, `cherednik scan`, `cherednik typea`,
    /// `be-iso verify`, `simplicity lattice` or `selftest`.
    pub command: String,
    /// Inline `symmetric:<n>:<rep>` or a path to a group spec file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    /// `trivial`, `all`, `parabolic:<k>`, `elements:<i>,<j>,..` or `stabilizer:<b1>,<b2>,..`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    /// Comma-separated values, one per reflection orbit, each a rational or `generic`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    /// A builtin list name or a file with one parameter point per line.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_list: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<String>,
    /// Comma-separated coordinates of a point of `h`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    /// `triv` or `sign`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub timing: bool,
}

impl JobSpec {
    pub fn new(command: &str) -> Self {
        JobSpec { command: command.to_string(), ..Default::default() }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("job line {} column {}", e.line(), e.column()), e))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Purely informational output, never a failure.
    Info,
}

/// One check or one piece of output, labelled with the result it evidences.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub name: String,
    pub anchor: String,
    pub verdict: Status,
    pub data: Value,
}

impl Record {
    pub fn check(name: impl Into<String>, anchor: &str, ok: bool, data: Value) -> Self {
        Record { name: name.into(), anchor: anchor.to_string(), verdict: if ok { Status::Pass } else { Status::Fail }, data }
    }

    pub fn info(name: impl Into<String>, anchor: &str, data: Value) -> Self {
        Record { name: name.into(), anchor: anchor.to_string(), verdict: Status::Info, data }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub job: JobSpec,
    pub passed: bool,
    pub records: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u64>,
}

impl Report {
    /// `0` when every check passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line per record: verdict, name and anchor.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let tag = match r.verdict {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let _ = writeln!(out, "{tag} {} [{}]", r.name, r.anchor);
        }
        let failed = self.records.iter().filter(|r| r.verdict == Status::Fail).count();
        let _ = writeln!(out, "{}: {} records, {failed} failed", self.command, self.records.len());
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("{0}")]
    Compute(Error),
}

impl CliError {
    pub fn parse(location: impl Into<String>, message: impl ToString) -> Self {
        CliError::Parse { location: location.into(), message: message.to_string() }
    }

    /// `2` for unparsable input, `3` when a computation's precondition fails.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Compute(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => CliError::Parse { location: "input".into(), message: m },
            other => CliError::Compute(other),
        }
    }
}

/// Attach a location to a library parse error.
pub(crate) fn at<T>(location: &str, r: crate::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        Error::Parse(m) => CliError::parse(location, m),
        other => CliError::Compute(other),
    })
}

pub(crate) fn parse_rational(location: &str, s: &str) -> Result<Rational, CliError> {
    at(location, s.parse::<Rational>())
}

/// A comma-separated list of rationals or `generic` entries (`None`).
pub(crate) fn parse_params(location: &str, s: &str) -> Result<Vec<Option<Rational>>, CliError> {
    s.split(',')
        .enumerate()
        .map(|(i, part)| {
            let part = part.trim();
            if part == "generic" {
                Ok(None)
            } else {
                parse_rational(&format!("{location}[{i}]"), part).map(Some)
            }
        })
        .collect()
}

pub(crate) fn parse_vector(location: &str, s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').enumerate().map(|(i, part)| parse_rational(&format!("{location}[{i}]"), part)).collect()
}

/// Size the global worker pool from `SRAK_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value.trim().parse().map_err(|_| CliError::parse(THREADS_VAR, format!("expected a positive integer, got {value:?}")))?;
    if n == 0 {
        return Err(CliError::parse(THREADS_VAR, "expected a positive integer, got 0"));
    }
    // a pool that already exists keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Run one job.
pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let records = commands::dispatch(job)?;
    let passed = records.iter().all(|r| r.verdict != Status::Fail);
    Ok(Report {
        command: job.command.clone(),
        version: VERSION.to_string(),
        job: job.clone(),
        passed,
        records,
        wall_clock_ms: job.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// The desk-scale self test over `S_2` and `S_3`.
pub fn selftest(options: &SelftestOptions) -> Result<Report, CliError> {
    let job = JobSpec::new("selftest");
    let records = selftest_records(options)?;
    let passed = records.iter().all(|r| r.verdict != Status::Fail);
    Ok(Report { command: job.command.clone(), version: VERSION.to_string(), job, passed, records, wall_clock_ms: None })
}

#[cfg(test)]
mod tests;
