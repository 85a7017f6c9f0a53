//! Output plumbing: the JSON envelope, CSV tables, and exit codes.
//!
//! Every JSON-producing subcommand wraps its payload in the same
//! envelope so scripts can dispatch on `status` alone. Tables go out as
//! raw CSV instead; both forms are byte-deterministic for a fixed
//! command line and seed.

use hypham_core::combin::decimal_string;
use hypham_core::Rational;
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    ProvedNegative,
    Budget,
    StageFailure,
}

impl Status {
    /// Definite answers exit 0, either way; exhausted budgets and
    /// failed pipeline stages exit 1.
    pub fn exit_code(self) -> ExitCode {
        match self {
            Status::Ok | Status::ProvedNegative => ExitCode::SUCCESS,
            Status::Budget | Status::StageFailure => ExitCode::from(1),
        }
    }
}

#[derive(Serialize)]
pub struct Envelope {
    pub schema: u32,
    pub status: Status,
    pub seed: Option<u64>,
    pub payload: serde_json::Value,
}

impl Envelope {
    pub fn new(status: Status, seed: Option<u64>, payload: serde_json::Value) -> Self {
        Envelope { schema: 1, status, seed, payload }
    }
}

/// What a subcommand hands back for printing.
pub enum Rendered {
    Json(Envelope),
    /// raw text: `.hg` bodies and CSV tables
    Text(String, Status),
}

impl Rendered {
    pub fn status(&self) -> Status {
        match self {
            Rendered::Json(env) => env.status,
            Rendered::Text(_, status) => *status,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// unreadable input file
    Read { path: PathBuf, err: std::io::Error },
    /// malformed .hg input
    Parse { path: PathBuf, line: usize, msg: String },
    /// witness file that is neither an l-cycle nor an l-path
    Witness { path: PathBuf, msg: String },
    Write { path: PathBuf, err: std::io::Error },
    /// bad flag values or domain preconditions
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Read { path, err } => write!(f, "cannot read {}: {err}", path.display()),
            CliError::Parse { path, line, msg } => {
                write!(f, "{}: line {line}: {msg}", path.display())
            }
            CliError::Witness { path, msg } => {
                write!(f, "{}: not a witness file: {msg}", path.display())
            }
            CliError::Write { path, err } => {
                write!(f, "cannot write {}: {err}", path.display())
            }
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            _ => ExitCode::from(3),
        }
    }
}

/// Writes the rendered output to `--out` or stdout and returns the
/// process exit code implied by its status.
pub fn emit(rendered: Rendered, out: Option<&Path>) -> Result<ExitCode, CliError> {
    let status = rendered.status();
    let text = match rendered {
        Rendered::Json(env) => {
            let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
            s.push('\n');
            s
        }
        Rendered::Text(s, _) => s,
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|err| CliError::Write { path: path.to_path_buf(), err })?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())
                .and_then(|()| lock.flush())
                .map_err(|err| CliError::Write { path: PathBuf::from("<stdout>"), err })?;
        }
    }
    Ok(status.exit_code())
}

/// `p/q`, the exact form used everywhere a rational is printed.
pub fn pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// 12 significant decimal digits, the companion column to `p/q`.
pub fn dec(r: &Rational) -> String {
    decimal_string(r, 12)
}

/// CSV with a header row. Values never contain commas or quotes, so no
/// escaping is performed.
pub fn csv(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = String::new();
    s.push_str(&columns.join(","));
    s.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), columns.len());
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}
