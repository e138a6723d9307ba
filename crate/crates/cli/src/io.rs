use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use gft_core::{MultiplierOperator, TruncatedSeries};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] gft_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid {what}: {source}")]
    Json { what: &'static str, source: serde_json::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_numerical() => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Inline JSON (anything starting with `{` or `[`), `-` for stdin, or a path.
fn read_source(source: &str) -> CliResult<String> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(source.to_string());
    }
    if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(buf);
    }
    fs::read_to_string(source).map_err(|e| CliError::Io { path: source.into(), source: e })
}

fn parse<T: DeserializeOwned>(source: &str, what: &'static str) -> CliResult<T> {
    serde_json::from_str(&read_source(source)?).map_err(|source| CliError::Json { what, source })
}

pub fn read_series(source: &str, order: Option<usize>) -> CliResult<TruncatedSeries> {
    let f: TruncatedSeries = parse(source, "series")?;
    Ok(match order {
        Some(n) if n < f.order() => f.truncate(n),
        _ => f,
    })
}

pub fn read_operator(source: &str) -> CliResult<MultiplierOperator> {
    parse(source, "operator descriptor")
}

/// Rounds every float in `value` to 6 significant digits.
fn round_numbers(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or_default();
            let rounded: f64 = format!("{x:.5e}").parse().unwrap_or(x);
            if let Some(r) = serde_json::Number::from_f64(rounded) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}

/// Serializes `value` as compact JSON with full precision, or pretty and
/// rounded for reading.
pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    if !pretty {
        return serde_json::to_string(value).expect("output types serialize");
    }
    let mut v = serde_json::to_value(value).expect("output types serialize");
    round_numbers(&mut v);
    serde_json::to_string_pretty(&v).expect("json value serializes")
}

pub fn emit(text: &str, output: Option<&Path>) -> CliResult<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}
