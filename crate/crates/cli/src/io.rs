use std::fmt;
use std::io::Read;

use clap::Args;
use serde::de::DeserializeOwned;
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub enum CliError {
    /// Exit code 2.
    Malformed(String),
    /// Exit code 3.
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Malformed(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        CliError::Malformed(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Malformed(m) => write!(f, "malformed input: {m}"),
            CliError::Precondition(m) => write!(f, "precondition violated: {m}"),
        }
    }
}

impl From<cgt_core::Error> for CliError {
    fn from(e: cgt_core::Error) -> Self {
        if e.is_malformed() {
            CliError::Malformed(e.to_string())
        } else {
            CliError::Precondition(e.to_string())
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Malformed(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Where the input document comes from: an inline JSON argument or `--in`.
#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Input document as inline JSON.
    #[arg(value_name = "JSON")]
    pub inline: Option<String>,

    /// Read the input document from a file, or from stdin with `-`.
    #[arg(long = "in", value_name = "FILE", conflicts_with = "inline")]
    pub file: Option<String>,
}

impl Input {
    pub fn is_given(&self) -> bool {
        self.inline.is_some() || self.file.is_some()
    }

    pub fn text(&self) -> CliResult<String> {
        match (&self.inline, self.file.as_deref()) {
            (Some(s), _) => Ok(s.clone()),
            (None, Some("-")) => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::malformed(format!("reading stdin: {e}")))?;
                Ok(s)
            }
            (None, Some(path)) => {
                std::fs::read_to_string(path).map_err(|e| CliError::malformed(format!("reading {path}: {e}")))
            }
            (None, None) => Err(CliError::malformed("no input document (pass inline JSON or --in)")),
        }
    }

    pub fn value(&self) -> CliResult<Value> {
        Ok(serde_json::from_str(&self.text()?)?)
    }

    pub fn parse<T: DeserializeOwned>(&self) -> CliResult<T> {
        from_value(self.value()?)
    }
}

pub fn from_value<T: DeserializeOwned>(v: Value) -> CliResult<T> {
    Ok(serde_json::from_value(v)?)
}

/// Rewrites every JSON number as its decimal string.
pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

/// The output document: `v` (wrapped under `result` unless it is an object)
/// with numbers stringified and the version attached.
pub fn finish(v: Value) -> Value {
    let mut obj = match stringify_numbers(v) {
        Value::Object(o) => o,
        other => {
            let mut o = Map::new();
            o.insert("result".into(), other);
            o
        }
    };
    obj.insert("version".into(), Value::String(VERSION.into()));
    Value::Object(obj)
}
