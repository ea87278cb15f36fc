use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),

    #[error(transparent)]
    Core(#[from] momentum_core::Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn parse(msg: impl std::fmt::Display) -> Self {
        CliError::Parse(msg.to_string())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) | CliError::Core(momentum_core::Error::InvalidGroup(_)) => "parse",
            CliError::Core(e) if e.is_unsupported() => "unsupported",
            CliError::Core(_) => "domain",
            CliError::Io(_) => "io",
        }
    }

    /// 2 for unreadable requests, 3 for domain errors, 4 for unsupported cases.
    pub fn exit_code(&self) -> u8 {
        match self.kind() {
            "parse" => 2,
            "domain" => 3,
            "unsupported" => 4,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}
