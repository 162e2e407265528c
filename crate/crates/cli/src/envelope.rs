//! The JSON-lines output envelope shared by every subcommand.

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Error => 2,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        }
    }
}

/// One result record: command, echoed parameters, and either a result
/// (ok/mismatch) or an error message.
pub struct Envelope {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub result: Option<Value>,
    pub error: Option<String>,
    pub status: Status,
}

impl Envelope {
    pub fn ok(command: &'static str, parameters: Map<String, Value>, result: Value) -> Self {
        Envelope {
            command,
            parameters,
            result: Some(result),
            error: None,
            status: Status::Ok,
        }
    }

    /// A verification command whose assertions failed; the result payload
    /// is still reported for inspection.
    pub fn verdict(
        command: &'static str,
        parameters: Map<String, Value>,
        result: Value,
        passed: bool,
    ) -> Self {
        Envelope {
            command,
            parameters,
            result: Some(result),
            error: None,
            status: if passed { Status::Ok } else { Status::Mismatch },
        }
    }

    pub fn error(command: &'static str, parameters: Map<String, Value>, message: String) -> Self {
        Envelope {
            command,
            parameters,
            result: None,
            error: Some(message),
            status: Status::Error,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("command".into(), Value::String(self.command.into()));
        obj.insert("parameters".into(), Value::Object(self.parameters.clone()));
        if let Some(result) = &self.result {
            obj.insert("result".into(), result.clone());
        }
        if let Some(error) = &self.error {
            obj.insert("error".into(), Value::String(error.clone()));
        }
        obj.insert("status".into(), Value::String(self.status.as_str().into()));
        Value::Object(obj)
    }

    pub fn print(&self) {
        use std::io::Write;
        // tolerate a closed pipe (e.g. piping into `head`)
        let _ = writeln!(std::io::stdout().lock(), "{}", self.to_json());
    }
}

/// Convenience builder for the echoed parameter map.
pub fn params<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    let mut map = Map::new();
    for (key, value) in pairs {
        map.insert(key.to_string(), value);
    }
    map
}
