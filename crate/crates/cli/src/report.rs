use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    MathNegative,
    InvalidInput,
    Internal,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::MathNegative => "math-negative",
            Status::InvalidInput => "invalid-input",
            Status::Internal => "internal-invariant-violation",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::MathNegative => 10,
            Status::InvalidInput => 2,
            Status::Internal => 70,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub status: Status,
    pub command: String,
    pub payload: Value,
    pub log: Vec<String>,
}

impl Report {
    pub fn new(command: &str, status: Status, payload: Value) -> Self {
        Report { status, command: command.to_string(), payload, log: Vec::new() }
    }

    pub fn failure(command: &str, status: Status, msg: impl Into<String>) -> Self {
        let mut r = Report::new(command, status, Value::Null);
        r.log.push(msg.into());
        r
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.log.push(line.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status.as_str(),
            "command": self.command,
            "payload": self.payload,
            "log": self.log,
        })
    }
}
