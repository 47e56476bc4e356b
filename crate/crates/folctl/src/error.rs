use std::fmt;

use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Io {
        path: String,
        message: String,
    },
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    Parse {
        generator: usize,
        component: String,
        line: usize,
        column: usize,
        message: String,
    },
    /// `component` is `None` when the name appears as a record key.
    UnknownVariable {
        name: String,
        generator: usize,
        component: Option<String>,
    },
    BadField(String),
    Usage(String),
    Math(folcore::Error),
}

impl From<folcore::Error> for CliError {
    fn from(e: folcore::Error) -> Self {
        CliError::Math(e)
    }
}

impl CliError {
    /// 1 for mathematical failures, 2 for usage and input errors.
    pub fn exit_code(&self) -> u8 {
        use folcore::Error::*;
        match self {
            CliError::Math(
                NotInvolutive { .. }
                | WrongLength { .. }
                | NotInjective
                | LiftFailed
                | NotVanishingAtOrigin { .. }
                | InternalDivisionFailure
                | TruncatedResolution,
            ) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        use folcore::Error::*;
        match self {
            CliError::Io { .. } => "Io",
            CliError::Json { .. } => "ParseError",
            CliError::Parse { .. } => "ParseError",
            CliError::UnknownVariable { .. } => "UnknownVariable",
            CliError::BadField(_) => "BadField",
            CliError::Usage(_) => "Usage",
            CliError::Math(e) => match e {
                MixedAmbient => "MixedAmbient",
                DimensionMismatch { .. } => "DimensionMismatch",
                EmptyInput => "EmptyInput",
                BadParams(_) => "BadParams",
                NotInvolutive { .. } => "NotInvolutive",
                IndexOutOfRange { .. } => "IndexOutOfRange",
                WrongLength { .. } => "WrongLength",
                NotInjective => "NotInjective",
                LiftFailed => "LiftFailed",
                NotVanishingAtOrigin { .. } => "NotVanishingAtOrigin",
                InternalDivisionFailure => "InternalDivisionFailure",
                TruncatedResolution => "TruncatedResolution",
                BadPhi => "BadPhi",
                ArityUnavailable { .. } => "ArityUnavailable",
            },
        }
    }

    /// Machine-readable error record.
    pub fn payload(&self) -> Value {
        let mut v = json!({ "kind": self.kind(), "message": self.to_string() });
        let extra = match self {
            CliError::Json { line, column, .. } => json!({ "line": line, "column": column }),
            CliError::Parse { generator, component, line, column, .. } => {
                json!({ "generator": generator, "component": component, "line": line, "column": column })
            }
            CliError::UnknownVariable { name, generator, component } => {
                json!({ "name": name, "generator": generator, "component": component })
            }
            CliError::Math(folcore::Error::NotInvolutive { i, j }) => json!({ "witness_pair": [i + 1, j + 1] }),
            CliError::Math(folcore::Error::NotVanishingAtOrigin { generator }) => json!({ "generator": generator + 1 }),
            _ => json!({}),
        };
        if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
            obj.extend(more);
        }
        json!({ "error": v })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => write!(f, "{}: {}", path, message),
            CliError::Json { message, .. } => write!(f, "invalid foliation file: {}", message),
            CliError::Parse { generator, component, line, column, message } => {
                write!(
                    f,
                    "generator {} component {}: {} at line {}, column {}",
                    generator, component, message, line, column
                )
            }
            CliError::UnknownVariable { name, generator, .. } => {
                write!(f, "generator {}: unknown variable '{}'", generator, name)
            }
            CliError::BadField(field) => write!(f, "unsupported field '{}' (only QQ)", field),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Math(e) => write!(f, "{}", e),
        }
    }
}
