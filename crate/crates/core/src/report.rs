use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exact::ToJson;

/// Outcome of checking one identity instance.
///
/// A mathematical mismatch is recorded as `pass: false`, never raised as an
/// error.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub indices: Vec<usize>,
    pub pass: bool,
    pub expected: Value,
    pub got: Value,
}

impl VerifyReport {
    pub fn compare<T: ToJson + PartialEq + ?Sized>(
        identity: impl Into<String>,
        indices: &[usize],
        expected: &T,
        got: &T,
    ) -> Self {
        VerifyReport {
            identity: identity.into(),
            indices: indices.to_vec(),
            pass: expected == got,
            expected: expected.to_json(),
            got: got.to_json(),
        }
    }

    /// Report built from an explicit verdict, for checks that are not a
    /// single equality.
    pub fn with_verdict(
        identity: impl Into<String>,
        indices: &[usize],
        pass: bool,
        expected: Value,
        got: Value,
    ) -> Self {
        VerifyReport {
            identity: identity.into(),
            indices: indices.to_vec(),
            pass,
            expected,
            got,
        }
    }

    /// Failing report for a check that could not be evaluated at all.
    pub fn errored(identity: impl Into<String>, indices: &[usize], err: impl ToString) -> Self {
        VerifyReport {
            identity: identity.into(),
            indices: indices.to_vec(),
            pass: false,
            expected: Value::Null,
            got: Value::String(format!("error: {}", err.to_string())),
        }
    }
}
