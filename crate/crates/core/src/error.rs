use thiserror::Error;

/// Errors raised by parsing, construction and the oracle guards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown symbol `{symbol}` at position {position}")]
    UnknownSymbol { symbol: String, position: usize },

    #[error("alphabet mismatch: {}", .alphabets.iter().map(|a| format!("[{}]", a.join(" "))).collect::<Vec<_>>().join(" vs "))]
    AlphabetMismatch { alphabets: Vec<Vec<String>> },

    #[error("symbol `{0}` is reserved")]
    ReservedSymbol(String),

    #[error("unknown state {state} (automaton has {count} states)")]
    UnknownState { state: usize, count: usize },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("oracle scale exceeded: {what} is {actual}, cap is {cap}")]
    ScaleCap {
        what: &'static str,
        actual: u128,
        cap: u128,
    },

    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for errors raised by a resource guard rather than bad input.
    pub fn is_scale_cap(&self) -> bool {
        matches!(self, Error::ScaleCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
