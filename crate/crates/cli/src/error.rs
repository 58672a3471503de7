use std::fmt;

/// Exit codes: 0 success, 1 sampling gave up, 2 refusal, 3 precision, 4 I/O.
#[derive(Debug)]
pub enum CliError {
    Lib(trapredund::Error),
    Usage(String),
    Io(String),
    /// Sampling used all attempts without success.
    Exhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(trapredund::Error::Precision(_)) => 3,
            CliError::Lib(trapredund::Error::Parse { .. }) | CliError::Io(_) => 4,
            CliError::Lib(_) | CliError::Usage(_) => 2,
            CliError::Exhausted(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(s) | CliError::Io(s) | CliError::Exhausted(s) => f.write_str(s),
        }
    }
}

impl From<trapredund::Error> for CliError {
    fn from(e: trapredund::Error) -> Self {
        CliError::Lib(e)
    }
}

pub fn io_err(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}
