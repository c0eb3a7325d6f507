//! Error classification for exit codes: 2 usage, 3 algebraic failure
//! (a non-unit where a unit is required), 4 validation failure.

use std::fmt;

use halidon_core::{CodecError, CryptoError, DihedralError, HalidonError, ModIntError};

#[derive(Debug)]
pub enum CliError {
    /// Misused flags, unreadable files, out-of-range numeric arguments.
    Usage(String),
    /// The algebra refused: a block or index with no inverse.
    Algebraic(String),
    /// Data failed a check: bad key material, non-root omega, corrupted
    /// or foreign ciphertext, message outside the alphabet.
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Algebraic(_) => 3,
            CliError::Validation(_) => 4,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Algebraic(msg) => write!(f, "algebraic failure: {msg}"),
            CliError::Validation(msg) => write!(f, "validation failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CryptoError> for CliError {
    fn from(err: CryptoError) -> Self {
        match &err {
            CryptoError::NotAUnitElement { .. } => CliError::Algebraic(err.to_string()),
            CryptoError::Dihedral(DihedralError::NotAUnitElement { .. }) => {
                CliError::Algebraic(err.to_string())
            }
            _ => CliError::Validation(err.to_string()),
        }
    }
}

impl From<HalidonError> for CliError {
    fn from(err: HalidonError) -> Self {
        match &err {
            HalidonError::IndexNotInvertible { .. } => CliError::Algebraic(err.to_string()),
            HalidonError::NotPrimitiveRoot { .. } => CliError::Validation(err.to_string()),
        }
    }
}

impl From<DihedralError> for CliError {
    fn from(err: DihedralError) -> Self {
        match &err {
            DihedralError::NotAUnitElement { .. } => CliError::Algebraic(err.to_string()),
            _ => CliError::Validation(err.to_string()),
        }
    }
}

impl From<CodecError> for CliError {
    fn from(err: CodecError) -> Self {
        CliError::Validation(err.to_string())
    }
}

impl From<ModIntError> for CliError {
    fn from(err: ModIntError) -> Self {
        CliError::Validation(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}
