//! Library half of the command-line front end: error/exit-code mapping,
//! the key and cipher file formats, and the embedded reference example
//! used by `halidon selftest`.

pub mod cipherfile;
pub mod error;
pub mod keyfile;
pub mod selftest;

pub use cipherfile::CipherFile;
pub use error::CliError;
pub use keyfile::KeyFile;
