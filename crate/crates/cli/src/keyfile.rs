//! The key file format: one `key = value` pair per line, decimal values
//! only. Public files carry `n`, `e`, `m`; private files additionally
//! `p1`, `p2`, `phi`, `d`. An optional `table` line carries a custom
//! symbol-table permutation as 42 comma-separated codes. Unknown keys are
//! rejected, and every invariant of the key material is re-checked on
//! load.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use halidon_core::codec::{SymbolTable, TABLE_SIZE};
use halidon_core::modint::Modulus;
use halidon_core::{RsaKeyPair, RsaPublicKey};
use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::CliError;

const PUBLIC_KEYS: [&str; 3] = ["n", "e", "m"];
const PRIVATE_KEYS: [&str; 4] = ["p1", "p2", "phi", "d"];

/// Raw parsed contents of a key file.
#[derive(Debug, Clone)]
pub struct KeyFile {
    pub n: BigUint,
    pub e: BigUint,
    pub m: usize,
    pub private: Option<PrivateParts>,
    pub table: Option<Vec<u32>>,
}

#[derive(Debug, Clone)]
pub struct PrivateParts {
    pub p1: BigUint,
    pub p2: BigUint,
    pub phi: BigUint,
    pub d: BigUint,
}

impl KeyFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut pairs: BTreeMap<&str, &str> = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::validation(format!("key file line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            let known = key == "table"
                || PUBLIC_KEYS.contains(&key)
                || PRIVATE_KEYS.contains(&key);
            if !known {
                return Err(CliError::validation(format!(
                    "key file line {}: unknown key `{key}`",
                    lineno + 1
                )));
            }
            if pairs.insert(key, value).is_some() {
                return Err(CliError::validation(format!(
                    "key file line {}: duplicate key `{key}`",
                    lineno + 1
                )));
            }
        }
        let fetch = |key: &str| -> Result<&str, CliError> {
            pairs
                .get(key)
                .copied()
                .ok_or_else(|| CliError::validation(format!("key file is missing `{key}`")))
        };
        let n = parse_uint(fetch("n")?, "n")?;
        let e = parse_uint(fetch("e")?, "e")?;
        let m = parse_usize(fetch("m")?, "m")?;
        let present: Vec<&str> = PRIVATE_KEYS
            .iter()
            .copied()
            .filter(|k| pairs.contains_key(k))
            .collect();
        let private = if present.is_empty() {
            None
        } else if present.len() == PRIVATE_KEYS.len() {
            Some(PrivateParts {
                p1: parse_uint(fetch("p1")?, "p1")?,
                p2: parse_uint(fetch("p2")?, "p2")?,
                phi: parse_uint(fetch("phi")?, "phi")?,
                d: parse_uint(fetch("d")?, "d")?,
            })
        } else {
            return Err(CliError::validation(format!(
                "key file has only part of the private material ({})",
                present.join(", ")
            )));
        };
        let table = match pairs.get("table") {
            None => None,
            Some(spec) => Some(parse_table_codes(spec)?),
        };
        Ok(KeyFile {
            n,
            e,
            m,
            private,
            table,
        })
    }

    /// Re-validates and returns the public key (and custom table, if any).
    pub fn into_public(self) -> Result<(RsaPublicKey, Option<SymbolTable>), CliError> {
        if self.m == 0 {
            return Err(CliError::validation("index m must be positive"));
        }
        if self.e.is_zero() {
            return Err(CliError::validation("exponent e must be positive"));
        }
        let modulus = Modulus::new(self.n)?;
        let table = self.table.as_deref().map(SymbolTable::from_code_permutation).transpose()?;
        Ok((RsaPublicKey::new(modulus, self.e, self.m), table))
    }

    /// Re-validates the full key pair: prime shapes, coprime cofactors,
    /// consistency of `n`, `phi`, and the exponent pair.
    pub fn into_keypair(self) -> Result<(RsaKeyPair, Option<SymbolTable>), CliError> {
        let Some(parts) = self.private else {
            return Err(CliError::validation(
                "this operation needs a private key file (p1, p2, phi, d)",
            ));
        };
        if self.m == 0 {
            return Err(CliError::validation("index m must be positive"));
        }
        let keys = RsaKeyPair::from_parts(self.m, parts.p1, parts.p2, self.e, parts.d)?;
        if keys.public().modulus().get() != &self.n {
            return Err(CliError::validation("stored n is not p1 * p2"));
        }
        if keys.phi() != &parts.phi {
            return Err(CliError::validation("stored phi is not (p1-1)(p2-1)"));
        }
        let table = self.table.as_deref().map(SymbolTable::from_code_permutation).transpose()?;
        Ok((keys, table))
    }
}

/// Renders the public file for a key pair.
pub fn render_public(key: &RsaPublicKey, table: Option<&[u32]>) -> String {
    let mut out = String::new();
    writeln!(out, "n = {}", key.modulus().get()).unwrap();
    writeln!(out, "e = {}", key.exponent()).unwrap();
    writeln!(out, "m = {}", key.index()).unwrap();
    if let Some(codes) = table {
        writeln!(out, "table = {}", render_table_codes(codes)).unwrap();
    }
    out
}

/// Renders the private file for a key pair.
pub fn render_private(keys: &RsaKeyPair, table: Option<&[u32]>) -> String {
    let mut out = String::new();
    writeln!(out, "n = {}", keys.public().modulus().get()).unwrap();
    writeln!(out, "e = {}", keys.public().exponent()).unwrap();
    writeln!(out, "m = {}", keys.public().index()).unwrap();
    writeln!(out, "p1 = {}", keys.p1()).unwrap();
    writeln!(out, "p2 = {}", keys.p2()).unwrap();
    writeln!(out, "phi = {}", keys.phi()).unwrap();
    writeln!(out, "d = {}", keys.d()).unwrap();
    if let Some(codes) = table {
        writeln!(out, "table = {}", render_table_codes(codes)).unwrap();
    }
    out
}

pub fn render_table_codes(codes: &[u32]) -> String {
    codes
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses a `table` value: 42 comma-separated codes for the default
/// symbols in order.
pub fn parse_table_codes(spec: &str) -> Result<Vec<u32>, CliError> {
    let codes: Result<Vec<u32>, _> = spec
        .split(',')
        .map(|tok| tok.trim().parse::<u32>())
        .collect();
    let codes =
        codes.map_err(|_| CliError::validation("table codes must be decimal integers"))?;
    if codes.len() != TABLE_SIZE {
        return Err(CliError::validation(format!(
            "table needs exactly {TABLE_SIZE} codes, got {}",
            codes.len()
        )));
    }
    Ok(codes)
}

fn parse_uint(value: &str, key: &str) -> Result<BigUint, CliError> {
    value
        .parse::<BigUint>()
        .map_err(|_| CliError::validation(format!("`{key}` is not a decimal integer: {value}")))
}

fn parse_usize(value: &str, key: &str) -> Result<usize, CliError> {
    value
        .parse::<usize>()
        .map_err(|_| CliError::validation(format!("`{key}` is not a small integer: {value}")))
}
