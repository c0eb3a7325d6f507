//! The ciphertext file format: three header lines (`n`, `m`, `blocks`),
//! then one line per block holding exactly `2m` space-separated decimal
//! values, each canonical mod `n`.

use std::fmt::Write as _;

use halidon_core::codec::CipherBlock;
use halidon_core::modint::Modulus;
use num_bigint::BigUint;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherFile {
    pub n: BigUint,
    pub m: usize,
    pub blocks: Vec<Vec<BigUint>>,
}

impl CipherFile {
    pub fn new(n: BigUint, m: usize, blocks: Vec<Vec<BigUint>>) -> Self {
        CipherFile { n, m, blocks }
    }

    pub fn from_blocks(n: &Modulus, m: usize, blocks: &[CipherBlock]) -> Self {
        CipherFile {
            n: n.get().clone(),
            m,
            blocks: blocks.iter().map(|b| b.values().to_vec()).collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n = {}", self.n).unwrap();
        writeln!(out, "m = {}", self.m).unwrap();
        writeln!(out, "blocks = {}", self.blocks.len()).unwrap();
        for block in &self.blocks {
            let line = block
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(out, "{line}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: BigUint = parse_header(lines.next(), "n")?
            .parse()
            .map_err(|_| CliError::validation("cipher file: `n` is not a decimal integer"))?;
        let m: usize = parse_header(lines.next(), "m")?
            .parse()
            .map_err(|_| CliError::validation("cipher file: `m` is not a small integer"))?;
        if m == 0 {
            return Err(CliError::validation("cipher file: m must be positive"));
        }
        let count: usize = parse_header(lines.next(), "blocks")?
            .parse()
            .map_err(|_| CliError::validation("cipher file: `blocks` is not a small integer"))?;
        let mut blocks = Vec::with_capacity(count);
        for (i, line) in lines.by_ref().take(count).enumerate() {
            let values: Result<Vec<BigUint>, _> =
                line.split_whitespace().map(str::parse::<BigUint>).collect();
            let values = values.map_err(|_| {
                CliError::validation(format!("cipher file block {}: bad value", i + 1))
            })?;
            if values.len() != 2 * m {
                return Err(CliError::validation(format!(
                    "cipher file block {}: expected {} values, got {}",
                    i + 1,
                    2 * m,
                    values.len()
                )));
            }
            if let Some(pos) = values.iter().position(|v| v >= &n) {
                return Err(CliError::validation(format!(
                    "cipher file block {}: value at position {} is not below n",
                    i + 1,
                    pos + 1
                )));
            }
            blocks.push(values);
        }
        if blocks.len() != count {
            return Err(CliError::validation(format!(
                "cipher file: header promises {count} blocks, found {}",
                blocks.len()
            )));
        }
        if lines.next().is_some() {
            return Err(CliError::validation(
                "cipher file: trailing data after the last block",
            ));
        }
        Ok(CipherFile { n, m, blocks })
    }

    /// Converts to typed blocks with 1-based ordinals.
    pub fn to_cipher_blocks(&self) -> Result<Vec<CipherBlock>, CliError> {
        let modulus = Modulus::new(self.n.clone())?;
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, values)| {
                CipherBlock::new(values.clone(), modulus.clone(), i + 1).map_err(Into::into)
            })
            .collect()
    }
}

fn parse_header<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str, CliError> {
    let line = line
        .ok_or_else(|| CliError::validation(format!("cipher file: missing `{key}` header")))?;
    let (k, v) = line
        .split_once('=')
        .ok_or_else(|| CliError::validation(format!("cipher file: malformed `{key}` header")))?;
    if k.trim() != key {
        return Err(CliError::validation(format!(
            "cipher file: expected `{key}` header, found `{}`",
            k.trim()
        )));
    }
    Ok(v.trim())
}
