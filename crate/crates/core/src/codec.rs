//! Symbol/code translation, block padding, and the ciphertext block type.
//!
//! The default alphabet has 42 symbols: digits 1-9 get codes 1-9,
//! A-Z get 10-35, then blank 36, colon 37, period 38, hyphen 39,
//! plus 40, zero 41, comma 42. Custom tables are arbitrary bijections
//! onto the codes `1..=42`; swapping assignments around is part of the
//! keyspace. Codes, not characters, are what the cipher layer sees.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::modint::Modulus;

/// Number of symbols in a table.
pub const TABLE_SIZE: usize = 42;
/// Smallest valid symbol code.
pub const CODE_MIN: u32 = 1;
/// Largest valid symbol code.
pub const CODE_MAX: u32 = 42;

/// The symbols of the default table, in serialization order.
pub const DEFAULT_SYMBOLS: [char; TABLE_SIZE] = [
    '1', '2', '3', '4', '5', '6', '7', '8', '9', 'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I',
    'J', 'K', 'L', 'M', 'N', 'O', 'P', 'Q', 'R', 'S', 'T', 'U', 'V', 'W', 'X', 'Y', 'Z', ' ',
    ':', '.', '-', '+', '0', ',',
];

/// Errors from encoding, decoding, and table construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodecError {
    #[error("unknown symbol {symbol:?} at position {position}")]
    UnknownSymbol { position: usize, symbol: char },
    #[error("code {value} at position {position} is outside 1..=42")]
    CodeOutOfRange { position: usize, value: u32 },
    #[error("duplicate symbol {symbol:?} in table")]
    DuplicateSymbol { symbol: char },
    #[error("duplicate code {code} in table")]
    DuplicateCode { code: u32 },
    #[error("a table has exactly {TABLE_SIZE} entries, got {got}")]
    WrongTableSize { got: usize },
    #[error("cipher block values come in pairs, got {got}")]
    OddBlockLength { got: usize },
    #[error("cipher block is empty")]
    EmptyBlock,
    #[error("cipher value at position {position} is not canonical mod n")]
    ValueNotCanonical { position: usize },
}

/// A bijection between 42 symbols and the codes `1..=42`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    to_code: BTreeMap<char, u32>,
    to_symbol: BTreeMap<u32, char>,
}

impl SymbolTable {
    /// The default assignment described at the top of this module.
    pub fn standard() -> Self {
        let pairs: Vec<(char, u32)> = DEFAULT_SYMBOLS
            .iter()
            .enumerate()
            .map(|(i, &ch)| (ch, (i + 1) as u32))
            .collect();
        Self::custom(&pairs).expect("default table is a valid bijection")
    }

    /// Builds a validated bijection from 42 symbol/code pairs.
    pub fn custom(pairs: &[(char, u32)]) -> Result<Self, CodecError> {
        if pairs.len() != TABLE_SIZE {
            return Err(CodecError::WrongTableSize { got: pairs.len() });
        }
        let mut to_code = BTreeMap::new();
        let mut to_symbol = BTreeMap::new();
        for (position, &(symbol, code)) in pairs.iter().enumerate() {
            if !(CODE_MIN..=CODE_MAX).contains(&code) {
                return Err(CodecError::CodeOutOfRange {
                    position: position + 1,
                    value: code,
                });
            }
            if to_code.insert(symbol, code).is_some() {
                return Err(CodecError::DuplicateSymbol { symbol });
            }
            if to_symbol.insert(code, symbol).is_some() {
                return Err(CodecError::DuplicateCode { code });
            }
        }
        Ok(SymbolTable { to_code, to_symbol })
    }

    /// A table over the default symbols with a permuted code assignment:
    /// `codes[i]` is assigned to `DEFAULT_SYMBOLS[i]`.
    pub fn from_code_permutation(codes: &[u32]) -> Result<Self, CodecError> {
        if codes.len() != TABLE_SIZE {
            return Err(CodecError::WrongTableSize { got: codes.len() });
        }
        let pairs: Vec<(char, u32)> = DEFAULT_SYMBOLS
            .iter()
            .zip(codes)
            .map(|(&ch, &code)| (ch, code))
            .collect();
        Self::custom(&pairs)
    }

    /// The code assignment in default-symbol order, when this table is
    /// over the default alphabet. `None` when it uses other symbols.
    pub fn code_permutation(&self) -> Option<Vec<u32>> {
        if self.to_code.len() != TABLE_SIZE {
            return None;
        }
        DEFAULT_SYMBOLS
            .iter()
            .map(|ch| self.to_code.get(ch).copied())
            .collect()
    }

    pub fn code(&self, symbol: char) -> Option<u32> {
        self.to_code.get(&symbol).copied()
    }

    pub fn symbol(&self, code: u32) -> Option<char> {
        self.to_symbol.get(&code).copied()
    }
}

impl Default for SymbolTable {
    fn default() -> Self {
        Self::standard()
    }
}

/// Maps a message to code vectors of length exactly `2m`, uppercasing
/// first and padding the final chunk with the blank code. An empty
/// message still yields one all-blank block.
pub fn encode(text: &str, table: &SymbolTable, m: usize) -> Result<Vec<Vec<u32>>, CodecError> {
    assert!(m >= 1, "index must be positive");
    let block_len = 2 * m;
    let mut codes = Vec::new();
    for (i, ch) in text.chars().enumerate() {
        let up = ch.to_ascii_uppercase();
        match table.code(up) {
            Some(code) => codes.push(code),
            None => {
                return Err(CodecError::UnknownSymbol {
                    position: i + 1,
                    symbol: ch,
                })
            }
        }
    }
    let blank = table.code(' ').ok_or(CodecError::UnknownSymbol {
        position: text.chars().count() + 1,
        symbol: ' ',
    })?;
    if codes.is_empty() {
        return Ok(vec![vec![blank; block_len]]);
    }
    let mut blocks: Vec<Vec<u32>> = codes.chunks(block_len).map(<[u32]>::to_vec).collect();
    if let Some(last) = blocks.last_mut() {
        last.resize(block_len, blank);
    }
    Ok(blocks)
}

/// Inverse of [`encode`] on a single code vector. Trailing blanks are
/// preserved; trimming is the caller's choice.
pub fn decode(codes: &[u32], table: &SymbolTable) -> Result<String, CodecError> {
    let mut out = String::with_capacity(codes.len());
    for (i, &code) in codes.iter().enumerate() {
        match table.symbol(code) {
            Some(ch) => out.push(ch),
            None => {
                return Err(CodecError::CodeOutOfRange {
                    position: i + 1,
                    value: code,
                })
            }
        }
    }
    Ok(out)
}

/// One ciphertext block: `2m` canonical values mod `n`, tagged with its
/// 1-based position in the message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherBlock {
    values: Vec<BigUint>,
    modulus: Modulus,
    block_index: usize,
}

impl CipherBlock {
    pub fn new(
        values: Vec<BigUint>,
        modulus: Modulus,
        block_index: usize,
    ) -> Result<Self, CodecError> {
        if values.is_empty() {
            return Err(CodecError::EmptyBlock);
        }
        if !values.len().is_multiple_of(2) {
            return Err(CodecError::OddBlockLength { got: values.len() });
        }
        for (i, v) in values.iter().enumerate() {
            if v >= modulus.get() {
                return Err(CodecError::ValueNotCanonical { position: i + 1 });
            }
        }
        Ok(CipherBlock {
            values,
            modulus,
            block_index,
        })
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    /// 1-based ordinal of this block within its message.
    pub fn block_index(&self) -> usize {
        self.block_index
    }
}
