//! Built-in end-to-end check against the published worked example:
//! key material, root transport, encoding, the full 100-value ciphertext,
//! decryption, and a pass through the key and cipher file formats.

use std::io::Write;

use halidon_core::codec::{decode, encode, SymbolTable};
use halidon_core::crypto::{decrypt_block, encrypt_block, RsaKeyPair};
use halidon_core::halidon::HalidonContext;
use num_bigint::BigUint;

use crate::cipherfile::CipherFile;
use crate::error::CliError;
use crate::keyfile::{render_private, render_public, KeyFile};

/// A self-contained instance of the worked example.
#[derive(Debug, Clone)]
pub struct ReferenceExample {
    pub p1: u64,
    pub p2: u64,
    pub index: usize,
    pub e: u64,
    pub d: u64,
    pub omega: u64,
    pub wrapped: u64,
    pub message: &'static str,
    pub plain_codes: [u32; 100],
    pub cipher_values: [u64; 100],
}

/// The published example: n = 105851 = 151 * 701, index 50, e = 65537.
pub const REFERENCE_EXAMPLE: ReferenceExample = ReferenceExample {
    p1: 151,
    p2: 701,
    index: 50,
    e: 65537,
    d: 48473,
    omega: 37199,
    wrapped: 104726,
    message: "NAME: XYACDX AGE: 67 BLO4D GROUP: G+ EYE SIGHT: BLIND ADDRESS: XL40, ROMA \
              CANCER PATIENT.",
    plain_codes: [
        23, 10, 22, 14, 37, 36, 33, 34, 10, 12, 13, 33, 36, 10, 16, 14, 37, 36, 6, 7, 36, 11,
        21, 24, 4, 13, 36, 16, 27, 24, 30, 25, 37, 36, 16, 40, 36, 14, 34, 14, 36, 28, 18, 16,
        17, 29, 37, 36, 11, 21, 18, 23, 13, 36, 10, 13, 13, 27, 14, 28, 28, 37, 36, 33, 21, 4,
        41, 42, 36, 27, 24, 22, 10, 36, 12, 10, 23, 12, 14, 27, 36, 25, 10, 29, 18, 14, 23,
        29, 38, 36, 36, 36, 36, 36, 36, 36, 36, 36, 36, 36,
    ],
    cipher_values: [
        30250, 3997, 9918, 100174, 4967, 60850, 69603, 65833, 69970, 86837, 56329, 84304,
        87528, 105689, 50220, 37821, 95006, 88206, 50634, 56876, 96029, 12250, 5412, 92277,
        81732, 97464, 88405, 83966, 90468, 47910, 96334, 58983, 53641, 28780, 81547, 86900,
        39702, 55100, 86014, 58257, 86271, 84815, 94860, 52442, 70408, 52434, 66586, 4211,
        51571, 56249, 26550, 22598, 45775, 88780, 53508, 4039, 20356, 54096, 97408, 31956,
        74800, 74474, 100196, 69161, 70858, 80036, 95190, 7660, 58416, 42076, 10798, 10907,
        24694, 2436, 50661, 80202, 19348, 97383, 31692, 67941, 8843, 97849, 63925, 67146,
        28787, 31773, 83630, 100041, 13855, 5141, 99471, 55282, 2137, 56462, 24205, 99031,
        94986, 44166, 101479, 35249,
    ],
};

fn check(condition: bool, what: &str) -> Result<(), CliError> {
    if condition {
        Ok(())
    } else {
        Err(CliError::validation(format!("self-test failed: {what}")))
    }
}

/// Runs the whole example end to end, including a round trip through the
/// key-file and cipher-file formats on disk. Prints one line per stage.
pub fn run(example: &ReferenceExample, out: &mut dyn Write) -> Result<(), CliError> {
    // Stage 1: key material and root transport.
    let keys = RsaKeyPair::from_primes(
        example.index,
        BigUint::from(example.p1),
        BigUint::from(example.p2),
    )?;
    check(
        keys.public().exponent() == &BigUint::from(example.e),
        "public exponent",
    )?;
    check(keys.d() == &BigUint::from(example.d), "private exponent")?;
    let modulus = keys.public().modulus().clone();
    let omega = modulus.residue_from_u64(example.omega);
    let wrapped = keys.public().wrap_root(&omega, true)?;
    check(
        wrapped.value().value() == &BigUint::from(example.wrapped),
        "wrapped root c",
    )?;
    let recovered = keys.unwrap_root(&wrapped, true)?;
    check(recovered == omega, "unwrapped root")?;
    writeln!(out, "stage 1: c = {} unwraps to omega = {}", wrapped.value(), recovered)?;

    // Stage 2: encode, encrypt, compare, decrypt.
    let table = SymbolTable::standard();
    let blocks = encode(example.message, &table, example.index)?;
    check(blocks.len() == 1, "single block")?;
    check(
        blocks[0].as_slice() == &example.plain_codes[..],
        "plaintext codes",
    )?;
    let ctx = HalidonContext::new(modulus.clone(), example.index, BigUint::from(example.omega))?;
    let cipher = encrypt_block(&blocks[0], &ctx, 1)?;
    let expected: Vec<BigUint> = example
        .cipher_values
        .iter()
        .map(|&v| BigUint::from(v))
        .collect();
    check(cipher.values() == expected.as_slice(), "ciphertext values")?;
    let decrypted = decrypt_block(&cipher, &ctx)?;
    check(
        decrypted.as_slice() == &example.plain_codes[..],
        "decrypted codes",
    )?;
    let text = decode(&decrypted, &table)?;
    check(text.trim_end() == example.message, "recovered message")?;
    writeln!(out, "stage 2: 100-value cipher block matches, decrypts cleanly")?;

    // Through the file formats.
    let dir = tempfile::tempdir()?;
    let pub_path = dir.path().join("selftest.pub");
    let key_path = dir.path().join("selftest.key");
    let ct_path = dir.path().join("selftest.ct");
    std::fs::write(&pub_path, render_public(keys.public(), None))?;
    std::fs::write(&key_path, render_private(&keys, None))?;
    let (reloaded_pub, _) = KeyFile::parse(&std::fs::read_to_string(&pub_path)?)?.into_public()?;
    check(&reloaded_pub == keys.public(), "public file round trip")?;
    let (reloaded, _) = KeyFile::parse(&std::fs::read_to_string(&key_path)?)?.into_keypair()?;
    check(reloaded == keys, "private file round trip")?;

    let file = CipherFile::from_blocks(&modulus, example.index, std::slice::from_ref(&cipher));
    std::fs::write(&ct_path, file.render())?;
    let reread = CipherFile::parse(&std::fs::read_to_string(&ct_path)?)?;
    check(reread == file, "cipher file round trip")?;
    let mut recovered_codes = Vec::new();
    for block in reread.to_cipher_blocks()? {
        recovered_codes.extend(decrypt_block(&block, &ctx)?);
    }
    let recovered_text = decode(&recovered_codes, &table)?;
    check(
        recovered_text.trim_end() == example.message,
        "decryption from file",
    )?;
    writeln!(out, "files: key and cipher formats round trip")?;
    writeln!(out, "recovered message: {}", recovered_text.trim_end())?;
    Ok(())
}
