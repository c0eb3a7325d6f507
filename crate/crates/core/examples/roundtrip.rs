//! Minimal end-to-end use of the library: build the reference key pair,
//! encrypt a short message block, and decrypt it back.

use halidon_core::codec::{decode, encode, SymbolTable};
use halidon_core::crypto::{decrypt_block, encrypt_block, RsaKeyPair};
use halidon_core::halidon::HalidonContext;
use num_bigint::BigUint;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let keys = RsaKeyPair::from_primes(50, BigUint::from(151u32), BigUint::from(701u32))?;
    let ctx = HalidonContext::new(
        keys.public().modulus().clone(),
        keys.public().index(),
        BigUint::from(37199u32),
    )?;
    let table = SymbolTable::standard();
    let blocks = encode("NAME: XYACDX", &table, ctx.index())?;
    let cipher = encrypt_block(&blocks[0], &ctx, 1)?;
    let codes = decrypt_block(&cipher, &ctx)?;
    assert_eq!(codes, blocks[0]);
    println!("recovered: {}", decode(&codes, &table)?.trim_end());
    Ok(())
}
