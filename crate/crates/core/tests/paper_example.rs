//! End-to-end reproduction of the published worked example, straight
//! through the library API.

mod common;

use common::*;
use halidon_core::codec::{decode, encode, CipherBlock, SymbolTable};
use halidon_core::crypto::{decrypt_block, encrypt_block, RsaKeyPair, WrappedRoot};
use halidon_core::dihedral::GroupRingElement;
use halidon_core::halidon::{
    find_primitive_roots_with_factors, is_primitive_root, max_index,
};
use num_bigint::BigUint;

#[test]
fn stage_one_key_material() {
    let keys = RsaKeyPair::from_primes(INDEX, BigUint::from(P1), BigUint::from(P2)).unwrap();
    assert_eq!(keys.public().modulus().get(), &BigUint::from(N));
    assert_eq!(keys.phi(), &BigUint::from(105000u32));
    assert_eq!(keys.public().exponent(), &BigUint::from(E));
    assert_eq!(keys.d(), &BigUint::from(D));
    assert_eq!(max_index(&BigUint::from(P1), &BigUint::from(P2)), BigUint::from(50u32));
}

#[test]
fn stage_one_root_transport() {
    let keys = RsaKeyPair::from_primes(INDEX, BigUint::from(P1), BigUint::from(P2)).unwrap();
    let omega = modulus().residue_from_u64(OMEGA);
    let wrapped = keys.public().wrap_root(&omega, true).unwrap();
    assert_eq!(wrapped.value().value(), &BigUint::from(C));
    let recovered = keys.unwrap_root(&wrapped, true).unwrap();
    assert_eq!(recovered, omega);
}

#[test]
fn message_encodes_to_published_codes() {
    let table = SymbolTable::standard();
    assert_eq!(MESSAGE.chars().count(), 89);
    let blocks = encode(MESSAGE, &table, INDEX).unwrap();
    assert_eq!(blocks.len(), 1);
    assert_eq!(blocks[0].as_slice(), &PLAIN_CODES[..]);
    // the last eleven codes are the blank padding
    assert!(blocks[0][89..].iter().all(|&c| c == 36));
}

#[test]
fn block_encrypts_to_published_cipher() {
    let ctx = context();
    let block = encrypt_block(&PLAIN_CODES, &ctx, 1).unwrap();
    let expected: Vec<BigUint> = CIPHER_VALUES.iter().map(|&v| BigUint::from(v)).collect();
    assert_eq!(block.values(), expected.as_slice());
}

#[test]
fn cipher_decrypts_back_to_message() {
    let ctx = context();
    let values: Vec<BigUint> = CIPHER_VALUES.iter().map(|&v| BigUint::from(v)).collect();
    let block = CipherBlock::new(values, modulus(), 1).unwrap();
    let codes = decrypt_block(&block, &ctx).unwrap();
    assert_eq!(codes.as_slice(), &PLAIN_CODES[..]);
    let text = decode(&codes, &SymbolTable::standard()).unwrap();
    assert_eq!(text.trim_end(), MESSAGE);
    assert_eq!(text.len(), 100);
}

#[test]
fn all_plaintext_spectral_determinants_are_units() {
    // Required for the published example to decrypt at all.
    let ctx = context();
    let u = GroupRingElement::new(
        INDEX,
        modulus(),
        PLAIN_CODES.iter().map(|&c| BigUint::from(c)).collect(),
    )
    .unwrap();
    let spectra = u.spectral_transform(&ctx).unwrap();
    assert!(spectra.first_non_unit().is_none());
    assert!(u.is_unit(&ctx).unwrap());
}

#[test]
fn root_census_is_four_hundred() {
    let roots = find_primitive_roots_with_factors(&BigUint::from(P1), &BigUint::from(P2), INDEX, None);
    assert_eq!(roots.len(), 400);
    let omega = modulus().residue_from_u64(OMEGA);
    assert!(roots.contains(&omega));
    for root in roots.iter().take(8) {
        assert!(is_primitive_root(root, INDEX));
    }
}

#[test]
fn inversion_is_root_independent() {
    // The group-ring inverse is unique, so decrypting with any other
    // valid primitive root recovers the same plaintext. Secrecy of the
    // particular omega does not gate inversion-based decryption; only
    // corruption or an invalid root is detectable (see below).
    let values: Vec<BigUint> = CIPHER_VALUES.iter().map(|&v| BigUint::from(v)).collect();
    let block = CipherBlock::new(values, modulus(), 1).unwrap();
    let roots =
        find_primitive_roots_with_factors(&BigUint::from(P1), &BigUint::from(P2), INDEX, Some(6));
    let mut wrong_roots = 0;
    for root in &roots {
        if root.value() == &BigUint::from(OMEGA) {
            continue;
        }
        wrong_roots += 1;
        let ctx = halidon_core::halidon::HalidonContext::new(
            modulus(),
            INDEX,
            root.value().clone(),
        )
        .unwrap();
        let codes = decrypt_block(&block, &ctx).unwrap();
        assert_eq!(codes.as_slice(), &PLAIN_CODES[..], "root {root}");
    }
    assert!(wrong_roots >= 5);
}

#[test]
fn every_root_survives_stage_one_transport() {
    let keys = RsaKeyPair::from_primes(INDEX, BigUint::from(P1), BigUint::from(P2)).unwrap();
    let roots =
        find_primitive_roots_with_factors(&BigUint::from(P1), &BigUint::from(P2), INDEX, None);
    assert_eq!(roots.len(), 400);
    for omega in &roots {
        let wrapped = keys.public().wrap_root(omega, false).unwrap();
        assert_eq!(&keys.unwrap_root(&wrapped, true).unwrap(), omega);
    }
}

#[test]
fn corrupted_cipher_value_is_detected() {
    let ctx = context();
    let mut values: Vec<BigUint> = CIPHER_VALUES.iter().map(|&v| BigUint::from(v)).collect();
    values[0] += 1u32;
    let block = CipherBlock::new(values, modulus(), 1).unwrap();
    assert!(decrypt_block(&block, &ctx).is_err());
}

#[test]
fn wrapped_root_type_round_trips() {
    let keys = RsaKeyPair::from_primes(INDEX, BigUint::from(P1), BigUint::from(P2)).unwrap();
    let wrapped = WrappedRoot::new(modulus().residue_from_u64(C));
    let omega = keys.unwrap_root(&wrapped, true).unwrap();
    assert_eq!(omega.value(), &BigUint::from(OMEGA));
}
