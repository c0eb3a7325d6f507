//! The two-stage protocol: RSA transport of the secret root, then block
//! encryption by group-ring inversion.
//!
//! Stage 1 is textbook RSA over primes of the special shape
//! `p_i = m*t_i + 1` with coprime `t_i`, which makes `Z_{p1 p2}` a
//! halidon ring of index exactly `m`. The sender picks a primitive
//! `m`-th root `omega`, transmits `c = omega^e mod n`, and the receiver
//! recovers it as `c^d mod n`.
//!
//! Stage 2 interprets each block of `2m` symbol codes as a group-ring
//! element and replaces it with its inverse. Inversion is an involution,
//! so encryption and decryption are the same map; decryption additionally
//! range-checks the recovered codes.

use alloc::vec::Vec;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::codec::{CipherBlock, CODE_MAX, CODE_MIN};
use crate::dihedral::{DihedralError, GroupRingElement};
use crate::halidon::{check_primitive_root, HalidonContext, RootCheck};
use crate::modint::{Modulus, Residue};

/// Default RSA public exponent; falls back to the next coprime odd
/// candidate when it shares a factor with `phi`.
pub const DEFAULT_PUBLIC_EXPONENT: u64 = 65537;

/// Miller-Rabin rounds used everywhere primality is checked.
pub const MILLER_RABIN_ROUNDS: usize = 40;

/// Errors from key generation, root transport, and block operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CryptoError {
    #[error("no suitable prime of the form m*t + 1 found in {attempts} attempts")]
    SearchExhausted { attempts: usize },
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("the two primes must be distinct, both are {0}")]
    PrimesEqual(BigUint),
    #[error("{prime} - 1 is not divisible by the index {index}")]
    IndexDoesNotDivide { prime: BigUint, index: usize },
    #[error("cofactors t1 = {t1} and t2 = {t2} share factor {gcd}")]
    CofactorsNotCoprime {
        t1: BigUint,
        t2: BigUint,
        gcd: BigUint,
    },
    #[error("public exponent {e} shares factor {gcd} with phi")]
    ExponentNotCoprime { e: BigUint, gcd: BigUint },
    #[error("private exponent {d} does not invert {e} modulo phi")]
    ExponentsInconsistent { e: BigUint, d: BigUint },
    #[error("value {value} is not canonical modulo {modulus}")]
    ValueOutOfRange { value: BigUint, modulus: BigUint },
    #[error("unwrapped root fails the primitive-root check: {check}")]
    NotPrimitiveRoot { omega: BigUint, check: RootCheck },
    #[error("block {block_index}: expected {expected} codes, got {got}")]
    LengthMismatch {
        block_index: usize,
        expected: usize,
        got: usize,
    },
    #[error("block {block_index} is not a unit at frequency {frequency} (det {det})")]
    NotAUnitElement {
        block_index: usize,
        frequency: usize,
        det: BigUint,
    },
    #[error(
        "block {block_index}: decrypted coefficient {value} at position {position} \
         is not a symbol code"
    )]
    CodeOutOfRange {
        block_index: usize,
        position: usize,
        value: BigUint,
    },
    #[error("block and context use different moduli")]
    ModulusMismatch,
    #[error(transparent)]
    Dihedral(#[from] DihedralError),
}

/// The public half of a key pair: `n`, `e`, and the ring index `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsaPublicKey {
    modulus: Modulus,
    exponent: BigUint,
    index: usize,
}

impl RsaPublicKey {
    pub fn new(modulus: Modulus, exponent: BigUint, index: usize) -> Self {
        assert!(index >= 1, "index must be positive");
        assert!(!exponent.is_zero(), "exponent must be positive");
        RsaPublicKey {
            modulus,
            exponent,
            index,
        }
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn exponent(&self) -> &BigUint {
        &self.exponent
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Stage-1 encryption: `c = omega^e mod n`. With `validate` set, the
    /// input must pass the primitive-root check first.
    pub fn wrap_root(&self, omega: &Residue, validate: bool) -> Result<WrappedRoot, CryptoError> {
        if omega.modulus() != &self.modulus {
            return Err(CryptoError::ModulusMismatch);
        }
        if validate {
            check_primitive_root(omega, self.index).map_err(|check| {
                CryptoError::NotPrimitiveRoot {
                    omega: omega.value().clone(),
                    check,
                }
            })?;
        }
        Ok(WrappedRoot {
            c: omega.pow(&self.exponent),
        })
    }
}

/// A full key pair. The secret half (`p1`, `p2`, `phi`, `d`) never
/// appears in its `Display`; accessors hand it out explicitly.
#[derive(Clone, PartialEq, Eq)]
pub struct RsaKeyPair {
    public: RsaPublicKey,
    p1: BigUint,
    p2: BigUint,
    phi: BigUint,
    d: BigUint,
}

impl core::fmt::Debug for RsaKeyPair {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("RsaKeyPair")
            .field("public", &self.public)
            .field("private", &"<redacted>")
            .finish()
    }
}

impl RsaKeyPair {
    /// Builds and validates a key pair from a chosen prime pair, deriving
    /// `e` (default 65537, or the next coprime odd candidate) and `d`.
    pub fn from_primes(index: usize, p1: BigUint, p2: BigUint) -> Result<Self, CryptoError> {
        let phi = validate_primes(index, &p1, &p2)?;
        let e = choose_public_exponent(&phi);
        Self::assemble(index, p1, p2, phi, e, None)
    }

    /// Re-validates stored key material (e.g. loaded from a file): all
    /// prime-shape invariants plus `e*d = 1 mod phi`.
    pub fn from_parts(
        index: usize,
        p1: BigUint,
        p2: BigUint,
        e: BigUint,
        d: BigUint,
    ) -> Result<Self, CryptoError> {
        let phi = validate_primes(index, &p1, &p2)?;
        Self::assemble(index, p1, p2, phi, e, Some(d))
    }

    fn assemble(
        index: usize,
        p1: BigUint,
        p2: BigUint,
        phi: BigUint,
        e: BigUint,
        d: Option<BigUint>,
    ) -> Result<Self, CryptoError> {
        let g = e.gcd(&phi);
        if !g.is_one() {
            return Err(CryptoError::ExponentNotCoprime { e, gcd: g });
        }
        let phi_modulus = Modulus::new(phi.clone()).expect("phi of odd primes is >= 2");
        let derived_d = phi_modulus
            .residue(e.clone())
            .inverse()
            .expect("gcd(e, phi) = 1")
            .into_value();
        let d = match d {
            None => derived_d,
            Some(d) => {
                if (&e * &d % &phi).is_one() {
                    d
                } else {
                    return Err(CryptoError::ExponentsInconsistent { e, d });
                }
            }
        };
        let n = Modulus::new(&p1 * &p2).expect("product of primes is >= 2");
        Ok(RsaKeyPair {
            public: RsaPublicKey::new(n, e, index),
            p1,
            p2,
            phi,
            d,
        })
    }

    /// Searches for a key pair with probable primes `p_i = m*t_i + 1`
    /// below `2^bit_size`, with coprime cofactors. Deterministic for a
    /// fixed seed.
    pub fn generate(index: usize, bit_size: u32, seed: u64) -> Result<Self, CryptoError> {
        assert!(index >= 2, "index must be at least 2");
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let (p1, t1) = search_prime(&mut rng, index, bit_size, None)?;
        let (p2, _) = search_prime(&mut rng, index, bit_size, Some((&p1, &t1)))?;
        Self::from_primes(index, p1, p2)
    }

    pub fn public(&self) -> &RsaPublicKey {
        &self.public
    }

    pub fn p1(&self) -> &BigUint {
        &self.p1
    }

    pub fn p2(&self) -> &BigUint {
        &self.p2
    }

    pub fn phi(&self) -> &BigUint {
        &self.phi
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    /// Stage-1 decryption: `omega = c^d mod n`. With `validate` set, the
    /// result must be a primitive `m`-th root (anything else means the
    /// wrong keys or a tampered transmission).
    pub fn unwrap_root(
        &self,
        wrapped: &WrappedRoot,
        validate: bool,
    ) -> Result<Residue, CryptoError> {
        if wrapped.c.modulus() != &self.public.modulus {
            return Err(CryptoError::ModulusMismatch);
        }
        let omega = wrapped.c.pow(&self.d);
        if validate {
            check_primitive_root(&omega, self.public.index).map_err(|check| {
                CryptoError::NotPrimitiveRoot {
                    omega: omega.value().clone(),
                    check,
                }
            })?;
        }
        Ok(omega)
    }
}

/// The transmitted value `c = omega^e mod n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrappedRoot {
    c: Residue,
}

impl WrappedRoot {
    pub fn new(c: Residue) -> Self {
        WrappedRoot { c }
    }

    pub fn value(&self) -> &Residue {
        &self.c
    }
}

fn validate_primes(index: usize, p1: &BigUint, p2: &BigUint) -> Result<BigUint, CryptoError> {
    assert!(index >= 1, "index must be positive");
    if p1 == p2 {
        return Err(CryptoError::PrimesEqual(p1.clone()));
    }
    let m = BigUint::from(index);
    let mut cofactors = Vec::with_capacity(2);
    for p in [p1, p2] {
        if !is_probable_prime(p, MILLER_RABIN_ROUNDS) {
            return Err(CryptoError::NotPrime(p.clone()));
        }
        let reduced = p - 1u32;
        let (t, rem) = reduced.div_rem(&m);
        if !rem.is_zero() {
            return Err(CryptoError::IndexDoesNotDivide {
                prime: p.clone(),
                index,
            });
        }
        cofactors.push(t);
    }
    let g = cofactors[0].gcd(&cofactors[1]);
    if !g.is_one() {
        return Err(CryptoError::CofactorsNotCoprime {
            t1: cofactors[0].clone(),
            t2: cofactors[1].clone(),
            gcd: g,
        });
    }
    Ok((p1 - 1u32) * (p2 - 1u32))
}

fn choose_public_exponent(phi: &BigUint) -> BigUint {
    let mut e = BigUint::from(DEFAULT_PUBLIC_EXPONENT);
    while !e.gcd(phi).is_one() {
        e += 2u32;
    }
    e
}

fn search_prime(
    rng: &mut ChaCha20Rng,
    index: usize,
    bit_size: u32,
    avoid: Option<(&BigUint, &BigUint)>,
) -> Result<(BigUint, BigUint), CryptoError> {
    const MAX_ATTEMPTS: usize = 100_000;
    let m = BigUint::from(index);
    // p = m*t + 1 < 2^bit_size, t >= 1
    let ceiling = (BigUint::one() << bit_size) - 2u32;
    let t_max = &ceiling / &m;
    if t_max.is_zero() {
        return Err(CryptoError::SearchExhausted { attempts: 0 });
    }
    let t_upper = &t_max + 1u32;
    for _ in 0..MAX_ATTEMPTS {
        let t = rng.gen_biguint_range(&BigUint::one(), &t_upper);
        if let Some((p1, t1)) = avoid {
            if !t.gcd(t1).is_one() {
                continue;
            }
            let p = &m * &t + 1u32;
            if &p == p1 {
                continue;
            }
            if is_probable_prime(&p, MILLER_RABIN_ROUNDS) {
                return Ok((p, t));
            }
        } else {
            let p = &m * &t + 1u32;
            if is_probable_prime(&p, MILLER_RABIN_ROUNDS) {
                return Ok((p, t));
            }
        }
    }
    Err(CryptoError::SearchExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97,
];

/// Miller-Rabin probable-prime test with `rounds` random bases drawn from
/// a fixed-seed generator (deterministic across runs).
pub fn is_probable_prime(candidate: &BigUint, rounds: usize) -> bool {
    let two = BigUint::from(2u32);
    if candidate < &two {
        return false;
    }
    for &p in &SMALL_PRIMES {
        let p = BigUint::from(p);
        if candidate == &p {
            return true;
        }
        if (candidate % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = candidate - 1u32;
    let s = n_minus_1.trailing_zeros().expect("candidate is odd");
    let d = &n_minus_1 >> s;
    let mut rng = ChaCha20Rng::seed_from_u64(0x6d69_6c6c_6572_7261);
    'witness: for _ in 0..rounds {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        let mut x = a.modpow(&d, candidate);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, candidate);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Stage-2 encryption of one block: the codes become the coefficient
/// vector of a group-ring element, and the output is the coefficient
/// vector of its inverse. `block_index` is the block's 1-based ordinal,
/// used in error reports and carried on the result.
pub fn encrypt_block(
    codes: &[u32],
    ctx: &HalidonContext,
    block_index: usize,
) -> Result<CipherBlock, CryptoError> {
    let expected = 2 * ctx.index();
    if codes.len() != expected {
        return Err(CryptoError::LengthMismatch {
            block_index,
            expected,
            got: codes.len(),
        });
    }
    let element = GroupRingElement::new(
        ctx.index(),
        ctx.modulus().clone(),
        codes.iter().map(|&c| BigUint::from(c)).collect(),
    )
    .expect("length checked above");
    let inverse = invert_for_block(&element, ctx, block_index)?;
    let values = inverse.coefficients().to_vec();
    Ok(CipherBlock::new(values, ctx.modulus().clone(), block_index)
        .expect("inverse coefficients are canonical"))
}

/// Stage-2 decryption: the same inversion (the map is an involution),
/// followed by a range check that every recovered coefficient is a
/// symbol code. Out-of-range output means the wrong root or a corrupted
/// block.
pub fn decrypt_block(block: &CipherBlock, ctx: &HalidonContext) -> Result<Vec<u32>, CryptoError> {
    if block.modulus() != ctx.modulus() {
        return Err(CryptoError::ModulusMismatch);
    }
    let expected = 2 * ctx.index();
    if block.values().len() != expected {
        return Err(CryptoError::LengthMismatch {
            block_index: block.block_index(),
            expected,
            got: block.values().len(),
        });
    }
    let element = GroupRingElement::new(
        ctx.index(),
        ctx.modulus().clone(),
        block.values().to_vec(),
    )
    .expect("length checked above");
    let inverse = invert_for_block(&element, ctx, block.block_index())?;
    let lo = BigUint::from(CODE_MIN);
    let hi = BigUint::from(CODE_MAX);
    let mut codes = Vec::with_capacity(expected);
    for (i, value) in inverse.coefficients().iter().enumerate() {
        if value < &lo || value > &hi {
            return Err(CryptoError::CodeOutOfRange {
                block_index: block.block_index(),
                position: i + 1,
                value: value.clone(),
            });
        }
        let digits = value.to_u32_digits();
        codes.push(digits.first().copied().unwrap_or(0));
    }
    Ok(codes)
}

fn invert_for_block(
    element: &GroupRingElement,
    ctx: &HalidonContext,
    block_index: usize,
) -> Result<GroupRingElement, CryptoError> {
    element.invert(ctx).map_err(|err| match err {
        DihedralError::NotAUnitElement {
            frequency, det, ..
        } => CryptoError::NotAUnitElement {
            block_index,
            frequency,
            det,
        },
        other => CryptoError::Dihedral(other),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn paper_keys() -> RsaKeyPair {
        RsaKeyPair::from_primes(50, BigUint::from(151u32), BigUint::from(701u32)).unwrap()
    }

    fn paper_ctx() -> HalidonContext {
        HalidonContext::new(
            Modulus::from_u64(105851).unwrap(),
            50,
            BigUint::from(37199u32),
        )
        .unwrap()
    }

    // A fixed 100-code vector known to be a unit for the context above.
    fn unit_codes() -> Vec<u32> {
        vec![
            14, 42, 32, 26, 42, 30, 10, 17, 9, 16, 36, 35, 17, 38, 28, 38, 26, 24, 15, 9, 33,
            32, 6, 4, 8, 10, 41, 11, 28, 39, 5, 25, 25, 39, 30, 34, 17, 36, 1, 8, 35, 18, 42,
            22, 8, 19, 28, 11, 30, 1, 17, 33, 12, 33, 7, 41, 20, 41, 33, 39, 13, 10, 24, 11,
            35, 34, 1, 39, 21, 32, 2, 8, 24, 20, 16, 4, 16, 37, 6, 6, 32, 5, 35, 9, 9, 31, 36,
            11, 17, 34, 39, 28, 14, 35, 13, 20, 26, 42, 24, 29,
        ]
    }

    #[test]
    fn paper_pair_yields_published_exponents() {
        let keys = paper_keys();
        assert_eq!(keys.public().modulus().get(), &BigUint::from(105851u32));
        assert_eq!(keys.phi(), &BigUint::from(105000u32));
        assert_eq!(keys.public().exponent(), &BigUint::from(65537u32));
        assert_eq!(keys.d(), &BigUint::from(48473u32));
        assert!((keys.public().exponent() * keys.d() % keys.phi()).is_one());
    }

    #[test]
    fn equal_primes_rejected() {
        let err =
            RsaKeyPair::from_primes(50, BigUint::from(151u32), BigUint::from(151u32)).unwrap_err();
        assert_eq!(err, CryptoError::PrimesEqual(BigUint::from(151u32)));
    }

    #[test]
    fn composite_rejected() {
        let err =
            RsaKeyPair::from_primes(2, BigUint::from(15u32), BigUint::from(11u32)).unwrap_err();
        assert_eq!(err, CryptoError::NotPrime(BigUint::from(15u32)));
    }

    #[test]
    fn index_must_divide_p_minus_1() {
        let err =
            RsaKeyPair::from_primes(50, BigUint::from(151u32), BigUint::from(13u32)).unwrap_err();
        assert_eq!(
            err,
            CryptoError::IndexDoesNotDivide {
                prime: BigUint::from(13u32),
                index: 50
            }
        );
    }

    #[test]
    fn cofactors_must_be_coprime() {
        // 151 = 50*3 + 1 and 1051 = 50*21 + 1 are both prime, but the
        // cofactors 3 and 21 share a factor.
        let err =
            RsaKeyPair::from_primes(50, BigUint::from(151u32), BigUint::from(1051u32)).unwrap_err();
        assert_eq!(
            err,
            CryptoError::CofactorsNotCoprime {
                t1: BigUint::from(3u32),
                t2: BigUint::from(21u32),
                gcd: BigUint::from(3u32),
            }
        );
    }

    #[test]
    fn public_exponent_falls_back_when_phi_shares_a_factor() {
        // 917519 - 1 = 65537 * 14, so phi is divisible by 65537 and the
        // default exponent is unusable; the next odd coprime is 65539.
        let keys =
            RsaKeyPair::from_primes(2, BigUint::from(917519u32), BigUint::from(5u32)).unwrap();
        assert_eq!(keys.public().exponent(), &BigUint::from(65539u32));
        assert_eq!(keys.d(), &BigUint::from(1736731u32));
        assert!((keys.public().exponent() * keys.d() % keys.phi()).is_one());
    }

    #[test]
    fn wrap_and_unwrap_reproduce_paper_values() {
        let keys = paper_keys();
        let n = keys.public().modulus().clone();
        let omega = n.residue_from_u64(37199);
        let wrapped = keys.public().wrap_root(&omega, true).unwrap();
        assert_eq!(wrapped.value().value(), &BigUint::from(104726u32));
        let recovered = keys.unwrap_root(&wrapped, true).unwrap();
        assert_eq!(recovered, omega);
    }

    #[test]
    fn wrap_of_one_is_one() {
        let keys = paper_keys();
        let one = keys.public().modulus().one();
        let wrapped = keys.public().wrap_root(&one, false).unwrap();
        assert!(wrapped.value().is_one());
        // validation rejects it: 1 is not a primitive 50th root
        assert!(matches!(
            keys.public().wrap_root(&one, true),
            Err(CryptoError::NotPrimitiveRoot { .. })
        ));
        assert!(keys.unwrap_root(&wrapped, false).unwrap().is_one());
    }

    #[test]
    fn roundtrip_any_residue() {
        let keys = paper_keys();
        let n = keys.public().modulus().clone();
        for x in [0u64, 1, 2, 151, 701, 42424, 105850] {
            let r = n.residue_from_u64(x);
            let wrapped = keys.public().wrap_root(&r, false).unwrap();
            assert_eq!(keys.unwrap_root(&wrapped, false).unwrap(), r, "x = {x}");
        }
    }

    #[test]
    fn generate_is_deterministic_and_valid() {
        let a = RsaKeyPair::generate(50, 12, 7).unwrap();
        let b = RsaKeyPair::generate(50, 12, 7).unwrap();
        assert_eq!(a, b);
        assert!((a.public().exponent() * a.d() % a.phi()).is_one());
        let c = RsaKeyPair::generate(50, 12, 8).unwrap();
        // different seeds almost surely give different primes
        assert!(a.p1() != c.p1() || a.p2() != c.p2());
    }

    #[test]
    fn generate_rejects_hopeless_bit_sizes() {
        assert!(matches!(
            RsaKeyPair::generate(50, 5, 1),
            Err(CryptoError::SearchExhausted { .. })
        ));
    }

    #[test]
    fn probable_prime_basics() {
        assert!(is_probable_prime(&BigUint::from(2u32), 40));
        assert!(is_probable_prime(&BigUint::from(151u32), 40));
        assert!(is_probable_prime(&BigUint::from(701u32), 40));
        assert!(!is_probable_prime(&BigUint::from(1u32), 40));
        assert!(!is_probable_prime(&BigUint::from(105851u32), 40));
        // Carmichael number
        assert!(!is_probable_prime(&BigUint::from(561u32), 40));
        // larger prime
        assert!(is_probable_prime(&BigUint::from(1_000_000_007u64), 40));
    }

    #[test]
    fn encrypt_rejects_wrong_length() {
        let ctx = paper_ctx();
        let err = encrypt_block(&[1, 2, 3], &ctx, 1).unwrap_err();
        assert_eq!(
            err,
            CryptoError::LengthMismatch {
                block_index: 1,
                expected: 100,
                got: 3
            }
        );
    }

    #[test]
    fn all_zero_block_is_not_a_unit() {
        let ctx = paper_ctx();
        let err = encrypt_block(&[0; 100], &ctx, 1).unwrap_err();
        assert!(matches!(
            err,
            CryptoError::NotAUnitElement {
                block_index: 1,
                frequency: 1,
                ..
            }
        ));
    }

    #[test]
    fn encrypt_is_an_involution() {
        let ctx = paper_ctx();
        let codes = unit_codes();
        let once = encrypt_block(&codes, &ctx, 1).unwrap();
        // Inverting the inverse restores the codes; encrypt_block accepts
        // the cipher values as raw coefficients since they all fit in u32.
        let cipher_as_codes: Vec<u32> = once
            .values()
            .iter()
            .map(|v| v.to_u32_digits().first().copied().unwrap_or(0))
            .collect();
        let twice = encrypt_block(&cipher_as_codes, &ctx, 1).unwrap();
        let expected: Vec<BigUint> = codes.iter().map(|&c| BigUint::from(c)).collect();
        assert_eq!(twice.values(), expected.as_slice());
        assert_eq!(decrypt_block(&once, &ctx).unwrap(), codes);
    }

    #[test]
    fn decrypt_reports_out_of_range_positions() {
        let ctx = paper_ctx();
        let codes = unit_codes();
        let block = encrypt_block(&codes, &ctx, 3).unwrap();
        // corrupt one value
        let mut values = block.values().to_vec();
        values[17] = (&values[17] + 1u32) % ctx.modulus().get();
        let corrupted = CipherBlock::new(values, ctx.modulus().clone(), 3).unwrap();
        match decrypt_block(&corrupted, &ctx) {
            Err(CryptoError::CodeOutOfRange { block_index, .. }) => {
                assert_eq!(block_index, 3)
            }
            Err(CryptoError::NotAUnitElement { .. }) => {} // also possible
            other => panic!("expected corruption to be detected, got {other:?}"),
        }
    }
}
