//! Computational algebra for the group ring `Z_n[D_m]` of a dihedral
//! group, and the two-stage asymmetric cipher built on it.
//!
//! The pieces, bottom up:
//!
//! * [`modint`] — canonical modular arithmetic over arbitrary-precision
//!   integers.
//! * [`halidon`] — primitive `m`-th roots of unity in the ring sense
//!   (vanishing geometric sums, not just multiplicative order), their
//!   enumeration, and the evaluation context used everywhere else.
//! * [`dihedral`] — group-ring elements in normal form, their
//!   block-circulant matrix representation, and spectral unit
//!   testing/inversion.
//! * [`crypto`] — stage 1 (RSA transport of the secret root `omega`) and
//!   stage 2 (block encryption by group-ring inversion, an involution).
//! * [`codec`] — the 42-symbol alphabet, message/block padding, and the
//!   ciphertext block type.
//! * [`oracle`] — brute-force reference implementations used only by
//!   tests.
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature is
//! on by default. IO, key files, and the command-line front end live in
//! the companion `halidon-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod codec;
pub mod crypto;
pub mod dihedral;
pub mod halidon;
pub mod modint;
pub mod oracle;

pub use codec::{CipherBlock, CodecError, SymbolTable};
pub use crypto::{CryptoError, RsaKeyPair, RsaPublicKey, WrappedRoot};
pub use dihedral::{BlockCirculantMatrix, DihedralError, GroupRingElement, SpectralData};
pub use halidon::{HalidonContext, HalidonError};
pub use modint::{ModIntError, Modulus, Residue};
