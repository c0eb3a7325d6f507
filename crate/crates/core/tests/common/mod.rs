//! Shared fixtures for the integration tests: the published worked
//! example (n = 105851 = 151 * 701, index 50, omega = 37199) with its
//! 100-code plaintext block and 100-value ciphertext block.

use halidon_core::halidon::HalidonContext;
use halidon_core::modint::Modulus;
use num_bigint::BigUint;

pub const N: u64 = 105851;
pub const P1: u64 = 151;
pub const P2: u64 = 701;
pub const INDEX: usize = 50;
pub const OMEGA: u64 = 37199;
pub const E: u64 = 65537;
pub const D: u64 = 48473;
pub const C: u64 = 104726;

pub const MESSAGE: &str =
    "NAME: XYACDX AGE: 67 BLO4D GROUP: G+ EYE SIGHT: BLIND ADDRESS: XL40, ROMA CANCER PATIENT.";

pub const PLAIN_CODES: [u32; 100] = [
    23, 10, 22, 14, 37, 36, 33, 34, 10, 12, 13, 33, 36, 10, 16, 14, 37, 36, 6, 7, 36, 11, 21,
    24, 4, 13, 36, 16, 27, 24, 30, 25, 37, 36, 16, 40, 36, 14, 34, 14, 36, 28, 18, 16, 17, 29,
    37, 36, 11, 21, 18, 23, 13, 36, 10, 13, 13, 27, 14, 28, 28, 37, 36, 33, 21, 4, 41, 42, 36,
    27, 24, 22, 10, 36, 12, 10, 23, 12, 14, 27, 36, 25, 10, 29, 18, 14, 23, 29, 38, 36, 36,
    36, 36, 36, 36, 36, 36, 36, 36, 36,
];

pub const CIPHER_VALUES: [u64; 100] = [
    30250, 3997, 9918, 100174, 4967, 60850, 69603, 65833, 69970, 86837, 56329, 84304, 87528,
    105689, 50220, 37821, 95006, 88206, 50634, 56876, 96029, 12250, 5412, 92277, 81732, 97464,
    88405, 83966, 90468, 47910, 96334, 58983, 53641, 28780, 81547, 86900, 39702, 55100, 86014,
    58257, 86271, 84815, 94860, 52442, 70408, 52434, 66586, 4211, 51571, 56249, 26550, 22598,
    45775, 88780, 53508, 4039, 20356, 54096, 97408, 31956, 74800, 74474, 100196, 69161, 70858,
    80036, 95190, 7660, 58416, 42076, 10798, 10907, 24694, 2436, 50661, 80202, 19348, 97383,
    31692, 67941, 8843, 97849, 63925, 67146, 28787, 31773, 83630, 100041, 13855, 5141, 99471,
    55282, 2137, 56462, 24205, 99031, 94986, 44166, 101479, 35249,
];

pub fn modulus() -> Modulus {
    Modulus::from_u64(N).unwrap()
}

pub fn context() -> HalidonContext {
    HalidonContext::new(modulus(), INDEX, BigUint::from(OMEGA)).unwrap()
}
