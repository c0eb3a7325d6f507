//! Exact modular arithmetic over arbitrary-precision integers.
//!
//! Everything downstream (root finding, group-ring inversion, key
//! transport) reduces to arithmetic in `Z_n`, so this module is the only
//! place that touches raw integer representations. Values are kept
//! canonical in `[0, n)` at all times; negatives are normalized by adding
//! the modulus at the point they would appear.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Errors from modular-integer operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModIntError {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(BigUint),
    #[error("{value} is not a unit modulo {modulus} (gcd = {gcd})")]
    NotAUnit {
        value: BigUint,
        modulus: BigUint,
        gcd: BigUint,
    },
    #[error("extended gcd of (0, 0) is undefined")]
    GcdOfZeros,
}

/// A modulus `n >= 2`. Shared by every [`Residue`] computed against it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    n: BigUint,
}

impl Modulus {
    pub fn new(n: BigUint) -> Result<Self, ModIntError> {
        if n < BigUint::from(2u32) {
            return Err(ModIntError::ModulusTooSmall(n));
        }
        Ok(Modulus { n })
    }

    pub fn from_u64(n: u64) -> Result<Self, ModIntError> {
        Self::new(BigUint::from(n))
    }

    pub fn get(&self) -> &BigUint {
        &self.n
    }

    /// Canonical residue of an arbitrary value.
    pub fn residue(&self, value: BigUint) -> Residue {
        Residue {
            value: self.reduce(value),
            modulus: self.clone(),
        }
    }

    pub fn residue_from_u64(&self, value: u64) -> Residue {
        self.residue(BigUint::from(value))
    }

    pub fn zero(&self) -> Residue {
        self.residue(BigUint::zero())
    }

    pub fn one(&self) -> Residue {
        self.residue(BigUint::one())
    }

    pub(crate) fn reduce(&self, value: BigUint) -> BigUint {
        if value < self.n {
            value
        } else {
            value % &self.n
        }
    }

    // Raw helpers for hot loops working on canonical `BigUint`s directly.

    pub(crate) fn add_raw(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let sum = a + b;
        if sum >= self.n {
            sum - &self.n
        } else {
            sum
        }
    }

    pub(crate) fn sub_raw(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            &self.n - b + a
        }
    }

    pub(crate) fn mul_raw(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.n
    }

    pub(crate) fn neg_raw(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &self.n - a
        }
    }

    pub(crate) fn inv_raw(&self, a: &BigUint) -> Result<BigUint, ModIntError> {
        let (g, x, _) = ext_gcd(&BigInt::from(a.clone()), &BigInt::from(self.n.clone()))?;
        if !g.is_one() {
            return Err(ModIntError::NotAUnit {
                value: a.clone(),
                modulus: self.n.clone(),
                gcd: g.to_biguint().expect("gcd is non-negative"),
            });
        }
        let n = BigInt::from(self.n.clone());
        let x = ((x % &n) + &n) % &n;
        Ok(x.to_biguint().expect("normalized to [0, n)"))
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({})", self.n)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.n, f)
    }
}

/// A canonical residue class: `0 <= value < modulus`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: BigUint,
    modulus: Modulus,
}

impl Residue {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// Modular exponentiation by repeated squaring, with `0^0 = 1`
    /// (empty-product convention).
    pub fn pow(&self, exponent: &BigUint) -> Residue {
        Residue {
            value: self.value.modpow(exponent, self.modulus.get()),
            modulus: self.modulus.clone(),
        }
    }

    /// True iff `gcd(value, n) = 1`.
    pub fn is_unit(&self) -> bool {
        self.value.gcd(self.modulus.get()).is_one()
    }

    /// Multiplicative inverse, when one exists.
    pub fn inverse(&self) -> Result<Residue, ModIntError> {
        let value = self.modulus.inv_raw(&self.value)?;
        Ok(Residue {
            value,
            modulus: self.modulus.clone(),
        })
    }

    fn expect_same_modulus(&self, other: &Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "residues from different moduli"
        );
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl PartialOrd for Residue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Residue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.expect_same_modulus(other);
        self.value.cmp(&other.value)
    }
}

impl Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.expect_same_modulus(rhs);
        Residue {
            value: self.modulus.add_raw(&self.value, &rhs.value),
            modulus: self.modulus.clone(),
        }
    }
}

impl Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.expect_same_modulus(rhs);
        Residue {
            value: self.modulus.sub_raw(&self.value, &rhs.value),
            modulus: self.modulus.clone(),
        }
    }
}

impl Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.expect_same_modulus(rhs);
        Residue {
            value: self.modulus.mul_raw(&self.value, &rhs.value),
            modulus: self.modulus.clone(),
        }
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue {
            value: self.modulus.neg_raw(&self.value),
            modulus: self.modulus.clone(),
        }
    }
}

/// Extended Euclidean algorithm: returns `(g, x, y)` with
/// `a*x + b*y = g = gcd(a, b) >= 0`. Errors when both inputs are zero.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt, BigInt), ModIntError> {
    if a.is_zero() && b.is_zero() {
        return Err(ModIntError::GcdOfZeros);
    }
    let egcd = a.extended_gcd(b);
    let (mut g, mut x, mut y) = (egcd.gcd, egcd.x, egcd.y);
    if g.is_negative() {
        g = -g;
        x = -x;
        y = -y;
    }
    Ok((g, x, y))
}

/// Convenience form of [`ext_gcd`] for non-negative inputs, returning only
/// the gcd.
pub fn gcd_uint(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}
