//! Independent reference implementations for cross-checking the group-ring
//! arithmetic. Nothing here is on the encrypt/decrypt path.
//!
//! * [`naive_multiply`] re-derives the product from an explicit 2m x 2m
//!   group multiplication table, built by normalizing generator words
//!   against the presentation relations rather than by index arithmetic.
//! * [`matrix_inverse_crt`] inverts a matrix mod `n = p1 * p2` by
//!   Gauss-Jordan elimination modulo each prime and Chinese remaindering,
//!   which checks the spectral inversion route end to end.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::dihedral::{BlockCirculantMatrix, GroupRingElement};
use crate::modint::{ext_gcd, Modulus};

/// Errors from the reference implementations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("operands come from different rings")]
    MixedParameters,
    #[error("matrix is singular modulo {0}")]
    Singular(BigUint),
    #[error("matrix modulus is not the product of the given primes")]
    BadFactorization,
}

/// The multiplication table of `D_m` over the basis ordering
/// `1, a, ..., a^{m-1}, b, ab, ..., a^{m-1}b`: `table[k][l]` is the basis
/// index of `basis_k * basis_l`.
///
/// Built by concatenating generator words and folding them to normal form
/// one letter at a time using only the presentation relations
/// (`a^m = 1`, `b^2 = 1`, `ba = a^{m-1}b`).
pub fn group_table(m: usize) -> Vec<Vec<usize>> {
    assert!(m >= 1);
    let word = |k: usize| -> Vec<u8> {
        let mut w = vec![b'a'; k % m];
        if k >= m {
            w.push(b'b');
        }
        w
    };
    let normalize = |letters: &[u8]| -> usize {
        let mut rot = 0usize;
        let mut flipped = false;
        for &ch in letters {
            match ch {
                // appending a to a^rot b means pushing it through the
                // reflection: b a = a^{m-1} b
                b'a' if flipped => rot = (rot + m - 1) % m,
                b'a' => rot = (rot + 1) % m,
                b'b' => flipped = !flipped,
                _ => unreachable!("words contain only generators"),
            }
        }
        if flipped {
            m + rot
        } else {
            rot
        }
    };
    let order = 2 * m;
    let mut table = vec![vec![0usize; order]; order];
    for (k, row) in table.iter_mut().enumerate() {
        for (l, entry) in row.iter_mut().enumerate() {
            let mut w = word(k);
            w.extend(word(l));
            *entry = normalize(&w);
        }
    }
    table
}

/// Group-ring product computed by table lookup and accumulation. Written
/// independently of `GroupRingElement::multiply` so the two can check
/// each other.
pub fn naive_multiply(
    u: &GroupRingElement,
    v: &GroupRingElement,
) -> Result<GroupRingElement, OracleError> {
    if u.index() != v.index() || u.modulus() != v.modulus() {
        return Err(OracleError::MixedParameters);
    }
    let m = u.index();
    let table = group_table(m);
    let mut acc = vec![BigUint::zero(); 2 * m];
    for (k, cu) in u.coefficients().iter().enumerate() {
        if cu.is_zero() {
            continue;
        }
        for (l, cv) in v.coefficients().iter().enumerate() {
            acc[table[k][l]] += cu * cv;
        }
    }
    Ok(
        GroupRingElement::new(m, u.modulus().clone(), acc)
            .expect("accumulator has 2m entries"),
    )
}

/// A dense square matrix over `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    order: usize,
    modulus: Modulus,
    entries: Vec<BigUint>,
}

impl DenseMatrix {
    pub fn new(order: usize, modulus: Modulus, entries: Vec<BigUint>) -> Self {
        assert_eq!(entries.len(), order * order, "matrix must be square");
        let entries = entries.into_iter().map(|e| modulus.reduce(e)).collect();
        DenseMatrix {
            order,
            modulus,
            entries,
        }
    }

    pub fn identity(order: usize, modulus: Modulus) -> Self {
        let mut entries = vec![BigUint::zero(); order * order];
        for i in 0..order {
            entries[i * order + i] = BigUint::one();
        }
        DenseMatrix {
            order,
            modulus,
            entries,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row * self.order + col]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Plain cubic-time matrix product mod `n`.
    pub fn multiply(&self, other: &DenseMatrix) -> Result<DenseMatrix, OracleError> {
        if self.order != other.order || self.modulus != other.modulus {
            return Err(OracleError::MixedParameters);
        }
        let n = self.order;
        let mut entries = vec![BigUint::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.entry(k, j);
                }
            }
        }
        let entries = entries
            .into_iter()
            .map(|e| e % self.modulus.get())
            .collect();
        Ok(DenseMatrix {
            order: n,
            modulus: self.modulus.clone(),
            entries,
        })
    }
}

impl From<&BlockCirculantMatrix> for DenseMatrix {
    fn from(mat: &BlockCirculantMatrix) -> Self {
        DenseMatrix {
            order: mat.order(),
            modulus: mat.modulus().clone(),
            entries: mat.entries().to_vec(),
        }
    }
}

/// Inverts `a` modulo `n = p1 * p2` by Gauss-Jordan elimination in the
/// fields `Z_p1` and `Z_p2`, recombining entrywise with the Chinese
/// remainder theorem. Requires the factorization, so it only runs on
/// test-scale keys.
pub fn matrix_inverse_crt(
    a: &DenseMatrix,
    p1: &BigUint,
    p2: &BigUint,
) -> Result<DenseMatrix, OracleError> {
    if &(p1 * p2) != a.modulus().get() {
        return Err(OracleError::BadFactorization);
    }
    let inv1 = gauss_jordan_inverse(a, p1)?;
    let inv2 = gauss_jordan_inverse(a, p2)?;
    let entries = inv1
        .iter()
        .zip(&inv2)
        .map(|(x, y)| crt_pair(x, p1, y, p2))
        .collect();
    Ok(DenseMatrix::new(a.order(), a.modulus().clone(), entries))
}

/// Gauss-Jordan inversion of `a` reduced mod the prime `p`.
fn gauss_jordan_inverse(a: &DenseMatrix, p: &BigUint) -> Result<Vec<BigUint>, OracleError> {
    let n = a.order();
    let field = Modulus::new(p.clone()).expect("prime is >= 2");
    let mut work: Vec<BigUint> = a.entries().iter().map(|e| e % p).collect();
    let mut inverse = vec![BigUint::zero(); n * n];
    for i in 0..n {
        inverse[i * n + i] = BigUint::one();
    }
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !work[r * n + col].is_zero())
            .ok_or_else(|| OracleError::Singular(p.clone()))?;
        if pivot_row != col {
            for j in 0..n {
                work.swap(pivot_row * n + j, col * n + j);
                inverse.swap(pivot_row * n + j, col * n + j);
            }
        }
        let pivot = work[col * n + col].clone();
        let pivot_inv = field
            .inv_raw(&pivot)
            .expect("nonzero entries of a prime field are units");
        for j in 0..n {
            work[col * n + j] = field.mul_raw(&work[col * n + j], &pivot_inv);
            inverse[col * n + j] = field.mul_raw(&inverse[col * n + j], &pivot_inv);
        }
        for row in 0..n {
            if row == col || work[row * n + col].is_zero() {
                continue;
            }
            let factor = work[row * n + col].clone();
            for j in 0..n {
                let w = field.mul_raw(&factor, &work[col * n + j]);
                work[row * n + j] = field.sub_raw(&work[row * n + j], &w);
                let v = field.mul_raw(&factor, &inverse[col * n + j]);
                inverse[row * n + j] = field.sub_raw(&inverse[row * n + j], &v);
            }
        }
    }
    Ok(inverse)
}

fn crt_pair(a: &BigUint, p: &BigUint, b: &BigUint, q: &BigUint) -> BigUint {
    let (g, p_inv, _) =
        ext_gcd(&BigInt::from(p.clone()), &BigInt::from(q.clone())).expect("moduli are nonzero");
    debug_assert!(g.is_one());
    let q_int = BigInt::from(q.clone());
    let diff = BigInt::from(b.clone()) - BigInt::from(a % q);
    let t = ((diff * p_inv) % &q_int + &q_int) % &q_int;
    a + p * t.to_biguint().expect("normalized to [0, q)")
}
