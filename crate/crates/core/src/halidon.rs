//! Halidon-ring structure on `Z_n`: primitive `m`-th roots of unity in the
//! ring sense, root enumeration, and the reusable evaluation context.
//!
//! In a ring with zero divisors, multiplicative order `m` is not enough for
//! a root of unity to behave like one: the geometric sums
//! `1 + w^r + (w^r)^2 + ... + (w^r)^{m-1}` must vanish for every
//! `0 < r < m`. That stronger condition is checked literally here, by
//! summation, and is what "primitive root" means throughout this crate.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::modint::{ext_gcd, Modulus, Residue};

/// Which clause of the primitive-root definition failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCheck {
    /// `w^m != 1`.
    PowerNotOne,
    /// `w^j = 1` for some `0 < j < m`, so `m` is not the least period.
    PrematurePeriod { j: usize },
    /// The geometric sum at shift `r` is nonzero.
    GeometricSumNonZero { r: usize },
}

impl fmt::Display for RootCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootCheck::PowerNotOne => write!(f, "w^m is not 1"),
            RootCheck::PrematurePeriod { j } => write!(f, "w^{j} = 1 with {j} < m"),
            RootCheck::GeometricSumNonZero { r } => {
                write!(f, "geometric sum at shift r = {r} does not vanish")
            }
        }
    }
}

/// Errors from context construction and root enumeration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HalidonError {
    #[error("index {index} is not invertible modulo {modulus} (gcd = {gcd})")]
    IndexNotInvertible {
        index: usize,
        modulus: BigUint,
        gcd: BigUint,
    },
    #[error("{omega} is not a primitive root of index {index} modulo {modulus}: {check}")]
    NotPrimitiveRoot {
        omega: BigUint,
        index: usize,
        modulus: BigUint,
        check: RootCheck,
    },
}

/// Precomputed data for evaluating spectra over `Z_n` with a fixed index
/// `m` and primitive root `omega`: the inverse of `m` and the full power
/// table `omega^0 .. omega^{m-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalidonContext {
    modulus: Modulus,
    index: usize,
    index_inverse: BigUint,
    omega: BigUint,
    omega_powers: Vec<BigUint>,
}

impl HalidonContext {
    /// Validates that `gcd(m, n) = 1` and that `omega` is a primitive
    /// `m`-th root, then precomputes the power table.
    pub fn new(modulus: Modulus, index: usize, omega: BigUint) -> Result<Self, HalidonError> {
        assert!(index >= 1, "index must be positive");
        let m_big = BigUint::from(index);
        let g = m_big.gcd(modulus.get());
        if !g.is_one() {
            return Err(HalidonError::IndexNotInvertible {
                index,
                modulus: modulus.get().clone(),
                gcd: g,
            });
        }
        let omega = modulus.reduce(omega);
        let omega_powers = match root_check_raw(&omega, index, &modulus) {
            Ok(powers) => powers,
            Err(check) => {
                return Err(HalidonError::NotPrimitiveRoot {
                    omega,
                    index,
                    modulus: modulus.get().clone(),
                    check,
                })
            }
        };
        let index_inverse = modulus
            .inv_raw(&m_big)
            .expect("gcd(m, n) = 1 was just checked");
        Ok(HalidonContext {
            modulus,
            index,
            index_inverse,
            omega,
            omega_powers,
        })
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    /// The index `m`.
    pub fn index(&self) -> usize {
        self.index
    }

    /// `m^{-1} mod n`.
    pub fn index_inverse(&self) -> &BigUint {
        &self.index_inverse
    }

    pub fn omega(&self) -> &BigUint {
        &self.omega
    }

    pub fn omega_residue(&self) -> Residue {
        self.modulus.residue(self.omega.clone())
    }

    /// `omega^exp`, with the exponent reduced modulo `m`.
    pub fn omega_power(&self, exp: usize) -> &BigUint {
        &self.omega_powers[exp % self.index]
    }
}

/// Runs the three-clause definition literally and reports the first
/// failing clause. On success returns the power table `w^0 .. w^{m-1}`.
fn root_check_raw(omega: &BigUint, m: usize, modulus: &Modulus) -> Result<Vec<BigUint>, RootCheck> {
    debug_assert!(omega < modulus.get());
    let mut powers = Vec::with_capacity(m);
    powers.push(BigUint::one());
    for j in 1..m {
        let next = modulus.mul_raw(&powers[j - 1], omega);
        if next.is_one() {
            return Err(RootCheck::PrematurePeriod { j });
        }
        powers.push(next);
    }
    if !modulus.mul_raw(&powers[m - 1], omega).is_one() {
        return Err(RootCheck::PowerNotOne);
    }
    // Geometric sums: for 0 < r < m, the sum of w^{rk} over k must vanish.
    for r in 1..m {
        let mut sum = BigUint::zero();
        for k in 0..m {
            sum = modulus.add_raw(&sum, &powers[(r * k) % m]);
        }
        if !sum.is_zero() {
            return Err(RootCheck::GeometricSumNonZero { r });
        }
    }
    Ok(powers)
}

/// Detailed form of [`is_primitive_root`], reporting the failing clause.
pub fn check_primitive_root(omega: &Residue, index: usize) -> Result<(), RootCheck> {
    assert!(index >= 1, "index must be positive");
    root_check_raw(omega.value(), index, omega.modulus()).map(|_| ())
}

/// True iff `omega` is a primitive `index`-th root of unity in the ring
/// sense: least period `index`, and every nontrivial geometric sum zero.
pub fn is_primitive_root(omega: &Residue, index: usize) -> bool {
    check_primitive_root(omega, index).is_ok()
}

/// The largest index for which `Z_{p1 p2}` is a halidon ring:
/// `gcd(p1 - 1, p2 - 1)`.
pub fn max_index(p1: &BigUint, p2: &BigUint) -> BigUint {
    (p1 - 1u32).gcd(&(p2 - 1u32))
}

/// Enumerates primitive `index`-th roots in ascending order by scanning
/// every candidate in `[2, n)` against the literal definition. This is the
/// reference path; it is only sensible for moderate `n`.
pub fn find_primitive_roots(
    modulus: &Modulus,
    index: usize,
    limit: Option<usize>,
) -> Vec<Residue> {
    assert!(index >= 1, "index must be positive");
    if limit == Some(0) {
        return Vec::new();
    }
    if index == 1 {
        return vec![modulus.one()];
    }
    let n = modulus.get();
    let m_big = BigUint::from(index);
    let mut roots = Vec::new();
    let mut w = BigUint::from(2u32);
    while &w < n {
        // Cheap rejection first; the full check repeats this implicitly.
        if w.modpow(&m_big, n).is_one() && root_check_raw(&w, index, modulus).is_ok() {
            roots.push(modulus.residue(w.clone()));
            if limit.is_some_and(|k| roots.len() >= k) {
                break;
            }
        }
        w += 1u32;
    }
    roots
}

/// Accelerated enumeration for `n = p1 * p2` with distinct primes: roots
/// are exactly the Chinese-remainder combinations of an order-`index`
/// element modulo each prime, so there are `phi(index)^2` of them. Returns
/// the same set as the exhaustive scan, in ascending order.
///
/// Expects `p1 != p2`; both are assumed prime (callers validate).
pub fn find_primitive_roots_with_factors(
    p1: &BigUint,
    p2: &BigUint,
    index: usize,
    limit: Option<usize>,
) -> Vec<Residue> {
    assert!(index >= 1, "index must be positive");
    assert_ne!(p1, p2, "factors must be distinct");
    let n = Modulus::new(p1 * p2).expect("product of primes is >= 2");
    if limit == Some(0) {
        return Vec::new();
    }
    if index == 1 {
        return vec![n.one()];
    }
    let a_roots = order_m_elements(p1, index);
    let b_roots = order_m_elements(p2, index);
    let mut roots: Vec<BigUint> = Vec::with_capacity(a_roots.len() * b_roots.len());
    for a in &a_roots {
        for b in &b_roots {
            roots.push(crt_pair(a, p1, b, p2));
        }
    }
    roots.sort_unstable();
    if let Some(k) = limit {
        roots.truncate(k);
    }
    roots.into_iter().map(|w| n.residue(w)).collect()
}

/// All elements of multiplicative order exactly `m` modulo the prime `p`.
/// Empty when `m` does not divide `p - 1`.
fn order_m_elements(p: &BigUint, m: usize) -> Vec<BigUint> {
    let p_minus_1 = p - 1u32;
    let m_big = BigUint::from(m);
    if !(&p_minus_1 % &m_big).is_zero() {
        return Vec::new();
    }
    let cofactor = &p_minus_1 / &m_big;
    let prime_divisors = distinct_prime_factors(m);
    // Any x whose power x^{(p-1)/m} has order exactly m generates the unique
    // order-m subgroup; for prime p one turns up within a few candidates.
    let mut generator = None;
    let mut x = BigUint::from(2u32);
    let mut attempts = 0usize;
    while &x < p && attempts < 1 << 16 {
        let y = x.modpow(&cofactor, p);
        if !y.is_one()
            && prime_divisors
                .iter()
                .all(|&q| !y.modpow(&BigUint::from(m / q), p).is_one())
        {
            generator = Some(y);
            break;
        }
        x += 1u32;
        attempts += 1;
    }
    let Some(y) = generator else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut power = BigUint::one();
    for k in 1..=m {
        power = (&power * &y) % p;
        if k.gcd(&m) == 1 {
            out.push(power.clone());
        }
    }
    out.sort_unstable();
    out
}

fn distinct_prime_factors(mut m: usize) -> Vec<usize> {
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    factors
}

/// Combines `x = a (mod p)`, `x = b (mod q)` for coprime p, q.
fn crt_pair(a: &BigUint, p: &BigUint, b: &BigUint, q: &BigUint) -> BigUint {
    let (g, p_inv, _) = ext_gcd(&BigInt::from(p.clone()), &BigInt::from(q.clone()))
        .expect("moduli are nonzero");
    debug_assert!(g.is_one(), "CRT moduli must be coprime");
    let q_int = BigInt::from(q.clone());
    let diff = BigInt::from(b.clone()) - BigInt::from(a % q);
    let t = ((diff * p_inv) % &q_int + &q_int) % &q_int;
    a + p * t.to_biguint().expect("normalized to [0, q)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modulus(n: u64) -> Modulus {
        Modulus::from_u64(n).unwrap()
    }

    #[test]
    fn paper_root_is_primitive() {
        let n = modulus(105851);
        assert!(is_primitive_root(&n.residue_from_u64(37199), 50));
    }

    #[test]
    fn index_one_accepts_only_one() {
        let n = modulus(97);
        assert!(is_primitive_root(&n.one(), 1));
        assert!(!is_primitive_root(&n.one(), 5));
        assert_eq!(
            check_primitive_root(&n.one(), 5),
            Err(RootCheck::PrematurePeriod { j: 1 })
        );
    }

    #[test]
    fn minus_one_has_period_two() {
        let n = modulus(105851);
        let w = n.residue_from_u64(105850);
        assert_eq!(
            check_primitive_root(&w, 50),
            Err(RootCheck::PrematurePeriod { j: 2 })
        );
        assert!(is_primitive_root(&w, 2));
    }

    #[test]
    fn zero_fails_power_clause() {
        let n = modulus(97);
        assert_eq!(
            check_primitive_root(&n.zero(), 3),
            Err(RootCheck::PowerNotOne)
        );
    }

    #[test]
    fn order_m_without_vanishing_sums_is_rejected() {
        // 11^2 = 1 mod 15, but 1 + 11 = 12 != 0: multiplicative order 2
        // is not enough in a ring with zero divisors.
        let n = modulus(15);
        let w = n.residue_from_u64(11);
        assert_eq!(
            check_primitive_root(&w, 2),
            Err(RootCheck::GeometricSumNonZero { r: 1 })
        );
        // 14 = -1 mod 15 does satisfy the definition: 1 + 14 = 0.
        assert!(is_primitive_root(&n.residue_from_u64(14), 2));
    }

    #[test]
    fn max_index_paper_pair() {
        let g = max_index(&BigUint::from(151u32), &BigUint::from(701u32));
        assert_eq!(g, BigUint::from(50u32));
        assert!((BigUint::from(150u32) % &g).is_zero());
        assert!((BigUint::from(700u32) % &g).is_zero());
    }

    #[test]
    fn max_index_equal_primes() {
        let p = BigUint::from(13u32);
        assert_eq!(max_index(&p, &p), BigUint::from(12u32));
    }

    #[test]
    fn context_paper_parameters() {
        let ctx = HalidonContext::new(modulus(105851), 50, BigUint::from(37199u32)).unwrap();
        assert_eq!(ctx.index_inverse(), &BigUint::from(103734u32));
        assert_eq!(ctx.omega_power(0), &BigUint::one());
        assert_eq!(ctx.omega_power(1), &BigUint::from(37199u32));
        assert_eq!(ctx.omega_power(50), &BigUint::one());
    }

    #[test]
    fn context_rejects_non_root() {
        let err = HalidonContext::new(modulus(105851), 50, BigUint::one()).unwrap_err();
        assert!(matches!(err, HalidonError::NotPrimitiveRoot { .. }));
    }

    #[test]
    fn context_rejects_non_invertible_index() {
        let err = HalidonContext::new(modulus(10), 5, BigUint::from(3u32)).unwrap_err();
        match err {
            HalidonError::IndexNotInvertible { gcd, .. } => {
                assert_eq!(gcd, BigUint::from(5u32));
            }
            other => panic!("expected IndexNotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn exhaustive_scan_small_ring() {
        // Z_15 has exactly one primitive square root: 14.
        let n = modulus(15);
        let roots = find_primitive_roots(&n, 2, None);
        assert_eq!(roots, vec![n.residue_from_u64(14)]);
    }

    #[test]
    fn index_one_enumeration() {
        let n = modulus(15);
        let roots = find_primitive_roots(&n, 1, None);
        assert_eq!(roots, vec![n.one()]);
    }

    #[test]
    fn limit_truncates_in_ascending_order() {
        let p1 = BigUint::from(151u32);
        let p2 = BigUint::from(701u32);
        let all = find_primitive_roots_with_factors(&p1, &p2, 50, None);
        let first = find_primitive_roots_with_factors(&p1, &p2, 50, Some(1));
        assert_eq!(first.len(), 1);
        assert_eq!(first[0], all[0]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn crt_census_matches_phi_squared() {
        // phi(50)^2 = 400 roots for the paper pair.
        let p1 = BigUint::from(151u32);
        let p2 = BigUint::from(701u32);
        let roots = find_primitive_roots_with_factors(&p1, &p2, 50, None);
        assert_eq!(roots.len(), 400);
        let target = modulus(105851).residue_from_u64(37199);
        assert!(roots.contains(&target));
    }

    #[test]
    fn crt_path_empty_when_index_does_not_divide() {
        let p1 = BigUint::from(7u32);
        let p2 = BigUint::from(13u32);
        // 5 divides neither 6 nor 12.
        let roots = find_primitive_roots_with_factors(&p1, &p2, 5, None);
        assert!(roots.is_empty());
    }

    #[test]
    fn paths_agree_on_small_semiprime() {
        let p1 = BigUint::from(7u32);
        let p2 = BigUint::from(13u32);
        let n = modulus(91);
        for m in [2usize, 3, 6] {
            let scan = find_primitive_roots(&n, m, None);
            let crt = find_primitive_roots_with_factors(&p1, &p2, m, None);
            assert_eq!(scan, crt, "index {m}");
        }
    }
}
