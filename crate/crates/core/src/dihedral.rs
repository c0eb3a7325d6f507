//! The group ring `Z_n[D_m]` of the dihedral group
//! `D_m = <a, b | a^m = 1, b^2 = 1, abab = 1>`.
//!
//! Elements are kept in the normal form
//! `u = sum_i alpha_i a^{i-1} + sum_i alpha_{m+i} a^{i-1} b`, as a vector
//! of `2m` canonical coefficients. Three views of an element matter here:
//!
//! * the coefficient vector itself (what messages become),
//! * its block-circulant matrix image under the regular representation
//!   ([`GroupRingElement::to_matrix`]), used for verification,
//! * its four spectra `lambda, gamma, delta, eta`
//!   ([`GroupRingElement::spectral_transform`]), DFT-style sums over a
//!   primitive `m`-th root that reduce inversion to `m` independent 2x2
//!   problems.
//!
//! Inversion ([`GroupRingElement::invert`]) goes through the spectra: an
//! element is a unit exactly when every per-frequency determinant
//! `lambda_i * lambda_{w(m-i+2)} - gamma_i * gamma_{w(m-i+2)}` is a unit
//! mod `n`, and the inverse's coefficients come back via the inverse
//! transform scaled by `m^{-1}`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::halidon::HalidonContext;
use crate::modint::Modulus;

/// Errors from group-ring arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DihedralError {
    #[error("operands come from different rings (index or modulus differ)")]
    MixedParameters,
    #[error("element has exactly 2m coefficients: expected {expected}, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error(
        "element is not a unit: determinant {det} at frequency {frequency} \
         shares factor {gcd} with the modulus"
    )]
    NotAUnitElement {
        /// 1-based index of the first failing frequency.
        frequency: usize,
        det: BigUint,
        gcd: BigUint,
    },
}

/// The wrap convention for 1-based spectral indices: reduction modulo `m`
/// with zero treated as `m`, so the result is always in `1..=m`.
pub fn wrap(i: i64, m: usize) -> usize {
    let m = m as i64;
    ((i - 1).rem_euclid(m) + 1) as usize
}

/// An element of `Z_n[D_m]` in normal form. Coefficient slot `k < m`
/// holds the coefficient of `a^k`; slot `m + k` holds that of `a^k b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    index: usize,
    modulus: Modulus,
    coeffs: Vec<BigUint>,
}

impl GroupRingElement {
    /// Builds an element from `2m` coefficients, reducing each mod `n`.
    pub fn new(
        index: usize,
        modulus: Modulus,
        coeffs: Vec<BigUint>,
    ) -> Result<Self, DihedralError> {
        assert!(index >= 1, "index must be positive");
        if coeffs.len() != 2 * index {
            return Err(DihedralError::CoefficientCount {
                expected: 2 * index,
                got: coeffs.len(),
            });
        }
        let coeffs = coeffs.into_iter().map(|c| modulus.reduce(c)).collect();
        Ok(GroupRingElement {
            index,
            modulus,
            coeffs,
        })
    }

    pub fn from_u64_coeffs(
        index: usize,
        modulus: Modulus,
        coeffs: &[u64],
    ) -> Result<Self, DihedralError> {
        Self::new(
            index,
            modulus,
            coeffs.iter().map(|&c| BigUint::from(c)).collect(),
        )
    }

    /// The multiplicative identity: coefficient 1 on the group identity.
    pub fn identity(index: usize, modulus: Modulus) -> Self {
        let mut coeffs = vec![BigUint::zero(); 2 * index];
        coeffs[0] = BigUint::one();
        GroupRingElement {
            index,
            modulus,
            coeffs,
        }
    }

    pub fn zero(index: usize, modulus: Modulus) -> Self {
        GroupRingElement {
            index,
            modulus,
            coeffs: vec![BigUint::zero(); 2 * index],
        }
    }

    /// The basis element in coefficient slot `slot`: `a^slot` for
    /// `slot < m`, `a^{slot-m} b` otherwise.
    pub fn basis(index: usize, modulus: Modulus, slot: usize) -> Self {
        assert!(slot < 2 * index);
        let mut coeffs = vec![BigUint::zero(); 2 * index];
        coeffs[slot] = BigUint::one();
        GroupRingElement {
            index,
            modulus,
            coeffs,
        }
    }

    /// The index `m` of the underlying dihedral group `D_m`.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    /// The `2m` coefficients, canonical mod `n`.
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), DihedralError> {
        if self.index != other.index || self.modulus != other.modulus {
            return Err(DihedralError::MixedParameters);
        }
        Ok(())
    }

    fn check_context(&self, ctx: &HalidonContext) -> Result<(), DihedralError> {
        if self.index != ctx.index() || &self.modulus != ctx.modulus() {
            return Err(DihedralError::MixedParameters);
        }
        Ok(())
    }

    /// Convolution product, distributing over the basis with
    /// `a^i a^j = a^{i+j}`, `a^i (a^j b) = a^{i+j} b`,
    /// `(a^i b) a^j = a^{i-j} b`, `(a^i b)(a^j b) = a^{i-j}`,
    /// exponents mod `m`.
    pub fn multiply(&self, other: &Self) -> Result<Self, DihedralError> {
        self.check_compatible(other)?;
        let m = self.index;
        let mut rotations = vec![BigUint::zero(); m];
        let mut reflections = vec![BigUint::zero(); m];
        for i in 0..m {
            let u_rot = &self.coeffs[i];
            let u_ref = &self.coeffs[m + i];
            for j in 0..m {
                let sum = (i + j) % m;
                let diff = (m + i - j) % m;
                rotations[sum] += u_rot * &other.coeffs[j];
                reflections[sum] += u_rot * &other.coeffs[m + j];
                reflections[diff] += u_ref * &other.coeffs[j];
                rotations[diff] += u_ref * &other.coeffs[m + j];
            }
        }
        let coeffs = rotations
            .into_iter()
            .chain(reflections)
            .map(|c| c % self.modulus.get())
            .collect();
        Ok(GroupRingElement {
            index: m,
            modulus: self.modulus.clone(),
            coeffs,
        })
    }

    /// The image of this element under the regular representation: a
    /// `2m x 2m` matrix of four circulant blocks. Multiplication of
    /// elements corresponds to multiplication of images.
    pub fn to_matrix(&self) -> BlockCirculantMatrix {
        let m = self.index;
        let order = 2 * m;
        let mut entries = vec![BigUint::zero(); order * order];
        for k in 0..m {
            for j in 0..m {
                let fwd = (m + j - k) % m; // j - k mod m
                let bwd = (m + k - j) % m; // k - j mod m
                entries[k * order + j] = self.coeffs[fwd].clone();
                entries[k * order + m + j] = self.coeffs[m + fwd].clone();
                entries[(m + k) * order + j] = self.coeffs[m + bwd].clone();
                entries[(m + k) * order + m + j] = self.coeffs[bwd].clone();
            }
        }
        BlockCirculantMatrix {
            index: m,
            modulus: self.modulus.clone(),
            entries,
        }
    }

    /// Computes the four spectra and the per-frequency determinants.
    pub fn spectral_transform(
        &self,
        ctx: &HalidonContext,
    ) -> Result<SpectralData, DihedralError> {
        self.check_context(ctx)?;
        let m = self.index;
        let modulus = &self.modulus;
        let mut lambda = Vec::with_capacity(m);
        let mut gamma = Vec::with_capacity(m);
        let mut delta = Vec::with_capacity(m);
        let mut eta = Vec::with_capacity(m);
        for i in 1..=m {
            let mut l_acc = BigUint::zero();
            let mut g_acc = BigUint::zero();
            let mut d_acc = BigUint::zero();
            let mut e_acc = BigUint::zero();
            for r in 1..=m {
                let w = ctx.omega_power((i - 1) * (r - 1));
                let mirrored = wrap(m as i64 - r as i64 + 2, m);
                l_acc += &self.coeffs[mirrored - 1] * w;
                g_acc += &self.coeffs[m + r - 1] * w;
                d_acc += &self.coeffs[m + mirrored - 1] * w;
                e_acc += &self.coeffs[r - 1] * w;
            }
            lambda.push(l_acc % modulus.get());
            gamma.push(g_acc % modulus.get());
            delta.push(d_acc % modulus.get());
            eta.push(e_acc % modulus.get());
        }
        let mut dets = Vec::with_capacity(m);
        for i in 1..=m {
            let mirror = wrap(m as i64 - i as i64 + 2, m);
            let a = modulus.mul_raw(&lambda[i - 1], &lambda[mirror - 1]);
            let b = modulus.mul_raw(&gamma[i - 1], &gamma[mirror - 1]);
            dets.push(modulus.sub_raw(&a, &b));
            // Structural self-check: the mirrored spectra coincide.
            debug_assert_eq!(lambda[mirror - 1], eta[i - 1]);
            debug_assert_eq!(gamma[mirror - 1], delta[i - 1]);
        }
        Ok(SpectralData {
            index: m,
            modulus: modulus.clone(),
            lambda,
            gamma,
            delta,
            eta,
            dets,
        })
    }

    /// True iff every spectral determinant is a unit mod `n`, which is
    /// exactly the invertibility criterion.
    pub fn is_unit(&self, ctx: &HalidonContext) -> Result<bool, DihedralError> {
        Ok(self.spectral_transform(ctx)?.first_non_unit().is_none())
    }

    /// The multiplicative inverse, via the spectral route: per-frequency
    /// inverse spectra `l, s`, then the inverse transform scaled by
    /// `m^{-1}`. Fails with the first non-unit frequency.
    ///
    /// In debug builds the two algebraic routes to `l, s` are
    /// cross-checked against each other and the result is verified by
    /// multiplying back to the identity.
    pub fn invert(&self, ctx: &HalidonContext) -> Result<Self, DihedralError> {
        let spectra = self.spectral_transform(ctx)?;
        let (l, s) = spectra.inverse_spectra_from_lambda_gamma()?;
        #[cfg(debug_assertions)]
        {
            let (l2, s2) = spectra
                .inverse_spectra_from_eta_delta()
                .expect("unit criterion is route-independent");
            debug_assert_eq!(l, l2, "inverse spectra routes disagree on l");
            debug_assert_eq!(s, s2, "inverse spectra routes disagree on s");
        }
        let m = self.index;
        let modulus = &self.modulus;
        let m_inv = ctx.index_inverse();
        let mut coeffs = vec![BigUint::zero(); 2 * m];
        for i in 1..=m {
            let mut rot_acc = BigUint::zero();
            let mut ref_acc = BigUint::zero();
            for r in 1..=m {
                let w = ctx.omega_power((i - 1) * (r - 1));
                rot_acc += &l[r - 1] * w;
                ref_acc += &s[r - 1] * w;
            }
            coeffs[i - 1] = modulus.mul_raw(&(rot_acc % modulus.get()), m_inv);
            coeffs[m + i - 1] = modulus.mul_raw(&(ref_acc % modulus.get()), m_inv);
        }
        let inverse = GroupRingElement {
            index: m,
            modulus: modulus.clone(),
            coeffs,
        };
        #[cfg(debug_assertions)]
        debug_assert!(
            self.multiply(&inverse)
                .expect("same ring by construction")
                .is_identity(),
            "inverse failed to multiply back to the identity"
        );
        Ok(inverse)
    }
}

/// The four spectra of an element plus the per-frequency determinants
/// `dets[i] = lambda_i * lambda_{w(m-i+2)} - gamma_i * gamma_{w(m-i+2)}`.
///
/// The mirrored-index identities `lambda_{w(m-i+2)} = eta_i` and
/// `gamma_{w(m-i+2)} = delta_i` hold for every element, which is why two
/// independent routes to the inverse spectra exist below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralData {
    index: usize,
    modulus: Modulus,
    lambda: Vec<BigUint>,
    gamma: Vec<BigUint>,
    delta: Vec<BigUint>,
    eta: Vec<BigUint>,
    dets: Vec<BigUint>,
}

impl SpectralData {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn lambda(&self) -> &[BigUint] {
        &self.lambda
    }

    pub fn gamma(&self) -> &[BigUint] {
        &self.gamma
    }

    pub fn delta(&self) -> &[BigUint] {
        &self.delta
    }

    pub fn eta(&self) -> &[BigUint] {
        &self.eta
    }

    pub fn dets(&self) -> &[BigUint] {
        &self.dets
    }

    /// First frequency (1-based) whose determinant is not a unit, with
    /// the determinant and gcd witness.
    pub fn first_non_unit(&self) -> Option<(usize, BigUint, BigUint)> {
        let n = self.modulus.get();
        for (k, det) in self.dets.iter().enumerate() {
            let g = det.gcd(n);
            if !g.is_one() {
                return Some((k + 1, det.clone(), g));
            }
        }
        None
    }

    fn non_unit_error(&self) -> Option<DihedralError> {
        self.first_non_unit()
            .map(|(frequency, det, gcd)| DihedralError::NotAUnitElement {
                frequency,
                det,
                gcd,
            })
    }

    /// Inverse spectra from `lambda` and `gamma` only:
    /// `l_i = lambda_{w(m-i+2)} / dets[i]`, `s_i = -gamma_{w(m-i+2)} / dets[i]`.
    pub fn inverse_spectra_from_lambda_gamma(
        &self,
    ) -> Result<(Vec<BigUint>, Vec<BigUint>), DihedralError> {
        if let Some(err) = self.non_unit_error() {
            return Err(err);
        }
        let m = self.index;
        let modulus = &self.modulus;
        let mut l = Vec::with_capacity(m);
        let mut s = Vec::with_capacity(m);
        for i in 1..=m {
            let mirror = wrap(m as i64 - i as i64 + 2, m);
            let det_inv = modulus
                .inv_raw(&self.dets[i - 1])
                .expect("all determinants are units");
            l.push(modulus.mul_raw(&self.lambda[mirror - 1], &det_inv));
            let neg_gamma = modulus.neg_raw(&self.gamma[mirror - 1]);
            s.push(modulus.mul_raw(&neg_gamma, &det_inv));
        }
        Ok((l, s))
    }

    /// Inverse spectra from `eta` and `delta`:
    /// `l_r = eta_r / (lambda_r eta_r - gamma_r delta_r)`,
    /// `s_r = -delta_r / (lambda_r eta_r - gamma_r delta_r)`.
    /// Agrees with the `lambda`/`gamma` route on every element.
    pub fn inverse_spectra_from_eta_delta(
        &self,
    ) -> Result<(Vec<BigUint>, Vec<BigUint>), DihedralError> {
        let m = self.index;
        let modulus = &self.modulus;
        let n = modulus.get();
        let mut l = Vec::with_capacity(m);
        let mut s = Vec::with_capacity(m);
        for r in 0..m {
            let a = modulus.mul_raw(&self.lambda[r], &self.eta[r]);
            let b = modulus.mul_raw(&self.gamma[r], &self.delta[r]);
            let det = modulus.sub_raw(&a, &b);
            let g = det.gcd(n);
            if !g.is_one() {
                return Err(DihedralError::NotAUnitElement {
                    frequency: r + 1,
                    det,
                    gcd: g,
                });
            }
            let det_inv = modulus.inv_raw(&det).expect("det is a unit");
            l.push(modulus.mul_raw(&self.eta[r], &det_inv));
            let neg_delta = modulus.neg_raw(&self.delta[r]);
            s.push(modulus.mul_raw(&neg_delta, &det_inv));
        }
        Ok((l, s))
    }
}

/// A `2m x 2m` matrix over `Z_n` whose four `m x m` blocks are circulants
/// (each row is the previous row rotated one step right). Produced by
/// [`GroupRingElement::to_matrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCirculantMatrix {
    index: usize,
    modulus: Modulus,
    entries: Vec<BigUint>,
}

impl BlockCirculantMatrix {
    pub fn order(&self) -> usize {
        2 * self.index
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        let order = self.order();
        assert!(row < order && col < order);
        &self.entries[row * order + col]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Checks the circulant structure of all four blocks.
    pub fn is_block_circulant(&self) -> bool {
        let m = self.index;
        for (block_row, block_col) in [(0, 0), (0, m), (m, 0), (m, m)] {
            for k in 0..m - 1 {
                for j in 0..m {
                    let here = self.entry(block_row + k, block_col + j);
                    let below = self.entry(block_row + k + 1, block_col + (j + 1) % m);
                    if here != below {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modint::Modulus;
    use alloc::vec;

    fn modulus(n: u64) -> Modulus {
        Modulus::from_u64(n).unwrap()
    }

    fn ctx(n: u64, m: usize, omega: u64) -> HalidonContext {
        HalidonContext::new(modulus(n), m, BigUint::from(omega)).unwrap()
    }

    #[test]
    fn wrap_convention() {
        assert_eq!(wrap(0, 5), 5);
        assert_eq!(wrap(5, 5), 5);
        assert_eq!(wrap(6, 5), 1);
        assert_eq!(wrap(1, 5), 1);
        assert_eq!(wrap(-1, 5), 4);
        assert_eq!(wrap(11, 5), 1);
    }

    #[test]
    fn identity_is_neutral() {
        let e = GroupRingElement::identity(4, modulus(97));
        let u = GroupRingElement::from_u64_coeffs(4, modulus(97), &[3, 1, 4, 1, 5, 9, 2, 6])
            .unwrap();
        assert_eq!(e.multiply(&u).unwrap(), u);
        assert_eq!(u.multiply(&e).unwrap(), u);
        assert!(e.multiply(&e).unwrap().is_identity());
    }

    #[test]
    fn presentation_relations_hold() {
        for m in 1..=6 {
            let n = modulus(97);
            let a = GroupRingElement::basis(m, n.clone(), 1 % m);
            let b = GroupRingElement::basis(m, n.clone(), m);
            // b^2 = 1
            assert!(b.multiply(&b).unwrap().is_identity(), "b^2, m = {m}");
            // a^m = 1
            let mut power = GroupRingElement::identity(m, n.clone());
            for _ in 0..m {
                power = power.multiply(&a).unwrap();
            }
            assert!(power.is_identity(), "a^m, m = {m}");
            // (ab)(ab) = 1
            let ab = a.multiply(&b).unwrap();
            assert!(ab.multiply(&ab).unwrap().is_identity(), "abab, m = {m}");
        }
    }

    #[test]
    fn reflection_absorbs_rotation() {
        // (ab) * a = b
        let n = modulus(97);
        let m = 5;
        let a = GroupRingElement::basis(m, n.clone(), 1);
        let b = GroupRingElement::basis(m, n.clone(), m);
        let ab = a.multiply(&b).unwrap();
        assert_eq!(ab.multiply(&a).unwrap(), b);
    }

    #[test]
    fn mixed_parameters_rejected() {
        let u = GroupRingElement::identity(3, modulus(97));
        let v = GroupRingElement::identity(4, modulus(97));
        let w = GroupRingElement::identity(3, modulus(89));
        assert_eq!(u.multiply(&v), Err(DihedralError::MixedParameters));
        assert_eq!(u.multiply(&w), Err(DihedralError::MixedParameters));
    }

    #[test]
    fn coefficient_count_enforced() {
        let err = GroupRingElement::new(3, modulus(97), vec![BigUint::one(); 5]).unwrap_err();
        assert_eq!(
            err,
            DihedralError::CoefficientCount {
                expected: 6,
                got: 5
            }
        );
    }

    #[test]
    fn identity_maps_to_identity_matrix() {
        let e = GroupRingElement::identity(4, modulus(97));
        let mat = e.to_matrix();
        assert!(mat.is_block_circulant());
        for r in 0..8 {
            for c in 0..8 {
                let expected = if r == c { BigUint::one() } else { BigUint::zero() };
                assert_eq!(mat.entry(r, c), &expected);
            }
        }
    }

    #[test]
    fn matrix_embeds_coefficients_injectively() {
        // Row 0 carries the full coefficient vector verbatim.
        let u =
            GroupRingElement::from_u64_coeffs(3, modulus(97), &[1, 2, 3, 4, 5, 6]).unwrap();
        let mat = u.to_matrix();
        assert!(mat.is_block_circulant());
        let row0: Vec<BigUint> = (0..6).map(|c| mat.entry(0, c).clone()).collect();
        assert_eq!(&row0[..], u.coefficients());
    }

    #[test]
    fn spectra_of_identity() {
        let c = ctx(105851, 50, 37199);
        let e = GroupRingElement::identity(50, modulus(105851));
        let sp = e.spectral_transform(&c).unwrap();
        for i in 0..50 {
            assert!(sp.lambda()[i].is_one());
            assert!(sp.eta()[i].is_one());
            assert!(sp.gamma()[i].is_zero());
            assert!(sp.delta()[i].is_zero());
            assert!(sp.dets()[i].is_one());
        }
        assert!(e.is_unit(&c).unwrap());
    }

    #[test]
    fn spectra_of_reflection_generator() {
        // u = b: lambda = eta = 0, gamma = delta = 1, dets = n - 1.
        let c = ctx(105851, 50, 37199);
        let b = GroupRingElement::basis(50, modulus(105851), 50);
        let sp = b.spectral_transform(&c).unwrap();
        let n_minus_1 = BigUint::from(105850u32);
        for i in 0..50 {
            assert!(sp.lambda()[i].is_zero());
            assert!(sp.eta()[i].is_zero());
            assert!(sp.gamma()[i].is_one());
            assert!(sp.delta()[i].is_one());
            assert_eq!(sp.dets()[i], n_minus_1);
        }
        assert!(b.is_unit(&c).unwrap());
    }

    #[test]
    fn zero_element_is_not_a_unit() {
        let c = ctx(105851, 50, 37199);
        let z = GroupRingElement::zero(50, modulus(105851));
        assert!(!z.is_unit(&c).unwrap());
        match z.invert(&c) {
            Err(DihedralError::NotAUnitElement { frequency, det, gcd }) => {
                assert_eq!(frequency, 1);
                assert!(det.is_zero());
                assert_eq!(gcd, BigUint::from(105851u32));
            }
            other => panic!("expected NotAUnitElement, got {other:?}"),
        }
    }

    #[test]
    fn invert_identity() {
        let c = ctx(105851, 50, 37199);
        let e = GroupRingElement::identity(50, modulus(105851));
        assert_eq!(e.invert(&c).unwrap(), e);
    }

    #[test]
    fn invert_small_element_both_sides() {
        let c = ctx(91, 3, 9); // 9 has order 3 mod 7 and mod 13
        let u = GroupRingElement::from_u64_coeffs(3, modulus(91), &[5, 2, 6, 0, 1, 8]).unwrap();
        let inv = u.invert(&c).unwrap();
        assert!(u.multiply(&inv).unwrap().is_identity());
        assert!(inv.multiply(&u).unwrap().is_identity());
        assert_eq!(inv.invert(&c).unwrap(), u);
    }

    #[test]
    fn spectral_transform_requires_matching_context() {
        let c = ctx(91, 3, 9);
        let u = GroupRingElement::identity(4, modulus(91));
        assert_eq!(
            u.spectral_transform(&c).unwrap_err(),
            DihedralError::MixedParameters
        );
        let v = GroupRingElement::identity(3, modulus(97));
        assert_eq!(
            v.spectral_transform(&c).unwrap_err(),
            DihedralError::MixedParameters
        );
    }

    #[test]
    fn inverse_spectra_routes_agree() {
        let c = ctx(91, 6, 10); // 10 is the smallest primitive 6th root mod 91
        let u = GroupRingElement::from_u64_coeffs(
            6,
            modulus(91),
            &[1, 8, 6, 0, 9, 1, 3, 9, 0, 9, 9, 6],
        )
        .unwrap();
        let sp = u.spectral_transform(&c).unwrap();
        match (
            sp.inverse_spectra_from_lambda_gamma(),
            sp.inverse_spectra_from_eta_delta(),
        ) {
            (Ok((l1, s1)), Ok((l2, s2))) => {
                assert_eq!(l1, l2);
                assert_eq!(s1, s2);
            }
            (Err(e1), Err(e2)) => assert_eq!(e1, e2),
            (a, b) => panic!("routes disagree on unit status: {a:?} vs {b:?}"),
        }
    }
}
