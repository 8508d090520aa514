//! Exact arithmetic in `F = Z2[x]/<p(x)>` for an irreducible `p(x)` of
//! degree `n`.
//!
//! A polynomial over `Z2` is encoded as a bit mask: bit `j` is the
//! coefficient of `x^j`, so `0b111` is `x^2 + x + 1`. Addition is XOR,
//! multiplication is carry-less (shift-and-XOR) followed by reduction
//! modulo `p(x)`. Inversion is by exhaustive search, which doubles as an
//! independent oracle for the S-box checks in [`crate::mutation`].

use alloc::string::String;
use core::fmt;

/// Errors raised by field construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// Degree must lie in `1..=16`.
    DegreeOutOfRange(u32),
    /// Modulus does not have its degree bit set, or has higher bits set.
    NotMonic { modulus: u32, degree: u32 },
    /// Modulus factors over `Z2`.
    NotIrreducible { modulus: u32 },
    /// Element mask has bits at or above the field degree.
    BitsOutOfRange { bits: u16, degree: u32 },
    /// Operands belong to different field specs.
    MismatchedSpecs,
    /// Zero has no multiplicative inverse.
    NoInverse,
    /// The byte-level affine map is only defined for degree 8.
    DegreeNotEight(u32),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DegreeOutOfRange(n) => write!(f, "field degree {n} outside 1..=16"),
            FieldError::NotMonic { modulus, degree } => {
                write!(f, "modulus {modulus:#x} is not monic of degree {degree}")
            }
            FieldError::NotIrreducible { modulus } => {
                write!(f, "modulus {modulus:#x} is reducible over Z2")
            }
            FieldError::BitsOutOfRange { bits, degree } => {
                write!(f, "element mask {bits:#x} not reduced below degree {degree}")
            }
            FieldError::MismatchedSpecs => write!(f, "operands belong to different fields"),
            FieldError::NoInverse => write!(f, "zero has no multiplicative inverse"),
            FieldError::DegreeNotEight(n) => {
                write!(f, "byte affine map needs degree 8, got {n}")
            }
        }
    }
}

impl core::error::Error for FieldError {}

/// Degree of a `Z2` polynomial, `None` for the zero polynomial.
pub const fn poly_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

/// Carry-less product of two `Z2` polynomials.
pub const fn poly_mul(a: u32, b: u32) -> u64 {
    let mut acc: u64 = 0;
    let mut rest = b;
    let mut shift = 0;
    while rest != 0 {
        if rest & 1 != 0 {
            acc ^= (a as u64) << shift;
        }
        rest >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of `a` modulo `m` over `Z2` (aligned XOR long division).
pub const fn poly_rem(a: u64, m: u32) -> u32 {
    let deg_m = match poly_degree(m) {
        Some(d) => d,
        None => return a as u32,
    };
    let mut r = a;
    while r != 0 {
        let deg_r = 63 - r.leading_zeros();
        if deg_r < deg_m {
            break;
        }
        r ^= (m as u64) << (deg_r - deg_m);
    }
    r as u32
}

/// Irreducibility over `Z2` by exhaustive trial division (degree <= 16).
pub const fn is_irreducible(p: u32) -> bool {
    let deg = match poly_degree(p) {
        Some(d) => d,
        None => return false,
    };
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    let half = deg / 2;
    let mut d: u32 = 2;
    let limit = 1u32 << (half + 1);
    while d < limit {
        if poly_rem(p as u64, d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An irreducible binary field `Z2[x]/<p(x)>` of degree `n <= 16`.
///
/// The spec is a small value type; elements embed a copy so that equality
/// and the mismatched-spec checks need no shared ownership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FieldSpec {
    degree: u32,
    modulus: u32,
}

impl FieldSpec {
    /// Validates degree range, monicity and irreducibility.
    pub fn new(degree: u32, modulus: u32) -> Result<Self, FieldError> {
        if degree == 0 || degree > 16 {
            return Err(FieldError::DegreeOutOfRange(degree));
        }
        if poly_degree(modulus) != Some(degree) {
            return Err(FieldError::NotMonic { modulus, degree });
        }
        if !is_irreducible(modulus) {
            return Err(FieldError::NotIrreducible { modulus });
        }
        Ok(FieldSpec { degree, modulus })
    }

    /// Skips the irreducibility check. Arithmetic in such a "field" is a
    /// quotient ring only; used to exhibit moduli that fail validation.
    pub fn new_unchecked(degree: u32, modulus: u32) -> Self {
        FieldSpec { degree, modulus }
    }

    /// `GF(4) = Z2[x]/<x^2 + x + 1>`.
    pub fn gf4() -> Self {
        FieldSpec { degree: 2, modulus: 0b111 }
    }

    /// `GF(2^8)` with the Rijndael modulus `x^8 + x^4 + x^3 + x + 1`.
    pub fn aes() -> Self {
        FieldSpec { degree: 8, modulus: 0x11B }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, `2^n`.
    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    /// Element with the given coefficient mask (must be reduced).
    pub fn element(&self, bits: u16) -> Result<FieldElement, FieldError> {
        if (bits as u32) >> self.degree != 0 {
            return Err(FieldError::BitsOutOfRange { bits, degree: self.degree });
        }
        Ok(FieldElement { spec: *self, bits })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 1 }
    }

    /// All `2^n` elements in mask order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |b| FieldElement { spec: *self, bits: b as u16 })
    }
}

/// An element of a [`FieldSpec`]; bit `j` of the mask is the coefficient
/// of `x^j`. Equality compares both mask and spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FieldElement {
    spec: FieldSpec,
    bits: u16,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn same_spec(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::MismatchedSpecs)
        }
    }

    /// Characteristic-2 addition: bitwise XOR of masks.
    #[allow(clippy::should_implement_trait)] // fallible: operands must share a spec
    pub fn add(self, rhs: FieldElement) -> Result<FieldElement, FieldError> {
        self.same_spec(&rhs)?;
        Ok(FieldElement { spec: self.spec, bits: self.bits ^ rhs.bits })
    }

    /// Carry-less product reduced modulo `p(x)`.
    #[allow(clippy::should_implement_trait)] // fallible: operands must share a spec
    pub fn mul(self, rhs: FieldElement) -> Result<FieldElement, FieldError> {
        self.same_spec(&rhs)?;
        let prod = poly_mul(self.bits as u32, rhs.bits as u32);
        Ok(FieldElement {
            spec: self.spec,
            bits: poly_rem(prod, self.spec.modulus) as u16,
        })
    }

    /// Multiplicative inverse by exhaustive search over the field.
    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::NoInverse);
        }
        for cand in self.spec.elements() {
            if self.mul(cand)?.bits == 1 {
                return Ok(cand);
            }
        }
        // Every nonzero element of a field has an inverse; reachable only
        // through `new_unchecked` specs with reducible moduli.
        Err(FieldError::NotIrreducible { modulus: self.spec.modulus })
    }

    /// Coefficients written most-significant first, e.g. `x` in GF(4) is "10".
    pub fn bit_string(&self) -> String {
        let n = self.spec.degree;
        let mut s = String::with_capacity(n as usize);
        for j in (0..n).rev() {
            s.push(if self.bits >> j & 1 == 1 { '1' } else { '0' });
        }
        s
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())
    }
}

/// The constant vector `(c_0, ..., c_7) = (1, 1, 0, 0, 0, 1, 1, 0)` of the
/// byte-level affine map, as a mask (bit `j` is `c_j`).
pub const AFFINE_C: u8 = 0x63;

/// Byte-level affine map over a degree-8 field:
/// `b_j = a_j + a_{j+4} + a_{j+5} + a_{j+6} + a_{j+7} + c_j` (indices mod 8),
/// returning `sum b_s x^s + v`.
pub fn affine_tau(a: FieldElement, c: u8, v: FieldElement) -> Result<FieldElement, FieldError> {
    let spec = a.spec();
    if spec.degree() != 8 {
        return Err(FieldError::DegreeNotEight(spec.degree()));
    }
    let bits = a.bits() as u8;
    let mut out: u8 = 0;
    for j in 0..8u32 {
        let mut b = (bits >> j) & 1;
        for off in [4u32, 5, 6, 7] {
            b ^= (bits >> ((j + off) % 8)) & 1;
        }
        b ^= (c >> j) & 1;
        out |= b << j;
    }
    spec.element(out as u16)?.add(v)
}

/// Test-mode variant with the XOR circulant replaced by the identity:
/// `b_j = a_j + c_j`, plus `v`.
pub fn affine_identity(a: FieldElement, c: u8, v: FieldElement) -> Result<FieldElement, FieldError> {
    let spec = a.spec();
    if spec.degree() != 8 {
        return Err(FieldError::DegreeNotEight(spec.degree()));
    }
    spec.element((a.bits() as u8 ^ c) as u16)?.add(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn gf256() -> FieldSpec {
        FieldSpec::aes()
    }

    #[test]
    fn add_is_xor() {
        let f = gf256();
        let a = f.element(0x57).unwrap();
        let b = f.element(0x83).unwrap();
        assert_eq!(a.add(b).unwrap().bits(), 0xD4);
        assert_eq!(a.add(a).unwrap().bits(), 0);
        let g = FieldSpec::gf4();
        let one = g.element(0b01).unwrap();
        let x = g.element(0b10).unwrap();
        assert_eq!(one.add(x).unwrap().bits(), 0b11);
    }

    #[test]
    fn add_rejects_mismatched_specs() {
        let a = gf256().element(1).unwrap();
        let b = FieldSpec::gf4().element(1).unwrap();
        assert_eq!(a.add(b), Err(FieldError::MismatchedSpecs));
    }

    #[test]
    fn mul_in_gf4() {
        // x * x = x + 1 forced by the modulus x^2 + x + 1.
        let g = FieldSpec::gf4();
        let x = g.element(0b10).unwrap();
        assert_eq!(x.mul(x).unwrap().bits(), 0b11);
        let one = g.one();
        for e in g.elements() {
            assert_eq!(e.mul(one).unwrap(), e);
        }
    }

    /// Independent route for 0x57 * 0x83 = 0xC1: repeated doubling
    /// (xtime chain) instead of full-product-then-divide.
    fn xtime_mul(a: u8, b: u8, modulus: u32) -> u8 {
        let mut acc: u32 = 0;
        let mut a: u32 = a as u32;
        let mut b = b;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            a <<= 1;
            if a & 0x100 != 0 {
                a ^= modulus;
            }
            b >>= 1;
        }
        acc as u8
    }

    #[test]
    fn mul_matches_xtime_oracle() {
        let f = gf256();
        let a = f.element(0x57).unwrap();
        let b = f.element(0x83).unwrap();
        assert_eq!(a.mul(b).unwrap().bits(), 0xC1);
        assert_eq!(xtime_mul(0x57, 0x83, f.modulus()), 0xC1);
        // Spot-check a spread of products against the oracle.
        let mut s: u32 = 0x2545_F491;
        for _ in 0..500 {
            s = s.wrapping_mul(0x9E37_79B9).wrapping_add(1);
            let x = (s >> 8) as u8;
            let y = (s >> 20) as u8;
            let got = f
                .element(x as u16)
                .unwrap()
                .mul(f.element(y as u16).unwrap())
                .unwrap()
                .bits() as u8;
            assert_eq!(got, xtime_mul(x, y, f.modulus()));
        }
    }

    #[test]
    fn distributivity_exhaustive_small_degrees() {
        for (n, m) in [(1u32, 0b11u32), (2, 0b111), (3, 0b1011), (4, 0b10011)] {
            let f = FieldSpec::new(n, m).unwrap();
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                for &b in &all {
                    for &c in &all {
                        let lhs = a.mul(b.add(c).unwrap()).unwrap();
                        let rhs = a.mul(b).unwrap().add(a.mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_exhaustive_up_to_degree_8() {
        for (n, m) in [(2u32, 0b111u32), (3, 0b1011), (4, 0b10011), (8, 0x11B)] {
            let f = FieldSpec::new(n, m).unwrap();
            for e in f.elements() {
                if e.is_zero() {
                    assert_eq!(e.inv(), Err(FieldError::NoInverse));
                } else {
                    assert_eq!(e.mul(e.inv().unwrap()).unwrap(), f.one());
                }
            }
        }
    }

    #[test]
    fn affine_tau_on_zero_gives_c() {
        let f = gf256();
        let out = affine_tau(f.zero(), AFFINE_C, f.zero()).unwrap();
        assert_eq!(out.bits(), 0x63);
    }

    #[test]
    fn affine_tau_on_one_by_bit_table() {
        // a = 0x01 has a_0 = 1 only; b_j picks it up at j in {0,1,2,3,4},
        // so the circulant part is 0x1F and the constant flips it to 0x7C.
        let f = gf256();
        let a = f.one();
        let out = affine_tau(a, AFFINE_C, f.zero()).unwrap();
        assert_eq!(out.bits(), 0x1F ^ 0x63);
        assert_eq!(out.bits(), 0x7C);
    }

    #[test]
    fn affine_identity_mode_is_identity_with_zero_c() {
        let f = gf256();
        for e in f.elements() {
            assert_eq!(affine_identity(e, 0, f.zero()).unwrap(), e);
        }
    }

    #[test]
    fn affine_maps_reject_other_degrees() {
        let g = FieldSpec::gf4();
        assert_eq!(
            affine_tau(g.one(), 0, g.zero()),
            Err(FieldError::DegreeNotEight(2))
        );
    }

    #[test]
    fn spec_validation() {
        assert!(FieldSpec::new(8, 0x11B).is_ok());
        // x^8 + x^4 + x^3 + 1 has an even number of terms, so x + 1 divides it.
        assert_eq!(
            FieldSpec::new(8, 0x119),
            Err(FieldError::NotIrreducible { modulus: 0x119 })
        );
        assert!(!is_irreducible(0x119));
        assert_eq!(poly_rem(0x119, 0b11), 0);
        assert_eq!(FieldSpec::new(0, 1), Err(FieldError::DegreeOutOfRange(0)));
        assert_eq!(FieldSpec::new(17, 1 << 17), Err(FieldError::DegreeOutOfRange(17)));
        assert_eq!(
            FieldSpec::new(4, 0b111),
            Err(FieldError::NotMonic { modulus: 0b111, degree: 4 })
        );
        // Degree-16 validation goes through the exhaustive factor search.
        assert!(FieldSpec::new(16, 0x1002D).is_ok()); // x^16 + x^5 + x^3 + x^2 + 1
        assert!(FieldSpec::new(16, 0x10001).is_err()); // x^16 + 1 = (x+1)^16
    }

    #[test]
    fn element_masks_must_be_reduced() {
        let g = FieldSpec::gf4();
        assert!(g.element(0b11).is_ok());
        assert_eq!(
            g.element(0b100),
            Err(FieldError::BitsOutOfRange { bits: 4, degree: 2 })
        );
    }

    #[test]
    fn bit_strings_msb_first() {
        let g = FieldSpec::gf4();
        assert_eq!(g.element(0b10).unwrap().bit_string(), "10");
        assert_eq!(g.element(0b01).unwrap().bit_string(), "01");
        let f = gf256();
        assert_eq!(f.element(0xAF).unwrap().bit_string(), "10101111");
    }
}
