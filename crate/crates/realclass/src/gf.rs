//! Arithmetic in the field `F` of order 8.
//!
//! Elements are 3-bit values `b2*t^2 + b1*t + b0` over GF(2), reduced by the
//! fixed irreducible modulus `t^3 + t + 1`. Addition is XOR; multiplication
//! goes through log/antilog tables built once at startup. The module also
//! provides the trace map `Tr(a) = a + a^2 + a^4` onto GF(2) and the
//! auxiliary additive map `f(a) = a*b^4 + a^4*b`.

use std::fmt;

/// The fixed degree-3 modulus t^3 + t + 1, as the bit pattern 0b1011.
pub const MODULUS: u16 = 0b1011;

/// Number of field elements.
pub const FIELD_SIZE: usize = 8;

/// An element of GF(8), stored as 3 bits.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u8);

pub const ZERO: FieldElement = FieldElement(0);
pub const ONE: FieldElement = FieldElement(1);

/// The generator t of the multiplicative group, bit value 2.
pub const GEN: FieldElement = FieldElement(2);

struct Tables {
    log: [u8; FIELD_SIZE],
    antilog: [u8; 7],
}

const fn build_tables() -> Tables {
    let mut log = [0u8; FIELD_SIZE];
    let mut antilog = [0u8; 7];
    let mut acc: u16 = 1;
    let mut i = 0;
    while i < 7 {
        antilog[i] = acc as u8;
        log[acc as usize] = i as u8;
        acc <<= 1;
        if acc & 0b1000 != 0 {
            acc ^= MODULUS;
        }
        i += 1;
    }
    Tables { log, antilog }
}

const TABLES: Tables = build_tables();

impl FieldElement {
    pub fn new(bits: u8) -> FieldElement {
        assert!(bits < 8, "field element out of range: {bits}");
        FieldElement(bits)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ other.0)
    }

    pub fn mul(self, other: FieldElement) -> FieldElement {
        if self.0 == 0 || other.0 == 0 {
            return ZERO;
        }
        let l = TABLES.log[self.0 as usize] as usize + TABLES.log[other.0 as usize] as usize;
        FieldElement(TABLES.antilog[l % 7])
    }

    pub fn pow(self, k: u32) -> FieldElement {
        if self.0 == 0 {
            return if k == 0 { ONE } else { ZERO };
        }
        let l = TABLES.log[self.0 as usize] as u64 * k as u64;
        FieldElement(TABLES.antilog[(l % 7) as usize])
    }

    pub fn inverse(self) -> FieldElement {
        assert!(self.0 != 0, "zero has no inverse");
        let l = TABLES.log[self.0 as usize] as usize;
        FieldElement(TABLES.antilog[(7 - l) % 7])
    }

    /// The trace map onto GF(2): a + a^2 + a^4.
    pub fn trace(self) -> u8 {
        let t = self.add(self.pow(2)).add(self.pow(4));
        debug_assert!(t.0 <= 1);
        t.0
    }

    /// Discrete log with respect to the generator t; element must be nonzero.
    pub fn log(self) -> u8 {
        assert!(self.0 != 0, "log of zero");
        TABLES.log[self.0 as usize]
    }

    /// t^k for 0 <= k < 7.
    pub fn from_log(k: u8) -> FieldElement {
        FieldElement(TABLES.antilog[(k % 7) as usize])
    }
}

/// All 8 field elements in value order.
pub fn all_elements() -> impl Iterator<Item = FieldElement> {
    (0u8..8).map(FieldElement)
}

/// The kernel of the trace map, {a + a^2 : a in F}; has exactly 4 elements.
pub fn trace_kernel() -> Vec<FieldElement> {
    let mut out: Vec<FieldElement> = all_elements().filter(|a| a.trace() == 0).collect();
    out.sort();
    out
}

/// The additive map f(a) = a*b^4 + a^4*b for fixed b; kernel {0, b} when b != 0.
pub fn f_map(a: FieldElement, b: FieldElement) -> FieldElement {
    a.mul(b.pow(4)).add(a.pow(4).mul(b))
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_identity() {
        for b in all_elements() {
            assert_eq!(ZERO.mul(b), ZERO);
            assert_eq!(ONE.mul(b), b);
        }
    }

    #[test]
    fn t_times_t_squared() {
        // t * t^2 = t^3 = t + 1 under t^3 + t + 1
        assert_eq!(FieldElement(2).mul(FieldElement(4)), FieldElement(3));
    }

    #[test]
    fn pow_examples() {
        for a in all_elements().filter(|a| !a.is_zero()) {
            assert_eq!(a.pow(0), ONE);
            assert_eq!(a.pow(8), a);
        }
        // t^4 = t^2 + t
        assert_eq!(FieldElement(2).pow(4), FieldElement(6));
    }

    #[test]
    fn mult_group_cyclic_of_order_7() {
        let mut seen = std::collections::HashSet::new();
        let mut acc = ONE;
        for _ in 0..7 {
            seen.insert(acc);
            acc = acc.mul(GEN);
        }
        assert_eq!(acc, ONE);
        assert_eq!(seen.len(), 7);
    }

    #[test]
    fn trace_values() {
        assert_eq!(ZERO.trace(), 0);
        assert_eq!(ONE.trace(), 1);
        // t + t^2 + (t^2 + t) = 0
        assert_eq!(FieldElement(2).trace(), 0);
    }

    #[test]
    fn trace_additive() {
        for a in all_elements() {
            for b in all_elements() {
                assert_eq!(a.add(b).trace(), a.trace() ^ b.trace());
            }
        }
    }

    #[test]
    fn trace_kernel_structure() {
        let ker = trace_kernel();
        assert_eq!(ker.len(), 4);
        assert!(!ker.contains(&ONE));
        // ker Tr = {a + a^2 : a in F}
        let mut image: Vec<FieldElement> = all_elements().map(|a| a.add(a.pow(2))).collect();
        image.sort();
        image.dedup();
        assert_eq!(image, ker);
        // under t^3 + t + 1 the kernel is {0, t, t^2, t^2+t}
        assert_eq!(
            ker,
            vec![FieldElement(0), FieldElement(2), FieldElement(4), FieldElement(6)]
        );
    }

    #[test]
    fn f_map_kernel_and_additivity() {
        for b in all_elements().filter(|b| !b.is_zero()) {
            assert_eq!(f_map(ZERO, b), ZERO);
            assert_eq!(f_map(b, b), ZERO);
            let kernel: Vec<_> = all_elements().filter(|&a| f_map(a, b).is_zero()).collect();
            assert_eq!(kernel.len(), 2);
            assert!(kernel.contains(&ZERO) && kernel.contains(&b));
            for a1 in all_elements() {
                for a2 in all_elements() {
                    assert_eq!(f_map(a1.add(a2), b), f_map(a1, b).add(f_map(a2, b)));
                }
            }
        }
    }

    #[test]
    fn full_table_associative_distributive() {
        for a in all_elements() {
            for b in all_elements() {
                assert_eq!(a.mul(b), b.mul(a));
                for c in all_elements() {
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                }
            }
        }
    }

    #[test]
    fn log_antilog_roundtrip() {
        for a in all_elements().filter(|a| !a.is_zero()) {
            assert_eq!(FieldElement::from_log(a.log()), a);
            assert_eq!(a.mul(a.inverse()), ONE);
        }
    }
}
