//! The truncated skew polynomial ring `R = F{X}/(X^n)` with twist
//! `X a = a^2 X`, its radical powers, and the unit group `Q = 1 + J`.
//!
//! A `SkewUnit` is a unit `1 + a_1 x + ... + a_{n-1} x^{n-1}`; the truncation
//! degree `n` is 5 for the main construction and 6 for the variant. Units
//! pack into a compact integer key, 3 bits per coefficient, little-endian by
//! degree, so the whole of `Q` indexes a flat table (4096 entries at n = 5,
//! 32768 at n = 6).

use std::fmt;

use crate::gf::{self, FieldElement};

/// A unit 1 + a_1 x + ... + a_{n-1} x^{n-1} of F{X}/(X^n).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewUnit {
    n: usize,
    coeffs: Vec<FieldElement>, // length n-1, coeffs[i] is the x^{i+1} coefficient
}

impl SkewUnit {
    pub fn identity(n: usize) -> SkewUnit {
        assert!((2..=6).contains(&n));
        SkewUnit {
            n,
            coeffs: vec![gf::ZERO; n - 1],
        }
    }

    pub fn new(n: usize, coeffs: Vec<FieldElement>) -> SkewUnit {
        assert_eq!(coeffs.len(), n - 1, "coefficient vector must have length n-1");
        SkewUnit { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The x^i coefficient for 1 <= i <= n-1.
    pub fn coeff(&self, i: usize) -> FieldElement {
        assert!((1..self.n).contains(&i));
        self.coeffs[i - 1]
    }

    pub fn from_key(n: usize, key: u32) -> SkewUnit {
        let coeffs = (0..n - 1)
            .map(|i| FieldElement(((key >> (3 * i)) & 7) as u8))
            .collect();
        SkewUnit { n, coeffs }
    }

    /// Compact key: 3 bits per coefficient, little-endian by degree.
    pub fn key(&self) -> u32 {
        self.coeffs
            .iter()
            .enumerate()
            .fold(0, |acc, (i, c)| acc | ((c.0 as u32) << (3 * i)))
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Least i with a_i != 0, or n if all coefficients vanish.
    /// `u` lies in Q^i exactly when `level(u) >= i`.
    pub fn level(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|p| p + 1)
            .unwrap_or(self.n)
    }

    /// Product with the twist rule x^i * b = b^(2^i) * x^i; degree >= n drops.
    pub fn mul(&self, other: &SkewUnit) -> SkewUnit {
        assert_eq!(self.n, other.n, "mixed truncation degrees");
        let n = self.n;
        let mut out = self.coeffs.clone();
        // add 1 * other and self_j x^j * other_i x^i cross terms
        for (i, &b) in other.coeffs.iter().enumerate() {
            let di = i + 1;
            out[i] = out[i].add(b);
            for (j, &a) in self.coeffs.iter().enumerate() {
                let dj = j + 1;
                if di + dj >= n || a.is_zero() || b.is_zero() {
                    continue;
                }
                let twisted = b.pow(1 << dj); // x^dj b = b^(2^dj) x^dj
                out[di + dj - 1] = out[di + dj - 1].add(a.mul(twisted));
            }
        }
        SkewUnit { n, coeffs: out }
    }

    /// Inverse via the geometric series 1 + j + j^2 + ... of the nilpotent part.
    pub fn inverse(&self) -> SkewUnit {
        let n = self.n;
        let mut acc = self.coeffs.clone(); // j^k, starting at k = 1
        let mut sum = vec![gf::ZERO; n - 1];
        for _ in 1..n {
            if acc.iter().all(|c| c.is_zero()) {
                break;
            }
            for i in 0..n - 1 {
                sum[i] = sum[i].add(acc[i]);
            }
            acc = radical_mul(n, &acc, &self.coeffs);
        }
        SkewUnit { n, coeffs: sum }
    }

    pub fn square(&self) -> SkewUnit {
        self.mul(self)
    }

    /// The diagonal C-action: a_i -> a_i * c^((2^i - 1) mod 7). At n = 5 this
    /// is the exponent pattern (c, c^3, 1, c); the same rule extends to n = 6.
    pub fn c_conjugate(&self, c: FieldElement) -> SkewUnit {
        assert!(!c.is_zero(), "C-action requires nonzero c");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let e = ((1u32 << (i + 1)) - 1) % 7;
                a.mul(c.pow(e))
            })
            .collect();
        SkewUnit { n: self.n, coeffs }
    }

    /// Coordinate-wise Galois action a_i -> a_i^(2^s), s in {0,1,2}.
    pub fn galois_act(&self, s: u32) -> SkewUnit {
        let s = s % 3;
        let coeffs = self.coeffs.iter().map(|a| a.pow(1 << s)).collect();
        SkewUnit { n: self.n, coeffs }
    }
}

/// Multiply two radical elements (zero constant term), coefficients indexed
/// by degree-1 as in `SkewUnit`.
fn radical_mul(n: usize, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![gf::ZERO; n - 1];
    for (j, &aj) in a.iter().enumerate() {
        let dj = j + 1;
        if aj.is_zero() {
            continue;
        }
        for (i, &bi) in b.iter().enumerate() {
            let di = i + 1;
            if dj + di >= n || bi.is_zero() {
                continue;
            }
            out[dj + di - 1] = out[dj + di - 1].add(aj.mul(bi.pow(1 << dj)));
        }
    }
    out
}

/// All 8^(n-1) units of Q in key order.
pub fn all_units(n: usize) -> impl Iterator<Item = SkewUnit> {
    let count = 1u32 << (3 * (n - 1));
    (0..count).map(move |k| SkewUnit::from_key(n, k))
}

/// The level subgroup Q^i = 1 + J^i, as all units of level >= i.
pub fn level_subgroup(i: usize, n: usize) -> Vec<SkewUnit> {
    assert!((1..=n).contains(&i), "level out of range");
    all_units(n).filter(|u| u.level() >= i).collect()
}

/// Closed form for a^2 at n = 5:
/// 1 + a1^3 x^2 + (a1 a2^2 + a1^4 a2) x^3 + (a1 a3^2 + a2^5 + a1 a3) x^4.
pub fn square_closed_form(u: &SkewUnit) -> SkewUnit {
    assert_eq!(u.n, 5);
    let (a1, a2, a3) = (u.coeff(1), u.coeff(2), u.coeff(3));
    SkewUnit::new(
        5,
        vec![
            gf::ZERO,
            a1.pow(3),
            a1.mul(a2.pow(2)).add(a1.pow(4).mul(a2)),
            a1.mul(a3.pow(2)).add(a2.pow(5)).add(a1.mul(a3)),
        ],
    )
}

/// Closed form for a*b at n = 5 with b = 1 + b2 x^2 + b3 x^3 + b4 x^4.
pub fn ab_closed_form(a: &SkewUnit, b: &SkewUnit) -> SkewUnit {
    assert_eq!(a.n, 5);
    assert!(b.n == 5 && b.coeff(1).is_zero());
    let (a1, a2, a3, a4) = (a.coeff(1), a.coeff(2), a.coeff(3), a.coeff(4));
    let (b2, b3, b4) = (b.coeff(2), b.coeff(3), b.coeff(4));
    SkewUnit::new(
        5,
        vec![
            a1,
            a2.add(b2),
            a3.add(b3).add(a1.mul(b2.pow(2))),
            a4.add(b4).add(a1.mul(b3.pow(2))).add(a2.mul(b2.pow(4))),
        ],
    )
}

/// Closed form for b*a at n = 5 with b = 1 + b2 x^2 + b3 x^3 + b4 x^4.
pub fn ba_closed_form(a: &SkewUnit, b: &SkewUnit) -> SkewUnit {
    assert_eq!(a.n, 5);
    assert!(b.n == 5 && b.coeff(1).is_zero());
    let (a1, a2, a3, a4) = (a.coeff(1), a.coeff(2), a.coeff(3), a.coeff(4));
    let (b2, b3, b4) = (b.coeff(2), b.coeff(3), b.coeff(4));
    SkewUnit::new(
        5,
        vec![
            a1,
            a2.add(b2),
            a3.add(b3).add(b2.mul(a1.pow(4))),
            a4.add(b4).add(b3.mul(a1)).add(b2.mul(a2.pow(4))),
        ],
    )
}

impl fmt::Debug for SkewUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " + {}*x^{}", c.0, i + 1)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn unit5(coeffs: [u8; 4]) -> SkewUnit {
        SkewUnit::new(5, coeffs.iter().map(|&c| FieldElement(c)).collect())
    }

    #[test]
    fn identity_and_simple_products() {
        let one = SkewUnit::identity(5);
        let u = unit5([3, 1, 4, 5]);
        assert_eq!(one.mul(&u), u);
        assert_eq!(u.mul(&one), u);
        // (1+x)(1+x) = 1 + x^2
        let e = unit5([1, 0, 0, 0]);
        assert_eq!(e.mul(&e), unit5([0, 1, 0, 0]));
        // (1+x)(1+x^2) = (1+x^2)(1+x) = 1 + x + x^2 + x^3
        let a = unit5([1, 0, 0, 0]);
        let b = unit5([0, 1, 0, 0]);
        assert_eq!(a.mul(&b), unit5([1, 1, 1, 0]));
        assert_eq!(b.mul(&a), unit5([1, 1, 1, 0]));
    }

    #[test]
    fn inverse_all_units() {
        let one = SkewUnit::identity(5);
        for u in all_units(5) {
            let inv = u.inverse();
            assert_eq!(u.mul(&inv), one);
            assert_eq!(inv.mul(&u), one);
            assert_eq!(inv.inverse(), u);
        }
        // b = 1 + x^2 has inverse 1 + x^2 + x^4
        assert_eq!(unit5([0, 1, 0, 0]).inverse(), unit5([0, 1, 0, 1]));
    }

    #[test]
    fn squaring_closed_form_all_units() {
        for u in all_units(5) {
            let sq = u.square();
            assert_eq!(square_closed_form(&u), sq);
            assert!(sq.level() >= (2 * u.level()).min(5));
            // a^2 = 1 iff a1 = a2 = 0
            let is_inv = sq.is_identity();
            assert_eq!(is_inv, u.coeff(1).is_zero() && u.coeff(2).is_zero());
        }
        assert_eq!(unit5([1, 0, 0, 0]).square(), unit5([0, 1, 0, 0]));
    }

    #[test]
    fn ab_ba_closed_forms() {
        let bs: Vec<SkewUnit> = all_units(5).filter(|b| b.coeff(1).is_zero()).collect();
        assert_eq!(bs.len(), 512);
        for a in all_units(5) {
            for b in &bs {
                assert_eq!(ab_closed_form(&a, b), a.mul(b));
                assert_eq!(ba_closed_form(&a, b), b.mul(&a));
            }
        }
    }

    #[test]
    fn associativity_sampled() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100_000 {
            let a = SkewUnit::from_key(5, rng.gen_range(0..4096));
            let b = SkewUnit::from_key(5, rng.gen_range(0..4096));
            let c = SkewUnit::from_key(5, rng.gen_range(0..4096));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }

    #[test]
    fn level_subgroups() {
        assert_eq!(level_subgroup(1, 5).len(), 4096);
        assert_eq!(level_subgroup(5, 5).len(), 1);
        let q3 = level_subgroup(3, 5);
        assert_eq!(q3.len(), 64);
        for u in &q3 {
            if !u.is_identity() {
                assert!(u.square().is_identity());
            }
        }
        // closure under mul and inverse
        let keys: std::collections::HashSet<u32> = q3.iter().map(|u| u.key()).collect();
        for u in &q3 {
            assert!(keys.contains(&u.inverse().key()));
            for v in &q3 {
                assert!(keys.contains(&u.mul(v).key()));
            }
        }
    }

    #[test]
    fn c_action_matches_paper_pattern() {
        // n=5 pattern: (a1 c, a2 c^3, a3, a4 c)
        for u in all_units(5).take(256) {
            for c in gf::all_elements().filter(|c| !c.is_zero()) {
                let v = u.c_conjugate(c);
                assert_eq!(v.coeff(1), u.coeff(1).mul(c));
                assert_eq!(v.coeff(2), u.coeff(2).mul(c.pow(3)));
                assert_eq!(v.coeff(3), u.coeff(3));
                assert_eq!(v.coeff(4), u.coeff(4).mul(c));
            }
        }
        let u = unit5([1, 0, 0, 0]);
        assert_eq!(u.c_conjugate(gf::ONE), u);
        let orbit: std::collections::HashSet<u32> = gf::all_elements()
            .filter(|c| !c.is_zero())
            .map(|c| u.c_conjugate(c).key())
            .collect();
        assert_eq!(orbit.len(), 7);
    }

    #[test]
    fn c_action_is_automorphism() {
        for c in gf::all_elements().filter(|c| !c.is_zero()) {
            for ku in (0..4096).step_by(23) {
                for kv in (0..4096).step_by(31) {
                    let u = SkewUnit::from_key(5, ku);
                    let v = SkewUnit::from_key(5, kv);
                    assert_eq!(u.mul(&v).c_conjugate(c), u.c_conjugate(c).mul(&v.c_conjugate(c)));
                }
            }
        }
    }

    #[test]
    fn c_action_automorphism_n6() {
        for c in gf::all_elements().filter(|c| !c.is_zero()) {
            for ku in (0..32768).step_by(199) {
                for kv in (0..32768).step_by(211) {
                    let u = SkewUnit::from_key(6, ku);
                    let v = SkewUnit::from_key(6, kv);
                    assert_eq!(u.mul(&v).c_conjugate(c), u.c_conjugate(c).mul(&v.c_conjugate(c)));
                }
            }
        }
    }

    #[test]
    fn galois_action() {
        for u in all_units(5).take(512) {
            assert_eq!(u.galois_act(0), u);
            assert_eq!(u.galois_act(1).galois_act(1).galois_act(1), u);
        }
        // automorphism over all pairs at n=5
        for ku in (0..4096).step_by(17) {
            for kv in (0..4096).step_by(19) {
                let u = SkewUnit::from_key(5, ku);
                let v = SkewUnit::from_key(5, kv);
                assert_eq!(u.mul(&v).galois_act(1), u.galois_act(1).mul(&v.galois_act(1)));
            }
        }
    }

    #[test]
    fn key_roundtrip() {
        for k in 0..4096 {
            assert_eq!(SkewUnit::from_key(5, k).key(), k);
        }
    }
}
