//! Generic machinery for explicitly enumerated finite groups.
//!
//! A group is given as a set of opaque integer keys together with
//! multiplication and inversion oracles. Everything here works by direct
//! enumeration: closures, conjugacy classes, centralizers, central series,
//! derived subgroups, quotients. At the sizes this crate deals with
//! (|G| = 43008, |G6| = 344064) flat arrays indexed by key are enough.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

/// Multiplication and inversion oracles over opaque element keys.
pub trait GroupOps: Send + Sync {
    fn mul(&self, a: u32, b: u32) -> u32;
    fn inv(&self, a: u32) -> u32;
    fn id(&self) -> u32;
}

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("subgroup is not normal: conjugating {elem} by {conj} leaves the subgroup")]
    NotNormal { elem: u32, conj: u32 },
    #[error("element {0} not in group universe")]
    UnknownElement(u32),
}

/// An explicit finite group: a sorted element universe over `GroupOps`,
/// with a fixed generating set used for orbit computations.
pub struct BlackBoxGroup {
    ops: Arc<dyn GroupOps>,
    elems: Vec<u32>,
    index: Vec<i32>, // key -> position in elems, or -1
    gens: Vec<u32>,
}

/// A conjugacy class: the full orbit of its minimal-key representative.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: u32,
    pub members: Vec<u32>,
    pub size: usize,
    pub is_real: bool,
}

impl BlackBoxGroup {
    pub fn new(ops: Arc<dyn GroupOps>, mut elems: Vec<u32>, gens: Vec<u32>) -> BlackBoxGroup {
        elems.sort_unstable();
        elems.dedup();
        let max = *elems.last().expect("empty universe") as usize;
        let mut index = vec![-1i32; max + 1];
        for (i, &e) in elems.iter().enumerate() {
            index[e as usize] = i as i32;
        }
        debug_assert!(index[ops.id() as usize] >= 0);
        BlackBoxGroup { ops, elems, index, gens }
    }

    /// Build the group generated by `gens` under `ops`.
    pub fn generated(ops: Arc<dyn GroupOps>, gens: Vec<u32>) -> BlackBoxGroup {
        let elems = closure(ops.as_ref(), &gens);
        BlackBoxGroup::new(ops, elems, gens)
    }

    pub fn ops(&self) -> &Arc<dyn GroupOps> {
        &self.ops
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn id(&self) -> u32 {
        self.ops.id()
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.ops.mul(a, b)
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.ops.inv(a)
    }

    pub fn contains(&self, k: u32) -> bool {
        (k as usize) < self.index.len() && self.index[k as usize] >= 0
    }

    pub fn index_of(&self, k: u32) -> usize {
        debug_assert!(self.contains(k));
        self.index[k as usize] as usize
    }

    /// View a subset as a group in its own right, sharing the oracles.
    pub fn subgroup(&self, elems: Vec<u32>, gens: Vec<u32>) -> BlackBoxGroup {
        BlackBoxGroup::new(Arc::clone(&self.ops), elems, gens)
    }

    /// g^h = h^-1 g h.
    pub fn conj(&self, g: u32, h: u32) -> u32 {
        self.mul(self.mul(self.inv(h), g), h)
    }

    /// [g, h] = g^-1 h^-1 g h.
    pub fn commutator(&self, g: u32, h: u32) -> u32 {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    /// Conjugacy classes by orbit expansion under the fixed generating set,
    /// ordered by (size, minimal key). Representatives are minimal keys.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ConjClass> = Vec::new();
        for &start in &self.elems {
            if class_of[self.index_of(start)] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![start];
            class_of[self.index_of(start)] = cid;
            let mut head = 0;
            while head < members.len() {
                let g = members[head];
                head += 1;
                for &h in &self.gens {
                    let c = self.conj(g, h);
                    let ci = self.index_of(c);
                    if class_of[ci] == usize::MAX {
                        class_of[ci] = cid;
                        members.push(c);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjClass {
                rep: start,
                size: members.len(),
                members,
                is_real: false,
            });
        }
        // reality: the class of rep^-1 equals the class itself
        for i in 0..classes.len() {
            let inv_rep = self.inv(classes[i].rep);
            classes[i].is_real = class_of[self.index_of(inv_rep)] == i;
        }
        classes.sort_by_key(|c| (c.size, c.rep));
        classes
    }

    pub fn real_classes(&self) -> Vec<ConjClass> {
        self.conjugacy_classes().into_iter().filter(|c| c.is_real).collect()
    }

    /// Elements of the group commuting with g.
    pub fn centralizer(&self, g: u32) -> Vec<u32> {
        self.elems
            .iter()
            .copied()
            .filter(|&h| self.mul(h, g) == self.mul(g, h))
            .collect()
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<u32> {
        self.elems
            .iter()
            .copied()
            .filter(|&z| self.gens.iter().all(|&h| self.mul(z, h) == self.mul(h, z)))
            .collect()
    }

    /// Ascending upper central series Z1 < Z2 < ..., stopping when stable.
    /// Z_{i+1} = {g : [g, h] in Z_i for every generator h}.
    pub fn upper_central_series(&self) -> Vec<Vec<u32>> {
        let mut series: Vec<Vec<u32>> = Vec::new();
        let mut current: Vec<u32> = vec![self.id()];
        loop {
            let in_current = self.bitset(&current);
            let next: Vec<u32> = self
                .elems
                .iter()
                .copied()
                .filter(|&g| {
                    self.gens
                        .iter()
                        .all(|&h| in_current[self.index_of(self.commutator(g, h))])
                })
                .collect();
            if next.len() == current.len() {
                break;
            }
            series.push(next.clone());
            current = next;
        }
        series
    }

    /// Derived subgroup: the normal closure of the commutators of generators.
    pub fn derived_subgroup(&self) -> Vec<u32> {
        let mut seeds = Vec::new();
        for &a in &self.gens {
            for &b in &self.gens {
                seeds.push(self.commutator(a, b));
            }
        }
        normal_closure(self.ops.as_ref(), &seeds, &self.gens)
    }

    /// Check normality of a subgroup (given as a sorted element list); returns
    /// a violating (element, conjugator) pair if any.
    pub fn normality_witness(&self, sub: &[u32]) -> Option<(u32, u32)> {
        let in_sub = self.bitset(sub);
        for &n in sub {
            for &g in &self.gens {
                let c = self.conj(n, g);
                if !self.contains(c) || !in_sub[self.index_of(c)] {
                    return Some((n, g));
                }
            }
        }
        None
    }

    /// Quotient by a verified-normal subgroup. Elements of the quotient are
    /// canonical minimal-key coset representatives; returns the group and the
    /// full element -> representative map.
    pub fn quotient(&self, normal: &[u32]) -> Result<(BlackBoxGroup, Vec<u32>), GroupError> {
        if let Some((elem, conj)) = self.normality_witness(normal) {
            return Err(GroupError::NotNormal { elem, conj });
        }
        let n = self.order();
        let mut rep_of = vec![u32::MAX; n];
        let mut reps = Vec::with_capacity(n / normal.len());
        for &e in &self.elems {
            if rep_of[self.index_of(e)] != u32::MAX {
                continue;
            }
            // elems is ascending, so e is the minimal key of its coset
            reps.push(e);
            for &m in normal {
                let c = self.mul(e, m);
                rep_of[self.index_of(c)] = e;
            }
        }
        let full_map: Vec<u32> = rep_of;
        let ops = Arc::new(QuotientOps {
            parent: Arc::clone(&self.ops),
            index: self.index.clone(),
            rep_of: full_map.clone(),
        });
        let gens: Vec<u32> = {
            let mut g: Vec<u32> = self
                .gens
                .iter()
                .map(|&h| full_map[self.index_of(h)])
                .collect();
            g.sort_unstable();
            g.dedup();
            g
        };
        Ok((BlackBoxGroup::new(ops, reps, gens), full_map))
    }

    pub fn element_order(&self, g: u32) -> usize {
        let id = self.id();
        let mut acc = g;
        let mut k = 1;
        while acc != id {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> usize {
        self.elems
            .iter()
            .fold(1usize, |acc, &g| lcm(acc, self.element_order(g)))
    }

    /// Census of element orders: sorted (order, count) pairs.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &g in &self.elems {
            *counts.entry(self.element_order(g)).or_insert(0) += 1;
        }
        let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Nonidentity elements of order 2.
    pub fn involutions(&self) -> Vec<u32> {
        let id = self.id();
        self.elems
            .iter()
            .copied()
            .filter(|&g| g != id && self.mul(g, g) == id)
            .collect()
    }

    fn bitset(&self, sub: &[u32]) -> Vec<bool> {
        let mut b = vec![false; self.order()];
        for &e in sub {
            b[self.index_of(e)] = true;
        }
        b
    }
}

struct QuotientOps {
    parent: Arc<dyn GroupOps>,
    index: Vec<i32>,
    rep_of: Vec<u32>,
}

impl QuotientOps {
    fn canon(&self, k: u32) -> u32 {
        self.rep_of[self.index[k as usize] as usize]
    }
}

impl GroupOps for QuotientOps {
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.canon(self.parent.mul(a, b))
    }
    fn inv(&self, a: u32) -> u32 {
        self.canon(self.parent.inv(a))
    }
    fn id(&self) -> u32 {
        self.canon(self.parent.id())
    }
}

/// Smallest subset containing the generators and the identity, closed under
/// multiplication and inversion. Returned sorted.
pub fn closure(ops: &dyn GroupOps, gens: &[u32]) -> Vec<u32> {
    let mut seen: HashMap<u32, ()> = HashMap::new();
    let mut work: Vec<u32> = Vec::new();
    let push = |k: u32, seen: &mut HashMap<u32, ()>, work: &mut Vec<u32>| {
        if seen.insert(k, ()).is_none() {
            work.push(k);
        }
    };
    push(ops.id(), &mut seen, &mut work);
    for &g in gens {
        push(g, &mut seen, &mut work);
    }
    let mut head = 0;
    while head < work.len() {
        let x = work[head];
        head += 1;
        let xi = ops.inv(x);
        push(xi, &mut seen, &mut work);
        for &g in gens {
            push(ops.mul(x, g), &mut seen, &mut work);
            push(ops.mul(g, x), &mut seen, &mut work);
        }
    }
    let mut out: Vec<u32> = seen.into_keys().collect();
    out.sort_unstable();
    out
}

/// Smallest subgroup containing `seeds`, closed under conjugation by
/// `conjugators`.
pub fn normal_closure(ops: &dyn GroupOps, seeds: &[u32], conjugators: &[u32]) -> Vec<u32> {
    let mut gens: Vec<u32> = seeds.to_vec();
    gens.sort_unstable();
    gens.dedup();
    loop {
        let sub = closure(ops, &gens);
        let in_sub: std::collections::HashSet<u32> = sub.iter().copied().collect();
        let mut new_elems = Vec::new();
        for &s in &sub {
            for &c in conjugators {
                let conj = ops.mul(ops.mul(ops.inv(c), s), c);
                if !in_sub.contains(&conj) {
                    new_elems.push(conj);
                }
            }
        }
        if new_elems.is_empty() {
            return sub;
        }
        gens = sub;
        gens.extend(new_elems);
    }
}

/// Greedy minimal-ish generating set: scan elements in key order, keeping
/// those that enlarge the generated subgroup. Deterministic.
pub fn small_generating_set(ops: &dyn GroupOps, elems: &[u32]) -> Vec<u32> {
    let target = elems.len();
    let mut gens: Vec<u32> = Vec::new();
    let mut current: std::collections::HashSet<u32> = [ops.id()].into_iter().collect();
    for &e in elems {
        if current.contains(&e) {
            continue;
        }
        gens.push(e);
        current = closure(ops, &gens).into_iter().collect();
        if current.len() == target {
            break;
        }
    }
    gens
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Z_n under addition, keys 0..n.
    struct CyclicOps(u32);
    impl GroupOps for CyclicOps {
        fn mul(&self, a: u32, b: u32) -> u32 {
            (a + b) % self.0
        }
        fn inv(&self, a: u32) -> u32 {
            (self.0 - a) % self.0
        }
        fn id(&self) -> u32 {
            0
        }
    }

    /// The symmetric group S3 as permutations of {0,1,2}, keyed by the
    /// base-3 digits of the image tuple.
    struct S3Ops;
    fn perm_key(p: [u32; 3]) -> u32 {
        p[0] + 3 * p[1] + 9 * p[2]
    }
    fn key_perm(k: u32) -> [u32; 3] {
        [k % 3, (k / 3) % 3, (k / 9) % 3]
    }
    impl GroupOps for S3Ops {
        fn mul(&self, a: u32, b: u32) -> u32 {
            let (pa, pb) = (key_perm(a), key_perm(b));
            perm_key([pb[pa[0] as usize], pb[pa[1] as usize], pb[pa[2] as usize]])
        }
        fn inv(&self, a: u32) -> u32 {
            let p = key_perm(a);
            let mut q = [0u32; 3];
            for i in 0..3 {
                q[p[i] as usize] = i as u32;
            }
            perm_key(q)
        }
        fn id(&self) -> u32 {
            perm_key([0, 1, 2])
        }
    }

    fn s3() -> BlackBoxGroup {
        BlackBoxGroup::generated(
            Arc::new(S3Ops),
            vec![perm_key([1, 0, 2]), perm_key([1, 2, 0])],
        )
    }

    #[test]
    fn closure_trivial_and_s3() {
        let ops = S3Ops;
        assert_eq!(closure(&ops, &[]), vec![ops.id()]);
        let g = s3();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn s3_classes_all_real() {
        let g = s3();
        let classes = g.conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert!(classes.iter().all(|c| c.is_real));
        // orbit-stabilizer on every class
        for c in &classes {
            assert_eq!(c.size * g.centralizer(c.rep).len(), g.order());
        }
    }

    #[test]
    fn cyclic_classes_and_reality() {
        // Z7 is abelian: 7 singleton classes, only the identity real
        let g = BlackBoxGroup::generated(Arc::new(CyclicOps(7)), vec![1]);
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), 7);
        assert_eq!(g.real_classes().len(), 1);
        // elementary abelian 2-group: all classes real
        let e = BlackBoxGroup::generated(Arc::new(CyclicOps(2)), vec![1]);
        assert!(e.conjugacy_classes().iter().all(|c| c.is_real));
    }

    #[test]
    fn center_and_series() {
        let g = s3();
        assert_eq!(g.center(), vec![g.id()]);
        // abelian group: series terminates immediately at the whole group
        let z6 = BlackBoxGroup::generated(Arc::new(CyclicOps(6)), vec![1]);
        let series = z6.upper_central_series();
        assert_eq!(series.len(), 1);
        assert_eq!(series[0].len(), 6);
    }

    #[test]
    fn derived_subgroups() {
        let z6 = BlackBoxGroup::generated(Arc::new(CyclicOps(6)), vec![1]);
        assert_eq!(z6.derived_subgroup(), vec![0]);
        let g = s3();
        let d = g.derived_subgroup();
        assert_eq!(d.len(), 3); // A3
    }

    #[test]
    fn quotient_s3_by_a3() {
        let g = s3();
        let a3 = g.derived_subgroup();
        let (q, map) = g.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        // quotient map is a homomorphism on all pairs
        for &a in g.elems() {
            for &b in g.elems() {
                let lhs = map[g.index_of(g.mul(a, b))];
                let rhs = q.mul(map[g.index_of(a)], map[g.index_of(b)]);
                assert_eq!(lhs, rhs);
            }
        }
        // whole group quotient is trivial
        let whole: Vec<u32> = g.elems().to_vec();
        let (t, _) = g.quotient(&whole).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let g = s3();
        let h = closure(g.ops().as_ref(), &[perm_key([1, 0, 2])]);
        assert_eq!(h.len(), 2);
        match g.quotient(&h) {
            Err(GroupError::NotNormal { elem, conj }) => {
                let c = g.conj(elem, conj);
                assert!(!h.contains(&c));
            }
            Err(other) => panic!("unexpected error {other:?}"),
            Ok(_) => panic!("non-normal subgroup accepted"),
        }
    }

    #[test]
    fn orders_exponent_involutions() {
        let g = s3();
        assert_eq!(g.element_order(g.id()), 1);
        assert_eq!(g.exponent(), 6);
        assert_eq!(g.involutions().len(), 3);
        let z7 = BlackBoxGroup::generated(Arc::new(CyclicOps(7)), vec![1]);
        assert!(z7.involutions().is_empty());
        assert_eq!(z7.order_census(), vec![(1, 1), (7, 6)]);
    }

    #[test]
    fn small_generating_set_regenerates() {
        let g = s3();
        let gens = small_generating_set(g.ops().as_ref(), g.elems());
        assert!(gens.len() <= 2);
        assert_eq!(closure(g.ops().as_ref(), &gens).len(), 6);
    }
}
