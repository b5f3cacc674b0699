//! Assembly of the specific groups under study: the subgroup chain
//! X, Y, P inside the unit group Q of F{X}/(X^n), the semidirect product
//! G = P : (C x Gal) of order 43008, and the X^6 variant of order 344064.
//!
//! Subgroups are built by closure, never by trusting a coefficient
//! description; the coefficient descriptions the construction predicts are
//! then verified against the closures and reported as named checks.

use std::io::{Read, Write};
use std::sync::Arc;

use thiserror::Error;

use crate::chars::{dixon_table, ClassData};
use crate::engine::{self, BlackBoxGroup, GroupOps};
use crate::gf::{self, FieldElement};
use crate::report::Check;
use crate::skew::{self, SkewUnit};

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("subgroup not invariant under the acting group: element {elem:#x} maps outside under {action}")]
    NotInvariant { elem: u32, action: &'static str },
    #[error("cache io: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache format: {0}")]
    CacheFormat(String),
}

// ---------------------------------------------------------------------------
// unit-group oracles over compact keys

/// Group oracle for Q = 1 + J over compact unit keys.
pub struct UnitOps {
    pub n: usize,
}

impl GroupOps for UnitOps {
    fn mul(&self, a: u32, b: u32) -> u32 {
        SkewUnit::from_key(self.n, a)
            .mul(&SkewUnit::from_key(self.n, b))
            .key()
    }
    fn inv(&self, a: u32) -> u32 {
        SkewUnit::from_key(self.n, a).inverse().key()
    }
    fn id(&self) -> u32 {
        0
    }
}

fn key_cconj(n: usize, k: u32, c: FieldElement) -> u32 {
    SkewUnit::from_key(n, k).c_conjugate(c).key()
}

fn key_galois(n: usize, k: u32, s: u32) -> u32 {
    SkewUnit::from_key(n, k).galois_act(s).key()
}

// ---------------------------------------------------------------------------
// the subgroup chain

/// The subgroups of Q the construction needs, all as sorted key lists.
pub struct SubgroupChain {
    pub n: usize,
    pub unit_ops: Arc<UnitOps>,
    /// q_levels[i] = Q^i for 1 <= i <= n (index 0 unused, equals Q).
    pub q_levels: Vec<Vec<u32>>,
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub p: Vec<u32>,
    /// p_levels[i] = P intersect Q^i.
    pub p_levels: Vec<Vec<u32>>,
    /// membership bitset over unit keys
    pub p_bits: Vec<bool>,
    pub p_gens: Vec<u32>,
}

impl SubgroupChain {
    pub fn q(&self) -> &[u32] {
        &self.q_levels[1]
    }

    pub fn q_group(&self) -> BlackBoxGroup {
        let ops: Arc<dyn GroupOps> = Arc::clone(&self.unit_ops) as Arc<dyn GroupOps>;
        let gens = natural_q_gens(self.n);
        BlackBoxGroup::new(ops, self.q().to_vec(), gens)
    }

    pub fn p_group(&self) -> BlackBoxGroup {
        let ops: Arc<dyn GroupOps> = Arc::clone(&self.unit_ops) as Arc<dyn GroupOps>;
        BlackBoxGroup::new(ops, self.p.clone(), self.p_gens.clone())
    }

    pub fn subgroup_group(&self, elems: &[u32]) -> BlackBoxGroup {
        let ops: Arc<dyn GroupOps> = Arc::clone(&self.unit_ops) as Arc<dyn GroupOps>;
        let gens = engine::small_generating_set(self.unit_ops.as_ref(), elems);
        BlackBoxGroup::new(ops, elems.to_vec(), gens)
    }
}

/// 1 + alpha x^i for alpha in a GF(2)-basis of F, all degrees: generates Q.
fn natural_q_gens(n: usize) -> Vec<u32> {
    let mut gens = Vec::new();
    for i in 1..n {
        for alpha in [1u32, 2, 4] {
            gens.push(alpha << (3 * (i - 1)));
        }
    }
    gens
}

fn level_gens(n: usize, level: usize) -> Vec<u32> {
    let mut gens = Vec::new();
    for i in level..n {
        for alpha in [1u32, 2, 4] {
            gens.push(alpha << (3 * (i - 1)));
        }
    }
    gens
}

fn nonzero_field() -> impl Iterator<Item = FieldElement> {
    gf::all_elements().filter(|c| !c.is_zero())
}

/// Build Q^i, X = [Q^3, Gal]Q^4, Y = [Q^2, C]X, P = [Q, C]Y and the P^i.
pub fn build_chain(n: usize) -> Result<SubgroupChain, BuildError> {
    assert!(n == 5 || n == 6, "only X^5 and X^6 truncations are supported");
    let unit_ops = Arc::new(UnitOps { n });
    let ops: &dyn GroupOps = unit_ops.as_ref();

    let mut q_levels: Vec<Vec<u32>> = Vec::with_capacity(n + 1);
    q_levels.push(Vec::new());
    for i in 1..=n {
        q_levels.push(skew::level_subgroup(i, n).iter().map(|u| u.key()).collect());
    }

    // X: commutators of the Galois action on Q^3, together with Q^4
    let mut x_seeds: Vec<u32> = Vec::new();
    for &u in &q_levels[3] {
        for s in 1..3u32 {
            x_seeds.push(ops.mul(ops.inv(u), key_galois(n, u, s)));
        }
    }
    x_seeds.extend_from_slice(&q_levels[4]);
    let x = engine::closure(ops, &x_seeds);

    // Y: commutators of the C-action on Q^2, together with X
    let mut y_seeds: Vec<u32> = Vec::new();
    for &u in &q_levels[2] {
        for c in nonzero_field() {
            y_seeds.push(ops.mul(ops.inv(u), key_cconj(n, u, c)));
        }
    }
    y_seeds.extend_from_slice(&x);
    let y = engine::closure(ops, &y_seeds);

    // P: commutators of the C-action on all of Q, together with Y
    let mut p_seeds: Vec<u32> = Vec::new();
    for &u in &q_levels[1] {
        for c in nonzero_field() {
            p_seeds.push(ops.mul(ops.inv(u), key_cconj(n, u, c)));
        }
    }
    p_seeds.extend_from_slice(&y);
    let p = engine::closure(ops, &p_seeds);

    let mut p_bits = vec![false; 1 << (3 * (n - 1))];
    for &u in &p {
        p_bits[u as usize] = true;
    }

    // P must be invariant under both actions, or G cannot be formed
    for &u in &p {
        for c in nonzero_field() {
            if !p_bits[key_cconj(n, u, c) as usize] {
                return Err(BuildError::NotInvariant { elem: u, action: "field-multiplier" });
            }
        }
        if !p_bits[key_galois(n, u, 1) as usize] {
            return Err(BuildError::NotInvariant { elem: u, action: "frobenius" });
        }
    }

    let p_levels: Vec<Vec<u32>> = (0..=n)
        .map(|i| {
            if i == 0 {
                Vec::new()
            } else {
                p.iter()
                    .copied()
                    .filter(|&u| SkewUnit::from_key(n, u).level() >= i)
                    .collect()
            }
        })
        .collect();

    let p_gens = engine::small_generating_set(ops, &p);

    Ok(SubgroupChain { n, unit_ops, q_levels, x, y, p, p_levels, p_bits, p_gens })
}

// ---------------------------------------------------------------------------
// the semidirect product

const POW2_MOD7: [u32; 3] = [1, 2, 4];

/// An element of G: a unit of P together with the exponents of the fixed
/// field-multiplier generator and of the Frobenius generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub unit: SkewUnit,
    pub c: u32,
    pub s: u32,
}

impl GroupElement {
    pub fn key(&self, n: usize) -> u32 {
        let shift = 3 * (n - 1) as u32;
        self.unit.key() | (self.c << shift) | (self.s << (shift + 3))
    }

    pub fn from_key(n: usize, k: u32) -> GroupElement {
        let shift = 3 * (n - 1) as u32;
        GroupElement {
            unit: SkewUnit::from_key(n, k & ((1 << shift) - 1)),
            c: (k >> shift) & 7,
            s: k >> (shift + 3),
        }
    }
}

/// Oracle for G = P : (C x Gal) over packed keys.
pub struct SemidirectOps {
    n: usize,
    shift: u32,
}

impl SemidirectOps {
    fn unpack(&self, k: u32) -> (u32, u32, u32) {
        (k & ((1 << self.shift) - 1), (k >> self.shift) & 7, k >> (self.shift + 3))
    }

    fn pack(&self, u: u32, c: u32, s: u32) -> u32 {
        u | (c << self.shift) | (s << (self.shift + 3))
    }

    /// Apply the acting pair (c, s) to a unit: Frobenius first, then the
    /// diagonal multiplier. This makes the assignment a homomorphism from
    /// the acting group with relation "multiplier ^ frobenius = square".
    fn act(&self, c: u32, s: u32, u: u32) -> u32 {
        let mut v = key_galois(self.n, u, s);
        if c != 0 {
            v = key_cconj(self.n, v, FieldElement::from_log(c as u8));
        }
        v
    }
}

impl GroupOps for SemidirectOps {
    fn mul(&self, a: u32, b: u32) -> u32 {
        let (u1, c1, s1) = self.unpack(a);
        let (u2, c2, s2) = self.unpack(b);
        let u = SkewUnit::from_key(self.n, u1)
            .mul(&SkewUnit::from_key(self.n, self.act(c1, s1, u2)))
            .key();
        self.pack(u, (c1 + c2 * POW2_MOD7[s1 as usize]) % 7, (s1 + s2) % 3)
    }

    fn inv(&self, a: u32) -> u32 {
        let (u, c, s) = self.unpack(a);
        let si = (3 - s) % 3;
        let ci = ((7 - c) % 7 * POW2_MOD7[si as usize]) % 7;
        let ui = self.act(ci, si, SkewUnit::from_key(self.n, u).inverse().key());
        self.pack(ui, ci, si)
    }

    fn id(&self) -> u32 {
        0
    }
}

/// The full construction: the chain and the group G on top of it.
pub struct Construction {
    pub chain: SubgroupChain,
    pub group: BlackBoxGroup,
}

/// Build G as the semidirect product of the order-21 acting group with P.
pub fn build_g(chain: &SubgroupChain) -> BlackBoxGroup {
    let n = chain.n;
    let shift = 3 * (n - 1) as u32;
    let ops = Arc::new(SemidirectOps { n, shift });
    let mut elems = Vec::with_capacity(chain.p.len() * 21);
    for s in 0..3u32 {
        for c in 0..7u32 {
            for &u in &chain.p {
                elems.push(u | (c << shift) | (s << (shift + 3)));
            }
        }
    }
    let mut gens: Vec<u32> = chain.p_gens.clone();
    gens.push(1 << shift); // the field multiplier
    gens.push(1 << (shift + 3)); // the Frobenius
    BlackBoxGroup::new(ops, elems, gens)
}

impl Construction {
    pub fn build() -> Result<Construction, BuildError> {
        let chain = build_chain(5)?;
        let group = build_g(&chain);
        Ok(Construction { chain, group })
    }

    pub fn from_chain(chain: SubgroupChain) -> Construction {
        let group = build_g(&chain);
        Construction { chain, group }
    }

    /// P's elements as keys of G.
    pub fn p_in_g(&self) -> Vec<u32> {
        self.chain.p.clone()
    }

    /// P^i's elements as keys of G.
    pub fn p_level_in_g(&self, i: usize) -> Vec<u32> {
        self.chain.p_levels[i].clone()
    }

    pub fn p4_in_g(&self) -> Vec<u32> {
        self.p_level_in_g(4)
    }

    /// The Sylow 2-subgroup P as a group in its own right.
    pub fn sylow2(&self) -> BlackBoxGroup {
        self.chain.p_group()
    }
}

// ---------------------------------------------------------------------------
// verification checks

fn set_eq(a: &[u32], b: &[u32]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

pub fn verify_order_ladder(chain: &SubgroupChain, group: &BlackBoxGroup) -> Vec<Check> {
    let sizes = [
        ("ladder.q", "Q has order 4096", chain.q().len(), 4096),
        ("ladder.q2", "Q^2 has order 512", chain.q_levels[2].len(), 512),
        ("ladder.q3", "Q^3 has order 64", chain.q_levels[3].len(), 64),
        ("ladder.q4", "Q^4 has order 8", chain.q_levels[4].len(), 8),
        ("ladder.x", "X has order 32", chain.x.len(), 32),
        ("ladder.y", "Y has order 256", chain.y.len(), 256),
        ("ladder.p", "P has order 2048 (index 2 in Q)", chain.p.len(), 2048),
        ("ladder.p2", "P^2 has order 256", chain.p_levels[2].len(), 256),
        ("ladder.p3", "P^3 has order 32", chain.p_levels[3].len(), 32),
        ("ladder.p4", "P^4 has order 8", chain.p_levels[4].len(), 8),
        ("ladder.g", "G has order 43008", group.order(), 43008),
    ];
    sizes
        .iter()
        .map(|&(id, claim, got, want)| {
            Check::with_witness(id, claim, got == want, format!("got {got}"))
        })
        .collect()
}

pub fn verify_classes(cons: &Construction) -> Vec<Check> {
    let mut checks = Vec::new();
    let g = &cons.group;
    let classes = g.conjugacy_classes();

    checks.push(Check::with_witness(
        "classes.count",
        "G has exactly 33 conjugacy classes",
        classes.len() == 33,
        classes.len().to_string(),
    ));
    let total: usize = classes.iter().map(|c| c.size).sum();
    checks.push(Check::with_witness(
        "classes.partition",
        "class sizes sum to |G|",
        total == g.order(),
        total.to_string(),
    ));
    let orbit_stab = classes
        .iter()
        .all(|c| c.size * g.centralizer(c.rep).len() == g.order());
    checks.push(Check::new(
        "classes.orbit_stabilizer",
        "size times centralizer order equals |G| for every class",
        orbit_stab,
    ));

    let real: Vec<_> = classes.iter().filter(|c| c.is_real).collect();
    let mut real_sizes: Vec<usize> = real.iter().map(|c| c.size).collect();
    real_sizes.sort_unstable();
    checks.push(Check::with_witness(
        "classes.real_count",
        "exactly 3 real classes, of sizes 1, 7 and 24",
        real_sizes == vec![1, 7, 24],
        format!("{real_sizes:?}"),
    ));

    // the real classes are {1}, P^4 minus 1, and P^3 minus P^4
    let p4 = cons.p_level_in_g(4);
    let p3 = cons.p_level_in_g(3);
    let p4_not_1: Vec<u32> = p4.iter().copied().filter(|&k| k != g.id()).collect();
    let p3_not_p4: Vec<u32> = p3.iter().copied().filter(|k| !p4.contains(k)).collect();
    let find_real = |size: usize| real.iter().find(|c| c.size == size);
    let id_ok = find_real(1).map(|c| c.rep == g.id()).unwrap_or(false);
    let p4_ok = find_real(7).map(|c| set_eq(&c.members, &p4_not_1)).unwrap_or(false);
    let p3_ok = find_real(24).map(|c| set_eq(&c.members, &p3_not_p4)).unwrap_or(false);
    checks.push(Check::new(
        "classes.real_members",
        "real classes are the identity, the 7 central involutions, and the 24 elements one level up",
        id_ok && p4_ok && p3_ok,
    ));
    let real_in_p2 = real.iter().all(|c| {
        c.members
            .iter()
            .all(|&k| GroupElement::from_key(5, k).unit.level() >= 2)
    });
    checks.push(Check::new(
        "classes.real_in_p2",
        "every real element lies in P^2",
        real_in_p2,
    ));

    // the middle layer P^2 minus P^3 splits into two non-real classes of 112
    let p2 = cons.p_level_in_g(2);
    let p2_not_p3: std::collections::HashSet<u32> = p2
        .iter()
        .copied()
        .filter(|k| !p3.contains(k))
        .collect();
    let covering: Vec<_> = classes
        .iter()
        .filter(|c| p2_not_p3.contains(&c.rep))
        .collect();
    let two_112 = covering.len() == 2
        && covering.iter().all(|c| c.size == 112 && !c.is_real)
        && covering.iter().map(|c| c.size).sum::<usize>() == p2_not_p3.len();
    checks.push(Check::with_witness(
        "classes.middle_layer",
        "P^2 minus P^3 (224 elements) is two non-real classes of size 112",
        two_112,
        format!(
            "{} classes with sizes {:?}",
            covering.len(),
            covering.iter().map(|c| c.size).collect::<Vec<_>>()
        ),
    ));
    checks
}

pub fn verify_centralizers(cons: &Construction) -> Vec<Check> {
    let mut checks = Vec::new();
    let chain = &cons.chain;
    let n = chain.n;
    let q_group = chain.q_group();

    // C_Q(b) = Q^2 for every b of level exactly 3 with x^3 coefficient
    // outside {0, 1} (the degenerate coefficient 1 commutes with more)
    let mut all_q2 = true;
    for &b in &chain.q_levels[3] {
        let bu = SkewUnit::from_key(n, b);
        if bu.level() != 3 || bu.coeff(3) == gf::ONE {
            continue;
        }
        let cent = q_group.centralizer(b);
        if !set_eq(&cent, &chain.q_levels[2]) {
            all_q2 = false;
        }
    }
    checks.push(Check::new(
        "centralizer.q3_in_q",
        "the Q-centralizer of each nondegenerate level-3 unit is exactly Q^2",
        all_q2,
    ));

    // in G: |C_G(b)| = 1792 for b in P^3 minus P^4, and the centralizer is P^2 C
    let g = &cons.group;
    let p4: std::collections::HashSet<u32> = chain.p_levels[4].iter().copied().collect();
    let shift = 3 * (n - 1) as u32;
    let mut p2c: Vec<u32> = Vec::new();
    for c in 0..7u32 {
        for &u in &chain.p_levels[2] {
            p2c.push(u | (c << shift));
        }
    }
    let mut cent_ok = true;
    for &b in &chain.p_levels[3] {
        if p4.contains(&b) {
            continue;
        }
        let cent = g.centralizer(b);
        if cent.len() != 1792 {
            cent_ok = false;
            break;
        }
        // for the representatives with no x^4 term the centralizer is
        // exactly P^2 C; the others are conjugate shifts of it
        if SkewUnit::from_key(n, b).coeff(4).is_zero() && !set_eq(&cent, &p2c) {
            cent_ok = false;
            break;
        }
    }
    checks.push(Check::new(
        "centralizer.p3_in_g",
        "each element of P^3 minus P^4 has G-centralizer of order 1792, equal to P^2 C at the x^4-free representatives",
        cent_ok,
    ));

    // C_P(b) = P^2 for the same b
    let p_group = chain.p_group();
    let mut cp_ok = true;
    for &b in &chain.p_levels[3] {
        if p4.contains(&b) {
            continue;
        }
        if !set_eq(&p_group.centralizer(b), &chain.p_levels[2]) {
            cp_ok = false;
            break;
        }
    }
    checks.push(Check::new(
        "centralizer.p3_in_p",
        "each element of P^3 minus P^4 has P-centralizer P^2",
        cp_ok,
    ));
    checks
}

pub fn verify_structure(cons: &Construction) -> Vec<Check> {
    let mut checks = Vec::new();
    let chain = &cons.chain;
    let n = chain.n;
    let ops = chain.unit_ops.as_ref() as &dyn GroupOps;

    // coefficient descriptions of X and Y
    let ker: Vec<FieldElement> = gf::trace_kernel();
    let x_desc: Vec<u32> = {
        let mut v = Vec::new();
        for &a3 in &ker {
            for a4 in gf::all_elements() {
                let mut coeffs = vec![gf::ZERO; n - 1];
                coeffs[2] = a3;
                coeffs[3] = a4;
                if n == 6 {
                    for a5 in gf::all_elements() {
                        let mut c6 = coeffs.clone();
                        c6[4] = a5;
                        v.push(SkewUnit::new(n, c6).key());
                    }
                } else {
                    v.push(SkewUnit::new(n, coeffs).key());
                }
            }
        }
        v
    };
    checks.push(Check::new(
        "structure.x_coeffs",
        "X is exactly the units with x^3 coefficient in ker Tr and no lower terms",
        set_eq(&chain.x, &x_desc),
    ));
    if n == 5 {
        let y_desc: Vec<u32> = {
            let mut v = Vec::new();
            for a2 in gf::all_elements() {
                for &a3 in &ker {
                    for a4 in gf::all_elements() {
                        v.push(SkewUnit::new(5, vec![gf::ZERO, a2, a3, a4]).key());
                    }
                }
            }
            v
        };
        checks.push(Check::new(
            "structure.y_coeffs",
            "Y is exactly the units with free x^2, x^4 and ker-Tr x^3 coefficients",
            set_eq(&chain.y, &y_desc),
        ));
    }

    // X = [Q, Q^2] Q^4
    let mut commutator_seeds: Vec<u32> = Vec::new();
    for &a in natural_q_gens(n).iter() {
        for &b in level_gens(n, 2).iter() {
            commutator_seeds.push(ops.mul(
                ops.mul(ops.inv(a), ops.inv(b)),
                ops.mul(a, b),
            ));
        }
    }
    let comm = engine::normal_closure(ops, &commutator_seeds, &natural_q_gens(n));
    let comm_q4 = engine::closure(ops, &{
        let mut s = comm.clone();
        s.extend_from_slice(&chain.q_levels[4]);
        s
    });
    checks.push(Check::new(
        "structure.x_commutator",
        "X equals the commutator subgroup [Q, Q^2] extended by Q^4",
        set_eq(&comm_q4, &chain.x),
    ));

    // P' = Q' = Y
    let q_group = chain.q_group();
    let p_group = chain.p_group();
    let dq = q_group.derived_subgroup();
    let dp = p_group.derived_subgroup();
    checks.push(Check::new(
        "structure.derived",
        "the derived subgroups of Q and of P both equal Y",
        set_eq(&dq, &chain.y) && set_eq(&dp, &chain.y),
    ));

    // P^i = P intersect Q^i, with P^2 = Y, P^3 = X, P^4 = Q^4
    checks.push(Check::new(
        "structure.p_levels",
        "P^2 = Y, P^3 = X and P^4 = Q^4",
        set_eq(&chain.p_levels[2], &chain.y)
            && set_eq(&chain.p_levels[3], &chain.x)
            && set_eq(&chain.p_levels[4], &chain.q_levels[4]),
    ));

    // upper central series of P: Z1 = P^4, Z2 = P^3, Z3 = P^2, Z4 = P
    let series = p_group.upper_central_series();
    let series_ok = series.len() == 4
        && set_eq(&series[0], &chain.p_levels[4])
        && set_eq(&series[1], &chain.p_levels[3])
        && set_eq(&series[2], &chain.p_levels[2])
        && set_eq(&series[3], &chain.p);
    checks.push(Check::with_witness(
        "structure.central_series",
        "the upper central series of P is P^4 < P^3 < P^2 < P",
        series_ok,
        format!("orders {:?}", series.iter().map(|s| s.len()).collect::<Vec<_>>()),
    ));

    // the acting generators fix P and every P^i setwise
    let mut invariant = true;
    for level in [1usize, 2, 3, 4] {
        let sub: std::collections::HashSet<u32> =
            chain.p_levels[level].iter().copied().collect();
        for &u in &chain.p_levels[level] {
            for c in nonzero_field() {
                if !sub.contains(&key_cconj(n, u, c)) {
                    invariant = false;
                }
            }
            if !sub.contains(&key_galois(n, u, 1)) {
                invariant = false;
            }
        }
    }
    checks.push(Check::new(
        "structure.invariance",
        "P and each P^i are setwise invariant under the order-21 acting group",
        invariant,
    ));

    // G / P is the nonabelian group of order 21, G / G is trivial
    let g = &cons.group;
    match g.quotient(&cons.p_in_g()) {
        Ok((qg, _)) => {
            let nonabelian = qg
                .elems()
                .iter()
                .any(|&a| qg.elems().iter().any(|&b| qg.mul(a, b) != qg.mul(b, a)));
            checks.push(Check::new(
                "structure.g_mod_p",
                "G/P is the nonabelian (Frobenius) group of order 21",
                qg.order() == 21 && nonabelian,
            ));
        }
        Err(e) => checks.push(Check::with_witness(
            "structure.g_mod_p",
            "G/P is the nonabelian (Frobenius) group of order 21",
            false,
            e.to_string(),
        )),
    }
    checks
}

/// The closed-form oracles: squaring formula, the two product formulas, and
/// the commuting criterion, all checked exhaustively against skew
/// multiplication.
pub fn verify_product_formulas() -> Vec<Check> {
    let mut checks = Vec::new();
    let sq_ok = skew::all_units(5).all(|u| skew::square_closed_form(&u) == u.square());
    checks.push(Check::new(
        "formulas.square",
        "the closed squaring formula matches skew multiplication on all 4096 units",
        sq_ok,
    ));

    let bs: Vec<SkewUnit> = skew::all_units(5).filter(|b| b.coeff(1).is_zero()).collect();
    let mut ab_ok = true;
    let mut ba_ok = true;
    let mut comm_ok = true;
    for a in skew::all_units(5) {
        for b in &bs {
            let ab = a.mul(b);
            let ba = b.mul(&a);
            if skew::ab_closed_form(&a, b) != ab {
                ab_ok = false;
            }
            if skew::ba_closed_form(&a, b) != ba {
                ba_ok = false;
            }
            // commuting criterion in terms of coefficients
            let (a1, a2) = (a.coeff(1), a.coeff(2));
            let (b2, b3) = (b.coeff(2), b.coeff(3));
            let cond1 = a1.mul(b2.pow(2)) == b2.mul(a1.pow(4));
            let cond2 =
                a1.mul(b3.pow(2)).add(a2.mul(b2.pow(4))) == b3.mul(a1).add(b2.mul(a2.pow(4)));
            if (ab == ba) != (cond1 && cond2) {
                comm_ok = false;
            }
        }
    }
    checks.push(Check::new(
        "formulas.ab",
        "the left-product closed form matches skew multiplication on all 4096 x 512 pairs",
        ab_ok,
    ));
    checks.push(Check::new(
        "formulas.ba",
        "the right-product closed form matches skew multiplication on all 4096 x 512 pairs",
        ba_ok,
    ));
    checks.push(Check::new(
        "formulas.commuting",
        "two coefficient equations characterize exactly when a level-2 unit commutes",
        comm_ok,
    ));
    checks
}

pub fn verify_fitting_decompositions(chain: &SubgroupChain) -> Vec<Check> {
    let mut checks = Vec::new();
    let n = chain.n;

    // Q^3/Q^4: Frobenius-fixed part of order 2 times the commutator part X/Q^4
    let q3 = chain.subgroup_group(&chain.q_levels[3]);
    match q3.quotient(&chain.q_levels[4]) {
        Ok((quot, map)) => {
            let canon = |k: u32| map[q3.index_of(k)];
            let fixed: Vec<u32> = quot
                .elems()
                .iter()
                .copied()
                .filter(|&r| canon(key_galois(n, r, 1)) == r && canon(key_galois(n, r, 2)) == r)
                .collect();
            // the two cosets with x^3 coefficient 0 or 1
            let expect_fixed: Vec<u32> = [0u32, 1 << 6]
                .iter()
                .map(|&k| canon(k))
                .collect();
            let comm_part: Vec<u32> = {
                let mut reps: Vec<u32> = chain.x.iter().map(|&k| canon(k)).collect();
                reps.sort_unstable();
                reps.dedup();
                reps
            };
            let inter: Vec<u32> = fixed
                .iter()
                .copied()
                .filter(|k| comm_part.contains(k))
                .collect();
            let direct = fixed.len() == 2
                && set_eq(&fixed, &expect_fixed)
                && comm_part.len() == 4
                && inter == vec![quot.id()]
                && fixed.len() * comm_part.len() == quot.order();
            checks.push(Check::new(
                "fitting.q3_q4",
                "Q^3/Q^4 is the direct product of the order-2 Frobenius-fixed part and the order-4 part X/Q^4",
                direct,
            ));
        }
        Err(e) => checks.push(Check::with_witness(
            "fitting.q3_q4",
            "Q^3/Q^4 splits under the Frobenius action",
            false,
            e.to_string(),
        )),
    }

    // Q^2/X: C-fixed part is Q^3/X, complement is Y/X
    let q2 = chain.subgroup_group(&chain.q_levels[2]);
    match q2.quotient(&chain.x) {
        Ok((quot, map)) => {
            let canon = |k: u32| map[q2.index_of(k)];
            let fixed: Vec<u32> = quot
                .elems()
                .iter()
                .copied()
                .filter(|&r| nonzero_field().all(|c| canon(key_cconj(n, r, c)) == r))
                .collect();
            let q3_img: Vec<u32> = {
                let mut v: Vec<u32> = chain.q_levels[3].iter().map(|&k| canon(k)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let y_img: Vec<u32> = {
                let mut v: Vec<u32> = chain.y.iter().map(|&k| canon(k)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let inter: Vec<u32> = fixed.iter().copied().filter(|k| y_img.contains(k)).collect();
            let direct = set_eq(&fixed, &q3_img)
                && inter == vec![quot.id()]
                && fixed.len() * y_img.len() == quot.order();
            checks.push(Check::new(
                "fitting.q2_x",
                "Q^2/X is the direct product of the C-fixed part Q^3/X and Y/X",
                direct,
            ));
        }
        Err(e) => checks.push(Check::with_witness(
            "fitting.q2_x",
            "Q^2/X splits under the C action",
            false,
            e.to_string(),
        )),
    }

    // Q^2/Y is the C-fixed subgroup of Q/Y
    let q = chain.q_group();
    match q.quotient(&chain.y) {
        Ok((quot, map)) => {
            let canon = |k: u32| map[q.index_of(k)];
            let fixed: Vec<u32> = quot
                .elems()
                .iter()
                .copied()
                .filter(|&r| nonzero_field().all(|c| canon(key_cconj(n, r, c)) == r))
                .collect();
            let q2_img: Vec<u32> = {
                let mut v: Vec<u32> = chain.q_levels[2].iter().map(|&k| canon(k)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            checks.push(Check::new(
                "fitting.q2_y",
                "Q^2/Y is exactly the C-fixed subgroup of Q/Y",
                set_eq(&fixed, &q2_img),
            ));
            // Q/Y = fixed x [Q,C]Y/Y, with P = [Q,C]Y
            let p_img: Vec<u32> = {
                let mut v: Vec<u32> = chain.p.iter().map(|&k| canon(k)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let inter: Vec<u32> = fixed.iter().copied().filter(|k| p_img.contains(k)).collect();
            checks.push(Check::new(
                "fitting.q_y",
                "Q/Y is the direct product of its C-fixed part and P/Y",
                inter == vec![quot.id()] && fixed.len() * p_img.len() == quot.order(),
            ));
        }
        Err(e) => checks.push(Check::with_witness(
            "fitting.q2_y",
            "Q^2/Y is the C-fixed subgroup of Q/Y",
            false,
            e.to_string(),
        )),
    }
    checks
}

pub fn verify_irreducible_actions(chain: &SubgroupChain) -> Vec<Check> {
    let mut checks = Vec::new();
    let n = chain.n;

    // each section is elementary abelian of order 8; the C action on it is
    // irreducible when no subgroup of order 2 or 4 is invariant
    let mut irred_ok = true;
    let mut central_ok = true;
    for (name, upper, lower) in [
        ("q_q2", &chain.q_levels[1], &chain.q_levels[2]),
        ("q2_q3", &chain.q_levels[2], &chain.q_levels[3]),
        ("q3_q4", &chain.q_levels[3], &chain.q_levels[4]),
        ("q4", &chain.q_levels[4], &Vec::new()),
    ] {
        let grp = chain.subgroup_group(upper);
        let (quot, map) = if lower.is_empty() {
            // treat the subgroup itself as the section
            let id_map: Vec<u32> = grp.elems().to_vec();
            (grp.subgroup(grp.elems().to_vec(), grp.gens().to_vec()), id_map)
        } else {
            let (q, m) = grp.quotient(lower).expect("normal section");
            let m2: Vec<u32> = m;
            (q, m2)
        };
        let canon = |k: u32| map[grp.index_of(k)];
        let act = |r: u32, c: FieldElement| canon(key_cconj(n, r, c));
        if name == "q3_q4" {
            // C centralizes this section pointwise
            for &r in quot.elems() {
                for c in nonzero_field() {
                    if act(r, c) != r {
                        central_ok = false;
                    }
                }
            }
            continue;
        }
        // enumerate subgroups of order 2 and 4 of the elementary abelian section
        let elems = quot.elems().to_vec();
        let mut subgroups: Vec<Vec<u32>> = Vec::new();
        for &a in &elems {
            if a == quot.id() {
                continue;
            }
            subgroups.push(vec![quot.id(), a]);
            for &b in &elems {
                if b == quot.id() || b == a {
                    continue;
                }
                let mut s = vec![quot.id(), a, b, quot.mul(a, b)];
                s.sort_unstable();
                s.dedup();
                if s.len() == 4 && !subgroups.contains(&s) {
                    subgroups.push(s);
                }
            }
        }
        for sub in &subgroups {
            let invariant = sub
                .iter()
                .all(|&r| nonzero_field().all(|c| sub.contains(&act(r, c))));
            if invariant {
                irred_ok = false;
            }
        }
    }
    checks.push(Check::new(
        "action.irreducible",
        "C leaves no proper nontrivial subgroup of Q/Q^2, Q^2/Q^3 or Q^4 invariant",
        irred_ok,
    ));
    checks.push(Check::new(
        "action.central_q3",
        "C fixes every coset of Q^4 in Q^3",
        central_ok,
    ));

    // C is transitive on the 7 nonidentity elements of Q^4
    let nontrivial: Vec<u32> = chain.q_levels[4]
        .iter()
        .copied()
        .filter(|&k| k != 0)
        .collect();
    let orbit: std::collections::HashSet<u32> = nonzero_field()
        .map(|c| key_cconj(n, nontrivial[0], c))
        .collect();
    checks.push(Check::new(
        "action.q4_transitive",
        "C permutes the 7 nonidentity central involutions in one orbit",
        nontrivial.len() == 7 && orbit.len() == 7 && nontrivial.iter().all(|k| orbit.contains(k)),
    ));
    checks
}

pub fn suzuki_type_a_check(chain: &SubgroupChain) -> Vec<Check> {
    let mut checks = Vec::new();
    let n = chain.n;
    let p_group = chain.p_group();
    let q_group = chain.q_group();

    let (pq, pmap) = p_group.quotient(&chain.p_levels[3]).expect("P^3 normal in P");
    let (qq, qmap) = q_group.quotient(&chain.q_levels[3]).expect("Q^3 normal in Q");

    // (a) the inclusion P -> Q induces an isomorphism P/P^3 -> Q/Q^3
    let incl = |r: u32| qmap[q_group.index_of(r)];
    let images: std::collections::HashSet<u32> = pq.elems().iter().map(|&r| incl(r)).collect();
    let mut iso = images.len() == pq.order() && pq.order() == qq.order();
    for &a in pq.elems() {
        for &b in pq.elems() {
            if incl(pq.mul(a, b)) != qq.mul(incl(a), incl(b)) {
                iso = false;
            }
        }
    }
    checks.push(Check::new(
        "suzuki.inclusion_iso",
        "inclusion induces an isomorphism from P/P^3 onto Q/Q^3",
        iso,
    ));

    // (b) multiplication matches the type-A model (a,b)(c,d) = (a+c, b+d+a c^2)
    // under the first-two-coefficients bijection
    let coeffs = |r: u32| {
        let u = SkewUnit::from_key(n, r);
        (u.coeff(1), u.coeff(2))
    };
    let distinct: std::collections::HashSet<(FieldElement, FieldElement)> =
        pq.elems().iter().map(|&r| coeffs(r)).collect();
    let mut model_ok = distinct.len() == 64 && pq.order() == 64;
    for &a in pq.elems() {
        for &b in pq.elems() {
            let (a1, a2) = coeffs(a);
            let (c1, c2) = coeffs(b);
            let expect = (a1.add(c1), a2.add(c2).add(a1.mul(c1.pow(2))));
            if coeffs(pq.mul(a, b)) != expect {
                model_ok = false;
            }
        }
    }
    checks.push(Check::new(
        "suzuki.type_a_model",
        "P/P^3 multiplication matches the type-A formula on all 64 x 64 products",
        model_ok,
    ));

    // (c) nonabelian with exactly 7 involutions
    let invols = pq.involutions();
    let nonabelian = pq
        .elems()
        .iter()
        .any(|&a| pq.elems().iter().any(|&b| pq.mul(a, b) != pq.mul(b, a)));
    checks.push(Check::new(
        "suzuki.involutions",
        "P/P^3 is nonabelian with exactly 7 involutions",
        nonabelian && invols.len() == 7,
    ));

    // (d) the induced C action permutes the involutions transitively
    let canon = |k: u32| pmap[p_group.index_of(k)];
    let orbit: std::collections::HashSet<u32> = nonzero_field()
        .map(|c| canon(key_cconj(n, invols[0], c)))
        .collect();
    checks.push(Check::new(
        "suzuki.transitive",
        "the induced solvable action is transitive on the 7 involutions",
        orbit.len() == 7 && invols.iter().all(|k| orbit.contains(k)),
    ));
    checks
}

pub fn verify_nonreality_witness(cons: &Construction) -> Vec<Check> {
    let mut checks = Vec::new();
    let n = cons.chain.n;
    let ops = cons.chain.unit_ops.as_ref() as &dyn GroupOps;
    let b = SkewUnit::new(n, vec![gf::ZERO, gf::ONE, gf::ZERO, gf::ZERO]);
    let b_inv = b.inverse();
    checks.push(Check::new(
        "witness.inverse",
        "the inverse of 1 + x^2 is 1 + x^2 + x^4",
        b_inv == SkewUnit::new(n, vec![gf::ZERO, gf::ONE, gf::ZERO, gf::ONE]),
    ));

    // exhaustive: no element of G conjugates 1 + x^2 to its inverse
    let g = &cons.group;
    let bk = b.key();
    let bik = b_inv.key();
    let reached = g.elems().iter().any(|&h| g.conj(bk, h) == bik);
    checks.push(Check::new(
        "witness.exhaustive",
        "no element of G conjugates 1 + x^2 to its inverse",
        !reached,
    ));

    // algebraic replay: the forced coefficients of b^a for every a in Q
    let mut replay_ok = true;
    for a in skew::all_units(5) {
        let conj = SkewUnit::from_key(5, ops.mul(ops.mul(a.inverse().key(), bk), a.key()));
        let (a1, a2) = (a.coeff(1), a.coeff(2));
        let c3 = a1.pow(4).add(a1);
        let c4 = a2.pow(4).add(a2).add(a1.mul(c3.pow(2)));
        if conj.coeff(2) != gf::ONE || conj.coeff(3) != c3 || conj.coeff(4) != c4 {
            replay_ok = false;
        }
        if conj == b_inv {
            replay_ok = false;
        }
    }
    checks.push(Check::new(
        "witness.forced_coefficients",
        "conjugates of 1 + x^2 have the forced x^3 and x^4 coefficients and never hit the inverse",
        replay_ok,
    ));

    // the additive image {a^4 + a} is the trace kernel, which omits 1
    let mut image: Vec<FieldElement> = gf::all_elements().map(|a| a.pow(4).add(a)).collect();
    image.sort();
    image.dedup();
    checks.push(Check::new(
        "witness.kernel_image",
        "the image of a -> a^4 + a is the trace kernel, and 1 is not in it",
        image == gf::trace_kernel() && !image.contains(&gf::ONE),
    ));
    checks
}

/// Build the X^6 variant and verify its claims: the order-256 all-involution
/// normal subgroup, at least 3 classes of involutions inside it, and at
/// least 4 real classes (equivalently real characters).
pub fn verify_variant6() -> (Option<Construction>, Vec<Check>) {
    let mut checks = Vec::new();
    let chain = match build_chain(6) {
        Ok(c) => c,
        Err(e) => {
            checks.push(Check::with_witness(
                "variant6.chain",
                "the X^6 subgroup chain builds",
                false,
                e.to_string(),
            ));
            return (None, checks);
        }
    };
    let cons = Construction::from_chain(chain);
    let g6 = &cons.group;
    checks.push(Check::with_witness(
        "variant6.order",
        "the X^6 group has order 344064",
        g6.order() == 344064,
        g6.order().to_string(),
    ));

    // T: x^3 coefficient in ker Tr, x^4 and x^5 free
    let ker = gf::trace_kernel();
    let mut t: Vec<u32> = Vec::new();
    for &a3 in &ker {
        for a4 in gf::all_elements() {
            for a5 in gf::all_elements() {
                t.push(SkewUnit::new(6, vec![gf::ZERO, gf::ZERO, a3, a4, a5]).key());
            }
        }
    }
    t.sort_unstable();
    let all_invol = t
        .iter()
        .all(|&k| k == 0 || SkewUnit::from_key(6, k).square().is_identity());
    checks.push(Check::new(
        "variant6.t_involutions",
        "T has order 256 and all its 255 nonidentity elements are involutions",
        t.len() == 256 && all_invol,
    ));
    let in_p = t.iter().all(|&k| cons.chain.p_bits[k as usize]);
    checks.push(Check::new("variant6.t_in_p", "T lies inside the Sylow 2-subgroup", in_p));

    let normal = cons.group.normality_witness(&t).is_none();
    checks.push(Check::new("variant6.t_normal", "T is normal in the X^6 group", normal));
    let t_set: std::collections::HashSet<u32> = t.iter().copied().collect();
    let cg_invariant = t.iter().all(|&k| {
        nonzero_field().all(|c| t_set.contains(&key_cconj(6, k, c)))
            && t_set.contains(&key_galois(6, k, 1))
    });
    checks.push(Check::new(
        "variant6.t_invariant",
        "T is invariant under the order-21 acting group",
        cg_invariant,
    ));

    let cd = ClassData::new(g6);
    let t_classes: std::collections::HashSet<usize> = t
        .iter()
        .filter(|&&k| k != 0)
        .map(|&k| cd.class_of_elem(g6, k))
        .collect();
    checks.push(Check::with_witness(
        "variant6.t_classes",
        "the involutions of T fall into at least 3 conjugacy classes",
        t_classes.len() >= 3,
        t_classes.len().to_string(),
    ));
    let real = cd.real_count();
    checks.push(Check::with_witness(
        "variant6.real_classes",
        "the X^6 group has at least 4 real classes",
        real >= 4,
        real.to_string(),
    ));

    // real characters agree with real classes, and there are at least 4
    match dixon_table(g6, &cd) {
        Ok(table) => match table.real_characters(&cd) {
            Ok(rc) => checks.push(Check::with_witness(
                "variant6.real_characters",
                "the X^6 group has at least 4 real irreducible characters, matching its real classes",
                rc.len() >= 4 && rc.len() == real,
                rc.len().to_string(),
            )),
            Err(e) => checks.push(Check::with_witness(
                "variant6.real_characters",
                "real characters match real classes",
                false,
                e.to_string(),
            )),
        },
        Err(e) => checks.push(Check::with_witness(
            "variant6.real_characters",
            "character table of the X^6 group computes",
            false,
            e.to_string(),
        )),
    }
    (Some(cons), checks)
}

// ---------------------------------------------------------------------------
// binary cache

const CACHE_MAGIC: &[u8; 4] = b"RCG1";

/// Serialize the chain (header plus X/Y/P membership bitsets) so later runs
/// can skip the closure computations.
pub fn save_chain(chain: &SubgroupChain, path: &std::path::Path) -> Result<(), BuildError> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(CACHE_MAGIC)?;
    f.write_all(&[chain.n as u8, gf::GEN.0, gf::MODULUS as u8])?;
    let nkeys = 1usize << (3 * (chain.n - 1));
    for set in [&chain.x, &chain.y, &chain.p] {
        let mut bits = vec![0u8; nkeys / 8];
        for &k in set.iter() {
            bits[k as usize / 8] |= 1 << (k % 8);
        }
        f.write_all(&bits)?;
    }
    Ok(())
}

pub fn load_chain(path: &std::path::Path) -> Result<SubgroupChain, BuildError> {
    let mut f = std::fs::File::open(path)?;
    let mut header = [0u8; 7];
    f.read_exact(&mut header)?;
    if &header[0..4] != CACHE_MAGIC {
        return Err(BuildError::CacheFormat("bad magic".into()));
    }
    let n = header[4] as usize;
    if !(n == 5 || n == 6) {
        return Err(BuildError::CacheFormat(format!("bad truncation degree {n}")));
    }
    if header[5] != gf::GEN.0 || header[6] != gf::MODULUS as u8 {
        return Err(BuildError::CacheFormat("field parameters differ".into()));
    }
    let nkeys = 1usize << (3 * (n - 1));
    let mut read_set = || -> Result<Vec<u32>, BuildError> {
        let mut bits = vec![0u8; nkeys / 8];
        f.read_exact(&mut bits)?;
        Ok((0..nkeys as u32)
            .filter(|&k| bits[k as usize / 8] & (1 << (k % 8)) != 0)
            .collect())
    };
    let x = read_set()?;
    let y = read_set()?;
    let p = read_set()?;
    let unit_ops = Arc::new(UnitOps { n });
    let mut q_levels: Vec<Vec<u32>> = Vec::with_capacity(n + 1);
    q_levels.push(Vec::new());
    for i in 1..=n {
        q_levels.push(skew::level_subgroup(i, n).iter().map(|u| u.key()).collect());
    }
    let mut p_bits = vec![false; nkeys];
    for &k in &p {
        p_bits[k as usize] = true;
    }
    let p_levels: Vec<Vec<u32>> = (0..=n)
        .map(|i| {
            if i == 0 {
                Vec::new()
            } else {
                p.iter()
                    .copied()
                    .filter(|&u| SkewUnit::from_key(n, u).level() >= i)
                    .collect()
            }
        })
        .collect();
    let p_gens = engine::small_generating_set(unit_ops.as_ref(), &p);
    Ok(SubgroupChain { n, unit_ops, q_levels, x, y, p, p_levels, p_bits, p_gens })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_orders_n5() {
        let chain = build_chain(5).unwrap();
        assert_eq!(chain.q().len(), 4096);
        assert_eq!(chain.q_levels[2].len(), 512);
        assert_eq!(chain.q_levels[3].len(), 64);
        assert_eq!(chain.q_levels[4].len(), 8);
        assert_eq!(chain.x.len(), 32);
        assert_eq!(chain.y.len(), 256);
        assert_eq!(chain.p.len(), 2048);
        assert_eq!(chain.p_levels[2].len(), 256);
        assert_eq!(chain.p_levels[3].len(), 32);
        assert_eq!(chain.p_levels[4].len(), 8);
    }

    #[test]
    fn x_from_full_commutator_set() {
        // the generator-based normal closure agrees with the full set of
        // commutators [u, v] over u in Q, v in Q^2
        let chain = build_chain(5).unwrap();
        let ops = chain.unit_ops.as_ref() as &dyn GroupOps;
        let mut seeds = Vec::new();
        for &u in chain.q() {
            for &v in &chain.q_levels[2] {
                seeds.push(ops.mul(ops.mul(ops.inv(u), ops.inv(v)), ops.mul(u, v)));
            }
        }
        seeds.extend_from_slice(&chain.q_levels[4]);
        let full = engine::closure(ops, &seeds);
        assert_eq!(full, chain.x);
    }

    #[test]
    fn semidirect_is_a_group() {
        let chain = build_chain(5).unwrap();
        let g = build_g(&chain);
        assert_eq!(g.order(), 43008);
        // associativity on pseudo-random triples
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20_000 {
            let a = g.elems()[rng.gen_range(0..g.order())];
            let b = g.elems()[rng.gen_range(0..g.order())];
            let c = g.elems()[rng.gen_range(0..g.order())];
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
        // inverses
        for _ in 0..5_000 {
            let a = g.elems()[rng.gen_range(0..g.order())];
            assert_eq!(g.mul(a, g.inv(a)), g.id());
            assert_eq!(g.mul(g.inv(a), a), g.id());
        }
        // P is normal: conjugating P generators by the action generators
        assert!(g.normality_witness(&chain.p).is_none());
    }

    #[test]
    fn group_element_key_roundtrip() {
        for key in [0u32, 4095, 4096 | (3 << 12), 100 | (6 << 12) | (2 << 15)] {
            let e = GroupElement::from_key(5, key);
            assert_eq!(e.key(5), key);
        }
    }

    #[test]
    fn acting_pair_relation() {
        // the acting group has order 21 and is nonabelian (Frobenius)
        let ops = SemidirectOps { n: 5, shift: 12 };
        let gamma = ops.pack(0, 1, 0);
        let sigma = ops.pack(0, 0, 1);
        // sigma^-1 gamma sigma = gamma^4
        let conj = ops.mul(ops.mul(ops.inv(sigma), gamma), sigma);
        let gamma4 = ops.pack(0, 4, 0);
        assert_eq!(conj, gamma4);
        let cg = BlackBoxGroup::generated(Arc::new(ops), vec![gamma, sigma]);
        assert_eq!(cg.order(), 21);
    }

    #[test]
    fn element_orders_in_q() {
        let chain = build_chain(5).unwrap();
        let q = chain.q_group();
        // 1 + x has order 8
        assert_eq!(q.element_order(1), 8);
        // involutions of Q are exactly the nonidentity elements of Q^3
        let invols = q.involutions();
        let expect: Vec<u32> = chain.q_levels[3].iter().copied().filter(|&k| k != 0).collect();
        assert_eq!(invols, expect);
        // involutions of the order-64 quotient Q/Q^3: 7 of them
        let (quot, _) = q.quotient(&chain.q_levels[3]).unwrap();
        assert_eq!(quot.involutions().len(), 7);
    }

    #[test]
    fn cache_roundtrip() {
        let chain = build_chain(5).unwrap();
        let dir = std::env::temp_dir().join("realclass-test-cache");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("chain5.bin");
        save_chain(&chain, &path).unwrap();
        let loaded = load_chain(&path).unwrap();
        assert_eq!(loaded.n, 5);
        assert_eq!(loaded.p, chain.p);
        assert_eq!(loaded.x, chain.x);
        assert_eq!(loaded.y, chain.y);
        assert_eq!(loaded.p_gens, chain.p_gens);
    }
}
