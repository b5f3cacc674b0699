//! Class algebra and character tables by the Burnside-Dixon method.
//!
//! Class multiplication constants are assembled into class matrices, whose
//! simultaneous eigenvectors over a prime field F_p (p = 1 mod exponent,
//! p > 2 sqrt|G|) are the central characters. Degrees and character values
//! are recovered mod p and lifted to exact cyclotomic integers: each value
//! is stored as the eigenvalue-multiplicity vector over e-th roots of unity.
//! Equality of cyclotomic values goes through reduction mod the e-th
//! cyclotomic polynomial, so every table check (orthogonality, reality,
//! Frobenius-Schur indicators) is exact integer arithmetic.

use std::collections::HashMap;

use thiserror::Error;

use crate::engine::{lcm, BlackBoxGroup, ConjClass};

#[derive(Debug, Error)]
pub enum CharError {
    #[error("eigenspace splitting failed: {0}")]
    Splitting(String),
    #[error("no admissible degree for residue {0} mod {1}")]
    Degree(u64, u64),
    #[error("Frobenius-Schur indicator not in {{-1,0,1}}: {0}")]
    BadIndicator(i64),
    #[error("real character count {chars} != real class count {classes}")]
    RealMismatch { chars: usize, classes: usize },
}

/// Conjugacy class data with dense lookups.
pub struct ClassData {
    pub classes: Vec<ConjClass>,
    /// group element index -> class index
    pub class_of: Vec<usize>,
    /// class index -> class index of inverses; an involution whose fixed
    /// points are exactly the real classes
    pub inverse_perm: Vec<usize>,
}

impl ClassData {
    pub fn new(group: &BlackBoxGroup) -> ClassData {
        let classes = group.conjugacy_classes();
        let mut class_of = vec![usize::MAX; group.order()];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[group.index_of(m)] = ci;
            }
        }
        let inverse_perm: Vec<usize> = classes
            .iter()
            .map(|c| class_of[group.index_of(group.inv(c.rep))])
            .collect();
        for (i, &j) in inverse_perm.iter().enumerate() {
            debug_assert_eq!(inverse_perm[j], i);
            debug_assert_eq!(classes[i].is_real, i == j);
        }
        ClassData { classes, class_of, inverse_perm }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of_elem(&self, group: &BlackBoxGroup, g: u32) -> usize {
        self.class_of[group.index_of(g)]
    }

    pub fn real_count(&self) -> usize {
        self.classes.iter().filter(|c| c.is_real).count()
    }
}

/// Class matrix B_i with (B_i)[j][m] = a_{ijm}, the number of pairs
/// (x, y) in C_i x C_j with x y = rep_m.
pub fn class_matrix(group: &BlackBoxGroup, cd: &ClassData, i: usize) -> Vec<Vec<u64>> {
    let k = cd.len();
    let mut mat = vec![vec![0u64; k]; k];
    let inverses: Vec<u32> = cd.classes[i].members.iter().map(|&x| group.inv(x)).collect();
    for (m, cm) in cd.classes.iter().enumerate() {
        let rep = cm.rep;
        for &xi in &inverses {
            let y = group.mul(xi, rep);
            let j = cd.class_of_elem(group, y);
            mat[j][m] += 1;
        }
    }
    mat
}

/// The vector (a_{ij0}, ..., a_{ij,k-1}) for one pair of classes.
pub fn structure_constants(group: &BlackBoxGroup, cd: &ClassData, i: usize, j: usize) -> Vec<u64> {
    class_matrix(group, cd, i)[j].clone()
}

/// An element of Z[zeta_e], stored as multiplicities: sum of v[j] * zeta^j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycInt {
    pub e: usize,
    pub v: Vec<i64>,
}

impl CycInt {
    pub fn zero(e: usize) -> CycInt {
        CycInt { e, v: vec![0; e] }
    }

    pub fn integer(e: usize, n: i64) -> CycInt {
        let mut c = CycInt::zero(e);
        c.v[0] = n;
        c
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        debug_assert_eq!(self.e, other.e);
        CycInt {
            e: self.e,
            v: self.v.iter().zip(&other.v).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> CycInt {
        CycInt { e: self.e, v: self.v.iter().map(|a| a * s).collect() }
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        debug_assert_eq!(self.e, other.e);
        let e = self.e;
        let mut v = vec![0i64; e];
        for (i, &a) in self.v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.v.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                v[(i + j) % e] += a * b;
            }
        }
        CycInt { e, v }
    }

    /// Complex conjugation: zeta^j -> zeta^{e-j}.
    pub fn conj(&self) -> CycInt {
        let e = self.e;
        let mut v = vec![0i64; e];
        for (j, &a) in self.v.iter().enumerate() {
            v[(e - j) % e] += a;
        }
        CycInt { e, v }
    }

    /// Canonical form: coefficients of the residue mod the e-th cyclotomic
    /// polynomial (power basis of degree < phi(e)).
    pub fn canonical(&self) -> Vec<i64> {
        let phi = cyclotomic_poly(self.e);
        poly_rem(&self.v, &phi)
    }

    pub fn equals(&self, other: &CycInt) -> bool {
        self.canonical() == other.canonical()
    }

    /// The rational integer this value represents, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let c = self.canonical();
        if c.iter().skip(1).all(|&x| x == 0) {
            Some(c.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        let e = self.e as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (j, &a) in self.v.iter().enumerate() {
            let th = 2.0 * std::f64::consts::PI * j as f64 / e;
            re += a as f64 * th.cos();
            im += a as f64 * th.sin();
        }
        (re, im)
    }
}

/// The n-th cyclotomic polynomial, ascending coefficients.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    fn inner(n: usize, memo: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        // x^n - 1 divided by Phi_d for every proper divisor d
        let mut f = vec![0i64; n + 1];
        f[0] = -1;
        f[n] = 1;
        for d in 1..n {
            if n % d == 0 {
                let phi_d = inner(d, memo);
                f = poly_div_exact(&f, &phi_d);
            }
        }
        memo.insert(n, f.clone());
        f
    }
    inner(n, &mut HashMap::new())
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![0i64; nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "non-exact polynomial division");
    quot
}

/// Remainder of an integer polynomial mod a monic divisor.
fn poly_rem(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1);
    while rem.len() > dd {
        let top = rem.len() - 1;
        let c = rem[top];
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[top - dd + j] -= c * dj;
            }
        }
        rem.pop();
    }
    while rem.len() < dd {
        rem.push(0);
    }
    rem
}

// ---------------------------------------------------------------------------
// mod-p helpers

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

fn powm(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        k >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p = 1 mod e with p > 2*sqrt(order).
pub fn dixon_prime(e: usize, order: usize) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let e = e as u64;
    let mut p = e + 1;
    loop {
        if p as f64 > bound && is_prime(p) {
            return p;
        }
        p += e;
    }
}

fn primitive_root_of_unity(e: u64, p: u64) -> u64 {
    // find a generator of F_p^* then take the (p-1)/e power
    'outer: for g in 2..p {
        let mut m = p - 1;
        let mut factors = Vec::new();
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                factors.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        for &q in &factors {
            if powm(g, (p - 1) / q, p) == 1 {
                continue 'outer;
            }
        }
        let z = powm(g, (p - 1) / e, p);
        debug_assert_eq!(powm(z, e, p), 1);
        return z;
    }
    unreachable!("no primitive root mod prime");
}

// ---------------------------------------------------------------------------
// linear algebra over F_p

type Mat = Vec<Vec<u64>>;

fn mat_vec(m: &Mat, v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &b)| addm(acc, mulm(a, b, p), p)))
        .collect()
}

/// Reduce rows to reduced row echelon form; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = invm(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let s = mulm(f, rows[r][j], p);
                    rows[i][j] = subm(rows[i][j], s, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Characteristic polynomial by Faddeev-LeVerrier, ascending in lambda:
/// returns c with c[d] = 1 (monic of degree d).
fn char_poly(m: &Mat, p: u64) -> Vec<u64> {
    let d = m.len();
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    let mut a = m.clone();
    for step in 1..=d {
        let tr: u64 = (0..d).fold(0, |acc, i| addm(acc, a[i][i], p));
        let c = subm(0, mulm(tr, invm(step as u64, p), p), p); // -tr/step
        coeffs[d - step] = c;
        if step == d {
            break;
        }
        // a = m * (a + c I)
        let mut b = a.clone();
        for i in 0..d {
            b[i][i] = addm(b[i][i], c, p);
        }
        let mut next = vec![vec![0u64; d]; d];
        for i in 0..d {
            for l in 0..d {
                if m[i][l] == 0 {
                    continue;
                }
                let f = m[i][l];
                for j in 0..d {
                    next[i][j] = addm(next[i][j], mulm(f, b[l][j], p), p);
                }
            }
        }
        a = next;
    }
    coeffs
}

/// Basis of the nullspace of m (deterministic, from RREF free columns).
fn nullspace(m: &Mat, p: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut rows = m.clone();
    let pivots = rref(&mut rows, p);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; d];
        for &c in &pivots {
            s[c] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for free in 0..d {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![0u64; d];
        v[free] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = subm(0, rows[ri][free], p);
        }
        basis.push(v);
    }
    basis
}

/// Simultaneously diagonalize the class matrices over F_p; returns the k
/// common eigenvectors, each normalized so the identity-class entry is 1.
fn common_eigenvectors(mats: &[Mat], k: usize, id_idx: usize, p: u64) -> Result<Vec<Vec<u64>>, CharError> {
    // each subspace is a RREF basis of vectors in F_p^k
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            let d = space.len();
            if d == 1 {
                next.push(space);
                continue;
            }
            // restriction of mat to the subspace
            let mut basis = space.clone();
            let pivots = rref(&mut basis, p);
            let mut restr = vec![vec![0u64; d]; d];
            for (j, v) in basis.iter().enumerate() {
                let mut img = mat_vec(mat, v, p);
                for (m_i, &pc) in pivots.iter().enumerate() {
                    let c = img[pc];
                    if c != 0 {
                        restr[m_i][j] = c;
                        for (x, &bx) in img.iter_mut().zip(&basis[m_i]) {
                            *x = subm(*x, mulm(c, bx, p), p);
                        }
                    }
                }
                if img.iter().any(|&x| x != 0) {
                    return Err(CharError::Splitting(
                        "subspace not invariant under class matrix".into(),
                    ));
                }
            }
            let cp = char_poly(&restr, p);
            let mut covered = 0;
            for lam in 0..p {
                // Horner evaluation of the characteristic polynomial
                let mut val = 0u64;
                for &c in cp.iter().rev() {
                    val = addm(mulm(val, lam, p), c, p);
                }
                if val != 0 {
                    continue;
                }
                let mut shifted = restr.clone();
                for i in 0..d {
                    shifted[i][i] = subm(shifted[i][i], lam, p);
                }
                let ns = nullspace(&shifted, p);
                if ns.is_empty() {
                    continue;
                }
                covered += ns.len();
                let mut lifted: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|coef| {
                        let mut v = vec![0u64; k];
                        for (ci, &c) in coef.iter().enumerate() {
                            for (x, &bx) in v.iter_mut().zip(&basis[ci]) {
                                *x = addm(*x, mulm(c, bx, p), p);
                            }
                        }
                        v
                    })
                    .collect();
                rref(&mut lifted, p);
                next.push(lifted);
            }
            if covered != d {
                return Err(CharError::Splitting(format!(
                    "class matrix not diagonalizable: {covered} of {d} dims"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.len() != 1) {
        return Err(CharError::Splitting(format!(
            "expected {k} one-dimensional spaces, got {}",
            spaces.len()
        )));
    }
    let mut out = Vec::with_capacity(k);
    for s in spaces {
        let v = &s[0];
        if v[id_idx] == 0 {
            return Err(CharError::Splitting("eigenvector vanishes on identity class".into()));
        }
        let f = invm(v[id_idx], p);
        out.push(v.iter().map(|&x| mulm(x, f, p)).collect());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

/// Exact character table: degrees and cyclotomic values in a canonical order.
pub struct CharacterTable {
    pub e: usize,
    pub p: u64,
    pub order: usize,
    pub degrees: Vec<usize>,
    /// values[chi][class]
    pub values: Vec<Vec<CycInt>>,
    /// Frobenius-Schur indicators, in {-1, 0, +1}
    pub fs: Vec<i64>,
}

pub fn dixon_table(group: &BlackBoxGroup, cd: &ClassData) -> Result<CharacterTable, CharError> {
    let k = cd.len();
    let order = group.order();
    let e = cd
        .classes
        .iter()
        .fold(1usize, |acc, c| lcm(acc, group.element_order(c.rep)));
    let p = dixon_prime(e, order);
    let id_idx = cd
        .classes
        .iter()
        .position(|c| c.rep == group.id())
        .expect("identity class");

    let mats: Vec<Mat> = (0..k).map(|i| class_matrix(group, cd, i)).collect();
    let omegas = common_eigenvectors(&mats, k, id_idx, p)?;

    let sizes: Vec<u64> = cd.classes.iter().map(|c| c.size as u64).collect();
    let order_m = (order as u64) % p;

    // degrees: d^2 = |G| / sum_i w_i w_{i'} / h_i
    let max_deg = (order as f64).sqrt() as u64;
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::with_capacity(k); // (degree, values mod p)
    for w in &omegas {
        let mut s = 0u64;
        for i in 0..k {
            let term = mulm(mulm(w[i], w[cd.inverse_perm[i]], p), invm(sizes[i] % p, p), p);
            s = addm(s, term, p);
        }
        let d2 = mulm(order_m, invm(s, p), p);
        let d = (1..=max_deg)
            .find(|&d| mulm(d % p, d % p, p) == d2)
            .ok_or(CharError::Degree(d2, p))?;
        let vals: Vec<u64> = (0..k)
            .map(|i| mulm(mulm(w[i], d % p, p), invm(sizes[i] % p, p), p))
            .collect();
        rows.push((d as usize, vals));
    }

    // power map: class of rep_i^l for l in 0..e
    let pow_class: Vec<Vec<usize>> = cd
        .classes
        .iter()
        .map(|c| {
            let mut out = Vec::with_capacity(e);
            let mut acc = group.id();
            for _ in 0..e {
                out.push(cd.class_of_elem(group, acc));
                acc = group.mul(acc, c.rep);
            }
            out
        })
        .collect();

    // lift values mod p to eigenvalue multiplicity vectors over zeta_e
    let z = primitive_root_of_unity(e as u64, p);
    let zinv = invm(z, p);
    let einv = invm(e as u64 % p, p);
    let mut table: Vec<(usize, Vec<CycInt>)> = Vec::with_capacity(k);
    for (deg, vals) in rows {
        let mut cvals = Vec::with_capacity(k);
        for i in 0..k {
            let mut vec_e = vec![0i64; e];
            for (j, slot) in vec_e.iter_mut().enumerate() {
                let mut s = 0u64;
                let zj = powm(zinv, j as u64, p);
                let mut zjl = 1u64;
                for l in 0..e {
                    s = addm(s, mulm(vals[pow_class[i][l]], zjl, p), p);
                    zjl = mulm(zjl, zj, p);
                }
                let m = mulm(s, einv, p);
                if m > max_deg {
                    return Err(CharError::Splitting(format!(
                        "eigenvalue multiplicity {m} exceeds degree bound"
                    )));
                }
                *slot = m as i64;
            }
            cvals.push(CycInt { e, v: vec_e });
        }
        debug_assert_eq!(cvals[id_idx].as_integer(), Some(deg as i64));
        table.push((deg, cvals));
    }
    table.sort_by(|a, b| {
        (a.0, a.1.iter().map(|c| &c.v).collect::<Vec<_>>())
            .cmp(&(b.0, b.1.iter().map(|c| &c.v).collect::<Vec<_>>()))
    });

    let degrees: Vec<usize> = table.iter().map(|t| t.0).collect();
    let values: Vec<Vec<CycInt>> = table.into_iter().map(|t| t.1).collect();

    // Frobenius-Schur indicators: (1/|G|) sum_i h_i chi(rep_i^2)
    let mut fs = Vec::with_capacity(k);
    for vals in &values {
        let mut total = CycInt::zero(e);
        for i in 0..k {
            let sq = if e >= 3 {
                pow_class[i][2]
            } else {
                // exponent 1 or 2: rep^2 = id
                let sq_elem = group.mul(cd.classes[i].rep, cd.classes[i].rep);
                cd.class_of_elem(group, sq_elem)
            };
            total = total.add(&vals[sq].scale(sizes[i] as i64));
        }
        let n = total
            .as_integer()
            .ok_or_else(|| CharError::Splitting("non-integral indicator sum".into()))?;
        if n % order as i64 != 0 {
            return Err(CharError::BadIndicator(n));
        }
        let nu = n / order as i64;
        if !(-1..=1).contains(&nu) {
            return Err(CharError::BadIndicator(nu));
        }
        fs.push(nu);
    }

    Ok(CharacterTable { e, p, order, degrees, values, fs })
}

impl CharacterTable {
    pub fn num_chars(&self) -> usize {
        self.degrees.len()
    }

    /// Indices of characters equal to their own complex conjugate.
    pub fn real_by_conjugation(&self) -> Vec<usize> {
        (0..self.num_chars())
            .filter(|&c| self.values[c].iter().all(|v| v.equals(&v.conj())))
            .collect()
    }

    /// Real characters, checked both by value conjugation and by the FS
    /// indicator, and against the real class count. Disagreement is an error.
    pub fn real_characters(&self, cd: &ClassData) -> Result<Vec<usize>, CharError> {
        let by_conj = self.real_by_conjugation();
        let by_fs: Vec<usize> = (0..self.num_chars()).filter(|&c| self.fs[c] != 0).collect();
        if by_conj != by_fs {
            return Err(CharError::Splitting(
                "conjugation and FS indicator disagree on real characters".into(),
            ));
        }
        let rc = cd.real_count();
        if by_conj.len() != rc {
            return Err(CharError::RealMismatch { chars: by_conj.len(), classes: rc });
        }
        Ok(by_conj)
    }

    /// Both orthogonality relations, exactly. Returns the first failure.
    pub fn verify_orthogonality(&self, cd: &ClassData) -> Result<(), String> {
        let k = self.num_chars();
        let e = self.e;
        // rows: sum_i h_i chi(g_i) conj(psi(g_i)) = delta * |G|
        for a in 0..k {
            for b in a..k {
                let mut total = CycInt::zero(e);
                for i in 0..k {
                    let t = self.values[a][i]
                        .mul(&self.values[b][i].conj())
                        .scale(cd.classes[i].size as i64);
                    total = total.add(&t);
                }
                let expected = if a == b { self.order as i64 } else { 0 };
                if total.as_integer() != Some(expected) {
                    return Err(format!("row orthogonality fails for characters {a},{b}"));
                }
            }
        }
        // columns: sum_chi chi(g_i) conj(chi(g_j)) = delta * |C(g_i)|
        for i in 0..k {
            for j in i..k {
                let mut total = CycInt::zero(e);
                for c in 0..k {
                    total = total.add(&self.values[c][i].mul(&self.values[c][j].conj()));
                }
                let expected = if i == j {
                    (self.order / cd.classes[i].size) as i64
                } else {
                    0
                };
                if total.as_integer() != Some(expected) {
                    return Err(format!("column orthogonality fails for classes {i},{j}"));
                }
            }
        }
        Ok(())
    }

    /// Multiset of degrees as (degree, multiplicity), ascending.
    pub fn degree_multiset(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &d in &self.degrees {
            *counts.entry(d).or_insert(0) += 1;
        }
        let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::GroupOps;
    use std::sync::Arc;

    /// The Frobenius group of order 21 = C7 : C3, elements (i, j) keyed as
    /// i + 7j, with (i1,j1)(i2,j2) = (i1 + i2*2^j1 mod 7, j1 + j2 mod 3).
    /// This is the independent small-group oracle for the class algebra.
    struct Frob21;
    impl GroupOps for Frob21 {
        fn mul(&self, a: u32, b: u32) -> u32 {
            let (i1, j1) = (a % 7, a / 7);
            let (i2, j2) = (b % 7, b / 7);
            let pow2 = [1u32, 2, 4][j1 as usize];
            (i1 + i2 * pow2) % 7 + 7 * ((j1 + j2) % 3)
        }
        fn inv(&self, a: u32) -> u32 {
            let (i, j) = (a % 7, a / 7);
            let js = (3 - j) % 3;
            let pow2 = [1u32, 2, 4][js as usize];
            ((7 - i) % 7 * pow2) % 7 + 7 * js
        }
        fn id(&self) -> u32 {
            0
        }
    }

    fn frob21() -> BlackBoxGroup {
        BlackBoxGroup::generated(Arc::new(Frob21), vec![1, 7])
    }

    #[test]
    fn frob21_classes_brute_force() {
        let g = frob21();
        assert_eq!(g.order(), 21);
        // brute-force class enumeration (conjugate by every element)
        let mut seen = std::collections::HashSet::new();
        let mut sizes = Vec::new();
        for &x in g.elems() {
            if seen.contains(&x) {
                continue;
            }
            let orbit: std::collections::HashSet<u32> =
                g.elems().iter().map(|&h| g.conj(x, h)).collect();
            sizes.push(orbit.len());
            seen.extend(orbit);
        }
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 3, 7, 7]);
        // engine agrees with brute force
        let cd = ClassData::new(&g);
        let engine_sizes: Vec<usize> = cd.classes.iter().map(|c| c.size).collect();
        assert_eq!(engine_sizes, sizes);
        assert_eq!(cd.real_count(), 1);
    }

    #[test]
    fn structure_constant_identities() {
        let g = frob21();
        let cd = ClassData::new(&g);
        let k = cd.len();
        let mats: Vec<_> = (0..k).map(|i| class_matrix(&g, &cd, i)).collect();
        let id_idx = cd.classes.iter().position(|c| c.rep == g.id()).unwrap();
        for j in 0..k {
            for m in 0..k {
                // identity class: a_{1jm} = delta_{jm}
                assert_eq!(mats[id_idx][j][m], u64::from(j == m));
            }
        }
        // sum over the middle index: sum_j a_{ijm} = |C_i|
        for i in 0..k {
            for m in 0..k {
                let s: u64 = (0..k).map(|j| mats[i][j][m]).sum();
                assert_eq!(s, cd.classes[i].size as u64);
            }
        }
        // cyclic symmetry |C_m| a_{ij m'} = |C_i| a_{jm i'} via brute force
        for i in 0..k {
            for j in 0..k {
                for m in 0..k {
                    let lhs = cd.classes[m].size as u64 * mats[i][j][cd.inverse_perm[m]];
                    let rhs = cd.classes[i].size as u64 * mats[j][m][cd.inverse_perm[i]];
                    // both equal #{(x,y,z) in Ci x Cj x Cm : xyz = 1}
                    let mut count = 0u64;
                    for &x in &cd.classes[i].members {
                        for &y in &cd.classes[j].members {
                            let z = g.inv(g.mul(x, y));
                            if cd.class_of_elem(&g, z) == m {
                                count += 1;
                            }
                        }
                    }
                    assert_eq!(lhs, count);
                    assert_eq!(rhs, count);
                }
            }
        }
    }

    #[test]
    fn dixon_on_frob21() {
        let g = frob21();
        let cd = ClassData::new(&g);
        let table = dixon_table(&g, &cd).unwrap();
        assert_eq!(table.degrees, vec![1, 1, 1, 3, 3]);
        table.verify_orthogonality(&cd).unwrap();
        let real = table.real_characters(&cd).unwrap();
        assert_eq!(real.len(), 1);
        assert_eq!(table.degrees[real[0]], 1);
        assert_eq!(table.fs[real[0]], 1); // principal character
    }

    #[test]
    fn dixon_on_trivial_group() {
        struct Trivial;
        impl GroupOps for Trivial {
            fn mul(&self, _: u32, _: u32) -> u32 {
                0
            }
            fn inv(&self, _: u32) -> u32 {
                0
            }
            fn id(&self) -> u32 {
                0
            }
        }
        let g = BlackBoxGroup::generated(Arc::new(Trivial), vec![]);
        let cd = ClassData::new(&g);
        let table = dixon_table(&g, &cd).unwrap();
        assert_eq!(table.degrees, vec![1]);
        table.verify_orthogonality(&cd).unwrap();
    }

    #[test]
    fn dixon_on_s3_style_group() {
        // Frobenius group of order 6 (= S3) through the same semidirect recipe
        struct Frob6;
        impl GroupOps for Frob6 {
            fn mul(&self, a: u32, b: u32) -> u32 {
                let (i1, j1) = (a % 3, a / 3);
                let (i2, j2) = (b % 3, b / 3);
                let tw = [1u32, 2][j1 as usize];
                (i1 + i2 * tw) % 3 + 3 * ((j1 + j2) % 2)
            }
            fn inv(&self, a: u32) -> u32 {
                let (i, j) = (a % 3, a / 3);
                let js = (2 - j) % 2;
                let tw = [1u32, 2][js as usize];
                ((3 - i) % 3 * tw) % 3 + 3 * js
            }
            fn id(&self) -> u32 {
                0
            }
        }
        let g = BlackBoxGroup::generated(Arc::new(Frob6), vec![1, 3]);
        let cd = ClassData::new(&g);
        let table = dixon_table(&g, &cd).unwrap();
        assert_eq!(table.degrees, vec![1, 1, 2]);
        table.verify_orthogonality(&cd).unwrap();
        // every class of S3 is real, so all three characters are real
        assert_eq!(table.real_characters(&cd).unwrap().len(), 3);
        assert_eq!(table.fs, vec![1, 1, 1]);
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        // phi(168) = 48
        assert_eq!(cyclotomic_poly(168).len(), 49);
    }

    #[test]
    fn cycint_relations() {
        // 1 + zeta_3 + zeta_3^2 = 0
        let s = CycInt { e: 3, v: vec![1, 1, 1] };
        assert_eq!(s.as_integer(), Some(0));
        // zeta_4 * zeta_4 = -1
        let i = CycInt { e: 4, v: vec![0, 1, 0, 0] };
        assert_eq!(i.mul(&i).as_integer(), Some(-1));
        // conj(zeta_e) * zeta_e = 1
        let z = CycInt { e: 12, v: { let mut v = vec![0; 12]; v[1] = 1; v } };
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(1));
    }
}
