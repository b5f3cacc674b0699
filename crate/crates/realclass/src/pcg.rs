//! Polycyclic presentations: parsing, collection from the left, consistency
//! checking, group construction, and fingerprint comparison.
//!
//! The input syntax is the interactive-session style the presentation was
//! published in: `>` prompt prefixes, a `PolycyclicGroup < gens | rels >;`
//! header, power relations `g^k` or `g^k = word`, and conjugation relations
//! `h^g = word` with `*`-separated words. Conjugation relations must
//! conjugate a later generator by an earlier one; omitted pairs are taken to
//! commute, which the consistency check and the fingerprint comparison
//! validate after the fact.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::chars::{dixon_table, ClassData};
use crate::engine::{self, BlackBoxGroup, GroupOps};
use crate::report::Check;

#[derive(Debug, Error)]
pub enum PcError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("consistency: {0}")]
    Inconsistent(String),
    #[error("character table on presented group: {0}")]
    Chars(String),
}

/// A word in the generators: (generator index, positive exponent) pairs.
pub type Word = Vec<(usize, u32)>;

/// A parsed polycyclic presentation in the printed generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPresentation {
    pub gens: Vec<String>,
    /// relative order of each generator, from its power relation
    pub rel_orders: Vec<u32>,
    /// power_words[i]: the word equal to gens[i]^rel_orders[i]
    pub power_words: Vec<Word>,
    /// conj[(i, j)] with i > j: the word equal to gens[i]^gens[j]
    pub conj: HashMap<(usize, usize), Word>,
}

// ---------------------------------------------------------------------------
// lexer / parser

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Num(u32),
    Caret,
    Star,
    Eq,
    Comma,
    Bar,
    Lt,
    Gt,
    Semi,
    Assign,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>, // token, line, col
    pos: usize,
}

fn lex(text: &str) -> Result<Lexer, PcError> {
    let mut toks = Vec::new();
    for (li, raw_line) in text.lines().enumerate() {
        // strip interactive prompt prefixes
        let line = raw_line.trim_start();
        let (line, base) = if let Some(rest) = line.strip_prefix('>') {
            (rest, raw_line.len() - line.len() + 1)
        } else {
            (line, raw_line.len() - line.len())
        };
        let bytes: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            let col = base + i + 1;
            let err = |msg: String| PcError::Parse { line: li + 1, col, msg };
            match c {
                ' ' | '\t' => i += 1,
                '^' => {
                    toks.push((Tok::Caret, li + 1, col));
                    i += 1;
                }
                '*' => {
                    toks.push((Tok::Star, li + 1, col));
                    i += 1;
                }
                '=' => {
                    toks.push((Tok::Eq, li + 1, col));
                    i += 1;
                }
                ',' => {
                    toks.push((Tok::Comma, li + 1, col));
                    i += 1;
                }
                '|' => {
                    toks.push((Tok::Bar, li + 1, col));
                    i += 1;
                }
                '<' => {
                    toks.push((Tok::Lt, li + 1, col));
                    i += 1;
                }
                '>' => {
                    toks.push((Tok::Gt, li + 1, col));
                    i += 1;
                }
                ';' => {
                    toks.push((Tok::Semi, li + 1, col));
                    i += 1;
                }
                ':' => {
                    if bytes.get(i + 1) == Some(&'=') {
                        toks.push((Tok::Assign, li + 1, col));
                        i += 2;
                    } else {
                        return Err(err("expected ':='".into()));
                    }
                }
                '0'..='9' => {
                    let mut n = 0u32;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        n = n * 10 + bytes[i].to_digit(10).unwrap();
                        i += 1;
                    }
                    toks.push((Tok::Num(n), li + 1, col));
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                        i += 1;
                    }
                    let word: String = bytes[start..i].iter().collect();
                    toks.push((Tok::Ident(word), li + 1, col));
                }
                other => return Err(err(format!("unexpected character '{other}'"))),
            }
        }
    }
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or(self.toks.last())
            .map(|t| (t.1, t.2))
            .unwrap_or((1, 1))
    }

    fn err(&self, msg: impl Into<String>) -> PcError {
        let (line, col) = self.here();
        PcError::Parse { line, col, msg: msg.into() }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), PcError> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => {
                self.pos -= 1;
                Err(self.err(format!("expected {t:?}, found {got:?}")))
            }
        }
    }

    fn ident(&mut self) -> Result<String, PcError> {
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            got => {
                self.pos -= 1;
                Err(self.err(format!("expected identifier, found {got:?}")))
            }
        }
    }
}

/// Parse a presentation from the published session text.
pub fn parse(text: &str) -> Result<PcPresentation, PcError> {
    let mut lx = lex(text)?;

    // optional "name :=" header, then the PolycyclicGroup keyword
    if matches!(lx.peek(), Some(Tok::Ident(_)))
        && lx.toks.get(lx.pos + 1).map(|t| &t.0) == Some(&Tok::Assign)
    {
        lx.next();
        lx.next();
    }
    let kw = lx.ident()?;
    if kw != "PolycyclicGroup" {
        return Err(lx.err(format!("expected PolycyclicGroup, found {kw}")));
    }
    lx.expect(Tok::Lt)?;

    let mut gens: Vec<String> = Vec::new();
    loop {
        gens.push(lx.ident()?);
        match lx.next() {
            Some(Tok::Comma) => continue,
            Some(Tok::Bar) => break,
            got => {
                lx.pos -= 1;
                return Err(lx.err(format!("expected ',' or '|', found {got:?}")));
            }
        }
    }
    let index: HashMap<&str, usize> =
        gens.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
    let lookup = |lx: &Lexer, name: &str| -> Result<usize, PcError> {
        index
            .get(name)
            .copied()
            .ok_or_else(|| lx.err(format!("unknown generator {name}")))
    };

    let mut rel_orders: Vec<Option<u32>> = vec![None; gens.len()];
    let mut power_words: Vec<Word> = vec![Vec::new(); gens.len()];
    let mut conj: HashMap<(usize, usize), Word> = HashMap::new();

    let parse_word = |lx: &mut Lexer| -> Result<Word, PcError> {
        let mut w: Word = Vec::new();
        loop {
            let name = lx.ident()?;
            let g = lookup(lx, &name)?;
            let e = if lx.peek() == Some(&Tok::Caret) {
                lx.next();
                match lx.next() {
                    Some(Tok::Num(n)) => n,
                    got => {
                        lx.pos -= 1;
                        return Err(lx.err(format!("expected exponent, found {got:?}")));
                    }
                }
            } else {
                1
            };
            w.push((g, e));
            if lx.peek() == Some(&Tok::Star) {
                lx.next();
            } else {
                return Ok(w);
            }
        }
    };

    loop {
        // relation: base ^ (number | generator) [= word]
        let base_name = lx.ident()?;
        let base = lookup(&lx, &base_name)?;
        lx.expect(Tok::Caret)?;
        match lx.next() {
            Some(Tok::Num(k)) => {
                if k < 2 {
                    return Err(lx.err(format!("relative order {k} of {base_name} must be >= 2")));
                }
                if rel_orders[base].is_some() {
                    return Err(lx.err(format!("duplicate power relation for {base_name}")));
                }
                rel_orders[base] = Some(k);
                if lx.peek() == Some(&Tok::Eq) {
                    lx.next();
                    power_words[base] = parse_word(&mut lx)?;
                }
            }
            Some(Tok::Ident(by_name)) => {
                let by = lookup(&lx, &by_name)?;
                if by >= base {
                    return Err(lx.err(format!(
                        "conjugation {base_name}^{by_name} must act on a later generator"
                    )));
                }
                lx.expect(Tok::Eq)?;
                let w = parse_word(&mut lx)?;
                if conj.insert((base, by), w).is_some() {
                    return Err(lx.err(format!("duplicate relation {base_name}^{by_name}")));
                }
            }
            got => {
                lx.pos -= 1;
                return Err(lx.err(format!("expected exponent or generator, found {got:?}")));
            }
        }
        match lx.next() {
            Some(Tok::Comma) => continue,
            Some(Tok::Gt) => break,
            got => {
                lx.pos -= 1;
                return Err(lx.err(format!("expected ',' or '>', found {got:?}")));
            }
        }
    }
    lx.expect(Tok::Semi)?;
    if let Some(t) = lx.peek() {
        return Err(lx.err(format!("trailing input after ';': {t:?}")));
    }

    let rel_orders: Vec<u32> = rel_orders
        .into_iter()
        .enumerate()
        .map(|(i, o)| {
            o.ok_or(PcError::Parse {
                line: 1,
                col: 1,
                msg: format!("no power relation for generator {}", gens[i]),
            })
        })
        .collect::<Result<_, _>>()?;

    let pres = PcPresentation { gens, rel_orders, power_words, conj };
    // collection terminates only if every relation rewrites into strictly
    // later generators
    for (&(i, j), w) in &pres.conj {
        for &(g, _) in w {
            if g < j {
                return Err(PcError::Parse {
                    line: 1,
                    col: 1,
                    msg: format!(
                        "relation {}^{} involves the earlier generator {}",
                        pres.gens[i], pres.gens[j], pres.gens[g]
                    ),
                });
            }
        }
    }
    for (i, w) in pres.power_words.iter().enumerate() {
        for &(g, _) in w {
            if g <= i {
                return Err(PcError::Parse {
                    line: 1,
                    col: 1,
                    msg: format!(
                        "power relation for {} involves the non-later generator {}",
                        pres.gens[i], pres.gens[g]
                    ),
                });
            }
        }
    }
    Ok(pres)
}

/// Render back to the session syntax; `parse(pretty(p)) == p`.
pub fn pretty(pres: &PcPresentation) -> String {
    let mut rels: Vec<String> = Vec::new();
    let word = |w: &Word| -> String {
        w.iter()
            .map(|&(g, e)| {
                if e == 1 {
                    pres.gens[g].clone()
                } else {
                    format!("{}^{}", pres.gens[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    };
    for (i, g) in pres.gens.iter().enumerate() {
        if pres.power_words[i].is_empty() {
            rels.push(format!("{g}^{}", pres.rel_orders[i]));
        } else {
            rels.push(format!("{g}^{}={}", pres.rel_orders[i], word(&pres.power_words[i])));
        }
    }
    let mut keys: Vec<(usize, usize)> = pres.conj.keys().copied().collect();
    keys.sort_unstable();
    for (i, j) in keys {
        rels.push(format!("{}^{}={}", pres.gens[i], pres.gens[j], word(&pres.conj[&(i, j)])));
    }
    format!(
        "g := PolycyclicGroup < {} |\n  {} >;\n",
        pres.gens.join(","),
        rels.join(",\n  ")
    )
}

// ---------------------------------------------------------------------------
// collection

impl PcPresentation {
    fn conj_word(&self, i: usize, j: usize) -> Word {
        self.conj.get(&(i, j)).cloned().unwrap_or_else(|| vec![(i, 1)])
    }

    /// Parse a standalone `*`-separated word such as `x1*x1*c^3`.
    pub fn parse_word(&self, text: &str) -> Result<Word, PcError> {
        let mut w: Word = Vec::new();
        for (fi, factor) in text.split('*').enumerate() {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e.trim().parse().map_err(|_| PcError::Parse {
                        line: 1,
                        col: fi + 1,
                        msg: format!("bad exponent in '{factor}'"),
                    })?;
                    (n.trim(), exp)
                }
                None => (factor, 1),
            };
            let g = self
                .gens
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| PcError::Parse {
                    line: 1,
                    col: fi + 1,
                    msg: format!("unknown generator {name}"),
                })?;
            // negative exponents fold through the finite relative order
            let o = self.rel_orders[g] as i64;
            let e = exp.rem_euclid(o) as u32;
            if e > 0 {
                w.push((g, e));
            }
        }
        Ok(w)
    }

    /// Collection from the left: rewrite at the leftmost violation until the
    /// word is a normal form s^a c^b x1^e ... with exponents below the
    /// relative orders.
    pub fn collect(&self, word: &Word) -> Vec<u32> {
        let k = self.gens.len();
        let mut w: Word = word.iter().copied().filter(|&(_, e)| e > 0).collect();
        loop {
            // merge adjacent equal generators
            let mut merged: Word = Vec::with_capacity(w.len());
            for &(g, e) in &w {
                match merged.last_mut() {
                    Some((lg, le)) if *lg == g => *le += e,
                    _ => merged.push((g, e)),
                }
            }
            w = merged;

            // leftmost overflow: exponent at or above the relative order
            let overflow = w.iter().position(|&(g, e)| e >= self.rel_orders[g]);
            // leftmost inversion: a later generator directly before an earlier one
            let inversion = w.windows(2).position(|p| p[0].0 > p[1].0);
            match (overflow, inversion) {
                (Some(oi), Some(vi)) if vi < oi => self.rewrite_inversion(&mut w, vi),
                (Some(oi), _) => self.rewrite_overflow(&mut w, oi),
                (None, Some(vi)) => self.rewrite_inversion(&mut w, vi),
                (None, None) => break,
            }
        }
        let mut nf = vec![0u32; k];
        for &(g, e) in &w {
            debug_assert_eq!(nf[g], 0);
            nf[g] = e;
        }
        nf
    }

    /// g^e with e >= o becomes g^(e-o) * (power word of g).
    fn rewrite_overflow(&self, w: &mut Word, i: usize) {
        let (g, e) = w[i];
        let o = self.rel_orders[g];
        let mut repl: Word = Vec::new();
        if e - o > 0 {
            repl.push((g, e - o));
        }
        repl.extend_from_slice(&self.power_words[g]);
        w.splice(i..=i, repl);
    }

    /// g_i^a g_j^b with i > j becomes g_j * (g_i^(g_j))^a * g_j^(b-1).
    fn rewrite_inversion(&self, w: &mut Word, at: usize) {
        let (gi, a) = w[at];
        let (gj, b) = w[at + 1];
        let cw = self.conj_word(gi, gj);
        let mut repl: Word = vec![(gj, 1)];
        for _ in 0..a {
            repl.extend_from_slice(&cw);
        }
        if b > 1 {
            repl.push((gj, b - 1));
        }
        w.splice(at..=at + 1, repl);
    }

    /// Multiply two normal forms.
    pub fn nf_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut w: Word = Vec::new();
        for (g, &e) in a.iter().enumerate() {
            if e > 0 {
                w.push((g, e));
            }
        }
        for (g, &e) in b.iter().enumerate() {
            if e > 0 {
                w.push((g, e));
            }
        }
        self.collect(&w)
    }

    /// Inverse of a normal form: the last power of the element before it
    /// returns to the identity. Element orders here are tiny, so walking the
    /// cyclic subgroup is cheaper than a division-based inverse.
    pub fn nf_inv(&self, a: &[u32]) -> Vec<u32> {
        let id = vec![0u32; self.gens.len()];
        let mut prev = a.to_vec();
        let mut cur = self.nf_mul(a, a);
        while cur != id {
            prev = cur.clone();
            cur = self.nf_mul(&cur, a);
        }
        prev
    }
}

// ---------------------------------------------------------------------------
// consistency

/// Overlap and sampled-associativity checks. Power overlaps: collecting
/// g^o * h both directly and through g^(o-1) * (g h) must agree; likewise
/// for triple overlaps of generators and random element triples.
pub fn consistency_check(pres: &PcPresentation) -> Result<(), PcError> {
    let k = pres.gens.len();
    let nf_of_gen = |g: usize| {
        let mut v = vec![0u32; k];
        v[g] = 1;
        v
    };
    // generator triple overlaps: (gk gj) gi vs gk (gj gi)
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                let ab_c = pres.nf_mul(&pres.nf_mul(&nf_of_gen(a), &nf_of_gen(b)), &nf_of_gen(c));
                let a_bc = pres.nf_mul(&nf_of_gen(a), &pres.nf_mul(&nf_of_gen(b), &nf_of_gen(c)));
                if ab_c != a_bc {
                    return Err(PcError::Inconsistent(format!(
                        "generator overlap ({} {}) {} differs from {} ({} {})",
                        pres.gens[a], pres.gens[b], pres.gens[c], pres.gens[a], pres.gens[b], pres.gens[c]
                    )));
                }
            }
        }
    }
    // power overlaps: g^o h computed two ways
    for g in 0..k {
        for h in 0..k {
            let o = pres.rel_orders[g];
            let direct = pres.collect(&vec![(g, o), (h, 1)]);
            let mut step = nf_of_gen(h);
            for _ in 0..o {
                step = pres.nf_mul(&nf_of_gen(g), &step);
            }
            if direct != step {
                return Err(PcError::Inconsistent(format!(
                    "power overlap {}^{} * {} is ambiguous",
                    pres.gens[g], o, pres.gens[h]
                )));
            }
        }
    }
    // sampled associativity on full normal forms
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let random_nf = |rng: &mut rand_chacha::ChaCha8Rng| {
        (0..k).map(|g| rng.gen_range(0..pres.rel_orders[g])).collect::<Vec<u32>>()
    };
    for _ in 0..100_000 {
        let a = random_nf(&mut rng);
        let b = random_nf(&mut rng);
        let c = random_nf(&mut rng);
        if pres.nf_mul(&pres.nf_mul(&a, &b), &c) != pres.nf_mul(&a, &pres.nf_mul(&b, &c)) {
            return Err(PcError::Inconsistent(format!(
                "sampled associativity fails at {a:?}, {b:?}, {c:?}"
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// the presented group

/// Fast oracles for the presented group: elements are mixed-radix keys over
/// the exponent vectors; one multiplication is at most a word's worth of
/// precomputed by-generator steps.
pub struct PcOps {
    k: usize,
    orders: Vec<u32>,
    radix: Vec<u32>, // radix[g]: stride of generator g in the key
    /// mul_by_gen[key * k + g] = key of (element * gen g)
    mul_by_gen: Vec<u32>,
    inv: Vec<u32>,
}

impl PcOps {
    pub fn key_of(&self, nf: &[u32]) -> u32 {
        nf.iter().zip(&self.radix).map(|(&e, &r)| e * r).sum()
    }

    pub fn nf_of(&self, key: u32) -> Vec<u32> {
        (0..self.k).map(|g| (key / self.radix[g]) % self.orders[g]).collect()
    }
}

impl GroupOps for PcOps {
    fn mul(&self, a: u32, b: u32) -> u32 {
        let mut acc = a;
        let mut rest = b;
        for g in 0..self.k {
            let e = (rest / self.radix[g]) % self.orders[g];
            rest -= e * self.radix[g];
            for _ in 0..e {
                acc = self.mul_by_gen[acc as usize * self.k + g];
            }
        }
        acc
    }
    fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }
    fn id(&self) -> u32 {
        0
    }
}

pub struct PcGroupFull {
    pub pres: PcPresentation,
    pub group: BlackBoxGroup,
    pc_ops: Arc<PcOps>,
}

/// Construct the group on all exponent vectors, with precomputed
/// by-generator multiplication and inverse tables.
pub fn pc_group(pres: &PcPresentation) -> Result<PcGroupFull, PcError> {
    let k = pres.gens.len();
    let mut radix = vec![0u32; k];
    let mut stride = 1u32;
    for g in (0..k).rev() {
        radix[g] = stride;
        stride *= pres.rel_orders[g];
    }
    let n = stride as usize;

    let mut ops = PcOps {
        k,
        orders: pres.rel_orders.clone(),
        radix,
        mul_by_gen: vec![0; n * k],
        inv: vec![0; n],
    };
    for key in 0..n as u32 {
        let nf = ops.nf_of(key);
        for g in 0..k {
            let mut word: Word = nf
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(gg, &e)| (gg, e))
                .collect();
            word.push((g, 1));
            ops.mul_by_gen[key as usize * k + g] = ops.key_of(&pres.collect(&word));
        }
    }
    for key in 0..n as u32 {
        ops.inv[key as usize] = ops.key_of(&pres.nf_inv(&ops.nf_of(key)));
    }

    let pc_ops = Arc::new(ops);
    let gens: Vec<u32> = (0..k)
        .map(|g| {
            let mut v = vec![0u32; k];
            v[g] = 1;
            pc_ops.key_of(&v)
        })
        .collect();
    let elems: Vec<u32> = (0..n as u32).collect();
    let group = BlackBoxGroup::new(Arc::clone(&pc_ops) as Arc<dyn GroupOps>, elems, gens);
    Ok(PcGroupFull { pres: pres.clone(), group, pc_ops })
}

impl PcGroupFull {
    pub fn ops(&self) -> &PcOps {
        self.pc_ops.as_ref()
    }

    /// The subgroup generated by the order-2 tail generators.
    pub fn sylow2(&self) -> BlackBoxGroup {
        let two_gens: Vec<u32> = (0..self.pres.gens.len())
            .filter(|&g| self.pres.rel_orders[g] == 2)
            .map(|g| {
                let mut v = vec![0u32; self.pres.gens.len()];
                v[g] = 1;
                self.ops().key_of(&v)
            })
            .collect();
        let elems = engine::closure(self.group.ops().as_ref(), &two_gens);
        let gens = engine::small_generating_set(self.group.ops().as_ref(), &elems);
        self.group.subgroup(elems, gens)
    }
}

// ---------------------------------------------------------------------------
// fingerprints

/// Isomorphism-invariant data compared between the presented group and the
/// ring-theoretic construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub order_census: Vec<(usize, usize)>,
    pub real_classes: usize,
    pub sylow2_central_orders: Vec<usize>,
    pub degree_multiset: Vec<(usize, usize)>,
}

pub fn fingerprint(group: &BlackBoxGroup, sylow2: &BlackBoxGroup) -> Result<Fingerprint, PcError> {
    let cd = ClassData::new(group);
    let mut class_sizes: Vec<usize> = cd.classes.iter().map(|c| c.size).collect();
    class_sizes.sort_unstable();
    let table = dixon_table(group, &cd).map_err(|e| PcError::Chars(e.to_string()))?;
    Ok(Fingerprint {
        order: group.order(),
        class_sizes,
        order_census: group.order_census(),
        real_classes: cd.real_count(),
        sylow2_central_orders: sylow2.upper_central_series().iter().map(|s| s.len()).collect(),
        degree_multiset: table.degree_multiset(),
    })
}

/// Field-by-field comparison, one named check per field.
pub fn compare(f1: &Fingerprint, f2: &Fingerprint) -> Vec<Check> {
    vec![
        Check::with_witness(
            "pcg.fp_order",
            "group orders agree",
            f1.order == f2.order,
            format!("{} vs {}", f1.order, f2.order),
        ),
        Check::with_witness(
            "pcg.fp_class_sizes",
            "conjugacy class size multisets agree",
            f1.class_sizes == f2.class_sizes,
            format!("{:?} vs {:?}", f1.class_sizes, f2.class_sizes),
        ),
        Check::with_witness(
            "pcg.fp_order_census",
            "element order censuses agree",
            f1.order_census == f2.order_census,
            format!("{:?} vs {:?}", f1.order_census, f2.order_census),
        ),
        Check::with_witness(
            "pcg.fp_real",
            "real class counts agree",
            f1.real_classes == f2.real_classes,
            format!("{} vs {}", f1.real_classes, f2.real_classes),
        ),
        Check::with_witness(
            "pcg.fp_central_series",
            "Sylow-2 upper central series orders agree",
            f1.sylow2_central_orders == f2.sylow2_central_orders,
            format!("{:?} vs {:?}", f1.sylow2_central_orders, f2.sylow2_central_orders),
        ),
        Check::with_witness(
            "pcg.fp_degrees",
            "character degree multisets agree",
            f1.degree_multiset == f2.degree_multiset,
            format!("{:?} vs {:?}", f1.degree_multiset, f2.degree_multiset),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_path() -> std::path::PathBuf {
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/appendix.pc")
    }

    fn fixture() -> PcPresentation {
        parse(&std::fs::read_to_string(fixture_path()).unwrap()).unwrap()
    }

    #[test]
    fn parse_fixture() {
        let p = fixture();
        assert_eq!(p.gens.len(), 13);
        assert_eq!(p.gens[0], "s");
        assert_eq!(p.gens[12], "z3");
        assert_eq!(p.rel_orders, vec![3, 7, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]);
        // x1^2 = y1
        assert_eq!(p.power_words[2], vec![(5, 1)]);
        // w1^2 = 1
        assert!(p.power_words[8].is_empty());
        // c^s = c^4
        assert_eq!(p.conj[&(1, 0)], vec![(1, 4)]);
    }

    #[test]
    fn pretty_roundtrip() {
        let p = fixture();
        let again = parse(&pretty(&p)).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn parse_errors_carry_location() {
        let e = parse("PolycyclicGroup < a,b | a^2, b^2, b^a = c >;").unwrap_err();
        match e {
            PcError::Parse { line, col, msg } => {
                assert_eq!(line, 1);
                assert!(col > 0);
                assert!(msg.contains("unknown generator"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
        // conjugating an earlier generator by a later one is rejected
        let e = parse("PolycyclicGroup < a,b | a^2, b^2, a^b = a >;").unwrap_err();
        assert!(matches!(e, PcError::Parse { .. }));
    }

    #[test]
    fn collect_examples() {
        let p = fixture();
        // x1 * x1 = y1
        let nf = p.collect(&p.parse_word("x1*x1").unwrap());
        assert_eq!(nf, p.collect(&p.parse_word("y1").unwrap()));
        // c * s = s * c^4
        let cs = p.collect(&p.parse_word("c*s").unwrap());
        let sc4 = p.collect(&p.parse_word("s*c^4").unwrap());
        assert_eq!(cs, sc4);
        // inverse exponents fold: c^-1 = c^6
        assert_eq!(p.parse_word("c^-1").unwrap(), vec![(1, 6)]);
    }

    #[test]
    fn collect_is_homomorphic_sampled() {
        use rand::{Rng, SeedableRng};
        let p = fixture();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..2_000 {
            let mut u: Word = Vec::new();
            let mut v: Word = Vec::new();
            for _ in 0..rng.gen_range(1..8) {
                u.push((rng.gen_range(0..13), rng.gen_range(1..3)));
            }
            for _ in 0..rng.gen_range(1..8) {
                v.push((rng.gen_range(0..13), rng.gen_range(1..3)));
            }
            let mut uv = u.clone();
            uv.extend_from_slice(&v);
            assert_eq!(p.collect(&uv), p.nf_mul(&p.collect(&u), &p.collect(&v)));
        }
    }

    #[test]
    fn fixture_is_consistent() {
        consistency_check(&fixture()).unwrap();
    }

    #[test]
    fn mutated_relation_is_inconsistent() {
        // corrupt one conjugation relation; the overlap checks must notice
        let mut p = fixture();
        // x2^x1: drop the trailing z-part of the word
        let w = p.conj.get_mut(&(3, 2)).unwrap();
        assert!(w.len() > 2);
        w.truncate(2);
        let bad = consistency_check(&p).is_err() || {
            // a consistent-looking mutation must still change the group
            match pc_group(&p) {
                Ok(g) => {
                    let cd = ClassData::new(&g.group);
                    cd.len() != 33 || cd.real_count() != 3
                }
                Err(_) => true,
            }
        };
        assert!(bad);
    }

    #[test]
    fn presented_group_basics() {
        let p = fixture();
        let g = pc_group(&p).unwrap();
        assert_eq!(g.group.order(), 43008);
        // generator orders from the presentation
        let key_s = {
            let mut v = vec![0u32; 13];
            v[0] = 1;
            g.ops().key_of(&v)
        };
        let key_c = {
            let mut v = vec![0u32; 13];
            v[1] = 1;
            g.ops().key_of(&v)
        };
        assert_eq!(g.group.element_order(key_s), 3);
        assert_eq!(g.group.element_order(key_c), 7);
        // x1 has order 8: x1^2 = y1, y1^2 = z1, z1^2 = 1
        let key_x1 = {
            let mut v = vec![0u32; 13];
            v[2] = 1;
            g.ops().key_of(&v)
        };
        assert_eq!(g.group.element_order(key_x1), 8);
        // sampled associativity through the tables
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20_000 {
            let a = rng.gen_range(0..43008u32);
            let b = rng.gen_range(0..43008u32);
            let c = rng.gen_range(0..43008u32);
            assert_eq!(
                g.group.mul(g.group.mul(a, b), c),
                g.group.mul(a, g.group.mul(b, c))
            );
            assert_eq!(g.group.mul(a, g.group.inv(a)), 0);
        }
        // Sylow 2-subgroup has order 2048
        let syl = g.sylow2();
        assert_eq!(syl.order(), 2048);
    }
}
