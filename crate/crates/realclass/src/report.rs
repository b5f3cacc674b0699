//! Named verification checks and the JSON report format.
//!
//! Every structural claim the crate verifies is recorded as a [`Check`] with
//! a stable id, a human-readable claim, a pass/fail flag, and (on failure) a
//! concrete witness. Reports serialize to versioned JSON and are byte-stable
//! across runs.

use serde::Serialize;

use crate::build::{self, Construction};
use crate::chars::{dixon_table, ClassData};
use crate::engine::BlackBoxGroup;
use crate::pcg;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub claim: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(id: &str, claim: &str, pass: bool) -> Check {
        Check { id: id.to_string(), claim: claim.to_string(), pass, witness: None }
    }

    pub fn with_witness(id: &str, claim: &str, pass: bool, witness: impl Into<String>) -> Check {
        Check {
            id: id.to_string(),
            claim: claim.to_string(),
            pass,
            witness: if pass { None } else { Some(witness.into()) },
        }
    }
}

#[derive(Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub checks: Vec<Check>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn from_checks(checks: Vec<Check>) -> VerificationReport {
        let all_pass = checks.iter().all(|c| c.pass);
        let mut ids = std::collections::HashSet::new();
        for c in &checks {
            assert!(ids.insert(c.id.clone()), "duplicate check id {}", c.id);
        }
        VerificationReport { schema: SCHEMA_VERSION, checks, all_pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{status}] {:<40} {}\n", c.id, c.claim));
            if let Some(w) = &c.witness {
                out.push_str(&format!("       witness: {w}\n"));
            }
        }
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            self.checks.iter().filter(|c| !c.pass).count()
        ));
        out
    }
}

/// Which parts of the suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// The main X^5 construction only.
    Main,
    /// The X^6 extension only.
    X6,
    /// Everything, including the presentation cross-check.
    All,
}

/// Run the verification suite and collect all checks. With a cache
/// directory, the subgroup chain is loaded from (or saved to) a binary
/// cache there instead of being rebuilt by closure.
pub fn run_suite(
    variant: Variant,
    only: Option<&str>,
    pc_fixture: Option<&str>,
    cache_dir: Option<&std::path::Path>,
) -> VerificationReport {
    let mut checks = Vec::new();
    match variant {
        Variant::Main | Variant::All => {
            let cons = build_construction(cache_dir);
            checks.extend(main_checks(&cons));
            checks.extend(character_checks(&cons));
            if variant == Variant::All {
                checks.extend(build::verify_variant6().1);
                if let Some(path) = pc_fixture {
                    checks.extend(presentation_checks(&cons, path));
                }
            }
        }
        Variant::X6 => {
            checks.extend(build::verify_variant6().1);
        }
    }
    if let Some(pat) = only {
        checks.retain(|c| c.id.contains(pat));
    }
    VerificationReport::from_checks(checks)
}

/// Build the main construction, optionally through the binary chain cache.
pub fn build_construction(cache_dir: Option<&std::path::Path>) -> Construction {
    if let Some(dir) = cache_dir {
        let path = dir.join("chain5.bin");
        if let Ok(chain) = build::load_chain(&path) {
            return Construction::from_chain(chain);
        }
        let cons = Construction::build().expect("construction");
        let _ = std::fs::create_dir_all(dir);
        let _ = build::save_chain(&cons.chain, &path);
        return cons;
    }
    Construction::build().expect("construction")
}

/// Structural checks on the X^5 construction: order ladder, classes,
/// centralizers, central series, type-A quotient, closed-form oracles.
pub fn main_checks(cons: &Construction) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(build::verify_order_ladder(&cons.chain, &cons.group));
    checks.extend(build::verify_classes(cons));
    checks.extend(build::verify_centralizers(cons));
    checks.extend(build::verify_structure(cons));
    checks.extend(build::verify_fitting_decompositions(&cons.chain));
    checks.extend(build::verify_irreducible_actions(&cons.chain));
    checks.extend(build::suzuki_type_a_check(&cons.chain));
    checks.extend(build::verify_product_formulas());
    checks.extend(build::verify_nonreality_witness(cons));
    checks
}

/// Character-table checks: 33 irreducibles, degree set, orthogonality,
/// three real characters of degrees 1, 7, 24, indicator agreement.
pub fn character_checks(cons: &Construction) -> Vec<Check> {
    let mut checks = Vec::new();
    let cd = ClassData::new(&cons.group);
    let table = match dixon_table(&cons.group, &cd) {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check::with_witness(
                "chars.table",
                "character table computes",
                false,
                e.to_string(),
            ));
            return checks;
        }
    };
    checks.push(Check::new("chars.count", "33 irreducible characters", table.num_chars() == 33));
    let degset: Vec<usize> = {
        let mut d = table.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    };
    checks.push(Check::with_witness(
        "chars.degree_set",
        "character degrees are {1,3,7,14,24,56}",
        degset == vec![1, 3, 7, 14, 24, 56],
        format!("{degset:?}"),
    ));
    let sum_sq: usize = table.degrees.iter().map(|d| d * d).sum();
    checks.push(Check::with_witness(
        "chars.sum_of_squares",
        "sum of squared degrees equals 43008",
        sum_sq == 43008,
        sum_sq.to_string(),
    ));
    let orth = table.verify_orthogonality(&cd);
    checks.push(Check::with_witness(
        "chars.orthogonality",
        "both orthogonality relations hold exactly",
        orth.is_ok(),
        orth.err().unwrap_or_default(),
    ));
    match table.real_characters(&cd) {
        Ok(real) => {
            let mut real_degs: Vec<usize> = real.iter().map(|&i| table.degrees[i]).collect();
            real_degs.sort_unstable();
            checks.push(Check::with_witness(
                "chars.real",
                "exactly 3 real characters, of degrees 1, 7 and 24",
                real_degs == vec![1, 7, 24],
                format!("{real_degs:?}"),
            ));
        }
        Err(e) => checks.push(Check::with_witness(
            "chars.real",
            "exactly 3 real characters, of degrees 1, 7 and 24",
            false,
            e.to_string(),
        )),
    }
    let linear = table.degrees.iter().filter(|&&d| d == 1).count();
    let derived = cons.group.derived_subgroup();
    checks.push(Check::with_witness(
        "chars.linear_count",
        "number of linear characters equals the index of the derived subgroup",
        linear == cons.group.order() / derived.len(),
        format!("linear {}, index {}", linear, cons.group.order() / derived.len()),
    ));
    // involution-count identity: sum over chi of nu(chi) * chi(1)
    let fs_sum: i64 = table
        .fs
        .iter()
        .zip(&table.degrees)
        .map(|(&nu, &d)| nu * d as i64)
        .sum();
    let invols = cons.group.involutions().len() as i64;
    checks.push(Check::with_witness(
        "chars.fs_involutions",
        "sum of indicator-weighted degrees equals 1 + #involutions",
        fs_sum == invols + 1,
        format!("sum {fs_sum}, involutions {invols}"),
    ));
    // lifted table of G/P^4 has exactly 3 real characters
    checks.push(quotient_real_check(
        "chars.gp4_real",
        "the order-5376 quotient by the last central term has 3 real characters",
        &cons.group,
        &cons.p4_in_g(),
        3,
    ));
    // G/P is the Frobenius group of order 21 with one real character
    checks.push(quotient_real_check(
        "chars.gp_real",
        "the order-21 quotient has only the principal real character",
        &cons.group,
        &cons.p_in_g(),
        1,
    ));
    checks
}

fn quotient_real_check(
    id: &str,
    claim: &str,
    group: &BlackBoxGroup,
    normal: &[u32],
    expected_real: usize,
) -> Check {
    match group.quotient(normal) {
        Ok((q, _)) => {
            let cd = ClassData::new(&q);
            match dixon_table(&q, &cd) {
                Ok(t) => match t.real_characters(&cd) {
                    Ok(real) => Check::with_witness(
                        id,
                        claim,
                        real.len() == expected_real,
                        format!("{} real characters", real.len()),
                    ),
                    Err(e) => Check::with_witness(id, claim, false, e.to_string()),
                },
                Err(e) => Check::with_witness(id, claim, false, e.to_string()),
            }
        }
        Err(e) => Check::with_witness(id, claim, false, e.to_string()),
    }
}

/// Parse the polycyclic fixture, check consistency, and compare fingerprints
/// with the ring-theoretic construction.
pub fn presentation_checks(cons: &Construction, path: &str) -> Vec<Check> {
    let mut checks = Vec::new();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check::with_witness(
                "pcg.parse",
                "presentation fixture parses",
                false,
                e.to_string(),
            ));
            return checks;
        }
    };
    let pres = match pcg::parse(&text) {
        Ok(p) => p,
        Err(e) => {
            checks.push(Check::with_witness(
                "pcg.parse",
                "presentation fixture parses",
                false,
                e.to_string(),
            ));
            return checks;
        }
    };
    checks.push(Check::new("pcg.parse", "presentation fixture parses", true));
    checks.extend(presentation_checks_parsed(cons, &pres));
    checks
}

/// Checks on an already-parsed presentation against the construction.
pub fn presentation_checks_parsed(cons: &Construction, pres: &pcg::PcPresentation) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.push(Check::new(
        "pcg.generators",
        "13 generators with relative orders (3,7,2,...,2)",
        pres.gens.len() == 13
            && pres.rel_orders == vec![3, 7, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    ));
    let consistency = pcg::consistency_check(&pres);
    checks.push(Check::with_witness(
        "pcg.consistency",
        "overlap conditions and sampled associativity hold",
        consistency.is_ok(),
        consistency.as_ref().err().map(|e| e.to_string()).unwrap_or_default(),
    ));
    if consistency.is_err() {
        return checks;
    }
    let pc_group = match pcg::pc_group(&pres) {
        Ok(g) => g,
        Err(e) => {
            checks.push(Check::with_witness(
                "pcg.order",
                "presented group has order 43008",
                false,
                e.to_string(),
            ));
            return checks;
        }
    };
    checks.push(Check::with_witness(
        "pcg.order",
        "presented group has order 43008",
        pc_group.group.order() == 43008,
        pc_group.group.order().to_string(),
    ));
    match (
        pcg::fingerprint(&cons.group, &cons.sylow2()),
        pcg::fingerprint(&pc_group.group, &pc_group.sylow2()),
    ) {
        (Ok(f1), Ok(f2)) => checks.extend(pcg::compare(&f1, &f2)),
        (r1, r2) => {
            let msg = [r1.err(), r2.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            checks.push(Check::with_witness(
                "pcg.fingerprint",
                "fingerprints of both groups compute",
                false,
                msg,
            ));
        }
    }
    checks
}
