//! The acceptance gate: every headline claim, one pass/fail line each.
//!
//! The suite is exercised end to end through the compiled binary so that the
//! determinism criterion can compare report bytes across runs; the other
//! criteria are read back from the first run's JSON report.

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::Command;

fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/appendix.pc")
}

fn run_verify(json_out: &PathBuf, threads: usize) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_realclass"))
        .args([
            "verify",
            "--all",
            "--fixture",
            fixture_path().to_str().unwrap(),
            "--json",
            json_out.to_str().unwrap(),
            "--threads",
            &threads.to_string(),
        ])
        .output()
        .expect("run verify binary")
}

struct Report {
    pass: HashMap<String, bool>,
    all_pass: bool,
}

fn load_report(path: &PathBuf) -> Report {
    let text = std::fs::read_to_string(path).expect("report json");
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(v["schema"], 1);
    let mut pass = HashMap::new();
    for check in v["checks"].as_array().expect("checks array") {
        pass.insert(
            check["id"].as_str().expect("id").to_string(),
            check["pass"].as_bool().expect("pass"),
        );
    }
    Report { pass, all_pass: v["all_pass"].as_bool().expect("all_pass") }
}

impl Report {
    /// All checks with any of the prefixes exist and pass.
    fn all(&self, prefixes: &[&str]) -> bool {
        prefixes.iter().all(|p| {
            let hits: Vec<&bool> = self
                .pass
                .iter()
                .filter(|(id, _)| id.starts_with(p))
                .map(|(_, ok)| ok)
                .collect();
            !hits.is_empty() && hits.into_iter().all(|&ok| ok)
        })
    }
}

#[test]
fn acceptance() {
    let dir = std::env::temp_dir().join(format!("realclass-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out1 = dir.join("report1.json");
    let out2 = dir.join("report2.json");

    let run1 = run_verify(&out1, 1);
    assert!(
        run1.status.success(),
        "verify --all failed:\n{}{}",
        String::from_utf8_lossy(&run1.stdout),
        String::from_utf8_lossy(&run1.stderr)
    );
    let report = load_report(&out1);

    let run2 = run_verify(&out2, 4);
    assert!(run2.status.success(), "second verify --all failed");
    let bytes1 = std::fs::read(&out1).unwrap();
    let bytes2 = std::fs::read(&out2).unwrap();

    let criteria: Vec<(&str, bool)> = vec![
        (
            "criterion 1: order ladder |Q|=4096, |P|=2048, |G|=43008, |P^i| = 256/32/8",
            report.all(&["ladder."]),
        ),
        (
            "criterion 2: 33 classes; 3 real of sizes 1/7/24 with the stated representatives",
            report.all(&[
                "classes.count",
                "classes.real_count",
                "classes.real_members",
                "classes.partition",
                "classes.orbit_stabilizer",
            ]),
        ),
        (
            "criterion 3: P^2 minus P^3 is two non-real classes of 112; 1+x^2 never conjugate to its inverse",
            report.all(&["classes.middle_layer", "witness."]),
        ),
        (
            "criterion 4: centralizers C_Q(b) = Q^2 and |C_G(b)| = 1792",
            report.all(&["centralizer."]),
        ),
        (
            "criterion 5: P' = Q' = Y, X = [Q,Q^2]Q^4, central series P^4 < P^3 < P^2 < P, type-A quotient",
            report.all(&["structure.", "suzuki.", "fitting.", "action."]),
        ),
        (
            "criterion 6: closed squaring and product formulas match skew multiplication exhaustively",
            report.all(&["formulas."]),
        ),
        (
            "criterion 7: character table with 33 irreducibles, degrees {1,3,7,14,24,56}, 3 real, exact orthogonality",
            report.all(&["chars."]),
        ),
        (
            "criterion 8: X^6 variant of order 344064 with all-involution normal T and >= 4 real classes",
            report.all(&["variant6."]),
        ),
        (
            "criterion 9: presentation parses, is consistent, has order 43008, fingerprints match",
            report.all(&["pcg."]),
        ),
        (
            "criterion 10: verify --all reports are byte-identical across runs and thread counts",
            bytes1 == bytes2 && !bytes1.is_empty(),
        ),
    ];

    let mut failed = 0;
    for (desc, ok) in &criteria {
        println!("[{}] {desc}", if *ok { "PASS" } else { "FAIL" });
        if !ok {
            failed += 1;
        }
    }
    assert!(report.all_pass, "verification report contains failing checks");
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
