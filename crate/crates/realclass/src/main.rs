//! Thin command-line front end over the `realclass` library. All the
//! mathematics lives in the library and its examples; this binary only
//! dispatches subcommands and formats output.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use realclass::chars::{dixon_table, ClassData};
use realclass::engine::BlackBoxGroup;
use realclass::pcg;
use realclass::report::{self, Variant, VerificationReport};

#[derive(Parser)]
#[command(name = "realclass", version, about = "Build and verify a group of order 43008 with exactly three real irreducible characters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run verification checks and print a report.
    Verify(VerifyArgs),
    /// Compute the character table of the main group or a quotient.
    Chartab(ChartabArgs),
    /// Operate on a polycyclic presentation file.
    Pcg(PcgArgs),
    /// Run the full suite and print the JSON report to stdout.
    Report(ReportArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Run everything: main construction, characters, the X^6 variant, and
    /// the presentation cross-check.
    #[arg(long)]
    all: bool,
    /// Keep only checks whose id contains this substring.
    #[arg(long)]
    only: Option<String>,
    /// Which construction to verify: main or x6.
    #[arg(long, default_value = "main")]
    variant: String,
    /// Reuse the binary chain cache under REALCLASS_CACHE_DIR.
    #[arg(long)]
    cache: bool,
    /// Worker threads; accepted for interface stability, must not change
    /// output bytes.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Presentation fixture for the cross-check (with --all).
    #[arg(long, default_value = "fixtures/appendix.pc")]
    fixture: String,
    /// Also write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ChartabArgs {
    /// Print only the degree multiset.
    #[arg(long)]
    degrees: bool,
    /// Print only the real characters.
    #[arg(long)]
    real: bool,
    /// Group to use: "G", "quotient:G/P" or "quotient:G/P4".
    #[arg(long, default_value = "G")]
    group: String,
    /// Write the full table JSON to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reuse the binary chain cache under REALCLASS_CACHE_DIR.
    #[arg(long)]
    cache: bool,
}

#[derive(Args)]
struct PcgArgs {
    #[command(subcommand)]
    cmd: PcgCmd,
}

#[derive(Subcommand)]
enum PcgCmd {
    /// Parse and consistency-check a presentation, and report its order.
    Check { path: PathBuf },
    /// Compare fingerprints of the presented group and the construction.
    Compare { path: PathBuf },
    /// Collect a word to its normal form.
    Collect { path: PathBuf, word: String },
}

#[derive(Args)]
struct ReportArgs {
    /// Presentation fixture for the cross-check.
    #[arg(long, default_value = "fixtures/appendix.pc")]
    fixture: String,
    /// Reuse the binary chain cache under REALCLASS_CACHE_DIR.
    #[arg(long)]
    cache: bool,
    /// Write the JSON report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cache_dir(enabled: bool) -> Option<PathBuf> {
    if !enabled {
        return None;
    }
    Some(
        std::env::var_os("REALCLASS_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("realclass-cache")),
    )
}

fn emit_report(report: &VerificationReport, json_path: Option<&PathBuf>) -> std::io::Result<ExitCode> {
    print!("{}", report.render_text());
    if let Some(path) = json_path {
        std::fs::write(path, report.to_json())?;
    }
    Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_verify(args: &VerifyArgs) -> std::io::Result<ExitCode> {
    let variant = if args.all {
        Variant::All
    } else {
        match args.variant.as_str() {
            "main" => Variant::Main,
            "x6" => Variant::X6,
            other => {
                eprintln!("unknown variant '{other}' (expected main or x6)");
                return Ok(ExitCode::from(2));
            }
        }
    };
    let started = Instant::now();
    let report = report::run_suite(
        variant,
        args.only.as_deref(),
        if args.all { Some(args.fixture.as_str()) } else { None },
        cache_dir(args.cache).as_deref(),
    );
    // timing goes to stderr only, so report bytes stay deterministic
    eprintln!("suite finished in {:.1}s", started.elapsed().as_secs_f64());
    emit_report(&report, args.json.as_ref())
}

#[derive(Serialize)]
struct CharRow {
    degree: usize,
    real: bool,
    indicator: i64,
    /// canonical cyclotomic coefficients per class, degree < phi(e)
    values: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct CharTabOut {
    schema: u32,
    group: String,
    order: usize,
    conductor: usize,
    class_sizes: Vec<usize>,
    degrees: Vec<(usize, usize)>,
    characters: Vec<CharRow>,
}

fn chartab_payload(name: &str, group: &BlackBoxGroup) -> Result<CharTabOut, String> {
    let cd = ClassData::new(group);
    let table = dixon_table(group, &cd).map_err(|e| e.to_string())?;
    let real = table.real_characters(&cd).map_err(|e| e.to_string())?;
    let characters = (0..table.num_chars())
        .map(|c| CharRow {
            degree: table.degrees[c],
            real: real.contains(&c),
            indicator: table.fs[c],
            values: table.values[c].iter().map(|v| v.canonical()).collect(),
        })
        .collect();
    Ok(CharTabOut {
        schema: report::SCHEMA_VERSION,
        group: name.to_string(),
        order: group.order(),
        conductor: table.e,
        class_sizes: cd.classes.iter().map(|c| c.size).collect(),
        degrees: table.degree_multiset(),
        characters,
    })
}

fn cmd_chartab(args: &ChartabArgs) -> std::io::Result<ExitCode> {
    let cons = report::build_construction(cache_dir(args.cache).as_deref());
    let payload = match args.group.as_str() {
        "G" => chartab_payload("G", &cons.group),
        "quotient:G/P" => match cons.group.quotient(&cons.p_in_g()) {
            Ok((q, _)) => chartab_payload("G/P", &q),
            Err(e) => Err(e.to_string()),
        },
        "quotient:G/P4" => match cons.group.quotient(&cons.p4_in_g()) {
            Ok((q, _)) => chartab_payload("G/P4", &q),
            Err(e) => Err(e.to_string()),
        },
        other => {
            eprintln!("unknown group '{other}' (expected G, quotient:G/P or quotient:G/P4)");
            return Ok(ExitCode::from(2));
        }
    };
    let payload = match payload {
        Ok(p) => p,
        Err(e) => {
            eprintln!("character table failed: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    if args.degrees {
        for (d, m) in &payload.degrees {
            println!("degree {d}: {m} characters");
        }
    }
    if args.real {
        for row in payload.characters.iter().filter(|r| r.real) {
            println!("real character of degree {} (indicator {})", row.degree, row.indicator);
        }
    }
    if !args.degrees && !args.real {
        let json = serde_json::to_string_pretty(&payload).expect("serialization");
        match &args.out {
            Some(path) => std::fs::write(path, json)?,
            None => println!("{json}"),
        }
    } else if let Some(path) = &args.out {
        let json = serde_json::to_string_pretty(&payload).expect("serialization");
        std::fs::write(path, json)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_pcg(args: &PcgArgs) -> std::io::Result<ExitCode> {
    let load = |path: &PathBuf| -> Result<pcg::PcPresentation, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        pcg::parse(&text).map_err(|e| e.to_string())
    };
    match &args.cmd {
        PcgCmd::Check { path } => {
            let pres = match load(path) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(2));
                }
            };
            println!("parsed {} generators, relative orders {:?}", pres.gens.len(), pres.rel_orders);
            if let Err(e) = pcg::consistency_check(&pres) {
                eprintln!("{e}");
                return Ok(ExitCode::from(1));
            }
            println!("consistency: ok");
            match pcg::pc_group(&pres) {
                Ok(g) => {
                    println!("order: {}", g.group.order());
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        PcgCmd::Compare { path } => {
            let pres = match load(path) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let cons = report::build_construction(None);
            let checks = report::presentation_checks_parsed(&cons, &pres);
            let report = VerificationReport::from_checks(checks);
            print!("{}", report.render_text());
            Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        PcgCmd::Collect { path, word } => {
            let pres = match load(path) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let w = match pres.parse_word(word) {
                Ok(w) => w,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(ExitCode::from(2));
                }
            };
            let nf = pres.collect(&w);
            let rendered: Vec<String> = nf
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(g, &e)| {
                    if e == 1 {
                        pres.gens[g].clone()
                    } else {
                        format!("{}^{}", pres.gens[g], e)
                    }
                })
                .collect();
            println!("{}", if rendered.is_empty() { "1".to_string() } else { rendered.join("*") });
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_report(args: &ReportArgs) -> std::io::Result<ExitCode> {
    let report = report::run_suite(
        Variant::All,
        None,
        Some(args.fixture.as_str()),
        cache_dir(args.cache).as_deref(),
    );
    let json = report.to_json();
    match &args.out {
        Some(path) => std::fs::write(path, json)?,
        None => println!("{json}"),
    }
    Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Chartab(a) => cmd_chartab(a),
        Cmd::Pcg(a) => cmd_pcg(a),
        Cmd::Report(a) => cmd_report(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("io error: {e}");
            ExitCode::from(2)
        }
    }
}
