//! Command-line front end.
//!
//! Exit codes: 0 success / all checks pass, 1 a check failed or a kernel
//! verdict was negative, 2 usage or parse error, 3 a resource cap was
//! exceeded.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::burau::{eval_braid, gamma_eval, kernel_gamma, kernel_mod2};
use crate::checks::{find_check, registry, CheckContext, CheckRecord, RunConfig, Status};
use crate::conjugation::{
    build_mf, conj_power_check_with, lamplighter_window_check_with, lemma34_check_with,
    parse_fraction,
};
use crate::error::{Error, Result};
use crate::matrix::ProjMat;
use crate::ring::LaurentInt;
use crate::words::parse_word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingChoice {
    Int,
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConjCheck {
    Eq4,
    Lemma34,
    Power,
    Lamp,
}

#[derive(Parser, Debug)]
#[command(
    name = "burau2",
    version,
    about = "Exact verification toolkit for the mod-2 Burau representation of B4"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for results
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Maximum index of the recursive commutator family
    #[arg(long, global = true, default_value_t = 8)]
    family_depth: i64,

    /// Maximum i + k for conjugation power checks
    #[arg(long, global = true, default_value_t = 5)]
    conj_depth: i64,

    /// Largest stabilizer index to enumerate
    #[arg(long, global = true, default_value_t = 3)]
    stab_max: i64,

    /// Element cap for group closures
    #[arg(long, global = true, default_value_t = 1 << 20)]
    closure_cap: usize,

    /// Directory for enumeration caches
    #[arg(long, global = true, env = "BURAU2_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a word as a 3x3 matrix
    Eval {
        /// Word in the grammar: s1 s2 s3 x y t D, ^k, ( ), [ , ]
        word: String,
        #[arg(long, value_enum, default_value_t = RingChoice::F2)]
        ring: RingChoice,
        /// Print the projective canonical representative
        #[arg(long)]
        projective: bool,
    },
    /// Decide kernel membership of a word (exit 1 when not a member)
    Kernel {
        word: String,
        /// Test the projectivized kernel instead of the linear one
        #[arg(long)]
        gamma: bool,
    },
    /// Structure report for the n-th stabilizer subgroup
    Stab { n: i64 },
    /// Conjugating-matrix checks for a parameter f
    Conj {
        /// Fraction in the grammar poly('/'poly)?, e.g. "1", "t^2", "1/1+t"
        #[arg(long)]
        f: String,
        /// Which identity to check; omit to run eq4 plus the determinant
        #[arg(long, value_enum)]
        check: Option<ConjCheck>,
        /// Index arguments: `power i k` or `lamp i w`
        args: Vec<i64>,
    },
    /// Run registered checks by id, or all of them
    Verify {
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
    },
    /// Print the check registry with citations
    ListChecks,
}

impl Cli {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            family_depth: self.family_depth,
            conj_depth: self.conj_depth,
            stab_max_n: self.stab_max,
            closure_cap: self.closure_cap,
            cache_dir: self.cache_dir.clone(),
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    if e.is_usage() {
        2
    } else if e.is_resource() {
        3
    } else {
        1
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success, usage
            // errors on stderr with code 2
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Eval {
            word,
            ring,
            projective,
        } => cmd_eval(cli, word, *ring, *projective),
        Command::Kernel { word, gamma } => cmd_kernel(cli, word, *gamma),
        Command::Stab { n } => cmd_stab(cli, *n),
        Command::Conj { f, check, args } => cmd_conj(cli, f, *check, args),
        Command::Verify { ids, all } => cmd_verify(cli, ids, *all),
        Command::ListChecks => cmd_list_checks(cli),
    }
}

fn cmd_eval(cli: &Cli, word: &str, ring: RingChoice, projective: bool) -> Result<i32> {
    let w = parse_word(word)?;
    let (text, value) = match (ring, projective) {
        (RingChoice::Int, false) => {
            let m = eval_braid::<LaurentInt>(&w)?;
            (m.to_string(), m.to_json())
        }
        (RingChoice::Int, true) => {
            let m = ProjMat::new(eval_braid::<LaurentInt>(&w)?)?;
            (m.to_string(), m.to_json())
        }
        (RingChoice::F2, false) => {
            let m = eval_braid::<crate::ring::LaurentF2>(&w)?;
            (m.to_string(), m.to_json())
        }
        (RingChoice::F2, true) => {
            let m = gamma_eval(&w)?;
            (m.to_string(), m.to_json())
        }
    };
    match cli.format {
        Format::Text => print!("{text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "word": w.to_string(), "matrix": value }))
                .expect("serializable")
        ),
    }
    Ok(0)
}

fn cmd_kernel(cli: &Cli, word: &str, gamma: bool) -> Result<i32> {
    let w = parse_word(word)?;
    let (map, member) = if gamma {
        ("gamma", kernel_gamma(&w)?)
    } else {
        ("mod2", kernel_mod2(&w)?)
    };
    match cli.format {
        Format::Text => {
            let name = if gamma { "ker γ" } else { "ker(β₄⊗F₂)" };
            println!(
                "{w}: {} {name}",
                if member {
                    "member of"
                } else {
                    "NOT a member of"
                }
            );
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(
                &json!({ "word": w.to_string(), "map": map, "member": member })
            )
            .expect("serializable")
        ),
    }
    Ok(if member { 0 } else { 1 })
}

fn cmd_stab(cli: &Cli, n: i64) -> Result<i32> {
    let ctx = CheckContext::new(cli.run_config());
    let table = ctx.stab7(n)?;
    let center = table.center();
    let derived = table.derived_subgroup();
    let exponent = table.exponent();
    let class = table.nilpotency_class();
    let normal_form = crate::groups::normal_form_check(&table, n)?;
    match cli.format {
        Format::Text => {
            println!("Stab(7^({n}))");
            println!("  order:            {}", table.order());
            println!(
                "  center:           order {} (elementary abelian rank {:?})",
                center.len(),
                center.elementary_abelian_2_rank()
            );
            println!(
                "  derived subgroup: order {} (elementary abelian rank {:?})",
                derived.len(),
                derived.elementary_abelian_2_rank()
            );
            println!("  exponent:         {exponent}");
            println!("  nilpotency class: {class:?}");
            println!("  normal form:      {normal_form}");
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "n": n,
                "order": table.order(),
                "center": {
                    "order": center.len(),
                    "elementary_abelian_rank": center.elementary_abelian_2_rank(),
                },
                "derived": {
                    "order": derived.len(),
                    "elementary_abelian_rank": derived.elementary_abelian_2_rank(),
                },
                "exponent": exponent,
                "nilpotency_class": class,
                "normal_form": normal_form,
            }))
            .expect("serializable")
        ),
    }
    Ok(0)
}

fn cmd_conj(cli: &Cli, f: &str, check: Option<ConjCheck>, args: &[i64]) -> Result<i32> {
    let f = parse_fraction(f)?;
    let mf = build_mf(&f)?;
    let depth = cli.conj_depth;
    let mut results: Vec<(String, bool)> = Vec::new();
    match check {
        None | Some(ConjCheck::Eq4) => {
            if check.is_none() {
                results.push(("det = t^2".into(), true)); // enforced at construction
            }
            results.push(("eq4".into(), mf.check_eq4()));
        }
        Some(ConjCheck::Lemma34) => {
            results.push(("lemma34".into(), lemma34_check_with(mf.matrix())?));
        }
        Some(ConjCheck::Power) => {
            let [i, k] = args else {
                return Err(Error::InvalidIndex(
                    "power needs two index arguments: i k".into(),
                ));
            };
            results.push((
                format!("power {i} {k}"),
                conj_power_check_with(mf.matrix(), *i, *k, depth)?,
            ));
        }
        Some(ConjCheck::Lamp) => {
            let [i, w] = args else {
                return Err(Error::InvalidIndex(
                    "lamp needs two index arguments: i w".into(),
                ));
            };
            results.push((
                format!("lamp {i} {w}"),
                lamplighter_window_check_with(mf.matrix(), *i, *w, depth)?,
            ));
        }
    }
    let all_pass = results.iter().all(|(_, ok)| *ok);
    match cli.format {
        Format::Text => {
            for (name, ok) in &results {
                println!(
                    "[{}] {} (f = {})",
                    if *ok { "pass" } else { "FAIL" },
                    name,
                    mf.f()
                );
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "f": mf.f().to_string(),
                "results": results
                    .iter()
                    .map(|(name, ok)| json!({ "check": name, "pass": ok }))
                    .collect::<Vec<_>>(),
            }))
            .expect("serializable")
        ),
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn record_json(r: &CheckRecord) -> serde_json::Value {
    serde_json::to_value(r).expect("serializable")
}

fn cmd_verify(cli: &Cli, ids: &[String], all: bool) -> Result<i32> {
    let selected: Vec<&'static crate::checks::CheckDef> = if all {
        if !ids.is_empty() {
            return Err(Error::InvalidIndex(
                "pass either check ids or --all, not both".into(),
            ));
        }
        registry().iter().collect()
    } else {
        if ids.is_empty() {
            return Err(Error::InvalidIndex(
                "pass at least one check id, or --all".into(),
            ));
        }
        // resolve all ids first so unknown ids fail before any work, then
        // run in registry order
        let mut picked: Vec<&'static crate::checks::CheckDef> = Vec::new();
        for id in ids {
            let def = find_check(id)?;
            if !picked.iter().any(|d| d.id == def.id) {
                picked.push(def);
            }
        }
        picked.sort_by_key(|d| registry().iter().position(|r| r.id == d.id));
        picked
    };
    let ctx = CheckContext::new(cli.run_config());
    let records: Vec<CheckRecord> = selected.iter().map(|def| def.run(&ctx)).collect();
    let mut failed = 0usize;
    let mut resource_limited = 0usize;
    for r in &records {
        if r.status == Status::Fail {
            failed += 1;
        }
        if r.resource_limited {
            resource_limited += 1;
        }
    }
    match cli.format {
        Format::Text => {
            for r in &records {
                let tag = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skip",
                };
                println!("[{tag}] {} ({} ms) {}", r.id, r.elapsed_ms, r.detail);
            }
            println!(
                "{} checks: {} passed, {} failed, {} skipped",
                records.len(),
                records.iter().filter(|r| r.status == Status::Pass).count(),
                failed,
                records
                    .iter()
                    .filter(|r| r.status == Status::Skipped)
                    .count(),
            );
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&records.iter().map(record_json).collect::<Vec<_>>())
                .expect("serializable")
        ),
    }
    Ok(if failed > 0 {
        1
    } else if resource_limited > 0 {
        3
    } else {
        0
    })
}

fn cmd_list_checks(cli: &Cli) -> Result<i32> {
    match cli.format {
        Format::Text => {
            for def in registry() {
                println!("{}\t{}", def.id, def.citation);
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(
                &registry()
                    .iter()
                    .map(|d| json!({ "id": d.id, "citation": d.citation }))
                    .collect::<Vec<_>>()
            )
            .expect("serializable")
        ),
    }
    Ok(0)
}
