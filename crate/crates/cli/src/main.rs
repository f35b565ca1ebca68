//! Command-line front end: group-expression queries, sphere/surface
//! reports, and the verification suites, with optional JSON output and a
//! content-addressed result cache.
//!
//! Exit codes: 0 all checks pass; 1 a verification assertion failed;
//! 2 usage or parse error; 3 resource/time budget exhausted (inconclusive).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use torsion_obstruct::chartab::embed::OrthogonalSummands;
use torsion_obstruct::sphere::{self, MetacyclicParams, Orientation};
use torsion_obstruct::surface::ActionEngine;
use torsion_obstruct::symplectic;
use torsion_obstruct::verify::{self, SuiteResult};
use torsion_obstruct::{exec, Error, FiniteGroup, Result};
use torsion_obstruct_cli::cache::{self, Cache};
use torsion_obstruct_cli::expr::{parse_group, GroupExpr};

/// Conversion rate from `--time-budget` seconds to the engine's
/// deterministic node budget. Budgets count search nodes, not wall-clock
/// time, so runs are reproducible; this constant is calibrated so that a
/// budget of N seconds roughly bounds the search at N seconds on commodity
/// hardware.
const NODES_PER_SECOND: u64 = 5_000_000;

/// Default ceiling on genus searches (strong symmetric genus, spectrum max).
const DEFAULT_GENUS_CAP: usize = 64;

const SCHEMA: &str = "torsion-obstruct/1";

#[derive(Parser)]
#[command(name = "torsion-obstruct", version, about = "Finite group actions on surfaces and spheres: queries and verification suites")]
struct Cli {
    /// Emit reports as JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,
    /// Directory for cached character tables and spectrum reports
    /// (overridden by the TORSION_OBSTRUCT_CACHE environment variable)
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    /// Maximum group order that expressions may build
    #[arg(long, global = true, default_value_t = 200, value_name = "N")]
    cap: usize,
    /// Search budget per command, in seconds (mapped to a deterministic
    /// node budget)
    #[arg(long, global = true, default_value_t = 600, value_name = "SECONDS")]
    time_budget: u64,
    /// Maximum number of worker threads
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Genera in [min, max] on which the group acts faithfully preserving
    /// orientation
    Spectrum {
        expr: String,
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long, default_value_t = DEFAULT_GENUS_CAP)]
        max: usize,
    },
    /// Strong symmetric genus: the least genus >= 2 admitting an action
    Ssg { expr: String },
    /// Does the group embed in SO(n)?
    EmbedsSo { n: usize, expr: String },
    /// Full sphere-action report: SO(3)/SO(4)/SO(5) tests, S^3/S^4
    /// obstructions, minimal SO dimension
    Sphere { expr: String },
    /// Minimal dimension of a sphere with a faithful action of the split
    /// metacyclic group determined by (p, k)
    SphereMinDim {
        p: usize,
        k: usize,
        /// Allow orientation-reversing actions
        #[arg(long)]
        any_orientation: bool,
    },
    /// Verify the order-3^g subgroup witness inside Sp(2g, Z)
    WitnessSp { g: usize },
    /// Run a verification suite
    Verify { suite: Suite },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    LemmaMz,
    ExceptionalGenera,
    S3Groups,
    S4Groups,
    MetacyclicBounds,
    Symplectic,
    CharSanity,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        exec::limit_jobs(jobs);
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidInput(_) | Error::Parse { .. } => 2u8,
                Error::Resource(_) | Error::Timeout(_) => 3,
                _ => 1,
            })
        }
    }
}

fn build_group(cli: &Cli, text: &str) -> Result<(GroupExpr, FiniteGroup)> {
    let e = parse_group(text)?;
    let g = e.build(cli.cap)?;
    Ok((e, g))
}

fn open_cache(cli: &Cli) -> Cache {
    let dir = std::env::var_os("TORSION_OBSTRUCT_CACHE")
        .map(PathBuf::from)
        .or_else(|| cli.cache_dir.clone());
    Cache::open(dir)
}

fn emit<T: Serialize>(cli: &Cli, report: &T, human: &str) -> Result<()> {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(report).map_err(io_err)?);
    } else {
        println!("{human}");
    }
    Ok(())
}

fn io_err(e: serde_json::Error) -> Error {
    Error::internal(format!("serialization failed: {e}"))
}

fn run(cli: &Cli) -> Result<u8> {
    let node_budget = cli.time_budget.saturating_mul(NODES_PER_SECOND);
    match &cli.cmd {
        Cmd::Spectrum { expr, min, max } => {
            if *min < 2 || max < min {
                return Err(Error::invalid("need 2 <= min <= max"));
            }
            let (e, g) = build_group(cli, expr)?;
            let label = e.to_string();
            let cache = open_cache(cli);
            let kind = format!("spectrum-{min}-{max}");
            let fp = cache::fingerprint(&g);
            let payload: Value = match cache.get(&kind, &fp) {
                Some(v) => v,
                None => {
                    let rep = ActionEngine::new(&g)
                        .with_node_budget(node_budget)
                        .genus_spectrum(*min, *max, &label)?;
                    let v = serde_json::to_value(&rep).map_err(io_err)?;
                    cache.put(&kind, &fp, v.clone());
                    v
                }
            };
            let genera: Vec<u64> = payload["genera"]
                .as_array()
                .map(|a| a.iter().filter_map(Value::as_u64).collect())
                .unwrap_or_default();
            emit(
                cli,
                &payload,
                &format!("genus spectrum of {label} in [{min},{max}]: {genera:?}"),
            )?;
            Ok(0)
        }
        Cmd::Ssg { expr } => {
            let (e, g) = build_group(cli, expr)?;
            let label = e.to_string();
            let ssg = ActionEngine::new(&g)
                .with_node_budget(node_budget)
                .strong_symmetric_genus(Some(DEFAULT_GENUS_CAP))?;
            #[derive(Serialize)]
            struct SsgReport {
                schema: &'static str,
                group: String,
                strong_symmetric_genus: usize,
            }
            let rep = SsgReport {
                schema: SCHEMA,
                group: label.clone(),
                strong_symmetric_genus: ssg,
            };
            emit(cli, &rep, &format!("strong symmetric genus of {label}: {ssg}"))?;
            Ok(0)
        }
        Cmd::EmbedsSo { n, expr } => {
            let (e, g) = build_group(cli, expr)?;
            let label = e.to_string();
            let cache = open_cache(cli);
            let table = cache::character_table_cached(&cache, &g)?;
            let summands = OrthogonalSummands::new(&g, &table)?;
            let witness = summands.witness_in_so(&g, *n);
            let degrees = witness.as_ref().map(|w| summands.witness_degrees(w));
            #[derive(Serialize)]
            struct EmbedReport {
                schema: &'static str,
                group: String,
                n: usize,
                embeds: bool,
                witness_degrees: Option<Vec<usize>>,
            }
            let rep = EmbedReport {
                schema: SCHEMA,
                group: label.clone(),
                n: *n,
                embeds: witness.is_some(),
                witness_degrees: degrees.clone(),
            };
            let human = match degrees {
                Some(d) => format!("{label} embeds in SO({n}): true (summand degrees {d:?})"),
                None => format!("{label} embeds in SO({n}): false"),
            };
            emit(cli, &rep, &human)?;
            Ok(0)
        }
        Cmd::Sphere { expr } => {
            let (e, g) = build_group(cli, expr)?;
            let label = e.to_string();
            let rep = sphere::sphere_report(&g, &label)?;
            let mut human = format!("sphere report for {label}:\n");
            for (name, pass) in &rep.tests {
                human.push_str(&format!("  {name}: {pass}\n"));
            }
            match rep.min_so_dim {
                Some(d) => human.push_str(&format!("  minimal SO dimension: {d}\n")),
                None => human.push_str("  minimal SO dimension: not found within bounds\n"),
            }
            for note in &rep.notes {
                human.push_str(&format!("  note: {note}\n"));
            }
            emit(cli, &rep, human.trim_end())?;
            Ok(0)
        }
        Cmd::SphereMinDim {
            p,
            k,
            any_orientation,
        } => {
            let orientation = if *any_orientation {
                Orientation::Any
            } else {
                Orientation::Preserving
            };
            let params = MetacyclicParams::effective(*p, *k, orientation)?;
            let dim = params.min_sphere_dim();
            #[derive(Serialize)]
            struct MinDimReport {
                schema: &'static str,
                p: usize,
                k: usize,
                orientation: String,
                min_sphere_dim: usize,
            }
            let rep = MinDimReport {
                schema: SCHEMA,
                p: *p,
                k: *k,
                orientation: if *any_orientation { "any" } else { "preserving" }.into(),
                min_sphere_dim: dim,
            };
            emit(
                cli,
                &rep,
                &format!("minimal sphere dimension for M({p},{k}): {dim}"),
            )?;
            Ok(0)
        }
        Cmd::WitnessSp { g } => {
            let rep = symplectic::verify_witness(*g)?;
            let mut human = format!(
                "symplectic witness at genus {g}: {} (subgroup order {})\n",
                if rep.pass { "PASS" } else { "FAIL" },
                rep.group_order
            );
            for c in &rep.checks {
                human.push_str(&format!("  verified: {c}\n"));
            }
            emit(cli, &rep, human.trim_end())?;
            Ok(u8::from(!rep.pass))
        }
        Cmd::Verify { suite } => {
            let suites: Vec<SuiteResult> = match suite {
                Suite::LemmaMz => vec![verify::lemma_mz()?],
                Suite::ExceptionalGenera => vec![verify::exceptional_genera()?],
                Suite::S3Groups => vec![verify::s3_groups()?],
                Suite::S4Groups => vec![verify::s4_groups()?],
                Suite::MetacyclicBounds => vec![verify::metacyclic_bounds()?],
                Suite::Symplectic => vec![verify::symplectic()?],
                Suite::CharSanity => vec![verify::char_sanity()?],
                Suite::All => verify::all_suites()?,
            };
            let all_pass = suites.iter().all(|s| s.pass);
            if cli.json {
                if suites.len() == 1 {
                    println!("{}", serde_json::to_string_pretty(&suites[0]).map_err(io_err)?);
                } else {
                    println!("{}", serde_json::to_string_pretty(&suites).map_err(io_err)?);
                }
            } else {
                for s in &suites {
                    println!(
                        "suite {}: {}",
                        s.suite,
                        if s.pass { "PASS" } else { "FAIL" }
                    );
                    for c in &s.checks {
                        println!(
                            "  {} {}: {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        );
                    }
                }
            }
            Ok(u8::from(!all_pass))
        }
    }
}
