//! `legatlas`: verify the bundled tables and evaluate the underlying
//! dimension formulas from the command line.
//!
//! Exit status: 0 when everything checked passes, 1 when a check fails,
//! 2 for usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use atlas::theorems::{verify_theorems_with, TheoremReport};
use atlas::{bundled_dataset, bundled_table, load_dataset_str, verify_all, CheckStatus, ExpandOptions};
use clap::{Parser, Subcommand};
use exactmat::{jordan_type, membership_check, ExactMatrix};
use folding::{builtin_folding, fiber_over, FoldingName};
use niporb::{z_dim_from_label, ClassicalFamily, OrbitLabel};
use repdim::{orbit_dim, weyl_dim, RepError};
use rootcore::{AlgebraName, ReductiveType, RootSystem, WeightVector};

#[derive(Parser)]
#[command(name = "legatlas", version, about = "Legendrian isotropy pairs: tables, checks and dimension formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the seven per-row checks on the bundled tables (or a JSONL file).
    VerifyTables {
        /// Only this table (1–4); the diagonal pairs are included when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        table: Option<u8>,
        #[arg(long)]
        json: bool,
        /// Each free parameter runs over min..=min+K.
        #[arg(long, default_value_t = ExpandOptions::default().params_max)]
        params_max: i64,
        /// A JSONL dataset to check instead of the bundled tables.
        #[arg(long, conflicts_with = "table")]
        file: Option<PathBuf>,
    },
    /// Check that the classification item lists are covered exactly.
    VerifyTheorems {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Dimension of the closed orbit of the highest weight line in P(V_λ).
    DimOrbit {
        /// `E7`, `A1+G2`, `so(7)`, ...
        #[arg(long = "type")]
        ty: String,
        /// Fundamental coordinates; factors separated by `;` (e.g. `2;1,0`).
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Dimension of the irreducible module V_λ.
    WeylDim {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Dimension of a projectivized nilpotent orbit.
    ZDim {
        #[arg(long = "type")]
        ty: String,
        /// `long`, `short`, `min+min`, `partition:3,2^2`, `bc:2A1`.
        #[arg(long)]
        label: String,
    },
    /// Jordan type of a nilpotent matrix, with an optional membership test.
    Jordan {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        family: Option<ClassicalFamily>,
    },
    /// Source roots restricting to a target root under a folding.
    Fold {
        /// `A5->C3`, `D4->B3`, `E6->F4`, `D4->G2`, `B3->G2`.
        #[arg(long)]
        name: FoldingName,
        /// Target simple-root coordinates, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        fiber: String,
    },
    /// Dimension bookkeeping for the (G2, A1) rational curve.
    G2Curve {
        #[arg(long)]
        json: bool,
    },
}

/// Usage or input error (exit status 2).
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("legatlas: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<bool, Usage> {
    match cmd {
        Command::VerifyTables { table, json, params_max, file } => {
            let opts = ExpandOptions { params_max, ..ExpandOptions::default() };
            let records = match (&file, table) {
                (Some(path), _) => atlas::load_dataset_with(path, &opts)?,
                (None, Some(n)) => load_dataset_str(bundled_table(n as usize).expect("range-checked"), &opts)?,
                (None, None) => bundled_dataset(&opts)?,
            };
            let reports = verify_all(&records);
            let passed = reports.iter().all(|r| r.passed);
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    let tag = if r.passed { "PASS" } else { "FAIL" };
                    println!("{tag} {:<20} {} ⊃ {}", r.id, r.g, r.h);
                    for c in r.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
                        println!("     ({}) {}: expected {}, computed {}", c.check.letter(), c.check, c.expected, c.computed);
                        if let Some(n) = &c.note {
                            println!("         {n}");
                        }
                    }
                }
                let failed = reports.iter().filter(|r| !r.passed).count();
                println!("{} rows checked, {failed} failed", reports.len());
            }
            Ok(passed)
        }
        Command::VerifyTheorems { json, file } => {
            let opts = ExpandOptions::default();
            let records = match &file {
                Some(path) => atlas::load_dataset_with(path, &opts)?,
                None => bundled_dataset(&opts)?,
            };
            let report = verify_theorems_with(&records, &verify_all(&records));
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_theorems(&report);
            }
            Ok(report.passed)
        }
        Command::DimOrbit { ty, weight } => {
            let (rs, w) = weight_input(&ty, &weight)?;
            let d = match orbit_dim(&rs, &w) {
                Err(RepError::ZeroWeight) => 0,
                other => other?,
            };
            println!("{d}");
            Ok(true)
        }
        Command::WeylDim { ty, weight } => {
            let (rs, w) = weight_input(&ty, &weight)?;
            println!("{}", weyl_dim(&rs, &w)?);
            Ok(true)
        }
        Command::ZDim { ty, label } => {
            let t = parse_type(&ty)?;
            let label: OrbitLabel = label.parse()?;
            println!("{}", z_dim_from_label(&t, &label)?);
            Ok(true)
        }
        Command::Jordan { file, family } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Usage(format!("{}: {e}", file.display())))?;
            let m: ExactMatrix = text.parse()?;
            println!("{}", jordan_type(&m)?);
            match family {
                Some(f) => {
                    let ok = membership_check(&m, f)?;
                    println!("in {f:?}: {ok}");
                    Ok(ok)
                }
                None => Ok(true),
            }
        }
        Command::Fold { name, fiber } => {
            let f = builtin_folding(name)?;
            let w = WeightVector::simple(0, &parse_coords(&fiber)?);
            for b in fiber_over(&f, &w)? {
                let cs: Vec<String> = b.iter().map(i64::to_string).collect();
                println!("{}", cs.join(","));
            }
            Ok(true)
        }
        Command::G2Curve { json } => {
            let r = atlas::curve::verify_g2_curve();
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!(
                    "degree {}: h0(O({})) + h0(O(4)) + h0(O(6)) = {} + {} + {} = {}; dim G2 − dim A1 = {}",
                    r.degree, r.degree, r.h0_contact, r.h0_s[0], r.h0_s[1], r.family_dim, r.dim_m
                );
            }
            Ok(r.passed)
        }
    }
}

fn print_theorems(report: &TheoremReport) {
    for l in &report.lists {
        let tag = if l.passed { "PASS" } else { "FAIL" };
        println!("{tag} {} ({} items)", l.list, l.items.len());
        for i in &l.items {
            let rows = if i.matched_rows.is_empty() { "no matching row".to_string() } else { i.matched_rows.join(", ") };
            println!("     {} {}: {rows}", i.id, i.description);
        }
    }
    for m in report.mismatches() {
        println!("mismatch: {m}");
    }
}

/// A reductive type from `A1+G2` notation, classical names (`so(7)`, `sp6`)
/// allowed per summand.
fn parse_type(s: &str) -> Result<ReductiveType, Usage> {
    let mut out = ReductiveType::default();
    for part in s.split('+') {
        let t = match part.trim().parse::<ReductiveType>() {
            Ok(t) => t,
            Err(_) => part.trim().parse::<AlgebraName>()?.normalize()?,
        };
        out.extend(t);
    }
    Ok(out)
}

fn parse_coords(s: &str) -> Result<Vec<i64>, Usage> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<i64>().map_err(|e| Usage(format!("bad coordinate `{x}`: {e}"))))
        .collect()
}

fn weight_input(ty: &str, weight: &str) -> Result<(RootSystem, Vec<WeightVector>), Usage> {
    let t = parse_type(ty)?;
    let rs = RootSystem::new(&t);
    let parts: Vec<&str> = weight.split(';').collect();
    if parts.len() != rs.factors().len() {
        return Err(Usage(format!("{} has {} simple factors, got {} weights", t, rs.factors().len(), parts.len())));
    }
    let mut w = Vec::new();
    for (i, (p, f)) in parts.iter().zip(rs.factors()).enumerate() {
        let c = parse_coords(p)?;
        if c.len() != f.rank() {
            return Err(Usage(format!("factor {} has rank {}, got {} coordinates", f.simple_type(), f.rank(), c.len())));
        }
        w.push(WeightVector::fundamental(i, &c));
    }
    Ok((rs, w))
}
