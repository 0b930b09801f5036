//! `zeroconc`: 0-concordance obstruction invariants of 2-knots.
//!
//! Exit codes: 0 success; 1 negative verdict or corpus failure; 2 usage,
//! parse, or input errors.

mod corpus;
mod output;
mod presentation;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "zeroconc",
    about = "Rochlin invariants and Heegaard Floer correction terms obstructing \
             0-concordance of 2-knots",
    version
)]
struct Cli {
    /// Emit machine-readable JSON (exact rationals as "a/b" strings).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the invariant profile of a 2-knot expression.
    Invariants {
        /// Expression, e.g. 'twistspin(2, twobridge(5,1)) # ribbon(2)'.
        expr: Vec<String>,
    },
    /// Decide whether two 2-knots are obstructed from being 0-concordant.
    /// Separate the expressions with '::'.
    Compare { exprs: Vec<String> },
    /// Generate a family of pairwise non-0-concordant 2-knots.
    Family {
        /// 'd' (correction-term family) or 'mu' (Rochlin family).
        kind: String,
        #[arg(long)]
        size: u64,
    },
    /// Signature criterion for the 2-twist spin of a quasi-alternating knot.
    Theorem2 {
        /// Knot expression, e.g. 'torus(2,3)' or 'mirror(twobridge(5,3))'.
        knot: Vec<String>,
    },
    /// Correction term d(L(p,q), i) as an exact rational.
    Dlens {
        p: u64,
        q: u64,
        /// Spin^c index 0..p, or 'spin' for the spin structure(s).
        #[arg(default_value = "spin")]
        index: String,
    },
    /// Rochlin invariants of a raw surgery presentation (JSON file with
    /// {"framings": [...], "edges": [[i,j], ...]}), one value per spin
    /// structure.
    Mu { file: PathBuf },
    /// Lattice-oracle correction terms of a positive-definite presentation,
    /// one value per spin structure (or for an explicit covector class).
    #[command(name = "d-oracle")]
    DOracle {
        file: PathBuf,
        /// Characteristic covector, comma-separated (e.g. "2,3,-1").
        #[arg(long)]
        covector: Option<String>,
    },
    /// Evaluate a corpus of JSON lines {"expr": ..., "expected": {...}}.
    Corpus { path: PathBuf },
    /// Run the built-in calibration and consistency checks.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn join_args(args: &[String]) -> String {
    args.join(" ")
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.cmd {
        Cmd::Invariants { expr } => {
            let text = join_args(expr);
            let knot = zeroconc::parse_two_knot(&text).map_err(anyhow::Error::from)?;
            let profile = zeroconc::engine::profile(&knot);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&output::profile_json(&knot, &profile))?
                );
            } else {
                output::print_profile(&knot, &profile);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Compare { exprs } => {
            let text = join_args(exprs);
            let parts: Vec<&str> = text.split("::").collect();
            if parts.len() != 2 {
                anyhow::bail!("compare expects exactly one '::' between two expressions");
            }
            let k1 = zeroconc::parse_two_knot(parts[0]).map_err(anyhow::Error::from)?;
            let k2 = zeroconc::parse_two_knot(parts[1]).map_err(anyhow::Error::from)?;
            let verdict = zeroconc::engine::compare(&k1, &k2);
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&output::compare_json(&k1, &k2, &verdict))?
                );
            } else {
                output::print_compare(&k1, &k2, &verdict);
            }
            Ok(if verdict.is_distinguished() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Family { kind, size } => {
            let kind = match kind.as_str() {
                "d" => zeroconc::engine::FamilyKind::D,
                "mu" => zeroconc::engine::FamilyKind::Mu,
                other => anyhow::bail!("unknown family kind '{other}' (expected 'd' or 'mu')"),
            };
            let fam = zeroconc::engine::family(kind, *size)?;
            if cli.json {
                let entries: Vec<serde_json::Value> = fam
                    .iter()
                    .map(|(e, p)| output::profile_json(e, p))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&serde_json::json!(entries))?);
            } else {
                for (e, p) in &fam {
                    output::print_profile_line(e, p);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Theorem2 { knot } => {
            let text = join_args(knot);
            let k = zeroconc::parse_knot(&text).map_err(anyhow::Error::from)?;
            let report = zeroconc::engine::theorem2_check(&k)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&output::theorem2_json(&k, &report))?
                );
            } else {
                output::print_theorem2(&k, &report);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dlens { p, q, index } => {
            let indices: Vec<u64> = if index == "spin" {
                zeroconc::surgery::lens_spin_indices(*p, *q)
            } else {
                vec![index
                    .parse::<u64>()
                    .map_err(|_| anyhow::anyhow!("index must be an integer or 'spin'"))?]
            };
            let mut values = Vec::new();
            for i in &indices {
                let d = zeroconc::correction::d_lens(*p, *q, *i)?;
                values.push((*i, d));
            }
            if cli.json {
                let spin = zeroconc::surgery::lens_spin_indices(*p, *q);
                let vals: Vec<serde_json::Value> = values
                    .iter()
                    .map(|(i, d)| {
                        serde_json::json!({
                            "index": i,
                            "d": zeroconc::rational::format_rat(d),
                            "spin": spin.contains(i),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "p": p, "q": q, "values": vals
                    }))?
                );
            } else {
                for (i, d) in &values {
                    println!("d(L({p},{q}), {i}) = {}", zeroconc::rational::format_rat(d));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Mu { file } => {
            let pres = presentation::load(file)?;
            let subs = zeroconc::surgery::characteristic_sublinks(&pres)?;
            let mut rows = Vec::new();
            for c in &subs {
                let m = zeroconc::surgery::mu(&pres, c)?;
                rows.push((c.clone(), m));
            }
            if cli.json {
                let vals: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(c, m)| {
                        serde_json::json!({
                            "sublink": c.iter().map(|&b| b as u8).collect::<Vec<u8>>(),
                            "mu": m.value(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({"values": vals}))?
                );
            } else {
                for (c, m) in &rows {
                    println!("c = {} -> mu = {m}", output::sublink_str(c));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::DOracle { file, covector } => {
            let pres = presentation::load(file)?;
            let oracle = zeroconc::surgery::DOracle::new(&pres)?;
            if cli.json {
                let mut vals = Vec::new();
                match covector {
                    Some(text) => {
                        let k = presentation::parse_covector(text, pres.len())?;
                        let d = oracle.d_covector(&k)?;
                        vals.push(serde_json::json!({
                            "covector": k,
                            "d": zeroconc::rational::format_rat(&d),
                        }));
                    }
                    None => {
                        for c in zeroconc::surgery::characteristic_sublinks(&pres)? {
                            let d = oracle.d_sublink(&c)?;
                            vals.push(serde_json::json!({
                                "sublink": c.iter().map(|&b| b as u8).collect::<Vec<u8>>(),
                                "d": zeroconc::rational::format_rat(&d),
                            }));
                        }
                    }
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({"values": vals}))?
                );
            } else {
                match covector {
                    Some(text) => {
                        let k = presentation::parse_covector(text, pres.len())?;
                        let d = oracle.d_covector(&k)?;
                        println!("d[K = {k:?}] = {}", zeroconc::rational::format_rat(&d));
                    }
                    None => {
                        for c in zeroconc::surgery::characteristic_sublinks(&pres)? {
                            let d = oracle.d_sublink(&c)?;
                            println!(
                                "c = {} -> d = {}",
                                output::sublink_str(&c),
                                zeroconc::rational::format_rat(&d)
                            );
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Corpus { path } => corpus::run(path, cli.json),
        Cmd::Selftest => selftest::run(),
    }
}
