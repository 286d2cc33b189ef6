//! `tamagawa`: command-line front end to the library.
//!
//! Exit codes: 0 success, 1 domain error (bad parameters, singular curve,
//! failed check), 2 usage error, 3 factorization budget exhausted.

mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;

use tamagawa::arith::{pell19_solutions, FactorBudget};
use tamagawa::classifier::{classify_global, oracle_global, x5_member, x7_member};
use tamagawa::curve::WeierstrassModel;
use tamagawa::exec::{with_jobs, Exec};
use tamagawa::fixtures::verify_all;
use tamagawa::parametric::{Family, ParamSpec};
use tamagawa::survey::{
    fifth_power_experiment, fifth_power_experiment_oracle, intro_count, tilde_survey, write_csv,
    write_summary_json, x7_prime_count, FifthPowers, SurveyOptions,
};
use tamagawa::tate::{global_tamagawa, tate_local};

use report::{Format, Table};

#[derive(Parser)]
#[command(name = "tamagawa", version, about = "Tamagawa numbers of l-isogenous elliptic curves")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for surveys and scans (1 = sequential).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Pollard-rho iteration limit per factorization; exceeding it exits with code 3.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Global and local Tamagawa numbers of E_T(a,b) and its quotient.
    #[command(allow_negative_numbers = true)]
    Classify {
        /// One of C3, C3^0, C5, C7.
        family: Family,
        a: BigInt,
        /// Second parameter (omit for C3^0).
        b: Option<BigInt>,
        /// Also run Tate's algorithm on both curves and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Tate's algorithm on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
    #[command(allow_negative_numbers = true)]
    Tate {
        a1: BigInt,
        a2: BigInt,
        a3: BigInt,
        a4: BigInt,
        a6: BigInt,
        /// Report only this prime (which may be a good prime).
        #[arg(long)]
        p: Option<BigInt>,
    },
    /// Height surveys and the counting experiments.
    Survey(SurveyArgs),
    /// Check the embedded corpus of curves with known invariants.
    Fixtures,
    /// Solutions defining the exceptional sets for l = 5 and l = 7.
    Xsets {
        /// Bound on |a|, |b| for the solutions of a^2 + 11ab - b^2 = 19.
        #[arg(long, default_value_t = 10_000)]
        pell_bound: u64,
        /// Side of the box [1, B]^2 scanned for the l = 7 set.
        #[arg(long = "box", default_value_t = 30)]
        box_side: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "mode")]
struct SurveyMode {
    /// Prime l (5 or 7) for a height survey; requires --X.
    #[arg(long, requires = "x")]
    ell: Option<u32>,
    /// Count t <= N with the one-parameter quotient's Tamagawa number prime to 5.
    #[arg(long)]
    intro: Option<u64>,
    /// Count the distinct primes f_7(a,b) = -1 mod 7 over the box [1, B]^2.
    #[arg(long)]
    x7count: Option<u64>,
    /// Fifth-power experiment over coprime s, t in [2, R].
    #[arg(long)]
    fifth: Option<u64>,
}

#[derive(Args)]
struct SurveyArgs {
    #[command(flatten)]
    mode: SurveyMode,
    /// Height cutoff for --ell.
    #[arg(long = "X", id = "x")]
    x: Option<f64>,
    /// CSV file receiving one row per curve (height surveys).
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON summary file (height surveys).
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Resumable checkpoint file (height surveys).
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Leave out the l = 5 pairs with ab a fifth power.
    #[arg(long)]
    exclude_fifth_powers: bool,
    /// With --fifth, recount with Tate's algorithm.
    #[arg(long)]
    oracle: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(rho) = cli.budget {
        FactorBudget { rho_iterations: rho }.set_current();
    }
    let jobs = cli.jobs.max(1);
    let result = with_jobs(jobs, || run(&cli, Exec::from_jobs(jobs)));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<tamagawa::Error>() {
                Some(tamagawa::Error::FactorizationIncomplete { .. }) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: &Cli, exec: Exec) -> anyhow::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match &cli.command {
        Command::Classify { family, a, b, oracle } => {
            classify(&mut out, cli.format, *family, a, b.as_ref(), *oracle)
        }
        Command::Tate { a1, a2, a3, a4, a6, p } => {
            let m = WeierstrassModel::from_ints([a1.clone(), a2.clone(), a3.clone(), a4.clone(), a6.clone()]);
            tate(&mut out, cli.format, &m, p.as_ref())
        }
        Command::Survey(args) => survey(&mut out, cli.format, args, exec),
        Command::Fixtures => fixtures(&mut out, cli.format),
        Command::Xsets { pell_bound, box_side } => xsets(&mut out, cli.format, *pell_bound, *box_side, exec),
    }
}

fn classify(
    out: &mut impl Write,
    format: Format,
    family: Family,
    a: &BigInt,
    b: Option<&BigInt>,
    oracle: bool,
) -> anyhow::Result<()> {
    let b = match (family.has_b(), b) {
        (true, Some(b)) => b.clone(),
        (true, None) => return Err(anyhow!("{family} needs two parameters")),
        (false, Some(_)) => return Err(anyhow!("{family} takes a single parameter")),
        (false, None) => BigInt::from(0),
    };
    let spec = ParamSpec::new(family, a.clone(), b)?;
    let g = classify_global(&spec)?;
    let mut t = Table::new(["p", "c", "c_tilde", "rule"]);
    for l in &g.local {
        t.row([l.p.to_string(), l.c.to_string(), l.c_tilde.to_string(), l.rule.id().to_string()]);
    }
    let mut summary = vec![
        ("spec", spec.to_string()),
        ("c", g.c.to_string()),
        ("c_tilde", g.c_tilde.to_string()),
    ];
    let mut disagreement = None;
    if oracle {
        let (c, ct, _) = oracle_global(&spec)?;
        summary.push(("oracle_c", c.to_string()));
        summary.push(("oracle_c_tilde", ct.to_string()));
        if (c, ct) != (g.c, g.c_tilde) {
            disagreement = Some(anyhow!(
                "table gives ({}, {}) but Tate's algorithm gives ({c}, {ct})",
                g.c,
                g.c_tilde
            ));
        }
    }
    report::emit(out, format, &summary, &t)?;
    disagreement.map_or(Ok(()), Err)
}

fn tate(out: &mut impl Write, format: Format, m: &WeierstrassModel, p: Option<&BigInt>) -> anyhow::Result<()> {
    if m.discriminant().is_zero() {
        return Err(tamagawa::Error::Singular.into());
    }
    let (c, local) = match p {
        Some(p) => {
            let r = tate_local(m, p)?;
            (r.c_p as u64, vec![r])
        }
        None => global_tamagawa(m)?,
    };
    let mut t = Table::new(["p", "kodaira", "c_p", "f_p", "v_delta", "reduction"]);
    for r in &local {
        t.row([
            r.p.to_string(),
            r.kodaira.to_string(),
            r.c_p.to_string(),
            r.f_p.to_string(),
            r.v_min.to_string(),
            r.class.to_string(),
        ]);
    }
    let key = if p.is_some() { "c_p" } else { "tamagawa" };
    report::emit(out, format, &[(key, c.to_string())], &t)
}

fn survey(out: &mut impl Write, format: Format, args: &SurveyArgs, exec: Exec) -> anyhow::Result<()> {
    let m = &args.mode;
    if let Some(n) = m.intro {
        return report::emit(out, format, &[("intro", intro_count(n, exec)?.to_string())], &Table::empty());
    }
    if let Some(b) = m.x7count {
        return report::emit(out, format, &[("x7count", x7_prime_count(b, exec).to_string())], &Table::empty());
    }
    if let Some(r) = m.fifth {
        let (hits, total) = fifth_power_experiment(r, exec)?;
        let mut summary = vec![("coprime", hits.to_string()), ("total", total.to_string())];
        if args.oracle {
            let (oh, ot) = fifth_power_experiment_oracle(r, exec)?;
            summary.push(("oracle_coprime", oh.to_string()));
            summary.push(("oracle_total", ot.to_string()));
            if (oh, ot) != (hits, total) {
                report::emit(out, format, &summary, &Table::empty())?;
                return Err(anyhow!("closed form and Tate's algorithm disagree"));
            }
        }
        return report::emit(out, format, &summary, &Table::empty());
    }
    let ell = m.ell.expect("clap enforces one mode");
    let x = args.x.ok_or_else(|| anyhow!("--ell needs --X"))?;
    let opts = SurveyOptions {
        exec,
        checkpoint: args.checkpoint.clone(),
        fifth_powers: if args.exclude_fifth_powers {
            FifthPowers::Exclude
        } else {
            FifthPowers::Include
        },
        ..SurveyOptions::default()
    };
    let result = tilde_survey(ell, x, &opts)?;
    if let Some(path) = &args.out {
        let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_csv(BufWriter::new(f), result.family(), &result.records)?;
    }
    if let Some(path) = &args.summary {
        let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_summary_json(BufWriter::new(f), &result.row)?;
    }
    for (a, b) in &result.boundary {
        eprintln!("warning: ({a}, {b}) lies within one of the height threshold");
    }
    let row = &result.row;
    match format {
        Format::Table => writeln!(out, "N={} G={} {:.2}%", row.n, row.g, row.percent)?,
        Format::Json => write_summary_json(&mut *out, row)?,
        Format::Csv => {
            writeln!(out, "ell,X,N,G,percent")?;
            writeln!(out, "{},{},{},{},{:.2}", row.ell, row.x, row.n, row.g, row.percent)?;
        }
    }
    Ok(())
}

fn fixtures(out: &mut impl Write, format: Format) -> anyhow::Result<()> {
    let checks = verify_all()?;
    let mut t = Table::new(["status", "check", "detail"]);
    for c in &checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        t.row([status.to_string(), c.name.clone(), c.failures.join("; ")]);
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name.as_str()).collect();
    let summary = [
        ("checks", checks.len().to_string()),
        ("failed", failed.len().to_string()),
    ];
    report::emit(out, format, &summary, &t)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(anyhow!("failing fixtures: {}", failed.join(", ")))
    }
}

fn xsets(out: &mut impl Write, format: Format, pell_bound: u64, box_side: u64, exec: Exec) -> anyhow::Result<()> {
    let mut t = Table::new(["set", "a", "b"]);
    let x5: Vec<(i64, i64)> = pell19_solutions(pell_bound)
        .into_iter()
        .filter(|&(a, b)| x5_member(&BigInt::from(a), &BigInt::from(b)))
        .collect();
    for (a, b) in &x5 {
        t.row(["X5".to_string(), a.to_string(), b.to_string()]);
    }
    let rows: Vec<u64> = (1..=box_side).collect();
    let x7: Vec<(u64, u64)> = exec
        .map(rows, |a| -> tamagawa::Result<Vec<(u64, u64)>> {
            let mut hits = Vec::new();
            for b in 1..=box_side {
                if x7_member(&BigInt::from(a), &BigInt::from(b))? {
                    hits.push((a, b));
                }
            }
            Ok(hits)
        })
        .into_iter()
        .collect::<tamagawa::Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    for (a, b) in &x7 {
        t.row(["X7".to_string(), a.to_string(), b.to_string()]);
    }
    let summary = [("x5", x5.len().to_string()), ("x7", x7.len().to_string())];
    report::emit(out, format, &summary, &t)
}
