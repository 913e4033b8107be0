use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use exceptional_core::bounds::{conductor_bound, conductor_bound_from_n, sturm_prime_bound};
use exceptional_core::curve::{conductor, WeierstrassModel};
use exceptional_core::nonintegral::bounds_c;
use exceptional_core::pipeline::{ModeChoice, PipelineConfig};
use exceptional_core::small_primes::{all_families, family_member};
use exceptional_core::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::batch::{run_batch, summarize};
use crate::input::{parse_curves, parse_rational};
use crate::report::SCHEMA_VERSION;

#[derive(Debug, Parser)]
#[command(name = "exceptional", version, about = "Exceptional primes of mod-ℓ Galois representations of elliptic curves over Q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One JSON report per curve.
    Sieve(BatchArgs),
    /// Check that every prime above 13 is surjective outside the exceptional pairs.
    Verify {
        #[command(flatten)]
        batch: BatchArgs,
        /// Also print the per-curve reports before the summary.
        #[arg(long)]
        reports: bool,
    },
    /// Conductor and Sturm bounds for a curve or a conductor.
    Bound {
        /// a1 a2 a3 a4 a6
        #[arg(long, num_args = 5, allow_negative_numbers = true, conflicts_with = "conductor", required_unless_present = "conductor")]
        curve: Option<Vec<String>>,
        #[arg(long)]
        conductor: Option<String>,
    },
    /// Membership of j in the stored one-parameter families.
    Families {
        #[arg(long, allow_hyphen_values = true)]
        j: String,
        /// Restrict to the families for this prime.
        #[arg(long)]
        ell: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Sieve,
    Shortcut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Curve list; `-` reads standard input.
    pub input: PathBuf,
    /// Write records here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, default_value_t = 10_000)]
    pub witness_bound: u64,
    #[arg(long, default_value_t = 1_000_000)]
    pub counting_bound: u64,
    #[arg(long, default_value_t = 30)]
    pub xns11_bound: u32,
    #[arg(long, default_value_t = 10_000)]
    pub search_cap: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    pub ladic: Switch,
}

impl BatchArgs {
    pub fn config(&self) -> PipelineConfig {
        PipelineConfig {
            witness_bound: self.witness_bound,
            counting_bound: self.counting_bound,
            xns11_bound: self.xns11_bound,
            search_cap: self.search_cap,
            mode: match self.mode {
                ModeArg::Auto => ModeChoice::Auto,
                ModeArg::Sieve => ModeChoice::Sieve,
                ModeArg::Shortcut => ModeChoice::Shortcut,
            },
            ladic: self.ladic == Switch::On,
        }
    }
}

fn open_input(path: &Path) -> anyhow::Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let f = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(f)))
}

fn open_output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Runs a batch command; `Ok(false)` when verification fails.
fn batch(args: &BatchArgs, verify: bool, with_reports: bool) -> anyhow::Result<bool> {
    let inputs = parse_curves(open_input(&args.input)?).context("reading curve list")?;
    let outcomes = run_batch(inputs, &args.config(), args.threads);
    let mut out = open_output(args.output.as_deref())?;
    if !verify || with_reports {
        for o in &outcomes {
            writeln!(out, "{}", o.to_json())?;
        }
    }
    let mut ok = true;
    if verify {
        let summary = summarize(&outcomes);
        ok = summary.holds;
        write_json(&mut *out, &summary)?;
    }
    out.flush()?;
    Ok(ok)
}

fn bound(curve: Option<&[String]>, n: Option<&str>) -> anyhow::Result<serde_json::Value> {
    let err_string = |r: Result<String, exceptional_core::Error>| r.unwrap_or_else(|e| format!("error: {e}"));
    if let Some(coeffs) = curve {
        let a: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().with_context(|| format!("bad integer {c:?}")))
            .collect::<anyhow::Result<_>>()?;
        let a: [BigInt; 5] = a.try_into().expect("clap enforces five values");
        let model = WeierstrassModel::new(a)?;
        let n = conductor(&model)?.value;
        let c = bounds_c(model.j_invariant()).ok();
        return Ok(json!({
            "schema": SCHEMA_VERSION,
            "j": model.j_invariant().to_string(),
            "conductor": n.to_string(),
            "conductor_bound": err_string(conductor_bound(&model).map(|b| b.bound.to_string())),
            "sturm_prime_bound": sturm_prime_bound(&n)?.to_string(),
            "denominator_bounds": c.map(|c| json!({
                "g": c.bound_g,
                "smallest_prime": c.bound_p.to_string(),
                "log_denominator": c.bound_logd,
            })),
        }));
    }
    let Some(n) = n else { bail!("give --curve or --conductor") };
    let n: BigInt = n.parse().with_context(|| format!("bad conductor {n:?}"))?;
    Ok(json!({
        "schema": SCHEMA_VERSION,
        "conductor": n.to_string(),
        "conductor_bound": err_string(conductor_bound_from_n(&n).map(|b| b.bound.to_string())),
        "sturm_prime_bound": sturm_prime_bound(&n)?.to_string(),
    }))
}

fn families(j: &str, ell: Option<u64>) -> anyhow::Result<Vec<serde_json::Value>> {
    let j = parse_rational(j).map_err(anyhow::Error::msg)?;
    all_families()
        .into_iter()
        .filter(|f| ell.is_none_or(|l| l == f.ell))
        .map(|f| {
            let hit = family_member(&j, &f);
            Ok(json!({
                "schema": SCHEMA_VERSION,
                "family": f.label,
                "ell": f.ell,
                "adic_only": f.adic_only,
                "formula": f.formula(),
                "member": hit.as_ref().map(Option::is_some).ok(),
                "t": hit.as_ref().ok().and_then(|t| t.as_ref().map(ToString::to_string)),
                "error": hit.err().map(|e| e.to_string()),
            }))
        })
        .collect()
}

fn dispatch(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Sieve(args) => batch(&args, false, true),
        Command::Verify { batch: args, reports } => batch(&args, true, reports),
        Command::Bound { curve, conductor } => {
            let v = bound(curve.as_deref(), conductor.as_deref())?;
            write_json(&mut io::stdout().lock(), &v)?;
            Ok(true)
        }
        Command::Families { j, ell } => {
            let mut out = io::stdout().lock();
            for v in families(&j, ell)? {
                write_json(&mut out, &v)?;
            }
            Ok(true)
        }
    }
}

/// Exit status: 0 on success, 2 when verification fails, 1 on any other
/// error.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
