//! Command-line front end.

mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use verify::{format_verdict, table_for, verify_spec, Check, VerifyOptions, VerifyReport};

use crate::decrement::detect_symmetry;
use crate::io::{
    write_decrement_csv, write_green_csv, write_law_csv, write_phi_csv, write_samples, SpecFile,
};
use crate::law::{
    enumerate_law_with_cap, green_matrix, Composition, DEFAULT_ENUMERATION_CAP, DEFAULT_EPPF_CAP,
};
use crate::phi_model::LevyFamily;
use crate::sampler::{
    empirical_law, growth_branches, sample_batch_with_cap, sample_by_growth, sample_composition,
    sample_stick_breaking, CutLaw, SampleSummary, DEFAULT_SAMPLE_CAP,
};
use crate::scalar::{Backend, Rational, Scalar};

#[derive(Debug, Parser)]
#[command(name = "regcomp", version, about = "Regenerative composition structures")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    /// Decrement chain.
    Chain,
    /// Growth kernel started from (1).
    Growth,
    /// Stick-breaking with the atoms of a discrete family as cut law.
    Stick,
}

#[derive(Debug, Args)]
struct Common {
    /// JSON spec file.
    #[arg(long)]
    spec: PathBuf,
    /// Overrides the backend of the spec file.
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    /// Output file (stdout if absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Laplace exponent and binomial moments as CSV.
    Phi(Common),
    /// Decrement matrix as CSV.
    Decrement(Common),
    /// Exact law of the composition of n as CSV.
    Law {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        enum_cap: usize,
    },
    /// Green matrix as CSV.
    Green(Common),
    /// Monte Carlo compositions of n, one per line, with a JSON summary.
    Sample {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t = Method::Chain)]
        method: Method,
        /// Summary JSON file (stderr if absent).
        #[arg(long)]
        summary: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SAMPLE_CAP)]
        sample_cap: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        enum_cap: usize,
    },
    /// Exact growth-kernel transitions out of a composition, as CSV.
    Grow {
        #[command(flatten)]
        common: Common,
        /// Dash-joined composition, e.g. 2-1-1.
        #[arg(long)]
        from: Composition,
    },
    /// Exact verification suite; exits nonzero if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Largest n for enumeration-based checks.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        enum_cap: usize,
        #[arg(long, default_value_t = DEFAULT_EPPF_CAP)]
        eppf_cap: usize,
    },
    /// Symmetry verdict for first and last parts.
    DetectSymmetry(Common),
}

fn warn_cap(what: &str, value: usize, default: usize) {
    if value > default {
        eprintln!("warning: {what} cap raised to {value} (default {default}); this may be slow");
    }
}

fn load(common: &Common) -> anyhow::Result<SpecFile> {
    let mut spec = SpecFile::load(&common.spec)?;
    match common.backend {
        Some(BackendArg::Exact) => spec.backend = Backend::Exact,
        Some(BackendArg::Float) => spec.backend = Backend::Float,
        None => {}
    }
    Ok(spec)
}

fn open(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn tables<S: Scalar>(command: &Command, spec: &SpecFile, out: Box<dyn Write>) -> anyhow::Result<()> {
    match command {
        Command::Phi(_) => match spec.phi_table::<S>()? {
            Some(t) => write_phi_csv(out, &t)?,
            None => bail!("a raw matrix spec has no Laplace exponent"),
        },
        Command::Decrement(_) => write_decrement_csv(out, &spec.decrement::<S>()?)?,
        Command::Green(_) => write_green_csv(out, &green_matrix(&spec.decrement::<S>()?))?,
        Command::Law { n, enum_cap, .. } => {
            warn_cap("enumeration", *enum_cap, DEFAULT_ENUMERATION_CAP);
            write_law_csv(
                out,
                &enumerate_law_with_cap(&spec.decrement::<S>()?, *n, *enum_cap)?,
            )?
        }
        Command::Grow { from, .. } => {
            let branches = growth_branches(&spec.decrement::<S>()?, from)?;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["composition", "probability"])?;
            for (c, p) in branches {
                w.write_record([c.to_string(), p.to_string()])?;
            }
            w.flush()?;
        }
        _ => unreachable!("not a table command"),
    }
    Ok(())
}

fn cut_law(spec: &SpecFile) -> anyhow::Result<CutLaw> {
    match spec.family().map(LevyFamily::canonical) {
        Some(LevyFamily::DiscreteMeasure { drift, atoms }) if drift == Rational::from_i64(0) => {
            Ok(CutLaw::new(&atoms)?)
        }
        _ => bail!("stick-breaking needs a discrete family without drift whose atoms form the law of X"),
    }
}

struct SampleRun<'a> {
    n: usize,
    count: usize,
    seed: u64,
    threads: usize,
    method: Method,
    sample_cap: usize,
    enum_cap: usize,
    summary: Option<&'a Path>,
}

fn sample<S: Scalar>(spec: &SpecFile, run: &SampleRun, out: Box<dyn Write>) -> anyhow::Result<()> {
    let SampleRun {
        n,
        count,
        seed,
        threads,
        method,
        sample_cap,
        enum_cap,
        summary,
    } = *run;
    warn_cap("sample count", sample_cap, DEFAULT_SAMPLE_CAP);
    warn_cap("enumeration", enum_cap, DEFAULT_ENUMERATION_CAP);
    let q = spec.decrement::<S>()?;
    let qf = q.to_f64();
    let samples = match method {
        Method::Chain => sample_batch_with_cap(count, seed, threads, sample_cap, |r| {
            sample_composition(&qf, n, r)
        })?,
        Method::Growth => {
            sample_batch_with_cap(count, seed, threads, sample_cap, |r| sample_by_growth(&qf, n, r))?
        }
        Method::Stick => {
            let law = cut_law(spec)?;
            sample_batch_with_cap(count, seed, threads, sample_cap, |r| {
                sample_stick_breaking(&law, n, r)
            })?
        }
    };
    write_samples(out, &samples)?;
    let text = if samples.is_empty() || n > enum_cap || n > q.n_max() {
        serde_json::to_string_pretty(&serde_json::json!({
            "seed": seed, "n": n, "sample_size": samples.len(),
            "tv": null, "chi_square": null, "dof": null, "p_value": null
        }))?
    } else {
        let emp = empirical_law(&samples)?;
        serde_json::to_string_pretty(&SampleSummary::new(
            seed,
            &emp,
            &enumerate_law_with_cap(&q, n, enum_cap)?,
        )?)?
    };
    match summary {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("cannot write {}", p.display()))?,
        None => eprintln!("{text}"),
    }
    Ok(())
}

/// Runs a parsed command; `Ok(false)` means a verification failed.
pub fn run(cli: Cli) -> anyhow::Result<bool> {
    match &cli.command {
        Command::Phi(common) | Command::Decrement(common) | Command::Green(common) => {
            dispatch_tables(&cli.command, common)?
        }
        Command::Law { common, .. } | Command::Grow { common, .. } => dispatch_tables(&cli.command, common)?,
        Command::Sample {
            common,
            n,
            count,
            seed,
            threads,
            method,
            summary,
            sample_cap,
            enum_cap,
        } => {
            let spec = load(common)?;
            let out = open(common.out.as_deref())?;
            let run = SampleRun {
                n: *n,
                count: *count,
                seed: *seed,
                threads: *threads,
                method: *method,
                sample_cap: *sample_cap,
                enum_cap: *enum_cap,
                summary: summary.as_deref(),
            };
            match spec.backend {
                Backend::Exact => sample::<Rational>(&spec, &run, out)?,
                Backend::Float => sample::<f64>(&spec, &run, out)?,
            }
        }
        Command::Verify {
            common,
            n,
            enum_cap,
            eppf_cap,
        } => {
            warn_cap("enumeration", *enum_cap, DEFAULT_ENUMERATION_CAP);
            warn_cap("EPPF block", *eppf_cap, DEFAULT_EPPF_CAP);
            let spec = load(common)?;
            let report = verify_spec(
                &spec,
                VerifyOptions {
                    n_limit: *n,
                    enumeration_cap: *enum_cap,
                    eppf_cap: *eppf_cap,
                },
            )?;
            let mut out = open(common.out.as_deref())?;
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    writeln!(out, "{status} {}", c.name)?;
                } else {
                    writeln!(out, "{status} {}: {}", c.name, c.detail)?;
                }
            }
            if let Some(v) = &report.symmetry {
                writeln!(out, "symmetry: {v}")?;
            }
            out.flush()?;
            return Ok(report.passed());
        }
        Command::DetectSymmetry(common) => {
            let spec = load(common)?;
            let mut out = open(common.out.as_deref())?;
            match spec.backend {
                Backend::Exact => {
                    let q = spec.decrement::<Rational>()?;
                    let verdict = detect_symmetry(&table_for(&spec, &q)?)?;
                    writeln!(out, "{}", format_verdict(&verdict))?;
                }
                Backend::Float => {
                    let Some(t) = spec.phi_table::<f64>()? else {
                        bail!("float symmetry detection needs a family spec");
                    };
                    writeln!(out, "{}", serde_json::to_string(&detect_symmetry(&t)?)?)?;
                }
            }
            out.flush()?;
        }
    }
    Ok(true)
}

fn dispatch_tables(command: &Command, common: &Common) -> anyhow::Result<()> {
    let spec = load(common)?;
    let out = open(common.out.as_deref())?;
    match spec.backend {
        Backend::Exact => tables::<Rational>(command, &spec, out),
        Backend::Float => tables::<f64>(command, &spec, out),
    }
}

/// Entry point of the `regcomp` binary. Exit code 1 means a failed check,
/// 2 an error.
pub fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
