//! `vkoszul`: enumerate the family, verify the filtration, compute colons.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check
//! fails, 2 on usage or capability errors.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use veronese_koszul::filtration::{
    self, enumerate_family_bounded, nonempty_iso_classes, VerificationReport, VerifyOptions,
};
use veronese_koszul::ideal::{colon_brute_ideal, colon_by_edge, colon_principal, equal_up_to};
use veronese_koszul::{Edge, Error, Graph, MonomialIdeal};

/// Environment variable overriding the exhaustive enumeration bound.
const MAX_N_ENV: &str = "VKOSZUL_MAX_N";

#[derive(Parser)]
#[command(
    name = "vkoszul",
    version,
    about = "Koszul filtration of the second squarefree Veronese subring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the family F_n and its isomorphism classes.
    Enumerate(EnumerateArgs),
    /// Check the descent lemma and the filtration axioms for F_n.
    Verify(VerifyArgs),
    /// Colon ideal of an edge ideal by one edge variable.
    Colon(ColonArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Common {
    /// Number of vertices of K_n.
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Output file (directory for `--format dot`); stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    common: Common,
    /// Accepted for symmetry with `verify`; classes are always listed.
    #[arg(long)]
    iso: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Truncation degree for the degreewise colon certificate.
    #[arg(long, default_value_t = filtration::DEFAULT_MAX_DEGREE)]
    max_degree: u32,
    /// Check every simplicial vertex and every neighbour, not only the
    /// canonical descent edge.
    #[arg(long)]
    sweep: bool,
    /// Count isomorphism classes of the nonempty family.
    #[arg(long)]
    iso: bool,
    /// Also check the intermediate colon decomposition of each step.
    #[arg(long)]
    decomposition: bool,
}

#[derive(Args)]
struct ColonArgs {
    #[command(flatten)]
    common: Common,
    /// Generators as comma-separated edges, e.g. `1-2` or `1-2,3-4`.
    #[arg(long, value_delimiter = ',', required = true)]
    ideal: Vec<Edge>,
    /// The edge variable to divide by, e.g. `1-3`.
    #[arg(long)]
    by: Edge,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
}

/// Failures that map to exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn lift(err: Error) -> anyhow::Error {
    usage(err.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Colon(args) => cmd_colon(&args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn family_bound() -> anyhow::Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{MAX_N_ENV}={v} is not a number"))),
        Err(_) => Ok(filtration::DEFAULT_FAMILY_BOUND),
    }
}

fn check_n(n: usize) -> anyhow::Result<()> {
    if n < 2 {
        bail!(usage(format!("--n must be at least 2, got {n}")));
    }
    Ok(())
}

fn emit(out: Option<&Path>, body: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct ClassEntry<'a> {
    representative: &'a Graph,
    count: usize,
}

#[derive(Serialize)]
struct EnumerateOutput<'a> {
    n: usize,
    family_size: usize,
    nonempty_classes: usize,
    members: Vec<&'a Graph>,
    iso_classes: Vec<ClassEntry<'a>>,
}

fn cmd_enumerate(args: &EnumerateArgs) -> anyhow::Result<bool> {
    let c = &args.common;
    check_n(c.n)?;
    let family = enumerate_family_bounded(c.n, family_bound()?).map_err(lift)?;
    let classes = nonempty_iso_classes(&family).map_err(lift)?;
    match c.format {
        Format::Json => {
            let out = EnumerateOutput {
                n: c.n,
                family_size: family.len(),
                nonempty_classes: classes.len(),
                members: family.iter().map(|m| m.graph()).collect(),
                iso_classes: classes
                    .iter()
                    .map(|cl| ClassEntry {
                        representative: &cl.representative,
                        count: cl.count,
                    })
                    .collect(),
            };
            emit(c.out.as_deref(), &to_json(&out)?)?;
        }
        Format::Text => emit(
            c.out.as_deref(),
            &render::family_text(c.n, &family, &classes),
        )?,
        Format::Dot => {
            let dir = c
                .out
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("gallery_n{}", c.n)));
            fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            let width = classes.len().to_string().len().max(2);
            for (idx, cl) in classes.iter().enumerate() {
                let name = format!("class_{:0width$}", idx + 1);
                let path = dir.join(format!("{name}.dot"));
                fs::write(&path, cl.representative.to_dot(&name))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!(
                "{} nonempty isomorphism classes for n = {} written to {}",
                classes.len(),
                c.n,
                dir.display()
            );
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct VerifyConfig {
    n: usize,
    max_degree: u32,
    sweep: bool,
    iso: bool,
    decomposition: bool,
    family_bound: usize,
}

#[derive(Serialize)]
struct VerifyOutput {
    config: VerifyConfig,
    descent_closure: VerificationReport,
    filtration: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    colon_decomposition: Option<VerificationReport>,
    verdict: bool,
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<bool> {
    let c = &args.common;
    check_n(c.n)?;
    if args.max_degree < 2 {
        bail!(usage(format!(
            "--max-degree must be at least 2, got {}",
            args.max_degree
        )));
    }
    if c.format == Format::Dot {
        bail!(usage("verify writes json or text reports"));
    }
    let bound = family_bound()?;
    let started = Instant::now();
    let descent_closure = filtration::verify_descent_closure_bounded(c.n, bound).map_err(lift)?;
    let opts = VerifyOptions {
        max_degree: args.max_degree,
        sweep: args.sweep,
        iso: args.iso,
        family_bound: bound,
    };
    let report = filtration::verify_filtration_with(c.n, &opts).map_err(lift)?;
    let colon_decomposition = if args.decomposition {
        Some(
            filtration::verify_colon_decomposition_bounded(c.n, args.max_degree, bound)
                .map_err(lift)?,
        )
    } else {
        None
    };
    let verdict = descent_closure.verdict
        && report.verdict
        && colon_decomposition.as_ref().is_none_or(|r| r.verdict);
    let output = VerifyOutput {
        config: VerifyConfig {
            n: c.n,
            max_degree: args.max_degree,
            sweep: args.sweep,
            iso: args.iso,
            decomposition: args.decomposition,
            family_bound: bound,
        },
        descent_closure,
        filtration: report,
        colon_decomposition,
        verdict,
    };
    let body = match c.format {
        Format::Json => to_json(&output)?,
        _ => render::verify_text(
            &output.descent_closure,
            &output.filtration,
            output.colon_decomposition.as_ref(),
            verdict,
        ),
    };
    emit(c.out.as_deref(), &body)?;
    eprintln!("elapsed: {:.2?}", started.elapsed());
    Ok(verdict)
}

#[derive(Serialize)]
struct ColonOutput {
    n: usize,
    ideal: MonomialIdeal,
    by: Edge,
    closed_form_case: &'static str,
    closed_form: MonomialIdeal,
    max_degree: u32,
    brute_force: MonomialIdeal,
    agree: bool,
}

fn cmd_colon(args: &ColonArgs) -> anyhow::Result<bool> {
    let c = &args.common;
    let n = c.n;
    check_n(n)?;
    if args.max_degree < 1 {
        bail!(usage("--max-degree must be at least 1"));
    }
    if c.format == Format::Dot {
        bail!(usage("colon writes json or text"));
    }
    let ideal = MonomialIdeal::from_edges(&args.ideal, n).map_err(lift)?;
    let x = args.by;
    Graph::from_edges(n, [x]).map_err(lift)?;
    let (case, closed) = match args.ideal.as_slice() {
        [e] => {
            let case = if *e == x {
                "unit"
            } else if e.is_disjoint(&x) {
                "disjoint"
            } else {
                "same_vertex"
            };
            (case, colon_principal(e, &x, n).map_err(lift)?)
        }
        _ => (
            "sum_of_principal",
            colon_by_edge(&ideal, &x).map_err(lift)?.minimalize(),
        ),
    };
    let brute = colon_brute_ideal(&ideal, &x, n, args.max_degree).map_err(lift)?;
    let agree = equal_up_to(&closed, &brute, n, args.max_degree);
    let output = ColonOutput {
        n,
        ideal,
        by: x,
        closed_form_case: case,
        closed_form: closed,
        max_degree: args.max_degree,
        brute_force: brute,
        agree,
    };
    let body = match c.format {
        Format::Json => to_json(&output)?,
        _ => render::colon_text(
            &output.ideal,
            &output.by,
            output.closed_form_case,
            &output.closed_form,
            &output.brute_force,
            output.max_degree,
            agree,
        ),
    };
    emit(c.out.as_deref(), &body)?;
    Ok(agree)
}
