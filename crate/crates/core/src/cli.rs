//! Command-line front end.
//!
//! Each command prints one line of `key=value` pairs first, then a small table for
//! people. Exit codes: 0 success, 1 other errors, 2 parse or usage errors,
//! 3 a claim was violated, 4 the solver node cap was reached.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::complex::{Simplex, StackedBall, Vertex};
use crate::constructions::{
    enumerate_linear_balls, general_lower_bound, general_lower_bound_2, linear_lower_bound,
    path_ball, random_linear_ball,
};
use crate::error::Error;
use crate::io::{self, Instance, Metadata};
use crate::linear37::{bound_3n7, transversal_3n7};
use crate::solver::{
    brute_force_tau, greedy_transversal, matching_lower_bound, min_transversal_with, SolveOptions,
    NODE_CAP_ENV,
};
use crate::verify::{self, Status, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATED: i32 = 3;
pub const EXIT_NODE_CAP: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "stacksphere", version, about = "Stacked spheres and their facet transversals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Transversal number of an instance.
    Tau(TauArgs),
    /// Two transversals of size at most ceil(3n/7) for a linear stacked 2-sphere.
    Cover37 {
        input: PathBuf,
    },
    /// Run the claim checks.
    Verify(VerifyArgs),
    /// Write every linear ball with m simplices to a directory.
    Enumerate {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        out_dir: PathBuf,
    },
    /// Time the exact solver and the 3n/7 cover; prints CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "14,21,28")]
        sizes: Vec<usize>,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Path,
    LinearLb,
    GeneralLb,
    #[value(name = "general-lb-2")]
    GeneralLb2,
    RandomLinear,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (`.json` selects JSON); stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TauArgs {
    input: PathBuf,
    /// Exact branch and bound (the default).
    #[arg(long, conflicts_with_all = ["greedy", "brute"])]
    exact: bool,
    #[arg(long, conflicts_with = "brute")]
    greedy: bool,
    /// Brute force over subsets of size at most MAX.
    #[arg(long, value_name = "MAX")]
    brute: Option<usize>,
    /// Extra facet to remove, as comma-separated vertices; repeatable.
    #[arg(long, value_name = "FACET")]
    remove: Vec<String>,
    #[arg(long)]
    parallel: bool,
    /// Stop the exact search after this many nodes.
    #[arg(long, env = NODE_CAP_ENV)]
    node_cap: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteArg {
    Paper,
    Oracle,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, conflicts_with = "instance")]
    suite: Option<SuiteArg>,
    /// Check one instance file against its claimed bounds.
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Claimed lower bound on tau for `--instance`.
    #[arg(long, requires = "instance")]
    claim_tau: Option<usize>,
    #[arg(long)]
    parallel: bool,
    #[arg(long, env = NODE_CAP_ENV)]
    node_cap: Option<u64>,
}

/// Parses `args` (including the program name), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Parse { .. } | Error::InvalidParameter(_) | Error::FacetNotPresent(_)) => {
                    EXIT_USAGE
                }
                _ => EXIT_ERROR,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Gen(a) => gen(a, out),
        Command::Tau(a) => tau(a, out),
        Command::Cover37 { input } => cover37(&input, out),
        Command::Verify(a) => verify_cmd(a, out),
        Command::Enumerate { d, m, out_dir } => enumerate(d, m, &out_dir, out),
        Command::Bench { sizes, parallel } => bench(&sizes, parallel, out),
    }
}

fn need<T>(value: Option<T>, flag: &str, family: Family) -> Result<T, Error> {
    value.ok_or_else(|| {
        let name = family.to_possible_value().map(|v| v.get_name().to_owned());
        Error::InvalidParameter(format!("{} needs --{flag}", name.unwrap_or_default()))
    })
}

fn gen(a: GenArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let inst = match a.family {
        Family::Path => {
            let m = need(a.m, "m", a.family)?;
            let mut inst = Instance::from_ball(path_ball(a.d, m)?);
            inst.metadata = Metadata {
                family: Some("path".into()),
                d: Some(a.d),
                m: Some(m),
                claimed_n: Some(m + a.d + 1),
                ..Metadata::default()
            };
            inst
        }
        Family::LinearLb => Instance::from_family(&linear_lower_bound(a.d, need(a.k, "k", a.family)?)?),
        Family::GeneralLb => Instance::from_family(&general_lower_bound(a.d, need(a.k, "k", a.family)?)?),
        Family::GeneralLb2 => {
            if a.d != 2 {
                return Err(Error::InvalidParameter("general-lb-2 is 2-dimensional".into()).into());
            }
            Instance::from_family(&general_lower_bound_2(need(a.k, "k", a.family)?)?)
        }
        Family::RandomLinear => {
            let m = need(a.m, "m", a.family)?;
            let seed = need(a.seed, "seed", a.family)?;
            let mut inst = Instance::from_ball(random_linear_ball(a.d, m, seed)?);
            inst.metadata = Metadata {
                family: Some("random-linear".into()),
                d: Some(a.d),
                m: Some(m),
                seed: Some(seed),
                claimed_n: Some(m + a.d + 1),
                ..Metadata::default()
            };
            inst
        }
    };
    let sphere = inst.sphere()?;
    match &a.out {
        Some(path) => {
            io::write(path, &inst).with_context(|| format!("writing {}", path.display()))?;
            writeln!(
                out,
                "out={} n={} facets={} removed={}",
                path.display(),
                sphere.vertex_count(),
                sphere.facet_count(),
                sphere.removed().len()
            )?;
        }
        None => write!(out, "{}", io::to_text(&inst))?,
    }
    Ok(EXIT_OK)
}

fn parse_facet(text: &str) -> Result<Simplex, Error> {
    let vs = text
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Vertex>()
                .map_err(|_| Error::InvalidParameter(format!("bad vertex {t:?} in --remove")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Simplex::new(vs)
}

fn join(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn tau(a: TauArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let inst = io::read(&a.input)?;
    let extra = a
        .remove
        .iter()
        .map(|s| parse_facet(s))
        .collect::<Result<Vec<_>, _>>()?;
    let sphere = inst.sphere()?.remove_facets(&extra)?;
    let h = sphere.to_hypergraph();
    let start = Instant::now();

    if a.greedy {
        let cert = greedy_transversal(&h)?;
        writeln!(
            out,
            "method=greedy tau<={} certificate={} ms={:.1}",
            cert.size(),
            join(&cert.vertices),
            start.elapsed().as_secs_f64() * 1e3
        )?;
        table(out, &[("upper bound", cert.size().to_string()), ("n", h.vertex_count().to_string())])?;
        return Ok(EXIT_OK);
    }
    if let Some(max) = a.brute {
        let found = brute_force_tau(&h, max);
        match found {
            Some(t) => writeln!(out, "method=brute tau={t}")?,
            None => writeln!(out, "method=brute tau>{max}")?,
        }
        return Ok(EXIT_OK);
    }

    let options = SolveOptions {
        node_limit: a.node_cap,
        parallel: a.parallel,
    };
    let (cert, stats) = min_transversal_with(&h, &options)?;
    let relation = if cert.optimal { "=" } else { "<=" };
    writeln!(
        out,
        "method=exact tau{relation}{} optimal={} certificate={} nodes={} reductions={} root_lower_bound={} greedy={} ms={:.1}",
        cert.size(),
        cert.optimal,
        join(&cert.vertices),
        stats.nodes_explored,
        stats.reductions_applied,
        stats.root_lower_bound,
        stats.greedy_size,
        stats.wall_time.as_secs_f64() * 1e3
    )?;
    table(
        out,
        &[
            ("n", h.vertex_count().to_string()),
            ("facets", h.edge_count().to_string()),
            ("tau", format!("{relation}{}", cert.size())),
            ("matching bound", matching_lower_bound(&h).to_string()),
            ("greedy", stats.greedy_size.to_string()),
            ("nodes", stats.nodes_explored.to_string()),
        ],
    )?;
    Ok(if stats.limit_hit { EXIT_NODE_CAP } else { EXIT_OK })
}

fn table(out: &mut dyn Write, rows: &[(&str, String)]) -> std::io::Result<()> {
    let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    for (k, v) in rows {
        writeln!(out, "  {k:<width$}  {v}")?;
    }
    Ok(())
}

fn cover37(input: &Path, out: &mut dyn Write) -> anyhow::Result<i32> {
    let inst = io::read(input)?;
    let ball: &StackedBall = inst
        .ball()
        .ok_or_else(|| Error::InvalidParameter("cover37 needs a ball file".into()))?;
    let pair = transversal_3n7(ball)?;
    let n = ball.vertices().len();
    let bound = bound_3n7(n);
    writeln!(
        out,
        "n={n} bound={bound} size={} t1={} t2={} last_hits={} status=verified",
        pair.best_size(),
        join(&pair.t1),
        join(&pair.t2),
        pair.last_facet_hits
    )?;
    table(
        out,
        &[
            ("n", n.to_string()),
            ("ceil(3n/7)", bound.to_string()),
            ("|T1|", pair.t1.len().to_string()),
            ("|T2|", pair.t2.len().to_string()),
        ],
    )?;
    Ok(EXIT_OK)
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let options = VerifyOptions {
        node_cap: a.node_cap,
        parallel: a.parallel,
    };
    let reports = match (&a.instance, a.suite) {
        (Some(path), _) => verify::verify_instance(&io::read(path)?, a.claim_tau, &options)?,
        (None, suite) => {
            let suite = match suite.unwrap_or(SuiteArg::Paper) {
                SuiteArg::Paper => Suite::Paper,
                SuiteArg::Oracle => Suite::Oracle,
                SuiteArg::All => Suite::All,
            };
            verify::run_suite(suite, &options)
        }
    };
    for r in &reports {
        writeln!(out, "{}", r.key_values())?;
    }
    for r in &reports {
        writeln!(out, "  {:<8} {:<18} {}  ({})", r.claim, r.status.to_string(), r.instance, r.computed)?;
    }
    let code = if reports.iter().any(|r| r.status == Status::Violated) {
        EXIT_VIOLATED
    } else {
        EXIT_OK
    };
    Ok(code)
}

fn enumerate(d: usize, m: usize, dir: &Path, out: &mut dyn Write) -> anyhow::Result<i32> {
    if d == 0 || m == 0 {
        return Err(Error::InvalidParameter("need d >= 1 and m >= 1".into()).into());
    }
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let balls = enumerate_linear_balls(d, m);
    let total = balls.total();
    let width = total.to_string().len();
    for (i, ball) in balls.enumerate() {
        let path = dir.join(format!("ball_d{d}_m{m}_{i:0width$}.txt"));
        io::write(&path, &Instance::from_ball(ball)).with_context(|| format!("writing {}", path.display()))?;
    }
    writeln!(out, "d={d} m={m} files={total} dir={}", dir.display())?;
    Ok(EXIT_OK)
}

fn bench(sizes: &[usize], parallel: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    writeln!(out, "n,family,tau,cover37,bound,solve_ms,cover_ms")?;
    for &n in sizes {
        if n < 4 {
            return Err(Error::InvalidParameter(format!("size {n} is below 4")).into());
        }
        let (family, ball) = if n % 14 == 0 {
            ("linear-lb", linear_lower_bound(2, n / 14)?.ball)
        } else {
            ("path", path_ball(2, n - 3)?)
        };
        let h = ball.boundary().to_hypergraph();
        let start = Instant::now();
        let (cert, _) = min_transversal_with(
            &h,
            &SolveOptions {
                node_limit: None,
                parallel,
            },
        )?;
        let solve = start.elapsed();
        let start = Instant::now();
        let pair = transversal_3n7(&ball)?;
        let cover = start.elapsed();
        writeln!(
            out,
            "{n},{family},{},{},{},{:.2},{:.2}",
            cert.size(),
            pair.best_size(),
            bound_3n7(n),
            solve.as_secs_f64() * 1e3,
            cover.as_secs_f64() * 1e3
        )?;
    }
    Ok(EXIT_OK)
}
