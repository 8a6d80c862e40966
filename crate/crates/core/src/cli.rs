//! Command-line front end. Exit codes: 0 when every report passes, 1 on a
//! verification failure, 2 on usage or precondition errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qmatrix::{
    antipode_axiom_report, exterior_trace_report, frobenius_minor_failures, main_theorem_report, QAlgebra,
};
use crate::quiver::{self, Quiver, Triangulation};
use crate::report::{combine, Report, Verdict};
use crate::scalar::{Ring, RootParams};
use crate::symfun::{pbar, span_gap_report};
use crate::{annulus, matcheck, qtorus};

#[derive(Parser, Debug)]
#[command(name = "qfrob", version, about = "Exact checks for Frobenius maps of quantized SL_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the reduced power elementary polynomial pbar_{m,k} at rank n.
    Pbar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite and print its reports.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        /// Order d of the root of unity omega_hat.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Report elapsed_ms as 0 so that output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the matrices of a triangulated surface as JSON.
    Quiver {
        /// Surface JSON: {"n": .., "faces": .., "gluings": [[f, s, f, s], ..]}.
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        surface: Option<PathBuf>,
        /// Built-in surface: P3, P4, P5 or annulus (needs --n).
        #[arg(long, requires = "n")]
        preset: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        /// Letters of QHKP, optionally with `extended` (e.g. `QK,extended`).
        #[arg(long, default_value = "QHKP")]
        emit: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Frobenius,
    Classical,
    Hopf,
    Torus,
    Quiver,
    Annulus,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

pub fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Pbar { n, m, k, format } => {
            emit(&render_pbar(n, m, k, format)?, None)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            n,
            order,
            k,
            m,
            trials,
            seed,
            level,
            format,
            no_timing,
            out,
        } => {
            let opts = VerifyOptions {
                n,
                order,
                k,
                m,
                trials,
                seed,
                level,
            };
            let mut reports = run_suite(suite, &opts)?;
            if no_timing {
                reports.iter_mut().for_each(|r| r.elapsed_ms = 0);
            }
            emit(&render_reports(&reports, format)?, out.as_ref())?;
            Ok(combine(reports.iter().map(|r| r.verdict)).exit_code())
        }
        Command::Quiver {
            surface,
            preset,
            n,
            emit: what,
            out,
        } => {
            let t = match (surface, preset) {
                (Some(path), _) => Triangulation::from_json(&std::fs::read_to_string(path)?)?,
                (None, Some(name)) => Triangulation::preset(&name, n.expect("clap enforces --n"))?,
                (None, None) => unreachable!("clap requires a surface"),
            };
            let (text, code) = render_quiver(&t, &what)?;
            emit(&text, out.as_ref())?;
            Ok(code)
        }
    }
}

pub fn render_pbar(n: usize, m: u32, k: usize, format: Format) -> Result<String> {
    let p = pbar(n, m, k)?;
    Ok(match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(&p)?),
        Format::Csv => {
            let mut s: String = (1..n).map(|i| format!("y{i},")).collect();
            s.push_str("coeff\n");
            for (e, c) in p.terms() {
                for a in e {
                    s.push_str(&format!("{a},"));
                }
                s.push_str(&format!("{c}\n"));
            }
            s
        }
    })
}

pub fn render_reports(reports: &[Report], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(reports)?),
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Csv => {
            let mut s = String::from("verdict,residual_terms,elapsed_ms,claim\n");
            for r in reports {
                s.push_str(&format!("{},{},{},\"{}\"\n", r.verdict, r.residual_terms, r.elapsed_ms, r.claim));
            }
            s
        }
    })
}

/// Matrices of `t` as JSON, and the exit code. A singular `H` or non-integral
/// `K` yields a failing report with code 1.
pub fn render_quiver(t: &Triangulation, what: &str) -> Result<(String, i32)> {
    let letters: String = what.split(',').filter(|p| *p != "extended").collect();
    let want_extended = what.split(',').any(|p| p == "extended");
    if let Some(c) = letters.chars().find(|c| !"QHKP".contains(*c)) {
        return Err(Error::InvalidArgument(format!("unknown matrix {c} in --emit")));
    }
    let has_boundary = !t.boundary_slots().is_empty();
    if want_extended && !has_boundary {
        return Err(Error::Surface("closed surface has no extension".into()));
    }
    let quiver = Quiver::build(t)?;
    let matrices = match quiver.matrices() {
        Ok(m) => m,
        Err(e @ (Error::Singular | Error::NonIntegral(..))) => {
            let rep = quiver::quiver_report("input surface", t)?;
            eprintln!("finding: {e}");
            return Ok((format!("{}\n", serde_json::to_string(&rep)?), 1));
        }
        Err(e) => return Err(e),
    };
    let mut v = matrices.to_json_filtered(&letters)?;
    let obj = v.as_object_mut().unwrap();
    let hk_ok = quiver::is_scalar_identity(&quiver::int_mul(&matrices.h, &matrices.k), t.n as i64);
    obj.insert("HK_is_n_identity".into(), hk_ok.into());
    if has_boundary {
        obj.insert("extended".into(), serde_json::to_value(quiver::extend(t)?)?);
    }
    Ok((format!("{}\n", serde_json::to_string(&v)?), if hk_ok { 0 } else { 1 }))
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n: Option<usize>,
    pub order: Option<u32>,
    pub k: Option<usize>,
    pub m: Option<u32>,
    pub trials: usize,
    pub seed: u64,
    pub level: Level,
}

type Job = Box<dyn Fn() -> Result<Report> + Send + Sync>;

/// `(n, d)` pairs checked by the Frobenius suite.
pub fn root_pairs(level: Level) -> Vec<(usize, u32)> {
    let mut v = vec![(2, 48), (3, 16)];
    if level == Level::Full {
        v.extend([(2, 80), (3, 144), (4, 5)]);
    }
    v
}

/// Values of `k` run by default. At rank 4 the `k = 3` case needs more than
/// 4 GB of straightening cache, so it only runs when asked for with `--k`.
fn default_ks(n: usize) -> Vec<usize> {
    if n == 4 {
        vec![1, 2]
    } else {
        (1..n).collect()
    }
}

fn with_root(mut r: Report, n: usize, d: u32) -> Report {
    let p = RootParams::new(d, n);
    r.params.insert("eta_hat_exp".into(), p.eta_hat_exp.into());
    r.params.insert("eta".into(), p.eta_sign.into());
    r.params.insert("N".into(), p.big_n.into());
    r
}

fn minor_report(n: usize, d: u32) -> Report {
    let rep = Report::start(
        format!("Frobenius sends quantum minors to N-th powers at rank {n}"),
        "Phi(M_eta) = (M_omega)^N",
    )
    .param("n", n)
    .param("d", d);
    let bad = frobenius_minor_failures(&RootParams::new(d, n));
    rep.param("failures", &bad)
        .finish(Verdict::from_bool(bad.is_empty()), bad.len())
}

fn ks(n: usize, k: Option<usize>) -> Vec<usize> {
    k.map_or_else(|| (1..n).collect(), |k| vec![k])
}

fn frobenius_jobs(o: &VerifyOptions) -> Result<Vec<Job>> {
    let pairs = match (o.n, o.order) {
        (Some(n), Some(d)) => vec![(n, d)],
        (None, None) => root_pairs(o.level),
        _ => return Err(Error::InvalidArgument("--n and --order go together".into())),
    };
    let mut jobs: Vec<Job> = Vec::new();
    for (n, d) in pairs {
        for k in o.k.map_or_else(|| default_ks(n), |k| vec![k]) {
            crate::qmatrix::check_main_theorem_preconditions(n, d, k)?;
            jobs.push(Box::new(move || Ok(with_root(main_theorem_report(n, d, k)?, n, d))));
        }
        jobs.push(Box::new(move || Ok(with_root(minor_report(n, d), n, d))));
    }
    Ok(jobs)
}

fn classical_jobs(o: &VerifyOptions) -> Result<Vec<Job>> {
    let (trials, seed) = (o.trials, o.seed);
    let mut jobs: Vec<Job> = Vec::new();
    if let (Some(n), Some(m)) = (o.n, o.m) {
        for k in ks(n, o.k) {
            pbar(n, m, k)?;
            jobs.push(Box::new(move || matcheck::verify_pbar_identity(n, m, k, trials, seed)));
        }
        return Ok(jobs);
    }
    let max_m = if o.level == Level::Full { 6 } else { 4 };
    let ns: Vec<usize> = o.n.map_or_else(|| vec![2, 3, 4], |n| vec![n]);
    for &n in &ns {
        for m in 1..=max_m {
            for k in ks(n, o.k) {
                pbar(n, m, k)?;
                jobs.push(Box::new(move || matcheck::verify_pbar_identity(n, m, k, trials, seed)));
            }
        }
        for k in 1..=n {
            jobs.push(Box::new(move || matcheck::cauchy_binet_check(n, k, trials, seed)));
        }
    }
    jobs.push(Box::new(|| span_gap_report(2, 12)));
    Ok(jobs)
}

fn hopf_jobs(o: &VerifyOptions) -> Vec<Job> {
    let ns: Vec<usize> = o.n.map_or_else(|| vec![2, 3], |n| vec![n]);
    let mut jobs: Vec<Job> = Vec::new();
    for n in ns {
        jobs.push(Box::new(move || Ok(antipode_axiom_report(&QAlgebra::new(n, &Ring::Laurent)))));
        jobs.push(Box::new(move || Ok(exterior_trace_report(&QAlgebra::new(n, &Ring::Laurent)))));
    }
    jobs
}

fn torus_jobs(o: &VerifyOptions) -> Result<Vec<Job>> {
    let (n, d, trials, seed) = (o.n.unwrap_or(2), o.order.unwrap_or(48), o.trials, o.seed);
    let q = Quiver::build(&Triangulation::preset("P3", n as u32)?)?.matrices()?;
    let r = q.q.len();
    let id: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
    let two_id: Vec<Vec<i64>> = id.iter().map(|row| row.iter().map(|x| 2 * x).collect()).collect();
    let four_q: Vec<Vec<i64>> = q.q.iter().map(|row| row.iter().map(|x| 4 * x).collect()).collect();
    let cases = vec![(id, q.q.clone(), q.q.clone()), (q.k.clone(), q.p.clone(), q.q.clone()), (two_id, four_q, q.q)];
    Ok(cases
        .into_iter()
        .map(|(k, src, dst)| -> Job {
            Box::new(move || qtorus::check_eq_mono(&k, &src, &dst, d, n, trials, seed))
        })
        .collect())
}

fn quiver_jobs(o: &VerifyOptions) -> Vec<Job> {
    let ns: Vec<u32> = match (o.n, o.level) {
        (Some(n), _) => vec![n as u32],
        (None, Level::Quick) => vec![2, 3],
        (None, Level::Full) => vec![2, 3, 4],
    };
    let mut jobs: Vec<Job> = Vec::new();
    for name in ["P3", "P4", "P5", "annulus"] {
        for &n in &ns {
            jobs.push(Box::new(move || quiver::quiver_report(name, &Triangulation::preset(name, n)?)));
        }
    }
    jobs
}

fn annulus_jobs(o: &VerifyOptions) -> Result<Vec<Job>> {
    let pairs = match (o.n, o.order) {
        (Some(n), Some(d)) => vec![(n, d)],
        (None, None) => match o.level {
            Level::Quick => vec![(2, 48)],
            Level::Full => vec![(2, 48), (3, 16)],
        },
        _ => return Err(Error::InvalidArgument("--n and --order go together".into())),
    };
    let mut jobs: Vec<Job> = Vec::new();
    for (n, d) in pairs {
        crate::qmatrix::check_main_theorem_preconditions(n, d, 1)?;
        let bound = if n == 2 { 2 } else { 1 };
        jobs.push(Box::new(move || Ok(with_root(annulus::check_square(n, d, bound)?, n, d))));
    }
    let ns: Vec<usize> = o.n.map_or_else(|| vec![2, 3], |n| vec![n]);
    let ms: Vec<u32> = o.m.map_or_else(|| (1..=4).collect(), |m| vec![m]);
    for &n in &ns {
        for &m in &ms {
            for k in ks(n, o.k) {
                jobs.push(Box::new(move || annulus::classical_power_check(n, m, k)));
            }
        }
    }
    Ok(jobs)
}

fn suite_jobs(suite: Suite, o: &VerifyOptions) -> Result<Vec<Job>> {
    Ok(match suite {
        Suite::Frobenius => frobenius_jobs(o)?,
        Suite::Classical => classical_jobs(o)?,
        Suite::Hopf => hopf_jobs(o),
        Suite::Torus => torus_jobs(o)?,
        Suite::Quiver => quiver_jobs(o),
        Suite::Annulus => annulus_jobs(o)?,
        Suite::All => {
            let base = VerifyOptions {
                n: None,
                order: None,
                k: None,
                m: None,
                ..o.clone()
            };
            let mut jobs = Vec::new();
            for s in [Suite::Frobenius, Suite::Classical, Suite::Hopf, Suite::Torus, Suite::Quiver, Suite::Annulus] {
                jobs.extend(suite_jobs(s, &base)?);
            }
            jobs
        }
    })
}

/// Runs a suite on a pool capped by `QFROB_THREADS`; reports come back in
/// job order regardless of scheduling.
pub fn run_suite(suite: Suite, o: &VerifyOptions) -> Result<Vec<Report>> {
    let jobs = suite_jobs(suite, o)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = std::env::var("QFROB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        builder = builder.num_threads(t.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    pool.install(|| jobs.par_iter().map(|j| j()).collect())
}
