//! The `jigsaw` command-line front end.
//!
//! Every command writes an effective-configuration banner to stderr: a
//! `#`-prefixed command line with all defaults filled in, followed by the
//! resolved probability vector where one applies. Rerunning the banner line
//! reproduces the output exactly.
//!
//! Exit codes: 0 success, 1 fuzz counterexample, 2 invalid flags,
//! 3 infeasible profile, 4 I/O or input-file failure, 5 `--trajectory`
//! requested with `--mode async`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::engine::{percolate, FaultInjection, Mode, RoundRecord};
use crate::experiments::{
    format_float, rows_to_csv, rows_to_json, sweep_c, threshold_bisect, threshold_to_json, ExperimentError,
    ProfileRule, RunOptions, SweepRow,
};
use crate::fuzz::{run_fuzz, FuzzConfig};
use crate::graph::{read_jfg, sample_rfold, write_jfg_file, FormatError, ProbabilityProfile, ProfileKind};
use crate::rng::Seed;
use crate::witness::{staged_pipeline, PipelineConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_TRAJECTORY_ASYNC: i32 = 5;

const LN_NOTE: &str = "All logarithms are natural (ln). With --c the target product of the edge \
probabilities is c ln n / n for r = 1 and c / (n (ln n)^(r-1)) for r >= 2.";

#[derive(Parser, Debug)]
#[command(name = "jigsaw", version, about = "Multi-coloured jigsaw percolation on r-fold random graphs", after_help = LN_NOTE)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sample an r-fold random graph and write it as a jfg file.
    Sample(SampleArgs),
    /// Run the jigsaw process on a jfg file and print the outcome as JSON.
    Run(RunArgs),
    /// Estimate the percolation probability over a grid of c values (CSV or JSON).
    Sweep(SweepArgs),
    /// Locate the c at which the percolation probability crosses 1/2.
    Bisect(BisectArgs),
    /// Run the staged witness pipeline and print its report as JSON.
    Witness(WitnessArgs),
    /// Compare the engines on random small instances.
    Fuzz(FuzzArgs),
}

/// Either an explicit probability list or a critical constant with a rule.
#[derive(Args, Debug)]
pub struct ProfileArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: usize,
    /// Number of colours.
    #[arg(long)]
    pub r: usize,
    /// Explicit edge probabilities, one per colour, ascending.
    #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true,
          conflicts_with_all = ["c", "profile", "a"], required_unless_present = "c")]
    pub p: Option<Vec<f64>>,
    /// Critical constant (natural log).
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Profile rule used with --c [default: balanced].
    #[arg(long, value_enum)]
    pub profile: Option<ProfileKind>,
    /// Balanced rule multiplier: p_1 = a ln n / n [default: 3].
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Sync)]
    pub mode: Mode,
    /// Include the per-round trajectory (not available for async).
    #[arg(long)]
    pub trajectory: bool,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct ParallelArgs {
    /// Worker threads; 0 uses all cores. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Record wall-clock time per row (makes output machine dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// Ascending comma-separated c values.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true, allow_negative_numbers = true)]
    pub c_grid: Vec<f64>,
    #[arg(long, value_enum, default_value_t = ProfileKind::Balanced)]
    pub profile: ProfileKind,
    #[arg(long, default_value_t = 3.0)]
    pub a: f64,
    #[arg(long, default_value_t = 50)]
    pub replicates: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub parallel: ParallelArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BisectArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = ProfileKind::Balanced)]
    pub profile: ProfileKind,
    #[arg(long, default_value_t = 3.0)]
    pub a: f64,
    #[arg(long, default_value_t = 50)]
    pub replicates: u64,
    /// Stop once c_hi - c_lo is at most this.
    #[arg(long, default_value_t = 0.05)]
    pub tol: f64,
    #[arg(long)]
    pub c_lo: f64,
    #[arg(long)]
    pub c_hi: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub parallel: ParallelArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Stage I target size [default: ceil((ln n)^(1+1/r))].
    #[arg(long)]
    pub t1: Option<usize>,
    /// Stage I round cap [default: n / (2 t1)].
    #[arg(long)]
    pub max_rounds: Option<usize>,
    /// Stage II target size [default: n / 2^(r+2)].
    #[arg(long)]
    pub target: Option<usize>,
    /// Resolve stage I choices at random instead of lowest-first.
    #[arg(long)]
    pub seeded_choice: bool,
    #[arg(long, default_value_t = 0)]
    pub retries: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FuzzArgs {
    #[arg(long, default_value_t = 1000)]
    pub instances: u64,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_r: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the first counterexample [default: beside the report,
    /// or counterexample.jfg].
    #[arg(long)]
    pub counterexample: Option<PathBuf>,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

type CliResult = Result<i32, CliError>;

fn usage(message: impl Into<String>) -> CliError {
    CliError::new(EXIT_USAGE, message)
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::new(EXIT_IO, format!("{}: {e}", path.display()))
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        let code = match e {
            ExperimentError::Infeasible(_) => EXIT_INFEASIBLE,
            ExperimentError::ThreadPool(_) => EXIT_IO,
            _ => EXIT_USAGE,
        };
        CliError::new(code, e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
    };
    match dispatch(&cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

pub fn run_from_env() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn dispatch(command: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    match command {
        Command::Sample(a) => cmd_sample(a, stdout, stderr),
        Command::Run(a) => cmd_run(a, stdout, stderr),
        Command::Sweep(a) => cmd_sweep(a, stdout, stderr),
        Command::Bisect(a) => cmd_bisect(a, stdout, stderr),
        Command::Witness(a) => cmd_witness(a, stdout, stderr),
        Command::Fuzz(a) => cmd_fuzz(a, stdout, stderr),
    }
}

fn join_floats(xs: &[f64]) -> String {
    xs.iter().map(|&x| format_float(x)).collect::<Vec<_>>().join(",")
}

fn path_arg(p: &Path) -> String {
    p.display().to_string()
}

fn banner(stderr: &mut dyn Write, command: &str, flags: &[(&str, String)]) {
    let mut line = format!("# jigsaw {command}");
    for (name, value) in flags {
        if value.is_empty() {
            let _ = write!(line, " --{name}");
        } else {
            let _ = write!(line, " --{name} {value}");
        }
    }
    let _ = writeln!(stderr, "{line}");
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_error(path, e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::new(EXIT_IO, format!("stdout: {e}"))),
    }
}

/// Profile flags as resolved, with every default filled in.
struct ResolvedProfile {
    profile: ProbabilityProfile,
    flags: Vec<(&'static str, String)>,
}

fn resolve_profile(args: &ProfileArgs) -> Result<ResolvedProfile, CliError> {
    let (n, r) = (args.n, args.r);
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if r == 0 {
        return Err(usage("--r must be at least 1"));
    }
    let mut flags = vec![("n", n.to_string()), ("r", r.to_string())];
    if let Some(p) = &args.p {
        if p.len() != r {
            return Err(usage(format!("--p lists {} probabilities but --r is {r}", p.len())));
        }
        let profile = ProbabilityProfile::new(p.clone()).map_err(|e| usage(format!("--p: {e}")))?;
        flags.push(("p", join_floats(p)));
        return Ok(ResolvedProfile { profile, flags });
    }
    let c = args.c.expect("clap requires --c without --p");
    let kind = args.profile.unwrap_or(ProfileKind::Balanced);
    let rule = match kind {
        ProfileKind::Balanced => ProfileRule::balanced(c, args.a.unwrap_or(3.0)),
        ProfileKind::Equal if args.a.is_some() => return Err(usage("--a applies only to --profile balanced")),
        ProfileKind::Equal => ProfileRule::equal(c),
        ProfileKind::Explicit => return Err(usage("--profile explicit needs --p instead of --c")),
    };
    flags.push(("c", format_float(c)));
    flags.push(("profile", kind.to_string()));
    if kind == ProfileKind::Balanced {
        flags.push(("a", format_float(rule.a)));
    }
    let profile = rule.profile(n, r)?;
    Ok(ResolvedProfile { profile, flags })
}

fn effective_p(stderr: &mut dyn Write, profile: &ProbabilityProfile) {
    let _ = writeln!(stderr, "# effective p: {}", join_floats(profile.p()));
}

fn cmd_sample(args: &SampleArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let resolved = resolve_profile(&args.profile)?;
    let mut flags = resolved.flags;
    flags.push(("seed", args.seed.to_string()));
    flags.push(("out", path_arg(&args.out)));
    banner(stderr, "sample", &flags);
    effective_p(stderr, &resolved.profile);
    let g = sample_rfold(args.profile.n, &resolved.profile, Seed(args.seed)).map_err(|e| usage(e.to_string()))?;
    write_jfg_file(&g, &args.out).map_err(|e| io_error(&args.out, e))?;
    let mut text = String::new();
    for (colour, count) in g.edge_counts().into_iter().enumerate() {
        let _ = writeln!(text, "colour {} {count}", colour + 1);
    }
    emit(None, &text, stdout)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct RunJson<'a> {
    percolated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    rounds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trajectory: Option<&'a [RoundRecord]>,
}

fn cmd_run(args: &RunArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let mode = args.mode.to_possible_value().expect("visible mode").get_name().to_string();
    let mut flags = vec![("in", path_arg(&args.input)), ("mode", mode)];
    if args.trajectory {
        flags.push(("trajectory", String::new()));
    }
    if let Some(out) = &args.out {
        flags.push(("out", path_arg(out)));
    }
    banner(stderr, "run", &flags);
    if args.trajectory && args.mode == Mode::Async {
        return Err(CliError::new(
            EXIT_TRAJECTORY_ASYNC,
            "the async engine has no rounds, so --trajectory is unavailable",
        ));
    }
    let g = read_jfg(&args.input).map_err(|e| match e {
        FormatError::Io(e) => io_error(&args.input, e),
        other => io_error(&args.input, other),
    })?;
    let run = percolate(&g, args.mode);
    let json = RunJson {
        percolated: run.percolated,
        rounds: run.rounds,
        trajectory: run.trajectory.as_deref().filter(|_| args.trajectory),
    };
    let text = serde_json::to_string(&json).expect("serialisable run") + "\n";
    emit(args.out.as_deref(), &text, stdout)?;
    Ok(EXIT_OK)
}

fn parallel_flags(flags: &mut Vec<(&'static str, String)>, p: &ParallelArgs) -> RunOptions {
    flags.push(("threads", p.threads.to_string()));
    if p.timing {
        flags.push(("timing", String::new()));
    }
    RunOptions {
        threads: p.threads,
        timing: p.timing,
    }
}

fn rule_for(kind: ProfileKind, a: f64) -> Result<ProfileRule, CliError> {
    match kind {
        ProfileKind::Balanced => Ok(ProfileRule::balanced(1.0, a)),
        ProfileKind::Equal => Ok(ProfileRule::equal(1.0)),
        ProfileKind::Explicit => Err(usage("c-parametrised commands need --profile balanced or equal")),
    }
}

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let rule = rule_for(args.profile, args.a)?;
    let mut flags = vec![
        ("n", args.n.to_string()),
        ("r", args.r.to_string()),
        ("c-grid", join_floats(&args.c_grid)),
        ("profile", args.profile.to_string()),
    ];
    if args.profile == ProfileKind::Balanced {
        flags.push(("a", format_float(args.a)));
    }
    flags.push(("replicates", args.replicates.to_string()));
    flags.push(("seed", args.seed.to_string()));
    flags.push(("format", args.format.to_possible_value().expect("visible").get_name().to_string()));
    let options = parallel_flags(&mut flags, &args.parallel);
    if let Some(out) = &args.out {
        flags.push(("out", path_arg(out)));
    }
    banner(stderr, "sweep", &flags);
    let rows: Vec<SweepRow> = sweep_c(args.n, args.r, &args.c_grid, &rule, args.replicates, Seed(args.seed), &options)?
        .into_iter()
        .map(|e| e.row)
        .collect();
    let text = match args.format {
        Format::Csv => rows_to_csv(&rows),
        Format::Json => rows_to_json(&rows) + "\n",
    };
    emit(args.out.as_deref(), &text, stdout)?;
    Ok(EXIT_OK)
}

fn cmd_bisect(args: &BisectArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let rule = rule_for(args.profile, args.a)?;
    let mut flags = vec![
        ("n", args.n.to_string()),
        ("r", args.r.to_string()),
        ("profile", args.profile.to_string()),
    ];
    if args.profile == ProfileKind::Balanced {
        flags.push(("a", format_float(args.a)));
    }
    flags.extend([
        ("replicates", args.replicates.to_string()),
        ("tol", format_float(args.tol)),
        ("c-lo", format_float(args.c_lo)),
        ("c-hi", format_float(args.c_hi)),
        ("seed", args.seed.to_string()),
    ]);
    let options = parallel_flags(&mut flags, &args.parallel);
    if let Some(out) = &args.out {
        flags.push(("out", path_arg(out)));
    }
    banner(stderr, "bisect", &flags);
    let est = threshold_bisect(
        args.n,
        args.r,
        &rule,
        args.replicates,
        args.tol,
        (args.c_lo, args.c_hi),
        Seed(args.seed),
        &options,
    )?;
    emit(args.out.as_deref(), &(threshold_to_json(&est) + "\n"), stdout)?;
    Ok(EXIT_OK)
}

fn cmd_witness(args: &WitnessArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let resolved = resolve_profile(&args.profile)?;
    let mut flags = resolved.flags;
    flags.push(("seed", args.seed.to_string()));
    for (name, value) in [("t1", args.t1), ("max-rounds", args.max_rounds), ("target", args.target)] {
        if let Some(v) = value {
            flags.push((name, v.to_string()));
        }
    }
    if args.seeded_choice {
        flags.push(("seeded-choice", String::new()));
    }
    flags.push(("retries", args.retries.to_string()));
    if let Some(out) = &args.out {
        flags.push(("out", path_arg(out)));
    }
    banner(stderr, "witness", &flags);
    effective_p(stderr, &resolved.profile);
    if args.t1 == Some(0) || args.max_rounds == Some(0) {
        return Err(usage("--t1 and --max-rounds must be at least 1"));
    }
    let config = PipelineConfig {
        t1: args.t1,
        max_rounds: args.max_rounds,
        target: args.target,
        seeded_choice: args.seeded_choice,
        retries: args.retries,
    };
    let report = staged_pipeline(args.profile.n, &resolved.profile, Seed(args.seed), &config)
        .map_err(|e| usage(e.to_string()))?;
    let text = serde_json::to_string_pretty(&report).expect("serialisable report") + "\n";
    emit(args.out.as_deref(), &text, stdout)?;
    Ok(EXIT_OK)
}

fn counterexample_path(args: &FuzzArgs) -> PathBuf {
    if let Some(path) = &args.counterexample {
        return path.clone();
    }
    match &args.out {
        Some(report) => report.with_extension("counterexample.jfg"),
        None => PathBuf::from("counterexample.jfg"),
    }
}

fn cmd_fuzz(args: &FuzzArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult {
    let mut flags = vec![
        ("instances", args.instances.to_string()),
        ("max-n", args.max_n.to_string()),
        ("max-r", args.max_r.to_string()),
        ("seed", args.seed.to_string()),
    ];
    if let Some(out) = &args.out {
        flags.push(("out", path_arg(out)));
    }
    if let Some(path) = &args.counterexample {
        flags.push(("counterexample", path_arg(path)));
    }
    if args.inject_fault {
        flags.push(("inject-fault", String::new()));
    }
    banner(stderr, "fuzz", &flags);
    if args.max_n == 0 || args.max_r == 0 || args.max_r > crate::graph::MAX_COLOURS {
        return Err(usage(format!(
            "--max-n must be at least 1 and --max-r in 1..={}",
            crate::graph::MAX_COLOURS
        )));
    }
    let mut config = FuzzConfig::new(args.instances, args.max_n, args.max_r, Seed(args.seed));
    if args.inject_fault {
        config.fault = FaultInjection::FlipFirstMaskBit;
    }
    let report = run_fuzz(&config);
    if let Some(path) = &args.out {
        let json = serde_json::to_string_pretty(&report).expect("serialisable report") + "\n";
        std::fs::write(path, json).map_err(|e| io_error(path, e))?;
    }
    let mut text = report.summary() + "\n";
    if let Some(g) = &report.counterexample {
        let path = counterexample_path(args);
        write_jfg_file(g, &path).map_err(|e| io_error(&path, e))?;
        for m in &report.mismatches {
            let _ = writeln!(text, "instance {} (seed {}, n {}, r {}): {}", m.instance, m.seed, m.n, m.r, m.what);
        }
        let _ = writeln!(text, "counterexample written to {}", path.display());
    }
    emit(None, &text, stdout)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("jigsaw").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&[]).0, EXIT_USAGE);
        assert_eq!(run(&["sample", "--n", "5"]).0, EXIT_USAGE);
        let both = ["sample", "--n", "5", "--r", "1", "--p", "0.5", "--c", "1", "--out", "x.jfg"];
        assert_eq!(run(&both).0, EXIT_USAGE);
        let wrong_len = ["witness", "--n", "5", "--r", "2", "--p", "0.5"];
        assert_eq!(run(&wrong_len).0, EXIT_USAGE);
        let unsorted = ["witness", "--n", "5", "--r", "2", "--p", "0.5,0.1"];
        assert_eq!(run(&unsorted).0, EXIT_USAGE);
    }

    #[test]
    fn help_mentions_natural_log() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("natural (ln)"));
    }

    #[test]
    fn infeasible_profile_exits_three() {
        let (code, _, err) = run(&["witness", "--n", "4096", "--r", "2", "--c", "0.5", "--profile", "balanced"]);
        assert_eq!(code, EXIT_INFEASIBLE, "{err}");
    }

    #[test]
    fn witness_on_empty_profile_fails_in_stage_one() {
        let (code, out, err) = run(&["witness", "--n", "2000", "--r", "2", "--p", "0,0", "--seed", "3"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.starts_with("# jigsaw witness --n 2000 --r 2 --p 0,0 --seed 3 --retries 0\n"), "{err}");
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(report["stage"], "I");
        for stage in ["stage1", "stage2", "stage3"] {
            assert_eq!(report["success"][stage], false);
        }
    }

    #[test]
    fn fuzz_with_no_instances_passes() {
        let (code, out, _) = run(&["fuzz", "--instances", "0"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("0 mismatches"));
    }
}
