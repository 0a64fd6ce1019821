//! Command-line front end. Exit codes: 0 success, 1 a verification failed,
//! 2 usage or input error.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::minors::{self, Mode};
use crate::morphism::{ClusterMorphism, Elementary, MorphismJson, SeedAmbient};
use crate::quiver::ExchangeQuiver;
use crate::richardson;
use crate::seed::Seed;
use crate::weyl::{CartanDatum, CartanJson, Word};

#[derive(Debug, Parser)]
#[command(name = "cluster-richardson", version, about = "Cluster seeds, morphisms and type-A minor checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build, mutate and explore seeds
    #[command(subcommand)]
    Seed(SeedCmd),
    /// Elementary morphisms, validation, decomposition, kernels
    #[command(subcommand)]
    Morphism(MorphismCmd),
    /// Reduced words, beta roots, Bruhat order
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Seeds and morphisms attached to a reduced word and a prefix
    #[command(subcommand)]
    Richardson(RichardsonCmd),
    /// Type-A minor checks
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum SeedCmd {
    /// N_w seed of a reduced word, or the initial seed of an explicit matrix.
    Build {
        #[arg(long)]
        cartan: Option<String>,
        #[arg(long)]
        word: Option<Word>,
        /// Square matrix on vertices 1..n, rows separated by `;`.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["cartan", "word"])]
        b: Option<String>,
        /// Mutable vertices for `--b` (default: all).
        #[arg(long)]
        mutable: Option<Word>,
        #[command(flatten)]
        output: Output,
    },
    Mutate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        seq: Word,
        #[command(flatten)]
        output: Output,
    },
    /// Cluster variables reachable within `depth` mutations.
    Explore {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Freezing,
    Similarity,
    Deleting,
    Embedding,
}

#[derive(Debug, Subcommand)]
enum MorphismCmd {
    /// Elementary morphism anchored at a seed (target for freezing and
    /// embedding, source otherwise).
    Make {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Vertex list (`1,3`) or, for similarity, a permutation (`1:2,2:1`).
        #[arg(long, default_value = "")]
        data: String,
        #[arg(long)]
        seed: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Kernel {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    Apply {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Debug, Subcommand)]
enum WeylCmd {
    Reduced {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        word: Word,
    },
    Betas {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        word: Word,
    },
    Frozen {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        word: Word,
    },
    /// Whether `l(v^-1 w) = l(w) - l(v)`.
    Additive {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        w: Word,
        #[arg(long)]
        v: Word,
    },
    /// Whether `v <= w`.
    Bruhat {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        v: Word,
        #[arg(long)]
        w: Word,
    },
}

#[derive(Debug, Subcommand)]
enum RichardsonCmd {
    Seed {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        word: Word,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[command(flatten)]
        output: Output,
    },
    Morphism {
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        word: Word,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum OracleCmd {
    Minor {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        u: Word,
        #[arg(long)]
        v: Word,
        #[arg(long)]
        i: usize,
    },
    Exchange {
        #[arg(long)]
        word: Word,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Type A rank (default: largest letter of the word).
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long)]
        prng_seed: Option<u64>,
    },
    Nonvanishing {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        u: Word,
        #[arg(long)]
        v: Word,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Pit,
}

/// Runs one command line (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{}", e.render()) } else { write!(stderr, "{}", e.render()) };
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidMorphism(_)
        | Error::ExactDivisionFailed { .. }
        | Error::NotAComponent(_)
        | Error::Inconsistent(_)
        | Error::InconsistentMutation { .. }
        | Error::NotDivisible { .. }
        | Error::HypothesisViolated(_) => 1,
        Error::MutationFailed { source, .. } => exit_code(source),
        _ => 2,
    }
}

fn emit(stdout: &mut dyn Write, out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n"))?,
        None => writeln!(stdout, "{text}")?,
    }
    Ok(())
}

fn emit_json(stdout: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    emit(stdout, None, &serde_json::to_string_pretty(value)?)
}

fn emit_seed(stdout: &mut dyn Write, seed: &Seed, output: &Output) -> Result<()> {
    let text = match output.format {
        Format::Json => seed.to_json_string(),
        Format::Dot => seed.to_dot(),
    };
    emit(stdout, output.out.as_deref(), text.trim_end())
}

/// Preset name or path to a JSON Cartan datum.
pub fn load_cartan(spec: &str) -> Result<CartanDatum> {
    if Path::new(spec).is_file() {
        let j: CartanJson = serde_json::from_str(&std::fs::read_to_string(spec)?)?;
        CartanDatum::try_from(&j)
    } else {
        CartanDatum::preset(spec)
    }
}

fn load_seed(path: &Path) -> Result<Seed> {
    Seed::from_json_str(&std::fs::read_to_string(path)?)
}

fn load_morphism(path: &Path) -> Result<ClusterMorphism> {
    let j: MorphismJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    j.resolve(path.parent())
}

fn parse_matrix(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad matrix entry `{t}`"))))
                .collect()
        })
        .collect()
}

fn parse_vertices(s: &str) -> Result<BTreeSet<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad vertex `{t}`"))))
        .collect()
}

fn parse_permutation(s: &str) -> Result<BTreeMap<usize, usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t.split_once(':').ok_or_else(|| Error::Parse(format!("expected `i:j`, got `{t}`")))?;
            let p = |x: &str| x.trim().parse().map_err(|_| Error::Parse(format!("bad vertex `{x}`")));
            Ok((p(a)?, p(b)?))
        })
        .collect()
}

fn dispatch(cmd: Command, stdout: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Seed(c) => seed_cmd(c, stdout),
        Command::Morphism(c) => morphism_cmd(c, stdout),
        Command::Weyl(c) => weyl_cmd(c, stdout),
        Command::Richardson(c) => richardson_cmd(c, stdout),
        Command::Oracle(c) => oracle_cmd(c, stdout),
    }
}

fn seed_cmd(cmd: SeedCmd, stdout: &mut dyn Write) -> Result<i32> {
    match cmd {
        SeedCmd::Build { cartan, word, b, mutable, output } => {
            let seed = match (cartan, word, b) {
                (Some(c), Some(w), None) => richardson::build_nw_seed(&load_cartan(&c)?, &w)?,
                (None, None, Some(b)) => {
                    let full = parse_matrix(&b)?;
                    let n = full.len();
                    let mutable: BTreeSet<usize> = match mutable {
                        Some(m) => m.0.into_iter().collect(),
                        None => (1..=n).collect(),
                    };
                    let q = ExchangeQuiver::from_square((1..=n).collect(), &mutable, &full)?;
                    q.validate().map_err(Error::InvalidQuiver)?;
                    Seed::initial(q)
                }
                _ => return Err(Error::Parse("give either --cartan and --word, or --b".into())),
            };
            emit_seed(stdout, &seed, &output)?;
        }
        SeedCmd::Mutate { input, seq, output } => {
            let seed = load_seed(&input)?.mutate_sequence(&seq.0)?;
            emit_seed(stdout, &seed, &output)?;
        }
        SeedCmd::Explore { input, depth } => {
            let e = load_seed(&input)?.enumerate_clusters(depth)?;
            let vars: Vec<String> = e.variables.iter().map(ToString::to_string).collect();
            emit_json(stdout, &json!({ "seed_count": e.seed_count, "variable_count": vars.len(), "variables": vars }))?;
        }
    }
    Ok(0)
}

fn morphism_cmd(cmd: MorphismCmd, stdout: &mut dyn Write) -> Result<i32> {
    match cmd {
        MorphismCmd::Make { kind, data, seed, out } => {
            let anchor = SeedAmbient::from_seed(&load_seed(&seed)?);
            let kind = match kind {
                Kind::Freezing => Elementary::Freezing(parse_vertices(&data)?),
                Kind::Similarity => Elementary::Similarity(parse_permutation(&data)?),
                Kind::Deleting => Elementary::Deleting(parse_vertices(&data)?),
                Kind::Embedding => Elementary::Embedding(parse_vertices(&data)?),
            };
            let phi = ClusterMorphism::make_elementary(&kind, &anchor)?;
            emit(stdout, out.as_deref(), &serde_json::to_string_pretty(&phi.to_json())?)?;
            Ok(0)
        }
        MorphismCmd::Validate { input } => {
            let v = load_morphism(&input)?.violations();
            let report: Vec<String> = v.iter().map(ToString::to_string).collect();
            emit_json(stdout, &json!({ "ok": v.is_empty(), "violations": v, "messages": report }))?;
            Ok(if v.is_empty() { 0 } else { 1 })
        }
        MorphismCmd::Decompose { input } => {
            let d = load_morphism(&input)?.decompose()?;
            emit_json(stdout, &serde_json::to_value(d.to_json())?)?;
            Ok(0)
        }
        MorphismCmd::Kernel { input, poly } => {
            let phi = load_morphism(&input)?;
            let f = LaurentPolynomial::parse(phi.source().ambient(), &poly)?;
            emit_json(stdout, &json!({ "in_kernel": phi.kernel_contains(&f)? }))?;
            Ok(0)
        }
        MorphismCmd::Apply { input, poly } => {
            let phi = load_morphism(&input)?;
            let f = LaurentPolynomial::parse(phi.source().ambient(), &poly)?;
            emit(stdout, None, &phi.apply(&f)?.to_string())?;
            Ok(0)
        }
    }
}

fn weyl_cmd(cmd: WeylCmd, stdout: &mut dyn Write) -> Result<i32> {
    let value = match cmd {
        WeylCmd::Reduced { cartan, word } => json!({ "reduced": load_cartan(&cartan)?.is_reduced(&word)? }),
        WeylCmd::Betas { cartan, word } => {
            let betas = load_cartan(&cartan)?.beta_roots(&word)?;
            json!({
                "betas": betas.iter().map(|b| b.0.clone()).collect::<Vec<_>>(),
                "display": betas.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        }
        WeylCmd::Frozen { cartan, word } => json!({ "frozen": load_cartan(&cartan)?.frozen_set(&word)? }),
        WeylCmd::Additive { cartan, w, v } => json!({ "additive": load_cartan(&cartan)?.length_additive(&w, &v)? }),
        WeylCmd::Bruhat { cartan, v, w } => json!({ "leq": load_cartan(&cartan)?.bruhat_leq(&v, &w)? }),
    };
    emit_json(stdout, &value)?;
    Ok(0)
}

fn richardson_cmd(cmd: RichardsonCmd, stdout: &mut dyn Write) -> Result<i32> {
    match cmd {
        RichardsonCmd::Seed { cartan, word, p, output } => {
            let seed = richardson::build_richardson_seed(&load_cartan(&cartan)?, &word, p)?;
            emit_seed(stdout, &seed, &output)?;
        }
        RichardsonCmd::Morphism { cartan, word, p, out } => {
            let phi = richardson::richardson_morphism(&load_cartan(&cartan)?, &word, p)?;
            emit(stdout, out.as_deref(), &serde_json::to_string_pretty(&phi.to_json())?)?;
        }
    }
    Ok(0)
}

fn oracle_cmd(cmd: OracleCmd, stdout: &mut dyn Write) -> Result<i32> {
    match cmd {
        OracleCmd::Minor { rank, u, v, i } => {
            let m = minors::generalized_minor(rank, &u, &v, i)?;
            emit_json(stdout, &json!({ "rows": m.rows, "cols": m.cols, "value": m.value.to_string() }))?;
            Ok(0)
        }
        OracleCmd::Exchange { word, vertex, mode, rank, p, trials, prng_seed } => {
            let mode = match mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Pit => Mode::Pit,
            };
            let seed = match (mode, prng_seed) {
                (Mode::Pit, None) => return Err(Error::Parse("--prng-seed is required in pit mode".into())),
                (_, s) => s.unwrap_or(0),
            };
            let rank = rank.unwrap_or_else(|| word.0.iter().copied().max().unwrap_or(1));
            let report = minors::verify_exchange(rank, &word, p, vertex, mode, trials, seed)?;
            emit_json(stdout, &serde_json::to_value(&report)?)?;
            Ok(if report.result { 0 } else { 1 })
        }
        OracleCmd::Nonvanishing { rank, u, v, i } => {
            let r = minors::nonvanishing_report(rank, &u, &v, i)?;
            emit_json(stdout, &serde_json::to_value(&r)?)?;
            Ok(0)
        }
    }
}
