//! Command-line interface.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input (and bad flags),
//! 3 algorithm or method that does not fit the input, 4 no prime available
//! for the EvenSet gadget.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::anyhow;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lmd_core::engine::{
    bound_report, cover_witness, delta_loc_bipartite_with, delta_loc_brute_with,
    delta_loc_general_with, exact_vertex_cover, greedy_vertex_cover, plotkin_witness,
    theorem2_witness, KernelChoice, LmdResult,
};
use lmd_core::generators;
use lmd_core::reductions::{
    reduce_evenset_to_blmd, reduce_lmd_to_evenset, solve_evenset, EvenSetInstance,
    ReductionOutput,
};
use lmd_core::{bipartite_double, BipartiteGraph, Graph, VertexSet};

use crate::formats::{read_input, write_bipartite, write_graph, Format, FormatError, Input};
use crate::parallel::Threads;
use crate::record::{input_digest, BoundsRecord, RunRecord};

#[derive(Debug, Parser)]
#[command(name = "lmd", version, about = "Local minimum degree of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct InputArgs {
    /// Input file
    #[arg(short, long)]
    pub input: PathBuf,
    /// Input format; detected from the content when omitted
    #[arg(short, long, value_parser = parse_format)]
    pub format: Option<Format>,
}

#[derive(Debug, clap::Args)]
pub struct OutputArgs {
    /// Output file; standard output when omitted
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Output format
    #[arg(long = "out-format", value_parser = parse_format)]
    pub out_format: Option<Format>,
}

fn parse_format(s: &str) -> Result<Format, FormatError> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgChoice {
    Brute,
    General,
    Bipartite,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverChoice {
    Exact,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessMethod {
    Plotkin,
    Cover,
    Thm2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelArg {
    Standard,
    Refined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Lmd2es,
    Es2blmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenType {
    Gnp,
    Star,
    Cycle,
    Path,
    Complete,
    Hypercube,
    Paley,
    Bipdouble,
    Randbip,
    Empty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute δ_loc exactly
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "auto")]
        alg: AlgChoice,
        /// Cover used for the bound values in the record
        #[arg(long, value_enum, default_value = "greedy")]
        cover: CoverChoice,
        /// Print one JSON record
        #[arg(long)]
        json: bool,
        /// Worker threads for the enumeration
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Report a wall time of 0 so output bytes depend only on the input
        #[arg(long)]
        no_timing: bool,
    },
    /// Upper bounds on δ_loc
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "exact")]
        cover: CoverChoice,
        #[arg(long)]
        json: bool,
    },
    /// Constructive small-odd-neighbourhood sets
    Witness {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        method: WitnessMethod,
        /// Cover fed to the cover method
        #[arg(long, value_enum, default_value = "exact")]
        cover: CoverChoice,
        /// Kernel size rule for the thm2 method
        #[arg(long, value_enum, default_value = "standard")]
        kernel: KernelArg,
        #[arg(long)]
        json: bool,
    },
    /// Build a reduction gadget
    Reduce {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
        /// Provenance sidecar; defaults to `<output>.provenance.json`
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Generate a graph
    Gen {
        #[arg(long = "type", value_enum)]
        kind: GenType,
        /// Order (gnp, cycle, path, complete, empty) or leaves (star)
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Paley modulus
        #[arg(short, long)]
        q: Option<u64>,
        /// Hypercube dimension
        #[arg(short, long)]
        d: Option<u32>,
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long)]
        n2: Option<usize>,
        /// Base graph for bipdouble
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply local complementations in order
    Lc {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertices
        #[arg(short, long, value_delimiter = ',')]
        v: Vec<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Solve EvenSet on a bipartite input
    Evenset {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub source: anyhow::Error,
}

impl CliError {
    fn input(e: impl Into<anyhow::Error>) -> Self {
        CliError {
            code: 2,
            source: e.into(),
        }
    }

    fn mismatch(msg: String) -> Self {
        CliError {
            code: 3,
            source: anyhow!(msg),
        }
    }
}

impl From<lmd_core::Error> for CliError {
    fn from(e: lmd_core::Error) -> Self {
        let code = match e {
            lmd_core::Error::NoSuchPrime { .. } => 4,
            _ => 2,
        };
        CliError {
            code,
            source: e.into(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::input(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e)
    }
}

type CliResult<T> = Result<T, CliError>;

struct Loaded {
    bytes: Vec<u8>,
    input: Input,
}

fn load(args: &InputArgs) -> CliResult<Loaded> {
    let bytes = fs::read(&args.input)
        .map_err(|e| CliError::input(anyhow!("{}: {e}", args.input.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(CliError::input)?;
    let input = read_input(&text, args.format)?;
    Ok(Loaded { bytes, input })
}

/// Bipartite view of an input plus the original index of every embedded
/// vertex (side 1 first).
fn as_bipartite(input: &Input) -> Option<(BipartiteGraph, Vec<usize>)> {
    match input {
        Input::Bipartite(b) => Some((b.clone(), (0..b.order()).collect())),
        Input::General(g) => g.bipartition(),
    }
}

fn map_back(set: &VertexSet, order: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|i| order[i]).collect();
    out.sort_unstable();
    out
}

fn cover_of(g: &Graph, choice: CoverChoice) -> (VertexSet, &'static str) {
    match choice {
        CoverChoice::Exact => (exact_vertex_cover(g), "exact"),
        CoverChoice::Greedy => (greedy_vertex_cover(g), "greedy"),
    }
}

fn bounds_of(g: &Graph, bipartite: bool, choice: CoverChoice) -> CliResult<BoundsRecord> {
    let (cover, method) = cover_of(g, choice);
    let report = bound_report(g.order(), cover.len())?;
    Ok(BoundsRecord::new(report, bipartite, method))
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn write_target(output: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::input(anyhow!("{}: {e}", path.display()))),
        None => emit(out, text),
    }
}

fn elapsed_ms(start: Instant, enabled: bool) -> u64 {
    if enabled {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Compute {
            input,
            alg,
            cover,
            json,
            threads,
            no_timing,
        } => compute(&input, alg, cover, json, threads, !no_timing, out),
        Command::Bounds { input, cover, json } => bounds(&input, cover, json, out),
        Command::Witness {
            input,
            method,
            cover,
            kernel,
            json,
        } => witness(&input, method, cover, kernel, json, out),
        Command::Reduce {
            input,
            direction,
            k,
            output,
            provenance,
        } => reduce(&input, direction, k, &output, provenance, out),
        Command::Gen {
            kind,
            n,
            p,
            seed,
            q,
            d,
            n1,
            n2,
            input,
            output,
        } => {
            let params = GenParams { n, p, seed, q, d, n1, n2, input };
            gen(kind, &params, &output, out)
        }
        Command::Lc { input, v, output } => lc(&input, &v, &output, out),
        Command::Evenset { input, k, json } => evenset(&input, k, json, out),
    }
}

fn compute(
    args: &InputArgs,
    alg: AlgChoice,
    cover: CoverChoice,
    json: bool,
    threads: usize,
    timing: bool,
    out: &mut dyn Write,
) -> CliResult<()> {
    let loaded = load(args)?;
    let graph = loaded.input.graph();
    let bip = as_bipartite(&loaded.input);
    let runner = Threads(threads);
    let start = Instant::now();
    let (result, witness): (LmdResult, Vec<usize>) = match (alg, &bip) {
        (AlgChoice::Brute, _) => {
            let r = delta_loc_brute_with(&graph, &runner)?;
            let w = r.witness.to_vec();
            (r, w)
        }
        (AlgChoice::General, _) | (AlgChoice::Auto, None) => {
            let r = delta_loc_general_with(&graph, &runner)?;
            let w = r.witness.to_vec();
            (r, w)
        }
        (AlgChoice::Bipartite | AlgChoice::Auto, Some((b, order))) => {
            let r = delta_loc_bipartite_with(b, &runner)?;
            let w = map_back(&r.witness, order);
            (r, w)
        }
        (AlgChoice::Bipartite, None) => {
            return Err(CliError::mismatch("bipartite algorithm on a non-bipartite graph".into()))
        }
    };
    let wall = elapsed_ms(start, timing);
    let record = RunRecord {
        command: "compute",
        input_digest: input_digest(&loaded.bytes),
        algorithm: result.algorithm.name().into(),
        delta_loc: Some(result.delta_loc),
        witness,
        witness_kind: Some(result.witness_kind.name()),
        bounds: Some(bounds_of(&graph, bip.is_some(), cover)?),
        sets_examined: result.sets_examined,
        wall_time_ms: wall,
        details: Some(json!({ "size_cap": result.size_cap })),
    };
    if json {
        emit(out, &(record.to_json() + "\n"))
    } else {
        emit(
            out,
            &format!(
                "delta_loc = {}\nwitness = {:?} ({})\nalgorithm = {}, sets examined = {}\n",
                result.delta_loc,
                record.witness,
                result.witness_kind.name(),
                result.algorithm.name(),
                result.sets_examined
            ),
        )
    }
}

fn bounds(args: &InputArgs, cover: CoverChoice, json: bool, out: &mut dyn Write) -> CliResult<()> {
    let loaded = load(args)?;
    let graph = loaded.input.graph();
    let bipartite = as_bipartite(&loaded.input).is_some();
    let b = bounds_of(&graph, bipartite, cover)?;
    if json {
        let record = RunRecord {
            command: "bounds",
            input_digest: input_digest(&loaded.bytes),
            algorithm: "bounds".into(),
            delta_loc: None,
            witness: Vec::new(),
            witness_kind: None,
            bounds: Some(b),
            sets_examined: 0,
            wall_time_ms: 0,
            details: None,
        };
        return emit(out, &(record.to_json() + "\n"));
    }
    let lemma2 = b
        .bound_lemma2
        .map_or("none (no edges)".to_string(), |v| format!("{v} (non-strict)"));
    emit(
        out,
        &format!(
            "n = {}\ncover ({}) = {}\nbound_thm1 = {} (strict{})\nbound_thm2 = {} (strict)\nbound_lemma2 = {}\n",
            b.n,
            b.cover_method,
            b.cover_size,
            b.bound_thm1,
            if b.bipartite { "" } else { "; graph is not bipartite" },
            b.bound_thm2,
            lemma2
        ),
    )
}

fn witness(
    args: &InputArgs,
    method: WitnessMethod,
    cover: CoverChoice,
    kernel: KernelArg,
    json: bool,
    out: &mut dyn Write,
) -> CliResult<()> {
    let loaded = load(args)?;
    let graph = loaded.input.graph();
    let start = Instant::now();
    let (set, size, details) = match method {
        WitnessMethod::Plotkin => {
            let Some((b, order)) = as_bipartite(&loaded.input) else {
                return Err(CliError::mismatch("plotkin witness needs a bipartite graph".into()));
            };
            let w = plotkin_witness(&b)?;
            let set = map_back(&w.set, &order);
            let size = w.set.len() + w.odd_size;
            let method = format!("{:?}", w.method).to_lowercase();
            (set, size, json!({ "odd_size": w.odd_size, "bound": w.bound, "search": method }))
        }
        WitnessMethod::Cover => {
            let (c, cover_method) = cover_of(&graph, cover);
            let w = cover_witness(&graph, &c)?;
            let details = json!({
                "cover_method": cover_method,
                "cover_size": c.len(),
                "k": w.k,
                "bound": w.bound,
                "fallback_used": w.fallback_used,
            });
            (w.set.to_vec(), w.set_size, details)
        }
        WitnessMethod::Thm2 => {
            let choice = match kernel {
                KernelArg::Standard => KernelChoice::Standard,
                KernelArg::Refined => KernelChoice::Refined,
            };
            let w = theorem2_witness(&graph, choice)?;
            let details = json!({
                "k": w.k,
                "s_size": w.s_size,
                "kernel_dim": w.kernel_dim,
                "generators": w.generators,
                "bound": w.bound,
                "fallback_used": w.fallback_used,
            });
            (w.set.to_vec(), w.set_size, details)
        }
    };
    let name = match method {
        WitnessMethod::Plotkin => "plotkin",
        WitnessMethod::Cover => "cover",
        WitnessMethod::Thm2 => "thm2",
    };
    if json {
        let mut details = details;
        details["set_size"] = json!(size);
        let record = RunRecord {
            command: "witness",
            input_digest: input_digest(&loaded.bytes),
            algorithm: name.into(),
            delta_loc: None,
            witness: set,
            witness_kind: Some("odd-dominating-set"),
            bounds: None,
            sets_examined: 0,
            wall_time_ms: elapsed_ms(start, true),
            details: Some(details),
        };
        return emit(out, &(record.to_json() + "\n"));
    }
    emit(out, &format!("set = {set:?}\n|D ∪ Odd(D)| = {size}\n{name}: {details}\n"))
}

fn provenance_json(r: &ReductionOutput) -> String {
    let map: serde_json::Map<String, serde_json::Value> = r
        .provenance
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut v = json!({ "role": p.role.name(), "source": p.source });
            if let Some(c) = p.copy {
                v["copy"] = json!(c);
            }
            if let Some(res) = p.residue {
                v["residue"] = json!(res);
            }
            (i.to_string(), v)
        })
        .collect();
    let doc = json!({
        "parameter": r.parameter,
        "modulus": r.modulus,
        "n1": r.graph.n1(),
        "n2": r.graph.n2(),
        "vertices": map,
    });
    serde_json::to_string_pretty(&doc).expect("provenance serializes") + "\n"
}

fn reduce(
    args: &InputArgs,
    direction: Direction,
    k: usize,
    output: &OutputArgs,
    provenance: Option<PathBuf>,
    out: &mut dyn Write,
) -> CliResult<()> {
    let loaded = load(args)?;
    let r = match direction {
        Direction::Lmd2es => reduce_lmd_to_evenset(&loaded.input.graph(), k)?,
        Direction::Es2blmd => {
            let Some((b, _)) = as_bipartite(&loaded.input) else {
                return Err(CliError::mismatch("EvenSet input must be bipartite".into()));
            };
            reduce_evenset_to_blmd(&EvenSetInstance::new(b, k)?)?
        }
    };
    let format = output.out_format.unwrap_or(Format::BipEdgeList);
    write_target(&output.output, &write_bipartite(&r.graph, format), out)?;
    let sidecar = provenance.or_else(|| output.output.as_ref().map(|p| sidecar_path(p)));
    match sidecar {
        Some(path) => fs::write(&path, provenance_json(&r))
            .map_err(|e| CliError::input(anyhow!("{}: {e}", path.display())))?,
        None => emit(out, &provenance_json(&r))?,
    }
    Ok(())
}

fn sidecar_path(p: &Path) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".provenance.json");
    PathBuf::from(s)
}

struct GenParams {
    n: Option<usize>,
    p: Option<f64>,
    seed: u64,
    q: Option<u64>,
    d: Option<u32>,
    n1: Option<usize>,
    n2: Option<usize>,
    input: Option<PathBuf>,
}

fn need<T>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::input(anyhow!("missing --{flag}")))
}

fn gen(kind: GenType, s: &GenParams, output: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    let bipartite = match kind {
        GenType::Randbip => Some(generators::random_bipartite(
            need(s.n1, "n1")?,
            need(s.n2, "n2")?,
            need(s.p, "p")?,
            s.seed,
        )?),
        GenType::Bipdouble => {
            let path = need(s.input.clone(), "input")?;
            let base = load(&InputArgs {
                input: path,
                format: None,
            })?;
            Some(bipartite_double(&base.input.graph()))
        }
        _ => None,
    };
    let text = match bipartite {
        Some(b) => write_bipartite(&b, output.out_format.unwrap_or(Format::BipEdgeList)),
        None => {
            let g = match kind {
                GenType::Gnp => generators::gnp(need(s.n, "n")?, need(s.p, "p")?, s.seed)?,
                GenType::Star => generators::star(need(s.n, "n")?),
                GenType::Cycle => generators::cycle(need(s.n, "n")?),
                GenType::Path => generators::path(need(s.n, "n")?),
                GenType::Complete => generators::complete(need(s.n, "n")?),
                GenType::Empty => Graph::empty(need(s.n, "n")?),
                GenType::Hypercube => generators::hypercube(need(s.d, "d")?),
                GenType::Paley => generators::paley(need(s.q, "q")?)?,
                GenType::Bipdouble | GenType::Randbip => unreachable!(),
            };
            write_graph(&g, output.out_format.unwrap_or(Format::EdgeList))?
        }
    };
    write_target(&output.output, &text, out)
}

fn lc(args: &InputArgs, seq: &[usize], output: &OutputArgs, out: &mut dyn Write) -> CliResult<()> {
    let loaded = load(args)?;
    let g = loaded.input.graph().lc_sequence(seq)?;
    let format = output.out_format.unwrap_or(match args.format {
        Some(Format::BipEdgeList) | None => Format::EdgeList,
        Some(f) => f,
    });
    write_target(&output.output, &write_graph(&g, format)?, out)
}

fn evenset(args: &InputArgs, k: usize, json: bool, out: &mut dyn Write) -> CliResult<()> {
    let loaded = load(args)?;
    let Some((b, _)) = as_bipartite(&loaded.input) else {
        return Err(CliError::mismatch("EvenSet input must be bipartite".into()));
    };
    let found = solve_evenset(&EvenSetInstance::new(b, k)?);
    if json {
        let v = json!({
            "command": "evenset",
            "input_digest": input_digest(&loaded.bytes),
            "k": k,
            "found": found.is_some(),
            "set": found.as_ref().map(VertexSet::to_vec),
        });
        return emit(out, &(v.to_string() + "\n"));
    }
    match found {
        Some(d) => emit(out, &format!("even set = {:?}\n", d.to_vec())),
        None => emit(out, &format!("no even set of size <= {k}\n")),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
/// Errors go to standard error.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {:#}", e.source);
            e.code
        }
    }
}
