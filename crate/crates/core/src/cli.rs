//! `cubewalk` command line: walk, compile, hit, sweep, verify, families.
//!
//! Every option may also come from a flat `key=value` file given with
//! `--config`; flags win over the file. Keys are the long flag names with
//! `-` or `_` (`limit-wires` and `limit_wires` both work).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::circuit::{
    compile_coin, compile_shift, compile_walk, emit_qasm, parse_qasm, step_deviation,
    verify_equivalence, walk_deviation, CoinStrategy, GateCounts, GateProgram, McxLowering,
};
use crate::cubelike::{
    augmented_cube, check_wires, complete_graph, hypercube, parse_generating_set, random_cubelike,
    render_bits, BitString, CubelikeGraph, MAX_WIRES,
};
use crate::error::Error;
use crate::hitting::{family_sweep_with, find_hitting_time_with, Family, SweepOptions, Window};
use crate::walk::{format_sig, CoinModel, WalkState};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "cubewalk",
    version,
    about = "Coined quantum walks on cubelike graphs"
)]
pub struct Cli {
    /// Flat key=value file supplying defaults for any option.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Refuse graphs needing more than this many qubits (n + m).
    #[arg(long, global = true)]
    pub limit_wires: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evolve a walk and write the position distribution as CSV.
    Walk(WalkArgs),
    /// Compile a walk to OpenQASM and report gate counts.
    Compile(CompileArgs),
    /// Search a step window for the one-shot hitting time.
    Hit(HitArgs),
    /// Hitting times over a range of n for one family, with a linear fit.
    Sweep(SweepArgs),
    /// Check compiled circuits against the dense operator and the engine.
    Verify(VerifyArgs),
    /// List the built-in graph families.
    Families,
}

#[derive(Debug, Args, Default)]
pub struct GraphArgs {
    /// hypercube, augmented, complete or random.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(short = 'n', long = "dim")]
    pub n: Option<u32>,
    /// Extra random generators (random family).
    #[arg(long)]
    pub extra: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// File with one generator per line instead of a family.
    #[arg(long)]
    pub generators: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(short = 'T', long = "steps")]
    pub steps: Option<usize>,
    /// Start vertex, big-endian bits; defaults to all zeros.
    #[arg(long)]
    pub start: Option<String>,
    /// padded or full-register.
    #[arg(long)]
    pub coin: Option<String>,
    /// Order rows by decreasing probability instead of by vertex.
    #[arg(long)]
    pub sort: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Per-step distributions as `step,vertex,bits,probability`.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompileArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(short = 'T', long = "steps")]
    pub steps: Option<usize>,
    /// paper-diffusion, prepare-reflect or auto.
    #[arg(long)]
    pub strategy: Option<String>,
    /// opaque or ancilla-ladder.
    #[arg(long)]
    pub lowering: Option<String>,
    /// QASM output; stdout when absent.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Gate-count JSON.
    #[arg(long)]
    pub counts: Option<PathBuf>,
    /// Program in the one-gate-per-line dump format.
    #[arg(long)]
    pub dump: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HitArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[arg(long)]
    pub start: Option<String>,
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long)]
    pub window_lo: Option<usize>,
    #[arg(long)]
    pub window_hi: Option<usize>,
    #[arg(long)]
    pub coin: Option<String>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n_from: Option<u32>,
    #[arg(long)]
    pub n_to: Option<u32>,
    #[arg(long)]
    pub extra: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub coin: Option<String>,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Two-column `delta<TAB>T` plot data.
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Walk length for the engine cross-check.
    #[arg(short = 'T', long = "steps")]
    pub steps: Option<usize>,
    /// Only this strategy; all applicable ones otherwise.
    #[arg(long)]
    pub strategy: Option<String>,
    /// Program to check instead of compiling one (dump or QASM), read as a
    /// `-T` step walk from `|0…0>` (one step if `-T` is absent), as `compile` writes it.
    #[arg(long)]
    pub program: Option<PathBuf>,
    /// Read `--program` as a bare step and compare it with `S'(C' ⊗ I)`.
    #[arg(long)]
    pub step: bool,
    #[arg(long)]
    pub tolerance: Option<f64>,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooManyWires { .. } | Error::TooManyExtras { .. } => EXIT_RESOURCE,
            Error::DegreeNotPowerOfTwo { .. } => EXIT_UNSUPPORTED,
            _ => EXIT_CONFIG,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Flat `key=value` settings; `#` starts a comment.
#[derive(Debug, Default, Clone)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, Error> {
        let mut values = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::parse(idx + 1, format!("expected key=value, got {line:?}"))
            })?;
            values.insert(k.trim().replace('-', "_"), v.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(&key.replace('-', "_")).map(String::as_str)
    }

    fn value<T: FromStr>(&self, key: &str) -> CliResult<Option<T>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::config(format!("config key {key}: cannot parse {v:?}")))
            })
            .transpose()
    }

    /// Flag if given, otherwise the config entry.
    fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> CliResult<Option<T>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.value(key),
        }
    }
}

fn parse_with<T: FromStr<Err = Error>>(text: Option<String>, default: T) -> CliResult<T> {
    text.map(|s| s.parse())
        .transpose()
        .map(|v| v.unwrap_or(default))
        .map_err(CliError::from)
}

fn parse_coin(text: Option<String>) -> CliResult<CoinModel> {
    match text.as_deref() {
        None | Some("padded") => Ok(CoinModel::Padded),
        Some("full-register") => Ok(CoinModel::FullRegister),
        Some(other) => Err(CliError::config(format!(
            "unknown coin {other:?} (padded or full-register)"
        ))),
    }
}

fn parse_strategy(text: Option<String>, g: &CubelikeGraph) -> CliResult<CoinStrategy> {
    match text.as_deref() {
        None | Some("auto") => Ok(CoinStrategy::auto(g)),
        Some(s) => s
            .parse()
            .map_err(|_| CliError::config(format!("unknown strategy {s:?}"))),
    }
}

fn parse_vertex(text: Option<String>, g: &CubelikeGraph) -> CliResult<Option<BitString>> {
    let Some(text) = text else { return Ok(None) };
    let v: BitString = text.parse()?;
    g.check_vertex(v)?;
    Ok(Some(v))
}

struct Context {
    config: Config,
    limit_wires: usize,
}

impl Context {
    fn graph(&self, args: &GraphArgs) -> CliResult<CubelikeGraph> {
        let c = &self.config;
        let generators: Option<PathBuf> = c.pick(args.generators.clone(), "generators")?;
        let family: Option<String> = c.pick(args.family.clone(), "family")?;
        let g = match (generators, family) {
            (Some(_), Some(_)) => {
                return Err(CliError::config(
                    "give either --family or --generators, not both",
                ))
            }
            (None, None) => {
                return Err(CliError::config(
                    "no graph: give --family and -n, or --generators",
                ))
            }
            (Some(path), None) => {
                let text = read(&path)?;
                let (n, elements) = parse_generating_set(&text)?;
                CubelikeGraph::new(n, &elements, true)?
            }
            (None, Some(family)) => {
                let n: u32 = c
                    .pick(args.n, "n")?
                    .ok_or_else(|| CliError::config("--family needs -n"))?;
                match family.as_str() {
                    "hypercube" => hypercube(n)?,
                    "augmented" => augmented_cube(n)?,
                    "complete" => complete_graph(n)?,
                    "random" => {
                        let extra = c.pick(args.extra, "extra")?.unwrap_or(0);
                        let seed = c.pick(args.seed, "seed")?.unwrap_or(0);
                        random_cubelike(n, extra, seed)?
                    }
                    other => return Err(CliError::config(format!("unknown family {other:?}"))),
                }
            }
        };
        check_wires(g.wires(), self.limit_wires)?;
        Ok(g)
    }

    fn string(&self, flag: Option<String>, key: &str) -> CliResult<Option<String>> {
        self.config.pick(flag, key)
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::config(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) if p.as_os_str() == "-" => {
            print!("{content}");
            Ok(())
        }
        Some(p) => {
            fs::write(p, content).map_err(|e| CliError::config(format!("{}: {e}", p.display())))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("cubewalk: {}", e.message);
            e.code
        }
    }
}

pub fn execute(cli: Cli) -> CliResult<()> {
    let config = match &cli.config {
        Some(path) => Config::parse(&read(path)?)?,
        None => Config::default(),
    };
    let limit_wires = config
        .pick(cli.limit_wires, "limit_wires")?
        .unwrap_or(MAX_WIRES);
    let ctx = Context {
        config,
        limit_wires,
    };
    match cli.command {
        Command::Walk(a) => cmd_walk(&ctx, a),
        Command::Compile(a) => cmd_compile(&ctx, a),
        Command::Hit(a) => cmd_hit(&ctx, a),
        Command::Sweep(a) => cmd_sweep(&ctx, a),
        Command::Verify(a) => cmd_verify(&ctx, a),
        Command::Families => {
            print!("{}", families_text());
            Ok(())
        }
    }
}

fn cmd_walk(ctx: &Context, a: WalkArgs) -> CliResult<()> {
    let g = ctx.graph(&a.graph)?;
    let steps = ctx.config.pick(a.steps, "steps")?.unwrap_or(0);
    let model = parse_coin(ctx.string(a.coin, "coin")?)?;
    let start = parse_vertex(ctx.string(a.start, "start")?, &g)?
        .unwrap_or(BitString::zeros(g.dimension())?);
    let mut state = WalkState::initial_with(&g, start, model)?;

    let trace: Option<PathBuf> = ctx.config.pick(a.trace, "trace")?;
    let mut trace_text = trace
        .as_ref()
        .map(|_| String::from("step,vertex,bits,probability\n"));
    for t in 0..=steps {
        if t > 0 {
            state.step();
        }
        if let Some(text) = trace_text.as_mut() {
            let dist = state.position_distribution();
            for (v, &p) in dist.probabilities().iter().enumerate() {
                let _ = writeln!(
                    text,
                    "{t},{v},{},{}",
                    render_bits(v as u64, g.dimension()),
                    format_sig(p, 12)
                );
            }
        }
    }
    if let (Some(path), Some(text)) = (trace.as_deref(), trace_text) {
        write_output(Some(path), &text)?;
    }

    let dist = state.position_distribution();
    let csv = if a.sort {
        let mut rows: Vec<(usize, f64)> =
            dist.probabilities().iter().copied().enumerate().collect();
        rows.sort_by(|x, y| y.1.total_cmp(&x.1).then(x.0.cmp(&y.0)));
        let mut out = String::from("vertex,bits,probability\n");
        for (v, p) in rows {
            let _ = writeln!(
                out,
                "{v},{},{}",
                render_bits(v as u64, g.dimension()),
                format_sig(p, 12)
            );
        }
        out
    } else {
        dist.to_csv()
    };
    let out: Option<PathBuf> = ctx.config.pick(a.out, "out")?;
    write_output(out.as_deref(), &csv)
}

#[derive(Serialize)]
struct PartCounts {
    x: usize,
    mcx: usize,
    h: usize,
    phase: usize,
    rotations: usize,
}

impl From<GateCounts> for PartCounts {
    fn from(c: GateCounts) -> Self {
        PartCounts {
            x: c.x_count,
            mcx: c.mcx_count,
            h: c.h_count,
            phase: c.phase_count,
            rotations: c.rotation_count,
        }
    }
}

#[derive(Serialize)]
struct CountsReport {
    n: u32,
    delta: usize,
    m: u32,
    steps: usize,
    strategy: &'static str,
    lowering: &'static str,
    ancillas: usize,
    x: usize,
    mcx: usize,
    h: usize,
    phase: usize,
    rotations: usize,
    /// One shift program.
    shift: PartCounts,
    /// One coin program.
    coin: PartCounts,
}

fn cmd_compile(ctx: &Context, a: CompileArgs) -> CliResult<()> {
    let g = ctx.graph(&a.graph)?;
    let steps = ctx.config.pick(a.steps, "steps")?.unwrap_or(1);
    let strategy = parse_strategy(ctx.string(a.strategy, "strategy")?, &g)?;
    let lowering = parse_with(ctx.string(a.lowering, "lowering")?, McxLowering::Opaque)?;

    let coin = compile_coin(&g, strategy)?;
    let shift = compile_shift(&g);
    let walk = compile_walk(&g, steps, strategy)?;
    let qasm = emit_qasm(&walk, lowering);
    let emitted = match lowering {
        McxLowering::Opaque => walk.clone(),
        McxLowering::AncillaLadder => crate::circuit::lower_ancilla_ladder(&walk),
    };
    let total = emitted.counts();
    let report = CountsReport {
        n: g.dimension(),
        delta: g.degree(),
        m: g.coin_width(),
        steps,
        strategy: strategy.name(),
        lowering: lowering.name(),
        ancillas: emitted.ancillas(),
        x: total.x_count,
        mcx: total.mcx_count,
        h: total.h_count,
        phase: total.phase_count,
        rotations: total.rotation_count,
        shift: shift.counts().into(),
        coin: coin.counts().into(),
    };

    let out: Option<PathBuf> = ctx.config.pick(a.out, "out")?;
    write_output(out.as_deref(), &qasm)?;
    if let Some(path) = ctx.config.pick::<PathBuf>(a.counts, "counts")? {
        write_output(Some(&path), &to_json(&report))?;
    }
    if let Some(path) = ctx.config.pick::<PathBuf>(a.dump, "dump")? {
        write_output(Some(&path), &emitted.to_dump())?;
    }
    Ok(())
}

fn cmd_hit(ctx: &Context, a: HitArgs) -> CliResult<()> {
    let g = ctx.graph(&a.graph)?;
    let model = parse_coin(ctx.string(a.coin, "coin")?)?;
    let start = parse_vertex(ctx.string(a.start, "start")?, &g)?
        .unwrap_or(BitString::zeros(g.dimension())?);
    let target = parse_vertex(ctx.string(a.target, "target")?, &g)?;
    let default = Window::default_for(&g);
    let lo = ctx
        .config
        .pick(a.window_lo, "window_lo")?
        .unwrap_or(default.lo);
    let hi = ctx
        .config
        .pick(a.window_hi, "window_hi")?
        .unwrap_or(default.hi);
    let mut record = find_hitting_time_with(&g, model, start, target, Some(Window::new(lo, hi)?))?;
    if a.graph.generators.is_none() {
        if let Some(family) = ctx.string(a.graph.family.clone(), "family")? {
            record.family = family;
        }
    }
    let out: Option<PathBuf> = ctx.config.pick(a.out, "out")?;
    write_output(out.as_deref(), &to_json(&record))
}

fn cmd_sweep(ctx: &Context, a: SweepArgs) -> CliResult<()> {
    let c = &ctx.config;
    let family: String = c
        .pick(a.family, "family")?
        .ok_or_else(|| CliError::config("sweep needs --family"))?;
    let family = match family.parse::<Family>().map_err(CliError::from)? {
        Family::Random { .. } => Family::Random {
            extra: c.pick(a.extra, "extra")?.unwrap_or(0),
            seed: c.pick(a.seed, "seed")?.unwrap_or(0),
        },
        f => f,
    };
    let from = c
        .pick(a.n_from, "n_from")?
        .ok_or_else(|| CliError::config("sweep needs --n-from"))?;
    let to = c.pick(a.n_to, "n_to")?.unwrap_or(from);
    if from > to {
        return Err(CliError::config(format!("empty range {from}..={to}")));
    }
    let options = SweepOptions {
        model: parse_coin(ctx.string(a.coin, "coin")?)?,
        limit_wires: ctx.limit_wires,
        threads: c.pick(a.threads, "threads")?,
    };
    let report = family_sweep_with(family, from..=to, &options)?;
    let out: Option<PathBuf> = c.pick(a.out, "out")?;
    write_output(out.as_deref(), &report.to_csv())?;
    if let Some(path) = c.pick::<PathBuf>(a.plot, "plot")? {
        write_output(Some(&path), &report.plot_tsv())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ProgramCheck {
    mode: &'static str,
    n: u32,
    delta: usize,
    m: u32,
    steps: Option<usize>,
    ancillas: usize,
    deviation: f64,
    tolerance: f64,
    pass: bool,
}

fn load_program(path: &Path) -> CliResult<GateProgram> {
    let text = read(path)?;
    let program = if text.trim_start().starts_with("OPENQASM") {
        parse_qasm(&text)?
    } else {
        GateProgram::parse_dump(&text)?
    };
    Ok(program)
}

fn cmd_verify(ctx: &Context, a: VerifyArgs) -> CliResult<()> {
    let g = ctx.graph(&a.graph)?;
    let c = &ctx.config;
    let tolerance = c
        .pick(a.tolerance, "tolerance")?
        .unwrap_or(crate::circuit::EQUIVALENCE_TOLERANCE);
    let steps: Option<usize> = c.pick(a.steps, "steps")?;
    let out: Option<PathBuf> = c.pick(a.out, "out")?;

    let (json, pass) = if let Some(path) = c.pick::<PathBuf>(a.program, "program")? {
        let program = load_program(&path)?;
        let step_only = a.step || c.pick::<bool>(None, "step")?.unwrap_or(false);
        let steps = if step_only {
            None
        } else {
            Some(steps.unwrap_or(1))
        };
        let deviation = match steps {
            Some(t) => walk_deviation(&g, &program, t)?,
            None => step_deviation(&g, &program)?,
        };
        let pass = deviation < tolerance;
        let check = ProgramCheck {
            mode: if step_only { "step" } else { "walk" },
            n: g.dimension(),
            delta: g.degree(),
            m: g.coin_width(),
            steps,
            ancillas: program.ancillas(),
            deviation,
            tolerance,
            pass,
        };
        (to_json(&check), pass)
    } else {
        let strategies = match ctx.string(a.strategy, "strategy")? {
            Some(s) => vec![parse_strategy(Some(s), &g)?],
            None if g.is_power_of_two_degree() => {
                vec![CoinStrategy::PaperDiffusion, CoinStrategy::PrepareReflect]
            }
            None => vec![CoinStrategy::PrepareReflect],
        };
        let mut reports = Vec::new();
        for s in strategies {
            let mut r = verify_equivalence(&g, steps.unwrap_or(3), s)?;
            r.tolerance = tolerance;
            r.pass = r.step_max_deviation < tolerance && r.walk_max_deviation < tolerance;
            reports.push(r);
        }
        let pass = reports.iter().all(|r| r.pass);
        (to_json(&reports), pass)
    };
    write_output(out.as_deref(), &json)?;
    if pass {
        Ok(())
    } else {
        Err(CliError {
            code: EXIT_VERIFY,
            message: "verification failed".into(),
        })
    }
}

pub fn families_text() -> String {
    [
        "family     n       degree      notes",
        "hypercube  >= 1    n           unit vectors",
        "augmented  >= 2    2n - 1      unit vectors and suffix-ones strings",
        "complete   >= 1    2^n - 1     every nonzero string",
        "random     >= 1    n + extra   unit vectors and --extra sampled strings (--seed)",
    ]
    .iter()
    .map(|l| format!("{l}\n"))
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_keys_normalize() {
        let c =
            Config::parse("# comment\nlimit-wires = 12\nfamily=hypercube # trailing\n").unwrap();
        assert_eq!(c.get("limit_wires"), Some("12"));
        assert_eq!(c.get("family"), Some("hypercube"));
        assert!(Config::parse("novalue\n").is_err());
    }

    #[test]
    fn flags_override_config() {
        let c = Config::parse("n=5\n").unwrap();
        assert_eq!(c.pick(Some(3u32), "n").unwrap(), Some(3));
        assert_eq!(c.pick(None::<u32>, "n").unwrap(), Some(5));
        assert!(Config::parse("n=x\n")
            .unwrap()
            .pick(None::<u32>, "n")
            .is_err());
    }

    #[test]
    fn exit_codes() {
        let code = |e: Error| CliError::from(e).code;
        assert_eq!(
            code(Error::TooManyWires {
                wires: 40,
                limit: 30
            }),
            EXIT_RESOURCE
        );
        assert_eq!(
            code(Error::DegreeNotPowerOfTwo { delta: 3 }),
            EXIT_UNSUPPORTED
        );
        assert_eq!(code(Error::EmptyWindow), EXIT_CONFIG);
    }

    #[test]
    fn missing_graph_is_a_config_error() {
        assert_eq!(run(["cubewalk", "walk", "-T", "2"]), EXIT_CONFIG);
        assert_eq!(
            run(["cubewalk", "walk", "--family", "hypercube"]),
            EXIT_CONFIG
        );
    }
}
