//! The `benzenoid` command line.

use crate::altcycles::{alternating_hexagons, DEFAULT_CYCLE_CAP};
use crate::forcing::InvariantReport;
use crate::hexcore::{
    enumerate_all_systems_with_budget, linear_chain, parse_system, r_family, system_to_json, truncated_parallelogram,
    HexSystem, Named, DEFAULT_CENSUS_BUDGET,
};
use crate::matchings::{enumerate_matchings, Matching};
use crate::theorems::{verify_corpus, Selection, Summary, VerifyConfig, DEFAULT_STRUCTURE_CAP};
use crate::Exec;
use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SKIPPED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "benzenoid", version, about = "Perfect-matching invariants of hexagonal systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a system file from a generator.
    Gen(GenArgs),
    /// Per-matching and per-system invariants of one system.
    Invariants(InvariantsArgs),
    /// Check theorems on one system or on a census.
    Verify(VerifyArgs),
    /// Plane embedding in Graphviz DOT, optionally with a matching.
    #[command(alias = "dot")]
    ExportDot(DotArgs),
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: Family,
    /// Output file (or directory for `census`); stdout when omitted.
    #[arg(short, long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Truncated parallelogram, rows as `6,6,5,4`.
    Tp {
        #[arg(value_delimiter = ',', required = true)]
        rows: Vec<usize>,
    },
    /// Linear chain of `n` hexagons.
    Linear { n: usize },
    /// benzene, naphthalene, anthracene, triphenylene or coronene.
    Named { name: String },
    /// Member `n` of the counterexample family with 2n+4 hexagons.
    Rn { n: usize },
    /// One file per symmetry class with at most `n` hexagons.
    Census {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CENSUS_BUDGET)]
        budget: usize,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct RunArgs {
    /// Abort a matching once it has more alternating cycles than this.
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub cycle_cap: u64,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

impl RunArgs {
    fn exec(&self) -> Exec {
        if self.jobs == Some(1) {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Args, Debug)]
pub struct InvariantsArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// System file; use `--census` instead to sweep all small systems.
    #[arg(required_unless_present = "census", conflicts_with = "census")]
    pub input: Option<PathBuf>,
    /// Sweep every system with at most this many hexagons.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub census: Option<u64>,
    /// Largest census accepted.
    #[arg(long, default_value_t = DEFAULT_CENSUS_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, value_enum, default_value_t = Selection::All)]
    pub theorem: Selection,
    /// Maximum families examined per matching by the structure check.
    #[arg(long, default_value_t = DEFAULT_STRUCTURE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub structure_cap: u64,
    /// `json` streams verdict lines; `table` prints only the summary.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug)]
pub struct DotArgs {
    pub input: PathBuf,
    /// Index into the sorted list of perfect matchings.
    #[arg(long)]
    pub matching: Option<usize>,
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args, out),
        Command::Invariants(args) => cmd_invariants(&args, out),
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::ExportDot(args) => cmd_export_dot(&args, out),
    }
}

/// Worker pool sized by `--jobs`; `None` uses rayon's global pool.
struct Pool {
    #[cfg(feature = "parallel")]
    inner: Option<rayon::ThreadPool>,
}

impl Pool {
    fn new(jobs: Option<u64>) -> anyhow::Result<Self> {
        #[cfg(feature = "parallel")]
        {
            let inner = match jobs {
                Some(j) if j > 1 => Some(
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(j as usize)
                        .build()
                        .context("building the worker pool")?,
                ),
                _ => None,
            };
            Ok(Pool { inner })
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = jobs;
            Ok(Pool {})
        }
    }

    fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.inner {
            return pool.install(f);
        }
        f()
    }
}

pub fn read_system(path: &Path) -> anyhow::Result<HexSystem> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_system(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let single = match args.family {
        Family::Tp { rows } => truncated_parallelogram(&rows)?,
        Family::Linear { n } => linear_chain(n)?,
        Family::Named { name } => name.parse::<Named>()?.system(),
        Family::Rn { n } => r_family(n)?,
        Family::Census { n, budget } => {
            let systems: Vec<HexSystem> = enumerate_all_systems_with_budget(n, budget)?.collect();
            match &args.out {
                Some(dir) => {
                    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                    for (i, h) in systems.iter().enumerate() {
                        let path = dir.join(format!("h{}_{:04}.json", h.hexagon_count(), i));
                        std::fs::write(&path, system_to_json(h) + "\n")
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                }
                None => {
                    for h in &systems {
                        writeln!(out, "{}", system_to_json(h))?;
                    }
                }
            }
            return Ok(EXIT_PASS);
        }
    };
    let text = system_to_json(&single) + "\n";
    match &args.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_PASS)
}

fn cmd_invariants(args: &InvariantsArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let system = read_system(&args.input)?;
    if args.format == Format::Dot {
        out.write_all(to_dot(&system, None).as_bytes())?;
        return Ok(EXIT_PASS);
    }
    let pool = Pool::new(args.run.jobs)?;
    let report = pool.install(|| InvariantReport::compute(&system, args.run.cycle_cap as usize, args.run.exec()))?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        _ => out.write_all(report.to_table().as_bytes())?,
    }
    Ok(EXIT_PASS)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    if args.format == Format::Dot {
        bail!("verify writes json or table, not dot");
    }
    let systems: Vec<HexSystem> = match (&args.input, args.census) {
        (Some(path), _) => vec![read_system(path)?],
        (None, Some(n)) => enumerate_all_systems_with_budget(n as usize, args.budget as usize)?.collect(),
        (None, None) => bail!("give a system file or --census"),
    };
    let config = VerifyConfig {
        cycle_cap: args.run.cycle_cap as usize,
        structure_cap: args.structure_cap as usize,
        exec: args.run.exec(),
    };
    let theorems = args.theorem.theorems();
    let pool = Pool::new(args.run.jobs)?;
    let mut summary = Summary::default();
    // Verify in chunks so verdicts stream without holding the whole census.
    for chunk in systems.chunks(64) {
        for v in pool.install(|| verify_corpus(chunk, &theorems, &config)) {
            summary.add(&v);
            if args.format == Format::Json {
                writeln!(out, "{}", v.to_json_line())?;
            }
        }
    }
    if args.format == Format::Table {
        out.write_all(summary.to_table().as_bytes())?;
    } else {
        err.write_all(summary.to_table().as_bytes())?;
    }
    Ok(summary.exit_code())
}

fn cmd_export_dot(args: &DotArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let system = read_system(&args.input)?;
    let matching = match args.matching {
        Some(i) => {
            let all = enumerate_matchings(&system);
            let k = all.len();
            Some(
                all.into_iter()
                    .nth(i)
                    .with_context(|| format!("matching index {i} out of range (k = {k})"))?,
            )
        }
        None => None,
    };
    out.write_all(to_dot(&system, matching.as_ref()).as_bytes())?;
    Ok(EXIT_PASS)
}

/// DOT with pinned vertex positions. Matched edges are bold; each
/// alternating hexagon gets a labelled node `h<index>` at its center.
pub fn to_dot(system: &HexSystem, matching: Option<&Matching>) -> String {
    let mut s = String::from("graph benzenoid {\n  node [shape=circle, width=0.12, label=\"\"];\n");
    for (v, p) in system.points().iter().enumerate() {
        let (x, y) = p.to_plane();
        let fill = if system.is_black(v) { "black" } else { "white" };
        writeln!(s, "  v{v} [pos=\"{x:.4},{y:.4}!\", style=filled, fillcolor={fill}];").unwrap();
    }
    for (e, edge) in system.edges().iter().enumerate() {
        let bold = matching.is_some_and(|m| m.contains(e));
        let style = if bold { " [style=bold, penwidth=3]" } else { "" };
        writeln!(s, "  v{} -- v{}{style};", edge.u, edge.v).unwrap();
    }
    if let Some(m) = matching {
        for h in alternating_hexagons(system, m) {
            let (x, y) = system.hexagon(h).cell.center().to_plane();
            writeln!(s, "  h{h} [shape=plaintext, label=\"{h}\", pos=\"{x:.4},{y:.4}!\"];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
